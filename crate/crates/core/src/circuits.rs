//! Circuits (elementary vectors) of `{x : A1 x = b1, A2 x >= b2}`: the
//! nonzero `g` in `ker(A1)` whose image `A2 g` has inclusion-minimal support,
//! scaled to coprime integers.
//!
//! Enumeration stacks `A1` with every `(dim - rank(A1) - 1)`-subset of the
//! inequality rows and keeps the subsystems whose kernel is a line. A kernel
//! line of a rank `dim - 1` subsystem is always support-minimal, and every
//! circuit is cut out by such a subsystem taken from its own zero rows.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{kernel_line, rank, rank_naive, PrimitiveVector};
use crate::model::{FacetSet, Polyhedron};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit {
    pub direction: PrimitiveVector,
    /// Facets where `A2 g != 0`.
    pub image_support: FacetSet,
    /// Facets where `A2 g == 0`.
    pub zero_rows: FacetSet,
}

/// Canonical circuits in lexicographic order of their directions.
///
/// The signed view interleaves each circuit with its negation: signed index
/// `2i` is `+g_i` and `2i + 1` is `-g_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitSet {
    circuits: Vec<Circuit>,
}

impl CircuitSet {
    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Circuit> {
        self.circuits.iter()
    }

    pub fn get(&self, i: usize) -> Option<&Circuit> {
        self.circuits.get(i)
    }

    pub fn signed_len(&self) -> usize {
        2 * self.circuits.len()
    }

    /// The signed direction with the given signed index.
    pub fn signed(&self, index: usize) -> Vec<BigInt> {
        let c = &self.circuits[index / 2];
        if index.is_multiple_of(2) {
            c.direction.components().to_vec()
        } else {
            c.direction.negated()
        }
    }

    /// All signed directions, `+g_0, -g_0, +g_1, ...`.
    pub fn signed_directions(&self) -> Vec<Vec<BigInt>> {
        (0..self.signed_len()).map(|i| self.signed(i)).collect()
    }

    /// Index of the canonical circuit parallel to `direction`.
    pub fn position(&self, direction: &PrimitiveVector) -> Option<usize> {
        self.circuits
            .binary_search_by(|c| c.direction.cmp(direction))
            .ok()
    }

    /// Signed index of an integer direction, if it is exactly a signed
    /// circuit (not merely parallel to one).
    pub fn signed_position(&self, direction: &[BigInt]) -> Option<usize> {
        let first = direction.iter().find(|c| !c.is_zero())?;
        let negative = first < &BigInt::zero();
        let canonical: Vec<BigInt> = if negative {
            direction.iter().map(|c| -c).collect()
        } else {
            direction.to_vec()
        };
        let i = self
            .circuits
            .binary_search_by(|c| c.direction.components().cmp(&canonical[..]))
            .ok()?;
        Some(2 * i + usize::from(negative))
    }

    pub fn contains(&self, direction: &PrimitiveVector) -> bool {
        self.position(direction).is_some()
    }
}

fn image_of<S: Scalar>(p: &Polyhedron<S>, g: &[S]) -> Vec<S> {
    p.ineq_matrix()
        .mul_vec(g)
        .expect("direction has polyhedron dimension")
}

fn make_circuit<S: Scalar>(p: &Polyhedron<S>, direction: PrimitiveVector) -> Option<Circuit> {
    let g: Vec<S> = direction.to_scalars().ok()?;
    let image = image_of(p, &g);
    let image_support =
        FacetSet::from_zero_based((0..image.len()).filter(|&i| !image[i].is_zero()));
    if image_support.is_empty() {
        // lineality direction: not a circuit of a pointed polyhedron
        return None;
    }
    let zero_rows = FacetSet::from_zero_based((0..image.len()).filter(|&i| image[i].is_zero()));
    Some(Circuit {
        direction,
        image_support,
        zero_rows,
    })
}

/// All circuits of `p`.
pub fn enumerate_circuits<S: Scalar>(p: &Polyhedron<S>) -> CircuitSet {
    let dim = p.dim();
    let eq_rank = rank(p.eq_matrix());
    if eq_rank >= dim {
        return CircuitSet {
            circuits: Vec::new(),
        };
    }
    let k = dim - eq_rank - 1;
    let subsets: Vec<Vec<usize>> = (0..p.facet_count()).combinations(k).collect();
    let found: BTreeSet<PrimitiveVector> = subsets
        .par_iter()
        .filter_map(|rows| {
            let m = p
                .eq_matrix()
                .stack(&p.ineq_matrix().select_rows(rows))
                .expect("same width");
            kernel_line(&m)
        })
        .collect();
    let circuits = found
        .into_iter()
        .filter_map(|d| make_circuit(p, d))
        .collect();
    CircuitSet { circuits }
}

/// Decides circuit membership straight from the definition, without
/// enumerating: `g` is a circuit iff it lies in `ker(A1)`, `A2 g != 0`, and
/// no nonzero kernel vector vanishes on every zero row of `A2 g` plus one
/// more row of its support.
pub fn is_circuit<S: Scalar>(p: &Polyhedron<S>, g: &[S]) -> Result<bool> {
    if g.len() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: g.len(),
        });
    }
    if g.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    if p.eq_matrix().mul_vec(g)?.iter().any(|v| !v.is_zero()) {
        return Ok(false);
    }
    let image = image_of(p, g);
    let (zero, support): (Vec<usize>, Vec<usize>) =
        (0..image.len()).partition(|&i| image[i].is_zero());
    if support.is_empty() {
        return Ok(false);
    }
    let base = p
        .eq_matrix()
        .stack(&p.ineq_matrix().select_rows(&zero))
        .expect("same width");
    for j in support {
        let m = base
            .stack(&p.ineq_matrix().select_rows(&[j]))
            .expect("same width");
        if rank_naive(&m) < p.dim() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of signed circuit directions, the branching factor of a walk
/// search.
pub fn circuit_count_bound<S: Scalar>(p: &Polyhedron<S>) -> usize {
    enumerate_circuits(p).signed_len()
}
