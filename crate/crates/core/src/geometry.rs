//! Vertices, the vertex-edge graph, and combinatorial comparison.

use std::collections::{BTreeSet, VecDeque};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::circuits::CircuitSet;
use crate::error::{Error, Result};
use crate::linalg::{rank, solve_square, Matrix};
use crate::model::{FacetSet, Polyhedron};
use crate::scalar::{format_compact, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex<S> {
    pub coords: Vec<S>,
    pub tight: FacetSet,
    pub label: String,
}

/// `V5678` for a simple vertex on facets 5, 6, 7, 8; `V1-2-10-11` once a
/// facet index has two digits; `V(0,1/2,1)` for degenerate vertices.
pub fn vertex_label<S: Scalar>(coords: &[S], tight: &FacetSet, simple: bool) -> String {
    if simple {
        if tight.iter().all(|f| f < 10) {
            format!("V{}", tight.iter().map(|f| f.to_string()).join(""))
        } else {
            format!("V{}", tight.iter().map(|f| f.to_string()).join("-"))
        }
    } else {
        format!(
            "V({})",
            coords
                .iter()
                .map(|c| format_compact(&c.to_ratio()))
                .join(",")
        )
    }
}

/// Picks a maximal linearly independent subset of the equality rows.
fn independent_equalities<S: Scalar>(p: &Polyhedron<S>) -> Vec<usize> {
    let mut chosen = Vec::new();
    for r in 0..p.eq_matrix().rows() {
        chosen.push(r);
        if rank(&p.eq_matrix().select_rows(&chosen)) < chosen.len() {
            chosen.pop();
        }
    }
    chosen
}

/// All vertices, in lexicographic order of coordinates.
///
/// Every basis of `dim - rank(A1)` inequality rows (together with an
/// independent set of equality rows) is solved; feasible solutions are the
/// vertices.
pub fn enumerate_vertices<S: Scalar>(p: &Polyhedron<S>) -> Vec<Vertex<S>> {
    let dim = p.dim();
    let eq_rows = independent_equalities(p);
    let k = dim - eq_rows.len();
    let eq_part = p.eq_matrix().select_rows(&eq_rows);
    let eq_rhs: Vec<S> = eq_rows.iter().map(|&r| p.eq_rhs()[r].clone()).collect();
    let bases: Vec<Vec<usize>> = (0..p.facet_count()).combinations(k).collect();
    let points: BTreeSet<Vec<S>> = bases
        .par_iter()
        .filter_map(|basis| {
            let m = eq_part
                .stack(&p.ineq_matrix().select_rows(basis))
                .expect("same width");
            let mut rhs = eq_rhs.clone();
            rhs.extend(basis.iter().map(|&r| p.ineq_rhs()[r].clone()));
            let x = solve_square(&m, &rhs).expect("square system")?;
            p.contains(&x).expect("dimension matches").then_some(x)
        })
        .collect();
    points
        .into_iter()
        .map(|coords| {
            let tight = p.tight_rows(&coords).expect("feasible");
            let label = vertex_label(&coords, &tight, tight.len() == k);
            Vertex {
                coords,
                tight,
                label,
            }
        })
        .collect()
}

/// Index of the vertex with the given label.
pub fn find_vertex<S>(vertices: &[Vertex<S>], label: &str) -> Result<usize> {
    vertices
        .iter()
        .position(|v| v.label == label)
        .ok_or_else(|| Error::UnknownVertex(label.to_string()))
}

/// Rank of `A1` stacked with the given facets.
fn face_rank<S: Scalar>(p: &Polyhedron<S>, facets: &FacetSet) -> usize {
    let m = p
        .eq_matrix()
        .stack(&p.ineq_matrix().select_rows(&facets.zero_based()))
        .expect("same width");
    rank(&m)
}

/// The vertex-edge graph. Unbounded edges (rays) are not represented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton<S> {
    pub vertices: Vec<Vertex<S>>,
    /// Index pairs `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl<S: Scalar> Skeleton<S> {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn find(&self, label: &str) -> Result<usize> {
        find_vertex(&self.vertices, label)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Option<usize>>> {
        if source >= self.vertices.len() {
            return Err(Error::UnknownVertex(format!("#{source}")));
        }
        let mut dist = vec![None; self.vertices.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices have a distance");
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Shortest edge path length; `None` if disconnected.
    pub fn graph_distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        if v >= self.vertices.len() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        Ok(self.distances_from(u)?[v])
    }

    /// All-pairs distances, row `u` holding the distances from `u`.
    pub fn all_distances(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.vertices.len())
            .into_par_iter()
            .map(|u| self.distances_from(u).expect("valid vertex"))
            .collect()
    }

    /// Largest graph distance; `None` if the graph is empty or disconnected.
    pub fn graph_diameter(&self) -> Option<usize> {
        if self.vertices.is_empty() {
            return None;
        }
        let mut best = 0;
        for row in self.all_distances() {
            for d in row {
                best = best.max(d?);
            }
        }
        Some(best)
    }
}

/// Vertices joined by an edge share a tight subsystem of rank `dim - 1`.
pub fn build_skeleton<S: Scalar>(p: &Polyhedron<S>) -> Skeleton<S> {
    skeleton_from_vertices(p, enumerate_vertices(p))
}

pub fn skeleton_from_vertices<S: Scalar>(
    p: &Polyhedron<S>,
    vertices: Vec<Vertex<S>>,
) -> Skeleton<S> {
    let n = vertices.len();
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let edges: Vec<(usize, usize)> = pairs
        .into_par_iter()
        .filter(|&(i, j)| {
            let common = vertices[i].tight.intersection(&vertices[j].tight);
            common.len() + 1 >= p.dim().saturating_sub(p.eq_matrix().rows())
                && face_rank(p, &common) + 1 == p.dim()
        })
        .collect();
    let mut adjacency = vec![Vec::new(); n];
    for &(i, j) in &edges {
        adjacency[i].push(j);
        adjacency[j].push(i);
    }
    Skeleton {
        vertices,
        edges,
        adjacency,
    }
}

/// True iff the polyhedron contains no line and no signed circuit is a
/// recession direction (`A2 g >= 0`).
pub fn is_bounded<S: Scalar>(p: &Polyhedron<S>, circuits: &CircuitSet) -> bool {
    let pointed = rank(&p.eq_matrix().stack(p.ineq_matrix()).expect("same width")) == p.dim();
    pointed && recession_circuit(p, circuits).is_none()
}

/// A signed circuit `g` with `A2 g >= 0`, if any.
pub fn recession_circuit<S: Scalar>(p: &Polyhedron<S>, circuits: &CircuitSet) -> Option<usize> {
    (0..circuits.signed_len()).find(|&i| {
        let g: Vec<S> = circuits
            .signed(i)
            .iter()
            .map(|c| S::from_integer(c).expect("circuit components fit"))
            .collect();
        p.ineq_matrix()
            .mul_vec(&g)
            .expect("dimension")
            .iter()
            .all(|v| !v.is_negative())
    })
}

/// Vertex tight sets and edges as pairs of tight sets, under the fixed
/// facet numbering.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CombinatorialSignature {
    pub vertices: Vec<Vec<usize>>,
    pub edges: Vec<(Vec<usize>, Vec<usize>)>,
}

pub fn signature_of<S: Scalar>(skeleton: &Skeleton<S>) -> CombinatorialSignature {
    let mut vertices: Vec<Vec<usize>> =
        skeleton.vertices.iter().map(|v| v.tight.to_vec()).collect();
    vertices.sort();
    let mut edges: Vec<(Vec<usize>, Vec<usize>)> = skeleton
        .edges
        .iter()
        .map(|&(i, j)| {
            let a = skeleton.vertices[i].tight.to_vec();
            let b = skeleton.vertices[j].tight.to_vec();
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    edges.sort();
    CombinatorialSignature { vertices, edges }
}

pub fn combinatorial_signature<S: Scalar>(p: &Polyhedron<S>) -> CombinatorialSignature {
    signature_of(&build_skeleton(p))
}

/// Matrix of the tight subsystem at a vertex, stacked under `A1`.
pub fn tight_system<S: Scalar>(p: &Polyhedron<S>, v: &Vertex<S>) -> Matrix<S> {
    p.eq_matrix()
        .stack(&p.ineq_matrix().select_rows(&v.tight.zero_based()))
        .expect("same width")
}
