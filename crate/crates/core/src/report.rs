//! Summary reports comparing graph and circuit diameters with the Hirsch
//! bound `f - d`.

use std::fmt;

use serde::Serialize;

use crate::circuits::enumerate_circuits;
use crate::error::{Error, Result};
use crate::geometry::{enumerate_vertices, is_bounded, signature_of, skeleton_from_vertices};
use crate::linalg::rank;
use crate::model::Polyhedron;
use crate::scalar::Scalar;
use crate::walks::{circuit_diameter_of, WalkSpace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub instance: String,
    pub dim: usize,
    pub facets: usize,
    pub vertices: usize,
    pub edges: usize,
    pub circuits: usize,
    pub bounded: bool,
    pub graph_diameter: Option<usize>,
    /// `None` when some pair needs more than `max_depth` steps.
    pub circuit_diameter: Option<usize>,
    pub max_depth: usize,
    pub hirsch_bound: i64,
    pub graph_hirsch_satisfied: Option<bool>,
    /// `None` when the search budget is too small to decide.
    pub circuit_hirsch_satisfied: Option<bool>,
}

/// Dimension of the affine hull implied by the equalities.
pub fn effective_dim<S: Scalar>(p: &Polyhedron<S>) -> usize {
    p.dim() - rank(p.eq_matrix())
}

pub fn hirsch_bound<S: Scalar>(p: &Polyhedron<S>) -> i64 {
    p.facet_count() as i64 - effective_dim(p) as i64
}

pub fn build_report<S: Scalar>(
    instance: &str,
    p: &Polyhedron<S>,
    max_depth: usize,
) -> Result<Report> {
    let circuits = enumerate_circuits(p);
    let bounded = is_bounded(p, &circuits);
    let skeleton = skeleton_from_vertices(p, enumerate_vertices(p));
    let graph_diameter = skeleton.graph_diameter();
    let circuit_diameter = match skeleton.vertex_count() {
        0 => None,
        1 => Some(0),
        _ => {
            let space = WalkSpace::with_circuits(p, circuits.clone());
            circuit_diameter_of(&space, &skeleton.vertices, max_depth)?.value
        }
    };
    let bound = hirsch_bound(p);
    let within = |d: usize| (d as i64) <= bound;
    let circuit_hirsch_satisfied = match circuit_diameter {
        Some(d) => Some(within(d)),
        None if skeleton.vertex_count() == 0 => None,
        // diameter exceeds max_depth
        None if !within(max_depth) => Some(false),
        None => None,
    };
    Ok(Report {
        instance: instance.to_string(),
        dim: p.dim(),
        facets: p.facet_count(),
        vertices: skeleton.vertex_count(),
        edges: skeleton.edge_count(),
        circuits: circuits.len(),
        bounded,
        graph_diameter,
        circuit_diameter,
        max_depth,
        hirsch_bound: bound,
        graph_hirsch_satisfied: graph_diameter.map(within),
        circuit_hirsch_satisfied,
    })
}

fn opt<T: fmt::Display>(v: &Option<T>, none: &str) -> String {
    v.as_ref()
        .map_or_else(|| none.to_string(), |v| v.to_string())
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "instance          {}", self.instance)?;
        writeln!(f, "dimension         {}", self.dim)?;
        writeln!(f, "facets            {}", self.facets)?;
        writeln!(f, "vertices          {}", self.vertices)?;
        writeln!(f, "edges             {}", self.edges)?;
        writeln!(
            f,
            "circuits          {} ({} signed)",
            self.circuits,
            2 * self.circuits
        )?;
        writeln!(f, "bounded           {}", self.bounded)?;
        writeln!(
            f,
            "graph diameter    {}",
            opt(&self.graph_diameter, "undefined")
        )?;
        writeln!(
            f,
            "circuit diameter  {}",
            opt(&self.circuit_diameter, &format!("> {}", self.max_depth))
        )?;
        writeln!(f, "hirsch bound      {}", self.hirsch_bound)?;
        writeln!(
            f,
            "graph hirsch      {}",
            opt(&self.graph_hirsch_satisfied, "unknown")
        )?;
        write!(
            f,
            "circuit hirsch    {}",
            opt(&self.circuit_hirsch_satisfied, "unknown")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerturbCheck {
    pub equivalent: bool,
    pub first: Report,
    pub second: Report,
}

/// Compares the combinatorial signatures of two realizations and reports
/// both circuit diameters.
pub fn perturb_check<S: Scalar>(
    (name_a, a): (&str, &Polyhedron<S>),
    (name_b, b): (&str, &Polyhedron<S>),
    max_depth: usize,
) -> Result<PerturbCheck> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    if a.facet_count() != b.facet_count() {
        return Err(Error::InvalidPolyhedron(format!(
            "facet counts differ: {} vs {}",
            a.facet_count(),
            b.facet_count()
        )));
    }
    let sig_a = signature_of(&skeleton_from_vertices(a, enumerate_vertices(a)));
    let sig_b = signature_of(&skeleton_from_vertices(b, enumerate_vertices(b)));
    Ok(PerturbCheck {
        equivalent: sig_a == sig_b,
        first: build_report(name_a, a, max_depth)?,
        second: build_report(name_b, b, max_depth)?,
    })
}
