//! Exact circuits, circuit walks and circuit diameters of rational
//! polyhedra in H-representation.
//!
//! The building blocks are generic over an exact [`Scalar`] field; the
//! aliases below fix it to arbitrary-precision rationals, which is what the
//! command-line tool uses.
//!
//! ```
//! use circdiam::{builtin, circuit_diameter, HPolyhedron};
//!
//! let square: HPolyhedron = builtin("cube(2)").unwrap();
//! assert_eq!(circuit_diameter(&square, 3).unwrap().value, Some(2));
//! ```

pub mod catalog;
pub mod certificate;
pub mod circuits;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod model;
pub mod report;
pub mod scalar;
pub mod walks;

pub use catalog::builtin;
pub use certificate::{WalkCertificate, WalkStep};
pub use circuits::{circuit_count_bound, enumerate_circuits, is_circuit, Circuit, CircuitSet};
pub use error::{Error, Result};
pub use geometry::{
    build_skeleton, combinatorial_signature, enumerate_vertices, is_bounded, CombinatorialSignature,
};
pub use linalg::{kernel_line, primitive_normalize, rank, solve_square, PrimitiveVector};
pub use model::{parse_hrep, FacetSet};
pub use report::{build_report, perturb_check, PerturbCheck, Report};
pub use scalar::Scalar;
pub use walks::{
    circuit_diameter, circuit_distance, max_step, verify_walk, CircuitDiameter, StepOutcome,
    WalkSpace, WalkViolation,
};

/// Arbitrary-precision rational, the default scalar.
pub type Rational = num_rational::BigRational;

pub type QMatrix = linalg::Matrix<Rational>;
pub type HPolyhedron = model::Polyhedron<Rational>;
pub type Vertex = geometry::Vertex<Rational>;
pub type Skeleton = geometry::Skeleton<Rational>;
pub type Reachability = walks::Reachability<Rational>;
pub type ReachabilityLayer = walks::ReachabilityLayer<Rational>;
pub type Step = walks::StepOutcome<Rational>;
