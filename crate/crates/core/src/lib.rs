//! Exact tools for the polytope `Ω_n^d` of polystochastic matrices:
//! vertex testing with certificates, Kronecker and dot products,
//! canonical forms under the equivalence group, vertex enumeration and
//! sampling, and counting bounds.
//!
//! Entries are exact rationals throughout. Matrices are stored row-major
//! with the last axis varying fastest and indices are 0-based.

pub mod bounds;
pub mod catalog;
pub mod error;
pub mod io;
pub mod linalg;
pub mod products;
pub mod rational;
pub mod rng;
pub mod search;
pub mod symmetry;
pub mod tensor;
pub mod vertex;

pub use bounds::{
    bound_report, log2_lower_bound, log2_upper_bound_leading, mcmullen_upper_bound,
    support_cardinality_bound, BoundReport, Log2Lower, LowerBoundCase,
};
pub use catalog::{catalog, CATALOG_NAMES, OMEGA_3_4_REPRESENTATIVES};
pub use error::{Error, Result};
pub use io::{parse_matrix, serialize_matrix};
pub use products::{dot, dot_plane_equivalence_check, dot_planes, kronecker};
pub use rational::{format_rational, parse_rational, Rational};
pub use rng::SplitMix64;
pub use search::{
    enumerate_vertices, enumerate_vertices_with, sample_survey, sample_vertex, simplex_solve,
    BasicSolution, EnumerateOptions, LineSystem, SurveyClass, SurveyReport,
};
pub use symmetry::{
    apply_transform, are_equivalent, canonical_form, classify, group_order,
    random_multidim_permutation, EquivalenceClass, EquivalenceTransform,
};
pub use tensor::{line_ids, Index, Line, MultiMatrix, Shape, Support};
pub use vertex::{
    check_support_bound, incidence_matrix, is_vertex, non_vertex_certificate, IncidenceMatrix,
    NonVertexCertificate,
};
