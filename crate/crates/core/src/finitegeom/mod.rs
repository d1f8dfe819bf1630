//! Explicit graphs over small finite fields and graph-side verification of
//! the array-level quantities.

pub mod closure;
pub mod construct;
pub mod field;
pub mod graph;
pub mod lighttail;
pub mod measure;

use thiserror::Error;

pub use closure::{find_induced_gq, find_induced_gq_at, strongly_closed_closure, GqReport};
pub use construct::{build_hamming, build_hermitian_dual_polar, HAMMING_CAP};
pub use field::{Field, FieldElement, FieldError};
pub use graph::{FiniteGraph, DISTANCE_CAP};
pub use lighttail::{verify_light_tail_on_graph, GraphLightTailReport};
pub use measure::{
    is_k112_free, maximal_cliques, measure_array, measure_parameters,
    verify_delsarte_completely_regular, CompletelyRegularReport, MeasuredParameters,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteGeomError {
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("graph on {n} vertices exceeds the cap of {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("invalid graph: {0}")]
    Invalid(String),
    #[error("not distance-regular: {0}")]
    NotDistanceRegular(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}
