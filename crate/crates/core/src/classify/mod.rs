//! Classification of data-sequence specs: closed-form recurrence
//! constraints, degree and bidegree triples, the four-parameter normal
//! form, the difference-equation characterizations, and the scheme graph.

mod degrees;
mod graph;
mod seqspec;
mod uniform;
mod verify;

pub use degrees::{BidegreeTriple, DegreeTriple};
pub use graph::{classify_spec, scheme_graph, SchemeGraph, SchemeNode};
pub use seqspec::{general_constraints, SeqSpecQ, SeqSpecQ1, UniformParamId};
pub use uniform::{normalize_uniform, reconstruct_spec, uniform_u, UniformParams};
pub use verify::{verify_d_remark, verify_difference_eqs};
