//! Degree sequences with Z3-connected realizations: classification,
//! constructive realization, certificates and an exact oracle.

pub mod builder;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod reducer;
pub mod seqcore;
pub mod sweep;
pub mod verifier;

pub use builder::{
    realize, realize_family, realize_with, Family, RealizationResult, RealizeOptions,
};
pub use error::{BuildError, EnumerateError, GraphError, SequenceError, VerifyError};
pub use graph::Multigraph;
pub use reducer::{certify, replay, Certificate, CertifyOutcome};
pub use seqcore::{classify, parse_sequence, Classification, DegreeSequence, Route};
pub use verifier::{is_3_flowable, is_z3_connected, Oracle};
