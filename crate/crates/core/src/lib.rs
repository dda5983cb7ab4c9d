//! Reconnection numbers of oriented link diagrams.
//!
//! Diagrams come from PD codes or braid closures. The crate computes Seifert
//! circles, genus, Seifert matrices, Alexander polynomials and signatures, and
//! turns them into bounds on the number of oriented saddle moves needed to
//! turn a link into unknotted, unlinked circles. Unknotting plans, cascades
//! and an exhaustive search run those moves explicitly.

pub mod braid;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod reconnection;
pub mod seifert;

pub use braid::{braid_closure, parse_braid_word, torus_braid, BraidWord};
pub use diagram::{parse_pd, LinkDiagram};
pub use error::{Error, Result};
