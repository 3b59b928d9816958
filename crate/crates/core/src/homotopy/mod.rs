//! Homology of truncated complexes and weak-equivalence checks.
mod complex;
mod lemma410;
mod lie;
mod weq;

pub use complex::{homology_table, quasi_iso, ChainMap, Complex, DegreeWindow, Reliability};
pub use lemma410::lemma410_check;
pub use lie::{lie_chain_map, reliability, LieComplex};
pub use weq::{weq_coalgebra, weq_curvedlie};
