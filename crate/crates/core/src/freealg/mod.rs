//! Free graded algebras: tensor words, free Lie algebras as primitives, and
//! free associative dg algebras.

mod assoc;
mod lie;
mod tensor;

pub use assoc::FreeAssoc;
pub use lie::{is_primitive, jacobi_defect, lie_basis, unshuffle};
pub use tensor::*;
