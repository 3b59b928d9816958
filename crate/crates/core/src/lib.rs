//! Exact computations with dg coalgebras, curved Lie algebras and the
//! Harrison / Chevalley-Eilenberg adjunction between them.

pub mod cert;
pub mod culie;
pub mod dgcog;
pub mod error;
pub mod exactla;
pub mod freealg;
pub mod graded;
pub mod homotopy;
pub mod io;
pub mod koszul;

pub use error::{Error, Result};
