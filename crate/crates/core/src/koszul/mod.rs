//! The Harrison and Chevalley-Eilenberg functors, the convolution algebra,
//! and the adjunction between them.

mod adjunction;
mod ce;
mod convolution;
mod harrison;
mod sym;

pub use adjunction::{adjoint_to_cog, adjoint_to_lie, counit, unit_map, Counit, UnitMap};
pub use ce::{ce, ce_algebra, ce_map, check_ce_square, render_sym, CEComponent, CEOutput};
pub use convolution::{convolution, Convolution};
pub use harrison::{harrison, harrison_coradical, harrison_map, harrison_with, Harrison};
pub use sym::{Mono, SymAlg, SymPoly};
