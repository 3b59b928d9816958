//! JSON files and element literals.
mod expr;
mod json;

pub use expr::{parse_element, parse_poly, parse_scalar};
pub use json::{
    assoc_from_value, assoc_to_value, coalgebra_from_value, coalgebra_map_to_value,
    coalgebra_to_value, lie_from_value, lie_to_value, morphism_to_value, Loader, ManifestParams,
    Object,
};
