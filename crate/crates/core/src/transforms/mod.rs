//! Transformations of the first and second type and their polynomial
//! decompositions.

mod catalan;
mod relations;
mod type1;
mod type2;

pub use catalan::{catalan_in_x2, catalan_power_check};
pub use relations::{even_odd_columns_check, pseudo_involution_check, Relation, RelationReport};
pub use type1::{type1_closed_form, type1_cs, type1_quadratic_check, TypeOneContext};
pub use type2::{
    type2_closed_form, type2_even_pair, type2_odd_pair, type2_parity_check, type2_quadratic_check, type2_root_check,
    type2_row_polys, type2_tu, TypeTwoContext,
};
