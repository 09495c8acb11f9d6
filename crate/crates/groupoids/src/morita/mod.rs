//! Morita theory for presented stacky groupoids: weak bibundles with an
//! interchange 2-isomorphism, biprincipality, flips, composition over a
//! common middle presentation, strictification back to honest groupoid
//! morphisms, and a finite prequantization example.

mod bibundle;
mod compose;
mod equivalence;
mod prequantization;
mod strictify;

pub use bibundle::{
    check_bibundle, from_strict_bibundle, identity_bibundle, isotropy_bibundle, StackyBibundle,
};
pub use compose::compose_bibundles;
pub use equivalence::{flip_bibundle, is_biprincipal};
pub use prequantization::discrete_prequantization_example;
pub use strictify::strictify_if_groupoid;
