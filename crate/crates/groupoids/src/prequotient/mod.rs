//! Prequotients of weak right actions: the quotient groupoid of classes
//! `[g, b]`, its universal property, the comparison with the action
//! projection, principality, and quotienting by a product presentation in
//! stages.

mod comparison;
#[allow(clippy::module_inception)]
mod prequotient;
mod stages;
mod universal;

pub use comparison::{action_proj_comparison, check_principal};
pub use prequotient::{
    canonical_gamma0, check_prestack_wellformed, prequotient, PrequotientGroupoid,
};
pub use stages::{
    induced_action_on_quotient, quotient_in_stages, restrict_first_factor,
    restrict_second_factor, stage_interchange,
};
pub use universal::{induced_on_quotients, universal_map};
