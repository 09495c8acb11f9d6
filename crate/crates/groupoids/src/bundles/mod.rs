//! Strict bundle theory over finite groupoids: principal set bundles,
//! Hilsum–Skandalis bibundles and their tensor product, weak
//! equivalences, and gauge groupoids.

mod bibundle;
mod gauge;
mod principal;
mod tensor;
mod weakequiv;

pub use bibundle::{are_isomorphic_bibundles, bibundle_from_morphism, StrictBibundle};
pub use gauge::{gauge_groupoid, GaugeGroupoid};
pub use principal::is_principal_set_bundle;
pub use tensor::tensor_bibundles;
pub use weakequiv::is_weak_equivalence;
