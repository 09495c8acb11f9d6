//! Weak groupoid objects in finite groupoids: presentation data, strict
//! identities, coherence diagrams, the crossed-module and skeletal
//! constructions, the derived inversion 2-isomorphisms, and restriction to
//! a base point.

mod crossedmodule;
mod fibre;
mod inversion;
mod presentation;
mod product;
mod skeletal;

pub use crossedmodule::{from_crossed_module, CrossedModuleData};
pub use fibre::{isotropy_2group, s_fibre};
pub use inversion::{
    check_inversion_coherence, check_theta_diagrams, derive_chi, derive_theta,
    derive_theta_all, theta_defining_equation,
};
pub use presentation::{check_coherence, check_strict_identities, StackyGroupoidPresentation};
pub use product::{product_presentation, ProductPresentation};
pub use skeletal::{from_skeletal, Skeletal2GroupData};
