//! Finite groupoids and the 2-categorical toolkit every other module
//! builds on: validation, functors and natural isomorphisms, iso-comma
//! fibred products, strict fibred products over discrete bases,
//! elementary constructions, strict set-level actions, and the weak
//! fibred product comparison.

mod comma;
mod constructions;
mod functor;
mod group;
mod groupoid;
mod pullback;
mod setaction;
mod weakpullback;

pub use comma::{iso_comma, IsoComma};
pub use constructions::{
    full_subgroupoid, isotropy, product_groupoid, restrict_groupoid, ProductGroupoid,
    Subgroupoid,
};
pub use functor::{
    is_equivalence, is_essentially_surjective, is_faithful, is_full, is_fully_faithful,
    is_weakly_representable, GroupoidFunctor, NatIso,
};
pub use group::FiniteGroup;
pub use groupoid::{is_representable, validate_groupoid, FiniteGroupoid, Verdict, Witness};
pub use pullback::FiberedProduct;
pub use setaction::{
    recheck_action_axiom, translation_groupoid, validate_set_action, SetAction, Side,
    TranslationGroupoid,
};
pub use weakpullback::{
    check_weak_pullback_comparison, comparison_functor, weak_fibred_product,
    WeakFiberedProduct,
};
