//! Weak actions of stacky groupoid presentations on finite groupoids:
//! assembly and coherence checking, self and diagonal actions, the
//! action-projection functor, 1-freeness, inversion of sides, equivariant
//! morphisms, and actions on fibres.

mod equivariant;
mod fibered;
mod invert;
mod weakaction;

pub use equivariant::{check_equivariant, compose_equivariant, EquivariantMorphism};
pub use fibered::{check_action_on_fibers, FiberedAction};
pub use invert::invert_action;
pub use weakaction::{
    action_projection, check_action_coherence, diagonal_action, is_1free, self_action, WeakAction,
};
