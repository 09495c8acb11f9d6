//! Turning a left action into a right action and back: `x·g := i(g)·x`
//! (respectively `g·x := x·i(g)`), with the new associator and unitor
//! assembled from the derived inversion 2-cells `θ` and `χ`.

use crate::core::Side;
use crate::error::Error;
use crate::weakgroupoid::{derive_chi, derive_theta_all};

use super::weakaction::WeakAction;

/// Invert the side of an action.  A left action yields the right action
/// `x·g = i(g)·x` with `β*_{x,g,h} = β(i(h), i(g), x) ∘ (θ_{g,h}·id_x)`
/// and `ε*_x = ε_x ∘ (χ_{μ(x)}·id_x)`; a right action yields the left
/// action `g·x = x·i(g)` with the mirrored formulas.  The output is
/// assembled from these closed formulas and is expected to pass
/// [`super::check_action_coherence`]; tests re-verify this by enumeration
/// rather than assuming it.
pub fn invert_action(wa: &WeakAction) -> Result<WeakAction, Error> {
    let sg = &wa.sg;
    let theta = derive_theta_all(sg)?;
    let chi = derive_chi(sg)?;
    let th = |g: usize, h: usize| theta[sg.pairs.object2(&[g, h])];
    match wa.side {
        Side::Left => WeakAction::assemble(
            sg,
            &wa.x,
            wa.mu.clone(),
            Side::Right,
            |x, g| wa.act_ob(sg.i.ob[g], x),
            |b, j| wa.act_arr(sg.i.arr[j], b),
            |x, g, h| {
                let (ig, ih) = (sg.i.ob[g], sg.i.ob[h]);
                wa.x.comp2(
                    wa.beta_at(ih, ig, x),
                    wa.act_arr(th(g, h), wa.x.unit[x]),
                )
            },
            |x| {
                wa.x.comp2(
                    wa.epsilon_at(x),
                    wa.act_arr(chi[wa.mu.ob[x]], wa.x.unit[x]),
                )
            },
        ),
        Side::Right => WeakAction::assemble(
            sg,
            &wa.x,
            wa.mu.clone(),
            Side::Left,
            |g, x| wa.act_ob(x, sg.i.ob[g]),
            |j, b| wa.act_arr(b, sg.i.arr[j]),
            |g, h, x| {
                let (ig, ih) = (sg.i.ob[g], sg.i.ob[h]);
                wa.x.comp2(
                    wa.beta_at(x, ih, ig),
                    wa.act_arr(wa.x.unit[x], th(g, h)),
                )
            },
            |x| {
                wa.x.comp2(
                    wa.epsilon_at(x),
                    wa.act_arr(wa.x.unit[x], chi[wa.mu.ob[x]]),
                )
            },
        ),
    }
}
