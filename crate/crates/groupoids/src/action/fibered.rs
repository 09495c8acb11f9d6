//! Actions on the fibres of a projection out of the carrier of a weak
//! action.

use crate::core::{GroupoidFunctor, Side, Verdict};
use crate::error::Error;

use super::weakaction::WeakAction;

/// A weak action together with a projection `P : X → S` and a family
/// `γ_{x,g} : P(x) → P(x·g)` of arrows of `S` (mirrored for left actions),
/// indexed by the composable action pairs.
#[derive(Debug, Clone)]
pub struct FiberedAction {
    pub action: WeakAction,
    pub p: GroupoidFunctor,
    /// `γ`, one arrow of the codomain of `p` per action pair.
    pub gamma: Vec<usize>,
}

impl FiberedAction {
    /// Bundle a projection and a `γ` closure over the action pairs with an
    /// action, checking ranges and the endpoints of every component.
    pub fn new(
        action: &WeakAction,
        p: GroupoidFunctor,
        gamma: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, Error> {
        if p.dom != action.x {
            return Err(Error::Mismatch { what: "fibre projection domain" });
        }
        let s = &p.cod;
        let mut table = Vec::with_capacity(action.pairs.objects.len());
        for (o, t) in action.pairs.objects.iter().enumerate() {
            let v = gamma(t[0], t[1]);
            if v >= s.arrows() {
                return Err(Error::OutOfRange {
                    table: "fibre-transport",
                    index: o,
                    value: v,
                    limit: s.arrows(),
                });
            }
            let x = match action.side {
                Side::Right => t[0],
                Side::Left => t[1],
            };
            if s.src[v] != p.ob[x] || s.tgt[v] != p.ob[action.act.ob[o]] {
                return Err(Error::Mismatch { what: "fibre transport endpoints" });
            }
            table.push(v);
        }
        Ok(FiberedAction { action: action.clone(), p, gamma: table })
    }

    /// `γ` component at an action pair, in stored tuple order.
    pub fn gamma_at(&self, a: usize, b: usize) -> usize {
        self.gamma[self.action.pairs.object2(&[a, b])]
    }

    fn try_gamma_at(&self, a: usize, b: usize) -> Option<usize> {
        self.action.pairs.object(&[a, b]).map(|o| self.gamma[o])
    }
}

/// The two axioms for an action on the fibres of `P`: compatibility with
/// the action associator over composable triples, and triviality of the
/// transport along units, `P(ε_x) ∘ γ_{x,1} = id`.
pub fn check_action_on_fibers(fa: &FiberedAction) -> Result<Verdict, Error> {
    let v = fa.p.validate()?;
    if !v.passed {
        return Ok(v);
    }
    let wa = &fa.action;
    let sg = &wa.sg;
    let s = &fa.p.cod;
    match wa.side {
        Side::Right => {
            for tr in &wa.triples.objects {
                let (x, g, h) = (tr[0], tr[1], tr[2]);
                let holds = (|| {
                    let lhs =
                        s.compose(fa.p.arr[wa.try_beta_at(x, g, h)?], fa.try_gamma_at(x, sg.mul_ob(g, h))?)?;
                    let rhs =
                        s.compose(fa.try_gamma_at(wa.act_ob(x, g), h)?, fa.try_gamma_at(x, g)?)?;
                    Some(lhs == rhs)
                })();
                if holds != Some(true) {
                    return Ok(Verdict::fail("fibre-transport-associator", &[x, g, h]));
                }
            }
            for x in 0..wa.x.objects {
                let one = sg.u.ob[wa.mu.ob[x]];
                let holds = (|| {
                    let lhs = s.compose(fa.p.arr[wa.epsilon_at(x)], fa.try_gamma_at(x, one)?)?;
                    Some(lhs == s.unit[fa.p.ob[x]])
                })();
                if holds != Some(true) {
                    return Ok(Verdict::fail("fibre-transport-unitor", &[x]));
                }
            }
        }
        Side::Left => {
            for tr in &wa.triples.objects {
                let (g, h, x) = (tr[0], tr[1], tr[2]);
                let holds = (|| {
                    let lhs =
                        s.compose(fa.p.arr[wa.try_beta_at(g, h, x)?], fa.try_gamma_at(sg.mul_ob(g, h), x)?)?;
                    let rhs =
                        s.compose(fa.try_gamma_at(g, wa.act_ob(h, x))?, fa.try_gamma_at(h, x)?)?;
                    Some(lhs == rhs)
                })();
                if holds != Some(true) {
                    return Ok(Verdict::fail("fibre-transport-associator", &[g, h, x]));
                }
            }
            for x in 0..wa.x.objects {
                let one = sg.u.ob[wa.mu.ob[x]];
                let holds = (|| {
                    let lhs = s.compose(fa.p.arr[wa.epsilon_at(x)], fa.try_gamma_at(one, x)?)?;
                    Some(lhs == s.unit[fa.p.ob[x]])
                })();
                if holds != Some(true) {
                    return Ok(Verdict::fail("fibre-transport-unitor", &[x]));
                }
            }
        }
    }
    Ok(Verdict::pass())
}
