//! Weak bibundles between two presentations: two actions on a common
//! carrier made to commute by an interchange 2-isomorphism `τ`, with the
//! four higher coherence diagrams, and the basic constructors (identity
//! bibundles, lifts of strict bibundles, isotropy bibundles).

use std::collections::BTreeMap;

use crate::action::{check_action_coherence, self_action, WeakAction};
use crate::bundles::StrictBibundle;
use crate::core::{
    full_subgroupoid, FiniteGroupoid, GroupoidFunctor, Side, Verdict, Witness,
};
use crate::error::Error;
use crate::weakgroupoid::{isotropy_2group, StackyGroupoidPresentation};

/// A weak bibundle: a left action of one presentation and a right action
/// of another on the same carrier `X`, together with the interchange
/// 2-isomorphism `τ(g₁, x, g₂) : g₁·(x·g₂) → (g₁·x)·g₂` over composable
/// triples.  The two moment maps are `left.mu : X → M₁` and
/// `right.mu : X → M₂`; each action is required (by [`check_bibundle`])
/// to be on the fibres of the other moment map.
#[derive(Debug, Clone)]
pub struct StackyBibundle {
    /// Left action of the first presentation, on the fibres of `right.mu`.
    pub left: WeakAction,
    /// Right action of the second presentation, on the fibres of `left.mu`.
    pub right: WeakAction,
    /// Composable interchange triples `(g₁, x, g₂)`.
    pub triples: Vec<(usize, usize, usize)>,
    /// Component of `τ` at each triple, an arrow of the carrier.
    pub tau: Vec<usize>,
    index: BTreeMap<(usize, usize, usize), usize>,
}

impl StackyBibundle {
    /// Assemble a bibundle from its two actions and a component closure
    /// for `τ`, indexed by composable triples.  Structural consistency is
    /// enforced here; the axioms are checked by [`check_bibundle`].
    pub fn new(
        left: WeakAction,
        right: WeakAction,
        tau: impl Fn(usize, usize, usize) -> usize,
    ) -> Result<Self, Error> {
        if left.side != Side::Left || right.side != Side::Right {
            return Err(Error::Mismatch { what: "bibundle action sides" });
        }
        if left.x != right.x {
            return Err(Error::Mismatch { what: "bibundle carrier" });
        }
        let (sg1, sg2) = (&left.sg, &right.sg);
        let mut triples = Vec::new();
        let mut index = BTreeMap::new();
        for g1 in 0..sg1.g.objects {
            for x in 0..left.x.objects {
                if sg1.s.ob[g1] != left.mu.ob[x] {
                    continue;
                }
                for g2 in 0..sg2.g.objects {
                    if right.mu.ob[x] != sg2.t.ob[g2] {
                        continue;
                    }
                    index.insert((g1, x, g2), triples.len());
                    triples.push((g1, x, g2));
                }
            }
        }
        let component: Vec<usize> = triples.iter().map(|&(a, b, c)| tau(a, b, c)).collect();
        for (idx, &v) in component.iter().enumerate() {
            if v >= left.x.arrows() {
                return Err(Error::OutOfRange {
                    table: "interchange-component",
                    index: idx,
                    value: v,
                    limit: left.x.arrows(),
                });
            }
        }
        Ok(StackyBibundle { left, right, triples, tau: component, index })
    }

    /// The common carrier of the two actions.
    pub fn carrier(&self) -> &FiniteGroupoid {
        &self.left.x
    }

    /// Interchange component at a composable triple (panics otherwise).
    pub fn tau_at(&self, g1: usize, x: usize, g2: usize) -> usize {
        self.tau[self.index[&(g1, x, g2)]]
    }

    /// Interchange component, `None` when the triple is not composable.
    pub fn try_tau_at(&self, g1: usize, x: usize, g2: usize) -> Option<usize> {
        self.index.get(&(g1, x, g2)).map(|&i| self.tau[i])
    }
}

fn prefixed(name: &str, v: Verdict) -> Verdict {
    match v.witness {
        Some(w) => Verdict::from_witness(Witness::new(&format!("{name}-{}", w.axiom), &w.ids)),
        None => v,
    }
}

/// The bibundle axioms: coherence of both actions, mutual invariance of
/// the moment maps, the endpoints of `τ`, the two associativity coherence
/// diagrams and the two unit coherence diagrams of `τ`, and naturality of
/// `τ` in all three slots — each enumerated over every composable tuple.
pub fn check_bibundle(bb: &StackyBibundle) -> Result<Verdict, Error> {
    let (left, right) = (&bb.left, &bb.right);
    let (sg1, sg2) = (&left.sg, &right.sg);
    let x = &left.x;

    let v = check_action_coherence(left)?;
    if !v.passed {
        return Ok(prefixed("left-action", v));
    }
    let v = check_action_coherence(right)?;
    if !v.passed {
        return Ok(prefixed("right-action", v));
    }

    // Each action is on the fibres of the other moment map.
    for p in &left.pairs.objects {
        let (g1, v) = (p[0], p[1]);
        if right.mu.ob[left.act_ob(g1, v)] != right.mu.ob[v] {
            return Ok(Verdict::fail("bibundle-left-moment", &[g1, v]));
        }
    }
    for p in &right.pairs.objects {
        let (v, g2) = (p[0], p[1]);
        if left.mu.ob[right.act_ob(v, g2)] != left.mu.ob[v] {
            return Ok(Verdict::fail("bibundle-right-moment", &[v, g2]));
        }
    }

    // Endpoints of the interchange components.
    for (i, &(g1, v, g2)) in bb.triples.iter().enumerate() {
        let cell = bb.tau[i];
        let ok = (|| {
            let src = left.act_ob(g1, right.act_ob(v, g2));
            let tgt = right.pairs.object(&[left.act_ob(g1, v), g2]).map(|o| right.act.ob[o])?;
            Some(x.src[cell] == src && x.tgt[cell] == tgt)
        })();
        if ok != Some(true) {
            return Ok(Verdict::fail("bibundle-interchange-endpoints", &[g1, v, g2]));
        }
    }

    // Unit coherences (1xg₂) and (g₁x1).
    for p in &right.pairs.objects {
        let (v, g2) = (p[0], p[1]);
        let one = sg1.u.ob[left.mu.ob[v]];
        let holds = (|| {
            let lhs = x.compose(
                right.try_act_arr(left.epsilon_at(v), sg2.id2(g2))?,
                bb.try_tau_at(one, v, g2)?,
            )?;
            Some(lhs == left.epsilon_at(right.act_ob(v, g2)))
        })();
        if holds != Some(true) {
            return Ok(Verdict::fail("bibundle-unit-left", &[v, g2]));
        }
    }
    for p in &left.pairs.objects {
        let (g1, v) = (p[0], p[1]);
        let one = sg2.u.ob[right.mu.ob[v]];
        let holds = (|| {
            let lhs = x.compose(
                right.epsilon_at(left.act_ob(g1, v)),
                bb.try_tau_at(g1, v, one)?,
            )?;
            let rhs = left.try_act_arr(sg1.id2(g1), right.epsilon_at(v))?;
            Some(lhs == rhs)
        })();
        if holds != Some(true) {
            return Ok(Verdict::fail("bibundle-unit-right", &[g1, v]));
        }
    }

    // Associativity coherence (g₁g₁′xg₂): both ways around the square of
    // re-bracketings of `g₁·(g₁′·(x·g₂))` agree.
    for &(g1p, v, g2) in &bb.triples {
        for g1 in 0..sg1.g.objects {
            if sg1.s.ob[g1] != sg1.t.ob[g1p] {
                continue;
            }
            let holds = (|| {
                let vg2 = right.act_ob(v, g2);
                let lhs = x.compose(
                    bb.try_tau_at(sg1.mul_ob(g1, g1p), v, g2)?,
                    x.inv[left.try_beta_at(g1, g1p, vg2)?],
                )?;
                let rhs = x.compose(
                    x.compose(
                        right.try_act_arr(x.inv[left.try_beta_at(g1, g1p, v)?], sg2.id2(g2))?,
                        bb.try_tau_at(g1, left.act_ob(g1p, v), g2)?,
                    )?,
                    left.try_act_arr(sg1.id2(g1), bb.try_tau_at(g1p, v, g2)?)?,
                )?;
                Some(lhs == rhs)
            })();
            if holds != Some(true) {
                return Ok(Verdict::fail("bibundle-assoc-left", &[g1, g1p, v, g2]));
            }
        }
    }

    // Associativity coherence (g₁xg₂g₂′).
    for &(g1, v, g2) in &bb.triples {
        for g2p in 0..sg2.g.objects {
            if sg2.s.ob[g2] != sg2.t.ob[g2p] {
                continue;
            }
            let holds = (|| {
                let lhs = x.compose(
                    right.try_beta_at(left.act_ob(g1, v), g2, g2p)?,
                    bb.try_tau_at(g1, v, sg2.mul_ob(g2, g2p))?,
                )?;
                let rhs = x.compose(
                    x.compose(
                        right.try_act_arr(bb.try_tau_at(g1, v, g2)?, sg2.id2(g2p))?,
                        bb.try_tau_at(g1, right.act_ob(v, g2), g2p)?,
                    )?,
                    left.try_act_arr(sg1.id2(g1), right.try_beta_at(v, g2, g2p)?)?,
                )?;
                Some(lhs == rhs)
            })();
            if holds != Some(true) {
                return Ok(Verdict::fail("bibundle-assoc-right", &[g1, v, g2, g2p]));
            }
        }
    }

    // Naturality of `τ` in all three slots at once.
    for j1 in 0..sg1.g.arrows() {
        for b in 0..x.arrows() {
            for j2 in 0..sg2.g.arrows() {
                let holds = (|| {
                    let inner = right.try_act_arr(b, j2)?;
                    let lhs = x.compose(
                        bb.try_tau_at(sg1.g.tgt[j1], x.tgt[b], sg2.g.tgt[j2])?,
                        left.try_act_arr(j1, inner)?,
                    )?;
                    let rhs = x.compose(
                        right.try_act_arr(left.try_act_arr(j1, b)?, j2)?,
                        bb.try_tau_at(sg1.g.src[j1], x.src[b], sg2.g.src[j2])?,
                    )?;
                    Some(lhs == rhs)
                })();
                if holds == Some(false) {
                    return Ok(Verdict::fail("bibundle-interchange-natural", &[j1, b, j2]));
                }
            }
        }
    }
    Ok(Verdict::pass())
}

/// A presentation as a bibundle from itself to itself: the carrier is its
/// own arrow space, acted on by multiplication on both sides, with the
/// associator as interchange.
pub fn identity_bibundle(sg: &StackyGroupoidPresentation) -> Result<StackyBibundle, Error> {
    let left = self_action(sg, Side::Left)?;
    let right = self_action(sg, Side::Right)?;
    StackyBibundle::new(left, right, |g1, v, g2| sg.alpha_at(g1, v, g2))
}

/// Lift a strict bibundle of honest groupoids to a bibundle of their
/// strict presentations: the carrier becomes a discrete groupoid, every
/// coherence 2-cell is an identity.
pub fn from_strict_bibundle(bb: &StrictBibundle) -> Result<StackyBibundle, Error> {
    let sg1 = StackyGroupoidPresentation::strict(&bb.g)?;
    let sg2 = StackyGroupoidPresentation::strict(&bb.h)?;
    let x = FiniteGroupoid::discrete(bb.points);
    let lap = |g: usize, p: usize| bb.left.apply(p, g).expect("composable strict pair");
    let rap = |p: usize, g: usize| bb.right.apply(p, g).expect("composable strict pair");
    let mu1 = GroupoidFunctor::to_discrete(&x, bb.g.objects, bb.a.clone());
    let left = WeakAction::assemble(
        &sg1,
        &x,
        mu1,
        Side::Left,
        lap,
        |j, b| lap(j, b),
        |g, h, p| lap(g, lap(h, p)),
        |p| p,
    )?;
    let mu2 = GroupoidFunctor::to_discrete(&x, bb.h.objects, bb.b.clone());
    let right = WeakAction::assemble(
        &sg2,
        &x,
        mu2,
        Side::Right,
        rap,
        |b, j| rap(b, j),
        |p, g, h| rap(rap(p, g), h),
        |p| p,
    )?;
    StackyBibundle::new(left, right, |g1, p, g2| rap(lap(g1, p), g2))
}

/// The source fibre at a base point as a bibundle from the presentation to
/// its isotropy 2-group at that point: the presentation multiplies on the
/// left, the isotropy multiplies on the right, and the interchange is the
/// restricted associator.  For a transitive presentation this is a Morita
/// equivalence with the isotropy.
pub fn isotropy_bibundle(
    sg: &StackyGroupoidPresentation,
    x: usize,
) -> Result<StackyBibundle, Error> {
    let iso = isotropy_2group(sg, x)?;
    // Identifier translation for the isotropy, matching its construction.
    let iso_ob: Vec<usize> =
        (0..sg.g.objects).filter(|&v| sg.s.ob[v] == x && sg.t.ob[v] == x).collect();
    let iso_arr: Vec<usize> = (0..sg.g.arrows())
        .filter(|&a| {
            let (sv, tv) = (sg.g.src[a], sg.g.tgt[a]);
            sg.s.ob[sv] == x && sg.t.ob[sv] == x && sg.s.ob[tv] == x && sg.t.ob[tv] == x
        })
        .collect();

    let keep: Vec<bool> = (0..sg.g.objects).map(|v| sg.s.ob[v] == x).collect();
    let sub = full_subgroupoid(&sg.g, &keep);
    let carrier = sub.groupoid.clone();
    let go = |v: usize| sub.object_of[v];
    let ga = |a: usize| sub.arrow_of[a];

    let mu1 = GroupoidFunctor::from_maps(
        &carrier,
        &sg.base,
        |v| sg.t.ob[go(v)],
        |a| sg.t.arr[ga(a)],
    );
    let left = WeakAction::assemble(
        sg,
        &carrier,
        mu1,
        Side::Left,
        |g, v| sub.object_index[&sg.mul_ob(g, go(v))],
        |j, b| sub.arrow_index[&sg.mul_arr(j, ga(b))],
        |g, h, v| sub.arrow_index[&sg.g.inv[sg.alpha_at(g, h, go(v))]],
        |v| sub.arrow_index[&sg.lambda_at(go(v))],
    )?;
    let mu2 = GroupoidFunctor::to_discrete(&carrier, 1, vec![0; carrier.objects]);
    let right = WeakAction::assemble(
        &iso,
        &carrier,
        mu2,
        Side::Right,
        |v, w| sub.object_index[&sg.mul_ob(go(v), iso_ob[w])],
        |b, j| sub.arrow_index[&sg.mul_arr(ga(b), iso_arr[j])],
        |v, w1, w2| sub.arrow_index[&sg.alpha_at(go(v), iso_ob[w1], iso_ob[w2])],
        |v| sub.arrow_index[&sg.rho_at(go(v))],
    )?;
    StackyBibundle::new(left, right, |g1, v, w| {
        sub.arrow_index[&sg.alpha_at(g1, go(v), iso_ob[w])]
    })
}
