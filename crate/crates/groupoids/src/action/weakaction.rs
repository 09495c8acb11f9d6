//! Weak right and left actions of a presentation on a finite groupoid.
//!
//! A right action of a presentation on `X` consists of a moment map
//! `μ : X → M`, an action functor on pairs `(x, g)` with `μ(x) = t(g)`,
//! an action associator `β_{x,g,h} : x·(g·h) → (x·g)·h`, and an action
//! unitor `ε_x : x·u(μ(x)) → x`; a left action mirrors everything, acting
//! on pairs `(g, x)` with `s(g) = μ(x)`, with `β_{g,h,x} : (g·h)·x →
//! g·(h·x)` and `ε_x : u(μ(x))·x → x`.
//!
//! Whiskering convention, spelled out once on an arrow-level example for a
//! right action: for a 2-cell `b : x → x′` of `X` and a 2-cell `j : g → g′`
//! of `G` with `μ(b) = t(j)` in the base, `b·j` denotes the image of the
//! arrow pair `(b, j)` under the action functor, a 2-cell `x·g → x′·g′`;
//! `b·id_g` and `id_x·j` are the two whiskerings, and vertical composition
//! is composition in `X`.

use crate::core::{FiberedProduct, FiniteGroupoid, GroupoidFunctor, NatIso, Side, Verdict, Witness};
use crate::error::Error;
use crate::weakgroupoid::StackyGroupoidPresentation;

/// A weak action, stored in the orientation it was given: the tuple order
/// of `pairs` and `triples` is `(x, g)` / `(x, g, h)` for right actions
/// and `(g, x)` / `(g, h, x)` for left actions.
#[derive(Debug, Clone)]
pub struct WeakAction {
    pub sg: StackyGroupoidPresentation,
    /// The groupoid acted on.
    pub x: FiniteGroupoid,
    /// Moment map `μ : X → M`.
    pub mu: GroupoidFunctor,
    /// Composable action pairs.
    pub pairs: FiberedProduct,
    /// Composable action triples.
    pub triples: FiberedProduct,
    /// Action functor on `pairs`.
    pub act: GroupoidFunctor,
    /// Action associator over `triples`.
    pub beta: NatIso,
    /// Action unitor over objects of `X`.
    pub epsilon: NatIso,
    pub side: Side,
}

impl WeakAction {
    /// Assemble an action from closures, in the tuple order of the given
    /// side.  Structural consistency is enforced here; the action axioms
    /// are checked by [`check_action_coherence`].
    #[allow(clippy::too_many_arguments)]
    pub fn assemble(
        sg: &StackyGroupoidPresentation,
        x: &FiniteGroupoid,
        mu: GroupoidFunctor,
        side: Side,
        act_ob: impl Fn(usize, usize) -> usize,
        act_arr: impl Fn(usize, usize) -> usize,
        beta: impl Fn(usize, usize, usize) -> usize,
        epsilon: impl Fn(usize) -> usize,
    ) -> Result<Self, Error> {
        if mu.dom != *x || mu.cod != sg.base {
            return Err(Error::Mismatch { what: "moment map endpoints" });
        }
        let (pairs, triples) = match side {
            Side::Right => (
                FiberedProduct::new(&[(&mu, &sg.t)])?,
                FiberedProduct::new(&[(&mu, &sg.t), (&sg.s, &sg.t)])?,
            ),
            Side::Left => (
                FiberedProduct::new(&[(&sg.s, &mu)])?,
                FiberedProduct::new(&[(&sg.s, &sg.t), (&sg.s, &mu)])?,
            ),
        };
        let act_ob_table: Vec<usize> = pairs.objects.iter().map(|t| act_ob(t[0], t[1])).collect();
        let act_arr_table: Vec<usize> = pairs.arrows.iter().map(|t| act_arr(t[0], t[1])).collect();
        for (idx, &v) in act_ob_table.iter().enumerate() {
            if v >= x.objects {
                return Err(Error::OutOfRange {
                    table: "action-ob",
                    index: idx,
                    value: v,
                    limit: x.objects,
                });
            }
        }
        for (idx, &v) in act_arr_table.iter().enumerate() {
            if v >= x.arrows() {
                return Err(Error::OutOfRange {
                    table: "action-arr",
                    index: idx,
                    value: v,
                    limit: x.arrows(),
                });
            }
        }
        let act = GroupoidFunctor {
            dom: pairs.groupoid.clone(),
            cod: x.clone(),
            ob: act_ob_table,
            arr: act_arr_table,
        };

        let ao = |a: usize, b: usize| -> Result<usize, Error> {
            pairs
                .object(&[a, b])
                .map(|o| act.ob[o])
                .ok_or(Error::Mismatch { what: "non-composable action object pair" })
        };
        let aa = |a: usize, b: usize| -> Result<usize, Error> {
            pairs
                .arrow(&[a, b])
                .map(|o| act.arr[o])
                .ok_or(Error::Mismatch { what: "non-composable action arrow pair" })
        };
        let mul_o = |a: usize, b: usize| -> Result<usize, Error> {
            sg.pairs
                .object(&[a, b])
                .map(|o| sg.m.ob[o])
                .ok_or(Error::Mismatch { what: "non-composable object pair in multiplication" })
        };
        let mul_a = |a: usize, b: usize| -> Result<usize, Error> {
            sg.pairs
                .arrow(&[a, b])
                .map(|o| sg.m.arr[o])
                .ok_or(Error::Mismatch { what: "non-composable arrow pair in multiplication" })
        };

        // Source and target functors of the action associator.
        let mut beta_dom_ob = Vec::with_capacity(triples.objects.len());
        let mut beta_cod_ob = Vec::with_capacity(triples.objects.len());
        for tr in &triples.objects {
            let (dom, cod) = match side {
                Side::Right => (
                    ao(tr[0], mul_o(tr[1], tr[2])?)?,
                    ao(ao(tr[0], tr[1])?, tr[2])?,
                ),
                Side::Left => (
                    ao(mul_o(tr[0], tr[1])?, tr[2])?,
                    ao(tr[0], ao(tr[1], tr[2])?)?,
                ),
            };
            beta_dom_ob.push(dom);
            beta_cod_ob.push(cod);
        }
        let mut beta_dom_arr = Vec::with_capacity(triples.arrows.len());
        let mut beta_cod_arr = Vec::with_capacity(triples.arrows.len());
        for tr in &triples.arrows {
            let (dom, cod) = match side {
                Side::Right => (
                    aa(tr[0], mul_a(tr[1], tr[2])?)?,
                    aa(aa(tr[0], tr[1])?, tr[2])?,
                ),
                Side::Left => (
                    aa(mul_a(tr[0], tr[1])?, tr[2])?,
                    aa(tr[0], aa(tr[1], tr[2])?)?,
                ),
            };
            beta_dom_arr.push(dom);
            beta_cod_arr.push(cod);
        }
        let beta_dom = GroupoidFunctor {
            dom: triples.groupoid.clone(),
            cod: x.clone(),
            ob: beta_dom_ob,
            arr: beta_dom_arr,
        };
        let beta_cod = GroupoidFunctor {
            dom: triples.groupoid.clone(),
            cod: x.clone(),
            ob: beta_cod_ob,
            arr: beta_cod_arr,
        };

        let umu = mu.then(&sg.u)?;
        let mut eps_dom_ob = Vec::with_capacity(x.objects);
        for v in 0..x.objects {
            eps_dom_ob.push(match side {
                Side::Right => ao(v, umu.ob[v])?,
                Side::Left => ao(umu.ob[v], v)?,
            });
        }
        let mut eps_dom_arr = Vec::with_capacity(x.arrows());
        for a in 0..x.arrows() {
            eps_dom_arr.push(match side {
                Side::Right => aa(a, umu.arr[a])?,
                Side::Left => aa(umu.arr[a], a)?,
            });
        }
        let eps_dom =
            GroupoidFunctor { dom: x.clone(), cod: x.clone(), ob: eps_dom_ob, arr: eps_dom_arr };

        let component = |table: &'static str,
                         len: usize,
                         f: &dyn Fn(usize) -> usize|
         -> Result<Vec<usize>, Error> {
            let out: Vec<usize> = (0..len).map(f).collect();
            for (idx, &v) in out.iter().enumerate() {
                if v >= x.arrows() {
                    return Err(Error::OutOfRange { table, index: idx, value: v, limit: x.arrows() });
                }
            }
            Ok(out)
        };
        let beta_component =
            component("action-associator-component", triples.objects.len(), &|o| {
                let tr = &triples.objects[o];
                beta(tr[0], tr[1], tr[2])
            })?;
        let eps_component = component("action-unitor-component", x.objects, &epsilon)?;

        let beta = NatIso { dom: beta_dom, cod: beta_cod, component: beta_component };
        let epsilon =
            NatIso { dom: eps_dom, cod: GroupoidFunctor::identity(x), component: eps_component };
        Ok(WeakAction {
            sg: sg.clone(),
            x: x.clone(),
            mu,
            pairs,
            triples,
            act,
            beta,
            epsilon,
            side,
        })
    }

    /// Action on a pair of objects, in stored tuple order (panics when the
    /// pair is not composable).
    pub fn act_ob(&self, a: usize, b: usize) -> usize {
        self.act.ob[self.pairs.object2(&[a, b])]
    }

    /// Action on a pair of arrows (2-cells), in stored tuple order.
    pub fn act_arr(&self, a: usize, b: usize) -> usize {
        self.act.arr[self.pairs.arrow2(&[a, b])]
    }

    /// Action on a pair of arrows, `None` when not composable.
    pub fn try_act_arr(&self, a: usize, b: usize) -> Option<usize> {
        self.pairs.arrow(&[a, b]).map(|o| self.act.arr[o])
    }

    /// Associator component at a composable object triple, in stored order.
    pub fn beta_at(&self, a: usize, b: usize, c: usize) -> usize {
        self.beta.component[self.triples.object2(&[a, b, c])]
    }

    /// Associator component, `None` when the triple is not composable.
    pub fn try_beta_at(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        self.triples.object(&[a, b, c]).map(|o| self.beta.component[o])
    }

    /// Unitor component at an object of `X`.
    pub fn epsilon_at(&self, v: usize) -> usize {
        self.epsilon.component[v]
    }

    /// Vertical composite of a chain of 2-cells of `X` (apply the last
    /// first), `None` when some step is not composable.
    pub fn vcomp(&self, parts: &[usize]) -> Option<usize> {
        let mut acc = parts[0];
        for &p in &parts[1..] {
            acc = self.x.compose(acc, p)?;
        }
        Some(acc)
    }
}

fn prefixed(name: &str, v: Verdict) -> Verdict {
    match v.witness {
        Some(w) => Verdict::from_witness(Witness::new(&format!("{name}-{}", w.axiom), &w.ids)),
        None => v,
    }
}

/// The action axioms: the strict moment identity, naturality of `β` and
/// `ε`, and the three coherence diagrams (the action pentagon against the
/// associator of the presentation and the two unit diagrams), each
/// enumerated over every composable tuple.
pub fn check_action_coherence(wa: &WeakAction) -> Result<Verdict, Error> {
    let sg = &wa.sg;
    for (name, f) in [("moment", &wa.mu), ("action", &wa.act)] {
        let v = f.validate()?;
        if !v.passed {
            return Ok(prefixed(name, v));
        }
    }
    // (a2): the moment of x·g is s(g) (right) / t(g) (left), strictly.
    let lhs = wa.act.then(&wa.mu)?;
    let rhs = match wa.side {
        Side::Right => wa.pairs.projections[1].then(&sg.s)?,
        Side::Left => wa.pairs.projections[0].then(&sg.t)?,
    };
    if !lhs.same_as(&rhs) {
        let o = (0..lhs.ob.len()).find(|&o| lhs.ob[o] != rhs.ob[o]);
        let a = (0..lhs.arr.len()).find(|&a| lhs.arr[a] != rhs.arr[a]);
        return Ok(Verdict::fail("action-moment-compatibility", &[o.or(a).unwrap_or(0)]));
    }
    for (name, n) in [("action-associator", &wa.beta), ("action-unitor", &wa.epsilon)] {
        let v = n.validate()?;
        if !v.passed {
            return Ok(prefixed(name, v));
        }
    }

    match wa.side {
        Side::Right => check_right_diagrams(wa),
        Side::Left => check_left_diagrams(wa),
    }
}

fn check_right_diagrams(wa: &WeakAction) -> Result<Verdict, Error> {
    let sg = &wa.sg;
    // Unit diagrams over action pairs (x, g).
    for p in &wa.pairs.objects {
        let (x, g) = (p[0], p[1]);
        let left = (|| {
            let one = sg.u.ob[wa.mu.ob[x]];
            let lhs = wa.vcomp(&[
                wa.try_act_arr(wa.epsilon_at(x), sg.id2(g))?,
                wa.try_beta_at(x, one, g)?,
            ])?;
            let rhs = wa.try_act_arr(wa.x.unit[x], sg.lambda_at(g))?;
            Some(lhs == rhs)
        })();
        if left != Some(true) {
            return Ok(Verdict::fail("action-unit-left", &[x, g]));
        }
        let right = (|| {
            let one = sg.u.ob[sg.s.ob[g]];
            let lhs = wa.vcomp(&[wa.epsilon_at(wa.act_ob(x, g)), wa.try_beta_at(x, g, one)?])?;
            let rhs = wa.try_act_arr(wa.x.unit[x], sg.rho_at(g))?;
            Some(lhs == rhs)
        })();
        if right != Some(true) {
            return Ok(Verdict::fail("action-unit-right", &[x, g]));
        }
    }
    // Pentagon over quadruples (x, g, h, l).
    for tr in &wa.triples.objects {
        let (x, g, h) = (tr[0], tr[1], tr[2]);
        for l in 0..sg.g.objects {
            if sg.s.ob[h] != sg.t.ob[l] {
                continue;
            }
            let holds = (|| {
                let lhs = wa.vcomp(&[
                    wa.try_beta_at(wa.act_ob(x, g), h, l)?,
                    wa.try_beta_at(x, g, sg.mul_ob(h, l))?,
                ])?;
                let rhs = wa.vcomp(&[
                    wa.try_act_arr(wa.try_beta_at(x, g, h)?, sg.id2(l))?,
                    wa.try_beta_at(x, sg.mul_ob(g, h), l)?,
                    wa.try_act_arr(wa.x.unit[x], sg.try_alpha_at(g, h, l)?)?,
                ])?;
                Some(lhs == rhs)
            })();
            if holds != Some(true) {
                return Ok(Verdict::fail("action-pentagon", &[x, g, h, l]));
            }
        }
    }
    Ok(Verdict::pass())
}

fn check_left_diagrams(wa: &WeakAction) -> Result<Verdict, Error> {
    let sg = &wa.sg;
    // Unit diagrams over action pairs (g, x).
    for p in &wa.pairs.objects {
        let (g, x) = (p[0], p[1]);
        let left = (|| {
            let one = sg.u.ob[sg.t.ob[g]];
            let lhs = wa.vcomp(&[wa.epsilon_at(wa.act_ob(g, x)), wa.try_beta_at(one, g, x)?])?;
            let rhs = wa.try_act_arr(sg.lambda_at(g), wa.x.unit[x])?;
            Some(lhs == rhs)
        })();
        if left != Some(true) {
            return Ok(Verdict::fail("action-unit-left", &[g, x]));
        }
        let right = (|| {
            let one = sg.u.ob[wa.mu.ob[x]];
            let lhs = wa.vcomp(&[
                wa.try_act_arr(sg.id2(g), wa.epsilon_at(x))?,
                wa.try_beta_at(g, one, x)?,
            ])?;
            let rhs = wa.try_act_arr(sg.rho_at(g), wa.x.unit[x])?;
            Some(lhs == rhs)
        })();
        if right != Some(true) {
            return Ok(Verdict::fail("action-unit-right", &[g, x]));
        }
    }
    // Pentagon over quadruples (l, h, g, x).
    for tr in &wa.triples.objects {
        let (h, g, x) = (tr[0], tr[1], tr[2]);
        for l in 0..sg.g.objects {
            if sg.s.ob[l] != sg.t.ob[h] {
                continue;
            }
            let holds = (|| {
                let lhs = wa.vcomp(&[
                    wa.try_beta_at(l, h, wa.act_ob(g, x))?,
                    wa.try_beta_at(sg.mul_ob(l, h), g, x)?,
                ])?;
                let rhs = wa.vcomp(&[
                    wa.try_act_arr(sg.id2(l), wa.try_beta_at(h, g, x)?)?,
                    wa.try_beta_at(l, sg.mul_ob(h, g), x)?,
                    wa.try_act_arr(sg.g.inv[sg.try_alpha_at(l, h, g)?], wa.x.unit[x])?,
                ])?;
                Some(lhs == rhs)
            })();
            if holds != Some(true) {
                return Ok(Verdict::fail("action-pentagon", &[l, h, g, x]));
            }
        }
    }
    Ok(Verdict::pass())
}

/// The action of a presentation on itself by multiplication, on either
/// side: `μ = s`, `β = α`, `ε = ρ` for right; `μ = t`, `β = α⁻¹`, `ε = λ`
/// for left.
pub fn self_action(sg: &StackyGroupoidPresentation, side: Side) -> Result<WeakAction, Error> {
    let mo = |a: usize, b: usize| sg.mul_ob(a, b);
    let ma = |a: usize, b: usize| sg.mul_arr(a, b);
    match side {
        Side::Right => WeakAction::assemble(
            sg,
            &sg.g,
            sg.s.clone(),
            Side::Right,
            mo,
            ma,
            |a, b, c| sg.alpha_at(a, b, c),
            |v| sg.rho_at(v),
        ),
        Side::Left => WeakAction::assemble(
            sg,
            &sg.g,
            sg.t.clone(),
            Side::Left,
            mo,
            ma,
            |a, b, c| sg.g.inv[sg.alpha_at(a, b, c)],
            |v| sg.lambda_at(v),
        ),
    }
}

/// The diagonal action of two right actions over the same presentation, on
/// the fibred product of their carriers: `(x, y)·g = (x·g, y·g)` with the
/// pairwise associator and unitor.
pub fn diagonal_action(wa1: &WeakAction, wa2: &WeakAction) -> Result<WeakAction, Error> {
    if wa1.side != Side::Right || wa2.side != Side::Right {
        return Err(Error::Mismatch { what: "diagonal action sides (both must be right)" });
    }
    if wa1.sg.base != wa2.sg.base || wa1.sg.g != wa2.sg.g || !wa1.sg.m.same_as(&wa2.sg.m) {
        return Err(Error::Mismatch { what: "diagonal action presentations" });
    }
    let carrier = FiberedProduct::new(&[(&wa1.mu, &wa2.mu)])?;
    let x = carrier.groupoid.clone();
    let mu = carrier.projections[0].then(&wa1.mu)?;
    let ob = |o: usize, g: usize| {
        let t = &carrier.objects[o];
        carrier.object2(&[wa1.act_ob(t[0], g), wa2.act_ob(t[1], g)])
    };
    let arr = |a: usize, j: usize| {
        let t = &carrier.arrows[a];
        carrier.arrow2(&[wa1.act_arr(t[0], j), wa2.act_arr(t[1], j)])
    };
    WeakAction::assemble(
        &wa1.sg,
        &x,
        mu,
        Side::Right,
        ob,
        arr,
        |o, g, h| {
            let t = &carrier.objects[o];
            carrier.arrow2(&[wa1.beta_at(t[0], g, h), wa2.beta_at(t[1], g, h)])
        },
        |o| {
            let t = &carrier.objects[o];
            carrier.arrow2(&[wa1.epsilon_at(t[0]), wa2.epsilon_at(t[1])])
        },
    )
}

/// The action-projection functor `Δ = (pr_X, act) : pairs → X × X`,
/// sending `(x, g) ↦ (x, x·g)` (and `(g, x) ↦ (x, g·x)` for left actions).
pub fn action_projection(wa: &WeakAction) -> Result<GroupoidFunctor, Error> {
    let prod = crate::core::product_groupoid(&wa.x, &wa.x);
    let xi = match wa.side {
        Side::Right => 0,
        Side::Left => 1,
    };
    let ob = wa
        .pairs
        .objects
        .iter()
        .enumerate()
        .map(|(o, t)| prod.object(t[xi], wa.act.ob[o]))
        .collect();
    let arr = wa
        .pairs
        .arrows
        .iter()
        .enumerate()
        .map(|(a, t)| prod.arrow(t[xi], wa.act.arr[a]))
        .collect();
    Ok(GroupoidFunctor { dom: wa.pairs.groupoid.clone(), cod: prod.groupoid, ob, arr })
}

/// 1-freeness: for every object `x`, acting by `id_x` is injective on the
/// parallel 2-cells of `G` lying in the moment fibre of `x`.
pub fn is_1free(wa: &WeakAction) -> Verdict {
    let sg = &wa.sg;
    for x in 0..wa.x.objects {
        let e = wa.mu.ob[x];
        let fibre: Vec<usize> = (0..sg.g.arrows())
            .filter(|&j| match wa.side {
                Side::Right => sg.t.arr[j] == e,
                Side::Left => sg.s.arr[j] == e,
            })
            .collect();
        for (n, &j1) in fibre.iter().enumerate() {
            for &j2 in &fibre[n + 1..] {
                if sg.g.src[j1] != sg.g.src[j2] || sg.g.tgt[j1] != sg.g.tgt[j2] {
                    continue;
                }
                let (a1, a2) = match wa.side {
                    Side::Right => (wa.act_arr(wa.x.unit[x], j1), wa.act_arr(wa.x.unit[x], j2)),
                    Side::Left => (wa.act_arr(j1, wa.x.unit[x]), wa.act_arr(j2, wa.x.unit[x])),
                };
                if a1 == a2 {
                    return Verdict::fail("one-free", &[x, j1, j2]);
                }
            }
        }
    }
    Verdict::pass()
}
