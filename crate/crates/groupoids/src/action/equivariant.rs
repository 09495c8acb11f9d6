//! Equivariant morphisms between weak actions, their coherence checker,
//! and their composition.

use crate::core::{GroupoidFunctor, NatIso, Side, Verdict, Witness};
use crate::error::Error;

use super::weakaction::WeakAction;

/// An equivariant morphism `F : X₁ → X₂` between actions of the same
/// presentation on the same side, with equivariance 2-isomorphism
/// `δ_{x,g} : F(x)·g → F(x·g)` (mirrored for left actions), indexed by the
/// action pairs of the source action.
#[derive(Debug, Clone)]
pub struct EquivariantMorphism {
    pub src: WeakAction,
    pub dst: WeakAction,
    pub f: GroupoidFunctor,
    pub delta: NatIso,
}

impl EquivariantMorphism {
    /// Build the morphism from the functor and a component closure over
    /// the action pairs of the source.
    pub fn new(
        src: &WeakAction,
        dst: &WeakAction,
        f: GroupoidFunctor,
        delta: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, Error> {
        if src.side != dst.side {
            return Err(Error::Mismatch { what: "equivariant morphism action sides" });
        }
        if src.sg.g != dst.sg.g || !src.sg.m.same_as(&dst.sg.m) {
            return Err(Error::Mismatch { what: "equivariant morphism presentations" });
        }
        if f.dom != src.x || f.cod != dst.x {
            return Err(Error::Mismatch { what: "equivariant morphism functor endpoints" });
        }
        // δ runs between pairs₁ → X₂: (x, g) ↦ F(x)·g and (x, g) ↦ F(x·g).
        let xg = |t: &[usize]| match src.side {
            Side::Right => (t[0], t[1]),
            Side::Left => (t[1], t[0]),
        };
        let mut dom_ob = Vec::with_capacity(src.pairs.objects.len());
        let mut cod_ob = Vec::with_capacity(src.pairs.objects.len());
        for (o, t) in src.pairs.objects.iter().enumerate() {
            let (x, g) = xg(t);
            dom_ob.push(match src.side {
                Side::Right => dst.act_ob(f.ob[x], g),
                Side::Left => dst.act_ob(g, f.ob[x]),
            });
            cod_ob.push(f.ob[src.act.ob[o]]);
        }
        let mut dom_arr = Vec::with_capacity(src.pairs.arrows.len());
        let mut cod_arr = Vec::with_capacity(src.pairs.arrows.len());
        for (a, t) in src.pairs.arrows.iter().enumerate() {
            let (b, j) = xg(t);
            dom_arr.push(match src.side {
                Side::Right => dst.act_arr(f.arr[b], j),
                Side::Left => dst.act_arr(j, f.arr[b]),
            });
            cod_arr.push(f.arr[src.act.arr[a]]);
        }
        let dom = GroupoidFunctor {
            dom: src.pairs.groupoid.clone(),
            cod: dst.x.clone(),
            ob: dom_ob,
            arr: dom_arr,
        };
        let cod = GroupoidFunctor {
            dom: src.pairs.groupoid.clone(),
            cod: dst.x.clone(),
            ob: cod_ob,
            arr: cod_arr,
        };
        let component = src
            .pairs
            .objects
            .iter()
            .map(|t| delta(t[0], t[1]))
            .collect::<Vec<usize>>();
        for (idx, &v) in component.iter().enumerate() {
            if v >= dst.x.arrows() {
                return Err(Error::OutOfRange {
                    table: "equivariance-component",
                    index: idx,
                    value: v,
                    limit: dst.x.arrows(),
                });
            }
        }
        Ok(EquivariantMorphism {
            src: src.clone(),
            dst: dst.clone(),
            f,
            delta: NatIso { dom, cod, component },
        })
    }

    /// δ component at an action pair, in stored tuple order.
    pub fn delta_at(&self, a: usize, b: usize) -> usize {
        self.delta.component[self.src.pairs.object2(&[a, b])]
    }

    fn try_delta_at(&self, a: usize, b: usize) -> Option<usize> {
        self.src.pairs.object(&[a, b]).map(|o| self.delta.component[o])
    }
}

fn prefixed(name: &str, v: Verdict) -> Verdict {
    match v.witness {
        Some(w) => Verdict::from_witness(Witness::new(&format!("{name}-{}", w.axiom), &w.ids)),
        None => v,
    }
}

/// The equivariance axioms: strict moment compatibility, naturality of δ,
/// the δ/β compatibility over action triples, and the δ/ε compatibility
/// over objects.
pub fn check_equivariant(em: &EquivariantMorphism) -> Result<Verdict, Error> {
    let v = em.f.validate()?;
    if !v.passed {
        return Ok(prefixed("equivariant-functor", v));
    }
    if !em.f.then(&em.dst.mu)?.same_as(&em.src.mu) {
        return Ok(Verdict::fail("equivariant-moment", &[]));
    }
    let v = em.delta.validate()?;
    if !v.passed {
        return Ok(prefixed("equivariance", v));
    }

    let (src, dst, f) = (&em.src, &em.dst, &em.f);
    let sg = &src.sg;
    match src.side {
        Side::Right => {
            for tr in &src.triples.objects {
                let (x, g, h) = (tr[0], tr[1], tr[2]);
                let holds = (|| {
                    let lhs = dst.vcomp(&[
                        em.try_delta_at(src.act_ob(x, g), h)?,
                        dst.try_act_arr(em.try_delta_at(x, g)?, sg.id2(h))?,
                        dst.try_beta_at(f.ob[x], g, h)?,
                    ])?;
                    let rhs = dst.vcomp(&[
                        f.arr[src.try_beta_at(x, g, h)?],
                        em.try_delta_at(x, sg.mul_ob(g, h))?,
                    ])?;
                    Some(lhs == rhs)
                })();
                if holds != Some(true) {
                    return Ok(Verdict::fail("equivariance-associator", &[x, g, h]));
                }
            }
            for x in 0..src.x.objects {
                let one = sg.u.ob[src.mu.ob[x]];
                let holds = (|| {
                    let lhs = dst.vcomp(&[f.arr[src.epsilon_at(x)], em.try_delta_at(x, one)?])?;
                    Some(lhs == dst.epsilon_at(f.ob[x]))
                })();
                if holds != Some(true) {
                    return Ok(Verdict::fail("equivariance-unitor", &[x]));
                }
            }
        }
        Side::Left => {
            for tr in &src.triples.objects {
                let (g, h, x) = (tr[0], tr[1], tr[2]);
                let holds = (|| {
                    let lhs = dst.vcomp(&[
                        f.arr[src.try_beta_at(g, h, x)?],
                        em.try_delta_at(sg.mul_ob(g, h), x)?,
                    ])?;
                    let rhs = dst.vcomp(&[
                        em.try_delta_at(g, src.act_ob(h, x))?,
                        dst.try_act_arr(sg.id2(g), em.try_delta_at(h, x)?)?,
                        dst.try_beta_at(g, h, f.ob[x])?,
                    ])?;
                    Some(lhs == rhs)
                })();
                if holds != Some(true) {
                    return Ok(Verdict::fail("equivariance-associator", &[g, h, x]));
                }
            }
            for x in 0..src.x.objects {
                let one = sg.u.ob[src.mu.ob[x]];
                let holds = (|| {
                    let lhs = dst.vcomp(&[f.arr[src.epsilon_at(x)], em.try_delta_at(one, x)?])?;
                    Some(lhs == dst.epsilon_at(f.ob[x]))
                })();
                if holds != Some(true) {
                    return Ok(Verdict::fail("equivariance-unitor", &[x]));
                }
            }
        }
    }
    Ok(Verdict::pass())
}

/// Compose two equivariant morphisms: the functors compose and
/// `δ_{x,g} = F₂(δ₁_{x,g}) ∘ δ₂_{F₁(x),g}` (mirrored for left actions).
pub fn compose_equivariant(
    em1: &EquivariantMorphism,
    em2: &EquivariantMorphism,
) -> Result<EquivariantMorphism, Error> {
    if em1.dst.x != em2.src.x || !em1.dst.act.same_as(&em2.src.act) {
        return Err(Error::Mismatch { what: "equivariant morphism composition endpoints" });
    }
    let f = em1.f.then(&em2.f)?;
    let x3 = &em2.dst.x;
    EquivariantMorphism::new(&em1.src, &em2.dst, f, |a, b| {
        let xg = match em1.src.side {
            Side::Right => (a, b),
            Side::Left => (b, a),
        };
        let outer = match em1.src.side {
            Side::Right => em2.delta_at(em1.f.ob[xg.0], xg.1),
            Side::Left => em2.delta_at(xg.1, em1.f.ob[xg.0]),
        };
        x3.comp2(em2.f.arr[em1.delta_at(a, b)], outer)
    })
}
