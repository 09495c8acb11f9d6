//! Strict 2-groups from crossed modules of finite abelian groups.
//!
//! A homomorphism `φ : A → K` of finite abelian groups yields a 2-group:
//! the groupoid has objects `K` and arrows `A × K`, with `(a, k) : k →
//! k + φ(a)`, and the multiplication is the direct-product group structure
//! on `A × K`.  All five coherence 2-isomorphisms are identities.

use crate::core::{FiniteGroup, FiniteGroupoid, GroupoidFunctor, Verdict};
use crate::error::Error;
use crate::weakgroupoid::presentation::StackyGroupoidPresentation;

/// A crossed module of finite abelian groups: `φ : A → K`.
#[derive(Debug, Clone)]
pub struct CrossedModuleData {
    pub a: FiniteGroup,
    pub k: FiniteGroup,
    /// The homomorphism as a table `phi[a] ∈ K`.
    pub phi: Vec<usize>,
}

impl CrossedModuleData {
    /// Group axioms, commutativity of both groups, and the homomorphism law.
    pub fn validate(&self) -> Verdict {
        self.a
            .validate()
            .and(|| self.k.validate())
            .and(|| {
                if self.a.is_abelian() && self.k.is_abelian() {
                    Verdict::pass()
                } else {
                    Verdict::fail("crossed-module-abelian", &[])
                }
            })
            .and(|| self.a.is_homomorphism(&self.k, &self.phi))
    }
}

/// The strict 2-group of a crossed module, as a presentation over a point.
pub fn from_crossed_module(cm: &CrossedModuleData) -> Result<StackyGroupoidPresentation, Error> {
    if !cm.validate().passed {
        return Err(Error::Mismatch { what: "crossed module data (fails its own axioms)" });
    }
    let (na, nk) = (cm.a.order(), cm.k.order());
    let arrow = |a: usize, k: usize| a * nk + k;

    // The groupoid G: objects K, arrows A × K with (a, k) : k → k + φ(a).
    let mut src = Vec::with_capacity(na * nk);
    let mut tgt = Vec::with_capacity(na * nk);
    let mut inv = Vec::with_capacity(na * nk);
    for a in 0..na {
        for k in 0..nk {
            src.push(k);
            tgt.push(cm.k.op(k, cm.phi[a]));
            inv.push(arrow(cm.a.inv(a), cm.k.op(k, cm.phi[a])));
        }
    }
    let unit = (0..nk).map(|k| arrow(0, k)).collect();
    let mut comp = std::collections::BTreeMap::new();
    for a2 in 0..na {
        for k2 in 0..nk {
            for a1 in 0..na {
                for k1 in 0..nk {
                    if k2 == cm.k.op(k1, cm.phi[a1]) {
                        comp.insert(
                            (arrow(a2, k2), arrow(a1, k1)),
                            arrow(cm.a.op(a1, a2), k1),
                        );
                    }
                }
            }
        }
    }
    let g = FiniteGroupoid { objects: nk, src, tgt, unit, inv, comp };

    let base = FiniteGroupoid::discrete(1);
    let s = GroupoidFunctor::to_discrete(&g, 1, vec![0; nk]);
    let t = s.clone();
    let u = GroupoidFunctor::from_maps(&base, &g, |_| 0, |_| arrow(0, 0));
    let i = GroupoidFunctor::from_maps(
        &g,
        &g,
        |k| cm.k.inv(k),
        |m| arrow(cm.a.inv(m / nk), cm.k.inv(m % nk)),
    );
    StackyGroupoidPresentation::assemble(
        &base,
        &g,
        s,
        t,
        u,
        i,
        |k1, k2| cm.k.op(k1, k2),
        |m1, m2| arrow(cm.a.op(m1 / nk, m2 / nk), cm.k.op(m1 % nk, m2 % nk)),
        |k1, k2, k3| g.unit[cm.k.op(cm.k.op(k1, k2), k3)],
        |k| g.unit[k],
        |k| g.unit[k],
        |_k| g.unit[0],
        |_k| g.unit[0],
    )
}
