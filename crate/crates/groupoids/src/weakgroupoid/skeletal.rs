//! Skeletal 2-groups: the smallest carriers of a genuinely weak associator.
//!
//! The data is a finite group `π₁`, a finite abelian group `π₂`, an action
//! of `π₁` on `π₂` by automorphisms, and a candidate associator
//! `ω : π₁³ → π₂`.  The resulting presentation has objects `π₁`, only
//! automorphisms `(g, p)` with `p ∈ π₂`, strict unitors, and associator
//! component `ω(g, h, k)` at the triple `(g, h, k)`.  The coherence
//! diagrams then hold exactly when `ω` is a normalized 3-cocycle, so this
//! construction generates the nontrivial pass/fail cases for the checker.

use std::collections::BTreeMap;

use crate::core::{FiniteGroup, FiniteGroupoid, GroupoidFunctor, Verdict};
use crate::error::Error;
use crate::weakgroupoid::presentation::StackyGroupoidPresentation;

/// Skeletal 2-group data `(π₁, π₂, act, ω)`.
#[derive(Debug, Clone)]
pub struct Skeletal2GroupData {
    pub pi1: FiniteGroup,
    /// Must be abelian.
    pub pi2: FiniteGroup,
    /// `act[g][p]` is the action of `g ∈ π₁` on `p ∈ π₂`.
    pub act: Vec<Vec<usize>>,
    /// Flat table of `ω(g, h, k)` at index `(g·n + h)·n + k`, `n = |π₁|`.
    pub omega: Vec<usize>,
}

impl Skeletal2GroupData {
    /// Data with the trivial action and everywhere-zero associator.
    pub fn with_trivial_action(pi1: FiniteGroup, pi2: FiniteGroup) -> Self {
        let n1 = pi1.order();
        let act = vec![(0..pi2.order()).collect(); n1];
        let omega = vec![0; n1 * n1 * n1];
        Skeletal2GroupData { pi1, pi2, act, omega }
    }

    /// `ω(g, h, k)`.
    pub fn omega_at(&self, g: usize, h: usize, k: usize) -> usize {
        let n = self.pi1.order();
        self.omega[(g * n + h) * n + k]
    }

    /// Group axioms, commutativity of `π₂`, and the action being by
    /// automorphisms and a homomorphism from `π₁`.  Normalization of `ω`
    /// is deliberately not required here: the unit coherence diagrams
    /// detect a non-normalized candidate, so arbitrary candidates can be
    /// swept through the coherence checker.
    pub fn validate(&self) -> Result<Verdict, Error> {
        let (n1, n2) = (self.pi1.order(), self.pi2.order());
        if self.act.len() != n1 {
            return Err(Error::BadLength { table: "skeletal-act", expected: n1, actual: self.act.len() });
        }
        for (g, row) in self.act.iter().enumerate() {
            if row.len() != n2 {
                return Err(Error::BadLength { table: "skeletal-act-row", expected: n2, actual: row.len() });
            }
            for (p, &v) in row.iter().enumerate() {
                if v >= n2 {
                    return Err(Error::OutOfRange { table: "skeletal-act", index: g * n2 + p, value: v, limit: n2 });
                }
            }
        }
        if self.omega.len() != n1 * n1 * n1 {
            return Err(Error::BadLength {
                table: "skeletal-omega",
                expected: n1 * n1 * n1,
                actual: self.omega.len(),
            });
        }
        for (idx, &v) in self.omega.iter().enumerate() {
            if v >= n2 {
                return Err(Error::OutOfRange { table: "skeletal-omega", index: idx, value: v, limit: n2 });
            }
        }
        let v = self.pi1.validate().and(|| self.pi2.validate()).and(|| {
            if self.pi2.is_abelian() {
                Verdict::pass()
            } else {
                Verdict::fail("skeletal-pi2-abelian", &[])
            }
        });
        if !v.passed {
            return Ok(v);
        }
        // Each act[g] is an automorphism of π₂ …
        for g in 0..n1 {
            let mut seen = vec![false; n2];
            for &v in &self.act[g] {
                seen[v] = true;
            }
            if seen.contains(&false) {
                return Ok(Verdict::fail("skeletal-action-bijective", &[g]));
            }
            for p in 0..n2 {
                for q in 0..n2 {
                    if self.act[g][self.pi2.op(p, q)] != self.pi2.op(self.act[g][p], self.act[g][q]) {
                        return Ok(Verdict::fail("skeletal-action-homomorphic", &[g, p, q]));
                    }
                }
            }
        }
        // … and g ↦ act[g] is a homomorphism from π₁.
        for p in 0..n2 {
            if self.act[0][p] != p {
                return Ok(Verdict::fail("skeletal-action-identity", &[p]));
            }
        }
        for g in 0..n1 {
            for h in 0..n1 {
                for p in 0..n2 {
                    if self.act[self.pi1.op(g, h)][p] != self.act[g][self.act[h][p]] {
                        return Ok(Verdict::fail("skeletal-action-composition", &[g, h, p]));
                    }
                }
            }
        }
        Ok(Verdict::pass())
    }
}

/// The presentation of a skeletal 2-group.  The strict identities always
/// hold; the coherence checker passes exactly when `ω` is a normalized
/// 3-cocycle (the unit diagrams enforce normalization, the pentagon the
/// cocycle identity).
pub fn from_skeletal(sk: &Skeletal2GroupData) -> Result<StackyGroupoidPresentation, Error> {
    match sk.validate()? {
        v if !v.passed => {
            return Err(Error::Mismatch { what: "skeletal 2-group data (fails its own axioms)" })
        }
        _ => {}
    }
    let (n1, n2) = (sk.pi1.order(), sk.pi2.order());
    let arrow = |g: usize, p: usize| g * n2 + p;

    // G: objects π₁, arrows (g, p) : g → g, vertical composition in π₂.
    let mut src = Vec::with_capacity(n1 * n2);
    let mut inv = Vec::with_capacity(n1 * n2);
    for g in 0..n1 {
        for p in 0..n2 {
            src.push(g);
            inv.push(arrow(g, sk.pi2.inv(p)));
        }
    }
    let tgt = src.clone();
    let unit = (0..n1).map(|g| arrow(g, 0)).collect();
    let mut comp = BTreeMap::new();
    for g in 0..n1 {
        for p in 0..n2 {
            for q in 0..n2 {
                comp.insert((arrow(g, p), arrow(g, q)), arrow(g, sk.pi2.op(p, q)));
            }
        }
    }
    let g = FiniteGroupoid { objects: n1, src, tgt, unit, inv, comp };

    let base = FiniteGroupoid::discrete(1);
    let s = GroupoidFunctor::to_discrete(&g, 1, vec![0; n1]);
    let t = s.clone();
    let u = GroupoidFunctor::from_maps(&base, &g, |_| 0, |_| arrow(0, 0));
    let i = GroupoidFunctor::from_maps(
        &g,
        &g,
        |v| sk.pi1.inv(v),
        |m| {
            let gi = sk.pi1.inv(m / n2);
            arrow(gi, sk.pi2.inv(sk.act[gi][m % n2]))
        },
    );
    StackyGroupoidPresentation::assemble(
        &base,
        &g,
        s,
        t,
        u,
        i,
        |v, w| sk.pi1.op(v, w),
        |m1, m2| {
            let (g1, p) = (m1 / n2, m1 % n2);
            let (g2, q) = (m2 / n2, m2 % n2);
            arrow(sk.pi1.op(g1, g2), sk.pi2.op(p, sk.act[g1][q]))
        },
        |a, b, c| arrow(sk.pi1.op(sk.pi1.op(a, b), c), sk.omega_at(a, b, c)),
        |v| arrow(v, 0),
        |v| arrow(v, 0),
        |_v| arrow(0, 0),
        |v| arrow(0, sk.pi2.inv(sk.omega_at(v, sk.pi1.inv(v), v))),
    )
}
