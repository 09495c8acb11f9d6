//! The weak fibred product of two functors into a common groupoid, and the
//! comparison with the iso-comma construction.
//!
//! For legs `a : X → H` and `b : G → H`, the weak fibred product has
//! objects `(x₀, h, g₀)` with `h : a(x₀) → b(g₀)` in `H`, and arrows
//! `(x, h, g)` where `x`, `g` are arrows of `X`, `G` and `h` is the
//! comparison at the *source*: `src(h) = a(src x)`, `tgt(h) = b(src g)`.
//! The target of `(x, h, g)` carries the conjugated comparison
//! `b(g) ∘ h ∘ a(x)⁻¹`, and composition is
//! `(x, h, g) ∘ (x′, h′, g′) = (x∘x′, h′, g∘g′)`.

use std::collections::BTreeMap;

use crate::core::comma::iso_comma;
use crate::core::functor::{is_equivalence, GroupoidFunctor};
use crate::core::groupoid::{FiniteGroupoid, Verdict};
use crate::error::Error;

/// The weak fibred product with its bookkeeping and the canonical
/// comparison functor into the iso-comma groupoid of the same legs.
#[derive(Debug, Clone)]
pub struct WeakFiberedProduct {
    pub groupoid: FiniteGroupoid,
    /// `objects[o] = (x0, h, g0)` with `h : a(x0) → b(g0)`.
    pub objects: Vec<(usize, usize, usize)>,
    /// `arrows[m] = (x, h, g)` with `h` the comparison at the source.
    pub arrows: Vec<(usize, usize, usize)>,
    pub pr1: GroupoidFunctor,
    pub pr2: GroupoidFunctor,
    object_index: BTreeMap<(usize, usize, usize), usize>,
    arrow_index: BTreeMap<(usize, usize, usize), usize>,
}

impl WeakFiberedProduct {
    pub fn object(&self, x0: usize, h: usize, g0: usize) -> Option<usize> {
        self.object_index.get(&(x0, h, g0)).copied()
    }

    pub fn arrow(&self, x: usize, h: usize, g: usize) -> Option<usize> {
        self.arrow_index.get(&(x, h, g)).copied()
    }
}

/// Build the weak fibred product of `a : X → H` and `b : G → H`.
pub fn weak_fibred_product(
    a: &GroupoidFunctor,
    b: &GroupoidFunctor,
) -> Result<WeakFiberedProduct, Error> {
    if a.cod != b.cod {
        return Err(Error::Mismatch { what: "weak fibred product codomains" });
    }
    let h_gpd = &a.cod;
    let mut objects = Vec::new();
    let mut object_index = BTreeMap::new();
    for x0 in 0..a.dom.objects {
        for g0 in 0..b.dom.objects {
            for h in 0..h_gpd.arrows() {
                if h_gpd.src[h] == a.ob[x0] && h_gpd.tgt[h] == b.ob[g0] {
                    object_index.insert((x0, h, g0), objects.len());
                    objects.push((x0, h, g0));
                }
            }
        }
    }
    let mut arrows = Vec::new();
    let mut arrow_index = BTreeMap::new();
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    for x in 0..a.dom.arrows() {
        for g in 0..b.dom.arrows() {
            for h in 0..h_gpd.arrows() {
                if h_gpd.src[h] != a.ob[a.dom.src[x]] || h_gpd.tgt[h] != b.ob[b.dom.src[g]] {
                    continue;
                }
                let h_tgt = h_gpd.comp_chain(&[b.arr[g], h, h_gpd.inv[a.arr[x]]]);
                arrow_index.insert((x, h, g), arrows.len());
                src.push(object_index[&(a.dom.src[x], h, b.dom.src[g])]);
                tgt.push(object_index[&(a.dom.tgt[x], h_tgt, b.dom.tgt[g])]);
                arrows.push((x, h, g));
            }
        }
    }
    let unit = objects
        .iter()
        .map(|&(x0, h, g0)| arrow_index[&(a.dom.unit[x0], h, b.dom.unit[g0])])
        .collect();
    let inv: Vec<usize> = arrows
        .iter()
        .enumerate()
        .map(|(m, &(x, _, g))| {
            let (_, h_tgt, _) = objects[tgt[m]];
            arrow_index[&(a.dom.inv[x], h_tgt, b.dom.inv[g])]
        })
        .collect();
    let mut comp = BTreeMap::new();
    for (m, &(x, _, g)) in arrows.iter().enumerate() {
        for (n, &(x2, h2, g2)) in arrows.iter().enumerate() {
            if src[m] != tgt[n] {
                continue;
            }
            comp.insert((m, n), arrow_index[&(a.dom.comp2(x, x2), h2, b.dom.comp2(g, g2))]);
        }
    }
    let groupoid = FiniteGroupoid { objects: objects.len(), src, tgt, unit, inv, comp };
    let pr1 = GroupoidFunctor {
        dom: groupoid.clone(),
        cod: a.dom.clone(),
        ob: objects.iter().map(|&(x0, _, _)| x0).collect(),
        arr: arrows.iter().map(|&(x, _, _)| x).collect(),
    };
    let pr2 = GroupoidFunctor {
        dom: groupoid.clone(),
        cod: b.dom.clone(),
        ob: objects.iter().map(|&(_, _, g0)| g0).collect(),
        arr: arrows.iter().map(|&(_, _, g)| g).collect(),
    };
    Ok(WeakFiberedProduct { groupoid, objects, arrows, pr1, pr2, object_index, arrow_index })
}

/// The canonical comparison functor from the weak fibred product of the
/// legs to their iso-comma groupoid: identity on object triples; an arrow
/// `(x, h, g)` goes to the comma arrow `(b₁, b₂) = (x, g)` out of the comma
/// object behind its source.
pub fn comparison_functor(
    a: &GroupoidFunctor,
    b: &GroupoidFunctor,
) -> Result<GroupoidFunctor, Error> {
    let wfp = weak_fibred_product(a, b)?;
    let comma = iso_comma(a, b)?;
    let ob = wfp
        .objects
        .iter()
        .map(|&(x0, h, g0)| comma.object(x0, h, g0).expect("matching comma object"))
        .collect();
    let arr = wfp
        .arrows
        .iter()
        .map(|&(x, h, g)| {
            let o = comma
                .object(a.dom.src[x], h, b.dom.src[g])
                .expect("matching comma object");
            comma.arrow(o, x, g).expect("matching comma arrow")
        })
        .collect();
    Ok(GroupoidFunctor { dom: wfp.groupoid.clone(), cod: comma.groupoid.clone(), ob, arr })
}

/// Verify that the canonical comparison functor from the weak fibred
/// product to the iso-comma groupoid is an equivalence for the given legs.
pub fn check_weak_pullback_comparison(
    a: &GroupoidFunctor,
    b: &GroupoidFunctor,
) -> Result<Verdict, Error> {
    let f = comparison_functor(a, b)?;
    let structural = f.validate()?;
    Ok(structural.and(|| is_equivalence(&f)))
}
