//! The iso-comma groupoid of a cospan of functors — the fibred product of
//! the discrete model.
//!
//! Given `F : X → Y` and `G : Z → Y`, objects of the comma groupoid are
//! triples `(x, a, z)` with `a : F(x) → G(z)` in `Y`.  An arrow out of
//! `(x, a, z)` is determined by a pair `(b₁ : x → x′, b₂ : z → z′)`: its
//! target carries the conjugated comparison `a′ = G(b₂) ∘ a ∘ F(b₁)⁻¹`, so
//! the usual commuting-square condition holds by construction.

use std::collections::BTreeMap;

use crate::core::functor::GroupoidFunctor;
use crate::core::groupoid::FiniteGroupoid;
use crate::error::Error;

/// The iso-comma groupoid together with its bookkeeping: the triple behind
/// each object, the `(source object, b₁, b₂)` triple behind each arrow, and
/// the two projection functors.
#[derive(Debug, Clone)]
pub struct IsoComma {
    pub groupoid: FiniteGroupoid,
    /// `objects[o] = (x, a, z)` with `a : F(x) → G(z)`.
    pub objects: Vec<(usize, usize, usize)>,
    /// `arrows[m] = (o, b1, b2)` where `o` is the source comma object.
    pub arrows: Vec<(usize, usize, usize)>,
    /// Projection to the domain of `F`.
    pub pr1: GroupoidFunctor,
    /// Projection to the domain of `G`.
    pub pr2: GroupoidFunctor,
    object_index: BTreeMap<(usize, usize, usize), usize>,
    arrow_index: BTreeMap<(usize, usize, usize), usize>,
}

impl IsoComma {
    /// Index of the object `(x, a, z)`.
    pub fn object(&self, x: usize, a: usize, z: usize) -> Option<usize> {
        self.object_index.get(&(x, a, z)).copied()
    }

    /// Index of the arrow `(b1, b2)` out of comma object `o`.
    pub fn arrow(&self, o: usize, b1: usize, b2: usize) -> Option<usize> {
        self.arrow_index.get(&(o, b1, b2)).copied()
    }
}

/// Build the iso-comma groupoid of `F` and `G` (shared codomain required).
pub fn iso_comma(f: &GroupoidFunctor, g: &GroupoidFunctor) -> Result<IsoComma, Error> {
    if f.cod != g.cod {
        return Err(Error::Mismatch { what: "iso-comma codomains" });
    }
    let y = &f.cod;
    let mut objects = Vec::new();
    let mut object_index = BTreeMap::new();
    for x in 0..f.dom.objects {
        for z in 0..g.dom.objects {
            for a in 0..y.arrows() {
                if y.src[a] == f.ob[x] && y.tgt[a] == g.ob[z] {
                    object_index.insert((x, a, z), objects.len());
                    objects.push((x, a, z));
                }
            }
        }
    }
    let mut arrows = Vec::new();
    let mut arrow_index = BTreeMap::new();
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    for (o, &(x, a, z)) in objects.iter().enumerate() {
        for b1 in 0..f.dom.arrows() {
            if f.dom.src[b1] != x {
                continue;
            }
            for b2 in 0..g.dom.arrows() {
                if g.dom.src[b2] != z {
                    continue;
                }
                // Target comparison arrow: a′ = G(b₂) ∘ a ∘ F(b₁)⁻¹.
                let a2 = y.comp_chain(&[g.arr[b2], a, y.inv[f.arr[b1]]]);
                let o2 = object_index[&(f.dom.tgt[b1], a2, g.dom.tgt[b2])];
                arrow_index.insert((o, b1, b2), arrows.len());
                src.push(o);
                tgt.push(o2);
                arrows.push((o, b1, b2));
            }
        }
    }
    let mut unit = vec![0; objects.len()];
    for (o, &(x, _, z)) in objects.iter().enumerate() {
        unit[o] = arrow_index[&(o, f.dom.unit[x], g.dom.unit[z])];
    }
    let mut inv = vec![0; arrows.len()];
    let mut comp = BTreeMap::new();
    for (m, &(o, b1, b2)) in arrows.iter().enumerate() {
        inv[m] = arrow_index[&(tgt[m], f.dom.inv[b1], g.dom.inv[b2])];
        let _ = o;
    }
    for (m, &(_, c1, c2)) in arrows.iter().enumerate() {
        for (n, &(o, b1, b2)) in arrows.iter().enumerate() {
            if src[m] != tgt[n] {
                continue;
            }
            let comp1 = f.dom.comp2(c1, b1);
            let comp2 = g.dom.comp2(c2, b2);
            comp.insert((m, n), arrow_index[&(o, comp1, comp2)]);
        }
    }
    let groupoid = FiniteGroupoid { objects: objects.len(), src, tgt, unit, inv, comp };
    let pr1 = GroupoidFunctor {
        dom: groupoid.clone(),
        cod: f.dom.clone(),
        ob: objects.iter().map(|&(x, _, _)| x).collect(),
        arr: arrows.iter().map(|&(_, b1, _)| b1).collect(),
    };
    let pr2 = GroupoidFunctor {
        dom: groupoid.clone(),
        cod: g.dom.clone(),
        ob: objects.iter().map(|&(_, _, z)| z).collect(),
        arr: arrows.iter().map(|&(_, _, b2)| b2).collect(),
    };
    Ok(IsoComma { groupoid, objects, arrows, pr1, pr2, object_index, arrow_index })
}
