//! Strict fibred products of groupoids over discrete bases.
//!
//! When every leg lands in a discrete groupoid the weak and strict fibred
//! products agree on the nose, so composable-tuple domains (pairs of
//! multipliable arrows, action domains, and their triple versions) are
//! built here as honest sub-products: objects are tuples of factor objects
//! matched along the legs, arrows are tuples of factor arrows.

use std::collections::BTreeMap;

use crate::core::functor::GroupoidFunctor;
use crate::core::groupoid::FiniteGroupoid;
use crate::error::Error;

/// A chained fibred product `A₀ ×_{M₁} A₁ ×_{M₂} … ×_{Mₖ} Aₖ` where each
/// link matches a functor out of the left factor with a functor out of the
/// right factor into a common discrete base.
#[derive(Debug, Clone)]
pub struct FiberedProduct {
    pub groupoid: FiniteGroupoid,
    /// Object tuples, one entry per factor.
    pub objects: Vec<Vec<usize>>,
    /// Arrow tuples, one entry per factor.
    pub arrows: Vec<Vec<usize>>,
    /// Projection functor onto each factor.
    pub projections: Vec<GroupoidFunctor>,
    object_index: BTreeMap<Vec<usize>, usize>,
    arrow_index: BTreeMap<Vec<usize>, usize>,
}

impl FiberedProduct {
    /// Build the chained fibred product.  `links[i] = (l, r)` requires
    /// `l : factorᵢ → M` and `r : factorᵢ₊₁ → M` with `l`, `r` agreeing on
    /// the matched components; the factors are read off the links.
    pub fn new(links: &[(&GroupoidFunctor, &GroupoidFunctor)]) -> Result<FiberedProduct, Error> {
        if links.is_empty() {
            return Err(Error::Mismatch { what: "fibred product needs at least one link" });
        }
        let mut factors: Vec<&FiniteGroupoid> = vec![&links[0].0.dom];
        for (i, (l, r)) in links.iter().enumerate() {
            if l.cod != r.cod {
                return Err(Error::Mismatch { what: "fibred product link codomains" });
            }
            if i > 0 && links[i - 1].1.dom != l.dom {
                return Err(Error::Mismatch { what: "fibred product chain factors" });
            }
            factors.push(&r.dom);
        }
        let k = factors.len();

        // Enumerate matched object tuples in lexicographic order.
        let mut objects: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        enumerate_tuples(&factors, links, &mut stack, &mut objects, true);
        let object_index: BTreeMap<Vec<usize>, usize> =
            objects.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();

        let mut arrows: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        enumerate_tuples(&factors, links, &mut stack, &mut arrows, false);
        let arrow_index: BTreeMap<Vec<usize>, usize> =
            arrows.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();

        let src: Vec<usize> = arrows
            .iter()
            .map(|t| {
                let key: Vec<usize> = t.iter().zip(&factors).map(|(&a, f)| f.src[a]).collect();
                object_index[&key]
            })
            .collect();
        let tgt: Vec<usize> = arrows
            .iter()
            .map(|t| {
                let key: Vec<usize> = t.iter().zip(&factors).map(|(&a, f)| f.tgt[a]).collect();
                object_index[&key]
            })
            .collect();
        let unit: Vec<usize> = objects
            .iter()
            .map(|t| {
                let key: Vec<usize> = t.iter().zip(&factors).map(|(&x, f)| f.unit[x]).collect();
                arrow_index[&key]
            })
            .collect();
        let inv: Vec<usize> = arrows
            .iter()
            .map(|t| {
                let key: Vec<usize> = t.iter().zip(&factors).map(|(&a, f)| f.inv[a]).collect();
                arrow_index[&key]
            })
            .collect();
        // Index arrows by target object so composition enumerates only the
        // composable pairs rather than scanning all of arrows².
        let mut by_tgt: Vec<Vec<usize>> = vec![Vec::new(); objects.len()];
        for (n, &t) in tgt.iter().enumerate() {
            by_tgt[t].push(n);
        }
        let mut comp = BTreeMap::new();
        for (m, tm) in arrows.iter().enumerate() {
            for &n in &by_tgt[src[m]] {
                let key: Vec<usize> = tm
                    .iter()
                    .zip(&arrows[n])
                    .zip(&factors)
                    .map(|((&a, &b), f)| f.comp2(a, b))
                    .collect();
                comp.insert((m, n), arrow_index[&key]);
            }
        }
        let groupoid = FiniteGroupoid { objects: objects.len(), src, tgt, unit, inv, comp };
        let projections = (0..k)
            .map(|i| GroupoidFunctor {
                dom: groupoid.clone(),
                cod: factors[i].clone(),
                ob: objects.iter().map(|t| t[i]).collect(),
                arr: arrows.iter().map(|t| t[i]).collect(),
            })
            .collect();
        Ok(FiberedProduct {
            groupoid,
            objects,
            arrows,
            projections,
            object_index,
            arrow_index,
        })
    }

    /// Index of an object tuple.
    pub fn object(&self, tuple: &[usize]) -> Option<usize> {
        self.object_index.get(tuple).copied()
    }

    /// Index of an arrow tuple.
    pub fn arrow(&self, tuple: &[usize]) -> Option<usize> {
        self.arrow_index.get(tuple).copied()
    }

    /// Index of an object tuple, panicking when absent (internal use where
    /// matching is guaranteed).
    pub fn object2(&self, tuple: &[usize]) -> usize {
        *self
            .object_index
            .get(tuple)
            .unwrap_or_else(|| panic!("tuple {tuple:?} not in fibred product"))
    }

    /// Index of an arrow tuple, panicking when absent.
    pub fn arrow2(&self, tuple: &[usize]) -> usize {
        *self
            .arrow_index
            .get(tuple)
            .unwrap_or_else(|| panic!("arrow tuple {tuple:?} not in fibred product"))
    }
}

/// Depth-first enumeration of matched tuples.  A link `(l, r)` matches on
/// objects when `l₀(x) = r₀(x′)` and on arrows when `l(a) = r(a′)` in the
/// (discrete) base, which for arrows is the same as matching the sources.
fn enumerate_tuples(
    factors: &[&FiniteGroupoid],
    links: &[(&GroupoidFunctor, &GroupoidFunctor)],
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    on_objects: bool,
) {
    let i = stack.len();
    if i == factors.len() {
        out.push(stack.clone());
        return;
    }
    let count = if on_objects { factors[i].objects } else { factors[i].arrows() };
    for v in 0..count {
        if i > 0 {
            let (l, r) = &links[i - 1];
            let matched = if on_objects {
                l.ob[stack[i - 1]] == r.ob[v]
            } else {
                l.arr[stack[i - 1]] == r.arr[v]
            };
            if !matched {
                continue;
            }
        }
        stack.push(v);
        enumerate_tuples(factors, links, stack, out, on_objects);
        stack.pop();
    }
}
