//! Strict bibundles between finite groupoids: a set with commuting left
//! and right actions along a pair of moment maps, the bibundle of a
//! groupoid morphism, and equivariant-bijection comparison.

use crate::core::{FiniteGroupoid, GroupoidFunctor, SetAction, Side, Witness};
use crate::error::Error;

use super::principal::{composable_pairs, is_principal_set_bundle};

/// A strict `G`-`H`-bibundle: a finite set `P` with a left `G`-action
/// along `a : P → G₀` and a right `H`-action along `b : P → H₀`, each
/// preserving the other's moment, with the two actions commuting
/// strictly.
#[derive(Debug, Clone)]
pub struct StrictBibundle {
    pub g: FiniteGroupoid,
    pub h: FiniteGroupoid,
    /// Points of the carrier set are `0..points`.
    pub points: usize,
    /// Left moment `a : P → G₀`.
    pub a: Vec<usize>,
    /// Right moment `b : P → H₀`.
    pub b: Vec<usize>,
    pub left: SetAction,
    pub right: SetAction,
}

impl StrictBibundle {
    /// Assemble a bibundle from its two actions, checking sides, carrier
    /// agreement, both sets of action axioms, mutual moment invariance,
    /// and strict commutation.  Violations are structural errors carrying
    /// the failed axiom.
    pub fn new(left: SetAction, right: SetAction) -> Result<Self, Error> {
        if left.side != Side::Left || right.side != Side::Right {
            return Err(Error::Mismatch { what: "bibundle action sides" });
        }
        if left.points != right.points {
            return Err(Error::Mismatch { what: "bibundle carrier sets" });
        }
        for sa in [&left, &right] {
            let v = sa.validate()?;
            if let Some(w) = v.witness {
                return Err(Error::InvalidAction(w));
            }
        }
        for &(z, gamma, y) in &composable_pairs(&left) {
            if right.moment[y] != right.moment[z] {
                return Err(Error::InvalidAction(Witness::new("bibundle-right-moment", &[z, gamma])));
            }
        }
        for &(z, eta, y) in &composable_pairs(&right) {
            if left.moment[y] != left.moment[z] {
                return Err(Error::InvalidAction(Witness::new("bibundle-left-moment", &[z, eta])));
            }
        }
        for &(z, gamma, gz) in &composable_pairs(&left) {
            for eta in 0..right.g.arrows() {
                if let Some(zh) = right.apply(z, eta) {
                    if left.apply(zh, gamma) != right.apply(gz, eta) {
                        return Err(Error::InvalidAction(Witness::new(
                            "bibundle-commute",
                            &[gamma, z, eta],
                        )));
                    }
                }
            }
        }
        Ok(StrictBibundle {
            g: left.g.clone(),
            h: right.g.clone(),
            points: left.points,
            a: left.moment.clone(),
            b: right.moment.clone(),
            left,
            right,
        })
    }
}

/// The bibundle of a groupoid morphism `φ : G → H`: the carrier is
/// `{(g₀, η) | t(η) = φ(g₀)}` with `a(g₀, η) = g₀`, `b(g₀, η) = s(η)`,
/// left action `γ·(g₀, η) = (t(γ), φ(γ)∘η)` and right action
/// `(g₀, η)·η′ = (g₀, η∘η′)`.  The result is verified to be a principal
/// right `H`-bundle over `a`; a failure there is an internal invariant
/// violation.
pub fn bibundle_from_morphism(phi: &GroupoidFunctor) -> Result<StrictBibundle, Error> {
    let v = phi.validate()?;
    if let Some(w) = v.witness {
        return Err(Error::InvalidAction(w));
    }
    let (g, h) = (&phi.dom, &phi.cod);
    let mut carrier = Vec::new();
    let mut index = std::collections::BTreeMap::new();
    for g0 in 0..g.objects {
        for eta in 0..h.arrows() {
            if h.tgt[eta] == phi.ob[g0] {
                index.insert((g0, eta), carrier.len());
                carrier.push((g0, eta));
            }
        }
    }
    let a: Vec<usize> = carrier.iter().map(|&(g0, _)| g0).collect();
    let b: Vec<usize> = carrier.iter().map(|&(_, eta)| h.src[eta]).collect();

    let mut left_act = std::collections::BTreeMap::new();
    for (z, &(g0, eta)) in carrier.iter().enumerate() {
        for gamma in 0..g.arrows() {
            if g.src[gamma] == g0 {
                let image = h
                    .compose(phi.arr[gamma], eta)
                    .ok_or(Error::Mismatch { what: "morphism bibundle left action" })?;
                left_act.insert((z, gamma), index[&(g.tgt[gamma], image)]);
            }
        }
    }
    let left = SetAction {
        g: g.clone(),
        points: carrier.len(),
        moment: a,
        act: left_act,
        side: Side::Left,
    };

    let mut right_act = std::collections::BTreeMap::new();
    for (z, &(g0, eta)) in carrier.iter().enumerate() {
        for eta2 in 0..h.arrows() {
            if h.tgt[eta2] == h.src[eta] {
                let image = h
                    .compose(eta, eta2)
                    .ok_or(Error::Mismatch { what: "morphism bibundle right action" })?;
                right_act.insert((z, eta2), index[&(g0, image)]);
            }
        }
    }
    let right = SetAction {
        g: h.clone(),
        points: carrier.len(),
        moment: b,
        act: right_act,
        side: Side::Right,
    };

    let bb = StrictBibundle::new(left, right)?;
    let principal = is_principal_set_bundle(&bb.right, &bb.a, bb.g.objects)?;
    if !principal.passed {
        return Err(Error::InternalInvariant(format!(
            "morphism bibundle is not right-principal: {:?}",
            principal.witness
        )));
    }
    Ok(bb)
}

/// Does an equivariant bijection between two bibundles exist?  Both must
/// share the same groupoids on each side.  The search is exhaustive over
/// bijections, pruned by the joint moment fibres `(a, b)`.
pub fn are_isomorphic_bibundles(p: &StrictBibundle, q: &StrictBibundle) -> Result<bool, Error> {
    if p.g != q.g || p.h != q.h {
        return Err(Error::Mismatch { what: "bibundle comparison groupoids" });
    }
    if p.points != q.points {
        return Ok(false);
    }
    let mut fibres: std::collections::BTreeMap<(usize, usize), Vec<usize>> = Default::default();
    for w in 0..q.points {
        fibres.entry((q.a[w], q.b[w])).or_default().push(w);
    }
    let equivariant = |map: &[usize]| -> bool {
        composable_pairs(&p.left)
            .iter()
            .all(|&(z, gamma, y)| q.left.apply(map[z], gamma) == Some(map[y]))
            && composable_pairs(&p.right)
                .iter()
                .all(|&(z, eta, y)| q.right.apply(map[z], eta) == Some(map[y]))
    };
    fn search(
        z: usize,
        p: &StrictBibundle,
        fibres: &std::collections::BTreeMap<(usize, usize), Vec<usize>>,
        used: &mut Vec<bool>,
        map: &mut Vec<usize>,
        equivariant: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if z == p.points {
            return equivariant(map);
        }
        let Some(candidates) = fibres.get(&(p.a[z], p.b[z])) else {
            return false;
        };
        for &w in candidates {
            if !used[w] {
                used[w] = true;
                map[z] = w;
                if search(z + 1, p, fibres, used, map, equivariant) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    let mut used = vec![false; q.points];
    let mut map = vec![0usize; p.points];
    Ok(search(0, p, &fibres, &mut used, &mut map, &equivariant))
}
