//! Tensor product of strict bibundles: the orbit set of the fibred
//! product of the carriers under the middle action `(z, w)·η =
//! (z·η, η⁻¹·w)`.

use std::collections::BTreeMap;

use crate::core::{SetAction, Side};
use crate::error::Error;

use super::bibundle::StrictBibundle;
use super::principal::is_principal_set_bundle;

fn find(parent: &mut Vec<usize>, i: usize) -> usize {
    if parent[i] != i {
        let r = find(parent, parent[i]);
        parent[i] = r;
    }
    parent[i]
}

/// Tensor of a `G`-`H`-bibundle with an `H`-`K`-bibundle: the carrier is
/// the set of orbits of `{(z, w) | b_P(z) = a_Q(w)}` under the middle
/// `H`-action, with the outer actions acting on either leg.  Orbit
/// representatives are the least pairs.  The first factor must be
/// right-principal over its left moment, which makes the induced actions
/// representative-independent; residual dependence is an internal
/// invariant violation.
pub fn tensor_bibundles(p: &StrictBibundle, q: &StrictBibundle) -> Result<StrictBibundle, Error> {
    if p.h != q.g {
        return Err(Error::Mismatch { what: "tensor middle groupoid" });
    }
    let principal = is_principal_set_bundle(&p.right, &p.a, p.g.objects)?;
    if let Some(w) = principal.witness {
        return Err(Error::InvalidAction(w));
    }

    let mut pairs = Vec::new();
    let mut pair_index = BTreeMap::new();
    for z in 0..p.points {
        for w in 0..q.points {
            if p.b[z] == q.a[w] {
                pair_index.insert((z, w), pairs.len());
                pairs.push((z, w));
            }
        }
    }
    let mut parent: Vec<usize> = (0..pairs.len()).collect();
    for (i, &(z, w)) in pairs.iter().enumerate() {
        for eta in 0..p.h.arrows() {
            let (Some(zh), Some(hw)) = (p.right.apply(z, eta), q.left.apply(w, p.h.inv[eta]))
            else {
                continue;
            };
            let j = pair_index[&(zh, hw)];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut members: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut class_of = vec![0usize; pairs.len()];
    let mut root_to_class = BTreeMap::new();
    for (i, &pr) in pairs.iter().enumerate() {
        let root = find(&mut parent, i);
        let c = *root_to_class.entry(root).or_insert_with(|| {
            classes.push(pairs[root]);
            members.push(Vec::new());
            classes.len() - 1
        });
        class_of[i] = c;
        members[c].push(pr);
    }

    let image = |z: usize, w: usize| -> usize { class_of[pair_index[&(z, w)]] };
    let dependent = || Error::InternalInvariant("tensor action depends on the representative".into());

    let mut left_act = BTreeMap::new();
    let a_moment: Vec<usize> = classes.iter().map(|&(z, _)| p.a[z]).collect();
    for (c, ms) in members.iter().enumerate() {
        for gamma in 0..p.g.arrows() {
            if p.g.src[gamma] != a_moment[c] {
                continue;
            }
            let mut value = None;
            for &(z, w) in ms {
                let gz = p.left.apply(z, gamma).ok_or_else(dependent)?;
                let target = image(gz, w);
                match value {
                    None => value = Some(target),
                    Some(v) if v != target => return Err(dependent()),
                    _ => {}
                }
            }
            left_act.insert((c, gamma), value.ok_or_else(dependent)?);
        }
    }
    let left = SetAction {
        g: p.g.clone(),
        points: classes.len(),
        moment: a_moment,
        act: left_act,
        side: Side::Left,
    };

    let mut right_act = BTreeMap::new();
    let b_moment: Vec<usize> = classes.iter().map(|&(_, w)| q.b[w]).collect();
    for (c, ms) in members.iter().enumerate() {
        for kappa in 0..q.h.arrows() {
            if q.h.tgt[kappa] != b_moment[c] {
                continue;
            }
            let mut value = None;
            for &(z, w) in ms {
                let wk = q.right.apply(w, kappa).ok_or_else(dependent)?;
                let target = image(z, wk);
                match value {
                    None => value = Some(target),
                    Some(v) if v != target => return Err(dependent()),
                    _ => {}
                }
            }
            right_act.insert((c, kappa), value.ok_or_else(dependent)?);
        }
    }
    let right = SetAction {
        g: q.h.clone(),
        points: classes.len(),
        moment: b_moment,
        act: right_act,
        side: Side::Right,
    };

    StrictBibundle::new(left, right)
}
