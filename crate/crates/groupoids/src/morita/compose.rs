//! Composition of Morita equivalences: the middle presentation acts on
//! the fibred product of the two carriers (on the first factor directly,
//! on the second through inverses), the composite carrier is the
//! prequotient of that action, and the two outer actions descend to it.

use std::collections::BTreeMap;

use crate::action::{diagonal_action, invert_action, WeakAction};
use crate::core::{FiberedProduct, FiniteGroupoid, GroupoidFunctor, Side};
use crate::error::Error;
use crate::prequotient::{prequotient, PrequotientGroupoid};

use super::bibundle::{check_bibundle, StackyBibundle};
use super::equivalence::is_biprincipal;

/// Compose two Morita equivalences along their common middle
/// presentation.  Both inputs must be coherent biprincipal bibundles; the
/// result is the quotient bibundle on `(X ×_M Y) ⫽ G_mid`, with the
/// interchange on the quotient reduced to identities (the two descended
/// actions commute strictly on quotient objects).
pub fn compose_bibundles(
    bb1: &StackyBibundle,
    bb2: &StackyBibundle,
) -> Result<StackyBibundle, Error> {
    let mid1 = &bb1.right.sg;
    let mid2 = &bb2.left.sg;
    if mid1.base != mid2.base || mid1.g != mid2.g || !mid1.m.same_as(&mid2.m) {
        return Err(Error::Mismatch { what: "bibundle middle presentation" });
    }
    for bb in [bb1, bb2] {
        let v = check_bibundle(bb)?;
        if let Some(w) = v.witness {
            return Err(Error::InvalidAction(w));
        }
        let v = is_biprincipal(bb)?;
        if let Some(w) = v.witness {
            return Err(Error::InvalidAction(w));
        }
    }

    // Stage one: the middle action on the fibred product of the carriers,
    // `(x, y)·g = (x·g, i(g)·y)`.
    let (w, wmid) = middle_action(bb1, bb2)?;
    // Stage two: the composite carrier is the prequotient.
    let pq = prequotient(&wmid)?;
    // Stages three and four: the outer actions descend to the quotient.
    let left = descend_outer_left(bb1, &w, &pq)?;
    let right = descend_outer_right(bb1, bb2, &w, &pq)?;
    // Stage five: on the quotient the two outer actions commute on the
    // nose, so the interchange is the identity.
    let z_unit = pq.carrier.unit.clone();
    let wob = w.objects.clone();
    let composite = StackyBibundle::new(left, right, |g1, o, g2| {
        let (x0, y0) = (wob[o][0], wob[o][1]);
        z_unit[w.object2(&[bb1.left.act_ob(g1, x0), bb2.right.act_ob(y0, g2)])]
    })?;
    let v = check_bibundle(&composite)?;
    if let Some(wit) = v.witness {
        return Err(Error::InternalInvariant(format!(
            "composite bibundle fails coherence: {wit:?}"
        )));
    }
    Ok(composite)
}

/// The middle action and the tuple bookkeeping of its carrier.
fn middle_action(
    bb1: &StackyBibundle,
    bb2: &StackyBibundle,
) -> Result<(FiberedProduct, WeakAction), Error> {
    let yr = invert_action(&bb2.left)?;
    let w = FiberedProduct::new(&[(&bb1.right.mu, &yr.mu)])?;
    let wmid = diagonal_action(&bb1.right, &yr)?;
    if wmid.x != w.groupoid {
        return Err(Error::InternalInvariant(
            "middle carrier disagrees with its fibred product".into(),
        ));
    }
    Ok((w, wmid))
}

/// Shared plumbing of the two descents: act on a quotient arrow through a
/// representative and check that every representative gives the same
/// class.
fn descended_class(images: impl Iterator<Item = Option<usize>>) -> Result<usize, Error> {
    let mut out: Option<usize> = None;
    for img in images {
        let img = img.ok_or_else(|| {
            Error::InternalInvariant("descended action hit a non-composable cell".into())
        })?;
        match out {
            None => out = Some(img),
            Some(prev) if prev == img => {}
            Some(_) => {
                return Err(Error::InternalInvariant(
                    "descended action depends on the representative".into(),
                ));
            }
        }
    }
    out.ok_or_else(|| Error::InternalInvariant("quotient class with no representative".into()))
}

/// The left action of the first outer presentation on the quotient:
/// `g₁·[x, y] = [g₁·x, y]`, with arrows acted through representatives and
/// a `τ₁`-correction aligning the middle translate.
fn descend_outer_left(
    bb1: &StackyBibundle,
    w: &FiberedProduct,
    pq: &PrequotientGroupoid,
) -> Result<WeakAction, Error> {
    let sg1 = &bb1.left.sg;
    let z = pq.carrier.clone();
    let xg = &bb1.left.x;
    let yg = &bb2_carrier(w);
    let mu_ob: Vec<usize> = w.objects.iter().map(|t| bb1.left.mu.ob[t[0]]).collect();
    let mu = GroupoidFunctor::to_discrete(&z, bb1.left.mu.cod.objects, mu_ob.clone());

    let mut arr_map: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for j1 in 0..sg1.g.arrows() {
        for c in 0..z.arrows() {
            if sg1.s.arr[j1] != mu_ob[z.src[c]] {
                continue;
            }
            let g1 = sg1.g.src[j1];
            let images = pq.members[c].iter().map(|&(o, g, b)| {
                let (x0, y0) = (w.objects[o][0], w.objects[o][1]);
                let (b1, b2) = (w.arrows[b][0], w.arrows[b][1]);
                let cell1 = xg.compose(
                    bb1.left.try_act_arr(j1, b1)?,
                    xg.inv[bb1.try_tau_at(g1, x0, g)?],
                )?;
                let wa = w.arrow(&[cell1, b2])?;
                let xp = w.object(&[bb1.left.act_ob(g1, x0), y0])?;
                pq.class_of(xp, g, wa)
            });
            arr_map.insert((j1, c), descended_class(images)?);
        }
    }

    let wob = w.objects.clone();
    WeakAction::assemble(
        sg1,
        &z,
        mu,
        Side::Left,
        |g1, o| w.object2(&[bb1.left.act_ob(g1, wob[o][0]), wob[o][1]]),
        |j1, c| arr_map[&(j1, c)],
        |g1, g1p, o| {
            let (x0, y0) = (wob[o][0], wob[o][1]);
            pq.q.arr[w.arrow2(&[bb1.left.beta_at(g1, g1p, x0), yg.unit[y0]])]
        },
        |o| {
            let (x0, y0) = (wob[o][0], wob[o][1]);
            pq.q.arr[w.arrow2(&[bb1.left.epsilon_at(x0), yg.unit[y0]])]
        },
    )
}

/// The right action of the second outer presentation on the quotient:
/// `[x, y]·g₂ = [x, y·g₂]`, the mirror of [`descend_outer_left`] with a
/// `τ₂`-correction through the inverted middle translate.
fn descend_outer_right(
    bb1: &StackyBibundle,
    bb2: &StackyBibundle,
    w: &FiberedProduct,
    pq: &PrequotientGroupoid,
) -> Result<WeakAction, Error> {
    let sg2 = &bb2.right.sg;
    let mid = &bb2.left.sg;
    let z = pq.carrier.clone();
    let xg = &bb1.left.x;
    let yg = &bb2.right.x;
    let mu_ob: Vec<usize> = w.objects.iter().map(|t| bb2.right.mu.ob[t[1]]).collect();
    let mu = GroupoidFunctor::to_discrete(&z, bb2.right.mu.cod.objects, mu_ob.clone());

    let mut arr_map: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for c in 0..z.arrows() {
        for j2 in 0..sg2.g.arrows() {
            if mu_ob[z.src[c]] != sg2.t.arr[j2] {
                continue;
            }
            let g2 = sg2.g.src[j2];
            let images = pq.members[c].iter().map(|&(o, g, b)| {
                let (x0, y0) = (w.objects[o][0], w.objects[o][1]);
                let (b1, b2) = (w.arrows[b][0], w.arrows[b][1]);
                let cell2 = yg.compose(
                    bb2.right.try_act_arr(b2, j2)?,
                    bb2.try_tau_at(mid.i.ob[g], y0, g2)?,
                )?;
                let op = w.object(&[x0, bb2.right.act_ob(y0, g2)])?;
                let wa = w.arrow(&[b1, cell2])?;
                pq.class_of(op, g, wa)
            });
            arr_map.insert((c, j2), descended_class(images)?);
        }
    }

    let wob = w.objects.clone();
    WeakAction::assemble(
        sg2,
        &z,
        mu,
        Side::Right,
        |o, g2| w.object2(&[wob[o][0], bb2.right.act_ob(wob[o][1], g2)]),
        |c, j2| arr_map[&(c, j2)],
        |o, g2, g2p| {
            let (x0, y0) = (wob[o][0], wob[o][1]);
            pq.q.arr[w.arrow2(&[xg.unit[x0], bb2.right.beta_at(y0, g2, g2p)])]
        },
        |o| {
            let (x0, y0) = (wob[o][0], wob[o][1]);
            pq.q.arr[w.arrow2(&[xg.unit[x0], bb2.right.epsilon_at(y0)])]
        },
    )
}

/// The second-factor groupoid of the fibred product carrier.
fn bb2_carrier(w: &FiberedProduct) -> FiniteGroupoid {
    w.projections[1].cod.clone()
}
