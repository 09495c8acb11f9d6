//! Strictification: a biprincipal bibundle whose left presentation and
//! carrier are representable, with the carrier identified with the arrow
//! space of the left groupoid, determines a strict morphism from the
//! right presentation's underlying groupoid, `F(g) = 1_{t(g)}·g`.

use std::collections::BTreeMap;

use crate::core::{validate_groupoid, FiniteGroupoid, GroupoidFunctor};
use crate::error::Error;
use crate::weakgroupoid::StackyGroupoidPresentation;

use super::bibundle::StackyBibundle;
use super::equivalence::is_biprincipal;

/// The honest groupoid underlying a presentation with trivial 2-cells:
/// objects are the base points, arrows the 1-cells, composition the
/// multiplication on objects.  Fails when the 2-cells are not discrete,
/// and as an internal invariant when the resulting tables violate a
/// groupoid axiom (coherence of the presentation forbids this).
pub(crate) fn underlying_groupoid(
    sg: &StackyGroupoidPresentation,
) -> Result<FiniteGroupoid, Error> {
    if sg.g != FiniteGroupoid::discrete(sg.g.objects) {
        return Err(Error::Mismatch { what: "presentation 2-cells (must be representable)" });
    }
    let mut comp = BTreeMap::new();
    for (p, t) in sg.pairs.objects.iter().enumerate() {
        comp.insert((t[0], t[1]), sg.m.ob[p]);
    }
    let k = FiniteGroupoid {
        objects: sg.base.objects,
        src: sg.s.ob.clone(),
        tgt: sg.t.ob.clone(),
        unit: sg.u.ob.clone(),
        inv: sg.i.ob.clone(),
        comp,
    };
    let v = validate_groupoid(&k)?;
    if let Some(w) = v.witness {
        return Err(Error::InternalInvariant(format!(
            "underlying 1-cell tables are not a groupoid: {w:?}"
        )));
    }
    Ok(k)
}

/// Strictify a biprincipal bibundle whose left presentation, right
/// 2-cells, and carrier are all representable, and whose carrier is the
/// arrow space of the left groupoid `K` acted on by multiplication (the
/// moment maps are `t` and `s` of `K`).  Returns the induced functor
/// `F(g) = 1_{t(g)}·g` from the right groupoid to `K`, after verifying
/// exhaustively that `F` preserves sources, targets, units, and
/// multiplication.
pub fn strictify_if_groupoid(bb: &StackyBibundle) -> Result<GroupoidFunctor, Error> {
    let v = is_biprincipal(bb)?;
    if let Some(w) = v.witness {
        return Err(Error::InvalidAction(w));
    }
    let k = underlying_groupoid(&bb.left.sg)?;
    let x = bb.carrier();
    if *x != FiniteGroupoid::discrete(x.objects) {
        return Err(Error::Mismatch { what: "bibundle carrier (must be representable)" });
    }
    if x.objects != k.arrows()
        || (0..x.objects).any(|p| bb.left.mu.ob[p] != k.tgt[p] || bb.right.mu.ob[p] != k.src[p])
    {
        return Err(Error::Mismatch {
            what: "bibundle carrier (must be the arrow space of the left groupoid)",
        });
    }
    for kappa in 0..k.arrows() {
        for p in 0..x.objects {
            if let Some(c) = k.compose(kappa, p) {
                if bb.left.act_ob(kappa, p) != c {
                    return Err(Error::Mismatch {
                        what: "left action (must be multiplication of the left groupoid)",
                    });
                }
            }
        }
    }
    let k2 = underlying_groupoid(&bb.right.sg)?;
    if k2.objects != k.objects {
        return Err(Error::Mismatch { what: "strictification bases" });
    }

    let sg2 = &bb.right.sg;
    let f_arr: Vec<usize> =
        (0..k2.arrows()).map(|g| bb.right.act_ob(k.unit[sg2.t.ob[g]], g)).collect();
    let bad = |what: &str| Error::InternalInvariant(format!("strictification: {what}"));
    for g in 0..k2.arrows() {
        if k.src[f_arr[g]] != k2.src[g] || k.tgt[f_arr[g]] != k2.tgt[g] {
            return Err(bad("image endpoints disagree"));
        }
    }
    for e in 0..k2.objects {
        if f_arr[k2.unit[e]] != k.unit[e] {
            return Err(bad("units are not preserved"));
        }
    }
    for g in 0..k2.arrows() {
        for h in 0..k2.arrows() {
            if let Some(gh) = k2.compose(g, h) {
                if k.compose(f_arr[g], f_arr[h]) != Some(f_arr[gh]) {
                    return Err(bad("multiplication is not preserved"));
                }
            }
        }
    }
    let f = GroupoidFunctor { dom: k2, cod: k.clone(), ob: (0..k.objects).collect(), arr: f_arr };
    let v = f.validate()?;
    if let Some(w) = v.witness {
        return Err(bad(&format!("functoriality witness {w:?}")));
    }
    Ok(f)
}
