//! Principality of a strict set-level action over a projection: the
//! projection must be surjective and the division map `(z, γ) ↦ (z, z·γ)`
//! a bijection onto the fibred square.

use std::collections::BTreeMap;

use crate::core::{SetAction, Verdict, Witness};
use crate::error::Error;

/// Enumerate the composable pairs of a strict action in `(point, arrow)`
/// order, together with the acted result.
pub(crate) fn composable_pairs(sa: &SetAction) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for x in 0..sa.points {
        for gamma in 0..sa.g.arrows() {
            if let Some(y) = sa.apply(x, gamma) {
                out.push((x, gamma, y));
            }
        }
    }
    out
}

/// Validate the action, its compatibility with the projection `r`, and
/// the ranges of `r` itself; shared by the principality check and the
/// gauge construction.
pub(crate) fn check_bundle_data(
    sa: &SetAction,
    r: &[usize],
    base: usize,
) -> Result<(), Error> {
    let v = sa.validate()?;
    if let Some(w) = v.witness {
        return Err(Error::InvalidAction(w));
    }
    if r.len() != sa.points {
        return Err(Error::BadLength { table: "projection", expected: sa.points, actual: r.len() });
    }
    for (i, &v) in r.iter().enumerate() {
        if v >= base {
            return Err(Error::OutOfRange { table: "projection", index: i, value: v, limit: base });
        }
    }
    for &(x, gamma, y) in &composable_pairs(sa) {
        if r[y] != r[x] {
            return Err(Error::InvalidAction(Witness::new("bundle-fibre-invariance", &[x, gamma])));
        }
    }
    Ok(())
}

/// Is the action a principal bundle over `r : X → base`?  The projection
/// must be surjective and the division map `(z, γ) ↦ (z, z·γ)` (or its
/// left-sided mirror) a bijection onto `{(z, w) | r(z) = r(w)}`.  The
/// action must already preserve the fibres of `r`; a violation is a
/// structural error, not a verdict.
pub fn is_principal_set_bundle(
    sa: &SetAction,
    r: &[usize],
    base: usize,
) -> Result<Verdict, Error> {
    check_bundle_data(sa, r, base)?;
    let mut hit = vec![false; base];
    for &s in r {
        hit[s] = true;
    }
    if let Some(s) = hit.iter().position(|&h| !h) {
        return Ok(Verdict::fail("principal-surjective", &[s]));
    }
    let mut division: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for &(x, gamma, y) in &composable_pairs(sa) {
        let image = (x, y);
        if let Some(&(x0, g0)) = division.get(&image) {
            return Ok(Verdict::fail("principal-injective", &[x0, g0, x, gamma]));
        }
        division.insert(image, (x, gamma));
    }
    for z in 0..sa.points {
        for w in 0..sa.points {
            if r[z] == r[w] && !division.contains_key(&(z, w)) {
                return Ok(Verdict::fail("principal-division", &[z, w]));
            }
        }
    }
    Ok(Verdict::pass())
}
