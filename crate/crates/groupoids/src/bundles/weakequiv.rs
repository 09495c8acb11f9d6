//! Weak equivalences of finite groupoids, in the bundle-theoretic
//! formulation: surjectivity of `s ∘ pr₂` on the comma carrier and
//! cartesianness of the `(s, t)` square.

use std::collections::BTreeMap;

use crate::core::{GroupoidFunctor, Verdict};
use crate::error::Error;

/// Is `φ : G → H` a weak equivalence?  Two conditions are enumerated:
/// every object of `H` receives an arrow from the image of `φ`
/// (surjectivity of `s ∘ pr₂` on `{(g₀, η) | t(η) = φ(g₀)}`), and the
/// canonical map `γ ↦ (s(γ), t(γ), φ(γ))` is a bijection of `G₁` onto
/// `{(x, y, η) | η : φ(x) → φ(y)}` (the `(s, t)` square is cartesian).
pub fn is_weak_equivalence(phi: &GroupoidFunctor) -> Result<Verdict, Error> {
    let v = phi.validate()?;
    if let Some(w) = v.witness {
        return Err(Error::InvalidAction(w));
    }
    let (g, h) = (&phi.dom, &phi.cod);
    let mut hit = vec![false; h.objects];
    for eta in 0..h.arrows() {
        if (0..g.objects).any(|g0| h.tgt[eta] == phi.ob[g0]) {
            hit[h.src[eta]] = true;
        }
    }
    if let Some(y) = hit.iter().position(|&r| !r) {
        return Ok(Verdict::fail("weak-equivalence-surjective", &[y]));
    }
    let mut canonical: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for gamma in 0..g.arrows() {
        let key = (g.src[gamma], g.tgt[gamma], phi.arr[gamma]);
        if let Some(&other) = canonical.get(&key) {
            return Ok(Verdict::fail("weak-equivalence-cartesian", &[other, gamma]));
        }
        canonical.insert(key, gamma);
    }
    for x in 0..g.objects {
        for y in 0..g.objects {
            for eta in 0..h.arrows() {
                if h.src[eta] == phi.ob[x]
                    && h.tgt[eta] == phi.ob[y]
                    && !canonical.contains_key(&(x, y, eta))
                {
                    return Ok(Verdict::fail("weak-equivalence-cartesian", &[x, y, eta]));
                }
            }
        }
    }
    Ok(Verdict::pass())
}
