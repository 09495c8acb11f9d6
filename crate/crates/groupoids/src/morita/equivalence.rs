//! Biprincipality and the flip of a bibundle: a bibundle is a Morita
//! equivalence exactly when both actions are principal over the opposite
//! moment map, and a Morita equivalence can be read backwards by acting
//! through inverses.

use crate::action::invert_action;
use crate::core::{is_equivalence, GroupoidFunctor, Verdict, Witness};
use crate::error::Error;
use crate::prequotient::{check_principal, prequotient};

use super::bibundle::{check_bibundle, StackyBibundle};

fn prefixed(name: &str, v: Verdict) -> Verdict {
    match v.witness {
        Some(w) => Verdict::from_witness(Witness::new(&format!("{name}-{}", w.axiom), &w.ids)),
        None => v,
    }
}

/// Whether both actions of the bibundle are principal bundles over the
/// opposite moment maps, i.e. whether the bibundle is a Morita
/// equivalence.  Each side is decided by [`check_principal`] on the
/// (inverted, for the left side) action followed by a comparison of the
/// quotient with the opposite base; a failing witness is prefixed with
/// the side that broke.
pub fn is_biprincipal(bb: &StackyBibundle) -> Result<Verdict, Error> {
    // Left side: the carrier is a principal left bundle over `mu2`.
    let wl = invert_action(&bb.left)?;
    let v = prefixed("left", check_principal(&wl)?);
    if !v.passed {
        return Ok(v);
    }
    let pq1 = prequotient(&wl)?;
    let to_m2 = GroupoidFunctor::to_discrete(
        &pq1.carrier,
        bb.right.mu.cod.objects,
        bb.right.mu.ob.clone(),
    );
    let v = to_m2.validate()?.and(|| is_equivalence(&to_m2));
    let v = prefixed("left-base", v);
    if !v.passed {
        return Ok(v);
    }

    // Right side: the carrier is a principal right bundle over `mu1`.
    let v = prefixed("right", check_principal(&bb.right)?);
    if !v.passed {
        return Ok(v);
    }
    let pq2 = prequotient(&bb.right)?;
    let to_m1 = GroupoidFunctor::to_discrete(
        &pq2.carrier,
        bb.left.mu.cod.objects,
        bb.left.mu.ob.clone(),
    );
    let v = to_m1.validate()?.and(|| is_equivalence(&to_m1));
    Ok(prefixed("right-base", v))
}

/// Reverse a Morita equivalence: both actions are inverted (so the second
/// presentation now acts on the left and the first on the right) and the
/// interchange is transported through the inverses,
/// `τ̄(g₂, x, g₁) = τ(i(g₁), x, i(g₂))⁻¹`.  The input must be
/// biprincipal; the reversed bibundle is re-checked before it is
/// returned.
pub fn flip_bibundle(bb: &StackyBibundle) -> Result<StackyBibundle, Error> {
    let v = is_biprincipal(bb)?;
    if let Some(w) = v.witness {
        return Err(Error::InvalidAction(w));
    }
    let new_left = invert_action(&bb.right)?;
    let new_right = invert_action(&bb.left)?;
    let i1 = bb.left.sg.i.ob.clone();
    let i2 = bb.right.sg.i.ob.clone();
    let x_inv = bb.carrier().inv.clone();
    let flipped = StackyBibundle::new(new_left, new_right, |g2, x, g1| {
        x_inv[bb.tau_at(i1[g1], x, i2[g2])]
    })?;
    let v = check_bibundle(&flipped)?;
    if let Some(w) = v.witness {
        return Err(Error::InternalInvariant(format!(
            "flipped bibundle fails coherence: {w:?}"
        )));
    }
    Ok(flipped)
}
