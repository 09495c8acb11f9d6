//! The universal property of the prequotient: the induced map out of a
//! fibre-transport structure, and the functor on prequotients induced by
//! an equivariant morphism.

use crate::action::{
    check_action_on_fibers, check_equivariant, EquivariantMorphism, FiberedAction,
};
use crate::core::GroupoidFunctor;
use crate::error::Error;

use super::prequotient::{prequotient, PrequotientGroupoid};

/// The universal map `Φ : X⫽G → S` induced by an action on the fibres of
/// `P : X → S`: `Φ[g, b] = P(b) ∘ γ_{x,g}`, with `Φ ∘ q = P` strictly.
/// Failures of the theorem-backed identities (functoriality of `Φ`, the
/// strict factorization, the transport square) are internal invariant
/// violations, not verdicts.
pub fn universal_map(
    pq: &PrequotientGroupoid,
    fa: &FiberedAction,
) -> Result<GroupoidFunctor, Error> {
    if fa.action.x != pq.action.x
        || !fa.action.act.same_as(&pq.action.act)
        || !fa.action.mu.same_as(&pq.action.mu)
    {
        return Err(Error::Mismatch { what: "fibre transport is for a different action" });
    }
    let v = check_action_on_fibers(fa)?;
    if let Some(w) = v.witness {
        return Err(Error::InvalidAction(w));
    }
    let s = &fa.p.cod;
    let mut arr = Vec::with_capacity(pq.classes.len());
    for &(x, g, b) in &pq.classes {
        let value = s
            .compose(fa.p.arr[b], fa.gamma_at(x, g))
            .ok_or_else(|| Error::InternalInvariant("universal map composite undefined".into()))?;
        arr.push(value);
    }
    let phi = GroupoidFunctor {
        dom: pq.carrier.clone(),
        cod: s.clone(),
        ob: fa.p.ob.clone(),
        arr,
    };
    let v = phi.validate()?;
    if !v.passed {
        return Err(Error::InternalInvariant(format!(
            "universal map is not a functor: {:?}",
            v.witness
        )));
    }
    if !pq.q.then(&phi)?.same_as(&fa.p) {
        return Err(Error::InternalInvariant(
            "universal map does not factor the projection".into(),
        ));
    }
    for t in &pq.action.pairs.objects {
        let (x, g) = (t[0], t[1]);
        if phi.arr[pq.gamma0(x, g)] != fa.gamma_at(x, g) {
            return Err(Error::InternalInvariant(
                "universal map does not match the fibre transport".into(),
            ));
        }
    }
    Ok(phi)
}

/// The functor `X₁⫽G → X₂⫽G` induced by an equivariant morphism:
/// `x ↦ F(x)` and `[g, b] ↦ [g, F(b) ∘ δ_{x,g}]`.  Returns both
/// prequotients along with the functor.  Representative-independence of
/// the formula is re-verified on every member.
pub fn induced_on_quotients(
    em: &EquivariantMorphism,
) -> Result<(PrequotientGroupoid, PrequotientGroupoid, GroupoidFunctor), Error> {
    let v = check_equivariant(em)?;
    if let Some(w) = v.witness {
        return Err(Error::InvalidAction(w));
    }
    let pq1 = prequotient(&em.src)?;
    let pq2 = prequotient(&em.dst)?;
    let image = |&(x, g, b): &(usize, usize, usize)| -> Result<usize, Error> {
        let cell = em
            .dst
            .x
            .compose(em.f.arr[b], em.delta_at(x, g))
            .ok_or_else(|| Error::InternalInvariant("induced functor composite undefined".into()))?;
        pq2.class_of(em.f.ob[x], g, cell)
            .ok_or_else(|| Error::InternalInvariant("induced functor class missing".into()))
    };
    let mut arr = Vec::with_capacity(pq1.classes.len());
    for (c, rep) in pq1.classes.iter().enumerate() {
        let value = image(rep)?;
        for member in &pq1.members[c] {
            if image(member)? != value {
                return Err(Error::InternalInvariant(
                    "induced functor depends on the representative".into(),
                ));
            }
        }
        arr.push(value);
    }
    let phi = GroupoidFunctor {
        dom: pq1.carrier.clone(),
        cod: pq2.carrier.clone(),
        ob: em.f.ob.clone(),
        arr,
    };
    let v = phi.validate()?;
    if !v.passed {
        return Err(Error::InternalInvariant(format!(
            "induced functor is not a functor: {:?}",
            v.witness
        )));
    }
    Ok((pq1, pq2, phi))
}
