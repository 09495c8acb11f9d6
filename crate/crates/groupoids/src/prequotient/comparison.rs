//! The comparison functor `Q : X×_M G → (q ⇓≅ q)` between the action
//! pairs and the iso-comma groupoid of the quotient projection with
//! itself, and the principality check that runs the characterization
//! theorem from both ends.

use crate::action::{action_projection, is_1free, WeakAction};
use crate::core::{
    is_equivalence, is_essentially_surjective, is_weakly_representable, iso_comma,
    GroupoidFunctor, Verdict,
};
use crate::error::Error;

use super::prequotient::{canonical_gamma0, prequotient, PrequotientGroupoid};

/// The comparison functor `Q` sending `(x, g) ↦ (x, γ₀(x, g), x·g)` into
/// the iso-comma groupoid of `q` with itself, and `(b, j) ↦ (b, b·j)`.
pub fn action_proj_comparison(pq: &PrequotientGroupoid) -> Result<GroupoidFunctor, Error> {
    let wa = &pq.action;
    let ic = iso_comma(&pq.q, &pq.q)?;
    let bad = || Error::InternalInvariant("comparison functor lands outside the comma".into());
    let mut ob = Vec::with_capacity(wa.pairs.objects.len());
    for t in &wa.pairs.objects {
        let (x, g) = (t[0], t[1]);
        ob.push(ic.object(x, pq.gamma0(x, g), wa.act_ob(x, g)).ok_or_else(bad)?);
    }
    let mut arr = Vec::with_capacity(wa.pairs.arrows.len());
    for (a, t) in wa.pairs.arrows.iter().enumerate() {
        let (b, j) = (t[0], t[1]);
        let o = ob[wa.pairs.groupoid.src[a]];
        arr.push(ic.arrow(o, b, wa.act_arr(b, j)).ok_or_else(bad)?);
    }
    let q = GroupoidFunctor { dom: wa.pairs.groupoid.clone(), cod: ic.groupoid, ob, arr };
    let v = q.validate()?;
    if !v.passed {
        return Err(Error::InternalInvariant(format!(
            "comparison is not a functor: {:?}",
            v.witness
        )));
    }
    Ok(q)
}

fn prefixed(name: &str, v: Verdict) -> Verdict {
    match v.witness {
        Some(w) => Verdict::from_witness(crate::core::Witness::new(
            &format!("{name}-{}", w.axiom),
            &w.ids,
        )),
        None => v,
    }
}

/// Principality of a weak right action over its own quotient, decided two
/// independent ways: by the definition (quotient projection essentially
/// surjective, tautological fibre transport valid, comparison functor `Q`
/// an equivalence) and by weak representability of the action projection
/// `Δ`.  The two verdicts must agree; a disagreement is an internal
/// invariant violation, never a returned verdict.
pub fn check_principal(wa: &WeakAction) -> Result<Verdict, Error> {
    let delta = action_projection(wa)?;
    let representable = is_weakly_representable(&delta)?;

    let pq = prequotient(wa)?;
    let direct = is_essentially_surjective(&pq.q)
        .and(|| match canonical_gamma0(&pq) {
            Ok(fa) => match crate::action::check_action_on_fibers(&fa) {
                Ok(v) => prefixed("principal", v),
                Err(_) => Verdict::fail("principal-fibre-transport", &[]),
            },
            Err(_) => Verdict::fail("principal-fibre-transport", &[]),
        })
        .and(|| match action_proj_comparison(&pq) {
            Ok(q) => prefixed("principal-comparison", is_equivalence(&q)),
            Err(_) => Verdict::fail("principal-comparison", &[]),
        });

    if direct.passed != representable.passed {
        return Err(Error::InternalInvariant(format!(
            "principality characterization disagreement: direct {:?} vs representable {:?} \
             (1-free: {})",
            direct.witness,
            representable.witness,
            is_1free(wa).passed
        )));
    }
    Ok(direct)
}
