//! Quotienting by a product presentation in stages: the two restricted
//! actions, the induced action on the first-stage quotient, and the
//! comparison functor `(X⫽G₁)⫽G₂ → X⫽(G₁×G₂)`.

use crate::action::{check_action_coherence, WeakAction};
use crate::core::{is_equivalence, GroupoidFunctor, Side, Verdict, Witness};
use crate::error::Error;
use crate::weakgroupoid::ProductPresentation;

use super::prequotient::{prequotient, PrequotientGroupoid};

fn ensure_product_action(wa: &WeakAction, pp: &ProductPresentation) -> Result<(), Error> {
    if wa.side != Side::Right {
        return Err(Error::Mismatch { what: "stage restriction expects a right action" });
    }
    if wa.sg.base != pp.sg.base || wa.sg.g != pp.sg.g || !wa.sg.m.same_as(&pp.sg.m) {
        return Err(Error::Mismatch { what: "action is not over the product presentation" });
    }
    Ok(())
}

/// Restriction of a right action of a product presentation to its first
/// factor: `x·g₁ := x·(g₁, u₂(μ₂(x)))`, with the associator corrected by
/// the left unitor of the second factor and the unitor unchanged.
pub fn restrict_first_factor(
    wa: &WeakAction,
    pp: &ProductPresentation,
) -> Result<WeakAction, Error> {
    ensure_product_action(wa, pp)?;
    let (sg1, sg2) = (&pp.first, &pp.second);
    let mu1 = GroupoidFunctor::from_maps(
        &wa.x,
        &sg1.base,
        |o| pp.base_factors(wa.mu.ob[o]).0,
        |a| pp.base_factors(wa.mu.arr[a]).0,
    );
    WeakAction::assemble(
        sg1,
        &wa.x,
        mu1,
        Side::Right,
        |x, g1| {
            let e2 = pp.base_factors(wa.mu.ob[x]).1;
            wa.act_ob(x, pp.g.object(g1, sg2.u.ob[e2]))
        },
        |b, j1| {
            let e2 = pp.base_factors(wa.mu.arr[b]).1;
            wa.act_arr(b, pp.g.arrow(j1, sg2.u.arr[e2]))
        },
        |x, g1, h1| {
            let u2 = sg2.u.ob[pp.base_factors(wa.mu.ob[x]).1];
            let beta = wa.beta_at(x, pp.g.object(g1, u2), pp.g.object(h1, u2));
            let fix =
                pp.g.arrow(sg1.id2(sg1.mul_ob(g1, h1)), sg2.g.inv[sg2.lambda_at(u2)]);
            wa.x.comp2(beta, wa.act_arr(wa.x.unit[x], fix))
        },
        |x| wa.epsilon_at(x),
    )
}

/// Restriction of a right action of a product presentation to its second
/// factor: `x·g₂ := x·(u₁(μ₁(x)), g₂)`, mirroring the first restriction.
pub fn restrict_second_factor(
    wa: &WeakAction,
    pp: &ProductPresentation,
) -> Result<WeakAction, Error> {
    ensure_product_action(wa, pp)?;
    let (sg1, sg2) = (&pp.first, &pp.second);
    let mu2 = GroupoidFunctor::from_maps(
        &wa.x,
        &sg2.base,
        |o| pp.base_factors(wa.mu.ob[o]).1,
        |a| pp.base_factors(wa.mu.arr[a]).1,
    );
    WeakAction::assemble(
        sg2,
        &wa.x,
        mu2,
        Side::Right,
        |x, g2| {
            let e1 = pp.base_factors(wa.mu.ob[x]).0;
            wa.act_ob(x, pp.g.object(sg1.u.ob[e1], g2))
        },
        |b, j2| {
            let e1 = pp.base_factors(wa.mu.arr[b]).0;
            wa.act_arr(b, pp.g.arrow(sg1.u.arr[e1], j2))
        },
        |x, g2, h2| {
            let u1 = sg1.u.ob[pp.base_factors(wa.mu.ob[x]).0];
            let beta = wa.beta_at(x, pp.g.object(u1, g2), pp.g.object(u1, h2));
            let fix =
                pp.g.arrow(sg1.g.inv[sg1.lambda_at(u1)], sg2.id2(sg2.mul_ob(g2, h2)));
            wa.x.comp2(beta, wa.act_arr(wa.x.unit[x], fix))
        },
        |x| wa.epsilon_at(x),
    )
}

/// The rebracketing cell `ξ₁ : x·(g₁, g₂) → (x·g₂)·g₁` (second factor
/// first, then the first), built from the product associator and the
/// unitors of the factors.
fn xi1(wa: &WeakAction, pp: &ProductPresentation, x: usize, g1: usize, g2: usize) -> usize {
    let (sg1, sg2) = (&pp.first, &pp.second);
    let e1 = pp.base_factors(wa.mu.ob[x]).0;
    let a = pp.g.object(sg1.u.ob[e1], g2);
    let b = pp.g.object(g1, sg2.u.ob[sg2.s.ob[g2]]);
    let beta = wa.beta_at(x, a, b);
    let fix = pp.g.arrow(sg1.lambda_at(g1), sg2.rho_at(g2));
    let shift = wa.act_arr(wa.x.unit[x], fix);
    wa.x.comp2(beta, wa.x.inv[shift])
}

/// The rebracketing cell `ξ₂ : x·(g₁, g₂) → (x·g₁)·g₂` (first factor
/// first), mirroring `ξ₁`.
fn xi2(wa: &WeakAction, pp: &ProductPresentation, x: usize, g1: usize, g2: usize) -> usize {
    let (sg1, sg2) = (&pp.first, &pp.second);
    let e2 = pp.base_factors(wa.mu.ob[x]).1;
    let a = pp.g.object(g1, sg2.u.ob[e2]);
    let b = pp.g.object(sg1.u.ob[sg1.s.ob[g1]], g2);
    let beta = wa.beta_at(x, a, b);
    let fix = pp.g.arrow(sg1.rho_at(g1), sg2.lambda_at(g2));
    let shift = wa.act_arr(wa.x.unit[x], fix);
    wa.x.comp2(beta, wa.x.inv[shift])
}

/// The interchange cell `δ : (x·g₂)·g₁ → (x·g₁)·g₂` between the two
/// restricted actions, `δ = ξ₂ ∘ ξ₁⁻¹`.
pub fn stage_interchange(
    wa: &WeakAction,
    pp: &ProductPresentation,
    x: usize,
    g1: usize,
    g2: usize,
) -> usize {
    wa.x.comp2(xi2(wa, pp, x, g1, g2), wa.x.inv[xi1(wa, pp, x, g1, g2)])
}

/// The first-stage quotient together with the induced action of the
/// second factor on it: on objects `x̄·g₂` is the restricted action, on a
/// class `[g₁, b] : x → x̄` acted on by `j₂ : g₂ → g₂′` the result is
/// `[g₁, (b·j₂) ∘ δ]`, where `b·j₂` lifts `j₂` along the unit of the
/// first factor.  The associator and unitor are the images under the
/// quotient functor of those of the restricted second action.
pub fn induced_action_on_quotient(
    wa: &WeakAction,
    pp: &ProductPresentation,
) -> Result<(PrequotientGroupoid, WeakAction), Error> {
    let wa1 = restrict_first_factor(wa, pp)?;
    let wa2 = restrict_second_factor(wa, pp)?;
    let pq1 = prequotient(&wa1)?;
    let (sg1, sg2) = (&pp.first, &pp.second);
    let y = pq1.carrier.clone();
    let mu_y = GroupoidFunctor::from_maps(
        &y,
        &sg2.base,
        |o| pp.base_factors(wa.mu.ob[o]).1,
        |c| pp.base_factors(wa.mu.ob[pq1.carrier.src[c]]).1,
    );
    let act_arr = |c: usize, j2: usize| -> usize {
        let (x, g1, b) = pq1.classes[c];
        let g2 = sg2.g.src[j2];
        let xbar = wa.x.tgt[b];
        let e1 = pp.base_factors(wa.mu.ob[xbar]).0;
        let lift = pp.g.arrow(sg1.id2(sg1.u.ob[e1]), j2);
        let bj = wa.act_arr(b, lift);
        let cell = wa.x.comp2(bj, stage_interchange(wa, pp, x, g1, g2));
        pq1.class_of(wa2.act_ob(x, g2), g1, cell)
            .expect("induced stage action class must exist")
    };
    let action = WeakAction::assemble(
        sg2,
        &y,
        mu_y,
        Side::Right,
        |x, g2| wa2.act_ob(x, g2),
        act_arr,
        |x, g2, h2| pq1.q.arr[wa2.beta_at(x, g2, h2)],
        |x| pq1.q.arr[wa2.epsilon_at(x)],
    )?;
    Ok((pq1, action))
}

fn prefixed(name: &str, v: Verdict) -> Verdict {
    match v.witness {
        Some(w) => Verdict::from_witness(Witness::new(&format!("{name}-{}", w.axiom), &w.ids)),
        None => v,
    }
}

/// Quotient in stages: restrict a right action of a product presentation
/// to each factor, quotient by the first, act with the second on the
/// result, quotient again, and compare with the quotient by the whole
/// product via `[g₂, [g₁, b]] ↦ [(g₁, g₂), b ∘ ξ₁]`.  The verdict reports
/// the first failing stage coherence, or the equivalence check of the
/// comparison functor; representative-dependence of the comparison and
/// non-functoriality are internal invariant violations.
pub fn quotient_in_stages(
    wa: &WeakAction,
    pp: &ProductPresentation,
) -> Result<Verdict, Error> {
    let wa1 = restrict_first_factor(wa, pp)?;
    let v = check_action_coherence(&wa1)?;
    if !v.passed {
        return Ok(prefixed("stage-one", v));
    }
    let wa2 = restrict_second_factor(wa, pp)?;
    let v = check_action_coherence(&wa2)?;
    if !v.passed {
        return Ok(prefixed("stage-two", v));
    }
    let (pq1, way) = induced_action_on_quotient(wa, pp)?;
    let v = check_action_coherence(&way)?;
    if !v.passed {
        return Ok(prefixed("stage-induced", v));
    }
    let pq_stage = prequotient(&way)?;
    let pq_full = prequotient(wa)?;

    let image = |x: usize, g2: usize, inner: (usize, usize, usize)| -> Result<usize, Error> {
        let (_, g1, b) = inner;
        let cell = wa
            .x
            .compose(b, xi1(wa, pp, x, g1, g2))
            .ok_or_else(|| Error::InternalInvariant("stage comparison composite undefined".into()))?;
        pq_full
            .class_of(x, pp.g.object(g1, g2), cell)
            .ok_or_else(|| Error::InternalInvariant("stage comparison class missing".into()))
    };
    let mut arr = Vec::with_capacity(pq_stage.classes.len());
    for members in &pq_stage.members {
        let mut value: Option<usize> = None;
        for &(x, g2, big) in members {
            for &inner in &pq1.members[big] {
                let c = image(x, g2, inner)?;
                match value {
                    None => value = Some(c),
                    Some(v) if v != c => {
                        return Err(Error::InternalInvariant(
                            "stage comparison depends on the representative".into(),
                        ));
                    }
                    _ => {}
                }
            }
        }
        arr.push(value.ok_or_else(|| {
            Error::InternalInvariant("stage comparison class has no members".into())
        })?);
    }
    let phi = GroupoidFunctor {
        dom: pq_stage.carrier.clone(),
        cod: pq_full.carrier.clone(),
        ob: (0..pq_stage.carrier.objects).collect(),
        arr,
    };
    let v = phi.validate()?;
    if !v.passed {
        return Err(Error::InternalInvariant(format!(
            "stage comparison is not a functor: {:?}",
            v.witness
        )));
    }
    Ok(prefixed("stages-comparison", is_equivalence(&phi)))
}
