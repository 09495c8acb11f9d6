//! A finite analogue of prequantization: for an abelian group `K` with a
//! subgroup `H`, the quotient 2-group `[K/H]` (crossed module `H ↪ K`)
//! sits inside a transitive presentation over an `n`-point base as the
//! isotropy at a point, and the source fibre there is a Morita
//! equivalence between the two.  Every circle of the smooth story is
//! replaced by a finite abelian group; only the bookkeeping survives.

use crate::core::{FiniteGroup, FiniteGroupoid, Verdict, Witness};
use crate::error::Error;
use crate::weakgroupoid::{
    from_crossed_module, product_presentation, CrossedModuleData, StackyGroupoidPresentation,
};

use super::bibundle::{check_bibundle, isotropy_bibundle};
use super::equivalence::is_biprincipal;

fn prefixed(name: &str, v: Verdict) -> Verdict {
    match v.witness {
        Some(w) => Verdict::from_witness(Witness::new(&format!("{name}-{}", w.axiom), &w.ids)),
        None => v,
    }
}

/// Run the finite prequantization example for the abelian group `k`, the
/// subgroup given by its element list `h_elems`, and an `n`-point base:
/// build the quotient 2-group `[K/H]`, spread it over the pair groupoid
/// of the base, take the isotropy bibundle at a base point, and report
/// whether the resulting bibundle is a coherent Morita equivalence whose
/// isotropy model matches `[K/H]` in size.
pub fn discrete_prequantization_example(
    k: &FiniteGroup,
    h_elems: &[usize],
    n: usize,
) -> Result<Verdict, Error> {
    if !k.validate().passed {
        return Err(Error::Mismatch { what: "prequantization group table" });
    }
    if n == 0 {
        return Err(Error::Mismatch { what: "prequantization base (must be nonempty)" });
    }
    let mut elems: Vec<usize> = h_elems.to_vec();
    elems.sort_unstable();
    elems.dedup();
    let inside = |v: usize| elems.binary_search(&v).is_ok();
    let closed = !elems.is_empty()
        && elems.iter().all(|&a| a < k.order())
        && inside(0)
        && elems.iter().all(|&a| inside(k.inv(a)))
        && elems.iter().all(|&a| elems.iter().all(|&b| inside(k.op(a, b))));
    if !closed {
        return Err(Error::Mismatch { what: "prequantization subgroup (not closed)" });
    }
    let a = FiniteGroup {
        mul: elems
            .iter()
            .map(|&x| {
                elems
                    .iter()
                    .map(|&y| elems.binary_search(&k.op(x, y)).expect("closed subgroup"))
                    .collect()
            })
            .collect(),
    };
    let cm = CrossedModuleData { a, k: k.clone(), phi: elems.clone() };
    let two_group = from_crossed_module(&cm)?;

    let pairs = StackyGroupoidPresentation::strict(&FiniteGroupoid::pair(n))?;
    let pp = product_presentation(&pairs, &two_group)?;
    let bb = isotropy_bibundle(&pp.sg, pp.base_object(0, 0))?;

    // The isotropy at the base point must reproduce the 2-group: one
    // 1-cell per element of K, one 2-cell per element of K × H.
    let iso = &bb.right.sg;
    if iso.g.objects != two_group.g.objects || iso.g.arrows() != two_group.g.arrows() {
        return Ok(Verdict::fail(
            "prequantization-isotropy-model",
            &[iso.g.objects, iso.g.arrows(), two_group.g.objects, two_group.g.arrows()],
        ));
    }
    let v = check_bibundle(&bb)?;
    if !v.passed {
        return Ok(prefixed("prequantization", v));
    }
    Ok(prefixed("prequantization", is_biprincipal(&bb)?))
}
