//! Derived inversion 2-isomorphisms of a coherent presentation.
//!
//! For every composable pair of objects `(g, h)` there is a unique 2-cell
//! `θ_{g,h} : i(g·h) → i(h)·i(g)` compatible with the left inversor, and
//! for every base point a 2-cell `χ_e : i(u(e)) → u(e)`.  Both are found
//! here by exhaustive search over the relevant hom-set; an empty search is
//! a [`Error::DerivationFailed`], and finding more than one candidate — a
//! violation of the uniqueness that coherence guarantees — is always
//! reported as [`Error::AmbiguousDerivation`], never silently resolved.

use crate::core::{Verdict, Witness};
use crate::error::Error;
use crate::weakgroupoid::presentation::StackyGroupoidPresentation;

/// Does a candidate 2-cell `θ : i(g·h) → i(h)·i(g)` satisfy the defining
/// equation against the left inversor?  `false` when the endpoints are
/// wrong or some whiskering fails to compose.
pub fn theta_defining_equation(
    sg: &StackyGroupoidPresentation,
    g: usize,
    h: usize,
    theta: usize,
) -> bool {
    let Some(pair) = sg.pairs.object(&[g, h]) else { return false };
    let gh = sg.m.ob[pair];
    let (ig, ih, igh) = (sg.i.ob[g], sg.i.ob[h], sg.i.ob[gh]);
    let expected_src = igh;
    let Some(cod_pair) = sg.pairs.object(&[ih, ig]) else { return false };
    let expected_tgt = sg.m.ob[cod_pair];
    if sg.g.src[theta] != expected_src || sg.g.tgt[theta] != expected_tgt {
        return false;
    }
    let rhs = (|| {
        sg.vcomp(&[
            sg.iota_l_at(h),
            sg.try_mul_arr(sg.rho_at(ih), sg.id2(h))?,
            sg.try_mul_arr(sg.try_mul_arr(sg.id2(ih), sg.iota_l_at(g))?, sg.id2(h))?,
            sg.g.inv[sg.try_mul_arr(sg.try_alpha_at(ih, ig, g)?, sg.id2(h))?],
            sg.try_mul_arr(sg.try_mul_arr(theta, sg.id2(g))?, sg.id2(h))?,
            sg.try_alpha_at(igh, g, h)?,
        ])
    })();
    rhs == Some(sg.iota_l_at(gh))
}

/// The unique compatible 2-cell `θ_{g,h}`, by exhaustive search.
pub fn derive_theta(
    sg: &StackyGroupoidPresentation,
    g: usize,
    h: usize,
) -> Result<usize, Error> {
    let Some(pair) = sg.pairs.object(&[g, h]) else {
        return Err(Error::Mismatch { what: "non-composable pair in inversion derivation" });
    };
    let gh = sg.m.ob[pair];
    let dom = sg.i.ob[gh];
    let cod = sg.mul_ob(sg.i.ob[h], sg.i.ob[g]);
    let found: Vec<usize> = sg
        .g
        .hom(dom, cod)
        .into_iter()
        .filter(|&c| theta_defining_equation(sg, g, h, c))
        .collect();
    match found.as_slice() {
        [] => Err(Error::DerivationFailed { what: "inversion comparison theta" }),
        [one] => Ok(*one),
        _ => Err(Error::AmbiguousDerivation { what: "inversion comparison theta" }),
    }
}

/// `θ` at every composable pair, indexed like the objects of `sg.pairs`.
pub fn derive_theta_all(sg: &StackyGroupoidPresentation) -> Result<Vec<usize>, Error> {
    sg.pairs
        .objects
        .iter()
        .map(|p| derive_theta(sg, p[0], p[1]))
        .collect()
}

/// `χ_e : i(u(e)) → u(e)` at every base point: the left inversor of the
/// unit composed with the inverted right unitor.
pub fn derive_chi(sg: &StackyGroupoidPresentation) -> Result<Vec<usize>, Error> {
    (0..sg.base.objects)
        .map(|e| {
            let one = sg.u.ob[e];
            let ione = sg.i.ob[one];
            sg.g
                .compose(sg.iota_l_at(one), sg.g.inv[sg.rho_at(ione)])
                .ok_or(Error::DerivationFailed { what: "unit inversion comparison chi" })
        })
        .collect()
}

/// Verify, for explicitly supplied `θ` (indexed by composable pairs) and
/// `χ` (indexed by base points): the defining equation of every `θ`
/// component, the hexagon relating `θ` to the associator, and the two
/// squares relating `θ` to `χ` and the unitors.
pub fn check_theta_diagrams(
    sg: &StackyGroupoidPresentation,
    theta: &[usize],
    chi: &[usize],
) -> Result<Verdict, Error> {
    if theta.len() != sg.pairs.objects.len() {
        return Err(Error::BadLength {
            table: "theta",
            expected: sg.pairs.objects.len(),
            actual: theta.len(),
        });
    }
    if chi.len() != sg.base.objects {
        return Err(Error::BadLength {
            table: "chi",
            expected: sg.base.objects,
            actual: chi.len(),
        });
    }
    let th = |g: usize, h: usize| sg.pairs.object(&[g, h]).map(|o| theta[o]);

    // Every supplied component must satisfy the defining equation.
    for (o, p) in sg.pairs.objects.iter().enumerate() {
        if !theta_defining_equation(sg, p[0], p[1], theta[o]) {
            return Ok(Verdict::from_witness(Witness::new("inversion-defining", &[p[0], p[1]])));
        }
    }

    // Hexagon over composable triples (g, h, l).
    for (o, tr) in sg.triples.objects.iter().enumerate() {
        let (g, h, l) = (tr[0], tr[1], tr[2]);
        let holds = (|| {
            let (ig, ih, il) = (sg.i.ob[g], sg.i.ob[h], sg.i.ob[l]);
            let lhs = sg.vcomp(&[
                sg.try_mul_arr(th(h, l)?, sg.id2(ig))?,
                th(g, sg.mul_ob(h, l))?,
            ])?;
            let rhs = sg.vcomp(&[
                sg.try_alpha_at(il, ih, ig)?,
                sg.try_mul_arr(sg.id2(il), th(g, h)?)?,
                th(sg.mul_ob(g, h), l)?,
                sg.i.arr[sg.alpha.component[o]],
            ])?;
            Some(lhs == rhs)
        })();
        if holds != Some(true) {
            return Ok(Verdict::from_witness(Witness::new("inversion-hexagon", &[g, h, l])));
        }
    }

    // Squares against the unitors, over single objects.
    for v in 0..sg.g.objects {
        let iv = sg.i.ob[v];
        let left = (|| {
            let e = sg.t.ob[v];
            let one = sg.u.ob[e];
            let lhs = sg.vcomp(&[
                sg.rho_at(iv),
                sg.try_mul_arr(sg.id2(iv), chi[e])?,
                th(one, v)?,
            ])?;
            Some(lhs == sg.i.arr[sg.lambda_at(v)])
        })();
        if left != Some(true) {
            return Ok(Verdict::from_witness(Witness::new("inversion-left-square", &[v])));
        }
        let right = (|| {
            let e = sg.s.ob[v];
            let one = sg.u.ob[e];
            let lhs = sg.vcomp(&[
                sg.lambda_at(iv),
                sg.try_mul_arr(chi[e], sg.id2(iv))?,
                th(v, one)?,
            ])?;
            Some(lhs == sg.i.arr[sg.rho_at(v)])
        })();
        if right != Some(true) {
            return Ok(Verdict::from_witness(Witness::new("inversion-right-square", &[v])));
        }
    }
    Ok(Verdict::pass())
}

/// Derive `θ` and `χ` and verify every coherence they are guaranteed to
/// satisfy; a failure here on coherent input indicates a derivation bug.
pub fn check_inversion_coherence(sg: &StackyGroupoidPresentation) -> Result<Verdict, Error> {
    let theta = derive_theta_all(sg)?;
    let chi = derive_chi(sg)?;
    check_theta_diagrams(sg, &theta, &chi)
}
