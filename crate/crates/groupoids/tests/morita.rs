//! Tests for Morita theory: bibundle coherence, biprincipality as an
//! equivalence relation (identity, flip, composition), isotropy
//! bibundles, strictification, and the finite prequantization example.

use groupoids::action::*;
use groupoids::bundles::*;
use groupoids::core::*;
use groupoids::morita::*;
use groupoids::weakgroupoid::*;
use groupoids::Error;

fn z(n: usize) -> FiniteGroup {
    FiniteGroup::cyclic(n)
}

fn crossed(a: FiniteGroup, k: FiniteGroup, phi: Vec<usize>) -> StackyGroupoidPresentation {
    from_crossed_module(&CrossedModuleData { a, k, phi }).unwrap()
}

fn carry_cocycle(n: usize) -> impl Fn(usize, usize, usize) -> usize {
    move |a, b, c| (a * ((b + c) / n)) % n
}

fn skeletal(n: usize) -> StackyGroupoidPresentation {
    let mut sk = Skeletal2GroupData::with_trivial_action(z(n), z(n));
    let omega = carry_cocycle(n);
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                sk.omega[(g * n + h) * n + k] = omega(g, h, k);
            }
        }
    }
    from_skeletal(&sk).unwrap()
}

fn component_count(g: &FiniteGroupoid) -> usize {
    let mut reps = g.components();
    reps.sort_unstable();
    reps.dedup();
    reps.len()
}

fn strict(h: &FiniteGroupoid) -> StackyGroupoidPresentation {
    StackyGroupoidPresentation::strict(h).unwrap()
}

fn presentation_corpus() -> Vec<StackyGroupoidPresentation> {
    vec![
        strict(&z(2).delooping()),
        strict(&FiniteGroupoid::pair(2)),
        crossed(z(2), z(2), vec![0, 1]),
        skeletal(2),
    ]
}

/// A coherent bibundle whose right action is trivial (and therefore not
/// principal): the group multiplies its own elements on the left, the
/// same group fixes them on the right.
fn trivial_right_side() -> StackyBibundle {
    let sg = strict(&z(2).delooping());
    let x = FiniteGroupoid::discrete(2);
    let mul = |g: usize, p: usize| (g + p) % 2;
    let mu1 = GroupoidFunctor::to_discrete(&x, 1, vec![0, 0]);
    let left = WeakAction::assemble(
        &sg,
        &x,
        mu1,
        Side::Left,
        mul,
        mul,
        |g, h, p| mul(g, mul(h, p)),
        |p| p,
    )
    .unwrap();
    let mu2 = GroupoidFunctor::to_discrete(&x, 1, vec![0, 0]);
    let right = WeakAction::assemble(
        &sg,
        &x,
        mu2,
        Side::Right,
        |p, _| p,
        |b, _| b,
        |p, _, _| p,
        |p| p,
    )
    .unwrap();
    StackyBibundle::new(left, right, |g1, p, _| mul(g1, p)).unwrap()
}

/// The bibundle of the morphism collapsing the pair groupoid to a point.
fn collapse_bibundle(n: usize) -> StackyBibundle {
    let phi = GroupoidFunctor::from_maps(
        &FiniteGroupoid::pair(n),
        &FiniteGroupoid::discrete(1),
        |_| 0,
        |_| 0,
    );
    from_strict_bibundle(&bibundle_from_morphism(&phi).unwrap()).unwrap()
}

#[test]
fn identity_bibundles_of_the_corpus_are_coherent_and_biprincipal() {
    for sg in presentation_corpus() {
        let bb = identity_bibundle(&sg).unwrap();
        let v = check_bibundle(&bb).unwrap();
        assert!(v.passed, "coherence witness: {:?}", v.witness);
        let v = is_biprincipal(&bb).unwrap();
        assert!(v.passed, "biprincipality witness: {:?}", v.witness);
    }
}

#[test]
fn strict_commuting_actions_lift_with_identity_interchange() {
    let bb = from_strict_bibundle(
        &bibundle_from_morphism(&GroupoidFunctor::identity(&z(3).delooping())).unwrap(),
    )
    .unwrap();
    assert!(check_bibundle(&bb).unwrap().passed);
    // Discrete carrier: every interchange component is an identity arrow.
    let x = bb.carrier().clone();
    assert!(bb.tau.iter().all(|&c| x.src[c] == x.tgt[c]));
    assert!(is_biprincipal(&bb).unwrap().passed);
}

#[test]
fn a_mutated_interchange_component_breaks_the_first_associativity_diagram() {
    // A 2-group with parallel 2-cells, so a component can be replaced
    // without disturbing any endpoints.
    let sg = crossed(z(2), z(2), vec![0, 0]);
    let honest = identity_bibundle(&sg).unwrap();
    assert!(check_bibundle(&honest).unwrap().passed);
    let x = sg.g.clone();
    let hit = honest.tau_at(1, 1, 1);
    let other = (0..x.arrows())
        .find(|&j| j != hit && x.src[j] == x.src[hit] && x.tgt[j] == x.tgt[hit])
        .unwrap();
    let mutated = StackyBibundle::new(
        self_action(&sg, Side::Left).unwrap(),
        self_action(&sg, Side::Right).unwrap(),
        |g1, v, g2| if (g1, v, g2) == (1, 1, 1) { other } else { sg.alpha_at(g1, v, g2) },
    )
    .unwrap();
    let v = check_bibundle(&mutated).unwrap();
    assert_eq!(v.witness.unwrap().axiom, "bibundle-assoc-left");
}

#[test]
fn the_source_fibre_is_a_morita_equivalence_with_the_isotropy() {
    // Transitive strict case: the isotropy of the pair groupoid is trivial
    // and the source fibre exhibits the equivalence with the point.
    let bb = isotropy_bibundle(&strict(&FiniteGroupoid::pair(2)), 0).unwrap();
    assert_eq!(bb.right.sg.g.objects, 1);
    assert!(check_bibundle(&bb).unwrap().passed);
    assert!(is_biprincipal(&bb).unwrap().passed);

    // One-object case: the isotropy is the whole 2-group and the fibre is
    // its own arrow space.
    let sg = crossed(z(2), z(2), vec![0, 1]);
    let bb = isotropy_bibundle(&sg, 0).unwrap();
    assert_eq!(bb.right.sg.g.objects, sg.g.objects);
    assert!(check_bibundle(&bb).unwrap().passed);
    assert!(is_biprincipal(&bb).unwrap().passed);
}

#[test]
fn a_one_sided_bibundle_names_the_broken_side() {
    // Left failure: the trivial groupoid cannot act principally on the
    // two-point carrier of the group inclusion bibundle.
    let lb = from_strict_bibundle(
        &bibundle_from_morphism(&GroupoidFunctor::object_inclusion(&z(2).delooping())).unwrap(),
    )
    .unwrap();
    assert!(check_bibundle(&lb).unwrap().passed);
    let v = is_biprincipal(&lb).unwrap();
    assert!(v.witness.unwrap().axiom.starts_with("left"));

    // Right failure: a trivial right action is never principal over a
    // two-point fibre.
    let rb = trivial_right_side();
    assert!(check_bibundle(&rb).unwrap().passed);
    let v = is_biprincipal(&rb).unwrap();
    assert!(v.witness.unwrap().axiom.starts_with("right"));
}

#[test]
fn flipping_reverses_a_morita_equivalence() {
    let sg = crossed(z(2), z(2), vec![0, 1]);
    let bb = identity_bibundle(&sg).unwrap();
    let flipped = flip_bibundle(&bb).unwrap();
    assert!(is_biprincipal(&flipped).unwrap().passed);
    // Flipping twice restores the original actions and interchange.
    let back = flip_bibundle(&flipped).unwrap();
    assert!(back.left.act.same_as(&bb.left.act));
    assert!(back.right.act.same_as(&bb.right.act));
    assert_eq!(back.tau, bb.tau);

    let fibre = isotropy_bibundle(&strict(&FiniteGroupoid::pair(2)), 0).unwrap();
    assert!(is_biprincipal(&flip_bibundle(&fibre).unwrap()).unwrap().passed);

    // A one-sided bibundle cannot be flipped.
    match flip_bibundle(&trivial_right_side()) {
        Err(Error::InvalidAction(w)) => assert!(w.axiom.starts_with("right")),
        other => panic!("expected a principality error, got {other:?}"),
    }
}

#[test]
fn composition_with_the_identity_bibundle_preserves_the_carrier() {
    let sg = strict(&FiniteGroupoid::pair(2));
    let q = isotropy_bibundle(&sg, 0).unwrap();
    let composite = compose_bibundles(&identity_bibundle(&sg).unwrap(), &q).unwrap();
    assert!(is_biprincipal(&composite).unwrap().passed);
    // The quotient carrier keeps one connected component per point of the
    // original fibre.
    assert_eq!(component_count(composite.carrier()), component_count(q.carrier()));
    assert_eq!(composite.right.sg.g.objects, q.right.sg.g.objects);
}

#[test]
fn a_morita_chain_composes_through_the_middle() {
    // pair(2) ~ point ~ pair(3), matching the strict tensor product.
    let p = collapse_bibundle(2);
    let q = flip_bibundle(&collapse_bibundle(3)).unwrap();
    let composite = compose_bibundles(&p, &q).unwrap();
    assert!(is_biprincipal(&composite).unwrap().passed);
    assert_eq!(component_count(composite.carrier()), 6);
    assert_eq!(composite.left.sg.base.objects, 2);
    assert_eq!(composite.right.sg.base.objects, 3);

    // A 2-group composed with its own flip stays an equivalence.
    let sg = crossed(z(2), z(2), vec![0, 1]);
    let id = identity_bibundle(&sg).unwrap();
    let composite = compose_bibundles(&id, &flip_bibundle(&id).unwrap()).unwrap();
    assert!(is_biprincipal(&composite).unwrap().passed);
}

#[test]
fn composition_requires_a_common_middle_presentation() {
    let p = collapse_bibundle(2);
    let id3 = identity_bibundle(&strict(&FiniteGroupoid::pair(3))).unwrap();
    match compose_bibundles(&p, &id3) {
        Err(Error::Mismatch { what }) => assert!(what.contains("middle")),
        other => panic!("expected a middle mismatch, got {other:?}"),
    }
}

#[test]
fn strictification_recovers_the_groupoid_morphism() {
    // The identity bibundle of a strict presentation strictifies to the
    // identity functor.
    for h in [z(2).delooping(), FiniteGroupoid::pair(2)] {
        let f = strictify_if_groupoid(&identity_bibundle(&strict(&h)).unwrap()).unwrap();
        assert!(is_equivalence(&f).passed);
        assert_eq!(f.arr, (0..h.arrows()).collect::<Vec<_>>());
    }

    // The carrier must be the arrow space of the left groupoid.
    let fibre = isotropy_bibundle(&strict(&FiniteGroupoid::pair(2)), 0).unwrap();
    assert!(matches!(strictify_if_groupoid(&fibre), Err(Error::Mismatch { .. })));

    // Non-representable 2-cells cannot be strictified.
    let weak = identity_bibundle(&crossed(z(2), z(2), vec![0, 1])).unwrap();
    assert!(matches!(strictify_if_groupoid(&weak), Err(Error::Mismatch { .. })));
}

#[test]
fn prequantization_examples_run() {
    // The quotient by the full group, the index-two subgroup of Z/4, and
    // the trivial subgroup of Z/3.
    assert!(discrete_prequantization_example(&z(2), &[0, 1], 2).unwrap().passed);
    assert!(discrete_prequantization_example(&z(4), &[0, 2], 2).unwrap().passed);
    assert!(discrete_prequantization_example(&z(3), &[0], 2).unwrap().passed);

    // Element lists that are not subgroups are rejected.
    assert!(matches!(
        discrete_prequantization_example(&z(4), &[0, 1], 2),
        Err(Error::Mismatch { .. })
    ));
    assert!(matches!(
        discrete_prequantization_example(&z(4), &[0, 2], 0),
        Err(Error::Mismatch { .. })
    ));
}
