//! Tests for strict bundle theory: principal set bundles, bibundles of
//! morphisms, tensor products, weak equivalences, and gauge groupoids.

use std::collections::BTreeMap;

use groupoids::bundles::*;
use groupoids::core::*;
use groupoids::Error;

fn z(n: usize) -> FiniteGroupoid {
    FiniteGroup::cyclic(n).delooping()
}

fn trivial_group() -> FiniteGroupoid {
    FiniteGroup::trivial().delooping()
}

/// Left action of a one-object groupoid on a set from a permutation
/// table `table[x][γ] = γ·x`.
fn left_of_group(g: &FiniteGroupoid, table: &[Vec<usize>]) -> SetAction {
    let mut act = BTreeMap::new();
    for (x, row) in table.iter().enumerate() {
        for (gamma, &y) in row.iter().enumerate() {
            act.insert((x, gamma), y);
        }
    }
    SetAction { g: g.clone(), points: table.len(), moment: vec![0; table.len()], act, side: Side::Left }
}

/// Right multiplication of a groupoid on its own arrows along the source
/// map, principal over the target map.
fn right_multiplication(g: &FiniteGroupoid) -> SetAction {
    let mut act = BTreeMap::new();
    for p in 0..g.arrows() {
        for gamma in 0..g.arrows() {
            if let Some(q) = g.compose(p, gamma) {
                act.insert((p, gamma), q);
            }
        }
    }
    SetAction {
        g: g.clone(),
        points: g.arrows(),
        moment: g.src.clone(),
        act,
        side: Side::Right,
    }
}

fn collapse(dom: &FiniteGroupoid) -> GroupoidFunctor {
    GroupoidFunctor::from_maps(dom, &trivial_group(), |_| 0, |_| 0)
}

/// Both principality verdicts of a strict bibundle: left over `b` and
/// right over `a`.
fn biprincipal(bb: &StrictBibundle) -> (bool, bool) {
    let left = is_principal_set_bundle(&bb.left, &bb.b, bb.h.objects).unwrap().passed;
    let right = is_principal_set_bundle(&bb.right, &bb.a, bb.g.objects).unwrap().passed;
    (left, right)
}

#[test]
fn free_transitive_fibrewise_actions_are_principal() {
    let free = SetAction::of_group(&z(2), &[vec![0, 1], vec![1, 0]], Side::Right);
    assert!(is_principal_set_bundle(&free, &[0, 0], 1).unwrap().passed);
    for g in [FiniteGroupoid::pair(2), z(3)] {
        let sa = right_multiplication(&g);
        assert!(is_principal_set_bundle(&sa, &g.tgt, g.objects).unwrap().passed);
    }
}

#[test]
fn principality_failures_name_the_broken_condition() {
    let trivial = SetAction::of_group(&z(2), &[vec![0, 0]], Side::Right);
    let v = is_principal_set_bundle(&trivial, &[0], 1).unwrap();
    assert_eq!(v.witness.unwrap().axiom, "principal-injective");

    let two_orbits =
        SetAction::of_group(&z(2), &[vec![0, 1], vec![1, 0], vec![2, 3], vec![3, 2]], Side::Right);
    let v = is_principal_set_bundle(&two_orbits, &[0; 4], 1).unwrap();
    assert_eq!(v.witness.unwrap().axiom, "principal-division");

    let free = SetAction::of_group(&z(2), &[vec![0, 1], vec![1, 0]], Side::Right);
    let v = is_principal_set_bundle(&free, &[0, 0], 2).unwrap();
    assert_eq!(v.witness.unwrap().axiom, "principal-surjective");

    match is_principal_set_bundle(&free, &[0, 1], 2) {
        Err(Error::InvalidAction(w)) => assert_eq!(w.axiom, "bundle-fibre-invariance"),
        other => panic!("expected a fibre violation, got {other:?}"),
    }
}

#[test]
fn identity_morphism_gives_the_unit_bibundle() {
    let g = z(2);
    let bb = bibundle_from_morphism(&GroupoidFunctor::identity(&g)).unwrap();
    assert_eq!(bb.points, g.arrows());
    assert_eq!(biprincipal(&bb), (true, true));
}

#[test]
fn collapse_of_the_pair_groupoid_gives_a_biprincipal_bibundle() {
    let bb = bibundle_from_morphism(&collapse(&FiniteGroupoid::pair(2))).unwrap();
    assert_eq!(bb.points, 2);
    assert_eq!(biprincipal(&bb), (true, true));
}

#[test]
fn inclusion_of_the_trivial_group_is_right_but_not_left_principal() {
    let incl = GroupoidFunctor::from_maps(&trivial_group(), &z(2), |_| 0, |_| 0);
    let bb = bibundle_from_morphism(&incl).unwrap();
    assert_eq!(bb.points, 2);
    assert_eq!(biprincipal(&bb), (false, true));
}

#[test]
fn weak_equivalence_agrees_with_biprincipality_of_the_morphism_bibundle() {
    let functors = vec![
        GroupoidFunctor::identity(&z(2)),
        GroupoidFunctor::identity(&FiniteGroupoid::pair(3)),
        collapse(&FiniteGroupoid::pair(2)),
        GroupoidFunctor::from_maps(&trivial_group(), &z(2), |_| 0, |_| 0),
        GroupoidFunctor::from_maps(&FiniteGroupoid::discrete(1), &FiniteGroupoid::discrete(2), |_| 1, |_| 1),
    ];
    let mut saw_equivalence = false;
    let mut saw_failure = false;
    for phi in &functors {
        let weak = is_weak_equivalence(phi).unwrap().passed;
        let bb = bibundle_from_morphism(phi).unwrap();
        assert_eq!(biprincipal(&bb) == (true, true), weak);
        if weak {
            saw_equivalence = true;
        } else {
            saw_failure = true;
        }
    }
    assert!(saw_equivalence && saw_failure);
}

#[test]
fn weak_equivalence_failures_name_the_broken_condition() {
    let incl = GroupoidFunctor::from_maps(&trivial_group(), &z(2), |_| 0, |_| 0);
    let v = is_weak_equivalence(&incl).unwrap();
    assert_eq!(v.witness.unwrap().axiom, "weak-equivalence-cartesian");

    let skip =
        GroupoidFunctor::from_maps(&FiniteGroupoid::discrete(1), &FiniteGroupoid::discrete(2), |_| 0, |_| 0);
    let v = is_weak_equivalence(&skip).unwrap();
    assert_eq!(v.witness.unwrap().axiom, "weak-equivalence-surjective");
}

/// The bibundle from the trivial group to a groupoid `H` whose carrier is
/// the objects of `H` with `b` the identity: the flip of the collapse.
fn trivial_to(h: &FiniteGroupoid) -> StrictBibundle {
    let n = h.objects;
    let left = SetAction {
        g: trivial_group(),
        points: n,
        moment: vec![0; n],
        act: (0..n).map(|x| ((x, 0), x)).collect(),
        side: Side::Left,
    };
    let mut act = BTreeMap::new();
    for gamma in 0..h.arrows() {
        act.insert((h.tgt[gamma], gamma), h.src[gamma]);
    }
    let right = SetAction {
        g: h.clone(),
        points: n,
        moment: (0..n).collect(),
        act,
        side: Side::Right,
    };
    StrictBibundle::new(left, right).unwrap()
}

#[test]
fn unit_bibundles_are_tensor_identities() {
    let g = FiniteGroupoid::pair(2);
    let unit_g = bibundle_from_morphism(&GroupoidFunctor::identity(&g)).unwrap();
    let q = bibundle_from_morphism(&collapse(&g)).unwrap();
    let unit_h = bibundle_from_morphism(&GroupoidFunctor::identity(&trivial_group())).unwrap();
    let left = tensor_bibundles(&unit_g, &q).unwrap();
    assert!(are_isomorphic_bibundles(&left, &q).unwrap());
    let right = tensor_bibundles(&q, &unit_h).unwrap();
    assert!(are_isomorphic_bibundles(&right, &q).unwrap());
}

#[test]
fn morita_chain_through_the_point_composes_to_a_biprincipal_bibundle() {
    // pair({0,1}) ~ trivial ~ pair({0,1,2}); right-multiplication
    // transitivity is witnessed by the tensor being biprincipal.
    let p = bibundle_from_morphism(&collapse(&FiniteGroupoid::pair(2))).unwrap();
    let q = trivial_to(&FiniteGroupoid::pair(3));
    let t = tensor_bibundles(&p, &q).unwrap();
    assert_eq!(t.points, 6);
    assert_eq!(biprincipal(&t), (true, true));
}

#[test]
fn tensor_is_associative_up_to_equivariant_bijection() {
    let p = bibundle_from_morphism(&collapse(&FiniteGroupoid::pair(2))).unwrap();
    let q = trivial_to(&FiniteGroupoid::pair(3));
    let r = bibundle_from_morphism(&collapse(&FiniteGroupoid::pair(3))).unwrap();
    let lhs = tensor_bibundles(&tensor_bibundles(&p, &q).unwrap(), &r).unwrap();
    let rhs = tensor_bibundles(&p, &tensor_bibundles(&q, &r).unwrap()).unwrap();
    assert!(are_isomorphic_bibundles(&lhs, &rhs).unwrap());
    assert!(are_isomorphic_bibundles(&lhs, &p).unwrap());
}

#[test]
fn gauge_groupoid_of_a_group_acting_on_itself_is_the_group() {
    let b3 = z(3);
    let sa = left_of_group(&b3, &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);
    let gauge = gauge_groupoid(&sa, &[0, 0, 0], 1).unwrap();
    assert_eq!(gauge.groupoid.objects, 1);
    assert_eq!(gauge.groupoid.arrows(), 3);
    let arr: Vec<usize> = (0..3).map(|gamma| gauge.class_of(sa.apply(0, gamma).unwrap(), 0).unwrap()).collect();
    let f = GroupoidFunctor { dom: b3.clone(), cod: gauge.groupoid.clone(), ob: vec![0], arr };
    assert!(f.validate().unwrap().passed);
    assert!(is_equivalence(&f).passed);
}

#[test]
fn gauge_groupoid_of_a_two_fibre_bundle_is_transitive_with_fibre_isotropy() {
    let b2 = z(2);
    let sa = left_of_group(&b2, &[vec![0, 1], vec![1, 0], vec![2, 3], vec![3, 2]]);
    let gauge = gauge_groupoid(&sa, &[0, 0, 1, 1], 2).unwrap();
    assert_eq!(gauge.groupoid.objects, 2);
    assert_eq!(gauge.groupoid.arrows(), 8);
    assert_eq!(gauge.groupoid.components(), vec![0, 0]);
    assert_eq!(gauge.groupoid.hom(0, 0).len(), 2);
    assert_eq!(gauge.groupoid.hom(0, 1).len(), 2);
}

#[test]
fn gauge_groupoid_of_a_trivial_bundle_is_the_pair_groupoid_of_the_base() {
    let sa = left_of_group(&trivial_group(), &[vec![0], vec![1], vec![2]]);
    let gauge = gauge_groupoid(&sa, &[0, 1, 2], 3).unwrap();
    assert_eq!(gauge.groupoid.objects, 3);
    assert_eq!(gauge.groupoid.arrows(), 9);
    for x in 0..3 {
        for y in 0..3 {
            assert_eq!(gauge.groupoid.hom(x, y).len(), 1);
        }
    }
}

#[test]
fn atlas_of_a_translation_groupoid_is_a_right_principal_bibundle() {
    // The atlas of a translation groupoid — the object inclusion of the
    // point set — induces a bibundle whose carrier is the arrow set and
    // which is principal on the right but not on the left whenever the
    // translation groupoid has non-identity arrows.
    let sa = SetAction::of_group(&z(2), &[vec![0, 1], vec![1, 0], vec![2, 2]], Side::Right);
    let tg = translation_groupoid(&sa).unwrap();
    let atlas = GroupoidFunctor::object_inclusion(&tg.groupoid);
    let bb = bibundle_from_morphism(&atlas).unwrap();
    assert_eq!(bb.points, tg.groupoid.arrows());
    assert_eq!(biprincipal(&bb), (false, true));
    assert!(!is_weak_equivalence(&atlas).unwrap().passed);
}

#[test]
fn paired_bibundles_combine_over_the_shared_left_leg() {
    // Two bibundles out of the same groupoid combine on the fibred
    // product of their carriers into a bibundle over the product of the
    // right-hand groupoids.
    let g = FiniteGroupoid::pair(2);
    let e1 = bibundle_from_morphism(&GroupoidFunctor::identity(&g)).unwrap();
    let e2 = bibundle_from_morphism(&collapse(&g)).unwrap();
    let prod = product_groupoid(&e1.h, &e2.h);
    let mut carrier = Vec::new();
    let mut index = BTreeMap::new();
    for z1 in 0..e1.points {
        for z2 in 0..e2.points {
            if e1.a[z1] == e2.a[z2] {
                index.insert((z1, z2), carrier.len());
                carrier.push((z1, z2));
            }
        }
    }
    let mut left_act = BTreeMap::new();
    for (i, &(z1, z2)) in carrier.iter().enumerate() {
        for gamma in 0..g.arrows() {
            if let (Some(y1), Some(y2)) = (e1.left.apply(z1, gamma), e2.left.apply(z2, gamma)) {
                left_act.insert((i, gamma), index[&(y1, y2)]);
            }
        }
    }
    let left = SetAction {
        g: g.clone(),
        points: carrier.len(),
        moment: carrier.iter().map(|&(z1, _)| e1.a[z1]).collect(),
        act: left_act,
        side: Side::Left,
    };
    let mut right_act = BTreeMap::new();
    for (i, &(z1, z2)) in carrier.iter().enumerate() {
        for m in 0..prod.groupoid.arrows() {
            let (k1, k2) = prod.arrows[m];
            if let (Some(y1), Some(y2)) = (e1.right.apply(z1, k1), e2.right.apply(z2, k2)) {
                right_act.insert((i, m), index[&(y1, y2)]);
            }
        }
    }
    let right = SetAction {
        g: prod.groupoid.clone(),
        points: carrier.len(),
        moment: carrier.iter().map(|&(z1, z2)| prod.object(e1.b[z1], e2.b[z2])).collect(),
        act: right_act,
        side: Side::Right,
    };
    let bb = StrictBibundle::new(left, right).unwrap();
    assert!(is_principal_set_bundle(&bb.right, &bb.a, bb.g.objects).unwrap().passed);
}
