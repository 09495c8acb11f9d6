//! Built-in example documents.  These double as the golden fixture
//! corpus for the acceptance suite: every kind of document is covered,
//! with both passing and failing instances for the check commands.

use groupoids::action::WeakAction;
use groupoids::core::{FiniteGroup, FiniteGroupoid, GroupoidFunctor, SetAction, Side};
use groupoids::morita::{identity_bibundle, isotropy_bibundle};
use groupoids::weakgroupoid::{
    from_crossed_module, product_presentation, CrossedModuleData, Skeletal2GroupData,
    StackyGroupoidPresentation,
};

use crate::doc::{
    ActionDoc, BibundleDoc, Body, CrossedModuleDoc, Document, GroupoidDoc, SkeletalDoc,
};

fn z(n: usize) -> FiniteGroup {
    FiniteGroup::cyclic(n)
}

/// Lift a strict set action to a weak action with identity coherators.
fn lift(sa: &SetAction) -> WeakAction {
    let sg = StackyGroupoidPresentation::strict(&sa.g).unwrap();
    let x = FiniteGroupoid::discrete(sa.points);
    let mu = GroupoidFunctor::to_discrete(&x, sg.base.objects, sa.moment.clone());
    let ap = |p: usize, gamma: usize| sa.apply(p, gamma).unwrap();
    WeakAction::assemble(&sg, &x, mu, Side::Right, ap, ap, |p, g, h| ap(ap(p, g), h), |p| p)
        .unwrap()
}

fn rotation_action() -> WeakAction {
    lift(&SetAction::of_group(
        &z(3).delooping(),
        &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
        Side::Right,
    ))
}

/// The 2-group with 2-cell group Z/2 over a single strict 1-cell, acting
/// trivially on a point: coherent, but never principal (the extra
/// automorphisms survive in the action projection).
fn two_group_on_point() -> WeakAction {
    let sg = from_crossed_module(&CrossedModuleData {
        a: z(2),
        k: FiniteGroup::trivial(),
        phi: vec![0, 0],
    })
    .unwrap();
    let x = FiniteGroupoid::discrete(1);
    let mu = GroupoidFunctor::to_discrete(&x, 1, vec![0]);
    WeakAction::assemble(&sg, &x, mu, Side::Right, |_, _| 0, |_, _| 0, |_, _, _| 0, |_| 0)
        .unwrap()
}

fn carry_skeletal() -> Skeletal2GroupData {
    let mut sk = Skeletal2GroupData::with_trivial_action(z(2), z(2));
    for g in 0..2 {
        for h in 0..2 {
            for k in 0..2 {
                sk.omega[(g * 2 + h) * 2 + k] = g * ((h + k) / 2);
            }
        }
    }
    sk
}

/// The finite prequantization bibundle: the 2-group `[Z/4 / 2Z/4]`
/// spread over the pair groupoid on two points, cut down to the source
/// fibre at a base point.
fn prequantization_bibundle() -> groupoids::morita::StackyBibundle {
    let two_group = from_crossed_module(&CrossedModuleData { a: z(2), k: z(4), phi: vec![0, 2] })
        .unwrap();
    let pairs = StackyGroupoidPresentation::strict(&FiniteGroupoid::pair(2)).unwrap();
    let pp = product_presentation(&pairs, &two_group).unwrap();
    isotropy_bibundle(&pp.sg, pp.base_object(0, 0)).unwrap()
}

/// The built-in example names, in emission order.
pub fn names() -> Vec<&'static str> {
    vec![
        "pair-groupoid",
        "rotation-action",
        "two-group-on-point",
        "crossed-module",
        "skeletal-carry",
        "identity-bibundle",
        "isotropy-bibundle",
        "prequantization",
    ]
}

/// A named example document with its accompanying notes, or `None` for an
/// unknown name.
pub fn example(name: &str) -> Option<(Document, Vec<String>)> {
    let doc = |body| Document::new(body);
    match name {
        "pair-groupoid" => Some((
            doc(Body::Groupoid(GroupoidDoc::of(&FiniteGroupoid::pair(2)))),
            vec!["the pair groupoid on two points".into()],
        )),
        "rotation-action" => Some((
            doc(Body::Action(ActionDoc::of(&rotation_action()))),
            vec!["free transitive Z/3 rotation on three points; principal".into()],
        )),
        "two-group-on-point" => Some((
            doc(Body::Action(ActionDoc::of(&two_group_on_point()))),
            vec!["a 2-cell group acting trivially on a point; coherent but not principal".into()],
        )),
        "crossed-module" => Some((
            doc(Body::CrossedModule(CrossedModuleDoc::of(&CrossedModuleData {
                a: z(2),
                k: z(2),
                phi: vec![0, 1],
            }))),
            vec!["the identity crossed module on Z/2".into()],
        )),
        "skeletal-carry" => Some((
            doc(Body::Skeletal(SkeletalDoc::of(&carry_skeletal()))),
            vec!["skeletal 2-group on (Z/2, Z/2) with the carry 3-cocycle".into()],
        )),
        "identity-bibundle" => Some((
            doc(Body::Bibundle(BibundleDoc::of(
                &identity_bibundle(
                    &StackyGroupoidPresentation::strict(&z(2).delooping()).unwrap(),
                )
                .unwrap(),
            ))),
            vec!["the identity bibundle of the strict Z/2 presentation".into()],
        )),
        "isotropy-bibundle" => Some((
            doc(Body::Bibundle(BibundleDoc::of(
                &isotropy_bibundle(
                    &StackyGroupoidPresentation::strict(&FiniteGroupoid::pair(2)).unwrap(),
                    0,
                )
                .unwrap(),
            ))),
            vec!["the source fibre of the pair groupoid as an equivalence with its isotropy"
                .into()],
        )),
        "prequantization" => Some((
            doc(Body::Bibundle(BibundleDoc::of(&prequantization_bibundle()))),
            vec![
                "finite analogue of prequantization: [Z/4 / 2Z/4] over a two-point base".into(),
                "every circle of the smooth picture is replaced by a finite abelian group"
                    .into(),
            ],
        )),
        _ => None,
    }
}
