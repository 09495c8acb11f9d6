//! Restriction of a presentation to a single base point: the isotropy
//! 2-group and the source fibre.

use crate::core::{full_subgroupoid, iso_comma, FiniteGroupoid, GroupoidFunctor, IsoComma};
use crate::error::Error;
use crate::weakgroupoid::presentation::StackyGroupoidPresentation;

/// The isotropy 2-group at a base point: every piece of structure
/// restricted to the 1-arrows with source and target `x`.  The result is a
/// presentation over a single point.
pub fn isotropy_2group(
    sg: &StackyGroupoidPresentation,
    x: usize,
) -> Result<StackyGroupoidPresentation, Error> {
    if x >= sg.base.objects {
        return Err(Error::OutOfRange {
            table: "base-point",
            index: 0,
            value: x,
            limit: sg.base.objects,
        });
    }
    let keep: Vec<bool> =
        (0..sg.g.objects).map(|v| sg.s.ob[v] == x && sg.t.ob[v] == x).collect();
    let sub = full_subgroupoid(&sg.g, &keep);
    let base1 = FiniteGroupoid::discrete(1);
    let gg = sub.groupoid.clone();
    let s1 = GroupoidFunctor::to_discrete(&gg, 1, vec![0; gg.objects]);
    let t1 = s1.clone();
    let u1 = GroupoidFunctor::from_maps(
        &base1,
        &gg,
        |_| sub.object_index[&sg.u.ob[x]],
        |_| sub.arrow_index[&sg.u.arr[x]],
    );
    let i1 = GroupoidFunctor::from_maps(
        &gg,
        &gg,
        |v| sub.object_index[&sg.i.ob[sub.object_of[v]]],
        |a| sub.arrow_index[&sg.i.arr[sub.arrow_of[a]]],
    );
    StackyGroupoidPresentation::assemble(
        &base1,
        &gg,
        s1,
        t1,
        u1,
        i1,
        |v, w| sub.object_index[&sg.mul_ob(sub.object_of[v], sub.object_of[w])],
        |a, b| sub.arrow_index[&sg.mul_arr(sub.arrow_of[a], sub.arrow_of[b])],
        |a, b, c| {
            sub.arrow_index
                [&sg.alpha_at(sub.object_of[a], sub.object_of[b], sub.object_of[c])]
        },
        |v| sub.arrow_index[&sg.lambda_at(sub.object_of[v])],
        |v| sub.arrow_index[&sg.rho_at(sub.object_of[v])],
        |v| sub.arrow_index[&sg.iota_l_at(sub.object_of[v])],
        |v| sub.arrow_index[&sg.iota_r_at(sub.object_of[v])],
    )
}

/// The source fibre at a base point: the iso-comma fibred product of the
/// point inclusion against the source functor.
pub fn s_fibre(sg: &StackyGroupoidPresentation, x: usize) -> Result<IsoComma, Error> {
    if x >= sg.base.objects {
        return Err(Error::OutOfRange {
            table: "base-point",
            index: 0,
            value: x,
            limit: sg.base.objects,
        });
    }
    let pt = FiniteGroupoid::discrete(1);
    let incl =
        GroupoidFunctor { dom: pt, cod: sg.base.clone(), ob: vec![x], arr: vec![x] };
    iso_comma(&incl, &sg.s)
}
