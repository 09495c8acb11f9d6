//! Products of presentations, built componentwise: the base is the
//! product of the bases, the 1-arrow groupoid is the product groupoid,
//! and every structure functor and coherator is a pair of components.

use crate::core::{product_groupoid, FiniteGroupoid, GroupoidFunctor, ProductGroupoid};
use crate::error::Error;

use super::presentation::StackyGroupoidPresentation;

/// A product presentation together with the index bookkeeping needed to
/// pass between the product and its factors.
#[derive(Debug, Clone)]
pub struct ProductPresentation {
    pub sg: StackyGroupoidPresentation,
    pub first: StackyGroupoidPresentation,
    pub second: StackyGroupoidPresentation,
    /// The product of the two 1-arrow groupoids (tuple lookups).
    pub g: ProductGroupoid,
}

impl ProductPresentation {
    /// Index of the base point `(e1, e2)` in the product base.
    pub fn base_object(&self, e1: usize, e2: usize) -> usize {
        e1 * self.second.base.objects + e2
    }

    /// Factors of a product base point.
    pub fn base_factors(&self, e: usize) -> (usize, usize) {
        let n2 = self.second.base.objects;
        (e / n2, e % n2)
    }
}

/// The product of two presentations.
pub fn product_presentation(
    sg1: &StackyGroupoidPresentation,
    sg2: &StackyGroupoidPresentation,
) -> Result<ProductPresentation, Error> {
    let n2 = sg2.base.objects;
    let base = FiniteGroupoid::discrete(sg1.base.objects * n2);
    let g = product_groupoid(&sg1.g, &sg2.g);
    let gp = &g.groupoid;

    let pair_ob = |o: usize| g.objects[o];
    let pair_arr = |a: usize| g.arrows[a];
    let s = GroupoidFunctor::from_maps(
        gp,
        &base,
        |o| {
            let (a, b) = pair_ob(o);
            sg1.s.ob[a] * n2 + sg2.s.ob[b]
        },
        |m| {
            let (a, b) = pair_arr(m);
            sg1.s.arr[a] * n2 + sg2.s.arr[b]
        },
    );
    let t = GroupoidFunctor::from_maps(
        gp,
        &base,
        |o| {
            let (a, b) = pair_ob(o);
            sg1.t.ob[a] * n2 + sg2.t.ob[b]
        },
        |m| {
            let (a, b) = pair_arr(m);
            sg1.t.arr[a] * n2 + sg2.t.arr[b]
        },
    );
    let u = GroupoidFunctor::from_maps(
        &base,
        gp,
        |e| g.object(sg1.u.ob[e / n2], sg2.u.ob[e % n2]),
        |e| g.arrow(sg1.u.arr[e / n2], sg2.u.arr[e % n2]),
    );
    let i = GroupoidFunctor::from_maps(
        gp,
        gp,
        |o| {
            let (a, b) = pair_ob(o);
            g.object(sg1.i.ob[a], sg2.i.ob[b])
        },
        |m| {
            let (a, b) = pair_arr(m);
            g.arrow(sg1.i.arr[a], sg2.i.arr[b])
        },
    );
    let sg = StackyGroupoidPresentation::assemble(
        &base,
        gp,
        s,
        t,
        u,
        i,
        |x, y| {
            let ((a1, a2), (b1, b2)) = (pair_ob(x), pair_ob(y));
            g.object(sg1.mul_ob(a1, b1), sg2.mul_ob(a2, b2))
        },
        |x, y| {
            let ((a1, a2), (b1, b2)) = (pair_arr(x), pair_arr(y));
            g.arrow(sg1.mul_arr(a1, b1), sg2.mul_arr(a2, b2))
        },
        |x, y, z| {
            let ((a1, a2), (b1, b2), (c1, c2)) = (pair_ob(x), pair_ob(y), pair_ob(z));
            g.arrow(sg1.alpha_at(a1, b1, c1), sg2.alpha_at(a2, b2, c2))
        },
        |v| {
            let (a, b) = pair_ob(v);
            g.arrow(sg1.lambda_at(a), sg2.lambda_at(b))
        },
        |v| {
            let (a, b) = pair_ob(v);
            g.arrow(sg1.rho_at(a), sg2.rho_at(b))
        },
        |v| {
            let (a, b) = pair_ob(v);
            g.arrow(sg1.iota_l_at(a), sg2.iota_l_at(b))
        },
        |v| {
            let (a, b) = pair_ob(v);
            g.arrow(sg1.iota_r_at(a), sg2.iota_r_at(b))
        },
    )?;
    Ok(ProductPresentation { sg, first: sg1.clone(), second: sg2.clone(), g })
}
