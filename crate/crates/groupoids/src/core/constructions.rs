//! Elementary constructions: products, full subgroupoids, restriction to a
//! sub-base, and isotropy groupoids.

use std::collections::BTreeMap;

use crate::core::functor::GroupoidFunctor;
use crate::core::groupoid::FiniteGroupoid;
use crate::error::Error;

/// The product groupoid: objects and arrows are pairs, everything acts
/// componentwise.  Also returns the pairing bookkeeping.
#[derive(Debug, Clone)]
pub struct ProductGroupoid {
    pub groupoid: FiniteGroupoid,
    /// `objects[o] = (x1, x2)`.
    pub objects: Vec<(usize, usize)>,
    /// `arrows[m] = (a1, a2)`.
    pub arrows: Vec<(usize, usize)>,
    pub pr1: GroupoidFunctor,
    pub pr2: GroupoidFunctor,
    object_index: BTreeMap<(usize, usize), usize>,
    arrow_index: BTreeMap<(usize, usize), usize>,
}

impl ProductGroupoid {
    pub fn object(&self, x1: usize, x2: usize) -> usize {
        self.object_index[&(x1, x2)]
    }

    pub fn arrow(&self, a1: usize, a2: usize) -> usize {
        self.arrow_index[&(a1, a2)]
    }
}

pub fn product_groupoid(g1: &FiniteGroupoid, g2: &FiniteGroupoid) -> ProductGroupoid {
    let mut objects = Vec::new();
    let mut object_index = BTreeMap::new();
    for x1 in 0..g1.objects {
        for x2 in 0..g2.objects {
            object_index.insert((x1, x2), objects.len());
            objects.push((x1, x2));
        }
    }
    let mut arrows = Vec::new();
    let mut arrow_index = BTreeMap::new();
    for a1 in 0..g1.arrows() {
        for a2 in 0..g2.arrows() {
            arrow_index.insert((a1, a2), arrows.len());
            arrows.push((a1, a2));
        }
    }
    let src = arrows.iter().map(|&(a, b)| object_index[&(g1.src[a], g2.src[b])]).collect();
    let tgt = arrows.iter().map(|&(a, b)| object_index[&(g1.tgt[a], g2.tgt[b])]).collect();
    let unit = objects.iter().map(|&(x, y)| arrow_index[&(g1.unit[x], g2.unit[y])]).collect();
    let inv = arrows.iter().map(|&(a, b)| arrow_index[&(g1.inv[a], g2.inv[b])]).collect();
    let mut comp = BTreeMap::new();
    for (m, &(a1, a2)) in arrows.iter().enumerate() {
        for (n, &(b1, b2)) in arrows.iter().enumerate() {
            if let (Some(c1), Some(c2)) = (g1.compose(a1, b1), g2.compose(a2, b2)) {
                comp.insert((m, n), arrow_index[&(c1, c2)]);
            }
        }
    }
    let groupoid = FiniteGroupoid { objects: objects.len(), src, tgt, unit, inv, comp };
    let pr1 = GroupoidFunctor {
        dom: groupoid.clone(),
        cod: g1.clone(),
        ob: objects.iter().map(|&(x, _)| x).collect(),
        arr: arrows.iter().map(|&(a, _)| a).collect(),
    };
    let pr2 = GroupoidFunctor {
        dom: groupoid.clone(),
        cod: g2.clone(),
        ob: objects.iter().map(|&(_, y)| y).collect(),
        arr: arrows.iter().map(|&(_, b)| b).collect(),
    };
    ProductGroupoid { groupoid, objects, arrows, pr1, pr2, object_index, arrow_index }
}

/// A full subgroupoid together with its inclusion functor and the
/// identifier translation tables (new → old).
#[derive(Debug, Clone)]
pub struct Subgroupoid {
    pub groupoid: FiniteGroupoid,
    pub inclusion: GroupoidFunctor,
    /// Old object identifier behind each new object.
    pub object_of: Vec<usize>,
    /// Old arrow identifier behind each new arrow.
    pub arrow_of: Vec<usize>,
    /// New object identifier of each kept old object.
    pub object_index: BTreeMap<usize, usize>,
    /// New arrow identifier of each kept old arrow.
    pub arrow_index: BTreeMap<usize, usize>,
}

/// The full subgroupoid on a set of objects.
pub fn full_subgroupoid(g: &FiniteGroupoid, keep: &[bool]) -> Subgroupoid {
    let object_of: Vec<usize> = (0..g.objects).filter(|&x| keep[x]).collect();
    let object_index: BTreeMap<usize, usize> =
        object_of.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let arrow_of: Vec<usize> =
        (0..g.arrows()).filter(|&a| keep[g.src[a]] && keep[g.tgt[a]]).collect();
    let arrow_index: BTreeMap<usize, usize> =
        arrow_of.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let src = arrow_of.iter().map(|&a| object_index[&g.src[a]]).collect();
    let tgt = arrow_of.iter().map(|&a| object_index[&g.tgt[a]]).collect();
    let unit = object_of.iter().map(|&x| arrow_index[&g.unit[x]]).collect();
    let inv = arrow_of.iter().map(|&a| arrow_index[&g.inv[a]]).collect();
    let mut comp = BTreeMap::new();
    for (m, &a) in arrow_of.iter().enumerate() {
        for (n, &b) in arrow_of.iter().enumerate() {
            if let Some(c) = g.compose(a, b) {
                comp.insert((m, n), arrow_index[&c]);
            }
        }
    }
    let groupoid = FiniteGroupoid { objects: object_of.len(), src, tgt, unit, inv, comp };
    let inclusion = GroupoidFunctor {
        dom: groupoid.clone(),
        cod: g.clone(),
        ob: object_of.clone(),
        arr: arrow_of.clone(),
    };
    Subgroupoid { groupoid, inclusion, object_of, arrow_of, object_index, arrow_index }
}

/// Restrict a groupoid over a discrete base to a subset of base points:
/// the full subgroupoid on objects lying over the subset.
pub fn restrict_groupoid(
    g: &FiniteGroupoid,
    base: &GroupoidFunctor,
    points: &[usize],
) -> Result<Subgroupoid, Error> {
    if base.dom != *g {
        return Err(Error::Mismatch { what: "restriction base functor domain" });
    }
    for &p in points {
        if p >= base.cod.objects {
            return Err(Error::OutOfRange {
                table: "restriction-points",
                index: 0,
                value: p,
                limit: base.cod.objects,
            });
        }
    }
    let keep: Vec<bool> = (0..g.objects).map(|x| points.contains(&base.ob[x])).collect();
    Ok(full_subgroupoid(g, &keep))
}

/// The isotropy groupoid at a single base point.
pub fn isotropy(
    g: &FiniteGroupoid,
    base: &GroupoidFunctor,
    point: usize,
) -> Result<Subgroupoid, Error> {
    restrict_groupoid(g, base, &[point])
}
