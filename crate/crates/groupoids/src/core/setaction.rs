//! Strict set-level actions of a finite groupoid and the translation
//! groupoid they generate.

use std::collections::BTreeMap;

use crate::core::functor::GroupoidFunctor;
use crate::core::groupoid::{FiniteGroupoid, Verdict, Witness};
use crate::error::Error;

/// Which side a (weak or strict) action acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A strict action of a finite groupoid on a finite set along a moment map.
///
/// For a right action, `x·γ` is defined exactly when `moment(x) = tgt(γ)`
/// and then `moment(x·γ) = src(γ)`; mirrored for left actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetAction {
    pub g: FiniteGroupoid,
    /// Number of points acted on; points are `0..points`.
    pub points: usize,
    /// `moment[x]` is an object of `g`.
    pub moment: Vec<usize>,
    /// `(point, arrow) ↦ point` on composable pairs.
    pub act: BTreeMap<(usize, usize), usize>,
    pub side: Side,
}

impl SetAction {
    /// The strict action of a group (one-object groupoid) given by a table
    /// of permutations: `table[x][γ] = x·γ`.
    pub fn of_group(g: &FiniteGroupoid, table: &[Vec<usize>], side: Side) -> Self {
        let points = table.len();
        let mut act = BTreeMap::new();
        for (x, row) in table.iter().enumerate() {
            for (gamma, &y) in row.iter().enumerate() {
                act.insert((x, gamma), y);
            }
        }
        SetAction { g: g.clone(), points, moment: vec![0; points], act, side }
    }

    /// Apply the action, if defined.
    pub fn apply(&self, x: usize, gamma: usize) -> Option<usize> {
        self.act.get(&(x, gamma)).copied()
    }

    /// Is `(x, γ)` a composable pair for this action's side?
    pub fn composable(&self, x: usize, gamma: usize) -> bool {
        match self.side {
            Side::Right => self.moment[x] == self.g.tgt[gamma],
            Side::Left => self.moment[x] == self.g.src[gamma],
        }
    }

    /// Check the strict action axioms, with a replayable witness on failure.
    pub fn validate(&self) -> Result<Verdict, Error> {
        self.g.check_structure()?;
        if self.moment.len() != self.points {
            return Err(Error::BadLength {
                table: "moment",
                expected: self.points,
                actual: self.moment.len(),
            });
        }
        for (i, &v) in self.moment.iter().enumerate() {
            if v >= self.g.objects {
                return Err(Error::OutOfRange {
                    table: "moment",
                    index: i,
                    value: v,
                    limit: self.g.objects,
                });
            }
        }
        for (&(x, gamma), &y) in &self.act {
            if x >= self.points || gamma >= self.g.arrows() || y >= self.points {
                return Err(Error::OutOfRange {
                    table: "act",
                    index: x,
                    value: y.max(gamma),
                    limit: self.points.max(self.g.arrows()),
                });
            }
        }
        for x in 0..self.points {
            for gamma in 0..self.g.arrows() {
                if self.act.contains_key(&(x, gamma)) != self.composable(x, gamma) {
                    return Ok(Verdict::fail("action-defined-iff-composable", &[x, gamma]));
                }
            }
        }
        for (&(x, gamma), &y) in &self.act {
            let expected = match self.side {
                Side::Right => self.g.src[gamma],
                Side::Left => self.g.tgt[gamma],
            };
            if self.moment[y] != expected {
                return Ok(Verdict::fail("action-moment", &[x, gamma]));
            }
        }
        for x in 0..self.points {
            if self.apply(x, self.g.unit[self.moment[x]]) != Some(x) {
                return Ok(Verdict::fail("action-unit", &[x]));
            }
        }
        // Compatibility with composition.  Right: (x·γ)·δ = x·(γ∘δ);
        // left: γ·(δ·x) = (γ∘δ)·x.
        for (&(gamma, delta), &cd) in &self.g.comp {
            for x in 0..self.points {
                match self.side {
                    Side::Right => {
                        if let Some(xg) = self.apply(x, gamma) {
                            if self.apply(xg, delta) != self.apply(x, cd) {
                                return Ok(Verdict::fail("action-compat", &[x, gamma, delta]));
                            }
                        }
                    }
                    Side::Left => {
                        if let Some(dx) = self.apply(x, delta) {
                            if self.apply(dx, gamma) != self.apply(x, cd) {
                                return Ok(Verdict::fail("action-compat", &[x, gamma, delta]));
                            }
                        }
                    }
                }
            }
        }
        Ok(Verdict::pass())
    }

    /// Is the action free: `x·γ = x` only for the unit of the isotropy?
    pub fn is_free(&self) -> Verdict {
        for (&(x, gamma), &y) in &self.act {
            if y == x && !self.g.is_unit(gamma) && self.g.src[gamma] == self.g.tgt[gamma] {
                return Verdict::fail("free", &[x, gamma]);
            }
        }
        Verdict::pass()
    }

    /// Orbit representative of each point (least point in the orbit).
    pub fn orbits(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.points).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for (&(x, _), &y) in &self.act {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx != ry {
                parent[rx.max(ry)] = rx.min(ry);
            }
        }
        (0..self.points).map(|x| find(&mut parent, x)).collect()
    }
}

/// The translation groupoid of a strict right action: arrows are pairs
/// `(x, γ)` with `moment(x) = tgt(γ)`, going from `x·γ` to `x`; the pair
/// `(x, γ) ∘ (x·γ, δ) = (x, γ∘δ)`.
#[derive(Debug, Clone)]
pub struct TranslationGroupoid {
    pub groupoid: FiniteGroupoid,
    /// `arrows[m] = (x, γ)`.
    pub arrows: Vec<(usize, usize)>,
    /// Moment functor of the translation groupoid onto the base of `g`
    /// (objects of the acted-on set keep their moment).
    pub moment: GroupoidFunctor,
    arrow_index: BTreeMap<(usize, usize), usize>,
}

impl TranslationGroupoid {
    pub fn arrow(&self, x: usize, gamma: usize) -> Option<usize> {
        self.arrow_index.get(&(x, gamma)).copied()
    }
}

/// Build the translation groupoid of a strict right action.  The action
/// axioms are checked first; a failure is a structural error carrying the
/// witness.
pub fn translation_groupoid(sa: &SetAction) -> Result<TranslationGroupoid, Error> {
    if sa.side != Side::Right {
        return Err(Error::Mismatch { what: "translation groupoid expects a right action" });
    }
    let verdict = sa.validate()?;
    if let Some(w) = verdict.witness {
        return Err(Error::InvalidAction(w));
    }
    let mut arrows = Vec::new();
    let mut arrow_index = BTreeMap::new();
    for x in 0..sa.points {
        for gamma in 0..sa.g.arrows() {
            if sa.composable(x, gamma) {
                arrow_index.insert((x, gamma), arrows.len());
                arrows.push((x, gamma));
            }
        }
    }
    let src = arrows.iter().map(|&(x, gamma)| sa.apply(x, gamma).unwrap()).collect();
    let tgt = arrows.iter().map(|&(x, _)| x).collect();
    let unit = (0..sa.points).map(|x| arrow_index[&(x, sa.g.unit[sa.moment[x]])]).collect();
    let inv = arrows
        .iter()
        .map(|&(x, gamma)| arrow_index[&(sa.apply(x, gamma).unwrap(), sa.g.inv[gamma])])
        .collect();
    let mut comp = BTreeMap::new();
    for (m, &(x, gamma)) in arrows.iter().enumerate() {
        let xg = sa.apply(x, gamma).unwrap();
        for (n, &(y, delta)) in arrows.iter().enumerate() {
            if y != xg {
                continue;
            }
            comp.insert((m, n), arrow_index[&(x, sa.g.comp2(gamma, delta))]);
        }
    }
    let groupoid = FiniteGroupoid { objects: sa.points, src, tgt, unit, inv, comp };
    let moment =
        GroupoidFunctor::to_discrete(&groupoid, sa.g.objects, sa.moment.clone());
    Ok(TranslationGroupoid { groupoid, arrows, moment, arrow_index })
}

/// Convenience: witness-or-pass as a verdict for an action table (used by
/// fuzzing, where mutated tables must be rejected with a witness).
pub fn validate_set_action(sa: &SetAction) -> Result<Verdict, Error> {
    sa.validate()
}

/// Re-check a single named set-action axiom instance (witness replay).
pub fn recheck_action_axiom(sa: &SetAction, w: &Witness) -> bool {
    let ids = &w.ids;
    match w.axiom.as_str() {
        "action-defined-iff-composable" => {
            let (x, gamma) = (ids[0], ids[1]);
            sa.act.contains_key(&(x, gamma)) == sa.composable(x, gamma)
        }
        "action-moment" => {
            let (x, gamma) = (ids[0], ids[1]);
            match sa.apply(x, gamma) {
                Some(y) => {
                    let expected = match sa.side {
                        Side::Right => sa.g.src[gamma],
                        Side::Left => sa.g.tgt[gamma],
                    };
                    sa.moment[y] == expected
                }
                None => false,
            }
        }
        "action-unit" => {
            let x = ids[0];
            sa.apply(x, sa.g.unit[sa.moment[x]]) == Some(x)
        }
        "action-compat" => {
            let (x, gamma, delta) = (ids[0], ids[1], ids[2]);
            match sa.g.compose(gamma, delta) {
                Some(cd) => match sa.side {
                    Side::Right => match sa.apply(x, gamma) {
                        Some(xg) => sa.apply(xg, delta) == sa.apply(x, cd),
                        None => false,
                    },
                    Side::Left => match sa.apply(x, delta) {
                        Some(dx) => sa.apply(dx, gamma) == sa.apply(x, cd),
                        None => false,
                    },
                },
                None => false,
            }
        }
        _ => false,
    }
}
