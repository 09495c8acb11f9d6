//! The prequotient groupoid of a weak right action, the quotient functor,
//! the prestack well-formedness sweep, and the tautological action on the
//! fibres of the quotient projection.

use std::collections::BTreeMap;

use crate::action::{FiberedAction, WeakAction};
use crate::core::{validate_groupoid, FiniteGroupoid, GroupoidFunctor, Side, Verdict};
use crate::error::Error;

/// The prequotient of a weak right action: objects are the objects of the
/// carrier `X`; morphisms `x → y` are classes `[g, b]` of pairs with
/// `μ(x) = t(g)` and `b : x·g → y`, where `(g, b) ∼ (ḡ, b̄)` when some
/// 2-cell `j : g → ḡ` satisfies `b̄ ∘ (id_x·j) = b`.
#[derive(Debug, Clone)]
pub struct PrequotientGroupoid {
    pub action: WeakAction,
    /// The prequotient groupoid itself; its arrows are the classes.
    pub carrier: FiniteGroupoid,
    /// Least representative `(x, g, b)` of each class, in class order.
    pub classes: Vec<(usize, usize, usize)>,
    /// Full membership list of each class (sorted, pairwise disjoint).
    pub members: Vec<Vec<(usize, usize, usize)>>,
    /// The quotient functor `q : X → X⫽G`, identity on objects.
    pub q: GroupoidFunctor,
    class_index: BTreeMap<(usize, usize, usize), usize>,
}

impl PrequotientGroupoid {
    /// Class of the pair `(g, b)` at source `x`, if the triple is valid.
    pub fn class_of(&self, x: usize, g: usize, b: usize) -> Option<usize> {
        self.class_index.get(&(x, g, b)).copied()
    }

    /// The tautological class `γ₀(x, g) = [g, id_{x·g}] : x → x·g`.
    pub fn gamma0(&self, x: usize, g: usize) -> usize {
        let xg = self.action.act_ob(x, g);
        self.class_of(x, g, self.action.x.unit[xg])
            .expect("tautological class must exist")
    }
}

/// All morphism pairs, their classes, and the class lookup table, without
/// assuming anything about composition.
type RawClasses = (
    Vec<(usize, usize, usize)>,
    Vec<Vec<(usize, usize, usize)>>,
    BTreeMap<(usize, usize, usize), usize>,
);

fn find(parent: &mut Vec<usize>, i: usize) -> usize {
    if parent[i] != i {
        let r = find(parent, parent[i]);
        parent[i] = r;
    }
    parent[i]
}

fn enumerate_classes(wa: &WeakAction) -> Result<RawClasses, Error> {
    let (x, sg) = (&wa.x, &wa.sg);
    let mut triples = Vec::new();
    let mut triple_index = BTreeMap::new();
    for ob in 0..x.objects {
        for g in 0..sg.g.objects {
            if sg.t.ob[g] != wa.mu.ob[ob] {
                continue;
            }
            let xg = wa.act_ob(ob, g);
            for b in 0..x.arrows() {
                if x.src[b] == xg {
                    triple_index.insert((ob, g, b), triples.len());
                    triples.push((ob, g, b));
                }
            }
        }
    }
    let mut parent: Vec<usize> = (0..triples.len()).collect();
    for (i, &(ob, g, b)) in triples.iter().enumerate() {
        for j in 0..sg.g.arrows() {
            if sg.g.src[j] != g {
                continue;
            }
            // In the discrete base the condition t(j) = id_{μ(x)} is
            // automatic once t(g) = μ(x).
            let gbar = sg.g.tgt[j];
            let shift = wa
                .try_act_arr(x.unit[ob], j)
                .ok_or(Error::Mismatch { what: "prequotient identification pair" })?;
            let bbar = x
                .compose(b, x.inv[shift])
                .ok_or(Error::Mismatch { what: "prequotient identification triangle" })?;
            let other = triple_index[&(ob, gbar, bbar)];
            let (a, c) = (find(&mut parent, i), find(&mut parent, other));
            if a != c {
                parent[a.max(c)] = a.min(c);
            }
        }
    }
    let mut classes = Vec::new();
    let mut members: Vec<Vec<(usize, usize, usize)>> = Vec::new();
    let mut class_index = BTreeMap::new();
    let mut root_to_class = BTreeMap::new();
    for (i, &tr) in triples.iter().enumerate() {
        let root = find(&mut parent, i);
        let c = *root_to_class.entry(root).or_insert_with(|| {
            classes.push(triples[root]);
            members.push(Vec::new());
            classes.len() - 1
        });
        members[c].push(tr);
        class_index.insert(tr, c);
    }
    Ok((classes, members, class_index))
}

/// Composite representative of `(x → y) = (g, b)` followed by
/// `(y → z) = (h, c)`: `(g·h, c ∘ (b·id_h) ∘ β_{x,g,h})`.
fn compose_reps(
    wa: &WeakAction,
    first: (usize, usize, usize),
    second: (usize, usize, usize),
) -> Option<(usize, usize, usize)> {
    let (x, g, b) = first;
    let (_, h, c) = second;
    let sg = &wa.sg;
    let gh = sg.pairs.object(&[g, h]).map(|o| sg.m.ob[o])?;
    let whisker = wa.try_act_arr(b, sg.id2(h))?;
    let beta = wa.try_beta_at(x, g, h)?;
    let nb = wa.vcomp(&[c, whisker, beta])?;
    Some((x, gh, nb))
}

/// Inverse representative of `(g, b) : x → y`:
/// `(i(g), ε_x ∘ (id_x·ι_r(g)) ∘ β⁻¹_{x,g,i(g)} ∘ (b⁻¹·id_{i(g)}))`.
fn inverse_rep(
    wa: &WeakAction,
    rep: (usize, usize, usize),
) -> Option<(usize, usize, usize)> {
    let (x, g, b) = rep;
    let sg = &wa.sg;
    let ig = sg.i.ob[g];
    let y = wa.x.tgt[b];
    let nb = wa.vcomp(&[
        wa.epsilon_at(x),
        wa.try_act_arr(wa.x.unit[x], sg.iota_r_at(g))?,
        wa.x.inv[wa.try_beta_at(x, g, ig)?],
        wa.try_act_arr(wa.x.inv[b], sg.id2(ig))?,
    ])?;
    Some((y, ig, nb))
}

/// Build the prequotient of a weak right action.  Composition, identities,
/// and inverses are computed from class representatives; the result is
/// validated as a groupoid, and a broken action surfaces as an
/// [`Error::InvalidAction`] carrying the violated axiom.
pub fn prequotient(wa: &WeakAction) -> Result<PrequotientGroupoid, Error> {
    if wa.side != Side::Right {
        return Err(Error::Mismatch { what: "prequotient expects a right action" });
    }
    let (classes, members, class_index) = enumerate_classes(wa)?;
    let x = &wa.x;
    let sg = &wa.sg;

    let src: Vec<usize> = classes.iter().map(|&(ob, _, _)| ob).collect();
    let tgt: Vec<usize> = classes.iter().map(|&(_, _, b)| x.tgt[b]).collect();
    let bad = |what: &'static str| Error::Mismatch { what };
    let mut unit = Vec::with_capacity(x.objects);
    for ob in 0..x.objects {
        let one = sg.u.ob[wa.mu.ob[ob]];
        let c = class_index
            .get(&(ob, one, wa.epsilon_at(ob)))
            .copied()
            .ok_or(bad("prequotient identity class"))?;
        unit.push(c);
    }
    let mut inv = Vec::with_capacity(classes.len());
    for &rep in &classes {
        let r = inverse_rep(wa, rep).ok_or(bad("prequotient inverse class"))?;
        inv.push(*class_index.get(&r).ok_or(bad("prequotient inverse class"))?);
    }
    let mut comp = BTreeMap::new();
    let mut by_src: Vec<Vec<usize>> = vec![Vec::new(); x.objects];
    for (c, &s) in src.iter().enumerate() {
        by_src[s].push(c);
    }
    for (c1, &rep1) in classes.iter().enumerate() {
        for &c2 in &by_src[tgt[c1]] {
            let r = compose_reps(wa, rep1, classes[c2]).ok_or(bad("prequotient composition"))?;
            let c = *class_index.get(&r).ok_or(bad("prequotient composition"))?;
            comp.insert((c2, c1), c);
        }
    }
    let carrier =
        FiniteGroupoid { objects: x.objects, src, tgt, unit, inv, comp };
    let verdict = validate_groupoid(&carrier)?;
    if let Some(w) = verdict.witness {
        return Err(Error::InvalidAction(w));
    }

    let mut q_arr = Vec::with_capacity(x.arrows());
    for b in 0..x.arrows() {
        let ob = x.src[b];
        let one = sg.u.ob[wa.mu.ob[ob]];
        let e = x.compose(b, wa.epsilon_at(ob)).ok_or(bad("prequotient projection"))?;
        q_arr.push(*class_index.get(&(ob, one, e)).ok_or(bad("prequotient projection"))?);
    }
    let q = GroupoidFunctor {
        dom: x.clone(),
        cod: carrier.clone(),
        ob: (0..x.objects).collect(),
        arr: q_arr,
    };

    Ok(PrequotientGroupoid { action: wa.clone(), carrier, classes, members, q, class_index })
}

/// Representative-independence sweep: composing any two members of two
/// composable classes must land in one class.  A 1-free action that fails
/// the sweep contradicts the theory and is escalated as an internal
/// invariant violation.
pub fn check_prestack_wellformed(wa: &WeakAction) -> Result<Verdict, Error> {
    if wa.side != Side::Right {
        return Err(Error::Mismatch { what: "prequotient expects a right action" });
    }
    let (classes, members, class_index) = enumerate_classes(wa)?;
    let sweep = (|| {
        for (c1, ms1) in members.iter().enumerate() {
            let y = wa.x.tgt[classes[c1].2];
            for (c2, ms2) in members.iter().enumerate() {
                if classes[c2].0 != y {
                    continue;
                }
                let mut seen: Option<usize> = None;
                for &m1 in ms1 {
                    for &m2 in ms2 {
                        let composed = match compose_reps(wa, m1, m2)
                            .and_then(|r| class_index.get(&r).copied())
                        {
                            Some(c) => c,
                            None => return Verdict::fail("prestack-composition", &[c1, c2]),
                        };
                        match seen {
                            None => seen = Some(composed),
                            Some(c) if c != composed => {
                                return Verdict::fail("prestack-composition", &[c1, c2]);
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        Verdict::pass()
    })();
    if crate::action::is_1free(wa).passed && !sweep.passed {
        return Err(Error::InternalInvariant(
            "a 1-free action produced representative-dependent composition".into(),
        ));
    }
    Ok(sweep)
}

/// The tautological action of the presentation on the fibres of the
/// quotient projection: `γ₀(x, g) = [g, id_{x·g}]`.
pub fn canonical_gamma0(pq: &PrequotientGroupoid) -> Result<FiberedAction, Error> {
    FiberedAction::new(&pq.action, pq.q.clone(), |x, g| pq.gamma0(x, g))
}
