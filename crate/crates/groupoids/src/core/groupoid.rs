//! Finite groupoids given by explicit tables, and the axiom validator.
//!
//! A [`FiniteGroupoid`] is a small category in which every arrow is
//! invertible, presented by dense integer identifiers: objects are
//! `0..objects`, arrows are `0..src.len()`.  Composition is written
//! `comp(g, h) = g ∘ h` ("apply `h` first"): it is defined exactly when
//! `src(g) = tgt(h)`, and then `src(g∘h) = src(h)` and `tgt(g∘h) = tgt(g)`.
//!
//! Discrete groupoids (only unit arrows) play the role of sets throughout
//! the library; the empty groupoid is legal everywhere.

use std::collections::BTreeMap;

use crate::error::Error;

/// A named counterexample: which axiom failed and on which identifiers.
///
/// Witnesses are replayable: [`FiniteGroupoid::recheck_axiom`] re-evaluates
/// the single named axiom instance and must fail again on a genuine witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Stable name of the violated axiom or diagram.
    pub axiom: String,
    /// The offending identifiers, in the order the axiom quantifies them.
    pub ids: Vec<usize>,
}

impl Witness {
    pub fn new(axiom: &str, ids: &[usize]) -> Self {
        Witness { axiom: axiom.to_string(), ids: ids.to_vec() }
    }
}

/// Outcome of a mathematical check: either a pass, or a failure carrying a
/// replayable [`Witness`].  The witness is present iff `passed` is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { passed: true, witness: None }
    }

    pub fn fail(axiom: &str, ids: &[usize]) -> Self {
        Verdict { passed: false, witness: Some(Witness::new(axiom, ids)) }
    }

    pub fn from_witness(witness: Witness) -> Self {
        Verdict { passed: false, witness: Some(witness) }
    }

    /// Short-circuiting conjunction: keeps the first failure.
    pub fn and(self, next: impl FnOnce() -> Verdict) -> Verdict {
        if self.passed {
            next()
        } else {
            self
        }
    }

    /// Conjunction of an iterator of lazily evaluated checks.
    pub fn all(checks: impl IntoIterator<Item = Verdict>) -> Verdict {
        for v in checks {
            if !v.passed {
                return v;
            }
        }
        Verdict::pass()
    }
}

/// A finite groupoid with explicit source/target/unit/inverse/composition
/// tables.  See the module documentation for the composition convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    /// Number of objects; objects are `0..objects`.
    pub objects: usize,
    /// Source object of each arrow.
    pub src: Vec<usize>,
    /// Target object of each arrow.
    pub tgt: Vec<usize>,
    /// Unit arrow of each object.
    pub unit: Vec<usize>,
    /// Inverse of each arrow.
    pub inv: Vec<usize>,
    /// Partial composition table: `(g, h) ↦ g∘h`, defined iff `src(g) = tgt(h)`.
    pub comp: BTreeMap<(usize, usize), usize>,
}

impl FiniteGroupoid {
    /// The discrete groupoid on `n` objects: only unit arrows.
    pub fn discrete(n: usize) -> Self {
        let mut comp = BTreeMap::new();
        for x in 0..n {
            comp.insert((x, x), x);
        }
        FiniteGroupoid {
            objects: n,
            src: (0..n).collect(),
            tgt: (0..n).collect(),
            unit: (0..n).collect(),
            inv: (0..n).collect(),
            comp,
        }
    }

    /// The pair groupoid on `n` points: exactly one arrow between any two
    /// objects.  Arrow `y * n + x` goes from `x` to `y`.
    pub fn pair(n: usize) -> Self {
        let mut g = FiniteGroupoid {
            objects: n,
            src: Vec::new(),
            tgt: Vec::new(),
            unit: vec![0; n],
            inv: Vec::new(),
            comp: BTreeMap::new(),
        };
        for y in 0..n {
            for x in 0..n {
                let a = g.src.len();
                g.src.push(x);
                g.tgt.push(y);
                g.inv.push(x * n + y);
                if x == y {
                    g.unit[x] = a;
                }
            }
        }
        for z in 0..n {
            for y in 0..n {
                for x in 0..n {
                    // (z←y) ∘ (y←x) = z←x
                    g.comp.insert((z * n + y, y * n + x), z * n + x);
                }
            }
        }
        g
    }

    /// One-object groupoid whose automorphism group is given by a
    /// multiplication table (`mul[a][b] = a∘b`, identity element `0`).
    pub fn delooping(mul: &[Vec<usize>]) -> Self {
        let n = mul.len();
        let mut inv = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a][b] == 0 {
                    inv[a] = b;
                }
            }
        }
        let mut comp = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                comp.insert((a, b), mul[a][b]);
            }
        }
        FiniteGroupoid {
            objects: 1,
            src: vec![0; n],
            tgt: vec![0; n],
            unit: vec![0],
            inv,
            comp,
        }
    }

    /// Number of arrows.
    pub fn arrows(&self) -> usize {
        self.src.len()
    }

    /// Composite `g∘h`, if composable.
    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.comp.get(&(g, h)).copied()
    }

    /// `g∘h`, panicking on a non-composable pair (internal use, where
    /// composability is guaranteed by construction).
    pub fn comp2(&self, g: usize, h: usize) -> usize {
        *self
            .comp
            .get(&(g, h))
            .unwrap_or_else(|| panic!("non-composable arrows {g}, {h}"))
    }

    /// Composite of a chain `a_0 ∘ a_1 ∘ … ∘ a_k` (apply the last first).
    pub fn comp_chain(&self, chain: &[usize]) -> usize {
        let mut acc = chain[0];
        for &a in &chain[1..] {
            acc = self.comp2(acc, a);
        }
        acc
    }

    /// Is `a` the unit arrow of its source object?
    pub fn is_unit(&self, a: usize) -> bool {
        self.unit[self.src[a]] == a
    }

    /// All arrows from `x` to `y`.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.arrows())
            .filter(|&a| self.src[a] == x && self.tgt[a] == y)
            .collect()
    }

    /// Connected component of each object (isomorphism classes: in a
    /// groupoid two objects are isomorphic iff they are connected).
    pub fn components(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.objects).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for a in 0..self.arrows() {
            let (rs, rt) = (find(&mut parent, self.src[a]), find(&mut parent, self.tgt[a]));
            if rs != rt {
                parent[rs] = rt;
            }
        }
        (0..self.objects).map(|x| find(&mut parent, x)).collect()
    }

    /// Structural check: every identifier in every table is in range and
    /// every table has the declared length.
    pub fn check_structure(&self) -> Result<(), Error> {
        let n = self.objects;
        let m = self.src.len();
        if self.tgt.len() != m {
            return Err(Error::BadLength { table: "tgt", expected: m, actual: self.tgt.len() });
        }
        if self.inv.len() != m {
            return Err(Error::BadLength { table: "inv", expected: m, actual: self.inv.len() });
        }
        if self.unit.len() != n {
            return Err(Error::BadLength { table: "unit", expected: n, actual: self.unit.len() });
        }
        let check = |table: &'static str, index: usize, value: usize, limit: usize| {
            if value >= limit {
                Err(Error::OutOfRange { table, index, value, limit })
            } else {
                Ok(())
            }
        };
        for (i, &v) in self.src.iter().enumerate() {
            check("src", i, v, n)?;
        }
        for (i, &v) in self.tgt.iter().enumerate() {
            check("tgt", i, v, n)?;
        }
        for (i, &v) in self.unit.iter().enumerate() {
            check("unit", i, v, m)?;
        }
        for (i, &v) in self.inv.iter().enumerate() {
            check("inv", i, v, m)?;
        }
        for (&(g, h), &v) in &self.comp {
            check("comp-key", 0, g, m)?;
            check("comp-key", 1, h, m)?;
            check("comp", g, v, m)?;
        }
        Ok(())
    }

    /// Re-evaluate a single named axiom instance; returns whether it holds.
    /// Used to replay witnesses produced by [`validate_groupoid`].
    pub fn recheck_axiom(&self, w: &Witness) -> bool {
        let ids = &w.ids;
        match w.axiom.as_str() {
            "unit-endpoints" => {
                let x = ids[0];
                self.src[self.unit[x]] == x && self.tgt[self.unit[x]] == x
            }
            "comp-defined-iff-composable" => {
                let (g, h) = (ids[0], ids[1]);
                self.comp.contains_key(&(g, h)) == (self.src[g] == self.tgt[h])
            }
            "comp-endpoints" => {
                let (g, h) = (ids[0], ids[1]);
                match self.compose(g, h) {
                    Some(gh) => self.src[gh] == self.src[h] && self.tgt[gh] == self.tgt[g],
                    None => false,
                }
            }
            "associativity" => {
                let (g, h, k) = (ids[0], ids[1], ids[2]);
                match (self.compose(g, h), self.compose(h, k)) {
                    (Some(gh), Some(hk)) => self.compose(gh, k) == self.compose(g, hk),
                    _ => false,
                }
            }
            "unit-left" => {
                let g = ids[0];
                self.compose(self.unit[self.tgt[g]], g) == Some(g)
            }
            "unit-right" => {
                let g = ids[0];
                self.compose(g, self.unit[self.src[g]]) == Some(g)
            }
            "inverse-left" => {
                let g = ids[0];
                self.compose(self.inv[g], g) == Some(self.unit[self.src[g]])
            }
            "inverse-right" => {
                let g = ids[0];
                self.compose(g, self.inv[g]) == Some(self.unit[self.tgt[g]])
            }
            _ => false,
        }
    }
}

/// Check every groupoid axiom, returning a pass or the first violated axiom
/// with a replayable witness.  Structural malformation (identifiers out of
/// range) is a distinct [`Error`], not an axiom failure.
pub fn validate_groupoid(g: &FiniteGroupoid) -> Result<Verdict, Error> {
    g.check_structure()?;
    for x in 0..g.objects {
        if g.src[g.unit[x]] != x || g.tgt[g.unit[x]] != x {
            return Ok(Verdict::fail("unit-endpoints", &[x]));
        }
    }
    for a in 0..g.arrows() {
        for b in 0..g.arrows() {
            if g.comp.contains_key(&(a, b)) != (g.src[a] == g.tgt[b]) {
                return Ok(Verdict::fail("comp-defined-iff-composable", &[a, b]));
            }
        }
    }
    for (&(a, b), &ab) in &g.comp {
        if g.src[ab] != g.src[b] || g.tgt[ab] != g.tgt[a] {
            return Ok(Verdict::fail("comp-endpoints", &[a, b]));
        }
    }
    for a in 0..g.arrows() {
        for b in 0..g.arrows() {
            if g.src[a] != g.tgt[b] {
                continue;
            }
            for c in 0..g.arrows() {
                if g.src[b] != g.tgt[c] {
                    continue;
                }
                let ab_c = g.compose(g.comp2(a, b), c);
                let a_bc = g.compose(a, g.comp2(b, c));
                if ab_c != a_bc || ab_c.is_none() {
                    return Ok(Verdict::fail("associativity", &[a, b, c]));
                }
            }
        }
    }
    for a in 0..g.arrows() {
        if g.compose(g.unit[g.tgt[a]], a) != Some(a) {
            return Ok(Verdict::fail("unit-left", &[a]));
        }
        if g.compose(a, g.unit[g.src[a]]) != Some(a) {
            return Ok(Verdict::fail("unit-right", &[a]));
        }
        if g.compose(g.inv[a], a) != Some(g.unit[g.src[a]]) {
            return Ok(Verdict::fail("inverse-left", &[a]));
        }
        if g.compose(a, g.inv[a]) != Some(g.unit[g.tgt[a]]) {
            return Ok(Verdict::fail("inverse-right", &[a]));
        }
    }
    Ok(Verdict::pass())
}

/// Does every object have a trivial automorphism group?  In the discrete
/// model this is what it means for a groupoid to present a plain set.
pub fn is_representable(g: &FiniteGroupoid) -> Verdict {
    for a in 0..g.arrows() {
        if g.src[a] == g.tgt[a] && !g.is_unit(a) {
            return Verdict::fail("nontrivial-automorphism", &[g.src[a], a]);
        }
    }
    Verdict::pass()
}
