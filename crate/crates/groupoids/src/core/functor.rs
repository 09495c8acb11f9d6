//! Functors between finite groupoids, natural isomorphisms, and the
//! equivalence-theoretic predicates (faithful, full, essentially
//! surjective, weakly representable).

use crate::core::groupoid::{is_representable, FiniteGroupoid, Verdict};
use crate::error::Error;

/// A functor between finite groupoids, stored as explicit object and arrow
/// maps together with owned copies of its (co)domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidFunctor {
    pub dom: FiniteGroupoid,
    pub cod: FiniteGroupoid,
    /// Image of each object of `dom`.
    pub ob: Vec<usize>,
    /// Image of each arrow of `dom`.
    pub arr: Vec<usize>,
}

impl GroupoidFunctor {
    pub fn identity(g: &FiniteGroupoid) -> Self {
        GroupoidFunctor {
            dom: g.clone(),
            cod: g.clone(),
            ob: (0..g.objects).collect(),
            arr: (0..g.arrows()).collect(),
        }
    }

    /// Build a functor from closures on objects and arrows.
    pub fn from_maps(
        dom: &FiniteGroupoid,
        cod: &FiniteGroupoid,
        ob: impl Fn(usize) -> usize,
        arr: impl Fn(usize) -> usize,
    ) -> Self {
        GroupoidFunctor {
            dom: dom.clone(),
            cod: cod.clone(),
            ob: (0..dom.objects).map(ob).collect(),
            arr: (0..dom.arrows()).map(arr).collect(),
        }
    }

    /// The inclusion of the object set of `g`, as a discrete groupoid,
    /// into `g`.  This is the canonical atlas of the discrete model.
    pub fn object_inclusion(g: &FiniteGroupoid) -> Self {
        GroupoidFunctor {
            dom: FiniteGroupoid::discrete(g.objects),
            cod: g.clone(),
            ob: (0..g.objects).collect(),
            arr: g.unit.clone(),
        }
    }

    /// The unique functor into a discrete groupoid with the given object
    /// map (arrows are forced to units).
    pub fn to_discrete(dom: &FiniteGroupoid, base: usize, ob: Vec<usize>) -> Self {
        let cod = FiniteGroupoid::discrete(base);
        let arr = (0..dom.arrows()).map(|a| ob[dom.src[a]]).collect();
        GroupoidFunctor { dom: dom.clone(), cod, ob, arr }
    }

    /// Composite `g ∘ self` (apply `self` first).
    pub fn then(&self, g: &GroupoidFunctor) -> Result<GroupoidFunctor, Error> {
        if self.cod != g.dom {
            return Err(Error::Mismatch { what: "functor composition endpoints" });
        }
        Ok(GroupoidFunctor {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            ob: self.ob.iter().map(|&x| g.ob[x]).collect(),
            arr: self.arr.iter().map(|&a| g.arr[a]).collect(),
        })
    }

    /// Strict equality of parallel functors: same object and arrow maps.
    pub fn same_as(&self, other: &GroupoidFunctor) -> bool {
        self.ob == other.ob && self.arr == other.arr
    }

    /// Structural and functoriality check.
    pub fn validate(&self) -> Result<Verdict, Error> {
        if self.ob.len() != self.dom.objects {
            return Err(Error::BadLength {
                table: "functor-ob",
                expected: self.dom.objects,
                actual: self.ob.len(),
            });
        }
        if self.arr.len() != self.dom.arrows() {
            return Err(Error::BadLength {
                table: "functor-arr",
                expected: self.dom.arrows(),
                actual: self.arr.len(),
            });
        }
        for (i, &v) in self.ob.iter().enumerate() {
            if v >= self.cod.objects {
                return Err(Error::OutOfRange {
                    table: "functor-ob",
                    index: i,
                    value: v,
                    limit: self.cod.objects,
                });
            }
        }
        for (i, &v) in self.arr.iter().enumerate() {
            if v >= self.cod.arrows() {
                return Err(Error::OutOfRange {
                    table: "functor-arr",
                    index: i,
                    value: v,
                    limit: self.cod.arrows(),
                });
            }
        }
        for a in 0..self.dom.arrows() {
            if self.cod.src[self.arr[a]] != self.ob[self.dom.src[a]] {
                return Ok(Verdict::fail("functor-src", &[a]));
            }
            if self.cod.tgt[self.arr[a]] != self.ob[self.dom.tgt[a]] {
                return Ok(Verdict::fail("functor-tgt", &[a]));
            }
        }
        for x in 0..self.dom.objects {
            if self.arr[self.dom.unit[x]] != self.cod.unit[self.ob[x]] {
                return Ok(Verdict::fail("functor-unit", &[x]));
            }
        }
        for (&(a, b), &ab) in &self.dom.comp {
            if self.cod.compose(self.arr[a], self.arr[b]) != Some(self.arr[ab]) {
                return Ok(Verdict::fail("functor-comp", &[a, b]));
            }
        }
        Ok(Verdict::pass())
    }
}

/// A natural isomorphism between parallel functors, stored in component
/// form: one arrow of the codomain per object of the domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatIso {
    /// Source functor `F`.
    pub dom: GroupoidFunctor,
    /// Target functor `G` (parallel to `F`).
    pub cod: GroupoidFunctor,
    /// `component[x] : F(x) → G(x)` in the common codomain.
    pub component: Vec<usize>,
}

impl NatIso {
    /// The identity natural transformation of a functor.
    pub fn identity(f: &GroupoidFunctor) -> Self {
        let component = f.ob.iter().map(|&x| f.cod.unit[x]).collect();
        NatIso { dom: f.clone(), cod: f.clone(), component }
    }

    pub fn from_components(
        f: &GroupoidFunctor,
        g: &GroupoidFunctor,
        component: impl Fn(usize) -> usize,
    ) -> Self {
        NatIso {
            dom: f.clone(),
            cod: g.clone(),
            component: (0..f.dom.objects).map(component).collect(),
        }
    }

    /// The inverse natural isomorphism (components inverted).
    pub fn inverse(&self) -> NatIso {
        NatIso {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            component: self.component.iter().map(|&a| self.dom.cod.inv[a]).collect(),
        }
    }

    /// Component typing and naturality over every arrow of the domain.
    pub fn validate(&self) -> Result<Verdict, Error> {
        if !(self.dom.dom == self.cod.dom && self.dom.cod == self.cod.cod) {
            return Err(Error::Mismatch { what: "natural transformation endpoints" });
        }
        if self.component.len() != self.dom.dom.objects {
            return Err(Error::BadLength {
                table: "natiso-component",
                expected: self.dom.dom.objects,
                actual: self.component.len(),
            });
        }
        let y = &self.dom.cod;
        for x in 0..self.dom.dom.objects {
            let c = self.component[x];
            if c >= y.arrows() {
                return Err(Error::OutOfRange {
                    table: "natiso-component",
                    index: x,
                    value: c,
                    limit: y.arrows(),
                });
            }
            if y.src[c] != self.dom.ob[x] || y.tgt[c] != self.cod.ob[x] {
                return Ok(Verdict::fail("natiso-component-endpoints", &[x, c]));
            }
        }
        for a in 0..self.dom.dom.arrows() {
            let (sx, tx) = (self.dom.dom.src[a], self.dom.dom.tgt[a]);
            let lhs = y.comp2(self.component[tx], self.dom.arr[a]);
            let rhs = y.comp2(self.cod.arr[a], self.component[sx]);
            if lhs != rhs {
                return Ok(Verdict::fail("naturality", &[a]));
            }
        }
        Ok(Verdict::pass())
    }
}

/// Injectivity on every hom-set.
pub fn is_faithful(f: &GroupoidFunctor) -> Verdict {
    for a in 0..f.dom.arrows() {
        for b in (a + 1)..f.dom.arrows() {
            if f.dom.src[a] == f.dom.src[b]
                && f.dom.tgt[a] == f.dom.tgt[b]
                && f.arr[a] == f.arr[b]
            {
                return Verdict::fail("faithful", &[a, b]);
            }
        }
    }
    Verdict::pass()
}

/// Surjectivity on every hom-set.
pub fn is_full(f: &GroupoidFunctor) -> Verdict {
    for x in 0..f.dom.objects {
        for y in 0..f.dom.objects {
            for c in f.cod.hom(f.ob[x], f.ob[y]) {
                let hit = (0..f.dom.arrows()).any(|a| {
                    f.dom.src[a] == x && f.dom.tgt[a] == y && f.arr[a] == c
                });
                if !hit {
                    return Verdict::fail("full", &[x, y, c]);
                }
            }
        }
    }
    Verdict::pass()
}

/// Bijectivity on every hom-set, checked by hom-set counting plus
/// injectivity (the canonical route in a finite setting).
pub fn is_fully_faithful(f: &GroupoidFunctor) -> Verdict {
    is_faithful(f).and(|| is_full(f))
}

/// Every object of the codomain is isomorphic to an image object.  In a
/// groupoid, isomorphism classes are connected components.
pub fn is_essentially_surjective(f: &GroupoidFunctor) -> Verdict {
    let comps = f.cod.components();
    let mut hit = vec![false; f.cod.objects];
    for &fx in &f.ob {
        hit[comps[fx]] = true;
    }
    for y in 0..f.cod.objects {
        if !hit[comps[y]] {
            return Verdict::fail("essentially-surjective", &[y]);
        }
    }
    Verdict::pass()
}

/// Equivalence of groupoids: fully faithful and essentially surjective.
pub fn is_equivalence(f: &GroupoidFunctor) -> Verdict {
    is_fully_faithful(f).and(|| is_essentially_surjective(f))
}

/// Weak representability of `F : X → Y` in the discrete model: the comma
/// fibred product of `F` with the object-set atlas of `Y` must present a
/// set, i.e. have trivial automorphism groups.
pub fn is_weakly_representable(f: &GroupoidFunctor) -> Result<Verdict, Error> {
    let atlas = GroupoidFunctor::object_inclusion(&f.cod);
    let comma = crate::core::comma::iso_comma(f, &atlas)?;
    Ok(is_representable(&comma.groupoid))
}
