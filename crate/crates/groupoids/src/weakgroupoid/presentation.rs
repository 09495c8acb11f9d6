//! Weak groupoid objects in finite groupoids: the presentation data, the
//! strict structural identities, and the coherence checker.
//!
//! A presentation consists of a discrete base `M`, a groupoid `G` whose
//! objects play the role of 1-arrows and whose arrows play the role of
//! 2-cells, structure functors `s, t : G → M`, `u : M → G`, `i : G → G`,
//! a multiplication functor `m` on the fibred product of composable pairs,
//! and five natural isomorphisms: the associator, the two unitors, and the
//! two inversors.  Multiplication `m(g, h)` is written `g·h` and requires
//! `s(g) = t(h)`, matching the composition convention of the whole crate.

use crate::core::{
    FiberedProduct, FiniteGroupoid, GroupoidFunctor, NatIso, Verdict, Witness,
};
use crate::error::Error;

/// A weak groupoid object presented in component form.  See the module
/// documentation for the roles of the fields.
#[derive(Debug, Clone)]
pub struct StackyGroupoidPresentation {
    /// The discrete base (in canonical form: arrow ids equal object ids).
    pub base: FiniteGroupoid,
    /// The groupoid of 1-arrows (objects) and 2-cells (arrows).
    pub g: FiniteGroupoid,
    /// Source functor `s : G → M`.
    pub s: GroupoidFunctor,
    /// Target functor `t : G → M`.
    pub t: GroupoidFunctor,
    /// Unit functor `u : M → G`.
    pub u: GroupoidFunctor,
    /// Inversion functor `i : G → G`.
    pub i: GroupoidFunctor,
    /// Composable pairs `(g, h)` with `s(g) = t(h)`.
    pub pairs: FiberedProduct,
    /// Composable triples `(g, h, l)`.
    pub triples: FiberedProduct,
    /// Multiplication functor on composable pairs.
    pub m: GroupoidFunctor,
    /// Associator `α_{g,h,l} : g·(h·l) → (g·h)·l` over composable triples.
    pub alpha: NatIso,
    /// Left unitor `λ_g : u(t(g))·g → g`.
    pub lambda: NatIso,
    /// Right unitor `ρ_g : g·u(s(g)) → g`.
    pub rho: NatIso,
    /// Left inversor `ι_l(g) : i(g)·g → u(s(g))`.
    pub iota_l: NatIso,
    /// Right inversor `ι_r(g) : g·i(g) → u(t(g))`.
    pub iota_r: NatIso,
}

impl StackyGroupoidPresentation {
    /// Assemble a presentation from structure functors, multiplication
    /// closures on objects and arrows of `G`, and component closures for
    /// the five 2-isomorphisms (indexed by objects and object tuples of
    /// `G`).  Structural consistency is enforced here; the mathematical
    /// identities are checked by [`check_strict_identities`] and
    /// [`check_coherence`].
    #[allow(clippy::too_many_arguments)]
    pub fn assemble(
        base: &FiniteGroupoid,
        g: &FiniteGroupoid,
        s: GroupoidFunctor,
        t: GroupoidFunctor,
        u: GroupoidFunctor,
        i: GroupoidFunctor,
        m_ob: impl Fn(usize, usize) -> usize,
        m_arr: impl Fn(usize, usize) -> usize,
        alpha: impl Fn(usize, usize, usize) -> usize,
        lambda: impl Fn(usize) -> usize,
        rho: impl Fn(usize) -> usize,
        iota_l: impl Fn(usize) -> usize,
        iota_r: impl Fn(usize) -> usize,
    ) -> Result<Self, Error> {
        if *base != FiniteGroupoid::discrete(base.objects) {
            return Err(Error::Mismatch { what: "presentation base (must be canonical discrete)" });
        }
        let endpoints_ok = s.dom == *g
            && s.cod == *base
            && t.dom == *g
            && t.cod == *base
            && u.dom == *base
            && u.cod == *g
            && i.dom == *g
            && i.cod == *g;
        if !endpoints_ok {
            return Err(Error::Mismatch { what: "presentation structure functor endpoints" });
        }
        let pairs = FiberedProduct::new(&[(&s, &t)])?;
        let triples = FiberedProduct::new(&[(&s, &t), (&s, &t)])?;

        let m_ob_table: Vec<usize> = pairs.objects.iter().map(|t| m_ob(t[0], t[1])).collect();
        let m_arr_table: Vec<usize> = pairs.arrows.iter().map(|t| m_arr(t[0], t[1])).collect();
        for (idx, &v) in m_ob_table.iter().enumerate() {
            if v >= g.objects {
                return Err(Error::OutOfRange {
                    table: "multiplication-ob",
                    index: idx,
                    value: v,
                    limit: g.objects,
                });
            }
        }
        for (idx, &v) in m_arr_table.iter().enumerate() {
            if v >= g.arrows() {
                return Err(Error::OutOfRange {
                    table: "multiplication-arr",
                    index: idx,
                    value: v,
                    limit: g.arrows(),
                });
            }
        }
        let m = GroupoidFunctor {
            dom: pairs.groupoid.clone(),
            cod: g.clone(),
            ob: m_ob_table,
            arr: m_arr_table,
        };

        // Products of objects/arrows, failing on non-composable input so
        // that malformed closures surface as errors, not panics.
        let mul_o = |x: usize, y: usize| -> Result<usize, Error> {
            pairs
                .object(&[x, y])
                .map(|o| m.ob[o])
                .ok_or(Error::Mismatch { what: "non-composable object pair in multiplication" })
        };
        let mul_a = |x: usize, y: usize| -> Result<usize, Error> {
            pairs
                .arrow(&[x, y])
                .map(|a| m.arr[a])
                .ok_or(Error::Mismatch { what: "non-composable arrow pair in multiplication" })
        };

        // The composite functors the five 2-isomorphisms run between.
        let mut assoc_dom_ob = Vec::with_capacity(triples.objects.len());
        let mut assoc_cod_ob = Vec::with_capacity(triples.objects.len());
        for tr in &triples.objects {
            assoc_dom_ob.push(mul_o(tr[0], mul_o(tr[1], tr[2])?)?);
            assoc_cod_ob.push(mul_o(mul_o(tr[0], tr[1])?, tr[2])?);
        }
        let mut assoc_dom_arr = Vec::with_capacity(triples.arrows.len());
        let mut assoc_cod_arr = Vec::with_capacity(triples.arrows.len());
        for tr in &triples.arrows {
            assoc_dom_arr.push(mul_a(tr[0], mul_a(tr[1], tr[2])?)?);
            assoc_cod_arr.push(mul_a(mul_a(tr[0], tr[1])?, tr[2])?);
        }
        let assoc_dom = GroupoidFunctor {
            dom: triples.groupoid.clone(),
            cod: g.clone(),
            ob: assoc_dom_ob,
            arr: assoc_dom_arr,
        };
        let assoc_cod = GroupoidFunctor {
            dom: triples.groupoid.clone(),
            cod: g.clone(),
            ob: assoc_cod_ob,
            arr: assoc_cod_arr,
        };

        let ut = t.then(&u)?;
        let us = s.then(&u)?;
        let build_endo = |left: &dyn Fn(usize) -> (usize, usize),
                          arr_left: &dyn Fn(usize) -> (usize, usize)|
         -> Result<GroupoidFunctor, Error> {
            let mut ob = Vec::with_capacity(g.objects);
            for x in 0..g.objects {
                let (p, q) = left(x);
                ob.push(mul_o(p, q)?);
            }
            let mut arr = Vec::with_capacity(g.arrows());
            for a in 0..g.arrows() {
                let (p, q) = arr_left(a);
                arr.push(mul_a(p, q)?);
            }
            Ok(GroupoidFunctor { dom: g.clone(), cod: g.clone(), ob, arr })
        };
        let lambda_dom = build_endo(&|x| (ut.ob[x], x), &|a| (ut.arr[a], a))?;
        let rho_dom = build_endo(&|x| (x, us.ob[x]), &|a| (a, us.arr[a]))?;
        let iota_l_dom = build_endo(&|x| (i.ob[x], x), &|a| (i.arr[a], a))?;
        let iota_r_dom = build_endo(&|x| (x, i.ob[x]), &|a| (a, i.arr[a]))?;
        let id_g = GroupoidFunctor::identity(g);

        let component = |table: &'static str,
                         len: usize,
                         f: &dyn Fn(usize) -> usize|
         -> Result<Vec<usize>, Error> {
            let out: Vec<usize> = (0..len).map(f).collect();
            for (idx, &v) in out.iter().enumerate() {
                if v >= g.arrows() {
                    return Err(Error::OutOfRange { table, index: idx, value: v, limit: g.arrows() });
                }
            }
            Ok(out)
        };
        let alpha_component = component("associator-component", triples.objects.len(), &|o| {
            let tr = &triples.objects[o];
            alpha(tr[0], tr[1], tr[2])
        })?;
        let lambda_component = component("left-unitor-component", g.objects, &lambda)?;
        let rho_component = component("right-unitor-component", g.objects, &rho)?;
        let iota_l_component = component("left-inversor-component", g.objects, &iota_l)?;
        let iota_r_component = component("right-inversor-component", g.objects, &iota_r)?;

        let alpha = NatIso { dom: assoc_dom, cod: assoc_cod, component: alpha_component };
        let lambda = NatIso { dom: lambda_dom, cod: id_g.clone(), component: lambda_component };
        let rho = NatIso { dom: rho_dom, cod: id_g, component: rho_component };
        let iota_l = NatIso { dom: iota_l_dom, cod: us, component: iota_l_component };
        let iota_r = NatIso { dom: iota_r_dom, cod: ut, component: iota_r_component };

        Ok(StackyGroupoidPresentation {
            base: base.clone(),
            g: g.clone(),
            s,
            t,
            u,
            i,
            pairs,
            triples,
            m,
            alpha,
            lambda,
            rho,
            iota_l,
            iota_r,
        })
    }

    /// Lift an honest finite groupoid to a strict presentation: the base is
    /// its object set, `G` is the discrete groupoid on its arrows, and all
    /// five 2-isomorphisms are identities.
    pub fn strict(h: &FiniteGroupoid) -> Result<Self, Error> {
        let base = FiniteGroupoid::discrete(h.objects);
        let g = FiniteGroupoid::discrete(h.arrows());
        let s = GroupoidFunctor::from_maps(&g, &base, |a| h.src[a], |a| h.src[a]);
        let t = GroupoidFunctor::from_maps(&g, &base, |a| h.tgt[a], |a| h.tgt[a]);
        let u = GroupoidFunctor::from_maps(&base, &g, |x| h.unit[x], |x| h.unit[x]);
        let i = GroupoidFunctor::from_maps(&g, &g, |a| h.inv[a], |a| h.inv[a]);
        Self::assemble(
            &base,
            &g,
            s,
            t,
            u,
            i,
            |a, b| h.comp2(a, b),
            |a, b| h.comp2(a, b),
            |a, b, c| h.comp_chain(&[a, b, c]),
            |a| a,
            |a| a,
            |a| h.comp2(h.inv[a], a),
            |a| h.comp2(a, h.inv[a]),
        )
    }

    /// Product `g·h` of two objects of `G` (panics on a non-composable pair).
    pub fn mul_ob(&self, a: usize, b: usize) -> usize {
        self.m.ob[self.pairs.object2(&[a, b])]
    }

    /// Horizontal composite `a·b` of two 2-cells (panics when their
    /// endpoints are not composable).
    pub fn mul_arr(&self, a: usize, b: usize) -> usize {
        self.m.arr[self.pairs.arrow2(&[a, b])]
    }

    /// Horizontal composite of 2-cells, `None` when not composable.
    pub fn try_mul_arr(&self, a: usize, b: usize) -> Option<usize> {
        self.pairs.arrow(&[a, b]).map(|x| self.m.arr[x])
    }

    /// Identity 2-cell of an object of `G`.
    pub fn id2(&self, v: usize) -> usize {
        self.g.unit[v]
    }

    /// Associator component at a composable triple of objects.
    pub fn alpha_at(&self, a: usize, b: usize, c: usize) -> usize {
        self.alpha.component[self.triples.object2(&[a, b, c])]
    }

    /// Associator component, `None` when the triple is not composable.
    pub fn try_alpha_at(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        self.triples.object(&[a, b, c]).map(|o| self.alpha.component[o])
    }

    /// Left unitor component at an object of `G`.
    pub fn lambda_at(&self, v: usize) -> usize {
        self.lambda.component[v]
    }

    /// Right unitor component at an object of `G`.
    pub fn rho_at(&self, v: usize) -> usize {
        self.rho.component[v]
    }

    /// Left inversor component at an object of `G`.
    pub fn iota_l_at(&self, v: usize) -> usize {
        self.iota_l.component[v]
    }

    /// Right inversor component at an object of `G`.
    pub fn iota_r_at(&self, v: usize) -> usize {
        self.iota_r.component[v]
    }

    /// Vertical composite of a chain of 2-cells (apply the last first),
    /// `None` when some step is not composable.
    pub fn vcomp(&self, parts: &[usize]) -> Option<usize> {
        let mut acc = parts[0];
        for &p in &parts[1..] {
            acc = self.g.compose(acc, p)?;
        }
        Some(acc)
    }
}

/// Prefix a failed verdict's axiom name with the component it came from.
fn prefixed(name: &str, v: Verdict) -> Verdict {
    match v.witness {
        Some(w) => Verdict::from_witness(Witness::new(&format!("{name}-{}", w.axiom), &w.ids)),
        None => v,
    }
}

/// First point where two parallel functors differ, as a failed verdict.
fn functors_equal(axiom: &str, f: &GroupoidFunctor, g: &GroupoidFunctor) -> Verdict {
    for (x, (&a, &b)) in f.ob.iter().zip(&g.ob).enumerate() {
        if a != b {
            return Verdict::from_witness(Witness::new(axiom, &[x, a, b]));
        }
    }
    for (m, (&a, &b)) in f.arr.iter().zip(&g.arr).enumerate() {
        if a != b {
            return Verdict::from_witness(Witness::new(axiom, &[m, a, b]));
        }
    }
    Verdict::pass()
}

/// The strict structural identities of a presentation: functoriality of
/// every structure functor, `s∘u = t∘u = id`, `s∘i = t`, `t∘i = s`, and the
/// compatibility of `s`, `t` with multiplication through the projections.
pub fn check_strict_identities(sg: &StackyGroupoidPresentation) -> Result<Verdict, Error> {
    let named: [(&str, &GroupoidFunctor); 5] = [
        ("source", &sg.s),
        ("target", &sg.t),
        ("unit", &sg.u),
        ("inverse", &sg.i),
        ("multiplication", &sg.m),
    ];
    for (name, f) in named {
        let v = f.validate()?;
        if !v.passed {
            return Ok(prefixed(name, v));
        }
    }
    let id_base = GroupoidFunctor::identity(&sg.base);
    let checks = [
        ("strict-source-unit", sg.u.then(&sg.s)?, id_base.clone()),
        ("strict-target-unit", sg.u.then(&sg.t)?, id_base),
        ("strict-source-inverse", sg.i.then(&sg.s)?, sg.t.clone()),
        ("strict-target-inverse", sg.i.then(&sg.t)?, sg.s.clone()),
        (
            "strict-source-multiplication",
            sg.m.then(&sg.s)?,
            sg.pairs.projections[1].then(&sg.s)?,
        ),
        (
            "strict-target-multiplication",
            sg.m.then(&sg.t)?,
            sg.pairs.projections[0].then(&sg.t)?,
        ),
    ];
    for (axiom, f, g) in &checks {
        let v = functors_equal(axiom, f, g);
        if !v.passed {
            return Ok(v);
        }
    }
    Ok(Verdict::pass())
}

/// The coherence diagrams of a presentation: naturality of the five
/// 2-isomorphisms, then the pentagon, the three unit diagrams, and the
/// inverse zigzag, each checked over every composable tuple of objects.
/// Assumes [`check_strict_identities`] passed.
pub fn check_coherence(sg: &StackyGroupoidPresentation) -> Result<Verdict, Error> {
    let named: [(&str, &NatIso); 5] = [
        ("associator", &sg.alpha),
        ("left-unitor", &sg.lambda),
        ("right-unitor", &sg.rho),
        ("left-inversor", &sg.iota_l),
        ("right-inversor", &sg.iota_r),
    ];
    for (name, n) in named {
        let v = n.validate()?;
        if !v.passed {
            return Ok(prefixed(name, v));
        }
    }

    // Unit diagrams over composable pairs (g, h).
    for p in &sg.pairs.objects {
        let (g, h) = (p[0], p[1]);
        let left = (|| {
            let one = sg.u.ob[sg.t.ob[g]];
            let lhs = sg.vcomp(&[
                sg.try_mul_arr(sg.lambda_at(g), sg.id2(h))?,
                sg.try_alpha_at(one, g, h)?,
            ])?;
            Some(lhs == sg.lambda_at(sg.mul_ob(g, h)))
        })();
        if left != Some(true) {
            return Ok(Verdict::fail("coherence-unit-left", &[g, h]));
        }
        let middle = (|| {
            let one = sg.u.ob[sg.s.ob[g]];
            let lhs = sg.vcomp(&[
                sg.try_mul_arr(sg.rho_at(g), sg.id2(h))?,
                sg.try_alpha_at(g, one, h)?,
            ])?;
            let rhs = sg.try_mul_arr(sg.id2(g), sg.lambda_at(h))?;
            Some(lhs == rhs)
        })();
        if middle != Some(true) {
            return Ok(Verdict::fail("coherence-unit-middle", &[g, h]));
        }
        let right = (|| {
            let one = sg.u.ob[sg.s.ob[h]];
            let lhs = sg.vcomp(&[sg.rho_at(sg.mul_ob(g, h)), sg.try_alpha_at(g, h, one)?])?;
            let rhs = sg.try_mul_arr(sg.id2(g), sg.rho_at(h))?;
            Some(lhs == rhs)
        })();
        if right != Some(true) {
            return Ok(Verdict::fail("coherence-unit-right", &[g, h]));
        }
    }

    // Pentagon over composable quadruples (k, g, h, l), enumerated from
    // the composable triples directly (the quadruple groupoid itself is
    // never needed and would be expensive to build).
    let quads = sg.triples.objects.iter().flat_map(|tr| {
        (0..sg.g.objects)
            .filter(move |&l| sg.s.ob[tr[2]] == sg.t.ob[l])
            .map(move |l| (tr[0], tr[1], tr[2], l))
    });
    for (k, g, h, l) in quads {
        let holds = (|| {
            let lhs = sg.vcomp(&[
                sg.try_alpha_at(sg.mul_ob(k, g), h, l)?,
                sg.try_alpha_at(k, g, sg.mul_ob(h, l))?,
            ])?;
            let rhs = sg.vcomp(&[
                sg.try_mul_arr(sg.try_alpha_at(k, g, h)?, sg.id2(l))?,
                sg.try_alpha_at(k, sg.mul_ob(g, h), l)?,
                sg.try_mul_arr(sg.id2(k), sg.try_alpha_at(g, h, l)?)?,
            ])?;
            Some(lhs == rhs)
        })();
        if holds != Some(true) {
            return Ok(Verdict::fail("coherence-pentagon", &[k, g, h, l]));
        }
    }

    // Inverse zigzag over single objects.
    for v in 0..sg.g.objects {
        let gi = sg.i.ob[v];
        let holds = (|| {
            let lhs = sg.vcomp(&[sg.rho_at(v), sg.try_mul_arr(sg.id2(v), sg.iota_l_at(v))?])?;
            let rhs = sg.vcomp(&[
                sg.lambda_at(v),
                sg.try_mul_arr(sg.iota_r_at(v), sg.id2(v))?,
                sg.try_alpha_at(v, gi, v)?,
            ])?;
            Some(lhs == rhs)
        })();
        if holds != Some(true) {
            return Ok(Verdict::fail("coherence-inverse-zigzag", &[v]));
        }
    }

    Ok(Verdict::pass())
}
