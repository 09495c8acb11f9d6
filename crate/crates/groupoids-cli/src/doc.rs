//! The versioned document schema: a JSON envelope with a `schemaVersion`,
//! a `kind` tag, and a `payload` of flat identifier tables matching the
//! library types.  Derived tables (composable pairs, action domains,
//! interchange triples) are never serialized; components are stored in
//! the library's canonical enumeration order, which makes the canonical
//! serialization round-trip bit-exact.

use std::collections::BTreeMap;

use groupoids::action::WeakAction;
use groupoids::core::{FiberedProduct, FiniteGroup, FiniteGroupoid, GroupoidFunctor, NatIso, Side};
use groupoids::morita::StackyBibundle;
use groupoids::weakgroupoid::{CrossedModuleData, Skeletal2GroupData, StackyGroupoidPresentation};
use serde::{Deserialize, Serialize};

/// Version of the document schema this build reads and writes.
pub const SCHEMA_VERSION: u64 = 1;

/// Errors surfaced while reading documents: schema problems (syntax,
/// version, lengths, dangling identifiers) are distinct from internal
/// invariant violations; mathematical failures are never a [`DocError`],
/// they are verdicts.
#[derive(Debug)]
pub enum DocError {
    Schema(String),
    Internal(String),
}

impl std::fmt::Display for DocError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DocError::Schema(m) => write!(f, "schema error: {m}"),
            DocError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

fn schema(e: impl std::fmt::Display) -> DocError {
    DocError::Schema(e.to_string())
}

fn expect_len(table: &str, actual: usize, expected: usize) -> Result<(), DocError> {
    if actual != expected {
        return Err(DocError::Schema(format!(
            "table `{table}` has {actual} entries, expected {expected}"
        )));
    }
    Ok(())
}

/// A parsed document: envelope plus one payload.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Document {
    #[serde(rename = "schemaVersion")]
    pub schema_version: u64,
    #[serde(flatten)]
    pub body: Body,
}

/// The payload, tagged by document kind.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "kebab-case")]
pub enum Body {
    Groupoid(GroupoidDoc),
    Functor(FunctorDoc),
    Natiso(NatIsoDoc),
    StackyGroupoid(PresentationDoc),
    Action(ActionDoc),
    Bibundle(BibundleDoc),
    CrossedModule(CrossedModuleDoc),
    Skeletal(SkeletalDoc),
}

impl Document {
    pub fn new(body: Body) -> Self {
        Document { schema_version: SCHEMA_VERSION, body }
    }

    /// Human-visible name of the payload kind.
    pub fn kind(&self) -> &'static str {
        match self.body {
            Body::Groupoid(_) => "groupoid",
            Body::Functor(_) => "functor",
            Body::Natiso(_) => "natiso",
            Body::StackyGroupoid(_) => "stacky-groupoid",
            Body::Action(_) => "action",
            Body::Bibundle(_) => "bibundle",
            Body::CrossedModule(_) => "crossed-module",
            Body::Skeletal(_) => "skeletal",
        }
    }
}

/// Parse a document, rejecting unknown schema versions.  Syntax
/// diagnostics carry the line and column from the JSON reader.
pub fn parse(text: &str) -> Result<Document, DocError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| {
        DocError::Schema(format!("line {}, column {}: {e}", e.line(), e.column()))
    })?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(DocError::Schema(format!(
            "schemaVersion {} is not supported (expected {SCHEMA_VERSION})",
            doc.schema_version
        )));
    }
    Ok(doc)
}

/// Canonical serialization: pretty-printed JSON with fields in schema
/// order and derived tables omitted, terminated by a newline.
pub fn serialize(doc: &Document) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("document serialization");
    text.push('\n');
    text
}

/// A finite groupoid as flat tables; `comp` lists `[g, h, g∘h]` triples
/// in lexicographic order.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidDoc {
    pub objects: usize,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub unit: Vec<usize>,
    pub inv: Vec<usize>,
    pub comp: Vec<[usize; 3]>,
}

impl GroupoidDoc {
    pub fn of(g: &FiniteGroupoid) -> Self {
        GroupoidDoc {
            objects: g.objects,
            src: g.src.clone(),
            tgt: g.tgt.clone(),
            unit: g.unit.clone(),
            inv: g.inv.clone(),
            comp: g.comp.iter().map(|(&(a, b), &c)| [a, b, c]).collect(),
        }
    }

    pub fn build(&self) -> Result<FiniteGroupoid, DocError> {
        let mut comp = BTreeMap::new();
        for &[a, b, c] in &self.comp {
            if comp.insert((a, b), c).is_some() {
                return Err(DocError::Schema(format!("duplicate composition entry ({a}, {b})")));
            }
        }
        let g = FiniteGroupoid {
            objects: self.objects,
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            unit: self.unit.clone(),
            inv: self.inv.clone(),
            comp,
        };
        g.check_structure().map_err(schema)?;
        Ok(g)
    }
}

/// A functor as object and arrow tables between two inline groupoids.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub dom: GroupoidDoc,
    pub cod: GroupoidDoc,
    pub ob: Vec<usize>,
    pub arr: Vec<usize>,
}

impl FunctorDoc {
    pub fn of(f: &GroupoidFunctor) -> Self {
        FunctorDoc {
            dom: GroupoidDoc::of(&f.dom),
            cod: GroupoidDoc::of(&f.cod),
            ob: f.ob.clone(),
            arr: f.arr.clone(),
        }
    }

    /// Structural build: lengths and identifier ranges are enforced;
    /// functoriality is a verdict, left to the commands.
    pub fn build(&self) -> Result<GroupoidFunctor, DocError> {
        let f = GroupoidFunctor {
            dom: self.dom.build()?,
            cod: self.cod.build()?,
            ob: self.ob.clone(),
            arr: self.arr.clone(),
        };
        f.validate().map_err(schema)?;
        Ok(f)
    }
}

/// A natural isomorphism as a component table between two inline
/// functors.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatIsoDoc {
    pub dom: FunctorDoc,
    pub cod: FunctorDoc,
    pub component: Vec<usize>,
}

impl NatIsoDoc {
    pub fn of(n: &NatIso) -> Self {
        NatIsoDoc {
            dom: FunctorDoc::of(&n.dom),
            cod: FunctorDoc::of(&n.cod),
            component: n.component.clone(),
        }
    }

    pub fn build(&self) -> Result<NatIso, DocError> {
        let n = NatIso {
            dom: self.dom.build()?,
            cod: self.cod.build()?,
            component: self.component.clone(),
        };
        n.validate().map_err(schema)?;
        Ok(n)
    }
}

/// A presented stacky groupoid: the base point count, the 2-cell
/// groupoid, the four structure functors, multiplication tables in
/// composable-pair order, and the five coherator component tables
/// (associator in composable-triple order, the rest per 1-cell).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDoc {
    pub base_points: usize,
    pub g: GroupoidDoc,
    pub s_ob: Vec<usize>,
    pub s_arr: Vec<usize>,
    pub t_ob: Vec<usize>,
    pub t_arr: Vec<usize>,
    pub u_ob: Vec<usize>,
    pub u_arr: Vec<usize>,
    pub i_ob: Vec<usize>,
    pub i_arr: Vec<usize>,
    pub m_ob: Vec<usize>,
    pub m_arr: Vec<usize>,
    pub alpha: Vec<usize>,
    pub lambda: Vec<usize>,
    pub rho: Vec<usize>,
    pub iota_l: Vec<usize>,
    pub iota_r: Vec<usize>,
}

impl PresentationDoc {
    pub fn of(sg: &StackyGroupoidPresentation) -> Self {
        PresentationDoc {
            base_points: sg.base.objects,
            g: GroupoidDoc::of(&sg.g),
            s_ob: sg.s.ob.clone(),
            s_arr: sg.s.arr.clone(),
            t_ob: sg.t.ob.clone(),
            t_arr: sg.t.arr.clone(),
            u_ob: sg.u.ob.clone(),
            u_arr: sg.u.arr.clone(),
            i_ob: sg.i.ob.clone(),
            i_arr: sg.i.arr.clone(),
            m_ob: sg.m.ob.clone(),
            m_arr: sg.m.arr.clone(),
            alpha: sg.alpha.component.clone(),
            lambda: sg.lambda.component.clone(),
            rho: sg.rho.component.clone(),
            iota_l: sg.iota_l.component.clone(),
            iota_r: sg.iota_r.component.clone(),
        }
    }

    pub fn build(&self) -> Result<StackyGroupoidPresentation, DocError> {
        let g = self.g.build()?;
        let base = FiniteGroupoid::discrete(self.base_points);
        let functor = |dom: &FiniteGroupoid,
                       cod: &FiniteGroupoid,
                       ob: &[usize],
                       arr: &[usize]|
         -> Result<GroupoidFunctor, DocError> {
            let f = GroupoidFunctor {
                dom: dom.clone(),
                cod: cod.clone(),
                ob: ob.to_vec(),
                arr: arr.to_vec(),
            };
            f.validate().map_err(schema)?;
            Ok(f)
        };
        let s = functor(&g, &base, &self.s_ob, &self.s_arr)?;
        let t = functor(&g, &base, &self.t_ob, &self.t_arr)?;
        let u = functor(&base, &g, &self.u_ob, &self.u_arr)?;
        let i = functor(&g, &g, &self.i_ob, &self.i_arr)?;
        let pairs = FiberedProduct::new(&[(&s, &t)]).map_err(schema)?;
        let triples = FiberedProduct::new(&[(&s, &t), (&s, &t)]).map_err(schema)?;
        expect_len("m_ob", self.m_ob.len(), pairs.objects.len())?;
        expect_len("m_arr", self.m_arr.len(), pairs.arrows.len())?;
        expect_len("alpha", self.alpha.len(), triples.objects.len())?;
        for (table, data) in [
            ("lambda", &self.lambda),
            ("rho", &self.rho),
            ("iota_l", &self.iota_l),
            ("iota_r", &self.iota_r),
        ] {
            expect_len(table, data.len(), g.objects)?;
        }
        StackyGroupoidPresentation::assemble(
            &base,
            &g,
            s.clone(),
            t.clone(),
            u,
            i,
            |a, b| self.m_ob[pairs.object2(&[a, b])],
            |a, b| self.m_arr[pairs.arrow2(&[a, b])],
            |a, b, c| self.alpha[triples.object2(&[a, b, c])],
            |v| self.lambda[v],
            |v| self.rho[v],
            |v| self.iota_l[v],
            |v| self.iota_r[v],
        )
        .map_err(schema)
    }
}

/// A weak action: the acting presentation, the carrier, the side, the
/// moment map, the action tables in composable-pair order, and the
/// coherator components (associator per composable triple, unitor per
/// carrier object).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub sg: PresentationDoc,
    pub x: GroupoidDoc,
    pub side: String,
    pub mu_ob: Vec<usize>,
    pub mu_arr: Vec<usize>,
    pub act_ob: Vec<usize>,
    pub act_arr: Vec<usize>,
    pub beta: Vec<usize>,
    pub epsilon: Vec<usize>,
}

impl ActionDoc {
    pub fn of(wa: &WeakAction) -> Self {
        ActionDoc {
            sg: PresentationDoc::of(&wa.sg),
            x: GroupoidDoc::of(&wa.x),
            side: match wa.side {
                Side::Left => "left".into(),
                Side::Right => "right".into(),
            },
            mu_ob: wa.mu.ob.clone(),
            mu_arr: wa.mu.arr.clone(),
            act_ob: wa.act.ob.clone(),
            act_arr: wa.act.arr.clone(),
            beta: wa.beta.component.clone(),
            epsilon: wa.epsilon.component.clone(),
        }
    }

    pub fn build(&self) -> Result<WeakAction, DocError> {
        let sg = self.sg.build()?;
        let x = self.x.build()?;
        let side = match self.side.as_str() {
            "left" => Side::Left,
            "right" => Side::Right,
            other => return Err(DocError::Schema(format!("unknown action side `{other}`"))),
        };
        let mu = GroupoidFunctor {
            dom: x.clone(),
            cod: sg.base.clone(),
            ob: self.mu_ob.clone(),
            arr: self.mu_arr.clone(),
        };
        mu.validate().map_err(schema)?;
        let (pairs, triples) = match side {
            Side::Right => (
                FiberedProduct::new(&[(&mu, &sg.t)]).map_err(schema)?,
                FiberedProduct::new(&[(&mu, &sg.t), (&sg.s, &sg.t)]).map_err(schema)?,
            ),
            Side::Left => (
                FiberedProduct::new(&[(&sg.s, &mu)]).map_err(schema)?,
                FiberedProduct::new(&[(&sg.s, &sg.t), (&sg.s, &mu)]).map_err(schema)?,
            ),
        };
        expect_len("act_ob", self.act_ob.len(), pairs.objects.len())?;
        expect_len("act_arr", self.act_arr.len(), pairs.arrows.len())?;
        expect_len("beta", self.beta.len(), triples.objects.len())?;
        expect_len("epsilon", self.epsilon.len(), x.objects)?;
        WeakAction::assemble(
            &sg,
            &x,
            mu,
            side,
            |a, b| self.act_ob[pairs.object2(&[a, b])],
            |a, b| self.act_arr[pairs.arrow2(&[a, b])],
            |a, b, c| self.beta[triples.object2(&[a, b, c])],
            |v| self.epsilon[v],
        )
        .map_err(schema)
    }
}

/// A weak bibundle: the two actions plus the interchange component table
/// in composable-triple order (`g₁` outermost, then carrier object, then
/// `g₂`).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BibundleDoc {
    pub left: ActionDoc,
    pub right: ActionDoc,
    pub tau: Vec<usize>,
}

impl BibundleDoc {
    pub fn of(bb: &StackyBibundle) -> Self {
        BibundleDoc {
            left: ActionDoc::of(&bb.left),
            right: ActionDoc::of(&bb.right),
            tau: bb.tau.clone(),
        }
    }

    pub fn build(&self) -> Result<StackyBibundle, DocError> {
        let left = self.left.build()?;
        let right = self.right.build()?;
        if left.side != Side::Left || right.side != Side::Right {
            return Err(DocError::Schema("bibundle actions must be left then right".into()));
        }
        if left.x != right.x {
            return Err(DocError::Schema("bibundle actions disagree on the carrier".into()));
        }
        // Replicate the canonical interchange-triple enumeration.
        let mut index = BTreeMap::new();
        let mut count = 0usize;
        for g1 in 0..left.sg.g.objects {
            for v in 0..left.x.objects {
                if left.sg.s.ob[g1] != left.mu.ob[v] {
                    continue;
                }
                for g2 in 0..right.sg.g.objects {
                    if right.mu.ob[v] != right.sg.t.ob[g2] {
                        continue;
                    }
                    index.insert((g1, v, g2), count);
                    count += 1;
                }
            }
        }
        expect_len("tau", self.tau.len(), count)?;
        StackyBibundle::new(left, right, |a, b, c| self.tau[index[&(a, b, c)]]).map_err(schema)
    }
}

/// A crossed module of finite abelian groups as multiplication tables and
/// the homomorphism table.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedModuleDoc {
    pub a_mul: Vec<Vec<usize>>,
    pub k_mul: Vec<Vec<usize>>,
    pub phi: Vec<usize>,
}

impl CrossedModuleDoc {
    pub fn of(cm: &CrossedModuleData) -> Self {
        CrossedModuleDoc { a_mul: cm.a.mul.clone(), k_mul: cm.k.mul.clone(), phi: cm.phi.clone() }
    }

    pub fn build(&self) -> Result<CrossedModuleData, DocError> {
        let cm = CrossedModuleData {
            a: FiniteGroup { mul: self.a_mul.clone() },
            k: FiniteGroup { mul: self.k_mul.clone() },
            phi: self.phi.clone(),
        };
        expect_len("phi", cm.phi.len(), cm.a.order())?;
        if let Some(&v) = cm.phi.iter().find(|&&v| v >= cm.k.order()) {
            return Err(DocError::Schema(format!("phi value {v} outside the target group")));
        }
        Ok(cm)
    }
}

/// A skeletal 2-group as the two group tables, the action table, and the
/// flattened associator cocycle.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SkeletalDoc {
    pub pi1_mul: Vec<Vec<usize>>,
    pub pi2_mul: Vec<Vec<usize>>,
    pub act: Vec<Vec<usize>>,
    pub omega: Vec<usize>,
}

impl SkeletalDoc {
    pub fn of(sk: &Skeletal2GroupData) -> Self {
        SkeletalDoc {
            pi1_mul: sk.pi1.mul.clone(),
            pi2_mul: sk.pi2.mul.clone(),
            act: sk.act.clone(),
            omega: sk.omega.clone(),
        }
    }

    pub fn build(&self) -> Result<Skeletal2GroupData, DocError> {
        let sk = Skeletal2GroupData {
            pi1: FiniteGroup { mul: self.pi1_mul.clone() },
            pi2: FiniteGroup { mul: self.pi2_mul.clone() },
            act: self.act.clone(),
            omega: self.omega.clone(),
        };
        let n = sk.pi1.order();
        expect_len("act", sk.act.len(), n)?;
        expect_len("omega", sk.omega.len(), n * n * n)?;
        Ok(sk)
    }
}
