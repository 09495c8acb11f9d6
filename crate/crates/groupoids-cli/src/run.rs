//! Command logic: every command takes parsed documents and returns a
//! [`Report`] (and possibly an output document), or a [`DocError`] for
//! structural problems.  Mathematical failures are never errors here;
//! they are failed reports, so the binary can keep the exit-code contract
//! `0` = passed, `1` = check failed, `2` = schema or internal error.

use groupoids::action::{check_action_coherence, invert_action};
use groupoids::core::{validate_groupoid, Verdict};
use groupoids::morita::{check_bibundle, compose_bibundles, flip_bibundle, is_biprincipal};
use groupoids::prequotient::{check_principal, prequotient};
use groupoids::weakgroupoid::{
    check_coherence, check_strict_identities, from_crossed_module, from_skeletal,
};
use groupoids::Error;

use crate::doc::{Body, DocError, Document, FunctorDoc};
use crate::report::Report;

/// Which check family to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Coherence,
    Principal,
    Morita,
}

/// Split a library error into a failed report (mathematical, with a
/// witness) or a structural document error.
fn math_or_schema(command: &str, e: Error) -> Result<Report, DocError> {
    match e {
        Error::InvalidAction(w) => {
            Ok(Report::from_verdict(command, Verdict::from_witness(w)))
        }
        Error::InternalInvariant(m) => Err(DocError::Internal(m)),
        other => Err(DocError::Schema(other.to_string())),
    }
}

fn verdict_report(command: &str, v: Result<Verdict, Error>) -> Result<Report, DocError> {
    match v {
        Ok(v) => Ok(Report::from_verdict(command, v)),
        Err(e) => math_or_schema(command, e),
    }
}

/// `validate`: structural and axiomatic validation appropriate to the
/// document kind.
pub fn validate(doc: &Document) -> Result<Report, DocError> {
    let command = format!("validate {}", doc.kind());
    match &doc.body {
        Body::Groupoid(g) => verdict_report(&command, validate_groupoid(&g.build()?)),
        Body::Functor(f) => verdict_report(&command, f.build()?.validate()),
        Body::Natiso(n) => verdict_report(&command, n.build()?.validate()),
        Body::StackyGroupoid(p) => {
            verdict_report(&command, check_strict_identities(&p.build()?))
        }
        Body::Action(a) => {
            let wa = a.build()?;
            let v = match wa.mu.validate() {
                Ok(v) => v.and(|| match wa.act.validate() {
                    Ok(v) => v,
                    Err(_) => Verdict::fail("action-table", &[]),
                }),
                Err(e) => return math_or_schema(&command, e),
            };
            Ok(Report::from_verdict(&command, v))
        }
        Body::Bibundle(b) => {
            b.build()?;
            Ok(Report::passed(&command).with_note("structure tables verified on load"))
        }
        Body::CrossedModule(c) => Ok(Report::from_verdict(&command, c.build()?.validate())),
        Body::Skeletal(s) => verdict_report(&command, s.build()?.validate()),
    }
}

/// `check coherence|principal|morita`: the mathematical check suited to
/// the document kind.
pub fn check(kind: CheckKind, doc: &Document) -> Result<Report, DocError> {
    match kind {
        CheckKind::Coherence => check_coherence_cmd(doc),
        CheckKind::Principal => check_principal_cmd(doc),
        CheckKind::Morita => check_morita_cmd(doc),
    }
}

fn check_coherence_cmd(doc: &Document) -> Result<Report, DocError> {
    let command = format!("check coherence {}", doc.kind());
    match &doc.body {
        Body::Groupoid(g) => verdict_report(&command, validate_groupoid(&g.build()?)),
        Body::Functor(f) => verdict_report(&command, f.build()?.validate()),
        Body::Natiso(n) => verdict_report(&command, n.build()?.validate()),
        Body::StackyGroupoid(p) => verdict_report(&command, check_coherence(&p.build()?)),
        Body::Action(a) => verdict_report(&command, check_action_coherence(&a.build()?)),
        Body::Bibundle(b) => verdict_report(&command, check_bibundle(&b.build()?)),
        Body::CrossedModule(c) => {
            let cm = c.build()?;
            let v = cm.validate();
            if !v.passed {
                return Ok(Report::from_verdict(&command, v));
            }
            let sg = from_crossed_module(&cm).map_err(|e| DocError::Schema(e.to_string()))?;
            verdict_report(&command, check_coherence(&sg))
        }
        Body::Skeletal(s) => {
            let sk = s.build()?;
            match from_skeletal(&sk) {
                Ok(sg) => verdict_report(&command, check_coherence(&sg)),
                Err(e) => math_or_schema(&command, e),
            }
        }
    }
}

fn check_principal_cmd(doc: &Document) -> Result<Report, DocError> {
    let command = "check principal action";
    let Body::Action(a) = &doc.body else {
        return Err(DocError::Schema(format!(
            "check principal expects an action document, got `{}`",
            doc.kind()
        )));
    };
    let wa = a.build()?;
    let (wa, mut notes) = if wa.side == groupoids::core::Side::Left {
        (
            invert_action(&wa).map_err(|e| DocError::Schema(e.to_string()))?,
            vec!["left action inverted before the principality check".to_string()],
        )
    } else {
        (wa, Vec::new())
    };
    let mut report = verdict_report(command, check_principal(&wa))?;
    notes.push("both principality characterizations agree".to_string());
    report.notes.append(&mut notes);
    Ok(report)
}

fn check_morita_cmd(doc: &Document) -> Result<Report, DocError> {
    let command = "check morita bibundle";
    let Body::Bibundle(b) = &doc.body else {
        return Err(DocError::Schema(format!(
            "check morita expects a bibundle document, got `{}`",
            doc.kind()
        )));
    };
    verdict_report(command, is_biprincipal(&b.build()?))
}

/// `prequotient`: quotient a (right) action and emit the projection
/// functor, whose codomain is the quotient carrier.
pub fn prequotient_cmd(doc: &Document) -> Result<(Report, Option<Document>), DocError> {
    let command = "prequotient";
    let Body::Action(a) = &doc.body else {
        return Err(DocError::Schema(format!(
            "prequotient expects an action document, got `{}`",
            doc.kind()
        )));
    };
    let wa = a.build()?;
    let (wa, note) = if wa.side == groupoids::core::Side::Left {
        (
            invert_action(&wa).map_err(|e| DocError::Schema(e.to_string()))?,
            Some("left action inverted before quotienting".to_string()),
        )
    } else {
        (wa, None)
    };
    match prequotient(&wa) {
        Ok(pq) => {
            let mut report = Report::passed(command).with_note(format!(
                "quotient carrier: {} objects, {} arrows",
                pq.carrier.objects,
                pq.carrier.arrows()
            ));
            if let Some(n) = note {
                report = report.with_note(n);
            }
            Ok((report, Some(Document::new(Body::Functor(FunctorDoc::of(&pq.q))))))
        }
        Err(e) => Ok((math_or_schema(command, e)?, None)),
    }
}

/// `compose`: compose two biprincipal bibundles along the middle.
pub fn compose_cmd(a: &Document, b: &Document) -> Result<(Report, Option<Document>), DocError> {
    let command = "compose";
    let (Body::Bibundle(d1), Body::Bibundle(d2)) = (&a.body, &b.body) else {
        return Err(DocError::Schema("compose expects two bibundle documents".into()));
    };
    match compose_bibundles(&d1.build()?, &d2.build()?) {
        Ok(bb) => {
            let report = Report::passed(command).with_note(format!(
                "composite carrier: {} objects, {} arrows",
                bb.carrier().objects,
                bb.carrier().arrows()
            ));
            Ok((report, Some(Document::new(Body::Bibundle(crate::doc::BibundleDoc::of(&bb))))))
        }
        Err(Error::InvalidAction(w)) => {
            Ok((Report::from_verdict(command, Verdict::from_witness(w)), None))
        }
        Err(Error::InternalInvariant(m)) => Err(DocError::Internal(m)),
        Err(other) => Err(DocError::Schema(other.to_string())),
    }
}

/// `flip`: reverse a biprincipal bibundle.
pub fn flip_cmd(doc: &Document) -> Result<(Report, Option<Document>), DocError> {
    let command = "flip";
    let Body::Bibundle(b) = &doc.body else {
        return Err(DocError::Schema(format!(
            "flip expects a bibundle document, got `{}`",
            doc.kind()
        )));
    };
    match flip_bibundle(&b.build()?) {
        Ok(bb) => Ok((
            Report::passed(command),
            Some(Document::new(Body::Bibundle(crate::doc::BibundleDoc::of(&bb)))),
        )),
        Err(Error::InvalidAction(w)) => {
            Ok((Report::from_verdict(command, Verdict::from_witness(w)), None))
        }
        Err(Error::InternalInvariant(m)) => Err(DocError::Internal(m)),
        Err(other) => Err(DocError::Schema(other.to_string())),
    }
}
