//! Structured command reports: a passed flag, an optional replayable
//! witness (axiom name plus identifier path, never prose), and free-form
//! notes, printable as aligned text or as JSON.

use groupoids::core::{Verdict, Witness};
use serde::Serialize;

/// Output format selector shared by all commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
}

/// A witness in wire form.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub axiom: String,
    pub ids: Vec<usize>,
}

impl From<Witness> for WitnessReport {
    fn from(w: Witness) -> Self {
        WitnessReport { axiom: w.axiom, ids: w.ids }
    }
}

/// The result of one command invocation.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub passed: bool,
    pub witness: Option<WitnessReport>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn from_verdict(command: &str, v: Verdict) -> Self {
        Report {
            command: command.to_string(),
            passed: v.passed,
            witness: v.witness.map(WitnessReport::from),
            notes: Vec::new(),
        }
    }

    pub fn passed(command: &str) -> Self {
        Report { command: command.to_string(), passed: true, witness: None, notes: Vec::new() }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Exit status class of this report: 0 for a pass, 1 for a failed
    /// mathematical check.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut text =
                    serde_json::to_string_pretty(self).expect("report serialization");
                text.push('\n');
                text
            }
            Format::Human => {
                let mut out = format!(
                    "command: {}\nstatus: {}\n",
                    self.command,
                    if self.passed { "passed" } else { "failed" }
                );
                if let Some(w) = &self.witness {
                    out.push_str(&format!("witness: {} {:?}\n", w.axiom, w.ids));
                }
                for note in &self.notes {
                    out.push_str(&format!("note: {note}\n"));
                }
                out
            }
        }
    }
}
