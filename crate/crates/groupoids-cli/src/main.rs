//! The `groupoids` binary: validate and check finite groupoid documents,
//! form quotients, and compose or flip Morita bibundles.
//!
//! Exit codes: `0` when the requested check passes, `1` when a
//! mathematical check fails (a witness is printed), `2` for unreadable
//! input, schema errors, or internal invariant violations.

use std::path::{Path, PathBuf};
use std::process::exit;

use clap::{Parser, Subcommand, ValueEnum};

use groupoids_cli::doc::{DocError, Document};
use groupoids_cli::report::{Format, Report};
use groupoids_cli::run::{self, CheckKind};

#[derive(Parser)]
#[command(name = "groupoids", about = "Finite groupoid and stacky groupoid toolkit")]
struct Cli {
    /// Report output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Human => Format::Human,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Coherence,
    Principal,
    Morita,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate the structure tables of a document.
    Validate { file: PathBuf },
    /// Run a mathematical check on a document.
    Check {
        #[arg(value_enum)]
        what: CheckArg,
        file: PathBuf,
    },
    /// Quotient an action document; emits the projection functor.
    Prequotient {
        file: PathBuf,
        /// Write the output document here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compose two biprincipal bibundle documents along their middle.
    Compose {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reverse a biprincipal bibundle document.
    Flip {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print a built-in example document (omit the name to list them).
    Examples {
        name: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn fail(format: Format, message: String) -> ! {
    match format {
        Format::Human => eprintln!("error: {message}"),
        Format::Json => eprintln!(
            "{}",
            serde_json::json!({ "error": message })
        ),
    }
    exit(2)
}

fn load(path: &Path, format: Format) -> Document {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => fail(format, format!("cannot read {}: {e}", path.display())),
    };
    match groupoids_cli::doc::parse(&text) {
        Ok(d) => d,
        Err(e) => fail(format, format!("{}: {e}", path.display())),
    }
}

fn doc_error(format: Format, e: DocError) -> ! {
    fail(format, e.to_string())
}

/// Write the artifact to `-o` (report to stdout) or to stdout (report to
/// stderr) so that piped output is always exactly one document.
fn emit(format: Format, report: Report, artifact: Option<Document>, output: Option<&Path>) -> ! {
    match artifact {
        Some(doc) => {
            let text = groupoids_cli::doc::serialize(&doc);
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        fail(format, format!("cannot write {}: {e}", path.display()));
                    }
                    print!("{}", report.render(format));
                }
                None => {
                    print!("{text}");
                    eprint!("{}", report.render(format));
                }
            }
        }
        None => print!("{}", report.render(format)),
    }
    exit(report.exit_code())
}

fn main() {
    let cli = Cli::parse();
    let format = Format::from(cli.format);
    match cli.command {
        Cmd::Validate { file } => {
            let doc = load(&file, format);
            match run::validate(&doc) {
                Ok(report) => {
                    print!("{}", report.render(format));
                    exit(report.exit_code());
                }
                Err(e) => doc_error(format, e),
            }
        }
        Cmd::Check { what, file } => {
            let doc = load(&file, format);
            let kind = match what {
                CheckArg::Coherence => CheckKind::Coherence,
                CheckArg::Principal => CheckKind::Principal,
                CheckArg::Morita => CheckKind::Morita,
            };
            match run::check(kind, &doc) {
                Ok(report) => {
                    print!("{}", report.render(format));
                    exit(report.exit_code());
                }
                Err(e) => doc_error(format, e),
            }
        }
        Cmd::Prequotient { file, output } => {
            let doc = load(&file, format);
            match run::prequotient_cmd(&doc) {
                Ok((report, artifact)) => emit(format, report, artifact, output.as_deref()),
                Err(e) => doc_error(format, e),
            }
        }
        Cmd::Compose { first, second, output } => {
            let a = load(&first, format);
            let b = load(&second, format);
            match run::compose_cmd(&a, &b) {
                Ok((report, artifact)) => emit(format, report, artifact, output.as_deref()),
                Err(e) => doc_error(format, e),
            }
        }
        Cmd::Flip { file, output } => {
            let doc = load(&file, format);
            match run::flip_cmd(&doc) {
                Ok((report, artifact)) => emit(format, report, artifact, output.as_deref()),
                Err(e) => doc_error(format, e),
            }
        }
        Cmd::Examples { name, output } => {
            let Some(name) = name else {
                for n in groupoids_cli::examples::names() {
                    println!("{n}");
                }
                exit(0);
            };
            let Some((doc, notes)) = groupoids_cli::examples::example(&name) else {
                fail(format, format!("unknown example `{name}`"));
            };
            let text = groupoids_cli::doc::serialize(&doc);
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &text) {
                        fail(format, format!("cannot write {}: {e}", path.display()));
                    }
                }
                None => print!("{text}"),
            }
            for note in notes {
                eprintln!("note: {note}");
            }
            exit(0);
        }
    }
}
