//! The `aicrepair` command line.
//!
//! [`run_cli`] takes the arguments and two output streams and returns the
//! exit code, so the binary and the tests share one entry point.

mod lattice;
mod render;

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use aicrepair::syntax::{parse_literals, parse_revision_set, parse_update_set, print_instance};
use aicrepair::transforms::{
    normalize_aic, normalize_rev, properize, shift_instance, to_aic, to_rev, verify_aic_shift,
    verify_rev_shift,
};
use aicrepair::{
    cqa, cqa_rev, enumerate, enumerate_rev, parse_instance, Error, Instance, Limits, Program,
    RepairClass, RevisionClass,
};
use clap::{Parser, Subcommand, ValueEnum};

use render::{Format, Renderer};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUSED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "aicrepair",
    version,
    about = "Repairs and revisions under active integrity constraints"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for enumeration.
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,

    /// Largest universe to enumerate exhaustively.
    #[arg(long, global = true)]
    max_atoms: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate one class of repairs of an aic instance.
    Repair {
        file: PathBuf,
        #[arg(long, default_value = "justified-repair")]
        class: String,
    },
    /// Enumerate one class of revisions of a revision-program instance.
    Revise {
        file: PathBuf,
        #[arg(long, default_value = "justified-revision")]
        class: String,
    },
    /// Decide whether a set belongs to a class.
    Check {
        file: PathBuf,
        /// Update actions (`+a,-b`) or revision literals (`in(a),out(b)`).
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long)]
        class: String,
    },
    /// Translate between revision programs and active integrity constraints.
    Translate {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Split disjunctive heads.
    Normalize { file: PathBuf },
    /// Drop head literals whose dual occurs in the body.
    Properize { file: PathBuf },
    /// Dualize every atom of the given set.
    Shift {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        by: Vec<String>,
        /// Also enumerate every class on both sides and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Answer sets of a logic program.
    AnswerSets { file: PathBuf },
    /// Truth status of a conjunction of literals across repaired databases.
    Cqa {
        file: PathBuf,
        #[arg(long)]
        class: String,
        #[arg(long)]
        query: String,
    },
    /// Class sizes, and with `--verify` the inclusions between classes.
    Lattice {
        file: PathBuf,
        #[arg(long)]
        verify: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    Aic,
    Rev,
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn refused(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_REFUSED,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UniverseTooLarge { .. }
            | Error::NotNormalProgram
            | Error::NotProperProgram
            | Error::NotSimpleRule(_) => EXIT_REFUSED,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the command line `args` (program name first).
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match run(&cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn limits(cli: &Cli) -> std::result::Result<Limits, Failure> {
    let mut limits = Limits::from_env()?;
    if let Some(n) = cli.max_atoms {
        limits = limits.with_max_atoms(n)?;
    }
    Ok(limits.with_jobs(cli.jobs))
}

fn load(path: &Path, err: &mut dyn Write) -> std::result::Result<Instance, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    }
    let inst = parse_instance(&text).map_err(|e| Failure::input(located(path, &e.to_string())))?;
    for w in &inst.warnings {
        writeln!(err, "warning: {}", located(path, w))?;
    }
    Ok(inst)
}

/// `file:line:col: message` when the message starts with a position.
fn located(path: &Path, message: &str) -> String {
    let sep = if message.starts_with(|c: char| c.is_ascii_digit()) {
        ""
    } else {
        " "
    };
    format!("{}:{sep}{message}", path.display())
}

fn wrong_kind(inst: &Instance, wanted: &str) -> Failure {
    Failure::input(format!(
        "expected an `{wanted}:` program, found `{}:`",
        inst.program.kind()
    ))
}

fn repair_class(name: &str) -> std::result::Result<RepairClass, Failure> {
    name.parse().map_err(Failure::input)
}

fn revision_class(name: &str) -> std::result::Result<RevisionClass, Failure> {
    name.parse().map_err(Failure::input)
}

fn incomplete(complete: bool, err: &mut dyn Write) -> Outcome {
    if complete {
        Ok(EXIT_OK)
    } else {
        writeln!(
            err,
            "warning: enumeration stopped early; results are partial"
        )?;
        Ok(EXIT_REFUSED)
    }
}

fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let r = Renderer::new(cli.format);
    match &cli.command {
        Command::Repair { file, class } => {
            let class = repair_class(class)?;
            let limits = limits(cli)?;
            let inst = load(file, err)?;
            let Program::Aic(eta) = &inst.program else {
                return Err(wrong_kind(&inst, "aic"));
            };
            let report = enumerate(&inst.db, eta, class, &limits)?;
            let sets: Vec<Vec<String>> = report
                .repairs
                .iter()
                .map(|u| u.iter().map(|a| a.render(&inst.universe)).collect())
                .collect();
            r.sets(out, "repair", class.name(), &sets, report.complete)?;
            incomplete(report.complete, err)
        }
        Command::Revise { file, class } => {
            let class = revision_class(class)?;
            let limits = limits(cli)?;
            let inst = load(file, err)?;
            let Program::Rev(p) = &inst.program else {
                return Err(wrong_kind(&inst, "rev"));
            };
            let report = enumerate_rev(p, &inst.db, class, &limits)?;
            let sets: Vec<Vec<String>> = report
                .repairs
                .iter()
                .map(|e| e.iter().map(|l| l.render(&inst.universe)).collect())
                .collect();
            r.sets(out, "revise", class.name(), &sets, report.complete)?;
            incomplete(report.complete, err)
        }
        Command::Check { file, set, class } => {
            let inst = load(file, err)?;
            let u = &inst.universe;
            let (name, member) = match &inst.program {
                Program::Aic(eta) => {
                    let class = repair_class(class)?;
                    let s = parse_update_set(u, set)?;
                    (
                        class.name(),
                        aicrepair::aic::check(class, &inst.db, eta, &s),
                    )
                }
                Program::Rev(p) => {
                    let class = revision_class(class)?;
                    let s = parse_revision_set(u, set)?;
                    (
                        class.name(),
                        aicrepair::revision::check_rev(class, p, &inst.db, &s)?,
                    )
                }
                Program::Lp(_) => return Err(wrong_kind(&inst, "aic` or `rev")),
            };
            r.verdict(out, name, member)?;
            Ok(EXIT_OK)
        }
        Command::Translate { file, to } => {
            let inst = load(file, err)?;
            let program = match (&inst.program, to) {
                (Program::Rev(p), Target::Aic) => Program::Aic(to_aic(&properize(p))?),
                (Program::Aic(eta), Target::Rev) => Program::Rev(to_rev(eta)?),
                (Program::Lp(p), Target::Aic) => Program::Aic(aicrepair::lp::aic_of_program(p)?),
                (Program::Aic(_), Target::Aic) | (Program::Rev(_), Target::Rev) => {
                    inst.program.clone()
                }
                (Program::Lp(_), Target::Rev) => {
                    return Err(Failure::input("logic programs translate only to `aic`"))
                }
            };
            r.instance(out, &print_instance(&inst.universe, &inst.db, &program))?;
            Ok(EXIT_OK)
        }
        Command::Normalize { file } => {
            let inst = load(file, err)?;
            let program = match &inst.program {
                Program::Aic(eta) => Program::Aic(normalize_aic(eta)),
                Program::Rev(p) => Program::Rev(normalize_rev(p)),
                Program::Lp(_) => return Err(wrong_kind(&inst, "aic` or `rev")),
            };
            r.instance(out, &print_instance(&inst.universe, &inst.db, &program))?;
            Ok(EXIT_OK)
        }
        Command::Properize { file } => {
            let inst = load(file, err)?;
            let Program::Rev(p) = &inst.program else {
                return Err(wrong_kind(&inst, "rev"));
            };
            let program = Program::Rev(properize(p));
            r.instance(out, &print_instance(&inst.universe, &inst.db, &program))?;
            Ok(EXIT_OK)
        }
        Command::Shift { file, by, verify } => {
            let limits = limits(cli)?;
            let inst = load(file, err)?;
            let names: Vec<&str> = by
                .iter()
                .map(|s| s.trim())
                .filter(|s| !s.is_empty())
                .collect();
            let w = aicrepair::Database::from_names(&inst.universe, &names)?;
            shift(&r, &inst, &w, *verify, &limits, out)
        }
        Command::AnswerSets { file } => {
            let limits = limits(cli)?;
            let inst = load(file, err)?;
            let Program::Lp(p) = &inst.program else {
                return Err(wrong_kind(&inst, "lp"));
            };
            let models = aicrepair::lp::answer_sets(p, &limits)?;
            let sets: Vec<Vec<String>> = models
                .iter()
                .map(|m| {
                    m.iter()
                        .map(|a| inst.universe.name(*a).to_string())
                        .collect()
                })
                .collect();
            r.sets(out, "answer-sets", "answer-sets", &sets, true)?;
            Ok(EXIT_OK)
        }
        Command::Cqa { file, class, query } => {
            let limits = limits(cli)?;
            let inst = load(file, err)?;
            let q = parse_literals(&inst.universe, query)?;
            let (name, verdict) = match &inst.program {
                Program::Aic(eta) => {
                    let class = repair_class(class)?;
                    (class.name(), cqa(&inst.db, eta, class, &q, &limits)?)
                }
                Program::Rev(p) => {
                    let class = revision_class(class)?;
                    (class.name(), cqa_rev(p, &inst.db, class, &q, &limits)?)
                }
                Program::Lp(_) => return Err(wrong_kind(&inst, "aic` or `rev")),
            };
            r.cqa(out, name, &inst.universe, &verdict)?;
            incomplete(verdict.complete, err)
        }
        Command::Lattice { file, verify } => {
            let limits = limits(cli)?;
            let inst = load(file, err)?;
            let table = match &inst.program {
                Program::Aic(eta) => lattice::aic(&inst.db, eta, &limits)?,
                Program::Rev(p) => lattice::rev(&inst.db, p, &limits)?,
                Program::Lp(_) => return Err(wrong_kind(&inst, "aic` or `rev")),
            };
            r.lattice(out, &table, *verify)?;
            Ok(if *verify && !table.holds() {
                EXIT_REFUSED
            } else {
                EXIT_OK
            })
        }
    }
}

fn shift(
    r: &Renderer,
    inst: &Instance,
    w: &aicrepair::Database,
    verify: bool,
    limits: &Limits,
    out: &mut dyn Write,
) -> Outcome {
    let u = &inst.universe;
    let (text, checks) = match &inst.program {
        Program::Aic(eta) => {
            let witness = shift_instance(&inst.db, eta, w)?;
            let (db, eta) = &witness.shifted;
            let text = print_instance(u, db, &Program::Aic(eta.clone()));
            let checks = if verify {
                verify_aic_shift(&witness, &RepairClass::ALL, limits)?
                    .into_iter()
                    .map(|t| (t.class.name(), t.holds()))
                    .collect()
            } else {
                Vec::new()
            };
            (text, checks)
        }
        Program::Rev(p) => {
            let witness = shift_instance(&inst.db, p, w)?;
            let (db, sp) = &witness.shifted;
            let text = print_instance(u, db, &Program::Rev(sp.clone()));
            let checks = if verify {
                let mut classes = RevisionClass::ALL.to_vec();
                if !p.is_normal() {
                    classes.retain(|c| *c != RevisionClass::SupportedRevision);
                }
                verify_rev_shift(&witness, &classes, limits)?
                    .into_iter()
                    .map(|t| (t.class.name(), t.holds()))
                    .collect()
            } else {
                Vec::new()
            };
            (text, checks)
        }
        Program::Lp(_) => return Err(wrong_kind(inst, "aic` or `rev")),
    };
    r.shifted(out, &text, verify.then_some(checks.as_slice()))?;
    if checks.iter().all(|(_, ok)| *ok) {
        Ok(EXIT_OK)
    } else {
        Err(Failure::refused("shifting did not transport every class"))
    }
}
