use std::io::{self, Write};

use aicrepair::{CqaVerdict, Universe};
use clap::ValueEnum;
use serde_json::{json, Value};

use crate::lattice::Table;

pub const SCHEMA: u32 = 1;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub struct Renderer {
    format: Format,
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn emit(out: &mut dyn Write, value: Value) -> io::Result<()> {
    writeln!(out, "{value}")
}

impl Renderer {
    pub fn new(format: Format) -> Self {
        Renderer { format }
    }

    pub fn sets(
        &self,
        out: &mut dyn Write,
        command: &str,
        class: &str,
        sets: &[Vec<String>],
        complete: bool,
    ) -> io::Result<()> {
        match self.format {
            Format::Text => {
                writeln!(out, "% {class}: {}", sets.len())?;
                if !complete {
                    writeln!(out, "% incomplete")?;
                }
                for s in sets {
                    writeln!(out, "{}", braces(s))?;
                }
                Ok(())
            }
            Format::Json => {
                let key = if command == "answer-sets" {
                    "answer_sets"
                } else {
                    "repairs"
                };
                let mut v = json!({
                    "schema": SCHEMA,
                    "command": command,
                    "class": class,
                    "complete": complete,
                    "count": sets.len(),
                });
                v[key] = json!(sets);
                emit(out, v)
            }
        }
    }

    pub fn verdict(&self, out: &mut dyn Write, class: &str, member: bool) -> io::Result<()> {
        match self.format {
            Format::Text => writeln!(out, "{member}"),
            Format::Json => emit(
                out,
                json!({ "schema": SCHEMA, "command": "check", "class": class, "member": member }),
            ),
        }
    }

    pub fn instance(&self, out: &mut dyn Write, text: &str) -> io::Result<()> {
        match self.format {
            Format::Text => write!(out, "{text}"),
            Format::Json => emit(out, json!({ "schema": SCHEMA, "instance": text })),
        }
    }

    pub fn shifted(
        &self,
        out: &mut dyn Write,
        text: &str,
        checks: Option<&[(&str, bool)]>,
    ) -> io::Result<()> {
        let word = |ok: bool| if ok { "ok" } else { "failed" };
        match self.format {
            Format::Text => {
                write!(out, "{text}")?;
                for (class, ok) in checks.unwrap_or_default() {
                    writeln!(out, "% transport {class}: {}", word(*ok))?;
                }
                Ok(())
            }
            Format::Json => {
                let mut v = json!({ "schema": SCHEMA, "instance": text });
                if let Some(checks) = checks {
                    let m: serde_json::Map<String, Value> = checks
                        .iter()
                        .map(|(c, ok)| (c.to_string(), Value::Bool(*ok)))
                        .collect();
                    v["transported"] = Value::Object(m);
                }
                emit(out, v)
            }
        }
    }

    pub fn cqa(
        &self,
        out: &mut dyn Write,
        class: &str,
        universe: &Universe,
        verdict: &CqaVerdict,
    ) -> io::Result<()> {
        let query: Vec<String> = verdict.query.iter().map(|l| l.render(universe)).collect();
        let witnesses: Vec<Vec<&str>> = verdict
            .witnesses
            .iter()
            .map(|db| db.iter().map(|a| universe.name(*a)).collect())
            .collect();
        match self.format {
            Format::Text => {
                writeln!(out, "{}", verdict.status.name())?;
                writeln!(
                    out,
                    "% {class}: {} repaired databases",
                    verdict.witness_count
                )?;
                for w in &witnesses {
                    let w: Vec<String> = w.iter().map(|s| s.to_string()).collect();
                    writeln!(out, "{}", braces(&w))?;
                }
                Ok(())
            }
            Format::Json => emit(
                out,
                json!({
                    "schema": SCHEMA,
                    "command": "cqa",
                    "class": class,
                    "query": query,
                    "status": verdict.status.name(),
                    "complete": verdict.complete,
                    "witness_count": verdict.witness_count,
                    "witnesses": witnesses,
                }),
            ),
        }
    }

    pub fn lattice(&self, out: &mut dyn Write, table: &Table, verify: bool) -> io::Result<()> {
        match self.format {
            Format::Text => {
                for (tag, n) in &table.sizes {
                    writeln!(out, "% {tag}: {n}")?;
                }
                if verify {
                    for rel in &table.relations {
                        let state = if rel.holds { "ok" } else { "failed" };
                        writeln!(out, "{} {} {}: {state}", rel.left, rel.op, rel.right)?;
                    }
                }
                Ok(())
            }
            Format::Json => {
                let sizes: serde_json::Map<String, Value> = table
                    .sizes
                    .iter()
                    .map(|(t, n)| (t.clone(), json!(n)))
                    .collect();
                let mut v = json!({ "schema": SCHEMA, "command": "lattice", "sizes": sizes });
                if verify {
                    v["relations"] = table
                        .relations
                        .iter()
                        .map(|r| {
                            json!({
                                "left": r.left,
                                "relation": r.op,
                                "right": r.right,
                                "holds": r.holds,
                            })
                        })
                        .collect();
                }
                emit(out, v)
            }
        }
    }
}
