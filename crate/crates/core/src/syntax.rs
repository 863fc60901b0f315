//! Text format: parser and canonical printer.
//!
//! ```text
//! % comment
//! universe: a, b, c.          % optional
//! db: a, b.
//! aic:  a, b -> -a | -b.      not c -> false.
//! rev:  in(a) | out(b) <- in(c).   false <- in(a).
//! lp:   a | b :- c, not d.
//! ```
//!
//! Exactly one of `aic:`, `rev:`, `lp:` must appear. Without a `universe:`
//! section the universe is the alphabetically sorted set of atoms mentioned.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lp::{LogicProgram, LpRule};
use crate::model::{
    AicProgram, AicRule, Atom, Database, Literal, RevisionLiteral, RevisionProgram, RevisionRule,
    RevisionSet, Universe, UpdateAction, UpdateSet,
};

/// The program section of an instance file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Program {
    Aic(AicProgram),
    Rev(RevisionProgram),
    Lp(LogicProgram),
}

impl Program {
    pub fn universe(&self) -> &Arc<Universe> {
        match self {
            Program::Aic(p) => p.universe(),
            Program::Rev(p) => p.universe(),
            Program::Lp(p) => p.universe(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Program::Aic(_) => "aic",
            Program::Rev(_) => "rev",
            Program::Lp(_) => "lp",
        }
    }
}

/// A parsed instance file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub universe: Arc<Universe>,
    pub db: Database,
    pub program: Program,
    /// Non-fatal diagnostics, such as a body containing `a` and `not a`.
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Plus,
    Minus,
    Comma,
    Pipe,
    Dot,
    Colon,
    Arrow,
    LArrow,
    ColonDash,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::LArrow => "`<-`".into(),
            Tok::ColonDash => "`:-`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

fn syntax(pos: Pos, expected: impl Into<String>) -> Error {
    Error::Syntax {
        line: pos.line,
        col: pos.col,
        expected: expected.into(),
    }
}

fn semantic(pos: Pos, message: impl Into<String>) -> Error {
    Error::Semantic {
        line: pos.line,
        col: pos.col,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        let next = chars.get(i + 1).copied();
        let mut width = 1;
        let tok = match c {
            '\n' => {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => None,
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            '+' => Some(Tok::Plus),
            ',' => Some(Tok::Comma),
            '|' => Some(Tok::Pipe),
            '.' => Some(Tok::Dot),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '-' if next == Some('>') => {
                width = 2;
                Some(Tok::Arrow)
            }
            '-' => Some(Tok::Minus),
            '<' if next == Some('-') => {
                width = 2;
                Some(Tok::LArrow)
            }
            ':' if next == Some('-') && chars.get(i + 2) != Some(&'>') => {
                width = 2;
                Some(Tok::ColonDash)
            }
            ':' => Some(Tok::Colon),
            c if c.is_ascii_lowercase() => {
                let start = i;
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                width = j - start;
                Some(Tok::Ident(chars[start..j].iter().collect()))
            }
            _ => return Err(syntax(pos, format!("a token, found `{c}`"))),
        };
        if let Some(tok) = tok {
            out.push((tok, pos));
        }
        i += width;
        col += width;
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

const SECTIONS: [&str; 5] = ["universe", "db", "aic", "rev", "lp"];
const RESERVED: [&str; 2] = ["not", "false"];

#[derive(Debug, Clone)]
struct Name {
    text: String,
    pos: Pos,
}

#[derive(Debug, Clone)]
enum RawRule {
    Aic {
        body: Vec<(Name, bool)>,
        head: Vec<(Name, bool)>,
    },
    Rev {
        head: Vec<(Name, bool)>,
        body: Vec<(Name, bool)>,
    },
    Lp {
        head: Vec<Name>,
        body: Vec<(Name, bool)>,
    },
}

impl RawRule {
    fn names(&self) -> Vec<&Name> {
        match self {
            RawRule::Aic { body, head } | RawRule::Rev { head, body } => {
                body.iter().chain(head.iter()).map(|(n, _)| n).collect()
            }
            RawRule::Lp { head, body } => head.iter().chain(body.iter().map(|(n, _)| n)).collect(),
        }
    }

    fn text(&self) -> String {
        let lit = |(n, p): &(Name, bool)| {
            if *p {
                n.text.clone()
            } else {
                format!("not {}", n.text)
            }
        };
        let rev = |(n, p): &(Name, bool)| format!("{}({})", if *p { "in" } else { "out" }, n.text);
        let join = |v: Vec<String>, sep: &str| v.join(sep);
        match self {
            RawRule::Aic { body, head } => {
                let head = if head.is_empty() {
                    "false".to_string()
                } else {
                    join(
                        head.iter()
                            .map(|(n, p)| format!("{}{}", if *p { '+' } else { '-' }, n.text))
                            .collect(),
                        " | ",
                    )
                };
                format!("{} -> {head}", join(body.iter().map(lit).collect(), ", "))
            }
            RawRule::Rev { head, body } => {
                let head = if head.is_empty() {
                    "false".to_string()
                } else {
                    join(head.iter().map(rev).collect(), " | ")
                };
                format!("{head} <- {}", join(body.iter().map(rev).collect(), ", "))
            }
            RawRule::Lp { head, body } => {
                let head = if head.is_empty() {
                    "false".to_string()
                } else {
                    join(head.iter().map(|n| n.text.clone()).collect(), " | ")
                };
                format!("{head} :- {}", join(body.iter().map(lit).collect(), ", "))
            }
        }
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(syntax(
            self.pos(),
            format!("{expected}, found {}", self.peek().describe()),
        ))
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(expected)
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn at_header(&self) -> bool {
        matches!(self.peek(), Tok::Ident(s) if SECTIONS.contains(&s.as_str()))
            && matches!(self.toks.get(self.at + 1), Some((Tok::Colon, _)))
    }

    fn at_end_of_section(&self) -> bool {
        self.at_header() || *self.peek() == Tok::Eof
    }

    fn atom(&mut self) -> Result<Name> {
        match self.peek().clone() {
            Tok::Ident(s) if !RESERVED.contains(&s.as_str()) => {
                let pos = self.pos();
                self.bump();
                Ok(Name { text: s, pos })
            }
            _ => self.fail("an atom"),
        }
    }

    fn is_ident(&self, word: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == word)
    }

    /// `a` or `not a`.
    fn literal(&mut self) -> Result<(Name, bool)> {
        if self.is_ident("not") {
            self.bump();
            Ok((self.atom()?, false))
        } else {
            Ok((self.atom()?, true))
        }
    }

    fn action(&mut self) -> Result<(Name, bool)> {
        let insert = match self.peek() {
            Tok::Plus => true,
            Tok::Minus => false,
            _ => return self.fail("an update action `+atom` or `-atom`"),
        };
        self.bump();
        Ok((self.atom()?, insert))
    }

    fn revision_literal(&mut self) -> Result<(Name, bool)> {
        let is_in = if self.is_ident("in") {
            true
        } else if self.is_ident("out") {
            false
        } else {
            return self.fail("a revision literal `in(atom)` or `out(atom)`");
        };
        self.bump();
        self.expect(Tok::LParen, "`(`")?;
        let name = self.atom()?;
        self.expect(Tok::RParen, "`)`")?;
        Ok((name, is_in))
    }

    /// `item (sep item)*`.
    fn list<T>(
        &mut self,
        sep: Tok,
        mut item: impl FnMut(&mut Self) -> Result<T>,
    ) -> Result<Vec<T>> {
        let mut out = vec![item(self)?];
        while self.eat(&sep) {
            out.push(item(self)?);
        }
        Ok(out)
    }

    /// `.` or `a, b, c.`
    fn atom_list(&mut self) -> Result<Vec<Name>> {
        if self.eat(&Tok::Dot) {
            return Ok(Vec::new());
        }
        let names = self.list(Tok::Comma, Self::atom)?;
        self.expect(Tok::Dot, "`,` or `.`")?;
        Ok(names)
    }

    fn aic_rule(&mut self) -> Result<RawRule> {
        let body = if *self.peek() == Tok::Arrow {
            Vec::new()
        } else {
            self.list(Tok::Comma, Self::literal)?
        };
        self.expect(Tok::Arrow, "`,` or `->`")?;
        let head = if self.eat_false() {
            Vec::new()
        } else {
            self.list(Tok::Pipe, Self::action)?
        };
        self.expect(Tok::Dot, "`|` or `.`")?;
        Ok(RawRule::Aic { body, head })
    }

    fn eat_false(&mut self) -> bool {
        if self.is_ident("false") {
            self.bump();
            true
        } else {
            false
        }
    }

    fn rev_rule(&mut self) -> Result<RawRule> {
        let head = if self.eat_false() {
            Vec::new()
        } else {
            self.list(Tok::Pipe, Self::revision_literal)?
        };
        self.expect(Tok::LArrow, "`|` or `<-`")?;
        let body = if *self.peek() == Tok::Dot {
            Vec::new()
        } else {
            self.list(Tok::Comma, Self::revision_literal)?
        };
        self.expect(Tok::Dot, "`,` or `.`")?;
        Ok(RawRule::Rev { head, body })
    }

    fn lp_rule(&mut self) -> Result<RawRule> {
        let head = if self.eat_false() {
            Vec::new()
        } else {
            self.list(Tok::Pipe, Self::atom)?
        };
        self.expect(Tok::ColonDash, "`|` or `:-`")?;
        let body = if *self.peek() == Tok::Dot {
            Vec::new()
        } else {
            self.list(Tok::Comma, Self::literal)?
        };
        self.expect(Tok::Dot, "`,` or `.`")?;
        Ok(RawRule::Lp { head, body })
    }
}

struct RawInstance {
    universe: Option<Vec<Name>>,
    db: Vec<Name>,
    kind: String,
    rules: Vec<(RawRule, Pos)>,
}

fn parse_raw(text: &str) -> Result<RawInstance> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let mut universe = None;
    let mut db = None;
    let mut program: Option<(String, Vec<(RawRule, Pos)>)> = None;
    while *p.peek() != Tok::Eof {
        if !p.at_header() {
            return p.fail("a section header (`universe:`, `db:`, `aic:`, `rev:` or `lp:`)");
        }
        let (tok, pos) = p.bump();
        p.bump();
        let Tok::Ident(section) = tok else {
            unreachable!("header starts with an identifier")
        };
        match section.as_str() {
            "universe" | "db" => {
                let slot = if section == "universe" {
                    &mut universe
                } else {
                    &mut db
                };
                if slot.is_some() {
                    return Err(semantic(pos, format!("duplicate `{section}:` section")));
                }
                *slot = Some(p.atom_list()?);
            }
            kind => {
                if let Some((prev, _)) = &program {
                    return Err(semantic(
                        pos,
                        format!("second program section `{kind}:` (already have `{prev}:`)"),
                    ));
                }
                let mut rules = Vec::new();
                while !p.at_end_of_section() {
                    let start = p.pos();
                    let rule = match kind {
                        "aic" => p.aic_rule()?,
                        "rev" => p.rev_rule()?,
                        _ => p.lp_rule()?,
                    };
                    rules.push((rule, start));
                }
                program = Some((kind.to_string(), rules));
            }
        }
    }
    let Some((kind, rules)) = program else {
        return Err(syntax(
            p.pos(),
            "a program section (`aic:`, `rev:` or `lp:`)",
        ));
    };
    Ok(RawInstance {
        universe,
        db: db.unwrap_or_default(),
        kind,
        rules,
    })
}

fn resolve(universe: &Universe, name: &Name) -> Result<Atom> {
    universe
        .lookup(&name.text)
        .ok_or_else(|| semantic(name.pos, format!("unknown atom `{}`", name.text)))
}

fn in_rule(pos: Pos, raw: &RawRule, cause: Error) -> Error {
    Error::InRule {
        line: pos.line,
        col: pos.col,
        rule: raw.text(),
        cause: Box::new(cause),
    }
}

/// Parses an instance file.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let raw = parse_raw(text)?;
    let universe = match &raw.universe {
        Some(names) => {
            let mut u = Universe::default();
            for name in names {
                if u.lookup(&name.text).is_some() {
                    return Err(semantic(
                        name.pos,
                        format!("duplicate atom `{}` in universe", name.text),
                    ));
                }
                u.intern(&name.text);
            }
            u
        }
        None => {
            let mut mentioned: BTreeSet<&str> = raw.db.iter().map(|n| n.text.as_str()).collect();
            for (rule, _) in &raw.rules {
                mentioned.extend(rule.names().into_iter().map(|n| n.text.as_str()));
            }
            Universe::new(mentioned)?
        }
    };
    let universe = Arc::new(universe);
    let mut db = Database::new();
    for name in &raw.db {
        db.insert(resolve(&universe, name)?);
    }

    let mut warnings = Vec::new();
    let program = match raw.kind.as_str() {
        "aic" => {
            let mut rules = Vec::new();
            for (rule, pos) in &raw.rules {
                let RawRule::Aic { body, head } = rule else {
                    unreachable!()
                };
                let body: Vec<Literal> = body
                    .iter()
                    .map(|(n, p)| {
                        Ok(Literal {
                            atom: resolve(&universe, n)?,
                            positive: *p,
                        })
                    })
                    .collect::<Result<_>>()?;
                let head: Vec<UpdateAction> = head
                    .iter()
                    .map(|(n, p)| {
                        Ok(UpdateAction {
                            atom: resolve(&universe, n)?,
                            insert: *p,
                        })
                    })
                    .collect::<Result<_>>()?;
                let built =
                    AicRule::new(&universe, body, head).map_err(|e| in_rule(*pos, rule, e))?;
                if built.has_complementary_body() {
                    warnings.push(format!(
                        "{}:{}: rule `{}` has a body that can never hold",
                        pos.line,
                        pos.col,
                        rule.text()
                    ));
                }
                rules.push(built);
            }
            Program::Aic(AicProgram::new(Arc::clone(&universe), rules)?)
        }
        "rev" => {
            let mut rules = Vec::new();
            for (rule, pos) in &raw.rules {
                let RawRule::Rev { head, body } = rule else {
                    unreachable!()
                };
                let conv = |v: &Vec<(Name, bool)>| -> Result<Vec<RevisionLiteral>> {
                    v.iter()
                        .map(|(n, p)| {
                            Ok(RevisionLiteral {
                                atom: resolve(&universe, n)?,
                                is_in: *p,
                            })
                        })
                        .collect()
                };
                let built = RevisionRule::new(conv(head)?, conv(body)?)
                    .map_err(|e| in_rule(*pos, rule, e))?;
                rules.push(built);
            }
            Program::Rev(RevisionProgram::new(Arc::clone(&universe), rules)?)
        }
        _ => {
            let mut rules = Vec::new();
            for (rule, _) in &raw.rules {
                let RawRule::Lp { head, body } = rule else {
                    unreachable!()
                };
                let head = head
                    .iter()
                    .map(|n| resolve(&universe, n))
                    .collect::<Result<Vec<_>>>()?;
                let mut pos_body = Vec::new();
                let mut neg_body = Vec::new();
                for (n, positive) in body {
                    let a = resolve(&universe, n)?;
                    if *positive {
                        pos_body.push(a);
                    } else {
                        neg_body.push(a);
                    }
                }
                rules.push(LpRule::new(head, pos_body, neg_body));
            }
            Program::Lp(LogicProgram::new(Arc::clone(&universe), rules)?)
        }
    };
    Ok(Instance {
        universe,
        db,
        program,
        warnings,
    })
}

fn join<I: IntoIterator<Item = String>>(items: I, sep: &str) -> String {
    items.into_iter().collect::<Vec<_>>().join(sep)
}

pub fn print_aic_rule(universe: &Universe, rule: &AicRule) -> String {
    let head = if rule.head().is_empty() {
        "false".to_string()
    } else {
        join(rule.head().iter().map(|a| a.render(universe)), " | ")
    };
    if rule.body().is_empty() {
        format!("-> {head}.")
    } else {
        let body = join(rule.body().iter().map(|l| l.render(universe)), ", ");
        format!("{body} -> {head}.")
    }
}

pub fn print_rev_rule(universe: &Universe, rule: &RevisionRule) -> String {
    let head = if rule.head().is_empty() {
        "false".to_string()
    } else {
        join(rule.head().iter().map(|l| l.render(universe)), " | ")
    };
    let body = join(rule.body().iter().map(|l| l.render(universe)), ", ");
    if body.is_empty() {
        format!("{head} <- .")
    } else {
        format!("{head} <- {body}.")
    }
}

pub fn print_lp_rule(universe: &Universe, rule: &LpRule) -> String {
    let head = if rule.head.is_empty() {
        "false".to_string()
    } else {
        join(
            rule.head.iter().map(|a| universe.name(*a).to_string()),
            " | ",
        )
    };
    let body: BTreeSet<Literal> = rule
        .pos
        .iter()
        .map(|a| Literal::pos(*a))
        .chain(rule.neg.iter().map(|a| Literal::neg(*a)))
        .collect();
    let body = join(body.iter().map(|l| l.render(universe)), ", ");
    if body.is_empty() {
        format!("{head} :- .")
    } else {
        format!("{head} :- {body}.")
    }
}

/// One rule per line.
pub fn print_aic_program(eta: &AicProgram) -> String {
    eta.rules()
        .iter()
        .map(|r| print_aic_rule(eta.universe(), r) + "\n")
        .collect()
}

pub fn print_rev_program(p: &RevisionProgram) -> String {
    p.rules()
        .iter()
        .map(|r| print_rev_rule(p.universe(), r) + "\n")
        .collect()
}

pub fn print_lp_program(p: &LogicProgram) -> String {
    p.rules()
        .iter()
        .map(|r| print_lp_rule(p.universe(), r) + "\n")
        .collect()
}

fn mentioned_atoms(db: &Database, program: &Program) -> BTreeSet<Atom> {
    let mut atoms: BTreeSet<Atom> = db.iter().copied().collect();
    match program {
        Program::Aic(p) => p.rules().iter().for_each(|r| atoms.extend(r.atoms())),
        Program::Rev(p) => p.rules().iter().for_each(|r| atoms.extend(r.atoms())),
        Program::Lp(p) => p
            .rules()
            .iter()
            .for_each(|r| atoms.extend(r.head.iter().chain(&r.pos).chain(&r.neg).copied())),
    }
    atoms
}

fn atom_list(universe: &Universe, atoms: impl Iterator<Item = Atom>) -> String {
    let names = join(atoms.map(|a| universe.name(a).to_string()), ", ");
    if names.is_empty() {
        ".".to_string()
    } else {
        format!("{names}.")
    }
}

/// Canonical text of an instance. The `universe:` line is emitted only when
/// the universe differs from the one the parser would infer.
pub fn print_instance(universe: &Universe, db: &Database, program: &Program) -> String {
    let mut out = String::new();
    let mut implicit: Vec<&str> = mentioned_atoms(db, program)
        .into_iter()
        .map(|a| universe.name(a))
        .collect();
    implicit.sort_unstable();
    if implicit
        != universe
            .names()
            .iter()
            .map(String::as_str)
            .collect::<Vec<_>>()
    {
        out.push_str(&format!(
            "universe: {}\n",
            atom_list(universe, universe.atoms())
        ));
    }
    out.push_str(&format!(
        "db: {}\n",
        atom_list(universe, db.iter().copied())
    ));
    out.push_str(&format!("{}:\n", program.kind()));
    out.push_str(&match program {
        Program::Aic(p) => print_aic_program(p),
        Program::Rev(p) => print_rev_program(p),
        Program::Lp(p) => print_lp_program(p),
    });
    out
}

impl Instance {
    pub fn to_text(&self) -> String {
        print_instance(&self.universe, &self.db, &self.program)
    }
}

fn fragment_parser(text: &str) -> Result<Parser> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .unwrap_or(trimmed);
    Ok(Parser {
        toks: lex(inner)?,
        at: 0,
    })
}

fn parse_fragment<T>(text: &str, item: impl FnMut(&mut Parser) -> Result<T>) -> Result<Vec<T>> {
    let mut p = fragment_parser(text)?;
    if *p.peek() == Tok::Eof {
        return Ok(Vec::new());
    }
    let items = p.list(Tok::Comma, item)?;
    if *p.peek() != Tok::Eof {
        return p.fail("`,` or end of input");
    }
    Ok(items)
}

fn lookup(universe: &Universe, name: &Name) -> Result<Atom> {
    universe.atom(&name.text)
}

/// Parses `+a, -b` (braces optional) against `universe`.
pub fn parse_update_set(universe: &Universe, text: &str) -> Result<UpdateSet> {
    parse_fragment(text, Parser::action)?
        .iter()
        .map(|(n, insert)| {
            Ok(UpdateAction {
                atom: lookup(universe, n)?,
                insert: *insert,
            })
        })
        .collect()
}

/// Parses `in(a), out(b)` (braces optional) against `universe`.
pub fn parse_revision_set(universe: &Universe, text: &str) -> Result<RevisionSet> {
    parse_fragment(text, Parser::revision_literal)?
        .iter()
        .map(|(n, is_in)| {
            Ok(RevisionLiteral {
                atom: lookup(universe, n)?,
                is_in: *is_in,
            })
        })
        .collect()
}

/// Parses a conjunction `a, not b` against `universe`.
pub fn parse_literals(universe: &Universe, text: &str) -> Result<Vec<Literal>> {
    parse_fragment(text, Parser::literal)?
        .iter()
        .map(|(n, positive)| {
            Ok(Literal {
                atom: lookup(universe, n)?,
                positive: *positive,
            })
        })
        .collect()
}

/// Parses `a, b` against `universe`.
pub fn parse_atoms(universe: &Universe, text: &str) -> Result<Database> {
    parse_fragment(text, Parser::atom)?
        .iter()
        .map(|n| lookup(universe, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_aic_instance() {
        let inst = parse_instance("db: a, b.\naic: a, b -> -a | -b.").unwrap();
        assert_eq!(inst.universe.names(), &["a", "b"]);
        assert_eq!(inst.db.len(), 2);
        let Program::Aic(eta) = &inst.program else {
            panic!()
        };
        assert_eq!(eta.rules()[0].head().len(), 2);
        assert_eq!(inst.to_text(), "db: a, b.\naic:\na, b -> -a | -b.\n");
    }

    #[test]
    fn parses_revision_instance() {
        let inst = parse_instance("db: .\nrev: in(a) | out(b) <- . out(a) | in(b) <- .").unwrap();
        let Program::Rev(p) = &inst.program else {
            panic!()
        };
        assert_eq!(p.len(), 2);
        assert!(inst.db.is_empty());
        assert_eq!(
            inst.to_text(),
            "db: .\nrev:\nin(a) | out(b) <- .\nout(a) | in(b) <- .\n"
        );
    }

    #[test]
    fn updatable_condition_is_reported_with_rule() {
        let err = parse_instance("aic: a -> +b.").unwrap_err();
        match err {
            Error::InRule {
                line,
                col,
                rule,
                cause,
            } => {
                assert_eq!((line, col), (1, 6));
                assert_eq!(rule, "a -> +b");
                assert!(matches!(*cause, Error::UpdatableConditionViolated { .. }));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_instance("db: a.\naic: a, -> -a.").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Syntax {
                    line: 2,
                    col: 9,
                    ..
                }
            ),
            "{err:?}"
        );
        let err = parse_instance("db: a.").unwrap_err();
        assert!(matches!(err, Error::Syntax { .. }));
        let err = parse_instance("aic: A -> false.").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Syntax {
                    line: 1,
                    col: 6,
                    ..
                }
            ),
            "{err:?}"
        );
    }

    #[test]
    fn declared_universe_is_kept_and_checked() {
        let inst = parse_instance("universe: c, a, b.\ndb: a.\naic: a -> -a.").unwrap();
        assert_eq!(inst.universe.names(), &["c", "a", "b"]);
        assert!(inst.to_text().starts_with("universe: c, a, b.\n"));
        let err = parse_instance("universe: a.\naic: b -> false.").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Semantic {
                    line: 2,
                    col: 6,
                    ..
                }
            ),
            "{err:?}"
        );
    }

    #[test]
    fn comments_and_whitespace() {
        let a = parse_instance("% header\ndb:a,b.%x\naic:a,b->-a|-b.").unwrap();
        let b = parse_instance("db: a, b.\naic: a, b -> -a | -b.").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn complementary_body_warns() {
        let inst = parse_instance("aic: a, not a -> false.").unwrap();
        assert_eq!(inst.warnings.len(), 1);
    }

    #[test]
    fn lp_round_trip() {
        let inst = parse_instance("lp: a | b :- c, not d. e :- . false :- a, b.").unwrap();
        let text = inst.to_text();
        assert_eq!(
            text,
            "db: .\nlp:\na | b :- c, not d.\ne :- .\nfalse :- a, b.\n"
        );
        assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn fragments() {
        let u = Universe::new(["a", "b"]).unwrap();
        assert_eq!(parse_update_set(&u, "{+a, -b}").unwrap().len(), 2);
        assert_eq!(parse_update_set(&u, "").unwrap(), UpdateSet::new());
        assert_eq!(parse_revision_set(&u, "in(a),out(b)").unwrap().len(), 2);
        assert_eq!(parse_literals(&u, "a, not b").unwrap().len(), 2);
        assert_eq!(parse_atoms(&u, "a").unwrap().len(), 1);
        assert_eq!(parse_atoms(&u, "z"), Err(Error::UnknownAtom("z".into())));
        assert!(parse_update_set(&u, "+a -b").is_err());
    }

    #[test]
    fn program_section_is_unique() {
        assert!(parse_instance("aic: a -> false.\nrev: in(a) <- .").is_err());
        assert!(parse_instance("db: .\ndb: .\naic:").is_err());
    }

    #[test]
    fn empty_revision_rule_is_rejected() {
        let err = parse_instance("rev: false <- .").unwrap_err();
        assert!(
            matches!(err, Error::InRule { ref cause, .. } if **cause == Error::EmptyRevisionRule)
        );
    }
}
