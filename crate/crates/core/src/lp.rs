//! Disjunctive logic programs, the Gelfond-Lifschitz reduct, brute-force
//! answer sets, and the `aic(·)` encoding.
//!
//! The answer-set engine enumerates every candidate model. It exists to
//! cross-check the justified semantics, not to solve large programs.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::aic::subset_of;
use crate::engine::{proper_subsets, search, Limits};
use crate::error::{Error, Result};
use crate::model::{AicProgram, AicRule, Atom, Database, Literal, Universe, UpdateAction};

/// `a1 | ... | ak :- b1, ..., bm, not c1, ..., not cn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LpRule {
    pub head: BTreeSet<Atom>,
    pub pos: BTreeSet<Atom>,
    pub neg: BTreeSet<Atom>,
}

impl LpRule {
    pub fn new(
        head: impl IntoIterator<Item = Atom>,
        pos: impl IntoIterator<Item = Atom>,
        neg: impl IntoIterator<Item = Atom>,
    ) -> Self {
        LpRule {
            head: head.into_iter().collect(),
            pos: pos.into_iter().collect(),
            neg: neg.into_iter().collect(),
        }
    }

    /// The first atom that occurs more than once across head and body.
    pub fn repeated_atom(&self) -> Option<Atom> {
        let mut seen = BTreeSet::new();
        self.head
            .iter()
            .chain(&self.pos)
            .chain(&self.neg)
            .copied()
            .find(|a| !seen.insert(*a))
    }

    pub fn is_simple(&self) -> bool {
        self.repeated_atom().is_none()
    }

    pub fn is_normal(&self) -> bool {
        self.head.len() <= 1
    }

    pub fn is_positive(&self) -> bool {
        self.neg.is_empty()
    }

    /// `M ⊨ ρ`.
    pub fn satisfied_by(&self, m: &Database) -> bool {
        let body =
            self.pos.iter().all(|a| m.contains(a)) && self.neg.iter().all(|a| !m.contains(a));
        !body || self.head.iter().any(|a| m.contains(a))
    }

    fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.head.iter().chain(&self.pos).chain(&self.neg).copied()
    }
}

/// A finite disjunctive logic program over one universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicProgram {
    universe: Arc<Universe>,
    rules: Vec<LpRule>,
    simple: bool,
}

impl LogicProgram {
    pub fn new(universe: Arc<Universe>, rules: Vec<LpRule>) -> Result<Self> {
        for rule in &rules {
            if let Some(a) = rule.atoms().find(|a| !universe.contains(*a)) {
                return Err(Error::UnknownAtom(format!("#{}", a.index())));
            }
        }
        let simple = rules.iter().all(LpRule::is_simple);
        Ok(LogicProgram {
            universe,
            rules,
            simple,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn rules(&self) -> &[LpRule] {
        &self.rules
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn is_normal(&self) -> bool {
        self.rules.iter().all(LpRule::is_normal)
    }

    pub fn satisfied_by(&self, m: &Database) -> bool {
        self.rules.iter().all(|r| r.satisfied_by(m))
    }
}

/// `P^M`: keep rules with no `not a` for `a ∈ M`, then drop their negative literals.
pub fn reduct(p: &LogicProgram, m: &Database) -> LogicProgram {
    let rules: Vec<LpRule> = p
        .rules
        .iter()
        .filter(|r| r.neg.iter().all(|a| !m.contains(a)))
        .map(|r| LpRule {
            head: r.head.clone(),
            pos: r.pos.clone(),
            neg: BTreeSet::new(),
        })
        .collect();
    let simple = rules.iter().all(LpRule::is_simple);
    LogicProgram {
        universe: Arc::clone(&p.universe),
        rules,
        simple,
    }
}

/// `M` is a minimal model of `P^M`.
pub fn is_answer_set(p: &LogicProgram, m: &Database) -> bool {
    let reduced = reduct(p, m);
    if !reduced.satisfied_by(m) {
        return false;
    }
    let atoms: Vec<Atom> = m.iter().copied().collect();
    !proper_subsets(atoms).any(|sub| reduced.satisfied_by(&sub.into_iter().collect()))
}

/// Every answer set of `p`, sorted.
pub fn answer_sets(p: &LogicProgram, limits: &Limits) -> Result<Vec<Database>> {
    limits.check_universe(p.universe.len())?;
    let atoms: Vec<Atom> = p.universe.atoms().collect();
    let outcome = search(
        atoms.len(),
        limits,
        |mask| Database::from(subset_of(&atoms, mask)),
        |m| is_answer_set(p, m),
    );
    Ok(outcome.found)
}

/// `aic(ρ) = not a1, ..., not ak, β ⊃ +a1 | ... | +ak` for a simple rule.
pub fn aic_of_rule(universe: &Universe, rule: &LpRule) -> Result<AicRule> {
    if let Some(a) = rule.repeated_atom() {
        return Err(Error::NotSimpleRule(universe.name(a).to_string()));
    }
    let body = rule
        .head
        .iter()
        .map(|a| Literal::neg(*a))
        .chain(rule.pos.iter().map(|a| Literal::pos(*a)))
        .chain(rule.neg.iter().map(|a| Literal::neg(*a)));
    let head = rule.head.iter().map(|a| UpdateAction::insert(*a));
    AicRule::new(universe, body, head)
}

pub fn aic_of_program(p: &LogicProgram) -> Result<AicProgram> {
    let rules = p
        .rules
        .iter()
        .map(|r| aic_of_rule(&p.universe, r))
        .collect::<Result<Vec<_>>>()?;
    AicProgram::new(Arc::clone(&p.universe), rules)
}

/// `ua(M) = {+a | a ∈ M}`.
pub fn ua_of_model(m: &Database) -> crate::model::UpdateSet {
    m.iter().map(|a| UpdateAction::insert(*a)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_instance, print_aic_program, Program};

    fn lp(text: &str) -> LogicProgram {
        match parse_instance(text).unwrap().program {
            Program::Lp(p) => p,
            _ => panic!(),
        }
    }

    fn db(p: &LogicProgram, names: &[&str]) -> Database {
        Database::from_names(p.universe(), names).unwrap()
    }

    #[test]
    fn reduct_examples() {
        let p = lp("lp: a :- not b.");
        let r = reduct(&p, &Database::new());
        assert_eq!(
            r.rules(),
            &[LpRule::new([p.universe().atom("a").unwrap()], [], [])]
        );
        assert!(reduct(&p, &db(&p, &["b"])).rules().is_empty());
        let q = lp("lp: a | b :- .");
        assert_eq!(reduct(&q, &db(&q, &["a"])).rules(), q.rules());
    }

    #[test]
    fn answer_set_examples() {
        let p = lp("lp: a | b :- .");
        assert_eq!(
            answer_sets(&p, &Limits::default()).unwrap(),
            vec![db(&p, &["a"]), db(&p, &["b"])]
        );
        let q = lp("lp: a :- not a.");
        assert!(answer_sets(&q, &Limits::default()).unwrap().is_empty());
        let empty = lp("lp:");
        assert_eq!(
            answer_sets(&empty, &Limits::default()).unwrap(),
            vec![Database::new()]
        );
    }

    #[test]
    fn aic_encoding() {
        let p = lp("lp: a | b :- c, not d. a :- .");
        let eta = aic_of_program(&p).unwrap();
        assert_eq!(
            print_aic_program(&eta),
            "not a, not b, c, not d -> +a | +b.\nnot a -> +a.\n"
        );
        let bad = lp("lp: a :- a.");
        assert!(!bad.is_simple());
        assert_eq!(aic_of_program(&bad), Err(Error::NotSimpleRule("a".into())));
    }
}
