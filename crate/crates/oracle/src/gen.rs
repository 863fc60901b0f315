//! Random instances. All generators take the RNG explicitly so tests can pin
//! a seed.

use std::sync::Arc;

use aicrepair::{
    AicProgram, AicRule, Atom, Database, Literal, LogicProgram, LpRule, RevisionLiteral,
    RevisionProgram, RevisionRule, Universe, UpdateAction,
};
use rand::seq::SliceRandom;
use rand::Rng;

/// Atoms `a`, `b`, `c`, ...
pub fn universe(n: usize) -> Arc<Universe> {
    let names = (0..n).map(|i| ((b'a' + i as u8) as char).to_string());
    Arc::new(Universe::new(names).expect("distinct names"))
}

pub fn database<R: Rng>(rng: &mut R, u: &Universe) -> Database {
    u.atoms().filter(|_| rng.gen_bool(0.5)).collect()
}

/// `k` distinct atoms.
fn pick<R: Rng>(rng: &mut R, u: &Universe, k: usize) -> Vec<Atom> {
    let mut atoms: Vec<Atom> = u.atoms().collect();
    atoms.shuffle(rng);
    atoms.truncate(k.min(atoms.len()));
    atoms
}

/// A rule with a body of one to three literals and a head drawn from the
/// updatable actions of the body, at most `max_head` of them.
pub fn aic_rule<R: Rng>(rng: &mut R, u: &Universe, max_head: usize) -> AicRule {
    let size = rng.gen_range(1..=3.min(u.len()));
    let body: Vec<Literal> = pick(rng, u, size)
        .into_iter()
        .map(|a| Literal {
            atom: a,
            positive: rng.gen_bool(0.5),
        })
        .collect();
    let mut head: Vec<UpdateAction> = body
        .iter()
        .filter(|_| rng.gen_bool(0.6))
        .map(|l| UpdateAction {
            atom: l.atom,
            insert: !l.positive,
        })
        .collect();
    head.shuffle(rng);
    head.truncate(max_head);
    AicRule::new(u, body, head).expect("generated rule is well formed")
}

fn aic_program_with<R: Rng>(
    rng: &mut R,
    u: &Arc<Universe>,
    max_rules: usize,
    max_head: usize,
) -> AicProgram {
    let k = rng.gen_range(1..=max_rules);
    let rules = (0..k).map(|_| aic_rule(rng, u, max_head)).collect();
    AicProgram::new(Arc::clone(u), rules).expect("atoms from the universe")
}

pub fn aic_program<R: Rng>(rng: &mut R, u: &Arc<Universe>, max_rules: usize) -> AicProgram {
    aic_program_with(rng, u, max_rules, 3)
}

pub fn normal_aic_program<R: Rng>(rng: &mut R, u: &Arc<Universe>, max_rules: usize) -> AicProgram {
    aic_program_with(rng, u, max_rules, 1)
}

fn revision_literal<R: Rng>(rng: &mut R, a: Atom) -> RevisionLiteral {
    RevisionLiteral {
        atom: a,
        is_in: rng.gen_bool(0.5),
    }
}

/// A revision rule with at most `max_head` head literals; when `proper`, no
/// head literal is the dual of a body literal.
pub fn revision_rule<R: Rng>(
    rng: &mut R,
    u: &Universe,
    max_head: usize,
    proper: bool,
) -> RevisionRule {
    loop {
        let head_size = rng.gen_range(0..=max_head.min(u.len()));
        let body_size = rng.gen_range(0..=2.min(u.len()));
        let head: Vec<RevisionLiteral> = pick(rng, u, head_size)
            .into_iter()
            .map(|a| revision_literal(rng, a))
            .collect();
        let body: Vec<RevisionLiteral> = pick(rng, u, body_size)
            .into_iter()
            .map(|a| revision_literal(rng, a))
            .collect();
        if let Ok(rule) = RevisionRule::new(head, body) {
            if !proper || rule.is_proper() {
                return rule;
            }
        }
    }
}

fn revision_program_with<R: Rng>(
    rng: &mut R,
    u: &Arc<Universe>,
    max_rules: usize,
    max_head: usize,
    proper: bool,
) -> RevisionProgram {
    let k = rng.gen_range(1..=max_rules);
    let rules = (0..k)
        .map(|_| revision_rule(rng, u, max_head, proper))
        .collect();
    RevisionProgram::new(Arc::clone(u), rules).expect("atoms from the universe")
}

pub fn revision_program<R: Rng>(
    rng: &mut R,
    u: &Arc<Universe>,
    max_rules: usize,
) -> RevisionProgram {
    revision_program_with(rng, u, max_rules, 2, false)
}

pub fn proper_revision_program<R: Rng>(
    rng: &mut R,
    u: &Arc<Universe>,
    max_rules: usize,
) -> RevisionProgram {
    revision_program_with(rng, u, max_rules, 2, true)
}

pub fn normal_revision_program<R: Rng>(
    rng: &mut R,
    u: &Arc<Universe>,
    max_rules: usize,
) -> RevisionProgram {
    revision_program_with(rng, u, max_rules, 1, false)
}

/// A simple rule: every atom occurs at most once across head and body.
pub fn simple_lp_rule<R: Rng>(rng: &mut R, u: &Universe, max_head: usize) -> LpRule {
    let size = rng.gen_range(1..=3.min(u.len()));
    let atoms = pick(rng, u, size);
    let (mut head, mut pos, mut neg) = (Vec::new(), Vec::new(), Vec::new());
    for a in atoms {
        match rng.gen_range(0..3) {
            0 if head.len() < max_head => head.push(a),
            1 => pos.push(a),
            _ => neg.push(a),
        }
    }
    LpRule::new(head, pos, neg)
}

fn simple_lp_with<R: Rng>(
    rng: &mut R,
    u: &Arc<Universe>,
    max_rules: usize,
    max_head: usize,
) -> LogicProgram {
    let k = rng.gen_range(1..=max_rules);
    let rules = (0..k).map(|_| simple_lp_rule(rng, u, max_head)).collect();
    LogicProgram::new(Arc::clone(u), rules).expect("atoms from the universe")
}

pub fn simple_lp<R: Rng>(rng: &mut R, u: &Arc<Universe>, max_rules: usize) -> LogicProgram {
    simple_lp_with(rng, u, max_rules, 2)
}

pub fn normal_simple_lp<R: Rng>(rng: &mut R, u: &Arc<Universe>, max_rules: usize) -> LogicProgram {
    simple_lp_with(rng, u, max_rules, 1)
}

/// A random update set with at most one action per atom.
pub fn update_set<R: Rng>(rng: &mut R, u: &Universe) -> aicrepair::UpdateSet {
    u.atoms()
        .filter_map(|a| match rng.gen_range(0..3) {
            0 => Some(UpdateAction::insert(a)),
            1 => Some(UpdateAction::delete(a)),
            _ => None,
        })
        .collect()
}

/// A random consistent revision literal set.
pub fn revision_set<R: Rng>(rng: &mut R, u: &Universe) -> aicrepair::RevisionSet {
    u.atoms()
        .filter_map(|a| match rng.gen_range(0..3) {
            0 => Some(RevisionLiteral::in_(a)),
            1 => Some(RevisionLiteral::out(a)),
            _ => None,
        })
        .collect()
}
