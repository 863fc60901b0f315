//! Seeded property suites over random small instances.
//!
//! Each property is a function from one case to `Ok(())` or a message that
//! includes the offending instance. The integration tests run them on a few
//! hundred cases; the acceptance run uses the full counts.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use aicrepair::aic::{
    check, check_justified_action_set, check_justified_repair, check_justified_weak_repair,
    decide_jwr_normal, is_closed, is_founded, is_founded_action, least_closure,
};
use aicrepair::algebra::{apply_revision, apply_update, inertia_set, no_effect_set};
use aicrepair::lp::{aic_of_program, answer_sets, is_answer_set, reduct, ua_of_model};
use aicrepair::revision::{
    check_justified_update, check_rev, check_supported_update, is_closed_rev,
    is_founded_rev_literal, triggered_subprogram,
};
use aicrepair::syntax::{print_aic_rule, print_instance, print_rev_rule, Program};
use aicrepair::transforms::{
    normalize_aic, normalize_rev, properize, shift_instance, to_aic, to_rev, verify_aic_shift,
    verify_rev_shift, Shift,
};
use aicrepair::{
    enumerate, enumerate_rev, AicProgram, Atom, Database, Dual, Limits, Literal, LogicProgram,
    RepairClass, RevisionClass, RevisionLiteral, RevisionProgram, RevisionSet, Satisfiable, Signed,
    Universe, UpdateAction, UpdateSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{all_pairs, consistent_pairs, db_mask, mask_db, Pair};
use crate::{aic as oaic, gen, lp as olp, rev as orev};

pub type Check<C> = fn(&C) -> Result<(), String>;

/// Result of running one property over a list of cases.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub name: String,
    pub checked: usize,
    pub violations: usize,
    /// The first few violation messages.
    pub samples: Vec<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn report(&self) -> String {
        let mut out = format!(
            "{}: {} cases, {} violations",
            self.name, self.checked, self.violations
        );
        for s in &self.samples {
            out.push_str("\n  ");
            out.push_str(&s.replace('\n', "\n  "));
        }
        out
    }
}

pub fn run<C>(name: &str, cases: &[C], check: Check<C>) -> Outcome {
    let mut outcome = Outcome {
        name: name.to_string(),
        checked: cases.len(),
        violations: 0,
        samples: Vec::new(),
    };
    for case in cases {
        if let Err(msg) = check(case) {
            outcome.violations += 1;
            if outcome.samples.len() < 3 {
                outcome.samples.push(msg);
            }
        }
    }
    outcome
}

/// Runs every named property and returns the outcomes.
pub fn run_all<C>(cases: &[C], checks: &[(&str, Check<C>)]) -> Vec<Outcome> {
    checks
        .iter()
        .map(|(name, f)| run(name, cases, *f))
        .collect()
}

fn limits() -> Limits {
    Limits::default()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn show_updates(u: &Universe, sets: &[UpdateSet]) -> String {
    let items: Vec<String> = sets.iter().map(|s| s.render(u)).collect();
    format!("[{}]", items.join(", "))
}

fn show_revisions(u: &Universe, sets: &[RevisionSet]) -> String {
    let items: Vec<String> = sets.iter().map(|s| s.render(u)).collect();
    format!("[{}]", items.join(", "))
}

fn subset<T: Ord>(a: &[T], b: &[T]) -> bool {
    let b: BTreeSet<&T> = b.iter().collect();
    a.iter().all(|x| b.contains(x))
}

fn all_update_sets(n: usize) -> impl Iterator<Item = UpdateSet> {
    consistent_pairs(n).map(Pair::to_update_set)
}

fn all_revision_sets(n: usize) -> impl Iterator<Item = RevisionSet> {
    consistent_pairs(n).map(Pair::to_revision_set)
}

// ---------------------------------------------------------------------------
// Cases

#[derive(Debug, Clone)]
pub struct AicCase {
    pub db: Database,
    pub eta: AicProgram,
    /// Shift set.
    pub w: Database,
    /// Two update sets with a consistent union.
    pub u1: UpdateSet,
    pub u2: UpdateSet,
}

impl AicCase {
    pub fn universe(&self) -> &Arc<Universe> {
        self.eta.universe()
    }

    pub fn text(&self) -> String {
        print_instance(self.universe(), &self.db, &Program::Aic(self.eta.clone()))
    }

    fn classes(&self, eta: &AicProgram) -> Result<Vec<(RepairClass, Vec<UpdateSet>)>, String> {
        RepairClass::ALL
            .iter()
            .map(|&c| {
                enumerate(&self.db, eta, c, &limits())
                    .map(|r| (c, r.repairs))
                    .map_err(|e| e.to_string())
            })
            .collect()
    }

    fn class(&self, eta: &AicProgram, class: RepairClass) -> Vec<UpdateSet> {
        enumerate(&self.db, eta, class, &limits())
            .expect("small instance")
            .repairs
    }

    fn fail(&self, msg: impl Into<String>) -> String {
        format!("{}\n{}", msg.into(), self.text())
    }
}

#[derive(Debug, Clone)]
pub struct RevCase {
    pub db: Database,
    pub p: RevisionProgram,
    pub w: Database,
}

impl RevCase {
    pub fn universe(&self) -> &Arc<Universe> {
        self.p.universe()
    }

    pub fn text(&self) -> String {
        print_instance(self.universe(), &self.db, &Program::Rev(self.p.clone()))
    }

    fn class(&self, p: &RevisionProgram, class: RevisionClass) -> Vec<RevisionSet> {
        enumerate_rev(p, &self.db, class, &limits())
            .expect("small instance")
            .repairs
    }

    fn fail(&self, msg: impl Into<String>) -> String {
        format!("{}\n{}", msg.into(), self.text())
    }
}

#[derive(Debug, Clone)]
pub struct LpCase {
    pub p: LogicProgram,
}

impl LpCase {
    pub fn text(&self) -> String {
        print_instance(
            self.p.universe(),
            &Database::new(),
            &Program::Lp(self.p.clone()),
        )
    }

    fn fail(&self, msg: impl Into<String>) -> String {
        format!("{}\n{}", msg.into(), self.text())
    }
}

/// A normal program with a few seed sets for closure tests.
#[derive(Debug, Clone)]
pub struct ClosureCase {
    pub eta: AicProgram,
    pub seeds: Vec<UpdateSet>,
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn consistent_pair<R: Rng>(rng: &mut R, u: &Universe) -> (UpdateSet, UpdateSet) {
    let u1 = gen::update_set(rng, u);
    let u2: UpdateSet = gen::update_set(rng, u)
        .iter()
        .filter(|a| !u1.contains(&a.dual()))
        .copied()
        .collect();
    (u1, u2)
}

fn aic_cases_with(
    seed: u64,
    count: usize,
    max_atoms: usize,
    max_rules: usize,
    normal: bool,
) -> Vec<AicCase> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=max_atoms);
            let u = gen::universe(n);
            let eta = if normal {
                gen::normal_aic_program(&mut r, &u, max_rules)
            } else {
                gen::aic_program(&mut r, &u, max_rules)
            };
            let db = gen::database(&mut r, &u);
            let w = gen::database(&mut r, &u);
            let (u1, u2) = consistent_pair(&mut r, &u);
            AicCase { db, eta, w, u1, u2 }
        })
        .collect()
}

pub fn aic_cases(seed: u64, count: usize, max_atoms: usize, max_rules: usize) -> Vec<AicCase> {
    aic_cases_with(seed, count, max_atoms, max_rules, false)
}

pub fn normal_aic_cases(
    seed: u64,
    count: usize,
    max_atoms: usize,
    max_rules: usize,
) -> Vec<AicCase> {
    aic_cases_with(seed, count, max_atoms, max_rules, true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RevShape {
    Any,
    Proper,
    Normal,
}

pub fn rev_cases(
    seed: u64,
    count: usize,
    max_atoms: usize,
    max_rules: usize,
    shape: RevShape,
) -> Vec<RevCase> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=max_atoms);
            let u = gen::universe(n);
            let p = match shape {
                RevShape::Any => gen::revision_program(&mut r, &u, max_rules),
                RevShape::Proper => gen::proper_revision_program(&mut r, &u, max_rules),
                RevShape::Normal => gen::normal_revision_program(&mut r, &u, max_rules),
            };
            let db = gen::database(&mut r, &u);
            let w = gen::database(&mut r, &u);
            RevCase { db, p, w }
        })
        .collect()
}

pub fn lp_cases(
    seed: u64,
    count: usize,
    max_atoms: usize,
    max_rules: usize,
    normal: bool,
) -> Vec<LpCase> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=max_atoms);
            let u = gen::universe(n);
            let p = if normal {
                gen::normal_simple_lp(&mut r, &u, max_rules)
            } else {
                gen::simple_lp(&mut r, &u, max_rules)
            };
            LpCase { p }
        })
        .collect()
}

/// Normal programs of up to `max_rules` rules, each with four random seeds
/// (not necessarily consistent).
pub fn closure_cases(
    seed: u64,
    count: usize,
    max_atoms: usize,
    max_rules: usize,
) -> Vec<ClosureCase> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=max_atoms);
            let u = gen::universe(n);
            let eta = gen::normal_aic_program(&mut r, &u, max_rules);
            let seeds = (0..4)
                .map(|_| {
                    let pos = r.gen_range(0..1u32 << n);
                    let neg = r.gen_range(0..1u32 << n);
                    Pair::new(pos, neg).to_update_set()
                })
                .collect();
            ClosureCase { eta, seeds }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Update algebra

/// Applying a consistent union at once or in two steps gives the same result.
pub fn update_order_is_irrelevant(c: &AicCase) -> Result<(), String> {
    let u = c.universe();
    let both = apply_update(u, &c.db, &c.u1.union(&c.u2)).map_err(|e| e.to_string())?;
    let first = apply_update(u, &c.db, &c.u1).map_err(|e| e.to_string())?;
    let stepwise = apply_update(u, &first, &c.u2).map_err(|e| e.to_string())?;
    ensure(both == stepwise, || c.fail("two-step update differs"))
}

/// No-effect actions are redundant.
pub fn no_effect_actions_are_redundant(c: &AicCase) -> Result<(), String> {
    let u = c.universe();
    let n = u.len();
    let dbs: Vec<Database> = (0..1u32 << n).map(mask_db).collect();
    for r in &dbs {
        let ne = no_effect_set(u, &c.db, r);
        for r2 in &dbs {
            let ne2 = no_effect_set(u, &c.db, r2);
            if ne.is_subset(&ne2) && apply_update(u, r2, &ne).ok().as_ref() != Some(r2) {
                return Err(c.fail("applying a smaller no-effect set changed the database"));
            }
        }
    }
    for e in all_update_sets(n) {
        let after = apply_update(u, &c.db, &e).expect("consistent");
        let ne = no_effect_set(u, &c.db, &after);
        if !e.union(&ne).is_consistent() {
            continue;
        }
        for sub in consistent_pairs(n).filter(|p| p.subset_of(Pair::from_update_set(&e))) {
            let sub = sub.to_update_set();
            let plain = apply_update(u, &c.db, &sub).expect("consistent");
            let padded = apply_update(u, &c.db, &sub.union(&ne)).expect("consistent");
            if plain != padded {
                return Err(c.fail(format!(
                    "no-effect actions of {} change the result of {}",
                    e.render(u),
                    sub.render(u)
                )));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// AIC semantics

/// Inclusions between the repair classes, and invariance of the
/// non-justified classes under normalization.
pub fn aic_lattice(c: &AicCase) -> Result<(), String> {
    use RepairClass::*;
    let u = c.universe();
    let classes = c.classes(&c.eta)?;
    let get = |k: RepairClass| {
        &classes
            .iter()
            .find(|(x, _)| *x == k)
            .expect("all classes")
            .1
    };
    let chains = [
        [
            JustifiedRepairNormalized,
            JustifiedRepair,
            FoundedRepair,
            Repair,
        ],
        [
            JustifiedWeakRepairNormalized,
            JustifiedWeakRepair,
            FoundedWeakRepair,
            WeakRepair,
        ],
    ];
    for chain in chains {
        for pair in chain.windows(2) {
            ensure(subset(get(pair[0]), get(pair[1])), || {
                c.fail(format!(
                    "{} {} not within {} {}",
                    pair[0].tag(),
                    show_updates(u, get(pair[0])),
                    pair[1].tag(),
                    show_updates(u, get(pair[1]))
                ))
            })?;
        }
    }
    for (strong, weak) in [
        (Repair, WeakRepair),
        (FoundedRepair, FoundedWeakRepair),
        (JustifiedRepair, JustifiedWeakRepair),
        (JustifiedRepairNormalized, JustifiedWeakRepairNormalized),
    ] {
        ensure(subset(get(strong), get(weak)), || {
            c.fail(format!("{} not within {}", strong.tag(), weak.tag()))
        })?;
    }
    let normal = normalize_aic(&c.eta);
    for k in [WeakRepair, Repair, FoundedWeakRepair, FoundedRepair] {
        let n = c.class(&normal, k);
        ensure(&n == get(k), || {
            c.fail(format!(
                "{} changes under normalization: {} vs {}",
                k.tag(),
                show_updates(u, get(k)),
                show_updates(u, &n)
            ))
        })?;
    }
    Ok(())
}

/// Each justified weak repair fixes every atom exactly once together with
/// its no-effect actions, enforces the constraints, and is founded.
pub fn justified_weak_repairs_are_well_behaved(c: &AicCase) -> Result<(), String> {
    let u = c.universe();
    for e in c.class(&c.eta, RepairClass::JustifiedWeakRepair) {
        let after = apply_update(u, &c.db, &e).map_err(|x| x.to_string())?;
        let all = e.union(&no_effect_set(u, &c.db, &after));
        for a in u.atoms() {
            let ins = all.contains(&UpdateAction::insert(a));
            let del = all.contains(&UpdateAction::delete(a));
            ensure(ins != del, || {
                c.fail(format!(
                    "{}: atom {} not decided exactly once",
                    e.render(u),
                    u.name(a)
                ))
            })?;
        }
        ensure(c.eta.satisfied_by(&after), || {
            c.fail(format!("{} does not enforce the constraints", e.render(u)))
        })?;
        ensure(is_founded(&c.db, &c.eta, &e), || {
            c.fail(format!("{} is not founded", e.render(u)))
        })?;
    }
    Ok(())
}

/// For normal programs the justified weak repairs are already minimal.
pub fn normal_justified_weak_repairs_are_minimal(c: &AicCase) -> Result<(), String> {
    let mut programs = vec![normalize_aic(&c.eta)];
    if c.eta.is_normal() {
        programs.push(c.eta.clone());
    }
    for eta in programs {
        let jwr = c.class(&eta, RepairClass::JustifiedWeakRepair);
        let jr = c.class(&eta, RepairClass::JustifiedRepair);
        ensure(jwr == jr, || {
            c.fail(format!(
                "normal program: JWR {} but JR {}",
                show_updates(c.universe(), &jwr),
                show_updates(c.universe(), &jr)
            ))
        })?;
    }
    Ok(())
}

/// A database on which every head action is a real change, if one exists.
fn head_dual_database(
    db: &Database,
    heads: impl Iterator<Item = (Atom, bool)>,
) -> Option<Database> {
    let mut required = BTreeMap::new();
    for (atom, insert) in heads {
        if required.insert(atom, !insert) == Some(insert) {
            return None;
        }
    }
    let mut out = db.clone();
    for (atom, present) in required {
        if present {
            out.insert(atom);
        } else {
            out.remove(&atom);
        }
    }
    Some(out)
}

/// When the dual of every head action holds initially, justified weak
/// repairs are minimal.
pub fn head_duals_true_makes_justified_weak_minimal(c: &AicCase) -> Result<(), String> {
    let heads = c
        .eta
        .rules()
        .iter()
        .flat_map(|r| r.head().iter().map(|a| (a.atom, a.insert)));
    let Some(db) = head_dual_database(&c.db, heads) else {
        return Ok(());
    };
    let case = AicCase { db, ..c.clone() };
    let jwr = case.class(&case.eta, RepairClass::JustifiedWeakRepair);
    let jr = case.class(&case.eta, RepairClass::JustifiedRepair);
    ensure(jwr == jr, || {
        case.fail(format!(
            "head duals hold: JWR {} but JR {}",
            show_updates(case.universe(), &jwr),
            show_updates(case.universe(), &jr)
        ))
    })
}

/// Justified (weak) repairs of the normalized program are justified (weak)
/// repairs of the original.
pub fn normalized_justified_repairs_carry_over(c: &AicCase) -> Result<(), String> {
    let u = c.universe();
    for e in c.class(&c.eta, RepairClass::JustifiedRepairNormalized) {
        ensure(check_justified_repair(&c.db, &c.eta, &e), || {
            c.fail(format!(
                "{} justified for the normalized program only",
                e.render(u)
            ))
        })?;
    }
    for e in c.class(&c.eta, RepairClass::JustifiedWeakRepairNormalized) {
        ensure(check_justified_weak_repair(&c.db, &c.eta, &e), || {
            c.fail(format!(
                "{} justified weak for the normalized program only",
                e.render(u)
            ))
        })?;
    }
    Ok(())
}

/// Reading justified weak repairs off justified action sets agrees with
/// the direct membership test.
pub fn action_set_route_agrees(c: &AicCase) -> Result<(), String> {
    let u = c.universe();
    let mut via_sets = BTreeSet::new();
    for set in all_update_sets(u.len()) {
        if check_justified_action_set(&c.db, &c.eta, &set) {
            let after = apply_update(u, &c.db, &set).expect("consistent");
            via_sets.insert(set.difference(&no_effect_set(u, &c.db, &after)));
        }
    }
    let via_sets: Vec<UpdateSet> = via_sets.into_iter().collect();
    let direct = c.class(&c.eta, RepairClass::JustifiedWeakRepair);
    ensure(via_sets == direct, || {
        c.fail(format!(
            "action sets give {} but the direct test gives {}",
            show_updates(u, &via_sets),
            show_updates(u, &direct)
        ))
    })
}

/// The least-closure test agrees with the generic test on normal programs,
/// for every candidate set.
pub fn closure_decision_agrees(c: &AicCase) -> Result<(), String> {
    let u = c.universe();
    let eta = normalize_aic(&c.eta);
    for e in all_update_sets(u.len()) {
        let fast = decide_jwr_normal(&c.db, &eta, &e).map_err(|x| x.to_string())?;
        let slow = check_justified_weak_repair(&c.db, &eta, &e);
        ensure(fast == slow, || {
            c.fail(format!(
                "{}: least closure says {fast}, generic test says {slow}",
                e.render(u)
            ))
        })?;
    }
    Ok(())
}

pub fn repairs_exist_iff_weak_repairs_exist(c: &AicCase) -> Result<(), String> {
    let wr = c.class(&c.eta, RepairClass::WeakRepair);
    let r = c.class(&c.eta, RepairClass::Repair);
    ensure(wr.is_empty() == r.is_empty(), || {
        c.fail(format!("{} weak repairs but {} repairs", wr.len(), r.len()))
    })
}

pub const AIC_PROPERTIES: [(&str, Check<AicCase>); 10] = [
    ("update order irrelevant", update_order_is_irrelevant),
    (
        "no-effect actions redundant",
        no_effect_actions_are_redundant,
    ),
    ("repair class inclusions", aic_lattice),
    (
        "justified weak repairs well behaved",
        justified_weak_repairs_are_well_behaved,
    ),
    (
        "normal programs: JWR = JR",
        normal_justified_weak_repairs_are_minimal,
    ),
    (
        "head duals true: JWR = JR",
        head_duals_true_makes_justified_weak_minimal,
    ),
    (
        "normalized justified carry over",
        normalized_justified_repairs_carry_over,
    ),
    ("action-set route agrees", action_set_route_agrees),
    ("least-closure decision agrees", closure_decision_agrees),
    (
        "repairs exist iff weak repairs exist",
        repairs_exist_iff_weak_repairs_exist,
    ),
];

// ---------------------------------------------------------------------------
// Revision semantics

const REV_NON_SUPPORTED: [RevisionClass; 8] = [
    RevisionClass::WeakRevision,
    RevisionClass::Revision,
    RevisionClass::FoundedWeakRevision,
    RevisionClass::FoundedRevision,
    RevisionClass::JustifiedWeakRevision,
    RevisionClass::JustifiedRevision,
    RevisionClass::JustifiedWeakRevisionNormalized,
    RevisionClass::JustifiedRevisionNormalized,
];

pub fn revision_lattice(c: &RevCase) -> Result<(), String> {
    use RevisionClass::*;
    let u = c.universe();
    let get = |k| c.class(&c.p, k);
    let chains = [
        [
            JustifiedRevisionNormalized,
            JustifiedRevision,
            FoundedRevision,
            Revision,
        ],
        [
            JustifiedWeakRevisionNormalized,
            JustifiedWeakRevision,
            FoundedWeakRevision,
            WeakRevision,
        ],
    ];
    for chain in chains {
        for pair in chain.windows(2) {
            let (a, b) = (get(pair[0]), get(pair[1]));
            ensure(subset(&a, &b), || {
                c.fail(format!(
                    "{} {} not within {} {}",
                    pair[0].tag(),
                    show_revisions(u, &a),
                    pair[1].tag(),
                    show_revisions(u, &b)
                ))
            })?;
        }
    }
    for (strong, weak) in [
        (Revision, WeakRevision),
        (FoundedRevision, FoundedWeakRevision),
        (JustifiedRevision, JustifiedWeakRevision),
        (JustifiedRevisionNormalized, JustifiedWeakRevisionNormalized),
    ] {
        ensure(subset(&get(strong), &get(weak)), || {
            c.fail(format!("{} not within {}", strong.tag(), weak.tag()))
        })?;
    }
    Ok(())
}

/// Justified updates and justified weak revisions enforce the program.
pub fn justified_revisions_satisfy_program(c: &RevCase) -> Result<(), String> {
    let u = c.universe();
    for e in c.class(&c.p, RevisionClass::JustifiedWeakRevision) {
        let after = apply_revision(u, &c.db, &e).map_err(|x| x.to_string())?;
        ensure(c.p.satisfied_by(&after), || {
            c.fail(format!("{} does not enforce the program", e.render(u)))
        })?;
        let update = e.union(&inertia_set(u, &c.db, &after));
        ensure(check_justified_update(&c.p, &c.db, &update), || {
            c.fail(format!("{} has no justified update", e.render(u)))
        })?;
    }
    for set in all_revision_sets(u.len()) {
        if check_justified_update(&c.p, &c.db, &set) {
            let after = apply_revision(u, &c.db, &set).expect("consistent");
            ensure(c.p.satisfied_by(&after), || {
                c.fail(format!(
                    "justified update {} violates the program",
                    set.render(u)
                ))
            })?;
        }
    }
    Ok(())
}

fn normal_versions(p: &RevisionProgram) -> Vec<RevisionProgram> {
    let mut out = vec![normalize_rev(p)];
    if p.is_normal() {
        out.push(p.clone());
    }
    out
}

/// On normal programs supported revisions enforce the program and coincide
/// with founded weak revisions.
pub fn supported_revisions_are_founded_weak(c: &RevCase) -> Result<(), String> {
    let u = c.universe();
    for p in normal_versions(&c.p) {
        let supp = c.class(&p, RevisionClass::SupportedRevision);
        for e in &supp {
            let after = apply_revision(u, &c.db, e).map_err(|x| x.to_string())?;
            ensure(p.satisfied_by(&after), || {
                c.fail(format!(
                    "supported revision {} violates the program",
                    e.render(u)
                ))
            })?;
        }
        let fwr = c.class(&p, RevisionClass::FoundedWeakRevision);
        ensure(supp == fwr, || {
            c.fail(format!(
                "supported {} but founded weak {}",
                show_revisions(u, &supp),
                show_revisions(u, &fwr)
            ))
        })?;
    }
    Ok(())
}

pub fn justified_revisions_are_founded(c: &RevCase) -> Result<(), String> {
    use RevisionClass::*;
    for (j, f) in [
        (JustifiedRevision, FoundedRevision),
        (JustifiedWeakRevision, FoundedWeakRevision),
    ] {
        ensure(subset(&c.class(&c.p, j), &c.class(&c.p, f)), || {
            c.fail(format!("{} not within {}", j.tag(), f.tag()))
        })?;
    }
    Ok(())
}

pub fn revision_normalization_invariance(c: &RevCase) -> Result<(), String> {
    use RevisionClass::*;
    let n = normalize_rev(&c.p);
    for k in [WeakRevision, Revision, FoundedWeakRevision, FoundedRevision] {
        ensure(c.class(&c.p, k) == c.class(&n, k), || {
            c.fail(format!("{} changes under normalization", k.tag()))
        })?;
    }
    for k in [JustifiedRevision, JustifiedWeakRevision] {
        ensure(subset(&c.class(&n, k), &c.class(&c.p, k)), || {
            c.fail(format!(
                "{} of the normalized program not within the original",
                k.tag()
            ))
        })?;
    }
    Ok(())
}

pub fn normal_justified_weak_revisions_are_minimal(c: &RevCase) -> Result<(), String> {
    for p in normal_versions(&c.p) {
        let jw = c.class(&p, RevisionClass::JustifiedWeakRevision);
        let j = c.class(&p, RevisionClass::JustifiedRevision);
        ensure(jw == j, || {
            c.fail(format!(
                "normal program: JWRev {} but JRev {}",
                show_revisions(c.universe(), &jw),
                show_revisions(c.universe(), &j)
            ))
        })?;
    }
    Ok(())
}

pub fn head_duals_true_makes_justified_weak_revisions_minimal(c: &RevCase) -> Result<(), String> {
    // α^D holds in I: in(a) needs a ∉ I, out(a) needs a ∈ I, as for +a / -a.
    let heads =
        c.p.rules()
            .iter()
            .flat_map(|r| r.head().iter().map(|l| (l.atom, l.is_in)));
    let Some(db) = head_dual_database(&c.db, heads) else {
        return Ok(());
    };
    let case = RevCase { db, ..c.clone() };
    let jw = case.class(&case.p, RevisionClass::JustifiedWeakRevision);
    let j = case.class(&case.p, RevisionClass::JustifiedRevision);
    ensure(jw == j, || {
        case.fail(format!(
            "head duals hold: JWRev {} but JRev {}",
            show_revisions(case.universe(), &jw),
            show_revisions(case.universe(), &j)
        ))
    })
}

pub fn properization_preserves_classes(c: &RevCase) -> Result<(), String> {
    let proper = properize(&c.p);
    ensure(proper.is_proper(), || {
        c.fail("properized program is not proper")
    })?;
    for k in REV_NON_SUPPORTED {
        let before = c.class(&c.p, k);
        let after = c.class(&proper, k);
        ensure(before == after, || {
            c.fail(format!(
                "{} changes under properization: {} vs {}",
                k.tag(),
                show_revisions(c.universe(), &before),
                show_revisions(c.universe(), &after)
            ))
        })?;
    }
    Ok(())
}

pub const REVISION_PROPERTIES: [(&str, Check<RevCase>); 8] = [
    ("revision class inclusions", revision_lattice),
    (
        "justified revisions satisfy program",
        justified_revisions_satisfy_program,
    ),
    (
        "supported = founded weak (normal)",
        supported_revisions_are_founded_weak,
    ),
    ("justified within founded", justified_revisions_are_founded),
    ("revision normalization", revision_normalization_invariance),
    (
        "normal programs: JWRev = JRev",
        normal_justified_weak_revisions_are_minimal,
    ),
    (
        "head duals true: JWRev = JRev",
        head_duals_true_makes_justified_weak_revisions_minimal,
    ),
    (
        "properization preserves classes",
        properization_preserves_classes,
    ),
];

// ---------------------------------------------------------------------------
// Cross-formalism

/// Every revision class of a proper program maps under `ua` onto the
/// corresponding repair class of its AIC translation.
pub fn revision_classes_match_repairs(c: &RevCase) -> Result<(), String> {
    let eta = to_aic(&c.p).map_err(|e| c.fail(e.to_string()))?;
    for k in REV_NON_SUPPORTED {
        let counterpart = k.counterpart().expect("non-supported classes have one");
        let mut rev: Vec<UpdateSet> = c.class(&c.p, k).iter().map(|e| e.ua()).collect();
        rev.sort();
        let rep = enumerate(&c.db, &eta, counterpart, &limits())
            .map_err(|e| e.to_string())?
            .repairs;
        ensure(rev == rep, || {
            c.fail(format!(
                "{} maps to {} but {} is {}",
                k.tag(),
                show_updates(c.universe(), &rev),
                counterpart.tag(),
                show_updates(c.universe(), &rep)
            ))
        })?;
    }
    Ok(())
}

/// Closedness is preserved by the translation, for every literal set.
pub fn closedness_matches(c: &RevCase) -> Result<(), String> {
    let eta = to_aic(&c.p).map_err(|e| c.fail(e.to_string()))?;
    for pair in all_pairs(c.universe().len()) {
        let e = pair.to_revision_set();
        ensure(is_closed_rev(&e, &c.p) == is_closed(&e.ua(), &eta), || {
            c.fail(format!("closedness of {} differs", e.render(c.universe())))
        })?;
    }
    Ok(())
}

fn sorted_rules<T>(rules: &[T], show: impl Fn(&T) -> String) -> Vec<String> {
    let mut v: Vec<String> = rules.iter().map(show).collect();
    v.sort();
    v
}

/// The translations are mutually inverse and commute with normalization.
pub fn translations_are_inverse(c: &RevCase) -> Result<(), String> {
    let u = c.universe();
    let eta = to_aic(&c.p).map_err(|e| c.fail(e.to_string()))?;
    let back = to_rev(&eta).map_err(|e| c.fail(e.to_string()))?;
    ensure(back == c.p, || c.fail("to_rev(to_aic(P)) differs from P"))?;
    ensure(to_aic(&back).as_ref() == Ok(&eta), || {
        c.fail("to_aic(to_rev(η)) differs")
    })?;
    let a = to_aic(&normalize_rev(&c.p)).map_err(|e| c.fail(e.to_string()))?;
    let b = normalize_aic(&eta);
    ensure(
        sorted_rules(a.rules(), |r| print_aic_rule(u, r))
            == sorted_rules(b.rules(), |r| print_aic_rule(u, r)),
        || c.fail("translation does not commute with normalization"),
    )
}

pub const CROSS_PROPERTIES: [(&str, Check<RevCase>); 3] = [
    (
        "revision classes match repair classes",
        revision_classes_match_repairs,
    ),
    ("closedness preserved by translation", closedness_matches),
    (
        "translations inverse and commute with normalization",
        translations_are_inverse,
    ),
];

// ---------------------------------------------------------------------------
// Shifting

pub fn aic_classes_transport(c: &AicCase) -> Result<(), String> {
    let witness = shift_instance(&c.db, &c.eta, &c.w).map_err(|e| e.to_string())?;
    let checks =
        verify_aic_shift(&witness, &RepairClass::ALL, &limits()).map_err(|e| e.to_string())?;
    for t in checks {
        ensure(t.holds(), || {
            c.fail(format!(
                "{} not transported by W = {}: {} vs {}",
                t.class.tag(),
                c.w.render(c.universe()),
                show_updates(c.universe(), &t.transported),
                show_updates(c.universe(), &t.shifted)
            ))
        })?;
    }
    Ok(())
}

/// Shifting by the database itself moves everything to the empty database.
pub fn aic_shift_to_empty_database(c: &AicCase) -> Result<(), String> {
    let witness = shift_instance(&c.db, &c.eta, &c.db).map_err(|e| e.to_string())?;
    ensure(witness.shifted.0.is_empty(), || {
        c.fail("I ÷ I is not empty")
    })?;
    let checks =
        verify_aic_shift(&witness, &RepairClass::BASE, &limits()).map_err(|e| e.to_string())?;
    ensure(checks.iter().all(|t| t.holds()), || {
        c.fail("classes not transported to the empty database")
    })
}

pub fn rev_classes_transport(c: &RevCase) -> Result<(), String> {
    let witness = shift_instance(&c.db, &c.p, &c.w).map_err(|e| e.to_string())?;
    let mut classes = REV_NON_SUPPORTED.to_vec();
    if c.p.is_normal() {
        classes.push(RevisionClass::SupportedRevision);
    }
    let checks = verify_rev_shift(&witness, &classes, &limits()).map_err(|e| e.to_string())?;
    for t in checks {
        ensure(t.holds(), || {
            c.fail(format!(
                "{} not transported by W = {}: {} vs {}",
                t.class.tag(),
                c.w.render(c.universe()),
                show_revisions(c.universe(), &t.transported),
                show_revisions(c.universe(), &t.shifted)
            ))
        })?;
    }
    Ok(())
}

/// Item-level facts about `T_W` and `÷`.
pub fn shift_item_lemmas(c: &AicCase) -> Result<(), String> {
    let u = c.universe();
    let w = &c.w;
    let n = u.len();
    let shifted_db = c.db.shift(w);
    for a in u.atoms() {
        for insert in [true, false] {
            let alpha = UpdateAction::with(a, insert);
            ensure(alpha.lit().shift(w) == alpha.shift(w).lit(), || {
                c.fail("T_W and lit do not commute")
            })?;
            let l = alpha.lit();
            ensure(
                l.satisfied_by(&c.db) == l.shift(w).satisfied_by(&shifted_db),
                || c.fail("literal truth not preserved by shifting"),
            )?;
        }
    }
    for set in all_update_sets(n) {
        let shifted = set.shift(w);
        ensure(shifted.is_consistent(), || {
            c.fail("shifting broke consistency")
        })?;
        ensure(shifted.shift(w) == set, || {
            c.fail("double shift of an update set")
        })?;
        let after = apply_update(u, &c.db, &set).expect("consistent");
        let shifted_after = apply_update(u, &shifted_db, &shifted).expect("consistent");
        ensure(after.shift(w) == shifted_after, || {
            c.fail(format!(
                "(I∘U)÷W differs from (I÷W)∘T_W(U) for {}",
                set.render(u)
            ))
        })?;
        for a in u.atoms() {
            for l in [Literal::pos(a), Literal::neg(a)] {
                ensure(
                    l.satisfied_by(&after) == l.shift(w).satisfied_by(&shifted_after),
                    || c.fail("literal truth after update not preserved"),
                )?;
            }
        }
        ensure(
            check_justified_action_set(&c.db, &c.eta, &set)
                == check_justified_action_set(&shifted_db, &c.eta.shift(w), &shifted),
            || {
                c.fail(format!(
                    "justified action set status of {} not preserved",
                    set.render(u)
                ))
            },
        )?;
        let rev = set.revision_literals();
        ensure(rev.shift(w).ua() == rev.ua().shift(w), || {
            c.fail("T_W and ua do not commute")
        })?;
    }
    for r in (0..1u32 << n).map(mask_db) {
        ensure(
            no_effect_set(u, &c.db, &r).shift(w) == no_effect_set(u, &shifted_db, &r.shift(w)),
            || c.fail("T_W(ne(I,R)) differs from ne(I÷W, R÷W)"),
        )?;
    }
    for rule in c.eta.rules() {
        ensure(rule.shift(w).nup() == rule.nup().shift(w), || {
            c.fail("T_W and nup do not commute")
        })?;
    }
    ensure(c.eta.shift(w).shift(w) == c.eta, || {
        c.fail("double shift of the program")
    })?;
    ensure(shifted_db.shift(w) == c.db, || {
        c.fail("double shift of the database")
    })
}

/// `T_W` commutes with properization and with the AIC translation.
pub fn shift_commutes_with_translations(c: &RevCase) -> Result<(), String> {
    let w = &c.w;
    let u = c.universe();
    let a = properize(&c.p).shift(w);
    let b = properize(&c.p.shift(w));
    ensure(
        sorted_rules(a.rules(), |r| print_rev_rule(u, r))
            == sorted_rules(b.rules(), |r| print_rev_rule(u, r)),
        || c.fail("T_W and properization do not commute"),
    )?;
    let proper = properize(&c.p);
    let x = to_aic(&proper).map_err(|e| e.to_string())?.shift(w);
    let y = to_aic(&proper.shift(w)).map_err(|e| e.to_string())?;
    ensure(x == y, || {
        c.fail("T_W and the AIC translation do not commute")
    })?;
    ensure(c.p.shift(w).shift(w) == c.p, || {
        c.fail("double shift of the revision program")
    })
}

pub const SHIFT_AIC_PROPERTIES: [(&str, Check<AicCase>); 3] = [
    ("AIC classes transported", aic_classes_transport),
    ("shift to the empty database", aic_shift_to_empty_database),
    ("item-level shifting facts", shift_item_lemmas),
];

pub const SHIFT_REV_PROPERTIES: [(&str, Check<RevCase>); 2] = [
    ("revision classes transported", rev_classes_transport),
    (
        "shift commutes with translations",
        shift_commutes_with_translations,
    ),
];

// ---------------------------------------------------------------------------
// Logic programs

pub fn answer_sets_are_justified_weak_repairs(c: &LpCase) -> Result<(), String> {
    let eta = aic_of_program(&c.p).map_err(|e| c.fail(e.to_string()))?;
    let models: Vec<UpdateSet> = answer_sets(&c.p, &limits())
        .map_err(|e| e.to_string())?
        .iter()
        .map(ua_of_model)
        .collect();
    let jwr = enumerate(
        &Database::new(),
        &eta,
        RepairClass::JustifiedWeakRepair,
        &limits(),
    )
    .map_err(|e| e.to_string())?
    .repairs;
    let u = c.p.universe();
    ensure(models == jwr, || {
        c.fail(format!(
            "answer sets {} but justified weak repairs {}",
            show_updates(u, &models),
            show_updates(u, &jwr)
        ))
    })?;
    if c.p.is_normal() {
        let jr = enumerate(
            &Database::new(),
            &eta,
            RepairClass::JustifiedRepair,
            &limits(),
        )
        .map_err(|e| e.to_string())?
        .repairs;
        ensure(jr == jwr, || c.fail("normal program: JWR and JR differ"))?;
    }
    Ok(())
}

/// `M' ⊨ P^M` iff `{+a | a ∈ M'} ∪ {-a | a ∉ M}` is closed under `aic(P)`.
pub fn reduct_models_are_closed_sets(c: &LpCase) -> Result<(), String> {
    let eta = aic_of_program(&c.p).map_err(|e| c.fail(e.to_string()))?;
    let u = c.p.universe();
    let n = u.len();
    for m in 0..1u32 << n {
        let big = mask_db(m);
        let red = reduct(&c.p, &big);
        for sub in crate::bits::submasks(m) {
            let small = mask_db(sub);
            let set = Pair::new(sub, crate::bits::full(n) & !m).to_update_set();
            ensure(red.satisfied_by(&small) == is_closed(&set, &eta), || {
                c.fail(format!(
                    "M = {}, M' = {}: reduct model and closedness differ",
                    big.render(u),
                    small.render(u)
                ))
            })?;
        }
    }
    Ok(())
}

pub const LP_PROPERTIES: [(&str, Check<LpCase>); 2] = [
    (
        "answer sets = justified weak repairs",
        answer_sets_are_justified_weak_repairs,
    ),
    ("reduct models = closed sets", reduct_models_are_closed_sets),
];

/// The least closure is the least closed superset, found by brute force.
pub fn least_closure_is_minimum(c: &ClosureCase) -> Result<(), String> {
    let u = c.eta.universe();
    let oracle = oaic::Aic::from_program(&c.eta);
    for seed in &c.seeds {
        let got = least_closure(seed, &c.eta).map_err(|e| e.to_string())?;
        let want = oracle
            .least_closure(Pair::from_update_set(seed))
            .map(Pair::to_update_set);
        ensure(got == want, || {
            format!(
                "seed {}: closure {:?} but brute force {:?}\n{}",
                seed.render(u),
                got.map(|s| s.render(u)),
                want.map(|s| s.render(u)),
                print_instance(u, &Database::new(), &Program::Aic(c.eta.clone()))
            )
        })?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Library against oracle

pub fn aic_matches_oracle(c: &AicCase) -> Result<(), String> {
    let u = c.universe();
    let oracle = oaic::Aic::from_program(&c.eta);
    let db = db_mask(&c.db);
    for class in RepairClass::ALL {
        let got = c.class(&c.eta, class);
        let want = oaic::repairs(&c.db, &c.eta, class);
        ensure(got == want, || {
            c.fail(format!(
                "{}: library {} oracle {}",
                class.tag(),
                show_updates(u, &got),
                show_updates(u, &want)
            ))
        })?;
    }
    for pair in consistent_pairs(u.len()) {
        let set = pair.to_update_set();
        for class in RepairClass::ALL {
            ensure(
                check(class, &c.db, &c.eta, &set) == oracle.member(class, db, pair),
                || {
                    c.fail(format!(
                        "{} membership of {} differs",
                        class.tag(),
                        set.render(u)
                    ))
                },
            )?;
        }
        ensure(is_closed(&set, &c.eta) == oracle.closed(pair), || {
            c.fail(format!("closedness of {} differs", set.render(u)))
        })?;
        ensure(
            check_justified_action_set(&c.db, &c.eta, &set)
                == oracle.justified_action_set(db, pair),
            || {
                c.fail(format!(
                    "justified action set status of {} differs",
                    set.render(u)
                ))
            },
        )?;
        for alpha in pair.elements() {
            let action = alpha
                .to_update_set()
                .iter()
                .next()
                .copied()
                .expect("one element");
            let got = is_founded_action(action, &c.db, &c.eta, &set).map_err(|e| e.to_string())?;
            ensure(got == oracle.founded_action(db, pair, alpha), || {
                c.fail(format!(
                    "foundedness of {} in {} differs",
                    action.render(u),
                    set.render(u)
                ))
            })?;
        }
    }
    let direct = oracle.justified_weak_repairs_from_action_sets(db);
    let jwr: BTreeSet<Pair> = oracle.class(RepairClass::JustifiedWeakRepair, db);
    ensure(direct == jwr, || {
        c.fail("oracle: action-set route and union route differ")
    })?;
    let restricted = oracle.justified_weak_repairs_with(db, oracle.mentioned());
    ensure(restricted == jwr, || {
        c.fail("no-effect actions restricted to mentioned atoms change JWR")
    })?;
    let normal = normalize_aic(&c.eta);
    let onormal = oaic::Aic::from_program(&normal);
    for pair in consistent_pairs(u.len()) {
        let set = pair.to_update_set();
        let got = decide_jwr_normal(&c.db, &normal, &set).map_err(|e| e.to_string())?;
        ensure(got == onormal.justified_weak_repair(db, pair), || {
            c.fail(format!(
                "least-closure decision of {} differs from oracle",
                set.render(u)
            ))
        })?;
    }
    Ok(())
}

pub fn rev_matches_oracle(c: &RevCase) -> Result<(), String> {
    let u = c.universe();
    let oracle = orev::Rev::from_program(&c.p);
    let db = db_mask(&c.db);
    let mut classes = REV_NON_SUPPORTED.to_vec();
    if c.p.is_normal() {
        classes.push(RevisionClass::SupportedRevision);
    }
    for &class in &classes {
        let got = c.class(&c.p, class);
        let want = orev::revisions(&c.p, &c.db, class);
        ensure(got == want, || {
            c.fail(format!(
                "{}: library {} oracle {}",
                class.tag(),
                show_revisions(u, &got),
                show_revisions(u, &want)
            ))
        })?;
        let members: BTreeSet<Pair> = oracle.class(class, db);
        for pair in consistent_pairs(u.len()) {
            let set = pair.to_revision_set();
            let got = check_rev(class, &c.p, &c.db, &set).map_err(|e| e.to_string())?;
            ensure(got == members.contains(&pair), || {
                c.fail(format!(
                    "{} membership of {} differs",
                    class.tag(),
                    set.render(u)
                ))
            })?;
        }
    }
    for pair in consistent_pairs(u.len()) {
        let set = pair.to_revision_set();
        ensure(
            is_closed_rev(&set, &c.p) == oracle.closed(pair, Pair::default()),
            || c.fail(format!("closedness of {} differs", set.render(u))),
        )?;
        ensure(
            check_justified_update(&c.p, &c.db, &set) == oracle.justified_update(db, pair),
            || {
                c.fail(format!(
                    "justified update status of {} differs",
                    set.render(u)
                ))
            },
        )?;
        for alpha in pair.elements() {
            let lit: RevisionLiteral = *alpha.to_revision_set().iter().next().expect("one element");
            let got = is_founded_rev_literal(lit, &c.p, &c.db, &set).map_err(|e| e.to_string())?;
            ensure(got == oracle.founded_literal(db, pair, alpha), || {
                c.fail(format!(
                    "foundedness of {} in {} differs",
                    lit.render(u),
                    set.render(u)
                ))
            })?;
        }
        if c.p.is_normal() {
            let got = check_supported_update(&c.p, &c.db, &set).map_err(|e| e.to_string())?;
            ensure(got == oracle.supported_update(db, pair), || {
                c.fail(format!(
                    "supported update status of {} differs",
                    set.render(u)
                ))
            })?;
        }
    }
    if c.p.is_normal() {
        for m in 0..1u32 << u.len() {
            let r = mask_db(m);
            let heads: RevisionSet = triggered_subprogram(&c.p, &r)
                .map_err(|e| e.to_string())?
                .rules()
                .iter()
                .flat_map(|rule| rule.head().iter().copied())
                .collect();
            ensure(
                Pair::from_revision_set(&heads) == oracle.triggered_heads(m),
                || c.fail(format!("triggered rules for {} differ", r.render(u))),
            )?;
        }
    }
    Ok(())
}

pub fn lp_matches_oracle(c: &LpCase) -> Result<(), String> {
    let u = c.p.universe();
    let got = answer_sets(&c.p, &limits()).map_err(|e| e.to_string())?;
    let want = olp::answer_sets(&c.p);
    ensure(got == want, || c.fail("answer sets differ from oracle"))?;
    let oracle = olp::Lp::from_program(&c.p);
    for m in 0..1u32 << u.len() {
        let db = mask_db(m);
        ensure(is_answer_set(&c.p, &db) == oracle.answer_set(m), || {
            c.fail(format!("answer-set status of {} differs", db.render(u)))
        })?;
        let red = reduct(&c.p, &db);
        for s in 0..1u32 << u.len() {
            ensure(
                red.satisfied_by(&mask_db(s)) == oracle.models_reduct(s, m),
                || c.fail("reduct satisfaction differs from oracle"),
            )?;
        }
    }
    Ok(())
}
