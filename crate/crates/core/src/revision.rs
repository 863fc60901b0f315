//! Semantics of revision programs: (weak) revisions, supported updates and
//! revisions, justified updates and justified (weak) revisions, founded
//! (weak) revisions.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::aic::subset_of;
use crate::algebra::{apply_rev, inertia_set, Satisfiable};
use crate::engine::{proper_subsets, search, Limits, Report};
use crate::error::{Error, Result};
use crate::model::{
    Database, Dual, RepairClass, RevisionLiteral, RevisionProgram, RevisionSet, Signed,
};
use crate::transforms::normalize_rev;

/// Selector for the semantics of revision programs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RevisionClass {
    WeakRevision,
    Revision,
    FoundedWeakRevision,
    FoundedRevision,
    JustifiedWeakRevision,
    JustifiedRevision,
    JustifiedWeakRevisionNormalized,
    JustifiedRevisionNormalized,
    SupportedRevision,
}

impl RevisionClass {
    pub const ALL: [RevisionClass; 9] = [
        RevisionClass::WeakRevision,
        RevisionClass::Revision,
        RevisionClass::FoundedWeakRevision,
        RevisionClass::FoundedRevision,
        RevisionClass::JustifiedWeakRevision,
        RevisionClass::JustifiedRevision,
        RevisionClass::JustifiedWeakRevisionNormalized,
        RevisionClass::JustifiedRevisionNormalized,
        RevisionClass::SupportedRevision,
    ];

    /// The six classes that mirror the base repair classes.
    pub const BASE: [RevisionClass; 6] = [
        RevisionClass::WeakRevision,
        RevisionClass::Revision,
        RevisionClass::FoundedWeakRevision,
        RevisionClass::FoundedRevision,
        RevisionClass::JustifiedWeakRevision,
        RevisionClass::JustifiedRevision,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RevisionClass::WeakRevision => "weak-revision",
            RevisionClass::Revision => "revision",
            RevisionClass::FoundedWeakRevision => "founded-weak-revision",
            RevisionClass::FoundedRevision => "founded-revision",
            RevisionClass::JustifiedWeakRevision => "justified-weak-revision",
            RevisionClass::JustifiedRevision => "justified-revision",
            RevisionClass::JustifiedWeakRevisionNormalized => "justified-weak-revision-normalized",
            RevisionClass::JustifiedRevisionNormalized => "justified-revision-normalized",
            RevisionClass::SupportedRevision => "supported-revision",
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            RevisionClass::WeakRevision => "WRev",
            RevisionClass::Revision => "Rev",
            RevisionClass::FoundedWeakRevision => "FWRev",
            RevisionClass::FoundedRevision => "FRev",
            RevisionClass::JustifiedWeakRevision => "JWRev",
            RevisionClass::JustifiedRevision => "JRev",
            RevisionClass::JustifiedWeakRevisionNormalized => "JWRev_N",
            RevisionClass::JustifiedRevisionNormalized => "JRev_N",
            RevisionClass::SupportedRevision => "SuppRev",
        }
    }

    /// The repair class on the other side of the `AIC(·)` translation.
    pub fn counterpart(self) -> Option<RepairClass> {
        match self {
            RevisionClass::WeakRevision => Some(RepairClass::WeakRepair),
            RevisionClass::Revision => Some(RepairClass::Repair),
            RevisionClass::FoundedWeakRevision => Some(RepairClass::FoundedWeakRepair),
            RevisionClass::FoundedRevision => Some(RepairClass::FoundedRepair),
            RevisionClass::JustifiedWeakRevision => Some(RepairClass::JustifiedWeakRepair),
            RevisionClass::JustifiedRevision => Some(RepairClass::JustifiedRepair),
            RevisionClass::JustifiedWeakRevisionNormalized => {
                Some(RepairClass::JustifiedWeakRepairNormalized)
            }
            RevisionClass::JustifiedRevisionNormalized => {
                Some(RepairClass::JustifiedRepairNormalized)
            }
            RevisionClass::SupportedRevision => None,
        }
    }

    pub fn is_minimal(self) -> bool {
        matches!(
            self,
            RevisionClass::Revision
                | RevisionClass::FoundedRevision
                | RevisionClass::JustifiedRevision
                | RevisionClass::JustifiedRevisionNormalized
        )
    }
}

impl fmt::Display for RevisionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RevisionClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        RevisionClass::ALL
            .into_iter()
            .find(|c| c.name() == s || c.tag() == s)
            .ok_or_else(|| format!("unknown revision class `{s}`"))
    }
}

pub type RevisionReport = Report<RevisionClass, RevisionSet>;

/// `P_R`: the rules of a normal program whose body holds in `r`.
pub fn triggered_subprogram(p: &RevisionProgram, r: &Database) -> Result<RevisionProgram> {
    if !p.is_normal() {
        return Err(Error::NotNormalProgram);
    }
    Ok(p.with_rules(
        p.rules()
            .iter()
            .filter(|rule| rule.body().satisfied_by(r))
            .cloned()
            .collect(),
    ))
}

fn heads(p: &RevisionProgram) -> RevisionSet {
    p.rules()
        .iter()
        .flat_map(|r| r.head().iter().copied())
        .collect()
}

/// `U` is consistent, `U = head(P_{I⊕U})`, and no constraint of `P` fires
/// in `I⊕U` (its head would be `false`, which no literal set contains).
pub fn check_supported_update(p: &RevisionProgram, db: &Database, u: &RevisionSet) -> Result<bool> {
    if !p.is_normal() {
        return Err(Error::NotNormalProgram);
    }
    if !u.is_consistent() {
        return Ok(false);
    }
    let triggered = triggered_subprogram(p, &apply_rev(db, u))?;
    Ok(!triggered.rules().iter().any(|r| r.is_constraint()) && *u == heads(&triggered))
}

/// `E = U \ I(I, I⊕U)` for a supported update `U`. The only possible `U`
/// is `E ∪ (I(I, I⊕E) ∩ head(P_{I⊕E}))`, so that one is tested.
pub fn check_supported_revision(
    p: &RevisionProgram,
    db: &Database,
    e: &RevisionSet,
) -> Result<bool> {
    if !p.is_normal() {
        return Err(Error::NotNormalProgram);
    }
    if !e.is_consistent() {
        return Ok(false);
    }
    let result = apply_rev(db, e);
    let inertia = inertia_set(p.universe(), db, &result);
    if !e.is_disjoint_from(&inertia) {
        return Ok(false);
    }
    let support = heads(&triggered_subprogram(p, &result)?);
    let u = e.union(&inertia.intersection(&support));
    check_supported_update(p, db, &u)
}

/// No literal of `e` is a no-op on `db`.
pub fn is_relevant(db: &Database, e: &RevisionSet) -> bool {
    e.iter().all(|l| db.contains(&l.atom) != l.is_in)
}

/// Consistent, relevant, and `I ⊕ E ⊨ P`.
pub fn check_weak_revision(p: &RevisionProgram, db: &Database, e: &RevisionSet) -> bool {
    e.is_consistent() && is_relevant(db, e) && p.satisfied_by(&apply_rev(db, e))
}

fn has_smaller_fix(p: &RevisionProgram, db: &Database, e: &RevisionSet) -> bool {
    let items: Vec<RevisionLiteral> = e.iter().copied().collect();
    proper_subsets(items).any(|sub| p.satisfied_by(&apply_rev(db, &sub.into_iter().collect())))
}

/// A weak revision none of whose proper subsets enforces `p`.
pub fn check_revision(p: &RevisionProgram, db: &Database, e: &RevisionSet) -> bool {
    check_weak_revision(p, db, e) && !has_smaller_fix(p, db, e)
}

/// For every rule, `body(r) ⊆ U` implies `head(r) ∩ U ≠ ∅`.
pub fn is_closed_rev(u: &RevisionSet, p: &RevisionProgram) -> bool {
    p.rules()
        .iter()
        .all(|r| !r.body().is_subset(u) || r.head().iter().any(|l| u.contains(l)))
}

/// `U` is consistent and a minimal set closed under `P ∪ I(I, I⊕U)`, with
/// the inertia literals read as facts.
pub fn check_justified_update(p: &RevisionProgram, db: &Database, u: &RevisionSet) -> bool {
    if !u.is_consistent() {
        return false;
    }
    let inertia = inertia_set(p.universe(), db, &apply_rev(db, u));
    if !inertia.is_subset(u) || !is_closed_rev(u, p) {
        return false;
    }
    let free: Vec<RevisionLiteral> = u.difference(&inertia).into_iter().collect();
    !proper_subsets(free).any(|sub| {
        let mut smaller = inertia.clone();
        smaller.extend(sub);
        is_closed_rev(&smaller, p)
    })
}

/// `E = U \ I(I, I⊕U)` for a justified update `U`, tested through
/// `U = E ∪ I(I, I⊕E)`.
pub fn check_justified_weak_revision(p: &RevisionProgram, db: &Database, e: &RevisionSet) -> bool {
    if !e.is_consistent() {
        return false;
    }
    let inertia = inertia_set(p.universe(), db, &apply_rev(db, e));
    e.is_disjoint_from(&inertia) && check_justified_update(p, db, &e.union(&inertia))
}

pub fn check_justified_revision(p: &RevisionProgram, db: &Database, e: &RevisionSet) -> bool {
    check_justified_weak_revision(p, db, e) && !has_smaller_fix(p, db, e)
}

fn founded_in(result: &Database, p: &RevisionProgram, alpha: RevisionLiteral) -> bool {
    p.rules().iter().any(|r| {
        r.head().contains(&alpha)
            && r.body().satisfied_by(result)
            && r.head()
                .iter()
                .filter(|b| **b != alpha)
                .all(|b| b.dual().satisfied_by(result))
    })
}

/// Whether `alpha` is `P`-founded with respect to `db` and `e`.
pub fn is_founded_rev_literal(
    alpha: RevisionLiteral,
    p: &RevisionProgram,
    db: &Database,
    e: &RevisionSet,
) -> Result<bool> {
    e.ensure_consistent(p.universe())?;
    Ok(founded_in(&apply_rev(db, e), p, alpha))
}

/// `e` is consistent and each of its literals is `P`-founded.
pub fn is_founded_rev(p: &RevisionProgram, db: &Database, e: &RevisionSet) -> bool {
    if !e.is_consistent() {
        return false;
    }
    let result = apply_rev(db, e);
    e.iter().all(|l| founded_in(&result, p, *l))
}

pub fn check_founded_weak_revision(p: &RevisionProgram, db: &Database, e: &RevisionSet) -> bool {
    check_weak_revision(p, db, e) && is_founded_rev(p, db, e)
}

pub fn check_founded_revision(p: &RevisionProgram, db: &Database, e: &RevisionSet) -> bool {
    check_revision(p, db, e) && is_founded_rev(p, db, e)
}

/// Dispatches to the checker for `class`. Supported revisions need a
/// normal program.
pub fn check_rev(
    class: RevisionClass,
    p: &RevisionProgram,
    db: &Database,
    e: &RevisionSet,
) -> Result<bool> {
    match class {
        RevisionClass::JustifiedWeakRevisionNormalized => {
            Ok(check_justified_weak_revision(&normalize_rev(p), db, e))
        }
        RevisionClass::JustifiedRevisionNormalized => {
            Ok(check_justified_revision(&normalize_rev(p), db, e))
        }
        other => check_prepared(other, p, db, e),
    }
}

fn check_prepared(
    class: RevisionClass,
    p: &RevisionProgram,
    db: &Database,
    e: &RevisionSet,
) -> Result<bool> {
    Ok(match class {
        RevisionClass::WeakRevision => check_weak_revision(p, db, e),
        RevisionClass::Revision => check_revision(p, db, e),
        RevisionClass::FoundedWeakRevision => check_founded_weak_revision(p, db, e),
        RevisionClass::FoundedRevision => check_founded_revision(p, db, e),
        RevisionClass::JustifiedWeakRevision | RevisionClass::JustifiedWeakRevisionNormalized => {
            check_justified_weak_revision(p, db, e)
        }
        RevisionClass::JustifiedRevision | RevisionClass::JustifiedRevisionNormalized => {
            check_justified_revision(p, db, e)
        }
        RevisionClass::SupportedRevision => return check_supported_revision(p, db, e),
    })
}

/// The relevant literal for each atom: `out(a)` if `a ∈ I`, else `in(a)`.
pub fn relevant_literals(p: &RevisionProgram, db: &Database) -> Vec<RevisionLiteral> {
    p.universe()
        .atoms()
        .map(|a| RevisionLiteral::with(a, !db.contains(&a)))
        .collect()
}

/// All members of `class` for `db` and `p`, in canonical order.
pub fn enumerate_rev(
    p: &RevisionProgram,
    db: &Database,
    class: RevisionClass,
    limits: &Limits,
) -> Result<RevisionReport> {
    limits.check_universe(p.universe().len())?;
    if class == RevisionClass::SupportedRevision && !p.is_normal() {
        return Err(Error::NotNormalProgram);
    }
    let start = Instant::now();
    let program = match class {
        RevisionClass::JustifiedWeakRevisionNormalized
        | RevisionClass::JustifiedRevisionNormalized => normalize_rev(p),
        _ => p.clone(),
    };
    let literals = relevant_literals(p, db);
    let outcome = search(
        literals.len(),
        limits,
        |mask| RevisionSet::from(subset_of(&literals, mask)),
        |e| check_prepared(class, &program, db, e).unwrap_or(false),
    );
    Ok(Report {
        class,
        repairs: outcome.found,
        candidates: outcome.candidates,
        elapsed: start.elapsed(),
        complete: outcome.complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_instance, parse_revision_set, Program};

    fn rev(text: &str) -> (Database, RevisionProgram) {
        let inst = parse_instance(text).unwrap();
        match inst.program {
            Program::Rev(p) => (inst.db, p),
            _ => panic!("not a revision instance"),
        }
    }

    fn set(p: &RevisionProgram, text: &str) -> RevisionSet {
        parse_revision_set(p.universe(), text).unwrap()
    }

    fn all(p: &RevisionProgram, db: &Database, class: RevisionClass) -> Vec<RevisionSet> {
        enumerate_rev(p, db, class, &Limits::default())
            .unwrap()
            .repairs
    }

    const EX132: &str = "db: .\nrev: in(a) | out(b) <- . out(a) | in(b) <- .";
    const EXN: &str = "db: .\nrev: in(a) | out(b) <- . out(a) | in(b) <- . in(c) <- out(d).";
    const EXF: &str = "db: .\nrev: in(a) <- in(a). in(a) <- out(a).";
    const SUPPORTED: &str = "db: .\nrev: in(a) <- in(b). in(b) <- in(a). in(c) <- out(d).";

    #[test]
    fn justified_weak_but_not_minimal() {
        let (db, p) = rev(EX132);
        let ab = set(&p, "in(a),in(b)");
        assert!(is_closed_rev(&ab, &p));
        assert!(check_justified_weak_revision(&p, &db, &ab));
        assert!(!check_justified_revision(&p, &db, &ab));
        assert_eq!(
            all(&p, &db, RevisionClass::Revision),
            vec![RevisionSet::new()]
        );
    }

    #[test]
    fn weak_revisions_and_revisions() {
        let (db, p) = rev(EXN);
        let u1 = set(&p, "in(d)");
        let u2 = set(&p, "in(d),in(a),in(b)");
        let u3 = set(&p, "in(c)");
        let u4 = set(&p, "in(c),in(a),in(b)");
        for u in [&u1, &u2, &u3, &u4] {
            assert!(check_weak_revision(&p, &db, u));
        }
        assert!(check_revision(&p, &db, &u1));
        assert!(check_revision(&p, &db, &u3));
        assert!(!check_revision(&p, &db, &u2));
        assert!(!check_revision(&p, &db, &u4));
        assert!(check_justified_weak_revision(&p, &db, &u3));
        assert!(check_justified_weak_revision(&p, &db, &u4));
        assert!(!check_justified_weak_revision(&p, &db, &u1));
        assert!(!check_justified_weak_revision(&p, &db, &u2));
        assert!(check_justified_revision(&p, &db, &u3));
        assert!(!check_justified_revision(&p, &db, &u4));
        assert_eq!(all(&p, &db, RevisionClass::JustifiedRevision), vec![u3]);
    }

    #[test]
    fn reasoning_by_cases() {
        let (db, p) = rev(EXF);
        let u = set(&p, "in(a)");
        assert!(check_revision(&p, &db, &u));
        assert!(!check_justified_weak_revision(&p, &db, &u));
        assert!(!check_justified_revision(&p, &db, &u));
        assert!(check_founded_revision(&p, &db, &u));
    }

    #[test]
    fn founded_revisions() {
        let (db, p) = rev(SUPPORTED);
        let cab = set(&p, "in(c),in(a),in(b)");
        assert!(check_founded_weak_revision(&p, &db, &cab));
        assert!(!check_founded_revision(&p, &db, &cab));
        let d = set(&p, "in(d)");
        assert!(check_revision(&p, &db, &d));
        assert!(!check_founded_weak_revision(&p, &db, &d));
    }

    #[test]
    fn supported_updates() {
        let (db, p) = rev(SUPPORTED);
        let abc = set(&p, "in(a),in(b),in(c)");
        assert!(check_supported_update(&p, &db, &abc).unwrap());
        assert!(check_supported_revision(&p, &db, &abc).unwrap());
        assert!(check_supported_revision(&p, &db, &set(&p, "in(c)")).unwrap());
        assert!(!check_supported_update(&p, &db, &set(&p, "in(a)")).unwrap());
        let (_, disjunctive) = rev(EX132);
        assert_eq!(
            check_supported_update(&disjunctive, &db, &RevisionSet::new()),
            Err(Error::NotNormalProgram)
        );
    }

    #[test]
    fn triggered_rules() {
        let (_, p) = rev("db: .\nrev: in(a) <- in(b).");
        assert!(triggered_subprogram(&p, &Database::new())
            .unwrap()
            .is_empty());
        let (_, p) = rev("db: .\nrev: in(c) <- out(d). in(e) <- .");
        assert_eq!(triggered_subprogram(&p, &Database::new()).unwrap(), p);
    }

    #[test]
    fn closure_cases() {
        let (_, p) = rev("db: .\nrev: in(a) | in(b) <- .");
        assert!(!is_closed_rev(&RevisionSet::new(), &p));
        assert!(is_closed_rev(&set(&p, "in(b)"), &p));
    }

    #[test]
    fn satisfied_database_keeps_empty_weak_revision() {
        let (db, p) = rev("db: a.\nrev: in(a) <- .");
        assert!(all(&p, &db, RevisionClass::WeakRevision).contains(&RevisionSet::new()));
    }

    #[test]
    fn class_names_round_trip() {
        for class in RevisionClass::ALL {
            assert_eq!(class.name().parse::<RevisionClass>(), Ok(class));
            assert_eq!(class.tag().parse::<RevisionClass>(), Ok(class));
        }
    }
}
