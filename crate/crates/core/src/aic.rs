//! Repair semantics for active integrity constraints.
//!
//! Every `check_*` function decides membership of one update set in one
//! class straight from the definitions. [`enumerate`] walks all candidate
//! sets and delegates to them.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::algebra::{apply, no_effect_set, Satisfiable};
use crate::engine::{proper_subsets, search, Limits, Report};
use crate::error::{Error, Result};
use crate::model::{
    AicProgram, Database, Dual, Literal, RepairClass, Signed, UpdateAction, UpdateSet,
};
use crate::transforms::normalize_aic;

pub type RepairReport = Report<RepairClass, UpdateSet>;

/// No action in `u` is a no-op on `db`.
pub fn is_essential(db: &Database, u: &UpdateSet) -> bool {
    u.iter().all(|a| db.contains(&a.atom) != a.insert)
}

/// Consistent, essential, and `I ∘ U ⊨ η`.
pub fn check_weak_repair(db: &Database, eta: &AicProgram, u: &UpdateSet) -> bool {
    u.is_consistent() && is_essential(db, u) && eta.satisfied_by(&apply(db, u))
}

/// Some proper subset of `u` already enforces `eta`.
fn has_smaller_fix(db: &Database, eta: &AicProgram, u: &UpdateSet) -> bool {
    let items: Vec<UpdateAction> = u.iter().copied().collect();
    proper_subsets(items).any(|sub| eta.satisfied_by(&apply(db, &sub.into_iter().collect())))
}

/// A weak repair none of whose proper subsets enforces `eta`.
pub fn check_repair(db: &Database, eta: &AicProgram, u: &UpdateSet) -> bool {
    check_weak_repair(db, eta, u) && !has_smaller_fix(db, eta, u)
}

fn founded_in(result: &Database, eta: &AicProgram, alpha: UpdateAction) -> bool {
    eta.rules().iter().any(|r| {
        r.head().contains(&alpha)
            && r.nup().satisfied_by(result)
            && r.head()
                .iter()
                .filter(|b| **b != alpha)
                .all(|b| b.lit().dual().satisfied_by(result))
    })
}

/// Whether `alpha` is founded with respect to `⟨I, η⟩` and `u`.
pub fn is_founded_action(
    alpha: UpdateAction,
    db: &Database,
    eta: &AicProgram,
    u: &UpdateSet,
) -> Result<bool> {
    u.ensure_consistent(eta.universe())?;
    Ok(founded_in(&apply(db, u), eta, alpha))
}

/// `u` is consistent and each of its actions is founded.
pub fn is_founded(db: &Database, eta: &AicProgram, u: &UpdateSet) -> bool {
    if !u.is_consistent() {
        return false;
    }
    let result = apply(db, u);
    u.iter().all(|a| founded_in(&result, eta, *a))
}

pub fn check_founded_weak_repair(db: &Database, eta: &AicProgram, u: &UpdateSet) -> bool {
    check_weak_repair(db, eta, u) && is_founded(db, eta, u)
}

pub fn check_founded_repair(db: &Database, eta: &AicProgram, u: &UpdateSet) -> bool {
    check_repair(db, eta, u) && is_founded(db, eta, u)
}

/// For every rule, `nup(r) ⊆ lit(U)` implies `head(r) ∩ U ≠ ∅`.
pub fn is_closed(u: &UpdateSet, eta: &AicProgram) -> bool {
    let lits = u.lits();
    closed_under(&lits, u, eta)
}

fn closed_under(lits: &BTreeSet<Literal>, u: &UpdateSet, eta: &AicProgram) -> bool {
    eta.rules()
        .iter()
        .all(|r| !r.nup().is_subset(lits) || r.head().iter().any(|a| u.contains(a)))
}

/// `u` is consistent, contains `ne(I, I∘U)`, is closed under `eta`, and no
/// closed set lies strictly between `ne(I, I∘U)` and `u`.
pub fn check_justified_action_set(db: &Database, eta: &AicProgram, u: &UpdateSet) -> bool {
    if !u.is_consistent() {
        return false;
    }
    let ne = no_effect_set(eta.universe(), db, &apply(db, u));
    if !ne.is_subset(u) || !is_closed(u, eta) {
        return false;
    }
    let free: Vec<UpdateAction> = u.difference(&ne).into_iter().collect();
    !proper_subsets(free).any(|sub| {
        let mut smaller = ne.clone();
        smaller.extend(sub);
        is_closed(&smaller, eta)
    })
}

/// `e` is consistent, disjoint from `ne(I, I∘E)`, and `e ∪ ne(I, I∘E)` is
/// a justified action set.
pub fn check_justified_weak_repair(db: &Database, eta: &AicProgram, e: &UpdateSet) -> bool {
    if !e.is_consistent() {
        return false;
    }
    let ne = no_effect_set(eta.universe(), db, &apply(db, e));
    e.is_disjoint_from(&ne) && check_justified_action_set(db, eta, &e.union(&ne))
}

/// A justified weak repair none of whose proper subsets enforces `eta`.
pub fn check_justified_repair(db: &Database, eta: &AicProgram, e: &UpdateSet) -> bool {
    check_justified_weak_repair(db, eta, e) && !has_smaller_fix(db, eta, e)
}

/// The least superset of `seed` closed under a normal `eta`, by bottom-up
/// firing. `None` when no closed superset exists, which happens when an
/// integrity constraint (empty head) fires.
pub fn least_closure(seed: &UpdateSet, eta: &AicProgram) -> Result<Option<UpdateSet>> {
    if !eta.is_normal() {
        return Err(Error::NotNormalProgram);
    }
    let rules: Vec<_> = eta.rules().iter().map(|r| (r.nup(), r.head())).collect();
    let mut closure = seed.clone();
    let mut lits = closure.lits();
    loop {
        let mut changed = false;
        for (nup, head) in &rules {
            if !nup.is_subset(&lits) {
                continue;
            }
            match head.iter().next() {
                None => return Ok(None),
                Some(&action) => {
                    if closure.insert(action) {
                        lits.insert(action.lit());
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return Ok(Some(closure));
        }
    }
}

/// Polynomial justified-weak-repair test for normal programs: `e` is
/// disjoint from `ne(I, I∘E)` and the least closure of that set is exactly
/// `e ∪ ne(I, I∘E)`.
pub fn decide_jwr_normal(db: &Database, eta: &AicProgram, e: &UpdateSet) -> Result<bool> {
    if !eta.is_normal() {
        return Err(Error::NotNormalProgram);
    }
    if !e.is_consistent() {
        return Ok(false);
    }
    let ne = no_effect_set(eta.universe(), db, &apply(db, e));
    if !e.is_disjoint_from(&ne) {
        return Ok(false);
    }
    Ok(least_closure(&ne, eta)?.is_some_and(|w| w == e.union(&ne)))
}

/// Dispatches to the checker for `class`. The normalized classes apply the
/// justified checks to `η^n`.
pub fn check(class: RepairClass, db: &Database, eta: &AicProgram, u: &UpdateSet) -> bool {
    match class {
        RepairClass::JustifiedWeakRepairNormalized => {
            check_justified_weak_repair(db, &normalize_aic(eta), u)
        }
        RepairClass::JustifiedRepairNormalized => {
            check_justified_repair(db, &normalize_aic(eta), u)
        }
        other => check_prepared(other, db, eta, u),
    }
}

/// Like [`check`], but `eta` is already normalized for the `*Normalized` classes.
fn check_prepared(class: RepairClass, db: &Database, eta: &AicProgram, u: &UpdateSet) -> bool {
    match class {
        RepairClass::WeakRepair => check_weak_repair(db, eta, u),
        RepairClass::Repair => check_repair(db, eta, u),
        RepairClass::FoundedWeakRepair => check_founded_weak_repair(db, eta, u),
        RepairClass::FoundedRepair => check_founded_repair(db, eta, u),
        RepairClass::JustifiedWeakRepair | RepairClass::JustifiedWeakRepairNormalized => {
            check_justified_weak_repair(db, eta, u)
        }
        RepairClass::JustifiedRepair | RepairClass::JustifiedRepairNormalized => {
            check_justified_repair(db, eta, u)
        }
    }
}

/// The essential action for each atom: `-a` if `a ∈ I`, else `+a`.
pub fn essential_actions(db: &Database, eta: &AicProgram) -> Vec<UpdateAction> {
    eta.universe()
        .atoms()
        .map(|a| UpdateAction::with(a, !db.contains(&a)))
        .collect()
}

pub(crate) fn subset_of<T: Copy + Ord>(items: &[T], mask: u64) -> BTreeSet<T> {
    items
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, x)| *x)
        .collect()
}

/// All members of `class` for `⟨I, η⟩`, in canonical order.
///
/// Only sets of essential actions can belong to any class, so the search
/// space is one candidate per subset of the universe.
pub fn enumerate(
    db: &Database,
    eta: &AicProgram,
    class: RepairClass,
    limits: &Limits,
) -> Result<RepairReport> {
    limits.check_universe(eta.universe().len())?;
    let start = Instant::now();
    let program = match class {
        RepairClass::JustifiedWeakRepairNormalized | RepairClass::JustifiedRepairNormalized => {
            normalize_aic(eta)
        }
        _ => eta.clone(),
    };
    let actions = essential_actions(db, eta);
    let outcome = search(
        actions.len(),
        limits,
        |mask| UpdateSet::from(subset_of(&actions, mask)),
        |u| check_prepared(class, db, &program, u),
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
    use crate::syntax::{parse_instance, parse_update_set, Program};

    fn aic(text: &str) -> (Database, AicProgram) {
        let inst = parse_instance(text).unwrap();
        match inst.program {
            Program::Aic(p) => (inst.db, p),
            _ => panic!("not an aic instance"),
        }
    }

    fn set(eta: &AicProgram, text: &str) -> UpdateSet {
        parse_update_set(eta.universe(), text).unwrap()
    }

    fn all(db: &Database, eta: &AicProgram, class: RepairClass) -> Vec<UpdateSet> {
        enumerate(db, eta, class, &Limits::default())
            .unwrap()
            .repairs
    }

    const EX1: &str = "db: .\naic: not a -> +a. not b, c -> +b. b, not c -> +c.";
    const FWR_FR: &str =
        "db: .\naic: not a, b, c -> +a. not b, a, c -> +b. not c, a, b -> +c. not a -> false.";
    const ETA1: &str = "db: a, b.\naic: a, b -> -a. a, not b -> -a. not a, b -> -b.";
    const ETA2: &str = "db: a, b.\naic: a, b -> -a | -b. a, not b -> -a. not a, b -> -b.";
    const ETA3: &str = "db: .\naic: not a, b -> +a | -b. a, not b -> -a | +b.";
    const ETA4: &str = "db: .\naic: not a, not b -> +a | +b. a, not b -> +b. not a, b -> +a.";

    #[test]
    fn first_example() {
        let (db, eta) = aic(EX1);
        assert!(check_weak_repair(&db, &eta, &set(&eta, "+a,+b,+c")));
        assert!(!check_weak_repair(&db, &eta, &set(&eta, "+b,+c")));
        assert!(!check_repair(&db, &eta, &set(&eta, "+a,+b,+c")));
        assert!(check_founded_weak_repair(&db, &eta, &set(&eta, "+a,+b,+c")));
        assert!(is_founded(&db, &eta, &set(&eta, "+b,+c")));
        assert_eq!(
            all(&db, &eta, RepairClass::FoundedRepair),
            vec![set(&eta, "+a")]
        );
        assert!(decide_jwr_normal(&db, &eta, &set(&eta, "+a")).unwrap());
    }

    #[test]
    fn repair_that_is_not_founded() {
        let (db, eta) = aic("db: a, b.\naic: a, b -> -b.");
        assert!(check_repair(&db, &eta, &set(&eta, "-a")));
        assert!(!check_founded_repair(&db, &eta, &set(&eta, "-a")));
    }

    #[test]
    fn founded_weak_repair_without_founded_repair() {
        let (db, eta) = aic(FWR_FR);
        assert!(check_repair(&db, &eta, &set(&eta, "+a")));
        assert!(check_founded_weak_repair(&db, &eta, &set(&eta, "+a,+b,+c")));
        assert!(!check_founded_repair(&db, &eta, &set(&eta, "+a,+b,+c")));
        assert!(all(&db, &eta, RepairClass::FoundedRepair).is_empty());
        assert!(!all(&db, &eta, RepairClass::FoundedWeakRepair).is_empty());
    }

    #[test]
    fn circular_support() {
        let (db, eta) = aic(ETA1);
        let u = set(&eta, "-a,-b");
        let minus_a = UpdateAction::delete(eta.universe().atom("a").unwrap());
        assert!(is_founded_action(minus_a, &db, &eta, &u).unwrap());
        let only_r1 =
            AicProgram::new(eta.universe().clone(), vec![eta.rules()[0].clone()]).unwrap();
        assert!(!is_founded_action(minus_a, &db, &only_r1, &u).unwrap());
        assert!(check_founded_repair(&db, &eta, &u));
        assert!(is_closed(&u, &eta));
        assert!(is_closed(&UpdateSet::new(), &eta));
        assert!(!check_justified_weak_repair(&db, &eta, &u));
        assert!(!decide_jwr_normal(&db, &eta, &u).unwrap());
        assert!(all(&db, &eta, RepairClass::JustifiedWeakRepair).is_empty());
    }

    #[test]
    fn founded_action_rejects_inconsistent_context() {
        let (db, eta) = aic(ETA1);
        let bad = set(&eta, "+a,-a");
        let minus_a = UpdateAction::delete(eta.universe().atom("a").unwrap());
        assert_eq!(
            is_founded_action(minus_a, &db, &eta, &bad),
            Err(Error::InconsistentUpdateSet("a".into()))
        );
    }

    #[test]
    fn unique_justified_weak_repair() {
        let (db, eta) = aic(ETA2);
        let u = set(&eta, "-a,-b");
        assert!(check_justified_action_set(&db, &eta, &u));
        assert_eq!(
            all(&db, &eta, RepairClass::JustifiedWeakRepair),
            vec![u.clone()]
        );
        assert!(check_justified_repair(&db, &eta, &u));
    }

    #[test]
    fn justified_weak_but_not_minimal() {
        let (db, eta) = aic(ETA3);
        let e = set(&eta, "+a,+b");
        assert!(check_justified_weak_repair(&db, &eta, &e));
        assert!(!check_justified_repair(&db, &eta, &e));
        assert_eq!(all(&db, &eta, RepairClass::Repair), vec![UpdateSet::new()]);
    }

    #[test]
    fn normalization_can_lose_justified_repairs() {
        let (db, eta) = aic(ETA4);
        let e = set(&eta, "+a,+b");
        assert!(check_justified_repair(&db, &eta, &e));
        assert!(!check(
            RepairClass::JustifiedWeakRepairNormalized,
            &db,
            &eta,
            &e
        ));
        assert!(!check_justified_weak_repair(&db, &normalize_aic(&eta), &e));
    }

    #[test]
    fn two_founded_repairs() {
        let (db, eta) = aic("db: a, b.\naic: a, b -> -a | -b.");
        assert_eq!(
            all(&db, &eta, RepairClass::FoundedRepair),
            vec![set(&eta, "-a"), set(&eta, "-b")]
        );
    }

    #[test]
    fn consistent_database_has_only_the_empty_repair() {
        let (db, eta) = aic("db: a.\naic: not a -> +a. a, b -> -b.");
        assert_eq!(all(&db, &eta, RepairClass::Repair), vec![UpdateSet::new()]);
        assert!(check_weak_repair(&db, &eta, &UpdateSet::new()));
    }

    #[test]
    fn empty_program() {
        let (db, eta) = aic("universe: a, b.\ndb: a.\naic:");
        assert_eq!(all(&db, &eta, RepairClass::WeakRepair).len(), 4);
        assert_eq!(all(&db, &eta, RepairClass::Repair), vec![UpdateSet::new()]);
        assert_eq!(
            all(&db, &eta, RepairClass::JustifiedWeakRepair),
            vec![UpdateSet::new()]
        );
    }

    #[test]
    fn closure_edge_cases() {
        let (_, eta) = aic("db: .\naic: -> false. not a -> +a.");
        // The body-free constraint has nup = ∅ and no head: nothing is closed.
        assert!(!is_closed(&UpdateSet::new(), &eta));
        let (_, fact) = aic("db: .\naic: not a -> +a.");
        assert!(!is_closed(&UpdateSet::new(), &fact));
        assert!(is_closed(&set(&fact, "+a"), &fact));
    }

    #[test]
    fn least_closure_examples() {
        let (_, eta) = aic("db: .\naic: not a -> +a.");
        assert_eq!(
            least_closure(&UpdateSet::new(), &eta).unwrap(),
            Some(set(&eta, "+a"))
        );
        let (_, eta) = aic("db: .\naic: not d, not c -> +c.");
        let closure = least_closure(&set(&eta, "-d"), &eta).unwrap().unwrap();
        assert!(closure.contains(&UpdateAction::insert(eta.universe().atom("c").unwrap())));
        let (_, eta) = aic("db: .\naic: not a -> false.");
        assert_eq!(least_closure(&set(&eta, "-a"), &eta).unwrap(), None);
        let (_, disjunctive) = aic(ETA4);
        assert_eq!(
            least_closure(&UpdateSet::new(), &disjunctive),
            Err(Error::NotNormalProgram)
        );
    }

    #[test]
    fn decide_on_satisfied_database() {
        let (db, eta) = aic("db: a.\naic: a, b -> -b.");
        assert!(decide_jwr_normal(&db, &eta, &UpdateSet::new()).unwrap());
        assert!(check_justified_weak_repair(&db, &eta, &UpdateSet::new()));
    }
}
