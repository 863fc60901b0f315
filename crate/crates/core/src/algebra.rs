//! The update operators `∘` and `⊕`, no-effect and inertia sets, and
//! satisfaction of literals, rules and programs by a database.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::model::{
    AicProgram, AicRule, Database, Literal, RevisionLiteral, RevisionProgram, RevisionRule,
    RevisionSet, Universe, UpdateAction, UpdateSet,
};

/// `I ∘ U`. Fails on inconsistent `U`.
pub fn apply_update(universe: &Universe, db: &Database, update: &UpdateSet) -> Result<Database> {
    update.ensure_consistent(universe)?;
    Ok(apply_actions(db, update.iter().copied()))
}

/// `I ⊕ U`. Fails on inconsistent `U`.
pub fn apply_revision(
    universe: &Universe,
    db: &Database,
    update: &RevisionSet,
) -> Result<Database> {
    update.ensure_consistent(universe)?;
    Ok(apply_actions(db, update.iter().map(|l| l.ua())))
}

/// Applies actions without a consistency check; for callers that already
/// know the set is consistent.
pub(crate) fn apply_actions(
    db: &Database,
    actions: impl Iterator<Item = UpdateAction>,
) -> Database {
    let mut out = db.clone();
    for action in actions {
        if action.insert {
            out.insert(action.atom);
        } else {
            out.remove(&action.atom);
        }
    }
    out
}

pub(crate) fn apply(db: &Database, update: &UpdateSet) -> Database {
    apply_actions(db, update.iter().copied())
}

pub(crate) fn apply_rev(db: &Database, update: &RevisionSet) -> Database {
    apply_actions(db, update.iter().map(|l| l.ua()))
}

/// `ne(I, R) = {+a | a ∈ I ∩ R} ∪ {-a | a ∉ I ∪ R}`, over every atom of the universe.
pub fn no_effect_set(universe: &Universe, db: &Database, result: &Database) -> UpdateSet {
    universe
        .atoms()
        .filter_map(|a| match (db.contains(&a), result.contains(&a)) {
            (true, true) => Some(UpdateAction::insert(a)),
            (false, false) => Some(UpdateAction::delete(a)),
            _ => None,
        })
        .collect()
}

/// `I(I, R)`, the revision-literal counterpart of [`no_effect_set`].
pub fn inertia_set(universe: &Universe, db: &Database, result: &Database) -> RevisionSet {
    no_effect_set(universe, db, result).revision_literals()
}

/// Anything that a database can satisfy.
pub trait Satisfiable {
    fn satisfied_by(&self, db: &Database) -> bool;
}

/// `I ⊨ x`.
pub fn entails<T: Satisfiable + ?Sized>(db: &Database, x: &T) -> bool {
    x.satisfied_by(db)
}

impl Satisfiable for Literal {
    fn satisfied_by(&self, db: &Database) -> bool {
        db.contains(&self.atom) == self.positive
    }
}

impl Satisfiable for RevisionLiteral {
    fn satisfied_by(&self, db: &Database) -> bool {
        db.contains(&self.atom) == self.is_in
    }
}

impl Satisfiable for UpdateAction {
    /// `I ⊨ α` means `I ⊨ lit(α)`.
    fn satisfied_by(&self, db: &Database) -> bool {
        self.lit().satisfied_by(db)
    }
}

impl<T: Satisfiable> Satisfiable for [T] {
    fn satisfied_by(&self, db: &Database) -> bool {
        self.iter().all(|x| x.satisfied_by(db))
    }
}

impl<T: Satisfiable> Satisfiable for BTreeSet<T> {
    fn satisfied_by(&self, db: &Database) -> bool {
        self.iter().all(|x| x.satisfied_by(db))
    }
}

impl Satisfiable for AicRule {
    /// Satisfied iff the body is not entirely true.
    fn satisfied_by(&self, db: &Database) -> bool {
        !self.body().satisfied_by(db)
    }
}

impl Satisfiable for AicProgram {
    fn satisfied_by(&self, db: &Database) -> bool {
        self.rules().iter().all(|r| r.satisfied_by(db))
    }
}

impl Satisfiable for RevisionRule {
    fn satisfied_by(&self, db: &Database) -> bool {
        !self.body().satisfied_by(db) || self.head().iter().any(|l| l.satisfied_by(db))
    }
}

impl Satisfiable for RevisionProgram {
    fn satisfied_by(&self, db: &Database) -> bool {
        self.rules().iter().all(|r| r.satisfied_by(db))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn setup() -> Universe {
        Universe::new(["a", "b", "c"]).unwrap()
    }

    fn db(u: &Universe, names: &[&str]) -> Database {
        Database::from_names(u, names).unwrap()
    }

    #[test]
    fn apply_update_examples() {
        let u = setup();
        let (a, b) = (u.atom("a").unwrap(), u.atom("b").unwrap());
        let minus_b: UpdateSet = [UpdateAction::delete(b)].into_iter().collect();
        assert_eq!(
            apply_update(&u, &db(&u, &["a", "b"]), &minus_b).unwrap(),
            db(&u, &["a"])
        );
        assert_eq!(
            apply_update(&u, &Database::new(), &UpdateSet::new()).unwrap(),
            Database::new()
        );
        let mixed: UpdateSet = [UpdateAction::insert(b), UpdateAction::delete(a)]
            .into_iter()
            .collect();
        assert_eq!(
            apply_update(&u, &db(&u, &["a"]), &mixed).unwrap(),
            db(&u, &["b"])
        );
        let bad: UpdateSet = [UpdateAction::insert(a), UpdateAction::delete(a)]
            .into_iter()
            .collect();
        assert_eq!(
            apply_update(&u, &Database::new(), &bad),
            Err(Error::InconsistentUpdateSet("a".into()))
        );
    }

    #[test]
    fn apply_revision_examples() {
        let u = setup();
        let (a, c) = (u.atom("a").unwrap(), u.atom("c").unwrap());
        let in_c: RevisionSet = [RevisionLiteral::in_(c)].into_iter().collect();
        assert_eq!(
            apply_revision(&u, &Database::new(), &in_c).unwrap(),
            db(&u, &["c"])
        );
        let out_a: RevisionSet = [RevisionLiteral::out(a)].into_iter().collect();
        assert_eq!(
            apply_revision(&u, &db(&u, &["a"]), &out_a).unwrap(),
            Database::new()
        );
        let both: RevisionSet = [RevisionLiteral::in_(c), RevisionLiteral::out(a)]
            .into_iter()
            .collect();
        assert_eq!(
            apply_revision(&u, &db(&u, &["a", "b"]), &both).unwrap(),
            db(&u, &["b", "c"])
        );
    }

    #[test]
    fn no_effect_examples() {
        let u = Universe::new(["a", "b"]).unwrap();
        let b = u.atom("b").unwrap();
        assert_eq!(
            no_effect_set(&u, &db(&u, &["a", "b"]), &db(&u, &["b"])),
            [UpdateAction::insert(b)].into_iter().collect()
        );
        let u3 = setup();
        let all_minus: UpdateSet = u3.atoms().map(UpdateAction::delete).collect();
        assert_eq!(
            no_effect_set(&u3, &Database::new(), &Database::new()),
            all_minus
        );
    }

    #[test]
    fn inertia_examples() {
        let u = Universe::new(["a", "b"]).unwrap();
        let (a, b) = (u.atom("a").unwrap(), u.atom("b").unwrap());
        assert_eq!(
            inertia_set(&u, &db(&u, &["a"]), &db(&u, &["a"])),
            [RevisionLiteral::in_(a), RevisionLiteral::out(b)]
                .into_iter()
                .collect()
        );
        assert_eq!(
            inertia_set(&u, &db(&u, &["a", "b"]), &db(&u, &["b"])),
            [RevisionLiteral::in_(b)].into_iter().collect()
        );
    }

    #[test]
    fn entailment_examples() {
        let u = setup();
        let (a, b) = (u.atom("a").unwrap(), u.atom("b").unwrap());
        let r = AicRule::new(
            &u,
            [Literal::pos(a), Literal::pos(b)],
            [UpdateAction::delete(b)],
        )
        .unwrap();
        assert!(!entails(&db(&u, &["a", "b"]), &r));

        let rev = RevisionRule::new([RevisionLiteral::in_(a)], [RevisionLiteral::out(b)]).unwrap();
        assert!(!entails(&Database::new(), &rev));

        let never = AicRule::new(&u, [Literal::pos(a), Literal::neg(a)], []).unwrap();
        assert!(entails(&Database::new(), &never));
        assert!(entails(&db(&u, &["a"]), &never));
    }
}
