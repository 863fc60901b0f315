//! Normalization, properization, the translation between proper revision
//! programs and active integrity constraints, and shifting.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::aic::enumerate;
use crate::engine::Limits;
use crate::error::{Error, Result};
use crate::model::{
    AicProgram, AicRule, Database, Dual, Literal, RepairClass, RevisionLiteral, RevisionProgram,
    RevisionRule, RevisionSet, Universe, UpdateAction, UpdateSet,
};
use crate::revision::{enumerate_rev, RevisionClass};

/// `η^n`: each `φ ⊃ α1 | ... | αn` becomes `φ ⊃ α1, ..., φ ⊃ αn`.
pub fn normalize_aic(eta: &AicProgram) -> AicProgram {
    let mut rules = Vec::new();
    for rule in eta.rules() {
        if rule.is_normal() {
            rules.push(rule.clone());
            continue;
        }
        for action in rule.head() {
            rules.push(AicRule::from_parts(
                rule.body().clone(),
                BTreeSet::from([*action]),
            ));
        }
    }
    eta.with_rules(rules)
}

/// `P^n`: `α1 | ... | αk <- φ` becomes one rule `αi <- {αj^D : j ≠ i}, φ`
/// per head literal.
pub fn normalize_rev(p: &RevisionProgram) -> RevisionProgram {
    let mut rules = Vec::new();
    for rule in p.rules() {
        if rule.is_normal() {
            rules.push(rule.clone());
            continue;
        }
        for alpha in rule.head() {
            let mut body = rule.body().clone();
            body.extend(rule.head().iter().filter(|b| *b != alpha).map(|b| b.dual()));
            rules.push(RevisionRule::new([*alpha], body).expect("head is nonempty"));
        }
    }
    p.with_rules(rules)
}

/// `prop(P)`: drops every head literal whose dual occurs in the body.
pub fn properize(p: &RevisionProgram) -> RevisionProgram {
    let rules = p
        .rules()
        .iter()
        .map(|rule| {
            let head: Vec<RevisionLiteral> = rule
                .head()
                .iter()
                .filter(|l| !rule.body().contains(&l.dual()))
                .copied()
                .collect();
            // Something was dropped only if the body is nonempty.
            RevisionRule::new(head, rule.body().iter().copied()).expect("body is nonempty")
        })
        .collect();
    p.with_rules(rules)
}

/// `AIC(r) = lit(β1), ..., lit(βm), lit(α1)^D, ..., lit(αk)^D ⊃ ua(α1) | ... | ua(αk)`.
pub fn aic_of_revision_rule(rule: &RevisionRule) -> Result<AicRule> {
    if !rule.is_proper() {
        return Err(Error::NotProperProgram);
    }
    let mut body: BTreeSet<Literal> = rule.body().iter().map(|b| b.lit()).collect();
    body.extend(rule.head().iter().map(|a| a.lit().dual()));
    let head = rule.head().iter().map(|a| a.ua()).collect();
    Ok(AicRule::from_parts(body, head))
}

/// `AIC(P)` for a proper revision program.
pub fn to_aic(p: &RevisionProgram) -> Result<AicProgram> {
    let rules = p
        .rules()
        .iter()
        .map(aic_of_revision_rule)
        .collect::<Result<Vec<_>>>()?;
    AicProgram::new(Arc::clone(p.universe()), rules)
}

/// Inverse of [`aic_of_revision_rule`]: head actions become head literals,
/// non-updatable body literals become body literals.
pub fn revision_rule_of_aic(rule: &AicRule) -> Result<RevisionRule> {
    RevisionRule::new(
        rule.head().iter().map(|a| a.revision_literal()),
        rule.nup().iter().map(|l| l.ua().revision_literal()),
    )
}

/// The proper revision program `P` with `AIC(P) = η`. Fails only on the
/// rule with empty body and empty head, which has no revision counterpart.
pub fn to_rev(eta: &AicProgram) -> Result<RevisionProgram> {
    let rules = eta
        .rules()
        .iter()
        .map(revision_rule_of_aic)
        .collect::<Result<Vec<_>>>()?;
    RevisionProgram::new(Arc::clone(eta.universe()), rules)
}

/// The shifting operator `T_W`: dualize every item whose atom is in `W`.
/// Databases shift to `I ÷ W`.
pub trait Shift: Sized {
    fn shift(&self, w: &Database) -> Self;
}

macro_rules! shift_signed {
    ($($t:ty),*) => {$(
        impl Shift for $t {
            fn shift(&self, w: &Database) -> Self {
                if w.contains(&self.atom) { self.dual() } else { *self }
            }
        }
    )*};
}

shift_signed!(Literal, UpdateAction, RevisionLiteral);

impl<T: Shift + Ord> Shift for BTreeSet<T> {
    fn shift(&self, w: &Database) -> Self {
        self.iter().map(|x| x.shift(w)).collect()
    }
}

impl Shift for UpdateSet {
    fn shift(&self, w: &Database) -> Self {
        self.iter().map(|x| x.shift(w)).collect()
    }
}

impl Shift for RevisionSet {
    fn shift(&self, w: &Database) -> Self {
        self.iter().map(|x| x.shift(w)).collect()
    }
}

impl Shift for Database {
    fn shift(&self, w: &Database) -> Self {
        self.symmetric_difference(w)
    }
}

impl Shift for AicRule {
    fn shift(&self, w: &Database) -> Self {
        AicRule::from_parts(self.body().shift(w), self.head().shift(w))
    }
}

impl Shift for RevisionRule {
    fn shift(&self, w: &Database) -> Self {
        RevisionRule::new(self.head().shift(w), self.body().shift(w))
            .expect("shifting keeps the rule nonempty")
    }
}

impl Shift for AicProgram {
    fn shift(&self, w: &Database) -> Self {
        self.with_rules(self.rules().iter().map(|r| r.shift(w)).collect())
    }
}

impl Shift for RevisionProgram {
    fn shift(&self, w: &Database) -> Self {
        self.with_rules(self.rules().iter().map(|r| r.shift(w)).collect())
    }
}

/// An instance together with its image under `T_W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftWitness<P> {
    pub w: Database,
    pub original: (Database, P),
    pub shifted: (Database, P),
}

/// Result of comparing one class on both sides of a shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportCheck<C, S> {
    pub class: C,
    /// `T_W` applied to the class members of the original instance.
    pub transported: Vec<S>,
    /// Class members of the shifted instance.
    pub shifted: Vec<S>,
}

impl<C, S: PartialEq> TransportCheck<C, S> {
    pub fn holds(&self) -> bool {
        self.transported == self.shifted
    }
}

fn check_shift_set(universe: &Universe, w: &Database) -> Result<()> {
    match w.iter().find(|a| !universe.contains(**a)) {
        Some(a) => Err(Error::UnknownAtom(format!("#{}", a.index()))),
        None => Ok(()),
    }
}

/// `⟨I ÷ W, T_W(η)⟩`.
pub fn shift_instance<P: Shift + Clone + HasUniverse>(
    db: &Database,
    program: &P,
    w: &Database,
) -> Result<ShiftWitness<P>> {
    check_shift_set(program.universe_ref(), w)?;
    Ok(ShiftWitness {
        w: w.clone(),
        original: (db.clone(), program.clone()),
        shifted: (db.shift(w), program.shift(w)),
    })
}

/// Programs that know their universe.
pub trait HasUniverse {
    fn universe_ref(&self) -> &Universe;
}

impl HasUniverse for AicProgram {
    fn universe_ref(&self) -> &Universe {
        self.universe()
    }
}

impl HasUniverse for RevisionProgram {
    fn universe_ref(&self) -> &Universe {
        self.universe()
    }
}

fn sorted<S: Ord>(mut v: Vec<S>) -> Vec<S> {
    v.sort();
    v
}

/// Enumerates each class on both sides of an AIC shift.
pub fn verify_aic_shift(
    witness: &ShiftWitness<AicProgram>,
    classes: &[RepairClass],
    limits: &Limits,
) -> Result<Vec<TransportCheck<RepairClass, UpdateSet>>> {
    let (db, eta) = &witness.original;
    let (sdb, seta) = &witness.shifted;
    classes
        .iter()
        .map(|&class| {
            let before = enumerate(db, eta, class, limits)?.repairs;
            let after = enumerate(sdb, seta, class, limits)?.repairs;
            Ok(TransportCheck {
                class,
                transported: sorted(before.iter().map(|u| u.shift(&witness.w)).collect()),
                shifted: after,
            })
        })
        .collect()
}

/// Enumerates each class on both sides of a revision shift.
pub fn verify_rev_shift(
    witness: &ShiftWitness<RevisionProgram>,
    classes: &[RevisionClass],
    limits: &Limits,
) -> Result<Vec<TransportCheck<RevisionClass, RevisionSet>>> {
    let (db, p) = &witness.original;
    let (sdb, sp) = &witness.shifted;
    classes
        .iter()
        .map(|&class| {
            let before = enumerate_rev(p, db, class, limits)?.repairs;
            let after = enumerate_rev(sp, sdb, class, limits)?.repairs;
            Ok(TransportCheck {
                class,
                transported: sorted(before.iter().map(|u| u.shift(&witness.w)).collect()),
                shifted: after,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_instance, print_aic_program, print_rev_program, Program};

    fn aic_prog(text: &str) -> (Database, AicProgram) {
        let inst = parse_instance(text).unwrap();
        match inst.program {
            Program::Aic(p) => (inst.db, p),
            _ => panic!(),
        }
    }

    fn rev_prog(text: &str) -> (Database, RevisionProgram) {
        let inst = parse_instance(text).unwrap();
        match inst.program {
            Program::Rev(p) => (inst.db, p),
            _ => panic!(),
        }
    }

    #[test]
    fn normalize_disjunctive_aic() {
        let (_, eta) =
            aic_prog("db: .\naic: not a, not b -> +a | +b. a, not b -> +b. not a, b -> +a.");
        let (_, expected) = aic_prog(
            "db: .\naic: not a, not b -> +a. not a, not b -> +b. a, not b -> +b. not a, b -> +a.",
        );
        assert_eq!(normalize_aic(&eta), expected);
        assert_eq!(normalize_aic(&expected), expected);
        let (_, simple) = aic_prog("db: .\naic: a, b -> -a | -b.");
        assert_eq!(
            print_aic_program(&normalize_aic(&simple)),
            "a, b -> -a.\na, b -> -b.\n"
        );
    }

    #[test]
    fn normalize_disjunctive_revision() {
        let (_, p) = rev_prog("db: .\nrev: in(a) | in(b) <- in(c).");
        assert_eq!(
            print_rev_program(&normalize_rev(&p)),
            "in(a) <- out(b), in(c).\nin(b) <- out(a), in(c).\n"
        );
        let (_, normal) = rev_prog("db: .\nrev: in(a) <- out(b).");
        assert_eq!(normalize_rev(&normal), normal);
    }

    #[test]
    fn properize_example() {
        let (_, p) = rev_prog("db: .\nrev: in(b) | out(a) <- in(a). out(d) | in(c) <- out(c).");
        let (_, expected) = rev_prog("db: .\nrev: in(b) <- in(a). out(d) <- out(c).");
        assert_eq!(properize(&p), expected);
        assert_eq!(properize(&expected), expected);
        let (_, all_dropped) = rev_prog("db: .\nrev: in(a) <- out(a).");
        let proper = properize(&all_dropped);
        assert!(proper.rules()[0].is_constraint());
    }

    #[test]
    fn translation_examples() {
        let (_, p) = rev_prog("db: .\nrev: in(a) <- out(b).");
        assert_eq!(
            print_aic_program(&to_aic(&p).unwrap()),
            "not a, not b -> +a.\n"
        );

        let (_, eta) = aic_prog("db: .\naic: a, b, not c -> -a | +c. not d -> +d. a -> false.");
        let rev = to_rev(&eta).unwrap();
        assert_eq!(
            print_rev_program(&rev),
            "out(a) | in(c) <- in(b).\nin(d) <- .\nfalse <- in(a).\n"
        );
        assert_eq!(to_aic(&rev).unwrap(), eta);

        let (_, improper) = rev_prog("db: .\nrev: in(a) <- out(a).");
        assert_eq!(to_aic(&improper), Err(Error::NotProperProgram));
    }

    #[test]
    fn shift_example() {
        let (db, eta) = aic_prog("db: a, b.\naic: a, b -> -a | -b.");
        let w = Database::from_names(eta.universe(), &["a"]).unwrap();
        let witness = shift_instance(&db, &eta, &w).unwrap();
        let (sdb, seta) = aic_prog("universe: a, b.\ndb: b.\naic: not a, b -> +a | -b.");
        assert_eq!(witness.shifted, (sdb, seta));
        let checks =
            verify_aic_shift(&witness, &[RepairClass::FoundedRepair], &Limits::default()).unwrap();
        assert!(checks[0].holds());
        assert_eq!(checks[0].shifted.len(), 2);
        assert_eq!(eta.shift(&w).shift(&w), eta);
        assert_eq!(eta.shift(&Database::new()), eta);
    }
}
