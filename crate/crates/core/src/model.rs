//! Atoms, literals, update actions, revision literals, rules and programs.
//!
//! Every set-valued object is stored in a `BTreeSet` so that equality and
//! printing are canonical. Atoms are indices into a [`Universe`]; programs
//! carry the universe they were validated against.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of a propositional atom within a [`Universe`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(u32);

impl Atom {
    pub fn new(index: usize) -> Self {
        Atom(u32::try_from(index).expect("atom index exceeds u32"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The finite, ordered set of atom names an instance is built over.
#[derive(Debug, Clone, Default)]
pub struct Universe {
    names: Vec<String>,
    index: HashMap<String, Atom>,
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Universe {}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut universe = Universe::default();
        for name in names {
            let name = name.into();
            if universe.index.contains_key(&name) {
                return Err(Error::DuplicateAtom(name));
            }
            universe.push(name);
        }
        Ok(universe)
    }

    fn push(&mut self, name: String) -> Atom {
        let atom = Atom::new(self.names.len());
        self.index.insert(name.clone(), atom);
        self.names.push(name);
        atom
    }

    /// Returns the atom for `name`, adding it at the end if it is new.
    pub fn intern(&mut self, name: &str) -> Atom {
        match self.index.get(name) {
            Some(&atom) => atom,
            None => self.push(name.to_string()),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        (0..self.names.len()).map(Atom::new)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, atom: Atom) -> &str {
        &self.names[atom.index()]
    }

    pub fn lookup(&self, name: &str) -> Option<Atom> {
        self.index.get(name).copied()
    }

    pub fn atom(&self, name: &str) -> Result<Atom> {
        self.lookup(name)
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }

    pub fn contains(&self, atom: Atom) -> bool {
        atom.index() < self.names.len()
    }

    fn check(&self, atom: Atom) -> Result<()> {
        if self.contains(atom) {
            Ok(())
        } else {
            Err(Error::UnknownAtom(format!("#{}", atom.index())))
        }
    }
}

/// Types with a dual (`L^D`, `α^D`, `in(a)^D = out(a)`).
pub trait Dual: Sized {
    fn dual(&self) -> Self;
}

/// Shared shape of literals, update actions and revision literals: an atom
/// together with a polarity.
pub trait Signed: Copy + Ord {
    fn atom(&self) -> Atom;
    fn is_positive(&self) -> bool;
    fn with(atom: Atom, positive: bool) -> Self;
}

macro_rules! signed_item {
    ($name:ident, $field:ident) => {
        impl Signed for $name {
            fn atom(&self) -> Atom {
                self.atom
            }
            fn is_positive(&self) -> bool {
                self.$field
            }
            fn with(atom: Atom, positive: bool) -> Self {
                $name {
                    atom,
                    $field: positive,
                }
            }
        }

        impl Dual for $name {
            fn dual(&self) -> Self {
                $name {
                    atom: self.atom,
                    $field: !self.$field,
                }
            }
        }

        // Canonical order: by atom, positive polarity first.
        impl Ord for $name {
            fn cmp(&self, other: &Self) -> Ordering {
                (self.atom, !self.$field).cmp(&(other.atom, !other.$field))
            }
        }

        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }
    };
}

/// `a` or `not a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub positive: bool,
}

signed_item!(Literal, positive);

impl Literal {
    pub fn pos(atom: Atom) -> Self {
        Literal {
            atom,
            positive: true,
        }
    }

    pub fn neg(atom: Atom) -> Self {
        Literal {
            atom,
            positive: false,
        }
    }

    /// `ua(a) = +a`, `ua(not a) = -a`.
    pub fn ua(self) -> UpdateAction {
        UpdateAction {
            atom: self.atom,
            insert: self.positive,
        }
    }

    pub fn render(&self, universe: &Universe) -> String {
        if self.positive {
            universe.name(self.atom).to_string()
        } else {
            format!("not {}", universe.name(self.atom))
        }
    }
}

/// `+a` (insert) or `-a` (delete).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UpdateAction {
    pub atom: Atom,
    pub insert: bool,
}

signed_item!(UpdateAction, insert);

impl UpdateAction {
    pub fn insert(atom: Atom) -> Self {
        UpdateAction { atom, insert: true }
    }

    pub fn delete(atom: Atom) -> Self {
        UpdateAction {
            atom,
            insert: false,
        }
    }

    /// `lit(+a) = a`, `lit(-a) = not a`.
    pub fn lit(self) -> Literal {
        Literal {
            atom: self.atom,
            positive: self.insert,
        }
    }

    /// Inverse of [`RevisionLiteral::ua`].
    pub fn revision_literal(self) -> RevisionLiteral {
        RevisionLiteral {
            atom: self.atom,
            is_in: self.insert,
        }
    }

    pub fn render(&self, universe: &Universe) -> String {
        let sign = if self.insert { '+' } else { '-' };
        format!("{sign}{}", universe.name(self.atom))
    }
}

/// `in(a)` or `out(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RevisionLiteral {
    pub atom: Atom,
    pub is_in: bool,
}

signed_item!(RevisionLiteral, is_in);

impl RevisionLiteral {
    pub fn in_(atom: Atom) -> Self {
        RevisionLiteral { atom, is_in: true }
    }

    pub fn out(atom: Atom) -> Self {
        RevisionLiteral { atom, is_in: false }
    }

    /// `ua(in(a)) = +a`, `ua(out(a)) = -a`.
    pub fn ua(self) -> UpdateAction {
        UpdateAction {
            atom: self.atom,
            insert: self.is_in,
        }
    }

    /// `lit(in(a)) = a`, `lit(out(a)) = not a`.
    pub fn lit(self) -> Literal {
        Literal {
            atom: self.atom,
            positive: self.is_in,
        }
    }

    pub fn render(&self, universe: &Universe) -> String {
        let mode = if self.is_in { "in" } else { "out" };
        format!("{mode}({})", universe.name(self.atom))
    }
}

macro_rules! set_newtype {
    ($(#[$meta:meta])* $name:ident, $item:ty) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
        pub struct $name(BTreeSet<$item>);

        impl $name {
            pub fn new() -> Self {
                Self(BTreeSet::new())
            }

            pub fn insert(&mut self, item: $item) -> bool {
                self.0.insert(item)
            }

            pub fn remove(&mut self, item: &$item) -> bool {
                self.0.remove(item)
            }

            pub fn union(&self, other: &Self) -> Self {
                Self(self.0.union(&other.0).copied().collect())
            }

            pub fn difference(&self, other: &Self) -> Self {
                Self(self.0.difference(&other.0).copied().collect())
            }

            pub fn intersection(&self, other: &Self) -> Self {
                Self(self.0.intersection(&other.0).copied().collect())
            }

            pub fn is_disjoint_from(&self, other: &Self) -> bool {
                self.0.is_disjoint(&other.0)
            }

            pub fn into_inner(self) -> BTreeSet<$item> {
                self.0
            }
        }

        impl Deref for $name {
            type Target = BTreeSet<$item>;
            fn deref(&self) -> &Self::Target {
                &self.0
            }
        }

        impl FromIterator<$item> for $name {
            fn from_iter<T: IntoIterator<Item = $item>>(iter: T) -> Self {
                Self(iter.into_iter().collect())
            }
        }

        impl Extend<$item> for $name {
            fn extend<T: IntoIterator<Item = $item>>(&mut self, iter: T) {
                self.0.extend(iter)
            }
        }

        impl<'a> IntoIterator for &'a $name {
            type Item = &'a $item;
            type IntoIter = std::collections::btree_set::Iter<'a, $item>;
            fn into_iter(self) -> Self::IntoIter {
                self.0.iter()
            }
        }

        impl IntoIterator for $name {
            type Item = $item;
            type IntoIter = std::collections::btree_set::IntoIter<$item>;
            fn into_iter(self) -> Self::IntoIter {
                self.0.into_iter()
            }
        }

        impl From<BTreeSet<$item>> for $name {
            fn from(set: BTreeSet<$item>) -> Self {
                Self(set)
            }
        }
    };
}

set_newtype!(
    /// A database: the set of atoms that are true.
    Database,
    Atom
);

set_newtype!(
    /// A set of update actions. Inconsistent sets are representable.
    UpdateSet,
    UpdateAction
);

set_newtype!(
    /// A set of revision literals. Inconsistent sets are representable.
    RevisionSet,
    RevisionLiteral
);

impl Database {
    pub fn from_names(universe: &Universe, names: &[&str]) -> Result<Self> {
        names.iter().map(|n| universe.atom(n)).collect()
    }

    /// `I ÷ W`.
    pub fn symmetric_difference(&self, other: &Database) -> Database {
        self.0.symmetric_difference(&other.0).copied().collect()
    }

    pub fn render(&self, universe: &Universe) -> String {
        render_set(self.iter().map(|a| universe.name(*a).to_string()))
    }
}

fn first_conflict<T: Signed>(items: &BTreeSet<T>) -> Option<Atom> {
    // Positive polarity sorts first, so a conflict is two adjacent items.
    let mut prev: Option<T> = None;
    for item in items {
        if let Some(p) = prev {
            if p.atom() == item.atom() {
                return Some(item.atom());
            }
        }
        prev = Some(*item);
    }
    None
}

impl UpdateSet {
    pub fn is_consistent(&self) -> bool {
        first_conflict(&self.0).is_none()
    }

    pub fn ensure_consistent(&self, universe: &Universe) -> Result<()> {
        match first_conflict(&self.0) {
            None => Ok(()),
            Some(atom) => Err(Error::InconsistentUpdateSet(universe.name(atom).into())),
        }
    }

    /// `lit(U)`.
    pub fn lits(&self) -> BTreeSet<Literal> {
        self.iter().map(|a| a.lit()).collect()
    }

    pub fn duals(&self) -> UpdateSet {
        self.iter().map(|a| a.dual()).collect()
    }

    /// Inverse of [`RevisionSet::ua`].
    pub fn revision_literals(&self) -> RevisionSet {
        self.iter().map(|a| a.revision_literal()).collect()
    }

    pub fn render(&self, universe: &Universe) -> String {
        render_set(self.iter().map(|a| a.render(universe)))
    }
}

impl RevisionSet {
    pub fn is_consistent(&self) -> bool {
        first_conflict(&self.0).is_none()
    }

    pub fn ensure_consistent(&self, universe: &Universe) -> Result<()> {
        match first_conflict(&self.0) {
            None => Ok(()),
            Some(atom) => Err(Error::InconsistentRevisionSet(universe.name(atom).into())),
        }
    }

    /// `ua(E)`.
    pub fn ua(&self) -> UpdateSet {
        self.iter().map(|l| l.ua()).collect()
    }

    pub fn lits(&self) -> BTreeSet<Literal> {
        self.iter().map(|l| l.lit()).collect()
    }

    pub fn render(&self, universe: &Universe) -> String {
        render_set(self.iter().map(|l| l.render(universe)))
    }
}

fn render_set(items: impl Iterator<Item = String>) -> String {
    format!("{{{}}}", items.collect::<Vec<_>>().join(", "))
}

/// An active integrity constraint `L1, ..., Lm ⊃ α1 | ... | αk`.
///
/// Construction enforces the updatable condition: the dual of `lit(α)` is in
/// the body for every head action `α`. An empty head is the integrity
/// constraint `⊃ ⊥`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AicRule {
    body: BTreeSet<Literal>,
    head: BTreeSet<UpdateAction>,
}

impl AicRule {
    pub fn new(
        universe: &Universe,
        body: impl IntoIterator<Item = Literal>,
        head: impl IntoIterator<Item = UpdateAction>,
    ) -> Result<Self> {
        let mut body_set = BTreeSet::new();
        for lit in body {
            universe.check(lit.atom)?;
            if !body_set.insert(lit) {
                return Err(Error::DuplicateLiteral(lit.render(universe)));
            }
        }
        let mut head_set = BTreeSet::new();
        for action in head {
            universe.check(action.atom)?;
            let needed = action.lit().dual();
            if !body_set.contains(&needed) {
                return Err(Error::UpdatableConditionViolated {
                    action: action.render(universe),
                    missing: needed.render(universe),
                });
            }
            head_set.insert(action);
        }
        Ok(AicRule {
            body: body_set,
            head: head_set,
        })
    }

    /// For rules built by transformations that preserve the updatable condition.
    pub(crate) fn from_parts(body: BTreeSet<Literal>, head: BTreeSet<UpdateAction>) -> Self {
        debug_assert!(head.iter().all(|a| body.contains(&a.lit().dual())));
        AicRule { body, head }
    }

    pub fn body(&self) -> &BTreeSet<Literal> {
        &self.body
    }

    pub fn head(&self) -> &BTreeSet<UpdateAction> {
        &self.head
    }

    /// `up(r) = lit(head(r))^D`.
    pub fn up(&self) -> BTreeSet<Literal> {
        self.head.iter().map(|a| a.lit().dual()).collect()
    }

    /// `nup(r) = body(r) \ up(r)`.
    pub fn nup(&self) -> BTreeSet<Literal> {
        let up = self.up();
        self.body.difference(&up).copied().collect()
    }

    pub fn is_normal(&self) -> bool {
        self.head.len() <= 1
    }

    pub fn is_constraint(&self) -> bool {
        self.head.is_empty()
    }

    /// True when the body contains both `a` and `not a`; such a rule can
    /// never be violated.
    pub fn has_complementary_body(&self) -> bool {
        self.body
            .iter()
            .any(|l| l.positive && self.body.contains(&l.dual()))
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.body
            .iter()
            .map(|l| l.atom)
            .chain(self.head.iter().map(|a| a.atom))
    }
}

/// A revision rule `α1 | ... | αk <- β1, ..., βm` with `k + m >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RevisionRule {
    head: BTreeSet<RevisionLiteral>,
    body: BTreeSet<RevisionLiteral>,
}

impl RevisionRule {
    pub fn new(
        head: impl IntoIterator<Item = RevisionLiteral>,
        body: impl IntoIterator<Item = RevisionLiteral>,
    ) -> Result<Self> {
        let head: BTreeSet<_> = head.into_iter().collect();
        let body: BTreeSet<_> = body.into_iter().collect();
        if head.is_empty() && body.is_empty() {
            return Err(Error::EmptyRevisionRule);
        }
        Ok(RevisionRule { head, body })
    }

    pub fn head(&self) -> &BTreeSet<RevisionLiteral> {
        &self.head
    }

    pub fn body(&self) -> &BTreeSet<RevisionLiteral> {
        &self.body
    }

    pub fn is_normal(&self) -> bool {
        self.head.len() <= 1
    }

    pub fn is_constraint(&self) -> bool {
        self.head.is_empty()
    }

    /// No head literal is the dual of a body literal.
    pub fn is_proper(&self) -> bool {
        self.head.iter().all(|l| !self.body.contains(&l.dual()))
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.head.iter().chain(self.body.iter()).map(|l| l.atom)
    }
}

macro_rules! program_type {
    ($(#[$meta:meta])* $name:ident, $rule:ty) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq)]
        pub struct $name {
            universe: Arc<Universe>,
            rules: Vec<$rule>,
        }

        impl $name {
            pub fn new(universe: Arc<Universe>, rules: Vec<$rule>) -> Result<Self> {
                for rule in &rules {
                    for atom in rule.atoms() {
                        universe.check(atom)?;
                    }
                }
                Ok($name { universe, rules })
            }

            pub fn universe(&self) -> &Arc<Universe> {
                &self.universe
            }

            pub fn rules(&self) -> &[$rule] {
                &self.rules
            }

            pub fn len(&self) -> usize {
                self.rules.len()
            }

            pub fn is_empty(&self) -> bool {
                self.rules.is_empty()
            }

            pub fn is_normal(&self) -> bool {
                self.rules.iter().all(|r| r.is_normal())
            }

            /// Same universe, new rule list; used by transformations.
            pub(crate) fn with_rules(&self, rules: Vec<$rule>) -> Self {
                $name {
                    universe: Arc::clone(&self.universe),
                    rules,
                }
            }
        }
    };
}

program_type!(
    /// An ordered list of active integrity constraints over one universe.
    AicProgram,
    AicRule
);

program_type!(
    /// An ordered list of revision rules over one universe.
    RevisionProgram,
    RevisionRule
);

impl RevisionProgram {
    pub fn is_proper(&self) -> bool {
        self.rules.iter().all(|r| r.is_proper())
    }
}

/// Selector for the repair semantics of active integrity constraints.
///
/// The `*Normalized` variants apply the justified semantics to `η^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepairClass {
    WeakRepair,
    Repair,
    FoundedWeakRepair,
    FoundedRepair,
    JustifiedWeakRepair,
    JustifiedRepair,
    JustifiedWeakRepairNormalized,
    JustifiedRepairNormalized,
}

impl RepairClass {
    pub const ALL: [RepairClass; 8] = [
        RepairClass::WeakRepair,
        RepairClass::Repair,
        RepairClass::FoundedWeakRepair,
        RepairClass::FoundedRepair,
        RepairClass::JustifiedWeakRepair,
        RepairClass::JustifiedRepair,
        RepairClass::JustifiedWeakRepairNormalized,
        RepairClass::JustifiedRepairNormalized,
    ];

    /// The six classes defined directly on `η`.
    pub const BASE: [RepairClass; 6] = [
        RepairClass::WeakRepair,
        RepairClass::Repair,
        RepairClass::FoundedWeakRepair,
        RepairClass::FoundedRepair,
        RepairClass::JustifiedWeakRepair,
        RepairClass::JustifiedRepair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RepairClass::WeakRepair => "weak-repair",
            RepairClass::Repair => "repair",
            RepairClass::FoundedWeakRepair => "founded-weak-repair",
            RepairClass::FoundedRepair => "founded-repair",
            RepairClass::JustifiedWeakRepair => "justified-weak-repair",
            RepairClass::JustifiedRepair => "justified-repair",
            RepairClass::JustifiedWeakRepairNormalized => "justified-weak-repair-normalized",
            RepairClass::JustifiedRepairNormalized => "justified-repair-normalized",
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            RepairClass::WeakRepair => "WR",
            RepairClass::Repair => "R",
            RepairClass::FoundedWeakRepair => "FWR",
            RepairClass::FoundedRepair => "FR",
            RepairClass::JustifiedWeakRepair => "JWR",
            RepairClass::JustifiedRepair => "JR",
            RepairClass::JustifiedWeakRepairNormalized => "JWR_N",
            RepairClass::JustifiedRepairNormalized => "JR_N",
        }
    }

    /// True for the classes that impose change-minimality.
    pub fn is_minimal(self) -> bool {
        matches!(
            self,
            RepairClass::Repair
                | RepairClass::FoundedRepair
                | RepairClass::JustifiedRepair
                | RepairClass::JustifiedRepairNormalized
        )
    }
}

impl fmt::Display for RepairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RepairClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        RepairClass::ALL
            .into_iter()
            .find(|c| c.name() == s || c.tag() == s)
            .ok_or_else(|| format!("unknown repair class `{s}`"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn universe() -> Universe {
        Universe::new(["a", "b", "c"]).unwrap()
    }

    #[test]
    fn rule_with_supported_head_is_valid() {
        let u = universe();
        let (a, b) = (u.atom("a").unwrap(), u.atom("b").unwrap());
        let rule = AicRule::new(
            &u,
            [Literal::pos(a), Literal::pos(b)],
            [UpdateAction::delete(a)],
        )
        .unwrap();
        assert_eq!(rule.up(), BTreeSet::from([Literal::pos(a)]));
        assert_eq!(rule.nup(), BTreeSet::from([Literal::pos(b)]));
    }

    #[test]
    fn empty_head_is_an_integrity_constraint() {
        let u = universe();
        let a = u.atom("a").unwrap();
        let rule = AicRule::new(&u, [Literal::pos(a)], []).unwrap();
        assert!(rule.is_constraint());
        assert!(rule.up().is_empty());
    }

    #[test]
    fn unsupported_head_action_is_rejected() {
        let u = universe();
        let (a, b) = (u.atom("a").unwrap(), u.atom("b").unwrap());
        let err = AicRule::new(&u, [Literal::pos(a)], [UpdateAction::insert(b)]).unwrap_err();
        assert_eq!(
            err,
            Error::UpdatableConditionViolated {
                action: "+b".into(),
                missing: "not b".into()
            }
        );
    }

    #[test]
    fn duplicate_body_literal_is_rejected() {
        let u = universe();
        let a = u.atom("a").unwrap();
        let err = AicRule::new(&u, [Literal::pos(a), Literal::pos(a)], []).unwrap_err();
        assert_eq!(err, Error::DuplicateLiteral("a".into()));
    }

    #[test]
    fn complementary_body_is_accepted_and_flagged() {
        let u = universe();
        let a = u.atom("a").unwrap();
        let rule = AicRule::new(&u, [Literal::pos(a), Literal::neg(a)], []).unwrap();
        assert!(rule.has_complementary_body());
    }

    #[test]
    fn unknown_atom_is_rejected() {
        let u = universe();
        let ghost = Atom::new(7);
        assert!(matches!(
            AicRule::new(&u, [Literal::pos(ghost)], []),
            Err(Error::UnknownAtom(_))
        ));
        assert_eq!(u.atom("zz"), Err(Error::UnknownAtom("zz".into())));
    }

    #[test]
    fn consistency() {
        let u = universe();
        let (a, b) = (u.atom("a").unwrap(), u.atom("b").unwrap());
        let set: UpdateSet = [UpdateAction::insert(a), UpdateAction::delete(b)]
            .into_iter()
            .collect();
        assert!(set.is_consistent());
        let set: UpdateSet = [UpdateAction::insert(a), UpdateAction::delete(a)]
            .into_iter()
            .collect();
        assert!(!set.is_consistent());
        assert!(UpdateSet::new().is_consistent());
    }

    #[test]
    fn conversions() {
        let u = universe();
        let (a, b) = (u.atom("a").unwrap(), u.atom("b").unwrap());
        assert_eq!(RevisionLiteral::out(b).lit(), Literal::neg(b));
        assert_eq!(Literal::neg(a).ua(), UpdateAction::delete(a));
        let plus_a = UpdateAction::insert(a);
        assert_eq!(plus_a.dual().dual(), plus_a);
        assert_eq!(RevisionLiteral::in_(a).ua(), plus_a);
        assert_eq!(plus_a.revision_literal(), RevisionLiteral::in_(a));
    }

    #[test]
    fn conversions_are_bijections() {
        for index in 0..3 {
            let atom = Atom::new(index);
            for positive in [true, false] {
                let lit = Literal::with(atom, positive);
                assert_eq!(lit.ua().lit(), lit);
                assert_eq!(lit.dual().dual(), lit);
                let action = UpdateAction::with(atom, positive);
                assert_eq!(action.lit().ua(), action);
                assert_eq!(action.revision_literal().ua(), action);
                let rev = RevisionLiteral::with(atom, positive);
                assert_eq!(rev.dual().dual(), rev);
                assert_eq!(rev.ua().revision_literal(), rev);
                assert_eq!(rev.lit(), rev.ua().lit());
            }
        }
    }

    #[test]
    fn canonical_order_puts_insertions_first() {
        let a = Atom::new(0);
        let b = Atom::new(1);
        let set: UpdateSet = [
            UpdateAction::delete(b),
            UpdateAction::delete(a),
            UpdateAction::insert(a),
        ]
        .into_iter()
        .collect();
        let order: Vec<_> = set.iter().copied().collect();
        assert_eq!(
            order,
            vec![
                UpdateAction::insert(a),
                UpdateAction::delete(a),
                UpdateAction::delete(b)
            ]
        );
    }

    #[test]
    fn revision_rule_needs_head_or_body() {
        assert_eq!(RevisionRule::new([], []), Err(Error::EmptyRevisionRule));
        let a = Atom::new(0);
        let rule = RevisionRule::new([RevisionLiteral::in_(a)], [RevisionLiteral::out(a)]).unwrap();
        assert!(!rule.is_proper());
        assert!(rule.is_normal());
    }

    #[test]
    fn duplicate_universe_names_are_rejected() {
        assert_eq!(
            Universe::new(["a", "a"]),
            Err(Error::DuplicateAtom("a".into()))
        );
    }

    #[test]
    fn class_names_round_trip() {
        for class in RepairClass::ALL {
            assert_eq!(class.name().parse::<RepairClass>(), Ok(class));
            assert_eq!(class.tag().parse::<RepairClass>(), Ok(class));
        }
    }
}
