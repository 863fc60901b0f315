use std::collections::BTreeSet;

use aicrepair::{Database, RevisionClass, RevisionProgram, RevisionSet};

use crate::bits::{consistent_pairs, db_mask, no_effect, Mask, Pair};

/// `head <- body` over revision literals, `pos` = `in`, `neg` = `out`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule {
    pub head: Pair,
    pub body: Pair,
}

#[derive(Debug, Clone)]
pub struct Rev {
    pub n: usize,
    pub rules: Vec<Rule>,
}

impl Rev {
    pub fn from_program(p: &RevisionProgram) -> Self {
        let set = |s: &BTreeSet<_>| Pair::from_revision_set(&RevisionSet::from(s.clone()));
        let rules = p
            .rules()
            .iter()
            .map(|r| Rule {
                head: set(r.head()),
                body: set(r.body()),
            })
            .collect();
        Rev {
            n: p.universe().len(),
            rules,
        }
    }

    pub fn satisfied(&self, m: Mask) -> bool {
        self.rules
            .iter()
            .all(|r| !r.body.holds_in(m) || r.head.elements().any(|h| h.holds_in(m)))
    }

    /// `α_i <- {α_j^D : j ≠ i}, body` for each head literal.
    pub fn normalized(&self) -> Rev {
        let mut rules = Vec::new();
        for r in &self.rules {
            if r.head.elements().count() <= 1 {
                rules.push(*r);
                continue;
            }
            for a in r.head.elements() {
                rules.push(Rule {
                    head: a,
                    body: r.body.union(r.head.minus(a).dual()),
                });
            }
        }
        Rev { n: self.n, rules }
    }

    /// Whether `u`, together with `facts`, is closed under the rules.
    pub fn closed(&self, u: Pair, facts: Pair) -> bool {
        facts.subset_of(u)
            && self
                .rules
                .iter()
                .all(|r| !r.body.subset_of(u) || !r.head.meet(u).is_empty())
    }

    pub fn weak_revision(&self, db: Mask, e: Pair) -> bool {
        let inertia = no_effect(self.n, db, e.apply(db));
        e.consistent() && e.meet(inertia).is_empty() && self.satisfied(e.apply(db))
    }

    fn change_minimal(&self, db: Mask, e: Pair) -> bool {
        e.proper_subsets().all(|v| !self.satisfied(v.apply(db)))
    }

    pub fn revision(&self, db: Mask, e: Pair) -> bool {
        self.weak_revision(db, e) && self.change_minimal(db, e)
    }

    pub fn founded_literal(&self, db: Mask, e: Pair, alpha: Pair) -> bool {
        let m = e.apply(db);
        self.rules.iter().any(|r| {
            alpha.subset_of(r.head)
                && r.body.holds_in(m)
                && r.head.minus(alpha).elements().all(|b| b.dual().holds_in(m))
        })
    }

    pub fn founded(&self, db: Mask, e: Pair) -> bool {
        e.elements().all(|a| self.founded_literal(db, e, a))
    }

    /// Consistent and a minimal set closed under the rules plus the inertia
    /// literals of `I` and `I⊕U` as facts.
    pub fn justified_update(&self, db: Mask, u: Pair) -> bool {
        if !u.consistent() {
            return false;
        }
        let inertia = no_effect(self.n, db, u.apply(db));
        self.closed(u, inertia) && !u.proper_subsets().any(|v| self.closed(v, inertia))
    }

    /// `U \ I(I, I⊕U)` for every justified update `U`.
    pub fn justified_weak_revisions(&self, db: Mask) -> BTreeSet<Pair> {
        consistent_pairs(self.n)
            .filter(|u| self.justified_update(db, *u))
            .map(|u| u.minus(no_effect(self.n, db, u.apply(db))))
            .collect()
    }

    pub fn triggered_heads(&self, m: Mask) -> Pair {
        self.rules
            .iter()
            .filter(|r| r.body.holds_in(m))
            .fold(Pair::default(), |acc, r| acc.union(r.head))
    }

    /// `U = head(P_{I⊕U})` with no triggered constraint.
    pub fn supported_update(&self, db: Mask, u: Pair) -> bool {
        let m = u.apply(db);
        let constraint_fires = self
            .rules
            .iter()
            .any(|r| r.head.is_empty() && r.body.holds_in(m));
        u.consistent() && !constraint_fires && self.triggered_heads(m) == u
    }

    /// `U \ I(I, I⊕U)` for every supported update `U`.
    pub fn supported_revisions(&self, db: Mask) -> BTreeSet<Pair> {
        consistent_pairs(self.n)
            .filter(|u| self.supported_update(db, *u))
            .map(|u| u.minus(no_effect(self.n, db, u.apply(db))))
            .collect()
    }

    /// All members of `class`, by testing every consistent literal set.
    pub fn class(&self, class: RevisionClass, db: Mask) -> BTreeSet<Pair> {
        let all = || consistent_pairs(self.n);
        match class {
            RevisionClass::WeakRevision => all().filter(|e| self.weak_revision(db, *e)).collect(),
            RevisionClass::Revision => all().filter(|e| self.revision(db, *e)).collect(),
            RevisionClass::FoundedWeakRevision => all()
                .filter(|e| self.weak_revision(db, *e) && self.founded(db, *e))
                .collect(),
            RevisionClass::FoundedRevision => all()
                .filter(|e| self.revision(db, *e) && self.founded(db, *e))
                .collect(),
            RevisionClass::JustifiedWeakRevision => self.justified_weak_revisions(db),
            RevisionClass::JustifiedRevision => self
                .justified_weak_revisions(db)
                .into_iter()
                .filter(|e| self.change_minimal(db, *e))
                .collect(),
            RevisionClass::JustifiedWeakRevisionNormalized => self
                .normalized()
                .class(RevisionClass::JustifiedWeakRevision, db),
            RevisionClass::JustifiedRevisionNormalized => self
                .normalized()
                .class(RevisionClass::JustifiedRevision, db),
            RevisionClass::SupportedRevision => self.supported_revisions(db),
        }
    }

    pub fn member(&self, class: RevisionClass, db: Mask, e: Pair) -> bool {
        self.class(class, db).contains(&e)
    }
}

/// The members of `class` for `⟨db, p⟩` as library values, sorted.
pub fn revisions(p: &RevisionProgram, db: &Database, class: RevisionClass) -> Vec<RevisionSet> {
    let mut out: Vec<RevisionSet> = Rev::from_program(p)
        .class(class, db_mask(db))
        .into_iter()
        .map(Pair::to_revision_set)
        .collect();
    out.sort();
    out
}

pub fn is_member(
    class: RevisionClass,
    p: &RevisionProgram,
    db: &Database,
    e: &RevisionSet,
) -> bool {
    Rev::from_program(p).member(class, db_mask(db), Pair::from_revision_set(e))
}
