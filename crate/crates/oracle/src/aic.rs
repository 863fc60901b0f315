use std::collections::BTreeSet;

use aicrepair::{AicProgram, Database, RepairClass, UpdateSet};

use crate::bits::{all_pairs, consistent_pairs, db_mask, full, no_effect, Mask, Pair};

/// `body` as literals, `head` as actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule {
    pub body: Pair,
    pub head: Pair,
}

impl Rule {
    /// Body literals whose atom is not the target of a head action.
    pub fn nup(self) -> Pair {
        Pair::new(
            self.body.pos & !self.head.neg,
            self.body.neg & !self.head.pos,
        )
    }
}

#[derive(Debug, Clone)]
pub struct Aic {
    pub n: usize,
    pub rules: Vec<Rule>,
}

impl Aic {
    pub fn from_program(eta: &AicProgram) -> Self {
        let rules = eta
            .rules()
            .iter()
            .map(|r| Rule {
                body: Pair::from_literals(r.body()),
                head: Pair::from_update_set(&UpdateSet::from(r.head().clone())),
            })
            .collect();
        Aic {
            n: eta.universe().len(),
            rules,
        }
    }

    pub fn satisfied(&self, m: Mask) -> bool {
        self.rules.iter().all(|r| !r.body.holds_in(m))
    }

    /// Split every head into single-action rules with the same body.
    pub fn normalized(&self) -> Aic {
        let mut rules = Vec::new();
        for r in &self.rules {
            if r.head.is_empty() {
                rules.push(*r);
            }
            for a in r.head.elements() {
                rules.push(Rule {
                    body: r.body,
                    head: a,
                });
            }
        }
        Aic { n: self.n, rules }
    }

    pub fn closed(&self, u: Pair) -> bool {
        self.rules
            .iter()
            .all(|r| !r.nup().subset_of(u) || !r.head.meet(u).is_empty())
    }

    pub fn weak_repair(&self, db: Mask, u: Pair) -> bool {
        let essential = u.pos & db == 0 && u.neg & !db == 0;
        u.consistent() && essential && self.satisfied(u.apply(db))
    }

    fn change_minimal(&self, db: Mask, u: Pair) -> bool {
        u.proper_subsets().all(|v| !self.satisfied(v.apply(db)))
    }

    pub fn repair(&self, db: Mask, u: Pair) -> bool {
        self.weak_repair(db, u) && self.change_minimal(db, u)
    }

    pub fn founded_action(&self, db: Mask, u: Pair, alpha: Pair) -> bool {
        let m = u.apply(db);
        self.rules.iter().any(|r| {
            alpha.subset_of(r.head)
                && r.nup().holds_in(m)
                && r.head.minus(alpha).elements().all(|b| b.dual().holds_in(m))
        })
    }

    pub fn founded(&self, db: Mask, u: Pair) -> bool {
        u.elements().all(|a| self.founded_action(db, u, a))
    }

    /// Consistent, contains `ne(I, I∘U)`, closed, and no closed set strictly
    /// between `ne` and `u`.
    pub fn justified_action_set(&self, db: Mask, u: Pair) -> bool {
        let ne = no_effect(self.n, db, u.apply(db));
        self.justified_action_set_for(u, ne)
    }

    fn justified_action_set_for(&self, u: Pair, ne: Pair) -> bool {
        u.consistent()
            && ne.subset_of(u)
            && self.closed(u)
            && !u
                .proper_subsets()
                .any(|v| ne.subset_of(v) && self.closed(v))
    }

    /// `E ∪ ne(I, I∘E)` is a justified action set and `E` avoids `ne`.
    pub fn justified_weak_repair(&self, db: Mask, e: Pair) -> bool {
        if !e.consistent() {
            return false;
        }
        let ne = no_effect(self.n, db, e.apply(db));
        e.meet(ne).is_empty() && self.justified_action_set(db, e.union(ne))
    }

    pub fn justified_repair(&self, db: Mask, e: Pair) -> bool {
        self.justified_weak_repair(db, e) && self.change_minimal(db, e)
    }

    /// Justified weak repairs read off justified action sets: every
    /// consistent `U` that is one yields `U \ ne(I, I∘U)`.
    pub fn justified_weak_repairs_from_action_sets(&self, db: Mask) -> BTreeSet<Pair> {
        self.justified_weak_repairs_with(db, full(self.n))
    }

    /// As above with `ne` restricted to the atoms in `relevant`.
    pub fn justified_weak_repairs_with(&self, db: Mask, relevant: Mask) -> BTreeSet<Pair> {
        consistent_pairs(self.n)
            .filter_map(|u| {
                let ne = no_effect(self.n, db, u.apply(db));
                let ne = Pair::new(ne.pos & relevant, ne.neg & relevant);
                self.justified_action_set_for(u, ne).then(|| u.minus(ne))
            })
            .collect()
    }

    /// Atoms occurring anywhere in the program.
    pub fn mentioned(&self) -> Mask {
        self.rules.iter().fold(0, |m, r| {
            m | r.body.pos | r.body.neg | r.head.pos | r.head.neg
        })
    }

    /// The least closed superset of `seed`, found by intersecting all closed
    /// supersets. `None` if there is none. Only meaningful for normal programs.
    pub fn least_closure(&self, seed: Pair) -> Option<Pair> {
        let closed: Vec<Pair> = all_pairs(self.n)
            .filter(|v| seed.subset_of(*v) && self.closed(*v))
            .collect();
        let meet = closed.iter().copied().reduce(Pair::meet)?;
        assert!(
            closed.contains(&meet),
            "closed supersets have no least element"
        );
        Some(meet)
    }

    pub fn member(&self, class: RepairClass, db: Mask, u: Pair) -> bool {
        match class {
            RepairClass::WeakRepair => self.weak_repair(db, u),
            RepairClass::Repair => self.repair(db, u),
            RepairClass::FoundedWeakRepair => self.weak_repair(db, u) && self.founded(db, u),
            RepairClass::FoundedRepair => self.repair(db, u) && self.founded(db, u),
            RepairClass::JustifiedWeakRepair => self.justified_weak_repair(db, u),
            RepairClass::JustifiedRepair => self.justified_repair(db, u),
            RepairClass::JustifiedWeakRepairNormalized => {
                self.normalized().justified_weak_repair(db, u)
            }
            RepairClass::JustifiedRepairNormalized => self.normalized().justified_repair(db, u),
        }
    }

    /// All members of `class`, by testing every consistent set of actions.
    pub fn class(&self, class: RepairClass, db: Mask) -> BTreeSet<Pair> {
        let eta = match class {
            RepairClass::JustifiedWeakRepairNormalized | RepairClass::JustifiedRepairNormalized => {
                self.normalized()
            }
            _ => self.clone(),
        };
        let base = match class {
            RepairClass::JustifiedWeakRepairNormalized => RepairClass::JustifiedWeakRepair,
            RepairClass::JustifiedRepairNormalized => RepairClass::JustifiedRepair,
            c => c,
        };
        consistent_pairs(self.n)
            .filter(|u| eta.member(base, db, *u))
            .collect()
    }
}

/// The members of `class` for `⟨db, eta⟩` as library values, sorted.
pub fn repairs(db: &Database, eta: &AicProgram, class: RepairClass) -> Vec<UpdateSet> {
    let oracle = Aic::from_program(eta);
    let mut out: Vec<UpdateSet> = oracle
        .class(class, db_mask(db))
        .into_iter()
        .map(Pair::to_update_set)
        .collect();
    out.sort();
    out
}

pub fn is_member(class: RepairClass, db: &Database, eta: &AicProgram, u: &UpdateSet) -> bool {
    Aic::from_program(eta).member(class, db_mask(db), Pair::from_update_set(u))
}
