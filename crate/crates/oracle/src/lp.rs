use aicrepair::{Database, LogicProgram};

use crate::bits::{db_mask, full, mask_db, submasks, Mask};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule {
    pub head: Mask,
    pub pos: Mask,
    pub neg: Mask,
}

#[derive(Debug, Clone)]
pub struct Lp {
    pub n: usize,
    pub rules: Vec<Rule>,
}

impl Lp {
    pub fn from_program(p: &LogicProgram) -> Self {
        let mask = |s: &std::collections::BTreeSet<aicrepair::Atom>| {
            s.iter().fold(0, |m, a| m | 1 << a.index())
        };
        Lp {
            n: p.universe().len(),
            rules: p
                .rules()
                .iter()
                .map(|r| Rule {
                    head: mask(&r.head),
                    pos: mask(&r.pos),
                    neg: mask(&r.neg),
                })
                .collect(),
        }
    }

    /// `m ⊨ P^reduct_by`.
    pub fn models_reduct(&self, m: Mask, reduct_by: Mask) -> bool {
        self.rules
            .iter()
            .filter(|r| r.neg & reduct_by == 0)
            .all(|r| r.pos & !m != 0 || r.head & m != 0)
    }

    pub fn answer_set(&self, m: Mask) -> bool {
        self.models_reduct(m, m)
            && submasks(m)
                .filter(|s| *s != m)
                .all(|s| !self.models_reduct(s, m))
    }

    pub fn answer_sets(&self) -> Vec<Mask> {
        (0..=full(self.n)).filter(|m| self.answer_set(*m)).collect()
    }
}

/// Answer sets as library values, sorted.
pub fn answer_sets(p: &LogicProgram) -> Vec<Database> {
    let mut out: Vec<Database> = Lp::from_program(p)
        .answer_sets()
        .into_iter()
        .map(mask_db)
        .collect();
    out.sort();
    out
}

pub fn is_answer_set(p: &LogicProgram, m: &Database) -> bool {
    Lp::from_program(p).answer_set(db_mask(m))
}
