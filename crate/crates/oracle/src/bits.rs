use aicrepair::{Atom, Database, Literal, RevisionLiteral, RevisionSet, UpdateAction, UpdateSet};

pub type Mask = u32;

pub fn full(n: usize) -> Mask {
    if n == 32 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Every submask of `m`, including `0` and `m`.
pub fn submasks(m: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(m);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

pub fn db_mask(db: &Database) -> Mask {
    db.iter().fold(0, |m, a| m | 1 << a.index())
}

pub fn mask_db(m: Mask) -> Database {
    (0..32)
        .filter(|i| m & (1 << i) != 0)
        .map(Atom::new)
        .collect()
}

/// A set of signed items over atoms: `pos` holds `+a`, `a`, `in(a)`;
/// `neg` holds `-a`, `not a`, `out(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Pair {
    pub pos: Mask,
    pub neg: Mask,
}

impl Pair {
    pub fn new(pos: Mask, neg: Mask) -> Self {
        Pair { pos, neg }
    }

    pub fn consistent(self) -> bool {
        self.pos & self.neg == 0
    }

    pub fn subset_of(self, other: Pair) -> bool {
        self.pos & !other.pos == 0 && self.neg & !other.neg == 0
    }

    pub fn union(self, other: Pair) -> Pair {
        Pair::new(self.pos | other.pos, self.neg | other.neg)
    }

    pub fn minus(self, other: Pair) -> Pair {
        Pair::new(self.pos & !other.pos, self.neg & !other.neg)
    }

    pub fn meet(self, other: Pair) -> Pair {
        Pair::new(self.pos & other.pos, self.neg & other.neg)
    }

    pub fn is_empty(self) -> bool {
        self.pos == 0 && self.neg == 0
    }

    /// Swap signs.
    pub fn dual(self) -> Pair {
        Pair::new(self.neg, self.pos)
    }

    /// Every positive member is in `m` and every negative member is not.
    pub fn holds_in(self, m: Mask) -> bool {
        self.pos & !m == 0 && self.neg & m == 0
    }

    /// Apply as an update: insert `pos`, delete `neg`.
    pub fn apply(self, db: Mask) -> Mask {
        (db | self.pos) & !self.neg
    }

    /// Every sub-pair, including the empty one and `self`.
    pub fn subsets(self) -> impl Iterator<Item = Pair> {
        submasks(self.pos).flat_map(move |p| submasks(self.neg).map(move |q| Pair::new(p, q)))
    }

    pub fn proper_subsets(self) -> impl Iterator<Item = Pair> {
        self.subsets().filter(move |s| *s != self)
    }

    /// The single-element pairs contained in `self`.
    pub fn elements(self) -> impl Iterator<Item = Pair> {
        (0..32).flat_map(move |i| {
            let bit = 1 << i;
            let p = (self.pos & bit != 0).then_some(Pair::new(bit, 0));
            let n = (self.neg & bit != 0).then_some(Pair::new(0, bit));
            p.into_iter().chain(n)
        })
    }

    pub fn from_update_set(u: &UpdateSet) -> Pair {
        u.iter().fold(Pair::default(), |p, a| {
            let bit = 1 << a.atom.index();
            if a.insert {
                Pair::new(p.pos | bit, p.neg)
            } else {
                Pair::new(p.pos, p.neg | bit)
            }
        })
    }

    pub fn from_revision_set(e: &RevisionSet) -> Pair {
        e.iter().fold(Pair::default(), |p, l| {
            let bit = 1 << l.atom.index();
            if l.is_in {
                Pair::new(p.pos | bit, p.neg)
            } else {
                Pair::new(p.pos, p.neg | bit)
            }
        })
    }

    pub fn from_literals<'a>(ls: impl IntoIterator<Item = &'a Literal>) -> Pair {
        ls.into_iter().fold(Pair::default(), |p, l| {
            let bit = 1 << l.atom.index();
            if l.positive {
                Pair::new(p.pos | bit, p.neg)
            } else {
                Pair::new(p.pos, p.neg | bit)
            }
        })
    }

    pub fn to_update_set(self) -> UpdateSet {
        mask_db(self.pos)
            .iter()
            .map(|a| UpdateAction {
                atom: *a,
                insert: true,
            })
            .chain(mask_db(self.neg).iter().map(|a| UpdateAction {
                atom: *a,
                insert: false,
            }))
            .collect()
    }

    pub fn to_revision_set(self) -> RevisionSet {
        mask_db(self.pos)
            .iter()
            .map(|a| RevisionLiteral {
                atom: *a,
                is_in: true,
            })
            .chain(mask_db(self.neg).iter().map(|a| RevisionLiteral {
                atom: *a,
                is_in: false,
            }))
            .collect()
    }
}

/// Every consistent pair over `n` atoms.
pub fn consistent_pairs(n: usize) -> impl Iterator<Item = Pair> {
    let all = full(n);
    (0..=all).flat_map(move |pos| submasks(all & !pos).map(move |neg| Pair::new(pos, neg)))
}

/// Every pair over `n` atoms, consistent or not.
pub fn all_pairs(n: usize) -> impl Iterator<Item = Pair> {
    let all = full(n);
    (0..=all).flat_map(move |pos| (0..=all).map(move |neg| Pair::new(pos, neg)))
}

/// `ne(I, R)` and, read as revision literals, the inertia set.
pub fn no_effect(n: usize, db: Mask, result: Mask) -> Pair {
    Pair::new(db & result, full(n) & !(db | result))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(submasks(0b101).count(), 4);
        assert_eq!(consistent_pairs(3).count(), 27);
        assert_eq!(all_pairs(2).count(), 16);
        assert_eq!(Pair::new(0b11, 0b100).proper_subsets().count(), 7);
        assert_eq!(Pair::new(0b11, 0b100).elements().count(), 3);
    }
}
