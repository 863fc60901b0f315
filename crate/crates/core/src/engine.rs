//! Bounded exhaustive search shared by the repair and revision enumerators.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Duration;

use crate::error::{Error, Result};

/// Default bound on the number of atoms an exhaustive search accepts.
pub const DEFAULT_MAX_ATOMS: usize = 12;

/// No override can raise the bound past this.
pub const HARD_MAX_ATOMS: usize = 24;

/// Environment variable that overrides [`DEFAULT_MAX_ATOMS`].
pub const MAX_ATOMS_ENV: &str = "AICREPAIR_MAX_ATOMS";

/// Resource limits for enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    pub max_atoms: usize,
    /// Stop after examining this many candidates; the report is then
    /// flagged incomplete.
    pub max_candidates: Option<u64>,
    pub jobs: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_atoms: DEFAULT_MAX_ATOMS,
            max_candidates: None,
            jobs: 1,
        }
    }
}

impl Limits {
    /// Defaults, with the atom bound taken from `AICREPAIR_MAX_ATOMS` if set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(value) = std::env::var(MAX_ATOMS_ENV) {
            limits.max_atoms = parse_bound(&value)?;
        }
        Ok(limits)
    }

    pub fn with_max_atoms(mut self, max_atoms: usize) -> Result<Self> {
        if max_atoms > HARD_MAX_ATOMS {
            return Err(Error::InvalidLimit(format!(
                "atom bound {max_atoms} exceeds the ceiling {HARD_MAX_ATOMS}"
            )));
        }
        self.max_atoms = max_atoms;
        Ok(self)
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn with_max_candidates(mut self, max: u64) -> Self {
        self.max_candidates = Some(max);
        self
    }

    pub fn check_universe(&self, atoms: usize) -> Result<()> {
        let bound = self.max_atoms.min(HARD_MAX_ATOMS);
        if atoms > bound {
            Err(Error::UniverseTooLarge { atoms, bound })
        } else {
            Ok(())
        }
    }
}

fn parse_bound(value: &str) -> Result<usize> {
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| Error::InvalidLimit(format!("{MAX_ATOMS_ENV}=`{value}` is not a number")))?;
    if n > HARD_MAX_ATOMS {
        return Err(Error::InvalidLimit(format!(
            "{MAX_ATOMS_ENV}={n} exceeds the ceiling {HARD_MAX_ATOMS}"
        )));
    }
    Ok(n)
}

/// Outcome of an enumeration.
///
/// `repairs` is sorted and duplicate free. When `complete` is false the
/// candidate limit was hit and `repairs` holds only what was found so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report<C, S> {
    pub class: C,
    pub repairs: Vec<S>,
    pub candidates: u64,
    pub elapsed: Duration,
    pub complete: bool,
}

pub(crate) struct Outcome<S> {
    pub found: Vec<S>,
    pub candidates: u64,
    pub complete: bool,
}

/// Runs `accept(build(mask))` for every `mask < 2^bits`, splitting the
/// masks across `limits.jobs` threads.
pub(crate) fn search<S, B, A>(bits: usize, limits: &Limits, build: B, accept: A) -> Outcome<S>
where
    S: Ord + Send,
    B: Fn(u64) -> S + Sync,
    A: Fn(&S) -> bool + Sync,
{
    let total: u64 = 1u64 << bits;
    let jobs = (limits.jobs.max(1) as u64).min(total) as usize;
    let counter = AtomicU64::new(0);
    let stopped = AtomicBool::new(false);

    let worker = |offset: u64| {
        let mut found = Vec::new();
        let mut mask = offset;
        while mask < total {
            if stopped.load(Ordering::Relaxed) {
                break;
            }
            let seen = counter.fetch_add(1, Ordering::Relaxed);
            if limits.max_candidates.is_some_and(|max| seen >= max) {
                stopped.store(true, Ordering::Relaxed);
                break;
            }
            let candidate = build(mask);
            if accept(&candidate) {
                found.push(candidate);
            }
            mask += jobs as u64;
        }
        found
    };

    let mut found: Vec<S> = if jobs <= 1 {
        worker(0)
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs as u64)
                .map(|offset| scope.spawn(move || worker(offset)))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        })
    };
    found.sort();
    found.dedup();
    let examined = counter.load(Ordering::Relaxed);
    let complete = !stopped.load(Ordering::Relaxed);
    Outcome {
        found,
        candidates: if complete { total } else { examined.min(total) },
        complete,
    }
}

/// Every proper subset of `items`, smallest masks first.
pub(crate) fn proper_subsets<T: Copy>(items: Vec<T>) -> impl Iterator<Item = Vec<T>> {
    let full: u64 = (1u64 << items.len()) - 1;
    (0..full).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, x)| *x)
            .collect()
    })
}
