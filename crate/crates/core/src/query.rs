//! Consistent query answering over the repaired databases of one class.

use crate::aic::enumerate;
use crate::algebra::{apply, apply_rev, Satisfiable};
use crate::engine::Limits;
use crate::error::Result;
use crate::model::{AicProgram, Database, Literal, RepairClass, RevisionProgram};
use crate::revision::{enumerate_rev, RevisionClass};

/// Three-valued answer, plus the case where the class is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CqaStatus {
    True,
    False,
    Unknown,
    NoRepairs,
}

impl CqaStatus {
    pub fn name(self) -> &'static str {
        match self {
            CqaStatus::True => "true",
            CqaStatus::False => "false",
            CqaStatus::Unknown => "unknown",
            CqaStatus::NoRepairs => "no-repairs",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CqaVerdict {
    pub query: Vec<Literal>,
    pub status: CqaStatus,
    /// Number of repaired databases.
    pub witness_count: usize,
    /// The repaired databases, in the order of the repairs that produced them.
    pub witnesses: Vec<Database>,
    /// False when enumeration stopped early; the status then covers only
    /// the repairs found.
    pub complete: bool,
}

fn verdict(query: &[Literal], witnesses: Vec<Database>, complete: bool) -> CqaVerdict {
    let holds = witnesses.iter().filter(|db| query.satisfied_by(db)).count();
    let status = match (witnesses.len(), holds) {
        (0, _) => CqaStatus::NoRepairs,
        (n, h) if h == n => CqaStatus::True,
        (_, 0) => CqaStatus::False,
        _ => CqaStatus::Unknown,
    };
    CqaVerdict {
        query: query.to_vec(),
        status,
        witness_count: witnesses.len(),
        witnesses,
        complete,
    }
}

/// Evaluates the conjunction `query` in every `I ∘ U` for `U` in `class`.
pub fn cqa(
    db: &Database,
    eta: &AicProgram,
    class: RepairClass,
    query: &[Literal],
    limits: &Limits,
) -> Result<CqaVerdict> {
    let report = enumerate(db, eta, class, limits)?;
    let repaired = report.repairs.iter().map(|u| apply(db, u)).collect();
    Ok(verdict(query, repaired, report.complete))
}

/// Revision-program counterpart of [`cqa`].
pub fn cqa_rev(
    p: &RevisionProgram,
    db: &Database,
    class: RevisionClass,
    query: &[Literal],
    limits: &Limits,
) -> Result<CqaVerdict> {
    let report = enumerate_rev(p, db, class, limits)?;
    let repaired = report.repairs.iter().map(|e| apply_rev(db, e)).collect();
    Ok(verdict(query, repaired, report.complete))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_instance, parse_literals, Program};

    fn aic(text: &str) -> (Database, AicProgram) {
        let inst = parse_instance(text).unwrap();
        match inst.program {
            Program::Aic(p) => (inst.db, p),
            _ => panic!(),
        }
    }

    fn ask(text: &str, class: RepairClass, q: &str) -> CqaVerdict {
        let (db, eta) = aic(text);
        let query = parse_literals(eta.universe(), q).unwrap();
        cqa(&db, &eta, class, &query, &Limits::default()).unwrap()
    }

    #[test]
    fn two_founded_repairs_leave_atoms_unknown() {
        let text = "db: a, b.\naic: a, b -> -a | -b.";
        let v = ask(text, RepairClass::FoundedRepair, "a");
        assert_eq!(v.status, CqaStatus::Unknown);
        assert_eq!(v.witness_count, 2);
        assert_eq!(
            ask(text, RepairClass::FoundedRepair, "b").status,
            CqaStatus::Unknown
        );
        assert_eq!(
            ask(text, RepairClass::FoundedRepair, "a, b").status,
            CqaStatus::False
        );
    }

    #[test]
    fn unique_founded_repair_decides() {
        let text = "db: .\naic: not a -> +a. not b, c -> +b. b, not c -> +c.";
        assert_eq!(
            ask(text, RepairClass::FoundedRepair, "a").status,
            CqaStatus::True
        );
        assert_eq!(
            ask(text, RepairClass::FoundedRepair, "b").status,
            CqaStatus::False
        );
    }

    #[test]
    fn consistent_database_answers_from_itself() {
        let text = "db: a.\naic: a, b -> -a.";
        assert_eq!(ask(text, RepairClass::Repair, "a").status, CqaStatus::True);
        assert_eq!(
            ask(text, RepairClass::Repair, "not b").status,
            CqaStatus::True
        );
    }

    #[test]
    fn empty_class_is_reported() {
        let text = "db: a, b.\naic: a, b -> -a. a, not b -> -a. not a, b -> -b.";
        let v = ask(text, RepairClass::JustifiedRepair, "a");
        assert_eq!(v.status, CqaStatus::NoRepairs);
        assert_eq!(v.witness_count, 0);
    }
}
