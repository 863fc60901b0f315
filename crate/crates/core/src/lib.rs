//! Database repair under active integrity constraints and revision programs.
//!
//! Every semantics is decided by exhaustive search over candidate update sets,
//! so instances are limited to a small number of atoms (see [`Limits`]).

pub mod aic;
pub mod algebra;
pub mod engine;
pub mod error;
pub mod lp;
pub mod model;
pub mod query;
pub mod revision;
pub mod syntax;
pub mod transforms;

pub use aic::{enumerate, RepairReport};
pub use algebra::{apply_revision, apply_update, entails, inertia_set, no_effect_set, Satisfiable};
pub use engine::{Limits, Report, DEFAULT_MAX_ATOMS, HARD_MAX_ATOMS, MAX_ATOMS_ENV};
pub use error::{Error, Result};
pub use lp::{LogicProgram, LpRule};
pub use model::{
    AicProgram, AicRule, Atom, Database, Dual, Literal, RepairClass, RevisionLiteral,
    RevisionProgram, RevisionRule, RevisionSet, Signed, Universe, UpdateAction, UpdateSet,
};
pub use query::{cqa, cqa_rev, CqaStatus, CqaVerdict};
pub use revision::{enumerate_rev, RevisionClass, RevisionReport};
pub use syntax::{parse_instance, Instance, Program};
pub use transforms::Shift;
