use thiserror::Error;

/// Errors raised by model construction, the semantics engines and the text front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("duplicate atom `{0}` in universe")]
    DuplicateAtom(String),

    #[error("literal `{0}` occurs more than once in the rule body")]
    DuplicateLiteral(String),

    #[error(
        "head action `{action}` violates the updatable condition: `{missing}` is not in the body"
    )]
    UpdatableConditionViolated { action: String, missing: String },

    #[error("revision rule has neither head nor body")]
    EmptyRevisionRule,

    #[error("update set is inconsistent (contains both +{0} and -{0})")]
    InconsistentUpdateSet(String),

    #[error("revision literal set is inconsistent (contains both in({0}) and out({0}))")]
    InconsistentRevisionSet(String),

    #[error("program is not normal (a rule has more than one head element)")]
    NotNormalProgram,

    #[error("revision program is not proper (a head literal is dual to a body literal)")]
    NotProperProgram,

    #[error("logic program rule is not simple (atom `{0}` occurs more than once)")]
    NotSimpleRule(String),

    #[error("universe has {atoms} atoms, exhaustive bound is {bound}")]
    UniverseTooLarge { atoms: usize, bound: usize },

    #[error("invalid limit: {0}")]
    InvalidLimit(String),

    #[error("{line}:{col}: syntax error, expected {expected}")]
    Syntax {
        line: usize,
        col: usize,
        expected: String,
    },

    #[error("{line}:{col}: in rule `{rule}`: {cause}")]
    InRule {
        line: usize,
        col: usize,
        rule: String,
        cause: Box<Error>,
    },

    #[error("{line}:{col}: {message}")]
    Semantic {
        line: usize,
        col: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
