use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown group family `{0}`")]
    UnknownFamily(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("complex is not regular ({count} violation(s)); first: {first}")]
    NotRegular { count: usize, first: String },

    #[error("no section with representative endpoints: {0}")]
    NoSection(String),

    #[error("isotropy groupoid check failed: {0}")]
    Groupoid(String),

    #[error("integer overflow in exact lattice arithmetic")]
    Overflow,

    #[error("coefficient group has torsion {0:?}; only free coefficients are supported")]
    Torsion(Vec<u64>),

    #[error("module action is not a representation: {0}")]
    BadAction(String),

    #[error("chain model disagrees with the reference table: {0}")]
    ChainModel(String),

    #[error("unknown target group `{0}`")]
    UnknownTarget(String),

    #[error("structural group must be connected; {0} is not")]
    DisconnectedTarget(String),

    #[error("finite target of order {order} exceeds the brute-force bound {bound}")]
    TargetTooLarge { order: usize, bound: usize },

    #[error("representation space has {count} classes, above the materialization limit {limit}")]
    TooManyClasses { count: u128, limit: u128 },

    #[error("invalid chern window {lo}..{hi}")]
    InvalidWindow { lo: i64, hi: i64 },
}
