use crate::partition::Node;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("partition {lambda:?} is not {p}-regular")]
    NotRegular { lambda: String, p: u32 },
    #[error("the empty partition is not allowed here")]
    EmptyPartition,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("node ({},{}) is not removable", node.row, node.col)]
    NotRemovable { node: Node },
    #[error("node ({},{}) is not addable", node.row, node.col)]
    NotAddable { node: Node },
    #[error("cannot attach first part: n - |mu| = {first} < mu_1 = {mu1}")]
    FirstPartTooSmall { first: i64, mu1: u32 },
    #[error("invalid partition literal {0:?}")]
    InvalidPartition(String),
    #[error("m = {0} is out of range")]
    MOutOfRange(i64),
    #[error("m must be nonnegative, got {0}")]
    NegativeM(i64),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("a-mode 'oracle' requires a supplied a value")]
    MissingA,
    #[error("oracle out of range: {what} = {count} exceeds cap {cap}")]
    OracleOutOfRange {
        what: &'static str,
        count: u128,
        cap: u128,
    },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn not_regular(lambda: &crate::partition::Partition, p: &crate::partition::PrimeChar) -> Self {
        Error::NotRegular {
            lambda: lambda.to_string(),
            p: p.p(),
        }
    }
}
