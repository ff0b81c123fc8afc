use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("box {0} is out of range (pyramid has {1} boxes)")]
    BoxOutOfRange(usize, usize),
    #[error("k = {0} exceeds the top highest weight {1}")]
    WeightOutOfRange(String, String),
    #[error("partition is not admissible for {kind}: {reason}")]
    Inadmissible { kind: String, reason: String },
    #[error("{0} is not a highest weight of V")]
    NotHighestWeight(String),
    #[error("box pair ({0}, {1}) is not in the block required by this operator")]
    WrongBlock(usize, usize),
    #[error("{0} has grade <= 0; an element of positive grade is required")]
    GradeTooLow(String),
    #[error("coefficient of z^{0} lies below the truncation floor z^{1}")]
    BelowFloor(String, String),
    #[error("no z^-{0} coefficient is defined here: {1}")]
    BadOrder(String, String),
    #[error("the zero element has no graded symbol")]
    ZeroSymbol,
    #[error("centralizer element zeta_{i}^{{{j},{t}}} is zero")]
    ZeroZeta { i: usize, j: usize, t: usize },
    #[error("zeta index out of range: {0}")]
    ZetaIndex(String),
    #[error("odd grading is not supported: {0}")]
    OddGrading(String),
    #[error("singular matrix")]
    Singular,
    #[error("sign exponent {0} is not an integer")]
    HalfIntegerSign(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("unknown suite or check: {0}")]
    UnknownSuite(String),
}
