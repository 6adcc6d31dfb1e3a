use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {0} exceeds the cap of {1}")]
    DegreeCap(usize, usize),
    #[error("group order {0} exceeds the cap of {1}")]
    OrderCap(String, usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("intractable: {0}")]
    Intractable(String),
    #[error("unclassifiable: {0}")]
    Unclassifiable(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

impl Error {
    /// Stable short code used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::DegreeMismatch(..) => "degree_mismatch",
            Error::DegreeCap(..) => "degree_cap",
            Error::OrderCap(..) => "order_cap",
            Error::Precondition(_) => "precondition",
            Error::InvalidInput(_) => "invalid_input",
            Error::BudgetExhausted(_) => "budget_exhausted",
            Error::Infeasible(_) => "infeasible",
            Error::Intractable(_) => "intractable",
            Error::Unclassifiable(_) => "unclassifiable",
            Error::VerificationFailed(_) => "verification_failed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
