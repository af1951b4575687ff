use thiserror::Error;

/// Errors raised by the verification engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{m} exceeds the bound {bound}")]
    FieldTooLarge { p: u64, m: u32, bound: u64 },
    #[error("invalid field element code {code} for GF({q})")]
    InvalidElement { code: u32, q: u32 },
    #[error("division by zero in GF({q})")]
    DivisionByZero { q: u32 },
    #[error("{n} does not divide the extension degree {m}")]
    NotADivisor { n: u32, m: u32 },
    #[error("group of order {order} exceeds the bound {bound}")]
    GroupTooLarge { order: u64, bound: u64 },
    #[error("element {0} is not in the group")]
    NotAnElement(u64),
    #[error("subgroup is not contained in the group")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("matrix determinant is not 1")]
    DeterminantNotOne,
    #[error("q = {0} is out of range (need q > 3)")]
    QTooSmall(u64),
    #[error("Dickson case {case} does not apply to q = {q}")]
    CaseNotApplicable { case: u8, q: u64 },
    #[error("catalog inconsistency: {0}")]
    CatalogInconsistency(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors caused by a configured resource bound.
    pub fn is_resource_bound(&self) -> bool {
        matches!(
            self,
            Error::FieldTooLarge { .. } | Error::GroupTooLarge { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
