use thiserror::Error;

/// Errors produced by the arithmetic layers and the claim checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inversion mod p^e failed because the value shares the factor `p`
    /// with the modulus.
    #[error("{value} is not invertible mod {modulus}: divisible by {p}")]
    NotInvertible {
        value: String,
        p: u64,
        modulus: u64,
    },

    /// Jacobi symbol lower argument must be positive and odd.
    #[error("jacobi symbol is undefined for lower argument {n}: must be positive and odd")]
    BadJacobiArgument { n: String },

    /// Residue rings are built over odd prime powers only.
    #[error("{p} is not an odd prime")]
    NotOddPrime { p: u64 },

    /// Residue exponents outside the supported range.
    #[error("residue exponent must be 1, 2 or 3, got {e}")]
    BadExponent { e: u32 },

    /// A checker was handed a parameter it cannot work with
    /// (as opposed to one excluded by an applicability condition).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A congruence claim needs a prime > 3.
    #[error("{p} is not a prime greater than 3")]
    NotPrime { p: u64 },

    /// Unrecognized claim id in a sweep request.
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    /// Unrecognized weight kind.
    #[error("unknown weight kind `{0}`")]
    UnknownWeight(String),

    /// Quadratic extension towers need a nonzero discriminant.
    #[error("tower discriminant must be nonzero")]
    ZeroDiscriminant,
}

pub type Result<T> = std::result::Result<T, Error>;
