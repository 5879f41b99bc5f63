use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `pair_prime_power` was asked for a power of `(u, u)`.
    #[error("pair-power component requires two distinct variables")]
    InvalidPrimePair,

    /// A generator of degree other than two where an edge ideal was expected.
    #[error("not an edge ideal: generator {generator} has degree {degree}")]
    NotAnEdgeIdeal { generator: String, degree: usize },

    /// A desk-scale cap was exceeded; raise the limit to proceed.
    #[error("{what}: needed {needed}, limit is {limit}")]
    ResourceLimit {
        what: &'static str,
        limit: usize,
        needed: usize,
    },

    /// An operation that requires `p1+p6` maximal got an un-normalized vector.
    #[error("exponent vector must be normalized (p1+p6 maximal among opposite-pair sums)")]
    NormalizationRequired,

    /// `unique_balanced_solution` outside the balanced stratum.
    #[error("balanced-case formulas require p1+p6 = 2+p2+p5 = 2+p3+p4 on a normalized vector")]
    BalancedCaseOnly,

    /// The unit ideal has no Stanley-Reisner complex.
    #[error("the unit ideal corresponds to the void complex")]
    VoidComplex,

    /// A pair-exponent matrix that is not symmetric with zero diagonal.
    #[error("invalid pair-exponent matrix: {0}")]
    InvalidPairMatrix(String),

    /// Malformed textual input (exponent vectors, etc.).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
