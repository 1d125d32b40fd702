//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NonPrimeP(u64),
    #[error("modulus polynomial is reducible over the residue field")]
    ReducibleModulus,
    #[error("ring of size {size} exceeds the bound {bound}")]
    RingTooLarge { size: u64, bound: u64 },
    #[error("division requires a monic divisor")]
    NonMonicDivisor,
    #[error("the zero polynomial has no reciprocal")]
    ZeroPolynomial,
    #[error("length n = {n} is not coprime to the characteristic p = {p}")]
    NotCoprimeLength { n: u64, p: u64 },
    #[error("element is not a unit")]
    NotAUnit,
    #[error("polynomial does not divide the target exactly")]
    NotADivisor,
    #[error("q = {q} is not coprime to the modulus n = {n}")]
    NotCoprime { n: u64, q: u64 },
    #[error("modulus n = {0} is too small (need n >= 2)")]
    ModulusTooSmall(u64),
    #[error("m = {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("operation is not defined for this shift constant lambda")]
    UnsupportedLambda,
    #[error("delta^n does not equal the requested lambda")]
    DeltaPowerMismatch,
    #[error("no such code exists (existence verdict is negative)")]
    NoSuchCode,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("component count mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("component code is not principal")]
    NonPrincipalComponent,
    #[error("malformed input: {0}")]
    MalformedDescriptor(String),
    #[error("census grid of {rows} rows exceeds the bound {bound}")]
    GridTooLarge { rows: u64, bound: u64 },
    #[error("instance of size {size} exceeds the oracle bound {bound}")]
    TooLargeForOracle { size: u128, bound: u128 },
}

impl Error {
    /// Process exit code the CLI maps this error to: 3 for malformed input,
    /// 2 for every violated precondition. (0 is success; 4 is reserved for
    /// internal invariant breaches, which surface as panics.)
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::MalformedDescriptor(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
