use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("modulus must be positive, found {0}")]
    NonPositiveModulus(String),

    #[error("generator {0} is the zero vector")]
    ZeroGenerator(usize),

    #[error("semigroup is not pointed: nonnegative kernel element ({})", witness.join(", "))]
    NotPointed { witness: Vec<String> },

    #[error("direct mode requires a torsion-free presentation ({0} torsion rows present)")]
    TorsionPresent(usize),

    #[error("negative exponent at index {0}")]
    NegativeExponent(usize),

    #[error("value does not fit in a machine integer: {0}")]
    Overflow(String),

    #[error("degree cap {cap} exceeded (element of 1-norm {norm})")]
    CapExceeded { cap: u64, norm: u64 },

    #[error("enumeration cap exceeded: {what} needs {needed} candidates, cap is {cap}")]
    EnumerationCap {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("generator index {0} assigned to more than one block")]
    IndexOverlap(usize),

    #[error("basis is not minimal")]
    NotMinimal,
}

pub type Result<T> = std::result::Result<T, Error>;
