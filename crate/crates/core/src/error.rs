use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree n={0} is outside the supported range 2..=30")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#x} does not have degree {n}")]
    WrongModulusDegree { n: u32, modulus: u64 },
    #[error("modulus {0:#x} is reducible over GF(2)")]
    ReducibleModulus(u64),
    #[error("zero has no negative powers")]
    ZeroToNegativePower,
    #[error("exponent {exponent} is outside [1, {max}]")]
    ExponentOutOfRange { exponent: u64, max: u64 },
    #[error("d1 == d2 = {0} gives the zero function")]
    DegenerateBinomial(u64),
    #[error("truth table has {got} entries, expected {expected}")]
    TableLength { got: usize, expected: usize },
    #[error("table entry {value:#x} does not fit in GF(2^{n})")]
    TableValue { value: u32, n: u32 },
    #[error("exponent {0} has 2-adic weight above 2; only quadratic terms are supported")]
    NotQuadratic(u64),
    #[error("{0} is only defined for a binomial")]
    NotBinomial(&'static str),
    #[error("{0} requires an even extension degree")]
    OddDegree(&'static str),
    #[error("{what} at n={n} exceeds the default resource gate; pass the long-run flag")]
    ResourceGate { what: &'static str, n: u32 },
    #[error("p-adic precision {0} is too small (need at least 2)")]
    Precision(u32),
    #[error("modulus registry has no entry for n={0}")]
    MissingRegistryEntry(u32),
    #[error("malformed modulus registry line {line}")]
    RegistrySyntax { line: usize },
    #[error("fields of different degree ({0} vs {1}) are not isomorphic")]
    DegreeMismatch(u32, u32),
}
