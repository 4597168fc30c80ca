use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field degree {0} outside the supported range 1..=32")]
    DegreeOutOfRange(u32),

    #[error("degree {degree} needs 2^{degree}-entry tables; largest supported table degree is {limit}")]
    TableTooLarge { degree: u32, limit: u32 },

    #[error("modulus {modulus:#x} has degree {actual}, expected {expected}")]
    ModulusDegree {
        modulus: u64,
        expected: u32,
        actual: u32,
    },

    #[error("modulus {0:#x} is reducible over GF(2)")]
    Reducible(u64),

    #[error("modulus {modulus:#x} is irreducible but not primitive: x has order {order}, not {expected}")]
    NotPrimitive {
        modulus: u64,
        order: u64,
        expected: u64,
    },

    #[error("trace to GF(2^{sub}) requires {sub} | {ext}")]
    TraceDegree { sub: u32, ext: u32 },

    #[error("element {elem:#x} does not lie in the subfield GF(2^{ext})")]
    NotInSubfield { elem: u32, ext: u32 },

    #[error("delta must be +1 or -1, got {0}")]
    InvalidDelta(i64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("shift entry {index} = {value} outside Z_{modulus}")]
    ShiftOutOfRange {
        index: usize,
        value: u32,
        modulus: u32,
    },

    #[error("{what}: expected {expected}, got {actual}")]
    LengthMismatch {
        what: &'static str,
        expected: u64,
        actual: u64,
    },

    #[error("relative trace of alpha^{0} vanished; field tables are inconsistent")]
    ZeroRelativeTrace(u64),

    #[error("phase shift {tau} outside [1, {period})")]
    TauOutOfRange { tau: u64, period: u64 },

    #[error("phase shift {tau}: {matched} autocorrelation cases matched, expected exactly one")]
    CaseSplit { tau: u64, matched: usize },

    #[error("k = {k} exceeds the size cap {cap}")]
    ResourceCap { k: u32, cap: u32 },

    #[error("cannot parse sequence: {0}")]
    Parse(String),
}
