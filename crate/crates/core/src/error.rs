use thiserror::Error;

/// Failures of the exact arithmetic layer (fields, polynomials, rational
/// functions, Möbius transformations).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("characteristic {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{k} exceeds the supported size")]
    FieldTooLarge { p: u64, k: u32 },
    #[error("encoding {value} is out of range for a field of order {order}")]
    OutOfRange { value: u64, order: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("singular Möbius transformation (determinant zero)")]
    SingularMoebius,
}
