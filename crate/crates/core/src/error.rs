use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient {coefficient} is not divisible by {divisor}")]
    NotDivisible { coefficient: String, divisor: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("diagram has {count} crossings, above the cap of {cap}")]
    TooManyCrossings { count: usize, cap: usize },

    #[error("the unnormalized bracket of the empty diagram is undefined")]
    EmptyDiagram,

    #[error("A-exponent {0} does not map to an integral s-exponent")]
    NonIntegralExponent(i64),

    #[error("integrality violation: {0}")]
    IntegralityViolation(String),

    #[error("color {color} on component {component} is out of range for p = {p}")]
    InvalidColor { component: usize, color: u32, p: u64 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
