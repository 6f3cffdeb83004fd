use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("cannot embed Q(ζ_{order}) into Q(ζ_{target}): {order} does not divide {target}")]
    NotDivisible { order: u32, target: u32 },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },
    #[error("{0} is not a {1}-core")]
    NotACore(String, usize),
    #[error("core mismatch: component {component} has {k}-core {found}, expected {expected}")]
    CoreMismatch { component: usize, k: usize, found: String, expected: String },
    #[error("dimension vector {0} is not in E({1},{2},{3})")]
    NotInE(String, usize, usize, usize),
    #[error("core tuple {0} is not in (C_{1})^{2}[≡{3},≤{3}]")]
    NotACoreTuple(String, usize, usize, usize),
    #[error("parameters are not smooth for n = {0}")]
    NotSmooth(usize),
    #[error("k-parameters must sum to zero (sum is {0})")]
    KSumNonzero(String),
    #[error("transported parameters do not sum to zero (sum is {0}); index convention bug")]
    TransportSum(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{k1} does not divide {k2}")]
    Divisibility { k1: usize, k2: usize },
    #[error("scaling factor must be invertible")]
    ZeroScale,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
