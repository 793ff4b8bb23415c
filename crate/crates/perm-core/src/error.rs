use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image array of length {degree} is not a bijection")]
    NotBijective { degree: usize },
    #[error("point out of range for degree {degree}")]
    PointOutOfRange { degree: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("empty generator list")]
    NoGenerators,
    #[error("enumeration bound {bound} exceeded after {partial} elements")]
    BoundExceeded { bound: usize, partial: usize },
    #[error("orbit of {point} exceeded cap {cap}")]
    OrbitCapExceeded { point: u32, cap: usize },
    #[error("the given element set is not closed under multiplication")]
    NotASubgroup,
    #[error("{0}")]
    Unsupported(String),
}
