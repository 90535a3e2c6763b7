use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("generator indices ({p}, {q}) are invalid: need 1 <= p < q <= 9")]
    InvalidGenerator { p: u8, q: u8 },

    #[error("generator s{p}{q} is out of range for degree {degree}")]
    IndexOutOfRange { p: u8, q: u8, degree: u8 },

    #[error("unsupported degree {0}")]
    UnsupportedDegree(u8),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u8, u8),

    #[error("word contains the top generator s1{0}")]
    ContainsTop(u8),

    #[error("generator {0} is not part of the presentation")]
    ForeignGenerator(String),

    #[error("unsupported presentation `{0}`")]
    UnsupportedPresentation(String),

    #[error("inconsistent identification: {0}")]
    Inconsistency(String),

    #[error("walk leaves the trusted region at letter {index}")]
    RadiusExceeded { index: usize },

    #[error("radius {have} is too small, need at least {need}")]
    RadiusTooSmall { have: u32, need: u32 },

    #[error("cannot decide: {0}")]
    Undecided(String),

    #[error("geometry check failed: {0}")]
    Geometry(String),

    #[error("not a closed surface: {0}")]
    NotASurface(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;
