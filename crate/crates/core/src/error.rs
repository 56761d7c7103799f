use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid point on L: r = {r}, phi = {phi}")]
    InvalidPoint { r: f64, phi: f64 },

    #[error("|z| = {modulus} is outside the radius {radius}")]
    OutOfRadius { modulus: f64, radius: f64 },

    #[error("invalid germ: {0}")]
    InvalidGerm(String),

    #[error("germ with k = {k} is not invertible (k must be 1)")]
    NotInvertible { k: u32 },

    #[error("the zero series has no support")]
    NoSupport,

    #[error("angle {0} has no rationality declaration")]
    UndecidableAngle(f64),

    #[error("resonance of exponent {beta} against the angle is not decidable")]
    ResonanceUndeclared { beta: f64 },

    #[error("corner data is not normalized: {0}")]
    NotNormalized(String),

    #[error("point (r = {r}, phi = {phi}) lies outside the computed extension")]
    OutsideExtension { r: f64, phi: f64 },

    #[error("envelope needs at least {needed} states, got {got}")]
    InsufficientSteps { needed: usize, got: usize },

    #[error("certificate window t_{k} underflowed")]
    WindowEmpty { k: usize },

    #[error("evaluation point coincides with the pole")]
    PoleCoincidence,

    #[error("bound violated: {0}")]
    BoundViolated(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
