//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// g < -1/4 in one dimension: the inverse-square attraction has no
    /// ground state there and beta would be complex.
    #[error("coupling g = {0} is below -1/4 (inverse-square collapse regime)")]
    CouplingCollapse(f64),

    /// beta < 1/2 would select the negative root of g = beta(beta - 1).
    #[error("exponent beta = {0} is below 1/2 and would select the non-physical root")]
    NonPhysicalRoot(f64),

    /// The D-dimensional family is defined for nonnegative two-body strength.
    #[error("coupling g = {0} must be nonnegative for the D-dimensional family")]
    NegativeCoupling(f64),

    #[error("exponent beta = {0} must be nonnegative for the D-dimensional family")]
    NegativeExponent(f64),

    #[error("space dimension D = {0} must be at least 2")]
    DimensionTooSmall(u32),

    #[error("{context}: particle count N = {n} must be at least {min}")]
    TooFewParticles {
        context: &'static str,
        n: u32,
        min: u32,
    },

    #[error("{name} = {value} must be positive")]
    NonPositive { name: &'static str, value: f64 },

    /// The rescaled coupling handed to the (N-1)-body subsystem falls below
    /// the collapse threshold; the radicand of the exponent map is negative.
    #[error("rescaled-coupling radicand {0} is negative (subsystem coupling collapses)")]
    RescaledCouplingCollapse(f64),

    #[error("coordinates must be strictly increasing with at least two entries")]
    UnorderedConfiguration,

    #[error("configuration has {got} coordinates, expected {expected}")]
    WrongCoordinateCount { got: usize, expected: usize },

    #[error("pair separation {sep:e} is below the floor {floor:e}")]
    SeparationTooSmall { sep: f64, floor: f64 },

    #[error("finite-difference step h = {0} must be positive")]
    BadStep(f64),

    #[error("minimum pair separation {sep:e} must exceed 10*h = {limit:e}")]
    StepTooLarge { sep: f64, limit: f64 },

    #[error("could not sample an admissible configuration after {0} attempts")]
    SamplingExhausted(u32),

    #[error("need at least {min} samples, got {got}")]
    TooFewSamples { got: usize, min: usize },

    #[error(
        "eigenvalue moved by {delta:e} relative between grid refinements, above the {limit:e} limit"
    )]
    NoConvergence { delta: f64, limit: f64 },

    #[error("invalid radial domain: x_min = {x_min}, x_max = {x_max}, grid points = {points}")]
    BadRadialDomain {
        x_min: f64,
        x_max: f64,
        points: usize,
    },

    #[error("probe inputs must be non-empty, equal-length lists of positive numbers")]
    BadProbeInput,

    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
}
