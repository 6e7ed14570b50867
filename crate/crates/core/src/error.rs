//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by grid construction, solvers, and utility calculus.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain bounds must satisfy lower < upper, got [{lower}, {upper}]")]
    DomainOrder { lower: f64, upper: f64 },

    #[error("grid needs at least {min} points, got {got}")]
    TooFewPoints { got: usize, min: usize },

    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("non-finite value at index {index}: {value}")]
    NonFinite { index: usize, value: f64 },

    #[error("negative density value at index {index}: {value}")]
    NegativeDensity { index: usize, value: f64 },

    #[error("density mass must be positive and finite, got {mass}")]
    ZeroMass { mass: f64 },

    #[error("density mass {mass} is not 1 within {tol}")]
    NotNormalized { mass: f64, tol: f64 },

    #[error("values are not nondecreasing at index {index}")]
    NotMonotone { index: usize },

    #[error("utility {which} endpoint must be {expected}, got {got}")]
    BadEndpoint {
        which: &'static str,
        expected: f64,
        got: f64,
    },

    #[error("need at least {min} prospects, got {got}")]
    TooFewProspects { got: usize, min: usize },

    #[error("interior index must lie in 1..={max}, got {got}")]
    IndexOutOfRange { got: usize, max: usize },

    #[error("beta parameters must be positive, got alpha = {alpha}, beta = {beta}")]
    BadBetaParams { alpha: f64, beta: f64 },

    #[error("sample count must be at least 1")]
    EmptySample,

    #[error("moment orders must be positive and pairwise distinct")]
    InvalidMomentOrders,

    #[error("moment of order {order} target {value} lies outside the attainable open range ({low}, {high})")]
    InfeasibleMoment {
        order: u32,
        value: f64,
        low: f64,
        high: f64,
    },

    #[error("dual iteration stopped after {iterations} iterations with residual {residual:.3e}")]
    Nonconvergence { iterations: usize, residual: f64 },

    #[error("risk coefficient {gamma} on width {width} is effectively an impulse (|gamma|*width > 700)")]
    ImpulseRegime { gamma: f64, width: f64 },

    #[error("Jeffreys density requires a positive domain, got lower = {lower}")]
    JeffreysDomain { lower: f64 },

    #[error("utility point ({x}, {u}) outside the open domain or the open unit interval")]
    PointOutOfRange { x: f64, u: f64 },

    #[error("utility points must be strictly increasing in both x and u")]
    PointOrdering,

    #[error("utility-point and moment constraints cannot be mixed in one solve")]
    MixedConstraints,

    #[error("minimum cross-entropy requires a reference density")]
    MissingReference,

    #[error("reference density vanishes at node {index}")]
    ZeroReference { index: usize },

    #[error("surface is not nondecreasing along {axis} at flat index {index}")]
    SurfaceNotMonotone { axis: char, index: usize },

    #[error("attribute dominance boundary violated: {detail}")]
    DominanceBoundary { detail: String },

    #[error("mixed partial is significantly negative at flat index {index}: {value:.3e}")]
    NegativeMixedPartial { index: usize, value: f64 },

    #[error("denominator utility vanishes at conditioning value {at}")]
    ZeroDenominator { at: f64 },

    #[error("value {value} does not lie on a grid node")]
    OffGrid { value: f64 },

    #[error("grids do not match")]
    GridMismatch,

    #[error("marginal density vanishes on the grid interior at index {index}")]
    DegenerateMarginal { index: usize },

    #[error("multilinear edge weights must be nonnegative, got k_x = {k_x}, k_y = {k_y}")]
    NegativeWeight { k_x: f64, k_y: f64 },

    #[error("inputs do not come from a common utility surface: {detail}")]
    InconsistentInputs { detail: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
