use alloc::boxed::Box;

use crate::solver::ElasticaSolution;

/// Result alias used throughout the crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong in the numerical pipeline.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument is outside the range where the operation is defined.
    #[error("{name} = {value}, expected {expected}")]
    Domain {
        /// Argument name.
        name: &'static str,
        /// Offending value.
        value: f64,
        /// Human-readable admissible range.
        expected: &'static str,
    },
    /// A tangent-angle sequence decreases, so the arc is not convex.
    #[error("tangent angle decreases at sample {index}")]
    NonMonotone {
        /// First sample whose angle is below its predecessor.
        index: usize,
    },
    /// A vertex turns clockwise.
    #[error("polygon is not convex at vertex {index}")]
    NonConvex {
        /// Offending vertex.
        index: usize,
    },
    /// A polygon that cannot represent a convex body.
    #[error("degenerate polygon: {reason}")]
    Degenerate {
        /// What is wrong with it.
        reason: &'static str,
        /// Vertex where the problem was detected.
        index: usize,
    },
    /// The polygon is too coarse for its discrete curvature to mean anything.
    #[error("max turning angle {max_turning} rad exceeds {limit} rad")]
    CoarseSampling {
        /// Largest turning angle found.
        max_turning: f64,
        /// Refusal threshold.
        limit: f64,
    },
    /// Adaptive quadrature stopped before meeting its tolerance.
    #[error("quadrature did not converge (estimated error {est_error:e})")]
    Quadrature {
        /// Error estimate at termination.
        est_error: f64,
    },
    /// The target of a monotone inversion is not bracketed.
    #[error("target {target} not bracketed by [{lo}, {hi}]")]
    Bracket {
        /// Requested value.
        target: f64,
        /// Function value at the low end.
        lo: f64,
        /// Function value at the high end.
        hi: f64,
    },
    /// The requested arc length cannot join the two contact points.
    #[error("length {length} is below the chord bound {chord}")]
    InfeasibleLength {
        /// Requested length.
        length: f64,
        /// Chord between the two contact points.
        chord: f64,
    },
    /// The discrete solver ran out of iterations; `best` is the last iterate.
    #[error("solver did not converge in {iterations} inner iterations")]
    NonConvergence {
        /// Inner iterations spent.
        iterations: usize,
        /// Best iterate found.
        best: Box<ElasticaSolution>,
    },
    /// The pendulum trajectory reached a point where its curvature vanishes.
    #[error("pendulum stalled at s = {s}, theta = {theta}")]
    TurningPoint {
        /// Arc length reached.
        s: f64,
        /// Angle reached.
        theta: f64,
    },
    /// The pendulum trajectory did not reach `theta = pi` within the length budget.
    #[error("length budget {l_max} exhausted at theta = {theta}")]
    LengthExhausted {
        /// The budget.
        l_max: f64,
        /// Angle reached.
        theta: f64,
    },
    /// The shooting root find ended with residuals (length, closure) above tolerance.
    #[error("shooting did not converge, residuals ({0:e}, {1:e})")]
    NewtonDivergence(f64, f64),
}
