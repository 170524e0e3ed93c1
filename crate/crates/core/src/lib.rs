//! Elastic energy of planar convex bodies under an inradius constraint.
//!
//! The crate builds the optimal domains for the problem
//! `min { E(Ω) : Ω convex, r(Ω) ≥ 1 }`, where `E` is half the integral of the
//! squared boundary curvature, evaluates the six geometric functionals
//! `E, P, A, D, R, r` on discrete convex bodies, and provides the numerical
//! machinery (singular quadrature, a discrete constrained elastica solver, a
//! pendulum shooting solver) used to check the closed-form results.
//!
//! Everything here is a pure function of its inputs. The crate is `no_std`
//! and only needs `alloc`; file formats and the command line live in the
//! companion `elastica-cli` crate.

#![cfg_attr(not(test), no_std)]
#![warn(missing_docs)]
// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod analysis;
mod error;
pub mod geom;
mod math;
pub mod optimal_arc;
pub mod quadrature;
pub mod search;
pub mod solver;

pub use error::{Error, Result};
pub use geom::{ConvexBody, FunctionalsReport, Point, TangentAngleArc};
pub use optimal_arc::{OptimalArc, OptimalArcSpec, OptimalDomain};
