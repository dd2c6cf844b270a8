//! Exact convex hulls with checkable certificates, and Markov-principle
//! searches as fuel-bounded programs.
//!
//! * [`real_kernel`]: exact rationals and interval-refined computable reals.
//! * [`principles`]: sign searches justified only by a non-zero promise.
//! * [`geometry`]: orientation, squared line distance, half-planes.
//! * [`hull`]: gift wrapping in constructive and oracle modes, certificate
//!   checking, a brute-force reference hull, and the sign-encoding gadgets.
//! * [`batch`]: the same operations over many inputs, parallel when the
//!   `parallel` feature is enabled.

pub mod batch;
pub mod corpus;
pub mod geometry;
pub mod hull;
pub mod principles;
pub mod real_kernel;

pub use geometry::{Point2, SeparationWitness};
pub use hull::{ConvexityMode, HullCertificate, HullError, Polygon};
pub use real_kernel::{CReal, Fuel, Rat};
