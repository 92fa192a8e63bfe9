//! Compilation of classical spin-model partition functions onto the 2D square
//! lattice, together with the exact machinery needed to verify each stage.
//!
//! The crate is organized in three layers:
//!
//! * ground-truth oracles: exhaustive enumeration of partition functions for
//!   Ising ([`brute::brute_force_z_ising`]) and clock/Potts models, plus the
//!   quantum-overlap reformulation ([`overlap`]) that must agree with them;
//! * an exact stabilizer layer: Pauli/tableau algebra ([`pauli`], [`tableau`]),
//!   a phase-exact graph-state simulator ([`graphsim`]) and exponential-sum
//!   amplitude queries ([`gauss`]), all over the exact ring [`ring::Cyclo8`];
//! * the compiler ([`synth`], [`layout`], [`branch`], [`lift`], [`reduce`])
//!   that turns an arbitrary-graph model into a 2D lattice instance evaluated
//!   by [`lattice`].
//!
//! Numeric code is generic over the floating scalar via [`scalar::Scalar`];
//! concrete `f64` aliases are exported at the crate root.

pub mod bits;
pub mod bra;
pub mod branch;
pub mod brute;
pub mod circuit;
pub mod cliff;
pub mod decorate;
pub mod error;
pub mod gauss;
pub mod graph;
pub mod graphsim;
pub mod json;
pub mod lattice;
pub mod layout;
pub mod lift;
pub mod model;
pub mod overlap;
pub mod pauli;
pub mod reduce;
pub mod ring;
pub mod scalar;
pub mod scaled;
pub mod synth;
pub mod tableau;

pub use error::Error;
pub use graph::Graph;
pub use scalar::Scalar;

/// `f64` instantiations of the scalar-generic types.
pub type ScaledComplex64 = scaled::ScaledComplex<f64>;
pub type IsingModel64 = model::IsingModel<f64>;
pub type ClockModel64 = model::ClockModel<f64>;
pub type LocalBra64 = bra::LocalBra<f64>;
pub type ProductBra64 = bra::ProductBra<f64>;
pub type Ising2DInstance64 = lattice::Ising2DInstance<f64>;
pub type ReductionResult64 = reduce::ReductionResult<f64>;

/// `f32` instantiations, for callers that trade precision for footprint.
pub type ScaledComplex32 = scaled::ScaledComplex<f32>;
pub type IsingModel32 = model::IsingModel<f32>;
pub type ClockModel32 = model::ClockModel<f32>;
