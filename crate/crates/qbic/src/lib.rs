//! Resonance spectrum of a quantum dot side-coupled to a two-leg
//! tight-binding ladder.
//!
//! The ladder's rung coupling splits the spectrum into two cosine
//! channels whose bands overlap for `|t'| < |t|`. A dot level coupled to
//! both channels turns the would-be van Hove bound state just outside
//! one band edge into a resonance with an anomalously small width
//! (proportional to `g^6`) whose real energy sits inside the other
//! band — a quasi-bound state in continuum (QBIC).
//!
//! The discrete eigenvalues solve a two-radical dispersion equation.
//! Eliminating both radicals yields a degree-12 polynomial whose root
//! set is the union of the solutions over all four branch choices, i.e.
//! over all four Riemann sheets of the energy surface. The pipeline is
//!
//! 1. [`poly::dispersion_polynomial`] — degree-12 polynomial, assembled
//!    by exact coefficient convolution,
//! 2. [`roots::find_roots`] — Aberth–Ehrlich simultaneous iteration,
//! 3. [`spectrum::classify_root`] — branch-resolved residual selects the
//!    wave numbers `K±` and the Riemann sheet,
//! 4. [`spectrum::newton_refine`] — Newton polish on the sheet-fixed
//!    transcendental equation, well conditioned even where the
//!    polynomial is not,
//!
//! cross-validated by [`dynamics`], an independent finite-ladder
//! time-evolution oracle, and scanned by [`sweep`].
//!
//! Core numerics are generic over the scalar via `num-traits`; `f64`
//! aliases are exported at the crate root.

pub mod dynamics;
pub mod model;
pub mod poly;
pub mod roots;
pub mod spectrum;
pub mod sweep;
pub mod wavefunction;

/// Complex double, the working scalar of the concrete solvers.
pub type C64 = num_complex::Complex<f64>;

pub type ModelParams = model::ModelParams<f64>;
pub type BandEdges = model::BandEdges<f64>;
pub type Eigenstate = spectrum::Eigenstate<f64>;
pub type OneChannelState = spectrum::OneChannelState<f64>;
pub type SolverConfig = spectrum::SolverConfig<f64>;
pub type WavefunctionProfile = wavefunction::WavefunctionProfile<f64>;
pub type SweepRecord = sweep::SweepRecord<f64>;
pub type ScalingFit = sweep::ScalingFit<f64>;

pub use model::Channel;
pub use spectrum::{SheetId, StateKind};
