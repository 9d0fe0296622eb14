//! Simulator and analysis toolkit for high-dimensional two-photon
//! orbital-angular-momentum (OAM) entanglement from spontaneous parametric
//! down-conversion (SPDC).
//!
//! The crate models the measurement side of an SPDC angular/OAM experiment
//! at desk scale:
//!
//! - [`phasematch`] — the far-field sinc² intensity model of the
//!   down-converted ring, its physical parameterization and least-squares
//!   fitting from noisy radial profiles.
//! - [`types`] — spiral spectra, angular slit masks, analyzer modes,
//!   coincidence curves and the other shared domain types.
//! - [`projection`] — projective coincidence amplitudes of the two-photon
//!   state onto azimuthal analyzer modes, with a quadrature oracle.
//! - [`analysis`] — spiral bandwidth, Lorentzian spectrum fits, angular
//!   peak widths, Fourier-relation predictions, effective dimensionality.
//! - [`concurrence`] — angular two-qubit correlation matrices, OAM
//!   interference visibility and Wootters concurrence.
//! - [`etendue`] — étendue budgets, transverse mode counts and the
//!   Klyshko detection-matching check.
//! - [`synthetic`] — seeded, reproducible Poisson noise for fit and
//!   pipeline testing.
//! - [`io`], [`config`], [`pipeline`] — CSV/JSON serialization, scenario
//!   configuration and the figure-reproduction pipelines.

pub mod analysis;
pub mod concurrence;
pub mod config;
pub mod error;
pub mod etendue;
pub mod io;
pub mod phasematch;
pub mod pipeline;
pub mod projection;
pub mod synthetic;
pub mod types;

pub use error::{Error, Result};
pub use types::{
    AngularMask, CoincidenceCurve, OamSpectrum, ProjectionMode, RadialProfile, ScanLabel, Slit,
    TwoPhotonState,
};
