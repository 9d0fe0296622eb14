//! Shared domain types: spiral spectra, angular masks, analyzer modes,
//! coincidence curves and radial intensity profiles.
//!
//! Unit conventions: angles are degrees at API boundaries (matching how
//! slit widths and rotations are quoted in the lab), radians internally;
//! lengths are meters. All types are immutable after construction.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default truncation of spiral spectra. Measurements scan |l| <= 20;
/// the extra margin avoids truncation bias in Fourier sums.
pub const DEFAULT_L_MAX: i32 = 30;

/// Normalization tolerance for states and probability vectors.
pub const NORM_TOL: f64 = 1e-9;

/// Two-photon amplitude distribution over OAM order l (the spiral
/// spectrum). Amplitudes `c_l` are indexed contiguously over
/// `l_min..=l_max` and normalized so that `sum |c_l|^2 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct OamSpectrum {
    l_min: i32,
    l_max: i32,
    amplitudes: Vec<Complex64>,
}

impl OamSpectrum {
    /// Build a spectrum from raw amplitudes for `l = l_min..`. The input is
    /// normalized; a zero or non-finite norm is rejected.
    pub fn from_amplitudes(l_min: i32, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::invalid_argument("spectrum needs at least one mode"));
        }
        let l_max = l_min + amplitudes.len() as i32 - 1;
        if l_min > 0 || l_max < 0 {
            return Err(Error::invalid_argument(format!(
                "spectrum range [{l_min}, {l_max}] must contain l = 0"
            )));
        }
        let norm_sq: f64 = amplitudes.iter().map(|c| c.norm_sqr()).sum();
        if !norm_sq.is_finite() || norm_sq <= 0.0 {
            return Err(Error::invalid_argument(
                "spectrum amplitudes must have a positive finite norm",
            ));
        }
        let norm = norm_sq.sqrt();
        let amplitudes = amplitudes.into_iter().map(|c| c / norm).collect();
        Ok(Self {
            l_min,
            l_max,
            amplitudes,
        })
    }

    /// Spectrum with Lorentzian probability weights
    /// `P_l ∝ 1 / (l^2 + gamma^2)`, `gamma = fwhm_l / 2`, over
    /// `l = -l_max..=l_max`. Amplitudes are the positive square roots
    /// (zero phase), so the spectrum is even in `l` by construction.
    pub fn lorentzian(fwhm_l: f64, l_max: i32) -> Result<Self> {
        if !(fwhm_l > 0.0) || !fwhm_l.is_finite() {
            return Err(Error::invalid_argument(format!(
                "fwhm_l must be positive and finite, got {fwhm_l}"
            )));
        }
        if l_max < 1 {
            return Err(Error::invalid_argument(format!(
                "l_max must be >= 1, got {l_max}"
            )));
        }
        let gamma_sq = (fwhm_l / 2.0).powi(2);
        let amplitudes = (-l_max..=l_max)
            .map(|l| {
                let w = 1.0 / ((l as f64).powi(2) + gamma_sq);
                Complex64::new(w.sqrt(), 0.0)
            })
            .collect();
        Self::from_amplitudes(-l_max, amplitudes)
    }

    /// Flat spectrum `c_l = 1/sqrt(2 l_max + 1)` over `l = -l_max..=l_max`.
    pub fn uniform(l_max: i32) -> Result<Self> {
        if l_max < 1 {
            return Err(Error::invalid_argument(format!(
                "l_max must be >= 1, got {l_max}"
            )));
        }
        let n = 2 * l_max as usize + 1;
        let c = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
        Self::from_amplitudes(-l_max, vec![c; n])
    }

    pub fn l_min(&self) -> i32 {
        self.l_min
    }

    pub fn l_max(&self) -> i32 {
        self.l_max
    }

    /// Number of modes in the spectrum.
    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    /// Amplitude `c_l`; zero outside the stored range.
    pub fn amplitude(&self, l: i32) -> Complex64 {
        if l < self.l_min || l > self.l_max {
            Complex64::new(0.0, 0.0)
        } else {
            self.amplitudes[(l - self.l_min) as usize]
        }
    }

    /// Probability weight `P_l = |c_l|^2`; zero outside the stored range.
    pub fn weight(&self, l: i32) -> f64 {
        self.amplitude(l).norm_sqr()
    }

    /// Iterate `(l, c_l)` over the stored range.
    pub fn iter(&self) -> impl Iterator<Item = (i32, Complex64)> + '_ {
        (self.l_min..=self.l_max).map(move |l| (l, self.amplitude(l)))
    }

    /// The weight vector `P_l` over the stored range.
    pub fn weights(&self) -> Vec<(i32, f64)> {
        (self.l_min..=self.l_max)
            .map(|l| (l, self.weight(l)))
            .collect()
    }
}

/// Two-photon state `sum_l c_l |l>_s |-l>_i`. The idler index is always
/// the negation of the signal index; the anti-correlation is structural
/// and not stored twice.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoPhotonState {
    spectrum: OamSpectrum,
}

impl TwoPhotonState {
    pub fn new(spectrum: OamSpectrum) -> Self {
        Self { spectrum }
    }

    pub fn spectrum(&self) -> &OamSpectrum {
        &self.spectrum
    }
}

impl From<OamSpectrum> for TwoPhotonState {
    fn from(spectrum: OamSpectrum) -> Self {
        Self::new(spectrum)
    }
}

/// One angular slit: an open arc of `width_deg` centered at `center_deg`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Slit {
    pub center_deg: f64,
    pub width_deg: f64,
}

impl Slit {
    pub fn new(center_deg: f64, width_deg: f64) -> Self {
        Self {
            center_deg,
            width_deg,
        }
    }
}

/// Slack for slit-overlap checks, in degrees. Rotations go through
/// `rem_euclid` and may wobble arc endpoints at float precision.
const OVERLAP_TOL_DEG: f64 = 1e-9;

/// An aperture of one or more non-overlapping angular slits.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularMask {
    slits: Vec<Slit>,
}

impl AngularMask {
    /// Validates that slit arcs are pairwise non-overlapping modulo 360°
    /// and that the total open arc does not exceed the full circle.
    pub fn new(slits: Vec<Slit>) -> Result<Self> {
        if slits.is_empty() {
            return Err(Error::invalid_argument("mask needs at least one slit"));
        }
        let mut total = 0.0;
        for s in &slits {
            if !s.center_deg.is_finite() || !(0.0..360.0).contains(&s.center_deg) {
                return Err(Error::invalid_argument(format!(
                    "slit center {} deg outside [0, 360)",
                    s.center_deg
                )));
            }
            if !s.width_deg.is_finite() || s.width_deg <= 0.0 || s.width_deg > 360.0 {
                return Err(Error::invalid_argument(format!(
                    "slit width {} deg outside (0, 360]",
                    s.width_deg
                )));
            }
            total += s.width_deg;
        }
        if total > 360.0 + OVERLAP_TOL_DEG {
            return Err(Error::invalid_argument(format!(
                "total open arc {total} deg exceeds 360"
            )));
        }
        // Sort arcs by start angle and check consecutive gaps, including
        // the wrap-around from the last arc back to the first.
        let mut arcs: Vec<(f64, f64)> = slits
            .iter()
            .map(|s| {
                let start = (s.center_deg - s.width_deg / 2.0).rem_euclid(360.0);
                (start, s.width_deg)
            })
            .collect();
        arcs.sort_by(|a, b| a.0.total_cmp(&b.0));
        for i in 0..arcs.len() {
            let (start, width) = arcs[i];
            let next_start = if i + 1 < arcs.len() {
                arcs[i + 1].0
            } else {
                arcs[0].0 + 360.0
            };
            if start + width > next_start + OVERLAP_TOL_DEG {
                return Err(Error::invalid_argument(
                    "slit arcs overlap modulo 360 degrees",
                ));
            }
        }
        Ok(Self { slits })
    }

    /// Full-circle aperture (one slit of width 360°).
    pub fn full_circle() -> Self {
        Self {
            slits: vec![Slit::new(180.0, 360.0)],
        }
    }

    /// Single slit centered at `center_deg`.
    pub fn single_slit(center_deg: f64, width_deg: f64) -> Result<Self> {
        Self::new(vec![Slit::new(center_deg.rem_euclid(360.0), width_deg)])
    }

    /// `n` equally spaced slits of equal width, the first centered at
    /// `first_center_deg`.
    pub fn n_slit(n: usize, width_deg: f64, spacing_deg: f64, first_center_deg: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid_argument("slit count must be >= 1"));
        }
        let slits = (0..n)
            .map(|k| {
                Slit::new(
                    (first_center_deg + k as f64 * spacing_deg).rem_euclid(360.0),
                    width_deg,
                )
            })
            .collect();
        Self::new(slits)
    }

    /// The four-slit analyzer used for tight angular correlations:
    /// equal slits at 90° spacing.
    pub fn four_slit(width_deg: f64) -> Result<Self> {
        Self::n_slit(4, width_deg, 90.0, 0.0)
    }

    /// Two slits separated by `separation_deg`, the first centered at 0°.
    pub fn two_slit(width_deg: f64, separation_deg: f64) -> Result<Self> {
        Self::n_slit(2, width_deg, separation_deg, 0.0)
    }

    /// The mask rotated by `dphi_deg` (all slit centers shifted).
    /// Rotation preserves the non-overlap invariant.
    pub fn rotated(&self, dphi_deg: f64) -> Self {
        let slits = self
            .slits
            .iter()
            .map(|s| Slit::new((s.center_deg + dphi_deg).rem_euclid(360.0), s.width_deg))
            .collect();
        Self { slits }
    }

    pub fn slits(&self) -> &[Slit] {
        &self.slits
    }

    /// Total open arc in radians.
    pub fn open_arc_rad(&self) -> f64 {
        self.slits
            .iter()
            .map(|s| s.width_deg.to_radians())
            .sum()
    }
}

/// An azimuthal analyzer: an angular mask times an OAM carrier phase.
///
/// A forked-hologram projector onto OAM order `l` is the full-circle mask
/// with `carrier_l = l`; a plain angular slit measurement is `carrier_l = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionMode {
    pub mask: AngularMask,
    pub carrier_l: i32,
}

impl ProjectionMode {
    pub fn new(mask: AngularMask, carrier_l: i32) -> Self {
        Self { mask, carrier_l }
    }

    /// Forked-hologram projector onto OAM order `l`.
    pub fn hologram(l: i32) -> Self {
        Self::new(AngularMask::full_circle(), l)
    }

    /// Plain angular mask analyzer (no carrier).
    pub fn slit_mask(mask: AngularMask) -> Self {
        Self::new(mask, 0)
    }
}

/// What the x axis of a coincidence curve means.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanLabel {
    /// Relative mask rotation in degrees.
    DeltaPhiDeg,
    /// Signal-arm OAM carrier order.
    LSignal,
}

impl ScanLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            ScanLabel::DeltaPhiDeg => "delta_phi_deg",
            ScanLabel::LSignal => "l_signal",
        }
    }
}

impl std::str::FromStr for ScanLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "delta_phi_deg" => Ok(ScanLabel::DeltaPhiDeg),
            "l_signal" => Ok(ScanLabel::LSignal),
            other => Err(Error::Parse(format!("unknown scan label `{other}`"))),
        }
    }
}

/// Normalized coincidence probability sampled over a scan parameter,
/// optionally carrying Poisson-sampled counts aligned with the points.
#[derive(Debug, Clone, PartialEq)]
pub struct CoincidenceCurve {
    scan_label: ScanLabel,
    points: Vec<(f64, f64)>,
    counts: Option<Vec<u64>>,
}

impl CoincidenceCurve {
    /// `points` are `(x, p)` with strictly increasing `x` and finite
    /// non-negative `p`.
    pub fn new(scan_label: ScanLabel, points: Vec<(f64, f64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::invalid_argument("curve needs at least one point"));
        }
        for w in points.windows(2) {
            if !(w[1].0 > w[0].0) {
                return Err(Error::invalid_argument(
                    "curve x values must be strictly increasing",
                ));
            }
        }
        for &(x, p) in &points {
            if !x.is_finite() || !p.is_finite() || p < 0.0 {
                return Err(Error::invalid_argument(format!(
                    "curve point ({x}, {p}) must be finite with p >= 0"
                )));
            }
        }
        Ok(Self {
            scan_label,
            points,
            counts: None,
        })
    }

    /// Attach raw counts aligned with the points.
    pub fn with_counts(mut self, counts: Vec<u64>) -> Result<Self> {
        if counts.len() != self.points.len() {
            return Err(Error::invalid_argument(format!(
                "{} counts for {} points",
                counts.len(),
                self.points.len()
            )));
        }
        self.counts = Some(counts);
        Ok(self)
    }

    pub fn scan_label(&self) -> ScanLabel {
        self.scan_label
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn counts(&self) -> Option<&[u64]> {
        self.counts.as_deref()
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|&(x, _)| x)
    }

    pub fn ps(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|&(_, p)| p)
    }

    pub fn max_p(&self) -> f64 {
        self.ps().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min_p(&self) -> f64 {
        self.ps().fold(f64::INFINITY, f64::min)
    }

    /// Rescale so the maximum probability is 1. Errors on an all-zero curve.
    pub fn normalized(&self) -> Result<Self> {
        let max = self.max_p();
        if max <= 0.0 {
            return Err(Error::InvalidCurve(
                "cannot normalize an all-zero curve".into(),
            ));
        }
        let points = self.points.iter().map(|&(x, p)| (x, p / max)).collect();
        Ok(Self {
            scan_label: self.scan_label,
            points,
            counts: self.counts.clone(),
        })
    }

    /// Replace the probability values, keeping x and label. Used by noise
    /// injection; validates the new values.
    pub fn with_ps(&self, ps: Vec<f64>) -> Result<Self> {
        if ps.len() != self.points.len() {
            return Err(Error::invalid_argument("replacement length mismatch"));
        }
        let points: Vec<(f64, f64)> = self
            .points
            .iter()
            .zip(ps)
            .map(|(&(x, _), p)| (x, p))
            .collect();
        CoincidenceCurve::new(self.scan_label, points)
    }
}

/// Radial cut of a far-field intensity distribution: `(r, intensity)`
/// samples with strictly increasing `r >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    samples: Vec<(f64, f64)>,
}

impl RadialProfile {
    pub fn new(samples: Vec<(f64, f64)>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::invalid_argument("profile needs at least one sample"));
        }
        if samples[0].0 < 0.0 {
            return Err(Error::invalid_argument("radii must be >= 0"));
        }
        for w in samples.windows(2) {
            if !(w[1].0 > w[0].0) {
                return Err(Error::invalid_argument(
                    "profile radii must be strictly increasing",
                ));
            }
        }
        for &(r, i) in &samples {
            if !r.is_finite() || !i.is_finite() || i < 0.0 {
                return Err(Error::invalid_argument(format!(
                    "profile sample ({r}, {i}) must be finite with intensity >= 0"
                )));
            }
        }
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn max_intensity(&self) -> f64 {
        self.samples
            .iter()
            .map(|&(_, i)| i)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn lorentzian_half_maximum_by_construction() {
        let s = OamSpectrum::lorentzian(20.0, 30).unwrap();
        // gamma = 10: P_0 / P_10 = 2 exactly.
        assert_relative_eq!(s.weight(0) / s.weight(10), 2.0, max_relative = 1e-12);
        let total: f64 = s.weights().iter().map(|&(_, p)| p).sum();
        assert_relative_eq!(total, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn lorentzian_gamma_five_half_width() {
        let s = OamSpectrum::lorentzian(10.0, 30).unwrap();
        assert_relative_eq!(s.weight(5) / s.weight(0), 0.5, max_relative = 1e-12);
    }

    #[test]
    fn lorentzian_is_even() {
        let s = OamSpectrum::lorentzian(13.7, 25).unwrap();
        for l in 0..=25 {
            assert_eq!(s.amplitude(l), s.amplitude(-l));
        }
    }

    #[test]
    fn uniform_small_case() {
        let s = OamSpectrum::uniform(1).unwrap();
        assert_eq!(s.len(), 3);
        for l in -1..=1 {
            assert_relative_eq!(s.amplitude(l).re, 1.0 / 3f64.sqrt(), max_relative = 1e-15);
        }
        let s = OamSpectrum::uniform(20).unwrap();
        for l in -20..=20 {
            assert_relative_eq!(s.weight(l), 1.0 / 41.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn constructors_reject_bad_arguments() {
        assert!(OamSpectrum::lorentzian(0.0, 30).is_err());
        assert!(OamSpectrum::lorentzian(-1.0, 30).is_err());
        assert!(OamSpectrum::lorentzian(10.0, 0).is_err());
        assert!(OamSpectrum::uniform(0).is_err());
    }

    #[test]
    fn amplitude_outside_range_is_zero() {
        let s = OamSpectrum::uniform(2).unwrap();
        assert_eq!(s.amplitude(3), Complex64::new(0.0, 0.0));
        assert_eq!(s.amplitude(-3), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn mask_rejects_overlap() {
        assert!(AngularMask::new(vec![Slit::new(0.0, 20.0), Slit::new(10.0, 20.0)]).is_err());
        // wrap-around overlap
        assert!(AngularMask::new(vec![Slit::new(355.0, 20.0), Slit::new(5.0, 20.0)]).is_err());
        // disjoint is fine
        assert!(AngularMask::new(vec![Slit::new(0.0, 20.0), Slit::new(45.0, 20.0)]).is_ok());
    }

    #[test]
    fn mask_full_circle_open_arc() {
        let m = AngularMask::full_circle();
        assert_relative_eq!(m.open_arc_rad(), std::f64::consts::TAU, max_relative = 1e-15);
    }

    #[test]
    fn four_slit_rotation_preserves_widths() {
        let m = AngularMask::four_slit(7.0).unwrap();
        let r = m.rotated(13.0);
        assert_eq!(r.slits().len(), 4);
        assert_relative_eq!(r.slits()[0].center_deg, 13.0);
        assert_relative_eq!(r.open_arc_rad(), m.open_arc_rad());
    }

    #[test]
    fn curve_validation() {
        assert!(CoincidenceCurve::new(ScanLabel::DeltaPhiDeg, vec![]).is_err());
        assert!(
            CoincidenceCurve::new(ScanLabel::DeltaPhiDeg, vec![(0.0, 1.0), (0.0, 1.0)]).is_err()
        );
        assert!(
            CoincidenceCurve::new(ScanLabel::DeltaPhiDeg, vec![(0.0, -0.1), (1.0, 1.0)]).is_err()
        );
        let c =
            CoincidenceCurve::new(ScanLabel::DeltaPhiDeg, vec![(0.0, 0.5), (1.0, 2.0)]).unwrap();
        let n = c.normalized().unwrap();
        assert_relative_eq!(n.max_p(), 1.0);
        assert_relative_eq!(n.points()[0].1, 0.25);
    }

    #[test]
    fn profile_validation() {
        assert!(RadialProfile::new(vec![(-1.0, 0.0)]).is_err());
        assert!(RadialProfile::new(vec![(0.0, 1.0), (0.0, 1.0)]).is_err());
        assert!(RadialProfile::new(vec![(0.0, 1.0), (1.0, f64::NAN)]).is_err());
        assert!(RadialProfile::new(vec![(0.0, 1.0), (1.0, 0.5)]).is_ok());
    }
}
