//! The Casimir equation `β∂t φ + (1 − cosh(a∂x))/a² φ = 0` on a periodic
//! lattice of spacing `a`, solved spectrally.
//!
//! On a plane wave `e^{ikx}`, `cosh(a∂x)` acts as `cos(ka)`, so with
//! `β = −im/ħ` each Fourier mode rotates with `ω_a(k) = (ħ/m)(1 − cos ka)/a²`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LatticeError {
    #[error("invalid lattice parameter: {0}")]
    InvalidParams(String),
    #[error("mode {mode} is outside the band |n| <= {half} of a {sites}-site lattice")]
    ModeOutOfBand { mode: i64, sites: usize, half: usize },
    #[error("wavenumber k = {k} is not resolvable at spacing a = {a} (ka > pi)")]
    Unresolvable { k: f64, a: f64 },
    #[error("state has {got} amplitudes, lattice has {sites} sites")]
    LengthMismatch { got: usize, sites: usize },
    #[error("non-finite amplitude at site {0}")]
    NonFinite(usize),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LatticeParams {
    pub a: f64,
    pub sites: usize,
    pub mass: f64,
    pub hbar: f64,
}

impl LatticeParams {
    pub fn new(a: f64, sites: usize, mass: f64, hbar: f64) -> Result<Self, LatticeError> {
        for (name, v) in [("a", a), ("mass", mass), ("hbar", hbar)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(LatticeError::InvalidParams(format!("{} must be positive and finite, got {}", name, v)));
            }
        }
        if sites < 4 {
            return Err(LatticeError::InvalidParams(format!("need at least 4 sites, got {}", sites)));
        }
        Ok(LatticeParams { a, sites, mass, hbar })
    }

    /// `L = N·a`.
    pub fn length(&self) -> f64 {
        self.sites as f64 * self.a
    }

    /// `k = 2πn/L`.
    pub fn wavenumber(&self, n: i64) -> Result<f64, LatticeError> {
        let half = self.sites / 2;
        if n.unsigned_abs() as usize > half {
            return Err(LatticeError::ModeOutOfBand { mode: n, sites: self.sites, half });
        }
        Ok(2.0 * PI * n as f64 / self.length())
    }

    /// Site coordinates `x_j = j·a`.
    pub fn positions(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.sites).map(move |j| j as f64 * self.a)
    }

    /// `β = −i m/ħ`.
    pub fn beta(&self) -> Complex64 {
        Complex64::new(0.0, -self.mass / self.hbar)
    }

    /// Signed mode number of FFT bin `j`.
    fn mode_of_bin(&self, j: usize) -> i64 {
        if j <= self.sites / 2 {
            j as i64
        } else {
            j as i64 - self.sites as i64
        }
    }
}

/// `(1 − cos ka)/a²`, evaluated as `2 sin²(ka/2)/a²`.
pub fn symbol(k: f64, a: f64) -> f64 {
    let s = (k * a / 2.0).sin();
    2.0 * s * s / (a * a)
}

/// `ω_a(k) = (ħ/m)(1 − cos ka)/a²`.
pub fn omega(k: f64, a: f64, mass: f64, hbar: f64) -> f64 {
    hbar / mass * symbol(k, a)
}

/// `ω₀(k) = ħk²/(2m)`.
pub fn omega_continuum(k: f64, mass: f64, hbar: f64) -> f64 {
    hbar * k * k / (2.0 * mass)
}

/// Frequency of mode `n`.
pub fn dispersion(n: i64, p: &LatticeParams) -> Result<f64, LatticeError> {
    Ok(omega(p.wavenumber(n)?, p.a, p.mass, p.hbar))
}

#[derive(Clone, Debug, PartialEq)]
pub struct LatticeState {
    amplitudes: Vec<Complex64>,
    params: LatticeParams,
}

impl LatticeState {
    pub fn new(params: LatticeParams, amplitudes: Vec<Complex64>) -> Result<Self, LatticeError> {
        if amplitudes.len() != params.sites {
            return Err(LatticeError::LengthMismatch { got: amplitudes.len(), sites: params.sites });
        }
        if let Some(j) = amplitudes.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(LatticeError::NonFinite(j));
        }
        Ok(LatticeState { amplitudes, params })
    }

    pub fn zero(params: LatticeParams) -> Self {
        LatticeState { amplitudes: vec![Complex64::new(0.0, 0.0); params.sites], params }
    }

    /// `e^{ik_n x_j}`.
    pub fn plane_wave(params: LatticeParams, n: i64) -> Result<Self, LatticeError> {
        let k = params.wavenumber(n)?;
        let amplitudes = params.positions().map(|x| Complex64::from_polar(1.0, k * x)).collect();
        Ok(LatticeState { amplitudes, params })
    }

    /// Gaussian envelope of width `sigma` centred at `x0` with carrier `e^{ikx}`,
    /// using the nearest periodic image of each site.
    pub fn gaussian(params: LatticeParams, x0: f64, sigma: f64, k: f64) -> Self {
        let l = params.length();
        let amplitudes = params
            .positions()
            .map(|x| {
                let d = (x - x0 + l / 2.0).rem_euclid(l) - l / 2.0;
                Complex64::from_polar((-d * d / (2.0 * sigma * sigma)).exp(), k * x)
            })
            .collect();
        LatticeState { amplitudes, params }
    }

    pub fn params(&self) -> &LatticeParams {
        &self.params
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// `a·Σ conj(φ_j) ψ_j`.
    pub fn inner(&self, other: &LatticeState) -> Complex64 {
        inner(self.params.a, &self.amplitudes, &other.amplitudes)
    }

    /// `‖φ‖ = (a·Σ|φ_j|²)^{1/2}`.
    pub fn norm(&self) -> f64 {
        (self.params.a * self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>()).sqrt()
    }
}

/// `a·Σ conj(u_j) w_j`, summed in index order.
pub fn inner(a: f64, u: &[Complex64], w: &[Complex64]) -> Complex64 {
    u.iter().zip(w).map(|(x, y)| x.conj() * y).sum::<Complex64>() * a
}

/// Solves `β∂t φ = −(1 − cosh(a∂x))/a² φ` for time `t`: mode `k` is multiplied
/// by `exp(−(1/β)(1 − cos ka)/a² · t)`.
pub fn evolve_with_beta(s: &LatticeState, beta: Complex64, t: f64) -> LatticeState {
    if t == 0.0 {
        return s.clone();
    }
    let p = s.params;
    let n = p.sites;
    let mut planner = FftPlanner::<f64>::new();
    let mut buf = s.amplitudes.clone();
    planner.plan_fft_forward(n).process(&mut buf);
    let rate = -beta.inv();
    for (j, z) in buf.iter_mut().enumerate() {
        let k = 2.0 * PI * p.mode_of_bin(j) as f64 / p.length();
        *z *= (rate * symbol(k, p.a) * t).exp();
    }
    planner.plan_fft_inverse(n).process(&mut buf);
    let scale = 1.0 / n as f64;
    for z in &mut buf {
        *z *= scale;
    }
    LatticeState { amplitudes: buf, params: p }
}

/// Evolution with `β = −im/ħ`: each mode picks up `e^{−iω_a(k)t}`.
pub fn evolve(s: &LatticeState, t: f64) -> LatticeState {
    evolve_with_beta(s, s.params.beta(), t)
}

/// `|‖evolve(s, t)‖ − ‖s‖|`.
pub fn check_unitarity(s: &LatticeState, t: f64) -> f64 {
    (evolve(s, t).norm() - s.norm()).abs()
}

/// Same as [`check_unitarity`] for an arbitrary `β`.
pub fn norm_drift_with_beta(s: &LatticeState, beta: Complex64, t: f64) -> f64 {
    (evolve_with_beta(s, beta, t).norm() - s.norm()).abs()
}

/// `(Eᶻφ)_j = φ_{j+z}`, periodic.
pub fn shift(u: &[Complex64], z: isize) -> Vec<Complex64> {
    let n = u.len() as isize;
    (0..n).map(|j| u[(j + z).rem_euclid(n) as usize]).collect()
}

/// `(E − E⁻¹)/(2a)`, the lattice `sinh(a∂x)/a`.
pub fn sinh_over_a(u: &[Complex64], a: f64) -> Vec<Complex64> {
    shift(u, 1).iter().zip(shift(u, -1)).map(|(p, m)| (p - m) / (2.0 * a)).collect()
}

/// `(E + E⁻¹)/2`, the lattice `cosh(a∂x)`.
pub fn cosh(u: &[Complex64]) -> Vec<Complex64> {
    shift(u, 1).iter().zip(shift(u, -1)).map(|(p, m)| (p + m) / 2.0).collect()
}

/// `(ħ/m)(2φ_j − φ_{j+1} − φ_{j−1})/(2a²)`, which is `(ħ/m)(1 − cosh(a∂x))/a²`.
pub fn kernel(s: &LatticeState) -> Vec<Complex64> {
    let p = s.params;
    let c = p.hbar / p.mass / (2.0 * p.a * p.a);
    let u = &s.amplitudes;
    shift(u, 1).iter().zip(shift(u, -1)).zip(u).map(|((x, y), z)| (z * 2.0 - x - y) * c).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct StudyRow {
    pub a: f64,
    pub omega_a: f64,
    pub omega_0: f64,
    pub abs_err: f64,
    /// Error of the previous row over this one; `None` on the first row or
    /// when this error vanishes.
    pub ratio: Option<f64>,
}

/// `ω_a(k)` against `ω₀(k)` for each spacing, in the given order.
pub fn dispersion_study(spacings: &[f64], k: f64, mass: f64, hbar: f64) -> Result<Vec<StudyRow>, LatticeError> {
    let mut rows: Vec<StudyRow> = Vec::with_capacity(spacings.len());
    for &a in spacings {
        if !(a.is_finite() && a > 0.0) {
            return Err(LatticeError::InvalidParams(format!("spacing must be positive and finite, got {}", a)));
        }
        if (k * a).abs() > PI {
            return Err(LatticeError::Unresolvable { k, a });
        }
        let omega_a = omega(k, a, mass, hbar);
        let omega_0 = omega_continuum(k, mass, hbar);
        let abs_err = (omega_a - omega_0).abs();
        let ratio = match rows.last() {
            Some(prev) if abs_err > 0.0 => Some(prev.abs_err / abs_err),
            _ => None,
        };
        rows.push(StudyRow { a, omega_a, omega_0, abs_err, ratio });
    }
    Ok(rows)
}

pub const STUDY_HEADER: &str = "a,omega_a,omega_0,abs_err,ratio";

/// CSV with header [`STUDY_HEADER`]; floats in `{:.9e}`.
pub fn study_csv(rows: &[StudyRow]) -> String {
    let mut out = String::from(STUDY_HEADER);
    out.push('\n');
    for r in rows {
        let ratio = r.ratio.map(|x| format!("{:.6}", x)).unwrap_or_default();
        out.push_str(&format!("{},{:.9e},{:.9e},{:.9e},{}\n", r.a, r.omega_a, r.omega_0, r.abs_err, ratio));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: f64, n: usize) -> LatticeParams {
        LatticeParams::new(a, n, 1.0, 1.0).unwrap()
    }

    #[test]
    fn closed_form_values() {
        assert!((omega(1.0, 0.1, 1.0, 1.0) - 0.4995834722).abs() < 1e-10);
        assert_eq!(dispersion(0, &params(0.1, 16)).unwrap(), 0.0);
        let p = params(0.1, 16);
        let edge = dispersion(8, &p).unwrap();
        assert!((edge - 2.0 / (0.1 * 0.1)).abs() < 1e-10);
        assert!(matches!(dispersion(9, &p), Err(LatticeError::ModeOutOfBand { .. })));
    }

    #[test]
    fn parameter_validation() {
        assert!(LatticeParams::new(0.1, 3, 1.0, 1.0).is_err());
        assert!(LatticeParams::new(-0.1, 8, 1.0, 1.0).is_err());
        assert!(LatticeParams::new(0.1, 8, 0.0, 1.0).is_err());
        assert!(LatticeState::new(params(0.1, 8), vec![Complex64::new(1.0, 0.0); 7]).is_err());
        let mut v = vec![Complex64::new(1.0, 0.0); 8];
        v[3] = Complex64::new(f64::NAN, 0.0);
        assert_eq!(LatticeState::new(params(0.1, 8), v), Err(LatticeError::NonFinite(3)));
    }

    #[test]
    fn single_mode_rotates() {
        let p = params(0.1, 32);
        let s = LatticeState::plane_wave(p, 3).unwrap();
        let w = dispersion(3, &p).unwrap();
        let t = 2.5;
        let out = evolve(&s, t);
        let phase = Complex64::from_polar(1.0, -w * t);
        for (x, y) in out.amplitudes().iter().zip(s.amplitudes()) {
            assert!((x - y * phase).norm() < 1e-12);
        }
    }

    #[test]
    fn identity_at_zero_time() {
        let s = LatticeState::gaussian(params(0.1, 64), 3.2, 0.5, 2.0);
        assert_eq!(evolve(&s, 0.0), s);
        assert_eq!(check_unitarity(&LatticeState::zero(params(0.1, 8)), 10.0), 0.0);
    }

    #[test]
    fn study_rows() {
        let rows = dispersion_study(&[0.2, 0.1], 1.0, 1.0, 1.0).unwrap();
        assert_eq!(rows[0].ratio, None);
        assert!(rows[1].ratio.unwrap() > 3.9);
        assert!(matches!(dispersion_study(&[4.0], 1.0, 1.0, 1.0), Err(LatticeError::Unresolvable { .. })));
        let zero = dispersion_study(&[0.2, 0.1], 0.0, 1.0, 1.0).unwrap();
        assert!(zero.iter().all(|r| r.abs_err == 0.0 && r.ratio.is_none()));
        assert!(study_csv(&rows).starts_with("a,omega_a,omega_0,abs_err,ratio\n0.2,"));
    }
}
