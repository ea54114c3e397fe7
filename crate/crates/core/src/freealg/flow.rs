//! The classical flow of the vector field `−m ∂_p − (sinh(ap)/a) ∂_h`:
//! `φ^s(m, p, h) = (m, p − sm, h + (cosh(a(p − sm)) − cosh(ap)) / (a² m))`.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::FlowError;

/// A point `(m, p, h)` of the commutative chart.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChartPoint {
    pub m: f64,
    pub p: f64,
    pub h: f64,
}

/// `(cosh(a·p1) − cosh(a·p0)) / (a² m)`, written as a product of sinh
/// factors to avoid cancellation; the `a → 0` limit is `(p1² − p0²)/(2m)`.
fn cosh_gap(a: f64, p0: f64, p1: f64, m: f64) -> f64 {
    if a == 0.0 {
        return (p1 * p1 - p0 * p0) / (2.0 * m);
    }
    let sum = 0.5 * a * (p1 + p0);
    let diff = 0.5 * a * (p1 - p0);
    2.0 * libm::sinh(sum) * libm::sinh(diff) / (a * a * m)
}

/// Floating evaluation of `φ^s` at `point`.
pub fn flow_phi(s: f64, point: ChartPoint, a: f64) -> Result<ChartPoint, FlowError> {
    if point.m == 0.0 {
        return Err(FlowError::SingularFlow);
    }
    let p1 = point.p - s * point.m;
    Ok(ChartPoint { m: point.m, p: p1, h: point.h + cosh_gap(a, point.p, p1, point.m) })
}

/// Exact image of a rational point: the `m` and `p` components are
/// rational; `h` is kept as `h0 + (cosh(a·p) − cosh(a·p0)) / (a² m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowImage {
    pub m: BigRational,
    pub p: BigRational,
    pub h0: BigRational,
    pub p0: BigRational,
    pub a: BigRational,
}

impl FlowImage {
    pub fn h_f64(&self) -> f64 {
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        f(&self.h0) + cosh_gap(f(&self.a), f(&self.p0), f(&self.p), f(&self.m))
    }

    pub fn to_point(&self) -> ChartPoint {
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        ChartPoint { m: f(&self.m), p: f(&self.p), h: self.h_f64() }
    }
}

/// Exact mode of [`flow_phi`] for rational `s`, point and `a`.
pub fn flow_phi_exact(
    s: &BigRational,
    m: &BigRational,
    p: &BigRational,
    h: &BigRational,
    a: &BigRational,
) -> Result<FlowImage, FlowError> {
    if m.is_zero() {
        return Err(FlowError::SingularFlow);
    }
    Ok(FlowImage { m: m.clone(), p: p - s * m, h0: h.clone(), p0: p.clone(), a: a.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(x: f64, y: f64, tol: f64) -> bool {
        (x - y).abs() <= tol * (1.0 + x.abs().max(y.abs()))
    }

    #[test]
    fn zero_time_is_identity() {
        let pt = ChartPoint { m: 1.5, p: -0.25, h: 2.0 };
        assert_eq!(flow_phi(0.0, pt, 0.3).unwrap(), pt);
    }

    #[test]
    fn unit_mass_from_origin() {
        // φ^s(1, 0, 0) = (1, −s, (cosh(as) − 1)/a²)
        let (a, s) = (0.7, 1.3);
        let out = flow_phi(s, ChartPoint { m: 1.0, p: 0.0, h: 0.0 }, a).unwrap();
        assert_eq!(out.p, -s);
        assert!(close(out.h, (libm::cosh(a * s) - 1.0) / (a * a), 1e-14));
    }

    #[test]
    fn singular_at_zero_mass() {
        let pt = ChartPoint { m: 0.0, p: 1.0, h: 0.0 };
        assert_eq!(flow_phi(1.0, pt, 0.1), Err(FlowError::SingularFlow));
        let z = BigRational::zero();
        assert!(flow_phi_exact(&z, &z, &z, &z, &z).is_err());
    }

    #[test]
    fn group_law() {
        let pts = [(1.0, 0.5, -0.2), (-2.0, 1.25, 3.0), (0.5, -1.5, 0.0)];
        for &(m, p, h) in &pts {
            for &(s1, s2) in &[(0.3, 0.9), (-1.1, 0.4), (2.0, -2.5)] {
                let a = 0.35;
                let pt = ChartPoint { m, p, h };
                let direct = flow_phi(s1 + s2, pt, a).unwrap();
                let composed = flow_phi(s1, flow_phi(s2, pt, a).unwrap(), a).unwrap();
                assert!(close(direct.p, composed.p, 1e-12));
                assert!(close(direct.h, composed.h, 1e-12));
            }
        }
    }

    #[test]
    fn exact_mode_matches_float() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let img = flow_phi_exact(&r(3, 2), &r(2, 1), &r(1, 3), &r(-1, 4), &r(1, 5)).unwrap();
        assert_eq!(img.p, r(1, 3) - r(3, 1));
        let float = flow_phi(1.5, ChartPoint { m: 2.0, p: 1.0 / 3.0, h: -0.25 }, 0.2).unwrap();
        assert!(close(img.h_f64(), float.h, 1e-13));
    }
}
