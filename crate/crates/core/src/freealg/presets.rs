//! The three bundled presentations.

use alloc::sync::Arc;

use crate::scalar::{Scalar, Symbol};

use super::presentation::Presentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// U_q in the (K, M, P, E, H) basis, `E = e^{aP}`.
    UqKmph,
    /// U_q in the (I, P, E, H, N) basis.
    UqIphn,
    /// F_q in the (v, mu, x, t) basis.
    Fq,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::UqKmph, Preset::UqIphn, Preset::Fq];

    pub fn name(self) -> &'static str {
        match self {
            Preset::UqKmph => "uq_kmph",
            Preset::UqIphn => "uq_iphn",
            Preset::Fq => "fq",
        }
    }

    pub fn from_name(name: &str) -> Option<Preset> {
        Preset::ALL.into_iter().find(|p| p.name() == name)
    }

    pub fn build(self) -> Arc<Presentation> {
        preset(self)
    }
}

fn half_over_a(sign: i64) -> Scalar {
    Scalar::ratio(sign, 2) * Scalar::power(Symbol::A, -1)
}

/// Builds and validates (Jacobi-checks) a bundled presentation.
pub fn preset(which: Preset) -> Arc<Presentation> {
    let a = Scalar::a();
    let builder = match which {
        Preset::UqKmph => Presentation::builder("uq_kmph", &["K", "M", "P", "E", "H"])
            .grouplike("E")
            // [P,K] = -M
            .relation("P", "K", &[(-Scalar::one(), &[("M", 1)])])
            // [H,K] = -sinh(aP)/a = -(E - E^-1)/(2a)
            .relation("H", "K", &[(half_over_a(-1), &[("E", 1)]), (half_over_a(1), &[("E", -1)])])
            // E K E^-1 = K - aM
            .relation("E", "K", &[(-a.clone(), &[("M", 1)])]),
        Preset::UqIphn => Presentation::builder("uq_iphn", &["I", "P", "E", "H", "N"])
            .grouplike("E")
            // [I,N] = -a E^-2 I^2
            .relation("I", "N", &[(-a.clone(), &[("I", 2), ("E", -2)])])
            // [P,N] = -E^-2 I
            .relation("P", "N", &[(-Scalar::one(), &[("I", 1), ("E", -2)])])
            // [H,N] = -(1 - E^-2)/(2a)
            .relation("H", "N", &[(half_over_a(-1), &[]), (half_over_a(1), &[("E", -2)])])
            // E N E^-1 = N - a E^-2 I
            .relation("E", "N", &[(-a.clone(), &[("I", 1), ("E", -2)])]),
        Preset::Fq => Presentation::builder("fq", &["v", "mu", "x", "t"])
            // [mu,x] = -2a mu, [mu,v] = a v^2, [x,v] = 2a v
            .relation("mu", "x", &[(Scalar::int(-2) * a.clone(), &[("mu", 1)])])
            .relation("mu", "v", &[(a.clone(), &[("v", 2)])])
            .relation("x", "v", &[(Scalar::int(2) * a.clone(), &[("v", 1)])]),
    };
    builder.build().expect("bundled presentation is valid")
}
