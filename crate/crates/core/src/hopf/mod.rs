//! Coproduct, counit and antipode of the bundled presentations, the axiom
//! checker, and the `U_q`–`F_q` Hopf pairing.

mod axioms;
mod data;
mod pairing;

pub(crate) use axioms::enumerate_monomials;
pub use axioms::{check_hopf_axioms, hopf_suite};
pub use data::{AntipodeVariant, HopfData};
pub use pairing::{check_pairing_bilinear, check_pairing_diagonal, hopf_pairing, PairingEngine, PairingTable, DEFAULT_PAIRING_CAP};
