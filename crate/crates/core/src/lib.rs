//! Exact computer algebra for the (1+1) quantum extended Galilei algebra
//! `U_q`, its dual `F_q`, their pairing, the coregular actions on the
//! auxiliary space of wavefunctions and the induced local representations.
//!
//! The crate is `no_std` (it needs `alloc`). All arithmetic is exact over
//! Gaussian rationals with Laurent dependence on the deformation parameter.

#![no_std]

extern crate alloc;

mod display;
pub mod error;
pub mod freealg;
pub mod hopf;
pub mod induction;
pub mod opcalc;
pub mod report;
pub mod scalar;
pub mod verify;

pub use error::{ActionError, AlgebraError, FlowError, PairingError, ScalarError};
pub use hopf::{AntipodeVariant, HopfData};
pub use freealg::{preset, Monomial, NCPolynomial, Preset, Presentation, TensorElement};
pub use opcalc::{LinearOperator, Var, VarSet, WaveFunction};
pub use report::{Check, Report, Status};
pub use scalar::{Bindings, GaussRational, Scalar, Symbol};
