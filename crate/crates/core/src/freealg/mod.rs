//! Normal-ordering rewrite engine for presented associative algebras with
//! [`Scalar`](crate::scalar::Scalar) coefficients, the bundled
//! presentations, tensor squares and truncated `s`-series.

pub mod checks;
mod convert;
mod flow;
mod poly;
mod presentation;
mod presets;
mod rewrite;
mod series;
mod tensor;

pub use convert::convert_basis;
pub use flow::{flow_phi, flow_phi_exact, ChartPoint, FlowImage};
pub use poly::{Letter, Monomial, NCPolynomial};
pub use presentation::{Presentation, PresentationBuilder, DEFAULT_FUEL};
pub use presets::{preset, Preset};
pub use rewrite::normal_order;
pub use series::{cosh_difference_series, exp_truncated, verify_flow_lemma, SeriesInS};
pub use tensor::TensorElement;
