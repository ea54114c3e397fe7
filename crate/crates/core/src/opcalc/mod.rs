//! Operator calculus on polynomial wavefunctions over `(v, mu, x, t)` and
//! the two coregular actions of `U_q` on them.

mod actions;
mod operator;
mod wavefunction;

pub use actions::{
    act_triangleleft, act_triangleright, check_duality, check_representations, k_triangleright_operator, pairing_a,
    pairing_a_monomial, triangleleft, triangleleft_letter, triangleright, triangleright_letter,
};
pub use operator::{
    cosh_diff_over_a2_dmu, exp_shift_dx_minus_v_dmu, one_minus_cosh_operator, one_minus_cosh_over_a2, sinh_operator,
    sinh_shift_over_a, LinearOperator, Primitive,
};
pub use wavefunction::{Var, VarExponents, VarSet, WaveFunction};
