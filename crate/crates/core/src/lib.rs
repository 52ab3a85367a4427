//! The alternating Kurepa function `A(z)`, its companion sequences and
//! numerical checks of the inequalities it satisfies on `x > -2`.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(a < b)` deliberately rejects NaN
#![allow(clippy::excessive_precision)] // reference constants keep all printed digits

pub mod analysis;
pub mod error;
pub mod kurepa;
pub mod seqcore;
pub mod specfun;

pub use analysis::{BoundsTriple, TheoremId, VerificationReport};
pub use error::{KurepaError, Result};
pub use kurepa::{alt_factorial, beta, gamma_cos, im_a, re_a, EvalPoint, Evaluator};
pub use specfun::{QuadratureResult, QuadratureSpec};
