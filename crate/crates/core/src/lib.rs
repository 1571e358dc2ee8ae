//! Families of functions orthogonal on `[0, 1]`.
//!
//! Shifted Legendre polynomials altered to carry a zero at `x = −1` (or
//! `x = −a`) are composed with end-swapping transforms of `[0, 1]` to give
//! orthogonal rational, exponential and logarithmic functions; composing
//! shifted Legendre polynomials with polynomial self-maps of `[0, 1]` gives
//! transmuted orthogonal polynomials.
//!
//! * [`polynomial`] and [`legendre`]: exact rational polynomials, shifted
//!   Legendre and Jacobi polynomials.
//! * [`transform`] and [`family`]: the transforms, family descriptors,
//!   evaluators, weights, norms and closed forms.
//! * [`transmuted`]: polynomial self-maps `σ_ν` and the transmuted system.
//! * [`quadrature`] and [`projection`]: Gauss–Legendre rules, Gram matrices
//!   and series expansion.
//! * [`analysis`]: zeros, extrema, the equal-extrema experiment and the
//!   near-involution metrics.
//! * [`cli`]: the `ortho` command-line front end.
//!
//! ```
//! use ortho_interval::family::FamilySpec;
//!
//! let r4 = FamilySpec::rational(1.0);
//! assert!((r4.eval(4, 0.0).unwrap() - 1.0).abs() < 1e-15);
//! assert!((r4.eval(4, 1.0).unwrap() + 0.5).abs() < 1e-15);
//! ```
//!
//! A linear function `s(x) = ax + b` with `a ≠ 0` is not a finite
//! combination of the rational, exponential or logarithmic members; its
//! expansions converge but never terminate.

// Negated comparisons below are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod cli;
pub mod error;
pub mod family;
pub mod legendre;
pub mod polynomial;
pub mod projection;
pub mod quadrature;
pub mod roots;
pub mod transform;
pub mod transmuted;

pub use error::{Error, Result};
pub use family::{Family, FamilySpec};
pub use legendre::JacobiParams;
pub use polynomial::Polynomial;
pub use quadrature::QuadratureRule;
pub use transform::Transform;
