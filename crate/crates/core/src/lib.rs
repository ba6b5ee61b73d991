//! Exact computation of geometric and arithmetic Hilbert functions of
//! projective subvarieties over the rationals, and estimation of the
//! normalized (canonical) height from the growth of the normalized
//! arithmetic Hilbert function.
//!
//! The crate is organized around a small exact kernel and a stack of
//! arithmetic-geometry layers on top of it:
//!
//! * [`linalg`] — arbitrary-precision rational/integer matrices: reduced row
//!   echelon form, nullspaces, fraction-free determinants, Smith normal form.
//! * [`monomial`] — degree-D exponent vectors in a fixed canonical order.
//! * [`poly`] — sparse homogeneous polynomials and their text grammar.
//! * [`ideal`] — graded pieces of homogeneous ideals, geometric Hilbert
//!   function, annihilators, dimension inference.
//! * [`metrics`] — monomial inner products under the metric family `h_k`,
//!   the constant `gamma(N;D,k)`, numeric norms by adaptive quadrature.
//! * [`places`] — finite-place content via Smith normal form, archimedean
//!   sup-norms (exact or bracketed through weighted Gram determinants).
//! * [`hilbert`] — assembly of `H_norm` and `H_arith` per degree, plus the
//!   consistency identities relating them.
//! * [`height`] — degree sweeps, normalization by `(n+1)!/D^(n+1)`, and
//!   extrapolation of the height estimate.
//! * [`oracle`] — independent reference values: Weil heights of points,
//!   Mahler measures, the comparison constant `mu_delta`.
//! * [`quad`] — adaptive Gauss–Legendre cubature over boxes.
//!
//! Everything exact is carried as `BigInt`/`BigRational`; logarithms are
//! taken only at the reporting boundary.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod height;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod metrics;
pub mod monomial;
pub mod oracle;
pub mod places;
pub mod poly;
pub mod quad;
pub mod real;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
