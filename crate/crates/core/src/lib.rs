//! Spectral, differential and 2-adic invariants of vectorial Boolean
//! functions `F: GF(2^n) -> GF(2^n)`, with a focus on binomials
//! `x^d1 + x^d2` that have the maximal number `2^n - 2^m` of bent
//! components (`n = 2m`).
//!
//! The crate is `no_std` and only needs `alloc`. The optional `parallel`
//! feature runs the per-component and per-pair loops on rayon; every
//! reduction is order-insensitive, so results do not depend on the
//! schedule.
//!
//! Module map:
//!
//! - [`gf2n`]: bit-packed field arithmetic, trace, Frobenius, subfields.
//! - [`poly2`]: polynomials over GF(2) packed in a machine word.
//! - [`boolfun`]: vectorial functions, Walsh spectra, DDT, image sets.
//! - [`quadratic`]: bentness of quadratic components via linearized kernels.
//! - [`stickelberger`]: 2-adic weights, `nu`, minimizer sets, the gcd ledger.
//! - [`padic`]: Teichmüller lifts and Gauss sums in `Z_2[xi] / 2^k`.
//! - [`ellmap`]: Frobenius-orbit linear complexity `l(gamma)` and `l(n)`.
//! - [`classify`]: maximality verdicts, structure checks, bounds, search.
//! - [`suite`]: named verification suites built from the above.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod arith;
mod bitmat;
pub mod boolfun;
pub mod classify;
pub mod ellmap;
mod error;
pub mod gf2n;
pub(crate) mod par;
pub mod padic;
pub mod poly2;
pub mod quadratic;
pub mod stickelberger;
pub mod suite;
pub mod walsh;

pub use error::{Error, Result};
pub use gf2n::{FieldContext, FieldElem, ModulusSpec};
