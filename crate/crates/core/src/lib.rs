//! Exact arithmetic for higher derivatives of cyclotomic polynomials at `x = 1`.
//!
//! The crate builds the cyclotomic polynomials `Φ_n`, the Lehmer polynomials
//! `F_k` expressing `Φ_n^{(k)}(1)/Φ_n(1)` in terms of Jordan totients, the
//! auxiliary families `s_k`, `Ω_m`, `V_n`, `W_n`, `F_{k,n}`, and checks the
//! identities and congruences relating them. Every computation is exact; the
//! only scalar type is [`Rational`].
//!
//! Layers, bottom-up:
//!
//!  - [`ntkernel`]: factorisation, Möbius, Jordan totients, Bernoulli and
//!    Stirling numbers, binomials.
//!  - [`upoly`] / [`mpoly`]: dense univariate and sparse multivariate
//!    polynomials over the rationals.
//!  - [`fps`]: truncated power series over any [`fps::Ring`].
//!  - [`cyclotomic`]: `Φ_n` and the brute-force derivative oracle.
//!  - [`lehmer`]: the polynomial families and the point checks.
//!  - [`sweep`]: claim enumeration and report merging for range sweeps.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod cyclotomic;
mod error;
pub mod fps;
pub mod lehmer;
pub mod mpoly;
pub mod ntkernel;
mod parse;
pub mod report;
pub mod sweep;
pub mod upoly;

pub use error::{Error, Result};
pub use mpoly::{Monomial, MultiPoly};
pub use ntkernel::{Factorization, Rational};
pub use report::{Counterexample, Param, Status, VerificationReport};
pub use upoly::UniPoly;
