//! Cyclotomic polynomials and their derivative values at 1.
//!
//! The derivative values here come from differentiating `Φ_n` directly and
//! serve as the oracle for everything in [`crate::lehmer`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use spin::Mutex;

use crate::error::{domain, Error, Result};
use crate::ntkernel::{self, Rational};
use crate::upoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicRecord {
    pub n: u64,
    /// Monic with integer coefficients.
    pub poly: UniPoly,
    /// Degree, equal to Euler's φ(n).
    pub phi_n: u64,
    pub value_at_1: BigInt,
}

static CACHE: Mutex<BTreeMap<u64, Arc<CyclotomicRecord>>> = Mutex::new(BTreeMap::new());

/// `Φ_n = Π_{d|n} (x^d − 1)^{μ(n/d)}`, cached by `n`.
pub fn cyclotomic_poly(n: u64) -> Result<Arc<CyclotomicRecord>> {
    if n == 0 {
        return Err(domain("cyclotomic polynomial needs n ≥ 1"));
    }
    if let Some(rec) = CACHE.lock().get(&n) {
        return Ok(rec.clone());
    }
    let poly = UniPoly::mobius_product(n, |d| UniPoly::x_pow_minus_one(d as usize))?;
    let value = poly.eval(&Rational::one());
    let phi_n = poly.degree().expect("Φ_n is nonzero") as u64;
    if !poly.is_integral() || !poly.is_monic() {
        return Err(Error::InternalInconsistency(format!("Φ_{n} is not a monic integer polynomial")));
    }
    let rec = Arc::new(CyclotomicRecord { n, poly, phi_n, value_at_1: value.to_integer() });
    CACHE.lock().entry(n).or_insert(rec.clone());
    Ok(rec)
}

/// `Φ_n(1)`: `p` when `n = p^r`, otherwise 1.
pub fn phi_at_1(n: u64) -> Result<u64> {
    if n <= 1 {
        return Err(domain("Φ_n(1) is only used for n ≥ 2 (Φ_1(1) = 0)"));
    }
    Ok(ntkernel::factorize(n)?.prime_power().map_or(1, |(p, _)| p))
}

/// `Φ_n^{(k)}(1)` by `k`-fold formal differentiation and evaluation.
pub fn deriv_at_1(n: u64, k: usize) -> Result<BigInt> {
    let rec = cyclotomic_poly(n)?;
    let v = rec.poly.derivative(k).eval(&Rational::one());
    debug_assert!(v.is_integer());
    Ok(v.to_integer())
}

/// `Φ_n^{(k)}(1) / Φ_n(1)` as an exact rational.
pub fn deriv_ratio(n: u64, k: usize) -> Result<Rational> {
    let base = phi_at_1(n)?;
    let d = deriv_at_1(n, k)?;
    Ok(Rational::new(d, BigInt::from(base)))
}

/// Drops every cached record.
pub fn clear_cache() {
    CACHE.lock().clear();
}
