//! The integer polynomials `V_n` and `W_n`.
//!
//! `V_n` is built from its explicit coefficient formula (a rescaled
//! Chebyshev polynomial); `W_n` is its Möbius-primitive part, so that
//! `V_n = Π_{d|n} W_d` in the same way as `x^n − 1 = Π_{d|n} Φ_d`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use spin::Mutex;

use crate::error::{domain, Error, Result};
use crate::ntkernel::{self, Rational};
use crate::upoly::UniPoly;

/// `n·(n−m−1)! / (m!·(n−2m)!)`, the coefficient of `x^{n−2m−1}` in `V_n`
/// for odd `n`.
pub fn v_odd_coefficient(n: usize, m: usize) -> Result<BigInt> {
    if n == 0 || 2 * m > n - 1 {
        return Err(domain(format!("coefficient index m={m} out of range for n={n}")));
    }
    let num = ntkernel::factorial(n - m - 1) * n;
    let den = ntkernel::factorial(m) * ntkernel::factorial(n - 2 * m);
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::InternalInconsistency(format!("V_{n} coefficient {m} is not an integer")));
    }
    Ok(q)
}

/// `V_n`, with `V_1 = V_2 = 1`.
///
/// Odd `n`: `Σ_{m=0}^{(n−1)/2} n(n−m−1)!/(m!(n−2m)!)·x^{n−2m−1}`.
/// Even `n`: `Σ_{m=0}^{n/2−1} C(n−m−1, m)·x^{n−2m−2}`.
pub fn v_poly(n: usize) -> Result<UniPoly> {
    if n == 0 {
        return Err(domain("V_n is defined for n ≥ 1"));
    }
    let (degree, terms) = if n % 2 == 1 { (n - 1, (n - 1) / 2) } else { (n - 2, n / 2 - 1) };
    let mut coeffs = vec![Rational::zero(); degree + 1];
    for m in 0..=terms {
        let c = if n % 2 == 1 {
            v_odd_coefficient(n, m)?
        } else {
            ntkernel::binomial((n - m - 1) as i64, m)
        };
        coeffs[degree - 2 * m] = Rational::from_integer(c);
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

static W_CACHE: Mutex<BTreeMap<u64, Arc<UniPoly>>> = Mutex::new(BTreeMap::new());

/// `W_n = Π_{d|n} V_d^{μ(n/d)}`, cached by `n`.
pub fn w_poly(n: u64) -> Result<Arc<UniPoly>> {
    if n == 0 {
        return Err(domain("W_n is defined for n ≥ 1"));
    }
    if let Some(w) = W_CACHE.lock().get(&n) {
        return Ok(w.clone());
    }
    let w = UniPoly::mobius_product(n, |d| v_poly(d as usize).expect("divisors are positive"));
    let w = Arc::new(w?);
    W_CACHE.lock().entry(n).or_insert(w.clone());
    Ok(w)
}
