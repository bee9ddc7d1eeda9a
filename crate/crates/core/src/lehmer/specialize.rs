//! Specialising the Lehmer polynomials at the Jordan totient point
//! `x_j = J_j(n)/(2j)`.

use alloc::collections::BTreeMap;
use alloc::format;

use num_bigint::BigInt;

use crate::error::{domain, Error, Result};
use crate::mpoly::MultiPoly;
use crate::ntkernel::{self, rat, Rational};
use crate::upoly::UniPoly;

use super::{inv_factorial, omega_poly};

/// `{x_j ↦ J_j(n)/(2j) : first ≤ j ≤ last}`.
fn totient_assignment(n: u64, first: usize, last: usize) -> Result<BTreeMap<u32, Rational>> {
    (first..=last)
        .map(|j| {
            let jt = ntkernel::jordan_totient(j as u32, n)?;
            Ok((j as u32, Rational::new(jt, BigInt::from(2 * j))))
        })
        .collect()
}

/// The point `(φ(n)/2, J_2(n)/4, …, J_k(n)/(2k))` as an assignment of
/// `x1 … xk`.
pub fn totient_point(n: u64, k: usize) -> Result<BTreeMap<u32, Rational>> {
    totient_assignment(n, 1, k)
}

/// `ω_m(n) = Ω_m(J_2(n)/4, …, J_{2m}(n)/(4m))`.
pub fn omega_value(m: usize, n: u64) -> Result<Rational> {
    if n < 3 {
        return Err(domain(format!("ω_m(n) needs n ≥ 3 (got {n})")));
    }
    omega_poly(m)?.evaluate(&totient_assignment(n, 2, 2 * m)?)
}

/// `2B_{2m}/(2m)!·ω_m(n)`, the coefficient of `x^{2m}` in `W_n/Φ_n(1)`.
pub fn integrality_value(n: u64, m: usize) -> Result<Rational> {
    Ok(rat(2) * ntkernel::bernoulli(2 * m) * inv_factorial(2 * m) * omega_value(m, n)?)
}

fn falling_x(shift: usize, len: usize) -> UniPoly {
    (0..len).fold(UniPoly::one(), |acc, i| {
        &acc * &(&UniPoly::x() - &UniPoly::constant(rat((shift + i) as i64)))
    })
}

/// `F_{k,n}(x) = (x)_k + Σ_m (k!/(k−2m)!)·(2B_{2m}/(2m)!)·ω_m(n)·(x − m)_{k−2m}`.
pub fn f_kn_poly(k: usize, n: u64) -> Result<UniPoly> {
    if k == 0 || n < 3 {
        return Err(domain(format!("F_(k,n) needs k ≥ 1 and n ≥ 3 (got k={k}, n={n})")));
    }
    let mut acc = falling_x(0, k);
    for m in 1..=k / 2 {
        let falling_k = ntkernel::factorial(k) / ntkernel::factorial(k - 2 * m);
        let c = Rational::from_integer(falling_k) * integrality_value(n, m)?;
        acc = &acc + &falling_x(m, k - 2 * m).scale(&c);
    }
    Ok(acc)
}

/// `F_{k,n}` obtained by substituting `x_j = J_j(n)/(2j)` for `j ≥ 2` into
/// the given `F_k`, leaving `x1` free.
pub fn f_kn_by_specialization(f_k: &MultiPoly, k: usize, n: u64) -> Result<UniPoly> {
    if n < 3 {
        return Err(domain(format!("F_(k,n) needs n ≥ 3 (got {n})")));
    }
    let assignment = totient_assignment(n, 2, k.max(2))?;
    f_k.substitute(&assignment)
        .to_univariate(1)
        .ok_or_else(|| Error::InternalInconsistency(format!("F_{k} uses variables beyond x{k}")))
}
