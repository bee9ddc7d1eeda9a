//! Point checks of the identities, divisibility statements and congruences.
//!
//! Every check returns a [`VerificationReport`] for a single parameter tuple;
//! [`crate::sweep`] merges them over ranges. Parameters outside a claim's
//! hypothesis yield `not_applicable`, mismatches yield `fail` with both sides
//! rendered exactly, and an internal error is reported as a failure whose
//! left side is `error`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::cyclotomic;
use crate::error::{domain, Result};
use crate::mpoly::MultiPoly;
use crate::ntkernel::{self, rat, Rational};
use crate::report::{Counterexample, Param, VerificationReport};
use crate::upoly::UniPoly;

use super::{f_poly, f_poly_partition, f_series_cached, f_poly_reconstruct, totient_point, v_poly, w_poly};

pub const LEHMER_IDENTITY: &str = "lehmer-identity";
pub const CONJECTURE: &str = "conjecture-1";
pub const INTEGRALITY: &str = "integrality";
pub const AK_CONGRUENCE: &str = "ak-congruence";
pub const W_MOD_P: &str = "w-mod-p";
pub const W_EXPANSION: &str = "w-expansion";
pub const W_FACTORIZATION: &str = "w-factorization";
pub const ROUTE_AGREEMENT: &str = "route-agreement";

enum Outcome {
    Pass,
    NotApplicable,
    Mismatch { lhs: String, rhs: String },
}

fn mismatch(lhs: impl ToString, rhs: impl ToString) -> Outcome {
    Outcome::Mismatch { lhs: lhs.to_string(), rhs: rhs.to_string() }
}

fn run(claim: &str, params: &[(&str, i64)], body: impl FnOnce() -> Result<Outcome>) -> VerificationReport {
    let params: Vec<Param> = params.iter().map(|&(name, v)| Param::new(name, v)).collect();
    let range = params.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    let outcome = body().unwrap_or_else(|e| mismatch("error", e));
    match outcome {
        Outcome::Pass => VerificationReport::pass(claim, range),
        Outcome::NotApplicable => VerificationReport::not_applicable(claim, range),
        Outcome::Mismatch { lhs, rhs } => VerificationReport::fail(claim, range, Counterexample { params, lhs, rhs }),
    }
}

fn pass_if(ok: bool, lhs: impl ToString, rhs: impl ToString) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        mismatch(lhs, rhs)
    }
}

/// `Φ_n^{(k)}(1)/Φ_n(1) = F_k(φ(n)/2, J_2(n)/4, …, J_k(n)/(2k))`, using the
/// cached reconstruction-route `F_k`.
pub fn check_lehmer_identity(n: u64, k: usize) -> VerificationReport {
    match f_poly(k) {
        Ok(f) => check_lehmer_identity_with(&f, n, k),
        Err(e) => run(LEHMER_IDENTITY, &[("n", n as i64), ("k", k as i64)], || Err(e)),
    }
}

/// As [`check_lehmer_identity`] with a caller-supplied `F_k`.
pub fn check_lehmer_identity_with(f_k: &MultiPoly, n: u64, k: usize) -> VerificationReport {
    run(LEHMER_IDENTITY, &[("n", n as i64), ("k", k as i64)], || {
        if n < 2 {
            return Ok(Outcome::NotApplicable);
        }
        let oracle = cyclotomic::deriv_ratio(n, k)?;
        let value = f_k.evaluate(&totient_point(n, k)?)?;
        Ok(pass_if(oracle == value, oracle, value))
    })
}

/// `F_{2k+1}` leaves remainder zero on division by `x1 − k`.
pub fn check_conjecture_divisibility(k: usize) -> VerificationReport {
    match f_poly(2 * k + 1) {
        Ok(f) => check_conjecture_divisibility_with(&f, k),
        Err(e) => run(CONJECTURE, &[("k", k as i64)], || Err(e)),
    }
}

pub fn check_conjecture_divisibility_with(f_odd: &MultiPoly, k: usize) -> VerificationReport {
    run(CONJECTURE, &[("k", k as i64)], || {
        let (_, remainder) = f_odd.divide_by_linear(&rat(k as i64));
        Ok(pass_if(remainder.is_zero(), remainder, "0"))
    })
}

/// `2B_{2m}/(2m)!·ω_m(n) ∈ ℤ` for `n ≥ 3`, `1 ≤ m < φ(n)/2`.
pub fn check_integrality(n: u64, m: usize) -> VerificationReport {
    run(INTEGRALITY, &[("n", n as i64), ("m", m as i64)], || {
        if n < 3 || m == 0 || 2 * m as u64 >= ntkernel::euler_phi(n)? {
            return Ok(Outcome::NotApplicable);
        }
        let v = super::integrality_value(n, m)?;
        Ok(pass_if(v.is_integer(), v, "an integer"))
    })
}

/// `F_{k,n} ∈ ℤ[x]` for `n ≥ 3`, `1 ≤ k < φ(n)`, and the explicit and
/// specialised forms of `F_{k,n}` coincide. Uses the cached `F_k`.
pub fn check_fkn_integrality(n: u64, k: usize) -> VerificationReport {
    match f_poly(k) {
        Ok(f) => check_fkn_integrality_with(&f, n, k),
        Err(e) => run(INTEGRALITY, &[("n", n as i64), ("k", k as i64)], || Err(e)),
    }
}

pub fn check_fkn_integrality_with(f_k: &MultiPoly, n: u64, k: usize) -> VerificationReport {
    run(INTEGRALITY, &[("n", n as i64), ("k", k as i64)], || {
        if n < 3 || k == 0 || k as u64 >= ntkernel::euler_phi(n)? {
            return Ok(Outcome::NotApplicable);
        }
        let explicit = super::f_kn_poly(k, n)?;
        let specialised = super::f_kn_by_specialization(f_k, k, n)?;
        if explicit != specialised {
            return Ok(mismatch(explicit, specialised));
        }
        Ok(pass_if(explicit.is_integral(), explicit, "a polynomial in Z[x]"))
    })
}

fn divides(d: &BigInt, r: &Rational) -> bool {
    r.is_integer() && r.to_integer().is_multiple_of(d)
}

/// For `n ≥ 3`, `3 ≤ 2k+1 < φ(n)`: `(φ(n)−2) | 2Φ_n^{(3)}(1)/Φ_n(1)` when
/// `k = 1`, `(φ(n)−2k) | Φ_n^{(2k+1)}(1)/Φ_n(1)` when `k ≥ 2`, and the same
/// divisibilities for `2Φ_n^{(3)}(1)` and `Φ_n^{(2k+1)}(1)` themselves.
pub fn check_ak_congruence(n: u64, k: usize) -> VerificationReport {
    run(AK_CONGRUENCE, &[("n", n as i64), ("k", k as i64)], || {
        if n < 3 || k == 0 {
            return Ok(Outcome::NotApplicable);
        }
        let phi = ntkernel::euler_phi(n)?;
        if 2 * k as u64 + 1 >= phi {
            return Ok(Outcome::NotApplicable);
        }
        let divisor = BigInt::from(phi - 2 * k as u64);
        let scale = if k == 1 { rat(2) } else { Rational::one() };
        let ratio = cyclotomic::deriv_ratio(n, 2 * k + 1)? * &scale;
        if !divides(&divisor, &ratio) {
            return Ok(mismatch(format!("{ratio} (ratio)"), format!("divisor {divisor}")));
        }
        let raw = Rational::from_integer(cyclotomic::deriv_at_1(n, 2 * k + 1)?) * scale;
        Ok(pass_if(divides(&divisor, &raw), format!("{raw} (derivative)"), format!("divisor {divisor}")))
    })
}

/// `W_{p^r} ≡ x^{φ(p^r)} (mod p)`. Rejects composite `p` and `p^r < 3`.
pub fn w_mod_p_check(p: u64, r: u32) -> Result<VerificationReport> {
    if !ntkernel::is_prime(p) {
        return Err(domain(format!("{p} is not prime")));
    }
    let n = p.checked_pow(r).ok_or_else(|| domain("p^r overflows"))?;
    if r == 0 || n < 3 {
        return Err(domain(format!("need r ≥ 1 and p^r ≥ 3 (got {p}^{r})")));
    }
    Ok(run(W_MOD_P, &[("p", p as i64), ("r", r as i64)], || {
        let phi = ntkernel::euler_phi(n)? as usize;
        let reduced = w_poly(n)?.reduce_mod_p(p)?;
        let ok = reduced.len() == phi + 1
            && reduced[phi] == 1
            && reduced[..phi].iter().all(|&c| c == 0);
        let rendered = UniPoly::from_ints(&reduced.iter().map(|&c| c as i64).collect::<Vec<_>>());
        Ok(pass_if(ok, rendered, format!("x^{phi}")))
    }))
}

/// `W_n(x)/Φ_n(1) = 1 + 2 Σ_m (B_{2m}/(2m)!)·ω_m(n)·x^{2m}` coefficientwise
/// for `m ≤ m_max`, with `W_n` even, monic and of degree φ(n). Coefficients
/// with `2m > φ(n)` must vanish on both sides.
pub fn w_expansion_check(n: u64, m_max: usize) -> VerificationReport {
    run(W_EXPANSION, &[("n", n as i64), ("m_max", m_max as i64)], || {
        if n < 3 {
            return Ok(Outcome::NotApplicable);
        }
        let w = w_poly(n)?;
        let phi = ntkernel::euler_phi(n)? as usize;
        if !w.is_even() || !w.is_monic() || w.degree() != Some(phi) {
            return Ok(mismatch(&*w, format!("an even monic polynomial of degree {phi}")));
        }
        let lhs = w.scale(&Rational::new(One::one(), cyclotomic::phi_at_1(n)?.into()));
        if lhs.coeff(0) != Rational::one() {
            return Ok(mismatch(format!("constant term {}", lhs.coeff(0)), "1"));
        }
        for m in 1..=m_max {
            let rhs = super::integrality_value(n, m)?;
            if lhs.coeff(2 * m) != rhs {
                return Ok(mismatch(format!("[x^{}] = {}", 2 * m, lhs.coeff(2 * m)), rhs));
            }
        }
        Ok(Outcome::Pass)
    })
}

/// `Π_{d|n} W_d = V_n`.
pub fn check_w_factorization(n: u64) -> VerificationReport {
    run(W_FACTORIZATION, &[("n", n as i64)], || {
        let mut prod = UniPoly::one();
        for d in ntkernel::divisors(n)? {
            prod = &prod * &*w_poly(d)?;
        }
        let v = v_poly(n as usize)?;
        Ok(pass_if(prod == v, prod, v))
    })
}

/// `candidate` equals `F_k` as built by the partition, series and
/// reconstruction routes.
pub fn check_route_agreement(candidate: &MultiPoly, k: usize) -> VerificationReport {
    run(ROUTE_AGREEMENT, &[("k", k as i64)], || {
        let routes = [
            ("partition", f_poly_partition(k)?),
            ("series", f_series_cached(k)?),
            ("reconstruct", f_poly_reconstruct(k)?),
        ];
        for (name, f) in routes {
            if &f != candidate {
                return Ok(mismatch(candidate, format!("{f} ({name})")));
            }
        }
        Ok(Outcome::Pass)
    })
}
