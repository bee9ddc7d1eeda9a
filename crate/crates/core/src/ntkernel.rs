//! Exact scalars and the classical arithmetic functions.
//!
//! Inputs are machine integers (`u64` for the argument of an arithmetic
//! function, `usize` for orders and indices); anything that can grow is
//! returned as a [`BigInt`] or [`Rational`]. Bernoulli and Stirling numbers
//! are memoised in process-wide tables guarded by a spin lock.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use spin::Mutex;

use crate::error::{domain, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a reduced rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Prime factorisation as `(prime, exponent)` pairs with strictly increasing
/// primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// `Some((p, r))` when the factored number is `p^r` with `r ≥ 1`.
    pub fn prime_power(&self) -> Option<(u64, u32)> {
        match self.pairs.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|&(_, e)| e == 1)
    }

    /// Multiplies the factorisation back out.
    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// Factorises `n` by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(domain("cannot factorize 0"));
    }
    let mut pairs = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization { pairs })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.pairs == [(n, 1)]).unwrap_or(false)
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut divs = vec![1u64];
    for &(p, e) in f.pairs() {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Möbius function μ(n).
pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    if !f.is_squarefree() {
        return Ok(0);
    }
    Ok(if f.pairs().len() % 2 == 0 { 1 } else { -1 })
}

/// Jordan totient `J_k(n) = n^k Π_{p|n} (1 − p^{−k})`, evaluated in integers
/// as `Π_{p^e || n} p^{k(e−1)} (p^k − 1)`.
pub fn jordan_totient(k: u32, n: u64) -> Result<BigInt> {
    if k == 0 || n == 0 {
        return Err(domain(format!("jordan_totient needs k, n ≥ 1 (got k={k}, n={n})")));
    }
    let f = factorize(n)?;
    let mut acc = BigInt::one();
    for &(p, e) in f.pairs() {
        let pk = num_traits::pow(BigInt::from(p), k as usize);
        acc *= num_traits::pow(pk.clone(), (e - 1) as usize) * (pk - 1u32);
    }
    Ok(acc)
}

/// Euler's totient φ(n) = J_1(n).
pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.pairs().iter().map(|&(p, e)| p.pow(e - 1) * (p - 1)).product())
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Falling factorial `(a)_k = a(a−1)⋯(a−k+1)`, with `(a)_0 = 1`.
pub fn falling_factorial(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term -= Rational::one();
    }
    acc
}

/// `C(n, k) = (n)_k / k!` for any integer `n`, including negative ones.
pub fn binomial(n: i64, k: usize) -> BigInt {
    let num = falling_factorial(&rat(n), k);
    let r = num / Rational::from_integer(factorial(k));
    debug_assert!(r.is_integer());
    r.to_integer()
}

/// Generalised binomial coefficient `C(alpha, k)` for rational `alpha`.
pub fn binomial_rational(alpha: &Rational, k: usize) -> Rational {
    falling_factorial(alpha, k) / Rational::from_integer(factorial(k))
}

static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_m` under the convention `B_1 = −1/2`.
///
/// Uses `Σ_{j=0}^{m} C(m+1, j) B_j = 0` for `m ≥ 1`.
pub fn bernoulli(m: usize) -> Rational {
    let mut table = BERNOULLI.lock();
    if table.is_empty() {
        table.push(Rational::one());
    }
    while table.len() <= m {
        let next = table.len();
        let mut sum = Rational::zero();
        let mut c = BigInt::one(); // C(next+1, j)
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                sum += b * Rational::from_integer(c.clone());
            }
            c = c * (next + 1 - j) / (j + 1);
        }
        table.push(-sum / rat(next as i64 + 1));
    }
    table[m].clone()
}

static STIRLING: Mutex<Vec<Vec<BigInt>>> = Mutex::new(Vec::new());

/// Unsigned Stirling number of the first kind, the number of permutations of
/// `n` elements with `k` cycles.
pub fn stirling_first(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut rows = STIRLING.lock();
    if rows.is_empty() {
        rows.push(vec![BigInt::one()]);
    }
    while rows.len() <= n {
        let prev_n = rows.len() - 1;
        let prev = &rows[prev_n];
        let mut row = vec![BigInt::zero(); prev_n + 2];
        for j in 0..=prev_n {
            row[j] += &prev[j] * prev_n;
            row[j + 1] += &prev[j];
        }
        rows.push(row);
    }
    rows[n][k].clone()
}

/// Reduces an integral rational mod `q` into `[0, q)`.
pub(crate) fn residue(r: &Rational, q: u64) -> Option<u64> {
    if !r.is_integer() {
        return None;
    }
    let m = r.to_integer().mod_floor(&BigInt::from(q));
    u64::try_from(m.abs()).ok()
}
