//! The polynomials `s_k`, `F_k` and `Ω_m`.
//!
//! `F_k` has three independent constructions:
//!
//!  - [`f_poly_partition`]: the sum over partitions of `k` of products of
//!    `−s_j`;
//!  - [`f_polys_series`]: `k!` times the `t^k` coefficient of
//!    `exp(−Q(x, t))` where `Q = Σ s_j t^j / j` is built from `log(1 + t)`;
//!  - [`f_poly_reconstruct`]: falling factorials in `x1` combined with the
//!    `Ω_m`.
//!
//! Agreement of the three is the central cross-check of the crate.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use spin::Mutex;

use crate::error::{domain, Error, Result};
use crate::fps::{self, TruncSeries};
use crate::mpoly::MultiPoly;
use crate::ntkernel::{self, rat, Rational};

mod chebyshev;
pub mod checks;
mod specialize;

pub use chebyshev::{v_odd_coefficient, v_poly, w_poly};
pub use specialize::{f_kn_by_specialization, f_kn_poly, integrality_value, omega_value, totient_point};

fn int(n: &num_bigint::BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

fn inv_factorial(n: usize) -> Rational {
    Rational::new(One::one(), ntkernel::factorial(n))
}

/// `s_k = (2(−1)^{k−1}/(k−1)!) Σ_{m=1}^{k} B_m·st(k, m)·x_m`.
pub fn s_poly(k: usize) -> Result<MultiPoly> {
    if k == 0 {
        return Err(domain("s_k is defined for k ≥ 1"));
    }
    let sign = if k % 2 == 1 { rat(2) } else { rat(-2) };
    let lead = sign * inv_factorial(k - 1);
    let mut out = MultiPoly::zero();
    for m in 1..=k {
        let c = ntkernel::bernoulli(m) * int(&ntkernel::stirling_first(k, m));
        if !c.is_zero() {
            out = &out + &MultiPoly::var(m as u32).scale(&(&lead * c));
        }
    }
    Ok(out)
}

/// `F_k = k! Σ_{λ_1 + 2λ_2 + ⋯ + kλ_k = k} Π_j (−s_j)^{λ_j} / (λ_j!·j^{λ_j})`.
pub fn f_poly_partition(k: usize) -> Result<MultiPoly> {
    if k == 0 {
        return Ok(MultiPoly::one());
    }
    let neg_s: Vec<MultiPoly> = (1..=k).map(|j| s_poly(j).map(|s| -s)).collect::<Result<_>>()?;
    let mut acc = MultiPoly::zero();
    descend(k, k, MultiPoly::one(), &neg_s, &mut acc);
    Ok(acc.scale(&int(&ntkernel::factorial(k))))
}

/// Chooses `λ_j` for `j = part, part−1, …, 1` with `remaining` weight left.
fn descend(part: usize, remaining: usize, prefix: MultiPoly, neg_s: &[MultiPoly], acc: &mut MultiPoly) {
    if remaining == 0 {
        *acc = &*acc + &prefix;
        return;
    }
    if part == 0 {
        return;
    }
    let s = &neg_s[part - 1];
    let mut term = prefix;
    let mut lambda = 0usize;
    loop {
        descend(part - 1, remaining - lambda * part, term.clone(), neg_s, acc);
        lambda += 1;
        if lambda * part > remaining {
            break;
        }
        // term ← term·(−s_part)/(λ·part)
        term = (&term * s).scale(&Rational::new(One::one(), ((lambda * part) as i64).into()));
    }
}

/// `Q(x, t) = −2 Σ_{n≥1} (B_n/n!)·(−log(1+t))^n·x_n` through `t^order`.
pub fn q_series(order: usize) -> TruncSeries<MultiPoly> {
    let neg_log = TruncSeries::<Rational>::t(order).log1p().expect("t has zero constant term").neg();
    let mut acc = TruncSeries::<MultiPoly>::zero(order);
    let mut power = TruncSeries::<Rational>::one(order);
    for n in 1..=order {
        power = power.mul(&neg_log).expect("same order");
        let c = rat(-2) * ntkernel::bernoulli(n) * inv_factorial(n);
        if c.is_zero() {
            continue;
        }
        let term = TruncSeries::<MultiPoly>::lift(&power).times_coeff(&MultiPoly::var(n as u32).scale(&c));
        acc = acc.add(&term).expect("same order");
    }
    acc
}

/// `F_0, …, F_{k_max}` read off `exp(−Q)`. Also confirms
/// `[t^j]Q = s_j/j` for every `j ≤ k_max`.
pub fn f_polys_series(k_max: usize) -> Result<Vec<MultiPoly>> {
    if k_max == 0 {
        return Ok(alloc::vec![MultiPoly::one()]);
    }
    let q = q_series(k_max);
    for j in 1..=k_max {
        let expected = s_poly(j)?.scale(&Rational::new(One::one(), (j as i64).into()));
        if q.coeff(j) != &expected {
            return Err(Error::InternalInconsistency(format!("[t^{j}]Q differs from s_{j}/{j}")));
        }
    }
    let p = q.neg().exp()?;
    Ok(p.into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(k, c)| c.scale(&int(&ntkernel::factorial(k))))
        .collect())
}

/// `2·arcsinh(u/2)` through `u^order`.
pub fn two_arcsinh_half(order: usize) -> TruncSeries<Rational> {
    let a = fps::arcsinh_series(order);
    TruncSeries::from_fn(order, |i| {
        a.coeff(i) * Rational::new(2.into(), num_traits::pow(num_bigint::BigInt::from(2), i))
    })
}

/// `Ω_1, …, Ω_{m_max}` (index `m − 1`), extracted from
/// `exp(2 Σ_ν (B_{2ν}/(2ν)!)·(2·arcsinh(u/2))^{2ν}·x_{2ν})`.
pub fn omega_polys(m_max: usize) -> Result<Vec<MultiPoly>> {
    let order = 2 * m_max;
    if m_max == 0 {
        return Ok(Vec::new());
    }
    let s = two_arcsinh_half(order);
    let s_sq = s.mul(&s)?;
    let mut power = TruncSeries::<Rational>::one(order);
    let mut arg = TruncSeries::<MultiPoly>::zero(order);
    for nu in 1..=m_max {
        power = power.mul(&s_sq)?;
        let c = rat(2) * ntkernel::bernoulli(2 * nu) * inv_factorial(2 * nu);
        let x = MultiPoly::var(2 * nu as u32).scale(&c);
        arg = arg.add(&TruncSeries::<MultiPoly>::lift(&power).times_coeff(&x))?;
    }
    let r = arg.exp()?;
    for (i, c) in r.coeffs().iter().enumerate() {
        if i % 2 == 1 && !c.is_zero() {
            return Err(Error::InternalInconsistency(format!("odd coefficient u^{i} of the Ω series is nonzero")));
        }
    }
    (1..=m_max)
        .map(|m| {
            let b = rat(2) * ntkernel::bernoulli(2 * m) * inv_factorial(2 * m);
            Ok(r.coeff(2 * m).scale(&b.recip()))
        })
        .collect()
}

static OMEGA_CACHE: Mutex<Vec<MultiPoly>> = Mutex::new(Vec::new());
static F_CACHE: Mutex<Vec<MultiPoly>> = Mutex::new(Vec::new());

/// Returns the first `len` entries of a cached table, rebuilding it with
/// `build(len)` when it is too short.
fn cached_prefix(
    cache: &Mutex<Vec<MultiPoly>>,
    len: usize,
    build: impl FnOnce(usize) -> Result<Vec<MultiPoly>>,
) -> Result<Vec<MultiPoly>> {
    {
        let table = cache.lock();
        if table.len() >= len {
            return Ok(table[..len].to_vec());
        }
    }
    let fresh = build(len)?;
    let mut table = cache.lock();
    if table.len() < fresh.len() {
        *table = fresh.clone();
    }
    Ok(fresh[..len].to_vec())
}

/// `Ω_m` (cached).
pub fn omega_poly(m: usize) -> Result<MultiPoly> {
    if m == 0 {
        return Err(domain("Ω_m is defined for m ≥ 1"));
    }
    Ok(cached_prefix(&OMEGA_CACHE, m, omega_polys)?.pop().expect("m ≥ 1"))
}

/// `(x1 − shift)_len` expanded in `x1`.
pub fn falling_x1(shift: usize, len: usize) -> MultiPoly {
    let x1 = MultiPoly::var(1);
    (0..len).fold(MultiPoly::one(), |acc, i| {
        &acc * &(&x1 - &MultiPoly::constant(rat((shift + i) as i64)))
    })
}

/// `F_k = (x1)_k + 2 Σ_{m=1}^{⌊k/2⌋} B_{2m}·C(k, 2m)·(x1 − m)_{k−2m}·Ω_m`.
pub fn f_poly_reconstruct(k: usize) -> Result<MultiPoly> {
    let omegas = if k >= 2 { cached_prefix(&OMEGA_CACHE, k / 2, omega_polys)? } else { Vec::new() };
    f_reconstruct_with(k, &omegas)
}

fn f_reconstruct_with(k: usize, omegas: &[MultiPoly]) -> Result<MultiPoly> {
    let mut acc = falling_x1(0, k);
    for m in 1..=k / 2 {
        let c = rat(2) * ntkernel::bernoulli(2 * m) * int(&ntkernel::binomial(k as i64, 2 * m));
        acc = &acc + &(&falling_x1(m, k - 2 * m) * &omegas[m - 1]).scale(&c);
    }
    Ok(acc)
}

/// `F_k` via the reconstruction route, cached.
pub fn f_poly(k: usize) -> Result<MultiPoly> {
    Ok(cached_prefix(&F_CACHE, k + 1, |len| {
        let k_max = len - 1;
        let omegas = omega_polys(k_max / 2)?;
        (0..=k_max).map(|k| f_reconstruct_with(k, &omegas)).collect()
    })?
    .pop()
    .expect("k + 1 ≥ 1"))
}

static SERIES_CACHE: Mutex<Vec<MultiPoly>> = Mutex::new(Vec::new());

/// `F_k` via the series route, cached.
pub(crate) fn f_series_cached(k: usize) -> Result<MultiPoly> {
    Ok(cached_prefix(&SERIES_CACHE, k + 1, |len| f_polys_series(len - 1))?
        .pop()
        .expect("k + 1 ≥ 1"))
}

/// Which construction produced a table of `F_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Partition,
    Series,
    Reconstruction,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Partition, Route::Series, Route::Reconstruction];

    pub fn as_str(self) -> &'static str {
        match self {
            Route::Partition => "partition",
            Route::Series => "series",
            Route::Reconstruction => "reconstruct",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Route::ALL.into_iter().find(|r| r.as_str() == s)
    }
}

/// `s_1..s_{k_max}`, `F_0..F_{k_max}` and `Ω_1..Ω_{⌊k_max/2⌋}` built along
/// one route.
#[derive(Clone, Debug, PartialEq)]
pub struct LehmerTable {
    k_max: usize,
    s_polys: Vec<MultiPoly>,
    f_polys: Vec<MultiPoly>,
    omega_polys: Vec<MultiPoly>,
    route: Route,
}

impl LehmerTable {
    pub fn build(k_max: usize, route: Route) -> Result<Self> {
        if k_max == 0 {
            return Err(domain("LehmerTable needs k_max ≥ 1"));
        }
        let s_polys = (1..=k_max).map(s_poly).collect::<Result<Vec<_>>>()?;
        let omega_polys = omega_polys(k_max / 2)?;
        let f_polys = match route {
            Route::Partition => (0..=k_max).map(f_poly_partition).collect::<Result<Vec<_>>>()?,
            Route::Series => f_polys_series(k_max)?,
            Route::Reconstruction => {
                (0..=k_max).map(|k| f_reconstruct_with(k, &omega_polys)).collect::<Result<Vec<_>>>()?
            }
        };
        Ok(Self { k_max, s_polys, f_polys, omega_polys, route })
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn route(&self) -> Route {
        self.route
    }

    /// `s_j` for `1 ≤ j ≤ k_max`.
    pub fn s(&self, j: usize) -> Option<&MultiPoly> {
        j.checked_sub(1).and_then(|i| self.s_polys.get(i))
    }

    /// `F_k` for `0 ≤ k ≤ k_max`.
    pub fn f(&self, k: usize) -> Option<&MultiPoly> {
        self.f_polys.get(k)
    }

    /// `Ω_m` for `1 ≤ m ≤ k_max/2`.
    pub fn omega(&self, m: usize) -> Option<&MultiPoly> {
        m.checked_sub(1).and_then(|i| self.omega_polys.get(i))
    }

    pub fn f_polys(&self) -> &[MultiPoly] {
        &self.f_polys
    }

    pub fn s_polys(&self) -> &[MultiPoly] {
        &self.s_polys
    }

    pub fn omega_polys(&self) -> &[MultiPoly] {
        &self.omega_polys
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_poly(1).unwrap(), p("-x1"));
        assert_eq!(s_poly(2).unwrap(), p("(3x1 - x2)/3"));
        assert_eq!(s_poly(4).unwrap(), p("(90x1 - 55x2 + x4)/90"));
        assert!(s_poly(0).is_err());
    }

    #[test]
    fn partition_examples() {
        assert_eq!(f_poly_partition(0).unwrap(), MultiPoly::one());
        assert_eq!(f_poly_partition(1).unwrap(), p("x1"));
        assert_eq!(f_poly_partition(2).unwrap(), p("(3x1^2 - 3x1 + x2)/3"));
        assert_eq!(f_poly_partition(3).unwrap(), p("(x1-1)(x1^2-2x1+x2)"));
    }

    #[test]
    fn series_examples() {
        assert_eq!(f_polys_series(1).unwrap(), [MultiPoly::one(), p("x1")]);
        let f = f_polys_series(5).unwrap();
        assert_eq!(
            f[5],
            p("(1/3)(x1 - 2)(3x1^4 - 24x1^3 + (10x2 + 57)x1^2 - (40x2+36)x1 + 5x2^2 + 25x2 - x4)")
        );
        let q = q_series(5);
        for j in 1..=5 {
            assert_eq!(q.coeff(j).scale(&rat(j as i64)), s_poly(j).unwrap());
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_poly(1).unwrap(), p("x2"));
        assert_eq!(omega_poly(2).unwrap(), p("x4 - 5x2(x2-1)"));
        assert_eq!(omega_poly(3).unwrap(), p("x6 - 7x4(x2-1) + (35/3)x2(x2-1)(x2-2) + (14/3)x2"));
        assert!(omega_poly(0).is_err());
    }

    #[test]
    fn reconstruct_examples() {
        assert_eq!(f_poly_reconstruct(1).unwrap(), p("x1"));
        assert_eq!(f_poly_reconstruct(3).unwrap(), p("x1(x1-1)(x1-2) + (x1-1)x2"));
        assert_eq!(
            f_poly_reconstruct(4).unwrap(),
            p("(1/15)(15x1^4 - 90x1^3 + (30x2 + 165)x1^2 - (90x2+90)x1 + 5x2^2 + 55x2 - x4)")
        );
        assert_eq!(f_poly(4).unwrap(), f_poly_reconstruct(4).unwrap());
    }

    #[test]
    fn tables_agree_across_routes() {
        let tables: Vec<_> = Route::ALL.iter().map(|&r| LehmerTable::build(8, r).unwrap()).collect();
        assert_eq!(tables[0].f_polys(), tables[1].f_polys());
        assert_eq!(tables[1].f_polys(), tables[2].f_polys());
        assert_eq!(tables[0].f(0), Some(&MultiPoly::one()));
        assert_eq!(tables[0].omega(4), Some(&omega_poly(4).unwrap()));
        assert_eq!(tables[0].s(8), Some(&s_poly(8).unwrap()));
        assert_eq!(tables[0].s(0), None);
        assert_eq!(Route::parse("series"), Some(Route::Series));
    }
}
