//! Truncated formal power series in one variable `t`.
//!
//! A [`TruncSeries`] of order `N` keeps the coefficients of `t^0 … t^N`.
//! Coefficients live in any [`Ring`] that is also an algebra over the
//! rationals: the rationals themselves for scalar identities, and
//! [`MultiPoly`] for the generating series whose coefficients are polynomials
//! in `x1, x2, …`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mpoly::MultiPoly;
use crate::ntkernel::{self, rat, Rational};

/// Commutative ring containing the rationals.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: &Rational) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, r: &Rational) -> Self;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, r: &Rational) -> Self {
        self * r
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        MultiPoly::constant(r.clone())
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, r: &Rational) -> Self {
        self.scale(r)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// Builds a series of the given order, padding with zeros or dropping
    /// coefficients past `t^order`.
    pub fn new(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.resize(order + 1, R::zero());
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Self { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![R::one()])
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::new(order, vec![R::zero(), R::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.clone())
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order(), other.order()))
        }
    }

    fn require_zero_constant(&self) -> Result<()> {
        if self.coeffs[0].is_zero() {
            Ok(())
        } else {
            Err(Error::NonzeroConstantTerm)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.minus(b)).collect() })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Self { coeffs: out }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(R::negated).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.scaled(r)).collect() }
    }

    /// Multiplies every coefficient by a ring element.
    pub fn times_coeff(&self, c: &R) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.times(c)).collect() }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| acc.mul_unchecked(self))
    }

    /// Formal derivative; the top coefficient becomes zero.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        Self::from_fn(n, |i| if i < n { self.coeffs[i + 1].scaled(&rat(i as i64 + 1)) } else { R::zero() })
    }

    /// Antiderivative with zero constant term; the old top coefficient is
    /// dropped.
    pub fn integral(&self) -> Self {
        Self::from_fn(self.order(), |i| {
            if i == 0 {
                R::zero()
            } else {
                self.coeffs[i - 1].scaled(&Rational::new(1.into(), (i as i64).into()))
            }
        })
    }

    /// `exp(f)` for `f(0) = 0`, via `n·g_n = Σ_{j=1}^{n} j·f_j·g_{n−j}`.
    pub fn exp(&self) -> Result<Self> {
        self.require_zero_constant()?;
        let n = self.order();
        let mut g: Vec<R> = Vec::with_capacity(n + 1);
        g.push(R::one());
        for i in 1..=n {
            let mut acc = R::zero();
            for j in 1..=i {
                if !self.coeffs[j].is_zero() {
                    acc = acc.plus(&self.coeffs[j].times(&g[i - j]).scaled(&rat(j as i64)));
                }
            }
            g.push(acc.scaled(&Rational::new(1.into(), (i as i64).into())));
        }
        Ok(Self { coeffs: g })
    }

    /// `log(1 + f)` for `f(0) = 0`, via `(1 + f)·L' = f'`.
    pub fn log1p(&self) -> Result<Self> {
        self.require_zero_constant()?;
        let n = self.order();
        let mut l: Vec<R> = vec![R::zero(); n + 1];
        for i in 1..=n {
            // i·L_i = i·f_i − Σ_{j=1}^{i−1} j·L_j·f_{i−j}
            let mut acc = self.coeffs[i].scaled(&rat(i as i64));
            for (j, lj) in l.iter().enumerate().take(i).skip(1) {
                if !lj.is_zero() && !self.coeffs[i - j].is_zero() {
                    acc = acc.minus(&lj.times(&self.coeffs[i - j]).scaled(&rat(j as i64)));
                }
            }
            l[i] = acc.scaled(&Rational::new(1.into(), (i as i64).into()));
        }
        Ok(Self { coeffs: l })
    }

    /// `self(g(t))` for `g(0) = 0`, by Horner's rule over the coefficients
    /// of `self`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.same_order(g)?;
        g.require_zero_constant()?;
        let n = self.order();
        let mut acc = Self::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_unchecked(g);
            acc.coeffs[0] = acc.coeffs[0].plus(c);
        }
        Ok(acc)
    }

    /// `(1 + f)^alpha = Σ C(alpha, n)·f^n` for `f(0) = 0`.
    pub fn binomial_pow(&self, alpha: &Rational) -> Result<Self> {
        self.require_zero_constant()?;
        let outer = Self::from_fn(self.order(), |k| R::from_rational(&ntkernel::binomial_rational(alpha, k)));
        outer.compose(self)
    }

    /// Lifts a rational series into this coefficient ring.
    pub fn lift(s: &TruncSeries<Rational>) -> Self {
        Self { coeffs: s.coeffs.iter().map(R::from_rational).collect() }
    }
}

/// Taylor series of `arcsinh(z)` at 0 through `z^order`: the term-by-term
/// integral of `(1 + z²)^{−1/2}`.
pub fn arcsinh_series(order: usize) -> TruncSeries<Rational> {
    let z_sq = TruncSeries::<Rational>::new(order, vec![rat(0), rat(0), rat(1)]);
    z_sq.binomial_pow(&ntkernel::ratio(-1, 2))
        .expect("z^2 has zero constant term")
        .integral()
}

/// `Σ_{n≤order} t^n / n!`.
pub fn exp_t_series(order: usize) -> TruncSeries<Rational> {
    TruncSeries::from_fn(order, |n| Rational::new(1.into(), ntkernel::factorial(n)))
}
