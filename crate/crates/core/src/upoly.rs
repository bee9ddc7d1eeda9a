//! Dense univariate polynomials over the rationals.
//!
//! `coeffs[i]` is the coefficient of `x^i`; the vector is empty for the zero
//! polynomial and its last entry is nonzero otherwise. Integer polynomials are
//! not a separate type: [`UniPoly::is_integral`] is a checked predicate.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::ntkernel::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x^d − 1`.
    pub fn x_pow_minus_one(d: usize) -> Self {
        Self::monomial(Rational::one(), d) - Self::one()
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| ntkernel::rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// True when only even powers of `x` carry nonzero coefficients.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Quotient and remainder of Euclidean division. `b` must be nonzero.
    fn div_rem(&self, b: &Self) -> (Self, Self) {
        let db = b.degree().expect("division by zero polynomial");
        let Some(da) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if da < db {
            return (Self::zero(), self.clone());
        }
        let lead_inv = b.coeffs[db].recip();
        let support: Vec<usize> = (0..db).filter(|&i| !b.coeffs[i].is_zero()).collect();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); da - db + 1];
        for shift in (0..=da - db).rev() {
            let top = &rem[shift + db];
            if top.is_zero() {
                continue;
            }
            let q = top * &lead_inv;
            for &i in &support {
                let t = &q * &b.coeffs[i];
                rem[shift + i] -= t;
            }
            rem[shift + db] = Rational::zero();
            quot[shift] = q;
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Returns `q` with `self = b·q`, or [`Error::NonDivisible`] carrying the
    /// remainder.
    pub fn exact_div(&self, b: &Self) -> Result<Self> {
        if b.is_zero() {
            return Err(domain("exact_div by the zero polynomial"));
        }
        let (q, r) = self.div_rem(b);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonDivisible { remainder: r })
        }
    }

    /// The `k`-th formal derivative.
    pub fn derivative(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        let coeffs = (k..self.coeffs.len())
            .map(|i| {
                let falling: BigInt = ((i - k + 1)..=i).fold(BigInt::one(), |acc, j| acc * j);
                &self.coeffs[i] * Rational::from_integer(falling)
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, a: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * a + c)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    /// Coefficients reduced into `[0, q)`, ascending, untrimmed. Rejects
    /// non-integral input.
    pub fn reduce_mod_p(&self, q: u64) -> Result<Vec<u64>> {
        if q < 2 {
            return Err(domain("modulus must be at least 2"));
        }
        self.coeffs
            .iter()
            .map(|c| ntkernel::residue(c, q).ok_or(Error::NonIntegral))
            .collect()
    }

    /// `Π_{d|n} family(d)^{μ(n/d)}`.
    ///
    /// All factors with `μ = +1` are multiplied, all with `μ = −1` are
    /// multiplied, and the two products are divided once with [`exact_div`].
    ///
    /// [`exact_div`]: UniPoly::exact_div
    pub fn mobius_product<F>(n: u64, mut family: F) -> Result<Self>
    where
        F: FnMut(u64) -> Self,
    {
        let mut num = Self::one();
        let mut den = Self::one();
        for d in ntkernel::divisors(n)? {
            let mu = ntkernel::mobius(n / d)?;
            if mu == 0 {
                continue;
            }
            let f = family(d);
            if f.is_zero() {
                return Err(domain(alloc::format!("family({d}) is the zero polynomial")));
            }
            if mu > 0 {
                num = &num * &f;
            } else {
                den = &den * &f;
            }
        }
        num.exact_div(&den)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        let rhs_support: Vec<(usize, &Rational)> =
            rhs.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &rhs_support {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

/// Writes `c·m` where `m` is a rendered monomial (empty for the constant
/// term), folding the sign into the separator. `first` selects the leading
/// sign style (`-` vs ` - `).
pub(crate) fn write_term(
    out: &mut impl fmt::Write,
    c: &Rational,
    monomial: &str,
    first: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => out.write_str("-")?,
        (true, false) => {}
        (false, true) => out.write_str(" - ")?,
        (false, false) => out.write_str(" + ")?,
    }
    let abs = c.abs();
    if monomial.is_empty() {
        write!(out, "{abs}")
    } else if abs.is_one() {
        out.write_str(monomial)
    } else {
        write!(out, "{abs}*{monomial}")
    }
}

/// Canonical text: decreasing degree, `x^d`, rational coefficients as `a/b`,
/// e.g. `x^4 - x^2 + 1` or `x^2 - x + 2/3`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut mono = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            mono.clear();
            match d {
                0 => {}
                1 => mono.push('x'),
                _ => {
                    use fmt::Write;
                    write!(mono, "x^{d}")?;
                }
            }
            write_term(f, c, &mono, first)?;
            first = false;
        }
        Ok(())
    }
}

/// Parses expressions in `x` such as `x^4 + x^3 + 1`, `(x - 1)*(x + 1)` or
/// `2/3*x^2 - x`.
impl FromStr for UniPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let p = crate::parse::parse(s, true)?;
        p.to_univariate(1).ok_or_else(|| Error::Parse {
            pos: 0,
            msg: String::from("expression uses variables other than x"),
        })
    }
}
