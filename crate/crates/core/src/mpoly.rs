//! Sparse multivariate polynomials over the rationals in `x1, x2, x3, …`.
//!
//! A polynomial is a map from [`Monomial`] to nonzero coefficient. Monomials
//! store only the variables that occur, so two polynomials are equal exactly
//! when their term maps are, regardless of how many variables a caller
//! thinks of them as having.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ntkernel::Rational;
use crate::upoly::{write_term, UniPoly};

/// Exponent vector as sorted `(variable, exponent)` pairs with exponents ≥ 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(j: u32) -> Self {
        Self::from_pairs([(j, 1)])
    }

    /// Builds from arbitrary pairs; repeated variables are merged and zero
    /// exponents dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Self(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn exponent(&self, var: u32) -> u32 {
        self.0
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// The monomial with `var` removed, and the exponent it had.
    pub fn split_off(&self, var: u32) -> (u32, Monomial) {
        let e = self.exponent(var);
        (e, Monomial(self.0.iter().copied().filter(|&(v, _)| v != var).collect()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self(out)
    }

    /// Graded lexicographic order used for rendering: higher total degree
    /// first, then the larger exponent of `x1`, then of `x2`, and so on.
    pub fn grlex_cmp(&self, other: &Self) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let (mut i, mut j) = (0, 0);
            loop {
                let va = a.get(i).map(|p| p.0);
                let vb = b.get(j).map(|p| p.0);
                let v = match (va, vb) {
                    (None, None) => return Ordering::Equal,
                    (Some(x), None) | (None, Some(x)) => x,
                    (Some(x), Some(y)) => x.min(y),
                };
                let ea = if va == Some(v) { i += 1; a[i - 1].1 } else { 0 };
                let eb = if vb == Some(v) { j += 1; b[j - 1].1 } else { 0 };
                if ea != eb {
                    return eb.cmp(&ea);
                }
            }
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    /// The variable `x_j`.
    pub fn var(j: u32) -> Self {
        Self::term(Rational::one(), Monomial::var(j))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Embeds a univariate polynomial as a polynomial in `x_var`.
    pub fn from_univariate(var: u32, p: &UniPoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(d, c)| {
            (Monomial::from_pairs([(var, d as u32)]), c.clone())
        }))
    }

    /// `Some` when no variable other than `x_var` occurs.
    pub fn to_univariate(&self, var: u32) -> Option<UniPoly> {
        let mut coeffs = Vec::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(var);
            if !rest.is_one() {
                return None;
            }
            let e = e as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] += c;
        }
        Some(UniPoly::from_coeffs(coeffs))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in rendering order (see [`Monomial::grlex_cmp`]).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.grlex_cmp(b.0));
        v
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn variables(&self) -> BTreeSet<u32> {
        self.terms.keys().flat_map(|m| m.pairs().iter().map(|&(v, _)| v)).collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Rational::is_integer)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces the assigned variables by their values and keeps the rest.
    pub fn substitute(&self, assignment: &BTreeMap<u32, Rational>) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.pairs() {
                match assignment.get(&v) {
                    Some(val) => coeff *= num_traits::pow(val.clone(), e as usize),
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial(rest), coeff);
        }
        out
    }

    /// Evaluates at a full assignment.
    pub fn evaluate(&self, assignment: &BTreeMap<u32, Rational>) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let val = assignment.get(&v).ok_or(Error::UnassignedVariable(v))?;
                t *= num_traits::pow(val.clone(), e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Coefficients of `self` viewed as a polynomial in `x_var`; entry `i`
    /// multiplies `x_var^i` and is free of `x_var`.
    pub fn coefficients_in(&self, var: u32) -> Vec<MultiPoly> {
        let mut out: Vec<MultiPoly> = Vec::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(var);
            let e = e as usize;
            if out.len() <= e {
                out.resize(e + 1, MultiPoly::zero());
            }
            out[e].add_term(rest, c.clone());
        }
        out
    }

    /// Synthetic division by `x1 − c`: returns `(q, r)` with
    /// `self = (x1 − c)·q + r` and `r` free of `x1`.
    pub fn divide_by_linear(&self, c: &Rational) -> (MultiPoly, MultiPoly) {
        let coeffs = self.coefficients_in(1);
        if coeffs.len() <= 1 {
            return (Self::zero(), self.clone());
        }
        let d = coeffs.len() - 1;
        // q_{i-1} = a_i + c·q_i, descending from q_{d-1} = a_d.
        let mut q_coeffs = alloc::vec![MultiPoly::zero(); d];
        let mut carry = MultiPoly::zero();
        for i in (1..=d).rev() {
            carry = &coeffs[i] + &carry.scale(c);
            q_coeffs[i - 1] = carry.clone();
        }
        let remainder = &coeffs[0] + &carry.scale(c);
        let x1 = Self::var(1);
        let mut quotient = Self::zero();
        let mut x_pow = Self::one();
        for qc in &q_coeffs {
            quotient = &quotient + &(qc * &x_pow);
            x_pow = &x_pow * &x1;
        }
        (quotient, remainder)
    }

    /// Rational content `c` with `self / c` integral, primitive, and with a
    /// positive leading coefficient in rendering order.
    pub fn content(&self) -> Rational {
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in self.terms.values() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        let lead_negative = self.sorted_terms().first().is_some_and(|(_, c)| c.is_negative());
        let content = Rational::new(g, l);
        if lead_negative {
            -content
        } else {
            content
        }
    }

    fn write_expanded(&self, f: &mut impl fmt::Write) -> fmt::Result {
        let mut mono = String::new();
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            mono.clear();
            {
                use fmt::Write;
                write!(mono, "{m}")?;
            }
            write_term(f, c, &mono, i == 0)?;
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Canonical text. Integral polynomials are written expanded in graded
/// lexicographic order (`x4 - 5*x2^2 + 5*x2` renders as
/// `-5*x2^2 + 5*x2 + x4`); anything with a denominator is written as its
/// rational content times a primitive integral polynomial, e.g.
/// `(1/3)*(3*x1^2 - 3*x1 + x2)`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if let Some(c) = self.as_constant() {
            return write!(f, "{c}");
        }
        if self.is_integral() {
            return self.write_expanded(f);
        }
        let content = self.content();
        let primitive = self.scale(&content.recip());
        write!(f, "({content})*")?;
        if primitive.num_terms() > 1 {
            f.write_str("(")?;
            primitive.write_expanded(f)?;
            f.write_str(")")
        } else {
            primitive.write_expanded(f)
        }
    }
}

/// Accepts the canonical text plus ordinary notation: implicit
/// multiplication, `x_1`/`x_{12}` variable spellings, nested parentheses and
/// division by constants.
impl FromStr for MultiPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse(s, false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::ntkernel::{rat, ratio};

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn assign(pairs: &[(u32, Rational)]) -> BTreeMap<u32, Rational> {
        pairs.iter().cloned().collect()
    }

    #[test]
    fn ring_examples() {
        let prod = &MultiPoly::var(1) * &MultiPoly::var(2);
        assert_eq!(prod.terms().collect::<Vec<_>>(), [(&Monomial::from_pairs([(1, 1), (2, 1)]), &rat(1))]);
        assert_eq!(p("x1 - 1").pow(2), p("x1^2 - 2*x1 + 1"));
        assert_eq!(
            p("x1 - 1") * p("x1^2 - 2*x1 + x2"),
            p("x1^3 - 3*x1^2 + x1*x2 + 2*x1 - x2")
        );
        assert!((p("x1 + x2") - p("x2 + x1")).is_zero());
    }

    #[test]
    fn substitute_examples() {
        let f2 = p("(1/3)(3x_1^2 - 3x_1 + x_2)");
        assert_eq!(f2.evaluate(&assign(&[(1, rat(1)), (2, rat(2))])).unwrap(), ratio(2, 3));
        assert_eq!(MultiPoly::var(1).evaluate(&assign(&[(1, ratio(7, 5))])).unwrap(), ratio(7, 5));
        let f3 = p("(x1-1)(x1^2-2x1+x2)");
        assert_eq!(f3.substitute(&assign(&[(2, rat(6))])), p("(x1-1)*(x1^2-2*x1+6)"));
        assert_eq!(f3.evaluate(&assign(&[(1, rat(1))])), Err(Error::UnassignedVariable(2)));
    }

    #[test]
    fn divide_by_linear_examples() {
        let f3 = p("(x1-1)(x1^2-2x1+x2)");
        let (q, r) = f3.divide_by_linear(&rat(1));
        assert_eq!(q, p("x1^2 - 2*x1 + x2"));
        assert!(r.is_zero());

        let (q, r) = p("x2").divide_by_linear(&rat(5));
        assert!(q.is_zero());
        assert_eq!(r, p("x2"));

        let (q, r) = p("x1^2*x4 + 3").divide_by_linear(&rat(2));
        assert_eq!(q, p("x1*x4 + 2*x4"));
        assert_eq!(r, p("4*x4 + 3"));
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(p("x4 - 5*x2*(x2 - 1)").to_string(), "-5*x2^2 + 5*x2 + x4");
        assert_eq!(p("(1/3)(3x1^2 - 3x1 + x2)").to_string(), "(1/3)*(3*x1^2 - 3*x1 + x2)");
        assert_eq!(p("-(1/2)(2x1 - x2)").to_string(), "(-1/2)*(2*x1 - x2)");
        assert_eq!(p("-x1").to_string(), "-x1");
        assert_eq!(p("x2/3").to_string(), "(1/3)*x2");
        assert_eq!(p("7/2").to_string(), "7/2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(p("x1^2*x2 + x1^3").to_string(), "x1^3 + x1^2*x2");
    }

    #[test]
    fn parse_variants_agree() {
        assert_eq!(p("x_{12} x_1"), p("x1*x12"));
        assert_eq!(p("2(x1+1)^2"), p("2*x1^2 + 4*x1 + 2"));
        assert_eq!(p("x1/2/3"), p("(1/6)*x1"));
        assert!("x1 / x2".parse::<MultiPoly>().is_err());
        assert!("x".parse::<MultiPoly>().is_err());
        assert!("x1 +* 2".parse::<MultiPoly>().is_err());
        assert!("(x1".parse::<MultiPoly>().is_err());
        assert!("x0".parse::<MultiPoly>().is_err());
    }

    #[test]
    fn univariate_round_trip() {
        let u: UniPoly = "x^3 - 2/3*x + 1".parse().unwrap();
        let m = MultiPoly::from_univariate(1, &u);
        assert_eq!(m, p("x1^3 - 2/3*x1 + 1"));
        assert_eq!(m.to_univariate(1), Some(u));
        assert_eq!(p("x1 + x2").to_univariate(1), None);
    }
}
