//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored in ascending degree order. The representation is
//! canonical: the zero polynomial is the empty vector and otherwise the last
//! coefficient is nonzero, so derived equality is polynomial equality.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![BigInt::one()] }
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    /// `c · x^degree`.
    pub fn monomial<C: Into<BigInt>>(c: C, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    /// From ascending coefficients; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        Polynomial { coeffs }.normalize()
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Parses ascending decimal coefficient strings.
    pub fn from_decimal_strings<S: AsRef<str>>(coeffs: &[S]) -> Result<Self> {
        coeffs
            .iter()
            .map(|s| {
                s.as_ref().parse::<BigInt>().map_err(|_| {
                    Error::InvalidParameter(format!("bad coefficient {:?}", s.as_ref()))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(x^r)`.
    pub fn substitute_power(&self, r: usize) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidParameter(format!(
                "substitution exponent must be at least 1, got {r}"
            )));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * r + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * r] = c.clone();
        }
        Ok(Polynomial { coeffs })
    }

    /// `(1 - x)^m`.
    pub fn one_minus_x_pow(m: usize) -> Self {
        let mut coeffs = Vec::with_capacity(m + 1);
        let mut c = BigInt::one();
        for k in 0..=m {
            coeffs.push(if k % 2 == 0 { c.clone() } else { -c.clone() });
            c = c * (m - k) / (k + 1);
        }
        Polynomial { coeffs }
    }

    /// Exact value at an integer point, by Horner's rule.
    pub fn evaluate(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn evaluate_int(&self, t: i64) -> BigInt {
        self.evaluate(&BigInt::from(t))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// `Σ_k i_k x^k h^(n−k)` where `i_k` are the coefficients of `ind_g`.
///
/// This is `h^n · ind(G, x / h)` with the division cleared, so no rational
/// function is ever formed.
pub fn corona_compose(ind_g: &Polynomial, id_h: &Polynomial, n: usize) -> Result<Polynomial> {
    if id_h.is_zero() {
        return Err(Error::InvalidParameter(
            "corona composition needs a nonzero id(H)".into(),
        ));
    }
    if ind_g.degree().is_some_and(|d| d > n) {
        return Err(Error::InvalidParameter(format!(
            "independence polynomial of degree {} exceeds the vertex count {n}",
            ind_g.degree().unwrap()
        )));
    }
    // powers[j] = id_h^j
    let mut powers = Vec::with_capacity(n + 1);
    powers.push(Polynomial::one());
    for j in 1..=n {
        let next = &powers[j - 1] * id_h;
        powers.push(next);
    }
    let mut acc = Polynomial::zero();
    for (k, c) in ind_g.coefficients().iter().enumerate() {
        if !c.is_zero() {
            acc = acc + powers[n - k].scale(c).shift(k);
        }
    }
    Ok(acc)
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> Polynomial {
    let len = a.len().max(b.len());
    let coeffs = (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect();
    Polynomial::from_coeffs(coeffs)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial { (&self).$m(rhs) }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |a, b| a * b)
    }
}

/// Ascending form, e.g. `1 - 2x + x^2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{k}")?,
                _ => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(p(&[0, 1, 1]) * Polynomial::x(), p(&[0, 0, 1, 1]));
        assert_eq!(p(&[3, 0, -2]).pow(0), Polynomial::one());
        let q = p(&[5, -1, 7]);
        assert!((&q - &q).is_zero());
        assert!((&q - &q).coefficients().is_empty());
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p(&[1, 0, 0]), p(&[1]));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[0, 0, 3]).lowest_degree(), Some(2));
        assert_eq!(Polynomial::monomial(0, 4), Polynomial::zero());
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(p(&[0, 2]).substitute_power(2).unwrap(), p(&[0, 0, 2]));
        let q = p(&[4, 0, -1, 2]);
        assert_eq!(q.substitute_power(1).unwrap(), q);
        assert_eq!(
            p(&[0, 1, 1]).substitute_power(3).unwrap(),
            p(&[0, 0, 0, 1, 0, 0, 1])
        );
        assert!(q.substitute_power(0).is_err());
    }

    #[test]
    fn one_minus_x_powers() {
        assert_eq!(Polynomial::one_minus_x_pow(0), p(&[1]));
        assert_eq!(Polynomial::one_minus_x_pow(1), p(&[1, -1]));
        assert_eq!(Polynomial::one_minus_x_pow(2), p(&[1, -2, 1]));
        assert_eq!(
            Polynomial::one_minus_x_pow(7),
            p(&[1, -1]).pow(7),
        );
    }

    #[test]
    fn corona_compose_examples() {
        // ind(K_2) = 1 + 2x, id(K_1) = x, n = 2 -> 3x^2 = id(P_4)
        assert_eq!(corona_compose(&p(&[1, 2]), &p(&[0, 1]), 2).unwrap(), p(&[0, 0, 3]));
        // ind(K_1) = 1 + x, id(E_2) = x^2, n = 1 -> x + x^2 = id(P_3)
        assert_eq!(corona_compose(&p(&[1, 1]), &p(&[0, 0, 1]), 1).unwrap(), p(&[0, 1, 1]));
        let ind = p(&[1, 4, 3]);
        assert_eq!(corona_compose(&ind, &Polynomial::one(), 3).unwrap(), ind);
        assert!(corona_compose(&ind, &Polynomial::one(), 1).is_err());
        assert!(corona_compose(&ind, &Polynomial::zero(), 3).is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[0, 1, 1]).evaluate_int(1), BigInt::from(2));
        assert_eq!(p(&[9, 1, 1]).evaluate_int(0), BigInt::from(9));
        assert_eq!(p(&[0, 2]).evaluate_int(3), BigInt::from(6));
    }

    #[test]
    fn display_and_strings() {
        assert_eq!(p(&[1, -2, 1]).to_string(), "1 - 2x + x^2");
        assert_eq!(p(&[0, 1, 3]).to_string(), "x + 3x^2");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p(&[0, 1, 1]).to_decimal_strings(), vec!["0", "1", "1"]);
        let big = Polynomial::one_minus_x_pow(80);
        assert_eq!(Polynomial::from_decimal_strings(&big.to_decimal_strings()).unwrap(), big);
    }

    fn poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-50i64..50, 0..7).prop_map(|c| Polynomial::from_i64(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn substitution_is_multiplicative(a in poly(), b in poly(), r in 1usize..5) {
            prop_assert_eq!(
                (&a * &b).substitute_power(r).unwrap(),
                a.substitute_power(r).unwrap() * b.substitute_power(r).unwrap()
            );
        }

        #[test]
        fn corona_with_monomial_is_termwise(
            ind in prop::collection::vec(0i64..20, 1..6),
            s in 1usize..4,
        ) {
            let ind = Polynomial::from_i64(&ind);
            let n = ind.degree().unwrap_or(0) + 1;
            let expected: Polynomial = ind
                .coefficients()
                .iter()
                .enumerate()
                .map(|(k, c)| Polynomial::monomial(c.clone(), k + s * (n - k)))
                .sum();
            prop_assert_eq!(
                corona_compose(&ind, &Polynomial::monomial(1, s), n).unwrap(),
                expected
            );
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in poly(), b in poly(), t in -5i64..5) {
            prop_assert_eq!((&a * &b).evaluate_int(t), a.evaluate_int(t) * b.evaluate_int(t));
        }
    }
}
