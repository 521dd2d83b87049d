//! Exact polynomial arithmetic: sparse Laurent polynomials in one variable
//! and bivariate polynomials in `(x, y)`, both with unbounded integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Univariate Laurent polynomial: integer coefficients, integer (possibly
/// negative) exponents. The zero polynomial is the empty map; stored
/// coefficients are never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The monomial `c * t^exp`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (exp, coeff) in iter {
            p.add_term(exp, coeff.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// Coefficient of `t^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_degree - min_degree`; zero for constants, `None` for the zero
    /// polynomial.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_degree()? - self.min_degree()?)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Full coefficient list from `min_degree` to `max_degree`, ascending,
    /// with interior zero coefficients made explicit.
    pub fn coefficients(&self) -> Result<Vec<(i64, BigInt)>> {
        let (lo, hi) = match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::ZeroPolynomial),
        };
        Ok((lo..=hi).map(|e| (e, self.coeff(e))).collect())
    }

    /// Multiply by `t^k`.
    pub fn shifted(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute `t -> 1/t` (the mirror image of a Jones polynomial).
    pub fn mirrored(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluate at `t = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Render with a choice of exponent order, e.g.
    /// `t^-12 - 4t^-11 + 11t^-10 + ... + 4 - t`.
    pub fn render(&self, order: ExpOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(i64, &BigInt)> = self.iter().collect();
        if order == ExpOrder::Descending {
            terms.reverse();
        }
        let mut out = String::new();
        for (i, (exp, coeff)) in terms.iter().enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    out.push('-');
                }
            } else if coeff.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_mag = !mag.is_one() || *exp == 0;
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match exp {
                0 => {}
                1 => out.push('t'),
                e => {
                    out.push_str("t^");
                    out.push_str(&e.to_string());
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpOrder {
    Ascending,
    Descending,
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(ExpOrder::Ascending))
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        Self::monomial(0, n)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (exp, coeff) in rhs.iter() {
            out.add_term(exp, coeff.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (exp, coeff) in rhs.iter() {
            out.add_term(exp, -coeff.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in rhs.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Bivariate polynomial in `(x, y)` with nonnegative exponents and unbounded
/// integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TuttePoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl TuttePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// The monomial `c * x^i y^j`.
    pub fn monomial(x_exp: u32, y_exp: u32, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((x_exp, y_exp), coeff);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for ((i, j), coeff) in iter {
            p.add_term(i, j, coeff.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x_exp: u32, y_exp: u32) -> BigInt {
        self.terms
            .get(&(x_exp, y_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    fn add_term(&mut self, x_exp: u32, y_exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((x_exp, y_exp))
            .or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(x_exp, y_exp));
        }
    }

    /// Substitute `x = -t`, `y = -1/t`: the monomial `c x^i y^j` maps to
    /// `c (-1)^(i+j) t^(i-j)`.
    pub fn eval_at_jones_point(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((i, j), coeff) in self.iter() {
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            out.add_term(i64::from(i) - i64::from(j), coeff * sign);
        }
        out
    }

    /// Swap the roles of `x` and `y` (the Tutte polynomial of the dual graph).
    pub fn transposed(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &TuttePoly {
    type Output = TuttePoly;
    fn add(self, rhs: &TuttePoly) -> TuttePoly {
        let mut out = self.clone();
        for ((i, j), coeff) in rhs.iter() {
            out.add_term(i, j, coeff.clone());
        }
        out
    }
}

impl Mul for &TuttePoly {
    type Output = TuttePoly;
    fn mul(self, rhs: &TuttePoly) -> TuttePoly {
        let mut out = TuttePoly::zero();
        for ((i1, j1), c1) in self.iter() {
            for ((i2, j2), c2) in rhs.iter() {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Add for TuttePoly {
    type Output = TuttePoly;
    fn add(self, rhs: TuttePoly) -> TuttePoly {
        &self + &rhs
    }
}

impl Mul for TuttePoly {
    type Output = TuttePoly;
    fn mul(self, rhs: TuttePoly) -> TuttePoly {
        &self * &rhs
    }
}

impl fmt::Display for TuttePoly {
    /// Canonical monomial order: lexicographic in `(x_exp, y_exp)`,
    /// descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((xe, ye), coeff)) in self.terms.iter().rev().enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    f.write_str("-")?;
                }
            } else if coeff.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let is_const = *xe == 0 && *ye == 0;
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
            }
            match xe {
                0 => {}
                1 => f.write_str("x")?,
                e => write!(f, "x^{e}")?,
            }
            match ye {
                0 => {}
                1 => f.write_str("y")?,
                e => write!(f, "y^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn add_cancels_terms() {
        // (t^2 - t) + t = t^2
        let sum = &p(&[(2, 1), (1, -1)]) + &p(&[(1, 1)]);
        assert_eq!(sum, p(&[(2, 1)]));
    }

    #[test]
    fn add_zero_is_identity() {
        let q = p(&[(3, 2), (-1, 5)]);
        assert_eq!(&q + &LaurentPoly::zero(), q);
    }

    #[test]
    fn add_laurent_tails() {
        // (1 - t^-1) + (t^-1 - t^-2) = 1 - t^-2
        let sum = &p(&[(0, 1), (-1, -1)]) + &p(&[(-1, 1), (-2, -1)]);
        assert_eq!(sum, p(&[(0, 1), (-2, -1)]));
    }

    #[test]
    fn mul_difference_of_squares() {
        let prod = &p(&[(0, 1), (1, 1)]) * &p(&[(0, 1), (1, -1)]);
        assert_eq!(prod, p(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn mul_one_is_identity() {
        let q = p(&[(4, -3), (0, 2), (-2, 7)]);
        assert_eq!(&q * &LaurentPoly::one(), q);
    }

    #[test]
    fn mul_laurent_square() {
        // (1 - t^-1)^2 = 1 - 2t^-1 + t^-2
        let q = p(&[(0, 1), (-1, -1)]);
        assert_eq!(&q * &q, p(&[(0, 1), (-1, -2), (-2, 1)]));
    }

    // Term-list convolution written independently of `Mul`, used as the
    // oracle for randomized multiplication checks.
    fn naive_mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        for (e1, c1) in a.iter() {
            for (e2, c2) in b.iter() {
                terms.push((e1 + e2, c1 * c2));
            }
        }
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        LaurentPoly::from_terms(acc)
    }

    fn random_poly(rng: &mut StdRng) -> LaurentPoly {
        let n = rng.gen_range(0..6);
        LaurentPoly::from_terms(
            (0..n).map(|_| (rng.gen_range(-5..=5i64), rng.gen_range(-9..=9i64))),
        )
    }

    #[test]
    fn ring_axioms_on_random_polys() {
        let mut rng = StdRng::seed_from_u64(0x9e3779b9);
        for _ in 0..200 {
            let a = random_poly(&mut rng);
            let b = random_poly(&mut rng);
            let c = random_poly(&mut rng);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&a + &b, &b + &a);
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert_eq!(&a * &b, naive_mul(&a, &b));
        }
    }

    #[test]
    fn eval_tutte_single_x() {
        assert_eq!(TuttePoly::x().eval_at_jones_point(), p(&[(1, -1)]));
    }

    #[test]
    fn eval_tutte_triangle_polynomial() {
        // x^2 + x + y -> t^2 - t - t^-1
        let t = TuttePoly::from_terms([((2, 0), 1), ((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(t.eval_at_jones_point(), p(&[(2, 1), (1, -1), (-1, -1)]));
    }

    #[test]
    fn eval_tutte_y_squared() {
        let t = TuttePoly::monomial(0, 2, 1);
        assert_eq!(t.eval_at_jones_point(), p(&[(-2, 1)]));
    }

    fn random_tutte(rng: &mut StdRng) -> TuttePoly {
        let n = rng.gen_range(0..5);
        TuttePoly::from_terms((0..n).map(|_| {
            (
                (rng.gen_range(0..4u32), rng.gen_range(0..4u32)),
                rng.gen_range(-9..=9i64),
            )
        }))
    }

    #[test]
    fn jones_point_eval_is_ring_homomorphism() {
        let mut rng = StdRng::seed_from_u64(0xfeedbeef);
        for _ in 0..200 {
            let t1 = random_tutte(&mut rng);
            let t2 = random_tutte(&mut rng);
            let lhs = (&t1 * &t2).eval_at_jones_point();
            let rhs = &t1.eval_at_jones_point() * &t2.eval_at_jones_point();
            assert_eq!(lhs, rhs);
            let sum_lhs = (&t1 + &t2).eval_at_jones_point();
            let sum_rhs = &t1.eval_at_jones_point() + &t2.eval_at_jones_point();
            assert_eq!(sum_lhs, sum_rhs);
        }
    }

    #[test]
    fn coefficients_include_interior_zeros() {
        // t^2 - t^-1 -> [(-1,-1), (0,0), (1,0), (2,1)]
        let coeffs = p(&[(2, 1), (-1, -1)]).coefficients().unwrap();
        let expected: Vec<(i64, BigInt)> = vec![
            (-1, BigInt::from(-1)),
            (0, BigInt::from(0)),
            (1, BigInt::from(0)),
            (2, BigInt::from(1)),
        ];
        assert_eq!(coeffs, expected);
    }

    #[test]
    fn coefficients_of_constant_one() {
        let coeffs = LaurentPoly::one().coefficients().unwrap();
        assert_eq!(coeffs, vec![(0, BigInt::from(1))]);
    }

    #[test]
    fn coefficients_of_zero_poly_fail() {
        assert!(matches!(
            LaurentPoly::zero().coefficients(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn render_sign_normalized() {
        let q = p(&[(-2, 1), (-1, -4), (0, 4), (1, -1)]);
        assert_eq!(q.render(ExpOrder::Ascending), "t^-2 - 4t^-1 + 4 - t");
        assert_eq!(q.render(ExpOrder::Descending), "-t + 4 - 4t^-1 + t^-2");
        assert_eq!(LaurentPoly::zero().render(ExpOrder::Ascending), "0");
    }

    #[test]
    fn tutte_display_descending_lex() {
        let t = TuttePoly::from_terms([((2, 0), 1), ((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(t.to_string(), "x^2 + x + y");
        let u = TuttePoly::from_terms([((0, 1), 1), ((1, 0), 1), ((0, 2), 1)]);
        assert_eq!(u.to_string(), "x + y^2 + y");
    }
}
