//! Dense univariate polynomials in `x` with exact coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// Coefficient ring for [`Poly`].
pub trait Coeff: Clone + PartialEq + Zero + One + Neg<Output = Self> + fmt::Display {
    fn is_negative(&self) -> bool;
}

impl Coeff for BigInt {
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Coeff for BigRational {
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// `coeffs[k]` is the coefficient of `x^k`. Never stores trailing zeros, so
/// the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl<T: Coeff> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c·x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn x_pow(k: usize) -> Self {
        Poly::monomial(T::one(), k)
    }

    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^m`; zero above the degree.
    pub fn coeff(&self, m: usize) -> T {
        self.coeffs.get(m).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &T) -> Self
    where
        for<'a> &'a T: Mul<&'a T, Output = T>,
    {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Drop every power above `x^max`.
    pub fn truncate(&self, max: usize) -> Self {
        Poly::from_coeffs(self.coeffs.iter().take(max + 1).cloned().collect())
    }

    pub fn eval(&self, x: &T) -> T
    where
        for<'a> &'a T: Mul<&'a T, Output = T>,
        T: for<'a> Add<&'a T, Output = T>,
    {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| &acc * x + c)
    }

    /// Product truncated to powers `≤ max`; exact for the kept powers.
    pub fn mul_truncated(&self, other: &Self, max: Option<usize>) -> Self
    where
        for<'a> &'a T: Mul<&'a T, Output = T>,
        T: for<'a> AddAssign<&'a T>,
    {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(max) = max {
            len = len.min(max + 1);
        }
        let mut out = vec![T::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }
}

impl IntPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rat(&self) -> RatPoly {
        Poly { coeffs: self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect() }
    }

    /// Value at `x = 1`, i.e. the sum of the coefficients.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl RatPoly {
    /// `Some` iff every coefficient is an integer; otherwise the first
    /// offending power of `x`.
    pub fn to_int(&self) -> Result<IntPoly, usize> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if c.is_integer() { Ok(c.to_integer()) } else { Err(k) })
            .collect::<Result<Vec<_>, _>>()
            .map(Poly::from_coeffs)
    }
}

impl<T> Default for Poly<T> {
    fn default() -> Self {
        Poly { coeffs: Vec::new() }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $assign:ident, $assign_method:ident) => {
        impl<T: Coeff + for<'a> $assign<&'a T>> $assign<&Poly<T>> for Poly<T> {
            fn $assign_method(&mut self, rhs: &Poly<T>) {
                if self.coeffs.len() < rhs.coeffs.len() {
                    self.coeffs.resize(rhs.coeffs.len(), T::zero());
                }
                for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                    a.$assign_method(b);
                }
                while self.coeffs.last().is_some_and(Zero::is_zero) {
                    self.coeffs.pop();
                }
            }
        }

        impl<T: Coeff + for<'a> $assign<&'a T>> $trait<&Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &Poly<T>) -> Poly<T> {
                let mut out = self.clone();
                out.$assign_method(rhs);
                out
            }
        }

        impl<T: Coeff + for<'a> $assign<&'a T>> $trait for Poly<T> {
            type Output = Poly<T>;
            fn $method(mut self, rhs: Poly<T>) -> Poly<T> {
                self.$assign_method(&rhs);
                self
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);

impl<T> Mul<&Poly<T>> for &Poly<T>
where
    T: Coeff + for<'a> AddAssign<&'a T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        self.mul_truncated(rhs, None)
    }
}

impl<T> Mul for Poly<T>
where
    T: Coeff + for<'a> AddAssign<&'a T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    type Output = Poly<T>;
    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        &self * &rhs
    }
}

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.into_iter().map(Neg::neg).collect() }
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -self.clone()
    }
}

impl<T: Coeff> fmt::Display for Poly<T> {
    /// Ascending powers with explicit coefficients: `5x^2 + 3x^3 + 6x^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = magnitude.is_one();
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        let text = magnitude.to_string();
                        if text.contains('/') {
                            write!(f, "({text})")?;
                        } else {
                            f.write_str(&text)?;
                        }
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// JSON cell for one coefficient: a bare number for integers, `"num/den"`
/// otherwise.
pub(crate) fn rational_to_json(c: &BigRational) -> serde_json::Value {
    if c.is_integer() {
        integer_to_json(&c.to_integer())
    } else {
        serde_json::Value::String(format!("{}/{}", c.numer(), c.denom()))
    }
}

pub(crate) fn integer_to_json(c: &BigInt) -> serde_json::Value {
    let n: serde_json::Number = c.to_string().parse().expect("decimal integer is a valid JSON number");
    serde_json::Value::Number(n)
}

pub(crate) fn rational_from_json(v: &serde_json::Value) -> Result<BigRational, String> {
    match v {
        serde_json::Value::Number(n) => {
            let text = n.to_string();
            text.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| format!("not an integer: {text}"))
        }
        serde_json::Value::String(s) => {
            let (num, den) = s.split_once('/').unwrap_or((s.as_str(), "1"));
            let num: BigInt = num.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
            let den: BigInt = den.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
            if den.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(num, den))
        }
        other => Err(format!("expected number or \"num/den\" string, found {other}")),
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&rational_to_json(c))?;
        }
        seq.end()
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&integer_to_json(c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let cells = Vec::<serde_json::Value>::deserialize(deserializer)?;
        let coeffs = cells.iter().map(rational_from_json).collect::<Result<Vec<_>, _>>().map_err(de::Error::custom)?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rat = RatPoly::deserialize(deserializer)?;
        rat.to_int().map_err(|k| de::Error::custom(format!("non-integer coefficient at x^{k}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn products_and_sums() {
        assert_eq!(&ip(&[0, 0, 1]) * &ip(&[1, 1]), ip(&[0, 0, 1, 1]));
        // B₂·A₂ = x²·2x²
        assert_eq!(&ip(&[0, 0, 1]) * &ip(&[0, 0, 2]), ip(&[0, 0, 0, 0, 2]));
        assert_eq!(&IntPoly::zero() + &ip(&[3, 0, 1]), ip(&[3, 0, 1]));
        assert_eq!(&ip(&[1, 2, 3]) - &ip(&[1, 2, 3]), IntPoly::zero());
        assert!((&ip(&[1, 2, 3]) - &ip(&[1, 2, 3])).coeffs().is_empty());
    }

    #[test]
    fn coefficient_extraction() {
        let a4 = ip(&[0, 0, 5, 3, 6]);
        assert_eq!(a4.coeff(4), BigInt::from(6));
        assert_eq!(a4.coeff(0), BigInt::from(0));
        assert_eq!(IntPoly::zero().coeff(5), BigInt::from(0));
        assert_eq!(a4.at_one(), BigInt::from(14));
        assert_eq!(a4.degree(), Some(4));
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(ip(&[0, 0, 5, 3, 6]).to_string(), "5x^2 + 3x^3 + 6x^4");
        assert_eq!(ip(&[1]).to_string(), "1");
        assert_eq!(ip(&[0, 1, -1]).to_string(), "x - x^2");
        assert_eq!(ip(&[-2]).to_string(), "-2");
        assert_eq!(IntPoly::zero().to_string(), "0");
        let half = RatPoly::from_coeffs(vec![BigRational::new(1.into(), 2.into()), BigRational::new((-3).into(), 4.into())]);
        assert_eq!(half.to_string(), "1/2 - (3/4)x");
    }

    #[test]
    fn truncated_product_keeps_low_powers() {
        let p = ip(&[1, 2, 3, 4]);
        let q = ip(&[5, 6, 7]);
        assert_eq!(p.mul_truncated(&q, Some(2)), (&p * &q).truncate(2));
    }

    #[test]
    fn json_round_trip_with_fractions() {
        let p = RatPoly::from_coeffs(vec![
            BigRational::from_integer(7.into()),
            BigRational::new(1.into(), 2.into()),
            BigRational::from_integer("123456789012345678901234567890".parse().unwrap()),
        ]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"[7,"1/2",123456789012345678901234567890]"#);
        let back: RatPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<IntPoly>(&text).is_err());
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| ip(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&(&p - &q) + &q, p.clone());
            prop_assert_eq!(&p * &IntPoly::one(), p.clone());
        }

        #[test]
        fn evaluation_is_a_homomorphism(p in small_poly(), q in small_poly(), x in -5i64..5) {
            let x = BigInt::from(x);
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        }
    }
}
