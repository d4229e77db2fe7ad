//! Power series in `t` truncated at a fixed order, with polynomial-in-`x`
//! coefficients over the rationals.
//!
//! Every series carries its truncation order `N` (terms `t⁰ … t^N`). Binary
//! operations require equal orders; changing the order is always an explicit
//! call to [`TruncSeries::truncate`] or [`TruncSeries::extend`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::poly::{IntPoly, RatPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("constant term is not an invertible constant: {0}")]
    NotInvertible(String),
    #[error("square root needs constant term 1, found {0}")]
    SqrtConstant(String),
    #[error("divisor is zero through order {0}")]
    ZeroDivisor(usize),
    #[error("inexact division: numerator has nonzero t^{power} coefficient below the divisor valuation {valuation}")]
    Remainder { power: usize, valuation: usize },
    #[error("non-integer coefficient {value} at t^{t_power} x^{x_power}")]
    NotIntegral { t_power: usize, x_power: usize, value: String },
}

/// `coeffs[n]` is the coefficient of `t^n`; always exactly `order + 1` slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<RatPoly>,
}

/// A series whose coefficients passed the integrality gate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    order: usize,
    coeffs: Vec<IntPoly>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries { order, coeffs: vec![RatPoly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, RatPoly::one())
    }

    pub fn constant(order: usize, c: RatPoly) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Pads with zeros or drops terms beyond `order`.
    pub fn from_polys(order: usize, mut coeffs: Vec<RatPoly>) -> Self {
        coeffs.resize(order + 1, RatPoly::zero());
        TruncSeries { order, coeffs }
    }

    /// Row `n` of `rows` lists the integer `x`-coefficients of `t^n`, so
    /// `1 + t - t x` is `&[&[1], &[1, -1]]`.
    pub fn from_int_rows(order: usize, rows: &[&[i64]]) -> Self {
        let polys = rows.iter().map(|r| IntPoly::from_i64s(r).to_rat()).collect();
        Self::from_polys(order, polys)
    }

    /// Univariate series in `t` with integer coefficients (constant in `x`).
    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        let polys = coeffs.iter().map(|&c| RatPoly::constant(rat(c))).collect();
        Self::from_polys(order, polys)
    }

    pub fn from_int_series(s: &IntSeries) -> Self {
        TruncSeries { order: s.order, coeffs: s.coeffs.iter().map(IntPoly::to_rat).collect() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    /// Coefficient of `t^n`; zero above the order.
    pub fn coeff(&self, n: usize) -> RatPoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatPoly::is_zero)
    }

    /// Lowest power of `t` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "truncate cannot raise the order ({} -> {order})", self.order);
        TruncSeries { order, coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Raises the order by padding with zeros. Only meaningful for series
    /// that are exact polynomials in `t`.
    pub fn extend(&self, order: usize) -> Self {
        assert!(order >= self.order, "extend cannot lower the order ({} -> {order})", self.order);
        Self::from_polys(order, self.coeffs.clone())
    }

    fn check(&self, other: &TruncSeries) -> Result<(), SeriesError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch { left: self.order, right: other.order })
        }
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        self.check(other)?;
        Ok(TruncSeries { order: self.order, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        self.check(other)?;
        Ok(TruncSeries { order: self.order, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> TruncSeries {
        TruncSeries { order: self.order, coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// Multiply every coefficient by a polynomial in `x`.
    pub fn scale_poly(&self, p: &RatPoly) -> TruncSeries {
        TruncSeries { order: self.order, coeffs: self.coeffs.iter().map(|c| c * p).collect() }
    }

    /// Multiply by `t^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> TruncSeries {
        let mut coeffs = vec![RatPoly::zero(); k.min(self.order + 1)];
        coeffs.extend(self.coeffs.iter().take((self.order + 1).saturating_sub(k)).cloned());
        TruncSeries { order: self.order, coeffs }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        self.check(other)?;
        let n = self.order;
        let mut coeffs = vec![RatPoly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(TruncSeries { order: n, coeffs })
    }

    pub fn square(&self) -> TruncSeries {
        self.mul(self).expect("same order")
    }

    /// Multiplicative inverse; the `t⁰` coefficient must be a nonzero
    /// constant polynomial.
    pub fn inv(&self) -> Result<TruncSeries, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() || !c0.is_constant() {
            return Err(SeriesError::NotInvertible(c0.to_string()));
        }
        let inv_c0 = c0.coeff(0).recip();
        let mut out: Vec<RatPoly> = Vec::with_capacity(self.order + 1);
        out.push(RatPoly::constant(inv_c0.clone()));
        for k in 1..=self.order {
            let mut acc = RatPoly::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !out[k - j].is_zero() {
                    acc += &(&self.coeffs[j] * &out[k - j]);
                }
            }
            out.push(acc.scale(&-inv_c0.clone()));
        }
        Ok(TruncSeries { order: self.order, coeffs: out })
    }

    fn check_sqrt_input(&self) -> Result<(), SeriesError> {
        if self.coeffs[0] != RatPoly::one() {
            return Err(SeriesError::SqrtConstant(self.coeffs[0].to_string()));
        }
        Ok(())
    }

    /// Square root with constant term 1, coefficient by coefficient from
    /// `2 r_k = s_k − Σ_{0<j<k} r_j r_{k−j}`.
    pub fn sqrt(&self) -> Result<TruncSeries, SeriesError> {
        self.check_sqrt_input()?;
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut r: Vec<RatPoly> = Vec::with_capacity(self.order + 1);
        r.push(RatPoly::one());
        for k in 1..=self.order {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                if !r[j].is_zero() && !r[k - j].is_zero() {
                    acc -= &(&r[j] * &r[k - j]);
                }
            }
            r.push(acc.scale(&half));
        }
        Ok(TruncSeries { order: self.order, coeffs: r })
    }

    /// Same result as [`TruncSeries::sqrt`] via Newton's iteration
    /// `r ← (r + s/r)/2`, doubling the working order each step.
    pub fn sqrt_newton(&self) -> Result<TruncSeries, SeriesError> {
        self.check_sqrt_input()?;
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut r = TruncSeries::one(0);
        let mut prec = 0usize;
        while prec < self.order {
            prec = (2 * prec + 1).min(self.order);
            let r_ext = r.extend(prec);
            let s = self.truncate(prec);
            let quotient = s.mul(&r_ext.inv()?)?;
            r = r_ext.add(&quotient)?.scale(&half);
        }
        Ok(r)
    }

    /// Exact quotient `num / den`.
    ///
    /// With `v` the valuation of `den`, the `t^v` coefficient of `den` must be
    /// a nonzero constant and `num` must vanish below `t^v`. Both inputs are
    /// known through `t^N`, so the quotient is known through `t^{N−v}` and is
    /// returned at that order.
    pub fn div_exact(&self, den: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        self.check(den)?;
        let v = den.valuation().ok_or(SeriesError::ZeroDivisor(den.order))?;
        if let Some(power) = self.coeffs[..v].iter().position(|c| !c.is_zero()) {
            return Err(SeriesError::Remainder { power, valuation: v });
        }
        let order = self.order - v;
        let num = TruncSeries { order, coeffs: self.coeffs[v..].to_vec() };
        let den = TruncSeries { order, coeffs: den.coeffs[v..].to_vec() };
        num.mul(&den.inv()?)
    }

    /// Integrality gate: re-types the series once every coefficient is an
    /// integer.
    pub fn to_integral(&self) -> Result<IntSeries, SeriesError> {
        let mut coeffs = Vec::with_capacity(self.order + 1);
        for (t_power, c) in self.coeffs.iter().enumerate() {
            match c.to_int() {
                Ok(p) => coeffs.push(p),
                Err(x_power) => {
                    return Err(SeriesError::NotIntegral { t_power, x_power, value: c.coeff(x_power).to_string() })
                }
            }
        }
        Ok(IntSeries { order: self.order, coeffs })
    }

    /// Substitutes a value for `x`, leaving a univariate series in `t`.
    pub fn eval_x(&self, x: &BigRational) -> TruncSeries {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| RatPoly::constant(c.eval(x))).collect(),
        }
    }
}

impl IntSeries {
    pub fn from_polys(order: usize, mut coeffs: Vec<IntPoly>) -> Self {
        coeffs.resize(order + 1, IntPoly::zero());
        IntSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> IntPoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    /// Coefficient of `t^n x^m`.
    pub fn coeff_at(&self, n: usize, m: usize) -> BigInt {
        self.coeffs.get(n).map(|p| p.coeff(m)).unwrap_or_default()
    }

    /// For series constant in `x`: the integer coefficients of `t⁰ … t^N`.
    pub fn constants(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|p| p.coeff(0)).collect()
    }

    /// Whether every coefficient is constant in `x`.
    pub fn is_univariate(&self) -> bool {
        self.coeffs.iter().all(IntPoly::is_constant)
    }

    pub fn to_rational(&self) -> TruncSeries {
        TruncSeries::from_int_series(self)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_series(f, self.coeffs.iter().map(|c| (c.is_zero(), c.to_string(), !c.is_constant())), self.order)
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_series(f, self.coeffs.iter().map(|c| (c.is_zero(), c.to_string(), !c.is_constant())), self.order)
    }
}

fn write_series(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (bool, String, bool)>,
    order: usize,
) -> fmt::Result {
    let mut first = true;
    for (n, (zero, text, compound)) in terms.enumerate() {
        if zero {
            continue;
        }
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        let body = if compound { format!("({text})") } else { text };
        match n {
            0 => f.write_str(&body)?,
            1 => write!(f, "{body}*t")?,
            _ => write!(f, "{body}*t^{n}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    write!(f, " + O(t^{})", order + 1)
}

#[derive(Serialize, Deserialize)]
struct SeriesJson<C> {
    order: usize,
    coeffs: C,
}

impl Serialize for TruncSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesJson { order: self.order, coeffs: &self.coeffs }.serialize(serializer)
    }
}

impl Serialize for IntSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesJson { order: self.order, coeffs: &self.coeffs }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SeriesJson::<Vec<RatPoly>>::deserialize(deserializer)?;
        if raw.coeffs.len() > raw.order + 1 {
            return Err(de::Error::custom(format!("{} coefficients exceed order {}", raw.coeffs.len(), raw.order)));
        }
        Ok(TruncSeries::from_polys(raw.order, raw.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(s: &TruncSeries) -> Vec<BigInt> {
        s.to_integral().unwrap().constants()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn products() {
        let s = TruncSeries::from_int_rows(4, &[&[1], &[0, 2], &[3, 0, 1]]);
        assert_eq!(s.mul(&TruncSeries::one(4)).unwrap(), s);
        let p = TruncSeries::from_ints(5, &[1, 1]).mul(&TruncSeries::from_ints(5, &[1, -1])).unwrap();
        assert_eq!(ints(&p), big(&[1, 0, -1, 0, 0, 0]));
        assert_eq!(
            TruncSeries::one(3).mul(&TruncSeries::one(4)),
            Err(SeriesError::OrderMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn inverses() {
        let geo = TruncSeries::from_ints(6, &[1, -1]).inv().unwrap();
        assert_eq!(ints(&geo), big(&[1; 7]));
        let fib = TruncSeries::from_ints(8, &[1, -1, -1]).inv().unwrap();
        assert_eq!(ints(&fib), big(&[1, 1, 2, 3, 5, 8, 13, 21, 34]));
        let pell = TruncSeries::from_ints(5, &[1, -2, -1]).inv().unwrap();
        assert_eq!(ints(&pell), big(&[1, 2, 5, 12, 29, 70]));
        assert!(matches!(TruncSeries::from_ints(3, &[0, 1]).inv(), Err(SeriesError::NotInvertible(_))));
        let x_const = TruncSeries::from_int_rows(3, &[&[1, 1]]);
        assert!(matches!(x_const.inv(), Err(SeriesError::NotInvertible(_))));
    }

    #[test]
    fn square_roots_and_catalan() {
        assert_eq!(TruncSeries::one(5).sqrt().unwrap(), TruncSeries::one(5));
        let order = 9;
        let root = TruncSeries::from_ints(order, &[1, -4]).sqrt().unwrap();
        assert_eq!(ints(&root)[..5], big(&[1, -2, -2, -4, -10])[..]);
        // (1 - sqrt(1-4t)) / (2t)
        let num = TruncSeries::one(order).sub(&root).unwrap();
        let cat = num.div_exact(&TruncSeries::from_ints(order, &[0, 2])).unwrap();
        assert_eq!(cat.order(), order - 1);
        assert_eq!(ints(&cat), big(&[1, 1, 2, 5, 14, 42, 132, 429, 1430]));
        assert!(matches!(TruncSeries::from_ints(3, &[4, 1]).sqrt(), Err(SeriesError::SqrtConstant(_))));
    }

    #[test]
    fn newton_and_termwise_roots_agree() {
        let s = TruncSeries::from_int_rows(12, &[&[1], &[1, -3], &[0, 2, 5], &[-1, 0, 0, 4]]);
        let a = s.sqrt().unwrap();
        let b = s.sqrt_newton().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.square(), s);
    }

    #[test]
    fn exact_division() {
        let s = TruncSeries::from_ints(4, &[0, 1, 1]);
        let q = s.div_exact(&TruncSeries::from_ints(4, &[0, 1])).unwrap();
        assert_eq!(q, TruncSeries::from_ints(3, &[1, 1]));
        assert_eq!(
            TruncSeries::from_ints(4, &[1, 1]).div_exact(&TruncSeries::from_ints(4, &[0, 1])),
            Err(SeriesError::Remainder { power: 0, valuation: 1 })
        );
        assert_eq!(TruncSeries::one(2).div_exact(&TruncSeries::zero(2)), Err(SeriesError::ZeroDivisor(2)));
    }

    #[test]
    fn rational_expansion_of_b4() {
        // t^4 (2 - 2t^2 + t^3 + t^4) / (1 - t - t^2)^3
        let n = 8;
        let den = TruncSeries::from_ints(n, &[1, -1, -1]);
        let den3 = den.mul(&den).unwrap().mul(&den).unwrap();
        let num = TruncSeries::from_ints(n, &[0, 0, 0, 0, 2, 0, -2, 1, 1]);
        let b4 = num.mul(&den3.inv().unwrap()).unwrap();
        assert_eq!(ints(&b4)[6], BigInt::from(16));
        assert_eq!(ints(&b4)[4], BigInt::from(2));
        assert_eq!(ints(&b4)[5], BigInt::from(6));
    }

    #[test]
    fn integrality_gate() {
        let half = TruncSeries::from_ints(2, &[0, 1]).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(
            half.to_integral(),
            Err(SeriesError::NotIntegral { t_power: 1, x_power: 0, value: "1/2".into() })
        );
    }

    #[test]
    fn shift_and_truncate() {
        let s = TruncSeries::from_ints(3, &[1, 2, 3, 4]);
        assert_eq!(s.shift(2), TruncSeries::from_ints(3, &[0, 0, 1, 2]));
        assert_eq!(s.truncate(1), TruncSeries::from_ints(1, &[1, 2]));
        assert_eq!(s.shift(7), TruncSeries::zero(3));
    }

    #[test]
    fn json_shape() {
        let s = TruncSeries::from_int_rows(2, &[&[1], &[0, 2]]).scale(&BigRational::new(1.into(), 2.into()));
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"order":2,"coeffs":[["1/2"],[0,1],[]]}"#);
        let back: TruncSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn display() {
        let s = TruncSeries::from_int_rows(3, &[&[1], &[0, 0, 2], &[], &[3]]);
        assert_eq!(s.to_string(), "1 + (2x^2)*t + 3*t^3 + O(t^4)");
    }

    fn series(order: usize, unit: bool) -> impl Strategy<Value = TruncSeries> {
        prop::collection::vec(prop::collection::vec(-6i64..6, 0..4), order + 1).prop_map(move |rows| {
            let mut rows = rows;
            if unit {
                rows[0] = vec![1];
            }
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            TruncSeries::from_int_rows(order, &refs)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn inverse_is_exact(s in series(7, true)) {
            prop_assert_eq!(s.mul(&s.inv().unwrap()).unwrap(), TruncSeries::one(7));
        }

        #[test]
        fn sqrt_routes_agree_and_square_back(s in series(7, true)) {
            let r = s.sqrt().unwrap();
            prop_assert_eq!(r.square(), s.clone());
            prop_assert_eq!(r, s.sqrt_newton().unwrap());
        }

        #[test]
        fn division_undoes_multiplication(q in series(8, false), d in series(8, true), v in 0usize..3) {
            let d = d.shift(v);
            let num = q.mul(&d).unwrap();
            prop_assert_eq!(num.div_exact(&d).unwrap(), q.truncate(8 - v));
        }

        #[test]
        fn json_round_trip(s in series(5, false), k in 1i64..5) {
            let s = s.scale(&BigRational::new(1.into(), k.into()));
            let text = serde_json::to_string(&s).unwrap();
            prop_assert_eq!(serde_json::from_str::<TruncSeries>(&text).unwrap(), s);
        }
    }
}
