//! Scalar abstraction shared by the exact and float-backed form algebra.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational scalar used everywhere an identity can be checked exactly.
pub type Rat = BigRational;

/// Parse a rational from a `"p"` or `"p/q"` string.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(Rat::new(p, q))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(p))
    }
}

/// Canonical `"p"` / `"p/q"` rendering (integers drop the denominator).
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Exact n-th root of a nonnegative rational, if one exists in Q.
pub fn exact_nth_root(r: &Rat, n: u32) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let rn = num.nth_root(n);
    let rd = den.nth_root(n);
    if &rn.pow(n) == num && &rd.pow(n) == den {
        Some(Rat::new(rn, rd))
    } else {
        None
    }
}

/// Scalars the form algebra is generic over: exact rationals or f64.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_rat(r: &Rat) -> Self;
    fn from_int(n: i64) -> Self {
        Self::from_rat(&rat_from_i64(n))
    }
    fn to_f64(&self) -> f64;
    /// Square root; `None` when the scalar type cannot represent it exactly.
    fn sqrt(&self) -> Option<Self>;
    /// n-th root; `None` when the scalar type cannot represent it exactly.
    fn nth_root(&self, n: u32) -> Option<Self>;
    fn is_negative_val(&self) -> bool;
    /// Magnitude used for float pivot selection; exactness is irrelevant here.
    fn pivot_weight(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Scalar for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn sqrt(&self) -> Option<Self> {
        exact_nth_root(self, 2)
    }
    fn nth_root(&self, n: u32) -> Option<Self> {
        exact_nth_root(self, n)
    }
    fn is_negative_val(&self) -> bool {
        self.is_negative()
    }
}

impl Scalar for f64 {
    fn from_rat(r: &Rat) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| f64::sqrt(*self))
    }
    fn nth_root(&self, n: u32) -> Option<Self> {
        (*self >= 0.0).then(|| self.powf(1.0 / n as f64))
    }
    fn is_negative_val(&self) -> bool {
        *self < 0.0
    }
}
