//! Exact elements a + b√D of real quadratic fields, with a total order that
//! works across different fields, and symbolic ±ε offsets.
//!
//! Rates are never floats: interval membership at rates like −7/2 against
//! √-expressions must be exact.

use crate::cone_rates::RateError;
use crate::scalar::{parse_rat, rat_from_i64, rat_to_string, Rat};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// Split n = s²·d with d square-free; returns (s, d).
pub fn squarefree_split(n: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut d = n;
    let mut p = 2u64;
    while p * p <= d {
        while d % (p * p) == 0 {
            d /= p * p;
            s *= p;
        }
        p += 1;
    }
    (s, d)
}

/// a + b√D with rational a, b and square-free D ≥ 0; canonical form has
/// b = 0 ⇒ D = 0 and D ∉ {1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    a: Rat,
    b: Rat,
    d: u64,
}

impl Surd {
    pub fn new(a: Rat, b: Rat, d: u64) -> Self {
        if b.is_zero() || d == 0 {
            return Surd {
                a,
                b: Rat::zero(),
                d: 0,
            };
        }
        let (s, d0) = squarefree_split(d);
        let b = b * rat_from_i64(s as i64);
        if d0 == 1 {
            Surd {
                a: a + b,
                b: Rat::zero(),
                d: 0,
            }
        } else {
            Surd { a, b, d: d0 }
        }
    }

    pub fn from_rat(a: Rat) -> Self {
        Surd {
            a,
            b: Rat::zero(),
            d: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_from_i64(n))
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn radical_coeff(&self) -> &Rat {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn neg(&self) -> Self {
        Surd {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// Fields are compatible when they coincide or either side is rational.
    fn joint_field(&self, other: &Self) -> Option<u64> {
        match (self.d, other.d) {
            (0, e) => Some(e),
            (d, 0) => Some(d),
            (d, e) if d == e => Some(d),
            _ => None,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RateError> {
        let d = self
            .joint_field(other)
            .ok_or(RateError::IncompatibleFields(self.d, other.d))?;
        Ok(Surd::new(
            self.a.clone() + other.a.clone(),
            self.b.clone() + other.b.clone(),
            d,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, RateError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, RateError> {
        let d = self
            .joint_field(other)
            .ok_or(RateError::IncompatibleFields(self.d, other.d))?;
        let rad = rat_from_i64(d as i64);
        Ok(Surd::new(
            self.a.clone() * other.a.clone() + self.b.clone() * other.b.clone() * rad,
            self.a.clone() * other.b.clone() + self.b.clone() * other.a.clone(),
            d,
        ))
    }

    pub fn add_rat(&self, r: &Rat) -> Self {
        Surd {
            a: self.a.clone() + r.clone(),
            b: self.b.clone(),
            d: self.d,
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Surd::new(self.a.clone() * r.clone(), self.b.clone() * r.clone(), self.d)
    }

    /// Exact sign of a single surd a + b√d.
    fn sign_single(a: &Rat, b: &Rat, d: u64) -> i8 {
        let sa = rat_sign(a);
        if b.is_zero() || d == 0 {
            return sa;
        }
        let sb = rat_sign(b);
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // opposite signs: compare a² with b²·d (equality impossible, √d irrational)
        let a2 = a.clone() * a.clone();
        let b2d = b.clone() * b.clone() * rat_from_i64(d as i64);
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => unreachable!("√{d} would be rational"),
        }
    }

    pub fn sign(&self) -> i8 {
        Self::sign_single(&self.a, &self.b, self.d)
    }

    /// Exact sign of c + b√d + b'√e across quadratic fields.
    fn sign_mixed(c: &Rat, b: &Rat, d: u64, bp: &Rat, e: u64) -> i8 {
        // fold degenerate radicals into the rational part
        if b.is_zero() || d == 0 {
            return Self::sign_single(c, bp, e);
        }
        if bp.is_zero() || e == 0 {
            return Self::sign_single(c, b, d);
        }
        if d == e {
            return Self::sign_single(c, &(b.clone() + bp.clone()), d);
        }
        // A = c + b√d, B = b'√e
        let sa = Self::sign_single(c, b, d);
        let sb = rat_sign(bp);
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // |A| vs |B|: A² − B² = (c² + b²d − b'²e) + 2cb√d, a single surd
        let c2 = c.clone() * c.clone();
        let b2d = b.clone() * b.clone() * rat_from_i64(d as i64);
        let bp2e = bp.clone() * bp.clone() * rat_from_i64(e as i64);
        let rat_part = c2 + b2d - bp2e;
        let rad_part = rat_from_i64(2) * c.clone() * b.clone();
        match Self::sign_single(&rat_part, &rad_part, d) {
            1 => sa,
            -1 => sb,
            _ => 0,
        }
    }

    /// Total order across quadratic fields (exact).
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        let c = self.a.clone() - other.a.clone();
        let s = Self::sign_mixed(&c, &self.b, self.d, &other.b.neg_ref(), other.d);
        match s {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = ToPrimitive::to_f64(&self.a).unwrap_or(f64::NAN);
        let b = ToPrimitive::to_f64(&self.b).unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }

    /// Parse "p/q", "a+b√D", "a-b√D", "b√D", "√D", "-√D" (also "sqrt" for √).
    pub fn parse(input: &str) -> Result<Self, RateError> {
        let s = input.trim().replace("sqrt", "√");
        let bad = || RateError::ParseError(input.to_string());
        match s.find('√') {
            None => parse_rat(&s).map(Surd::from_rat).ok_or_else(bad),
            Some(pos) => {
                let before = &s[..pos];
                let after = &s[pos + '√'.len_utf8()..];
                let d: u64 = after.trim().parse().map_err(|_| bad())?;
                // split "a±b" at the last sign that is not leading
                let (a_str, b_str) = match before
                    .char_indices()
                    .rev()
                    .find(|(i, ch)| (*ch == '+' || *ch == '-') && *i > 0)
                {
                    Some((i, ch)) => {
                        let b_part = &before[i + 1..];
                        let b_signed = if ch == '-' {
                            format!("-{}", if b_part.is_empty() { "1" } else { b_part })
                        } else if b_part.is_empty() {
                            "1".to_string()
                        } else {
                            b_part.to_string()
                        };
                        (before[..i].to_string(), b_signed)
                    }
                    None => {
                        let b = match before.trim() {
                            "" => "1".to_string(),
                            "-" => "-1".to_string(),
                            other => other.to_string(),
                        };
                        ("0".to_string(), b)
                    }
                };
                let a = parse_rat(&a_str).ok_or_else(bad)?;
                let b = parse_rat(&b_str).ok_or_else(bad)?;
                Ok(Surd::new(a, b, d))
            }
        }
    }
}

trait NegRef {
    fn neg_ref(&self) -> Rat;
}

impl NegRef for Rat {
    fn neg_ref(&self) -> Rat {
        -self.clone()
    }
}

fn rat_sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 0 {
            return write!(f, "{}", rat_to_string(&self.a));
        }
        let b_one = self.b == rat_from_i64(1);
        let b_neg_one = self.b == rat_from_i64(-1);
        if self.a.is_zero() {
            if b_one {
                return write!(f, "√{}", self.d);
            }
            if b_neg_one {
                return write!(f, "-√{}", self.d);
            }
            return write!(f, "{}√{}", rat_to_string(&self.b), self.d);
        }
        write!(f, "{}", rat_to_string(&self.a))?;
        if b_one {
            write!(f, "+√{}", self.d)
        } else if b_neg_one {
            write!(f, "-√{}", self.d)
        } else if self.b.is_positive() {
            write!(f, "+{}√{}", rat_to_string(&self.b), self.d)
        } else {
            write!(f, "{}√{}", rat_to_string(&self.b), self.d)
        }
    }
}

/// Wire form: a plain "p/q" string for rational values, {a, b, D} otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SurdWire {
    Rational(String),
    Field { a: String, b: String, d: u64 },
}

impl Serialize for Surd {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let wire = if self.d == 0 {
            SurdWire::Rational(rat_to_string(&self.a))
        } else {
            SurdWire::Field {
                a: rat_to_string(&self.a),
                b: rat_to_string(&self.b),
                d: self.d,
            }
        };
        wire.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Surd {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match SurdWire::deserialize(de)? {
            SurdWire::Rational(s) => Surd::parse(&s).map_err(D::Error::custom),
            SurdWire::Field { a, b, d } => {
                let a = parse_rat(&a).ok_or_else(|| D::Error::custom("bad rational"))?;
                let b = parse_rat(&b).ok_or_else(|| D::Error::custom("bad rational"))?;
                Ok(Surd::new(a, b, d))
            }
        }
    }
}

/// Symbolic infinitesimal offset: λ−ε, λ, λ+ε. Strictly order-theoretic,
/// never compared against a concrete gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Eps {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "+")]
    Plus,
}

/// A rate with a symbolic ε offset, ordered lexicographically by
/// (value, eps).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolicRate {
    pub value: Surd,
    pub eps: Eps,
}

impl SymbolicRate {
    pub fn exact(value: Surd) -> Self {
        SymbolicRate {
            value,
            eps: Eps::Zero,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::exact(Surd::from_int(n))
    }

    pub fn plus_eps(value: Surd) -> Self {
        SymbolicRate {
            value,
            eps: Eps::Plus,
        }
    }

    pub fn minus_eps(value: Surd) -> Self {
        SymbolicRate {
            value,
            eps: Eps::Minus,
        }
    }

    /// Parse "value", "value+", "value-" (trailing sign is the ε offset).
    pub fn parse(input: &str) -> Result<Self, RateError> {
        let s = input.trim();
        let (value_str, eps) = match s.chars().last() {
            Some('+') => (&s[..s.len() - 1], Eps::Plus),
            Some('-') => (&s[..s.len() - 1], Eps::Minus),
            _ => (s, Eps::Zero),
        };
        Ok(SymbolicRate {
            value: Surd::parse(value_str)?,
            eps,
        })
    }
}

impl PartialOrd for SymbolicRate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SymbolicRate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value
            .cmp_exact(&other.value)
            .then(self.eps.cmp(&other.eps))
    }
}

impl fmt::Display for SymbolicRate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        match self.eps {
            Eps::Minus => write!(f, "-"),
            Eps::Zero => Ok(()),
            Eps::Plus => write!(f, "+"),
        }
    }
}

/// Open-interval membership with symbolic endpoints: lo < value < hi, where
/// the tested rate is taken at ε = 0.
pub fn in_open_interval(rate: &Surd, lo: &SymbolicRate, hi: &SymbolicRate) -> bool {
    let r = SymbolicRate::exact(rate.clone());
    *lo < r && r < *hi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn canonical_form() {
        // √8 = 2√2
        let s = Surd::new(rat_from_i64(0), rat_from_i64(1), 8);
        assert_eq!(s.radicand(), 2);
        assert_eq!(*s.radical_coeff(), rat_from_i64(2));
        // b√1 folds into the rational part
        let t = Surd::new(rat_from_i64(3), rat_from_i64(4), 1);
        assert!(t.is_rational());
        assert_eq!(*t.rational_part(), rat_from_i64(7));
        // b = 0 forces D = 0
        let u = Surd::new(rat_from_i64(3), rat_from_i64(0), 5);
        assert_eq!(u.radicand(), 0);
    }

    #[test]
    fn exact_order_same_field() {
        // roots of (λ+3)(λ+4) = 1: (−7±√5)/2
        let plus = Surd::new(ratio(-7, 2), ratio(1, 2), 5);
        let minus = Surd::new(ratio(-7, 2), ratio(-1, 2), 5);
        assert!(minus < plus);
        assert!(Surd::from_int(-5) < minus);
        assert!(minus < Surd::from_rat(ratio(-9, 2)));
        assert!(Surd::from_rat(ratio(-5, 2)) < plus);
        assert!(plus < Surd::from_int(-2));
    }

    #[test]
    fn exact_order_cross_field() {
        // √2 < √3, 1+√2 < √6, 3−√2 > √2
        let r2 = Surd::new(Rat::zero(), rat_from_i64(1), 2);
        let r3 = Surd::new(Rat::zero(), rat_from_i64(1), 3);
        let r6 = Surd::new(Rat::zero(), rat_from_i64(1), 6);
        assert!(r2 < r3);
        assert!(Surd::new(rat_from_i64(1), rat_from_i64(1), 2) < r6);
        assert!(Surd::new(rat_from_i64(3), rat_from_i64(-1), 2) > r2);
        // equality across fields only for rationals
        assert_eq!(
            Surd::from_int(2).cmp_exact(&Surd::new(rat_from_i64(2), Rat::zero(), 3)),
            Ordering::Equal
        );
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["-7/2", "0", "3", "-3", "√2", "-√2", "1-2√3", "-1/2+3/2√5", "2√7"] {
            let v = Surd::parse(s).unwrap();
            assert_eq!(v.to_string(), s, "canonical display");
            let v2 = Surd::parse(&v.to_string()).unwrap();
            assert_eq!(v, v2);
        }
        assert_eq!(Surd::parse("1+sqrt2").unwrap(), Surd::parse("1+√2").unwrap());
        assert!(Surd::parse("nope").is_err());
    }

    #[test]
    fn symbolic_rate_order_and_parse() {
        let m = SymbolicRate::parse("-3-").unwrap();
        let z = SymbolicRate::parse("-3").unwrap();
        let p = SymbolicRate::parse("-3+").unwrap();
        assert!(m < z && z < p);
        assert_eq!(p.to_string(), "-3+");
        let s = SymbolicRate::parse("1-2√3-").unwrap();
        assert_eq!(s.value, Surd::parse("1-2√3").unwrap());
        assert_eq!(s.eps, Eps::Minus);
        // ε resolves endpoint membership
        let lo = SymbolicRate::parse("-3-").unwrap();
        let hi = SymbolicRate::parse("-3+").unwrap();
        assert!(in_open_interval(&Surd::from_int(-3), &lo, &hi));
        let lo2 = SymbolicRate::parse("-3").unwrap();
        assert!(!in_open_interval(&Surd::from_int(-3), &lo2, &hi));
    }

    #[test]
    fn arithmetic_and_fields() {
        let x = Surd::new(rat_from_i64(1), rat_from_i64(2), 3);
        let y = Surd::new(rat_from_i64(-2), rat_from_i64(1), 3);
        let sum = x.checked_add(&y).unwrap();
        assert_eq!(sum, Surd::new(rat_from_i64(-1), rat_from_i64(3), 3));
        let prod = x.checked_mul(&y).unwrap();
        // (1+2√3)(−2+√3) = −2 + √3 − 4√3 + 2·3 = 4 − 3√3
        assert_eq!(prod, Surd::new(rat_from_i64(4), rat_from_i64(-3), 3));
        let z = Surd::new(Rat::zero(), rat_from_i64(1), 5);
        assert!(x.checked_add(&z).is_err());
        assert!(x.checked_add(&Surd::from_int(2)).is_ok());
    }
}
