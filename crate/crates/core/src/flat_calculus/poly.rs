//! Multivariate polynomials in x1..x7 with exact rational coefficients.

use crate::scalar::Rat;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Exponent vector for x1..x7.
pub type Mono = [u8; 7];

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Poly::zero();
        p.add_term([0; 7], c);
        p
    }

    /// The coordinate function x_i (1-based).
    pub fn var(i: u8) -> Self {
        assert!((1..=7).contains(&i));
        let mut e = [0u8; 7];
        e[usize::from(i) - 1] = 1;
        let mut p = Poly::zero();
        p.add_term(e, Rat::from_integer(1.into()));
        p
    }

    pub fn monomial(e: Mono, c: Rat) -> Self {
        let mut p = Poly::zero();
        p.add_term(e, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.clone() * s.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = *e1;
                for (a, b) in e.iter_mut().zip(e2.iter()) {
                    *a += b;
                }
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Partial derivative with respect to x_i (1-based).
    pub fn diff(&self, i: u8) -> Poly {
        assert!((1..=7).contains(&i));
        let idx = usize::from(i) - 1;
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[idx] -= 1;
            out.add_term(e2, c.clone() * Rat::from_integer(i64::from(e[idx]).into()));
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| u32::from(x)).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn eval_f64(&self, x: &[f64; 7]) -> f64 {
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut m = crate::scalar::Scalar::to_f64(c);
            for (xi, &p) in x.iter().zip(e.iter()) {
                for _ in 0..p {
                    m *= xi;
                }
            }
            acc += m;
        }
        acc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_from_i64;

    #[test]
    fn diff_product_rule_spot() {
        let x1 = Poly::var(1);
        let x2 = Poly::var(2);
        let p = x1.mul(&x1).mul(&x2); // x1^2 x2
        assert_eq!(p.diff(1), x1.mul(&x2).scale(&rat_from_i64(2)));
        assert_eq!(p.diff(2), x1.mul(&x1));
        assert!(p.diff(3).is_zero());
    }
}
