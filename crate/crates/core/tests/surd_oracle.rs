//! Surd arithmetic against an independent extended-precision float oracle
//! (double-double, ~31 significant digits), plus algebraic property tests.

use g2conifold::cone_rates::{Eps, Surd, SymbolicRate};
use g2conifold::scalar::{ratio, Rat};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;

/// Double-double arithmetic: an unevaluated sum hi + lo with |lo| ≤ ulp(hi)/2.
/// Error-free transformations via FMA give ~106 bits of precision.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        let err = (a - (s - bb)) + (b - bb);
        Dd { hi: s, lo: err }
    }

    fn two_prod(a: f64, b: f64) -> Dd {
        let p = a * b;
        let err = a.mul_add(b, -p);
        Dd { hi: p, lo: err }
    }

    fn renorm(hi: f64, lo: f64) -> Dd {
        let s = Dd::two_sum(hi, lo);
        Dd { hi: s.hi, lo: s.lo }
    }

    fn add(self, other: Dd) -> Dd {
        let s = Dd::two_sum(self.hi, other.hi);
        let t = Dd::two_sum(self.lo, other.lo);
        let v = Dd::renorm(s.hi, s.lo + t.hi);
        Dd::renorm(v.hi, v.lo + t.lo)
    }

    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    fn mul(self, other: Dd) -> Dd {
        let p = Dd::two_prod(self.hi, other.hi);
        let e = self.hi * other.lo + self.lo * other.hi + p.lo;
        Dd::renorm(p.hi, e)
    }

    fn div_f64(self, d: f64) -> Dd {
        let q1 = self.hi / d;
        let r = self.sub(Dd::two_prod(q1, d));
        let q2 = (r.hi + r.lo) / d;
        Dd::renorm(q1, q2)
    }

    fn sqrt_u64(n: u64) -> Dd {
        // one Newton refinement of the f64 sqrt in double-double
        let x0 = (n as f64).sqrt();
        if x0 == 0.0 {
            return Dd::from_f64(0.0);
        }
        let x = Dd::from_f64(x0);
        let nn = Dd::from_f64(n as f64);
        // x + (n − x²)/(2x)
        let corr = nn.sub(x.mul(x)).div_f64(2.0 * x0);
        x.add(corr)
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

fn rat_dd(r: &Rat) -> Dd {
    // exact split: p/q with p, q within i64 range in these tests
    let p = r.numer().to_f64().unwrap();
    let q = r.denom().to_f64().unwrap();
    Dd::from_f64(p).div_f64(q)
}

fn surd_dd(s: &Surd) -> Dd {
    let a = rat_dd(s.rational_part());
    let b = rat_dd(s.radical_coeff());
    a.add(b.mul(Dd::sqrt_u64(s.radicand())))
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    ratio(rng.gen_range(-50..=50), rng.gen_range(1..=12))
}

fn random_surd(rng: &mut ChaCha8Rng, d: u64) -> Surd {
    Surd::new(random_rat(rng), random_rat(rng), d)
}

#[test]
fn surd_ops_agree_with_dd_oracle() {
    // 10⁴ random (+, −, ×, compare) operations within 1e−9 of the oracle
    let fields = [0u64, 2, 3, 5, 7, 11, 13, 17];
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..10_000 {
        let d = fields[rng.gen_range(0..fields.len())];
        let x = random_surd(&mut rng, d);
        let y = random_surd(&mut rng, d);
        let (xf, yf) = (surd_dd(&x), surd_dd(&y));
        match rng.gen_range(0..4) {
            0 => {
                let z = x.checked_add(&y).unwrap();
                assert!((surd_dd(&z).to_f64() - xf.add(yf).to_f64()).abs() < 1e-9);
            }
            1 => {
                let z = x.checked_sub(&y).unwrap();
                assert!((surd_dd(&z).to_f64() - xf.sub(yf).to_f64()).abs() < 1e-9);
            }
            2 => {
                let z = x.checked_mul(&y).unwrap();
                assert!((surd_dd(&z).to_f64() - xf.mul(yf).to_f64()).abs() < 1e-9);
            }
            _ => {
                let cmp = x.cmp_exact(&y);
                let diff = xf.sub(yf).to_f64();
                match cmp {
                    Ordering::Less => assert!(diff < 1e-9),
                    Ordering::Greater => assert!(diff > -1e-9),
                    Ordering::Equal => assert!(diff.abs() < 1e-9),
                }
            }
        }
    }
}

#[test]
fn cross_field_comparison_agrees_with_dd_oracle() {
    let fields = [0u64, 2, 3, 5, 6, 7, 10];
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10_000 {
        let d = fields[rng.gen_range(0..fields.len())];
        let e = fields[rng.gen_range(0..fields.len())];
        let x = random_surd(&mut rng, d);
        let y = random_surd(&mut rng, e);
        let diff = surd_dd(&x).sub(surd_dd(&y)).to_f64();
        match x.cmp_exact(&y) {
            Ordering::Less => assert!(diff < 1e-9, "{x} vs {y}: {diff}"),
            Ordering::Greater => assert!(diff > -1e-9, "{x} vs {y}: {diff}"),
            Ordering::Equal => assert!(diff.abs() < 1e-9, "{x} vs {y}: {diff}"),
        }
    }
}

#[test]
fn field_ops_associative_commutative() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..2_000 {
        let d = [0u64, 2, 5, 13][rng.gen_range(0..4)];
        let x = random_surd(&mut rng, d);
        let y = random_surd(&mut rng, d);
        let z = random_surd(&mut rng, d);
        let xy = x.checked_add(&y).unwrap();
        let yx = y.checked_add(&x).unwrap();
        assert_eq!(xy, yx);
        assert_eq!(
            xy.checked_add(&z).unwrap(),
            x.checked_add(&y.checked_add(&z).unwrap()).unwrap()
        );
        let xym = x.checked_mul(&y).unwrap();
        assert_eq!(xym, y.checked_mul(&x).unwrap());
        assert_eq!(
            xym.checked_mul(&z).unwrap(),
            x.checked_mul(&y.checked_mul(&z).unwrap()).unwrap()
        );
        // distributivity
        let lhs = x.checked_mul(&y.checked_add(&z).unwrap()).unwrap();
        let rhs = x
            .checked_mul(&y)
            .unwrap()
            .checked_add(&x.checked_mul(&z).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn total_order_transitive_and_consistent() {
    let fields = [0u64, 2, 3, 5];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..1_000 {
        let mut v: Vec<Surd> = (0..5)
            .map(|_| random_surd(&mut rng, fields[rng.gen_range(0..4)]))
            .collect();
        v.sort();
        for w in v.windows(2) {
            assert!(w[0] <= w[1]);
            // consistency with float values
            assert!(w[0].to_f64() <= w[1].to_f64() + 1e-9);
        }
    }
}

#[test]
fn symbolic_rates_sort_between_values() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1_000 {
        let v = random_surd(&mut rng, 3);
        let m = SymbolicRate {
            value: v.clone(),
            eps: Eps::Minus,
        };
        let z = SymbolicRate::exact(v.clone());
        let p = SymbolicRate {
            value: v.clone(),
            eps: Eps::Plus,
        };
        assert!(m < z && z < p);
        // ε never jumps over a genuinely different value
        let w = random_surd(&mut rng, 3);
        if v.cmp_exact(&w) == Ordering::Less {
            assert!(p < SymbolicRate { value: w, eps: Eps::Minus });
        }
    }
}
