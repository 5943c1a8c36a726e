//! Exact-rational structures over `Q`, checked by seeded sampling.
//!
//! `[a]_b = b * floor(a / b)` and `(a)_b = a - [a]_b`, with mathematical floor
//! for every sign, so `(a)_b` lies in `[0, b)` for `b > 0` and in `(b, 0]` for
//! `b < 0`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::battery::{Battery, Leg};
use crate::error::{AlgebraError, Result};
use crate::magma::Magma;

pub type Rational = BigRational;

pub const DEFAULT_BUDGET: usize = 10_000;

pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim())
        .map_err(|_| AlgebraError::InvalidParameter(format!("`{s}` is not a p/q rational")))
}

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `floor(a / b)`, computed on numerators and denominators directly.
fn floor_quotient(a: &Rational, b: &Rational) -> BigInt {
    let num = a.numer() * b.denom();
    let den = a.denom() * b.numer();
    num.div_floor(&den)
}

/// `[a]_b = b * floor(a / b)`.
pub fn integer_part(a: &Rational, b: &Rational) -> Rational {
    b * Rational::from_integer(floor_quotient(a, b))
}

/// `(a)_b = a - [a]_b`.
pub fn residue(a: &Rational, b: &Rational) -> Rational {
    let k = floor_quotient(a, b);
    let (p, q) = (a.numer(), a.denom());
    let (r, s) = (b.numer(), b.denom());
    Rational::new(p * s - k * r * q, q * s)
}

/// `x / b` is an integer.
pub fn in_b_multiples(x: &Rational, b: &Rational) -> bool {
    (x.numer() * b.denom()).is_multiple_of(&(x.denom() * b.numer()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalRule {
    Addition,
    Multiplication,
    /// `x +_b y = (x + y)_b`.
    BAddition(Rational),
}

impl RationalRule {
    pub fn b_addition(b: Rational) -> Result<Self> {
        if b.is_zero() {
            return Err(AlgebraError::InvalidParameter("b must be nonzero".into()));
        }
        Ok(Self::BAddition(b))
    }

    pub fn apply(&self, x: &Rational, y: &Rational) -> Rational {
        match self {
            RationalRule::Addition => x + y,
            RationalRule::Multiplication => x * y,
            RationalRule::BAddition(b) => residue(&(x + y), b),
        }
    }
}

/// Seed and case budget for sampled checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampling {
    pub seed: u64,
    pub budget: usize,
}

impl Default for Sampling {
    fn default() -> Self {
        Self {
            seed: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Deterministic stream of rationals `p/q` with `|p| <= 10^4`, `1 <= q <= 60`.
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn next_rational(&mut self) -> Rational {
        let p: i64 = self.rng.gen_range(-10_000..=10_000);
        let q: i64 = self.rng.gen_range(1..=60);
        rat(p, q)
    }

    pub fn next_integer(&mut self, bound: i64) -> BigInt {
        BigInt::from(self.rng.gen_range(-bound..=bound))
    }

    pub fn tuple<const K: usize>(&mut self) -> [Rational; K] {
        std::array::from_fn(|_| self.next_rational())
    }
}

/// Runs `pred` on `budget` sampled `K`-tuples; returns the first failing tuple.
pub fn sample_check<const K: usize>(
    sampling: Sampling,
    salt: u64,
    mut pred: impl FnMut(&mut RationalSampler, &[Rational; K]) -> bool,
) -> Option<Vec<String>> {
    let mut sampler =
        RationalSampler::new(sampling.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt);
    for _ in 0..sampling.budget {
        let t: [Rational; K] = sampler.tuple();
        if !pred(&mut sampler, &t) {
            return Some(t.iter().map(|r| r.to_string()).collect());
        }
    }
    None
}

/// A binary operation on `Q` given by a rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRuleMagma {
    pub rule: RationalRule,
    pub sampling: Sampling,
}

impl RationalRuleMagma {
    pub fn new(rule: RationalRule, sampling: Sampling) -> Self {
        Self { rule, sampling }
    }

    pub fn b_addition(b: Rational, sampling: Sampling) -> Result<Self> {
        Ok(Self::new(RationalRule::b_addition(b)?, sampling))
    }

    pub fn apply(&self, x: &Rational, y: &Rational) -> Rational {
        self.rule.apply(x, y)
    }

    pub fn associativity_witness(&self) -> Option<Vec<String>> {
        sample_check(self.sampling, 1, |_, [x, y, z]: &[Rational; 3]| {
            self.apply(&self.apply(x, y), z) == self.apply(x, &self.apply(y, z))
        })
    }

    pub fn commutativity_witness(&self) -> Option<Vec<String>> {
        sample_check(self.sampling, 2, |_, [x, y]: &[Rational; 2]| {
            self.apply(x, y) == self.apply(y, x)
        })
    }
}

/// `(Q, +, e, +_b)`: the rational b-group-grouplike, with `e = 0` by default.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalJoined {
    pub b: Rational,
    pub e: Rational,
    pub sampling: Sampling,
}

impl RationalJoined {
    pub fn b_joined(b: Rational, sampling: Sampling) -> Result<Self> {
        if b.is_zero() {
            return Err(AlgebraError::InvalidParameter("b must be nonzero".into()));
        }
        Ok(Self {
            b,
            e: Rational::zero(),
            sampling,
        })
    }

    pub fn dot(&self, x: &Rational, y: &Rational) -> Rational {
        x + y
    }

    pub fn odot(&self, x: &Rational, y: &Rational) -> Rational {
        residue(&(x + y), &self.b)
    }

    /// Left joiner map `x -> e (.) x`.
    pub fn joiner(&self, x: &Rational) -> Rational {
        self.odot(&self.e, x)
    }

    pub fn odot_magma(&self) -> RationalRuleMagma {
        RationalRuleMagma::new(RationalRule::BAddition(self.b.clone()), self.sampling)
    }

    /// `J(x) = J(y)`: the left e-congruence.
    pub fn congruent(&self, x: &Rational, y: &Rational) -> bool {
        self.joiner(x) == self.joiner(y)
    }

    /// The residue interval `b[0, 1)`.
    pub fn in_residue_range(&self, t: &Rational) -> bool {
        if self.b.is_positive() {
            !t.is_negative() && t < &self.b
        } else {
            !t.is_positive() && t > &self.b
        }
    }

    fn join_law_witness(&self, salt: u64, left: bool, e: Option<&Rational>) -> Option<Vec<String>> {
        sample_check(self.sampling, salt, |s, [x, y]: &[Rational; 2]| {
            let sampled_e;
            let e = match e {
                Some(e) => e,
                None => {
                    sampled_e = s.next_rational();
                    &sampled_e
                }
            };
            if left {
                self.odot(e, &self.dot(x, y)) == self.odot(e, &self.odot(x, y))
            } else {
                self.odot(&self.dot(x, y), e) == self.odot(&self.odot(x, y), e)
            }
        })
    }

    /// Every sampled law of the rational b-grouplike, as one battery.
    pub fn battery(&self) -> Battery {
        let b = &self.b;
        let odot = self.odot_magma();
        let mut bat = Battery::identities(format!("b-grouplike(b={b})")).sampled();
        bat.push(Leg::from_witness(
            "odot associative",
            odot.associativity_witness(),
        ));
        bat.push(Leg::from_witness(
            "odot commutative",
            odot.commutativity_witness(),
        ));
        bat.push(Leg::from_witness(
            "left e-join law",
            self.join_law_witness(3, true, Some(&self.e)),
        ));
        bat.push(Leg::from_witness(
            "right e-join law",
            self.join_law_witness(4, false, Some(&self.e)),
        ));
        bat.push(Leg::from_witness(
            "identical e-join law",
            sample_check(self.sampling, 5, |_, [x, y]: &[Rational; 2]| {
                let xy = self.odot(x, y);
                self.odot(&self.e, &self.dot(x, y)) == xy
                    && self.odot(&self.dot(x, y), &self.e) == xy
            }),
        ));
        bat.push(Leg::from_witness(
            "josemig (left law at sampled joiners)",
            self.join_law_witness(6, true, None),
        ));
        bat.push(Leg::from_witness(
            "josemig (right law at sampled joiners)",
            self.join_law_witness(7, false, None),
        ));
        bat.push(Leg::from_witness(
            "J_0 = ( )_b",
            sample_check(self.sampling, 8, |_, [x]: &[Rational; 1]| {
                let j = self.joiner(x);
                j == residue(x, b) && self.in_residue_range(&j)
            }),
        ));
        bat.push(Leg::from_witness(
            "x - J_0(x) in bZ",
            sample_check(self.sampling, 9, |_, [x]: &[Rational; 1]| {
                in_b_multiples(&(x - self.joiner(x)), b)
            }),
        ));
        bat.push(Leg::from_witness(
            "class arithmetic: [x +_b y] = [x + y]",
            sample_check(self.sampling, 10, |_, [x, y]: &[Rational; 2]| {
                self.congruent(&self.odot(x, y), &self.dot(x, y))
            }),
        ));
        bat.push(Leg::from_witness(
            "congruence is residue mod b",
            sample_check(self.sampling, 11, |s, [x, y]: &[Rational; 2]| {
                let k = Rational::from_integer(s.next_integer(50));
                let shifted = x + &k * b;
                self.congruent(x, &shifted) && self.congruent(x, y) == in_b_multiples(&(x - y), b)
            }),
        ));
        bat.push(Leg::from_witness(
            "e (.) G inverse law",
            sample_check(self.sampling, 12, |_, [x]: &[Rational; 1]| {
                let jx = self.joiner(x);
                let in_group_inverse = residue(&-&jx, b);
                let unit = self.odot(&self.e, &self.e);
                self.odot(&jx, &in_group_inverse) == unit
                    && self.joiner(&in_group_inverse) == in_group_inverse
                    && in_group_inverse == self.joiner(&-x)
                    && in_group_inverse == self.joiner(&-&jx)
            }),
        ));
        bat.push(Leg::from_witness(
            "J_0 chain identities",
            sample_check(self.sampling, 13, |_, [x, y]: &[Rational; 2]| {
                let j = |t: &Rational| self.joiner(t);
                let base = j(&self.dot(x, y));
                [
                    j(&self.odot(x, y)),
                    self.odot(&j(x), &j(y)),
                    j(&self.dot(&j(x), y)),
                    j(&self.dot(x, &j(y))),
                    j(&self.odot(&j(x), y)),
                    j(&self.odot(x, &j(y))),
                ]
                .iter()
                .all(|v| *v == base)
            }),
        ));
        bat.push(Leg::from_witness(
            "J_0 projection: idempotent and bZ-invariant",
            sample_check(self.sampling, 14, |s, [x]: &[Rational; 1]| {
                let d = Rational::from_integer(s.next_integer(50)) * b;
                let jx = self.joiner(x);
                self.joiner(&jx) == jx && self.joiner(&(d + x)) == jx
            }),
        ));
        bat.push(Leg::from_witness(
            "quotient identities: pi.lambda = id, lambda.phi = id, phi.J = pi",
            sample_check(self.sampling, 15, |_, [x]: &[Rational; 1]| {
                // Classes are keyed by their residue representative J(x).
                let class = self.joiner(x);
                let lambda = self.joiner(&class);
                let phi_of_j = self.joiner(&self.joiner(x));
                lambda == class && phi_of_j == class && self.in_residue_range(&lambda)
            }),
        ));
        bat
    }
}

/// The finite truncation of `([0, 1), *)` on `values ∪ {0}`: a product is kept
/// when it lies in the carrier and collapses to `0` otherwise.
pub fn truncated_product_magma(values: &[Rational]) -> Result<Magma> {
    let mut carrier: Vec<Rational> = vec![Rational::zero()];
    for v in values {
        if v.is_negative() || v >= &Rational::one() {
            return Err(AlgebraError::InvalidParameter(format!(
                "{v} is outside [0, 1)"
            )));
        }
        if !carrier.contains(v) {
            carrier.push(v.clone());
        }
    }
    carrier[1..].sort();
    let names = carrier.iter().map(|r| r.to_string()).collect();
    Magma::from_fn(names, |x, y| {
        let p = &carrier[x] * &carrier[y];
        carrier.iter().position(|c| *c == p).unwrap_or(0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_signs() {
        assert_eq!(residue(&rat(-1, 2), &rat(1, 1)), rat(1, 2));
        assert_eq!(integer_part(&rat(-1, 2), &rat(1, 1)), rat(-1, 1));
        assert_eq!(residue(&rat(3, 10), &rat(-1, 1)), rat(-7, 10));
        assert_eq!(residue(&rat(7, 2), &rat(3, 2)), rat(1, 2));
        assert_eq!(residue(&rat(-3, 1), &rat(3, 2)), rat(0, 1));
    }

    #[test]
    fn b_addition_values() {
        let r = RationalRule::b_addition(rat(1, 1)).unwrap();
        assert_eq!(r.apply(&rat(1, 2), &rat(7, 10)), rat(1, 5));
        let r2 = RationalRule::b_addition(rat(2, 1)).unwrap();
        assert_eq!(r2.apply(&rat(3, 2), &rat(7, 10)), rat(1, 5));
        assert!(RationalRule::b_addition(rat(0, 1)).is_err());
    }

    #[test]
    fn parse_pq() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational(" -1 ").unwrap(), rat(-1, 1));
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn sampler_is_deterministic() {
        let mut a = RationalSampler::new(7);
        let mut b = RationalSampler::new(7);
        for _ in 0..50 {
            assert_eq!(a.next_rational(), b.next_rational());
        }
    }

    #[test]
    fn congruence_examples() {
        let j = RationalJoined::b_joined(rat(1, 1), Sampling::default()).unwrap();
        assert!(j.congruent(&rat(3, 10), &rat(23, 10)));
        assert!(!j.congruent(&rat(3, 10), &rat(4, 10)));
        assert_eq!(j.joiner(&rat(23, 10)), rat(3, 10));
    }

    #[test]
    fn multiplication_samples_clean() {
        let m = RationalRuleMagma::new(
            RationalRule::Multiplication,
            Sampling {
                seed: 1,
                budget: 100,
            },
        );
        assert!(m.associativity_witness().is_none());
        assert!(m.commutativity_witness().is_none());
    }
}
