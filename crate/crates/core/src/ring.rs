//! Arithmetic in the truncated polynomial ring `Z_p[x]/<x^c>` and
//! enumeration of its nonzero zero-divisors.
//!
//! An element is stored as its coefficient vector `(a_0, ..., a_{c-1})`.
//! It is a unit exactly when `a_0 != 0`, so the nonzero zero-divisors are
//! the nonzero elements with vanishing constant term. For such an element
//! the index of its lowest nonzero coefficient (its *min-degree*) decides
//! everything about its adjacency in the zero-divisor graph.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest ring order `p^(c-1)` that [`enumerate_zero_divisors`] will walk.
pub const ENUMERATION_BUDGET: u64 = 1_000_000;

const ORDER_LIMIT: u64 = 1 << 62;

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// The pair `(p, c)` defining `R = Z_p[x]/<x^c>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RingParams {
    p: u64,
    c: u32,
    /// `p^(c-1)`, the number of non-units (zero included).
    top_power: u64,
}

impl RingParams {
    pub fn new(p: u64, c: u32) -> Result<Self> {
        if c < 2 {
            return Err(Error::ExponentTooSmall(c));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let exponent = c - 1;
        let top_power = p
            .checked_pow(exponent)
            .filter(|&v| v <= ORDER_LIMIT)
            .ok_or(Error::OrderOverflow { p, exponent })?;
        Ok(Self { p, c, top_power })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn c(&self) -> u32 {
        self.c
    }

    /// Number of vertices of the zero-divisor graph, `p^(c-1) - 1`.
    #[inline]
    pub fn graph_order(&self) -> u64 {
        self.top_power - 1
    }

    /// `s = floor(c/2)`: the level whose Laplacian eigenvalue `p^s - 1`
    /// loses one copy to the quotient.
    #[inline]
    pub fn special_level(&self) -> usize {
        (self.c / 2) as usize
    }

    /// Number of min-degree levels, `c - 1`.
    #[inline]
    pub fn level_count(&self) -> usize {
        (self.c - 1) as usize
    }

    #[inline]
    pub fn is_even(&self) -> bool {
        self.c % 2 == 0
    }

    /// `b` with `c = 2b` or `c = 2b + 1`.
    #[inline]
    pub fn half(&self) -> u32 {
        self.c / 2
    }

    /// `p^k`; every power used by the library is at most `p^(c-1)`.
    #[inline]
    pub fn pow(&self, k: u32) -> u64 {
        debug_assert!(k < self.c);
        self.p.pow(k)
    }

    pub(crate) fn check_level(&self, index: usize) -> Result<()> {
        if index == 0 || index > self.level_count() {
            Err(Error::LevelOutOfRange {
                index,
                max: self.level_count(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for RingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}[x]/<x^{}>", self.p, self.c)
    }
}

/// Coefficient vector of an element of `Z_p[x]/<x^c>`; index `k` holds the
/// coefficient of `x^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    coeffs: Vec<u64>,
}

impl RingElement {
    pub fn new(coeffs: Vec<u64>, params: &RingParams) -> Result<Self> {
        let elem = Self { coeffs };
        elem.validate(params)?;
        Ok(elem)
    }

    pub fn zero(params: &RingParams) -> Self {
        Self {
            coeffs: vec![0; params.c() as usize],
        }
    }

    pub fn one(params: &RingParams) -> Self {
        Self::monomial(1, 0, params)
    }

    /// `coeff * x^degree`, reduced into the ring.
    pub fn monomial(coeff: u64, degree: u32, params: &RingParams) -> Self {
        let mut coeffs = vec![0; params.c() as usize];
        if degree < params.c() {
            coeffs[degree as usize] = coeff % params.p();
        }
        Self { coeffs }
    }

    /// Builds an element from `(coefficient, degree)` terms.
    pub fn from_terms(terms: &[(u64, u32)], params: &RingParams) -> Self {
        let mut coeffs = vec![0; params.c() as usize];
        for &(a, k) in terms {
            if k < params.c() {
                let slot = &mut coeffs[k as usize];
                *slot = (*slot + a % params.p()) % params.p();
            }
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    fn validate(&self, params: &RingParams) -> Result<()> {
        if self.coeffs.len() != params.c() as usize {
            return Err(Error::InvalidElement(format!(
                "expected {} coefficients, got {}",
                params.c(),
                self.coeffs.len()
            )));
        }
        if let Some(&bad) = self.coeffs.iter().find(|&&a| a >= params.p()) {
            return Err(Error::InvalidElement(format!(
                "coefficient {bad} is not reduced mod {}",
                params.p()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{a}x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Product in `Z_p[x]/<x^c>`: truncated convolution reduced mod `p`.
pub fn multiply(a: &RingElement, b: &RingElement, params: &RingParams) -> Result<RingElement> {
    a.validate(params)?;
    b.validate(params)?;
    let c = params.c() as usize;
    let p = params.p() as u128;
    let mut out = vec![0u64; c];
    for (i, &ai) in a.coeffs.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.coeffs[..c - i].iter().enumerate() {
            if bj == 0 {
                continue;
            }
            let slot = &mut out[i + j];
            let term = (ai as u128 * bj as u128) % p;
            *slot = ((*slot as u128 + term) % p) as u64;
        }
    }
    Ok(RingElement { coeffs: out })
}

pub fn is_unit(a: &RingElement) -> bool {
    a.coeffs.first().is_some_and(|&a0| a0 != 0)
}

/// Index of the lowest nonzero coefficient of a nonzero non-unit.
pub fn mindeg(a: &RingElement) -> Result<usize> {
    if is_unit(a) {
        return Err(Error::Domain(format!("mindeg is undefined for the unit {a}")));
    }
    a.coeffs
        .iter()
        .position(|&x| x != 0)
        .ok_or_else(|| Error::Domain("mindeg is undefined for zero".into()))
}

/// All nonzero zero-divisors, grouped by ascending min-degree and
/// lexicographic on `(a_1, ..., a_{c-1})` within a level.
pub fn enumerate_zero_divisors(params: &RingParams) -> Result<Vec<RingElement>> {
    let total = params.graph_order() + 1;
    if total > ENUMERATION_BUDGET {
        return Err(Error::TooLarge {
            what: "ring enumeration p^(c-1)",
            requested: total,
            budget: ENUMERATION_BUDGET,
        });
    }
    let c = params.c() as usize;
    let p = params.p();
    let mut out = Vec::with_capacity(params.graph_order() as usize);
    for level in 1..c {
        let tail_len = c - level - 1;
        let tail_count = p.pow(tail_len as u32);
        for lead in 1..p {
            for mut code in 0..tail_count {
                let mut coeffs = vec![0u64; c];
                coeffs[level] = lead;
                // Most significant digit is a_{level+1}.
                for k in (level + 1..c).rev() {
                    coeffs[k] = code % p;
                    code /= p;
                }
                out.push(RingElement { coeffs });
            }
        }
    }
    debug_assert_eq!(out.len() as u64, params.graph_order());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn params(p: u64, c: u32) -> RingParams {
        RingParams::new(p, c).unwrap()
    }

    #[test]
    fn rejects_bad_params() {
        assert_eq!(RingParams::new(4, 3), Err(Error::NotPrime(4)));
        assert_eq!(RingParams::new(1, 3), Err(Error::NotPrime(1)));
        assert_eq!(RingParams::new(3, 1), Err(Error::ExponentTooSmall(1)));
        assert!(matches!(RingParams::new(2, 64), Err(Error::OrderOverflow { .. })));
        assert!(RingParams::new(2, 63).is_ok());
    }

    #[test]
    fn derived_quantities() {
        let r = params(2, 6);
        assert_eq!(r.graph_order(), 31);
        assert_eq!(r.special_level(), 3);
        assert!(r.is_even());
        let r = params(2, 5);
        assert_eq!(r.graph_order(), 15);
        assert_eq!(r.special_level(), 2);
        assert_eq!(r.half(), 2);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1_000_001));
    }

    #[test]
    fn top_terms_vanish() {
        let r = params(2, 6);
        let x = RingElement::monomial(1, 1, &r);
        let x5 = RingElement::monomial(1, 5, &r);
        assert!(multiply(&x, &x5, &r).unwrap().is_zero());
    }

    #[test]
    fn truncated_product() {
        let r = params(2, 5);
        let a = RingElement::from_terms(&[(1, 1), (1, 2)], &r);
        let b = RingElement::monomial(1, 3, &r);
        assert_eq!(multiply(&a, &b, &r).unwrap(), RingElement::monomial(1, 4, &r));
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let r5 = params(2, 5);
        let r6 = params(2, 6);
        let a = RingElement::one(&r6);
        let b = RingElement::one(&r5);
        assert!(matches!(multiply(&a, &b, &r5), Err(Error::InvalidElement(_))));
        assert!(RingElement::new(vec![0, 2, 0], &params(2, 3)).is_err());
    }

    #[test]
    fn unit_criterion() {
        let r = params(3, 4);
        assert!(is_unit(&RingElement::from_terms(&[(1, 0), (1, 1)], &r)));
        assert!(!is_unit(&RingElement::zero(&r)));
        assert!(!is_unit(&RingElement::monomial(1, 4, &params(2, 5))));
    }

    #[test]
    fn mindeg_examples() {
        let r5 = params(2, 5);
        let r6 = params(2, 6);
        let f = RingElement::from_terms(&[(1, 2), (1, 4)], &r5);
        assert_eq!(mindeg(&f).unwrap(), 2);
        assert_eq!(mindeg(&RingElement::monomial(1, 4, &r5)).unwrap(), 4);
        let g = RingElement::from_terms(&[(1, 1), (1, 3), (1, 5)], &r6);
        assert_eq!(mindeg(&g).unwrap(), 1);
        assert!(mindeg(&RingElement::zero(&r6)).is_err());
        assert!(mindeg(&RingElement::one(&r6)).is_err());
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_zero_divisors(&params(2, 6)).unwrap().len(), 31);
        assert_eq!(enumerate_zero_divisors(&params(2, 5)).unwrap().len(), 15);
        let tiny = enumerate_zero_divisors(&params(2, 2)).unwrap();
        assert_eq!(tiny, vec![RingElement::monomial(1, 1, &params(2, 2))]);

        let r = params(3, 3);
        let labels: Vec<String> = enumerate_zero_divisors(&r)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            labels,
            ["x", "x+x^2", "x+2x^2", "2x", "2x+x^2", "2x+2x^2", "x^2", "2x^2"]
        );
    }

    #[test]
    fn enumeration_budget() {
        let r = params(2, 21);
        assert!(matches!(
            enumerate_zero_divisors(&r),
            Err(Error::TooLarge {
                budget: ENUMERATION_BUDGET,
                ..
            })
        ));
        assert!(enumerate_zero_divisors(&params(2, 20)).is_ok());
    }

    #[test]
    fn level_counts() {
        for &(p, c) in &[(2, 6), (3, 4), (5, 3)] {
            let r = params(p, c);
            let all = enumerate_zero_divisors(&r).unwrap();
            for i in 1..c as usize {
                let count = all.iter().filter(|e| mindeg(e).unwrap() == i).count() as u64;
                assert_eq!(count, (p - 1) * p.pow(c - 1 - i as u32));
            }
        }
    }

    /// Exhaustive: `fg = 0` iff `mindeg f + mindeg g >= c`.
    #[test]
    fn annihilation_matches_mindeg_rule() {
        for p in [2u64, 3, 5] {
            for c in 2..=6u32 {
                let r = params(p, c);
                if r.graph_order() > 700 {
                    continue;
                }
                let all = enumerate_zero_divisors(&r).unwrap();
                let degs: Vec<usize> = all.iter().map(|e| mindeg(e).unwrap()).collect();
                for (f, &i) in all.iter().zip(&degs) {
                    for (g, &j) in all.iter().zip(&degs) {
                        let zero = multiply(f, g, &r).unwrap().is_zero();
                        assert_eq!(zero, i + j >= c as usize, "p={p} c={c} f={f} g={g}");
                    }
                }
            }
        }
    }

    fn element(p: u64, c: u32) -> impl Strategy<Value = RingElement> {
        proptest::collection::vec(0..p, c as usize).prop_map(|coeffs| RingElement { coeffs })
    }

    proptest! {
        #[test]
        fn ring_laws(
            (p, c, a, b, d) in prop_oneof![Just((2u64, 5u32)), Just((3, 4)), Just((5, 6)), Just((7, 3))]
                .prop_flat_map(|(p, c)| (Just(p), Just(c), element(p, c), element(p, c), element(p, c)))
        ) {
            let r = params(p, c);
            let ab = multiply(&a, &b, &r).unwrap();
            prop_assert_eq!(&ab, &multiply(&b, &a, &r).unwrap());
            let ab_d = multiply(&ab, &d, &r).unwrap();
            let bd = multiply(&b, &d, &r).unwrap();
            prop_assert_eq!(ab_d, multiply(&a, &bd, &r).unwrap());
            prop_assert!(multiply(&a, &RingElement::zero(&r), &r).unwrap().is_zero());
            prop_assert_eq!(multiply(&a, &RingElement::one(&r), &r).unwrap(), a);
        }
    }
}
