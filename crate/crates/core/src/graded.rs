//! Truncated graded classes: total Chern classes and their arithmetic.
//!
//! A [`GradedClass`] models an element `a_0 + a_1 + a_2 + ...` of an even
//! cohomology ring, keyed by degree and cut off above a truncation degree
//! (by default the dimension of the ambient variety; higher terms can never
//! meet a fundamental class). Coefficients live in any [`CoeffRing`].

use crate::error::Error;
use crate::ring::CoeffRing;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq)]
pub struct GradedClass<R: CoeffRing> {
    ring: R,
    truncation: usize,
    coeffs: BTreeMap<usize, R::Elem>,
}

impl<R: CoeffRing> GradedClass<R> {
    pub fn zero(ring: R, truncation: usize) -> Self {
        GradedClass {
            ring,
            truncation,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(ring: R, truncation: usize) -> Self {
        let unit = ring.one();
        let mut g = GradedClass::zero(ring, truncation);
        g.set(0, unit);
        g
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Degree-`d` part (zero element when absent).
    pub fn get(&self, d: usize) -> R::Elem {
        self.coeffs
            .get(&d)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    /// Sets the degree-`d` part; silently drops parts above the truncation.
    pub fn set(&mut self, d: usize, v: R::Elem) {
        if d > self.truncation {
            return;
        }
        if self.ring.is_zero(&v) {
            self.coeffs.remove(&d);
        } else {
            self.coeffs.insert(d, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn compatible(&self, other: &Self) -> Result<(), Error> {
        if self.ring != other.ring || self.truncation != other.truncation {
            return Err(Error::IncompatibleGradedRings);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (&d, v) in &other.coeffs {
            let sum = out.ring.add(&out.get(d), v);
            out.set(d, sum);
        }
        Ok(out)
    }

    /// Graded convolution product, truncated.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.compatible(other)?;
        let mut out = GradedClass::zero(self.ring.clone(), self.truncation);
        for (&da, va) in &self.coeffs {
            for (&db, vb) in &other.coeffs {
                if da + db > self.truncation {
                    continue;
                }
                let prod = self.ring.mul(va, vb);
                let sum = self.ring.add(&out.get(da + db), &prod);
                out.set(da + db, sum);
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse of a class with degree-0 part equal to 1,
    /// computed degree by degree: `b_d = -sum_{i=1..d} a_i b_{d-i}`.
    pub fn inverse(&self) -> Result<Self, Error> {
        if self.get(0) != self.ring.one() {
            return Err(Error::NotInvertible);
        }
        let mut inv = GradedClass::one(self.ring.clone(), self.truncation);
        for d in 1..=self.truncation {
            let mut acc = self.ring.zero();
            for i in 1..=d {
                let term = self.ring.mul(&self.get(i), &inv.get(d - i));
                acc = self.ring.add(&acc, &term);
            }
            inv.set(d, self.ring.neg(&acc));
        }
        Ok(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_int, Rational};
    use crate::ring::RationalRing;

    fn class(parts: &[(usize, i64)], trunc: usize) -> GradedClass<RationalRing> {
        let mut g = GradedClass::zero(RationalRing, trunc);
        for &(d, v) in parts {
            g.set(d, rat_int(v));
        }
        g
    }

    #[test]
    fn difference_of_squares_truncated() {
        // (1 + t)(1 - t) = 1 - t^2 at truncation 2
        let a = class(&[(0, 1), (1, 1)], 2);
        let b = class(&[(0, 1), (1, -1)], 2);
        let p = a.mul(&b).unwrap();
        assert_eq!(p, class(&[(0, 1), (2, -1)], 2));
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let x = class(&[(0, 3), (1, -2), (3, 7)], 4);
        let one = GradedClass::one(RationalRing, 4);
        assert_eq!(one.mul(&x).unwrap(), x);
        assert_eq!(x.mul(&one).unwrap(), x);
    }

    #[test]
    fn mismatched_truncation_is_rejected() {
        let a = class(&[(0, 1)], 2);
        let b = class(&[(0, 1)], 3);
        assert_eq!(a.mul(&b), Err(Error::IncompatibleGradedRings));
    }

    #[test]
    fn inverse_recovers_geometric_series() {
        // 1/(1 - t) = 1 + t + t^2 + t^3
        let a = class(&[(0, 1), (1, -1)], 3);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, class(&[(0, 1), (1, 1), (2, 1), (3, 1)], 3));
        assert_eq!(a.mul(&inv).unwrap(), GradedClass::one(RationalRing, 3));
    }

    #[test]
    fn inverse_requires_unit_degree_zero() {
        let a = class(&[(0, 2), (1, 1)], 3);
        assert_eq!(a.inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn product_associative_commutative_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        for _ in 0..200 {
            let trunc = rng.gen_range(1..=5);
            let make = |rng: &mut rand::rngs::StdRng| {
                let parts: Vec<(usize, i64)> = (0..=trunc)
                    .map(|d| (d, rng.gen_range(-4..=4)))
                    .collect();
                class(&parts, trunc)
            };
            let (a, b, c) = (make(&mut rng), make(&mut rng), make(&mut rng));
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            assert_eq!(ab_c, a_bc);
            assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        }
    }

    #[test]
    fn scalar_degree_zero_part_is_rational() {
        let g = class(&[(0, 5)], 2);
        let expected: Rational = rat_int(5);
        assert_eq!(g.get(0), expected);
    }
}
