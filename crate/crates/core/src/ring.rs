//! Pluggable commutative coefficient rings.
//!
//! The same Chern calculus runs over plain rationals (abstract identities)
//! and over the Schubert ring of a fixed Grassmannian (geometric
//! computations). Ring operations live on a small structure value so that
//! element types stay plain data; Schubert classes need their ambient
//! Grassmannian for multiplication, rationals need nothing.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::Zero;

pub trait CoeffRing: Clone + PartialEq {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn int_mul(&self, k: &BigInt, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

/// The field of exact rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RationalRing;

impl CoeffRing for RationalRing {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::from_integer(BigInt::from(1))
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn int_mul(&self, k: &BigInt, a: &Rational) -> Rational {
        a * Rational::from_integer(k.clone())
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
}
