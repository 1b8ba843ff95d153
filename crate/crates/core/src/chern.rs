//! Chern classes of formal bundle constructions via the splitting principle.
//!
//! A [`ChernVector`] holds `c_1..c_rank` of a formal bundle with coefficients
//! in a pluggable ring. Constructions (dual, tensor product, symmetric power
//! of a rank-2 bundle) are computed exactly: write the construction's Chern
//! roots as linear forms in formal root alphabets, take elementary symmetric
//! functions, reduce to the elementary symmetric basis, and evaluate the
//! resulting universal integer polynomials at the input Chern classes.

use crate::error::Error;
use crate::graded::GradedClass;
use crate::mpoly::{elementary_of_forms, MPoly};
use crate::ring::CoeffRing;
use crate::roots::{reduce_to_elementary, ElementaryTerm, RootAlphabet};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
pub struct ChernVector<R: CoeffRing> {
    ring: R,
    classes: Vec<R::Elem>,
}

impl<R: CoeffRing> ChernVector<R> {
    /// Builds from `c_1..c_rank`; `c_0` is implicitly 1.
    pub fn new(ring: R, classes: Vec<R::Elem>) -> Self {
        assert!(!classes.is_empty(), "rank must be positive");
        ChernVector { ring, classes }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    /// `c_i`, with `c_0 = 1` and zero above the rank.
    pub fn c(&self, i: usize) -> R::Elem {
        if i == 0 {
            self.ring.one()
        } else if i <= self.classes.len() {
            self.classes[i - 1].clone()
        } else {
            self.ring.zero()
        }
    }

    pub fn classes(&self) -> &[R::Elem] {
        &self.classes
    }

    /// Dual bundle: `c_i -> (-1)^i c_i`.
    pub fn dual(&self) -> Self {
        let classes = self
            .classes
            .iter()
            .enumerate()
            .map(|(idx, v)| {
                if (idx + 1) % 2 == 1 {
                    self.ring.neg(v)
                } else {
                    v.clone()
                }
            })
            .collect();
        ChernVector {
            ring: self.ring.clone(),
            classes,
        }
    }

    /// Total Chern class `1 + c_1 + ... + c_rank` as a graded class.
    pub fn total(&self, truncation: usize) -> GradedClass<R> {
        let mut g = GradedClass::one(self.ring.clone(), truncation);
        for (idx, v) in self.classes.iter().enumerate() {
            g.set(idx + 1, v.clone());
        }
        g
    }

    /// Symmetric power `S^k` of a rank-2 bundle: with formal roots `x, y`,
    /// the roots of `S^k` are `kx, (k-1)x + y, ..., ky`; the result is exact
    /// in `e_1 = c_1`, `e_2 = c_2`. `k = 0` gives the trivial rank-1 vector.
    pub fn sym_power_rank2(&self, k: usize) -> Result<Self, Error> {
        if self.rank() != 2 {
            return Err(Error::ExpectedRank2(self.rank()));
        }
        let nvars = 2;
        let alphabet = RootAlphabet::new(0, 2);
        let x = MPoly::var(nvars, 0);
        let y = MPoly::var(nvars, 1);
        let forms: Vec<MPoly> = (0..=k)
            .map(|j| {
                x.scale(&BigInt::from((k - j) as u64))
                    .add(&y.scale(&BigInt::from(j as u64)))
            })
            .collect();
        let out_rank = k + 1;
        let es = elementary_of_forms(&forms, out_rank);
        let inputs = [self.c(1), self.c(2)];
        let classes = (1..=out_rank)
            .map(|m| {
                let terms = reduce_to_elementary(&es[m], &[alphabet])?;
                Ok(self.eval_elementary(&terms, &inputs))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(ChernVector {
            ring: self.ring.clone(),
            classes,
        })
    }

    /// Tensor product of two bundles: roots `{x_i + y_j}`, expressed in the
    /// elementary symmetric functions of each alphabet separately.
    pub fn tensor(&self, other: &Self) -> Result<Self, Error> {
        if self.ring != other.ring {
            return Err(Error::IncompatibleGradedRings);
        }
        let r = self.rank();
        let s = other.rank();
        let nvars = r + s;
        let ax = RootAlphabet::new(0, r);
        let ay = RootAlphabet::new(r, s);
        let mut forms = Vec::with_capacity(r * s);
        for i in 0..r {
            for j in 0..s {
                forms.push(MPoly::var(nvars, i).add(&MPoly::var(nvars, r + j)));
            }
        }
        let out_rank = r * s;
        let es = elementary_of_forms(&forms, out_rank);
        let mut inputs: Vec<R::Elem> = (1..=r).map(|i| self.c(i)).collect();
        inputs.extend((1..=s).map(|j| other.c(j)));
        let classes = (1..=out_rank)
            .map(|m| {
                let terms = reduce_to_elementary(&es[m], &[ax, ay])?;
                Ok(self.eval_elementary(&terms, &inputs))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(ChernVector {
            ring: self.ring.clone(),
            classes,
        })
    }

    /// Evaluates reduced elementary-basis terms at concrete ring elements
    /// standing for the elementary symmetric generators.
    fn eval_elementary(&self, terms: &[ElementaryTerm], inputs: &[R::Elem]) -> R::Elem {
        let mut acc = self.ring.zero();
        for (exps, coeff) in terms {
            debug_assert_eq!(exps.len(), inputs.len());
            let mut prod = self.ring.one();
            for (input, &e) in inputs.iter().zip(exps) {
                if e > 0 {
                    prod = self.ring.mul(&prod, &self.ring.pow(input, e));
                }
            }
            acc = self.ring.add(&acc, &self.ring.int_mul(coeff, &prod));
        }
        acc
    }
}
