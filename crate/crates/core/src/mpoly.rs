//! Sparse multivariate polynomials over the integers.
//!
//! This is the minimal engine behind the splitting-principle computations:
//! enough arithmetic to expand elementary symmetric functions of linear forms
//! in formal Chern roots and to run the triangular reduction into the
//! elementary symmetric basis. Exponent vectors have a fixed arity; terms are
//! kept in a `BTreeMap` under lexicographic order so the leading monomial is
//! always the last entry.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Polynomial in `nvars` variables with `BigInt` coefficients.
///
/// Invariant: every stored coefficient is nonzero and every exponent vector
/// has length `nvars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = MPoly::zero(nvars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        let mut p = MPoly::zero(nvars);
        p.terms.insert(exp, BigInt::from(1));
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_term(&mut self, exp: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.insert_term(exp.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_term(exp, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    /// Lexicographically largest exponent vector, with its coefficient.
    pub fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Substitutes integer values for all variables.
    pub fn eval_int(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.nvars);
        let mut acc = BigInt::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in values.iter().zip(exp) {
                for _ in 0..e {
                    term *= v;
                }
            }
            acc += term;
        }
        acc
    }

    /// Elementary symmetric function `e_m` of the given variables.
    pub fn elementary_symmetric(nvars: usize, vars: &[usize], m: usize) -> MPoly {
        elementary_of_forms(
            &vars
                .iter()
                .map(|&i| MPoly::var(nvars, i))
                .collect::<Vec<_>>(),
            m,
        )
        .swap_remove(m)
    }
}

/// All elementary symmetric functions `e_0..=e_m` of a list of polynomials
/// (typically linear forms), via the absorption recurrence
/// `e_j <- e_j + f * e_{j-1}`.
pub fn elementary_of_forms(forms: &[MPoly], m: usize) -> Vec<MPoly> {
    let nvars = forms.first().map(|f| f.nvars()).unwrap_or(0);
    let mut e: Vec<MPoly> = Vec::with_capacity(m + 1);
    e.push(MPoly::constant(nvars, 1));
    for j in 1..=m {
        let _ = j;
        e.push(MPoly::zero(nvars));
    }
    for f in forms {
        for j in (1..=m).rev() {
            let bump = e[j - 1].mul(f);
            e[j] = e[j].add(&bump);
        }
    }
    e
}
