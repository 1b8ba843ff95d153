//! Formal Chern roots: alphabets of root variables and the triangular
//! reduction of symmetric expressions into the elementary symmetric basis.
//!
//! The reduction is the classical one: repeatedly cancel the lex-leading
//! monomial `x^a` (weakly decreasing within the alphabet, by symmetry) with
//! `e_1^{a_1-a_2} e_2^{a_2-a_3} ... e_r^{a_r}`. No Gröbner machinery, no
//! external CAS; everything stays over the integers and terminates because
//! the leading monomial strictly drops in lex order.

use crate::error::Error;
use crate::mpoly::MPoly;
use num_bigint::BigInt;

/// A contiguous block of formal root variables inside an [`MPoly`] variable
/// space. Symmetric expressions over the block reduce uniquely to polynomials
/// in its elementary symmetric functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootAlphabet {
    offset: usize,
    count: usize,
}

impl RootAlphabet {
    pub fn new(offset: usize, count: usize) -> Self {
        RootAlphabet { offset, count }
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn vars(&self) -> Vec<usize> {
        (self.offset..self.offset + self.count).collect()
    }

    /// The root variables as degree-1 polynomials in an `nvars`-variable space.
    pub fn root_forms(&self, nvars: usize) -> Vec<MPoly> {
        self.vars().iter().map(|&i| MPoly::var(nvars, i)).collect()
    }

    /// `e_m` of this alphabet.
    pub fn elementary(&self, nvars: usize, m: usize) -> MPoly {
        if m == 0 {
            return MPoly::constant(nvars, 1);
        }
        if m > self.count {
            return MPoly::zero(nvars);
        }
        MPoly::elementary_symmetric(nvars, &self.vars(), m)
    }
}

/// One term of a reduced expression: exponents of `e_1..e_r` for each
/// alphabet (concatenated in alphabet order) and an integer coefficient.
pub type ElementaryTerm = (Vec<u32>, BigInt);

/// Rewrites `f`, symmetric in each alphabet separately, as a polynomial in
/// the elementary symmetric functions of the alphabets. The alphabets must
/// cover all variables of `f`.
///
/// Returns terms keyed by concatenated elementary exponents
/// `(e-exps of alphabets[0], e-exps of alphabets[1], ...)`.
pub fn reduce_to_elementary(
    f: &MPoly,
    alphabets: &[RootAlphabet],
) -> Result<Vec<ElementaryTerm>, Error> {
    match alphabets {
        [] => {
            // constant polynomial expected
            if f.is_zero() {
                return Ok(Vec::new());
            }
            let mut out = Vec::new();
            for (exp, c) in f.terms() {
                if exp.iter().any(|&e| e != 0) {
                    return Err(Error::NotSymmetric);
                }
                out.push((Vec::new(), c.clone()));
            }
            Ok(out)
        }
        [first, rest @ ..] => {
            let mut out = Vec::new();
            for (head, coeff) in reduce_block(f, first)? {
                for (tail, c) in reduce_to_elementary(&coeff, rest)? {
                    let mut exps = head.clone();
                    exps.extend(tail);
                    out.push((exps, c));
                }
            }
            Ok(out)
        }
    }
}

/// Reduces the `block` variables of `f` to elementary symmetric functions,
/// leaving the other variables untouched inside the coefficient polynomials.
fn reduce_block(f: &MPoly, block: &RootAlphabet) -> Result<Vec<(Vec<u32>, MPoly)>, Error> {
    let nvars = f.nvars();
    let vars = block.vars();
    let r = vars.len();
    let mut rem = f.clone();
    let mut out: Vec<(Vec<u32>, MPoly)> = Vec::new();

    while !rem.is_zero() {
        // lex-largest exponent pattern on the block variables
        let mut lead: Option<Vec<u32>> = None;
        for (exp, _) in rem.terms() {
            let pat: Vec<u32> = vars.iter().map(|&i| exp[i]).collect();
            if lead.as_ref().map_or(true, |l| pat > *l) {
                lead = Some(pat);
            }
        }
        let alpha = lead.expect("nonzero polynomial has a leading term");
        if alpha.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }

        // coefficient of the leading block pattern, block exponents cleared
        let mut coeff = MPoly::zero(nvars);
        for (exp, c) in rem.terms() {
            let pat: Vec<u32> = vars.iter().map(|&i| exp[i]).collect();
            if pat == alpha {
                let mut outside = exp.clone();
                for &i in &vars {
                    outside[i] = 0;
                }
                coeff = coeff.add(&MPoly::constant(nvars, 1).mul(&monomial(nvars, &outside, c)));
            }
        }

        // e-exponents: e_i^(alpha_i - alpha_{i+1}), e_r^(alpha_r)
        let mut e_exps = vec![0u32; r];
        let mut subtrahend = coeff.clone();
        for i in 0..r {
            let next = if i + 1 < r { alpha[i + 1] } else { 0 };
            e_exps[i] = alpha[i] - next;
            let e_i = block.elementary(nvars, i + 1);
            for _ in 0..e_exps[i] {
                subtrahend = subtrahend.mul(&e_i);
            }
        }
        rem = rem.sub(&subtrahend);
        out.push((e_exps, coeff));
    }
    Ok(out)
}

fn monomial(nvars: usize, exp: &[u32], c: &BigInt) -> MPoly {
    let mut p = MPoly::constant(nvars, c.clone());
    for (i, &e) in exp.iter().enumerate() {
        for _ in 0..e {
            p = p.mul(&MPoly::var(nvars, i));
        }
    }
    p
}

/// Re-expands reduced terms back into root variables; inverse of
/// [`reduce_to_elementary`], used to validate uniqueness of the reduction.
pub fn expand_elementary(
    terms: &[ElementaryTerm],
    alphabets: &[RootAlphabet],
    nvars: usize,
) -> MPoly {
    let mut acc = MPoly::zero(nvars);
    for (exps, c) in terms {
        let mut prod = MPoly::constant(nvars, c.clone());
        let mut pos = 0;
        for a in alphabets {
            for i in 0..a.len() {
                let e = exps[pos + i];
                let e_poly = a.elementary(nvars, i + 1);
                for _ in 0..e {
                    prod = prod.mul(&e_poly);
                }
            }
            pos += a.len();
        }
        acc = acc.add(&prod);
    }
    acc
}
