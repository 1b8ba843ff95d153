//! Integral and rational quadratic lattices with exact signatures, plus the
//! Beauville–Bogomolov pairing models for Hilbert squares of K3 surfaces and
//! generalized Kummer fourfolds.
//!
//! Signatures come from fraction-free symmetric elimination (Schur
//! complements with exact rationals) — Sylvester counts from floats are
//! unreliable at zero eigenvalues, so no floating point is allowed here.

use crate::error::Error;
use crate::rational::{format_rational, parse_rational, rat_int, Rational};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Quadratic lattice: a labeled symmetric Gram matrix over the rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct Lattice {
    labels: Vec<String>,
    gram: Vec<Vec<Rational>>,
}

/// Sylvester inertia: counts of positive, negative and zero pivots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Lattice {
    pub fn new(labels: Vec<String>, gram: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let n = labels.len();
        if gram.len() != n || gram.iter().any(|row| row.len() != n) {
            return Err(Error::GramShape);
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::GramNotSymmetric);
                }
            }
        }
        Ok(Lattice { labels, gram })
    }

    /// Gram matrix from integer rows, with labels `e1, e2, ...`.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self, Error> {
        let labels = (1..=rows.len()).map(|i| format!("e{i}")).collect();
        let gram = rows
            .iter()
            .map(|r| r.iter().map(|&v| rat_int(v)).collect())
            .collect();
        Lattice::new(labels, gram)
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { entries[i] } else { 0 }).collect())
            .collect();
        Lattice::from_int_rows(&rows).expect("diagonal matrices are symmetric")
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.gram[i][j]
    }

    /// Bilinear pairing `x^T G y`.
    pub fn pair(&self, x: &[Rational], y: &[Rational]) -> Result<Rational, Error> {
        let n = self.rank();
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: x.len(),
            });
        }
        if y.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: y.len(),
            });
        }
        let mut acc = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                acc += &x[i] * &self.gram[i][j] * &y[j];
            }
        }
        Ok(acc)
    }

    /// Orthogonal direct sum.
    pub fn orthogonal_sum(&self, other: &Lattice) -> Lattice {
        let n = self.rank();
        let m = other.rank();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut gram = vec![vec![Rational::zero(); n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                gram[i][j] = self.gram[i][j].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                gram[n + i][n + j] = other.gram[i][j].clone();
            }
        }
        Lattice { labels, gram }
    }

    /// Exact Sylvester inertia by symmetric elimination. A zero diagonal
    /// with a nonzero off-diagonal entry is handled by the congruence
    /// `e_i <- e_i + e_j`, which creates the pivot `2 g_ij`.
    pub fn signature(&self) -> Signature {
        let mut m = self.gram.clone();
        let mut alive: Vec<usize> = (0..self.rank()).collect();
        let mut sig = Signature {
            positive: 0,
            negative: 0,
            zero: 0,
        };
        'outer: loop {
            if alive.is_empty() {
                return sig;
            }
            // diagonal pivot if available
            if let Some(&p) = alive.iter().find(|&&i| !m[i][i].is_zero()) {
                if m[p][p].is_positive() {
                    sig.positive += 1;
                } else {
                    sig.negative += 1;
                }
                let rest: Vec<usize> = alive.iter().copied().filter(|&i| i != p).collect();
                // Schur complement on the remaining block
                for &i in &rest {
                    for &j in &rest {
                        let adj = &m[i][p] * &m[p][j] / &m[p][p];
                        m[i][j] = &m[i][j] - adj;
                    }
                }
                alive = rest;
                continue 'outer;
            }
            // all diagonals zero: look for a hyperbolic off-diagonal entry
            for a in 0..alive.len() {
                for b in a + 1..alive.len() {
                    let (i, j) = (alive[a], alive[b]);
                    if !m[i][j].is_zero() {
                        for &k in &alive {
                            m[i][k] = &m[i][k] + &m[j][k].clone();
                        }
                        for &k in &alive {
                            m[k][i] = &m[k][i] + &m[k][j].clone();
                        }
                        continue 'outer;
                    }
                }
            }
            // fully zero block
            sig.zero += alive.len();
            return sig;
        }
    }

    pub fn to_json_string(&self) -> String {
        let mirror = LatticeJson {
            labels: self.labels.clone(),
            gram: self
                .gram
                .iter()
                .map(|row| row.iter().map(format_rational).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&mirror).expect("lattice serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self, Error> {
        let mirror: LatticeJson =
            serde_json::from_str(s).map_err(|e| Error::parse(0, format!("bad lattice JSON: {e}")))?;
        let gram = mirror
            .gram
            .iter()
            .map(|row| row.iter().map(|v| parse_rational(v)).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        Lattice::new(mirror.labels, gram)
    }

    /// The hyperbolic plane U.
    pub fn hyperbolic_plane() -> Lattice {
        Lattice::from_int_rows(&[vec![0, 1], vec![1, 0]]).expect("symmetric")
    }

    /// The negative definite E8 lattice (Cartan matrix negated).
    pub fn e8_negative() -> Lattice {
        // Dynkin diagram: chain 1-3-4-5-6-7-8 with node 2 attached to 4
        let edges: [(usize, usize); 7] = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
        let mut rows = vec![vec![0i64; 8]; 8];
        for i in 0..8 {
            rows[i][i] = -2;
        }
        for &(a, b) in &edges {
            rows[a][b] = 1;
            rows[b][a] = 1;
        }
        Lattice::from_int_rows(&rows).expect("symmetric")
    }

    /// The K3 lattice U³ ⊕ E8(−1)², rank 22, signature (3, 19).
    pub fn k3() -> Lattice {
        let u = Lattice::hyperbolic_plane();
        u.orthogonal_sum(&u)
            .orthogonal_sum(&u)
            .orthogonal_sum(&Lattice::e8_negative())
            .orthogonal_sum(&Lattice::e8_negative())
    }

    /// H² of an abelian surface: U³, rank 6, signature (3, 3).
    pub fn abelian_surface_h2() -> Lattice {
        let u = Lattice::hyperbolic_plane();
        u.orthogonal_sum(&u).orthogonal_sum(&u)
    }
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    labels: Vec<String>,
    gram: Vec<Vec<String>>,
}

/// H² of the Hilbert square of a K3 surface: a chosen sublattice of H²(S)
/// plus the orthogonal summand ℤδ. The value of q(δ,δ) is injected, not
/// assumed — the blow-up evaluator derives it.
#[derive(Debug, Clone, PartialEq)]
pub struct HilbSquareH2 {
    k3_part: Lattice,
    delta_square: Rational,
}

impl HilbSquareH2 {
    pub fn new(k3_part: Lattice, delta_square: Rational) -> Self {
        HilbSquareH2 {
            k3_part,
            delta_square,
        }
    }

    pub fn k3_part(&self) -> &Lattice {
        &self.k3_part
    }

    pub fn delta_square(&self) -> &Rational {
        &self.delta_square
    }

    /// Total rank including the δ coordinate.
    pub fn rank(&self) -> usize {
        self.k3_part.rank() + 1
    }

    /// Beauville–Bogomolov pairing in coordinates (K3 basis…, δ).
    pub fn q_pair(&self, x: &[Rational], y: &[Rational]) -> Result<Rational, Error> {
        let n = self.rank();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: if x.len() != n { x.len() } else { y.len() },
            });
        }
        let inner = self.k3_part.pair(&x[..n - 1], &y[..n - 1])?;
        Ok(inner + &x[n - 1] * &y[n - 1] * &self.delta_square)
    }

    /// Predicted intersection number c₂(X)·x·y = 30·q(x, y).
    pub fn c2_pairing(&self, x: &[Rational], y: &[Rational]) -> Result<Rational, Error> {
        Ok(rat_int(30) * self.q_pair(x, y)?)
    }

    /// The full q-lattice including δ, for signature demonstrations.
    pub fn as_lattice(&self) -> Lattice {
        let delta = Lattice::new(
            vec!["delta".into()],
            vec![vec![self.delta_square.clone()]],
        )
        .expect("1x1 matrices are symmetric");
        self.k3_part.orthogonal_sum(&delta)
    }
}

/// H² of a generalized Kummer fourfold: H² of the abelian surface plus ℤe.
/// The analogue of the 30 in the Hilbert-square pairing identity is not part
/// of this model's data; it stays a configurable constant, unset by default.
#[derive(Debug, Clone, PartialEq)]
pub struct KummerH2 {
    abelian_part: Lattice,
    e_square: Rational,
    c2_constant: Option<Rational>,
}

impl KummerH2 {
    pub fn new(abelian_part: Lattice, e_square: Rational) -> Self {
        KummerH2 {
            abelian_part,
            e_square,
            c2_constant: None,
        }
    }

    pub fn with_c2_constant(mut self, constant: Rational) -> Self {
        self.c2_constant = Some(constant);
        self
    }

    pub fn rank(&self) -> usize {
        self.abelian_part.rank() + 1
    }

    pub fn q_pair(&self, x: &[Rational], y: &[Rational]) -> Result<Rational, Error> {
        let n = self.rank();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: if x.len() != n { x.len() } else { y.len() },
            });
        }
        let inner = self.abelian_part.pair(&x[..n - 1], &y[..n - 1])?;
        Ok(inner + &x[n - 1] * &y[n - 1] * &self.e_square)
    }

    /// c₂ pairing prediction; errors until a constant has been configured.
    pub fn c2_pairing(&self, x: &[Rational], y: &[Rational]) -> Result<Rational, Error> {
        let constant = self
            .c2_constant
            .as_ref()
            .ok_or(Error::PairingConstantUnset)?;
        Ok(constant * self.q_pair(x, y)?)
    }
}

/// Rank bookkeeping for the two deformation families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankChecks {
    pub k3_hilb_b2: usize,
    pub k3_hilb_sym2_dim: usize,
    pub kummer_b2: usize,
    pub kummer_sym2_dim: usize,
    pub kummer_unit_rank: usize,
    pub kummer_h4_dim: usize,
    pub three_torsion_count: usize,
}

/// Dimension counts: Sym² of b₂, the rank-80 unit complement on the Kummer
/// side, and the 3-torsion count of an abelian surface.
pub fn rank_checks() -> RankChecks {
    let sym2 = |b2: usize| b2 * (b2 + 1) / 2;
    let k3_hilb_b2 = Lattice::k3().rank() + 1;
    let kummer_b2 = Lattice::abelian_surface_h2().rank() + 1;
    let kummer_unit_rank = 80;
    RankChecks {
        k3_hilb_b2,
        k3_hilb_sym2_dim: sym2(k3_hilb_b2),
        kummer_b2,
        kummer_sym2_dim: sym2(kummer_b2),
        kummer_unit_rank,
        kummer_h4_dim: sym2(kummer_b2) + kummer_unit_rank,
        three_torsion_count: 3usize.pow(4),
    }
}
