//! Intersection numbers on the blow-up of S×S along the diagonal, for S a
//! K3 surface given by its H² Gram matrix, and on the projective bundle
//! P(Ω¹_S).
//!
//! The K3 enters only through its Gram matrix and the constants c₁ = 0,
//! c₂ = 24·pt. Evaluation rules on the blow-up W with exceptional divisor E:
//!
//! - `∫ π*x = deg(x)`
//! - `∫ E·π*x = 0`
//! - `∫ E^m·π*x = (−1)^(m−1) ∫_S s_(m−2)(T_S) · Δ*x` for `m ≥ 2`
//!
//! with Segre classes s₀ = 1, s₁ = 0, s₂ = −24·pt derived from inverting
//! c(T_S). The sign convention is E|_E = −ξ for ξ the relative hyperplane
//! class with `∫_fiber ξ = 1`; it is the single normalization choice here
//! and the projective-bundle evaluator double-checks it through the second
//! route to ∫E⁴. This module independently evaluates the c₂ pairing on the
//! Hilbert square and derives q(δ,δ) instead of assuming it.

use crate::error::Error;
use crate::lattice::{HilbSquareH2, Lattice};
use crate::rational::{rat_int, Rational};
use num_traits::Zero;

/// Graded cohomology class on the surface S: scalar, H² vector in the Gram
/// basis, and a multiple of the point class.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceClass {
    pub d0: Rational,
    pub d2: Vec<Rational>,
    pub d4: Rational,
}

impl SurfaceClass {
    pub fn zero(rank: usize) -> Self {
        SurfaceClass {
            d0: Rational::zero(),
            d2: vec![Rational::zero(); rank],
            d4: Rational::zero(),
        }
    }

    pub fn one(rank: usize) -> Self {
        let mut s = SurfaceClass::zero(rank);
        s.d0 = rat_int(1);
        s
    }

    pub fn point(rank: usize) -> Self {
        let mut s = SurfaceClass::zero(rank);
        s.d4 = rat_int(1);
        s
    }

    pub fn divisor(d2: Vec<Rational>) -> Self {
        SurfaceClass {
            d0: Rational::zero(),
            d4: Rational::zero(),
            d2,
        }
    }

    pub fn rank(&self) -> usize {
        self.d2.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        SurfaceClass {
            d0: &self.d0 + &other.d0,
            d2: self
                .d2
                .iter()
                .zip(&other.d2)
                .map(|(a, b)| a + b)
                .collect(),
            d4: &self.d4 + &other.d4,
        }
    }

    pub fn scale(&self, t: &Rational) -> Self {
        SurfaceClass {
            d0: &self.d0 * t,
            d2: self.d2.iter().map(|a| a * t).collect(),
            d4: &self.d4 * t,
        }
    }
}

/// Class on S×S: a finite sum of external products a⊠b. All cohomology in
/// play is even, so products commute without signs.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductClass {
    rank: usize,
    terms: Vec<(SurfaceClass, SurfaceClass)>,
}

impl ProductClass {
    pub fn zero(rank: usize) -> Self {
        ProductClass {
            rank,
            terms: Vec::new(),
        }
    }

    pub fn boxtimes(a: SurfaceClass, b: SurfaceClass) -> Self {
        debug_assert_eq!(a.rank(), b.rank());
        ProductClass {
            rank: a.rank(),
            terms: vec![(a, b)],
        }
    }

    pub fn one(rank: usize) -> Self {
        ProductClass::boxtimes(SurfaceClass::one(rank), SurfaceClass::one(rank))
    }

    /// Fiber class of the first projection: pt ⊠ 1.
    pub fn o1(rank: usize) -> Self {
        ProductClass::boxtimes(SurfaceClass::point(rank), SurfaceClass::one(rank))
    }

    /// Fiber class of the second projection: 1 ⊠ pt.
    pub fn o2(rank: usize) -> Self {
        ProductClass::boxtimes(SurfaceClass::one(rank), SurfaceClass::point(rank))
    }

    /// The symmetric divisor a⊠1 + 1⊠a attached to a ∈ H²(S).
    pub fn symmetric_divisor(a: &[Rational]) -> Self {
        let rank = a.len();
        let d = SurfaceClass::divisor(a.to_vec());
        ProductClass::boxtimes(d.clone(), SurfaceClass::one(rank)).add(&ProductClass::boxtimes(
            SurfaceClass::one(rank),
            d,
        ))
    }

    /// The external product L ⊠ L of a line bundle class.
    pub fn boxtimes_line(a: &[Rational]) -> Self {
        let d = SurfaceClass::divisor(a.to_vec());
        ProductClass::boxtimes(d.clone(), d)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank, other.rank);
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        ProductClass {
            rank: self.rank,
            terms,
        }
    }

    pub fn scale(&self, t: &Rational) -> Self {
        ProductClass {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(a, b)| (a.scale(t), b.clone()))
                .collect(),
        }
    }

    /// Integral over S×S: only the pt⊠pt bidegree survives.
    pub fn integrate(&self) -> Rational {
        self.terms
            .iter()
            .map(|(a, b)| &a.d4 * &b.d4)
            .fold(Rational::zero(), |acc, v| acc + v)
    }
}

/// Polynomial in the exceptional class E with pulled-back S×S coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct BlowupClass {
    rank: usize,
    /// `coeffs[m]` multiplies `E^m`.
    coeffs: Vec<ProductClass>,
}

impl BlowupClass {
    pub fn from_coeffs(rank: usize, coeffs: Vec<ProductClass>) -> Self {
        BlowupClass { rank, coeffs }
    }

    /// π*x.
    pub fn pullback(x: ProductClass) -> Self {
        BlowupClass {
            rank: x.rank(),
            coeffs: vec![x],
        }
    }

    /// The exceptional divisor E.
    pub fn exceptional(rank: usize) -> Self {
        BlowupClass {
            rank,
            coeffs: vec![ProductClass::zero(rank), ProductClass::one(rank)],
        }
    }

    pub fn e_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficient(&self, m: usize) -> ProductClass {
        self.coeffs
            .get(m)
            .cloned()
            .unwrap_or_else(|| ProductClass::zero(self.rank))
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|m| self.coefficient(m).add(&other.coefficient(m)))
            .collect();
        BlowupClass {
            rank: self.rank,
            coeffs,
        }
    }

    pub fn scale(&self, t: &Rational) -> Self {
        BlowupClass {
            rank: self.rank,
            coeffs: self.coeffs.iter().map(|c| c.scale(t)).collect(),
        }
    }
}

/// Class on P(Ω¹_S) as a polynomial in the relative hyperplane class ξ.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjBundleClass {
    /// `coeffs[j]` multiplies `ξ^j`; pulled back from S.
    pub coeffs: Vec<SurfaceClass>,
}

impl ProjBundleClass {
    pub fn from_coeffs(coeffs: Vec<SurfaceClass>) -> Self {
        ProjBundleClass { coeffs }
    }

    pub fn xi_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

/// Segre data of T_S for a K3 surface, derived by inverting the total Chern
/// class 1 + c₂ with c₂ = 24·pt (only s₀, s₁, s₂ can matter in dimension 2).
#[derive(Debug, Clone, PartialEq)]
pub struct SegreData {
    pub s0: Rational,
    pub s1: Rational,
    pub s2: Rational,
}

impl SegreData {
    pub fn for_k3() -> Self {
        let c1 = rat_int(0);
        let c2 = rat_int(24);
        // series inversion of 1 + c1 + c2
        let s1 = -&c1;
        let s2 = -(&c2 + &c1 * &s1);
        SegreData {
            s0: rat_int(1),
            s1,
            s2,
        }
    }
}

/// Result of comparing the blow-up evaluation of the c₂ pairing against the
/// lattice prediction.
#[derive(Debug, Clone, PartialEq)]
pub struct Verify30q {
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

/// Evaluator for a fixed K3 surface Gram matrix.
#[derive(Debug, Clone)]
pub struct BlowupModel {
    surface: Lattice,
    segre: SegreData,
}

impl BlowupModel {
    pub fn new(surface: Lattice) -> Self {
        BlowupModel {
            surface,
            segre: SegreData::for_k3(),
        }
    }

    pub fn surface(&self) -> &Lattice {
        &self.surface
    }

    pub fn rank(&self) -> usize {
        self.surface.rank()
    }

    /// Cup product on S through the Gram matrix.
    pub fn surface_mul(&self, a: &SurfaceClass, b: &SurfaceClass) -> SurfaceClass {
        let inner = self
            .surface
            .pair(&a.d2, &b.d2)
            .expect("classes share the Gram basis");
        SurfaceClass {
            d0: &a.d0 * &b.d0,
            d2: a
                .d2
                .iter()
                .zip(&b.d2)
                .map(|(x, y)| &a.d0 * y + &b.d0 * x)
                .collect(),
            d4: &a.d0 * &b.d4 + &b.d0 * &a.d4 + inner,
        }
    }

    /// Restriction to the diagonal: Δ*(a⊠b) = a·b.
    pub fn diagonal_restrict(&self, p: &ProductClass) -> SurfaceClass {
        let mut acc = SurfaceClass::zero(p.rank());
        for (a, b) in &p.terms {
            acc = acc.add(&self.surface_mul(a, b));
        }
        acc
    }

    /// Product of two S×S classes, term by term.
    pub fn product_mul(&self, x: &ProductClass, y: &ProductClass) -> ProductClass {
        let mut terms = Vec::with_capacity(x.terms.len() * y.terms.len());
        for (a, b) in &x.terms {
            for (c, d) in &y.terms {
                terms.push((self.surface_mul(a, c), self.surface_mul(b, d)));
            }
        }
        ProductClass {
            rank: x.rank,
            terms,
        }
    }

    pub fn blowup_mul(&self, x: &BlowupClass, y: &BlowupClass) -> BlowupClass {
        let deg = x.e_degree() + y.e_degree();
        let mut coeffs = vec![ProductClass::zero(x.rank); deg + 1];
        for (i, a) in x.coeffs.iter().enumerate() {
            for (j, b) in y.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&self.product_mul(a, b));
            }
        }
        BlowupClass {
            rank: x.rank,
            coeffs,
        }
    }

    /// Integral over the blow-up of S×S along the diagonal.
    pub fn blowup_integrate(&self, b: &BlowupClass) -> Result<Rational, Error> {
        if b.e_degree() > 4 {
            return Err(Error::ExceptionalDegreeTooLarge);
        }
        let mut acc = b.coefficient(0).integrate();
        for m in 2..=b.e_degree() {
            let diag = self.diagonal_restrict(&b.coefficient(m));
            // ∫_S s_(m-2) · Δ*x, graded piece by graded piece
            let paired = match m - 2 {
                0 => &self.segre.s0 * &diag.d4,
                1 => {
                    // s1 = s1_scalar · (a degree-2 class); zero for K3
                    debug_assert!(self.segre.s1.is_zero());
                    Rational::zero()
                }
                2 => &self.segre.s2 * &diag.d0,
                _ => unreachable!("E-degree bounded by 4"),
            };
            let signed = if (m - 1) % 2 == 0 { paired } else { -paired };
            acc += signed;
        }
        Ok(acc)
    }

    /// σ*c₂(X) = π*(24·o₁ + 24·o₂) − 3E².
    pub fn pullback_c2(&self) -> BlowupClass {
        let rank = self.rank();
        let c2_product = ProductClass::o1(rank)
            .add(&ProductClass::o2(rank))
            .scale(&rat_int(24));
        BlowupClass {
            rank,
            coeffs: vec![
                c2_product,
                ProductClass::zero(rank),
                ProductClass::one(rank).scale(&rat_int(-3)),
            ],
        }
    }

    /// σ*(a + mδ) = π*(a⊠1 + 1⊠a) + m·E for a vector in coordinates
    /// (Gram basis…, δ).
    pub fn sigma_pullback(&self, v: &[Rational]) -> Result<BlowupClass, Error> {
        let rank = self.rank();
        if v.len() != rank + 1 {
            return Err(Error::DimensionMismatch {
                expected: rank + 1,
                got: v.len(),
            });
        }
        let divisor = ProductClass::symmetric_divisor(&v[..rank]);
        let e_part = BlowupClass::exceptional(rank).scale(&v[rank]);
        Ok(BlowupClass::pullback(divisor).add(&e_part))
    }

    /// Left side: (1/2)·∫ σ*c₂ · σ*x · σ*y (the 1/2 accounts for the
    /// degree-2 cover). Right side: 30·q(x, y) with the derived q(δ,δ).
    pub fn verify_30q(&self, x: &[Rational], y: &[Rational]) -> Result<Verify30q, Error> {
        let product = self.blowup_mul(
            &self.blowup_mul(&self.pullback_c2(), &self.sigma_pullback(x)?),
            &self.sigma_pullback(y)?,
        );
        let lhs = self.blowup_integrate(&product)? / rat_int(2);
        let h2 = self.hilb_square_h2();
        let rhs = h2.c2_pairing(x, y)?;
        let equal = lhs == rhs;
        Ok(Verify30q { lhs, rhs, equal })
    }

    /// Solves 30·q(δ,δ) = (1/2)·∫ σ*c₂ · E², entirely from the blow-up
    /// evaluation rules.
    pub fn derive_delta_square(&self) -> Rational {
        let e = BlowupClass::exceptional(self.rank());
        let c2_e2 = self.blowup_mul(&self.blowup_mul(&self.pullback_c2(), &e), &e);
        let total = self
            .blowup_integrate(&c2_e2)
            .expect("E-degree stays within 4");
        total / rat_int(2) / rat_int(30)
    }

    /// The Hilbert-square pairing model with the derived q(δ,δ) injected.
    pub fn hilb_square_h2(&self) -> HilbSquareH2 {
        HilbSquareH2::new(self.surface.clone(), self.derive_delta_square())
    }

    /// Integral over P(Ω¹_S): reduce with ξ² = −p*c₂(Ω¹) (c₁(Ω¹) = 0) and
    /// push forward with `∫_fiber ξ = 1`.
    pub fn proj_bundle_integrate(&self, class: &ProjBundleClass) -> Result<Rational, Error> {
        if class.xi_degree() > 3 {
            return Err(Error::HyperplaneDegreeTooLarge);
        }
        let rank = self.rank();
        let mut coeffs = class.coeffs.clone();
        coeffs.resize(4, SurfaceClass::zero(rank));
        // ξ^j -> ξ^(j-2) · (−24·pt) for j ≥ 2
        for j in (2..=3).rev() {
            let lowered = SurfaceClass {
                d0: Rational::zero(),
                d2: vec![Rational::zero(); rank],
                d4: rat_int(-24) * &coeffs[j].d0,
            };
            coeffs[j] = SurfaceClass::zero(rank);
            coeffs[j - 2] = coeffs[j - 2].add(&lowered);
        }
        Ok(coeffs[1].d4.clone())
    }

    /// Second route to ∫E⁴: restrict to E = P(Ω¹_S) with E|_E = −ξ and
    /// integrate (−ξ)³ there.
    pub fn e4_via_projective_bundle(&self) -> Result<Rational, Error> {
        let rank = self.rank();
        let minus_xi_cubed = ProjBundleClass::from_coeffs(vec![
            SurfaceClass::zero(rank),
            SurfaceClass::zero(rank),
            SurfaceClass::zero(rank),
            SurfaceClass::one(rank).scale(&rat_int(-1)),
        ]);
        self.proj_bundle_integrate(&minus_xi_cubed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn model() -> BlowupModel {
        BlowupModel::new(Lattice::hyperbolic_plane())
    }

    fn random_gram(rng: &mut rand::rngs::StdRng, n: usize) -> Lattice {
        let mut rows = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..=i {
                let v = rng.gen_range(-10..=10);
                rows[i][j] = v;
                rows[j][i] = v;
            }
        }
        Lattice::from_int_rows(&rows).unwrap()
    }

    fn rat_vec(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&v| rat_int(v)).collect()
    }

    #[test]
    fn segre_data_inverts_chern() {
        let s = SegreData::for_k3();
        assert_eq!(s.s0, rat_int(1));
        assert_eq!(s.s1, rat_int(0));
        assert_eq!(s.s2, rat_int(-24));
        // (1 + 24·pt)(1 + s2·pt) = 1 in degrees ≤ 4
        assert_eq!(rat_int(24) + &s.s2, rat_int(0));
    }

    #[test]
    fn diagonal_restriction_examples() {
        let m = model();
        let alpha = rat_vec(&[1, 0]);
        let unit_alpha = ProductClass::boxtimes(
            SurfaceClass::one(2),
            SurfaceClass::divisor(alpha.clone()),
        );
        assert_eq!(
            m.diagonal_restrict(&unit_alpha),
            SurfaceClass::divisor(alpha.clone())
        );

        let sym = ProductClass::symmetric_divisor(&alpha);
        assert_eq!(
            m.diagonal_restrict(&sym),
            SurfaceClass::divisor(alpha).scale(&rat_int(2))
        );

        let c2_product = ProductClass::o1(2).add(&ProductClass::o2(2)).scale(&rat_int(24));
        let restricted = m.diagonal_restrict(&c2_product);
        assert_eq!(restricted, SurfaceClass::point(2).scale(&rat_int(48)));
    }

    #[test]
    fn e4_is_24_by_both_routes() {
        let m = model();
        let e = BlowupClass::exceptional(2);
        let e2 = m.blowup_mul(&e, &e);
        let e4 = m.blowup_mul(&e2, &e2);
        assert_eq!(m.blowup_integrate(&e4).unwrap(), rat_int(24));
        assert_eq!(m.e4_via_projective_bundle().unwrap(), rat_int(24));
    }

    #[test]
    fn e2_against_divisor_product() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(47);
        for _ in 0..40 {
            let n = rng.gen_range(1..=4);
            let m = BlowupModel::new(random_gram(&mut rng, n));
            let alpha: Vec<Rational> =
                (0..n).map(|_| rat_int(rng.gen_range(-5..=5))).collect();
            let beta: Vec<Rational> = (0..n).map(|_| rat_int(rng.gen_range(-5..=5))).collect();
            let e = BlowupClass::exceptional(n);
            let boxed = ProductClass::boxtimes(
                SurfaceClass::divisor(alpha.clone()),
                SurfaceClass::divisor(beta.clone()),
            );
            let class = m.blowup_mul(&m.blowup_mul(&e, &e), &BlowupClass::pullback(boxed));
            let expected = -m.surface().pair(&alpha, &beta).unwrap();
            assert_eq!(m.blowup_integrate(&class).unwrap(), expected);
        }
    }

    #[test]
    fn e3_against_symmetric_divisor_vanishes() {
        let m = model();
        let e = BlowupClass::exceptional(2);
        let e3 = m.blowup_mul(&m.blowup_mul(&e, &e), &e);
        let sym = BlowupClass::pullback(ProductClass::symmetric_divisor(&rat_vec(&[3, -2])));
        assert_eq!(
            m.blowup_integrate(&m.blowup_mul(&e3, &sym)).unwrap(),
            rat_int(0)
        );
    }

    #[test]
    fn e_against_degree_six_monomials_vanishes() {
        // exhaustive over the monomial generators α⊠pt, pt⊠α
        let m = model();
        let e = BlowupClass::exceptional(2);
        for i in 0..2 {
            let mut alpha = rat_vec(&[0, 0]);
            alpha[i] = rat_int(1);
            let gens = [
                ProductClass::boxtimes(SurfaceClass::divisor(alpha.clone()), SurfaceClass::point(2)),
                ProductClass::boxtimes(SurfaceClass::point(2), SurfaceClass::divisor(alpha)),
            ];
            for g in gens {
                let class = m.blowup_mul(&e, &BlowupClass::pullback(g));
                assert_eq!(m.blowup_integrate(&class).unwrap(), rat_int(0));
            }
        }
    }

    #[test]
    fn blowup_integrate_rejects_high_e_degree() {
        let m = model();
        let e = BlowupClass::exceptional(2);
        let mut e5 = e.clone();
        for _ in 0..4 {
            e5 = m.blowup_mul(&e5, &e);
        }
        assert_eq!(
            m.blowup_integrate(&e5),
            Err(Error::ExceptionalDegreeTooLarge)
        );
    }

    #[test]
    fn pullback_c2_coefficients() {
        let m = model();
        let c2 = m.pullback_c2();
        let expected_e0 = ProductClass::o1(2).add(&ProductClass::o2(2)).scale(&rat_int(24));
        assert_eq!(c2.coefficient(0), expected_e0);
        assert_eq!(c2.coefficient(1), ProductClass::zero(2));
        assert_eq!(c2.coefficient(2), ProductClass::one(2).scale(&rat_int(-3)));
    }

    #[test]
    fn c2_dot_e_dot_line_bundle_vanishes() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(53);
        for _ in 0..30 {
            let n = rng.gen_range(1..=4);
            let m = BlowupModel::new(random_gram(&mut rng, n));
            let line: Vec<Rational> = (0..n).map(|_| rat_int(rng.gen_range(-5..=5))).collect();
            let boxed = BlowupClass::pullback(ProductClass::boxtimes_line(&line));
            let e = BlowupClass::exceptional(n);
            let class = m.blowup_mul(&m.blowup_mul(&m.pullback_c2(), &e), &boxed);
            assert_eq!(m.blowup_integrate(&class).unwrap(), rat_int(0));
        }
    }

    #[test]
    fn verify_30q_delta_delta() {
        let m = model();
        let delta = rat_vec(&[0, 0, 1]);
        let v = m.verify_30q(&delta, &delta).unwrap();
        assert_eq!(v.lhs, rat_int(-60));
        assert_eq!(v.rhs, rat_int(-60));
        assert!(v.equal);
    }

    #[test]
    fn verify_30q_isotropic_and_mixed() {
        let m = model();
        // e1 of the hyperbolic plane is isotropic
        let alpha = rat_vec(&[1, 0, 0]);
        let delta = rat_vec(&[0, 0, 1]);
        let iso = m.verify_30q(&alpha, &alpha).unwrap();
        assert_eq!(iso.lhs, rat_int(0));
        assert_eq!(iso.rhs, rat_int(0));
        assert!(iso.equal);
        let mixed = m.verify_30q(&alpha, &delta).unwrap();
        assert_eq!(mixed.lhs, rat_int(0));
        assert_eq!(mixed.rhs, rat_int(0));
        assert!(mixed.equal);
    }

    #[test]
    fn derive_delta_square_value_and_idempotence() {
        let m = model();
        assert_eq!(m.derive_delta_square(), rat_int(-2));
        assert_eq!(m.derive_delta_square(), rat_int(-2));
        // a different Gram gives the same constant
        let other = BlowupModel::new(Lattice::diagonal(&[2, -4, 6]));
        assert_eq!(other.derive_delta_square(), rat_int(-2));
    }

    #[test]
    fn verify_30q_randomized_cross_oracle() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(59);
        let mut pairs = 0;
        while pairs < 120 {
            let n = rng.gen_range(1..=4);
            let m = BlowupModel::new(random_gram(&mut rng, n));
            for _ in 0..4 {
                let x: Vec<Rational> =
                    (0..=n).map(|_| rat_int(rng.gen_range(-3..=3))).collect();
                let y: Vec<Rational> =
                    (0..=n).map(|_| rat_int(rng.gen_range(-3..=3))).collect();
                let v = m.verify_30q(&x, &y).unwrap();
                assert!(v.equal, "mismatch: lhs={} rhs={}", v.lhs, v.rhs);
                pairs += 1;
            }
        }
    }

    #[test]
    fn blowup_integrate_bilinear_in_product_slots() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(61);
        let m = model();
        for _ in 0..40 {
            let rand_surface = |rng: &mut rand::rngs::StdRng| SurfaceClass {
                d0: rat_int(rng.gen_range(-3..=3)),
                d2: (0..2).map(|_| rat_int(rng.gen_range(-3..=3))).collect(),
                d4: rat_int(rng.gen_range(-3..=3)),
            };
            let (a, a2, b) = (
                rand_surface(&mut rng),
                rand_surface(&mut rng),
                rand_surface(&mut rng),
            );
            let e_pow = rng.gen_range(0..=2usize);
            let mut e_class = BlowupClass::pullback(ProductClass::one(2));
            for _ in 0..e_pow {
                e_class = m.blowup_mul(&e_class, &BlowupClass::exceptional(2));
            }
            let lhs = m
                .blowup_integrate(&m.blowup_mul(
                    &e_class,
                    &BlowupClass::pullback(ProductClass::boxtimes(a.add(&a2), b.clone())),
                ))
                .unwrap();
            let rhs = m
                .blowup_integrate(&m.blowup_mul(
                    &e_class,
                    &BlowupClass::pullback(ProductClass::boxtimes(a, b.clone())),
                ))
                .unwrap()
                + m.blowup_integrate(&m.blowup_mul(
                    &e_class,
                    &BlowupClass::pullback(ProductClass::boxtimes(a2, b)),
                ))
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn proj_bundle_normalization_and_relations() {
        let m = model();
        // ∫ ξ · p*pt = 1
        let fiber = ProjBundleClass::from_coeffs(vec![SurfaceClass::zero(2), SurfaceClass::point(2)]);
        assert_eq!(m.proj_bundle_integrate(&fiber).unwrap(), rat_int(1));
        // ∫ ξ² · p*L = 0 for every basis divisor
        for i in 0..2 {
            let mut v = rat_vec(&[0, 0]);
            v[i] = rat_int(1);
            let class = ProjBundleClass::from_coeffs(vec![
                SurfaceClass::zero(2),
                SurfaceClass::zero(2),
                SurfaceClass::divisor(v),
            ]);
            assert_eq!(m.proj_bundle_integrate(&class).unwrap(), rat_int(0));
        }
        // ∫ ξ³ = −24
        let xi3 = ProjBundleClass::from_coeffs(vec![
            SurfaceClass::zero(2),
            SurfaceClass::zero(2),
            SurfaceClass::zero(2),
            SurfaceClass::one(2),
        ]);
        assert_eq!(m.proj_bundle_integrate(&xi3).unwrap(), rat_int(-24));
        // ξ-degree 4 is out of range
        let xi4 = ProjBundleClass::from_coeffs(vec![
            SurfaceClass::zero(2),
            SurfaceClass::zero(2),
            SurfaceClass::zero(2),
            SurfaceClass::zero(2),
            SurfaceClass::one(2),
        ]);
        assert_eq!(
            m.proj_bundle_integrate(&xi4),
            Err(Error::HyperplaneDegreeTooLarge)
        );
    }

    #[test]
    fn hilb_square_model_uses_derived_constant() {
        let m = model();
        let h2 = m.hilb_square_h2();
        assert_eq!(*h2.delta_square(), rat_int(-2));
        let delta = rat_vec(&[0, 0, 1]);
        assert_eq!(h2.c2_pairing(&delta, &delta).unwrap(), rat_int(-60));
    }
}
