//! The variety of lines X on a cubic fourfold, as a zero locus in Gr(2,6).
//!
//! X is cut out of Gr(2,6) by a section of S³U∨, so integration over X is
//! integration against c₄(S³U∨) in the ambient Schubert ring. On a very
//! general cubic the codimension-2 classes of X form a 2-dimensional space
//! with basis {g², c}, where g is the Plücker polarization and c = c₂(U∨);
//! restriction is determined by σ₂ ↦ g² − c and σ₁,₁ ↦ c. Everything in this
//! module is computed from that description — the intersection matrix and
//! c₂(X) are outputs, not inputs.

use crate::error::Error;
use crate::rational::{format_rational, rat_int, Rational};
use crate::schubert::{
    tautological_chern, GrassmannianSpec, Partition, SchubertClass, Tautological,
};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Codimension-2 class on X in the basis (g², c).
#[derive(Debug, Clone, PartialEq)]
pub struct FanoClass2 {
    pub g2: Rational,
    pub c: Rational,
}

impl FanoClass2 {
    pub fn new(g2: Rational, c: Rational) -> Self {
        FanoClass2 { g2, c }
    }

    pub fn from_ints(g2: i64, c: i64) -> Self {
        FanoClass2::new(rat_int(g2), rat_int(c))
    }

    pub fn zero() -> Self {
        FanoClass2::new(Rational::zero(), Rational::zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        FanoClass2::new(&self.g2 + &other.g2, &self.c + &other.c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        FanoClass2::new(&self.g2 - &other.g2, &self.c - &other.c)
    }

    pub fn scale(&self, t: &Rational) -> Self {
        FanoClass2::new(&self.g2 * t, &self.c * t)
    }

    pub fn is_zero(&self) -> bool {
        self.g2.is_zero() && self.c.is_zero()
    }
}

impl fmt::Display for FanoClass2 {
    /// Renders in the CLI grammar, e.g. `5*g2 - 8*c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (coeff, name) in [(&self.g2, "g2"), (&self.c, "c")] {
            if coeff.is_zero() {
                continue;
            }
            let neg = coeff.is_negative();
            let abs = if neg { -coeff.clone() } else { coeff.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{}*{name}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

/// First and second Chern classes of X: c₁ is a multiple of g (expected 0),
/// c₂ lives in the (g², c) plane.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernOfX {
    pub c1_g: Rational,
    pub c2: FanoClass2,
}

/// The computed model of X = F(Y) ⊂ Gr(2,6).
#[derive(Debug, Clone)]
pub struct FanoModel {
    spec: GrassmannianSpec,
    fundamental: SchubertClass,
    pairing: [[Rational; 2]; 2],
    chern: ChernOfX,
}

impl FanoModel {
    /// Runs the whole pipeline: fundamental class, intersection matrix and
    /// Chern classes, all from the S³U∨ description.
    pub fn new() -> Result<Self, Error> {
        let spec = GrassmannianSpec::new(2, 6)?;
        let udual = tautological_chern(Tautological::Udual, spec)?;
        let sym3 = udual.sym_power_rank2(3)?;
        let fundamental = sym3.c(4);
        if fundamental.degree()? != Some(4) {
            return Err(Error::Internal(
                "fundamental class is not of pure codimension 4".into(),
            ));
        }

        let g = SchubertClass::sigma(spec, &[1])?;
        let c = SchubertClass::sigma(spec, &[1, 1])?;
        let g2 = g.multiply(&g)?;
        let integrate = |alpha: &SchubertClass| -> Result<Rational, Error> {
            Ok(alpha.multiply(&fundamental)?.integrate())
        };
        let g4 = integrate(&g2.multiply(&g2)?)?;
        let g2c = integrate(&g2.multiply(&c)?)?;
        let cc = integrate(&c.multiply(&c)?)?;
        let pairing = [[g4, g2c.clone()], [g2c, cc]];

        // c(T_X) = c(U∨ ⊗ Q) / c(S³U∨), truncated at degree 4
        let q = tautological_chern(Tautological::Q, spec)?;
        let tangent = udual.tensor(&q)?;
        let quotient = tangent.total(4).mul(&sym3.total(4).inverse()?)?;
        let c1 = quotient.get(1);
        let c1_g = c1.coefficient(&Partition::new(vec![1])?);
        if c1 != SchubertClass::monomial(spec, Partition::new(vec![1])?, c1_g.clone())? {
            return Err(Error::Internal("c1 of X is not a multiple of g".into()));
        }
        let c2 = restrict_codim2(&quotient.get(2))?;

        Ok(FanoModel {
            spec,
            fundamental,
            pairing,
            chern: ChernOfX { c1_g, c2 },
        })
    }

    pub fn spec(&self) -> GrassmannianSpec {
        self.spec
    }

    /// c₄(S³U∨) expanded in the Schubert basis.
    pub fn fundamental_class(&self) -> &SchubertClass {
        &self.fundamental
    }

    /// Integration over X of a codimension-4 ambient class:
    /// `∫_Gr alpha · [X]`.
    pub fn integrate_on_x(&self, alpha: &SchubertClass) -> Result<Rational, Error> {
        match alpha.degree() {
            Ok(None) => return Ok(Rational::zero()),
            Ok(Some(4)) => {}
            _ => return Err(Error::ExpectedCodimension4),
        }
        Ok(alpha.multiply(&self.fundamental)?.integrate())
    }

    pub fn chern_classes_of_x(&self) -> &ChernOfX {
        &self.chern
    }

    pub fn c2(&self) -> &FanoClass2 {
        &self.chern.c2
    }

    /// Intersection matrix in the basis (g², c).
    pub fn pairing_matrix(&self) -> &[[Rational; 2]; 2] {
        &self.pairing
    }

    /// `x^T M y` with M the intersection matrix.
    pub fn pair(&self, x: &FanoClass2, y: &FanoClass2) -> Rational {
        let m = &self.pairing;
        &x.g2 * (&m[0][0] * &y.g2 + &m[0][1] * &y.c) + &x.c * (&m[1][0] * &y.g2 + &m[1][1] * &y.c)
    }

    /// Expands a (g², c)-class into the ambient Schubert ring (degree 4),
    /// via g² = σ₁² and c = σ₁,₁ restricted.
    pub fn expand_to_schubert(&self, x: &FanoClass2) -> Result<SchubertClass, Error> {
        let g = SchubertClass::sigma(self.spec, &[1])?;
        let g2 = g.multiply(&g)?;
        let c = SchubertClass::sigma(self.spec, &[1, 1])?;
        g2.scale(&x.g2).add(&c.scale(&x.c))
    }
}

/// Restriction of a codimension-2 ambient class to X in the (g², c) basis:
/// σ₂ ↦ g² − c and σ₁,₁ ↦ c.
pub fn restrict_codim2(class: &SchubertClass) -> Result<FanoClass2, Error> {
    match class.degree() {
        Ok(None) => return Ok(FanoClass2::zero()),
        Ok(Some(2)) => {}
        _ => return Err(Error::Inhomogeneous),
    }
    let p = class.coefficient(&Partition::new(vec![2])?);
    let q = class.coefficient(&Partition::new(vec![1, 1])?);
    Ok(FanoClass2::new(p.clone(), q - p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::ring::CoeffRing;
    use crate::schubert::SchubertRing;

    fn model() -> FanoModel {
        FanoModel::new().unwrap()
    }

    fn sigma(parts: &[u32]) -> SchubertClass {
        SchubertClass::sigma(GrassmannianSpec::new(2, 6).unwrap(), parts).unwrap()
    }

    #[test]
    fn fundamental_class_is_pure_degree_four() {
        let m = model();
        assert_eq!(m.fundamental_class().degree().unwrap(), Some(4));
    }

    #[test]
    fn fundamental_class_expressed_form() {
        // 18 σ1² σ11 + 9 σ11², multiplied out in the box
        let m = model();
        let s1 = sigma(&[1]);
        let s11 = sigma(&[1, 1]);
        let expr = s1
            .multiply(&s1)
            .unwrap()
            .multiply(&s11)
            .unwrap()
            .scale(&rat_int(18))
            .add(&s11.multiply(&s11).unwrap().scale(&rat_int(9)))
            .unwrap();
        assert_eq!(*m.fundamental_class(), expr);
    }

    #[test]
    fn intersection_numbers_of_x() {
        let m = model();
        let g2 = sigma(&[1]).multiply(&sigma(&[1])).unwrap();
        let c = sigma(&[1, 1]);
        let g4 = m.integrate_on_x(&g2.multiply(&g2).unwrap()).unwrap();
        let g2c = m.integrate_on_x(&g2.multiply(&c).unwrap()).unwrap();
        let cc = m.integrate_on_x(&c.multiply(&c).unwrap()).unwrap();
        assert_eq!(g4, rat_int(108));
        assert_eq!(g2c, rat_int(45));
        assert_eq!(cc, rat_int(27));
    }

    #[test]
    fn integrate_rejects_wrong_degree() {
        let m = model();
        assert_eq!(
            m.integrate_on_x(&sigma(&[1])),
            Err(Error::ExpectedCodimension4)
        );
        let mixed = sigma(&[4]).add(&sigma(&[1])).unwrap();
        assert_eq!(m.integrate_on_x(&mixed), Err(Error::ExpectedCodimension4));
        // zero class integrates to zero
        let ring = SchubertRing::new(m.spec());
        assert_eq!(m.integrate_on_x(&ring.zero()).unwrap(), rat_int(0));
    }

    #[test]
    fn chern_classes_of_x() {
        let m = model();
        let chern = m.chern_classes_of_x();
        assert_eq!(chern.c1_g, rat_int(0));
        assert_eq!(chern.c2, FanoClass2::from_ints(5, -8));
    }

    #[test]
    fn c2_against_g2_is_180() {
        let m = model();
        let g2 = FanoClass2::from_ints(1, 0);
        assert_eq!(m.pair(m.c2(), &g2), rat_int(180));
        // independent route: expand in the Schubert ring and integrate on X
        let expanded = m
            .expand_to_schubert(m.c2())
            .unwrap()
            .multiply(&m.expand_to_schubert(&g2).unwrap())
            .unwrap();
        assert_eq!(m.integrate_on_x(&expanded).unwrap(), rat_int(180));
    }

    #[test]
    fn pairing_matrix_entries_symmetry_determinant() {
        let m = model();
        let p = m.pairing_matrix();
        assert_eq!(p[0][0], rat_int(108));
        assert_eq!(p[0][1], rat_int(45));
        assert_eq!(p[1][0], p[0][1]);
        assert_eq!(p[1][1], rat_int(27));
        let det = &p[0][0] * &p[1][1] - &p[0][1] * &p[1][0];
        assert_eq!(det, rat_int(891));
    }

    #[test]
    fn pair_examples() {
        let m = model();
        let c = FanoClass2::from_ints(0, 1);
        let three_g2_minus_5c = FanoClass2::from_ints(3, -5);
        assert_eq!(m.pair(&three_g2_minus_5c, &c), rat_int(0));

        let twenty_c_minus_g2 = FanoClass2::from_ints(-1, 20);
        let endpoint = FanoClass2::new(rat_int(1), rat(-8, 5));
        assert_eq!(m.pair(&twenty_c_minus_g2, &endpoint), rat_int(0));

        assert_eq!(m.pair(m.c2(), &c), rat_int(9));
        assert_eq!(m.pair(m.c2(), m.c2()), rat_int(828));
    }

    #[test]
    fn pairing_is_bilinear_consistent_with_integration() {
        // over all basis pairs, x^T M y equals the expanded Schubert integral
        let m = model();
        let basis = [FanoClass2::from_ints(1, 0), FanoClass2::from_ints(0, 1)];
        for x in &basis {
            for y in &basis {
                let direct = m.pair(x, y);
                let expanded = m
                    .expand_to_schubert(x)
                    .unwrap()
                    .multiply(&m.expand_to_schubert(y).unwrap())
                    .unwrap();
                assert_eq!(direct, m.integrate_on_x(&expanded).unwrap());
            }
        }
    }

    #[test]
    fn c2_nef_at_interval_endpoints() {
        let m = model();
        let c = FanoClass2::from_ints(0, 1);
        assert!(m.pair(m.c2(), &c) > rat_int(0));
        for lambda in [rat_int(1), rat(8, 5)] {
            let gen = FanoClass2::new(rat_int(1), -lambda.clone());
            let value = m.pair(m.c2(), &gen);
            // affine in lambda: 180 - 9*lambda
            assert_eq!(value, rat_int(180) - rat_int(9) * lambda);
            assert!(value > rat_int(0));
        }
    }

    #[test]
    fn three_g2_minus_5c_proportional_to_c2_minus_fifth_g2() {
        let m = model();
        let shifted = m.c2().sub(&FanoClass2::new(rat(1, 5), Rational::zero()));
        let witness = FanoClass2::from_ints(3, -5);
        // cross-ratio: proportionality without fixing the scale
        assert_eq!(&witness.g2 * &shifted.c, &witness.c * &shifted.g2);
    }

    #[test]
    fn restriction_of_codim2_schubert_classes() {
        // σ2 ↦ g² − c, σ11 ↦ c
        assert_eq!(
            restrict_codim2(&sigma(&[2])).unwrap(),
            FanoClass2::from_ints(1, -1)
        );
        assert_eq!(
            restrict_codim2(&sigma(&[1, 1])).unwrap(),
            FanoClass2::from_ints(0, 1)
        );
        assert!(restrict_codim2(&sigma(&[1])).is_err());
    }

    #[test]
    fn fano_class_display() {
        assert_eq!(FanoClass2::from_ints(5, -8).to_string(), "5*g2 - 8*c");
        assert_eq!(FanoClass2::from_ints(0, 1).to_string(), "c");
        assert_eq!(FanoClass2::from_ints(-1, 20).to_string(), "-g2 + 20*c");
        assert_eq!(
            FanoClass2::new(rat(1, 3), rat(-1, 3)).to_string(),
            "1/3*g2 - 1/3*c"
        );
        assert_eq!(FanoClass2::zero().to_string(), "0");
    }
}
