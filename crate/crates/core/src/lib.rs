//! Exact intersection-theory kernel for cycle cones on hyperkähler fourfolds.
//!
//! Everything here is exact rational arithmetic; there is no floating point
//! anywhere in the crate. The pieces:
//!
//! - [`chern`], [`graded`], [`roots`]: Chern-class calculus for formal bundle
//!   constructions (dual, tensor, symmetric power) via formal Chern roots,
//!   over a pluggable coefficient ring.
//! - [`schubert`]: Schubert calculus on small Grassmannians — Pieri and
//!   Littlewood–Richardson products, integration, tautological bundles.
//! - [`fano`]: the variety of lines on a cubic fourfold as a zero locus in
//!   Gr(2,6); its intersection matrix on codimension-2 classes and c₂.
//! - [`lattice`]: integral/rational quadratic lattices, exact signatures, the
//!   Beauville–Bogomolov pairing on Hilbert squares and Kummer fourfolds.
//! - [`blowup`]: intersection numbers on the blow-up of S×S along the
//!   diagonal and on the projective bundle P(Ω¹_S); derives q(δ,δ).
//! - [`cone`]: exact 2-dimensional polyhedral cone duality with containment
//!   certificates and the λ-parameterized nef/effective gap report.
//! - [`catalog`], [`expr`], [`report`]: the curated class registry, the
//!   expression evaluator, and deterministic reproduction reports.

pub mod blowup;
pub mod catalog;
pub mod chern;
pub mod cone;
pub mod error;
pub mod expr;
pub mod fano;
pub mod graded;
pub mod lattice;
pub mod mpoly;
pub mod rational;
pub mod report;
pub mod ring;
pub mod roots;
pub mod schubert;

pub use error::Error;
pub use rational::Rational;
