//! Schubert calculus on small Grassmannians Gr(k, n).
//!
//! Classes are stored sparsely as rational combinations of partitions inside
//! the k×(n−k) box. Products with a one-row class follow the Pieri rule;
//! general products expand through Littlewood–Richardson skew-tableau
//! enumeration (memoized per factor pair — the boxes in play are tiny, so
//! clarity wins over asymptotics). Ambients are validated to k ≤ 3, n ≤ 8,
//! which keeps exhaustive tests over the box feasible.

use crate::chern::ChernVector;
use crate::error::Error;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::ring::CoeffRing;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Weakly decreasing list of non-negative integers; trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::parse(0, "partition parts must be weakly decreasing"));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `i`-th part (0-indexed), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes `|λ|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    fn fits(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    /// Degree first, then lexicographic: gives displays and map iteration a
    /// stable by-codimension order.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Ambient Grassmannian Gr(k, n) of k-planes in n-space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassmannianSpec {
    k: usize,
    n: usize,
}

impl GrassmannianSpec {
    pub fn new(k: usize, n: usize) -> Result<Self, Error> {
        if k == 0 || k > 3 || n > 8 || k >= n {
            return Err(Error::UnsupportedGrassmannian { k, n });
        }
        Ok(GrassmannianSpec { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Width of the box: n − k.
    pub fn cols(&self) -> u32 {
        (self.n - self.k) as u32
    }

    pub fn dimension(&self) -> usize {
        self.k * (self.n - self.k)
    }

    pub fn fits(&self, p: &Partition) -> bool {
        p.fits(self.k, self.cols())
    }

    /// The top (point) class: the full box.
    pub fn box_partition(&self) -> Partition {
        Partition(vec![self.cols(); self.k])
    }

    /// Poincaré-dual partition inside the box.
    pub fn complement(&self, p: &Partition) -> Option<Partition> {
        if !self.fits(p) {
            return None;
        }
        let parts: Vec<u32> = (0..self.k)
            .rev()
            .map(|i| self.cols() - p.part(i))
            .collect();
        Some(Partition::new(parts).expect("complement stays weakly decreasing"))
    }

    /// All partitions in the box, optionally filtered by size.
    pub fn box_partitions(&self, size: Option<u32>) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = vec![(Vec::<u32>::new(), self.cols())];
        while let Some((parts, max)) = stack.pop() {
            if parts.len() == self.k {
                let trimmed: Vec<u32> = parts.iter().copied().filter(|&x| x > 0).collect();
                let p = Partition(trimmed);
                if size.map_or(true, |s| p.size() == s) && !out.contains(&p) {
                    out.push(p);
                }
                continue;
            }
            for next in 0..=max {
                let mut ext = parts.clone();
                ext.push(next);
                stack.push((ext, next));
            }
        }
        out.sort();
        out
    }
}

/// Sparse rational combination of box partitions on a fixed ambient.
#[derive(Debug, Clone, PartialEq)]
pub struct SchubertClass {
    spec: GrassmannianSpec,
    terms: BTreeMap<Partition, Rational>,
}

impl SchubertClass {
    pub fn zero(spec: GrassmannianSpec) -> Self {
        SchubertClass {
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: GrassmannianSpec) -> Self {
        SchubertClass::monomial(spec, Partition::empty(), Rational::one())
            .expect("empty partition fits every box")
    }

    /// Single Schubert class `σ_λ` scaled by a rational.
    pub fn monomial(spec: GrassmannianSpec, p: Partition, c: Rational) -> Result<Self, Error> {
        if !spec.fits(&p) {
            return Err(Error::PartitionOutOfBox {
                k: spec.k,
                cols: spec.cols() as usize,
            });
        }
        let mut s = SchubertClass::zero(spec);
        s.add_term(p, c);
        Ok(s)
    }

    pub fn sigma(spec: GrassmannianSpec, parts: &[u32]) -> Result<Self, Error> {
        SchubertClass::monomial(spec, Partition::new(parts.to_vec())?, Rational::one())
    }

    pub fn spec(&self) -> GrassmannianSpec {
        self.spec
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &Partition) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return SchubertClass::zero(self.spec);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    fn check_ambient(&self, other: &Self) -> Result<(), Error> {
        if self.spec != other.spec {
            return Err(Error::AmbientMismatch(
                self.spec.k,
                self.spec.n,
                other.spec.k,
                other.spec.n,
            ));
        }
        Ok(())
    }

    /// Common codimension of all terms: `None` for the zero class, an error
    /// when mixed.
    pub fn degree(&self) -> Result<Option<u32>, Error> {
        let mut deg = None;
        for p in self.terms.keys() {
            match deg {
                None => deg = Some(p.size()),
                Some(d) if d != p.size() => return Err(Error::Inhomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Littlewood–Richardson product, truncated to the box.
    pub fn multiply(&self, other: &Self) -> Result<Self, Error> {
        self.check_ambient(other)?;
        let mut out = SchubertClass::zero(self.spec);
        for (la, ca) in &self.terms {
            for (mu, cb) in &other.terms {
                let coeff = ca * cb;
                for (nu, m) in lr_expand(la, mu, self.spec).iter() {
                    out.add_term(nu.clone(), &coeff * Rational::from_integer(BigInt::from(*m)));
                }
            }
        }
        Ok(out)
    }

    /// Coefficient of the top (full-box) class; realizes integration over
    /// the Grassmannian.
    pub fn integrate(&self) -> Rational {
        self.coefficient(&self.spec.box_partition())
    }
}

/// Pieri rule: `σ_λ · σ_j` as the sum over horizontal-strip extensions of λ
/// by `j` boxes inside the box. Box overflow simply yields the zero class.
pub fn pieri(lambda: &Partition, j: u32, spec: GrassmannianSpec) -> Result<SchubertClass, Error> {
    if !spec.fits(lambda) {
        return Err(Error::PartitionOutOfBox {
            k: spec.k,
            cols: spec.cols() as usize,
        });
    }
    fn rec(
        row: usize,
        k: usize,
        remaining: u32,
        acc: &mut Vec<u32>,
        lambda: &Partition,
        cols: u32,
        out: &mut Vec<Partition>,
    ) {
        if row == k {
            if remaining == 0 {
                let parts: Vec<u32> = acc.iter().copied().filter(|&x| x > 0).collect();
                out.push(Partition(parts));
            }
            return;
        }
        let upper = if row == 0 {
            cols
        } else {
            lambda.part(row - 1).min(cols)
        };
        let lo = lambda.part(row);
        for m in lo..=upper {
            let added = m - lo;
            if added > remaining {
                break;
            }
            acc.push(m);
            rec(row + 1, k, remaining - added, acc, lambda, cols, out);
            acc.pop();
        }
    }
    let mut mus = Vec::new();
    rec(0, spec.k, j, &mut Vec::new(), lambda, spec.cols(), &mut mus);
    let mut out = SchubertClass::zero(spec);
    for mu in mus {
        out.add_term(mu, Rational::one());
    }
    Ok(out)
}

type LrKey = (Partition, Partition, usize, usize);
type LrExpansion = Arc<Vec<(Partition, u64)>>;

fn lr_memo() -> &'static Mutex<HashMap<LrKey, LrExpansion>> {
    static MEMO: OnceLock<Mutex<HashMap<LrKey, LrExpansion>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Expansion of `σ_λ · σ_μ` in the box, as `(ν, c^ν_{λμ})` pairs.
pub fn lr_expand(
    lambda: &Partition,
    mu: &Partition,
    spec: GrassmannianSpec,
) -> LrExpansion {
    let key = (lambda.clone(), mu.clone(), spec.k, spec.cols() as usize);
    if let Some(hit) = lr_memo().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let mut expansion = Vec::new();
    if lambda.is_empty() || mu.is_empty() {
        let single = if lambda.is_empty() { mu } else { lambda };
        expansion.push((single.clone(), 1));
    } else {
        let target = lambda.size() + mu.size();
        for nu in spec.box_partitions(Some(target)) {
            if !nu.contains(lambda) {
                continue;
            }
            let count = lr_count(&nu, lambda, mu);
            if count > 0 {
                expansion.push((nu, count));
            }
        }
    }
    let arc = Arc::new(expansion);
    lr_memo().lock().unwrap().insert(key, arc.clone());
    arc
}

/// Number of Littlewood–Richardson skew tableaux of shape `ν/λ` and content
/// `μ`: semistandard fillings whose reverse reading word is a lattice word.
fn lr_count(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    let rows = nu.len();
    let letters = mu.len();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (lambda.part(r)..nu.part(r)).map(move |c| (r, c as usize)))
        .collect();
    if cells.len() != mu.size() as usize {
        return 0;
    }
    let width = nu.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; rows]; // 0 = empty
    let mut counts = vec![0u32; letters];

    fn lattice_ok(grid: &[Vec<u32>], nu: &Partition, lambda: &Partition, letters: usize) -> bool {
        let mut seen = vec![0i64; letters + 1];
        for r in 0..nu.len() {
            for c in (lambda.part(r)..nu.part(r)).rev() {
                let l = grid[r][c as usize] as usize;
                seen[l] += 1;
                if l >= 2 && seen[l] > seen[l - 1] {
                    return false;
                }
            }
        }
        true
    }

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        nu: &Partition,
        lambda: &Partition,
        mu: &Partition,
    ) -> u64 {
        if idx == cells.len() {
            return if lattice_ok(grid, nu, lambda, mu.len()) {
                1
            } else {
                0
            };
        }
        let (r, c) = cells[idx];
        let mut total = 0;
        for letter in 1..=mu.len() as u32 {
            if counts[(letter - 1) as usize] >= mu.part((letter - 1) as usize) {
                continue;
            }
            // weakly increasing along the row
            if c as u32 > lambda.part(r) && grid[r][c - 1] > letter {
                continue;
            }
            // strictly increasing down the column (against filled cells only)
            if r > 0
                && (c as u32) >= lambda.part(r - 1)
                && (c as u32) < nu.part(r - 1)
                && grid[r - 1][c] >= letter
            {
                continue;
            }
            grid[r][c] = letter;
            counts[(letter - 1) as usize] += 1;
            total += fill(idx + 1, cells, grid, counts, nu, lambda, mu);
            counts[(letter - 1) as usize] -= 1;
            grid[r][c] = 0;
        }
        total
    }

    fill(0, &cells, &mut grid, &mut counts, nu, lambda, mu)
}

/// Tautological bundles whose Chern classes the ambient provides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tautological {
    /// Rank-k subbundle U.
    U,
    /// Its dual U∨, with `c_i = σ_{1^i}`.
    Udual,
    /// Rank-(n−k) quotient Q, by Whitney inversion of c(U).
    Q,
}

/// Chern vector of a tautological bundle, with Schubert-class coefficients.
pub fn tautological_chern(
    which: Tautological,
    spec: GrassmannianSpec,
) -> Result<ChernVector<SchubertRing>, Error> {
    let ring = SchubertRing::new(spec);
    let udual = || -> Result<ChernVector<SchubertRing>, Error> {
        let classes = (1..=spec.k)
            .map(|i| SchubertClass::sigma(spec, &vec![1u32; i]))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ChernVector::new(ring, classes))
    };
    match which {
        Tautological::Udual => udual(),
        Tautological::U => Ok(udual()?.dual()),
        Tautological::Q => {
            let dim = spec.dimension();
            let inv = udual()?.dual().total(dim).inverse()?;
            let quotient_rank = spec.n - spec.k;
            for d in quotient_rank + 1..=dim {
                if !ring.is_zero(&inv.get(d)) {
                    return Err(Error::Internal(format!(
                        "Whitney inverse of c(U) has a nonzero class in degree {d}"
                    )));
                }
            }
            let classes = (1..=quotient_rank).map(|d| inv.get(d)).collect();
            Ok(ChernVector::new(ring, classes))
        }
    }
}

/// The Schubert cohomology ring of a fixed Grassmannian as a coefficient
/// ring for the Chern calculus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchubertRing {
    spec: GrassmannianSpec,
}

impl SchubertRing {
    pub fn new(spec: GrassmannianSpec) -> Self {
        SchubertRing { spec }
    }

    pub fn spec(&self) -> GrassmannianSpec {
        self.spec
    }
}

impl CoeffRing for SchubertRing {
    type Elem = SchubertClass;

    fn zero(&self) -> SchubertClass {
        SchubertClass::zero(self.spec)
    }

    fn one(&self) -> SchubertClass {
        SchubertClass::one(self.spec)
    }

    fn add(&self, a: &SchubertClass, b: &SchubertClass) -> SchubertClass {
        a.add(b).expect("ring elements share the ambient")
    }

    fn neg(&self, a: &SchubertClass) -> SchubertClass {
        a.neg()
    }

    fn mul(&self, a: &SchubertClass, b: &SchubertClass) -> SchubertClass {
        a.multiply(b).expect("ring elements share the ambient")
    }

    fn int_mul(&self, k: &BigInt, a: &SchubertClass) -> SchubertClass {
        a.scale(&Rational::from_integer(k.clone()))
    }

    fn is_zero(&self, a: &SchubertClass) -> bool {
        a.is_zero()
    }
}

impl fmt::Display for SchubertClass {
    /// Renders as `a*s[2,1] + b*s[1]`; round-trips through [`parse_class`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if p.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{}*{p}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

/// Parses the `a*s[2,1] + b*s[1]` rendering back into a class.
pub fn parse_class(input: &str, spec: GrassmannianSpec) -> Result<SchubertClass, Error> {
    let mut out = SchubertClass::zero(spec);
    let bytes = input.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(Error::parse(pos, "empty class expression"));
    }
    if input[pos..].trim_end() == "0" {
        return Ok(out);
    }
    let mut first = true;
    while pos < bytes.len() {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        let mut sign = Rational::one();
        if !first {
            match bytes.get(pos) {
                Some(b'+') => pos += 1,
                Some(b'-') => {
                    sign = -sign;
                    pos += 1;
                }
                _ => return Err(Error::parse(pos, "expected '+' or '-' between terms")),
            }
            skip_ws(&mut pos);
        } else if bytes.get(pos) == Some(&b'-') {
            sign = -sign;
            pos += 1;
            skip_ws(&mut pos);
        }
        first = false;

        // optional rational coefficient
        let mut coeff = Rational::one();
        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
            pos += 1;
        }
        let had_number = pos > start;
        if had_number {
            coeff = parse_rational(&input[start..pos])
                .map_err(|_| Error::parse(start, "invalid coefficient"))?;
        }
        skip_ws(&mut pos);
        if bytes.get(pos) == Some(&b'*') {
            pos += 1;
            skip_ws(&mut pos);
        }
        // optional s[...] label
        if bytes.get(pos) == Some(&b's') && bytes.get(pos + 1) == Some(&b'[') {
            let close = input[pos..]
                .find(']')
                .map(|o| pos + o)
                .ok_or_else(|| Error::parse(pos, "unterminated partition label"))?;
            let inner = &input[pos + 2..close];
            let parts: Vec<u32> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::parse(pos, "invalid partition part"))
                    })
                    .collect::<Result<_, _>>()?
            };
            let p = Partition::new(parts)
                .map_err(|_| Error::parse(pos, "partition parts must be weakly decreasing"))?;
            if !spec.fits(&p) {
                return Err(Error::PartitionOutOfBox {
                    k: spec.k(),
                    cols: spec.cols() as usize,
                });
            }
            out.add_term(p, sign * coeff);
            pos = close + 1;
        } else if had_number {
            out.add_term(Partition::empty(), sign * coeff);
        } else {
            return Err(Error::parse(pos, "expected coefficient or s[...] label"));
        }
        skip_ws(&mut pos);
    }
    Ok(out)
}
