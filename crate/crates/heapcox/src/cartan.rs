//! Generalized Cartan matrices, Dynkin diagrams, the root lattice and the
//! real/imaginary root classification.
//!
//! Everything here is exact integer arithmetic.  Vertices are indexed
//! `0..n` and vertex `0` is always the distinguished affine vertex.

use crate::{Error, Result};
use std::fmt;

/// A generalized Cartan matrix: 2 on the diagonal, non-positive entries
/// elsewhere with a symmetric zero pattern.  The doubly laced case
/// restricts off-diagonal entries to `{0, -1, -2}`; the type `G2^(1)`
/// matrix (with a `-3`) is admitted only behind the `relaxed` constructor
/// and carries restrictions downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let m = Self::new_relaxed(rows)?;
        for i in 0..m.n {
            for j in 0..m.n {
                let a = m.entry(i, j);
                if !matches!(a, 2 | 0 | -1 | -2) {
                    return Err(Error::EntryOutOfRange(a));
                }
            }
        }
        Ok(m)
    }

    /// Accepts any generalized Cartan matrix, including entries below -2.
    pub fn new_relaxed(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotCartan("matrix is not square".into()));
        }
        let entries: Vec<i64> = rows.into_iter().flatten().collect();
        let m = CartanMatrix { n, entries };
        for i in 0..n {
            if m.entry(i, i) != 2 {
                return Err(Error::NotCartan(format!(
                    "diagonal entry ({i},{i}) is not 2"
                )));
            }
            for j in 0..n {
                if i != j {
                    if m.entry(i, j) > 0 {
                        return Err(Error::NotCartan(format!(
                            "off-diagonal entry ({i},{j}) is positive"
                        )));
                    }
                    if (m.entry(i, j) == 0) != (m.entry(j, i) == 0) {
                        return Err(Error::NotCartan(format!(
                            "zero pattern is not symmetric at ({i},{j})"
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn is_simply_laced(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.entry(i, j) >= -1))
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.entry(i, j) != 0
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.adjacent(i, j)).collect()
    }
}

/// An edge of a Dynkin diagram.  `lines` is the multiplicity drawn between
/// the two vertices and `arrow_to` the vertex the arrow points at, when
/// the multiplicity exceeds one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramEdge {
    pub i: usize,
    pub j: usize,
    pub lines: usize,
    pub arrow_to: Option<usize>,
    pub both_arrows: bool,
}

/// Catalog identifiers for the diagrams used by the heap catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogTag {
    /// `A_l^(1)`, the (l+1)-cycle; for l = 1 the double edge with two arrows.
    A(usize),
    /// `B_l^(1)`, l >= 3.
    B(usize),
    /// `C_l^(1)`, l >= 2.
    C(usize),
    /// `D_l^(1)`, l >= 4.
    D(usize),
    /// `A_{2l-1}^(2)`, l >= 2.
    A2Twisted(usize),
    /// `D_{l+1}^(2)`, l >= 2 (vertices 0..l).
    D2Twisted(usize),
    E6,
    E7,
    /// The `G2^(1)` diagram, admitted for edge-labelled lattice work only.
    G2Graph,
    /// The `H3` path graph with Coxeter exponent 5 on edge (1,2).
    H3Graph,
}

impl fmt::Display for CatalogTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogTag::A(l) => write!(f, "A{l}"),
            CatalogTag::B(l) => write!(f, "B{l}"),
            CatalogTag::C(l) => write!(f, "C{l}"),
            CatalogTag::D(l) => write!(f, "D{l}"),
            CatalogTag::A2Twisted(l) => write!(f, "A2tw{l}"),
            CatalogTag::D2Twisted(l) => write!(f, "D2tw{l}"),
            CatalogTag::E6 => write!(f, "E6"),
            CatalogTag::E7 => write!(f, "E7"),
            CatalogTag::G2Graph => write!(f, "G2"),
            CatalogTag::H3Graph => write!(f, "H3"),
        }
    }
}

impl CatalogTag {
    pub fn parse(tag: &str, rank: usize) -> Result<CatalogTag> {
        let t = tag.to_ascii_uppercase();
        let out = match t.as_str() {
            "A" => CatalogTag::A(rank),
            "B" => CatalogTag::B(rank),
            "C" => CatalogTag::C(rank),
            "D" => CatalogTag::D(rank),
            "A2" | "A2TW" => CatalogTag::A2Twisted(rank),
            "D2" | "D2TW" => CatalogTag::D2Twisted(rank),
            "E6" => CatalogTag::E6,
            "E7" => CatalogTag::E7,
            "G2" => CatalogTag::G2Graph,
            "H3" => CatalogTag::H3Graph,
            _ => return Err(Error::UnknownTag(tag.to_string())),
        };
        let fixed = match out {
            CatalogTag::E6 => Some(6),
            CatalogTag::E7 => Some(7),
            CatalogTag::G2Graph => Some(2),
            CatalogTag::H3Graph => Some(3),
            _ => None,
        };
        if let Some(r) = fixed {
            if rank != 0 && rank != r {
                return Err(Error::RankOutOfRange { tag: t, rank });
            }
        }
        Ok(out)
    }
}

/// A Dynkin diagram together with its generalized Cartan matrix.  The two
/// determine each other; the diagram also carries the Coxeter exponents
/// used by the presentation checks, which are derived from the matrix
/// except for the two special section-9 graphs.
#[derive(Debug, Clone)]
pub struct DynkinDiagram {
    matrix: CartanMatrix,
    tag: Option<CatalogTag>,
    /// Coxeter exponent overrides keyed by unordered vertex pairs.
    coxeter_override: Vec<((usize, usize), u32)>,
    /// Root classification is disabled for the section-9 graphs.
    restricted: bool,
}

impl DynkinDiagram {
    pub fn from_matrix(matrix: CartanMatrix) -> Self {
        DynkinDiagram {
            matrix,
            tag: None,
            coxeter_override: Vec::new(),
            restricted: false,
        }
    }

    pub fn catalog(tag: CatalogTag) -> Result<Self> {
        let (matrix, coxeter_override, restricted) = catalog_matrix(tag)?;
        Ok(DynkinDiagram {
            matrix,
            tag: Some(tag),
            coxeter_override,
            restricted,
        })
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn matrix(&self) -> &CartanMatrix {
        &self.matrix
    }

    pub fn tag(&self) -> Option<CatalogTag> {
        self.tag
    }

    pub fn classification_disabled(&self) -> bool {
        self.restricted
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.matrix.adjacent(i, j)
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.matrix.neighbors(i)
    }

    /// Edges with multiplicities and arrows, derived from the matrix: the
    /// pair is joined by `max(|a_ij|, |a_ji|)` lines, with the arrow
    /// pointing at the vertex whose row carries the larger entry.
    pub fn edges(&self) -> Vec<DiagramEdge> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if !self.matrix.adjacent(i, j) {
                    continue;
                }
                let aij = self.matrix.entry(i, j).unsigned_abs() as usize;
                let aji = self.matrix.entry(j, i).unsigned_abs() as usize;
                let lines = aij.max(aji);
                let (arrow_to, both) = if aij == aji && aij > 1 {
                    (None, true)
                } else if aij > aji {
                    (Some(i), false)
                } else if aji > aij {
                    (Some(j), false)
                } else {
                    (None, false)
                };
                out.push(DiagramEdge {
                    i,
                    j,
                    lines,
                    arrow_to,
                    both_arrows: both,
                });
            }
        }
        out
    }

    /// Coxeter exponent m(i, j) of the presentation; `None` encodes no
    /// relation (the infinite case `a_ij * a_ji >= 4`).
    pub fn coxeter_m(&self, i: usize, j: usize) -> Option<u32> {
        let key = (i.min(j), i.max(j));
        if let Some(&(_, m)) = self.coxeter_override.iter().find(|&&(k, _)| k == key) {
            return Some(m);
        }
        match self.matrix.entry(i, j) * self.matrix.entry(j, i) {
            0 => Some(2),
            1 => Some(3),
            2 => Some(4),
            3 => Some(6),
            _ => None,
        }
    }

    /// The unique primitive positive integer vector in the kernel of the
    /// matrix.  Errors when the diagram is not of affine type.
    pub fn null_root(&self) -> Result<RootVector> {
        let kernel = integer_kernel(&self.matrix);
        if kernel.len() != 1 {
            return Err(Error::NotAffine(format!(
                "kernel has dimension {}, expected 1",
                kernel.len()
            )));
        }
        let mut delta = kernel.into_iter().next().unwrap();
        if delta.iter().all(|&c| c <= 0) {
            for c in delta.iter_mut() {
                *c = -*c;
            }
        }
        if delta.iter().any(|&c| c <= 0) {
            return Err(Error::NotAffine("kernel generator is not positive".into()));
        }
        Ok(RootVector(delta))
    }

    /// Finite / affine / indefinite trichotomy, decided exactly.
    pub fn kind(&self) -> DiagramKind {
        diagram_kind(&self.matrix)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramKind {
    Finite,
    Affine,
    Indefinite,
}

type CoxeterOverrides = Vec<((usize, usize), u32)>;

fn catalog_matrix(tag: CatalogTag) -> Result<(CartanMatrix, CoxeterOverrides, bool)> {
    let simple = |n: usize, edges: &[(usize, usize)]| -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
        }
        for &(i, j) in edges {
            a[i][j] = -1;
            a[j][i] = -1;
        }
        a
    };
    let err = |t: &str, rank: usize| Error::RankOutOfRange {
        tag: t.into(),
        rank,
    };
    let m = match tag {
        CatalogTag::A(l) => {
            if l == 0 {
                return Err(err("A", 0));
            }
            if l == 1 {
                vec![vec![2, -2], vec![-2, 2]]
            } else {
                let mut edges: Vec<(usize, usize)> = (0..l).map(|i| (i, i + 1)).collect();
                edges.push((l, 0));
                simple(l + 1, &edges)
            }
        }
        CatalogTag::B(l) => {
            if l < 3 {
                return Err(err("B", l));
            }
            let mut edges: Vec<(usize, usize)> = vec![(0, 2), (1, 2)];
            edges.extend((2..l).map(|i| (i, i + 1)));
            let mut a = simple(l + 1, &edges);
            a[l][l - 1] = -2;
            a
        }
        CatalogTag::C(l) => {
            if l < 2 {
                return Err(err("C", l));
            }
            let edges: Vec<(usize, usize)> = (0..l).map(|i| (i, i + 1)).collect();
            let mut a = simple(l + 1, &edges);
            a[1][0] = -2;
            a[l - 1][l] = -2;
            a
        }
        CatalogTag::D(l) => {
            if l < 4 {
                return Err(err("D", l));
            }
            let mut edges: Vec<(usize, usize)> = vec![(0, 2), (1, 2)];
            edges.extend((2..l - 2).map(|i| (i, i + 1)));
            edges.push((l - 2, l - 1));
            edges.push((l - 2, l));
            simple(l + 1, &edges)
        }
        CatalogTag::A2Twisted(l) => {
            if l < 2 {
                return Err(err("A2", l));
            }
            if l == 2 {
                vec![vec![2, 0, -2], vec![0, 2, -2], vec![-1, -1, 2]]
            } else {
                let mut edges: Vec<(usize, usize)> = vec![(0, 2), (1, 2)];
                edges.extend((2..l).map(|i| (i, i + 1)));
                let mut a = simple(l + 1, &edges);
                a[l - 1][l] = -2;
                a
            }
        }
        CatalogTag::D2Twisted(l) => {
            if l < 2 {
                return Err(err("D2", l));
            }
            let edges: Vec<(usize, usize)> = (0..l).map(|i| (i, i + 1)).collect();
            let mut a = simple(l + 1, &edges);
            a[0][1] = -2;
            a[l][l - 1] = -2;
            a
        }
        CatalogTag::E6 => simple(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 0)]),
        CatalogTag::E7 => simple(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)]),
        CatalogTag::G2Graph => {
            let a = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -3, 2]];
            let m = CartanMatrix::new_relaxed(a)?;
            return Ok((m, vec![], true));
        }
        CatalogTag::H3Graph => {
            let a = simple(3, &[(0, 1), (1, 2)]);
            let m = CartanMatrix::new(a)?;
            return Ok((m, vec![((1, 2), 5)], true));
        }
    };
    Ok((CartanMatrix::new(m)?, vec![], false))
}

/// Integer vector of coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(n: usize) -> Self {
        RootVector(vec![0; n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVector(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_nonpositive(&self) -> bool {
        self.0.iter().all(|&c| c <= 0)
    }

    pub fn neg(&self) -> Self {
        RootVector(self.0.iter().map(|&c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        RootVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        RootVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        RootVector(self.0.iter().map(|&c| c * k).collect())
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Writes `v = k * other` when possible.
    pub fn multiple_of(&self, other: &Self) -> Option<i64> {
        let mut k: Option<i64> = None;
        for (&a, &b) in self.0.iter().zip(&other.0) {
            match (a, b) {
                (0, 0) => {}
                (_, 0) => return None,
                _ => {
                    if a % b != 0 {
                        return None;
                    }
                    let q = a / b;
                    match k {
                        None => k = Some(q),
                        Some(prev) if prev != q => return None,
                        _ => {}
                    }
                }
            }
        }
        k.or(Some(0))
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Total, deterministic classification of a vector against the root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootClass {
    RealPositive,
    RealNegative,
    ImaginaryPositive,
    ImaginaryNegative,
    Zero,
    NotARoot,
}

impl RootClass {
    pub fn is_real(self) -> bool {
        matches!(self, RootClass::RealPositive | RootClass::RealNegative)
    }

    pub fn is_imaginary(self) -> bool {
        matches!(
            self,
            RootClass::ImaginaryPositive | RootClass::ImaginaryNegative
        )
    }
}

/// The bilinear pairing of a root-lattice vector with the i-th simple
/// coroot: row i of the matrix applied to the coefficient vector.
pub fn pairing(m: &CartanMatrix, alpha: &RootVector, i: usize) -> Result<i64> {
    if alpha.n() != m.n() {
        return Err(Error::DimensionMismatch {
            expected: m.n(),
            got: alpha.n(),
        });
    }
    if i >= m.n() {
        return Err(Error::BadGenerator(i));
    }
    Ok((0..m.n()).map(|j| alpha.0[j] * m.entry(i, j)).sum())
}

/// Simple reflection on the root lattice.
pub fn reflect_root(m: &CartanMatrix, alpha: &RootVector, i: usize) -> Result<RootVector> {
    let c = pairing(m, alpha, i)?;
    let mut out = alpha.clone();
    out.0[i] -= c;
    Ok(out)
}

/// Left-to-right composition of simple reflections.
pub fn act_word_on_root(
    d: &DynkinDiagram,
    word: &[usize],
    alpha: &RootVector,
) -> Result<RootVector> {
    let mut v = alpha.clone();
    for &i in word {
        v = reflect_root(d.matrix(), &v, i)?;
    }
    Ok(v)
}

/// Classifies a vector as a real root, an imaginary root, zero, or not a
/// root at all.  Supported for finite and affine diagrams; the section-9
/// graphs and indefinite matrices are rejected.
pub fn classify_root(d: &DynkinDiagram, alpha: &RootVector) -> Result<RootClass> {
    if d.classification_disabled() {
        return Err(Error::ClassificationDisabled);
    }
    if alpha.n() != d.n() {
        return Err(Error::DimensionMismatch {
            expected: d.n(),
            got: alpha.n(),
        });
    }
    if alpha.is_zero() {
        return Ok(RootClass::Zero);
    }
    let kind = d.kind();
    let delta = match kind {
        DiagramKind::Finite => None,
        DiagramKind::Affine => Some(d.null_root()?),
        DiagramKind::Indefinite => return Err(Error::Indefinite),
    };
    if let Some(delta) = &delta {
        if let Some(k) = alpha.multiple_of(delta) {
            if !alpha.sub(&delta.scale(k)).is_zero() {
                // fall through: not an exact multiple after all
            } else if k > 0 {
                return Ok(RootClass::ImaginaryPositive);
            } else if k < 0 {
                return Ok(RootClass::ImaginaryNegative);
            }
        }
    }
    if alpha.is_nonpositive() {
        return Ok(match classify_root(d, &alpha.neg())? {
            RootClass::RealPositive => RootClass::RealNegative,
            RootClass::ImaginaryPositive => RootClass::ImaginaryNegative,
            other => other,
        });
    }
    if !alpha.is_nonnegative() {
        return Ok(RootClass::NotARoot);
    }
    // Height reduction: reflect at any vertex with strictly positive
    // pairing.  A positive real root stays positive until it becomes
    // simple; anything that goes mixed or exhausts the fuse is not a root.
    let fuse = 10 * (1 + alpha.0.iter().map(|c| c.unsigned_abs()).sum::<u64>());
    let mut v = alpha.clone();
    for _ in 0..fuse {
        if v.0.iter().filter(|&&c| c != 0).count() == 1 && v.0.iter().find(|&&c| c != 0) == Some(&1)
        {
            return Ok(RootClass::RealPositive);
        }
        if !v.is_nonnegative() {
            return Ok(RootClass::NotARoot);
        }
        let mut reduced = false;
        for i in 0..d.n() {
            if pairing(d.matrix(), &v, i)? > 0 {
                v = reflect_root(d.matrix(), &v, i)?;
                reduced = true;
                break;
            }
        }
        if !reduced {
            return Ok(RootClass::NotARoot);
        }
    }
    // Exceeding the fuse indicates a defect in the reduction, not an answer.
    panic!("root classification fuse exceeded for {alpha}");
}

// ---- exact linear algebra on small integer matrices ----

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Primitive integer basis of the kernel, via fraction-free elimination.
fn integer_kernel(m: &CartanMatrix) -> Vec<Vec<i64>> {
    let n = m.n();
    let mut rows: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| m.entry(i, j) as i128).collect())
        .collect();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..n).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        for i in 0..n {
            if i != r && rows[i][c] != 0 {
                let (p, f) = (rows[r][c], rows[i][c]);
                for j in 0..n {
                    rows[i][j] = rows[i][j] * p - rows[r][j] * f;
                }
                let g = rows[i].iter().fold(0i128, |acc, &x| gcd(acc, x));
                if g > 1 {
                    for x in rows[i].iter_mut() {
                        *x /= g;
                    }
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == n {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        // Solve with x[fc] = lcm-scaled 1, pivots back-substituted exactly.
        let mut num = vec![0i128; n];
        let mut den = vec![1i128; n];
        num[fc] = 1;
        for (ri, &pc) in pivot_col_of_row.iter().enumerate() {
            // row ri: rows[ri][pc] * x[pc] + sum_{c != pc} rows[ri][c] * x[c] = 0
            let mut sn = 0i128;
            let mut sd = 1i128;
            for c in 0..n {
                if c != pc && rows[ri][c] != 0 && num[c] != 0 {
                    // s += rows[ri][c] * num[c]/den[c]
                    sn = sn * den[c] + rows[ri][c] * num[c] * sd;
                    sd *= den[c];
                    let g = gcd(sn, sd);
                    if g > 1 {
                        sn /= g;
                        sd /= g;
                    }
                }
            }
            num[pc] = -sn;
            den[pc] = sd * rows[ri][pc];
            let g = gcd(num[pc], den[pc]);
            if g > 1 {
                num[pc] /= g;
                den[pc] /= g;
            }
        }
        let mut l = 1i128;
        for &d in &den {
            l = l / gcd(l, d) * d.abs();
        }
        let mut v: Vec<i128> = (0..n).map(|c| num[c] * (l / den[c])).collect();
        let g = v.iter().fold(0i128, |acc, &x| gcd(acc, x));
        if g > 1 {
            for x in v.iter_mut() {
                *x /= g;
            }
        }
        basis.push(v.into_iter().map(|x| x as i64).collect());
    }
    basis
}

/// Determinant by Bareiss elimination.
fn det_i128(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(sw) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, sw);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn diagram_kind(m: &CartanMatrix) -> DiagramKind {
    let kernel = integer_kernel(m);
    if kernel.len() == 1 {
        let v = &kernel[0];
        if v.iter().all(|&c| c > 0) || v.iter().all(|&c| c < 0) {
            return DiagramKind::Affine;
        }
        return DiagramKind::Indefinite;
    }
    if !kernel.is_empty() {
        return DiagramKind::Indefinite;
    }
    // Symmetrize: find positive integers d with d_i a_ij = d_j a_ji, then
    // test positive definiteness through leading principal minors.
    let n = m.n();
    let mut d = vec![0i128; n];
    d[0] = 1;
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        for j in 0..n {
            if m.adjacent(i, j) && d[j] == 0 {
                // d_j = d_i * a_ij / a_ji
                let (num, den) = (d[i] * m.entry(i, j) as i128, m.entry(j, i) as i128);
                if num % den != 0 {
                    // scale everything assigned so far
                    let k = den.abs() / gcd(num, den).abs();
                    for x in d.iter_mut() {
                        *x *= k;
                    }
                    queue.push(i);
                    break;
                }
                d[j] = num / den;
                queue.push(j);
            }
        }
    }
    for x in d.iter_mut() {
        if *x == 0 {
            *x = 1; // disconnected remainder; harmless for the minors test
        }
    }
    for k in 1..=n {
        let sub: Vec<Vec<i128>> = (0..k)
            .map(|i| (0..k).map(|j| d[i] * m.entry(i, j) as i128).collect())
            .collect();
        if det_i128(sub) <= 0 {
            return DiagramKind::Indefinite;
        }
    }
    DiagramKind::Finite
}

/// Parses the line-oriented diagram format: either `catalog <tag> <rank>`
/// or `diagram <n>` followed by n rows of n integers.  `#` starts a
/// comment.
pub fn parse_diagram(text: &str) -> Result<DynkinDiagram> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, head) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "empty diagram file".into(),
    })?;
    let mut parts = head.split_whitespace();
    match parts.next() {
        Some("catalog") => {
            let tag = parts.next().ok_or(Error::Parse {
                line: ln,
                msg: "missing catalog tag".into(),
            })?;
            let rank: usize = parts
                .next()
                .ok_or(Error::Parse {
                    line: ln,
                    msg: "missing rank".into(),
                })?
                .parse()
                .map_err(|_| Error::Parse {
                    line: ln,
                    msg: "bad rank".into(),
                })?;
            DynkinDiagram::catalog(CatalogTag::parse(tag, rank)?)
        }
        Some("diagram") => {
            let n: usize = parts
                .next()
                .ok_or(Error::Parse {
                    line: ln,
                    msg: "missing size".into(),
                })?
                .parse()
                .map_err(|_| Error::Parse {
                    line: ln,
                    msg: "bad size".into(),
                })?;
            let mut rows = Vec::with_capacity(n);
            for _ in 0..n {
                let (ln, row) = lines.next().ok_or(Error::Parse {
                    line: ln,
                    msg: "missing matrix row".into(),
                })?;
                let row: Vec<i64> = row
                    .split_whitespace()
                    .map(|t| {
                        t.parse().map_err(|_| Error::Parse {
                            line: ln,
                            msg: format!("bad integer `{t}`"),
                        })
                    })
                    .collect::<Result<_>>()?;
                if row.len() != n {
                    return Err(Error::Parse {
                        line: ln,
                        msg: "row has wrong length".into(),
                    });
                }
                rows.push(row);
            }
            Ok(DynkinDiagram::from_matrix(CartanMatrix::new(rows)?))
        }
        _ => Err(Error::Parse {
            line: ln,
            msg: "expected `catalog` or `diagram`".into(),
        }),
    }
}
