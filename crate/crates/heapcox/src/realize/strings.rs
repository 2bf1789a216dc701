//! Sign-string parametrizations of the ideal lattices of the spin and
//! brick-wall heaps, and the induced Weyl group actions on strings.
//!
//! Encoding composes the binary-path bijection (per-column element counts
//! of the fundamental-domain subheap) with the step-sign map.  The string
//! action is computed through the heap itself, so it agrees with the
//! graded ideal action by construction; the closed-form swap/flip rules
//! are checked against it in the tests.

use crate::heap::{HeapElement, PeriodicHeap};
use crate::lattice::{apply_reflection, e0_subheap, height, orbit_decompose, shift, Frontier};
use crate::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StringVariant {
    /// Spin strings of length l over the type-B heap.
    B(usize),
    /// Even-sign strings of length l over the type-D spin heap.
    D(usize),
    /// Balanced cyclic strings of length 2l over the 2l-cycle brick wall.
    A(usize),
    /// Strings of length l+1 over the twisted-D brick wall; the last
    /// symbol tracks the phase of the final chain.
    C(usize),
}

impl StringVariant {
    pub fn motif(&self) -> crate::heap::MotifTag {
        use crate::heap::MotifTag;
        match *self {
            StringVariant::B(l) => MotifTag::BSpin(l),
            StringVariant::D(l) => MotifTag::DSpin(l),
            StringVariant::A(l) => MotifTag::AString(l),
            StringVariant::C(l) => MotifTag::CString(l),
        }
    }

    pub fn string_len(&self) -> usize {
        match *self {
            StringVariant::B(l) => l,
            StringVariant::D(l) => l,
            StringVariant::A(l) => 2 * l,
            StringVariant::C(l) => l + 1,
        }
    }

    /// Number of grid columns of the fundamental-domain subheap.
    fn columns(&self) -> usize {
        match *self {
            StringVariant::B(l) => l,
            StringVariant::D(l) => l - 1,
            StringVariant::A(l) => 2 * l,
            StringVariant::C(l) => l + 1,
        }
    }

    /// Grid column of a chain.
    fn column_of(&self, p: usize) -> usize {
        match *self {
            StringVariant::B(_) => {
                if p <= 1 {
                    0
                } else {
                    p - 1
                }
            }
            StringVariant::D(l) => {
                if p <= 1 {
                    0
                } else if p >= l - 1 {
                    l - 2
                } else {
                    p - 1
                }
            }
            StringVariant::A(_) | StringVariant::C(_) => p,
        }
    }

    /// Rank of an element in the layered picture of the heap.
    fn layer(&self, e: HeapElement) -> i64 {
        let (p, z) = (e.vertex, e.index);
        match *self {
            StringVariant::B(_) => match p {
                0 => 4 * z - 2,
                1 => 4 * z,
                _ if p % 2 == 0 => 2 * z - 1,
                _ => 2 * z - 2,
            },
            StringVariant::D(l) => {
                if p == 0 {
                    4 * z + 1
                } else if p == 1 {
                    4 * z + 3
                } else if p == l {
                    4 * z + ((l as i64 + 1).rem_euclid(4))
                } else if p == l - 1 {
                    4 * z + ((l as i64 + 3).rem_euclid(4))
                } else {
                    2 * z + (p as i64) % 2
                }
            }
            StringVariant::A(_) | StringVariant::C(_) => 2 * z + (p as i64) % 2,
        }
    }

    /// The valid strings of the variant, for exhaustive campaigns.
    pub fn all_strings(&self) -> Vec<SignString> {
        let len = self.string_len();
        let mut out = Vec::new();
        for bits in 0u32..(1 << len) {
            let symbols: Vec<bool> = (0..len).map(|k| bits & (1 << k) != 0).collect();
            let s = SignString {
                variant: *self,
                symbols,
            };
            if self.admissible(&s) {
                out.push(s);
            }
        }
        out
    }

    fn admissible(&self, s: &SignString) -> bool {
        let minus = s.symbols.iter().filter(|&&b| !b).count();
        match *self {
            StringVariant::B(_) | StringVariant::C(_) => true,
            StringVariant::D(_) => minus % 2 == 0,
            StringVariant::A(l) => minus == l,
        }
    }
}

/// A sign string; `true` renders as `+`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignString {
    pub variant: StringVariant,
    pub symbols: Vec<bool>,
}

impl fmt::Display for SignString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.symbols {
            write!(f, "{}", if b { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl SignString {
    pub fn parse(variant: StringVariant, text: &str) -> Result<SignString> {
        let mut symbols = Vec::new();
        for ch in text.chars() {
            match ch {
                '+' => symbols.push(true),
                '-' => symbols.push(false),
                ' ' | '(' | ')' => {}
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("bad string symbol `{other}`"),
                    })
                }
            }
        }
        let s = SignString { variant, symbols };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.symbols.len() != self.variant.string_len() {
            return Err(Error::Parse {
                line: 0,
                msg: format!(
                    "string has length {}, expected {}",
                    self.symbols.len(),
                    self.variant.string_len()
                ),
            });
        }
        if !self.variant.admissible(self) {
            return Err(Error::Parse {
                line: 0,
                msg: format!("string violates the {:?} constraint", self.variant),
            });
        }
        Ok(())
    }
}

/// Per-column element counts of a height-zero ideal, over the grid of the
/// fundamental-domain subheap.
fn column_counts(variant: StringVariant, h: &PeriodicHeap, f: &Frontier) -> Result<Vec<i64>> {
    if height(f) != 0 {
        return Err(Error::NotHeightZero(height(f)));
    }
    let lo = h.principal_frontier(HeapElement::new(0, 0));
    let mut counts = vec![0i64; variant.columns()];
    for p in 0..h.n() {
        counts[variant.column_of(p)] += f.0[p] - lo.0[p];
    }
    Ok(counts)
}

/// Reconstructs per-chain counts from per-column counts by filling each
/// column of the fundamental domain bottom-up.
fn chain_counts(variant: StringVariant, h: &PeriodicHeap, counts: &[i64]) -> Result<Vec<i64>> {
    let e0 = e0_subheap(h);
    let mut columns: Vec<Vec<HeapElement>> = vec![Vec::new(); variant.columns()];
    for &e in e0.elements() {
        columns[variant.column_of(e.vertex)].push(e);
    }
    for col in columns.iter_mut() {
        col.sort_by_key(|&e| variant.layer(e));
    }
    let mut per_chain = vec![0i64; h.n()];
    for (x, col) in columns.iter().enumerate() {
        let c = counts[x];
        if c < 0 || c as usize > col.len() {
            return Err(Error::Parse {
                line: 0,
                msg: format!("column {x} count {c} out of range 0..={}", col.len()),
            });
        }
        for &e in col.iter().take(c as usize) {
            per_chain[e.vertex] += 1;
        }
    }
    Ok(per_chain)
}

/// Encodes a height-zero ideal as a sign string.
pub fn string_encode(variant: StringVariant, h: &PeriodicHeap, f: &Frontier) -> Result<SignString> {
    let counts = column_counts(variant, h, f)?;
    let symbols = match variant {
        StringVariant::B(l) => path_steps(&counts, l),
        StringVariant::D(l) => {
            let mut symbols = path_steps(&counts, l - 1);
            // the appended symbol is the phase of the last column
            symbols.push(counts[l - 2].rem_euclid(2) == (l as i64 - 1).rem_euclid(2));
            symbols
        }
        StringVariant::A(l) => {
            let n = 2 * l;
            (0..n)
                .map(|k| {
                    let a = variant.layer(f.top((k + 1) % n));
                    let b = variant.layer(f.top(k));
                    a > b
                })
                .collect()
        }
        StringVariant::C(l) => {
            let mut symbols: Vec<bool> = (0..l)
                .map(|k| variant.layer(f.top(k + 1)) > variant.layer(f.top(k)))
                .collect();
            symbols.push(f.0[l].rem_euclid(2) == 0);
            symbols
        }
    };
    Ok(SignString { variant, symbols })
}

/// Step signs of the binary path determined by column counts: the path
/// starts at 0 left of column 0 and f(x) = 2 c_x - x - 1.
fn path_steps(counts: &[i64], len: usize) -> Vec<bool> {
    let mut prev = 0i64;
    let mut out = Vec::with_capacity(len);
    for (x, &c) in counts.iter().enumerate().take(len) {
        let fx = 2 * c - x as i64 - 1;
        out.push(fx > prev);
        prev = fx;
    }
    out
}

/// Decodes a sign string to the height-zero ideal it names.
pub fn string_decode(variant: StringVariant, h: &PeriodicHeap, s: &SignString) -> Result<Frontier> {
    s.validate()?;
    let lo = h.principal_frontier(HeapElement::new(0, 0));
    let per_chain = match variant {
        StringVariant::B(_) | StringVariant::D(_) => {
            let ncols = variant.columns();
            let mut counts = Vec::with_capacity(ncols);
            let mut fx = 0i64;
            for x in 0..ncols {
                fx += if s.symbols[x.min(s.symbols.len() - 1)] {
                    1
                } else {
                    -1
                };
                // for D the final symbol is the phase bit, not a step; the
                // loop above only consumes steps 0..ncols-1 which for D is
                // exactly symbols 0..l-2
                counts.push((fx + x as i64 + 1) / 2);
            }
            chain_counts(variant, h, &counts)?
        }
        StringVariant::A(l) => {
            let n = 2 * l;
            // walk layers from the chain-0 top at layer 0
            let mut layers = vec![0i64; n];
            for k in 0..(n - 1) {
                layers[k + 1] = layers[k] + if s.symbols[k] { 1 } else { -1 };
            }
            let mut cuts = vec![0i64; n];
            for p in 0..n {
                let par = (p as i64) % 2;
                if (layers[p] - par).rem_euclid(2) != 0 {
                    return Err(Error::Parse {
                        line: 0,
                        msg: "string walk breaks the layer parity".into(),
                    });
                }
                cuts[p] = (layers[p] - par) / 2;
            }
            return Ok(Frontier(cuts));
        }
        StringVariant::C(l) => {
            let mut layers = vec![0i64; l + 1];
            for k in 0..l {
                layers[k + 1] = layers[k] + if s.symbols[k] { 1 } else { -1 };
            }
            let cuts: Vec<i64> = (0..=l).map(|p| (layers[p] - (p as i64) % 2) / 2).collect();
            return Ok(Frontier(cuts));
        }
    };
    Ok(Frontier(
        (0..h.n()).map(|p| lo.0[p] + per_chain[p]).collect(),
    ))
}

/// The graded string action: decode, act on the ideal, re-encode.
pub fn string_act(
    variant: StringVariant,
    h: &PeriodicHeap,
    i: usize,
    t: i64,
    s: &SignString,
) -> Result<(i64, SignString)> {
    if i >= h.n() {
        return Err(Error::BadGenerator(i));
    }
    let rep = string_decode(variant, h, s)?;
    let f = shift(h, &rep, t);
    let g = apply_reflection(h, &f, i);
    let d = orbit_decompose(h, &g)?;
    let mut out = string_encode(variant, h, &d.rep)?;
    // the C phase symbol is transported with the ideal: it flips exactly
    // when the cut on the last chain moves
    if let StringVariant::C(l) = variant {
        let flipped = (g.0[l] - f.0[l]).rem_euclid(2) == 1;
        out.symbols[l] = s.symbols[l] != flipped;
    }
    Ok((d.height, out))
}
