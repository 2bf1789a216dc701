//! The line-oriented motif file format and the frozen heap catalog.
//!
//! ```text
//! heap-motif 1
//! # provenance: ...
//! catalog B 5
//! period 0 1
//! cover 0 0 < 2 0
//! weight 2 1 2
//! ```
//!
//! `cover p z < q w` declares the covering pair `p(z) < q(w)`; the full
//! covering set is the closure under simultaneous period shifts.  The
//! optional `weight p z w` line assigns character weight `w` to the
//! elements of chain `p` with index congruent to `z`.  Finite heaps use
//! the `heap-finite 1` header and explicit `element p z` lines.

use super::{FiniteHeap, HeapElement, PeriodicHeap};
use crate::cartan::{parse_diagram, CatalogTag, DynkinDiagram};
use crate::{Error, Result};
use std::fmt::Write as _;

/// Catalog identifiers for the frozen full heaps.  A diagram can carry
/// several inequivalent full heaps (the cycle carries both the principal
/// chain and the string brick wall), so the motif catalog is finer than
/// the diagram catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MotifTag {
    AChain(usize),
    CChain(usize),
    A2Chain(usize),
    DChain(usize),
    BSpin(usize),
    DSpin(usize),
    AString(usize),
    CString(usize),
    E6,
    E7,
    G2,
}

impl MotifTag {
    pub fn parse(tag: &str, rank: usize) -> Result<MotifTag> {
        let t = tag.to_ascii_uppercase();
        Ok(match t.as_str() {
            "A" => MotifTag::AChain(rank),
            "C" => MotifTag::CChain(rank),
            "A2" | "A2TW" => MotifTag::A2Chain(rank),
            "D" => MotifTag::DChain(rank),
            "B" => MotifTag::BSpin(rank),
            "DSPIN" => MotifTag::DSpin(rank),
            "ASTR" => MotifTag::AString(rank),
            "CSTR" => MotifTag::CString(rank),
            "E6" => MotifTag::E6,
            "E7" => MotifTag::E7,
            "G2" => MotifTag::G2,
            _ => return Err(Error::UnknownTag(tag.to_string())),
        })
    }

    pub fn name(&self) -> String {
        match self {
            MotifTag::AChain(l) => format!("a_{l}"),
            MotifTag::CChain(l) => format!("c_{l}"),
            MotifTag::A2Chain(l) => format!("a2tw_{l}"),
            MotifTag::DChain(l) => format!("d_{l}"),
            MotifTag::BSpin(l) => format!("bspin_{l}"),
            MotifTag::DSpin(l) => format!("dspin_{l}"),
            MotifTag::AString(l) => format!("astr_{l}"),
            MotifTag::CString(l) => format!("cstr_{l}"),
            MotifTag::E6 => "e6".into(),
            MotifTag::E7 => "e7".into(),
            MotifTag::G2 => "g2".into(),
        }
    }
}

macro_rules! frozen {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../motifs/", $name, ".heap")))),*]
    };
}

/// The frozen motif files shipped with the crate.
pub const FROZEN_MOTIFS: &[(&str, &str)] = frozen![
    "a_1", "a_2", "a_3", "a_4", "c_2", "c_3", "c_4", "a2tw_2", "a2tw_3", "a2tw_4", "d_4", "d_5",
    "bspin_3", "bspin_4", "bspin_5", "dspin_4", "dspin_5", "dspin_6", "astr_2", "astr_3", "astr_4",
    "cstr_2", "cstr_3", "cstr_4", "e6", "e7", "g2",
];

/// Loads a catalog heap.  The catalog ranks ship as frozen motif files;
/// higher ranks of the parameterised families fall back to the reference
/// constructors (the two agree wherever both exist, which is tested).
pub fn catalog_heap(tag: MotifTag) -> Result<PeriodicHeap> {
    let name = tag.name();
    if let Some((_, text)) = FROZEN_MOTIFS.iter().find(|&&(n, _)| n == name) {
        return load_motif(text);
    }
    super::construct::construct(tag)
}

/// Parses the `heap-motif 1` format.
pub fn load_motif(text: &str) -> Result<PeriodicHeap> {
    let lines: Vec<&str> = text.lines().collect();
    let mut diagram: Option<DynkinDiagram> = None;
    let mut periods: Vec<(usize, i64)> = Vec::new();
    let mut covers = Vec::new();
    let mut weights = Vec::new();
    let mut provenance = Vec::new();
    let mut saw_header = false;
    let mut idx = 0;
    while idx < lines.len() {
        let ln = idx + 1;
        let line = lines[idx].trim();
        idx += 1;
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(p) = rest.trim().strip_prefix("provenance:") {
                provenance.push(p.trim().to_string());
            }
            continue;
        }
        let mut it = line.split_whitespace();
        let head = it.next().unwrap();
        let parse_i64 = |tok: Option<&str>, what: &str| -> Result<i64> {
            tok.ok_or(Error::Parse {
                line: ln,
                msg: format!("missing {what}"),
            })?
            .parse()
            .map_err(|_| Error::Parse {
                line: ln,
                msg: format!("bad {what}"),
            })
        };
        match head {
            "heap-motif" => {
                let v = parse_i64(it.next(), "version")?;
                if v != 1 {
                    return Err(Error::Parse {
                        line: ln,
                        msg: format!("unknown version {v}"),
                    });
                }
                saw_header = true;
            }
            "catalog" => {
                diagram = Some(parse_diagram(line)?);
            }
            "diagram" => {
                let n = parse_i64(it.next(), "size")? as usize;
                let mut block = vec![line];
                while block.len() <= n && idx < lines.len() {
                    let row = lines[idx].trim();
                    idx += 1;
                    if row.is_empty() || row.starts_with('#') {
                        continue;
                    }
                    block.push(row);
                }
                diagram = Some(parse_diagram(&block.join("\n"))?);
            }
            "period" => {
                let p = parse_i64(it.next(), "vertex")? as usize;
                let t = parse_i64(it.next(), "period")?;
                periods.push((p, t));
            }
            "cover" => {
                let p = parse_i64(it.next(), "child vertex")? as usize;
                let z = parse_i64(it.next(), "child index")?;
                if it.next() != Some("<") {
                    return Err(Error::Parse {
                        line: ln,
                        msg: "expected `<`".into(),
                    });
                }
                let q = parse_i64(it.next(), "parent vertex")? as usize;
                let w = parse_i64(it.next(), "parent index")?;
                covers.push((HeapElement::new(p, z), HeapElement::new(q, w)));
            }
            "weight" => {
                let p = parse_i64(it.next(), "vertex")? as usize;
                let z = parse_i64(it.next(), "index")?;
                let w = parse_i64(it.next(), "weight")?;
                weights.push((p, z, w));
            }
            other => {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    if !saw_header {
        return Err(Error::Parse {
            line: 1,
            msg: "missing `heap-motif 1` header".into(),
        });
    }
    let diagram = diagram.ok_or(Error::Parse {
        line: 1,
        msg: "missing `catalog` or `diagram` line".into(),
    })?;
    let n = diagram.n();
    let mut t = vec![0i64; n];
    for (p, tp) in periods {
        if p >= n {
            return Err(Error::BadMotif(format!(
                "period line for unknown vertex {p}"
            )));
        }
        t[p] = tp;
    }
    if let Some(p) = t.iter().position(|&x| x == 0) {
        return Err(Error::BadMotif(format!("vertex {p} has no elements")));
    }
    let mut heap = PeriodicHeap::new(diagram, t, covers, weights)?;
    heap.set_provenance(provenance);
    Ok(heap)
}

/// Parses the `heap-finite 1` format: explicit elements and covers.
pub fn load_finite(text: &str) -> Result<FiniteHeap> {
    let mut diagram: Option<DynkinDiagram> = None;
    let mut elements = Vec::new();
    let mut covers = Vec::new();
    for (ln0, raw) in text.lines().enumerate() {
        let ln = ln0 + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let geti = |k: usize, what: &str| -> Result<i64> {
            toks.get(k)
                .ok_or(Error::Parse {
                    line: ln,
                    msg: format!("missing {what}"),
                })?
                .parse()
                .map_err(|_| Error::Parse {
                    line: ln,
                    msg: format!("bad {what}"),
                })
        };
        match toks[0] {
            "heap-finite" => {
                geti(1, "version")?;
            }
            "catalog" => diagram = Some(parse_diagram(line)?),
            "element" => {
                let p = geti(1, "vertex")? as usize;
                let z = geti(2, "index")?;
                elements.push(HeapElement::new(p, z));
            }
            "cover" => {
                if toks.get(3) != Some(&"<") {
                    return Err(Error::Parse {
                        line: ln,
                        msg: "expected `<`".into(),
                    });
                }
                let p = geti(1, "child vertex")? as usize;
                let z = geti(2, "child index")?;
                let q = geti(4, "parent vertex")? as usize;
                let w = geti(5, "parent index")?;
                covers.push((HeapElement::new(p, z), HeapElement::new(q, w)));
            }
            other => {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    let diagram = diagram.ok_or(Error::Parse {
        line: 1,
        msg: "missing `catalog` line".into(),
    })?;
    FiniteHeap::new(diagram, elements, covers)
}

/// Serializes a periodic heap in the motif format.
pub fn motif_text(h: &PeriodicHeap, provenance: &[String]) -> String {
    let mut s = String::from("heap-motif 1\n");
    for p in provenance {
        let _ = writeln!(s, "# provenance: {p}");
    }
    match h.diagram().tag() {
        Some(tag) => {
            let (name, rank) = catalog_line(tag);
            let _ = writeln!(s, "catalog {name} {rank}");
        }
        None => {
            let n = h.n();
            let _ = writeln!(s, "diagram {n}");
            for i in 0..n {
                let row: Vec<String> = (0..n)
                    .map(|j| h.diagram().matrix().entry(i, j).to_string())
                    .collect();
                let _ = writeln!(s, "{}", row.join(" "));
            }
        }
    }
    for p in 0..h.n() {
        let _ = writeln!(s, "period {p} {}", h.t(p));
    }
    for &(c, par) in h.generators() {
        let _ = writeln!(
            s,
            "cover {} {} < {} {}",
            c.vertex, c.index, par.vertex, par.index
        );
    }
    for &(v, z, w) in h.weights() {
        let _ = writeln!(s, "weight {v} {z} {w}");
    }
    s
}

fn catalog_line(tag: CatalogTag) -> (&'static str, usize) {
    match tag {
        CatalogTag::A(l) => ("A", l),
        CatalogTag::B(l) => ("B", l),
        CatalogTag::C(l) => ("C", l),
        CatalogTag::D(l) => ("D", l),
        CatalogTag::A2Twisted(l) => ("A2", l),
        CatalogTag::D2Twisted(l) => ("D2", l),
        CatalogTag::E6 => ("E6", 6),
        CatalogTag::E7 => ("E7", 7),
        CatalogTag::G2Graph => ("G2", 2),
        CatalogTag::H3Graph => ("H3", 3),
    }
}
