//! Programmatic construction of the catalog heaps.
//!
//! Chain and zigzag heaps come from their order-isomorphism descriptions;
//! the spin and string heaps from their grid descriptions (columns holding
//! one chain each, element (x, k) covering (x-1, k-1) and (x+1, k-1)).
//! These builders are the reference constructions; the shipped motif files
//! are frozen snapshots of them (or of the full-heap search, for the types
//! with no textual description) and the two are tested against each other.

use super::{CoverPair, FiniteHeap, HeapElement, PeriodicHeap};
use crate::cartan::{CatalogTag, DynkinDiagram};
use crate::{Error, Result};

fn e(vertex: usize, index: i64) -> HeapElement {
    HeapElement::new(vertex, index)
}

fn build(
    tag: CatalogTag,
    periods: Vec<i64>,
    covers: Vec<CoverPair>,
    weights: Vec<(usize, i64, i64)>,
) -> Result<PeriodicHeap> {
    PeriodicHeap::new(DynkinDiagram::catalog(tag)?, periods, covers, weights)
}

/// The principal-ideal chain heap over the (l+1)-cycle: one element per
/// vertex per period, totally ordered 0 < 1 < ... < l < 0 < ...
pub fn a_chain(l: usize) -> Result<PeriodicHeap> {
    let mut covers = Vec::new();
    for p in 0..l {
        covers.push((e(p, 0), e(p + 1, 0)));
    }
    covers.push((e(l, 0), e(0, 1)));
    build(CatalogTag::A(l), vec![1; l + 1], covers, Vec::new())
}

/// The self-dual zigzag chain heap of type C: up the diagram then back.
pub fn c_chain(l: usize) -> Result<PeriodicHeap> {
    let mut covers = Vec::new();
    for p in 0..l {
        covers.push((e(p, 0), e(p + 1, 0)));
    }
    covers.push((e(l, 0), e(l - 1, 1)));
    for p in (2..l).rev() {
        covers.push((e(p, 1), e(p - 1, 1)));
    }
    if l >= 2 {
        covers.push((e(1, 1), e(0, 1)));
    }
    let mut periods = vec![2i64; l + 1];
    periods[0] = 1;
    periods[l] = 1;
    build(CatalogTag::C(l), periods, covers, Vec::new())
}

/// The twisted-A zigzag: like type C but with the bottom antichain
/// {0(y-1), 1(y)} under the forked end.
pub fn a2_chain(l: usize) -> Result<PeriodicHeap> {
    if l == 2 {
        let covers = vec![
            (e(0, -1), e(2, 0)),
            (e(1, 0), e(2, 0)),
            (e(2, 0), e(0, 0)),
            (e(2, 0), e(1, 1)),
        ];
        return build(CatalogTag::A2Twisted(2), vec![1, 1, 1], covers, Vec::new());
    }
    let mut covers = vec![(e(0, -1), e(2, 0)), (e(1, 0), e(2, 0))];
    for p in 2..l {
        covers.push((e(p, 0), e(p + 1, 0)));
    }
    covers.push((e(l, 0), e(l - 1, 1)));
    for p in (3..l).rev() {
        covers.push((e(p, 1), e(p - 1, 1)));
    }
    covers.push((e(2, 1), e(0, 0)));
    covers.push((e(2, 1), e(1, 1)));
    let mut periods = vec![2i64; l + 1];
    periods[0] = 1;
    periods[1] = 1;
    periods[l] = 1;
    build(CatalogTag::A2Twisted(l), periods, covers, Vec::new())
}

/// The type-D zigzag with antichains {0, 1} and {l-1, l} at the forks.
pub fn d_chain(l: usize) -> Result<PeriodicHeap> {
    let mut covers = vec![(e(0, -1), e(2, 0)), (e(1, 0), e(2, 0))];
    for p in 2..(l - 2) {
        covers.push((e(p, 0), e(p + 1, 0)));
    }
    covers.push((e(l - 2, 0), e(l - 1, 0)));
    covers.push((e(l - 2, 0), e(l, 0)));
    covers.push((e(l - 1, 0), e(l - 2, 1)));
    covers.push((e(l, 0), e(l - 2, 1)));
    for p in (3..(l - 1)).rev() {
        covers.push((e(p, 1), e(p - 1, 1)));
    }
    covers.push((e(2, 1), e(0, 0)));
    covers.push((e(2, 1), e(1, 1)));
    let mut periods = vec![2i64; l + 1];
    periods[0] = 1;
    periods[1] = 1;
    periods[l - 1] = 1;
    periods[l] = 1;
    build(CatalogTag::D(l), periods, covers, Vec::new())
}

/// The spin heap of type B: grid columns 0..l-1 where column 0 carries the
/// two period-one chains 0 and 1 in alternation and column p-1 carries
/// chain p.
pub fn b_spin(l: usize) -> Result<PeriodicHeap> {
    let mut covers = vec![
        (e(0, 0), e(2, 0)),
        (e(2, 0), e(1, 0)),
        (e(1, 0), e(2, 1)),
        (e(2, 1), e(0, 1)),
    ];
    for p in 2..l {
        for z in 0..2 {
            if p % 2 == 0 {
                covers.push((e(p + 1, z), e(p, z)));
                covers.push((e(p, z), e(p + 1, z + 1)));
            } else {
                covers.push((e(p, z), e(p + 1, z)));
                covers.push((e(p + 1, z), e(p, z + 1)));
            }
        }
    }
    let mut periods = vec![2i64; l + 1];
    periods[0] = 1;
    periods[1] = 1;
    build(CatalogTag::B(l), periods, covers, Vec::new())
}

/// Grid helper for the layered heaps: maps a column/layer pair to a chain
/// element, or `None` when the column holds no element in that layer.
type GridMap = dyn Fn(usize, i64) -> Option<HeapElement>;

fn layered_covers(
    columns: usize,
    layer_range: std::ops::Range<i64>,
    cyclic: bool,
    grid: &GridMap,
) -> Vec<CoverPair> {
    let mut covers = Vec::new();
    for x in 0..columns {
        for k in layer_range.clone() {
            let Some(parent) = grid(x, k) else { continue };
            let mut below = Vec::new();
            if cyclic {
                below.push((x + columns - 1) % columns);
                below.push((x + 1) % columns);
            } else {
                if x > 0 {
                    below.push(x - 1);
                }
                if x + 1 < columns {
                    below.push(x + 1);
                }
            }
            for bx in below {
                if let Some(child) = grid(bx, k - 1) {
                    covers.push((child, parent));
                }
            }
        }
    }
    covers
}

/// The spin heap of type D: like type B but with the paired chains l-1, l
/// sharing the last column, alternating with layer period four.
pub fn d_spin(l: usize) -> Result<PeriodicHeap> {
    let rl = ((l + 1) % 4) as i64;
    let rl1 = ((l + 3) % 4) as i64;
    let grid = move |x: usize, k: i64| -> Option<HeapElement> {
        if x == 0 {
            match k.rem_euclid(4) {
                1 => Some(e(0, (k - 1) / 4)),
                3 => Some(e(1, (k - 3) / 4)),
                _ => None,
            }
        } else if x <= l - 3 {
            let p = x + 1;
            if k.rem_euclid(2) == (p as i64) % 2 {
                Some(e(p, (k - (p as i64) % 2).div_euclid(2)))
            } else {
                None
            }
        } else if x == l - 2 {
            if k.rem_euclid(4) == rl {
                Some(e(l, (k - rl).div_euclid(4)))
            } else if k.rem_euclid(4) == rl1 {
                Some(e(l - 1, (k - rl1).div_euclid(4)))
            } else {
                None
            }
        } else {
            None
        }
    };
    let covers = layered_covers(l - 1, 0..9, false, &grid);
    let mut periods = vec![2i64; l + 1];
    periods[0] = 1;
    periods[1] = 1;
    periods[l - 1] = 1;
    periods[l] = 1;
    build(CatalogTag::D(l), periods, covers, Vec::new())
}

/// The string heap over the 2l-cycle: a brick wall on a cylinder, vertex p
/// present in layer k exactly when k and p agree in parity.
pub fn a_string(l: usize) -> Result<PeriodicHeap> {
    let n = 2 * l;
    let grid = move |x: usize, k: i64| -> Option<HeapElement> {
        if k.rem_euclid(2) == (x as i64) % 2 {
            Some(e(x, (k - (x as i64) % 2).div_euclid(2)))
        } else {
            None
        }
    };
    let covers = layered_covers(n, 0..5, true, &grid);
    build(CatalogTag::A(n - 1), vec![1; n], covers, Vec::new())
}

/// The brick-wall heap over the twisted-D path (type C strings).
pub fn c_string(l: usize) -> Result<PeriodicHeap> {
    let grid = move |x: usize, k: i64| -> Option<HeapElement> {
        if k.rem_euclid(2) == (x as i64) % 2 {
            Some(e(x, (k - (x as i64) % 2).div_euclid(2)))
        } else {
            None
        }
    };
    let covers = layered_covers(l + 1, 0..5, false, &grid);
    build(CatalogTag::D2Twisted(l), vec![1; l + 1], covers, Vec::new())
}

/// The full heap over the E6 diagram whose orbit table matches the
/// 27-line dictionary.
pub fn e6() -> Result<PeriodicHeap> {
    let covers = vec![
        (e(2, -1), e(1, 0)),
        (e(1, 0), e(2, 0)),
        (e(3, 0), e(2, 0)),
        (e(2, 0), e(3, 1)),
        (e(3, 2), e(2, 1)),
        (e(2, 1), e(3, 3)),
        (e(3, 0), e(4, 0)),
        (e(4, 0), e(3, 1)),
        (e(3, 1), e(4, 1)),
        (e(4, 1), e(3, 2)),
        (e(4, 0), e(5, 0)),
        (e(5, 0), e(4, 1)),
        (e(3, 1), e(6, 0)),
        (e(6, 0), e(3, 2)),
        (e(3, 2), e(6, 1)),
        (e(6, 1), e(3, 3)),
        (e(6, 0), e(0, 0)),
        (e(0, 0), e(6, 1)),
    ];
    build(
        CatalogTag::E6,
        vec![1, 1, 2, 3, 2, 1, 2],
        covers,
        Vec::new(),
    )
}

/// The period-five heap over the G2 diagram, with the odd elements of
/// chain 2 carrying character weight two.
pub fn g2() -> Result<PeriodicHeap> {
    let covers = vec![
        (e(1, -1), e(0, 0)),
        (e(0, 0), e(1, 0)),
        (e(1, 0), e(2, 0)),
        (e(1, 1), e(2, 1)),
        (e(2, 0), e(1, 1)),
        (e(2, 1), e(1, 2)),
    ];
    build(CatalogTag::G2Graph, vec![1, 2, 2], covers, vec![(2, 1, 2)])
}

/// The frozen twelve-ideal finite heap over the H3 path graph.
pub fn h3_heap() -> FiniteHeap {
    super::motif::load_finite(include_str!("../../motifs/h3.heap")).expect("frozen H3 motif parses")
}

/// Reference constructor for the catalog tags that have a textual
/// description; E7 only exists as a frozen search result.
pub fn construct(tag: super::MotifTag) -> Result<PeriodicHeap> {
    use super::MotifTag::*;
    match tag {
        AChain(l) if l >= 1 => a_chain(l),
        CChain(l) if l >= 2 => c_chain(l),
        A2Chain(l) if l >= 2 => a2_chain(l),
        DChain(l) if l >= 4 => d_chain(l),
        BSpin(l) if l >= 3 => b_spin(l),
        DSpin(l) if l >= 4 => d_spin(l),
        AString(l) if l >= 2 => a_string(l),
        CString(l) if l >= 2 => c_string(l),
        E6 => e6(),
        G2 => g2(),
        E7 => Err(Error::Unsupported(
            "the E7 heap is frozen from the full-heap search".into(),
        )),
        _ => Err(Error::Unsupported(format!("no constructor for {tag:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heap::ValidationLevel;

    #[test]
    fn constructed_heaps_are_full() {
        let heaps: Vec<(&str, PeriodicHeap)> = vec![
            ("a1", a_chain(1).unwrap()),
            ("a2", a_chain(2).unwrap()),
            ("a4", a_chain(4).unwrap()),
            ("c2", c_chain(2).unwrap()),
            ("c3", c_chain(3).unwrap()),
            ("a2tw2", a2_chain(2).unwrap()),
            ("a2tw3", a2_chain(3).unwrap()),
            ("a2tw4", a2_chain(4).unwrap()),
            ("d4", d_chain(4).unwrap()),
            ("d5", d_chain(5).unwrap()),
            ("b3", b_spin(3).unwrap()),
            ("b5", b_spin(5).unwrap()),
            ("dspin4", d_spin(4).unwrap()),
            ("dspin5", d_spin(5).unwrap()),
            ("dspin6", d_spin(6).unwrap()),
            ("astr2", a_string(2).unwrap()),
            ("astr4", a_string(4).unwrap()),
            ("cstr2", c_string(2).unwrap()),
            ("cstr4", c_string(4).unwrap()),
            ("e6", e6().unwrap()),
        ];
        for (name, h) in heaps {
            for level in [
                ValidationLevel::Labelled,
                ValidationLevel::Fibred,
                ValidationLevel::Full,
            ] {
                let rep = h.validate(level);
                assert!(rep.passed(), "{name} fails {level}: {:?}", rep.violations);
            }
            // period equals the null root for the full heaps
            let delta = h.diagram().null_root().unwrap();
            if !h.has_weights() {
                assert_eq!(&delta.0, h.periods(), "{name} period is not the null root");
            }
        }
    }

    #[test]
    fn g2_heap_is_consistent() {
        let h = g2().unwrap();
        assert!(h.validate(ValidationLevel::Labelled).passed());
        assert!(h.validate(ValidationLevel::Fibred).passed());
        // weighted period matches the G2 marks (1, 2, 3)
        let marks: Vec<i64> = (0..3)
            .map(|p| {
                (0..h.t(p))
                    .map(|z| h.weight(HeapElement::new(p, z)))
                    .sum::<i64>()
            })
            .collect();
        assert_eq!(marks, vec![1, 2, 3]);
    }

    #[test]
    fn chain_heaps_are_self_dual_where_stated() {
        for h in [
            c_chain(2).unwrap(),
            c_chain(3).unwrap(),
            a2_chain(3).unwrap(),
            d_chain(4).unwrap(),
            b_spin(4).unwrap(),
        ] {
            assert!(h.dual().isomorphic(&h).is_some());
        }
        // the E6 heap is not self-dual
        let h = e6().unwrap();
        assert!(h.dual().isomorphic(&h).is_none());
    }
}
