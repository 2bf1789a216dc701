//! Order isomorphisms from the (refined) ideal lattices of the chain and
//! zigzag heaps onto the integers, and the induced permutation tables.
//!
//! The two-generator ideals of the twisted-A and D lattices are fitted
//! into the total order by the standard refinements (the ideal generated
//! by the lower fork element precedes the one generated by the upper).

use crate::heap::{catalog_heap, HeapElement, MotifTag, PeriodicHeap};
use crate::lattice::{apply_reflection, Frontier};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaKind {
    /// The cycle heap: every proper ideal principal.
    AChain,
    /// The type-C zigzag: every proper ideal principal.
    CChain,
    /// Twisted A: the extra ideals generated by {0(y-1), 1(y)}.
    A2Chain,
    /// Type D: extra ideals at both forks.
    DChain,
}

/// A heap together with its integer realization.
pub struct ZRealization {
    kind: ZetaKind,
    l: usize,
    heap: PeriodicHeap,
}

impl ZRealization {
    pub fn new(kind: ZetaKind, l: usize) -> Result<ZRealization> {
        let tag = match kind {
            ZetaKind::AChain => MotifTag::AChain(l),
            ZetaKind::CChain => MotifTag::CChain(l),
            ZetaKind::A2Chain => MotifTag::A2Chain(l),
            ZetaKind::DChain => MotifTag::DChain(l),
        };
        Ok(ZRealization {
            kind,
            l,
            heap: catalog_heap(tag)?,
        })
    }

    pub fn heap(&self) -> &PeriodicHeap {
        &self.heap
    }

    /// The maximal elements of an ideal, in vertex order.
    fn generators_of(&self, f: &Frontier) -> Vec<HeapElement> {
        (0..self.heap.n())
            .map(|p| f.top(p))
            .filter(|&e| {
                self.heap
                    .upper_covers(e)
                    .into_iter()
                    .all(|u| u.index > f.0[u.vertex])
            })
            .collect()
    }

    /// The integer coordinate of an ideal.
    pub fn zeta(&self, f: &Frontier) -> Result<i64> {
        let l = self.l as i64;
        let gens = self.generators_of(f);
        match self.kind {
            ZetaKind::AChain => {
                let [e] = gens[..] else {
                    return Err(Error::Unsupported("non-principal ideal".into()));
                };
                Ok((l + 1) * e.index + e.vertex as i64 + 1)
            }
            ZetaKind::CChain => {
                let [e] = gens[..] else {
                    return Err(Error::Unsupported("non-principal ideal".into()));
                };
                let (p, y) = (e.vertex as i64, e.index);
                Ok(if p == 0 {
                    2 * l * y + 1
                } else if p == l {
                    2 * l * y + l + 1
                } else if y.rem_euclid(2) == 0 {
                    l * y + p + 1
                } else {
                    l * (y + 1) - p + 1
                })
            }
            ZetaKind::A2Chain => match gens[..] {
                [e] => {
                    let (p, y) = (e.vertex as i64, e.index);
                    Ok(if p == 0 {
                        2 * l * (y + 1)
                    } else if p == 1 {
                        2 * l * y + 1
                    } else if p == l {
                        2 * l * y + l + 1
                    } else if y.rem_euclid(2) == 0 {
                        l * y + p + 1
                    } else {
                        l * (y + 1) - p + 1
                    })
                }
                [a, b] if a.vertex == 0 && b.vertex == 1 && b.index == a.index + 1 => {
                    Ok(2 * l * b.index + 2)
                }
                _ => Err(Error::Unsupported(format!(
                    "unrecognized ideal shape {:?}",
                    gens
                ))),
            },
            ZetaKind::DChain => match gens[..] {
                [e] => {
                    let (p, y) = (e.vertex as i64, e.index);
                    Ok(if p == 0 {
                        2 * l * (y + 1)
                    } else if p == 1 {
                        2 * l * y + 1
                    } else if p == l - 1 || p == l {
                        2 * l * y + p + 1
                    } else if y.rem_euclid(2) == 0 {
                        l * y + p + 1
                    } else {
                        l * (y + 1) - p + 1
                    })
                }
                [a, b] if a.vertex == 0 && b.vertex == 1 && b.index == a.index + 1 => {
                    Ok(2 * l * b.index + 2)
                }
                [a, b] if a.vertex == self.l - 1 && b.vertex == self.l && a.index == b.index => {
                    Ok(2 * l * a.index + l + 2)
                }
                _ => Err(Error::Unsupported(format!(
                    "unrecognized ideal shape {:?}",
                    gens
                ))),
            },
        }
    }

    /// The ideal with the given integer coordinate.
    pub fn zeta_inv(&self, z: i64) -> Frontier {
        let l = self.l as i64;
        let pf = |e: HeapElement| self.heap.principal_frontier(e);
        let join = |a: HeapElement, b: HeapElement| {
            let (fa, fb) = (pf(a), pf(b));
            Frontier(fa.0.iter().zip(&fb.0).map(|(&x, &y)| x.max(y)).collect())
        };
        match self.kind {
            ZetaKind::AChain => {
                let y = (z - 1).div_euclid(l + 1);
                let p = (z - 1).rem_euclid(l + 1);
                pf(HeapElement::new(p as usize, y))
            }
            ZetaKind::CChain => {
                let y2 = (z - 1).div_euclid(2 * l);
                let r = (z - 1).rem_euclid(2 * l);
                if r == 0 {
                    pf(HeapElement::new(0, y2))
                } else if r == l {
                    pf(HeapElement::new(self.l, y2))
                } else if r < l {
                    pf(HeapElement::new(r as usize, 2 * y2))
                } else {
                    pf(HeapElement::new((2 * l - r) as usize, 2 * y2 + 1))
                }
            }
            ZetaKind::A2Chain => {
                let y = (z - 1).div_euclid(2 * l);
                let r = (z - 1).rem_euclid(2 * l);
                if r == 0 {
                    pf(HeapElement::new(1, y))
                } else if r == 1 {
                    join(HeapElement::new(0, y - 1), HeapElement::new(1, y))
                } else if r == l {
                    pf(HeapElement::new(self.l, y))
                } else if r == 2 * l - 1 {
                    pf(HeapElement::new(0, y))
                } else if r < l {
                    pf(HeapElement::new(r as usize, 2 * y))
                } else {
                    pf(HeapElement::new((2 * l - r) as usize, 2 * y + 1))
                }
            }
            ZetaKind::DChain => {
                let y = (z - 1).div_euclid(2 * l);
                let r = (z - 1).rem_euclid(2 * l);
                if r == 0 {
                    pf(HeapElement::new(1, y))
                } else if r == 1 {
                    join(HeapElement::new(0, y - 1), HeapElement::new(1, y))
                } else if r == l - 1 || r == l {
                    pf(HeapElement::new(r as usize, y))
                } else if r == l + 1 {
                    join(HeapElement::new(self.l - 1, y), HeapElement::new(self.l, y))
                } else if r == 2 * l - 1 {
                    pf(HeapElement::new(0, y))
                } else if r < l - 1 {
                    pf(HeapElement::new(r as usize, 2 * y))
                } else {
                    pf(HeapElement::new((2 * l - r) as usize, 2 * y + 1))
                }
            }
        }
    }

    /// The action of generator i transported to the integers by zeta.
    pub fn act_z(&self, i: usize, z: i64) -> Result<i64> {
        self.zeta(&apply_reflection(&self.heap, &self.zeta_inv(z), i))
    }

    /// Rows (z, s_i(z)) for z in the given range.
    pub fn perm_table(&self, i: usize, zlo: i64, zhi: i64) -> Result<Vec<(i64, i64)>> {
        (zlo..=zhi).map(|z| Ok((z, self.act_z(i, z)?))).collect()
    }

    /// The printed congruence formula for the action of s_i on the
    /// integers, used as the independent route in the table checks.
    pub fn closed_form(&self, i: usize, z: i64) -> i64 {
        let l = self.l as i64;
        let j = i as i64;
        let md = |a: i64, m: i64| a.rem_euclid(m);
        let congr = |z: i64, a: i64, m: i64| md(z - a, m) == 0;
        match self.kind {
            ZetaKind::AChain => {
                let m = l + 1;
                if congr(z, j, m) {
                    z + 1
                } else if congr(z, j + 1, m) {
                    z - 1
                } else {
                    z
                }
            }
            ZetaKind::CChain => {
                let m = 2 * l;
                if congr(z, j, m) || congr(z, -j, m) {
                    z + 1
                } else if congr(z, j + 1, m) || congr(z, -j + 1, m) {
                    z - 1
                } else {
                    z
                }
            }
            ZetaKind::A2Chain => {
                let m = 2 * l;
                if j == 0 {
                    if congr(z, 1, m) || congr(z, -1, m) {
                        z + 1
                    } else if congr(z, 0, m) || congr(z, 2, m) {
                        z - 1
                    } else {
                        z
                    }
                } else if j == 1 {
                    if congr(z, -1, m) || congr(z, 0, m) {
                        z + 2
                    } else if congr(z, 1, m) || congr(z, 2, m) {
                        z - 2
                    } else {
                        z
                    }
                } else if congr(z, j, m) || congr(z, -j, m) {
                    z + 1
                } else if congr(z, j + 1, m) || congr(z, -j + 1, m) {
                    z - 1
                } else {
                    z
                }
            }
            ZetaKind::DChain => {
                let m = 2 * l;
                let c = |j: i64| -> i64 {
                    if j == 0 || j == 1 {
                        0
                    } else {
                        1
                    }
                };
                if j == 0 || j == l - 1 {
                    let cj = c(j);
                    if congr(z, j - 1 + cj, m) || congr(z, j + 1 + cj, m) {
                        z + 1
                    } else if congr(z, j + cj, m) || congr(z, j + 2 + cj, m) {
                        z - 1
                    } else {
                        z
                    }
                } else if j == 1 || j == l {
                    let cj = c(j);
                    if congr(z, j - 2 + cj, m) || congr(z, j - 1 + cj, m) {
                        z + 2
                    } else if congr(z, j + cj, m) || congr(z, j + 1 + cj, m) {
                        z - 2
                    } else {
                        z
                    }
                } else if congr(z, j, m) || congr(z, -j, m) {
                    z + 1
                } else if congr(z, j + 1, m) || congr(z, -j + 1, m) {
                    z - 1
                } else {
                    z
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_chain_zeta_basics() {
        let zr = ZRealization::new(ZetaKind::AChain, 2).unwrap();
        // <0(0)> -> 1
        let f = zr.heap().principal_frontier(HeapElement::new(0, 0));
        assert_eq!(zr.zeta(&f).unwrap(), 1);
        for z in -20..=20 {
            assert_eq!(zr.zeta(&zr.zeta_inv(z)).unwrap(), z);
        }
        // s_1: 1 -> 2, 2 -> 1, 3 -> 3
        assert_eq!(zr.act_z(1, 1).unwrap(), 2);
        assert_eq!(zr.act_z(1, 2).unwrap(), 1);
        assert_eq!(zr.act_z(1, 3).unwrap(), 3);
    }

    #[test]
    fn c_chain_endpoints() {
        let zr = ZRealization::new(ZetaKind::CChain, 3).unwrap();
        let f = zr.heap().principal_frontier(HeapElement::new(3, 2));
        // zeta(<l(y)>) = 2ly + l + 1
        assert_eq!(zr.zeta(&f).unwrap(), 2 * 3 * 2 + 3 + 1);
        for z in -20..=20 {
            assert_eq!(zr.zeta(&zr.zeta_inv(z)).unwrap(), z);
        }
    }

    #[test]
    fn tables_match_closed_forms_in_the_small() {
        for (kind, l) in [
            (ZetaKind::AChain, 1),
            (ZetaKind::AChain, 3),
            (ZetaKind::CChain, 2),
            (ZetaKind::A2Chain, 2),
            (ZetaKind::A2Chain, 3),
            (ZetaKind::DChain, 4),
        ] {
            let zr = ZRealization::new(kind, l).unwrap();
            for i in 0..zr.heap().n() {
                for (z, img) in zr.perm_table(i, -15, 15).unwrap() {
                    assert_eq!(img, zr.closed_form(i, z), "{kind:?} l={l} s_{i} at z={z}");
                    // involution row by row
                    assert_eq!(zr.act_z(i, img).unwrap(), z);
                }
            }
        }
    }
}
