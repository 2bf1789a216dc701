//! Proper ideals of a periodic heap as frontier (cut) vectors, and the
//! distributive-lattice operators on them.
//!
//! A proper ideal intersects every chain in a nonempty proper down-set, so
//! it is exactly a vector of cut indices, one per vertex, satisfying the
//! down-closure condition near the cut.  Meet and join are pointwise
//! min/max, the period shift is a vector add, and the character of a pair
//! of ideals is a (weighted) coordinate difference.

use crate::cartan::{classify_root, RootClass, RootVector};
use crate::heap::{FiniteHeap, HeapElement, PeriodicHeap};
use crate::weyl::WeylWord;
use crate::{Error, Result};
use std::fmt;

/// Cut vector: entry p is the index of the top element of the ideal on
/// chain p.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frontier(pub Vec<i64>);

impl Frontier {
    pub fn top(&self, p: usize) -> HeapElement {
        HeapElement::new(p, self.0[p])
    }
}

impl fmt::Display for Frontier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// An ideal in graded form: its height and the height-zero representative
/// of its shift orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdeal {
    pub height: i64,
    pub rep: Frontier,
}

/// Down-closure check for a cut vector, verified on every generating
/// covering pair at the shift closest to the cut.
pub fn is_ideal(h: &PeriodicHeap, f: &Frontier) -> bool {
    if f.0.len() != h.n() {
        return false;
    }
    h.generators().iter().all(|&(c, p)| {
        let m = (f.0[p.vertex] - p.index).div_euclid(h.t(p.vertex));
        c.index + m * h.t(c.vertex) <= f.0[c.vertex]
    })
}

/// Pointwise (meet, join); both are ideals when the inputs are.
pub fn meet_join(f: &Frontier, g: &Frontier) -> (Frontier, Frontier) {
    let meet = Frontier(f.0.iter().zip(&g.0).map(|(&a, &b)| a.min(b)).collect());
    let join = Frontier(f.0.iter().zip(&g.0).map(|(&a, &b)| a.max(b)).collect());
    (meet, join)
}

/// The top element of chain p is removable: nothing in the ideal lies
/// above it.
pub fn removable(h: &PeriodicHeap, f: &Frontier, p: usize) -> bool {
    h.upper_covers(f.top(p))
        .into_iter()
        .all(|u| u.index > f.0[u.vertex])
}

/// The next element of chain p can be added: everything below it is
/// already in the ideal.
pub fn addable(h: &PeriodicHeap, f: &Frontier, p: usize) -> bool {
    let next = HeapElement::new(p, f.0[p] + 1);
    h.lower_covers(next)
        .into_iter()
        .all(|d| d.index <= f.0[d.vertex])
}

/// Eigenvalue of the diagonal operator at vertex p: +1 when the top is
/// removable (and the next not addable), -1 in the mirror case, else 0.
pub fn h_eigen(h: &PeriodicHeap, f: &Frontier, p: usize) -> i64 {
    (removable(h, f, p) as i64) - (addable(h, f, p) as i64)
}

/// Raising operator: adds the next chain-p element when the result is an
/// ideal.  `None` is the defined zero action, not an error.
pub fn apply_raise(h: &PeriodicHeap, f: &Frontier, p: usize) -> Option<Frontier> {
    if addable(h, f, p) {
        let mut g = f.clone();
        g.0[p] += 1;
        Some(g)
    } else {
        None
    }
}

/// Lowering operator: removes the top chain-p element when the remainder
/// is an ideal.
pub fn apply_lower(h: &PeriodicHeap, f: &Frontier, p: usize) -> Option<Frontier> {
    if removable(h, f, p) {
        let mut g = f.clone();
        g.0[p] -= 1;
        Some(g)
    } else {
        None
    }
}

/// The reflection operator: lower when the eigenvalue is +1, raise when
/// -1, identity when 0.  Always returns an ideal; an involution.
pub fn apply_reflection(h: &PeriodicHeap, f: &Frontier, p: usize) -> Frontier {
    match h_eigen(h, f, p) {
        1 => apply_lower(h, f, p).expect("eigenvalue +1 implies removable"),
        -1 => apply_raise(h, f, p).expect("eigenvalue -1 implies addable"),
        _ => f.clone(),
    }
}

/// Weighted element count of chain p between two cuts (exclusive lower,
/// inclusive upper bound), with the heap's character weights.
fn weighted_span(h: &PeriodicHeap, p: usize, lo: i64, hi: i64) -> i64 {
    if !h.has_weights() {
        return hi - lo;
    }
    use std::cmp::Ordering;
    match hi.cmp(&lo) {
        Ordering::Equal => 0,
        Ordering::Greater => ((lo + 1)..=hi)
            .map(|w| h.weight(HeapElement::new(p, w)))
            .sum(),
        Ordering::Less => -((hi + 1)..=lo)
            .map(|w| h.weight(HeapElement::new(p, w)))
            .sum::<i64>(),
    }
}

/// The character of an ordered pair of ideals: the signed, weighted count
/// of elements separating the two cuts on each chain.
pub fn character(h: &PeriodicHeap, f: &Frontier, g: &Frontier) -> RootVector {
    RootVector(
        (0..h.n())
            .map(|p| weighted_span(h, p, f.0[p], g.0[p]))
            .collect(),
    )
}

/// Two ideals are skew when their character is a real root.
pub fn is_skew(h: &PeriodicHeap, f: &Frontier, g: &Frontier) -> Result<bool> {
    Ok(classify_root(h.diagram(), &character(h, f, g))?.is_real())
}

/// Whether the pair's character is an integer multiple of the null root
/// (the same-orbit case of the intersection rule).
pub fn orbit_character_class(h: &PeriodicHeap, f: &Frontier, g: &Frontier) -> Result<RootClass> {
    classify_root(h.diagram(), &character(h, f, g))
}

/// Height: the cut index on the distinguished chain 0.
pub fn height(f: &Frontier) -> i64 {
    f.0[0]
}

/// The period automorphism applied k times.
pub fn shift(h: &PeriodicHeap, f: &Frontier, k: i64) -> Frontier {
    Frontier((0..h.n()).map(|p| f.0[p] + k * h.t(p)).collect())
}

/// Splits an ideal into its height and height-zero orbit representative.
/// Requires the distinguished chain to have period one, which makes the
/// height-zero ideals a fundamental domain for the shift.
pub fn orbit_decompose(h: &PeriodicHeap, f: &Frontier) -> Result<GradedIdeal> {
    if h.t(0) != 1 {
        return Err(Error::BasePeriod(h.t(0)));
    }
    let t = height(f);
    Ok(GradedIdeal {
        height: t,
        rep: shift(h, f, -t),
    })
}

/// The convex subheap strictly between the shadow of 0(0) and the shadow
/// of 0(1), whose ideals biject with the height-zero ideals.
pub fn e0_subheap(h: &PeriodicHeap) -> FiniteHeap {
    let lo = h.principal_frontier(HeapElement::new(0, 0));
    let hi = h.principal_filter_min(HeapElement::new(0, 1));
    let mut elements = Vec::new();
    for p in 0..h.n() {
        for z in (lo.0[p] + 1)..hi[p] {
            elements.push(HeapElement::new(p, z));
        }
    }
    h.induced_finite(elements)
}

/// Elements of a height-zero ideal outside the principal ideal of 0(0):
/// an ideal of the E0 subheap.
pub fn restrict_to_e0(h: &PeriodicHeap, f: &Frontier) -> Result<Vec<HeapElement>> {
    if height(f) != 0 {
        return Err(Error::NotHeightZero(height(f)));
    }
    let lo = h.principal_frontier(HeapElement::new(0, 0));
    let mut out = Vec::new();
    for p in 0..h.n() {
        for z in (lo.0[p] + 1)..=f.0[p] {
            out.push(HeapElement::new(p, z));
        }
    }
    Ok(out)
}

/// Inverse of `restrict_to_e0`, given per-chain element counts of the E0
/// ideal.
pub fn extend_from_e0(h: &PeriodicHeap, counts: &[i64]) -> Frontier {
    let lo = h.principal_frontier(HeapElement::new(0, 0));
    Frontier((0..h.n()).map(|p| lo.0[p] + counts[p]).collect())
}

/// All ideals of height t, enumerated through the E0 subheap, in
/// lexicographic cut order.
pub fn enumerate_height(h: &PeriodicHeap, t: i64) -> Vec<Frontier> {
    let e0 = e0_subheap(h);
    let mut out = Vec::new();
    for mask in e0.ideals() {
        let mut counts = vec![0i64; h.n()];
        for (i, e) in e0.elements().iter().enumerate() {
            if mask & (1 << i) != 0 {
                counts[e.vertex] += 1;
            }
        }
        out.push(shift(h, &extend_from_e0(h, &counts), t));
    }
    out.sort();
    out.dedup();
    out
}

/// The complement of an ideal, read as an ideal of the dual heap (whose
/// chain indices are negated).
pub fn dual_ideal(h: &PeriodicHeap, f: &Frontier) -> Frontier {
    Frontier((0..h.n()).map(|p| -f.0[p] - 1).collect())
}

/// A word connecting two ideals: lower the first to the meet, then raise
/// to the second.  Every letter's chain separates the two ideals.
pub fn connect_word(h: &PeriodicHeap, f: &Frontier, g: &Frontier) -> WeylWord {
    let (meet, _) = meet_join(f, g);
    let mut letters = Vec::new();
    let mut cur = f.clone();
    while cur != meet {
        let p = (0..h.n())
            .find(|&p| cur.0[p] > meet.0[p] && removable(h, &cur, p))
            .expect("a maximal element of the difference is removable");
        cur.0[p] -= 1;
        letters.push(p);
    }
    while cur != *g {
        let p = (0..h.n())
            .find(|&p| cur.0[p] < g.0[p] && addable(h, &cur, p))
            .expect("a minimal element of the difference is addable");
        cur.0[p] += 1;
        letters.push(p);
    }
    WeylWord(letters)
}

/// Parses the generated-ideal literal `p(z),p(z),...`: the union of the
/// principal ideals of the listed elements.
pub fn parse_ideal(h: &PeriodicHeap, text: &str) -> Result<Frontier> {
    let mut gens = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let open = part.find('(').ok_or(Error::Parse {
            line: 0,
            msg: format!("bad element literal `{part}`"),
        })?;
        if !part.ends_with(')') {
            return Err(Error::Parse {
                line: 0,
                msg: format!("bad element literal `{part}`"),
            });
        }
        let p: usize = part[..open].parse().map_err(|_| Error::Parse {
            line: 0,
            msg: format!("bad vertex in `{part}`"),
        })?;
        let z: i64 = part[open + 1..part.len() - 1]
            .parse()
            .map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad index in `{part}`"),
            })?;
        if p >= h.n() {
            return Err(Error::BadGenerator(p));
        }
        gens.push(HeapElement::new(p, z));
    }
    if gens.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "empty ideal literal".into(),
        });
    }
    let mut cut = h.principal_frontier(gens[0]);
    for &e in &gens[1..] {
        let pf = h.principal_frontier(e);
        for p in 0..h.n() {
            cut.0[p] = cut.0[p].max(pf.0[p]);
        }
    }
    Ok(cut)
}

/// The minimal generating antichain of an ideal: its maximal elements,
/// formatted as an ideal literal.
pub fn ideal_literal(h: &PeriodicHeap, f: &Frontier) -> String {
    let maximal: Vec<HeapElement> = (0..h.n())
        .map(|p| f.top(p))
        .filter(|&e| {
            h.upper_covers(e)
                .into_iter()
                .all(|u| u.index > f.0[u.vertex])
        })
        .collect();
    maximal
        .iter()
        .map(|e| format!("{}({})", e.vertex, e.index))
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heap::{catalog_heap, MotifTag};
    use crate::weyl::act;

    fn b5() -> PeriodicHeap {
        catalog_heap(MotifTag::BSpin(5)).unwrap()
    }

    #[test]
    fn example_ideal_has_the_stated_chains() {
        // F = <2(1), 5(1)> consists of 0,1,4 up to index 0 and 2,3,5 up to 1
        let h = b5();
        let f = parse_ideal(&h, "2(1),5(1)").unwrap();
        assert!(is_ideal(&h, &f));
        assert_eq!(f.0, vec![0, 0, 1, 1, 0, 1]);
        assert_eq!(ideal_literal(&h, &f), "2(1),5(1)");
    }

    #[test]
    fn operators_on_the_worked_example() {
        let h = b5();
        let f = parse_ideal(&h, "2(1),5(1)").unwrap();
        // raising acts at 0 and 4 only
        for p in 0..6 {
            let r = apply_raise(&h, &f, p);
            if p == 0 || p == 4 {
                let g = r.expect("raise applies");
                assert!(is_ideal(&h, &g));
                assert_eq!(apply_lower(&h, &g, p).unwrap(), f);
            } else {
                assert!(r.is_none(), "raise at {p} should be zero");
            }
        }
        // lowering acts at 2 and 5 only
        for p in 0..6 {
            let l = apply_lower(&h, &f, p);
            if p == 2 || p == 5 {
                assert!(l.is_some());
            } else {
                assert!(l.is_none(), "lower at {p} should be zero");
            }
        }
        // diagonal eigenvalues
        let expect = [(-1, 0), (0, 1), (1, 2), (0, 3), (-1, 4), (1, 5)];
        for (c, p) in expect {
            assert_eq!(h_eigen(&h, &f, p), c, "H at {p}");
        }
        // the reflection at 4 adjoins 4(1)
        let s4 = apply_reflection(&h, &f, 4);
        // 5(1) < 4(1), so the minimal antichain drops it
        assert_eq!(ideal_literal(&h, &s4), "2(1),4(1)");
        // involution
        assert_eq!(apply_reflection(&h, &s4, 4), f);
        // reflection with eigenvalue zero fixes
        assert_eq!(apply_reflection(&h, &f, 1), f);
    }

    #[test]
    fn down_closure_violations_are_caught() {
        let h = b5();
        let f = parse_ideal(&h, "2(1),5(1)").unwrap();
        let mut bad = f.clone();
        bad.0[2] += 1; // include 2(2) without its lower covers
        assert!(!is_ideal(&h, &bad));
    }

    #[test]
    fn meet_join_and_heights() {
        let h = b5();
        let f = parse_ideal(&h, "2(1),5(1)").unwrap();
        let g = shift(&h, &f, 2);
        let (m, j) = meet_join(&f, &g);
        assert_eq!(m, f);
        assert_eq!(j, g);
        assert_eq!(height(&m), height(&f).min(height(&g)));
        assert_eq!(height(&j), height(&f).max(height(&g)));
        assert_eq!(height(&f), 0);
        assert_eq!(height(&g), 2);
    }

    #[test]
    fn characters_and_shift() {
        let h = b5();
        let delta = h.diagram().null_root().unwrap();
        let f = parse_ideal(&h, "2(1),5(1)").unwrap();
        assert!(character(&h, &f, &f).is_zero());
        for k in [-2i64, 1, 3] {
            let g = shift(&h, &f, k);
            assert_eq!(character(&h, &f, &g), delta.scale(k));
            assert!(!is_skew(&h, &f, &g).unwrap());
        }
        // singleton difference is a simple root and skew
        let g = apply_raise(&h, &f, 4).unwrap();
        assert_eq!(character(&h, &f, &g), RootVector::simple(6, 4));
        assert!(is_skew(&h, &f, &g).unwrap());
        assert!(is_skew(&h, &g, &f).unwrap());
        assert!(!is_skew(&h, &f, &f).unwrap());
        // cocycle identity
        let f2 = apply_reflection(&h, &f, 0);
        assert_eq!(
            character(&h, &f, &g),
            character(&h, &f, &f2).add(&character(&h, &f2, &g))
        );
    }

    #[test]
    fn heights_move_only_under_the_affine_vertex() {
        let h = b5();
        let f = parse_ideal(&h, "2(1),5(1)").unwrap();
        for p in 0..h.n() {
            if let Some(g) = apply_raise(&h, &f, p) {
                let bump = if p == 0 { 1 } else { 0 };
                assert_eq!(height(&g), height(&f) + bump, "raise at {p}");
            }
            if p != 0 {
                assert_eq!(height(&apply_reflection(&h, &f, p)), height(&f));
            }
        }
        // the shift commutes with every reflection
        for p in 0..h.n() {
            for k in [-2i64, 1] {
                assert_eq!(
                    shift(&h, &apply_reflection(&h, &f, p), k),
                    apply_reflection(&h, &shift(&h, &f, k), p)
                );
            }
        }
    }

    #[test]
    fn orbit_decomposition_roundtrips() {
        let h = b5();
        let f = parse_ideal(&h, "2(1),5(1)").unwrap();
        let g = shift(&h, &f, 3);
        let d = orbit_decompose(&h, &g).unwrap();
        assert_eq!(d.height, 3);
        assert_eq!(d.rep, f);
        assert_eq!(shift(&h, &d.rep, d.height), g);
    }

    #[test]
    fn e0_counts_for_spin_heaps() {
        for l in 3..=8 {
            let h = catalog_heap(MotifTag::BSpin(l)).unwrap();
            let e0 = e0_subheap(&h);
            assert_eq!(e0.len(), l * (l + 1) / 2);
            assert_eq!(e0.ideals().len(), 1 << l, "B {l}");
        }
        let h = b5();
        let f = parse_ideal(&h, "2(1),5(1)").unwrap();
        let g = restrict_to_e0(&h, &f).unwrap();
        assert_eq!(g.len(), 10);
        let mut counts = vec![0i64; h.n()];
        for e in &g {
            counts[e.vertex] += 1;
        }
        assert_eq!(extend_from_e0(&h, &counts), f);
    }

    #[test]
    fn chain_heap_ideals_are_principal() {
        let h = catalog_heap(MotifTag::AChain(3)).unwrap();
        for f in enumerate_height(&h, 0) {
            let lit = ideal_literal(&h, &f);
            assert!(!lit.contains(','), "principal ideal expected, got {lit}");
        }
        // one principal ideal of height 0 per vertex
        assert_eq!(enumerate_height(&h, 0).len(), 4);
    }

    #[test]
    fn dual_ideals_swap_raise_and_lower() {
        let h = b5();
        let hd = h.dual();
        let f = parse_ideal(&h, "2(1),5(1)").unwrap();
        let fd = dual_ideal(&h, &f);
        assert!(is_ideal(&hd, &fd));
        assert_eq!(dual_ideal(&hd, &fd), f);
        for p in 0..h.n() {
            let raised = apply_raise(&h, &f, p).map(|g| dual_ideal(&h, &g));
            let lowered = apply_lower(&hd, &fd, p);
            assert_eq!(raised, lowered, "raise/lower duality at {p}");
            // the complement map intertwines the reflections
            assert_eq!(
                dual_ideal(&h, &apply_reflection(&h, &f, p)),
                apply_reflection(&hd, &fd, p)
            );
        }
    }

    #[test]
    fn connect_words_reach_their_target() {
        let h = b5();
        let f = parse_ideal(&h, "2(1),5(1)").unwrap();
        assert!(connect_word(&h, &f, &f).0.is_empty());
        let g = apply_raise(&h, &f, 4).unwrap();
        assert_eq!(connect_word(&h, &f, &g).0, vec![4]);
        for other in enumerate_height(&h, 1) {
            let w = connect_word(&h, &f, &other);
            assert_eq!(act(&h, &w, &f), other);
            let chi = character(&h, &f, &other);
            for &p in &w.0 {
                assert_ne!(chi.0[p], 0, "letter {p} outside the character support");
            }
        }
    }
}
