//! Exhaustive search for full heaps over an affine diagram.
//!
//! A full heap with period equal to the null root is determined by, for
//! each diagram edge, the total interleaving of the two adjacent chains.
//! The search assigns one interleaving per edge (backtracking over a
//! spanning tree, with free alignment only on cycle-closing edges), prunes
//! with the per-gap Cartan quota, and keeps the assignments whose
//! transitive closure reproduces every interleaving exactly.

use super::{CoverPair, FiniteHeap, HeapElement, PeriodicHeap, ValidationLevel};
use crate::cartan::DynkinDiagram;
use crate::{Error, Result};

struct EdgeVar {
    p: usize,
    q: usize,
    /// true when this edge introduces chain q (its alignment is a labelling
    /// choice); false for cycle-closing edges whose alignment is free.
    defines_q: bool,
    /// gap_of[j] = i means (p, i) < (q, j) < (p, i+1); periodic extension
    /// gap_of[j + t_q] = gap_of[j] + t_p.
    gap_of: Vec<i64>,
}

struct Search<'a> {
    diagram: &'a DynkinDiagram,
    t: Vec<i64>,
    edges: Vec<EdgeVar>,
    offset_bound: i64,
    results: Vec<PeriodicHeap>,
}

/// All full heaps over `d` with period equal to the null root, up to
/// label-preserving isomorphism, in a deterministic order.
pub fn search_full_heaps(d: &DynkinDiagram, budget: usize) -> Result<Vec<PeriodicHeap>> {
    let delta = d.null_root()?;
    let t: Vec<i64> = delta.0.clone();
    let total: i64 = t.iter().sum();
    if total as usize > budget {
        return Err(Error::BudgetExhausted(format!(
            "period has {total} elements, budget is {budget}"
        )));
    }
    let n = d.n();
    // spanning tree order from vertex 0
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut frontier = vec![0usize];
    let mut edges: Vec<EdgeVar> = Vec::new();
    let mut tree_pairs = Vec::new();
    while let Some(v) = frontier.pop() {
        for u in d.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                tree_pairs.push((v, u));
                frontier.push(u);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::NotAffine("diagram is disconnected".into()));
    }
    for (p, q) in tree_pairs {
        edges.push(EdgeVar {
            p,
            q,
            defines_q: true,
            gap_of: Vec::new(),
        });
    }
    for p in 0..n {
        for q in (p + 1)..n {
            if d.adjacent(p, q)
                && !edges
                    .iter()
                    .any(|e| (e.p, e.q) == (p, q) || (e.p, e.q) == (q, p))
            {
                edges.push(EdgeVar {
                    p,
                    q,
                    defines_q: false,
                    gap_of: Vec::new(),
                });
            }
        }
    }
    let mut search = Search {
        diagram: d,
        t,
        edges,
        offset_bound: total + 2,
        results: Vec::new(),
    };
    search.assign(0);
    let mut out: Vec<PeriodicHeap> = Vec::new();
    for h in search.results {
        if !out.iter().any(|k| k.isomorphic(&h).is_some()) {
            out.push(h);
        }
    }
    out.sort_by_key(|h| super::motif::motif_text(h, &[]));
    Ok(out)
}

impl Search<'_> {
    fn assign(&mut self, k: usize) {
        if k == self.edges.len() {
            self.finish();
            return;
        }
        let (p, q, defines_q) = {
            let e = &self.edges[k];
            (e.p, e.q, e.defines_q)
        };
        let (tp, tq) = (self.t[p], self.t[q]);
        let starts: Vec<i64> = if defines_q {
            (0..tp).collect()
        } else {
            (-self.offset_bound..=self.offset_bound).collect()
        };
        let mut seq = Vec::with_capacity(tq as usize);
        for g0 in starts {
            seq.clear();
            seq.push(g0);
            self.extend_seq(k, &mut seq, g0, tp, tq);
        }
    }

    fn extend_seq(&mut self, k: usize, seq: &mut Vec<i64>, g0: i64, tp: i64, tq: i64) {
        if seq.len() == tq as usize {
            self.edges[k].gap_of = seq.clone();
            if self.quota_ok(k) {
                self.assign(k + 1);
            }
            return;
        }
        let last = *seq.last().unwrap();
        for g in last..=(g0 + tp) {
            // at most two chain-q elements per residue gap
            let count = seq.iter().filter(|&&x| (x - g).rem_euclid(tp) == 0).count();
            if count >= 2 {
                continue;
            }
            seq.push(g);
            self.extend_seq(k, seq, g0, tp, tq);
            seq.pop();
        }
    }

    /// Gap quota: once every edge at a vertex is assigned, each of its gaps
    /// must carry Cartan-weighted content exactly -2; partially assigned
    /// vertices must not already exceed it.
    fn quota_ok(&self, upto: usize) -> bool {
        let m = self.diagram.matrix();
        let n = self.diagram.n();
        for v in 0..n {
            let needed = self.diagram.neighbors(v).len();
            let mut have = 0usize;
            let mut gap_sum = vec![0i64; self.t[v] as usize];
            for e in self.edges[..=upto].iter() {
                if e.gap_of.is_empty() {
                    continue;
                }
                if e.p == v {
                    // chain-q elements land in v-gaps directly
                    have += 1;
                    for &g in &e.gap_of {
                        let r = g.rem_euclid(self.t[v]) as usize;
                        gap_sum[r] += m.entry(v, e.q);
                    }
                } else if e.q == v {
                    // v holds the interleaved chain: p-element i sits in the
                    // v-gap below the first v-element above it
                    have += 1;
                    let (tp, tq) = (self.t[e.p], self.t[e.q]);
                    for i in 0..tp {
                        let j = gap_in_q(&e.gap_of, tp, tq, i);
                        let r = j.rem_euclid(tq) as usize;
                        gap_sum[r] += m.entry(v, e.p);
                    }
                }
            }
            for &s in &gap_sum {
                if s < -2 || (have == needed && s != -2) {
                    return false;
                }
            }
        }
        true
    }

    fn finish(&mut self) {
        let covers = self.candidate_covers();
        let Ok(heap) = PeriodicHeap::new(self.diagram.clone(), self.t.clone(), covers, Vec::new())
        else {
            return;
        };
        // the closure must reproduce every interleaving exactly
        for e in &self.edges {
            for (j, &g) in e.gap_of.iter().enumerate() {
                let x = HeapElement::new(e.q, j as i64);
                if heap.principal_frontier(x).0[e.p] != g
                    || heap.principal_filter_min(x)[e.p] != g + 1
                {
                    return;
                }
            }
        }
        // keep only genuine covering pairs as generators
        let gens: Vec<CoverPair> = heap
            .generators()
            .iter()
            .copied()
            .filter(|&(c, p)| heap.open_interval(c, p).is_empty())
            .collect();
        let Ok(heap) = PeriodicHeap::new(self.diagram.clone(), self.t.clone(), gens, Vec::new())
        else {
            return;
        };
        for level in [
            ValidationLevel::Labelled,
            ValidationLevel::Fibred,
            ValidationLevel::Full,
        ] {
            if !heap.validate(level).passed() {
                return;
            }
        }
        self.results.push(heap);
    }

    /// Adjacent-label consecutive pairs of every merged two-chain order.
    fn candidate_covers(&self) -> Vec<CoverPair> {
        let mut covers = Vec::new();
        for e in &self.edges {
            let (tp, tq) = (self.t[e.p], self.t[e.q]);
            // For each q element j (one period plus a margin), it sits in
            // p-gap g: candidate covers with the flanking p elements unless
            // another q element of the same gap intervenes.
            let lift = |j: i64| -> i64 {
                let m = j.div_euclid(tq);
                e.gap_of[(j - m * tq) as usize] + m * tp
            };
            for j in -(tq + 2)..(2 * tq + 2) {
                let g = lift(j);
                let below_same_gap = lift(j - 1) == g;
                let above_same_gap = lift(j + 1) == g;
                if !below_same_gap {
                    covers.push((HeapElement::new(e.p, g), HeapElement::new(e.q, j)));
                }
                if !above_same_gap {
                    covers.push((HeapElement::new(e.q, j), HeapElement::new(e.p, g + 1)));
                }
            }
        }
        covers
    }
}

/// The q-gap holding p-element i: the largest j, over the periodic
/// extension `gap_of[j + m tq] = gap_of[j] + m tp`, with `gap_of[j] <= i-1`.
fn gap_in_q(gap_of: &[i64], tp: i64, tq: i64, i: i64) -> i64 {
    let lift = |j: i64| -> i64 {
        let m = j.div_euclid(tq);
        gap_of[(j - m * tq) as usize] + m * tp
    };
    let mut j = 0;
    while lift(j) >= i {
        j -= tq;
    }
    while lift(j + 1) < i {
        j += 1;
    }
    j
}

/// Enumerates all heaps with `n_elements` elements over a three-vertex
/// path diagram (labels 0,1,2 with 0 and 2 commuting), up to commutation
/// equivalence of the building word.  Used to reconstruct the finite
/// section-9 heaps.
pub fn enumerate_path_heaps(d: &DynkinDiagram, n_elements: usize) -> Vec<FiniteHeap> {
    assert_eq!(d.n(), 3);
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n_elements);
    fn canonical(word: &[usize], d: &DynkinDiagram) -> bool {
        // reject words where an adjacent commuting pair is out of order:
        // the lexicographically minimal representative survives
        word.windows(2)
            .all(|w| d.adjacent(w[0], w[1]) || w[0] == w[1] || w[0] <= w[1])
    }
    fn rec(word: &mut Vec<usize>, n: usize, d: &DynkinDiagram, out: &mut Vec<FiniteHeap>) {
        if word.len() == n {
            if canonical(word, d) {
                out.push(heap_from_word(d, word));
            }
            return;
        }
        for letter in 0..3 {
            word.push(letter);
            if canonical(word, d) {
                rec(word, n, d, out);
            }
            word.pop();
        }
    }
    rec(&mut word, n_elements, d, &mut out);
    out
}

fn heap_from_word(d: &DynkinDiagram, word: &[usize]) -> FiniteHeap {
    let n = word.len();
    // i < j related when labels are equal or adjacent; covers from the
    // transitive reduction
    let mut le = vec![vec![false; n]; n];
    for i in 0..n {
        le[i][i] = true;
        for j in (i + 1)..n {
            if word[i] == word[j] || d.adjacent(word[i], word[j]) {
                le[i][j] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if le[i][k] {
                for j in 0..n {
                    if le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
    }
    let mut chain_pos = vec![0i64; n];
    let mut seen = vec![0i64; 3];
    for i in 0..n {
        chain_pos[i] = seen[word[i]];
        seen[word[i]] += 1;
    }
    let elements: Vec<HeapElement> = (0..n)
        .map(|i| HeapElement::new(word[i], chain_pos[i]))
        .collect();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && le[i][j] {
                let direct = !(0..n).any(|m| m != i && m != j && le[i][m] && le[m][j]);
                if direct {
                    covers.push((elements[i], elements[j]));
                }
            }
        }
    }
    FiniteHeap::new(d.clone(), elements, covers).expect("word heap is consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CatalogTag;

    #[test]
    fn a1_has_exactly_the_alternating_chain() {
        let d = DynkinDiagram::catalog(CatalogTag::A(1)).unwrap();
        let found = search_full_heaps(&d, 64).unwrap();
        assert_eq!(found.len(), 1);
        let chain = super::super::construct::a_chain(1).unwrap();
        assert!(found[0].isomorphic(&chain).is_some());
    }

    #[test]
    fn budget_is_reported() {
        let d = DynkinDiagram::catalog(CatalogTag::E7).unwrap();
        assert!(matches!(
            search_full_heaps(&d, 3),
            Err(Error::BudgetExhausted(_))
        ));
    }

    #[test]
    fn b3_search_finds_the_spin_heap() {
        let d = DynkinDiagram::catalog(CatalogTag::B(3)).unwrap();
        let found = search_full_heaps(&d, 64).unwrap();
        let spin = super::super::construct::b_spin(3).unwrap();
        assert!(found.iter().any(|h| h.isomorphic(&spin).is_some()));
    }

    #[test]
    fn a2_search_contains_chain_and_dual() {
        let d = DynkinDiagram::catalog(CatalogTag::A(2)).unwrap();
        let found = search_full_heaps(&d, 64).unwrap();
        let chain = super::super::construct::a_chain(2).unwrap();
        assert!(found.iter().any(|h| h.isomorphic(&chain).is_some()));
        // closed under duality as a set of isomorphism classes
        for h in &found {
            let dual = h.dual();
            assert!(found.iter().any(|k| k.isomorphic(&dual).is_some()));
        }
    }
}
