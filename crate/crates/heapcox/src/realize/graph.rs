//! Edge-labelled Hasse diagrams of finite ideal lattices, DOT export
//! plumbing, and the permutation group generated by the reflection action.

use crate::heap::FiniteHeap;

/// An edge-labelled graph: nodes carry stable ids, each edge the index of
/// the generator whose operator crosses it.
#[derive(Debug, Clone)]
pub struct LabelledGraph {
    pub nodes: Vec<String>,
    /// (from, to, generator): from is covered by to.
    pub edges: Vec<(usize, usize, usize)>,
}

/// The Hasse diagram of the lattice of all ideals (including the empty
/// set and the whole heap), with each covering edge labelled by the
/// vertex of the added element.
pub fn hasse_graph(fh: &FiniteHeap) -> LabelledGraph {
    let ideals = fh.ideals();
    let pos: std::collections::HashMap<u128, usize> =
        ideals.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let nodes: Vec<String> = ideals
        .iter()
        .enumerate()
        .map(|(i, _)| format!("n{i}"))
        .collect();
    let mut edges = Vec::new();
    for (i, &mask) in ideals.iter().enumerate() {
        for (k, e) in fh.elements().iter().enumerate() {
            if mask & (1 << k) == 0 {
                let bigger = mask | (1 << k);
                if fh.is_ideal(bigger) {
                    edges.push((i, pos[&bigger], e.vertex));
                }
            }
        }
    }
    edges.sort();
    LabelledGraph { nodes, edges }
}

/// Order of the permutation group generated by the reflection action on
/// the ideals of a finite heap.
pub fn ideal_action_group_order(fh: &FiniteHeap) -> usize {
    let (_, perms) = fh.ideal_reflections();
    let n = perms.first().map_or(0, |p| p.len());
    let id: Vec<usize> = (0..n).collect();
    let mut seen = std::collections::HashSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(g) = queue.pop() {
        for p in &perms {
            let h: Vec<usize> = g.iter().map(|&x| p[x]).collect();
            if seen.insert(h.clone()) {
                queue.push(h);
            }
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heap::{catalog_heap, MotifTag};
    use crate::lattice::e0_subheap;

    #[test]
    fn hasse_node_counts_match_the_fundamental_domain() {
        for l in 3..=6 {
            let h = catalog_heap(MotifTag::BSpin(l)).unwrap();
            let g = hasse_graph(&e0_subheap(&h));
            assert_eq!(g.nodes.len(), 1 << l, "B{l}");
        }
        let e6 = catalog_heap(MotifTag::E6).unwrap();
        assert_eq!(hasse_graph(&e0_subheap(&e6)).nodes.len(), 27);
        let e7 = catalog_heap(MotifTag::E7).unwrap();
        assert_eq!(hasse_graph(&e0_subheap(&e7)).nodes.len(), 56);
    }

    #[test]
    fn edges_add_one_element_with_the_right_label() {
        let h = catalog_heap(MotifTag::G2).unwrap();
        let fh = h.window(0, 2);
        let g = hasse_graph(&fh);
        let ideals = fh.ideals();
        for &(from, to, label) in &g.edges {
            let diff = ideals[to] & !ideals[from];
            assert_eq!(diff.count_ones(), 1);
            let k = diff.trailing_zeros() as usize;
            assert_eq!(fh.elements()[k].vertex, label);
        }
    }
}
