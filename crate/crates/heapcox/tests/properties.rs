//! Property tests over randomly chosen ideals and words.

use heapcox::heap::{catalog_heap, MotifTag, PeriodicHeap};
use heapcox::lattice::{
    apply_reflection, character, connect_word, enumerate_height, is_ideal, meet_join, Frontier,
};
use heapcox::weyl::{act, WeylWord};
use proptest::prelude::*;

fn heap_and_ideals() -> (PeriodicHeap, Vec<Frontier>) {
    let h = catalog_heap(MotifTag::BSpin(3)).unwrap();
    let ideals: Vec<Frontier> = (-2..=2).flat_map(|t| enumerate_height(&h, t)).collect();
    (h, ideals)
}

proptest! {
    #[test]
    fn meet_and_join_are_ideals_and_satisfy_the_lattice_laws(
        a in 0usize..40, b in 0usize..40, c in 0usize..40
    ) {
        let (h, ideals) = heap_and_ideals();
        let (f, g, k) = (&ideals[a], &ideals[b], &ideals[c]);
        let (m, j) = meet_join(f, g);
        prop_assert!(is_ideal(&h, &m) && is_ideal(&h, &j));
        prop_assert_eq!(meet_join(f, f), (f.clone(), f.clone()));
        prop_assert_eq!(meet_join(g, f), (m.clone(), j.clone()));
        // absorption
        prop_assert_eq!(meet_join(f, &j).0, f.clone());
        prop_assert_eq!(meet_join(f, &m).1, f.clone());
        // associativity of meet
        let lhs = meet_join(&meet_join(f, g).0, k).0;
        let rhs = meet_join(f, &meet_join(g, k).0).0;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reflections_are_involutions_preserving_ideals(
        a in 0usize..40, word in proptest::collection::vec(0usize..4, 0..8)
    ) {
        let (h, ideals) = heap_and_ideals();
        let f = &ideals[a];
        let mut cur = f.clone();
        for &i in &word {
            cur = apply_reflection(&h, &cur, i);
            prop_assert!(is_ideal(&h, &cur));
            prop_assert_eq!(
                apply_reflection(&h, &apply_reflection(&h, &cur, i), i),
                cur.clone()
            );
        }
        // applying the word twice in reverse undoes it
        let there = act(&h, &WeylWord(word.clone()), f);
        let back_word: Vec<usize> = word.iter().rev().copied().collect();
        prop_assert_eq!(act(&h, &WeylWord(back_word), &there), f.clone());
    }

    #[test]
    fn characters_form_a_cocycle(a in 0usize..40, b in 0usize..40, c in 0usize..40) {
        let (h, ideals) = heap_and_ideals();
        let (f, g, k) = (&ideals[a], &ideals[b], &ideals[c]);
        let fg = character(&h, f, g);
        let gk = character(&h, g, k);
        let fk = character(&h, f, k);
        prop_assert_eq!(fk, fg.add(&gk));
        prop_assert_eq!(character(&h, g, f), character(&h, f, g).neg());
    }

    #[test]
    fn connecting_words_reach_their_target(a in 0usize..40, b in 0usize..40) {
        let (h, ideals) = heap_and_ideals();
        let (f, g) = (&ideals[a], &ideals[b]);
        let w = connect_word(&h, f, g);
        prop_assert_eq!(act(&h, &w, f), g.clone());
        let chi = character(&h, f, g);
        for &p in &w.0 {
            prop_assert!(chi.0[p] != 0);
        }
    }
}
