//! Words in the Weyl group generators acting on proper ideals, and the
//! executable verification campaigns: the Coxeter presentation on a
//! window of ideals, equivariance of the character map, and constructive
//! faithfulness witnesses.

use crate::cartan::{act_word_on_root, RootVector};
use crate::heap::PeriodicHeap;
use crate::lattice::{
    apply_reflection, character, enumerate_height, orbit_decompose, shift, Frontier, GradedIdeal,
};
use crate::{Error, Result};
use std::fmt;

/// A sequence of generator indices, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn parse(text: &str, n: usize) -> Result<WeylWord> {
        let mut letters = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let i: usize = tok.parse().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad letter `{tok}`"),
            })?;
            if i >= n {
                return Err(Error::BadGenerator(i));
            }
            letters.push(i);
        }
        Ok(WeylWord(letters))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Left-to-right composition of reflection operators on an ideal.
pub fn act(h: &PeriodicHeap, word: &WeylWord, f: &Frontier) -> Frontier {
    let mut cur = f.clone();
    for &i in &word.0 {
        assert!(i < h.n(), "generator index {i} out of range");
        cur = apply_reflection(h, &cur, i);
    }
    cur
}

/// Outcome of the presentation check on a set of ideals.
#[derive(Debug, Clone)]
pub struct RelationReport {
    pub violations: Vec<String>,
    /// Pairs with no braid relation where some power nevertheless fixed
    /// the whole window (evidence the window was too small to separate).
    pub suspicious_free_pairs: Vec<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.suspicious_free_pairs.is_empty()
    }
}

/// Checks the Coxeter presentation generator by generator on the given
/// ideals: involutivity and the braid relation of every pair.  For pairs
/// with no relation, checks instead that no power up to 10 acts as the
/// identity on the window.
pub fn verify_relations(h: &PeriodicHeap, ideals: &[Frontier]) -> RelationReport {
    let mut violations = Vec::new();
    let mut suspicious = Vec::new();
    let n = h.n();
    for f in ideals {
        for i in 0..n {
            let g = apply_reflection(h, &apply_reflection(h, f, i), i);
            if g != *f {
                violations.push(format!("s_{i}^2 moves {f}"));
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            match h.diagram().coxeter_m(i, j) {
                Some(m) => {
                    for f in ideals {
                        let mut cur = f.clone();
                        for _ in 0..m {
                            cur = apply_reflection(h, &cur, i);
                            cur = apply_reflection(h, &cur, j);
                        }
                        if cur != *f {
                            violations.push(format!("(s_{i} s_{j})^{m} moves {f}"));
                        }
                    }
                }
                None => {
                    for k in 1..=10u32 {
                        let moved = ideals.iter().any(|f| {
                            let mut cur = f.clone();
                            for _ in 0..k {
                                cur = apply_reflection(h, &cur, i);
                                cur = apply_reflection(h, &cur, j);
                            }
                            cur != *f
                        });
                        if !moved {
                            suspicious.push(format!("(s_{i} s_{j})^{k} fixes every window ideal"));
                        }
                    }
                }
            }
        }
    }
    RelationReport {
        violations,
        suspicious_free_pairs: suspicious,
    }
}

/// The character of a pair transforms by the reflection representation.
pub fn equivariance_check(
    h: &PeriodicHeap,
    word: &WeylWord,
    f: &Frontier,
    g: &Frontier,
) -> Result<bool> {
    let lhs = character(h, &act(h, word, f), &act(h, word, g));
    let rhs = act_word_on_root(h.diagram(), &word.0, &character(h, f, g))?;
    Ok(lhs == rhs)
}

/// Result of the faithfulness probe for one word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// An ideal the word moves.
    Moved(Frontier),
    /// No simple root is sent negative: the word acts trivially on the
    /// probed window (and, by the root argument, represents the identity).
    IdentityOnWindow,
}

/// Follows the root-image argument: find a simple root sent negative,
/// take a pair of ideals whose character is that root, and return the
/// member the word moves.
pub fn faithfulness_witness(h: &PeriodicHeap, word: &WeylWord) -> Result<Witness> {
    let n = h.n();
    let mut negated = None;
    for i in 0..n {
        let img = act_word_on_root(h.diagram(), &word.0, &RootVector::simple(n, i))?;
        if img.is_nonpositive() && !img.is_zero() {
            negated = Some(i);
            break;
        }
    }
    let Some(i) = negated else {
        return Ok(Witness::IdentityOnWindow);
    };
    // a pair (F, F + one chain-i element) exists in every full heap; scan
    // a few heights for one
    for t in [0i64, -1, 1, -2, 2] {
        for f in enumerate_height(h, t) {
            if let Some(g) = crate::lattice::apply_raise(h, &f, i) {
                if act(h, word, &f) != f {
                    return Ok(Witness::Moved(f));
                }
                if act(h, word, &g) != g {
                    return Ok(Witness::Moved(g));
                }
            }
        }
    }
    unreachable!("a negated simple root always yields a moved ideal");
}

/// The graded action on (height, representative) pairs.
pub fn act_graded(h: &PeriodicHeap, word: &WeylWord, g: &GradedIdeal) -> Result<GradedIdeal> {
    if h.t(0) != 1 {
        return Err(Error::BasePeriod(h.t(0)));
    }
    let f = shift(h, &g.rep, g.height);
    orbit_decompose(h, &act(h, word, &f))
}

/// Words of each action-distinct class up to the given length, found by
/// breadth-first search over the action on a window of ideals and
/// deduplicated by their permutation fingerprint.  The empty word is not
/// returned.
pub fn reduced_words_by_action(h: &PeriodicHeap, max_len: usize) -> Vec<WeylWord> {
    let window: Vec<Frontier> = (-1..=1).flat_map(|t| enumerate_height(h, t)).collect();
    let fingerprint =
        |w: &WeylWord| -> Vec<Frontier> { window.iter().map(|f| act(h, w, f)).collect() };
    let mut seen = std::collections::HashSet::new();
    seen.insert(fingerprint(&WeylWord(vec![])));
    let mut out = Vec::new();
    let mut layer = vec![WeylWord(vec![])];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for i in 0..h.n() {
                let mut letters = w.0.clone();
                letters.push(i);
                let cand = WeylWord(letters);
                if seen.insert(fingerprint(&cand)) {
                    out.push(cand.clone());
                    next.push(cand);
                }
            }
        }
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heap::{catalog_heap, MotifTag};
    use crate::lattice::parse_ideal;

    #[test]
    fn worked_example_word_action() {
        let h = catalog_heap(MotifTag::BSpin(5)).unwrap();
        let f = parse_ideal(&h, "2(1),5(1)").unwrap();
        let w = WeylWord(vec![4]);
        let g = act(&h, &w, &f);
        assert_eq!(crate::lattice::ideal_literal(&h, &g), "2(1),4(1)");
        assert_eq!(act(&h, &WeylWord(vec![]), &f), f);
        assert_eq!(act(&h, &WeylWord(vec![4, 4]), &f), f);
    }

    #[test]
    fn braid_words_act_identically() {
        let h = catalog_heap(MotifTag::BSpin(3)).unwrap();
        // vertices 2 and 3 carry the double edge: m = 4
        let w1 = WeylWord(vec![2, 3, 2, 3]);
        let w2 = WeylWord(vec![3, 2, 3, 2]);
        for f in enumerate_height(&h, 0) {
            assert_eq!(act(&h, &w1, &f), act(&h, &w2, &f));
        }
    }

    #[test]
    fn relations_hold_on_catalog_heaps() {
        for tag in [
            MotifTag::AChain(2),
            MotifTag::CChain(2),
            MotifTag::A2Chain(2),
            MotifTag::BSpin(3),
            MotifTag::AString(2),
            MotifTag::CString(2),
            MotifTag::E6,
            MotifTag::G2,
        ] {
            let h = catalog_heap(tag).unwrap();
            let ideals: Vec<Frontier> = (-1..=1).flat_map(|t| enumerate_height(&h, t)).collect();
            let rep = verify_relations(&h, &ideals);
            assert!(rep.passed(), "{tag:?}: {:?}", rep.violations);
        }
    }

    #[test]
    fn a1_powers_keep_moving() {
        let h = catalog_heap(MotifTag::AChain(1)).unwrap();
        let ideals: Vec<Frontier> = (-11..=11).flat_map(|t| enumerate_height(&h, t)).collect();
        let rep = verify_relations(&h, &ideals);
        assert!(rep.passed(), "{:?}", rep.suspicious_free_pairs);
    }

    #[test]
    fn witnesses_and_identity_reports() {
        let h = catalog_heap(MotifTag::BSpin(3)).unwrap();
        match faithfulness_witness(&h, &WeylWord(vec![2])).unwrap() {
            Witness::Moved(f) => assert_ne!(act(&h, &WeylWord(vec![2]), &f), f),
            w => panic!("expected a witness, got {w:?}"),
        }
        assert_eq!(
            faithfulness_witness(&h, &WeylWord(vec![])).unwrap(),
            Witness::IdentityOnWindow
        );
        assert_eq!(
            faithfulness_witness(&h, &WeylWord(vec![3, 3])).unwrap(),
            Witness::IdentityOnWindow
        );
    }

    #[test]
    fn graded_action_matches_plain_action() {
        let h = catalog_heap(MotifTag::BSpin(3)).unwrap();
        let words = [vec![0], vec![0, 1, 2], vec![3, 2, 3, 0]];
        for letters in words {
            let w = WeylWord(letters);
            for f in enumerate_height(&h, 0) {
                let g = orbit_decompose(&h, &f).unwrap();
                let lhs = act_graded(&h, &w, &g).unwrap();
                let rhs = orbit_decompose(&h, &act(&h, &w, &f)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn word_parsing() {
        assert_eq!(WeylWord::parse("0,1,2,1", 3).unwrap().0, vec![0, 1, 2, 1]);
        assert!(WeylWord::parse("0,7", 3).is_err());
        assert!(WeylWord::parse("x", 3).is_err());
        assert!(WeylWord::parse("", 3).unwrap().is_empty());
    }
}
