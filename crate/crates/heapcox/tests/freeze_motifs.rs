//! Regenerates the frozen motif files from the reference constructions
//! and searches.  Run explicitly with `cargo test -p heapcox --test
//! freeze_motifs -- --ignored` after changing a construction; the
//! regular test suite asserts the shipped files agree with the
//! constructions, so stale files fail loudly rather than silently.

use heapcox::heap::{enumerate_path_heaps, search_full_heaps, MotifTag, PeriodicHeap};
use heapcox::realize::ideal_action_group_order;
use heapcox::{CatalogTag, DynkinDiagram};
use std::path::PathBuf;

fn motif_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("motifs")
}

fn write_motif(h: &PeriodicHeap, name: &str, provenance: &[&str]) {
    let prov: Vec<String> = provenance.iter().map(|s| s.to_string()).collect();
    let text = heapcox::heap::motif_text(h, &prov);
    std::fs::write(motif_dir().join(format!("{name}.heap")), text).unwrap();
}

#[test]
#[ignore = "regenerates the frozen data files in motifs/"]
fn freeze_all_motifs() {
    use MotifTag::*;
    let constructed: Vec<(MotifTag, &str)> = vec![
        (AChain(1), "alternating chain over the double edge"),
        (AChain(2), "principal chain over the cycle; every proper ideal is principal"),
        (AChain(3), "principal chain over the cycle; every proper ideal is principal"),
        (AChain(4), "principal chain over the cycle; every proper ideal is principal"),
        (CChain(2), "self-dual zigzag; ideals totally ordered"),
        (CChain(3), "self-dual zigzag; ideals totally ordered"),
        (CChain(4), "self-dual zigzag; ideals totally ordered"),
        (A2Chain(2), "zigzag with bottom antichains {0(y-1), 1(y)}"),
        (A2Chain(3), "zigzag with bottom antichains {0(y-1), 1(y)}"),
        (A2Chain(4), "zigzag with bottom antichains {0(y-1), 1(y)}"),
        (DChain(4), "zigzag with fork antichains at both ends"),
        (DChain(5), "zigzag with fork antichains at both ends"),
        (BSpin(3), "spin grid, column 0 alternating chains 0 and 1; indices pinned by the operator table of <2(1),5(1)>"),
        (BSpin(4), "spin grid, column 0 alternating chains 0 and 1; indices pinned by the operator table of <2(1),5(1)>"),
        (BSpin(5), "spin grid, column 0 alternating chains 0 and 1; indices pinned by the operator table of <2(1),5(1)>"),
        (DSpin(4), "layered spin grid; paired chains share the end columns with layer period four"),
        (DSpin(5), "layered spin grid; paired chains share the end columns with layer period four"),
        (DSpin(6), "layered spin grid; paired chains share the end columns with layer period four"),
        (AString(2), "brick wall on the 2l-cylinder; vertex parity equals layer parity"),
        (AString(3), "brick wall on the 2l-cylinder; vertex parity equals layer parity"),
        (AString(4), "brick wall on the 2l-cylinder; vertex parity equals layer parity"),
        (CString(2), "brick wall on the twisted path; vertex parity equals layer parity"),
        (CString(3), "brick wall on the twisted path; vertex parity equals layer parity"),
        (CString(4), "brick wall on the twisted path; vertex parity equals layer parity"),
        (E6, "reconstructed from the 27-line orbit table; base points pinned by the printed representatives"),
        (G2, "period-five near-chain; odd elements of chain 2 carry character weight 2"),
    ];
    for (tag, prov) in constructed {
        let h = heapcox::heap::construct_reference(tag).unwrap();
        write_motif(&h, &tag.name(), &[prov]);
    }

    // E7: the unique full heap, from the search
    let d = DynkinDiagram::catalog(CatalogTag::E7).unwrap();
    let found = search_full_heaps(&d, 64).unwrap();
    assert_eq!(found.len(), 1, "expected a unique full heap over E7");
    write_motif(
        &found[0],
        "e7",
        &["produced by exhaustive full-heap search; unique isomorphism class"],
    );

    // H3: search small path-graph heaps for the twelve-ideal lattice whose
    // reflection action generates a group of order 120 and satisfies the
    // (3, 5, 2) presentation
    let d = DynkinDiagram::catalog(CatalogTag::H3Graph).unwrap();
    let mut hit = None;
    'outer: for n in 6..=12 {
        for fh in enumerate_path_heaps(&d, n) {
            if !fh.validate_labelled().passed() {
                continue;
            }
            let ideals = fh.ideals();
            if ideals.len() != 12 {
                continue;
            }
            let (_, perms) = fh.ideal_reflections();
            if !presentation_holds(&d, &perms) {
                continue;
            }
            if ideal_action_group_order(&fh) != 120 {
                continue;
            }
            hit = Some(fh);
            break 'outer;
        }
    }
    let fh = hit.expect("an H3 heap with the icosahedral ideal action exists");
    let mut text = String::from("heap-finite 1\n");
    text.push_str(
        "# provenance: produced by exhaustive search over small heaps on the path graph;\n",
    );
    text.push_str(
        "# provenance: twelve ideals carrying a faithful action of the order-120 group\n",
    );
    text.push_str("catalog H3 3\n");
    for e in fh.elements() {
        text.push_str(&format!("element {} {}\n", e.vertex, e.index));
    }
    for &(c, p) in fh.cover_indices() {
        let (a, b) = (fh.elements()[c], fh.elements()[p]);
        text.push_str(&format!(
            "cover {} {} < {} {}\n",
            a.vertex, a.index, b.vertex, b.index
        ));
    }
    std::fs::write(motif_dir().join("h3.heap"), text).unwrap();
}

fn presentation_holds(d: &DynkinDiagram, perms: &[Vec<usize>]) -> bool {
    let n = perms[0].len();
    let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { (0..n).map(|x| b[a[x]]).collect() };
    let id: Vec<usize> = (0..n).collect();
    for i in 0..3 {
        if compose(&perms[i], &perms[i]) != id {
            return false;
        }
        for j in (i + 1)..3 {
            let m = d.coxeter_m(i, j).unwrap();
            let mut cur = id.clone();
            for _ in 0..m {
                cur = compose(&cur, &perms[i]);
                cur = compose(&cur, &perms[j]);
            }
            if cur != id {
                return false;
            }
            // the braid order is exact, not merely a divisor
            for k in 1..m {
                let mut c2 = id.clone();
                for _ in 0..k {
                    c2 = compose(&c2, &perms[i]);
                    c2 = compose(&c2, &perms[j]);
                }
                if c2 == id {
                    return false;
                }
            }
        }
    }
    true
}
