//! Mate census regression values and oracle cross-validation.

use qwalk_core::canon::{enumerate_graphs, enumerate_graphs_up_to};
use qwalk_core::graph6::parse_graph6;
use qwalk_core::oracle::{brute_force_dgqs, cross_validate, find_mates, gq_spectrum_key, mates_of};

#[test]
fn census_by_order() {
    let mut groups = Vec::new();
    let mut members = Vec::new();
    let mut determined = Vec::new();
    for n in 1..=7 {
        let all = enumerate_graphs(n).unwrap();
        let found = find_mates(all.clone()).unwrap();
        groups.push(found.len());
        members.push(found.iter().map(|g| g.graphs.len()).sum::<usize>());
        determined.push(all.iter().filter(|g| brute_force_dgqs(g).unwrap()).count());
    }
    assert_eq!(groups, [0, 0, 0, 1, 2, 8, 50]);
    assert_eq!(members, [0, 0, 0, 2, 4, 16, 102]);
    assert_eq!(determined, [1, 2, 4, 9, 30, 140, 942]);
}

#[test]
fn four_vertex_mates() {
    let groups = find_mates(enumerate_graphs(4).unwrap()).unwrap();
    assert_eq!(groups.len(), 1);
    let words = &groups[0].graphs;
    for w in words {
        let g = parse_graph6(w).unwrap();
        assert_eq!(mates_of(&g).unwrap().len(), 1);
        assert!(!brute_force_dgqs(&g).unwrap());
    }
    let a = parse_graph6(&words[0]).unwrap();
    let b = parse_graph6(&words[1]).unwrap();
    assert_eq!(gq_spectrum_key(&a), gq_spectrum_key(&b));
}

#[test]
fn mixed_corpus_groups_by_order() {
    let mut corpus = enumerate_graphs(5).unwrap();
    corpus.extend(enumerate_graphs(4).unwrap());
    // Relabelled duplicates are merged.
    corpus.extend(
        enumerate_graphs(4)
            .unwrap()
            .iter()
            .map(|g| g.permuted(&[3, 2, 1, 0])),
    );
    let groups = find_mates(corpus).unwrap();
    assert_eq!(groups.iter().map(|g| g.n).collect::<Vec<_>>(), [4, 5, 5]);
}

#[test]
fn cross_validation_reports() {
    let reports: Vec<_> = (1..=6).map(|n| cross_validate(n).unwrap()).collect();
    let certified: Vec<usize> = reports.iter().map(|r| r.certified).collect();
    assert_eq!(certified, [1, 0, 0, 0, 0, 4]);
    for r in &reports {
        assert_eq!(r.contradictions, 0);
        assert_eq!(r.confirmed + r.unchecked, r.certified);
    }
    assert_eq!(reports[4].graphs, 34);
    assert_eq!(reports[5].graphs, 156);
}

#[test]
#[ignore = "enumerates all 12346 graphs on 8 vertices"]
fn order_eight_census() {
    let groups = find_mates(enumerate_graphs_up_to(8, 8).unwrap()).unwrap();
    assert_eq!(groups.len(), 545);
}
