use std::collections::BTreeSet;

use qbmg_core::oracle::{graph_from_mask, proper_pairs};
use qbmg_core::two_color::{
    equivalent_n3_forms, explain_2qbmg, explain_with_m, hierarchy_from_axioms, reachable_sets,
    recolor_component_swap, satisfies, satisfies_all,
};
use qbmg_core::{qbmg_of, recognize_qbmg, AxiomTag, ColoredDigraph, VertexId};

const N123: [AxiomTag; 3] = [AxiomTag::N1, AxiomTag::N2, AxiomTag::N3];

fn sweep(max_part: usize, mut f: impl FnMut(&ColoredDigraph)) {
    for a in 1..=max_part {
        for b in 0..=max_part {
            let col: Vec<usize> = [vec![0; a], vec![1; b]].concat();
            let pairs = proper_pairs(&col);
            for m in 0..1u64 << pairs.len() {
                f(&graph_from_mask(&col, &pairs, m));
            }
        }
    }
}

type Set = BTreeSet<VertexId>;

fn nn(g: &ColoredDigraph, xs: &Set) -> Set {
    xs.iter().flat_map(|x| g.out_neighbors(x, None).unwrap()).collect()
}

fn laminar<'a>(sets: impl Iterator<Item = &'a Set> + Clone) -> bool {
    sets.clone().all(|a| {
        sets.clone().all(|b| a.is_disjoint(b) || a.is_subset(b) || b.is_subset(a))
    })
}

#[test]
fn q_sets_behave_on_every_small_graph() {
    sweep(3, |g| {
        let rs = reachable_sets(g).unwrap();
        let n2 = satisfies(g, AxiomTag::N2);
        for x in g.vertices() {
            let nx = g.out_neighbors(x, None).unwrap();
            let q = &rs.q[x];
            // (o)
            if nx.is_empty() {
                assert!(q.is_empty() && rs.rp[x].is_empty());
            } else {
                assert!(q.contains(x));
            }
            for y in q {
                // (i), (ii), (iii)
                assert_eq!(g.color_of(x).unwrap(), g.color_of(y).unwrap());
                assert!(rs.q[y].is_subset(q));
                assert!(g.out_neighbors(y, None).unwrap().is_subset(&nx));
            }
            for y in g.vertices() {
                let ny = g.out_neighbors(y, None).unwrap();
                let nny = nn(g, &ny);
                // (iv), (v), (vi)
                if !ny.contains(x) {
                    assert!(q.is_disjoint(&ny));
                }
                if !nny.contains(x) {
                    assert!(q.is_disjoint(&nny));
                }
                if nx.is_disjoint(&ny) {
                    assert!(q.is_disjoint(&rs.q[y]));
                }
                // y in R'(x) with a different color means an edge; R is the
                // full closure here, so this needs R = N ∪ N(N)
                if n2 && g.color_of(x).unwrap() != g.color_of(y).unwrap() {
                    assert_eq!(rs.rp[x].contains(y), nx.contains(y));
                }
            }
        }
    });
}

#[test]
fn axioms_give_laminar_reachable_sets_and_explanations() {
    let mut qbmgs = 0usize;
    sweep(3, |g| {
        assert!(equivalent_n3_forms(g));
        if !satisfies_all(g, &N123) {
            assert!(hierarchy_from_axioms(g).is_err());
            return;
        }
        qbmgs += 1;
        let rs = reachable_sets(g).unwrap();
        assert!(laminar(rs.r.values()));
        assert!(laminar(rs.rp.values()));
        let h = hierarchy_from_axioms(g).unwrap();
        assert!(laminar(h.blocks().iter()));
        let e = explain_2qbmg(g).unwrap();
        assert_eq!(qbmg_of(&e), *g);
        assert!(recognize_qbmg(g).unwrap().is_accepted());
    });
    assert!(qbmgs > 0);
}

#[test]
fn every_component_coloring_is_explained() {
    sweep(3, |g| {
        if !satisfies_all(g, &N123) {
            return;
        }
        let c = g.weak_components().len();
        if c > 4 {
            return;
        }
        for bits in 0..1u32 << c {
            let swap: Vec<bool> = (0..c).map(|i| bits >> i & 1 == 1).collect();
            let h = recolor_component_swap(g, &swap).unwrap();
            assert_eq!(h.edge_count(), g.edge_count());
            assert!(h.is_properly_colored());
            assert_eq!(qbmg_of(&explain_2qbmg(&h).unwrap()), h);
        }
    });
}

#[test]
fn n4_is_not_hereditary() {
    let mut found = None;
    sweep(3, |g| {
        if found.is_some() || !satisfies_all(g, &N123) || !satisfies(g, AxiomTag::N4) {
            return;
        }
        for v in g.vertices() {
            let keep: Set = g.vertices().iter().filter(|w| *w != v).cloned().collect();
            let h = g.induced_subgraph(&keep).unwrap();
            if h.used_colors().len() == 2 && !satisfies(&h, AxiomTag::N4) {
                assert!(explain_with_m(g).unwrap().is_some());
                assert!(explain_with_m(&h).unwrap().is_none());
                found = Some((g.clone(), v.clone()));
                return;
            }
        }
    });
    assert!(found.is_some());
}
