//! Essential edges and least-resolved explanations.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::ColoredDigraph;
use crate::io::parse_newick;
use crate::qbmg::{explain_over, qbmg_of};
use crate::tree::{PhyloTree, TreeEdge};
use crate::truncation::Explanation;

/// Edges of `tree` that no explanation of `g` over the contracted tree can
/// do without: outer edges, and inner edges `vw` with some `xy ∈ E(G)`,
/// `lca(x,y) = w` and a leaf of color `σ(y)` in `L(T(v)) \ L(T(w))`.
pub fn essential_edges_for(tree: &PhyloTree, g: &ColoredDigraph) -> Result<BTreeSet<TreeEdge>> {
    let k = g.palette().len();
    let nodes = tree.node_count();
    // count[v * k + s]: color-s leaves below v
    let mut count = vec![0usize; nodes * k];
    for v in (0..nodes).rev() {
        let node = crate::tree::NodeId(v);
        match tree.label(node) {
            Some(x) => {
                let i = g.position(x).ok_or_else(|| Error::UnknownVertex(x.to_string()))?;
                count[v * k + g.color_index(i)] += 1;
            }
            None => {
                for &c in tree.children(node) {
                    for s in 0..k {
                        count[v * k + s] += count[c.index() * k + s];
                    }
                }
            }
        }
    }
    let mut out: BTreeSet<TreeEdge> = tree.edges().into_iter().filter(|e| tree.is_leaf(e.child)).collect();
    let leaf = |i: usize| tree.leaf_node(&g.vertices()[i]);
    for x in 0..g.vertex_count() {
        let lx = leaf(x)?;
        for &y in g.out_positions(x) {
            let w = tree.lca(lx, leaf(y)?);
            let Some(v) = tree.parent(w) else { continue };
            let s = g.color_index(y);
            if count[v.index() * k + s] > count[w.index() * k + s] {
                out.insert(TreeEdge { parent: v, child: w });
            }
        }
    }
    Ok(out)
}

/// Essential edges of an explanation with respect to the graph it explains.
pub fn essential_edges(e: &Explanation) -> BTreeSet<TreeEdge> {
    essential_edges_for(e.tree(), &qbmg_of(e)).expect("explanation covers its own graph")
}

/// No edge is redundant.
pub fn is_least_resolved(e: &Explanation) -> bool {
    essential_edges(e).len() == e.tree().node_count() - 1
}

/// Contracts redundant inner edges, smallest first, rebuilding the
/// canonical truncation after each step, until none is left.
pub fn minimize(e: &Explanation) -> Result<Explanation> {
    let g = qbmg_of(e);
    let mut cur = e.clone();
    loop {
        let essential = essential_edges_for(cur.tree(), &g)?;
        let Some(edge) = cur.tree().inner_edges().into_iter().filter(|x| !essential.contains(x)).min() else {
            return Ok(cur);
        };
        let contracted = cur.tree().contract_edge(edge)?;
        // explain_over verifies that the graph is preserved
        cur = explain_over(contracted, &g)?;
    }
}

/// A two-colored qBMG with two least-resolved explanations over trees of
/// different shape: the smallest one reported by
/// [`crate::oracle::search_lrt_not_unique`].
pub fn lrt_not_unique_witness() -> (ColoredDigraph, Explanation, Explanation) {
    let g = ColoredDigraph::from_lists(
        &[("v0", "c0"), ("v1", "c0"), ("v2", "c1"), ("v3", "c1")],
        &[("v0", "v2")],
    )
    .unwrap();
    let explain = |nwk: &str| explain_over(parse_newick(nwk).unwrap().tree, &g).unwrap();
    let a = explain("((v0,v2),v1,v3);");
    let b = explain("((v0,v1,v2),v3);");
    (g, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_newick;
    use crate::oracle::{search_lrt_not_unique, unlabeled_shape};
    use crate::qbmg::recognize_qbmg;

    fn t(s: &str) -> PhyloTree {
        parse_newick(s).unwrap().tree
    }

    #[test]
    fn witness_matches_search() {
        let (g, a, b) = lrt_not_unique_witness();
        let (g2, a2, b2) = search_lrt_not_unique(5).unwrap().unwrap();
        assert_eq!((g, a.clone(), b.clone()), (g2, a2, b2));
        assert!(is_least_resolved(&a) && is_least_resolved(&b));
        assert_ne!(unlabeled_shape(a.tree()), unlabeled_shape(b.tree()));
    }

    #[test]
    fn outer_edges_always_essential() {
        let g = ColoredDigraph::from_lists(&[("a", "1"), ("b", "2"), ("c", "1")], &[]).unwrap();
        let e = explain_over(t("(a,b,c);"), &g).unwrap();
        assert_eq!(essential_edges(&e).len(), 3);
        assert!(is_least_resolved(&e));
        // the cherry is not needed for an edgeless graph
        let e = explain_over(t("((a,b),c);"), &g).unwrap();
        assert!(!is_least_resolved(&e));
        let m = minimize(&e).unwrap();
        assert_eq!(m.tree().shape_string(), "(a,b,c)");
        assert_eq!(minimize(&m).unwrap(), m);
    }

    #[test]
    fn recognized_trees_are_least_resolved() {
        let g = ColoredDigraph::from_lists(
            &[("x", "A"), ("y", "B"), ("y'", "B"), ("z", "C"), ("z'", "C")],
            &[("x", "z"), ("x", "y"), ("x", "y'"), ("y'", "z"), ("z'", "y"), ("z'", "y'")],
        )
        .unwrap();
        let e = recognize_qbmg(&g).unwrap().into_explanation().unwrap();
        assert!(is_least_resolved(&e));
        assert_eq!(minimize(&e).unwrap(), e);
    }
}
