//! Brute-force ground truth on small leaf sets.
//!
//! Trees are handled as sorted lists of cluster bitmasks over leaf positions
//! (`bit i` = the i-th smallest leaf). Membership tests evaluate the best
//! match definition directly on clusters and share no code with the fast
//! recognition path.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredDigraph, VertexId};
use crate::lrt::is_least_resolved;
use crate::qbmg::{explain_over, explains_with_canonical_truncation, recognize_qbmg};
use crate::tree::{Hierarchy, NodeId, PhyloTree};
use crate::truncation::{Explanation, LeafColoring, TruncationMap};

/// Largest leaf set the enumerators accept.
pub const TREE_CAP: usize = 7;

/// Cluster masks of one tree, sorted ascending.
pub type Clusters = Vec<u32>;

fn insert_leaf(tree: &Clusters, k: usize, out: &mut Vec<Clusters>) {
    let bit = 1u32 << k;
    for &c in tree {
        if c.count_ones() >= 2 {
            // new child of the inner vertex c
            let mut t: Clusters = tree.iter().map(|&d| if d & c == c { d | bit } else { d }).collect();
            t.push(bit);
            t.sort_unstable();
            out.push(t);
        }
        // subdivide the edge above c (above the root: new root)
        let mut t: Clusters =
            tree.iter().map(|&d| if d & c == c && d != c { d | bit } else { d }).collect();
        t.push(c | bit);
        t.push(bit);
        t.sort_unstable();
        out.push(t);
    }
}

fn build_cluster_trees(n: usize) -> Vec<Clusters> {
    if n == 1 {
        return vec![vec![1]];
    }
    let mut out = Vec::new();
    for t in cluster_trees(n - 1).unwrap() {
        insert_leaf(t, n - 1, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

/// All phylogenetic trees on `n` leaves, in canonical (lexicographic
/// cluster list) order. Cached per `n`.
pub fn cluster_trees(n: usize) -> Result<&'static [Clusters]> {
    static CACHE: [OnceLock<Vec<Clusters>>; TREE_CAP + 1] = [const { OnceLock::new() }; TREE_CAP + 1];
    if n == 0 {
        return Err(Error::EmptyLeafSet);
    }
    if n > TREE_CAP {
        return Err(Error::CapExceeded { size: n, cap: TREE_CAP });
    }
    Ok(CACHE[n].get_or_init(|| build_cluster_trees(n)))
}

pub fn is_binary_clusters(t: &Clusters, n: usize) -> bool {
    t.len() == 2 * n - 1
}

pub fn tree_from_clusters(labels: &[VertexId], t: &Clusters) -> PhyloTree {
    let ground: BTreeSet<VertexId> = labels.iter().cloned().collect();
    let blocks = t
        .iter()
        .map(|&m| (0..labels.len()).filter(|i| m >> i & 1 == 1).map(|i| labels[i].clone()).collect())
        .collect();
    PhyloTree::from_hierarchy(&Hierarchy::new(ground, blocks).unwrap()).unwrap()
}

/// Every phylogenetic tree on `leaves`.
pub fn enumerate_trees(leaves: &BTreeSet<VertexId>) -> Result<Vec<PhyloTree>> {
    let labels: Vec<VertexId> = leaves.iter().cloned().collect();
    Ok(cluster_trees(labels.len())?.iter().map(|t| tree_from_clusters(&labels, t)).collect())
}

/// Lazy product enumeration of all truncation maps; the trivial map (all
/// limits at the root) comes first.
pub struct Truncations {
    fixed: TruncationMap,
    coords: Vec<(VertexId, Color, Vec<NodeId>)>,
    counter: Vec<usize>,
    done: bool,
}

impl Iterator for Truncations {
    type Item = TruncationMap;

    fn next(&mut self) -> Option<TruncationMap> {
        if self.done {
            return None;
        }
        let mut u = self.fixed.clone();
        for ((x, s, path), &i) in self.coords.iter().zip(&self.counter) {
            u.set(x.clone(), s.clone(), path[i]);
        }
        self.done = true;
        for (c, (_, _, path)) in self.counter.iter_mut().zip(&self.coords) {
            *c += 1;
            if *c < path.len() {
                self.done = false;
                break;
            }
            *c = 0;
        }
        Some(u)
    }
}

pub fn enumerate_truncations(tree: &PhyloTree, coloring: &LeafColoring) -> Truncations {
    let mut fixed = TruncationMap::new();
    let mut coords = Vec::new();
    for &l in tree.leaves() {
        let x = tree.label(l).unwrap();
        for s in coloring.palette() {
            if coloring.color(x) == Some(s) {
                fixed.set(x.clone(), s.clone(), l);
            } else {
                coords.push((x.clone(), s.clone(), tree.root_path(l)));
            }
        }
    }
    let counter = vec![0; coords.len()];
    Truncations { fixed, coords, counter, done: false }
}

/// `∏ (depth(x) + 1)` over off-color pairs.
pub fn truncation_count(tree: &PhyloTree, coloring: &LeafColoring) -> u128 {
    let off = coloring.palette().len().saturating_sub(1) as u32;
    tree.leaves().iter().map(|&l| (tree.depth(l) as u128 + 1).pow(off)).product()
}

/// Graph data by position: colors and out-neighbor masks.
struct Small {
    n: usize,
    k: usize,
    color: Vec<usize>,
    out: Vec<u32>,
}

impl Small {
    fn new(g: &ColoredDigraph, cap: usize) -> Result<Small> {
        let n = g.vertex_count();
        let cap = cap.min(TREE_CAP);
        if n > cap {
            return Err(Error::CapExceeded { size: n, cap });
        }
        if n == 0 {
            return Err(Error::EmptyLeafSet);
        }
        Ok(Small {
            n,
            k: g.palette().len(),
            color: (0..n).map(|i| g.color_index(i)).collect(),
            out: (0..n).map(|i| g.out_positions(i).iter().map(|&j| 1u32 << j).sum()).collect(),
        })
    }

    fn class(&self, s: usize) -> u32 {
        (0..self.n).filter(|&i| self.color[i] == s).map(|i| 1u32 << i).sum()
    }
}

/// Smallest cluster containing `both` (clusters sorted by size first).
fn lca(by_size: &[u32], both: u32) -> u32 {
    *by_size.iter().find(|&&m| m & both == both).unwrap()
}

/// For leaf `x` and color `s`: the neighbor set produced by each admissible
/// limit (clusters containing `x`, optionally only non-leaf ones).
fn options(g: &Small, by_size: &[u32], x: usize, s: usize, inner_only: bool) -> Vec<u32> {
    let xb = 1u32 << x;
    let class = g.class(s);
    let lcas: Vec<(usize, u32)> =
        (0..g.n).filter(|&y| class >> y & 1 == 1).map(|y| (y, lca(by_size, xb | 1 << y))).collect();
    // y is a best match if no same-colored y' has a strictly smaller lca
    let best: Vec<(usize, u32)> = lcas
        .iter()
        .filter(|(_, c)| !lcas.iter().any(|(_, d)| d & c == *d && d != c))
        .copied()
        .collect();
    by_size
        .iter()
        .filter(|&&c| c & xb != 0 && (!inner_only || c.count_ones() >= 2))
        .map(|&c| best.iter().filter(|(_, l)| l & c == *l).map(|(y, _)| 1u32 << y).sum())
        .collect()
}

fn by_size(t: &Clusters) -> Vec<u32> {
    let mut v = t.clone();
    v.sort_by_key(|m| (m.count_ones(), *m));
    v
}

/// Whether some truncation map on `t` explains `g`. Limits act on each
/// (leaf, color) pair separately, so the search runs per coordinate.
fn tree_explains(g: &Small, t: &Clusters, inner_only: bool) -> bool {
    let bs = by_size(t);
    (0..g.n).all(|x| {
        (0..g.k).filter(|&s| s != g.color[x]).all(|s| {
            let want = g.out[x] & g.class(s);
            options(g, &bs, x, s, inner_only).contains(&want)
        })
    })
}

/// The same question answered by enumerating whole truncation maps.
fn tree_explains_literal(g: &Small, t: &Clusters) -> bool {
    let bs = by_size(t);
    let coords: Vec<(usize, Vec<u32>)> = (0..g.n)
        .flat_map(|x| (0..g.k).filter(move |&s| s != g.color[x]).map(move |s| (x, s)))
        .map(|(x, s)| (x, options(g, &bs, x, s, false)))
        .collect();
    let mut counter = vec![0usize; coords.len()];
    loop {
        let mut out = vec![0u32; g.n];
        for ((x, opts), &i) in coords.iter().zip(&counter) {
            out[*x] |= opts[i];
        }
        if out == g.out {
            return true;
        }
        let mut carried = true;
        for (c, (_, opts)) in counter.iter_mut().zip(&coords) {
            *c += 1;
            if *c < opts.len() {
                carried = false;
                break;
            }
            *c = 0;
        }
        if carried {
            return false;
        }
    }
}

fn search(g: &ColoredDigraph, cap: usize, binary: bool, test: impl Fn(&Small, &Clusters) -> bool + Sync) -> Result<Option<usize>> {
    if !g.is_properly_colored() {
        Small::new(g, cap)?;
        return Ok(None);
    }
    let small = Small::new(g, cap)?;
    let trees = cluster_trees(small.n)?;
    Ok(trees
        .par_iter()
        .enumerate()
        .filter(|(_, t)| !binary || is_binary_clusters(t, small.n))
        .find_first(|(_, t)| test(&small, t))
        .map(|(i, _)| i))
}

/// Some `(T, σ, u)` with `qbmg(T, σ, u) = g` exists.
pub fn brute_force_is_qbmg(g: &ColoredDigraph, cap: usize) -> Result<bool> {
    Ok(search(g, cap, false, |s, t| tree_explains(s, t, false))?.is_some())
}

/// As [`brute_force_is_qbmg`] with binary trees only.
pub fn brute_force_is_binary_explainable(g: &ColoredDigraph, cap: usize) -> Result<bool> {
    Ok(search(g, cap, true, |s, t| tree_explains(s, t, false))?.is_some())
}

/// As [`brute_force_is_qbmg`], enumerating complete truncation maps instead
/// of single coordinates.
pub fn brute_force_is_qbmg_literal(g: &ColoredDigraph, cap: usize) -> Result<bool> {
    Ok(search(g, cap, false, tree_explains_literal)?.is_some())
}

/// Some explanation with every off-color limit strictly above its leaf.
pub fn brute_force_has_m_explanation(g: &ColoredDigraph, cap: usize) -> Result<bool> {
    Ok(search(g, cap, false, |s, t| tree_explains(s, t, true))?.is_some())
}

/// First explaining tree in canonical order.
pub fn brute_force_witness_tree(g: &ColoredDigraph, cap: usize) -> Result<Option<PhyloTree>> {
    let found = search(g, cap, false, |s, t| tree_explains(s, t, false))?;
    Ok(found.map(|i| tree_from_clusters(g.vertices(), &cluster_trees(g.vertex_count()).unwrap()[i])))
}

/// Colorings of `n` items with exactly `k` colors up to renaming, as
/// restricted growth strings.
pub fn colorings(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            if used == k {
                out.push(cur.clone());
            }
            return;
        }
        if k - used > n - cur.len() {
            return;
        }
        for c in 0..(used + 1).min(k) {
            cur.push(c);
            go(n, k, cur, used.max(c + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, &mut Vec::new(), 0, &mut out);
    out
}

/// Vertex names `v0, v1, …` padded to sort numerically.
pub fn vertex_names(n: usize) -> Vec<VertexId> {
    let w = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| VertexId::new(format!("v{i:0w$}"))).collect()
}

/// Color names `c0, c1, …`.
pub fn color_names(k: usize) -> Vec<Color> {
    (0..k).map(|i| Color::new(format!("c{i}"))).collect()
}

/// Candidate edges of a coloring: ordered pairs with different colors.
pub fn proper_pairs(coloring: &[usize]) -> Vec<(usize, usize)> {
    let n = coloring.len();
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| coloring[a] != coloring[b])
        .collect()
}

/// The graph on `vertex_names(n)` with the edges of `pairs` selected by
/// `mask`.
pub fn graph_from_mask(coloring: &[usize], pairs: &[(usize, usize)], mask: u64) -> ColoredDigraph {
    let names = vertex_names(coloring.len());
    let k = coloring.iter().max().map_or(0, |m| m + 1);
    let colors = color_names(k);
    ColoredDigraph::new(
        colors.iter().cloned(),
        names.iter().cloned().zip(coloring.iter().map(|&c| colors[c].clone())),
        pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(a, b))| (names[a].clone(), names[b].clone())),
    )
    .unwrap()
}

/// Every properly colored digraph on `n` vertices with exactly `k` colors,
/// colorings taken up to renaming.
pub fn properly_colored_digraphs(n: usize, k: usize) -> impl Iterator<Item = ColoredDigraph> {
    colorings(n, k).into_iter().flat_map(|col| {
        let pairs = proper_pairs(&col);
        (0..1u64 << pairs.len()).map(move |m| graph_from_mask(&col, &pairs, m))
    })
}

/// Canonical string of the unlabeled shape.
pub fn unlabeled_shape(tree: &PhyloTree) -> String {
    fn go(t: &PhyloTree, v: NodeId) -> String {
        if t.is_leaf(v) {
            return "*".into();
        }
        let mut parts: Vec<String> = t.children(v).iter().map(|&c| go(t, c)).collect();
        parts.sort();
        format!("({})", parts.join(","))
    }
    go(tree, tree.root())
}

/// Least-resolved explanations (canonical truncation) over every tree on
/// the vertex set.
pub fn least_resolved_explanations(g: &ColoredDigraph) -> Result<Vec<Explanation>> {
    let leaves: BTreeSet<VertexId> = g.vertices().iter().cloned().collect();
    let mut out = Vec::new();
    for t in enumerate_trees(&leaves)? {
        if explains_with_canonical_truncation(&t, g)? {
            let e = explain_over(t, g)?;
            if is_least_resolved(&e) {
                out.push(e);
            }
        }
    }
    Ok(out)
}

/// Smallest two-colored qBMG (by vertex count, then coloring, then edge
/// mask) with two least-resolved explanations of different unlabeled shape.
pub fn search_lrt_not_unique(max_n: usize) -> Result<Option<(ColoredDigraph, Explanation, Explanation)>> {
    for n in 2..=max_n {
        for col in colorings(n, 2) {
            let pairs = proper_pairs(&col);
            for m in 0..1u64 << pairs.len() {
                let g = graph_from_mask(&col, &pairs, m);
                if !recognize_qbmg(&g)?.is_accepted() {
                    continue;
                }
                let lrts = least_resolved_explanations(&g)?;
                for (i, a) in lrts.iter().enumerate() {
                    let sa = unlabeled_shape(a.tree());
                    if let Some(b) = lrts[i + 1..].iter().find(|b| unlabeled_shape(b.tree()) != sa) {
                        return Ok(Some((g, a.clone(), b.clone())));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_newick;

    /// Phylogenetic trees on n labeled leaves, counted independently: a tree
    /// on m >= 2 leaves is a root over a partition into at least two blocks,
    /// each carrying a tree.
    fn count_trees(n: usize) -> u64 {
        let binom = |a: usize, b: usize| -> u64 {
            (0..b).fold(1u64, |acc, i| acc * (a - i) as u64 / (i + 1) as u64)
        };
        let mut t = vec![0u64; n + 1];
        // f[m][j]: partitions of m leaves into j blocks, each with a tree
        let mut f = vec![vec![0u64; n + 1]; n + 1];
        f[0][0] = 1;
        for m in 1..=n {
            for j in 2..=m {
                // the block holding the first leaf has size s < m
                f[m][j] = (1..m).map(|s| binom(m - 1, s - 1) * t[s] * f[m - s][j - 1]).sum();
            }
            t[m] = if m == 1 { 1 } else { (2..=m).map(|j| f[m][j]).sum() };
            f[m][1] = t[m];
        }
        t[n]
    }

    #[test]
    fn tree_counts() {
        let expected = [1u64, 1, 4, 26, 236, 2752, 39208];
        for n in 1..=7 {
            assert_eq!(count_trees(n), expected[n - 1]);
            assert_eq!(cluster_trees(n).unwrap().len() as u64, expected[n - 1], "n={n}");
        }
        assert!(matches!(cluster_trees(8), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn trees_are_valid_and_distinct() {
        let leaves: BTreeSet<VertexId> = ["a", "b", "c", "d"].into_iter().map(VertexId::new).collect();
        let trees = enumerate_trees(&leaves).unwrap();
        let distinct: BTreeSet<String> = trees.iter().map(|t| t.shape_string()).collect();
        assert_eq!(distinct.len(), 26);
        let binary = cluster_trees(4).unwrap().iter().filter(|t| is_binary_clusters(t, 4)).count();
        assert_eq!(binary, 15);
    }

    #[test]
    fn truncation_enumeration() {
        let t = parse_newick("(a,b);").unwrap().tree;
        let col = LeafColoring::from_pairs(&[("a", "1"), ("b", "2")]);
        let maps: Vec<TruncationMap> = enumerate_truncations(&t, &col).collect();
        assert_eq!(maps.len(), 4);
        assert_eq!(maps[0], crate::truncation::trivial_truncation(&t, &col));
        let t = parse_newick("((a,b),c,(d,e));").unwrap().tree;
        let col = LeafColoring::from_pairs(&[("a", "1"), ("b", "2"), ("c", "3"), ("d", "1"), ("e", "2")]);
        assert_eq!(enumerate_truncations(&t, &col).count() as u128, truncation_count(&t, &col));
        assert_eq!(truncation_count(&t, &col), 3u128.pow(8) * 2u128.pow(2));
    }

    #[test]
    fn colorings_counted() {
        // Stirling numbers of the second kind
        assert_eq!(colorings(5, 2).len(), 15);
        assert_eq!(colorings(5, 3).len(), 25);
        assert_eq!(colorings(4, 4).len(), 1);
        assert_eq!(colorings(3, 4).len(), 0);
    }

    #[test]
    fn small_oracle_cases() {
        let hourglass = ColoredDigraph::from_lists(
            &[("x", "1"), ("x'", "1"), ("y", "2"), ("y'", "2")],
            &[("x", "y"), ("y", "x"), ("x'", "y'"), ("y'", "x'"), ("x", "y'"), ("y", "x'")],
        )
        .unwrap();
        assert!(brute_force_is_qbmg(&hourglass, 7).unwrap());
        assert!(brute_force_is_qbmg_literal(&hourglass, 7).unwrap());
        assert!(!brute_force_is_binary_explainable(&hourglass, 7).unwrap());
        let cherry = ColoredDigraph::from_lists(&[("a", "1"), ("b", "2")], &[("a", "b"), ("b", "a")]).unwrap();
        assert!(brute_force_is_binary_explainable(&cherry, 7).unwrap());
        let cycle = ColoredDigraph::from_lists(
            &[("a", "1"), ("b", "2"), ("c", "3")],
            &[("a", "b"), ("b", "c"), ("c", "a")],
        )
        .unwrap();
        assert_eq!(brute_force_is_qbmg(&cycle, 7).unwrap(), recognize_qbmg(&cycle).unwrap().is_accepted());
        assert!(matches!(brute_force_is_qbmg(&hourglass, 3), Err(Error::CapExceeded { size: 4, cap: 3 })));
    }
}
