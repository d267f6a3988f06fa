//! Forward construction and recognition of (quasi-)best match graphs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredDigraph, VertexId};
use crate::tree::{NodeId, PhyloTree};
use crate::triples::{graph_partition_tree, GraphTriples};
use crate::truncation::{
    canonical_truncation, trivial_truncation, Explanation, LeafColoring, TruncationMap,
};

/// Why a recognizer rejected its input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    ImproperColoring,
    InconsistentTriples,
    ColorSink,
    InconsistentBinaryTriples,
}

impl Rejection {
    pub fn reason(self) -> &'static str {
        match self {
            Rejection::ImproperColoring => "improper coloring",
            Rejection::InconsistentTriples => "inconsistent triples",
            Rejection::ColorSink => "color sink",
            Rejection::InconsistentBinaryTriples => "inconsistent binary triples",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accepted(Explanation),
    Rejected(Rejection),
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted(_))
    }

    pub fn explanation(&self) -> Option<&Explanation> {
        match self {
            Verdict::Accepted(e) => Some(e),
            Verdict::Rejected(_) => None,
        }
    }

    pub fn into_explanation(self) -> Option<Explanation> {
        match self {
            Verdict::Accepted(e) => Some(e),
            Verdict::Rejected(_) => None,
        }
    }
}

/// Graph whose edges `xy` are the best matches `y` of `x` whose lca with `x`
/// lies at or below `limit(x, σ(y))`.
fn best_match_graph(
    tree: &PhyloTree,
    coloring: &LeafColoring,
    limit: impl Fn(&VertexId, &Color) -> NodeId,
) -> ColoredDigraph {
    let palette: Vec<Color> = coloring.palette().iter().cloned().collect();
    let k = palette.len();
    let vertices: Vec<VertexId> = coloring.colors().keys().cloned().collect();
    let color_of_pos: Vec<usize> = coloring
        .colors()
        .values()
        .map(|c| palette.binary_search(c).unwrap())
        .collect();
    let n_nodes = tree.node_count();
    let mut pos = vec![usize::MAX; n_nodes];
    for (i, v) in vertices.iter().enumerate() {
        pos[tree.leaf(v).unwrap().index()] = i;
    }
    // has[v * k + s]: T(v) has a leaf of color s
    let mut has = vec![false; n_nodes * k];
    for v in (0..n_nodes).rev() {
        let node = NodeId(v);
        if tree.is_leaf(node) {
            has[v * k + color_of_pos[pos[v]]] = true;
        } else {
            for &c in tree.children(node) {
                for s in 0..k {
                    has[v * k + s] |= has[c.index() * k + s];
                }
            }
        }
    }
    let mut out = vec![Vec::new(); vertices.len()];
    for (i, x) in vertices.iter().enumerate() {
        let leaf = tree.leaf(x).unwrap();
        for s in 0..k {
            if s == color_of_pos[i] {
                continue;
            }
            // deepest ancestor whose subtree holds color s: all its color-s
            // leaves are best matches and share the same lca with x
            let mut a = leaf;
            while !has[a.index() * k + s] {
                match tree.parent(a) {
                    Some(p) => a = p,
                    None => break,
                }
            }
            if !has[a.index() * k + s] {
                continue;
            }
            let u = limit(x, &palette[s]);
            if tree.depth(u) > tree.depth(a) {
                continue;
            }
            out[i].extend(
                tree.subtree_leaves(a)
                    .iter()
                    .map(|l| pos[l.index()])
                    .filter(|&y| color_of_pos[y] == s),
            );
        }
    }
    ColoredDigraph::from_positions(vertices, palette, color_of_pos, out)
}

/// The qBMG `qbmg(T, σ, u)`.
pub fn qbmg_of(e: &Explanation) -> ColoredDigraph {
    best_match_graph(e.tree(), e.coloring(), |x, s| e.limit(x, s).unwrap())
}

/// The best match graph of `(T, σ)`.
pub fn bmg_of(tree: &PhyloTree, coloring: &LeafColoring) -> Result<ColoredDigraph> {
    let u = trivial_truncation(tree, coloring);
    let e = Explanation::new(tree.clone(), coloring.clone(), u)?;
    Ok(best_match_graph(e.tree(), e.coloring(), |_, _| tree.root()))
}

/// Explanation of `g` over `tree` with the canonical ρ/x truncation,
/// verified by reconstruction.
pub(crate) fn explain_over(tree: PhyloTree, g: &ColoredDigraph) -> Result<Explanation> {
    let coloring = LeafColoring::of_graph(g);
    let u = canonical_truncation(&tree, &coloring, g)?;
    let e = Explanation::new(tree, coloring, u)?;
    let h = qbmg_of(&e);
    if h != *g {
        return Err(Error::Verification(format!(
            "explanation over {:?} does not reproduce the graph",
            e.tree()
        )));
    }
    Ok(e)
}

/// Whether the canonical ρ/x truncation on `tree` explains `g`.
pub fn explains_with_canonical_truncation(tree: &PhyloTree, g: &ColoredDigraph) -> Result<bool> {
    let coloring = LeafColoring::of_graph(g);
    let u = canonical_truncation(tree, &coloring, g)?;
    let e = Explanation::new(tree.clone(), coloring, u)?;
    Ok(qbmg_of(&e) == *g)
}

fn tree_from_graph(g: &ColoredDigraph, mode: GraphTriples) -> Result<Option<PhyloTree>> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyLeafSet);
    }
    match graph_partition_tree(g, mode) {
        Some(raw) => Ok(Some(PhyloTree::from_raw(&raw)?.0)),
        None => Ok(None),
    }
}

/// Recognizes qBMGs: MTT on the informative and forbidden triples, then the
/// canonical truncation.
pub fn recognize_qbmg(g: &ColoredDigraph) -> Result<Verdict> {
    if !g.is_properly_colored() {
        return Ok(Verdict::Rejected(Rejection::ImproperColoring));
    }
    match tree_from_graph(g, GraphTriples::Mixed)? {
        Some(tree) => Ok(Verdict::Accepted(explain_over(tree, g)?)),
        None => Ok(Verdict::Rejected(Rejection::InconsistentTriples)),
    }
}

/// Recognizes BMGs; accepted graphs come with the trivial truncation.
pub fn recognize_bmg(g: &ColoredDigraph) -> Result<Verdict> {
    if !g.is_properly_colored() {
        return Ok(Verdict::Rejected(Rejection::ImproperColoring));
    }
    if !g.is_color_sink_free() {
        return Ok(Verdict::Rejected(Rejection::ColorSink));
    }
    let Some(tree) = tree_from_graph(g, GraphTriples::Mixed)? else {
        return Ok(Verdict::Rejected(Rejection::InconsistentTriples));
    };
    let coloring = LeafColoring::of_graph(g);
    let u = trivial_truncation(&tree, &coloring);
    let e = Explanation::new(tree, coloring, u)?;
    if qbmg_of(&e) != *g {
        return Err(Error::Verification("trivial truncation does not reproduce the BMG".into()));
    }
    Ok(Verdict::Accepted(e))
}

/// Binary-explainability: BUILD on `R^B`, refined to a binary tree.
pub(crate) fn recognize_binary(g: &ColoredDigraph) -> Result<Verdict> {
    if !g.is_properly_colored() {
        return Ok(Verdict::Rejected(Rejection::ImproperColoring));
    }
    match tree_from_graph(g, GraphTriples::Binary)? {
        Some(tree) => {
            let tree = crate::binary::binary_refine(&tree);
            let e = explain_over(tree, g)?;
            if !e.tree().is_binary() {
                return Err(Error::Verification("refined tree is not binary".into()));
            }
            Ok(Verdict::Accepted(e))
        }
        None => Ok(Verdict::Rejected(Rejection::InconsistentBinaryTriples)),
    }
}

fn check_same_frame(a: &ColoredDigraph, b: &ColoredDigraph) -> Result<()> {
    if a.vertices() != b.vertices() {
        return Err(Error::InvalidParameter("graphs have different vertex sets".into()));
    }
    for x in a.vertices() {
        if a.color_of(x)? != b.color_of(x)? {
            return Err(Error::InvalidParameter(format!("graphs color `{x}` differently")));
        }
    }
    Ok(())
}

/// `N_G(x,s) = N_G̃(x,s)` or `N_G(x,s) = ∅` for every vertex and color.
pub fn is_associated(gtilde: &ColoredDigraph, g: &ColoredDigraph) -> Result<bool> {
    check_same_frame(gtilde, g)?;
    for x in g.vertices() {
        for s in g.used_colors() {
            let n = g.out_neighbors(x, Some(&s))?;
            if !n.is_empty() && n != gtilde.out_neighbors(x, Some(&s))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn fresh_color(base: &str, taken: &BTreeSet<Color>) -> Color {
    let mut name = base.to_string();
    while taken.contains(&Color::new(&name)) {
        name.push('\'');
    }
    Color::new(name)
}

/// Recolors the class of `s`: `first` gets color `s'`, `second` gets `s''`.
/// Edges are unchanged and the result is again a qBMG.
pub fn split_color(
    g: &ColoredDigraph,
    s: &Color,
    first: &BTreeSet<VertexId>,
    second: &BTreeSet<VertexId>,
) -> Result<ColoredDigraph> {
    let class: BTreeSet<VertexId> = g
        .vertices()
        .iter()
        .filter(|x| g.color_of(x).map(|c| c == s).unwrap_or(false))
        .cloned()
        .collect();
    if class.is_empty() {
        return Err(Error::InvalidSplit(format!("no vertex has color `{s}`")));
    }
    if first.is_empty() || second.is_empty() {
        return Err(Error::InvalidSplit("both parts must be non-empty".into()));
    }
    let union: BTreeSet<VertexId> = first.union(second).cloned().collect();
    if !first.is_disjoint(second) || union != class {
        return Err(Error::InvalidSplit(format!("parts do not partition the class of `{s}`")));
    }
    if !recognize_qbmg(g)?.is_accepted() {
        return Err(Error::NotQbmg);
    }
    let mut taken: BTreeSet<Color> = g.palette().iter().cloned().collect();
    let c1 = fresh_color(&format!("{s}'"), &taken);
    taken.insert(c1.clone());
    let c2 = fresh_color(&format!("{s}''"), &taken);
    let palette: Vec<Color> = g
        .palette()
        .iter()
        .filter(|c| *c != s)
        .cloned()
        .chain([c1.clone(), c2.clone()])
        .collect();
    Ok(g.recolored(palette, |x| {
        if first.contains(x) {
            c1.clone()
        } else if second.contains(x) {
            c2.clone()
        } else {
            g.color_of(x).unwrap().clone()
        }
    }))
}

/// Truncation map built from explicit `(leaf, color, node)` choices on top
/// of the trivial map.
pub fn truncation_with(
    tree: &PhyloTree,
    coloring: &LeafColoring,
    overrides: &[(VertexId, Color, NodeId)],
) -> TruncationMap {
    let mut u = trivial_truncation(tree, coloring);
    for (x, s, n) in overrides {
        u.set(x.clone(), s.clone(), *n);
    }
    u
}
