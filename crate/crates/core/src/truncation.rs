//! Leaf colorings, truncation maps and explanations.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredDigraph, VertexId};
use crate::tree::{NodeId, PhyloTree};

/// Leaf coloring together with the color set `S` it draws from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafColoring {
    colors: BTreeMap<VertexId, Color>,
    palette: BTreeSet<Color>,
}

impl LeafColoring {
    /// The palette is `palette` plus every color in use.
    pub fn new(colors: BTreeMap<VertexId, Color>, palette: impl IntoIterator<Item = Color>) -> Self {
        let mut palette: BTreeSet<Color> = palette.into_iter().collect();
        palette.extend(colors.values().cloned());
        LeafColoring { colors, palette }
    }

    pub fn from_pairs(pairs: &[(&str, &str)]) -> Self {
        Self::new(pairs.iter().map(|(v, c)| (VertexId::new(v), Color::new(c))).collect(), [])
    }

    /// Coloring and palette of a graph.
    pub fn of_graph(g: &ColoredDigraph) -> Self {
        let colors = g
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), g.palette()[g.color_index(i)].clone()))
            .collect();
        Self::new(colors, g.palette().iter().cloned())
    }

    pub fn color(&self, x: &VertexId) -> Option<&Color> {
        self.colors.get(x)
    }

    pub fn colors(&self) -> &BTreeMap<VertexId, Color> {
        &self.colors
    }

    pub fn palette(&self) -> &BTreeSet<Color> {
        &self.palette
    }

    /// Coloring of `keep` with the same palette.
    pub fn restrict(&self, keep: &BTreeSet<VertexId>) -> LeafColoring {
        LeafColoring {
            colors: self.colors.iter().filter(|(v, _)| keep.contains(*v)).map(|(v, c)| (v.clone(), c.clone())).collect(),
            palette: self.palette.clone(),
        }
    }

    fn check_tree(&self, tree: &PhyloTree) -> Result<()> {
        let leaves = tree.leaf_labels();
        if let Some(x) = leaves.iter().find(|x| !self.colors.contains_key(*x)) {
            return Err(Error::InvalidColoring(format!("leaf `{x}` has no color")));
        }
        if let Some(x) = self.colors.keys().find(|x| !leaves.contains(*x)) {
            return Err(Error::InvalidColoring(format!("`{x}` is not a leaf of the tree")));
        }
        Ok(())
    }
}

/// Limits `u(x, s)` keyed by leaf label and color.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TruncationMap {
    limits: BTreeMap<(VertexId, Color), NodeId>,
}

impl TruncationMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, x: &VertexId, s: &Color) -> Option<NodeId> {
        // the owned key is only needed for the lookup
        self.limits.get(&(x.clone(), s.clone())).copied()
    }

    pub fn set(&mut self, x: VertexId, s: Color, node: NodeId) {
        self.limits.insert((x, s), node);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexId, &Color, NodeId)> {
        self.limits.iter().map(|((x, s), n)| (x, s, *n))
    }

    pub fn len(&self) -> usize {
        self.limits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.limits.is_empty()
    }
}

/// `(T, σ, u)`: a tree, its leaf coloring and a truncation map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Explanation {
    tree: PhyloTree,
    coloring: LeafColoring,
    truncation: TruncationMap,
}

impl Explanation {
    /// Checks that `σ` colors exactly the leaves and that `u` is total on
    /// `L × S`, with every limit on the root path of its leaf and
    /// `u(x, σ(x)) = x`.
    pub fn new(tree: PhyloTree, coloring: LeafColoring, truncation: TruncationMap) -> Result<Self> {
        coloring.check_tree(&tree)?;
        let expected = tree.leaf_count() * coloring.palette.len();
        if truncation.len() != expected {
            return Err(Error::InvalidTruncation(format!(
                "expected {expected} limits, found {}",
                truncation.len()
            )));
        }
        for ((x, s), &u) in &truncation.limits {
            let leaf = tree.leaf(x).ok_or_else(|| {
                Error::InvalidTruncation(format!("`{x}` is not a leaf of the tree"))
            })?;
            if !coloring.palette.contains(s) {
                return Err(Error::InvalidTruncation(format!("color `{s}` is not in the palette")));
            }
            if !tree.contains_node(u) || !tree.is_ancestor_or_self(u, leaf) {
                return Err(Error::InvalidTruncation(format!(
                    "u({x},{s}) is not on the path from the root to `{x}`"
                )));
            }
            if coloring.colors[x] == *s && u != leaf {
                return Err(Error::InvalidTruncation(format!("u({x},{s}) must be the leaf itself")));
            }
        }
        Ok(Explanation { tree, coloring, truncation })
    }

    pub fn tree(&self) -> &PhyloTree {
        &self.tree
    }

    pub fn coloring(&self) -> &LeafColoring {
        &self.coloring
    }

    pub fn truncation(&self) -> &TruncationMap {
        &self.truncation
    }

    pub fn into_parts(self) -> (PhyloTree, LeafColoring, TruncationMap) {
        (self.tree, self.coloring, self.truncation)
    }

    /// `u(x, s)`.
    pub fn limit(&self, x: &VertexId, s: &Color) -> Option<NodeId> {
        self.truncation.get(x, s)
    }

    /// `(M)`: `x ≺ u(x, r)` for every leaf `x` and color `r ≠ σ(x)`.
    pub fn limits_avoid_leaves(&self) -> bool {
        self.truncation.iter().all(|(x, s, u)| self.coloring.colors[x] == *s || !self.tree.is_leaf(u))
    }
}

fn fill(
    tree: &PhyloTree,
    coloring: &LeafColoring,
    mut pick: impl FnMut(&VertexId, &Color) -> NodeId,
) -> TruncationMap {
    let mut u = TruncationMap::new();
    for &l in tree.leaves() {
        let x = tree.label(l).unwrap();
        for s in &coloring.palette {
            let node = if coloring.colors.get(x) == Some(s) { l } else { pick(x, s) };
            u.set(x.clone(), s.clone(), node);
        }
    }
    u
}

/// `u(x, s) = ρ` for `s ≠ σ(x)`.
pub fn trivial_truncation(tree: &PhyloTree, coloring: &LeafColoring) -> TruncationMap {
    fill(tree, coloring, |_, _| tree.root())
}

/// `u(x, s) = ρ` when `N_G(x, s) ≠ ∅`, otherwise `x`.
pub fn canonical_truncation(
    tree: &PhyloTree,
    coloring: &LeafColoring,
    g: &ColoredDigraph,
) -> Result<TruncationMap> {
    let mut has = BTreeSet::new();
    for (x, y) in g.edges() {
        has.insert((x.clone(), g.color_of(y)?.clone()));
    }
    for &l in tree.leaves() {
        g.position(tree.label(l).unwrap())
            .ok_or_else(|| Error::UnknownVertex(tree.label(l).unwrap().to_string()))?;
    }
    Ok(fill(tree, coloring, |x, s| {
        if has.contains(&(x.clone(), s.clone())) {
            tree.root()
        } else {
            tree.leaf(x).unwrap()
        }
    }))
}

/// Restriction of an explanation of `g` to all leaves but one.
///
/// The tree is restricted and the limits follow the deletion rule: a limit
/// at the suppressed parent `w` of the removed leaf `v` moves to the sibling
/// `v*`; it is kept when its color differs from `σ(v)` or when `x` keeps a
/// neighbor of that color; otherwise it drops to `x`.
pub fn restrict_truncation(
    e: &Explanation,
    g: &ColoredDigraph,
    keep: &BTreeSet<VertexId>,
) -> Result<Explanation> {
    let tree = &e.tree;
    let leaves = tree.leaf_labels();
    if keep.len() + 1 != leaves.len() || !keep.is_subset(&leaves) {
        return Err(Error::InvalidParameter(
            "restriction must remove exactly one leaf of the tree".into(),
        ));
    }
    let v = leaves.difference(keep).next().unwrap().clone();
    let vn = tree.leaf(&v).unwrap();
    let w = tree.parent(vn).ok_or(Error::EmptyLeafSet)?;
    let (t2, map) = tree.restrict_with_map(keep)?;
    let sibling = match tree.children(w) {
        [a, b] if map[w.index()].is_none() => Some(if *a == vn { *b } else { *a }),
        _ => None,
    };
    let color_v = e.coloring.colors[&v].clone();
    let mut u2 = TruncationMap::new();
    for x in keep {
        let xi = g.position(x).ok_or_else(|| Error::UnknownVertex(x.to_string()))?;
        let vi = g.position(&v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
        for s in &e.coloring.palette {
            let u = e.truncation.get(x, s).unwrap();
            let node = match sibling {
                Some(vs) if u == w => map[vs.index()].unwrap(),
                _ => {
                    let si = g.color_pos(s)?;
                    let keeps_neighbor = g
                        .out_positions(xi)
                        .iter()
                        .any(|&y| y != vi && g.color_index(y) == si);
                    if *s != color_v || keeps_neighbor {
                        map[u.index()].ok_or_else(|| {
                            Error::Verification("limit maps to a removed vertex".into())
                        })?
                    } else {
                        t2.leaf(x).unwrap()
                    }
                }
            };
            u2.set(x.clone(), s.clone(), node);
        }
    }
    Explanation::new(t2, e.coloring.restrict(keep), u2)
}
