//! Vertex-colored simple digraphs.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

macro_rules! token {
    ($(#[$m:meta])* $name:ident) => {
        $(#[$m])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(Arc<str>);

        impl $name {
            pub fn new(s: impl AsRef<str>) -> Self {
                $name(Arc::from(s.as_ref()))
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                $name::new(s)
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                $name(Arc::from(s))
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{:?}", &*self.0)
            }
        }
    };
}

token!(
    /// Vertex (and leaf) identifier. Ordered by its string.
    VertexId
);
token!(
    /// Color identifier.
    Color
);

/// How [`disjoint_union`] treats vertex ids shared between inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdPolicy {
    /// Keep ids; a shared id is an error.
    Keep,
    /// Prefix every id with the position of its graph, `"{i}:{id}"`.
    Namespace,
}

/// Simple digraph with a total vertex coloring.
///
/// Vertices are stored in id order, so a vertex *position* (its index in
/// [`ColoredDigraph::vertices`]) orders like its id.
#[derive(Clone)]
pub struct ColoredDigraph {
    vertices: Vec<VertexId>,
    palette: Vec<Color>,
    color_idx: Vec<usize>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    index: HashMap<VertexId, usize>,
}

impl PartialEq for ColoredDigraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.palette == other.palette
            && self.color_idx == other.color_idx
            && self.out == other.out
    }
}

impl Eq for ColoredDigraph {}

impl fmt::Debug for ColoredDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColoredDigraph")
            .field(
                "vertices",
                &self
                    .vertices
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (v, &self.palette[self.color_idx[i]]))
                    .collect::<Vec<_>>(),
            )
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl ColoredDigraph {
    /// Builds a graph. The palette is `palette` plus every vertex color.
    pub fn new(
        palette: impl IntoIterator<Item = Color>,
        vertices: impl IntoIterator<Item = (VertexId, Color)>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let mut vs: Vec<(VertexId, Color)> = vertices.into_iter().collect();
        vs.sort();
        for w in vs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateVertex(w[0].0.to_string()));
            }
        }
        let mut pal: BTreeSet<Color> = palette.into_iter().collect();
        pal.extend(vs.iter().map(|(_, c)| c.clone()));
        let palette: Vec<Color> = pal.into_iter().collect();
        let color_idx = vs
            .iter()
            .map(|(_, c)| palette.binary_search(c).expect("palette covers vertex colors"))
            .collect();
        let vertices: Vec<VertexId> = vs.into_iter().map(|(v, _)| v).collect();
        let index: HashMap<VertexId, usize> =
            vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut out = vec![Vec::new(); vertices.len()];
        for (t, h) in edges {
            let ti = *index.get(&t).ok_or_else(|| Error::UnknownVertex(t.to_string()))?;
            let hi = *index.get(&h).ok_or_else(|| Error::UnknownVertex(h.to_string()))?;
            if ti == hi {
                return Err(Error::Loop(t.to_string()));
            }
            out[ti].push(hi);
        }
        for (i, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(
                    vertices[i].to_string(),
                    vertices[w[0]].to_string(),
                ));
            }
        }
        Ok(Self::assemble(vertices, palette, color_idx, out, Some(index)))
    }

    /// Convenience constructor from string pairs `(id, color)` and `(tail, head)`.
    pub fn from_lists(vertices: &[(&str, &str)], edges: &[(&str, &str)]) -> Result<Self> {
        Self::new(
            [],
            vertices.iter().map(|(v, c)| (VertexId::new(v), Color::new(c))),
            edges.iter().map(|(t, h)| (VertexId::new(t), VertexId::new(h))),
        )
    }

    /// Assembles a graph from already validated, position-indexed parts.
    /// `vertices` must be sorted and `out` lists must be loop-free.
    pub(crate) fn from_positions(
        vertices: Vec<VertexId>,
        palette: Vec<Color>,
        color_idx: Vec<usize>,
        mut out: Vec<Vec<usize>>,
    ) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        for l in &mut out {
            l.sort_unstable();
            l.dedup();
        }
        Self::assemble(vertices, palette, color_idx, out, None)
    }

    fn assemble(
        vertices: Vec<VertexId>,
        palette: Vec<Color>,
        color_idx: Vec<usize>,
        out: Vec<Vec<usize>>,
        index: Option<HashMap<VertexId, usize>>,
    ) -> Self {
        let mut inn = vec![Vec::new(); vertices.len()];
        for (t, l) in out.iter().enumerate() {
            for &h in l {
                inn[h].push(t);
            }
        }
        let index = index.unwrap_or_else(|| {
            vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect()
        });
        ColoredDigraph { vertices, palette, color_idx, out, inn, index }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Vertices in id order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// All declared colors in id order (may include unused colors).
    pub fn palette(&self) -> &[Color] {
        &self.palette
    }

    /// Colors actually carried by some vertex.
    pub fn used_colors(&self) -> BTreeSet<Color> {
        self.color_idx.iter().map(|&c| self.palette[c].clone()).collect()
    }

    pub fn contains(&self, x: &VertexId) -> bool {
        self.index.contains_key(x)
    }

    pub fn position(&self, x: &VertexId) -> Option<usize> {
        self.index.get(x).copied()
    }

    fn pos(&self, x: &VertexId) -> Result<usize> {
        self.position(x).ok_or_else(|| Error::UnknownVertex(x.to_string()))
    }

    pub(crate) fn color_pos(&self, s: &Color) -> Result<usize> {
        self.palette.binary_search(s).map_err(|_| Error::UnknownColor(s.to_string()))
    }

    pub fn color_of(&self, x: &VertexId) -> Result<&Color> {
        Ok(&self.palette[self.color_idx[self.pos(x)?]])
    }

    /// Palette index of the color of the vertex at position `i`.
    pub fn color_index(&self, i: usize) -> usize {
        self.color_idx[i]
    }

    /// Out-neighbor positions of the vertex at position `i`, sorted.
    pub fn out_positions(&self, i: usize) -> &[usize] {
        &self.out[i]
    }

    /// In-neighbor positions of the vertex at position `i`, sorted.
    pub fn in_positions(&self, i: usize) -> &[usize] {
        &self.inn[i]
    }

    pub fn has_edge_positions(&self, t: usize, h: usize) -> bool {
        self.out[t].binary_search(&h).is_ok()
    }

    pub fn has_edge(&self, t: &VertexId, h: &VertexId) -> Result<bool> {
        Ok(self.has_edge_positions(self.pos(t)?, self.pos(h)?))
    }

    /// Edges as `(tail, head)` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (&VertexId, &VertexId)> + '_ {
        self.out.iter().enumerate().flat_map(move |(t, l)| {
            l.iter().map(move |&h| (&self.vertices[t], &self.vertices[h]))
        })
    }

    /// `N(x)`, or `N(x, s)` when `s` is given.
    pub fn out_neighbors(&self, x: &VertexId, s: Option<&Color>) -> Result<BTreeSet<VertexId>> {
        let i = self.pos(x)?;
        self.filtered(&self.out[i], s)
    }

    /// `N⁻(x)`, or `N⁻(x, s)` when `s` is given.
    pub fn in_neighbors(&self, x: &VertexId, s: Option<&Color>) -> Result<BTreeSet<VertexId>> {
        let i = self.pos(x)?;
        self.filtered(&self.inn[i], s)
    }

    fn filtered(&self, list: &[usize], s: Option<&Color>) -> Result<BTreeSet<VertexId>> {
        let c = s.map(|s| self.color_pos(s)).transpose()?;
        Ok(list
            .iter()
            .filter(|&&j| c.is_none_or(|c| self.color_idx[j] == c))
            .map(|&j| self.vertices[j].clone())
            .collect())
    }

    /// Positions grouped by palette index.
    pub fn color_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.palette.len()];
        for (i, &c) in self.color_idx.iter().enumerate() {
            classes[c].push(i);
        }
        classes
    }

    pub fn is_properly_colored(&self) -> bool {
        self.out
            .iter()
            .enumerate()
            .all(|(t, l)| l.iter().all(|&h| self.color_idx[t] != self.color_idx[h]))
    }

    /// Every vertex has an out-neighbor of every other color in use.
    pub fn is_color_sink_free(&self) -> bool {
        let used: BTreeSet<usize> = self.color_idx.iter().copied().collect();
        let mut seen = vec![false; self.palette.len()];
        (0..self.vertices.len()).all(|x| {
            seen.iter_mut().for_each(|b| *b = false);
            for &y in &self.out[x] {
                seen[self.color_idx[y]] = true;
            }
            used.iter().all(|&c| c == self.color_idx[x] || seen[c])
        })
    }

    pub fn induced_subgraph(&self, w: &BTreeSet<VertexId>) -> Result<ColoredDigraph> {
        let keep = w.iter().map(|x| self.pos(x)).collect::<Result<Vec<_>>>()?;
        Ok(self.induced_positions(&keep))
    }

    /// Induced subgraph on sorted, distinct positions. The palette is kept.
    pub fn induced_positions(&self, keep: &[usize]) -> ColoredDigraph {
        let mut new_pos = vec![usize::MAX; self.vertices.len()];
        for (k, &i) in keep.iter().enumerate() {
            new_pos[i] = k;
        }
        let out = keep
            .iter()
            .map(|&i| {
                self.out[i].iter().filter(|&&j| new_pos[j] != usize::MAX).map(|&j| new_pos[j]).collect()
            })
            .collect();
        ColoredDigraph::from_positions(
            keep.iter().map(|&i| self.vertices[i].clone()).collect(),
            self.palette.clone(),
            keep.iter().map(|&i| self.color_idx[i]).collect(),
            out,
        )
    }

    /// Same graph with the palette reduced to the colors in use.
    pub fn with_used_palette(&self) -> ColoredDigraph {
        let used: Vec<usize> =
            self.color_idx.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let remap = |c: usize| used.binary_search(&c).unwrap();
        ColoredDigraph::from_positions(
            self.vertices.clone(),
            used.iter().map(|&c| self.palette[c].clone()).collect(),
            self.color_idx.iter().map(|&c| remap(c)).collect(),
            self.out.clone(),
        )
    }

    /// Same vertices and edges under a new coloring.
    pub fn recolored(
        &self,
        palette: impl IntoIterator<Item = Color>,
        color_of: impl Fn(&VertexId) -> Color,
    ) -> ColoredDigraph {
        let vertices = self.vertices.iter().map(|v| (v.clone(), color_of(v)));
        let edges = self.edges().map(|(t, h)| (t.clone(), h.clone()));
        ColoredDigraph::new(palette, vertices, edges).expect("recoloring keeps the graph simple")
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// ordered by their smallest vertex.
    pub fn weak_components(&self) -> Vec<Vec<VertexId>> {
        self.weak_component_positions()
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.vertices[i].clone()).collect())
            .collect()
    }

    pub(crate) fn weak_component_positions(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut result = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = result.len();
            comp[s] = id;
            let mut stack = vec![s];
            let mut members = vec![s];
            while let Some(v) = stack.pop() {
                for &u in self.out[v].iter().chain(&self.inn[v]) {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        stack.push(u);
                        members.push(u);
                    }
                }
            }
            members.sort_unstable();
            result.push(members);
        }
        result
    }
}

/// Disjoint union of graphs; palettes are merged by color name.
pub fn disjoint_union(graphs: &[ColoredDigraph], policy: IdPolicy) -> Result<ColoredDigraph> {
    let rename = |i: usize, v: &VertexId| match policy {
        IdPolicy::Keep => v.clone(),
        IdPolicy::Namespace => VertexId::new(format!("{i}:{v}")),
    };
    let mut seen = BTreeSet::new();
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut palette = BTreeSet::new();
    for (i, g) in graphs.iter().enumerate() {
        palette.extend(g.palette().iter().cloned());
        for (k, v) in g.vertices().iter().enumerate() {
            let id = rename(i, v);
            if !seen.insert(id.clone()) {
                return Err(Error::IdCollision(id.to_string()));
            }
            vertices.push((id, g.palette[g.color_idx[k]].clone()));
        }
        edges.extend(g.edges().map(|(t, h)| (rename(i, t), rename(i, h))));
    }
    ColoredDigraph::new(palette, vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> VertexId {
        VertexId::new(s)
    }

    fn build_fails() -> ColoredDigraph {
        ColoredDigraph::from_lists(
            &[("x", "A"), ("y", "B"), ("y'", "B"), ("z", "C"), ("z'", "C")],
            &[("x", "z"), ("x", "y"), ("x", "y'"), ("y'", "z"), ("z'", "y"), ("z'", "y'")],
        )
        .unwrap()
    }

    #[test]
    fn neighborhoods_of_single_edge() {
        let g = ColoredDigraph::from_lists(&[("a", "1"), ("b", "2")], &[("a", "b")]).unwrap();
        assert_eq!(g.out_neighbors(&v("a"), None).unwrap(), BTreeSet::from([v("b")]));
        assert!(g.out_neighbors(&v("b"), None).unwrap().is_empty());
        assert_eq!(g.in_neighbors(&v("b"), None).unwrap(), BTreeSet::from([v("a")]));
        assert!(g.out_neighbors(&v("a"), Some(&Color::new("1"))).unwrap().is_empty());
        assert!(matches!(g.out_neighbors(&v("q"), None), Err(Error::UnknownVertex(_))));
        assert!(matches!(
            g.out_neighbors(&v("a"), Some(&Color::new("9"))),
            Err(Error::UnknownColor(_))
        ));
    }

    #[test]
    fn hourglass_out_neighbors() {
        let g = ColoredDigraph::from_lists(
            &[("x", "A"), ("x'", "A"), ("y", "B"), ("y'", "B")],
            &[("x", "y"), ("y", "x"), ("x'", "y'"), ("y'", "x'"), ("x", "y'"), ("y", "x'")],
        )
        .unwrap();
        assert_eq!(g.out_neighbors(&v("x"), None).unwrap(), BTreeSet::from([v("y"), v("y'")]));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            ColoredDigraph::from_lists(&[("a", "1"), ("a", "2")], &[]),
            Err(Error::DuplicateVertex(_))
        ));
        assert!(matches!(
            ColoredDigraph::from_lists(&[("a", "1")], &[("a", "a")]),
            Err(Error::Loop(_))
        ));
        assert!(matches!(
            ColoredDigraph::from_lists(&[("a", "1")], &[("a", "b")]),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(
            ColoredDigraph::from_lists(&[("a", "1"), ("b", "2")], &[("a", "b"), ("a", "b")]),
            Err(Error::DuplicateEdge(..))
        ));
    }

    #[test]
    fn coloring_predicates() {
        let edgeless = ColoredDigraph::from_lists(&[("a", "1"), ("b", "1")], &[]).unwrap();
        assert!(edgeless.is_properly_colored());
        let mono = ColoredDigraph::from_lists(&[("a", "1"), ("b", "1")], &[("a", "b")]).unwrap();
        assert!(!mono.is_properly_colored());
        let cherry =
            ColoredDigraph::from_lists(&[("a", "1"), ("b", "2")], &[("a", "b"), ("b", "a")]).unwrap();
        assert!(cherry.is_color_sink_free());
        let single = ColoredDigraph::from_lists(&[("a", "1"), ("b", "2")], &[("a", "b")]).unwrap();
        assert!(!single.is_color_sink_free());
        let g = build_fails();
        assert!(g.is_properly_colored());
        assert!(!g.is_color_sink_free());
    }

    #[test]
    fn induced_subgraphs() {
        let g = build_fails();
        let all: BTreeSet<VertexId> = g.vertices().iter().cloned().collect();
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
        let empty = g.induced_subgraph(&BTreeSet::new()).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        let h = g.induced_subgraph(&BTreeSet::from([v("x"), v("z"), v("z'")])).unwrap();
        assert_eq!(h.edges().count(), 1);
        assert!(g.induced_subgraph(&BTreeSet::from([v("nope")])).is_err());
    }

    #[test]
    fn components_and_unions() {
        let g =
            ColoredDigraph::from_lists(&[("a", "1"), ("b", "2"), ("c", "1")], &[("a", "b")]).unwrap();
        assert_eq!(g.weak_components(), vec![vec![v("a"), v("b")], vec![v("c")]]);
        let k1 = ColoredDigraph::from_lists(&[("a", "1")], &[]).unwrap();
        assert_eq!(disjoint_union(std::slice::from_ref(&g), IdPolicy::Keep).unwrap(), g);
        assert!(matches!(
            disjoint_union(&[k1.clone(), k1.clone()], IdPolicy::Keep),
            Err(Error::IdCollision(_))
        ));
        let two = disjoint_union(&[k1.clone(), k1], IdPolicy::Namespace).unwrap();
        assert_eq!(two.vertex_count(), 2);
        assert_eq!(two.edge_count(), 0);
    }
}
