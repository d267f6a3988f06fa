//! Rooted phylogenetic trees and hierarchies.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::triples::Triple;

/// Node handle. Valid only for the tree that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub(crate) usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Tree edge `parent -> child`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeEdge {
    pub parent: NodeId,
    pub child: NodeId,
}

#[derive(Clone, Debug)]
struct Node {
    parent: Option<NodeId>,
    children: Vec<NodeId>,
    label: Option<VertexId>,
    depth: usize,
    // half-open range into `leaf_order`
    span: (usize, usize),
}

/// Rooted phylogenetic tree in canonical form.
///
/// Children are sorted by their smallest descendant leaf and nodes are laid
/// out in preorder, so the root is always node 0 and equal trees have equal
/// arenas.
#[derive(Clone)]
pub struct PhyloTree {
    nodes: Vec<Node>,
    leaf_order: Vec<NodeId>,
    leaf_index: HashMap<VertexId, NodeId>,
}

impl PartialEq for PhyloTree {
    fn eq(&self, other: &Self) -> bool {
        self.nodes.len() == other.nodes.len()
            && self
                .nodes
                .iter()
                .zip(&other.nodes)
                .all(|(a, b)| a.label == b.label && a.children == b.children)
    }
}

impl Eq for PhyloTree {}

impl fmt::Debug for PhyloTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape_string())
    }
}

/// Unvalidated tree under construction.
#[derive(Clone, Debug, Default)]
pub(crate) struct RawTree {
    pub children: Vec<Vec<usize>>,
    pub labels: Vec<Option<VertexId>>,
    pub root: usize,
}

impl RawTree {
    pub fn add_leaf(&mut self, label: VertexId) -> usize {
        self.children.push(Vec::new());
        self.labels.push(Some(label));
        self.children.len() - 1
    }

    pub fn add_inner(&mut self, children: Vec<usize>) -> usize {
        self.children.push(children);
        self.labels.push(None);
        self.children.len() - 1
    }
}

impl PhyloTree {
    /// Validates and canonicalizes. Returns the tree and, for every raw node,
    /// its new id (`None` if unreachable from the root).
    pub(crate) fn from_raw(raw: &RawTree) -> Result<(PhyloTree, Vec<Option<NodeId>>)> {
        let n = raw.children.len();
        if raw.root >= n {
            return Err(Error::EmptyLeafSet);
        }
        // reachability and shape checks; `order` is a preorder of raw ids
        let mut seen = vec![false; n];
        let mut order = Vec::new();
        let mut stack = vec![raw.root];
        seen[raw.root] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            let ch = &raw.children[v];
            match (&raw.labels[v], ch.len()) {
                (Some(_), 0) => {}
                (None, 0) => return Err(Error::InvalidTree("unlabeled leaf".into())),
                (Some(l), _) => {
                    return Err(Error::InvalidTree(format!("inner vertex carries leaf label `{l}`")))
                }
                (None, 1) => return Err(Error::InvalidTree("inner vertex with a single child".into())),
                (None, _) => {}
            }
            for &c in ch {
                if c >= n || seen[c] {
                    return Err(Error::InvalidTree("node reachable twice or out of range".into()));
                }
                seen[c] = true;
                stack.push(c);
            }
        }
        // smallest leaf label below every node
        let mut min_label: Vec<Option<&VertexId>> = vec![None; n];
        for &v in order.iter().rev() {
            min_label[v] = match &raw.labels[v] {
                Some(l) => Some(l),
                None => raw.children[v].iter().map(|&c| min_label[c].unwrap()).min(),
            };
        }
        // canonical preorder layout
        let mut map = vec![None; n];
        let mut nodes: Vec<Node> = Vec::with_capacity(order.len());
        let mut leaf_order = Vec::new();
        let mut leaf_index = HashMap::new();
        let mut stack = vec![(raw.root, None::<NodeId>)];
        while let Some((v, parent)) = stack.pop() {
            let id = NodeId(nodes.len());
            map[v] = Some(id);
            let depth = parent.map_or(0, |p| nodes[p.0].depth + 1);
            if let Some(p) = parent {
                nodes[p.0].children.push(id);
            }
            if let Some(l) = &raw.labels[v] {
                if leaf_index.insert(l.clone(), id).is_some() {
                    return Err(Error::InvalidTree(format!("duplicate leaf `{l}`")));
                }
                leaf_order.push(id);
            }
            nodes.push(Node {
                parent,
                children: Vec::new(),
                label: raw.labels[v].clone(),
                depth,
                span: (0, 0),
            });
            let mut ch = raw.children[v].clone();
            ch.sort_by(|a, b| min_label[*b].cmp(&min_label[*a]));
            for c in ch {
                stack.push((c, Some(id)));
            }
        }
        // spans: preorder numbering makes every subtree a contiguous leaf range
        let mut next_leaf = vec![0usize; nodes.len()];
        let mut counter = 0;
        for (i, node) in nodes.iter().enumerate() {
            if node.label.is_some() {
                next_leaf[i] = counter;
                counter += 1;
            }
        }
        for i in (0..nodes.len()).rev() {
            let span = if nodes[i].label.is_some() {
                (next_leaf[i], next_leaf[i] + 1)
            } else {
                let ch = &nodes[i].children;
                (nodes[ch[0].0].span.0, nodes[ch[ch.len() - 1].0].span.1)
            };
            nodes[i].span = span;
        }
        Ok((PhyloTree { nodes, leaf_order, leaf_index }, map))
    }

    pub(crate) fn to_raw(&self) -> RawTree {
        RawTree {
            children: self.nodes.iter().map(|n| n.children.iter().map(|c| c.0).collect()).collect(),
            labels: self.nodes.iter().map(|n| n.label.clone()).collect(),
            root: 0,
        }
    }

    /// The tree with a single leaf, which is also the root.
    pub fn single(leaf: VertexId) -> PhyloTree {
        let mut raw = RawTree::default();
        raw.root = raw.add_leaf(leaf);
        PhyloTree::from_raw(&raw).unwrap().0
    }

    /// Star tree: the root is the parent of every leaf.
    pub fn star(leaves: &BTreeSet<VertexId>) -> Result<PhyloTree> {
        let mut raw = RawTree::default();
        let ch: Vec<usize> = leaves.iter().map(|l| raw.add_leaf(l.clone())).collect();
        raw.root = match ch.len() {
            0 => return Err(Error::EmptyLeafSet),
            1 => ch[0],
            _ => raw.add_inner(ch),
        };
        Ok(PhyloTree::from_raw(&raw)?.0)
    }

    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.nodes.len()).map(NodeId)
    }

    pub fn contains_node(&self, v: NodeId) -> bool {
        v.0 < self.nodes.len()
    }

    pub(crate) fn check(&self, v: NodeId) -> Result<()> {
        if self.contains_node(v) {
            Ok(())
        } else {
            Err(Error::UnknownNode(v.0))
        }
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.nodes[v.0].label.is_some()
    }

    pub fn label(&self, v: NodeId) -> Option<&VertexId> {
        self.nodes[v.0].label.as_ref()
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        &self.nodes[v.0].children
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.nodes[v.0].parent
    }

    /// Number of edges between the root and `v`.
    pub fn depth(&self, v: NodeId) -> usize {
        self.nodes[v.0].depth
    }

    pub fn leaf(&self, label: &VertexId) -> Option<NodeId> {
        self.leaf_index.get(label).copied()
    }

    pub(crate) fn leaf_node(&self, label: &VertexId) -> Result<NodeId> {
        self.leaf(label).ok_or_else(|| Error::NotALeaf(label.to_string()))
    }

    /// Leaves in canonical (preorder) order.
    pub fn leaves(&self) -> &[NodeId] {
        &self.leaf_order
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_order.len()
    }

    pub fn leaf_labels(&self) -> BTreeSet<VertexId> {
        self.leaf_index.keys().cloned().collect()
    }

    /// `L(T(v))` as nodes, in canonical order.
    pub fn subtree_leaves(&self, v: NodeId) -> &[NodeId] {
        let (a, b) = self.nodes[v.0].span;
        &self.leaf_order[a..b]
    }

    /// Position range of `L(T(v))` within [`PhyloTree::leaves`].
    pub fn leaf_span(&self, v: NodeId) -> (usize, usize) {
        self.nodes[v.0].span
    }

    /// `a ⪰ d`: `a` lies on the path from the root to `d`.
    pub fn is_ancestor_or_self(&self, a: NodeId, d: NodeId) -> bool {
        let (sa, ea) = self.nodes[a.0].span;
        let (sd, ed) = self.nodes[d.0].span;
        sa <= sd && ed <= ea && self.nodes[a.0].depth <= self.nodes[d.0].depth
    }

    pub fn lca(&self, mut a: NodeId, mut b: NodeId) -> NodeId {
        while self.nodes[a.0].depth > self.nodes[b.0].depth {
            a = self.nodes[a.0].parent.unwrap();
        }
        while self.nodes[b.0].depth > self.nodes[a.0].depth {
            b = self.nodes[b.0].parent.unwrap();
        }
        while a != b {
            a = self.nodes[a.0].parent.unwrap();
            b = self.nodes[b.0].parent.unwrap();
        }
        a
    }

    /// Least common ancestor of a non-empty node set.
    pub fn lca_set(&self, nodes: &[NodeId]) -> Result<NodeId> {
        let (&first, rest) = nodes.split_first().ok_or(Error::EmptyLeafSet)?;
        self.check(first)?;
        rest.iter().try_fold(first, |acc, &v| {
            self.check(v)?;
            Ok(self.lca(acc, v))
        })
    }

    /// Nodes on the path from the root down to `v`, root first.
    pub fn root_path(&self, v: NodeId) -> Vec<NodeId> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.nodes[cur.0].parent {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    pub fn edges(&self) -> Vec<TreeEdge> {
        self.nodes()
            .filter_map(|c| self.parent(c).map(|p| TreeEdge { parent: p, child: c }))
            .collect()
    }

    pub fn inner_edges(&self) -> Vec<TreeEdge> {
        self.edges().into_iter().filter(|e| !self.is_leaf(e.child)).collect()
    }

    pub fn is_binary(&self) -> bool {
        self.nodes.iter().all(|n| n.children.is_empty() || n.children.len() == 2)
    }

    /// Restriction to a non-empty subset of the leaves.
    pub fn restrict(&self, keep: &BTreeSet<VertexId>) -> Result<PhyloTree> {
        Ok(self.restrict_with_map(keep)?.0)
    }

    /// Restriction plus the image of every old node (`None` when removed or
    /// suppressed).
    pub fn restrict_with_map(
        &self,
        keep: &BTreeSet<VertexId>,
    ) -> Result<(PhyloTree, Vec<Option<NodeId>>)> {
        if keep.is_empty() {
            return Err(Error::EmptyLeafSet);
        }
        for l in keep {
            self.leaf_node(l)?;
        }
        // postorder: each old node maps to the raw node standing for it, if any
        let mut raw = RawTree::default();
        let mut rep: Vec<Option<usize>> = vec![None; self.nodes.len()];
        let mut own: Vec<Option<usize>> = vec![None; self.nodes.len()];
        for i in (0..self.nodes.len()).rev() {
            let node = &self.nodes[i];
            if let Some(l) = &node.label {
                if keep.contains(l) {
                    let r = raw.add_leaf(l.clone());
                    rep[i] = Some(r);
                    own[i] = Some(r);
                }
                continue;
            }
            let kept: Vec<usize> = node.children.iter().filter_map(|c| rep[c.0]).collect();
            match kept.len() {
                0 => {}
                1 => rep[i] = Some(kept[0]),
                _ => {
                    let r = raw.add_inner(kept);
                    rep[i] = Some(r);
                    own[i] = Some(r);
                }
            }
        }
        raw.root = rep[0].unwrap();
        let (tree, map) = PhyloTree::from_raw(&raw)?;
        let composed = own.iter().map(|r| r.and_then(|r| map[r])).collect();
        Ok((tree, composed))
    }

    /// Contracts the inner edge `e`; the merged vertex inherits all children.
    pub fn contract_edge(&self, e: TreeEdge) -> Result<PhyloTree> {
        Ok(self.contract_with_map(e)?.0)
    }

    pub fn contract_with_map(&self, e: TreeEdge) -> Result<(PhyloTree, Vec<Option<NodeId>>)> {
        self.check(e.parent)?;
        self.check(e.child)?;
        if self.parent(e.child) != Some(e.parent) || self.is_leaf(e.child) {
            return Err(Error::NotInnerEdge(e.parent.0, e.child.0));
        }
        let mut raw = self.to_raw();
        let grand = raw.children[e.child.0].clone();
        let ch = &mut raw.children[e.parent.0];
        ch.retain(|&c| c != e.child.0);
        ch.extend(grand);
        raw.children[e.child.0].clear();
        let (tree, mut map) = PhyloTree::from_raw(&raw)?;
        map[e.child.0] = map[e.parent.0];
        Ok((tree, map))
    }

    /// `lca(a,b) ≺ lca(a,c) = lca(b,c)`.
    pub fn displays_triple(&self, t: &Triple) -> Result<bool> {
        let a = self.leaf_node(t.a())?;
        let b = self.leaf_node(t.b())?;
        let c = self.leaf_node(t.c())?;
        Ok(self.displays_nodes(a, b, c))
    }

    pub(crate) fn displays_nodes(&self, a: NodeId, b: NodeId, c: NodeId) -> bool {
        let ab = self.lca(a, b);
        let ac = self.lca(a, c);
        ab != ac && self.is_ancestor_or_self(ac, ab)
    }

    /// Whether `other` is obtained from the restriction of `self` to its
    /// leaves by contracting inner edges.
    pub fn displays_tree(&self, other: &PhyloTree) -> Result<bool> {
        let leaves = other.leaf_labels();
        let restricted = self.restrict(&leaves)?;
        let mine = restricted.hierarchy();
        Ok(other.hierarchy().blocks().is_subset(mine.blocks()))
    }

    /// `H(T) = { L(T(v)) }`.
    pub fn hierarchy(&self) -> Hierarchy {
        let blocks = self
            .nodes()
            .map(|v| {
                self.subtree_leaves(v).iter().map(|&l| self.label(l).unwrap().clone()).collect()
            })
            .collect();
        Hierarchy { ground: self.leaf_labels(), blocks }
    }

    /// Hasse diagram of a full hierarchy.
    pub fn from_hierarchy(h: &Hierarchy) -> Result<PhyloTree> {
        if !h.is_full() {
            return Err(Error::InvalidHierarchy(
                "singletons and the ground set must be blocks".into(),
            ));
        }
        let ground: Vec<&VertexId> = h.ground.iter().collect();
        let pos = |v: &VertexId| ground.binary_search(&v).unwrap();
        let mut blocks: Vec<&BTreeSet<VertexId>> = h.blocks.iter().collect();
        blocks.sort_by_key(|b| b.len());
        // top[i]: raw node of the largest block processed so far containing leaf i
        let mut top = vec![usize::MAX; ground.len()];
        let mut raw = RawTree::default();
        for b in blocks {
            if b.len() == 1 {
                let l = b.iter().next().unwrap();
                top[pos(l)] = raw.add_leaf(l.clone());
                continue;
            }
            let ch: BTreeSet<usize> = b.iter().map(|l| top[pos(l)]).collect();
            let r = raw.add_inner(ch.into_iter().collect());
            for l in b {
                top[pos(l)] = r;
            }
        }
        raw.root = top[0];
        Ok(PhyloTree::from_raw(&raw)?.0)
    }

    /// Newick-like rendering without inner labels, for diagnostics.
    pub fn shape_string(&self) -> String {
        fn go(t: &PhyloTree, v: NodeId, s: &mut String) {
            if let Some(l) = t.label(v) {
                s.push_str(l.as_str());
                return;
            }
            s.push('(');
            for (i, &c) in t.children(v).iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                go(t, c, s);
            }
            s.push(')');
        }
        let mut s = String::new();
        go(self, self.root(), &mut s);
        s
    }
}

/// Laminar set system on a ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hierarchy {
    ground: BTreeSet<VertexId>,
    blocks: BTreeSet<BTreeSet<VertexId>>,
}

impl Hierarchy {
    /// Checks that blocks are non-empty subsets of `ground` and pairwise
    /// nested or disjoint.
    pub fn new(ground: BTreeSet<VertexId>, blocks: BTreeSet<BTreeSet<VertexId>>) -> Result<Self> {
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidHierarchy("empty block".into()));
            }
            if let Some(x) = b.iter().find(|x| !ground.contains(*x)) {
                return Err(Error::InvalidHierarchy(format!("`{x}` is not in the ground set")));
            }
        }
        let list: Vec<&BTreeSet<VertexId>> = blocks.iter().collect();
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                let common = a.intersection(b).count();
                if common != 0 && common != a.len() && common != b.len() {
                    return Err(Error::InvalidHierarchy(format!(
                        "blocks {a:?} and {b:?} overlap"
                    )));
                }
            }
        }
        Ok(Hierarchy { ground, blocks })
    }

    pub fn ground(&self) -> &BTreeSet<VertexId> {
        &self.ground
    }

    pub fn blocks(&self) -> &BTreeSet<BTreeSet<VertexId>> {
        &self.blocks
    }

    /// Contains the ground set and all singletons.
    pub fn is_full(&self) -> bool {
        !self.ground.is_empty()
            && self.blocks.contains(&self.ground)
            && self.ground.iter().all(|x| self.blocks.contains(&BTreeSet::from([x.clone()])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_newick;

    fn t(s: &str) -> PhyloTree {
        parse_newick(s).unwrap().tree
    }

    fn set(xs: &[&str]) -> BTreeSet<VertexId> {
        xs.iter().map(VertexId::new).collect()
    }

    fn leaf(tree: &PhyloTree, l: &str) -> NodeId {
        tree.leaf(&VertexId::new(l)).unwrap()
    }

    #[test]
    fn canonical_form_ignores_input_order() {
        assert_eq!(t("(c,(b,a));"), t("((a,b),c);"));
        assert_eq!(t("((a,b),c);").shape_string(), "((a,b),c)");
        assert_ne!(t("((a,b),c);"), t("((a,c),b);"));
    }

    #[test]
    fn lca_basics() {
        let tr = t("((a,b),c);");
        let (a, b, c) = (leaf(&tr, "a"), leaf(&tr, "b"), leaf(&tr, "c"));
        assert_eq!(tr.lca_set(&[a]).unwrap(), a);
        assert_eq!(tr.lca(a, c), tr.root());
        assert_eq!(tr.lca(a, b), tr.parent(a).unwrap());
        assert_ne!(tr.lca(a, b), tr.root());
        assert!(tr.lca_set(&[]).is_err());
        assert!(tr.lca_set(&[NodeId(99)]).is_err());
        let cherry = t("(a,b);");
        assert_eq!(cherry.lca(leaf(&cherry, "a"), leaf(&cherry, "b")), cherry.root());
    }

    #[test]
    fn restriction() {
        let tr = t("((a,b),c);");
        assert_eq!(tr.restrict(&tr.leaf_labels()).unwrap(), tr);
        assert_eq!(tr.restrict(&set(&["a", "c"])).unwrap(), t("(a,c);"));
        assert_eq!(tr.restrict(&set(&["b"])).unwrap(), PhyloTree::single(VertexId::new("b")));
        assert!(matches!(tr.restrict(&BTreeSet::new()), Err(Error::EmptyLeafSet)));
        assert!(tr.restrict(&set(&["q"])).is_err());
        let (r, map) = t("((a,b),(c,d));").restrict_with_map(&set(&["a", "c", "d"])).unwrap();
        assert_eq!(r, t("(a,(c,d));"));
        assert_eq!(map.iter().filter(|m| m.is_some()).count(), r.node_count());
    }

    #[test]
    fn contraction() {
        let tr = t("((a,b),c);");
        let e = tr.inner_edges()[0];
        assert_eq!(tr.contract_edge(e).unwrap(), t("(a,b,c);"));
        let outer = TreeEdge { parent: tr.root(), child: leaf(&tr, "c") };
        assert!(matches!(tr.contract_edge(outer), Err(Error::NotInnerEdge(..))));
        let big = t("((a,(b,c)),(d,e,f));");
        for e in big.inner_edges() {
            assert_eq!(big.contract_edge(e).unwrap().leaf_labels(), big.leaf_labels());
        }
    }

    #[test]
    fn triple_display() {
        let tr = t("((a,b),c);");
        let tri = |a: &str, b: &str, c: &str| Triple::new(a.into(), b.into(), c.into()).unwrap();
        assert!(tr.displays_triple(&tri("a", "b", "c")).unwrap());
        assert!(!tr.displays_triple(&tri("a", "c", "b")).unwrap());
        assert!(!t("(a,b,c);").displays_triple(&tri("a", "b", "c")).unwrap());
        assert!(tr.displays_triple(&tri("a", "b", "q")).is_err());
        let t2 = t("((x,y,y',z),z');");
        assert!(t2.displays_triple(&tri("x", "z", "z'")).unwrap());
        assert!(t2.displays_triple(&tri("y'", "z", "z'")).unwrap());
        for (a, b, c) in [("x", "y", "y'"), ("x", "y'", "y"), ("z'", "y", "y'"), ("z'", "y'", "y")] {
            assert!(!t2.displays_triple(&tri(a, b, c)).unwrap());
        }
    }

    #[test]
    fn tree_display() {
        let tr = t("((a,b),c,(d,e));");
        assert!(tr.displays_tree(&tr).unwrap());
        assert!(tr.displays_tree(&t("(a,b,c,d,e);")).unwrap());
        assert!(tr.displays_tree(&t("((a,b),c,d,e);")).unwrap());
        assert!(!t("((a,b),c,d,e);").displays_tree(&tr).unwrap());
        assert!(tr.displays_tree(&t("((a,b),d);")).unwrap());
        assert!(t("(a,b);").displays_tree(&t("(a,c);")).is_err());
    }

    #[test]
    fn hierarchies() {
        let star = t("(a,b,c);");
        assert_eq!(
            star.hierarchy().blocks().clone(),
            BTreeSet::from([set(&["a"]), set(&["b"]), set(&["c"]), set(&["a", "b", "c"])])
        );
        assert!(t("((a,b),c);").hierarchy().blocks().contains(&set(&["a", "b"])));
        let tr = t("((a,(b,c)),(d,e,f),g);");
        assert_eq!(PhyloTree::from_hierarchy(&tr.hierarchy()).unwrap(), tr);
        let overlap = Hierarchy::new(
            set(&["a", "b", "c"]),
            BTreeSet::from([set(&["a", "b"]), set(&["b", "c"])]),
        );
        assert!(matches!(overlap, Err(Error::InvalidHierarchy(_))));
        let partial = Hierarchy::new(set(&["a", "b"]), BTreeSet::from([set(&["a", "b"])])).unwrap();
        assert!(PhyloTree::from_hierarchy(&partial).is_err());
    }

    #[test]
    fn shape_validation() {
        let mut raw = RawTree::default();
        let a = raw.add_leaf("a".into());
        raw.root = raw.add_inner(vec![a]);
        assert!(PhyloTree::from_raw(&raw).is_err());
        let mut raw = RawTree::default();
        let a = raw.add_leaf("a".into());
        let b = raw.add_leaf("a".into());
        raw.root = raw.add_inner(vec![a, b]);
        assert!(PhyloTree::from_raw(&raw).is_err());
    }

    #[test]
    fn binary_and_edges() {
        assert!(t("((a,b),c);").is_binary());
        assert!(!t("(a,b,c);").is_binary());
        assert!(PhyloTree::single("a".into()).is_binary());
        let tr = t("((a,b),c);");
        assert_eq!(tr.edges().len(), 4);
        assert_eq!(tr.inner_edges().len(), 1);
    }
}
