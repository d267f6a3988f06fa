//! Rooted triples, BUILD and MTT.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::graph::{ColoredDigraph, VertexId};
use crate::tree::{PhyloTree, RawTree};

/// Rooted triple `ab|c`; the pair is stored with `a < b`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    a: VertexId,
    b: VertexId,
    c: VertexId,
}

impl Triple {
    pub fn new(a: VertexId, b: VertexId, c: VertexId) -> Result<Triple> {
        if a == b || a == c || b == c {
            return Err(Error::InvalidTriple(format!("{a},{b}|{c}: leaves must be distinct")));
        }
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        Ok(Triple { a, b, c })
    }

    pub fn a(&self) -> &VertexId {
        &self.a
    }

    pub fn b(&self) -> &VertexId {
        &self.b
    }

    /// The outgroup leaf.
    pub fn c(&self) -> &VertexId {
        &self.c
    }

    pub fn leaves(&self) -> [&VertexId; 3] {
        [&self.a, &self.b, &self.c]
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}|{}", self.a, self.b, self.c)
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Triple {
    type Err = Error;

    /// Parses `a,b|c`.
    fn from_str(s: &str) -> Result<Triple> {
        let bad = || Error::InvalidTriple(format!("cannot parse `{s}`, expected `a,b|c`"));
        let (pair, c) = s.trim().split_once('|').ok_or_else(bad)?;
        let (a, b) = pair.split_once(',').ok_or_else(bad)?;
        let (a, b, c) = (a.trim(), b.trim(), c.trim());
        if a.is_empty() || b.is_empty() || c.is_empty() || c.contains(',') {
            return Err(bad());
        }
        Triple::new(a.into(), b.into(), c.into())
    }
}

/// Required and forbidden triples over a ground set.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TripleSystem {
    pub required: BTreeSet<Triple>,
    pub forbidden: BTreeSet<Triple>,
    pub leaves: BTreeSet<VertexId>,
}

impl TripleSystem {
    /// `(R(G,σ), F(G,σ))` over `V(G)`.
    pub fn of_graph(g: &ColoredDigraph) -> Result<TripleSystem> {
        Ok(TripleSystem {
            required: informative_triples(g)?,
            forbidden: forbidden_triples(g)?,
            leaves: g.vertices().iter().cloned().collect(),
        })
    }

    fn check_leaves(&self) -> Result<()> {
        check_leaves(self.required.iter().chain(&self.forbidden), &self.leaves)
    }
}

fn check_leaves<'a>(ts: impl Iterator<Item = &'a Triple>, leaves: &BTreeSet<VertexId>) -> Result<()> {
    for t in ts {
        if let Some(x) = t.leaves().into_iter().find(|x| !leaves.contains(*x)) {
            return Err(Error::InvalidTriple(format!("{t}: `{x}` is not in the leaf set")));
        }
    }
    Ok(())
}

/// Calls `f(a, b, b', ab' ∈ E)` for every `a`, out-neighbor `b` and other
/// vertex `b'` of the color of `b`.
fn scan(g: &ColoredDigraph, mut f: impl FnMut(usize, usize, usize, bool)) -> Result<()> {
    if !g.is_properly_colored() {
        return Err(Error::ImproperColoring);
    }
    let classes = g.color_classes();
    for a in 0..g.vertex_count() {
        for &b in g.out_positions(a) {
            for &b2 in &classes[g.color_index(b)] {
                if b2 != b {
                    f(a, b, b2, g.has_edge_positions(a, b2));
                }
            }
        }
    }
    Ok(())
}

fn triple_at(g: &ColoredDigraph, a: usize, b: usize, c: usize) -> Triple {
    let v = g.vertices();
    Triple::new(v[a].clone(), v[b].clone(), v[c].clone()).expect("distinct positions")
}

/// `R(G,σ) = { ab|b' : σ(a)≠σ(b)=σ(b'), ab ∈ E, ab' ∉ E }`.
pub fn informative_triples(g: &ColoredDigraph) -> Result<BTreeSet<Triple>> {
    let mut r = BTreeSet::new();
    scan(g, |a, b, b2, e| {
        if !e {
            r.insert(triple_at(g, a, b, b2));
        }
    })?;
    Ok(r)
}

/// `F(G,σ) = { ab|b' : σ(a)≠σ(b)=σ(b'), b≠b', ab, ab' ∈ E }`.
pub fn forbidden_triples(g: &ColoredDigraph) -> Result<BTreeSet<Triple>> {
    let mut f = BTreeSet::new();
    scan(g, |a, b, b2, e| {
        if e {
            f.insert(triple_at(g, a, b, b2));
        }
    })?;
    Ok(f)
}

/// `R^B(G,σ) = R ∪ { bb'|a : ab|b' ∈ F }`.
pub fn binary_triples(g: &ColoredDigraph) -> Result<BTreeSet<Triple>> {
    let mut r = BTreeSet::new();
    scan(g, |a, b, b2, e| {
        if e {
            r.insert(triple_at(g, b, b2, a));
        } else {
            r.insert(triple_at(g, a, b, b2));
        }
    })?;
    Ok(r)
}

/// Triples with all three leaves in `keep`.
pub fn restrict_triples(r: &BTreeSet<Triple>, keep: &BTreeSet<VertexId>) -> BTreeSet<Triple> {
    r.iter().filter(|t| t.leaves().into_iter().all(|x| keep.contains(x))).cloned().collect()
}

/// Undirected graph on the leaves with an edge `{a,b}` per `ab|c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AhoGraph {
    pub vertices: Vec<VertexId>,
    pub edges: BTreeSet<(VertexId, VertexId)>,
}

impl AhoGraph {
    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let idx: BTreeMap<&VertexId, usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut uf = UnionFind::new(self.vertices.len());
        for (a, b) in &self.edges {
            uf.union(idx[a], idx[b]);
        }
        let mut blocks: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            blocks.entry(uf.find(i)).or_default().push(v.clone());
        }
        let mut out: Vec<Vec<VertexId>> = blocks.into_values().collect();
        out.sort();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

pub fn aho_graph(r: &BTreeSet<Triple>, leaves: &BTreeSet<VertexId>) -> Result<AhoGraph> {
    check_leaves(r.iter(), leaves)?;
    Ok(AhoGraph {
        vertices: leaves.iter().cloned().collect(),
        edges: r.iter().map(|t| (t.a().clone(), t.b().clone())).collect(),
    })
}

/// Shared recursion of BUILD and MTT.
///
/// Leaves are positions into `labels` (sorted), so the smallest position in a
/// block is its smallest id. `split` receives a block with at least three
/// leaves and returns its blocks (at least two) with their payloads, or
/// `None` when the block cannot be split.
pub(crate) fn recursive_partition<P>(
    labels: &[VertexId],
    payload: P,
    mut split: impl FnMut(&[usize], P) -> Option<Vec<(Vec<usize>, P)>>,
) -> Option<RawTree> {
    if labels.is_empty() {
        return None;
    }
    let mut raw = RawTree::default();
    // each job fills `slot` of its parent's children list
    struct Job<P> {
        leaves: Vec<usize>,
        payload: P,
        parent: Option<(usize, usize)>,
    }
    let mut jobs = vec![Job { leaves: (0..labels.len()).collect(), payload, parent: None }];
    let mut root = None;
    while let Some(job) = jobs.pop() {
        let node = match job.leaves.len() {
            1 => raw.add_leaf(labels[job.leaves[0]].clone()),
            2 => {
                let a = raw.add_leaf(labels[job.leaves[0]].clone());
                let b = raw.add_leaf(labels[job.leaves[1]].clone());
                raw.add_inner(vec![a, b])
            }
            _ => {
                let mut blocks = split(&job.leaves, job.payload)?;
                debug_assert!(blocks.len() >= 2);
                blocks.sort_by_key(|(b, _)| b[0]);
                let id = raw.add_inner(vec![usize::MAX; blocks.len()]);
                for (slot, (leaves, payload)) in blocks.into_iter().enumerate() {
                    jobs.push(Job { leaves, payload, parent: Some((id, slot)) });
                }
                id
            }
        };
        match job.parent {
            Some((p, slot)) => raw.children[p][slot] = node,
            None => root = Some(node),
        }
    }
    raw.root = root.unwrap();
    Some(raw)
}

/// Scratch space mapping global leaf positions to block-local indices.
pub(crate) struct Local {
    pos: Vec<usize>,
    stamp: Vec<u32>,
    gen: u32,
}

impl Local {
    pub fn new(n: usize) -> Local {
        Local { pos: vec![0; n], stamp: vec![0; n], gen: 0 }
    }

    pub fn load(&mut self, block: &[usize]) {
        self.gen += 1;
        for (k, &v) in block.iter().enumerate() {
            self.pos[v] = k;
            self.stamp[v] = self.gen;
        }
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        (self.stamp[v] == self.gen).then_some(self.pos[v])
    }
}

/// Groups block members by union-find root; `None` if only one group.
pub(crate) fn groups(block: &[usize], uf: &mut UnionFind<usize>) -> Option<Vec<Vec<usize>>> {
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (k, &v) in block.iter().enumerate() {
        by_root.entry(uf.find(k)).or_default().push(v);
    }
    (by_root.len() >= 2).then(|| by_root.into_values().collect())
}

type Idx = [usize; 3];

fn index_triples<'a>(
    ts: impl Iterator<Item = &'a Triple>,
    labels: &[VertexId],
) -> Result<Vec<Idx>> {
    let pos = |x: &VertexId| {
        labels
            .binary_search(x)
            .map_err(|_| Error::InvalidTriple(format!("`{x}` is not in the leaf set")))
    };
    ts.map(|t| Ok([pos(t.a())?, pos(t.b())?, pos(t.c())?])).collect()
}

/// MTT on explicit triple lists. With `forbidden` empty this is BUILD.
fn mtt_raw(labels: &[VertexId], required: &[Idx], forbidden: &[Idx]) -> Option<RawTree> {
    let mut local = Local::new(labels.len());
    let start = ((0..required.len()).collect::<Vec<_>>(), (0..forbidden.len()).collect::<Vec<_>>());
    recursive_partition(labels, start, |block, (rs, fs): (Vec<usize>, Vec<usize>)| {
        local.load(block);
        let mut uf = UnionFind::new(block.len());
        for &t in &rs {
            let [a, b, _] = required[t];
            uf.union(local.get(a).unwrap(), local.get(b).unwrap());
        }
        let mut changed = !fs.is_empty();
        while changed {
            changed = false;
            for &t in &fs {
                let [a, b, c] = forbidden[t].map(|v| local.get(v).unwrap());
                if uf.equiv(a, b) && !uf.equiv(a, c) {
                    uf.union(a, c);
                    changed = true;
                }
            }
        }
        let blocks = groups(block, &mut uf)?;
        let mut block_of = vec![0; block.len()];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                block_of[local.get(v).unwrap()] = i;
            }
        }
        let mut parts: Vec<(Vec<usize>, (Vec<usize>, Vec<usize>))> =
            blocks.into_iter().map(|b| (b, (Vec::new(), Vec::new()))).collect();
        let same = |t: &Idx| {
            let k = block_of[local.get(t[0]).unwrap()];
            (t.iter().all(|&v| block_of[local.get(v).unwrap()] == k)).then_some(k)
        };
        for t in rs {
            if let Some(k) = same(&required[t]) {
                parts[k].1 .0.push(t);
            }
        }
        for t in fs {
            if let Some(k) = same(&forbidden[t]) {
                parts[k].1 .1.push(t);
            }
        }
        Some(parts)
    })
}

/// Tree on `leaves` displaying every triple in `r`, or `None` if `r` is
/// inconsistent.
pub fn build(r: &BTreeSet<Triple>, leaves: &BTreeSet<VertexId>) -> Result<Option<PhyloTree>> {
    mtt(r, &BTreeSet::new(), leaves)
}

/// Tree on `leaves` displaying all of `r` and none of `f`, or `None` if no
/// such tree exists. The result is least resolved among such trees.
pub fn mtt(
    r: &BTreeSet<Triple>,
    f: &BTreeSet<Triple>,
    leaves: &BTreeSet<VertexId>,
) -> Result<Option<PhyloTree>> {
    if leaves.is_empty() {
        return Err(Error::EmptyLeafSet);
    }
    let labels: Vec<VertexId> = leaves.iter().cloned().collect();
    let ri = index_triples(r.iter(), &labels)?;
    let fi = index_triples(f.iter(), &labels)?;
    let Some(raw) = mtt_raw(&labels, &ri, &fi) else {
        return Ok(None);
    };
    let tree = PhyloTree::from_raw(&raw)?.0;
    verify_agreement(&tree, r, f)?;
    Ok(Some(tree))
}

/// Checks that `tree` displays all of `r` and none of `f`.
pub(crate) fn verify_agreement(
    tree: &PhyloTree,
    r: &BTreeSet<Triple>,
    f: &BTreeSet<Triple>,
) -> Result<()> {
    for t in r {
        if !tree.displays_triple(t)? {
            return Err(Error::Verification(format!("tree {tree:?} misses required {t}")));
        }
    }
    for t in f {
        if tree.displays_triple(t)? {
            return Err(Error::Verification(format!("tree {tree:?} displays forbidden {t}")));
        }
    }
    Ok(())
}

pub fn is_consistent(
    r: &BTreeSet<Triple>,
    f: &BTreeSet<Triple>,
    leaves: &BTreeSet<VertexId>,
) -> Result<bool> {
    Ok(mtt(r, f, leaves)?.is_some())
}

impl TripleSystem {
    pub fn mtt(&self) -> Result<Option<PhyloTree>> {
        self.check_leaves()?;
        mtt(&self.required, &self.forbidden, &self.leaves)
    }
}

/// The auxiliary partition of the top level: Aho components of `r` merged
/// along `f` until stable. Blocks sorted by smallest leaf.
pub fn auxiliary_partition(
    r: &BTreeSet<Triple>,
    f: &BTreeSet<Triple>,
    leaves: &BTreeSet<VertexId>,
) -> Result<Vec<BTreeSet<VertexId>>> {
    let labels: Vec<VertexId> = leaves.iter().cloned().collect();
    let ri = index_triples(r.iter(), &labels)?;
    let fi = index_triples(f.iter(), &labels)?;
    let mut uf = UnionFind::new(labels.len());
    for [a, b, _] in &ri {
        uf.union(*a, *b);
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &[a, b, c] in &fi {
            if uf.equiv(a, b) && !uf.equiv(a, c) {
                uf.union(a, c);
                changed = true;
            }
        }
    }
    let mut by_root: BTreeMap<usize, BTreeSet<VertexId>> = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        by_root.entry(uf.find(i)).or_default().insert(l.clone());
    }
    let mut out: Vec<_> = by_root.into_values().collect();
    out.sort();
    Ok(out)
}

/// Which triple set a graph-driven partition works on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum GraphTriples {
    /// MTT on `(R(G,σ), F(G,σ))`.
    Mixed,
    /// BUILD on `R^B(G,σ)`.
    Binary,
}

/// MTT or BUILD on the triples of a properly colored graph without listing
/// them.
///
/// Within a block `B`, every `a` and color `s` contribute through
/// `M = N(a,s) ∩ B`. The required triples `ab|b'` give Aho edges `{a,b}`
/// for `b ∈ M` exactly when `B` holds a vertex of color `s` outside `M`.
/// The forbidden triples `ab|b'` with `b,b' ∈ M` merge all of `M` into the
/// block of `a` as soon as one member of `M` shares it. In the binary
/// extension they become Aho edges between all members of `M`.
pub(crate) fn graph_partition_tree(g: &ColoredDigraph, mode: GraphTriples) -> Option<RawTree> {
    let n = g.vertex_count();
    let k = g.palette().len();
    let mut local = Local::new(n);
    let mut count = vec![0usize; k];
    recursive_partition(g.vertices(), (), |block, ()| {
        local.load(block);
        count.iter_mut().for_each(|c| *c = 0);
        for &v in block {
            count[g.color_index(v)] += 1;
        }
        let mut uf = UnionFind::new(block.len());
        let mut groups_m: Vec<(usize, Vec<usize>)> = Vec::new();
        for (ka, &a) in block.iter().enumerate() {
            let members: Vec<usize> = g.out_positions(a).iter().filter_map(|&b| local.get(b)).collect();
            if members.is_empty() {
                continue;
            }
            // out lists are sorted by position, not by color; split per color
            let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &kb in &members {
                by_color.entry(g.color_index(block[kb])).or_default().push(kb);
            }
            for (s, m) in by_color {
                if count[s] > m.len() {
                    for &kb in &m {
                        uf.union(ka, kb);
                    }
                }
                if m.len() >= 2 {
                    match mode {
                        GraphTriples::Mixed => groups_m.push((ka, m)),
                        GraphTriples::Binary => {
                            for w in m.windows(2) {
                                uf.union(w[0], w[1]);
                            }
                        }
                    }
                }
            }
        }
        let mut changed = !groups_m.is_empty();
        while changed {
            changed = false;
            for (ka, m) in &groups_m {
                if m.iter().any(|&kb| uf.equiv(*ka, kb)) && !m.iter().all(|&kb| uf.equiv(*ka, kb)) {
                    for &kb in m {
                        uf.union(*ka, kb);
                    }
                    changed = true;
                }
            }
        }
        groups(block, &mut uf).map(|bs| bs.into_iter().map(|b| (b, ())).collect())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_newick;

    fn tri(s: &str) -> Triple {
        s.parse().unwrap()
    }

    fn tset(xs: &[&str]) -> BTreeSet<Triple> {
        xs.iter().map(|s| tri(s)).collect()
    }

    fn set(xs: &[&str]) -> BTreeSet<VertexId> {
        xs.iter().map(VertexId::new).collect()
    }

    fn build_fails() -> ColoredDigraph {
        ColoredDigraph::from_lists(
            &[("x", "A"), ("y", "B"), ("y'", "B"), ("z", "C"), ("z'", "C")],
            &[("x", "z"), ("x", "y"), ("x", "y'"), ("y'", "z"), ("z'", "y"), ("z'", "y'")],
        )
        .unwrap()
    }

    fn hourglass() -> ColoredDigraph {
        ColoredDigraph::from_lists(
            &[("x", "A"), ("x'", "A"), ("y", "B"), ("y'", "B")],
            &[("x", "y"), ("y", "x"), ("x'", "y'"), ("y'", "x'"), ("x", "y'"), ("y", "x'")],
        )
        .unwrap()
    }

    #[test]
    fn triple_parsing() {
        assert_eq!(tri("b,a|c"), tri("a,b|c"));
        assert_eq!(tri(" a , b | c ").to_string(), "a,b|c");
        assert!("a,a|c".parse::<Triple>().is_err());
        assert!("a|b".parse::<Triple>().is_err());
        assert!("a,b|c,d".parse::<Triple>().is_err());
    }

    #[test]
    fn build_fails_triples() {
        let g = build_fails();
        assert_eq!(informative_triples(&g).unwrap(), tset(&["x,z|z'", "y',z|z'"]));
        assert_eq!(
            forbidden_triples(&g).unwrap(),
            tset(&["x,y|y'", "x,y'|y", "z',y|y'", "z',y'|y"])
        );
    }

    #[test]
    fn hourglass_triples() {
        let g = hourglass();
        assert_eq!(
            forbidden_triples(&g).unwrap(),
            tset(&["x,y|y'", "x,y'|y", "y,x|x'", "y,x'|x"])
        );
        assert_eq!(
            binary_triples(&g).unwrap(),
            tset(&["x',y'|y", "y',x'|x", "y,y'|x", "x,x'|y"])
        );
    }

    #[test]
    fn trivial_triple_sets() {
        let edgeless = ColoredDigraph::from_lists(&[("a", "1"), ("b", "2"), ("c", "2")], &[]).unwrap();
        assert!(informative_triples(&edgeless).unwrap().is_empty());
        assert!(binary_triples(&edgeless).unwrap().is_empty());
        let path = ColoredDigraph::from_lists(
            &[("a", "1"), ("b", "2"), ("c", "2")],
            &[("a", "b"), ("b", "a"), ("c", "a")],
        )
        .unwrap();
        assert!(forbidden_triples(&path).unwrap().is_empty());
        let mono = ColoredDigraph::from_lists(&[("a", "1"), ("b", "1")], &[("a", "b")]).unwrap();
        assert!(matches!(informative_triples(&mono), Err(Error::ImproperColoring)));
    }

    #[test]
    fn restriction_of_triples() {
        let r = tset(&["x,z|z'", "y',z|z'"]);
        assert_eq!(restrict_triples(&r, &set(&["x", "y", "y'", "z", "z'"])), r);
        assert!(restrict_triples(&r, &set(&["x", "z"])).is_empty());
    }

    #[test]
    fn aho_graphs() {
        let leaves = set(&["x", "y", "y'", "z", "z'"]);
        let h = aho_graph(&tset(&["x,z|z'", "y',z|z'"]), &leaves).unwrap();
        assert_eq!(
            h.components(),
            vec![
                vec!["x".into(), "y'".into(), "z".into()],
                vec!["y".into()],
                vec!["z'".into()]
            ]
        );
        assert!(aho_graph(&BTreeSet::new(), &leaves).unwrap().edges.is_empty());
        let hb = aho_graph(&binary_triples(&hourglass()).unwrap(), &set(&["x", "x'", "y", "y'"]))
            .unwrap();
        assert_eq!(hb.edges.len(), 3);
        assert!(hb.is_connected());
        assert!(aho_graph(&tset(&["a,b|q"]), &set(&["a", "b"])).is_err());
    }

    #[test]
    fn build_and_mtt_on_build_fails() {
        let g = build_fails();
        let sys = TripleSystem::of_graph(&g).unwrap();
        let t1 = build(&sys.required, &sys.leaves).unwrap().unwrap();
        assert_eq!(t1, parse_newick("((x,z,y'),y,z');").unwrap().tree);
        let t2 = sys.mtt().unwrap().unwrap();
        assert_eq!(t2, parse_newick("((x,y,y',z),z');").unwrap().tree);
        assert_eq!(
            auxiliary_partition(&sys.required, &sys.forbidden, &sys.leaves).unwrap(),
            vec![set(&["x", "y", "y'", "z"]), set(&["z'"])]
        );
    }

    #[test]
    fn empty_and_inconsistent_systems() {
        let leaves = set(&["a", "b", "c", "d"]);
        let star = build(&BTreeSet::new(), &leaves).unwrap().unwrap();
        assert_eq!(star, PhyloTree::star(&leaves).unwrap());
        assert!(is_consistent(&BTreeSet::new(), &BTreeSet::new(), &leaves).unwrap());
        let rb = binary_triples(&hourglass()).unwrap();
        assert!(build(&rb, &set(&["x", "x'", "y", "y'"])).unwrap().is_none());
        assert!(!is_consistent(&rb, &BTreeSet::new(), &set(&["x", "x'", "y", "y'"])).unwrap());
        let h = TripleSystem::of_graph(&hourglass()).unwrap();
        let t = h.mtt().unwrap().unwrap();
        assert_eq!(t, parse_newick("((x',y'),x,y);").unwrap().tree);
        assert!(mtt(&BTreeSet::new(), &BTreeSet::new(), &BTreeSet::new()).is_err());
        assert!(mtt(&tset(&["a,b|q"]), &BTreeSet::new(), &leaves).is_err());
    }

    #[test]
    fn cyclic_triples_are_inconsistent() {
        let r = tset(&["a,b|c", "b,c|a", "a,c|b"]);
        assert!(build(&r, &set(&["a", "b", "c"])).unwrap().is_none());
        let r = tset(&["a,b|c"]);
        let f = tset(&["a,b|c"]);
        assert!(mtt(&r, &f, &set(&["a", "b", "c"])).unwrap().is_none());
    }

    #[test]
    fn graph_engine_matches_explicit_mtt() {
        for g in [build_fails(), hourglass()] {
            let sys = TripleSystem::of_graph(&g).unwrap();
            let explicit = sys.mtt().unwrap();
            let grouped = graph_partition_tree(&g, GraphTriples::Mixed)
                .map(|raw| PhyloTree::from_raw(&raw).unwrap().0);
            assert_eq!(explicit, grouped);
            let rb = binary_triples(&g).unwrap();
            let explicit = build(&rb, &sys.leaves).unwrap();
            let grouped = graph_partition_tree(&g, GraphTriples::Binary)
                .map(|raw| PhyloTree::from_raw(&raw).unwrap().0);
            assert_eq!(explicit, grouped);
        }
    }
}
