//! Local axioms for two-colored qBMGs and the constructions built on them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredDigraph, VertexId};
use crate::qbmg::{explain_over, qbmg_of};
use crate::tree::{Hierarchy, NodeId, PhyloTree};
use crate::truncation::{Explanation, TruncationMap};

/// Default number of witnesses collected per axiom.
pub const DEFAULT_WITNESS_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AxiomTag {
    N1,
    N2,
    N3,
    #[serde(rename = "N3'")]
    N3Prime,
    N4,
}

impl AxiomTag {
    pub const ALL: [AxiomTag; 5] =
        [AxiomTag::N1, AxiomTag::N2, AxiomTag::N3, AxiomTag::N3Prime, AxiomTag::N4];
}

impl fmt::Display for AxiomTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AxiomTag::N1 => "N1",
            AxiomTag::N2 => "N2",
            AxiomTag::N3 => "N3",
            AxiomTag::N3Prime => "N3'",
            AxiomTag::N4 => "N4",
        })
    }
}

impl FromStr for AxiomTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<AxiomTag> {
        match s.to_ascii_uppercase().as_str() {
            "N1" => Ok(AxiomTag::N1),
            "N2" => Ok(AxiomTag::N2),
            "N3" => Ok(AxiomTag::N3),
            "N3'" | "N3P" | "N3PRIME" => Ok(AxiomTag::N3Prime),
            "N4" => Ok(AxiomTag::N4),
            _ => Err(Error::InvalidParameter(format!("unknown axiom `{s}`"))),
        }
    }
}

/// Violations of one axiom; satisfied iff `witnesses` is empty.
///
/// Witness shapes: N1 `(x, y, t, w)` with `xt, yw, tw ∈ E`; N2
/// `(x1, y1, x2, y2)` with the shortcut `x1 y2` missing; N3 and N3' `(x, y)`;
/// N4 `(x)` for a sink without a twin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub axiom: AxiomTag,
    pub witnesses: Vec<Vec<VertexId>>,
}

impl AxiomReport {
    pub fn satisfied(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Bitset neighborhoods by vertex position.
struct Nbhd {
    out: Vec<FixedBitSet>,
    inn: Vec<FixedBitSet>,
    /// `N(N(x))`
    nn: Vec<FixedBitSet>,
}

impl Nbhd {
    fn new(g: &ColoredDigraph) -> Nbhd {
        let n = g.vertex_count();
        let set = |xs: &[usize]| {
            let mut b = FixedBitSet::with_capacity(n);
            b.extend(xs.iter().copied());
            b
        };
        let out: Vec<FixedBitSet> = (0..n).map(|i| set(g.out_positions(i))).collect();
        let inn = (0..n).map(|i| set(g.in_positions(i))).collect();
        let nn = (0..n).map(|i| image(&out, &out[i])).collect();
        Nbhd { out, inn, nn }
    }

    fn adjacent(&self, x: usize, y: usize) -> bool {
        self.out[x].contains(y) || self.out[y].contains(x)
    }
}

/// `N(A)` for a set `A`.
fn image(out: &[FixedBitSet], a: &FixedBitSet) -> FixedBitSet {
    let mut r = FixedBitSet::with_capacity(out.len());
    for v in a.ones() {
        r.union_with(&out[v]);
    }
    r
}

fn nested(a: &FixedBitSet, b: &FixedBitSet) -> bool {
    a.is_subset(b) || b.is_subset(a)
}

/// First [`DEFAULT_WITNESS_LIMIT`] violations of `which`, in id order.
pub fn check_axiom(g: &ColoredDigraph, which: AxiomTag) -> AxiomReport {
    check_axiom_with_limit(g, which, Some(DEFAULT_WITNESS_LIMIT))
}

/// All violations when `limit` is `None`.
pub fn check_axiom_with_limit(g: &ColoredDigraph, which: AxiomTag, limit: Option<usize>) -> AxiomReport {
    let nb = Nbhd::new(g);
    let witnesses = witnesses(g, &nb, which, limit.unwrap_or(usize::MAX));
    let ids = |t: Vec<usize>| t.into_iter().map(|i| g.vertices()[i].clone()).collect();
    AxiomReport { axiom: which, witnesses: witnesses.into_iter().map(ids).collect() }
}

/// Whether `g` satisfies `which`.
pub fn satisfies(g: &ColoredDigraph, which: AxiomTag) -> bool {
    witnesses(g, &Nbhd::new(g), which, 1).is_empty()
}

/// Whether `g` satisfies every axiom in `which`.
pub fn satisfies_all(g: &ColoredDigraph, which: &[AxiomTag]) -> bool {
    let nb = Nbhd::new(g);
    which.iter().all(|&a| witnesses(g, &nb, a, 1).is_empty())
}

fn witnesses(g: &ColoredDigraph, nb: &Nbhd, which: AxiomTag, limit: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut found = Vec::new();
    macro_rules! push {
        ($($v:expr),*) => {{
            found.push(vec![$($v),*]);
            if found.len() >= limit {
                return found;
            }
        }};
    }
    match which {
        AxiomTag::N1 => {
            for x in 0..n {
                for y in 0..n {
                    if (x != y && nb.adjacent(x, y)) || nb.nn[x].is_disjoint(&nb.out[y]) {
                        continue;
                    }
                    for t in nb.out[x].ones() {
                        for w in nb.out[t].intersection(&nb.out[y]) {
                            push!(x, y, t, w);
                        }
                    }
                }
            }
        }
        AxiomTag::N2 => {
            for x1 in 0..n {
                for y1 in nb.out[x1].ones() {
                    for x2 in nb.out[y1].ones() {
                        for y2 in nb.out[x2].ones() {
                            if !nb.out[x1].contains(y2) {
                                push!(x1, y1, x2, y2);
                            }
                        }
                    }
                }
            }
        }
        AxiomTag::N3 => {
            for x in 0..n {
                for y in x + 1..n {
                    if !nb.out[x].is_disjoint(&nb.out[y]) && !nested(&nb.out[x], &nb.out[y]) {
                        push!(x, y);
                    }
                }
            }
        }
        AxiomTag::N3Prime => {
            for x in 0..n {
                for y in x + 1..n {
                    if nb.nn[y].contains(x)
                        || nb.nn[x].contains(y)
                        || nb.out[x].is_disjoint(&nb.out[y])
                    {
                        continue;
                    }
                    if nb.inn[x] != nb.inn[y] || !nested(&nb.out[x], &nb.out[y]) {
                        push!(x, y);
                    }
                }
            }
        }
        AxiomTag::N4 => {
            for x in 0..n {
                if nb.out[x].is_clear() && twin(g, nb, x).is_none() {
                    push!(x);
                }
            }
        }
    }
    found
}

/// Smallest `y ≠ x` with `σ(y) = σ(x)` and `N⁻(y) = N⁻(x)`.
fn twin(g: &ColoredDigraph, nb: &Nbhd, x: usize) -> Option<usize> {
    (0..g.vertex_count())
        .find(|&y| y != x && g.color_index(y) == g.color_index(x) && nb.inn[y] == nb.inn[x])
}

/// Whether `[N1 ∧ N2 ∧ N3'] ⟺ [N1 ∧ N2 ∧ N3]` holds on `g`.
pub fn equivalent_n3_forms(g: &ColoredDigraph) -> bool {
    let nb = Nbhd::new(g);
    let holds = |a| witnesses(g, &nb, a, 1).is_empty();
    let base = holds(AxiomTag::N1) && holds(AxiomTag::N2);
    (base && holds(AxiomTag::N3Prime)) == (base && holds(AxiomTag::N3))
}

/// Whether the underlying undirected graph is bipartite.
pub fn is_bipartite_underlying(g: &ColoredDigraph) -> bool {
    two_coloring(g).is_some()
}

/// A proper 2-coloring of the underlying graph: side per position, with the
/// smallest vertex of every component on side `false`.
fn two_coloring(g: &ColoredDigraph) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let here = side[v].unwrap();
            for &u in g.out_positions(v).iter().chain(g.in_positions(v)) {
                match side[u] {
                    None => {
                        side[u] = Some(!here);
                        stack.push(u);
                    }
                    Some(c) if c == here => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

/// Reachable sets `R`, `Q` and `R' = R ∪ Q` per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachableSets {
    pub r: BTreeMap<VertexId, BTreeSet<VertexId>>,
    pub q: BTreeMap<VertexId, BTreeSet<VertexId>>,
    pub rp: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

/// `(R, Q)` by position; `R` is the full forward closure.
fn reachable_bits(nb: &Nbhd) -> (Vec<FixedBitSet>, Vec<FixedBitSet>) {
    let n = nb.out.len();
    let r = (0..n)
        .map(|x| {
            let mut reach = nb.out[x].clone();
            let mut frontier = reach.clone();
            while !frontier.is_clear() {
                let mut next = image(&nb.out, &frontier);
                next.difference_with(&reach);
                reach.union_with(&next);
                frontier = next;
            }
            reach
        })
        .collect();
    let q = (0..n)
        .map(|x| {
            let mut q = FixedBitSet::with_capacity(n);
            q.extend((0..n).filter(|&y| {
                nb.inn[y] == nb.inn[x] && !nb.out[y].is_clear() && nb.out[y].is_subset(&nb.out[x])
            }));
            q
        })
        .collect();
    (r, q)
}

pub fn reachable_sets(g: &ColoredDigraph) -> Result<ReachableSets> {
    if g.palette().len() > 2 {
        return Err(Error::TooManyColors(g.palette().len()));
    }
    let nb = Nbhd::new(g);
    let (r, q) = reachable_bits(&nb);
    if cfg!(debug_assertions) {
        let n = g.vertex_count();
        let n1 = witnesses(g, &nb, AxiomTag::N1, 1).is_empty();
        let n2 = witnesses(g, &nb, AxiomTag::N2, 1).is_empty();
        for x in 0..n {
            if n2 {
                let mut short = nb.out[x].clone();
                short.union_with(&nb.nn[x]);
                debug_assert_eq!(r[x], short, "closure shortcut under N2");
            }
            if n1 && n2 {
                for y in 0..n {
                    if nb.out[x].is_disjoint(&nb.out[y]) {
                        debug_assert!(nb.nn[x].is_disjoint(&nb.nn[y]), "disjoint second neighborhoods");
                    }
                }
            }
        }
    }
    let ids = |b: &FixedBitSet| -> BTreeSet<VertexId> { b.ones().map(|i| g.vertices()[i].clone()).collect() };
    let mut out = ReachableSets { r: BTreeMap::new(), q: BTreeMap::new(), rp: BTreeMap::new() };
    for (x, v) in g.vertices().iter().enumerate() {
        let mut rp = r[x].clone();
        rp.union_with(&q[x]);
        out.r.insert(v.clone(), ids(&r[x]));
        out.q.insert(v.clone(), ids(&q[x]));
        out.rp.insert(v.clone(), ids(&rp));
    }
    Ok(out)
}

fn require(g: &ColoredDigraph, which: &[AxiomTag]) -> Result<()> {
    for &a in which {
        let report = check_axiom(g, a);
        if !report.satisfied() {
            return Err(Error::AxiomViolation(Box::new(report)));
        }
    }
    Ok(())
}

const N123: [AxiomTag; 3] = [AxiomTag::N1, AxiomTag::N2, AxiomTag::N3];

/// Non-empty extended reachable sets plus singletons and `V(G)`.
pub fn hierarchy_from_axioms(g: &ColoredDigraph) -> Result<Hierarchy> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyLeafSet);
    }
    require(g, &N123)?;
    let nb = Nbhd::new(g);
    let (r, q) = reachable_bits(&nb);
    let ground: BTreeSet<VertexId> = g.vertices().iter().cloned().collect();
    let mut blocks: BTreeSet<BTreeSet<VertexId>> =
        ground.iter().map(|x| BTreeSet::from([x.clone()])).collect();
    blocks.insert(ground.clone());
    for x in 0..g.vertex_count() {
        let mut rp = r[x].clone();
        rp.union_with(&q[x]);
        if !rp.is_clear() {
            blocks.insert(rp.ones().map(|i| g.vertices()[i].clone()).collect());
        }
    }
    Hierarchy::new(ground, blocks)
}

fn check_two_colored(g: &ColoredDigraph) -> Result<()> {
    if g.palette().len() > 2 {
        return Err(Error::TooManyColors(g.palette().len()));
    }
    if !g.is_properly_colored() {
        return Err(Error::ImproperColoring);
    }
    Ok(())
}

/// Explanation over the tree of [`hierarchy_from_axioms`] with
/// `u(x, r) = ρ` for non-sinks and `u(x, r) = x` for sinks.
pub fn explain_2qbmg(g: &ColoredDigraph) -> Result<Explanation> {
    check_two_colored(g)?;
    let tree = PhyloTree::from_hierarchy(&hierarchy_from_axioms(g)?)?;
    explain_over(tree, g)
}

fn leaf_limits(e: &Explanation) -> Vec<(VertexId, Color)> {
    e.truncation()
        .iter()
        .filter(|(x, s, n)| e.coloring().color(x) != Some(s) && e.tree().leaf(x) == Some(*n))
        .map(|(x, s, _)| (x.clone(), s.clone()))
        .collect()
}

/// Explanation whose limits all sit strictly above the leaves, if one
/// exists. `None` exactly when N4 fails.
pub fn explain_with_m(g: &ColoredDigraph) -> Result<Option<Explanation>> {
    check_two_colored(g)?;
    if g.vertex_count() == 0 {
        return Err(Error::EmptyLeafSet);
    }
    if !satisfies_all(g, &N123) {
        return Err(Error::NotTwoQbmg);
    }
    let nb = Nbhd::new(g);
    if g.palette().len() == 2 && !witnesses(g, &nb, AxiomTag::N4, 1).is_empty() {
        return Ok(None);
    }
    let mut e = explain_2qbmg(g)?;
    loop {
        let pending = leaf_limits(&e);
        let Some((x, _)) = pending.first().cloned() else {
            return Ok(Some(e));
        };
        let next = lift_limit(g, &nb, &e, &x)?;
        if leaf_limits(&next).len() >= pending.len() {
            return Err(Error::Verification("leaf-level limits did not decrease".into()));
        }
        if qbmg_of(&next) != *g {
            return Err(Error::Verification("lifting a limit changed the graph".into()));
        }
        e = next;
    }
}

/// One step: moves the leaf-level limits of the sink `x` above the leaf.
fn lift_limit(g: &ColoredDigraph, nb: &Nbhd, e: &Explanation, x: &VertexId) -> Result<Explanation> {
    let tree = e.tree();
    let coloring = e.coloring();
    let own = coloring.color(x).unwrap().clone();
    let lx = tree.leaf_node(x)?;
    let w = tree.parent(lx).ok_or_else(|| Error::Verification("sink is the only leaf".into()))?;
    let mono = tree.subtree_leaves(w).iter().all(|&l| coloring.color(tree.label(l).unwrap()) == Some(&own));
    if mono {
        let mut u = e.truncation().clone();
        for (s, n) in e.truncation().iter().filter(|(z, _, _)| *z == x).map(|(_, s, n)| (s.clone(), n)) {
            if s != own && n == lx {
                u.set(x.clone(), s, w);
            }
        }
        return Explanation::new(tree.clone(), coloring.clone(), u);
    }
    let xi = g.position(x).unwrap();
    let y = twin(g, nb, xi).ok_or_else(|| Error::Verification(format!("`{x}` has no twin")))?;
    let y = &g.vertices()[y];
    let mut keep = tree.leaf_labels();
    keep.remove(x);
    let (restricted, map) = tree.restrict_with_map(&keep)?;
    let sibling = match tree.children(w) {
        [a, b] => Some(if *a == lx { *b } else { *a }),
        _ => None,
    };
    let image = |n: NodeId| -> Option<NodeId> {
        map[n.index()].or_else(|| if n == w { sibling.and_then(|v| map[v.index()]) } else { None })
    };
    // subdivide the edge above y and hang x next to it
    let mut raw = restricted.to_raw();
    let ly = restricted.leaf_node(y)?;
    let py = restricted.parent(ly).unwrap();
    let xl = raw.add_leaf(x.clone());
    let p = raw.add_inner(vec![ly.index(), xl]);
    for c in raw.children[py.index()].iter_mut() {
        if *c == ly.index() {
            *c = p;
        }
    }
    let (t2, map2) = PhyloTree::from_raw(&raw)?;
    let mut u = TruncationMap::new();
    for (z, s, n) in e.truncation().iter() {
        let node = if z == x {
            if *s == own {
                t2.leaf_node(x)?
            } else {
                map2[p].unwrap()
            }
        } else {
            let n = image(n).ok_or_else(|| Error::Verification("limit lost in restriction".into()))?;
            map2[n.index()].unwrap()
        };
        u.set(z.clone(), s.clone(), node);
    }
    Explanation::new(t2, coloring.clone(), u)
}

/// Recolors every weak component with a proper 2-coloring. The smallest
/// vertex of component `i` gets the first color unless `swap[i]` is set.
pub fn recolor_component_swap(g: &ColoredDigraph, swap: &[bool]) -> Result<ColoredDigraph> {
    require(g, &N123)?;
    let comps = g.weak_component_positions();
    if swap.len() != comps.len() {
        return Err(Error::InvalidParameter(format!(
            "expected {} swap flags, got {}",
            comps.len(),
            swap.len()
        )));
    }
    let side = two_coloring(g)
        .ok_or_else(|| Error::Verification("axioms hold but the graph is not bipartite".into()))?;
    let first = g.palette().first().cloned().unwrap_or_else(|| Color::new("A"));
    let second = g.palette().get(1).cloned().unwrap_or_else(|| {
        let mut c = String::from("B");
        while c == first.as_str() {
            c.push('\'');
        }
        Color::new(c)
    });
    let mut flip = vec![false; g.vertex_count()];
    for (c, members) in comps.iter().enumerate() {
        for &i in members {
            flip[i] = swap[c];
        }
    }
    let colors: Vec<Color> = (0..g.vertex_count())
        .map(|i| if side[i] ^ flip[i] { second.clone() } else { first.clone() })
        .collect();
    let palette: BTreeSet<Color> = colors.iter().cloned().chain([first]).collect();
    Ok(g.recolored(palette, |v| colors[g.position(v).unwrap()].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbmg::recognize_qbmg;

    fn g(vs: &[(&str, &str)], es: &[(&str, &str)]) -> ColoredDigraph {
        ColoredDigraph::from_lists(vs, es).unwrap()
    }

    fn ids(xs: &[&str]) -> Vec<VertexId> {
        xs.iter().map(VertexId::new).collect()
    }

    #[test]
    fn tags_parse_and_print() {
        for t in AxiomTag::ALL {
            assert_eq!(t.to_string().parse::<AxiomTag>().unwrap(), t);
        }
        assert_eq!(serde_json::to_string(&AxiomTag::N3Prime).unwrap(), "\"N3'\"");
        assert!("N5".parse::<AxiomTag>().is_err());
    }

    #[test]
    fn single_edge() {
        let e = g(&[("a", "1"), ("b", "2")], &[("a", "b")]);
        for t in [AxiomTag::N1, AxiomTag::N2, AxiomTag::N3, AxiomTag::N3Prime] {
            assert!(check_axiom(&e, t).satisfied(), "{t}");
        }
        assert_eq!(check_axiom(&e, AxiomTag::N4).witnesses, vec![ids(&["b"])]);
        assert_eq!(explain_with_m(&e).unwrap(), None);
        let ex = explain_2qbmg(&e).unwrap();
        assert_eq!(ex.tree().shape_string(), "(a,b)");
        let b = VertexId::new("b");
        assert_eq!(ex.limit(&b, &Color::new("1")), ex.tree().leaf(&b));
    }

    #[test]
    fn three_cycle() {
        let c = g(&[("a", "1"), ("b", "2"), ("c", "3")], &[("a", "b"), ("b", "c"), ("c", "a")]);
        let n2 = check_axiom(&c, AxiomTag::N2);
        assert_eq!(n2.witnesses[0], ids(&["a", "b", "c", "a"]));
        assert!(!is_bipartite_underlying(&c));
    }

    #[test]
    fn chromatic_number_three() {
        // explained under three colors by ((v,y,z),x)
        let three = g(
            &[("v", "A"), ("x", "A"), ("y", "B"), ("z", "C")],
            &[("v", "z"), ("x", "y"), ("y", "v"), ("z", "v")],
        );
        assert!(recognize_qbmg(&three).unwrap().is_accepted());
        let two = three.recolored([Color::new("A"), Color::new("B")], |v| {
            Color::new(if matches!(v.as_str(), "v" | "x") { "A" } else { "B" })
        });
        assert!(two.is_properly_colored());
        let n1 = check_axiom_with_limit(&two, AxiomTag::N1, None);
        assert!(n1.witnesses.contains(&ids(&["x", "z", "y", "v"])));
        let n2 = check_axiom_with_limit(&two, AxiomTag::N2, None);
        assert!(n2.witnesses.contains(&ids(&["x", "y", "v", "z"])));
        assert!(!recognize_qbmg(&two).unwrap().is_accepted());
    }

    #[test]
    fn witnesses_are_bounded() {
        // every sink of a large edgeless two-colored graph with unique colors
        let vs: Vec<(String, String)> = (0..30).map(|i| (format!("v{i:02}"), "A".into())).collect();
        let vs: Vec<(&str, &str)> = vs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let mut es = Vec::new();
        let hub = ("h", "B");
        let mut all = vs.clone();
        all.push(hub);
        for (v, _) in &vs {
            es.push(("h", *v));
        }
        let gr = g(&all, &es);
        assert!(check_axiom(&gr, AxiomTag::N4).satisfied());
        let iso: Vec<(String, String)> = (0..30).map(|i| (format!("v{i:02}"), format!("c{i}"))).collect();
        let iso: Vec<(&str, &str)> = iso.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let gr = g(&iso, &[]);
        assert_eq!(check_axiom(&gr, AxiomTag::N4).witnesses.len(), DEFAULT_WITNESS_LIMIT);
        assert_eq!(check_axiom_with_limit(&gr, AxiomTag::N4, None).witnesses.len(), 30);
    }

    #[test]
    fn reachable_sets_basic() {
        let gr = g(&[("a", "1"), ("b", "2")], &[("a", "b"), ("b", "a")]);
        let rs = reachable_sets(&gr).unwrap();
        let a = VertexId::new("a");
        assert_eq!(rs.r[&a], ids(&["a", "b"]).into_iter().collect());
        assert_eq!(rs.q[&a], ids(&["a"]).into_iter().collect());
        let h = hierarchy_from_axioms(&gr).unwrap();
        assert_eq!(h.blocks().len(), 3);
        let sink = g(&[("a", "1"), ("b", "2")], &[("a", "b")]);
        let rs = reachable_sets(&sink).unwrap();
        assert!(rs.rp[&VertexId::new("b")].is_empty());
        assert!(rs.q[&VertexId::new("a")].contains(&a));
    }

    #[test]
    fn edgeless_hierarchy() {
        let gr = g(&[("a", "1"), ("b", "2"), ("c", "1")], &[]);
        let h = hierarchy_from_axioms(&gr).unwrap();
        assert_eq!(h.blocks().len(), 4);
    }

    #[test]
    fn axiom_violation_reported() {
        let path = g(&[("a", "1"), ("b", "2"), ("c", "1"), ("d", "2")], &[("a", "b"), ("b", "c"), ("c", "d")]);
        match hierarchy_from_axioms(&path) {
            Err(Error::AxiomViolation(r)) => assert_eq!(r.axiom, AxiomTag::N2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn n4_not_hereditary() {
        let gr = g(&[("a", "A"), ("x", "B"), ("y", "B")], &[("a", "x"), ("a", "y")]);
        assert!(check_axiom(&gr, AxiomTag::N4).satisfied());
        let sub = gr.induced_subgraph(&ids(&["a", "y"]).into_iter().collect()).unwrap();
        assert!(!check_axiom(&sub, AxiomTag::N4).satisfied());
        let e = explain_with_m(&gr).unwrap().unwrap();
        assert_eq!(e.tree().shape_string(), "(a,(x,y))");
        let cherry = e.tree().lca(e.tree().leaf(&ids(&["x"])[0]).unwrap(), e.tree().leaf(&ids(&["y"])[0]).unwrap());
        for v in ["x", "y"] {
            assert_eq!(e.limit(&VertexId::new(v), &Color::new("A")), Some(cherry));
        }
        assert!(e.limits_avoid_leaves());
    }

    #[test]
    fn component_swap() {
        let gr = g(
            &[("a", "1"), ("b", "2"), ("c", "1"), ("d", "2")],
            &[("a", "b"), ("b", "a"), ("c", "d"), ("d", "c")],
        );
        for swap in [[false, false], [false, true], [true, false], [true, true]] {
            let h = recolor_component_swap(&gr, &swap).unwrap();
            assert!(h.is_properly_colored());
            assert!(explain_2qbmg(&h).is_ok());
        }
        let k1 = g(&[("a", "1")], &[]);
        let h = recolor_component_swap(&k1, &[false]).unwrap();
        assert_eq!(h.palette().len(), 1);
        assert!(explain_2qbmg(&h).is_ok());
    }
}
