//! Random trees, colorings, truncation maps and qBMGs.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredDigraph, VertexId};
use crate::qbmg::qbmg_of;
use crate::tree::{PhyloTree, RawTree};
use crate::truncation::{Explanation, LeafColoring, TruncationMap};

fn padded(prefix: &str, n: usize) -> Vec<String> {
    let w = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("{prefix}{i:0w$}")).collect()
}

/// Random tree on leaves `l0 … l{n-1}` grown by leaf insertion: each new
/// leaf either joins an inner vertex as a child (probability
/// `polytomy`) or subdivides the edge above a uniformly chosen vertex.
pub fn random_tree(n: usize, polytomy: f64, rng: &mut impl Rng) -> Result<PhyloTree> {
    if n == 0 {
        return Err(Error::EmptyLeafSet);
    }
    if !(0.0..=1.0).contains(&polytomy) {
        return Err(Error::InvalidParameter(format!("polytomy probability {polytomy} outside [0, 1]")));
    }
    let names = padded("l", n);
    let mut raw = RawTree::default();
    let mut parent: Vec<Option<usize>> = Vec::new();
    raw.root = raw.add_leaf(VertexId::new(&names[0]));
    parent.push(None);
    for name in &names[1..] {
        let v = rng.random_range(0..raw.children.len());
        let leaf = raw.add_leaf(VertexId::new(name));
        parent.push(None);
        if !raw.children[v].is_empty() && rng.random_bool(polytomy) {
            raw.children[v].push(leaf);
            parent[leaf] = Some(v);
            continue;
        }
        let w = raw.add_inner(vec![v, leaf]);
        parent.push(parent[v]);
        match parent[v] {
            Some(p) => {
                for c in raw.children[p].iter_mut() {
                    if *c == v {
                        *c = w;
                    }
                }
            }
            None => raw.root = w,
        }
        parent[v] = Some(w);
        parent[leaf] = Some(w);
    }
    Ok(PhyloTree::from_raw(&raw)?.0)
}

/// Colors `c0 … c{k-1}`; every color is used when `k ≤ |L|`.
pub fn random_coloring(tree: &PhyloTree, k: usize, rng: &mut impl Rng) -> Result<LeafColoring> {
    if k == 0 {
        return Err(Error::InvalidParameter("need at least one color".into()));
    }
    let palette: Vec<Color> = padded("c", k).into_iter().map(Color::from).collect();
    let mut leaves: Vec<VertexId> = tree.leaf_labels().into_iter().collect();
    leaves.shuffle(rng);
    let colors: BTreeMap<VertexId, Color> = leaves
        .into_iter()
        .enumerate()
        .map(|(i, x)| {
            let c = if i < k { i } else { rng.random_range(0..k) };
            (x, palette[c].clone())
        })
        .collect();
    Ok(LeafColoring::new(colors, palette))
}

/// Each off-color limit stays at the root with probability `keep_root`,
/// otherwise it is drawn uniformly from the root path of the leaf.
pub fn random_truncation(
    tree: &PhyloTree,
    coloring: &LeafColoring,
    keep_root: f64,
    rng: &mut impl Rng,
) -> Result<TruncationMap> {
    if !(0.0..=1.0).contains(&keep_root) {
        return Err(Error::InvalidParameter(format!("probability {keep_root} outside [0, 1]")));
    }
    let mut u = TruncationMap::new();
    for &l in tree.leaves() {
        let x = tree.label(l).unwrap();
        let path = tree.root_path(l);
        for s in coloring.palette() {
            let node = if coloring.color(x) == Some(s) {
                l
            } else if rng.random_bool(keep_root) {
                tree.root()
            } else {
                path[rng.random_range(0..path.len())]
            };
            u.set(x.clone(), s.clone(), node);
        }
    }
    Ok(u)
}

/// Parameters of [`random_qbmg`].
#[derive(Clone, Copy, Debug)]
pub struct QbmgParams {
    pub leaves: usize,
    pub colors: usize,
    pub polytomy: f64,
    pub keep_root: f64,
}

impl Default for QbmgParams {
    fn default() -> Self {
        QbmgParams { leaves: 10, colors: 3, polytomy: 0.3, keep_root: 0.7 }
    }
}

/// Random explanation and the qBMG it explains.
pub fn random_qbmg(p: QbmgParams, rng: &mut impl Rng) -> Result<(Explanation, ColoredDigraph)> {
    let tree = random_tree(p.leaves, p.polytomy, rng)?;
    let coloring = random_coloring(&tree, p.colors, rng)?;
    let u = random_truncation(&tree, &coloring, p.keep_root, rng)?;
    let e = Explanation::new(tree, coloring, u)?;
    let g = qbmg_of(&e);
    Ok((e, g))
}

/// Random digraph on `v0 …` with colors `c0 …`; each ordered pair of
/// differently colored vertices becomes an edge with probability `p`.
pub fn random_colored_digraph(n: usize, k: usize, p: f64, rng: &mut impl Rng) -> Result<ColoredDigraph> {
    if k == 0 {
        return Err(Error::InvalidParameter("need at least one color".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let names: Vec<VertexId> = padded("v", n).into_iter().map(VertexId::from).collect();
    let palette: Vec<Color> = padded("c", k).into_iter().map(Color::from).collect();
    let col: Vec<usize> = (0..n).map(|_| rng.random_range(0..k)).collect();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if col[a] != col[b] && rng.random_bool(p) {
                edges.push((names[a].clone(), names[b].clone()));
            }
        }
    }
    ColoredDigraph::new(
        palette.iter().cloned(),
        names.iter().cloned().zip(col.iter().map(|&c| palette[c].clone())),
        edges,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn deterministic_under_seed() {
        let p = QbmgParams { leaves: 30, colors: 4, ..Default::default() };
        let a = random_qbmg(p, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        let b = random_qbmg(p, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.0.tree().leaf_count(), 30);
        assert_eq!(a.0.coloring().colors().values().collect::<std::collections::BTreeSet<_>>().len(), 4);
    }

    #[test]
    fn binary_without_polytomies() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..20 {
            let t = random_tree(n, 0.0, &mut rng).unwrap();
            assert_eq!(t.leaf_count(), n);
            assert!(t.is_binary());
        }
        assert!(random_tree(0, 0.5, &mut rng).is_err());
    }
}
