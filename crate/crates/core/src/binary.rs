//! Binary-explainable qBMGs, hourglasses and the polygon family.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredDigraph, VertexId};
use crate::qbmg::recognize_binary;
use crate::tree::PhyloTree;
use crate::truncation::Explanation;

/// Induced hourglass `[x y ⇅ x' y']`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Hourglass {
    pub x: VertexId,
    pub x_prime: VertexId,
    pub y: VertexId,
    pub y_prime: VertexId,
}

/// An explanation over a binary tree, if one exists.
pub fn is_binary_explainable(g: &ColoredDigraph) -> Result<Option<Explanation>> {
    Ok(recognize_binary(g)?.into_explanation())
}

/// All induced hourglasses. Swapping the roles of `(x, x')` and `(y, y')`
/// gives the same hourglass, so only the orientation with `x < y` is listed.
pub fn find_hourglasses(g: &ColoredDigraph) -> Vec<Hourglass> {
    let n = g.vertex_count();
    let mut found = Vec::new();
    for x in 0..n {
        let cx = g.color_index(x);
        for &y in g.out_positions(x) {
            if y < x || !g.has_edge_positions(y, x) {
                continue;
            }
            let cy = g.color_index(y);
            for &yp in g.out_positions(x) {
                if yp == y || g.color_index(yp) != cy || g.has_edge_positions(yp, x) {
                    continue;
                }
                for &xp in g.out_positions(y) {
                    if xp == x
                        || g.color_index(xp) != cx
                        || g.has_edge_positions(xp, y)
                        || !g.has_edge_positions(xp, yp)
                        || !g.has_edge_positions(yp, xp)
                    {
                        continue;
                    }
                    let id = |i: usize| g.vertices()[i].clone();
                    found.push(Hourglass { x: id(x), x_prime: id(xp), y: id(y), y_prime: id(yp) });
                }
            }
        }
    }
    found.sort();
    found
}

/// Resolves every polytomy into a left-leaning caterpillar over the
/// children in canonical order.
pub fn binary_refine(tree: &PhyloTree) -> PhyloTree {
    let mut raw = tree.to_raw();
    for v in 0..raw.children.len() {
        if raw.children[v].len() <= 2 {
            continue;
        }
        let ch = std::mem::take(&mut raw.children[v]);
        let mut acc = ch[0];
        for &c in &ch[1..ch.len() - 1] {
            acc = raw.add_inner(vec![acc, c]);
        }
        raw.children[v] = vec![acc, ch[ch.len() - 1]];
    }
    PhyloTree::from_raw(&raw).expect("refinement keeps the tree valid").0
}

/// The `4k`-gon graph: vertices `x1, z1, …, x2k, z2k`, colors `c1 … c2k`
/// with `σ(xi) = σ(zi) = ci`, and edges `xi x[i+k]`, `xi z[i+k]`,
/// `zi x[i+1]` with indices taken mod `2k`.
pub fn polygon_counterexample(k: usize) -> Result<ColoredDigraph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("polygon needs k >= 2, got {k}")));
    }
    let m = 2 * k;
    let x = |i: usize| VertexId::new(format!("x{}", i % m + 1));
    let z = |i: usize| VertexId::new(format!("z{}", i % m + 1));
    let c = |i: usize| Color::new(format!("c{}", i + 1));
    let palette: BTreeSet<Color> = (0..m).map(c).collect();
    let vertices = (0..m).flat_map(|i| [(x(i), c(i)), (z(i), c(i))]);
    let edges = (0..m).flat_map(|i| [(x(i), x(i + k)), (x(i), z(i + k)), (z(i), x(i + 1))]);
    ColoredDigraph::new(palette, vertices, edges)
}
