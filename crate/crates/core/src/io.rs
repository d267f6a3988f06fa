//! Newick and JSON formats.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredDigraph, VertexId};
use crate::tree::{NodeId, PhyloTree, RawTree};
use crate::triples::{Triple, TripleSystem};
use crate::truncation::{Explanation, LeafColoring, TruncationMap};

// ---------------------------------------------------------------- graph JSON

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    colors: Vec<String>,
    edges: Vec<(String, String)>,
    vertices: Vec<VertexJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexJson {
    color: String,
    id: String,
}

impl ColoredDigraph {
    /// `{"colors":[…],"edges":[[tail,head]…],"vertices":[{"color","id"}…]}`,
    /// everything sorted.
    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            colors: self.palette().iter().map(|c| c.to_string()).collect(),
            edges: self.edges().map(|(t, h)| (t.to_string(), h.to_string())).collect(),
            vertices: self
                .vertices()
                .iter()
                .enumerate()
                .map(|(i, v)| VertexJson {
                    color: self.palette()[self.color_index(i)].to_string(),
                    id: v.to_string(),
                })
                .collect(),
        };
        pretty(&doc)
    }

    pub fn from_json(s: &str) -> Result<ColoredDigraph> {
        let doc: GraphJson = serde_json::from_str(s)?;
        let mut palette = BTreeSet::new();
        for c in &doc.colors {
            if !palette.insert(Color::new(c)) {
                return Err(Error::DuplicateColor(c.clone()));
            }
        }
        for v in &doc.vertices {
            if !palette.contains(&Color::new(&v.color)) {
                return Err(Error::UnknownColor(v.color.clone()));
            }
        }
        ColoredDigraph::new(
            palette,
            doc.vertices.iter().map(|v| (VertexId::new(&v.id), Color::new(&v.color))),
            doc.edges.iter().map(|(t, h)| (VertexId::new(t), VertexId::new(h))),
        )
    }
}

fn pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable");
    s.push('\n');
    s
}

// ---------------------------------------------------------------- Newick

/// A parsed Newick tree with its node names and leaf colors.
#[derive(Clone, Debug)]
pub struct ParsedNewick {
    pub tree: PhyloTree,
    /// Leaf colors from `[&color=…]` comments.
    pub colors: BTreeMap<VertexId, Color>,
    /// Every named node: leaf labels and inner labels.
    pub names: HashMap<String, NodeId>,
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Newick { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn label(&mut self) -> Result<Option<String>> {
        match self.peek() {
            Some(b'\'') => {
                self.pos += 1;
                let mut out = Vec::new();
                loop {
                    match self.s.get(self.pos) {
                        None => return self.err("unterminated quoted label"),
                        Some(b'\'') if self.s.get(self.pos + 1) == Some(&b'\'') => {
                            out.push(b'\'');
                            self.pos += 2;
                        }
                        Some(b'\'') => {
                            self.pos += 1;
                            break;
                        }
                        Some(&c) => {
                            out.push(c);
                            self.pos += 1;
                        }
                    }
                }
                String::from_utf8(out).map(Some).or_else(|_| self.err("label is not UTF-8"))
            }
            _ => {
                let start = self.pos;
                while self.pos < self.s.len() && !is_special(self.s[self.pos]) {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Ok(None);
                }
                Ok(Some(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()))
            }
        }
    }

    /// Optional `[&color=…]` comment; other comments are skipped.
    fn comment(&mut self) -> Result<Option<String>> {
        if self.peek() != Some(b'[') {
            return Ok(None);
        }
        let start = self.pos + 1;
        let Some(len) = self.s[start..].iter().position(|&c| c == b']') else {
            return self.err("unterminated comment");
        };
        let body = String::from_utf8_lossy(&self.s[start..start + len]).into_owned();
        self.pos = start + len + 1;
        Ok(body.strip_prefix("&color=").map(|c| c.to_string()))
    }
}

fn is_special(c: u8) -> bool {
    matches!(c, b'(' | b')' | b',' | b':' | b';' | b'[' | b']') || c.is_ascii_whitespace()
}

/// Parses a rooted tree in Newick format. Inner vertices may carry labels;
/// branch lengths are not supported.
pub fn parse_newick(text: &str) -> Result<ParsedNewick> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let mut raw = RawTree::default();
    let mut colors = BTreeMap::new();
    let mut raw_names: Vec<(String, usize)> = Vec::new();
    // explicit stack of open inner vertices
    let mut stack: Vec<Vec<usize>> = Vec::new();
    let mut root = None;
    loop {
        if p.peek() == Some(b'(') {
            p.pos += 1;
            stack.push(Vec::new());
            continue;
        }
        // a leaf
        let Some(name) = p.label()? else {
            return p.err("expected a leaf label or `(`");
        };
        let id = raw.add_leaf(VertexId::new(&name));
        if let Some(c) = p.comment()? {
            colors.insert(VertexId::new(&name), Color::new(c));
        }
        raw_names.push((name, id));
        let mut node = id;
        // close as many inner vertices as the input says
        loop {
            match stack.last_mut() {
                None => {
                    root = Some(node);
                    break;
                }
                Some(open) => {
                    open.push(node);
                    match p.peek() {
                        Some(b',') => {
                            p.pos += 1;
                            break;
                        }
                        Some(b')') => {
                            p.pos += 1;
                            let children = stack.pop().unwrap();
                            if children.len() < 2 {
                                return p.err("inner vertex with fewer than two children");
                            }
                            node = raw.add_inner(children);
                            if let Some(name) = p.label()? {
                                raw_names.push((name, node));
                            }
                            p.comment()?;
                        }
                        Some(b':') => return p.err("branch lengths are not supported"),
                        _ => return p.err("expected `,` or `)`"),
                    }
                }
            }
        }
        if root.is_some() {
            break;
        }
    }
    raw.root = root.unwrap();
    if p.peek() == Some(b':') {
        return p.err("branch lengths are not supported");
    }
    p.expect(b';')?;
    if p.peek().is_some() {
        return p.err("trailing input after `;`");
    }
    let (tree, map) = PhyloTree::from_raw(&raw)?;
    let mut names = HashMap::new();
    for (name, id) in raw_names {
        if names.insert(name.clone(), map[id].unwrap()).is_some() {
            return Err(Error::InvalidTree(format!("duplicate node name `{name}`")));
        }
    }
    Ok(ParsedNewick { tree, colors, names })
}

fn quote(label: &str) -> String {
    // an apostrophe only opens a quoted label at the start
    if !label.is_empty() && !label.starts_with('\'') && !label.bytes().any(is_special) {
        label.to_string()
    } else {
        format!("'{}'", label.replace('\'', "''"))
    }
}

/// Node names used when writing: leaves by label, inner vertices `n{index}`
/// with a prefix chosen not to clash with any leaf.
pub fn node_names(tree: &PhyloTree) -> Vec<String> {
    let mut prefix = String::from("n");
    while tree.leaf_labels().iter().any(|l| l.as_str().starts_with(&prefix)) {
        prefix.insert(0, '_');
    }
    tree.nodes()
        .map(|v| match tree.label(v) {
            Some(l) => l.to_string(),
            None => format!("{prefix}{}", v.index()),
        })
        .collect()
}

/// Newick with synthetic inner labels and, when given, leaf color comments.
pub fn write_newick(tree: &PhyloTree, coloring: Option<&LeafColoring>) -> String {
    let names = node_names(tree);
    let mut s = String::new();
    // iterative preorder emitting closing parentheses on the way back
    enum Step {
        Open(NodeId),
        Close(NodeId),
    }
    let mut stack = vec![Step::Open(tree.root())];
    let mut first = vec![true; tree.node_count()];
    while let Some(step) = stack.pop() {
        match step {
            Step::Open(v) => {
                if let Some(p) = tree.parent(v) {
                    if !std::mem::replace(&mut first[p.index()], false) {
                        s.push(',');
                    }
                }
                if tree.is_leaf(v) {
                    s.push_str(&quote(&names[v.index()]));
                    if let Some(c) = coloring.and_then(|c| c.color(tree.label(v).unwrap())) {
                        s.push_str(&format!("[&color={c}]"));
                    }
                } else {
                    s.push('(');
                    stack.push(Step::Close(v));
                    for &c in tree.children(v).iter().rev() {
                        stack.push(Step::Open(c));
                    }
                }
            }
            Step::Close(v) => {
                s.push(')');
                s.push_str(&quote(&names[v.index()]));
            }
        }
    }
    s.push(';');
    s
}

// ---------------------------------------------------------------- truncation

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TruncationJson {
    limits: Vec<LimitJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LimitJson {
    color: String,
    leaf: String,
    node: String,
}

fn truncation_doc(tree: &PhyloTree, u: &TruncationMap) -> TruncationJson {
    let names = node_names(tree);
    TruncationJson {
        limits: u
            .iter()
            .map(|(x, s, n)| LimitJson {
                color: s.to_string(),
                leaf: x.to_string(),
                node: names[n.index()].clone(),
            })
            .collect(),
    }
}

fn truncation_from_doc(doc: &TruncationJson, names: &HashMap<String, NodeId>) -> Result<TruncationMap> {
    let mut u = TruncationMap::new();
    for l in &doc.limits {
        let node = names
            .get(&l.node)
            .ok_or_else(|| Error::InvalidTruncation(format!("unknown node `{}`", l.node)))?;
        if u.get(&VertexId::new(&l.leaf), &Color::new(&l.color)).is_some() {
            return Err(Error::InvalidTruncation(format!("duplicate limit for ({}, {})", l.leaf, l.color)));
        }
        u.set(VertexId::new(&l.leaf), Color::new(&l.color), *node);
    }
    Ok(u)
}

/// `{"limits":[{"color","leaf","node"}…]}` with node names from
/// [`write_newick`].
pub fn truncation_to_json(tree: &PhyloTree, u: &TruncationMap) -> String {
    pretty(&truncation_doc(tree, u))
}

/// Reads limits whose node names refer to a parsed Newick tree.
pub fn truncation_from_json(s: &str, tree: &ParsedNewick) -> Result<TruncationMap> {
    truncation_from_doc(&serde_json::from_str(s)?, &tree.names)
}

// ---------------------------------------------------------------- bundle

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BundleJson {
    colors: Vec<String>,
    tree: String,
    truncation: TruncationJson,
}

impl Explanation {
    /// `{"colors":[…],"tree":"<newick>","truncation":{"limits":[…]}}`.
    /// Leaf colors travel as Newick comments.
    pub fn to_json(&self) -> String {
        pretty(&self.to_json_value())
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = BundleJson {
            colors: self.coloring().palette().iter().map(|c| c.to_string()).collect(),
            tree: write_newick(self.tree(), Some(self.coloring())),
            truncation: truncation_doc(self.tree(), self.truncation()),
        };
        serde_json::to_value(doc).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Explanation> {
        Self::from_json_value(serde_json::from_str(s)?)
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Explanation> {
        let doc: BundleJson = serde_json::from_value(v)?;
        let parsed = parse_newick(&doc.tree)?;
        let palette: BTreeSet<Color> = doc.colors.iter().map(Color::new).collect();
        for (x, c) in &parsed.colors {
            if !palette.contains(c) {
                return Err(Error::InvalidColoring(format!("`{x}` has undeclared color `{c}`")));
            }
        }
        let coloring = LeafColoring::new(parsed.colors.clone(), palette);
        let u = truncation_from_doc(&doc.truncation, &parsed.names)?;
        Explanation::new(parsed.tree, coloring, u)
    }
}

// ---------------------------------------------------------------- triples

/// One `a,b|c` per line; blank lines and `#` comments are ignored.
pub fn parse_triples(text: &str) -> Result<BTreeSet<Triple>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

pub fn write_triples(ts: &BTreeSet<Triple>) -> String {
    ts.iter().map(|t| format!("{t}\n")).collect()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TripleSystemJson {
    forbidden: Vec<String>,
    leaves: Vec<String>,
    required: Vec<String>,
}

impl TripleSystem {
    /// `{"forbidden":[…],"leaves":[…],"required":[…]}`.
    pub fn to_json(&self) -> String {
        pretty(&TripleSystemJson {
            forbidden: self.forbidden.iter().map(|t| t.to_string()).collect(),
            leaves: self.leaves.iter().map(|l| l.to_string()).collect(),
            required: self.required.iter().map(|t| t.to_string()).collect(),
        })
    }

    pub fn from_json(s: &str) -> Result<TripleSystem> {
        let doc: TripleSystemJson = serde_json::from_str(s)?;
        let parse = |v: &[String]| v.iter().map(|t| t.parse()).collect::<Result<BTreeSet<Triple>>>();
        Ok(TripleSystem {
            required: parse(&doc.required)?,
            forbidden: parse(&doc.forbidden)?,
            leaves: doc.leaves.iter().map(VertexId::new).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbmg::{qbmg_of, recognize_qbmg};

    #[test]
    fn graph_json_round_trip() {
        let g = ColoredDigraph::from_lists(
            &[("b", "2"), ("a", "1"), ("c", "2")],
            &[("c", "a"), ("a", "b"), ("b", "a")],
        )
        .unwrap();
        let s = g.to_json();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["edges"], serde_json::json!([["a", "b"], ["b", "a"], ["c", "a"]]));
        assert_eq!(v["vertices"][0], serde_json::json!({"color": "1", "id": "a"}));
        assert_eq!(ColoredDigraph::from_json(&s).unwrap(), g);
    }

    #[test]
    fn graph_json_schema_errors() {
        let bad_color = r#"{"colors":["1"],"vertices":[{"id":"a","color":"2"}],"edges":[]}"#;
        assert!(matches!(ColoredDigraph::from_json(bad_color), Err(Error::UnknownColor(_))));
        let dup = r#"{"colors":["1","1"],"vertices":[],"edges":[]}"#;
        assert!(matches!(ColoredDigraph::from_json(dup), Err(Error::DuplicateColor(_))));
        let extra = r#"{"colors":[],"vertices":[],"edges":[],"x":1}"#;
        assert!(matches!(ColoredDigraph::from_json(extra), Err(Error::Json(_))));
        let unused = r#"{"colors":["1","9"],"vertices":[{"id":"a","color":"1"}],"edges":[]}"#;
        assert_eq!(ColoredDigraph::from_json(unused).unwrap().palette().len(), 2);
    }

    #[test]
    fn newick_round_trip() {
        let p = parse_newick("((a[&color=A],'b c'[&color=B])in1,c[&color=B])top;").unwrap();
        assert_eq!(p.colors.len(), 3);
        assert_eq!(p.names["top"], p.tree.root());
        assert!(p.names.contains_key("in1"));
        let col = LeafColoring::new(p.colors.clone(), []);
        let s = write_newick(&p.tree, Some(&col));
        assert_eq!(s, "((a[&color=A],'b c'[&color=B])n1,c[&color=B])n0;");
        assert_eq!(parse_newick(&s).unwrap().tree, p.tree);
    }

    #[test]
    fn newick_inner_prefix_avoids_leaf_names() {
        let p = parse_newick("(n0,n1);").unwrap();
        let s = write_newick(&p.tree, None);
        assert_eq!(s, "(n0,n1)_n0;");
        assert_eq!(parse_newick(&s).unwrap().tree, p.tree);
        let q = parse_newick("(y',(x,'''q'));").unwrap();
        assert!(q.tree.leaf(&VertexId::new("y'")).is_some());
        assert!(q.tree.leaf(&VertexId::new("'q")).is_some());
        assert_eq!(parse_newick(&write_newick(&q.tree, None)).unwrap().tree, q.tree);
    }

    #[test]
    fn newick_errors() {
        for bad in ["(a,b)", "(a);", "(a,b):1;", "(a:1,b);", "((a,b);", "(a,b);x", "(,b);", "(a,a);"] {
            assert!(parse_newick(bad).is_err(), "{bad}");
        }
        assert!(parse_newick("a;").is_ok());
    }

    #[test]
    fn bundle_round_trip() {
        let g = ColoredDigraph::from_lists(
            &[("x", "A"), ("y", "B"), ("y'", "B"), ("z", "C"), ("z'", "C")],
            &[("x", "z"), ("x", "y"), ("x", "y'"), ("y'", "z"), ("z'", "y"), ("z'", "y'")],
        )
        .unwrap();
        let e = recognize_qbmg(&g).unwrap().into_explanation().unwrap();
        let s = e.to_json();
        let back = Explanation::from_json(&s).unwrap();
        assert_eq!(back, e);
        assert_eq!(qbmg_of(&back), g);
        let tu = truncation_to_json(e.tree(), e.truncation());
        let parsed = parse_newick(&write_newick(e.tree(), None)).unwrap();
        assert_eq!(truncation_from_json(&tu, &parsed).unwrap(), *e.truncation());
    }

    #[test]
    fn triple_formats() {
        let ts = parse_triples("a,b|c\n# note\n\nb,c|a\n").unwrap();
        assert_eq!(write_triples(&ts), "a,b|c\nb,c|a\n");
        let sys = TripleSystem {
            required: ts.clone(),
            forbidden: BTreeSet::new(),
            leaves: ["a", "b", "c"].into_iter().map(VertexId::new).collect(),
        };
        assert_eq!(TripleSystem::from_json(&sys.to_json()).unwrap(), sys);
        assert!(parse_triples("a|b").is_err());
    }
}
