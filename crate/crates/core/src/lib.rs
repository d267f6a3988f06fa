//! Quasi-best match graphs (qBMGs).
//!
//! A qBMG is the best match graph of a leaf-colored tree in which every
//! leaf only sees best matches up to a per-color detection limit on its
//! root path. The crate builds qBMGs from explanations, recognizes them
//! (returning an explaining tree), and covers the two-colored axioms,
//! least-resolved trees, binary explanations and a brute-force oracle for
//! small instances.

pub mod binary;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod lrt;
pub mod oracle;
pub mod qbmg;
pub mod tree;
pub mod triples;
pub mod truncation;
pub mod two_color;

pub use binary::{binary_refine, find_hourglasses, is_binary_explainable, polygon_counterexample, Hourglass};
pub use error::{Error, Result};
pub use graph::{disjoint_union, Color, ColoredDigraph, IdPolicy, VertexId};
pub use io::{parse_newick, write_newick, ParsedNewick};
pub use lrt::{essential_edges, is_least_resolved, lrt_not_unique_witness, minimize};
pub use qbmg::{bmg_of, qbmg_of, recognize_bmg, recognize_qbmg, Rejection, Verdict};
pub use tree::{Hierarchy, NodeId, PhyloTree, TreeEdge};
pub use triples::{Triple, TripleSystem};
pub use truncation::{
    canonical_truncation, restrict_truncation, trivial_truncation, Explanation, LeafColoring,
    TruncationMap,
};
pub use two_color::{AxiomReport, AxiomTag};
