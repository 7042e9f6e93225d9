//! The scheme graph: family boxes with degree triples and
//! vanishing-parameter patterns, the parameter-zeroing arrows between them,
//! and the dual-pair links.

use std::sync::OnceLock;

use crate::classify::degrees::DegreeTriple;
use crate::classify::seqspec::{SeqSpecQ1, UniformParamId};
use crate::error::{Error, Result};

use UniformParamId::{A1, A2, B1, B2, D2};

/// One family box: acronyms, degree triple, and the subset of
/// (a1, a2, b1, b2, d2) that vanishes on the box.
#[derive(Clone, Debug)]
pub struct SchemeNode {
    pub id: &'static str,
    pub names: &'static [&'static str],
    pub degree_triple: DegreeTriple,
    pub vanishing: &'static [UniformParamId],
}

/// Directed arrows realize one extra vanishing condition each; dual links
/// pair boxes exchanged by the x <-> h duality.
#[derive(Clone, Debug)]
pub struct SchemeGraph {
    pub nodes: Vec<SchemeNode>,
    pub edges: Vec<(&'static str, &'static str)>,
    pub duals: Vec<(&'static str, &'static str)>,
}

fn build_graph() -> SchemeGraph {
    let triple = |x, g, h| DegreeTriple::new(x, g, h).expect("scheme triples are valid");
    let nodes = vec![
        SchemeNode {
            id: "W/R",
            names: &["W", "R"],
            degree_triple: triple(2, 4, 2),
            vanishing: &[],
        },
        SchemeNode {
            id: "cdH/dH",
            names: &["cdH", "dH"],
            degree_triple: triple(2, 3, 1),
            vanishing: &[A2],
        },
        SchemeNode {
            id: "cH/H",
            names: &["cH", "H"],
            degree_triple: triple(1, 3, 2),
            vanishing: &[B2],
        },
        SchemeNode {
            id: "M-P/M/K",
            names: &["M-P", "M", "K"],
            degree_triple: triple(1, 2, 1),
            vanishing: &[A2, B2],
        },
        SchemeNode {
            id: "J",
            names: &["J"],
            degree_triple: triple(0, 2, 2),
            vanishing: &[B1, B2],
        },
        SchemeNode {
            id: "Ch",
            names: &["Ch"],
            degree_triple: triple(1, 1, 1),
            vanishing: &[A2, B2, D2],
        },
        SchemeNode {
            id: "L",
            names: &["L"],
            degree_triple: triple(0, 2, 1),
            vanishing: &[A2, B1, B2],
        },
        SchemeNode {
            id: "B",
            names: &["B"],
            degree_triple: triple(0, 1, 2),
            vanishing: &[B1, B2, D2],
        },
        SchemeNode {
            id: "bin",
            names: &["bin"],
            degree_triple: triple(0, 1, 1),
            vanishing: &[A2, B1, B2, D2],
        },
        // The bottom row also carries the reversed (dual-patterned) form of
        // the binomial box, with the k-dependence moved from h to x. No
        // valid data triple realizes it (h_k would be constant), so it is a
        // formal node only and classification never lands on it.
        SchemeNode {
            id: "bin_dual",
            names: &["bin"],
            degree_triple: triple(0, 1, 1),
            vanishing: &[A1, A2, B2, D2],
        },
    ];
    let edges = vec![
        ("W/R", "cdH/dH"),
        ("W/R", "cH/H"),
        ("cdH/dH", "M-P/M/K"),
        ("cH/H", "M-P/M/K"),
        ("cH/H", "J"),
        ("M-P/M/K", "Ch"),
        ("M-P/M/K", "L"),
        ("J", "L"),
        ("J", "B"),
        ("Ch", "bin"),
        ("L", "bin"),
        ("B", "bin"),
        ("Ch", "bin_dual"),
    ];
    let duals = vec![
        ("W/R", "W/R"),
        ("M-P/M/K", "M-P/M/K"),
        ("Ch", "Ch"),
        ("cdH/dH", "cH/H"),
    ];
    SchemeGraph {
        nodes,
        edges,
        duals,
    }
}

/// The scheme graph as immutable shared data.
pub fn scheme_graph() -> &'static SchemeGraph {
    static GRAPH: OnceLock<SchemeGraph> = OnceLock::new();
    GRAPH.get_or_init(build_graph)
}

impl SchemeGraph {
    pub fn node(&self, id: &str) -> Option<&SchemeNode> {
        self.nodes.iter().find(|n| n.id == id)
    }

    /// Checks the structural laws of the graph: every arrow adds exactly one
    /// vanishing condition, and its degree decrement is a legal step (one
    /// degree down by 1, or deg(g) plus one of deg(x)/deg(h) down by 1 when
    /// deg(x) + deg(h) >= 3 at the source).
    pub fn validate(&self) -> Result<()> {
        for (src, dst) in &self.edges {
            let s = self
                .node(src)
                .ok_or_else(|| Error::NoMatch(src.to_string()))?;
            let t = self
                .node(dst)
                .ok_or_else(|| Error::NoMatch(dst.to_string()))?;
            let extra: Vec<_> = t
                .vanishing
                .iter()
                .filter(|p| !s.vanishing.contains(p))
                .collect();
            let lost: Vec<_> = s
                .vanishing
                .iter()
                .filter(|p| !t.vanishing.contains(p))
                .collect();
            if extra.len() != 1 || !lost.is_empty() {
                return Err(Error::RuleViolation(format!(
                    "arrow {src} -> {dst} does not add exactly one vanishing condition"
                )));
            }
            let (sx, sg, sh) = (s.degree_triple.x, s.degree_triple.g, s.degree_triple.h);
            let (tx, tg, th) = (t.degree_triple.x, t.degree_triple.g, t.degree_triple.h);
            let dx = sx as i8 - tx as i8;
            let dg = sg as i8 - tg as i8;
            let dh = sh as i8 - th as i8;
            let single = dx + dg + dh == 1 && dx >= 0 && dg >= 0 && dh >= 0;
            let coupled = sx + sh >= 3 && dg == 1 && dx + dh == 1 && dx >= 0 && dh >= 0;
            if !(single || coupled) {
                return Err(Error::RuleViolation(format!(
                    "arrow {src} -> {dst} is not a legal degree decrement"
                )));
            }
        }
        for (a, b) in &self.duals {
            for id in [a, b] {
                if self.node(id).is_none() {
                    return Err(Error::NoMatch(id.to_string()));
                }
            }
        }
        Ok(())
    }

    /// Standard dot digraph. Dual pairings are carried as comments so the
    /// arrow set stays exactly the parameter-zeroing arrows.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph askey_scheme {\n");
        for n in &self.nodes {
            let vanish = if n.vanishing.is_empty() {
                String::from("generic")
            } else {
                n.vanishing
                    .iter()
                    .map(|p| format!("{}=0", p.name()))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            out.push_str(&format!(
                "    \"{}\" [label=\"{}\\n{}\\n{}\"];\n",
                n.id,
                n.names.join(", "),
                n.degree_triple,
                vanish
            ));
        }
        for (src, dst) in &self.edges {
            out.push_str(&format!("    \"{src}\" -> \"{dst}\";\n"));
        }
        for (a, b) in &self.duals {
            out.push_str(&format!("    // dual pair: \"{a}\" <-> \"{b}\"\n"));
        }
        out.push_str("}\n");
        out
    }

    /// JSON export with fields nodes / edges / duals.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n  \"nodes\": [\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let names = n
                .names
                .iter()
                .map(|s| format!("\"{s}\""))
                .collect::<Vec<_>>()
                .join(", ");
            let vanishing = n
                .vanishing
                .iter()
                .map(|p| format!("\"{}\"", p.name()))
                .collect::<Vec<_>>()
                .join(", ");
            out.push_str(&format!(
                "    {{\"id\": \"{}\", \"names\": [{}], \"degree_triple\": [{}, {}, {}], \"vanishing\": [{}]}}{}\n",
                n.id,
                names,
                n.degree_triple.x,
                n.degree_triple.g,
                n.degree_triple.h,
                vanishing,
                if i + 1 < self.nodes.len() { "," } else { "" }
            ));
        }
        out.push_str("  ],\n  \"edges\": [\n");
        for (i, (src, dst)) in self.edges.iter().enumerate() {
            out.push_str(&format!(
                "    {{\"src\": \"{src}\", \"dst\": \"{dst}\"}}{}\n",
                if i + 1 < self.edges.len() { "," } else { "" }
            ));
        }
        out.push_str("  ],\n  \"duals\": [\n");
        for (i, (a, b)) in self.duals.iter().enumerate() {
            out.push_str(&format!(
                "    [\"{a}\", \"{b}\"]{}\n",
                if i + 1 < self.duals.len() { "," } else { "" }
            ));
        }
        out.push_str("  ]\n}\n");
        out
    }
}

/// Places a spec on its scheme node.
///
/// The vanishing pattern and the degree triple are both invariant under the
/// four dilation/translation symmetries, so no normalization is needed:
/// first try an exact pattern match, then fall back to the (unique) node
/// carrying the spec's degree triple — parameter specialisations inside a
/// box (say b1 = 0 on the top box) keep their box that way.
pub fn classify_spec(s: &SeqSpecQ1) -> Result<&'static SchemeNode> {
    if !s.check_q1_constraints() {
        return Err(Error::NoMatch(
            "spec violates the closed-form recurrence constraints on d3, d4".into(),
        ));
    }
    let pattern = s.vanishing_pattern();
    let graph = scheme_graph();
    if let Some(node) = graph.nodes.iter().find(|n| {
        n.vanishing.len() == pattern.len() && n.vanishing.iter().all(|p| pattern.contains(p))
    }) {
        return Ok(node);
    }
    let triple = s
        .degree_triple()
        .map_err(|e| Error::NoMatch(e.to_string()))?;
    graph
        .nodes
        .iter()
        .find(|n| n.id != "bin_dual" && n.degree_triple == triple)
        .ok_or_else(|| Error::NoMatch(format!("no box carries degree triple {triple}")))
}
