//! Graphviz renderings. Node and edge order follow the input order, so output
//! is byte-stable.

use std::fmt::Write as _;

use crate::bratteli::BratteliDiagram;
use crate::spectrum::PrimSpectrum;
use crate::topology::HasseDiagram;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Points grouped by level, lower points at the bottom.
pub fn hasse_dot(h: &HasseDiagram) -> String {
    named_hasse_dot("hasse", h)
}

fn named_hasse_dot(name: &str, h: &HasseDiagram) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    out.push_str("  rankdir=BT;\n  node [shape=circle];\n");
    for level in 0..h.level_count() {
        let members: Vec<String> = (0..h.points.len())
            .filter(|&i| h.levels[i] == level)
            .map(|i| quote(&h.points[i]))
            .collect();
        let _ = writeln!(out, "  {{ rank=same; {}; }}", members.join("; "));
    }
    for &(lo, hi) in &h.links {
        let _ = writeln!(out, "  {} -> {};", quote(&h.points[lo]), quote(&h.points[hi]));
    }
    out.push_str("}\n");
    out
}

/// One rank per level; nodes show their matrix-block dimension.
pub fn bratteli_dot(d: &BratteliDiagram) -> String {
    let mut out = String::new();
    out.push_str("digraph bratteli {\n  rankdir=TB;\n  node [shape=circle];\n");
    for (l, nodes) in d.levels().iter().enumerate() {
        let _ = write!(out, "  {{ rank=same;");
        for (i, node) in nodes.iter().enumerate() {
            let _ = write!(
                out,
                " \"n{l}_{i}\" [label=\"{}\", tooltip={}];",
                node.dimension,
                quote(&d.poset().format_set(node.atom))
            );
        }
        out.push_str(" }\n");
    }
    for (l, m) in d.edges().iter().enumerate() {
        for j in 0..m.rows() {
            for i in 0..m.cols() {
                match m[(j, i)] {
                    0 => {}
                    1 => {
                        let _ = writeln!(out, "  \"n{l}_{i}\" -> \"n{}_{j}\";", l + 1);
                    }
                    k => {
                        let _ = writeln!(out, "  \"n{l}_{i}\" -> \"n{}_{j}\" [label=\"{k}\"];", l + 1);
                    }
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the primitive ideals under inclusion.
pub fn prim_dot(s: &PrimSpectrum) -> String {
    named_hasse_dot("prim", &s.poset.hasse())
}
