//! Graphviz export of Hasse diagrams.

use crate::amalgam::PastedFamily;
use crate::ortho::OrthoPoset;
use crate::poset::FinitePoset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Cover edges drawn bottom to top, elements of equal height on one rank.
/// With an involution, each node carries its image as `xlabel`.
pub fn export_dot(name: &str, p: &FinitePoset, inv: Option<&[usize]>) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n  node [shape=circle];\n", quote(name));
    let heights = p.heights();
    let max_h = heights.iter().copied().max().unwrap_or(0);
    for x in p.elements() {
        match inv {
            Some(inv) => out.push_str(&format!(
                "  {} [xlabel={}];\n",
                quote(p.label(x)),
                quote(&format!("{}'={}", p.label(x), p.label(inv[x])))
            )),
            None => out.push_str(&format!("  {};\n", quote(p.label(x)))),
        }
    }
    for h in 0..=max_h {
        let level: Vec<String> = p.elements().filter(|&x| heights[x] == h).map(|x| quote(p.label(x))).collect();
        if level.len() > 1 {
            out.push_str(&format!("  {{ rank=same; {}; }}\n", level.join("; ")));
        }
    }
    for (x, y) in p.covers() {
        out.push_str(&format!("  {} -> {};\n", quote(p.label(x)), quote(p.label(y))));
    }
    out.push_str("}\n");
    out
}

pub fn export_ortho_dot(name: &str, o: &OrthoPoset) -> String {
    export_dot(name, o, Some(o.involution()))
}

/// The carrier of an amalgam; fails when the family does not glue.
pub fn export_family_dot(name: &str, f: &PastedFamily) -> Result<String, crate::amalgam::AmalgamError> {
    let a = f.build()?;
    Ok(export_ortho_dot(name, &a.carrier))
}

/// Number of `->` edges in a DOT text.
pub fn edge_count(dot: &str) -> usize {
    dot.lines().filter(|l| l.contains(" -> ")).count()
}

/// Number of node declarations in a DOT text produced here.
pub fn node_count(dot: &str) -> usize {
    dot.lines()
        .filter(|l| {
            let t = l.trim();
            t.starts_with('"') && !t.contains(" -> ")
        })
        .count()
}
