//! Graphviz DOT emitters. Columns become same-rank groups so the layouts
//! reproduce the usual left-to-right window pictures; degree-1 and orbit
//! arrows are dashed, frozen seed vertices are boxed.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::rigid::GradedQuiver;
use crate::seed::{kplus_and_e, AdaptedOrdering};
use crate::zq::{Window, ZqVertex};

fn node_id(v: ZqVertex) -> String {
    format!("\"({},{})\"", v.column, v.vertex)
}

fn column_ranks(out: &mut String, objects: &[ZqVertex]) {
    let columns: BTreeSet<i64> = objects.iter().map(|v| v.column).collect();
    for c in columns {
        let members: Vec<String> = objects
            .iter()
            .filter(|v| v.column == c)
            .map(|&v| node_id(v))
            .collect();
        let _ = writeln!(out, "  {{ rank=same; {}; }}", members.join("; "));
    }
}

/// The window with its mesh arrows, one rank per column.
pub fn window_dot(window: &Window) -> String {
    let mut out = String::from("digraph window {\n  rankdir=LR;\n  node [shape=plaintext];\n");
    column_ranks(&mut out, window.objects());
    for &v in window.objects() {
        let _ = writeln!(out, "  {};", node_id(v));
    }
    for &(s, d, _) in window.arrows() {
        let _ = writeln!(
            out,
            "  {} -> {};",
            node_id(window.object(s)),
            node_id(window.object(d))
        );
    }
    out.push_str("}\n");
    out
}

/// The graded quiver: solid degree-0 arrows, dashed degree-1 arrows, the
/// relation list appended as comments.
pub fn graded_dot(gq: &GradedQuiver) -> String {
    let mut out = String::from("digraph graded {\n  rankdir=LR;\n  node [shape=plaintext];\n");
    column_ranks(&mut out, &gq.vertices);
    for &v in &gq.vertices {
        let _ = writeln!(out, "  {};", node_id(v));
    }
    for &(s, d) in &gq.arrows0 {
        let _ = writeln!(out, "  {} -> {};", node_id(s), node_id(d));
    }
    for &(s, d) in &gq.arrows1 {
        let _ = writeln!(out, "  {} -> {} [style=dashed];", node_id(s), node_id(d));
    }
    for rel in &gq.relations {
        let _ = writeln!(
            out,
            "  // {:?} relation from ({},{}) to ({},{}) with {} term(s)",
            rel.kind,
            rel.source.column,
            rel.source.vertex,
            rel.target.column,
            rel.target.vertex,
            rel.terms.len()
        );
    }
    out.push_str("}\n");
    out
}

/// The seed quiver on `[-n,-1] ∪ [1,r]`: frozen vertices boxed, orbit
/// arrows `k -> k+` dashed.
pub fn seed_dot(window: &Window, ordering: &AdaptedOrdering) -> String {
    let t = window.quiver().dynkin();
    let arrows = crate::seed::atilde(&ordering.word, &t);
    let (kplus, _) = kplus_and_e(&ordering.word, t.rank);
    let mut out = String::from("digraph seed {\n  rankdir=LR;\n");
    for k in crate::seed::seed_positions(t.rank, window.len()) {
        let shape = if k < 0 { "box" } else { "ellipse" };
        let _ = writeln!(out, "  \"{k}\" [shape={shape}];");
    }
    for &(k, l) in &arrows {
        let style = if kplus.get(&k) == Some(&l) {
            " [style=dashed]"
        } else {
            ""
        };
        let _ = writeln!(out, "  \"{k}\" -> \"{l}\"{style};");
    }
    out.push_str("}\n");
    out
}
