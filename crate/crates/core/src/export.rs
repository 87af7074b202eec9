//! DOT and JSON-lines output.

use std::fmt::{Display, Write as _};

use serde::Serialize;

use crate::dynamics::{GraphSummary, OrbitResult};

/// Renders a summary as a directed graph: one edge `s -> step(s)` per
/// state, Garden-of-Eden nodes drawn as filled boxes. Without stored edges
/// only the cycles are drawn.
pub fn graph_to_dot<S: Display>(summary: &GraphSummary<S>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{} n={}\" {{", summary.variant, summary.n);
    let _ = writeln!(out, "  node [shape=ellipse];");
    let mut edges: Vec<(&S, &S)> = Vec::new();
    match &summary.edges {
        Some(all) => edges.extend(all.iter().map(|(a, b)| (a, b))),
        None => {
            for cyc in &summary.cycles {
                for (i, s) in cyc.iter().enumerate() {
                    edges.push((s, &cyc[(i + 1) % cyc.len()]));
                }
            }
        }
    }
    for s in &summary.ge_states {
        let _ = writeln!(
            out,
            "  \"{s}\" [garden_of_eden=true, shape=box, style=filled, fillcolor=lightgrey];"
        );
    }
    for (a, b) in edges {
        let _ = writeln!(out, "  \"{a}\" -> \"{b}\";");
    }
    out.push_str("}\n");
    out
}

/// One JSON object per orbit state, in visit order.
pub fn orbit_to_json_lines<S: Serialize>(orbit: &OrbitResult<S>) -> serde_json::Result<String> {
    let mut out = String::new();
    for s in &orbit.path {
        out.push_str(&serde_json::to_string(s)?);
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{analyze_with_edges, orbit};
    use crate::limits::Limits;
    use crate::par::Exec;
    use crate::partition::Partition;
    use crate::system::Bulgarian;

    #[test]
    fn dot_has_one_edge_per_state() {
        let g = analyze_with_edges(&Bulgarian, 5, &Limits::default(), Exec::Sequential).unwrap();
        let dot = graph_to_dot(&g);
        assert_eq!(dot.matches(" -> ").count(), 7);
        assert!(dot.contains("\"1,1,1,1,1\" [garden_of_eden=true"));
        assert!(dot.contains("\"3,1,1\" -> \"3,2\";"));
        assert!(dot.starts_with("digraph"));
    }

    #[test]
    fn json_lines_count() {
        let start: Partition = "4,3,3".parse().unwrap();
        let o = orbit(&Bulgarian, &start, 100).unwrap();
        let text = orbit_to_json_lines(&o).unwrap();
        assert_eq!(text.lines().count(), o.tail + o.cycle_length + 1);
        assert_eq!(text.lines().next(), Some(r#"{"parts":[4,3,3],"n":10}"#));
    }
}
