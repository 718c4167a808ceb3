use std::fmt::Write;

use super::graded::GradedPoset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz source for the Hasse diagram, drawn bottom-up with one row per rank.
pub fn to_dot(p: &GradedPoset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n  edge [arrowhead=none];\n");
    for r in 0..=p.rank() {
        let row: Vec<String> = p
            .elements_of_rank(r)
            .iter()
            .map(|&x| quote(p.name(x)))
            .collect();
        let _ = writeln!(out, "  {{ rank=same; {}; }}", row.join("; "));
    }
    for &(a, b) in p.covers() {
        let _ = writeln!(out, "  {} -> {};", quote(p.name(a)), quote(p.name(b)));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_dot() {
        let dot = to_dot(&GradedPoset::chain(1));
        assert!(dot.starts_with("digraph poset {"));
        assert!(dot.contains("\"0\" -> \"1\";"));
        assert!(dot.contains("{ rank=same; \"1\"; }"));
    }
}
