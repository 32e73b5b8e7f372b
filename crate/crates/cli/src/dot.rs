use std::fmt::Write;

use ssplat_core::Lattice;

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram in DOT: one node per element, one edge per cover pair,
/// drawn bottom to top with one `rank=same` group per rank when ranked.
pub fn export_dot(lattice: &Lattice) -> String {
    let mut out = String::from("graph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for (i, name) in lattice.names().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(name));
    }
    for &(c, p) in lattice.covers() {
        let _ = writeln!(out, "  n{c} -- n{p};");
    }
    if let Some(ranks) = lattice.ranks() {
        let height = ranks.iter().copied().max().unwrap_or(0);
        for r in 0..=height {
            let nodes: Vec<String> = (0..lattice.len())
                .filter(|&x| ranks[x] == r)
                .map(|x| format!("n{x};"))
                .collect();
            let _ = writeln!(out, "  {{ rank=same; {} }}", nodes.join(" "));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ssplat_core::builders::{chain, fig1};

    #[test]
    fn chain_diagram() {
        let dot = export_dot(&chain(2).unwrap());
        assert_eq!(dot.matches("[label=").count(), 3);
        assert_eq!(dot.matches(" -- ").count(), 2);
        assert!(dot.contains("{ rank=same; n1; }"));
    }

    #[test]
    fn unranked_has_no_rank_groups() {
        let dot = export_dot(&fig1());
        assert_eq!(dot.matches(" -- ").count(), 14);
        assert!(!dot.contains("rank=same"));
    }

    #[test]
    fn quotes_are_escaped() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}
