//! Graphviz output for the lattice of torsion-free classes.

use std::fmt::Write;

use cotilt_core::classes::Lattice;
use cotilt_core::Catalog;

/// Nodes `tf0, tf1, …` in lattice order; an edge `a -> b` when `b` covers `a`.
pub fn lattice_dot(cat: &Catalog, lattice: &Lattice) -> String {
    let mut out = String::from("digraph torsion_free {\n");
    for (i, class) in lattice.classes.iter().enumerate() {
        let label = cat.describe_set(*class).replace('"', "\\\"");
        let _ = writeln!(out, "  tf{i} [label=\"{label}\"];");
    }
    for (a, b) in &lattice.edges {
        let _ = writeln!(out, "  tf{a} -> tf{b};");
    }
    out.push_str("}\n");
    out
}
