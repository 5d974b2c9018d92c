//! Reading graphs, matrices and partitions from paths, stdin or literals.

use std::fs;
use std::io::{self, Read};
use std::path::Path;

use anyhow::{Context, Result};
use barbell_core::{parse_graph_auto, Graph};

/// Text from `-` (stdin) or a file path.
pub fn read_source(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
    }
}

/// A graph from `-`, a file (graph6 or edge list), or a literal graph6
/// string when no such file exists.
pub fn read_graph(arg: &str) -> Result<Graph> {
    if arg == "-" || Path::new(arg).exists() {
        let text = read_source(arg)?;
        return parse_graph_auto(&text).with_context(|| format!("parsing graph from {arg}"));
    }
    parse_graph_auto(arg).with_context(|| format!("{arg:?} is neither a readable file nor a valid graph"))
}

/// A 1-based vertex label of `g`, returned 0-based.
pub fn vertex(g: &Graph, label: &str) -> Result<usize> {
    let v: usize = label.parse().with_context(|| format!("{label:?} is not a vertex number"))?;
    anyhow::ensure!(v >= 1 && v <= g.n(), "vertex {v} is outside 1..={}", g.n());
    Ok(v - 1)
}
