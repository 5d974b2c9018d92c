//! Canonical forms for small graphs and exhaustive isomorphism-class catalogs.
//!
//! The canonical form is the lexicographically largest graph6 bit string over
//! all vertex orderings that sort vertices by their stable color-refinement
//! class. Refinement classes are isomorphism invariants, so the result is a
//! true canonical form; the search is exponential in the size of the largest
//! class and meant for graphs with at most a dozen or so vertices.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use crate::graph::Graph;
use crate::io::encode_graph6;

/// Stable vertex colors from iterated degree refinement.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = colors.iter().collect::<BTreeSet<_>>().len();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let rank: BTreeMap<&(usize, Vec<usize>), usize> =
            signatures.iter().collect::<BTreeSet<_>>().into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        let next: Vec<usize> = signatures.iter().map(|s| rank[s]).collect();
        let new_classes = rank.len();
        colors = next;
        if new_classes == classes {
            return colors;
        }
        classes = new_classes;
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    slots: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    bits: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn run(&mut self, pos: usize) {
        let n = self.g.n();
        if pos == n {
            if self.best.as_ref().is_none_or(|(b, _)| self.bits > *b) {
                self.best = Some((self.bits.clone(), self.order.clone()));
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.colors[v] != self.slots[pos] {
                continue;
            }
            let start = self.bits.len();
            for i in 0..pos {
                self.bits.push(self.g.has_edge(self.order[i], v));
            }
            if let Some((best, _)) = &self.best {
                if self.bits[..] < best[..self.bits.len()] {
                    self.bits.truncate(start);
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(pos + 1);
            self.order.pop();
            self.used[v] = false;
            self.bits.truncate(start);
        }
    }
}

/// A canonical ordering: `order[i]` is the vertex placed at position `i`.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let colors = refine_colors(g);
    let mut slots = colors.clone();
    slots.sort_unstable();
    let mut search = CanonSearch {
        g,
        colors,
        slots,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        bits: Vec::with_capacity(n * n.saturating_sub(1) / 2),
        best: None,
    };
    search.run(0);
    search.best.map(|(_, order)| order).unwrap_or_default()
}

/// The canonical relabeling of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let order = canonical_order(g);
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.permute(&perm)
}

/// graph6 string of the canonical form; equal iff the graphs are isomorphic.
pub fn canonical_graph6(g: &Graph) -> String {
    encode_graph6(&canonical_form(g))
}

/// All graphs on exactly `n` vertices up to isomorphism that satisfy
/// `keep`, sorted by canonical graph6.
///
/// `keep` must be hereditary (closed under deleting a vertex), since the
/// catalog is grown one vertex at a time from the level below.
pub fn graphs_with(n: usize, keep: &dyn Fn(&Graph) -> bool) -> Vec<Graph> {
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    let base = Graph::empty(0);
    level.insert(encode_graph6(&base), base);
    for size in 1..=n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for mask in 0u64..(1u64 << (size - 1)) {
                let edges = g.edges().chain((0..size - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, size - 1)));
                let h = Graph::from_edges(size, edges).expect("augmented graph is simple");
                if !keep(&h) {
                    continue;
                }
                let canon = canonical_form(&h);
                next.entry(encode_graph6(&canon)).or_insert(canon);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// All graphs on exactly `n` vertices up to isomorphism.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    graphs_with(n, &|_| true)
}

/// All graphs on `1..=max_n` vertices, smallest first.
pub fn all_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_graphs).collect()
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}
