//! Zero forcing closures and forts.
//!
//! A fort is a nonempty vertex set `F` such that no vertex outside `F` has
//! exactly one neighbor in `F`; `V(G)` itself counts as a fort whenever
//! `n >= 1`. Forts and zero forcing are dual: `V - S` is a zero forcing set
//! exactly when `S` contains no fort. Every fort-returning search here leans
//! on that duality: the closure of `V - S` stalls precisely on the largest
//! fort inside `S`.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default node cap for exponential searches.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForcingError {
    #[error("search budget of {budget} nodes exhausted")]
    Budget { budget: u64 },
    #[error("{0} is not a fort")]
    NotAFort(String),
}

/// A vertex set known to be a fort of its host graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fort(VertexSet);

impl Fort {
    /// Validates `set` against `g`.
    pub fn new(g: &Graph, set: VertexSet) -> Result<Fort, ForcingError> {
        if is_fort(g, &set) {
            Ok(Fort(set))
        } else {
            Err(ForcingError::NotAFort(set.to_string()))
        }
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.0
    }

    pub fn into_vertices(self) -> VertexSet {
        self.0
    }

    pub fn graph_n(&self) -> usize {
        self.0.universe()
    }
}

impl fmt::Debug for Fort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fort{}", self.0)
    }
}

/// The result of repeatedly letting a blue vertex with exactly one white
/// neighbor turn that neighbor blue. Order independent.
pub fn zero_forcing_closure(g: &Graph, start: &VertexSet) -> VertexSet {
    let n = g.n();
    let mut blue = start.clone();
    let mut white_count: Vec<usize> = (0..n).map(|v| g.degree(v) - g.neighbors(v).intersection_count(&blue)).collect();
    let mut queue: Vec<usize> = blue.iter().filter(|&v| white_count[v] == 1).collect();
    while let Some(v) = queue.pop() {
        if white_count[v] != 1 {
            continue;
        }
        let Some(target) = g.neighbors(v).difference(&blue).first() else {
            continue;
        };
        blue.insert(target);
        for u in g.neighbors(target).iter() {
            white_count[u] -= 1;
            if white_count[u] == 1 && blue.contains(u) {
                queue.push(u);
            }
        }
        if white_count[target] == 1 {
            queue.push(target);
        }
    }
    blue
}

pub fn is_zero_forcing_set(g: &Graph, s: &VertexSet) -> bool {
    zero_forcing_closure(g, s).len() == g.n()
}

/// Nonempty, and no outside vertex sees exactly one member.
pub fn is_fort(g: &Graph, f: &VertexSet) -> bool {
    if f.is_empty() || f.iter().any(|v| v >= g.n()) {
        return false;
    }
    (0..g.n()).filter(|&v| !f.contains(v)).all(|v| g.neighbors(v).intersection_count(f) != 1)
}

/// The largest fort contained in `s`, or `None` when `s` contains no fort.
pub fn extract_fort_within(g: &Graph, s: &VertexSet) -> Option<Fort> {
    let outside = s.complement();
    let closure = zero_forcing_closure(g, &outside);
    if closure.len() == g.n() {
        return None;
    }
    let fort = closure.complement();
    debug_assert!(is_fort(g, &fort) && fort.is_subset(s));
    Some(Fort(fort))
}

/// Explicit node cap for exponential searches; exceeding it is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: DEFAULT_NODE_BUDGET }
    }
}

struct FortSearch<'a> {
    g: &'a Graph,
    budget: u64,
    nodes: u64,
    limit: Option<usize>,
    found: Vec<Fort>,
}

impl FortSearch<'_> {
    fn tick(&mut self) -> Result<(), ForcingError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(ForcingError::Budget { budget: self.budget })
        } else {
            Ok(())
        }
    }

    fn full(&self) -> bool {
        self.limit.is_some_and(|l| self.found.len() >= l)
    }

    /// Decides vertices `next..n`, including before excluding, which visits
    /// minimal forts in lexicographic order.
    fn descend(&mut self, inside: &mut VertexSet, outside: &mut VertexSet, next: usize) -> Result<(), ForcingError> {
        if self.full() {
            return Ok(());
        }
        self.tick()?;
        // every fort avoiding `outside` lies in the complement of its closure
        let blocked = zero_forcing_closure(self.g, outside);
        if !inside.is_disjoint(&blocked) || blocked.len() == self.g.n() {
            return Ok(());
        }
        if self.found.iter().any(|f| f.0.is_subset(inside)) {
            return Ok(());
        }
        if next == self.g.n() {
            // closure(V - inside) = V - inside, so `inside` is a fort
            if !inside.is_empty() && is_minimal_fort(self.g, inside) {
                self.found.push(Fort(inside.clone()));
            }
            return Ok(());
        }
        if !blocked.contains(next) {
            inside.insert(next);
            self.descend(inside, outside, next + 1)?;
            inside.remove(next);
        }
        outside.insert(next);
        self.descend(inside, outside, next + 1)?;
        outside.remove(next);
        Ok(())
    }
}

/// A fort is minimal iff removing any single member leaves no fort inside.
pub fn is_minimal_fort(g: &Graph, f: &VertexSet) -> bool {
    is_fort(g, f)
        && f.iter().all(|v| {
            let mut smaller = f.clone();
            smaller.remove(v);
            extract_fort_within(g, &smaller).is_none()
        })
}

/// All inclusion-minimal forts in lexicographic order, stopping after
/// `limit` when given.
pub fn enumerate_minimal_forts(
    g: &Graph,
    limit: Option<usize>,
    budget: SearchBudget,
) -> Result<Vec<Fort>, ForcingError> {
    let n = g.n();
    let mut search = FortSearch { g, budget: budget.max_nodes, nodes: 0, limit, found: Vec::new() };
    if n > 0 {
        search.descend(&mut VertexSet::new(n), &mut VertexSet::new(n), 0)?;
    }
    debug_assert!(search.found.windows(2).all(|w| w[0] < w[1]));
    Ok(search.found)
}

/// Two disjoint forts with no edge between them, if any exist.
///
/// Pairs of minimal forts are tried first in lexicographic order. Any
/// separated pair `(W1, W2)` contains a separated pair of minimal forts, so
/// that stage alone is complete; the second stage pairs each minimal fort `F`
/// with the largest fort avoiding `N[F]` and serves as a cross-check.
pub fn separated_fort_pair(g: &Graph, budget: SearchBudget) -> Result<Option<(Fort, Fort)>, ForcingError> {
    let minimal = enumerate_minimal_forts(g, None, budget)?;
    let closed: Vec<VertexSet> =
        minimal.iter().map(|f| g.closed_neighborhood(&f.0).expect("fort lies in the graph")).collect();
    for (i, a) in minimal.iter().enumerate() {
        for b in &minimal[i + 1..] {
            if b.0.is_disjoint(&closed[i]) {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    for (a, na) in minimal.iter().zip(&closed) {
        if let Some(b) = extract_fort_within(g, &na.complement()) {
            let (first, second) = if *a < b { (a.clone(), b) } else { (b, a.clone()) };
            return Ok(Some((first, second)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(n: usize, one_based: &[usize]) -> VertexSet {
        VertexSet::from_members(n, one_based.iter().map(|v| v - 1))
    }

    fn brute_minimal_forts(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let forts: Vec<VertexSet> = (1u32..1 << n)
            .map(|mask| VertexSet::from_members(n, (0..n).filter(|&v| mask >> v & 1 == 1)))
            .filter(|s| is_fort(g, s))
            .collect();
        let mut minimal: Vec<VertexSet> =
            forts.iter().filter(|f| !forts.iter().any(|h| h != *f && h.is_subset(f))).cloned().collect();
        minimal.sort();
        minimal
    }

    #[test]
    fn closure_examples() {
        let p4 = path(4);
        assert_eq!(zero_forcing_closure(&p4, &set(4, &[1])), p4.vertices());
        let c4 = cycle(4);
        assert_eq!(zero_forcing_closure(&c4, &set(4, &[1])), set(4, &[1]));
        assert!(zero_forcing_closure(&petersen(), &VertexSet::new(10)).is_empty());
    }

    #[test]
    fn zero_forcing_examples() {
        assert!(is_zero_forcing_set(&path(4), &set(4, &[1])));
        assert!(!is_zero_forcing_set(&cycle(4), &set(4, &[1])));
        let g = petersen();
        assert!(is_zero_forcing_set(&g, &g.vertices()));
    }

    #[test]
    fn fort_examples() {
        assert!(is_fort(&star(3), &set(4, &[2, 3])));
        assert!(is_fort(&cycle(4), &set(4, &[1, 3])));
        assert!(!is_fort(&path(4), &set(4, &[2])));
        assert!(is_fort(&Graph::empty(1), &set(1, &[1])));
        assert!(!is_fort(&path(3), &VertexSet::new(3)));
    }

    #[test]
    fn extract_examples() {
        let p4 = path(4);
        assert_eq!(extract_fort_within(&p4, &set(4, &[2, 3, 4])), None);
        let c4 = cycle(4);
        let f = extract_fort_within(&c4, &set(4, &[2, 3, 4])).unwrap();
        assert!(is_fort(&c4, f.vertices()));
        assert!(f.vertices().is_subset(&set(4, &[2, 3, 4])));
        assert_eq!(extract_fort_within(&c4, &VertexSet::new(4)), None);
    }

    #[test]
    fn minimal_fort_examples_match_brute_force() {
        let c4 = enumerate_minimal_forts(&cycle(4), None, SearchBudget::default()).unwrap();
        assert_eq!(c4.iter().map(|f| f.vertices().clone()).collect::<Vec<_>>(), vec![set(4, &[1, 3]), set(4, &[2, 4])]);
        let k4 = enumerate_minimal_forts(&complete(4), None, SearchBudget::default()).unwrap();
        assert_eq!(k4.len(), 6);
        assert!(k4.iter().all(|f| f.vertices().len() == 2));
        let p3 = enumerate_minimal_forts(&path(3), None, SearchBudget::default()).unwrap();
        // the middle vertex sees both ends, so the ends already form a fort
        assert_eq!(p3.len(), 1);
        assert_eq!(p3[0].vertices(), &set(3, &[1, 3]));
        for g in [petersen(), star(4), lollipop(4, 2), cycle(7)] {
            let got: Vec<VertexSet> = enumerate_minimal_forts(&g, None, SearchBudget::default())
                .unwrap()
                .into_iter()
                .map(Fort::into_vertices)
                .collect();
            assert_eq!(got, brute_minimal_forts(&g));
        }
    }

    #[test]
    fn enumeration_respects_limit_and_budget() {
        let k5 = complete(5);
        let first = enumerate_minimal_forts(&k5, Some(3), SearchBudget::default()).unwrap();
        assert_eq!(first.len(), 3);
        assert_eq!(first[0].vertices(), &set(5, &[1, 2]));
        let tiny = SearchBudget { max_nodes: 3 };
        assert_eq!(enumerate_minimal_forts(&petersen(), None, tiny), Err(ForcingError::Budget { budget: 3 }));
    }

    #[test]
    fn separated_pair_examples() {
        let two_k2 = disjoint_union(&complete(2), &complete(2));
        let (a, b) = separated_fort_pair(&two_k2, SearchBudget::default()).unwrap().unwrap();
        assert_eq!(a.vertices(), &set(4, &[1, 2]));
        assert_eq!(b.vertices(), &set(4, &[3, 4]));
        assert_eq!(separated_fort_pair(&petersen(), SearchBudget::default()).unwrap(), None);
        assert_eq!(separated_fort_pair(&cycle(4), SearchBudget::default()).unwrap(), None);
    }
}
