//! Barbell partitions: verification, certificates and search.
//!
//! A barbell partition of `G` is a split of `V(G)` into `R`, `W1`, `W2`
//! where both `W`s are nonempty, no edge joins `W1` to `W2`, and every
//! vertex of `R` has a number of neighbors other than one in each `W`.
//! Equivalently, `{W1, W2}` is a pair of separated forts. A graph admitting
//! one is outside the class of graphs whose every matrix has the SSP.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::forcing::{self, ForcingError, Fort, SearchBudget};
use crate::graph::Graph;
use crate::io::encode_graph6;
use crate::vertex_set::VertexSet;

/// Default vertex cap for the exhaustive tripartition search.
pub const DEFAULT_BRUTE_CAP: usize = 15;

/// Hard limit for [`brute_force_barbell`]; `3^n` beyond this is hopeless.
pub const BRUTE_FORCE_MAX: usize = 20;

/// Version tag carried by every serialized certificate.
pub const CERTIFICATE_SCHEMA: &str = "barbell-certificate/1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BarbellError {
    #[error("exhaustive search limited to {cap} vertices, graph has {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("invalid barbell partition: {0}")]
    Invalid(ValidityReport),
    #[error("partition indexes {got} vertices, graph has {expected}")]
    UniverseMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Forcing(#[from] ForcingError),
    #[error("partition JSON: {0}")]
    Json(String),
}

/// Which part of a partition a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    R,
    W1,
    W2,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BarbellPartition {
    pub r: VertexSet,
    pub w1: VertexSet,
    pub w2: VertexSet,
}

impl BarbellPartition {
    /// Builds a partition whose `R` is everything outside `w1 ∪ w2`.
    pub fn from_ws(w1: VertexSet, w2: VertexSet) -> Self {
        let r = w1.union(&w2).complement();
        BarbellPartition { r, w1, w2 }
    }

    pub fn graph_n(&self) -> usize {
        self.r.universe()
    }

    pub fn part_of(&self, v: usize) -> Option<Part> {
        if self.r.contains(v) {
            Some(Part::R)
        } else if self.w1.contains(v) {
            Some(Part::W1)
        } else if self.w2.contains(v) {
            Some(Part::W2)
        } else {
            None
        }
    }

    pub fn part(&self, part: Part) -> &VertexSet {
        match part {
            Part::R => &self.r,
            Part::W1 => &self.w1,
            Part::W2 => &self.w2,
        }
    }

    pub fn part_mut(&mut self, part: Part) -> &mut VertexSet {
        match part {
            Part::R => &mut self.r,
            Part::W1 => &mut self.w1,
            Part::W2 => &mut self.w2,
        }
    }

    /// Swaps the roles of `W1` and `W2`.
    pub fn swapped(&self) -> Self {
        BarbellPartition { r: self.r.clone(), w1: self.w2.clone(), w2: self.w1.clone() }
    }

    /// The same partition inside a larger universe; new vertices are unassigned.
    pub fn widen(&self, universe: usize) -> Self {
        BarbellPartition { r: self.r.widen(universe), w1: self.w1.widen(universe), w2: self.w2.widen(universe) }
    }

    pub fn to_json(&self) -> PartitionJson {
        PartitionJson { r: self.r.to_one_based(), w1: self.w1.to_one_based(), w2: self.w2.to_one_based() }
    }
}

impl fmt::Debug for BarbellPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R={} W1={} W2={}", self.r, self.w1, self.w2)
    }
}

/// 1-based label arrays, as read and written by the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    #[serde(rename = "R")]
    pub r: Vec<usize>,
    #[serde(rename = "W1")]
    pub w1: Vec<usize>,
    #[serde(rename = "W2")]
    pub w2: Vec<usize>,
}

impl PartitionJson {
    /// Converts to 0-based sets for a graph on `n` vertices. Coverage and
    /// disjointness are left to [`verify_barbell_partition`].
    pub fn to_partition(&self, n: usize) -> Result<BarbellPartition, BarbellError> {
        let convert = |labels: &[usize]| {
            labels
                .iter()
                .map(|&l| {
                    if l == 0 || l > n {
                        Err(BarbellError::Json(format!("label {l} outside 1..={n}")))
                    } else {
                        Ok(l - 1)
                    }
                })
                .collect::<Result<Vec<_>, _>>()
                .map(|vs| VertexSet::from_members(n, vs))
        };
        Ok(BarbellPartition { r: convert(&self.r)?, w1: convert(&self.w1)?, w2: convert(&self.w2)? })
    }
}

pub fn parse_partition_json(text: &str, n: usize) -> Result<BarbellPartition, BarbellError> {
    let raw: PartitionJson = serde_json::from_str(text).map_err(|e| BarbellError::Json(e.to_string()))?;
    raw.to_partition(n)
}

/// One violated clause of the barbell definition, with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Overlap { vertex: usize },
    Uncovered { vertex: usize },
    EmptyW1,
    EmptyW2,
    CrossEdge { w1: usize, w2: usize },
    SingleNeighbor { r: usize, side: Part, neighbor: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Overlap { vertex } => write!(f, "vertex {} lies in more than one part", vertex + 1),
            Violation::Uncovered { vertex } => write!(f, "vertex {} lies in no part", vertex + 1),
            Violation::EmptyW1 => write!(f, "W1 is empty"),
            Violation::EmptyW2 => write!(f, "W2 is empty"),
            Violation::CrossEdge { w1, w2 } => write!(f, "edge {}-{} joins W1 and W2", w1 + 1, w2 + 1),
            Violation::SingleNeighbor { r, side, neighbor } => {
                write!(f, "vertex {} in R has exactly one neighbor ({}) in {:?}", r + 1, neighbor + 1, side)
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Checks every clause of the definition and reports all failures.
pub fn verify_barbell_partition(g: &Graph, p: &BarbellPartition) -> Result<ValidityReport, BarbellError> {
    let n = g.n();
    for set in [&p.r, &p.w1, &p.w2] {
        if set.universe() != n {
            return Err(BarbellError::UniverseMismatch { expected: n, got: set.universe() });
        }
    }
    let mut violations = Vec::new();
    for v in 0..n {
        let count = [&p.r, &p.w1, &p.w2].iter().filter(|s| s.contains(v)).count();
        match count {
            0 => violations.push(Violation::Uncovered { vertex: v }),
            1 => {}
            _ => violations.push(Violation::Overlap { vertex: v }),
        }
    }
    if p.w1.is_empty() {
        violations.push(Violation::EmptyW1);
    }
    if p.w2.is_empty() {
        violations.push(Violation::EmptyW2);
    }
    for a in p.w1.iter() {
        for b in g.neighbors(a).intersection(&p.w2).iter() {
            violations.push(Violation::CrossEdge { w1: a, w2: b });
        }
    }
    for r in p.r.iter() {
        for (side, w) in [(Part::W1, &p.w1), (Part::W2, &p.w2)] {
            let seen = g.neighbors(r).intersection(w);
            if seen.len() == 1 {
                violations.push(Violation::SingleNeighbor { r, side, neighbor: seen.first().unwrap() });
            }
        }
    }
    Ok(ValidityReport { violations })
}

pub fn is_barbell_partition(g: &Graph, p: &BarbellPartition) -> bool {
    verify_barbell_partition(g, p).is_ok_and(|r| r.is_valid())
}

/// The two separated forts `(W1, W2)` of a valid partition.
pub fn barbell_to_forts(g: &Graph, p: &BarbellPartition) -> Result<(Fort, Fort), BarbellError> {
    let report = verify_barbell_partition(g, p)?;
    if !report.is_valid() {
        return Err(BarbellError::Invalid(report));
    }
    Ok((Fort::new(g, p.w1.clone())?, Fort::new(g, p.w2.clone())?))
}

/// `{V - (F1 ∪ F2), F1, F2}` for a separated pair of forts.
pub fn forts_to_barbell(g: &Graph, f1: &Fort, f2: &Fort) -> Result<BarbellPartition, BarbellError> {
    let p = BarbellPartition::from_ws(f1.vertices().clone(), f2.vertices().clone());
    let report = verify_barbell_partition(g, &p)?;
    if report.is_valid() {
        Ok(p)
    } else {
        Err(BarbellError::Invalid(report))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Admits,
    DoesNotAdmit,
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Structural,
    SeparatedForts,
    BruteForce,
    ConstructiveTransfer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarbellCertificate {
    pub verdict: Verdict,
    pub partition: Option<BarbellPartition>,
    pub method: Method,
    pub notes: String,
}

impl BarbellCertificate {
    fn admits(partition: BarbellPartition, method: Method, notes: impl Into<String>) -> Self {
        BarbellCertificate { verdict: Verdict::Admits, partition: Some(partition), method, notes: notes.into() }
    }

    fn refuted(method: Method, notes: impl Into<String>) -> Self {
        BarbellCertificate { verdict: Verdict::DoesNotAdmit, partition: None, method, notes: notes.into() }
    }

    pub fn to_json(&self, g: &Graph) -> CertificateJson {
        let labels = |s: &VertexSet| s.iter().map(|v| g.label(v)).collect();
        let (r, w1, w2) = match &self.partition {
            Some(p) => (labels(&p.r), labels(&p.w1), labels(&p.w2)),
            None => (vec![], vec![], vec![]),
        };
        CertificateJson {
            schema: CERTIFICATE_SCHEMA.to_string(),
            graph6: encode_graph6(g),
            verdict: self.verdict,
            method: self.method,
            r,
            w1,
            w2,
            notes: self.notes.clone(),
        }
    }
}

/// Serialized certificate; vertex arrays hold display labels (1-based by default).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub schema: String,
    pub graph6: String,
    pub verdict: Verdict,
    pub method: Method,
    #[serde(rename = "R")]
    pub r: Vec<String>,
    #[serde(rename = "W1")]
    pub w1: Vec<String>,
    #[serde(rename = "W2")]
    pub w2: Vec<String>,
    pub notes: String,
}

/// The cut-set rule: with `R = S`, any grouping of the components of `G - S`
/// into two nonempty sides works when every `s ∈ S` touching a component
/// has at least two neighbors in it. Returns `W1` = first component.
pub fn cut_set_partition(g: &Graph, s: &VertexSet) -> Option<BarbellPartition> {
    let comps = g.components_avoiding(s);
    if comps.len() < 2 {
        return None;
    }
    let ok = s.iter().all(|v| comps.iter().all(|c| g.neighbors(v).intersection_count(c) != 1));
    if !ok {
        return None;
    }
    let w1 = comps[0].clone();
    let mut w2 = VertexSet::new(g.n());
    for c in &comps[1..] {
        w2.union_with(c);
    }
    Some(BarbellPartition { r: s.clone(), w1, w2 })
}

/// `R = {a}` and the components of `G - a` grouped so `a` sees at least two
/// vertices on each side.
fn single_anchor(g: &Graph, a: usize) -> Option<BarbellPartition> {
    let n = g.n();
    let comps = g.components_avoiding(&VertexSet::singleton(n, a));
    if comps.len() < 2 {
        return None;
    }
    let mut w1 = VertexSet::new(n);
    let mut w2 = VertexSet::new(n);
    for c in comps {
        if g.neighbors(a).intersection_count(&w1) < 2 {
            w1.union_with(&c);
        } else {
            w2.union_with(&c);
        }
    }
    let p = BarbellPartition { r: VertexSet::singleton(n, a), w1, w2 };
    is_barbell_partition(g, &p).then_some(p)
}

/// `R` = the shortest `a`–`b` path plus whatever is not claimed; `W1` takes
/// the components of `G - path` attached only at `a`, `W2` those attached
/// only at `b`.
fn path_anchors(g: &Graph, a: usize, b: usize) -> Option<BarbellPartition> {
    let n = g.n();
    let path = g.shortest_path(a, b)?;
    let on_path = VertexSet::from_members(n, path.iter().copied());
    let mut w1 = VertexSet::new(n);
    let mut w2 = VertexSet::new(n);
    for c in g.components_avoiding(&on_path) {
        let attach = g.neighborhood(&c).unwrap().intersection(&on_path);
        if attach == VertexSet::singleton(n, a) {
            w1.union_with(&c);
        } else if attach == VertexSet::singleton(n, b) {
            w2.union_with(&c);
        }
    }
    if g.neighbors(a).intersection_count(&w1) < 2 || g.neighbors(b).intersection_count(&w2) < 2 {
        return None;
    }
    let p = BarbellPartition::from_ws(w1, w2);
    is_barbell_partition(g, &p).then_some(p)
}

fn screen_rule(q: &crate::graph::StructuralQueries, g: &Graph) -> &'static str {
    let deg_at_least = |k: usize| (0..g.n()).filter(|&v| g.degree(v) >= k).count();
    if q.is_tree && (deg_at_least(4) >= 1 || deg_at_least(3) >= 2) {
        "tree with a vertex of degree >= 4 or two vertices of degree >= 3"
    } else if q.is_unicyclic {
        "unicyclic graph with a vertex of degree >= 4 or an off-cycle vertex of degree >= 3"
    } else if q.is_cactus && q.cycle_count >= 2 {
        "cactus with at least two cycles"
    } else {
        "cut-vertex anchors"
    }
}

/// Fast shortcuts: returns a certificate when one applies, `None` otherwise.
///
/// Positive answers come from disconnectedness or from cut-vertex anchor
/// constructions (which cover qualifying trees, unicyclic graphs and cacti
/// with two or more cycles). The only negative shortcuts are `n <= 1` and
/// connected graphs of diameter 2 and maximum degree 3.
pub fn structural_screen(g: &Graph) -> Option<BarbellCertificate> {
    let n = g.n();
    if n <= 1 {
        return Some(BarbellCertificate::refuted(
            Method::Structural,
            "fewer than two vertices: W1 and W2 cannot both be nonempty",
        ));
    }
    let comps = g.components();
    if comps.len() > 1 {
        let w1 = comps[0].clone();
        let w2 = w1.complement();
        return Some(BarbellCertificate::admits(
            BarbellPartition::from_ws(w1, w2),
            Method::Structural,
            "disconnected: W1 is one component, W2 the rest",
        ));
    }
    let q = g.structural_queries();
    if q.max_degree == 3 && g.diameter() == crate::graph::Distance::Finite(2) {
        return Some(BarbellCertificate::refuted(Method::Structural, "connected with diameter 2 and maximum degree 3"));
    }
    if q.cut_vertices.is_empty() {
        return None;
    }
    let rule = screen_rule(&q, g);
    for a in q.cut_vertices.iter() {
        if let Some(p) = single_anchor(g, a) {
            return Some(BarbellCertificate::admits(
                p,
                Method::Structural,
                format!("{rule}: R = {{{}}} splits the components at a cut vertex", a + 1),
            ));
        }
    }
    let anchors: Vec<usize> = q.cut_vertices.iter().filter(|&v| g.degree(v) >= 3).collect();
    for (i, &a) in anchors.iter().enumerate() {
        for &b in &anchors[i + 1..] {
            if let Some(p) = path_anchors(g, a, b) {
                return Some(BarbellCertificate::admits(
                    p,
                    Method::Structural,
                    format!("{rule}: anchors {} and {} joined by a path in R", a + 1, b + 1),
                ));
            }
        }
    }
    None
}

/// Search limits for [`find_barbell_partition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: SearchBudget,
    pub brute_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: SearchBudget::default(), brute_cap: DEFAULT_BRUTE_CAP }
    }
}

/// Structural screen, then separated forts, then exhaustive tripartition
/// search (only if the fort search ran out of budget and `n <= brute_cap`).
pub fn find_barbell_partition(g: &Graph, opts: SearchOptions) -> BarbellCertificate {
    if let Some(cert) = structural_screen(g) {
        debug_assert!(cert.partition.as_ref().is_none_or(|p| is_barbell_partition(g, p)));
        return cert;
    }
    match forcing::separated_fort_pair(g, opts.budget) {
        Ok(Some((f1, f2))) => {
            let p = forts_to_barbell(g, &f1, &f2).expect("separated forts give a barbell partition");
            BarbellCertificate::admits(p, Method::SeparatedForts, "separated pair of forts")
        }
        Ok(None) => BarbellCertificate::refuted(
            Method::SeparatedForts,
            "no pair of minimal forts is separated (complete search)",
        ),
        Err(ForcingError::Budget { budget }) if g.n() <= opts.brute_cap => match brute_force_barbell(g) {
            Ok(Some(p)) => BarbellCertificate::admits(
                p,
                Method::BruteForce,
                format!("fort search exceeded {budget} nodes; exhaustive tripartition search"),
            ),
            Ok(None) => BarbellCertificate::refuted(
                Method::BruteForce,
                format!("fort search exceeded {budget} nodes; exhaustive tripartition search found none"),
            ),
            Err(e) => budget_exceeded(e.to_string()),
        },
        Err(e) => budget_exceeded(format!("{e}; n = {} above brute-force cap {}", g.n(), opts.brute_cap)),
    }
}

fn budget_exceeded(notes: String) -> BarbellCertificate {
    BarbellCertificate { verdict: Verdict::BudgetExceeded, partition: None, method: Method::SeparatedForts, notes }
}

/// Exhaustive search over assignments `V -> {R, W1, W2}` in lexicographic
/// order (vertex 0 first, `R < W1 < W2`), with the first non-`R` vertex
/// pinned to `W1`. Independent of the fort machinery.
pub fn brute_force_barbell(g: &Graph) -> Result<Option<BarbellPartition>, BarbellError> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX {
        return Err(BarbellError::TooLarge { n, cap: BRUTE_FORCE_MAX });
    }
    // vertices whose closed neighborhood is fully assigned once `v` is
    let mut settled_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for x in 0..n {
        let last = g.neighbors(x).iter().chain([x]).max().unwrap();
        settled_at[last].push(x);
    }
    let mut assign = vec![Part::R; n];
    Ok(brute_descend(g, &settled_at, &mut assign, 0, false).then(|| {
        let members = |part| VertexSet::from_members(n, (0..n).filter(|&v| assign[v] == part));
        BarbellPartition { r: members(Part::R), w1: members(Part::W1), w2: members(Part::W2) }
    }))
}

fn brute_descend(g: &Graph, settled_at: &[Vec<usize>], assign: &mut [Part], v: usize, seen_w: bool) -> bool {
    let n = g.n();
    if v == n {
        return assign.contains(&Part::W1) && assign.contains(&Part::W2);
    }
    let choices: &[Part] = if seen_w { &[Part::R, Part::W1, Part::W2] } else { &[Part::R, Part::W1] };
    for &part in choices {
        assign[v] = part;
        let crosses = part != Part::R
            && g.neighbors(v).iter().take_while(|&u| u < v).any(|u| assign[u] != Part::R && assign[u] != part);
        if crosses {
            continue;
        }
        let r_ok = settled_at[v].iter().all(|&x| {
            assign[x] != Part::R
                || [Part::W1, Part::W2]
                    .iter()
                    .all(|&side| g.neighbors(x).iter().filter(|&u| assign[u] == side).count() != 1)
        });
        if r_ok && brute_descend(g, settled_at, assign, v + 1, seen_w || part != Part::R) {
            return true;
        }
    }
    assign[v] = Part::R;
    false
}

/// Both `W`s have at least two vertices whenever `G` has no isolated
/// vertex. Vacuously true when `G` has an isolated vertex.
pub fn noiso_bound_check(g: &Graph, p: &BarbellPartition) -> bool {
    g.has_isolated_vertex() || (p.w1.len() >= 2 && p.w2.len() >= 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(n: usize, one_based: &[usize]) -> VertexSet {
        VertexSet::from_members(n, one_based.iter().map(|v| v - 1))
    }

    fn partition(n: usize, r: &[usize], w1: &[usize], w2: &[usize]) -> BarbellPartition {
        BarbellPartition { r: set(n, r), w1: set(n, w1), w2: set(n, w2) }
    }

    #[test]
    fn verify_examples() {
        let star4 = star(4);
        assert!(is_barbell_partition(&star4, &partition(5, &[1], &[2, 3], &[4, 5])));

        let c4 = cycle(4);
        let report = verify_barbell_partition(&c4, &partition(4, &[1], &[2, 4], &[3])).unwrap();
        assert!(report.violations.contains(&Violation::CrossEdge { w1: 1, w2: 2 }));

        let p4 = path(4);
        let report = verify_barbell_partition(&p4, &partition(4, &[2, 3], &[1], &[4])).unwrap();
        assert!(report.violations.contains(&Violation::SingleNeighbor { r: 1, side: Part::W1, neighbor: 0 }));
    }

    #[test]
    fn verify_reports_every_clause() {
        let g = path(3);
        let p = BarbellPartition { r: set(3, &[1]), w1: set(3, &[1]), w2: VertexSet::new(3) };
        let report = verify_barbell_partition(&g, &p).unwrap();
        assert!(report.violations.contains(&Violation::Overlap { vertex: 0 }));
        assert!(report.violations.contains(&Violation::Uncovered { vertex: 1 }));
        assert!(report.violations.contains(&Violation::EmptyW2));
        let wrong = partition(4, &[1], &[2], &[3, 4]);
        assert!(matches!(
            verify_barbell_partition(&g, &wrong),
            Err(BarbellError::UniverseMismatch { expected: 3, got: 4 })
        ));
    }

    #[test]
    fn fort_round_trip() {
        let two_k2 = disjoint_union(&complete(2), &complete(2));
        let f1 = Fort::new(&two_k2, set(4, &[1, 2])).unwrap();
        let f2 = Fort::new(&two_k2, set(4, &[3, 4])).unwrap();
        let p = forts_to_barbell(&two_k2, &f1, &f2).unwrap();
        assert!(p.r.is_empty());
        assert_eq!(barbell_to_forts(&two_k2, &p).unwrap(), (f1, f2));

        let star4 = star(4);
        let p = partition(5, &[1], &[2, 3], &[4, 5]);
        let (a, b) = barbell_to_forts(&star4, &p).unwrap();
        assert_eq!(a.vertices(), &set(5, &[2, 3]));
        assert_eq!(forts_to_barbell(&star4, &a, &b).unwrap(), p);
    }

    #[test]
    fn screen_examples() {
        let cert = structural_screen(&petersen()).unwrap();
        assert_eq!(cert.verdict, Verdict::DoesNotAdmit);

        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let cert = structural_screen(&bowtie).unwrap();
        assert_eq!(cert.verdict, Verdict::Admits);
        assert_eq!(cert.partition.as_ref().unwrap().r, set(5, &[1]));

        let cert = structural_screen(&star(4)).unwrap();
        assert_eq!(cert.verdict, Verdict::Admits);
        assert!(is_barbell_partition(&star(4), cert.partition.as_ref().unwrap()));

        assert!(structural_screen(&cycle(6)).is_none());
    }

    #[test]
    fn screen_handles_two_degree_three_tree_vertices() {
        // two claws joined by an edge: a tree with two vertices of degree 3
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        let cert = structural_screen(&g).unwrap();
        assert_eq!(cert.verdict, Verdict::Admits);
        assert!(is_barbell_partition(&g, cert.partition.as_ref().unwrap()));
    }

    #[test]
    fn screen_handles_unicyclic_off_cycle_branch() {
        // triangle with a path to a vertex of degree 3
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
        let cert = structural_screen(&g).unwrap();
        assert_eq!(cert.verdict, Verdict::Admits);
        assert!(is_barbell_partition(&g, cert.partition.as_ref().unwrap()));
    }

    #[test]
    fn cut_set_rule() {
        // two triangles hanging off vertex 0: R = {0}
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let p = cut_set_partition(&bowtie, &set(5, &[1])).unwrap();
        assert!(is_barbell_partition(&bowtie, &p));
        assert!(cut_set_partition(&star(4), &set(5, &[1])).is_none());
    }

    #[test]
    fn find_examples() {
        let opts = SearchOptions::default();
        for g in [c4_with_opposite_pendants(), star(3), crate::ops::cartesian(&path(2), &path(3)).0] {
            let cert = find_barbell_partition(&g, opts);
            assert_eq!(cert.verdict, Verdict::DoesNotAdmit, "{g:?}");
        }
    }

    #[test]
    fn find_falls_back_to_brute_force_on_budget() {
        let opts = SearchOptions { budget: SearchBudget { max_nodes: 1 }, brute_cap: 15 };
        let cert = find_barbell_partition(&cycle(4), opts);
        assert_eq!(cert.method, Method::BruteForce);
        assert_eq!(cert.verdict, Verdict::DoesNotAdmit);
        let opts = SearchOptions { budget: SearchBudget { max_nodes: 1 }, brute_cap: 3 };
        assert_eq!(find_barbell_partition(&cycle(4), opts).verdict, Verdict::BudgetExceeded);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_barbell(&petersen()).unwrap(), None);
        let k3 = complete(3);
        let (k33, _) = crate::ops::tensor(&k3, &k3);
        assert_eq!(brute_force_barbell(&k33).unwrap(), None);
        let p = brute_force_barbell(&disjoint_union(&complete(2), &complete(2))).unwrap().unwrap();
        assert!(p.r.is_empty());
        assert!(matches!(brute_force_barbell(&Graph::empty(25)), Err(BarbellError::TooLarge { n: 25, .. })));
    }

    #[test]
    fn small_graphs_never_admit() {
        assert_eq!(find_barbell_partition(&Graph::empty(0), SearchOptions::default()).verdict, Verdict::DoesNotAdmit);
        assert_eq!(find_barbell_partition(&Graph::empty(1), SearchOptions::default()).verdict, Verdict::DoesNotAdmit);
        assert_eq!(brute_force_barbell(&Graph::empty(1)).unwrap(), None);
    }

    #[test]
    fn noiso_examples() {
        assert!(noiso_bound_check(&star(4), &partition(5, &[1], &[2, 3], &[4, 5])));
        assert!(noiso_bound_check(&Graph::empty(2), &partition(2, &[], &[1], &[2])));
    }

    #[test]
    fn certificate_json_shape() {
        let g = disjoint_union(&complete(2), &complete(2));
        let cert = find_barbell_partition(&g, SearchOptions::default());
        let json = serde_json::to_value(cert.to_json(&g)).unwrap();
        assert_eq!(json["verdict"], "admits");
        assert_eq!(json["method"], "structural");
        assert_eq!(json["R"], serde_json::json!([]));
        assert_eq!(json["W1"], serde_json::json!(["1", "2"]));
        assert_eq!(json["W2"], serde_json::json!(["3", "4"]));
        assert_eq!(json["graph6"], "C`");
    }

    #[test]
    fn partition_json_parsing() {
        let p = parse_partition_json(r#"{"R":[1],"W1":[2,3],"W2":[4,5]}"#, 5).unwrap();
        assert_eq!(p, partition(5, &[1], &[2, 3], &[4, 5]));
        assert!(parse_partition_json(r#"{"R":[0],"W1":[],"W2":[]}"#, 5).is_err());
        assert!(parse_partition_json("{", 5).is_err());
    }
}
