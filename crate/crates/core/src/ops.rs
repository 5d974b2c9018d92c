//! Graph operations and the barbell partitions they carry along.
//!
//! Constructors return new graphs plus a map from result vertices back to
//! their origin. Transfer functions take a barbell partition of an input and
//! produce one for the output, following the case analysis of the matching
//! result; every produced partition is re-verified before it is returned, so
//! a wrong case analysis surfaces as [`OpsError::Verification`] instead of a
//! bogus certificate.

use thiserror::Error;

use crate::barbell::{
    find_barbell_partition, verify_barbell_partition, BarbellError, BarbellPartition, Part, SearchOptions, Verdict,
};
use crate::forcing::{extract_fort_within, is_fort, ForcingError, Fort};
use crate::graph::{named, Graph, GraphError};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpsError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("constructed partition failed verification: {0}")]
    Verification(String),
    #[error(transparent)]
    Barbell(#[from] BarbellError),
    #[error(transparent)]
    Forcing(#[from] ForcingError),
}

fn hypothesis(msg: impl Into<String>) -> OpsError {
    OpsError::Hypothesis(msg.into())
}

/// Verifies `p` against `g`, turning a failure into an error.
fn checked(g: &Graph, p: BarbellPartition) -> Result<BarbellPartition, OpsError> {
    let report = verify_barbell_partition(g, &p)?;
    if report.is_valid() {
        Ok(p)
    } else {
        Err(OpsError::Verification(report.to_string()))
    }
}

fn require_valid(g: &Graph, p: &BarbellPartition) -> Result<(), OpsError> {
    let report = verify_barbell_partition(g, p)?;
    if report.is_valid() {
        Ok(())
    } else {
        Err(BarbellError::Invalid(report).into())
    }
}

// ---------------------------------------------------------------------------
// Edits

pub fn add_edge(g: &Graph, u: usize, v: usize) -> Result<Graph, OpsError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::SelfLoop(u).into());
    }
    if g.has_edge(u, v) {
        return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)).into());
    }
    Ok(Graph::from_edges(g.n(), g.edges().chain([(u, v)]))?)
}

pub fn remove_edge(g: &Graph, u: usize, v: usize) -> Result<Graph, OpsError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(GraphError::MissingEdge(u.min(v), u.max(v)).into());
    }
    let (a, b) = (u.min(v), u.max(v));
    Ok(Graph::from_edges(g.n(), g.edges().filter(|&e| e != (a, b)))?)
}

/// `G - S`, with the surviving vertices renumbered in increasing order.
pub fn remove_set(g: &Graph, s: &VertexSet) -> Result<Graph, OpsError> {
    g.check_set(s)?;
    Ok(g.induced(&s.complement()))
}

pub fn remove_vertex(g: &Graph, v: usize) -> Result<Graph, OpsError> {
    g.check_vertex(v)?;
    remove_set(g, &VertexSet::singleton(g.n(), v))
}

/// Appends vertex `n` adjacent to `neighbors`.
pub fn add_vertex_with_neighbors(g: &Graph, neighbors: &VertexSet) -> Result<Graph, OpsError> {
    g.check_set(neighbors)?;
    let n = g.n();
    Ok(Graph::from_edges(n + 1, g.edges().chain(neighbors.iter().map(|u| (u, n))))?)
}

/// Duplicates `v` without an edge: new vertex `n` with `N(n) = N(v)`.
pub fn dup(g: &Graph, v: usize) -> Result<Graph, OpsError> {
    g.check_vertex(v)?;
    add_vertex_with_neighbors(g, g.neighbors(v))
}

/// Duplicates `v` with an edge: new vertex `n` with `N(n) = N[v]`.
pub fn jdup(g: &Graph, v: usize) -> Result<Graph, OpsError> {
    g.check_vertex(v)?;
    let mut nb = g.neighbors(v).clone();
    nb.insert(v);
    add_vertex_with_neighbors(g, &nb)
}

/// Appends a vertex adjacent to everything.
pub fn add_dominating_vertex(g: &Graph) -> Graph {
    add_vertex_with_neighbors(g, &g.vertices()).expect("all vertices are in range")
}

// ---------------------------------------------------------------------------
// Binary constructors

/// `G ∨ H`: `G` keeps `0..n`, `H`'s vertex `w` becomes `n + w`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let k = g.n();
    let cross = (0..k).flat_map(|u| (0..h.n()).map(move |w| (u, k + w)));
    Graph::from_edges(k + h.n(), g.edges().chain(h.edges().map(|(a, b)| (a + k, b + k))).chain(cross))
        .expect("join of simple graphs is simple")
}

/// Where each vertex of the second summand went in a vertex sum. The first
/// summand keeps its ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSumMap {
    pub from_h: Vec<usize>,
}

/// `G ⊕ H` gluing `u ∈ G` to `w ∈ H`. `G`'s vertices keep their ids (the
/// glued vertex is `u`), `H`'s other vertices are appended in order.
pub fn vertex_sum(g: &Graph, u: usize, h: &Graph, w: usize) -> Result<(Graph, VertexSumMap), OpsError> {
    g.check_vertex(u)?;
    h.check_vertex(w)?;
    let mut from_h = Vec::with_capacity(h.n());
    let mut next = g.n();
    for x in 0..h.n() {
        if x == w {
            from_h.push(u);
        } else {
            from_h.push(next);
            next += 1;
        }
    }
    let sum = Graph::from_edges(next, g.edges().chain(h.edges().map(|(a, b)| (from_h[a], from_h[b]))))?;
    Ok((sum, VertexSumMap { from_h }))
}

/// Vertex layout of a corona `G ∘ H`: hosts `0..k`, then copy `i` of `H`
/// at `k + i·m .. k + (i+1)·m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoronaMap {
    pub hosts: usize,
    pub copy_size: usize,
}

impl CoronaMap {
    pub fn copy_vertex(&self, host: usize, j: usize) -> usize {
        self.hosts + host * self.copy_size + j
    }

    /// `(host, None)` for a host vertex, `(host, Some(j))` for `h_{host,j}`.
    pub fn origin(&self, x: usize) -> (usize, Option<usize>) {
        if x < self.hosts {
            (x, None)
        } else {
            let y = x - self.hosts;
            (y / self.copy_size, Some(y % self.copy_size))
        }
    }
}

pub fn corona(g: &Graph, h: &Graph) -> (Graph, CoronaMap) {
    let map = CoronaMap { hosts: g.n(), copy_size: h.n() };
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 0..g.n() {
        for j in 0..h.n() {
            edges.push((i, map.copy_vertex(i, j)));
        }
        edges.extend(h.edges().map(|(a, b)| (map.copy_vertex(i, a), map.copy_vertex(i, b))));
    }
    let n = g.n() * (1 + h.n());
    (Graph::from_edges(n, edges).expect("corona of simple graphs is simple"), map)
}

/// Row-major bijection `(g, h) <-> g·|H| + h` for product graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductVertexMap {
    pub left: usize,
    pub right: usize,
}

impl ProductVertexMap {
    pub fn id(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.left && h < self.right);
        g * self.right + h
    }

    pub fn pair(&self, x: usize) -> (usize, usize) {
        (x / self.right, x % self.right)
    }

    pub fn len(&self) -> usize {
        self.left * self.right
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `{(g, h) : g ∈ a, h ∈ b}`.
    pub fn cylinder(&self, a: &VertexSet, b: &VertexSet) -> VertexSet {
        VertexSet::from_members(self.len(), a.iter().flat_map(|g| b.iter().map(move |h| g * self.right + h)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Tensor,
    Strong,
}

pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> (Graph, ProductVertexMap) {
    let map = ProductVertexMap { left: g.n(), right: h.n() };
    let k = Graph::from_fn(map.len(), |x, y| {
        let (g1, h1) = map.pair(x);
        let (g2, h2) = map.pair(y);
        let cart = (g1 == g2 && h.has_edge(h1, h2)) || (h1 == h2 && g.has_edge(g1, g2));
        let tens = g.has_edge(g1, g2) && h.has_edge(h1, h2);
        match kind {
            ProductKind::Cartesian => cart,
            ProductKind::Tensor => tens,
            ProductKind::Strong => cart || tens,
        }
    });
    (k, map)
}

pub fn cartesian(g: &Graph, h: &Graph) -> (Graph, ProductVertexMap) {
    product(g, h, ProductKind::Cartesian)
}

pub fn tensor(g: &Graph, h: &Graph) -> (Graph, ProductVertexMap) {
    product(g, h, ProductKind::Tensor)
}

pub fn strong(g: &Graph, h: &Graph) -> (Graph, ProductVertexMap) {
    product(g, h, ProductKind::Strong)
}

// ---------------------------------------------------------------------------
// Edge and vertex edits

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeEdit {
    Add,
    Remove,
}

/// Carries `p` across adding or removing the edge `uv`.
///
/// Returns `Some(p)` when the endpoints share a part, or when one endpoint
/// `r ∈ R` and the other lies in `W_i` with `r` keeping at least two
/// neighbors in `W_i` afterwards. Returns `None` otherwise.
pub fn transfer_barbell_edge_edit(
    g: &Graph,
    p: &BarbellPartition,
    u: usize,
    v: usize,
    mode: EdgeEdit,
) -> Result<Option<BarbellPartition>, OpsError> {
    require_valid(g, p)?;
    let edited = match mode {
        EdgeEdit::Add => add_edge(g, u, v)?,
        EdgeEdit::Remove => remove_edge(g, u, v)?,
    };
    let (pu, pv) = (p.part_of(u).unwrap(), p.part_of(v).unwrap());
    let applies = if pu == pv {
        true
    } else {
        let (r, w, side) = match (pu, pv) {
            (Part::R, side) => (u, v, side),
            (side, Part::R) => (v, u, side),
            _ => return Ok(None),
        };
        debug_assert!(p.part(side).contains(w));
        let seen = g.neighbors(r).intersection_count(p.part(side));
        match mode {
            EdgeEdit::Remove => seen > 2,
            EdgeEdit::Add => seen >= 2,
        }
    };
    if !applies {
        return Ok(None);
    }
    checked(&edited, p.clone()).map(Some)
}

/// Renumbers `p` onto the vertices kept by `keep`, in increasing order.
fn restrict(p: &BarbellPartition, keep: &VertexSet) -> BarbellPartition {
    let k = keep.len();
    let index: Vec<Option<usize>> = {
        let mut next = 0;
        (0..keep.universe())
            .map(|v| {
                keep.contains(v).then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    };
    let map = |s: &VertexSet| VertexSet::from_members(k, s.iter().filter_map(|v| index[v]));
    BarbellPartition { r: map(&p.r), w1: map(&p.w1), w2: map(&p.w2) }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexEdit {
    /// Delete this vertex; survivors are renumbered in increasing order.
    Remove(usize),
    /// Append vertex `n` with these neighbors.
    Extend(VertexSet),
}

/// Carries `p` across deleting or adding one vertex.
///
/// Removal works when the vertex lies in `R`, or lies in `W_i` with either
/// all its neighbors in `W_i` or every `R`-neighbor seeing more than two
/// vertices of `W_i` (and `W_i` does not become empty). Extension places the
/// new vertex `x` in the part containing all of `N(x)`, else in `R` when it
/// sees other than one vertex of each `W_i`, else in `W_i` when `N(x)`
/// avoids the other `W` and each `R`-neighbor already sees two of `W_i`.
pub fn transfer_barbell_vertex(
    g: &Graph,
    p: &BarbellPartition,
    edit: &VertexEdit,
) -> Result<Option<BarbellPartition>, OpsError> {
    require_valid(g, p)?;
    match edit {
        VertexEdit::Remove(v) => {
            let v = *v;
            g.check_vertex(v)?;
            let side = p.part_of(v).unwrap();
            let applies = match side {
                Part::R => true,
                w => {
                    let ws = p.part(w);
                    ws.len() >= 2
                        && (g.neighbors(v).is_subset(ws)
                            || g.neighbors(v)
                                .intersection(&p.r)
                                .iter()
                                .all(|r| g.neighbors(r).intersection_count(ws) > 2))
                }
            };
            if !applies {
                return Ok(None);
            }
            let smaller = remove_vertex(g, v)?;
            let keep = VertexSet::singleton(g.n(), v).complement();
            checked(&smaller, restrict(p, &keep)).map(Some)
        }
        VertexEdit::Extend(nb) => {
            let bigger = add_vertex_with_neighbors(g, nb)?;
            let x = g.n();
            let mut grown = p.widen(x + 1);
            let part = if let Some(part) = [Part::R, Part::W1, Part::W2].into_iter().find(|&s| nb.is_subset(p.part(s)))
            {
                part
            } else if [&p.w1, &p.w2].iter().all(|w| nb.intersection_count(w) != 1) {
                Part::R
            } else if let Some(part) = [(Part::W1, &p.w2), (Part::W2, &p.w1)].into_iter().find_map(|(side, other)| {
                let ws = p.part(side);
                let ok = nb.is_disjoint(other)
                    && nb.intersection(&p.r).iter().all(|r| g.neighbors(r).intersection_count(ws) >= 2);
                ok.then_some(side)
            }) {
                part
            } else {
                return Ok(None);
            };
            grown.part_mut(part).insert(x);
            checked(&bigger, grown).map(Some)
        }
    }
}

// ---------------------------------------------------------------------------
// Duplication

/// Partitions of `dup(G, v)` and `jdup(G, v)` built from one of `G`: the
/// copy joins the part of `v`.
pub fn transfer_barbell_dup(
    g: &Graph,
    p: &BarbellPartition,
    v: usize,
) -> Result<(BarbellPartition, BarbellPartition), OpsError> {
    require_valid(g, p)?;
    g.check_vertex(v)?;
    let n = g.n();
    let mut grown = p.widen(n + 1);
    grown.part_mut(p.part_of(v).unwrap()).insert(n);
    let d = checked(&dup(g, v)?, grown.clone())?;
    let j = checked(&jdup(g, v)?, grown)?;
    Ok((d, j))
}

/// For a graph `G` with no barbell partition, whether duplicating `v` (with
/// or without an edge) creates one: true iff `V - N[v]` contains a fort.
///
/// The criterion fails on `K_1`, where `dup` gives `2K_1` (which admits)
/// but `V - N[v]` is empty, so `n = 1` is rejected.
pub fn dup_creates_barbell(g: &Graph, v: usize, opts: SearchOptions) -> Result<bool, OpsError> {
    g.check_vertex(v)?;
    if g.n() < 2 {
        return Err(hypothesis("the duplication criterion needs at least two vertices"));
    }
    match find_barbell_partition(g, opts).verdict {
        Verdict::DoesNotAdmit => {}
        Verdict::Admits => return Err(hypothesis("graph already admits a barbell partition")),
        Verdict::BudgetExceeded => return Err(hypothesis("could not decide whether the graph admits")),
    }
    let closed = g.closed_neighborhood(&VertexSet::singleton(g.n(), v))?;
    Ok(extract_fort_within(g, &closed.complement()).is_some())
}

/// A barbell partition of `dup(G, v)` (or `jdup`) from the fort criterion:
/// `{v, v'}` is a fort of the new graph and the fort found outside `N[v]`
/// is separated from it.
pub fn dup_fort_partition(g: &Graph, v: usize, with_edge: bool) -> Result<Option<BarbellPartition>, OpsError> {
    g.check_vertex(v)?;
    let n = g.n();
    let closed = g.closed_neighborhood(&VertexSet::singleton(n, v))?;
    let Some(f) = extract_fort_within(g, &closed.complement()) else {
        return Ok(None);
    };
    let grown = if with_edge { jdup(g, v)? } else { dup(g, v)? };
    let pair = VertexSet::from_members(n + 1, [v, n]);
    checked(&grown, BarbellPartition::from_ws(pair, f.vertices().widen(n + 1))).map(Some)
}

// ---------------------------------------------------------------------------
// Join, dominating vertex, vertex sum

fn require_no_isolated(g: &Graph, name: &str) -> Result<(), OpsError> {
    if g.has_isolated_vertex() {
        Err(hypothesis(format!("{name} has an isolated vertex")))
    } else {
        Ok(())
    }
}

/// Partition of `G ∨ H` from one of `H` with both `W`s of size at least
/// two: all of `G` joins `R`.
pub fn transfer_barbell_join(g: &Graph, h: &Graph, p_h: &BarbellPartition) -> Result<BarbellPartition, OpsError> {
    require_no_isolated(g, "first factor")?;
    require_no_isolated(h, "second factor")?;
    require_valid(h, p_h)?;
    if p_h.w1.len() < 2 || p_h.w2.len() < 2 {
        return Err(hypothesis("both W parts need at least two vertices"));
    }
    let k = g.n();
    let total = k + h.n();
    let shift = |s: &VertexSet| VertexSet::from_members(total, s.iter().map(|v| v + k));
    let mut r = shift(&p_h.r);
    for v in 0..k {
        r.insert(v);
    }
    checked(&join(g, h), BarbellPartition { r, w1: shift(&p_h.w1), w2: shift(&p_h.w2) })
}

/// For isolated-vertex-free `G` and `H`: `G ∨ H` admits iff one factor has
/// a partition with both `W`s of size at least two. Returns the transferred
/// partition when one exists.
pub fn join_barbell(g: &Graph, h: &Graph, opts: SearchOptions) -> Result<Option<BarbellPartition>, OpsError> {
    require_no_isolated(g, "first factor")?;
    require_no_isolated(h, "second factor")?;
    let big_ws = |x: &Graph| -> Result<Option<BarbellPartition>, OpsError> {
        let cert = find_barbell_partition(x, opts);
        match cert.verdict {
            Verdict::Admits => Ok(cert.partition.filter(|p| p.w1.len() >= 2 && p.w2.len() >= 2)),
            Verdict::DoesNotAdmit => Ok(None),
            Verdict::BudgetExceeded => Err(hypothesis(format!("factor search undecided: {}", cert.notes))),
        }
    };
    if let Some(p) = big_ws(h)? {
        return transfer_barbell_join(g, h, &p).map(Some);
    }
    if let Some(p) = big_ws(g)? {
        // G ∨ H is H ∨ G with the two blocks swapped
        let k = g.n();
        let total = k + h.n();
        let from_swapped =
            |s: &VertexSet| VertexSet::from_members(total, s.iter().map(|x| if x < h.n() { x + k } else { x - h.n() }));
        let q = transfer_barbell_join(h, g, &p)?;
        let moved = BarbellPartition { r: from_swapped(&q.r), w1: from_swapped(&q.w1), w2: from_swapped(&q.w2) };
        return checked(&join(g, h), moved).map(Some);
    }
    Ok(None)
}

pub fn join_admits(g: &Graph, h: &Graph, opts: SearchOptions) -> Result<bool, OpsError> {
    join_barbell(g, h, opts).map(|p| p.is_some())
}

/// Adds a dominating vertex (index `n`) to a graph with no isolated vertex;
/// the new vertex joins `R`.
pub fn transfer_barbell_dominating(g: &Graph, p: &BarbellPartition) -> Result<(Graph, BarbellPartition), OpsError> {
    require_no_isolated(g, "graph")?;
    require_valid(g, p)?;
    let bigger = add_dominating_vertex(g);
    let mut grown = p.widen(g.n() + 1);
    grown.r.insert(g.n());
    let q = checked(&bigger, grown)?;
    Ok((bigger, q))
}

/// A fort of `G` avoiding `v`, which exists exactly when `{v}` is not a
/// zero forcing set (in particular whenever `G` is not a path).
fn fort_avoiding(g: &Graph, v: usize) -> Option<Fort> {
    extract_fort_within(g, &VertexSet::singleton(g.n(), v).complement())
}

/// A barbell partition of `G ⊕ H` (gluing `u ∈ G` to `w ∈ H`).
///
/// With `p_h` given, all of `G` joins the part of `w`. Otherwise each
/// factor must have a fort avoiding the glued vertex (true for non-paths);
/// the two forts are then separated in the sum.
pub fn transfer_barbell_vertex_sum(
    g: &Graph,
    u: usize,
    h: &Graph,
    w: usize,
    p_h: Option<&BarbellPartition>,
) -> Result<(Graph, BarbellPartition), OpsError> {
    let (sum, map) = vertex_sum(g, u, h, w)?;
    let n = sum.n();
    let from_h = |s: &VertexSet| VertexSet::from_members(n, s.iter().map(|x| map.from_h[x]));
    if let Some(p) = p_h {
        require_valid(h, p)?;
        let mut q = BarbellPartition { r: from_h(&p.r), w1: from_h(&p.w1), w2: from_h(&p.w2) };
        let side = p.part_of(w).unwrap();
        for x in 0..g.n() {
            q.part_mut(side).insert(x);
        }
        let q = checked(&sum, q)?;
        return Ok((sum, q));
    }
    let (Some(fg), Some(fh)) = (fort_avoiding(g, u), fort_avoiding(h, w)) else {
        return Err(hypothesis(
            "no partition of the second summand given, and a summand has no fort avoiding the glued vertex",
        ));
    };
    let q = BarbellPartition::from_ws(fg.vertices().widen(n), from_h(fh.vertices()));
    let q = checked(&sum, q)?;
    Ok((sum, q))
}

/// Whether `P_n ⊕ P_m`, gluing vertex `i` of the first path to vertex `j`
/// of the second, admits a barbell partition: iff both glued vertices are
/// interior (degree two).
pub fn path_sum_admits(n: usize, i: usize, m: usize, j: usize) -> bool {
    let interior = |len: usize, x: usize| x > 0 && x + 1 < len;
    interior(n, i) && interior(m, j)
}

// ---------------------------------------------------------------------------
// Products

/// `W1` and `W2` are the copies of `H` hanging off the first two hosts.
pub fn barbell_corona(g: &Graph, h: &Graph) -> Result<(Graph, BarbellPartition), OpsError> {
    if g.n() < 2 || h.n() < 2 {
        return Err(hypothesis("corona construction needs both graphs to have at least two vertices"));
    }
    let (k, map) = corona(g, h);
    let copy = |i: usize| VertexSet::from_members(k.n(), (0..h.n()).map(|j| map.copy_vertex(i, j)));
    let p = checked(&k, BarbellPartition::from_ws(copy(0), copy(1)))?;
    Ok((k, p))
}

/// Lifts a partition of `H` to `G □ H` or `G × H` along the `H` coordinate.
pub fn lift_barbell_product(
    g: &Graph,
    h: &Graph,
    p_h: &BarbellPartition,
    kind: ProductKind,
) -> Result<(Graph, BarbellPartition), OpsError> {
    if kind == ProductKind::Strong {
        return Err(hypothesis("lifting is for Cartesian and tensor products"));
    }
    if g.n() == 0 {
        return Err(hypothesis("first factor is empty"));
    }
    require_valid(h, p_h)?;
    let (k, map) = product(g, h, kind);
    let all = g.vertices();
    let p = BarbellPartition {
        r: map.cylinder(&all, &p_h.r),
        w1: map.cylinder(&all, &p_h.w1),
        w2: map.cylinder(&all, &p_h.w2),
    };
    let p = checked(&k, p)?;
    Ok((k, p))
}

/// `W_i = F_G^i × F_H^i` in `G □ H` from a pair of disjoint forts in each
/// factor.
pub fn barbell_cartesian_disjoint_forts(
    g: &Graph,
    h: &Graph,
    forts_g: (&VertexSet, &VertexSet),
    forts_h: (&VertexSet, &VertexSet),
) -> Result<(Graph, BarbellPartition), OpsError> {
    for (host, (a, b), name) in [(g, forts_g, "first factor"), (h, forts_h, "second factor")] {
        host.check_set(a)?;
        host.check_set(b)?;
        if !is_fort(host, a) || !is_fort(host, b) {
            return Err(hypothesis(format!("{name}: given sets are not both forts")));
        }
        if !a.is_disjoint(b) {
            return Err(hypothesis(format!("{name}: forts are not disjoint")));
        }
    }
    let (k, map) = cartesian(g, h);
    let p = BarbellPartition::from_ws(map.cylinder(forts_g.0, forts_h.0), map.cylinder(forts_g.1, forts_h.1));
    let p = checked(&k, p)?;
    Ok((k, p))
}

/// `C_k □ C_{mk}` with the diagonal partition: vertex `(a, b)` goes to `W1`
/// when `b - a ≡ 0`, to `R` when `b - a ≡ ±1`, and to `W2` otherwise
/// (all mod `k`).
pub fn barbell_prism(k: usize, m: usize) -> Result<(Graph, BarbellPartition), OpsError> {
    if k < 4 {
        return Err(hypothesis(format!("prism construction needs k >= 4, got {k}")));
    }
    if m < 1 {
        return Err(hypothesis("prism construction needs m >= 1"));
    }
    let (g, map) = cartesian(&named::cycle(k), &named::cycle(m * k));
    let mut p = BarbellPartition { r: VertexSet::new(g.n()), w1: VertexSet::new(g.n()), w2: VertexSet::new(g.n()) };
    for x in 0..g.n() {
        let (a, b) = map.pair(x);
        let d = (b + k - a % k) % k;
        let part = match d {
            0 => Part::W1,
            1 => Part::R,
            d if d == k - 1 => Part::R,
            _ => Part::W2,
        };
        p.part_mut(part).insert(x);
    }
    let p = checked(&g, p)?;
    Ok((g, p))
}

/// `K_n × K_m` with the first row split at `⌈m/2⌉`.
pub fn barbell_tensor_complete(n: usize, m: usize) -> Result<(Graph, BarbellPartition), OpsError> {
    if n < 2 || m < 6 {
        return Err(hypothesis(format!("tensor construction needs n >= 2 and m >= 6, got n = {n}, m = {m}")));
    }
    let (g, map) = tensor(&named::complete(n), &named::complete(m));
    let half = m.div_ceil(2);
    let w1 = VertexSet::from_members(g.n(), (0..half).map(|j| map.id(0, j)));
    let w2 = VertexSet::from_members(g.n(), (half..m).map(|j| map.id(0, j)));
    let p = checked(&g, BarbellPartition::from_ws(w1, w2))?;
    Ok((g, p))
}

/// Rows `{u} × V(H)` and `{v} × V(H)` as `W1`, `W2` in `G × H` or `G ⊠ H`,
/// for nonadjacent `u ≠ v`. A disconnected product gets the component
/// partition instead.
pub fn barbell_nonadjacent_pair(
    g: &Graph,
    h: &Graph,
    u: usize,
    v: usize,
    kind: ProductKind,
) -> Result<(Graph, BarbellPartition), OpsError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v || g.has_edge(u, v) {
        return Err(hypothesis("u and v must be distinct and nonadjacent"));
    }
    if h.n() < 2 {
        return Err(hypothesis("second factor needs at least two vertices"));
    }
    match kind {
        ProductKind::Tensor if !h.pendant_vertices().is_empty() => {
            return Err(hypothesis("second factor has a pendant vertex"));
        }
        ProductKind::Cartesian => return Err(hypothesis("row construction is for tensor and strong products")),
        _ => {}
    }
    let (k, map) = product(g, h, kind);
    let comps = k.components();
    let p = if comps.len() > 1 {
        BarbellPartition::from_ws(comps[0].clone(), comps[0].complement())
    } else {
        let row = |x: usize| VertexSet::from_members(k.n(), (0..h.n()).map(|y| map.id(x, y)));
        BarbellPartition::from_ws(row(u), row(v))
    };
    let p = checked(&k, p)?;
    Ok((k, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barbell::{brute_force_barbell, is_barbell_partition};
    use crate::graph::named::*;

    fn set(n: usize, one_based: &[usize]) -> VertexSet {
        VertexSet::from_members(n, one_based.iter().map(|v| v - 1))
    }

    fn star_partition() -> BarbellPartition {
        BarbellPartition { r: set(5, &[1]), w1: set(5, &[2, 3]), w2: set(5, &[4, 5]) }
    }

    #[test]
    fn duplication_examples() {
        assert_eq!(dup(&complete(2), 0).unwrap(), Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(jdup(&complete(2), 0).unwrap(), complete(3));
        let c4 = dup(&path(3), 1).unwrap();
        assert_eq!(c4.m(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2) && c4.is_connected());
    }

    #[test]
    fn edit_examples() {
        assert_eq!(add_edge(&path(3), 0, 2).unwrap(), cycle(3));
        assert_eq!(remove_vertex(&cycle(4), 0).unwrap(), path(3).permute(&[0, 1, 2]));
        assert_eq!(remove_set(&complete(4), &set(4, &[1, 2])).unwrap(), complete(2));
        assert!(matches!(add_edge(&path(3), 0, 1), Err(OpsError::Graph(GraphError::DuplicateEdge(0, 1)))));
        assert!(matches!(remove_edge(&path(3), 0, 2), Err(OpsError::Graph(GraphError::MissingEdge(0, 2)))));
        assert!(remove_vertex(&path(3), 7).is_err());
    }

    #[test]
    fn constructor_sizes() {
        let wheel = join(&Graph::empty(1), &cycle(4));
        assert_eq!((wheel.n(), wheel.m()), (5, 8));
        let (k, _) = strong(&complete(2), &complete(3));
        assert_eq!(k, complete(6));
        let (t, _) = tensor(&path(2), &path(2));
        assert_eq!(t.components().len(), 2);
        let (s, map) = vertex_sum(&star(3), 1, &star(3), 1).unwrap();
        assert_eq!(s.n(), 7);
        assert_eq!(map.from_h[1], 1);
        let (c, cmap) = corona(&path(3), &complete(2));
        assert_eq!(c.n(), 9);
        assert_eq!(cmap.origin(5), (1, Some(0)));
    }

    #[test]
    fn product_edge_counts() {
        let g = petersen();
        let h = path(4);
        let (c, map) = cartesian(&g, &h);
        let (t, _) = tensor(&g, &h);
        let (s, _) = strong(&g, &h);
        assert_eq!(c.m(), g.m() * h.n() + g.n() * h.m());
        assert_eq!(t.m(), 2 * g.m() * h.m());
        assert_eq!(s.m(), c.m() + t.m());
        for x in 0..map.len() {
            let (a, b) = map.pair(x);
            assert_eq!(map.id(a, b), x);
        }
    }

    #[test]
    fn edge_edit_transfers() {
        let star4 = star(4);
        let p = star_partition();
        // both endpoints in W1: add an edge between two leaves
        let q = transfer_barbell_edge_edit(&star4, &p, 1, 2, EdgeEdit::Add).unwrap();
        assert_eq!(q, Some(p.clone()));
        // R vertex with only two W1 neighbors: removal is not covered
        assert_eq!(transfer_barbell_edge_edit(&star4, &p, 0, 1, EdgeEdit::Remove).unwrap(), None);
        let star6 = star(6);
        let p6 = BarbellPartition { r: set(7, &[1]), w1: set(7, &[2, 3, 4]), w2: set(7, &[5, 6, 7]) };
        let q = transfer_barbell_edge_edit(&star6, &p6, 0, 1, EdgeEdit::Remove).unwrap();
        assert_eq!(q, Some(p6));
    }

    #[test]
    fn vertex_transfers() {
        let star4 = star(4);
        let p = star_partition();
        let q = transfer_barbell_vertex(&star4, &p, &VertexEdit::Remove(0)).unwrap().unwrap();
        assert!(q.r.is_empty() && q.w1.len() == 2);
        let q = transfer_barbell_vertex(&star4, &p, &VertexEdit::Extend(set(5, &[2, 3]))).unwrap().unwrap();
        assert!(q.w1.contains(5));
        let q = transfer_barbell_vertex(&star4, &p, &VertexEdit::Extend(set(5, &[2, 4]))).unwrap();
        assert_eq!(q, None);
    }

    #[test]
    fn dup_transfer_cases() {
        let star4 = star(4);
        let p = star_partition();
        let (d, j) = transfer_barbell_dup(&star4, &p, 0).unwrap();
        assert!(d.r.contains(5) && j.r.contains(5));
        let (d, _) = transfer_barbell_dup(&star4, &p, 1).unwrap();
        assert_eq!(d.w1.len(), 3);
        let two_k2 = disjoint_union(&complete(2), &complete(2));
        let p = BarbellPartition::from_ws(set(4, &[1, 2]), set(4, &[3, 4]));
        let (d, _) = transfer_barbell_dup(&two_k2, &p, 3).unwrap();
        assert_eq!(d.w2.len(), 3);
    }

    #[test]
    fn dup_criterion_examples() {
        let opts = SearchOptions::default();
        assert!(dup_creates_barbell(&star(3), 1, opts).unwrap());
        assert!(!dup_creates_barbell(&path(4), 0, opts).unwrap());
        assert_eq!(brute_force_barbell(&dup(&path(4), 0).unwrap()).unwrap(), None);
        assert!(dup_creates_barbell(&star(4), 0, opts).is_err());
        assert!(dup_creates_barbell(&Graph::empty(1), 0, opts).is_err());
        let p = dup_fort_partition(&star(3), 1, true).unwrap().unwrap();
        assert!(is_barbell_partition(&jdup(&star(3), 1).unwrap(), &p));
    }

    #[test]
    fn join_examples() {
        let opts = SearchOptions::default();
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let p = join_barbell(&complete(2), &bowtie, opts).unwrap().unwrap();
        assert!(p.r.contains(0) && p.r.contains(1));
        assert!(!join_admits(&complete(2), &complete(2), opts).unwrap());
        let p = join_barbell(&bowtie, &complete(2), opts).unwrap().unwrap();
        assert!(is_barbell_partition(&join(&bowtie, &complete(2)), &p));
        let (g, q) = transfer_barbell_dominating(&star(4), &star_partition()).unwrap();
        assert!(q.r.contains(5) && g.degree(5) == 5);
        assert!(join_admits(&Graph::empty(1), &star(4), opts).is_err());
    }

    #[test]
    fn vertex_sum_examples() {
        let (_, p) = transfer_barbell_vertex_sum(&star(3), 1, &star(3), 1, None).unwrap();
        assert_eq!(p.w1.len(), 2);
        assert!(transfer_barbell_vertex_sum(&path(3), 1, &path(3), 1, None).is_ok());
        assert!(transfer_barbell_vertex_sum(&path(3), 0, &path(3), 1, None).is_err());
        let (s, _) = vertex_sum(&path(3), 0, &path(3), 1).unwrap();
        assert_eq!(brute_force_barbell(&s).unwrap(), None);
        let (_, q) = transfer_barbell_vertex_sum(&path(3), 0, &star(4), 0, Some(&star_partition())).unwrap();
        assert!(q.r.contains(1) && q.r.contains(2));
    }

    #[test]
    fn corona_examples() {
        let (_, p) = barbell_corona(&complete(2), &complete(2)).unwrap();
        assert_eq!(p.w1, set(6, &[3, 4]));
        assert_eq!(p.w2, set(6, &[5, 6]));
        let (_, p) = barbell_corona(&path(3), &path(2)).unwrap();
        assert_eq!(p.r.len(), 5);
        assert!(barbell_corona(&Graph::empty(1), &complete(2)).is_err());
    }

    #[test]
    fn lift_examples() {
        for kind in [ProductKind::Cartesian, ProductKind::Tensor] {
            let (k, p) = lift_barbell_product(&complete(2), &star(4), &star_partition(), kind).unwrap();
            assert_eq!(k.n(), 10);
            assert_eq!(p.w1.len(), 4);
            let two_k2 = disjoint_union(&complete(2), &complete(2));
            let q = BarbellPartition::from_ws(set(4, &[1, 2]), set(4, &[3, 4]));
            let (k, p) = lift_barbell_product(&Graph::empty(1), &two_k2, &q, kind).unwrap();
            assert_eq!(p, q);
            // a tensor factor of K_1 deletes every edge
            if kind == ProductKind::Cartesian {
                assert_eq!(k, two_k2);
            }
        }
    }

    #[test]
    fn disjoint_fort_examples() {
        let k4 = complete(4);
        let (a, b) = (set(4, &[1, 2]), set(4, &[3, 4]));
        assert!(barbell_cartesian_disjoint_forts(&k4, &k4, (&a, &b), (&a, &b)).is_ok());
        let c4 = cycle(4);
        let (x, y) = (set(4, &[1, 3]), set(4, &[2, 4]));
        assert!(barbell_cartesian_disjoint_forts(&c4, &c4, (&x, &y), (&x, &y)).is_ok());
        let c6 = cycle(6);
        let (s, t) = (set(6, &[1, 3, 5]), set(6, &[2, 4, 6]));
        assert!(barbell_cartesian_disjoint_forts(&c4, &c6, (&x, &y), (&s, &t)).is_ok());
        assert!(barbell_cartesian_disjoint_forts(&c4, &c4, (&x, &x), (&x, &y)).is_err());
    }

    #[test]
    fn prism_examples() {
        let (g, p) = barbell_prism(4, 2).unwrap();
        assert_eq!(g.n(), 32);
        assert_eq!(p.w1.len(), 8);
        assert!(barbell_prism(5, 1).is_ok());
        assert!(barbell_prism(3, 2).is_err());
    }

    #[test]
    fn tensor_complete_examples() {
        assert!(barbell_tensor_complete(2, 6).is_ok());
        let (_, p) = barbell_tensor_complete(3, 7).unwrap();
        assert_eq!((p.w1.len(), p.w2.len()), (4, 3));
        assert!(barbell_tensor_complete(3, 3).is_err());
    }

    #[test]
    fn row_examples() {
        assert!(barbell_nonadjacent_pair(&path(3), &cycle(3), 0, 2, ProductKind::Tensor).is_ok());
        assert!(barbell_nonadjacent_pair(&path(3), &complete(2), 0, 2, ProductKind::Strong).is_ok());
        assert!(matches!(
            barbell_nonadjacent_pair(&path(3), &complete(2), 0, 2, ProductKind::Tensor),
            Err(OpsError::Hypothesis(_))
        ));
        assert!(barbell_nonadjacent_pair(&path(3), &complete(2), 0, 1, ProductKind::Strong).is_err());
    }
}
