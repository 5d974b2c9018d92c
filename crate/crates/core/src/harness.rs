//! Named verification suites that rerun each theorem's check over a fixed,
//! seeded corpus. Every constructed partition is verified independently and
//! every biconditional is compared against the exhaustive search.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::barbell::{brute_force_barbell, find_barbell_partition, is_barbell_partition, SearchOptions, Verdict};
use crate::catalog::{all_graphs, all_graphs_up_to, graphs_with, random_graph};
use crate::forcing::{extract_fort_within, is_fort, is_zero_forcing_set};
use crate::graph::{named, Distance, Graph};
use crate::ops::{self, ProductKind};
use crate::ssp::exact;
use crate::ssp::kernel::{constraint_rows, property_kernel, unknowns, Property};
use crate::ssp::matrix::SymMatrix;
use crate::ssp::sample::sample_matrix_with;
use crate::ssp::{cn_even_matrix, corona_matrix, lollipop_jdup_matrix};
use crate::vertex_set::VertexSet;

/// Failure messages kept per suite; the count covers all of them.
const MAX_REPORTED_FAILURES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub passed: bool,
    pub checks: usize,
    pub failure_count: usize,
    pub failures: Vec<String>,
    pub detail: String,
    pub wall_time_ms: u128,
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failure_count: usize,
    failures: Vec<String>,
    detail: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(msg);
        }
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.detail.push(msg.into());
    }
}

type SuiteFn = fn(&mut Tally);

const SUITES: &[(&str, SuiteFn)] = &[
    ("fort-duality", fort_duality),
    ("oracle-agreement", oracle_agreement),
    ("paper-negatives", paper_negatives),
    ("degdiam", degdiam),
    ("dup-transfer", dup_transfer),
    ("join-biconditional", join_biconditional),
    ("vertex-sum", vertex_sum),
    ("corona", corona),
    ("product-lift", product_lift),
    ("disjoint-forts", disjoint_forts),
    ("prism", prism),
    ("tensor-complete", tensor_complete),
    ("row-products", row_products),
    ("dup-criterion", dup_criterion),
    ("ssp-families", ssp_families),
    ("containment-chain", containment_chain),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(name, _)| *name).collect()
}

/// Runs one suite by name, or `None` for an unknown name.
pub fn run_suite(name: &str) -> Option<SuiteOutcome> {
    let (name, suite) = SUITES.iter().find(|(n, _)| *n == name)?;
    let start = Instant::now();
    let mut tally = Tally::default();
    suite(&mut tally);
    Some(SuiteOutcome {
        name: name.to_string(),
        passed: tally.failure_count == 0 && tally.checks > 0,
        checks: tally.checks,
        failure_count: tally.failure_count,
        failures: tally.failures,
        detail: tally.detail.join("; "),
        wall_time_ms: start.elapsed().as_millis(),
    })
}

/// Runs every suite whose name contains `filter` (all when `None`).
pub fn run_all(filter: Option<&str>) -> Vec<SuiteOutcome> {
    suite_names().into_iter().filter(|name| filter.is_none_or(|f| name.contains(f))).filter_map(run_suite).collect()
}

// ---------------------------------------------------------------------------
// Shared helpers

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn mask_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_members(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

fn admits_brute(g: &Graph) -> bool {
    brute_force_barbell(g).expect("corpus graphs are within the brute-force cap").is_some()
}

fn connected_random(rng: &mut ChaCha8Rng, n: usize, p: f64, keep: impl Fn(&Graph) -> bool) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() && keep(&g) {
            return g;
        }
    }
}

/// A random graph on `lo..=hi` vertices with a barbell partition, found by
/// the exhaustive search.
fn random_barbell_graph(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> (Graph, crate::barbell::BarbellPartition) {
    loop {
        let n = rng.gen_range(lo..=hi);
        let p = rng.gen_range(0.25..0.7);
        let g = random_graph(rng, n, p);
        if let Some(part) = brute_force_barbell(&g).expect("small graph") {
            return (g, part);
        }
    }
}

fn show(g: &Graph) -> String {
    crate::io::encode_graph6(g)
}

fn verified<E: std::fmt::Display>(
    t: &mut Tally,
    what: impl Fn() -> String,
    result: Result<(Graph, crate::barbell::BarbellPartition), E>,
) {
    match result {
        Ok((g, p)) => t.check(is_barbell_partition(&g, &p), || format!("{}: partition does not verify", what())),
        Err(e) => t.check(false, || format!("{}: {e}", what())),
    }
}

/// The house: a 5-cycle 1-2-3-4-5 with the chord 2-4 (0-based here).
fn house() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (3, 4), (0, 4), (2, 3), (1, 3)]).expect("valid edges")
}

fn nonzero_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let p: i64 = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let q: i64 = rng.gen_range(1..=5);
    BigRational::new(p.into(), q.into())
}

// ---------------------------------------------------------------------------
// Forts and barbell detection

fn fort_duality(t: &mut Tally) {
    let graphs = all_graphs_up_to(7);
    for g in &graphs {
        let n = g.n();
        let full = (1u64 << n) - 1;
        let forts: Vec<u64> = (1..=full).filter(|&m| is_fort(g, &mask_set(n, m))).collect();
        for s in 0..=full {
            let set = mask_set(n, s);
            let contains_fort = forts.iter().any(|&f| f & !s == 0);
            let forcing = is_zero_forcing_set(g, &mask_set(n, full & !s));
            t.check(forcing != contains_fort, || format!("{} S={:?}: duality fails", show(g), set.to_one_based()));
            let extracted = extract_fort_within(g, &set);
            t.check(extracted.is_some() == contains_fort, || {
                format!("{} S={:?}: fort extraction disagrees", show(g), set.to_one_based())
            });
        }
    }
    t.note(format!("{} graphs on 1..=7 vertices, every vertex subset", graphs.len()));
}

fn detector_agrees(t: &mut Tally, g: &Graph) {
    let cert = find_barbell_partition(g, SearchOptions::default());
    let truth = admits_brute(g);
    let ok = match cert.verdict {
        Verdict::Admits => truth && cert.partition.as_ref().is_some_and(|p| is_barbell_partition(g, p)),
        Verdict::DoesNotAdmit => !truth,
        Verdict::BudgetExceeded => false,
    };
    t.check(ok, || format!("{}: detector says {:?}, exhaustive search says {truth}", show(g), cert.verdict));
}

fn oracle_agreement(t: &mut Tally) {
    let small = all_graphs_up_to(7);
    for g in &small {
        detector_agrees(t, g);
    }
    let mut r = rng(0xBA5E_0002);
    for _ in 0..500 {
        let n = r.gen_range(8..=12);
        let p = r.gen_range(0.15..0.75);
        detector_agrees(t, &random_graph(&mut r, n, p));
    }
    t.note(format!("{} exhaustive graphs and 500 random graphs on 8..=12 vertices", small.len()));
}

fn paper_negatives(t: &mut Tally) {
    let cases = [
        ("Petersen", named::petersen()),
        ("K_{1,3}", named::star(3)),
        ("C_4 with opposite pendants", named::c4_with_opposite_pendants()),
        ("P_2 □ P_3", ops::cartesian(&named::path(2), &named::path(3)).0),
        ("K_3 × K_3", ops::tensor(&named::complete(3), &named::complete(3)).0),
        ("house × K_2", ops::tensor(&house(), &named::complete(2)).0),
    ];
    for (name, g) in &cases {
        let verdict = find_barbell_partition(g, SearchOptions::default()).verdict;
        t.check(verdict == Verdict::DoesNotAdmit, || format!("{name}: detector says {verdict:?}"));
        t.check(!admits_brute(g), || format!("{name}: exhaustive search found a partition"));
    }
}

fn degdiam(t: &mut Tally) {
    let mut seen = 0;
    for n in 1..=8 {
        for g in graphs_with(n, &|g| g.max_degree() <= 3) {
            if g.max_degree() == 3 && g.is_connected() && g.diameter() == Distance::Finite(2) {
                seen += 1;
                t.check(!admits_brute(&g), || format!("{}: diameter 2, Δ = 3, but admits", show(&g)));
            }
        }
    }
    t.check(seen > 0, || "no graphs with diameter 2 and Δ = 3 enumerated".into());
    t.note(format!("{seen} connected graphs on at most 8 vertices with diameter 2 and Δ = 3"));
}

// ---------------------------------------------------------------------------
// Constructive transfers

fn dup_transfer(t: &mut Tally) {
    let mut r = rng(0xBA5E_0005);
    for _ in 0..100 {
        let (g, p) = random_barbell_graph(&mut r, 4, 9);
        let v = r.gen_range(0..g.n());
        match ops::transfer_barbell_dup(&g, &p, v) {
            Ok((d, j)) => {
                let (dg, jg) = (ops::dup(&g, v).unwrap(), ops::jdup(&g, v).unwrap());
                t.check(is_barbell_partition(&dg, &d), || format!("dup({}, {}) fails", show(&g), v + 1));
                t.check(is_barbell_partition(&jg, &j), || format!("jdup({}, {}) fails", show(&g), v + 1));
            }
            Err(e) => t.check(false, || format!("{} v={}: {e}", show(&g), v + 1)),
        }
    }
}

fn join_biconditional(t: &mut Tally) {
    let factors: Vec<Graph> = (2..=4).flat_map(all_graphs).filter(|g| !g.has_isolated_vertex()).collect();
    let opts = SearchOptions::default();
    for g in &factors {
        for h in &factors {
            let joined = ops::join(g, h);
            let truth = admits_brute(&joined);
            match ops::join_barbell(g, h, opts) {
                Ok(found) => {
                    t.check(found.is_some() == truth, || {
                        format!(
                            "{} ∨ {}: criterion says {}, exhaustive says {truth}",
                            show(g),
                            show(h),
                            found.is_some()
                        )
                    });
                    if let Some(p) = found {
                        t.check(is_barbell_partition(&joined, &p), || {
                            format!("{} ∨ {}: transferred partition fails", show(g), show(h))
                        });
                    }
                }
                Err(e) => t.check(false, || format!("{} ∨ {}: {e}", show(g), show(h))),
            }
        }
    }
    t.note(format!("{} isolated-vertex-free factors on 2..=4 vertices, all ordered pairs", factors.len()));
}

fn vertex_sum(t: &mut Tally) {
    let mut r = rng(0xBA5E_0007);
    for _ in 0..20 {
        let n = r.gen_range(4..=7);
        let m = r.gen_range(4..=7);
        let g = connected_random(&mut r, n, 0.45, |g| !g.is_path());
        let h = connected_random(&mut r, m, 0.45, |g| !g.is_path());
        let (u, w) = (r.gen_range(0..n), r.gen_range(0..m));
        verified(
            t,
            || format!("{} ⊕ {} at ({}, {})", show(&g), show(&h), u + 1, w + 1),
            ops::transfer_barbell_vertex_sum(&g, u, &h, w, None),
        );
    }
    for _ in 0..20 {
        let order = r.gen_range(1..=6);
        let g = connected_random(&mut r, order, 0.5, |_| true);
        let (h, p) = random_barbell_graph(&mut r, 3, 8);
        let (u, w) = (r.gen_range(0..g.n()), r.gen_range(0..h.n()));
        verified(
            t,
            || format!("{} ⊕ {} at ({}, {}) with a partition of the second", show(&g), show(&h), u + 1, w + 1),
            ops::transfer_barbell_vertex_sum(&g, u, &h, w, Some(&p)),
        );
    }
    for n in 1..=5 {
        for m in 1..=5 {
            for i in 0..n {
                for j in 0..m {
                    let (sum, _) = ops::vertex_sum(&named::path(n), i, &named::path(m), j).unwrap();
                    let claimed = ops::path_sum_admits(n, i, m, j);
                    t.check(claimed == admits_brute(&sum), || {
                        format!("P_{n} ⊕ P_{m} at ({}, {}): criterion says {claimed}", i + 1, j + 1)
                    });
                }
            }
        }
    }
}

fn corona(t: &mut Tally) {
    let small: Vec<Graph> = (2..=3).flat_map(all_graphs).collect();
    for g in &small {
        for h in &small {
            verified(t, || format!("{} ∘ {}", show(g), show(h)), ops::barbell_corona(g, h));
        }
    }
}

fn product_lift(t: &mut Tally) {
    let mut r = rng(0xBA5E_0009);
    for kind in [ProductKind::Cartesian, ProductKind::Tensor] {
        for _ in 0..20 {
            let order = r.gen_range(1..=4);
            let g = random_graph(&mut r, order, 0.6);
            let (h, p) = random_barbell_graph(&mut r, 3, 7);
            verified(
                t,
                || format!("{kind:?} lift of {} by {}", show(&h), show(&g)),
                ops::lift_barbell_product(&g, &h, &p, kind),
            );
        }
    }
}

fn disjoint_forts(t: &mut Tally) {
    let k4 = named::complete(4);
    let c4 = named::cycle(4);
    let c6 = named::cycle(6);
    let set = |n: usize, xs: &[usize]| VertexSet::from_members(n, xs.iter().copied());
    let (ka, kb) = (set(4, &[0, 1]), set(4, &[2, 3]));
    let (ca, cb) = (set(4, &[0, 2]), set(4, &[1, 3]));
    let (da, db) = (set(6, &[0, 2, 4]), set(6, &[1, 3, 5]));
    let cases = [
        ("K_4 □ K_4", &k4, (&ka, &kb), &k4, (&ka, &kb)),
        ("C_4 □ C_4", &c4, (&ca, &cb), &c4, (&ca, &cb)),
        ("C_4 □ C_6", &c4, (&ca, &cb), &c6, (&da, &db)),
    ];
    for (name, g, fg, h, fh) in cases {
        verified(t, || name.to_string(), ops::barbell_cartesian_disjoint_forts(g, h, fg, fh));
    }
}

fn prism(t: &mut Tally) {
    for k in 4..=6 {
        for m in 1..=3 {
            verified(t, || format!("C_{k} □ C_{}", k * m), ops::barbell_prism(k, m));
        }
    }
}

fn tensor_complete(t: &mut Tally) {
    for n in 2..=3 {
        for m in 6..=7 {
            verified(t, || format!("K_{n} × K_{m}"), ops::barbell_tensor_complete(n, m));
        }
    }
    t.check(ops::barbell_tensor_complete(3, 3).is_err(), || "K_3 × K_3 construction should be refused".into());
}

fn row_products(t: &mut Tally) {
    let mut r = rng(0xBA5E_000D);
    for kind in [ProductKind::Tensor, ProductKind::Strong] {
        let mut done = 0;
        while done < 10 {
            let (gn, hn) = (r.gen_range(3..=5), r.gen_range(2..=4));
            let g = random_graph(&mut r, gn, 0.5);
            let h = random_graph(&mut r, hn, 0.6);
            if kind == ProductKind::Tensor && !h.pendant_vertices().is_empty() {
                continue;
            }
            let pairs: Vec<(usize, usize)> = (0..g.n())
                .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .collect();
            let Some(&(u, v)) = pairs.choose(&mut r) else {
                continue;
            };
            verified(
                t,
                || format!("{kind:?} rows ({}, {}) of {} by {}", u + 1, v + 1, show(&g), show(&h)),
                ops::barbell_nonadjacent_pair(&g, &h, u, v, kind),
            );
            done += 1;
        }
    }
}

fn dup_criterion(t: &mut Tally) {
    let opts = SearchOptions::default();
    let mut graphs = 0;
    for n in 2..=6 {
        for g in all_graphs(n) {
            if admits_brute(&g) {
                continue;
            }
            graphs += 1;
            for v in 0..n {
                let d = admits_brute(&ops::dup(&g, v).unwrap());
                let j = admits_brute(&ops::jdup(&g, v).unwrap());
                match ops::dup_creates_barbell(&g, v, opts) {
                    Ok(c) => {
                        t.check(c == d, || format!("{} v={}: criterion {c}, dup admits {d}", show(&g), v + 1));
                        t.check(c == j, || format!("{} v={}: criterion {c}, jdup admits {j}", show(&g), v + 1));
                    }
                    Err(e) => t.check(false, || format!("{} v={}: {e}", show(&g), v + 1)),
                }
            }
        }
    }
    // K_1 lies outside the criterion: dup gives 2K_1, which admits.
    let k1 = named::complete(1);
    t.check(admits_brute(&ops::dup(&k1, 0).unwrap()), || "dup(K_1) should admit".into());
    t.check(!admits_brute(&ops::jdup(&k1, 0).unwrap()), || "jdup(K_1) should not admit".into());
    t.check(ops::dup_creates_barbell(&k1, 0, opts).is_err(), || "K_1 should be refused".into());
    t.note(format!("{graphs} barbell-free graphs on 2..=6 vertices, every vertex"));
}

// ---------------------------------------------------------------------------
// SSP

fn random_complete_pattern(r: &mut ChaCha8Rng, n: usize) -> SymMatrix {
    sample_matrix_with(&named::complete(n), r)
}

fn ssp_holds(t: &mut Tally, what: impl Fn() -> String, m: Result<SymMatrix, crate::ssp::SspError>) {
    match m {
        Ok(m) => {
            let report = property_kernel(&m, Property::Ssp);
            t.check(report.holds && report.kernel_dim == 0, || {
                format!("{}: SSP kernel dimension {}", what(), report.kernel_dim)
            });
        }
        Err(e) => t.check(false, || format!("{}: {e}", what())),
    }
}

fn ssp_families(t: &mut Tally) {
    let mut r = rng(0xBA5E_000F);
    for n in [4, 6, 8] {
        for _ in 0..5 {
            let (lambda, b) = (nonzero_rational(&mut r), nonzero_rational(&mut r));
            ssp_holds(t, || format!("even cycle n={n} λ={lambda} b={b}"), cn_even_matrix(n, &lambda, &b));
        }
    }
    for n in 3..=5 {
        for _ in 0..5 {
            let a = random_complete_pattern(&mut r, n);
            let mu1 = nonzero_rational(&mut r);
            let mut mu2 = nonzero_rational(&mut r);
            while mu2 == mu1 {
                mu2 = nonzero_rational(&mut r);
            }
            ssp_holds(t, || format!("lollipop n={n} μ=({mu1}, {mu2})"), lollipop_jdup_matrix(&a, &mu1, &mu2));
        }
    }
    for n in 3..=5 {
        for _ in 0..5 {
            let a = random_complete_pattern(&mut r, n);
            let mut mu: Vec<BigRational> = Vec::new();
            while mu.len() < n {
                let x = nonzero_rational(&mut r);
                if mu.iter().all(|y| y.abs() != x.abs()) {
                    mu.push(x);
                }
            }
            let lambda = BigRational::new(r.gen_range(-9i64..=9).into(), r.gen_range(1i64..=4).into());
            ssp_holds(t, || format!("corona n={n} λ={lambda}"), corona_matrix(&a, &mu, &lambda));
        }
    }
}

/// Replaces the last diagonal entry of `a` so that `a + λI` is singular,
/// when the leading block of `a + λI` is invertible.
fn make_singular(a: &SymMatrix, lambda: &BigRational) -> SymMatrix {
    let n = a.n();
    if n < 2 {
        return a.clone();
    }
    let shifted = a.shifted(lambda);
    // rows [B | c] where B is the leading block and c the last column
    let rows: Vec<Vec<BigRational>> = (0..n - 1).map(|i| (0..n).map(|j| shifted.get(i, j).clone()).collect()).collect();
    let e = exact::echelon(&rows, n);
    if e.rank() < n - 1 || e.pivots.contains(&(n - 1)) {
        return a.clone();
    }
    let x = &e.nullspace()[0];
    // B y = c with y = x[..n-1] / (-x[n-1]); singular iff t = cᵀy
    let scale = -x[n - 1].clone();
    let t: BigRational = (0..n - 1).map(|i| shifted.get(i, n - 1) * &x[i] / &scale).sum();
    let mut out = a.clone();
    out.set(n - 1, n - 1, t - lambda);
    out
}

fn apply(rows: &[Vec<BigRational>], x: &[BigRational]) -> bool {
    rows.iter().all(|row| row.iter().zip(x).map(|(a, b)| a * b).sum::<BigRational>().is_zero())
}

fn containment_chain(t: &mut Tally) {
    let mut r = rng(0xBA5E_0010);
    let mut nontrivial_sap = 0;
    for case in 0..100 {
        let lambda = BigRational::new(r.gen_range(-6i64..=6).into(), BigInt::one());
        let block = |r: &mut ChaCha8Rng, lo: usize, hi: usize| {
            let n = r.gen_range(lo..=hi);
            let density = r.gen_range(0.2..0.7);
            let g = random_graph(r, n, density);
            let a = make_singular(&sample_matrix_with(&g, r), &lambda);
            (g, a)
        };
        // odd cases: two blocks sharing the eigenvalue -λ, so A + λI has a
        // kernel vector on each side and the SAP system a nonzero solution
        let (g, a) = if case % 2 == 0 {
            block(&mut r, 2, 6)
        } else {
            let ((g1, a1), (g2, a2)) = (block(&mut r, 2, 3), block(&mut r, 2, 3));
            let k = g1.n();
            let a = SymMatrix::from_fn(k + g2.n(), |i, j| match (i < k, j < k) {
                (true, true) => a1.get(i, j).clone(),
                (false, false) => a2.get(i - k, j - k).clone(),
                _ => BigRational::zero(),
            });
            (named::disjoint_union(&g1, &g2), a)
        };
        let shifted = a.shifted(&lambda);
        let sap = property_kernel(&shifted, Property::Sap);
        let smp = property_kernel(&a, Property::Smp);
        let ssp = property_kernel(&a, Property::Ssp);
        let label = || format!("{} λ={lambda} A={a:?}", show(&g));
        t.check(sap.kernel_dim <= smp.kernel_dim, || {
            format!("{}: SAP {} > SMP {}", label(), sap.kernel_dim, smp.kernel_dim)
        });
        t.check(smp.kernel_dim <= ssp.kernel_dim, || {
            format!("{}: SMP {} > SSP {}", label(), smp.kernel_dim, ssp.kernel_dim)
        });
        // subspace containment, not just dimensions
        let unk = unknowns(&a);
        let smp_rows = constraint_rows(&a, Property::Smp, &unk);
        let ssp_rows = constraint_rows(&a, Property::Ssp, &unk);
        let coords = |x: &SymMatrix| unk.iter().map(|&(p, q)| x.get(p, q).clone()).collect::<Vec<_>>();
        for x in sap.witness.iter().flatten() {
            t.check(apply(&smp_rows, &coords(x)), || format!("{}: SAP solution violates SMP", label()));
        }
        for x in smp.witness.iter().flatten() {
            t.check(apply(&ssp_rows, &coords(x)), || format!("{}: SMP solution violates SSP", label()));
        }
        if sap.kernel_dim > 0 {
            nontrivial_sap += 1;
        }
    }
    t.note(format!("100 cases, {nontrivial_sap} with a nontrivial SAP kernel"));
}
