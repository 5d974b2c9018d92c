//! Seeded random matrices in `S(G)` and sampled property counts.

use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::kernel::{property_kernel, Property};
use super::matrix::SymMatrix;
use super::SspError;
use crate::graph::Graph;

/// A random matrix in `S(G)` drawn from `rng`. Edge entries are
/// `±k/64` with `16 <= k <= 256` (so `1/4 <= |a_ij| <= 4`, never zero), and
/// diagonal entries are `j/64` with `-128 <= j <= 128`.
pub fn sample_matrix_with<R: Rng>(g: &Graph, rng: &mut R) -> SymMatrix {
    let n = g.n();
    let denom = num_bigint::BigInt::from(64);
    let mut m = SymMatrix::zeros(n);
    for i in 0..n {
        let j: i64 = rng.gen_range(-128..=128);
        m.set(i, i, BigRational::new(j.into(), denom.clone()));
    }
    for (u, v) in g.edges() {
        let k: i64 = rng.gen_range(16..=256);
        let k = if rng.gen_bool(0.5) { k } else { -k };
        m.set(u, v, BigRational::new(k.into(), denom.clone()));
    }
    debug_assert!(m.in_s_of(g));
    m
}

/// Deterministic in `seed`.
pub fn sample_matrix(g: &Graph, seed: u64) -> SymMatrix {
    sample_matrix_with(g, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Counts of sampled matrices with each property. This is evidence only:
/// neither outcome decides whether every matrix in `S(G)` has the SSP.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SspEvidence {
    pub seed: u64,
    pub trials: usize,
    pub ssp_count: usize,
    pub sap_count: usize,
    pub smp_count: usize,
    /// First sampled matrix without the SSP, in the dense text format.
    pub non_ssp_witness: Option<String>,
}

/// The RNG for trial `t`: ChaCha8 seeded with `seed`, on stream `t`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn ssp_evidence(g: &Graph, trials: usize, seed: u64) -> Result<SspEvidence, SspError> {
    if trials == 0 {
        return Err(SspError::Hypothesis("need at least one trial".into()));
    }
    let mut ev = SspEvidence { seed, trials, ssp_count: 0, sap_count: 0, smp_count: 0, non_ssp_witness: None };
    for t in 0..trials {
        let a = sample_matrix_with(g, &mut trial_rng(seed, t as u64));
        let ssp = property_kernel(&a, Property::Ssp).holds;
        if ssp {
            ev.ssp_count += 1;
        } else if ev.non_ssp_witness.is_none() {
            ev.non_ssp_witness = Some(a.to_text());
        }
        ev.sap_count += property_kernel(&a, Property::Sap).holds as usize;
        ev.smp_count += property_kernel(&a, Property::Smp).holds as usize;
    }
    Ok(ev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn sampling_is_deterministic_and_in_pattern() {
        let p3 = named::path(3);
        assert_eq!(sample_matrix(&p3, 9), sample_matrix(&p3, 9));
        let c4 = named::cycle(4);
        assert!((0..100).all(|s| sample_matrix(&c4, s).in_s_of(&c4)));
        assert_eq!(sample_matrix(&Graph::empty(1), 3).n(), 1);
    }

    #[test]
    fn evidence_counts() {
        let ev = ssp_evidence(&named::complete(3), 10, 1).unwrap();
        assert_eq!(ev.ssp_count, 10);
        let ev = ssp_evidence(&named::path(4), 50, 2).unwrap();
        assert_eq!(ev.trials, 50);
        assert!(ev.smp_count <= ev.ssp_count);
        assert!(ssp_evidence(&named::path(4), 0, 2).is_err());
        let k1 = ssp_evidence(&Graph::empty(1), 1, 0).unwrap();
        assert_eq!(k1.ssp_count, 1);
    }
}
