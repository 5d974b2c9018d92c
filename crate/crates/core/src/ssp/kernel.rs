//! The linear systems behind SAP, SSP and SMP.
//!
//! `A ∘ X = O` and `I ∘ X = O` leave one unknown `x_pq` per non-edge `p < q`
//! of the pattern, with `X = Σ x_pq (e_p e_qᵀ + e_q e_pᵀ)`. The remaining
//! condition is linear in those unknowns:
//!
//! * SAP: `AX = O`, all `n²` entries;
//! * SSP: `AX - XA = O`, strict upper triangle (the commutator is skew);
//! * SMP: the SSP rows plus `tr(A^k X) = 0` for `k = 2..n-1`.
//!
//! The property holds when the only solution is `X = O`.

use std::fmt;

use nalgebra::DMatrix;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::exact;
use super::matrix::{format_rational, SymMatrix};
use super::SspError;

/// Relative singular-value threshold in floating mode.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

pub const REPORT_SCHEMA: &str = "property-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Sap,
    Ssp,
    Smp,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Sap => "SAP",
            Property::Ssp => "SSP",
            Property::Smp => "SMP",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Arithmetic {
    Rational,
    Floating { tolerance: f64 },
}

/// Kernel dimension of one property's system, with a basis of nonzero
/// solutions when the kernel is nontrivial (rational mode only).
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub property: Property,
    pub n: usize,
    pub unknowns: Vec<(usize, usize)>,
    pub constraint_rows: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub holds: bool,
    pub witness: Option<Vec<SymMatrix>>,
    pub arithmetic: Arithmetic,
}

/// The unknowns: non-edges `p < q` of the pattern of `a`.
pub fn unknowns(a: &SymMatrix) -> Vec<(usize, usize)> {
    let n = a.n();
    (0..n).flat_map(|p| (p + 1..n).map(move |q| (p, q))).filter(|&(p, q)| a.get(p, q).is_zero()).collect()
}

/// Constraint rows as dense rational vectors over the unknowns, with all-zero
/// rows dropped.
pub fn constraint_rows(a: &SymMatrix, property: Property, unknowns: &[(usize, usize)]) -> Vec<Vec<BigRational>> {
    let n = a.n();
    let k = unknowns.len();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let add = |rows: &mut Vec<Vec<BigRational>>, row: Vec<BigRational>| {
        if row.iter().any(|x| !x.is_zero()) {
            rows.push(row);
        }
    };
    match property {
        Property::Sap => {
            // (A E_pq)_ij = a_ip [j = q] + a_iq [j = p]
            for i in 0..n {
                for j in 0..n {
                    let row = unknowns
                        .iter()
                        .map(|&(p, q)| {
                            let mut c = BigRational::zero();
                            if j == q {
                                c += a.get(i, p);
                            }
                            if j == p {
                                c += a.get(i, q);
                            }
                            c
                        })
                        .collect();
                    add(&mut rows, row);
                }
            }
        }
        Property::Ssp | Property::Smp => {
            for i in 0..n {
                for j in i + 1..n {
                    let row = unknowns.iter().map(|&(p, q)| commutator_coefficient(a, i, j, p, q)).collect();
                    add(&mut rows, row);
                }
            }
            if property == Property::Smp && n >= 3 {
                // tr(A^k E_pq) = 2 (A^k)_pq; column q of A^k by repeated products
                let mut columns: Vec<Vec<BigRational>> = (0..n)
                    .map(|q| {
                        let mut e = vec![BigRational::zero(); n];
                        e[q] = BigRational::from_integer(1.into());
                        a.mul_vec(&e)
                    })
                    .collect();
                for _power in 2..n {
                    columns = columns.iter().map(|c| a.mul_vec(c)).collect();
                    let two = BigRational::from_integer(2.into());
                    let row = unknowns.iter().map(|&(p, q)| &two * &columns[q][p]).collect();
                    add(&mut rows, row);
                }
            }
        }
    }
    debug_assert!(rows.iter().all(|r| r.len() == k));
    rows
}

/// Coefficient of `x_pq` in `(AX - XA)_ij`.
fn commutator_coefficient(a: &SymMatrix, i: usize, j: usize, p: usize, q: usize) -> BigRational {
    let mut c = BigRational::zero();
    if j == q {
        c += a.get(i, p);
    }
    if j == p {
        c += a.get(i, q);
    }
    if i == p {
        c -= a.get(q, j);
    }
    if i == q {
        c -= a.get(p, j);
    }
    c
}

/// The symmetric matrix `Σ x_pq (e_p e_qᵀ + e_q e_pᵀ)`.
pub fn assemble(n: usize, unknowns: &[(usize, usize)], x: &[BigRational]) -> SymMatrix {
    let mut m = SymMatrix::zeros(n);
    for (&(p, q), v) in unknowns.iter().zip(x) {
        m.set(p, q, v.clone());
    }
    m
}

/// Exact kernel computation.
pub fn property_kernel(a: &SymMatrix, property: Property) -> PropertyReport {
    let unknowns = unknowns(a);
    let rows = constraint_rows(a, property, &unknowns);
    let echelon = exact::echelon(&rows, unknowns.len());
    let rank = echelon.rank();
    let kernel_dim = unknowns.len() - rank;
    let witness =
        (kernel_dim > 0).then(|| echelon.nullspace().into_iter().map(|x| assemble(a.n(), &unknowns, &x)).collect());
    PropertyReport {
        property,
        n: a.n(),
        constraint_rows: rows.len(),
        rank,
        kernel_dim,
        holds: kernel_dim == 0,
        witness,
        unknowns,
        arithmetic: Arithmetic::Rational,
    }
}

/// Floating-point kernel via singular values, with rank threshold
/// `FLOAT_TOLERANCE · σ_max`. Returns [`SspError::Indeterminate`] when a
/// singular value falls within a factor of ten of the threshold.
pub fn property_kernel_float(a: &SymMatrix, property: Property) -> Result<PropertyReport, SspError> {
    let unknowns = unknowns(a);
    let rows = constraint_rows(a, property, &unknowns);
    let k = unknowns.len();
    let m = DMatrix::from_fn(rows.len(), k, |i, j| rows[i][j].to_f64().unwrap_or(f64::NAN));
    let sigmas: Vec<f64> =
        if rows.is_empty() || k == 0 { Vec::new() } else { m.singular_values().iter().copied().collect() };
    let sigma_max = sigmas.iter().copied().fold(0.0, f64::max);
    let tolerance = FLOAT_TOLERANCE * sigma_max;
    if let Some(&s) = sigmas.iter().find(|&&s| s > tolerance / 10.0 && s < tolerance * 10.0) {
        return Err(SspError::Indeterminate { sigma: s, tolerance });
    }
    let rank = sigmas.iter().filter(|&&s| s > tolerance).count();
    let kernel_dim = k - rank;
    Ok(PropertyReport {
        property,
        n: a.n(),
        constraint_rows: rows.len(),
        rank,
        kernel_dim,
        holds: kernel_dim == 0,
        witness: None,
        unknowns,
        arithmetic: Arithmetic::Floating { tolerance: FLOAT_TOLERANCE },
    })
}

/// Serialized report. Witness matrices are rows of exact entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReportJson {
    pub schema: String,
    pub property: Property,
    pub n: usize,
    pub unknowns: usize,
    pub constraint_rows: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub holds: bool,
    pub arithmetic: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<Vec<String>>>>,
}

impl PropertyReport {
    pub fn to_json(&self) -> PropertyReportJson {
        let (arithmetic, tolerance) = match self.arithmetic {
            Arithmetic::Rational => ("rational".to_string(), None),
            Arithmetic::Floating { tolerance } => ("floating".to_string(), Some(tolerance)),
        };
        PropertyReportJson {
            schema: REPORT_SCHEMA.to_string(),
            property: self.property,
            n: self.n,
            unknowns: self.unknowns.len(),
            constraint_rows: self.constraint_rows,
            rank: self.rank,
            kernel_dim: self.kernel_dim,
            holds: self.holds,
            arithmetic,
            tolerance,
            witness: self.witness.as_ref().map(|basis| {
                basis
                    .iter()
                    .map(|x| x.rows().iter().map(|r| r.iter().map(format_rational).collect()).collect())
                    .collect()
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::ssp::matrix::rational;

    #[test]
    fn complete_pattern_has_no_unknowns() {
        let a = SymMatrix::from_fn(4, |_, _| rational(1));
        for property in [Property::Sap, Property::Ssp, Property::Smp] {
            let r = property_kernel(&a, property);
            assert!(r.unknowns.is_empty() && r.holds && r.kernel_dim == 0);
        }
    }

    #[test]
    fn diagonal_examples() {
        let distinct = SymMatrix::from_int_rows(&[&[1, 0], &[0, 2]]).unwrap();
        assert!(property_kernel(&distinct, Property::Ssp).holds);
        let repeated = SymMatrix::from_int_rows(&[&[1, 0], &[0, 1]]).unwrap();
        let r = property_kernel(&repeated, Property::Ssp);
        assert_eq!(r.kernel_dim, 1);
        let x = &r.witness.unwrap()[0];
        assert_eq!(x, &SymMatrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap());
    }

    #[test]
    fn witnesses_satisfy_the_commutator() {
        // C_4 adjacency: has nontrivial commuting X with the right zero pattern
        let c4 = named::cycle(4);
        let a = SymMatrix::from_fn(4, |i, j| rational(c4.has_edge(i, j) as i64));
        let r = property_kernel(&a, Property::Ssp);
        assert!(!r.holds);
        for x in r.witness.unwrap() {
            for i in 0..4 {
                for j in 0..4 {
                    let ax: BigRational = (0..4).map(|k| a.get(i, k) * x.get(k, j)).sum();
                    let xa: BigRational = (0..4).map(|k| x.get(i, k) * a.get(k, j)).sum();
                    assert_eq!(ax, xa);
                    if i == j || !a.get(i, j).is_zero() {
                        assert!(x.get(i, j).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn small_orders_degenerate_smp_to_ssp() {
        let a = SymMatrix::from_int_rows(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(property_kernel(&a, Property::Smp).kernel_dim, property_kernel(&a, Property::Ssp).kernel_dim);
    }

    #[test]
    fn float_agrees_on_simple_cases() {
        let repeated = SymMatrix::from_int_rows(&[&[1, 0], &[0, 1]]).unwrap();
        let r = property_kernel_float(&repeated, Property::Ssp).unwrap();
        assert_eq!(r.kernel_dim, 1);
        let distinct = SymMatrix::from_int_rows(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 4]]).unwrap();
        assert!(property_kernel_float(&distinct, Property::Ssp).unwrap().holds);
    }

    #[test]
    fn float_flags_near_threshold() {
        // singular values are the diagonal gaps 1, 1 + 1e-9 and 1e-9; the
        // last sits right on the threshold
        let eps = BigRational::new(1.into(), 1_000_000_000i64.into());
        let a = SymMatrix::from_fn(3, |i, j| match (i, j) {
            (1, 1) => rational(1),
            (2, 2) => rational(1) + &eps,
            _ => rational(0),
        });
        assert!(matches!(property_kernel_float(&a, Property::Ssp), Err(SspError::Indeterminate { .. })));
        assert!(property_kernel(&a, Property::Ssp).holds);
    }

    #[test]
    fn report_json_shape() {
        let repeated = SymMatrix::from_int_rows(&[&[1, 0], &[0, 1]]).unwrap();
        let json = serde_json::to_value(property_kernel(&repeated, Property::Ssp).to_json()).unwrap();
        assert_eq!(json["schema"], REPORT_SCHEMA);
        assert_eq!(json["property"], "ssp");
        assert_eq!(json["holds"], false);
        assert_eq!(json["witness"][0], serde_json::json!([["0", "1"], ["1", "0"]]));
    }
}
