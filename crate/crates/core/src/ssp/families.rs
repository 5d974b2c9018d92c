//! Explicit matrix families known to have the SSP. Each constructor checks
//! its hypotheses, builds the matrix, and then confirms the SSP exactly.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::kernel::{property_kernel, Property};
use super::matrix::SymMatrix;
use super::SspError;

fn confirm_ssp(m: SymMatrix, family: &str) -> Result<SymMatrix, SspError> {
    let report = property_kernel(&m, Property::Ssp);
    if report.holds {
        Ok(m)
    } else {
        Err(SspError::FamilyFailed(format!("{family}: SSP kernel has dimension {}", report.kernel_dim)))
    }
}

fn require_complete_pattern(a: &SymMatrix) -> Result<(), SspError> {
    if a.pattern().is_complete() {
        Ok(())
    } else {
        Err(SspError::Hypothesis("A must have a complete off-diagonal pattern".into()))
    }
}

/// `λ` on the first `n/2` diagonal entries, `-λ` on the rest, and `b` on the
/// edges of the cycle `1 - 2 - ... - n - 1`.
pub fn cn_even_matrix(n: usize, lambda: &BigRational, b: &BigRational) -> Result<SymMatrix, SspError> {
    if n < 4 || n % 2 == 1 {
        return Err(SspError::Hypothesis(format!("order must be even and at least 4, got {n}")));
    }
    if lambda.is_zero() || b.is_zero() {
        return Err(SspError::Hypothesis("λ and b must be nonzero".into()));
    }
    let m = SymMatrix::from_fn(n, |i, j| {
        if i == j {
            if i < n / 2 {
                lambda.clone()
            } else {
                -lambda.clone()
            }
        } else if j == i + 1 || (i == 0 && j == n - 1) {
            b.clone()
        } else {
            BigRational::zero()
        }
    });
    confirm_ssp(m, "even-cycle family")
}

/// `[[A, e_n, e_n], [e_nᵀ, μ1, 0], [e_nᵀ, 0, μ2]]` for `A` with a complete
/// pattern: the lollipop `L_{n,1}` with its pendant vertex duplicated.
pub fn lollipop_jdup_matrix(a: &SymMatrix, mu1: &BigRational, mu2: &BigRational) -> Result<SymMatrix, SspError> {
    require_complete_pattern(a)?;
    if mu1 == mu2 {
        return Err(SspError::Hypothesis("μ1 and μ2 must differ".into()));
    }
    let n = a.n();
    if n == 0 {
        return Err(SspError::Hypothesis("A must be nonempty".into()));
    }
    let one = BigRational::from_integer(1.into());
    let m = SymMatrix::from_fn(n + 2, |i, j| match (i, j) {
        (i, j) if j < n => a.get(i, j).clone(),
        (i, j) if i == n - 1 && j >= n => one.clone(),
        (i, j) if i == n && j == n => mu1.clone(),
        (i, j) if i == n + 1 && j == n + 1 => mu2.clone(),
        _ => BigRational::zero(),
    });
    confirm_ssp(m, "lollipop duplication family")
}

/// `[[A, D_μ], [D_μ, λI]]` for `A` with a complete pattern and nonzero `μ_i`
/// of pairwise distinct magnitude: a matrix of the corona `K_n ∘ K_1`.
pub fn corona_matrix(a: &SymMatrix, mu: &[BigRational], lambda: &BigRational) -> Result<SymMatrix, SspError> {
    require_complete_pattern(a)?;
    let n = a.n();
    if mu.len() != n {
        return Err(SspError::Hypothesis(format!("need {n} values of μ, got {}", mu.len())));
    }
    if mu.iter().any(Zero::is_zero) {
        return Err(SspError::Hypothesis("every μ_i must be nonzero".into()));
    }
    for i in 0..n {
        for j in i + 1..n {
            if mu[i].abs() == mu[j].abs() {
                return Err(SspError::Hypothesis(format!("μ_{} = ±μ_{}", i + 1, j + 1)));
            }
        }
    }
    let m = SymMatrix::from_fn(2 * n, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else if i < n {
            if j == n + i {
                mu[i].clone()
            } else {
                BigRational::zero()
            }
        } else if i == j {
            lambda.clone()
        } else {
            BigRational::zero()
        }
    });
    confirm_ssp(m, "corona family")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::ssp::matrix::rational;

    fn ones(n: usize) -> SymMatrix {
        SymMatrix::from_fn(n, |_, _| rational(1))
    }

    #[test]
    fn even_cycle_examples() {
        let m = cn_even_matrix(4, &rational(1), &rational(1)).unwrap();
        assert!(m.in_s_of(&named::cycle(4)));
        let m = cn_even_matrix(6, &rational(2), &rational(-3)).unwrap();
        assert!(m.in_s_of(&named::cycle(6)));
        assert!(matches!(cn_even_matrix(6, &rational(0), &rational(1)), Err(SspError::Hypothesis(_))));
        assert!(cn_even_matrix(5, &rational(1), &rational(1)).is_err());
    }

    #[test]
    fn lollipop_examples() {
        let b = lollipop_jdup_matrix(&ones(3), &rational(1), &rational(2)).unwrap();
        let g = crate::ops::dup(&named::lollipop(3, 1), 3).unwrap();
        assert!(b.in_s_of(&g));
        assert!(lollipop_jdup_matrix(&ones(3), &rational(1), &rational(1)).is_err());
        let not_complete = SymMatrix::from_fn(3, |i, j| rational((i == j || j == i + 1) as i64));
        assert!(lollipop_jdup_matrix(&not_complete, &rational(0), &rational(1)).is_err());
    }

    #[test]
    fn corona_examples() {
        let mu = [rational(1), rational(2), rational(3)];
        let b = corona_matrix(&ones(3), &mu, &rational(0)).unwrap();
        let (g, _) = crate::ops::corona(&named::complete(3), &crate::graph::Graph::empty(1));
        assert!(b.in_s_of(&g));
        let mu4 = [rational(1), rational(2), rational(3), rational(4)];
        assert!(corona_matrix(&ones(4), &mu4, &rational(5)).is_ok());
        let clash = [rational(1), rational(-1), rational(2)];
        assert!(corona_matrix(&ones(3), &clash, &rational(0)).is_err());
    }
}
