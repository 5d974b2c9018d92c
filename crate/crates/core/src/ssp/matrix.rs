use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::SspError;
use crate::graph::Graph;

/// A real symmetric matrix with exact rational entries.
///
/// Each unordered pair `{i, j}` is stored once (packed upper triangle), so
/// symmetry holds by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymMatrix {
    n: usize,
    upper: Vec<BigRational>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, upper: vec![BigRational::zero(); n * (n + 1) / 2] }
    }

    /// Builds from a function evaluated on pairs `i <= j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Builds from full rows, rejecting asymmetric input.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, SspError> {
        let n = rows.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(SspError::Shape(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
        }
        if let Some((row, col)) =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| rows[i][j] != rows[j][i])
        {
            return Err(SspError::Asymmetric { row, col });
        }
        Ok(SymMatrix::from_fn(n, |i, j| rows[i][j].clone()))
    }

    /// Integer entries, for tests and small literals.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, SspError> {
        SymMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        SymMatrix::from_fn(n, |i, j| if i == j { BigRational::one() } else { BigRational::zero() })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.upper[index(self.n, i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        let k = index(self.n, i, j);
        self.upper[k] = value;
    }

    /// The graph with an edge `ij` exactly when `i != j` and `a_ij != 0`.
    pub fn pattern(&self) -> Graph {
        Graph::from_fn(self.n, |i, j| !self.get(i, j).is_zero())
    }

    /// Whether the off-diagonal pattern equals `g` (diagonal unconstrained).
    pub fn in_s_of(&self, g: &Graph) -> bool {
        g.n() == self.n && self.pattern() == *g
    }

    /// `P A Pᵀ` where vertex `v` moves to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> SymMatrix {
        assert_eq!(perm.len(), self.n);
        let mut out = SymMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in i..self.n {
                out.set(perm[i], perm[j], self.get(i, j).clone());
            }
        }
        out
    }

    /// `A + λI`.
    pub fn shifted(&self, lambda: &BigRational) -> SymMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            let v = self.get(i, i) + lambda;
            out.set(i, i, v);
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .filter(|&j| !v[j].is_zero())
                    .fold(BigRational::zero(), |acc, j| acc + self.get(i, j) * &v[j])
            })
            .collect()
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j).to_f64().unwrap_or(f64::NAN))
    }

    pub fn rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect()).collect()
    }

    /// Renders entries as integers or `p/q`, one row per line after the order.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    debug_assert!(j < n);
    // rows 0..i hold n, n-1, ..., n-i+1 entries
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| format_rational(self.get(i, j))).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| (0..self.n).map(|j| format_rational(self.get(i, j))).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Parses `p/q`, an integer, or a decimal such as `-1.25` or `3e-2`,
/// exactly.
pub fn parse_rational(token: &str) -> Result<BigRational, String> {
    let bad = || format!("not a rational number: {token:?}");
    if let Some((p, q)) = token.split_once('/') {
        let p = BigInt::from_str(p).map_err(|_| bad())?;
        let q = BigInt::from_str(q).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(format!("zero denominator in {token:?}"));
        }
        return Ok(BigRational::new(p, q));
    }
    let (mantissa, exponent) = match token.find(['e', 'E']) {
        Some(at) => (&token[..at], token[at + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (token, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() || !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let int = BigInt::from_str(&format!("{whole}{frac}")).map_err(|_| bad())?;
    let scale = exponent as i64 - frac.len() as i64;
    if scale.unsigned_abs() > 10_000 {
        return Err(format!("exponent out of range in {token:?}"));
    }
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        BigRational::from_integer(int * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(int, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Reads the dense text format: the order `n` on the first data line, then
/// `n` rows of `n` entries. Blank lines and `#` comments are skipped.
pub fn parse_matrix(text: &str) -> Result<SymMatrix, SspError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, first) = lines.next().ok_or_else(|| SspError::Parse { line: 0, message: "empty matrix file".into() })?;
    let n: usize = first
        .parse()
        .map_err(|_| SspError::Parse { line, message: format!("expected the matrix order, found {first:?}") })?;
    if n > 4096 {
        return Err(SspError::Parse { line, message: format!("order {n} is too large") });
    }
    let mut rows = Vec::with_capacity(n);
    for (line, text) in lines {
        if rows.len() == n {
            return Err(SspError::Parse { line, message: "more rows than the declared order".into() });
        }
        let row = text
            .split_whitespace()
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|message| SspError::Parse { line, message })?;
        if row.len() != n {
            return Err(SspError::Parse { line, message: format!("expected {n} entries, found {}", row.len()) });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(SspError::Parse { line: 0, message: format!("expected {n} rows, found {}", rows.len()) });
    }
    SymMatrix::from_rows(rows)
}

#[cfg(test)]
pub(crate) fn rational(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}
