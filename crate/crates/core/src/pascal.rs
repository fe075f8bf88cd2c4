//! Clique calculus on complete graphs.
//!
//! The number of l-cliques of K_n is C(n, l), the per-vertex count is
//! C(n-1, l-1), and the lower-triangular matrix A with a_{i,j} = C(i, j) has
//! the signed inverse b_{i,j} = (-1)^{i+j} C(i, j). Joining a graph with a
//! single universal vertex shifts its census by one size.

use serde::Serialize;

use crate::clique::CliqueCensus;
use crate::error::{JacoError, Result};

/// Largest dimension accepted by [`clique_matrix`]; C(64, 32) fits in `i64`.
pub const MAX_MATRIX_DIM: usize = 64;

/// C(n, l) by the multiplicative method, exact at every step.
pub fn binomial(n: u64, l: u64) -> Result<u64> {
    if l > n {
        return Ok(0);
    }
    let l = l.min(n - l);
    let mut acc: u128 = 1;
    for step in 1..=l as u128 {
        // acc * (n - l + step) / step stays integral: it is C(n - l + step, step)
        acc = acc * (n as u128 - l as u128 + step) / step;
        if acc > u64::MAX as u128 {
            return Err(JacoError::overflow(format!("C({n}, {l}) exceeds 64 bits")));
        }
    }
    Ok(acc as u64)
}

/// Number of l-cliques of K_n.
pub fn eta_complete(n: u64, l: u64) -> Result<u64> {
    binomial(n, l)
}

/// Number of non-empty cliques of K_n, 2^n - 1.
pub fn total_cliques(n: u64) -> Result<u64> {
    if n > 63 {
        return Err(JacoError::overflow(format!(
            "total clique count of K_{n} is reported only up to n = 63"
        )));
    }
    Ok((1u64 << n) - 1)
}

/// Number of l-cliques of K_n containing a fixed vertex: C(n-1, l-1).
pub fn complete_clique_degree(n: u64, l: u64) -> Result<u64> {
    if l == 0 || l > n {
        return Err(JacoError::invalid(format!(
            "clique size {l} outside 1..={n}"
        )));
    }
    binomial(n - 1, l - 1)
}

/// Clique sizes at which the per-vertex clique degree of K_n peaks.
pub fn max_degree_clique_sizes(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    if n % 2 == 1 {
        vec![n.div_ceil(2)]
    } else {
        vec![n / 2, n / 2 + 1]
    }
}

/// Square, lower-triangular integer matrix indexed from 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueMatrix {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl CliqueMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry (i, j), 1-based.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    /// Row i, 1-based, all n entries.
    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(JacoError::invalid("matrix rows must be square"));
        }
        Ok(CliqueMatrix { n, entries: rows })
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        CliqueMatrix { n, entries }
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        (0..self.n)
            .all(|i| self.entries[i][i] == 1 && (i + 1..self.n).all(|j| self.entries[i][j] == 0))
    }

    /// Matrix product with overflow detection.
    pub fn mul(&self, rhs: &CliqueMatrix) -> Result<CliqueMatrix> {
        if self.n != rhs.n {
            return Err(JacoError::invalid("dimension mismatch"));
        }
        let n = self.n;
        let mut out = vec![vec![0i64; n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc: i128 = 0;
                for k in 0..n {
                    acc += self.entries[i][k] as i128 * rhs.entries[k][j] as i128;
                }
                *cell = i64::try_from(acc)
                    .map_err(|_| JacoError::overflow("matrix product entry exceeds 64 bits"))?;
            }
        }
        Ok(CliqueMatrix { n, entries: out })
    }

    /// Determinant by fraction-free (Bareiss) elimination; does not assume
    /// triangular shape.
    pub fn determinant(&self) -> Result<i128> {
        let n = self.n;
        if n == 0 {
            return Ok(1);
        }
        let mut m: Vec<Vec<i128>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&v| v as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k][k] == 0 {
                match (k + 1..n).find(|&r| m[r][k] != 0) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m[i][j]
                        .checked_mul(m[k][k])
                        .and_then(|a| m[i][k].checked_mul(m[k][j]).map(|b| (a, b)))
                        .and_then(|(a, b)| a.checked_sub(b))
                        .ok_or_else(|| JacoError::overflow("determinant intermediate"))?;
                    m[i][j] = v / prev;
                }
            }
            prev = m[k][k];
        }
        Ok(sign * m[n - 1][n - 1])
    }

    /// Rows as CSV (signed decimals, comma separated).
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_MATRIX_DIM {
        return Err(JacoError::invalid(format!(
            "matrix dimension must be in 1..={MAX_MATRIX_DIM}, got {n}"
        )));
    }
    Ok(())
}

/// A with a_{i,j} = C(i, j), the clique counts of K_1..K_n by size.
pub fn clique_matrix(n: usize) -> Result<CliqueMatrix> {
    check_dim(n)?;
    let mut entries = vec![vec![0i64; n]; n];
    for i in 1..=n {
        for j in 1..=i {
            let v = binomial(i as u64, j as u64)?;
            entries[i - 1][j - 1] =
                i64::try_from(v).map_err(|_| JacoError::overflow("matrix entry"))?;
        }
    }
    Ok(CliqueMatrix { n, entries })
}

/// A^{-1} with b_{i,j} = (-1)^{i+j} C(i, j).
pub fn clique_matrix_inverse(n: usize) -> Result<CliqueMatrix> {
    let mut m = clique_matrix(n)?;
    for (i, row) in m.entries.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            if (i + j) % 2 == 1 {
                *v = -*v;
            }
        }
    }
    Ok(m)
}

/// Census of G + K_1 from the census of G.
pub fn join_census(census: &CliqueCensus) -> Result<CliqueCensus> {
    let omega = census.clique_number();
    let mut counts = Vec::with_capacity(omega + 1);
    for l in 1..=omega + 1 {
        // eta(G + K1, l) = eta(G, l) + eta(G, l - 1), with eta(G, 0) = 1
        let v = census
            .eta(l)
            .checked_add(census.eta(l - 1))
            .ok_or_else(|| JacoError::overflow("join census"))?;
        counts.push(v);
    }
    Ok(CliqueCensus::from_counts(census.order() + 1, counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(10, 5).unwrap(), 252);
        assert_eq!(binomial(7, 3).unwrap(), 35);
        assert_eq!(binomial(9, 0).unwrap(), 1);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(binomial(64, 32).unwrap(), 1_832_624_140_942_590_534);
        assert_eq!(binomial(67, 33).unwrap(), 14_226_520_737_620_288_370);
        assert!(matches!(binomial(68, 34), Err(JacoError::Overflow(_))));
    }

    #[test]
    fn eta_and_totals() {
        assert_eq!(eta_complete(9, 4).unwrap(), 126);
        assert_eq!(eta_complete(6, 6).unwrap(), 1);
        assert_eq!(eta_complete(5, 7).unwrap(), 0);
        assert_eq!(total_cliques(3).unwrap(), 7);
        assert_eq!(total_cliques(1).unwrap(), 1);
        // row sum of K_10: 10+45+120+210+252+210+120+45+10+1
        assert_eq!(total_cliques(10).unwrap(), 1023);
        assert!(total_cliques(64).is_err());
    }

    #[test]
    fn degree_formula() {
        assert_eq!(complete_clique_degree(9, 4).unwrap(), 56);
        assert_eq!(complete_clique_degree(10, 5).unwrap(), 126);
        assert_eq!(complete_clique_degree(4, 1).unwrap(), 1);
        assert!(complete_clique_degree(4, 0).is_err());
        assert!(complete_clique_degree(4, 5).is_err());
        for n in 1..=30u64 {
            for l in 1..=n {
                assert_eq!(
                    n * complete_clique_degree(n, l).unwrap(),
                    l * eta_complete(n, l).unwrap()
                );
            }
        }
    }

    #[test]
    fn max_degree_sizes() {
        assert_eq!(max_degree_clique_sizes(7), vec![4]);
        assert_eq!(max_degree_clique_sizes(6), vec![3, 4]);
        assert_eq!(max_degree_clique_sizes(1), vec![1]);
        for n in 1..=40u64 {
            let best = (1..=n)
                .map(|l| complete_clique_degree(n, l).unwrap())
                .max()
                .unwrap();
            let argmax: Vec<u64> = (1..=n)
                .filter(|&l| complete_clique_degree(n, l).unwrap() == best)
                .collect();
            assert_eq!(argmax, max_degree_clique_sizes(n), "n = {n}");
        }
    }

    #[test]
    fn matrices() {
        assert_eq!(clique_matrix(3).unwrap().row(3), &[3, 3, 1]);
        assert_eq!(clique_matrix_inverse(4).unwrap().row(4), &[-4, 6, -4, 1]);
        for n in 1..=12 {
            let a = clique_matrix(n).unwrap();
            let b = clique_matrix_inverse(n).unwrap();
            assert_eq!(a.mul(&b).unwrap(), CliqueMatrix::identity(n));
            assert_eq!(b.mul(&a).unwrap(), CliqueMatrix::identity(n));
            assert!(a.is_lower_unitriangular() && b.is_lower_unitriangular());
        }
        for n in 1..=20 {
            assert_eq!(clique_matrix(n).unwrap().determinant().unwrap(), 1);
        }
        assert!(clique_matrix(0).is_err());
        assert!(clique_matrix(65).is_err());
        assert!(clique_matrix(64).is_ok());
    }

    #[test]
    fn pascal_rule_in_matrix() {
        let a = clique_matrix(20).unwrap();
        for i in 2..=20 {
            assert_eq!(a.get(i, 1), i as i64);
            for j in 2..=i {
                assert_eq!(a.get(i, j), a.get(i - 1, j - 1) + a.get(i - 1, j));
            }
        }
    }

    #[test]
    fn determinant_of_general_matrix() {
        let m = CliqueMatrix::from_rows(vec![vec![0, 2, 1], vec![3, 1, 4], vec![1, 5, 9]]).unwrap();
        // expanded by hand: 0*(9-20) - 2*(27-4) + 1*(15-1) = -32
        assert_eq!(m.determinant().unwrap(), -32);
    }

    #[test]
    fn join_examples() {
        let k2 = CliqueCensus::from_counts(2, vec![2, 1]);
        assert_eq!(join_census(&k2).unwrap().counts(), &[3, 3, 1]);
        let empty2 = CliqueCensus::from_counts(2, vec![2]);
        assert_eq!(join_census(&empty2).unwrap().counts(), &[3, 2]);
        let j8 = CliqueCensus::from_counts(8, vec![8, 16, 14, 6, 1]);
        let joined = join_census(&j8).unwrap();
        assert_eq!(joined.counts(), &[9, 24, 30, 20, 7, 1]);
        assert_eq!(joined.order(), 9);
    }

    #[test]
    fn iterated_join_builds_pascal_rows() {
        let mut c = CliqueCensus::from_counts(1, vec![1]);
        for n in 2..=20u64 {
            c = join_census(&c).unwrap();
            let row: Vec<u64> = (1..=n).map(|l| eta_complete(n, l).unwrap()).collect();
            assert_eq!(c.counts(), row.as_slice());
        }
    }
}
