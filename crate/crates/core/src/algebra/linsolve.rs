//! Fraction-free (Bareiss) Gaussian elimination.

use super::{AlgebraError, Rational};

/// Solve `matrix * x = rhs` exactly.
///
/// Rows are first cleared of denominators, so elimination runs on integers and every
/// Bareiss division is exact.
pub fn solve_exact(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
    let n = matrix.len();
    assert_eq!(rhs.len(), n, "right-hand side length must match the row count");
    assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return Ok(Vec::new());
    }
    // Augmented integer matrix.
    let mut a: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r: Vec<Rational> = row.iter().cloned().chain(std::iter::once(b.clone())).collect();
            let lcm = r.iter().fold(num_bigint::BigInt::from(1), |acc, c| {
                num_integer::Integer::lcm(&acc, c.denom())
            });
            let scale = Rational::from(lcm);
            r.iter_mut().for_each(|c| *c *= &scale);
            r
        })
        .collect();
    let mut prev = Rational::one();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(AlgebraError::SingularMatrix)?;
        a.swap(k, pivot);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v / &prev;
            }
            a[i][k] = Rational::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = a[i][n].clone();
        for j in i + 1..n {
            acc -= &a[i][j] * &x[j];
        }
        x[i] = acc / &a[i][i];
    }
    Ok(x)
}

/// Indices of the first rows (in order) that together have full column rank.
/// Stops once `ncols` independent rows have been found.
pub fn independent_rows(matrix: &[Vec<Rational>]) -> Vec<usize> {
    let ncols = matrix.first().map_or(0, Vec::len);
    let mut basis: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut picked = Vec::new();
    for (idx, row) in matrix.iter().enumerate() {
        let mut r = row.clone();
        for (p, b) in &basis {
            if r[*p].is_zero() {
                continue;
            }
            let f = r[*p].clone();
            for (x, y) in r.iter_mut().zip(b) {
                *x -= &f * y;
            }
        }
        if let Some(p) = r.iter().position(|c| !c.is_zero()) {
            let inv = r[p].recip().expect("nonzero");
            r.iter_mut().for_each(|c| *c *= &inv);
            basis.push((p, r));
            picked.push(idx);
            if picked.len() == ncols {
                break;
            }
        }
    }
    picked
}
