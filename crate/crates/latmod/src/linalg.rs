//! Small dense linear algebra helpers for N×N lattice bases (N ≤ ~16).
//!
//! Row-major storage throughout, matching the generator-matrix convention
//! where the rows are the basis vectors.

use crate::error::{Error, Result};

/// y = c · B for a row vector of coefficients and row-major basis B.
pub(crate) fn row_times_matrix(coeffs: &[f64], basis: &[f64], dim: usize) -> Vec<f64> {
    let mut out = vec![0.0; dim];
    for (i, &c) in coeffs.iter().enumerate() {
        if c != 0.0 {
            let row = &basis[i * dim..(i + 1) * dim];
            for (o, &b) in out.iter_mut().zip(row) {
                *o += c * b;
            }
        }
    }
    out
}

/// LU decomposition with partial pivoting, in place. Returns the pivot
/// permutation sign and row order, or an error when the matrix is singular.
fn lu_decompose(a: &mut [f64], dim: usize) -> Result<(f64, Vec<usize>)> {
    let mut perm: Vec<usize> = (0..dim).collect();
    let mut sign = 1.0;
    for col in 0..dim {
        let mut pivot = col;
        let mut best = a[perm[col] * dim + col].abs();
        for (r, &pr) in perm.iter().enumerate().skip(col + 1) {
            let v = a[pr * dim + col].abs();
            if v > best {
                best = v;
                pivot = r;
            }
        }
        if best < 1e-12 {
            return Err(Error::SingularGenerator);
        }
        if pivot != col {
            perm.swap(col, pivot);
            sign = -sign;
        }
        let p = perm[col];
        let diag = a[p * dim + col];
        for &r in perm.iter().skip(col + 1) {
            let factor = a[r * dim + col] / diag;
            a[r * dim + col] = factor;
            for c in col + 1..dim {
                a[r * dim + c] -= factor * a[p * dim + c];
            }
        }
    }
    Ok((sign, perm))
}

/// Determinant of a row-major dim×dim matrix.
pub(crate) fn determinant(matrix: &[f64], dim: usize) -> Result<f64> {
    let mut a = matrix.to_vec();
    let (sign, perm) = lu_decompose(&mut a, dim)?;
    let mut det = sign;
    for (col, &p) in perm.iter().enumerate() {
        det *= a[p * dim + col];
    }
    Ok(det)
}

/// Inverse of a row-major dim×dim matrix.
pub(crate) fn invert(matrix: &[f64], dim: usize) -> Result<Vec<f64>> {
    let mut a = matrix.to_vec();
    let (_, perm) = lu_decompose(&mut a, dim)?;
    let mut inv = vec![0.0; dim * dim];
    // Solve A x = e_k column by column.
    let mut y = vec![0.0; dim];
    for k in 0..dim {
        for (i, &p) in perm.iter().enumerate() {
            let mut v = if p == k { 1.0 } else { 0.0 };
            for (j, &pj) in perm.iter().enumerate().take(i) {
                v -= a[p * dim + j] * y[pj];
            }
            y[p] = v;
        }
        for i in (0..dim).rev() {
            let p = perm[i];
            let mut v = y[p];
            for j in i + 1..dim {
                v -= a[p * dim + j] * inv[j * dim + k];
            }
            inv[i * dim + k] = v / a[p * dim + i];
        }
    }
    Ok(inv)
}

/// QR factorization of the matrix whose COLUMNS are the basis vectors
/// (i.e. of the transpose of the row-major generator). Returns the upper
/// triangular R and the product Qᵀ as row-major dim×dim matrices, computed
/// by modified Gram-Schmidt.
pub(crate) fn qr_of_columns(basis_rows: &[f64], dim: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    // Column j of M is basis row j.
    let mut q = vec![0.0; dim * dim]; // columns of Q
    let mut r = vec![0.0; dim * dim];
    for j in 0..dim {
        let mut v: Vec<f64> = (0..dim).map(|i| basis_rows[j * dim + i]).collect();
        for i in 0..j {
            let mut dot = 0.0;
            for (row, item) in v.iter().enumerate() {
                dot += q[row * dim + i] * item;
            }
            r[i * dim + j] = dot;
            for (row, item) in v.iter_mut().enumerate() {
                *item -= dot * q[row * dim + i];
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-12 {
            return Err(Error::SingularGenerator);
        }
        r[j * dim + j] = norm;
        for (row, item) in v.iter().enumerate() {
            q[row * dim + j] = item / norm;
        }
    }
    // Qᵀ stored row-major: row i of Qᵀ is column i of Q.
    let mut qt = vec![0.0; dim * dim];
    for i in 0..dim {
        for row in 0..dim {
            qt[i * dim + row] = q[row * dim + i];
        }
    }
    Ok((r, qt))
}

pub(crate) fn norm_sq(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_inverse() {
        let m = vec![2.0, 1.0, 0.0, 1.0, 3.0, 1.0, 0.0, 1.0, 2.0];
        let det = determinant(&m, 3).unwrap();
        assert!((det - 8.0).abs() < 1e-12);
        let inv = invert(&m, 3).unwrap();
        // m * inv = I
        for i in 0..3 {
            for j in 0..3 {
                let mut v = 0.0;
                for k in 0..3 {
                    v += m[i * 3 + k] * inv[k * 3 + j];
                }
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((v - expect).abs() < 1e-12, "({i},{j}) = {v}");
            }
        }
    }

    #[test]
    fn singular_is_reported() {
        let m = vec![1.0, 2.0, 2.0, 4.0];
        assert_eq!(determinant(&m, 2), Err(Error::SingularGenerator));
    }

    #[test]
    fn qr_reconstructs_norms() {
        let rows = vec![1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0];
        let (r, qt) = qr_of_columns(&rows, 3).unwrap();
        // For any coefficient vector c, ||c·B|| == ||R c||.
        let c = [2.0, -1.0, 3.0];
        let point = row_times_matrix(&c, &rows, 3);
        let mut rc = [0.0; 3];
        for i in 0..3 {
            for (j, &cj) in c.iter().enumerate() {
                rc[i] += r[i * 3 + j] * cj;
            }
        }
        assert!((norm_sq(&point) - norm_sq(&rc)).abs() < 1e-9);
        // Qᵀ orthonormal rows.
        for i in 0..3 {
            let row = &qt[i * 3..(i + 1) * 3];
            assert!((norm_sq(row) - 1.0).abs() < 1e-12);
        }
    }
}
