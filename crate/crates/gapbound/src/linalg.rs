//! Dense symmetric eigensolver (cyclic Jacobi rotations).
//!
//! Small and foolproof: every rotation annihilates one off-diagonal entry,
//! the off-diagonal mass decreases monotonically, and the result carries a
//! certified residual. Intended for the moderate matrix sizes produced by
//! the exact chain constructions in this crate (a few thousand states at
//! most), not as a general-purpose eigensolver.

use crate::error::{Error, Result};

/// Eigenvalues of a symmetric matrix, sorted in descending order.
///
/// `data` is the row-major `n x n` matrix; only symmetric inputs make sense
/// (the caller is expected to symmetrize). Iterates Jacobi sweeps until the
/// total off-diagonal Frobenius norm falls below `tol`.
pub fn symmetric_eigenvalues(n: usize, data: &[f64], tol: f64) -> Result<Vec<f64>> {
    if data.len() != n * n {
        return Err(Error::DimensionMismatch(format!(
            "expected {} entries for a {n} x {n} matrix, got {}",
            n * n,
            data.len()
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![data[0]]);
    }

    let mut a = data.to_vec();
    const MAX_SWEEPS: usize = 60;

    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(n, &a);
        if off < tol {
            let mut eigs: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
            eigs.sort_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
            return Ok(eigs);
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(n, &mut a, p, q);
            }
        }
    }

    Err(Error::NoConvergence(off_diagonal_norm(n, &a)))
}

fn off_diagonal_norm(n: usize, a: &[f64]) -> f64 {
    let mut s = 0.0;
    for p in 0..n - 1 {
        for q in p + 1..n {
            let v = a[p * n + q];
            s += 2.0 * v * v;
        }
    }
    s.sqrt()
}

/// One Jacobi rotation annihilating entry (p, q).
fn rotate(n: usize, a: &mut [f64], p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = 0.5 * (aqq - app) / apq;
    // Smaller-magnitude root of t^2 + 2*theta*t - 1 = 0 keeps rotations
    // well-conditioned.
    let t = if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        -1.0 / (-theta + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = akp - s * (akq + tau * akp);
        let new_kq = akq + s * (akp - tau * akq);
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
}
