//! Small dense exact/float linear algebra: determinants, ranks, inverses.

use crate::scalar::Scalar;

pub type Matrix<S> = Vec<Vec<S>>;

pub fn identity<S: Scalar>(n: usize) -> Matrix<S> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { S::one() } else { S::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![S::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] = out[i][j].clone() + a[i][l].clone() * b[l][j].clone();
            }
        }
    }
    out
}

pub fn mat_vec<S: Scalar>(a: &Matrix<S>, v: &[S]) -> Vec<S> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
        })
        .collect()
}

/// Gaussian elimination; returns (row echelon form, rank, det of the square part).
fn eliminate<S: Scalar>(mut m: Matrix<S>) -> (Matrix<S>, usize, S) {
    let rows = m.len();
    if rows == 0 {
        return (m, 0, S::one());
    }
    let cols = m[0].len();
    let mut det = S::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // pick pivot with largest float magnitude (harmless for exact scalars)
        let mut piv = None;
        let mut best = 0.0_f64;
        for r in rank..rows {
            let w = m[r][col].pivot_weight();
            if !m[r][col].is_zero() && (piv.is_none() || w > best) {
                piv = Some(r);
                best = w;
            }
        }
        let Some(p) = piv else {
            det = S::zero();
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            det = -det;
        }
        det = det * m[rank][col].clone();
        let inv = S::one() / m[rank][col].clone();
        for c in col..cols {
            m[rank][c] = m[rank][c].clone() * inv.clone();
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    m[r][c] = m[r][c].clone() - f.clone() * m[rank][c].clone();
                }
            }
        }
        rank += 1;
    }
    (m, rank, det)
}

pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    eliminate(m.clone()).1
}

pub fn det<S: Scalar>(m: &Matrix<S>) -> S {
    let n = m.len();
    let (_, r, d) = eliminate(m.clone());
    if r < n {
        S::zero()
    } else {
        d
    }
}

pub fn inverse<S: Scalar>(m: &Matrix<S>) -> Option<Matrix<S>> {
    let n = m.len();
    let mut aug: Matrix<S> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
            r
        })
        .collect();
    let (red, rank, _) = {
        let out = eliminate(std::mem::take(&mut aug));
        out
    };
    if rank < n {
        return None;
    }
    Some(red.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Nullspace basis of `m` (columns = unknowns), as vectors of length `cols`.
pub fn nullspace<S: Scalar>(m: &Matrix<S>) -> Vec<Vec<S>> {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    let (red, rank, _) = eliminate(m.clone());
    // locate pivot columns
    let mut pivot_cols = Vec::with_capacity(rank);
    let mut col = 0;
    for row in red.iter().take(rank) {
        while col < cols && row[col].is_zero() {
            col += 1;
        }
        if col == cols {
            break;
        }
        pivot_cols.push(col);
        col += 1;
    }
    let pivot_set: std::collections::BTreeSet<usize> = pivot_cols.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![S::zero(); cols];
        v[free] = S::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -red[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Leading principal minors; used for definiteness checks of symmetric matrices.
pub fn leading_principal_minors<S: Scalar>(m: &Matrix<S>) -> Vec<S> {
    (1..=m.len())
        .map(|k| {
            let sub: Matrix<S> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
            det(&sub)
        })
        .collect()
}
