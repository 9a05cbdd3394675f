//! Small dense kernels for tall least-squares problems with a handful of columns.

pub(crate) type Square<const P: usize> = [[f64; P]; P];

/// Householder QR of a tall column-major matrix.
///
/// On return `rhs` holds `Qᵀ·rhs` and the returned matrix is the upper
/// triangular `R` (row-major). A zero column below the diagonal is left
/// unreflected, which leaves a zero on the diagonal of `R`.
pub(crate) fn householder_qr<const P: usize>(cols: &mut [Vec<f64>; P], rhs: &mut [f64]) -> Square<P> {
    let m = rhs.len();
    debug_assert!(cols.iter().all(|c| c.len() == m));
    debug_assert!(m >= P);
    let mut v = vec![0.0; m];
    for k in 0..P {
        let norm = cols[k][k..].iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = if cols[k][k] > 0.0 { -norm } else { norm };
        v[k..].copy_from_slice(&cols[k][k..]);
        v[k] -= alpha;
        let vnorm2 = v[k..].iter().map(|x| x * x).sum::<f64>();
        if vnorm2 == 0.0 {
            continue;
        }
        let reflect = |target: &mut [f64]| {
            let dot: f64 = v[k..].iter().zip(&target[k..]).map(|(a, b)| a * b).sum();
            let scale = 2.0 * dot / vnorm2;
            for (t, vi) in target[k..].iter_mut().zip(&v[k..]) {
                *t -= scale * vi;
            }
        };
        for col in cols[k..].iter_mut() {
            reflect(col);
        }
        reflect(rhs);
    }
    let mut r = [[0.0; P]; P];
    for (i, row) in r.iter_mut().enumerate() {
        for j in i..P {
            row[j] = cols[j][i];
        }
    }
    r
}

/// Solves `R x = b` for upper triangular `R`.
pub(crate) fn back_substitute<const P: usize>(r: &Square<P>, b: &[f64]) -> [f64; P] {
    let mut x = [0.0; P];
    for i in (0..P).rev() {
        let s: f64 = (i + 1..P).map(|j| r[i][j] * x[j]).sum();
        x[i] = (b[i] - s) / r[i][i];
    }
    x
}

/// Inverse of an upper triangular matrix (itself upper triangular).
pub(crate) fn upper_inverse<const P: usize>(r: &Square<P>) -> Square<P> {
    let mut inv = [[0.0; P]; P];
    for j in 0..P {
        let mut e = [0.0; P];
        e[j] = 1.0;
        let col = back_substitute(r, &e);
        for i in 0..P {
            inv[i][j] = col[i];
        }
    }
    inv
}

pub(crate) fn mat_mul<const P: usize>(a: &Square<P>, b: &Square<P>) -> Square<P> {
    let mut c = [[0.0; P]; P];
    for i in 0..P {
        for j in 0..P {
            c[i][j] = (0..P).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

pub(crate) fn transpose<const P: usize>(a: &Square<P>) -> Square<P> {
    let mut t = [[0.0; P]; P];
    for i in 0..P {
        for j in 0..P {
            t[j][i] = a[i][j];
        }
    }
    t
}

/// Singular values by one-sided Jacobi rotations, descending.
pub(crate) fn singular_values<const P: usize>(a: &Square<P>) -> [f64; P] {
    // columns of a
    let mut u = transpose(a);
    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..P {
            for q in p + 1..P {
                let alpha: f64 = u[p].iter().map(|x| x * x).sum();
                let beta: f64 = u[q].iter().map(|x| x * x).sum();
                let gamma: f64 = u[p].iter().zip(&u[q]).map(|(x, y)| x * y).sum();
                if gamma == 0.0 || gamma.abs() <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (lo, hi) = u.split_at_mut(q);
                for (x, y) in lo[p].iter_mut().zip(hi[0].iter_mut()) {
                    (*x, *y) = (c * *x - s * *y, s * *x + c * *y);
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv = [0.0; P];
    for (s, col) in sv.iter_mut().zip(&u) {
        *s = col.iter().map(|x| x * x).sum::<f64>().sqrt();
    }
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}
