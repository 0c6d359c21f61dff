//! Hermitian eigenvalues via cyclic Jacobi on the real-symmetric embedding
//! [[Re, -Im], [Im, Re]]; each eigenvalue of the Hermitian matrix appears
//! twice in the embedding's spectrum.

use super::state::CMatrix;

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    debug_assert!(m.is_hermitian(1e-9));
    let d = m.dim();
    let n = 2 * d;
    let mut a = vec![vec![0f64; n]; n];
    for r in 0..d {
        for c in 0..d {
            a[r][c] = m.data[r][c].re;
            a[r + d][c + d] = m.data[r][c].re;
            a[r][c + d] = -m.data[r][c].im;
            a[r + d][c] = m.data[r][c].im;
        }
    }
    jacobi_eigenvalues(&mut a)
        .chunks(2)
        .map(|pair| pair[0])
        .collect()
}

fn jacobi_eigenvalues(a: &mut [Vec<f64>]) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let mut off = 0f64;
        for r in 0..n {
            for c in r + 1..n {
                off += a[r][c] * a[r][c];
            }
        }
        if off < 1e-28 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eigs
}

/// Trace distance ½‖ρ − σ‖₁ for Hermitian ρ, σ.
pub fn trace_distance(rho: &CMatrix, sigma: &CMatrix) -> f64 {
    let diff = rho.sub(sigma);
    0.5 * hermitian_eigenvalues(&diff)
        .iter()
        .map(|e| e.abs())
        .sum::<f64>()
}

/// Smallest eigenvalue; a density matrix is PSD when this is ≥ -tol.
pub fn min_eigenvalue(m: &CMatrix) -> f64 {
    hermitian_eigenvalues(m)[0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn diagonal_matrix_eigenvalues() {
        let mut m = CMatrix::zero(3);
        m.data[0][0] = Complex64::new(2.0, 0.0);
        m.data[1][1] = Complex64::new(-1.0, 0.0);
        m.data[2][2] = Complex64::new(0.5, 0.0);
        let e = hermitian_eigenvalues(&m);
        assert!((e[0] + 1.0).abs() < 1e-10);
        assert!((e[1] - 0.5).abs() < 1e-10);
        assert!((e[2] - 2.0).abs() < 1e-10);
    }

    #[test]
    fn pauli_y_eigenvalues() {
        let mut y = CMatrix::zero(2);
        y.data[0][1] = Complex64::new(0.0, -1.0);
        y.data[1][0] = Complex64::new(0.0, 1.0);
        let e = hermitian_eigenvalues(&y);
        assert!((e[0] + 1.0).abs() < 1e-10);
        assert!((e[1] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn trace_distance_of_orthogonal_pures_is_one() {
        let mut a = CMatrix::zero(2);
        a.data[0][0] = Complex64::ONE;
        let mut b = CMatrix::zero(2);
        b.data[1][1] = Complex64::ONE;
        assert!((trace_distance(&a, &b) - 1.0).abs() < 1e-10);
        assert!(trace_distance(&a, &a) < 1e-12);
    }
}
