//! Cyclic Jacobi eigenvalue iteration for dense Hermitian matrices.

use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

fn off_diagonal_norm(a: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of the Hermitian matrix stored row-major in `data`, ascending.
///
/// Only the upper triangle's relation to the lower one is assumed
/// (`a[j][i] = conj(a[i][j])`); the input is not modified. Iteration stops
/// once the off-diagonal Frobenius norm drops below `1e-14 ||A||_F`.
pub fn eigenvalues_hermitian(n: usize, data: &[Complex64]) -> Result<Vec<f64>> {
    assert_eq!(data.len(), n * n, "matrix data must be n*n");
    let mut a = data.to_vec();
    let total: f64 = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let threshold = 1e-14 * total;

    let mut off = off_diagonal_norm(&a, n);
    let mut sweeps = 0;
    while off > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, n, p, q, threshold);
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a, n);
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

/// Annihilates `a[p][q]` with a unitary plane rotation.
fn rotate(a: &mut [Complex64], n: usize, p: usize, q: usize, threshold: f64) {
    let apq = a[p * n + q];
    let r = apq.norm();
    if r == 0.0 || r < 1e-3 * threshold / n as f64 {
        return;
    }
    // a[p][q] = r e^{i phi}; after the phase change on q the pivot is real.
    let phase = apq / r;
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let zeta = (aqq - app) / (2.0 * r);
    let t = if zeta >= 0.0 {
        1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
    } else {
        -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let conj_phase = phase.conj();

    // A <- A J, J = diag(.., e^{-i phi} at q) * R(c, s)
    for k in 0..n {
        let x = a[k * n + p];
        let y = a[k * n + q] * conj_phase;
        a[k * n + p] = x * c - y * s;
        a[k * n + q] = x * s + y * c;
    }
    // A <- J^H A
    for k in 0..n {
        let x = a[p * n + k];
        let y = a[q * n + k] * phase;
        a[p * n + k] = x * c - y * s;
        a[q * n + k] = x * s + y * c;
    }
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
    a[p * n + p].im = 0.0;
    a[q * n + q].im = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_hermitian(n: usize, seed: u64) -> Vec<Complex64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = vec![c(0.0, 0.0); n * n];
        for i in 0..n {
            a[i * n + i] = c(rng.gen_range(-2.0..2.0), 0.0);
            for j in (i + 1)..n {
                let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                a[i * n + j] = z;
                a[j * n + i] = z.conj();
            }
        }
        a
    }

    #[test]
    fn one_by_one() {
        assert_eq!(eigenvalues_hermitian(1, &[c(0.7, 0.0)]).unwrap(), vec![0.7]);
    }

    #[test]
    fn dimer() {
        let g = 1.3;
        let e = eigenvalues_hermitian(2, &[c(0.0, 0.0), c(g, 0.0), c(g, 0.0), c(0.0, 0.0)]).unwrap();
        assert!((e[0] + g).abs() < 1e-14 && (e[1] - g).abs() < 1e-14);
    }

    #[test]
    fn complex_two_by_two() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2.
        let e = eigenvalues_hermitian(2, &[c(1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(1.0, 0.0)])
            .unwrap();
        assert!(e[0].abs() < 1e-14 && (e[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn trace_and_frobenius_preserved() {
        let n = 40;
        let a = random_hermitian(n, 7);
        let e = eigenvalues_hermitian(n, &a).unwrap();
        let trace: f64 = (0..n).map(|i| a[i * n + i].re).sum();
        assert!((e.iter().sum::<f64>() - trace).abs() < 1e-10 * n as f64);
        let fro: f64 = a.iter().map(|z| z.norm_sqr()).sum();
        assert!((e.iter().map(|x| x * x).sum::<f64>() - fro).abs() < 1e-10 * fro);
    }

    #[test]
    fn matches_nalgebra() {
        for (n, seed) in [(5, 1), (17, 2), (64, 3)] {
            let a = random_hermitian(n, seed);
            let ours = eigenvalues_hermitian(n, &a).unwrap();
            let m = nalgebra::DMatrix::from_row_slice(n, n, &a);
            let mut theirs: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
            theirs.sort_by(f64::total_cmp);
            for (x, y) in ours.iter().zip(&theirs) {
                assert!((x - y).abs() < 1e-10, "n = {n}: {x} vs {y}");
            }
        }
    }

    #[test]
    fn diagonal_input_is_returned_sorted() {
        let a = vec![c(3.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)];
        assert_eq!(eigenvalues_hermitian(2, &a).unwrap(), vec![-1.0, 3.0]);
    }
}
