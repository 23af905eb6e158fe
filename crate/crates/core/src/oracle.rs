//! Explicit finite-tube Hamiltonian, used to cross-check the zone-folded
//! band formulas.
//!
//! A segment of `P` translational cells with periodic boundary conditions
//! along the axis is the lattice modulo `Zc + Z(P b)`. Its tight-binding
//! matrix has dimension `2 q P` and, by Bloch's theorem, its spectrum is the
//! set of band energies at the `q P` wave vectors compatible with both
//! periodicities.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::bands::{dispersion, line_point, BandParams};
use crate::error::{Error, Result};
use crate::geom::inner_int;
use crate::honeycomb::LatticeSite;
use crate::jacobi::eigenvalues_hermitian;
use crate::tube::{canonical_rep, ChiralityVector, SymmetryDecomposition, TubeSymmetry};

/// A directed bond of the finite tube.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bond {
    pub target: usize,
    /// Coordinate `j` changed by the hop.
    pub label: usize,
    /// `nu` of the source site.
    pub nu: i8,
}

/// Sites of a periodic tube segment and their nearest-neighbor bonds.
#[derive(Debug, Clone)]
pub struct FiniteTube {
    pub chirality: ChiralityVector,
    pub periods: i64,
    /// Representatives reduced modulo `Zc` and then modulo `Z(P b)`.
    pub sites: Vec<LatticeSite>,
    pub adjacency: Vec<[Bond; 3]>,
}

impl FiniteTube {
    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }
}

/// Representative of `v + Zc + Z(P b)`: canonical along `c`, then shifted by
/// multiples of `P b` into `0 <= <v, b> < P ||b||^2`. Since `b` is orthogonal
/// to `c` the second step keeps the first window.
fn reduce(v: LatticeSite, sym: &TubeSymmetry, periods: i64) -> LatticeSite {
    let v = canonical_rep(v, sym.chirality).rep;
    let b = sym.b.coords();
    let j = inner_int(&v.coords(), &b).div_euclid(periods * sym.b.norm_sq());
    let w = v.coords();
    LatticeSite([w[0] - j * periods * b[0], w[1] - j * periods * b[1], w[2] - j * periods * b[2]])
}

/// Enumerates the `2 q P` sites of a segment from the decomposition
/// `(s, m, p)` with `0 <= s < q' P` and wires each site to its three
/// neighbor classes.
pub fn build_finite_tube(sym: &TubeSymmetry, periods: i64) -> Result<FiniteTube> {
    if periods < 1 {
        return Err(Error::OutOfRange { what: "periods", value: periods as f64 });
    }
    let expected = (2 * sym.q * periods) as usize;
    let mut sites = Vec::with_capacity(expected);
    let mut index: HashMap<LatticeSite, usize> = HashMap::with_capacity(expected);
    for p in 0..2u8 {
        for s in 0..sym.q_prime * periods {
            for m in 0..sym.n {
                let class = sym.compose(SymmetryDecomposition::new(s, m, p))?;
                let site = reduce(class.rep, sym, periods);
                if index.insert(site, sites.len()).is_some() {
                    return Err(Error::InvariantViolation(format!(
                        "site {site} enumerated twice for (s, m, p) = ({s}, {m}, {p})"
                    )));
                }
                sites.push(site);
            }
        }
    }
    if sites.len() != expected {
        return Err(Error::InvariantViolation(format!(
            "expected {expected} sites, enumerated {}",
            sites.len()
        )));
    }

    let mut adjacency = Vec::with_capacity(sites.len());
    for site in &sites {
        let nu = site.nu() as i8;
        let mut bonds = [Bond { target: 0, label: 0, nu }; 3];
        for (j, bond) in bonds.iter_mut().enumerate() {
            let nb = reduce(site.neighbor(j), sym, periods);
            let target = *index.get(&nb).ok_or_else(|| {
                Error::InvariantViolation(format!("neighbor {nb} of {site} is not a listed site"))
            })?;
            *bond = Bond { target, label: j, nu };
        }
        adjacency.push(bonds);
    }
    Ok(FiniteTube { chirality: sym.chirality, periods, sites, adjacency })
}

/// Dense Hermitian matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    pub dim: usize,
    pub data: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    /// Exact check `H[i][j] == conj(H[j][i])`.
    pub fn is_hermitian(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.get(i, j) == self.get(j, i).conj()))
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im == 0.0)
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i).re).sum()
    }
}

/// `H[v][v] = epsilon`, `H[v][v^j] += gamma_j` when `nu(v) = 1` and
/// `conj(gamma_j)` when `nu(v) = -1`. Parallel bonds between the same pair of
/// sites accumulate.
pub fn build_hamiltonian(tube: &FiniteTube, p: &BandParams) -> Result<HermitianMatrix> {
    let n = tube.len();
    let mut h = HermitianMatrix::zeros(n);
    for (i, bonds) in tube.adjacency.iter().enumerate() {
        h.data[i * n + i] += Complex64::new(p.epsilon, 0.0);
        for bond in bonds {
            let back = tube
                .adjacency
                .get(bond.target)
                .map(|bs| bs[bond.label])
                .ok_or(Error::InconsistentAdjacency { site: i })?;
            if back.target != i || back.nu != -bond.nu {
                return Err(Error::InconsistentAdjacency { site: i });
            }
            let g = p.hoppings[bond.label];
            h.data[i * n + bond.target] += if bond.nu > 0 { g } else { g.conj() };
        }
    }
    Ok(h)
}

/// All eigenvalues, ascending.
pub fn eigenvalues(h: &HermitianMatrix) -> Result<Vec<f64>> {
    eigenvalues_hermitian(h.dim, &h.data)
}

/// Band energies at the wave vectors allowed on a segment of `periods` cells:
/// `<k, c> a` and `<k, P b> a` both in `2 pi Z`. With `b = q' omega + j c'`
/// the allowed `kappa` on line `m` are `2 pi l / (P a) - 2 pi j m / (n a)`,
/// `0 <= l < q' P`.
pub fn analytic_spectrum(sym: &TubeSymmetry, periods: i64, p: &BandParams) -> Result<Vec<f64>> {
    if periods < 1 {
        return Err(Error::OutOfRange { what: "periods", value: periods as f64 });
    }
    let winding = sym.b_winding() as f64;
    let a = p.a;
    let mut out = Vec::with_capacity((2 * sym.q * periods) as usize);
    for m in 0..sym.n {
        for l in 0..sym.q_prime * periods {
            let kappa = 2.0 * PI * l as f64 / (periods as f64 * a)
                - 2.0 * PI * winding * m as f64 / (sym.n as f64 * a);
            let (lo, hi) = dispersion(&line_point(sym, m as f64, kappa, a), p);
            out.push(lo);
            out.push(hi);
        }
    }
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// Finite versus analytic spectrum of one segment.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub chirality: ChiralityVector,
    pub periods: i64,
    pub dimension: usize,
    pub finite: Vec<f64>,
    pub analytic: Vec<f64>,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Diagonalizes the segment Hamiltonian and compares the sorted eigenvalues
/// with the sorted analytic band energies.
pub fn compare_spectra(
    sym: &TubeSymmetry,
    periods: i64,
    p: &BandParams,
    tol: f64,
) -> Result<SpectrumReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::NonPositive { what: "tolerance", value: tol });
    }
    let tube = build_finite_tube(sym, periods)?;
    let h = build_hamiltonian(&tube, p)?;
    let finite = eigenvalues(&h)?;
    let analytic = analytic_spectrum(sym, periods, p)?;
    if finite.len() != analytic.len() {
        return Err(Error::LengthMismatch { finite: finite.len(), analytic: analytic.len() });
    }
    let max_deviation =
        finite.iter().zip(&analytic).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    Ok(SpectrumReport {
        chirality: sym.chirality,
        periods,
        dimension: h.dim,
        finite,
        analytic,
        max_deviation,
        tolerance: tol,
        pass: max_deviation < tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: f64 = 1.763_632_614_803_888_6;

    fn sym(c: [i64; 3]) -> TubeSymmetry {
        TubeSymmetry::new(ChiralityVector::validate(c).unwrap())
    }

    #[test]
    fn site_counts() {
        assert_eq!(build_finite_tube(&sym([4, -2, -2]), 1).unwrap().len(), 8);
        assert_eq!(build_finite_tube(&sym([5, 0, -5]), 2).unwrap().len(), 40);
        assert_eq!(build_finite_tube(&sym([4, -1, -3]), 4).unwrap().len(), 208);
        assert!(build_finite_tube(&sym([4, -2, -2]), 0).is_err());
    }

    /// Brute force: collect reduced sites from a large ball of the lattice.
    #[test]
    fn enumeration_matches_ball_scan() {
        for (c, periods) in [([4, -2, -2], 1), ([5, 0, -5], 2), ([3, -1, -2], 3)] {
            let s = sym(c);
            let tube = build_finite_tube(&s, periods).unwrap();
            let mut listed: Vec<_> = tube.sites.clone();
            listed.sort();
            let mut scanned: Vec<_> = LatticeSite::ball(LatticeSite::ORIGIN, 24)
                .into_iter()
                .map(|v| reduce(v, &s, periods))
                .collect();
            scanned.sort();
            scanned.dedup();
            assert_eq!(listed, scanned, "c = {c:?}");
        }
    }

    #[test]
    fn three_regular_and_symmetric() {
        let tube = build_finite_tube(&sym([5, 0, -5]), 2).unwrap();
        let mut indegree = vec![0; tube.len()];
        for (i, bonds) in tube.adjacency.iter().enumerate() {
            for b in bonds {
                indegree[b.target] += 1;
                assert_eq!(tube.adjacency[b.target][b.label].target, i);
            }
        }
        assert!(indegree.iter().all(|&d| d == 3));
    }

    #[test]
    fn uniform_hamiltonian_is_real_symmetric() {
        let tube = build_finite_tube(&sym([4, -2, -2]), 2).unwrap();
        let p = BandParams::uniform(1.0, A).unwrap();
        let h = build_hamiltonian(&tube, &p).unwrap();
        assert!(h.is_real() && h.is_hermitian());
        for i in 0..h.dim {
            let row: f64 = (0..h.dim).map(|j| h.get(i, j).norm()).sum();
            assert!((row - 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn magnetic_hamiltonian_is_complex_hermitian() {
        let s = sym([5, 0, -5]);
        let tube = build_finite_tube(&s, 2).unwrap();
        let beta = 0.3 / (A * s.chirality.norm());
        let p = BandParams::magnetic(1.0, beta, &s.chirality, A).unwrap();
        let h = build_hamiltonian(&tube, &p).unwrap();
        assert!(!h.is_real() && h.is_hermitian());
    }

    #[test]
    fn broken_adjacency_is_rejected() {
        let mut tube = build_finite_tube(&sym([4, -2, -2]), 1).unwrap();
        tube.adjacency[0][1].target = tube.adjacency[0][0].target;
        let p = BandParams::uniform(1.0, A).unwrap();
        assert!(matches!(
            build_hamiltonian(&tube, &p),
            Err(Error::InconsistentAdjacency { .. })
        ));
    }

    #[test]
    fn analytic_spectrum_shape() {
        let s = sym([4, -2, -2]);
        let p = BandParams::uniform(1.0, A).unwrap();
        assert_eq!(analytic_spectrum(&s, 1, &p).unwrap().len(), 8);
        let e = analytic_spectrum(&s, 2, &p).unwrap();
        assert_eq!(e.len(), 16);
        for i in 0..e.len() {
            assert!((e[i] + e[e.len() - 1 - i]).abs() < 1e-12);
        }
        assert!((e[0] + 3.0).abs() < 1e-12 && (e[15] - 3.0).abs() < 1e-12);
        for (c, periods) in [([5, 0, -5], 3), ([4, -1, -3], 2), ([6, -1, -5], 1)] {
            let s = sym(c);
            let e = analytic_spectrum(&s, periods, &p).unwrap();
            assert_eq!(e.len() as i64, 2 * s.q * periods);
        }
    }

    #[test]
    fn small_segment_matches() {
        let s = sym([4, -2, -2]);
        let p = BandParams::uniform(1.0, A).unwrap().with_epsilon(0.1);
        let r = compare_spectra(&s, 2, &p, 1e-8).unwrap();
        assert_eq!(r.dimension, 16);
        assert!(r.pass, "max deviation {}", r.max_deviation);
        assert!(compare_spectra(&s, 2, &p, 0.0).is_err());
    }
}
