//! Tight-binding pi bands of graphene and their zone folding onto nanotubes.
//!
//! Wave vectors are zero-sum triples `k` in units of inverse length; the Bloch
//! phase of a site `v` is `<k, v> a`. For hoppings `gamma_j` and on-site energy
//! `epsilon` the two bands are `epsilon +- |sum_j gamma_j exp(i k_j a)|`.
//!
//! A tube of chirality `c` only admits `k` with `<k, c> in (2 pi / a) Z`: a
//! family of parallel lines orthogonal to `c`. Line `m` (`0 <= m < n`) is
//! parametrized by `kappa in [0, 2 pi q' / a)` through `<k, omega> = kappa / q'`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geom::{inner, CanonicalTriple};
use crate::minimize::golden_section;
use crate::tube::{ChiralityVector, TubeSymmetry};

/// A wave vector; components sum to zero.
pub type KVector = CanonicalTriple;

/// Parameters of the nearest-neighbor Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandParams {
    pub epsilon: f64,
    pub hoppings: [Complex64; 3],
    /// Lattice scale: multiplies lattice position vectors to give lengths.
    pub a: f64,
    /// Common hopping magnitude `gamma`.
    pub gamma_scale: f64,
    /// Wave-vector offset equivalent to the hopping phases: for the magnetic
    /// hoppings the bands are the uniform ones evaluated at `k + flux_shift`.
    pub flux_shift: [f64; 3],
}

impl BandParams {
    /// `gamma_0 = gamma_1 = gamma_2 = gamma`, `epsilon = 0`.
    pub fn uniform(gamma: f64, a: f64) -> Result<Self> {
        check_positive("gamma", gamma)?;
        check_positive("a", a)?;
        Ok(BandParams {
            epsilon: 0.0,
            hoppings: [Complex64::new(gamma, 0.0); 3],
            a,
            gamma_scale: gamma,
            flux_shift: [0.0; 3],
        })
    }

    /// Arbitrary complex hoppings.
    pub fn new(epsilon: f64, hoppings: [Complex64; 3], a: f64) -> Result<Self> {
        check_positive("a", a)?;
        let gamma_scale = hoppings.iter().map(|g| g.norm()).fold(0.0, f64::max);
        Ok(BandParams { epsilon, hoppings, a, gamma_scale, flux_shift: [0.0; 3] })
    }

    /// Hoppings `gamma exp(i beta c_j a)` for an axial magnetic field of
    /// strength `beta`.
    pub fn magnetic(gamma: f64, beta: f64, c: &ChiralityVector, a: f64) -> Result<Self> {
        let mut p = Self::uniform(gamma, a)?;
        let cf = c.as_f64();
        p.hoppings = cf.map(|cj| Complex64::from_polar(gamma, beta * cj * a));
        p.flux_shift = cf.map(|x| beta * x);
        Ok(p)
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    /// `sum_j gamma_j exp(i k_j a)` for any real triple.
    pub fn structure_factor(&self, k: &[f64; 3]) -> Complex64 {
        (0..3)
            .map(|j| self.hoppings[j] * Complex64::from_polar(1.0, k[j] * self.a))
            .sum()
    }
}

/// Free-function form of [`BandParams::magnetic`].
pub fn magnetic_params(gamma: f64, beta: f64, c: &ChiralityVector, a: f64) -> Result<BandParams> {
    BandParams::magnetic(gamma, beta, c, a)
}

fn check_positive(what: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositive { what, value })
    }
}

/// `(E_-(k), E_+(k))`.
pub fn dispersion(k: &KVector, p: &BandParams) -> (f64, f64) {
    let mag = p.structure_factor(&k.0).norm();
    (p.epsilon - mag, p.epsilon + mag)
}

/// Uniform graphene band `E(k) = gamma |sum_j exp(i k_j a)|`, defined for any
/// real triple. It is `2 pi / a` periodic in each coordinate and invariant
/// under `k -> k + (t, t, t)`.
pub fn graphene_e(k: &[f64; 3], gamma: f64, a: f64) -> f64 {
    let s: Complex64 = k.iter().map(|kj| Complex64::from_polar(1.0, kj * a)).sum();
    gamma * s.norm()
}

/// Closed first Brillouin zone: `|k_i| <= 2 pi / (3a)` for every `i`.
pub fn in_brillouin(k: &KVector, a: f64) -> bool {
    let bound = 2.0 * PI / (3.0 * a);
    let slack = bound * 1e-12;
    k.0.iter().all(|x| x.abs() <= bound + slack)
}

/// Center, corners and edge midpoints of the Brillouin zone.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialPoints {
    pub gamma: KVector,
    /// Zeros of `E` (`+-` pairs listed consecutively).
    pub k: [KVector; 6],
    /// Saddle points of `E`.
    pub m: [KVector; 6],
}

impl SpecialPoints {
    pub fn new(a: f64) -> Self {
        let t = 2.0 * PI / (3.0 * a);
        let h = PI / (3.0 * a);
        let pm = |v: [f64; 3]| [CanonicalTriple(v), CanonicalTriple(v.map(|x| -x))];
        let [k0, k1] = pm([t, -t, 0.0]);
        let [k2, k3] = pm([t, 0.0, -t]);
        let [k4, k5] = pm([0.0, t, -t]);
        let [m0, m1] = pm([t, -h, -h]);
        let [m2, m3] = pm([-h, t, -h]);
        let [m4, m5] = pm([-h, -h, t]);
        SpecialPoints {
            gamma: CanonicalTriple::ZERO,
            k: [k0, k1, k2, k3, k4, k5],
            m: [m0, m1, m2, m3, m4, m5],
        }
    }

    /// Looks up `G`, `K` or `M` (first listed representative).
    pub fn by_label(&self, label: &str) -> Option<KVector> {
        match label {
            "G" | "g" | "Γ" => Some(self.gamma),
            "K" | "k" => Some(self.k[0]),
            "M" | "m" => Some(self.m[0]),
            _ => None,
        }
    }
}

/// Gradient of `E_+(k)` with respect to `k`, projected onto the zero-sum
/// plane. `E` is not differentiable at its zeros.
pub fn gradient(k: &KVector, p: &BandParams) -> Result<CanonicalTriple> {
    let f = p.structure_factor(&k.0);
    let mag = f.norm();
    if mag <= 1e-12 * p.gamma_scale.max(f64::MIN_POSITIVE) {
        return Err(Error::SingularPoint(k.0));
    }
    let i = Complex64::i();
    let g: [f64; 3] = std::array::from_fn(|j| {
        let df = i * p.a * p.hoppings[j] * Complex64::from_polar(1.0, k.0[j] * p.a);
        (f.conj() * df).re / mag
    });
    Ok(CanonicalTriple::from_any(g))
}

/// Length of the `kappa` range of one line, `2 pi q' / a`.
pub fn kappa_period(sym: &TubeSymmetry, a: f64) -> f64 {
    2.0 * PI * sym.q_prime as f64 / a
}

/// Point of the line `<k, c> = 2 pi m / a` with `<k, omega> = kappa / q'`,
/// without range checks; `m` and `kappa` may be any reals.
pub(crate) fn line_point(sym: &TubeSymmetry, m: f64, kappa: f64, a: f64) -> KVector {
    let c = sym.chirality.as_f64();
    let b = sym.b.as_f64();
    let cc = sym.chirality.norm_sq() as f64;
    let bb = sym.b.norm_sq() as f64;
    let c_omega = inner(&c, &sym.omega.as_f64());
    let alpha = 2.0 * PI * m / (a * cc);
    let beta = (kappa - sym.q_prime as f64 * alpha * c_omega) / bb;
    CanonicalTriple([
        alpha * c[0] + beta * b[0],
        alpha * c[1] + beta * b[1],
        alpha * c[2] + beta * b[2],
    ])
}

/// The wave vector labelled by `(m, kappa)`: the unique `k` in the plane with
/// `<k, c> = 2 pi m / a` and `<k, omega> = kappa / q'`.
pub fn line_k(sym: &TubeSymmetry, m: i64, kappa: f64, a: f64) -> Result<KVector> {
    if m < 0 || m >= sym.n {
        return Err(Error::OutOfRange { what: "m", value: m as f64 });
    }
    if !(0.0..kappa_period(sym, a)).contains(&kappa) {
        return Err(Error::OutOfRange { what: "kappa", value: kappa });
    }
    Ok(line_point(sym, m as f64, kappa, a))
}

/// `(m, kappa)` label of an arbitrary zero-sum `k`, if `k` lies on an allowed
/// line (to within `1e-9` of an integer line index).
pub(crate) fn line_label(sym: &TubeSymmetry, k: &KVector, a: f64) -> Option<(i64, f64)> {
    let line = inner(&k.0, &sym.chirality.as_f64()) * a / (2.0 * PI);
    let nearest = line.round();
    if (line - nearest).abs() > 1e-9 {
        return None;
    }
    let m = (nearest as i64).rem_euclid(sym.n);
    let period = kappa_period(sym, a);
    let kappa = (sym.q_prime as f64 * inner(&k.0, &sym.omega.as_f64())).rem_euclid(period);
    // rem_euclid can round up to exactly `period`
    let kappa = if kappa >= period { 0.0 } else { kappa };
    Some((m, kappa))
}

/// Labels of the Dirac points that fall on allowed lines, taking the flux
/// offset of `p` into account. Equivalent points are reported once.
pub(crate) fn dirac_labels(sym: &TubeSymmetry, p: &BandParams) -> Vec<(i64, f64)> {
    let period = kappa_period(sym, p.a);
    let mut out: Vec<(i64, f64)> = Vec::new();
    for kp in SpecialPoints::new(p.a).k {
        let shifted = CanonicalTriple::from_any([
            kp.0[0] - p.flux_shift[0],
            kp.0[1] - p.flux_shift[1],
            kp.0[2] - p.flux_shift[2],
        ]);
        if let Some((m, kappa)) = line_label(sym, &shifted, p.a) {
            let dup = out.iter().any(|&(m2, k2)| {
                let d = (kappa - k2).abs();
                m2 == m && d.min(period - d) < 1e-9 * period
            });
            if !dup {
                out.push((m, kappa));
            }
        }
    }
    out
}

/// Sampled conduction and valence `m`-bands of a tube.
#[derive(Debug, Clone, PartialEq)]
pub struct BandTable {
    pub chirality: ChiralityVector,
    pub m: i64,
    pub kappa: Vec<f64>,
    pub e_minus: Vec<f64>,
    pub e_plus: Vec<f64>,
    /// How many of the rows are exact Dirac-point projections.
    pub injected: usize,
}

impl BandTable {
    pub fn len(&self) -> usize {
        self.kappa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kappa.is_empty()
    }
}

/// Samples line `m` on a uniform `kappa` grid of `samples` points, plus the
/// exact `kappa` of every Dirac point lying on the line. Rows are sorted by
/// `kappa`.
pub fn band_table(sym: &TubeSymmetry, m: i64, samples: usize, p: &BandParams) -> Result<BandTable> {
    if samples < 2 {
        return Err(Error::OutOfRange { what: "samples", value: samples as f64 });
    }
    if m < 0 || m >= sym.n {
        return Err(Error::OutOfRange { what: "m", value: m as f64 });
    }
    let period = kappa_period(sym, p.a);
    let mut kappas: Vec<f64> = (0..samples).map(|i| period * i as f64 / samples as f64).collect();
    let extra: Vec<f64> = dirac_labels(sym, p)
        .into_iter()
        .filter(|&(mm, _)| mm == m)
        .map(|(_, kappa)| kappa)
        .collect();
    let injected = extra.len();
    kappas.extend(extra);
    kappas.sort_by(f64::total_cmp);

    let (e_minus, e_plus) = kappas
        .iter()
        .map(|&kappa| dispersion(&line_point(sym, m as f64, kappa, p.a), p))
        .unzip();
    Ok(BandTable { chirality: sym.chirality, m, kappa: kappas, e_minus, e_plus, injected })
}

/// Band gap of a tube.
#[derive(Debug, Clone, PartialEq)]
pub struct GapResult {
    pub gap: f64,
    pub argmin_k: KVector,
    pub argmin_m: i64,
    pub argmin_kappa: f64,
    /// `c0 - c1` divisible by 3.
    pub metallic_by_theorem: bool,
}

/// Default number of `kappa` samples per line for gap searches.
pub const DEFAULT_RESOLUTION: usize = 4096;

/// `E_+ - E_-` minimized over all allowed lines.
///
/// Each line is scanned on a uniform grid of `resolution` points, the best
/// grid bracket of every line is refined by golden-section search down to a
/// width of `1e-10` of the line period, and the exact Dirac-point projections
/// are evaluated directly so that metallic tubes report a gap at rounding
/// level rather than at grid level.
pub fn band_gap(sym: &TubeSymmetry, p: &BandParams, resolution: usize) -> Result<GapResult> {
    if resolution < 64 {
        return Err(Error::OutOfRange { what: "resolution", value: resolution as f64 });
    }
    let a = p.a;
    let period = kappa_period(sym, a);
    let step = period / resolution as f64;
    let half_gap = |m: i64, kappa: f64| p.structure_factor(&line_point(sym, m as f64, kappa, a).0).norm();

    // (value, m, kappa)
    let mut best = (f64::INFINITY, 0i64, 0.0f64);
    for m in 0..sym.n {
        let (imin, vmin) = (0..resolution)
            .map(|i| (i, half_gap(m, step * i as f64)))
            .fold((0, f64::INFINITY), |acc, x| if x.1 < acc.1 { x } else { acc });
        let centre = step * imin as f64;
        let refined = golden_section(|x| half_gap(m, x), centre - step, centre + step, 1e-10 * period);
        let (val, kappa) =
            if refined.fmin < vmin { (refined.fmin, refined.xmin) } else { (vmin, centre) };
        if val < best.0 {
            best = (val, m, kappa);
        }
    }
    for (m, kappa) in dirac_labels(sym, p) {
        let val = half_gap(m, kappa);
        if val < best.0 {
            best = (val, m, kappa);
        }
    }

    let (val, m, kappa) = best;
    let kappa = kappa.rem_euclid(period);
    let kappa = if kappa >= period { 0.0 } else { kappa };
    Ok(GapResult {
        gap: 2.0 * val,
        argmin_k: line_point(sym, m as f64, kappa, a),
        argmin_m: m,
        argmin_kappa: kappa,
        metallic_by_theorem: is_metallic(&sym.chirality),
    })
}

/// Conductor iff `c0 - c1` is a multiple of 3.
pub fn is_metallic(c: &ChiralityVector) -> bool {
    let v = c.coords();
    (v[0] - v[1]).rem_euclid(3) == 0
}

/// `(beta, gap)` for each flux strength in `betas`.
pub fn gap_vs_beta(
    sym: &TubeSymmetry,
    gamma: f64,
    a: f64,
    betas: &[f64],
    resolution: usize,
) -> Result<Vec<(f64, f64)>> {
    betas
        .iter()
        .map(|&beta| {
            let p = BandParams::magnetic(gamma, beta, &sym.chirality, a)?;
            Ok((beta, band_gap(sym, &p, resolution)?.gap))
        })
        .collect()
}

/// One flux period in `beta`: `2 pi / (a ||c||^2)`.
pub fn flux_period(c: &ChiralityVector, a: f64) -> f64 {
    2.0 * PI / (a * c.norm_sq() as f64)
}

/// Energy histogram over equal-width bins.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub lo: f64,
    pub hi: f64,
    pub counts: Vec<usize>,
}

impl Histogram {
    pub fn bin_width(&self) -> f64 {
        if self.counts.is_empty() {
            0.0
        } else {
            (self.hi - self.lo) / self.counts.len() as f64
        }
    }

    pub fn centers(&self) -> Vec<f64> {
        let w = self.bin_width();
        (0..self.counts.len()).map(|i| self.lo + (i as f64 + 0.5) * w).collect()
    }

    /// Counts divided by bin width; integrates to the number of states.
    pub fn density(&self) -> Vec<f64> {
        let w = self.bin_width();
        self.counts.iter().map(|&n| n as f64 / w).collect()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Histogram of every sampled `E_-` and `E_+` value in `tables`.
pub fn density_of_states(tables: &[BandTable], bins: usize) -> Result<Histogram> {
    if bins == 0 {
        return Err(Error::OutOfRange { what: "bins", value: 0.0 });
    }
    let values: Vec<f64> = tables
        .iter()
        .flat_map(|t| t.e_minus.iter().chain(&t.e_plus).copied())
        .collect();
    if values.is_empty() {
        return Ok(Histogram { lo: 0.0, hi: 0.0, counts: Vec::new() });
    }
    let mut lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let mut hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if hi - lo <= f64::EPSILON * lo.abs().max(1.0) {
        lo -= 0.5;
        hi += 0.5;
    }
    let mut counts = vec![0usize; bins];
    let w = (hi - lo) / bins as f64;
    for v in values {
        let idx = (((v - lo) / w) as usize).min(bins - 1);
        counts[idx] += 1;
    }
    Ok(Histogram { lo, hi, counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: f64 = 1.763_632_614_803_888_6;

    fn sym(c: [i64; 3]) -> TubeSymmetry {
        TubeSymmetry::new(ChiralityVector::validate(c).unwrap())
    }

    fn uniform() -> BandParams {
        BandParams::uniform(1.0, A).unwrap()
    }

    /// The closed form with cosines, used as an independent route.
    fn cosine_form(k: &[f64; 3], gamma: f64, a: f64) -> f64 {
        let s = 3.0
            + 2.0 * ((k[0] - k[1]) * a).cos()
            + 2.0 * ((k[1] - k[2]) * a).cos()
            + 2.0 * ((k[2] - k[0]) * a).cos();
        gamma * s.max(0.0).sqrt()
    }

    #[test]
    fn dispersion_examples() {
        let p = uniform();
        let (lo, hi) = dispersion(&KVector::ZERO, &p);
        assert!((lo + 3.0).abs() < 1e-12 && (hi - 3.0).abs() < 1e-12);
        let t = 2.0 * PI / (3.0 * A);
        let (lo, hi) = dispersion(&CanonicalTriple([t, -t, 0.0]), &p);
        assert!(lo.abs() < 1e-12 && hi.abs() < 1e-12);
        let (lo, hi) = dispersion(&CanonicalTriple([PI / A, -PI / A, 0.0]), &p);
        assert!((lo + 1.0).abs() < 1e-12 && (hi - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dispersion_with_onsite_energy() {
        let p = uniform().with_epsilon(0.25);
        let (lo, hi) = dispersion(&KVector::ZERO, &p);
        assert!((lo + 2.75).abs() < 1e-12 && (hi - 3.25).abs() < 1e-12);
    }

    #[test]
    fn graphene_e_periodic_extension() {
        let k = [0.31, -1.2, 0.77];
        let e = graphene_e(&k, 1.0, A);
        let p = 2.0 * PI / A;
        assert!((graphene_e(&[k[0] + p, k[1], k[2]], 1.0, A) - e).abs() < 1e-12);
        assert!((graphene_e(&[k[0], k[1] - p, k[2]], 1.0, A) - e).abs() < 1e-12);
        assert!((graphene_e(&[k[0] + 0.4, k[1] + 0.4, k[2] + 0.4], 1.0, A) - e).abs() < 1e-12);
        assert!((cosine_form(&k, 1.0, A) - e).abs() < 1e-12);
        let h = PI / (3.0 * A);
        assert!((graphene_e(&[2.0 * h, -h, -h], 1.0, A) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn brillouin_membership() {
        let t = 2.0 * PI / (3.0 * A);
        assert!(in_brillouin(&KVector::ZERO, A));
        assert!(in_brillouin(&CanonicalTriple([t, -t, 0.0]), A));
        assert!(!in_brillouin(&CanonicalTriple([PI / A, -PI / A, 0.0]), A));
    }

    #[test]
    fn special_point_energies() {
        let sp = SpecialPoints::new(A);
        for k in sp.k {
            assert!(graphene_e(&k.0, 1.0, A) < 1e-12);
            assert!(in_brillouin(&k, A));
        }
        assert_eq!(graphene_e(&sp.gamma.0, 1.0, A), 3.0);
        for m in sp.m {
            assert!((graphene_e(&m.0, 1.0, A) - 1.0).abs() < 1e-12);
            assert!(in_brillouin(&m, A));
        }
        assert_eq!(sp.by_label("K"), Some(sp.k[0]));
        assert_eq!(sp.by_label("X"), None);
    }

    #[test]
    fn gradient_vanishes_at_stationary_points() {
        let p = uniform();
        let sp = SpecialPoints::new(A);
        assert!(gradient(&sp.gamma, &p).unwrap().max_abs() < 1e-12);
        for m in sp.m {
            assert!(gradient(&m, &p).unwrap().max_abs() < 1e-12);
        }
        for k in sp.k {
            assert!(matches!(gradient(&k, &p), Err(Error::SingularPoint(_))));
        }
    }

    #[test]
    fn gradient_matches_sine_formula() {
        let p = uniform();
        let k = CanonicalTriple([0.4, -0.15, -0.25]);
        let g = gradient(&k, &p).unwrap();
        let s = |x: f64| (x * A).sin();
        let root = cosine_form(&k.0, 1.0, A);
        let (k0, k1, k2) = (k.0[0], k.0[1], k.0[2]);
        let d0 = (-A * s(k0 - k1) + A * s(k2 - k0)) / root;
        let d1 = (-A * s(k1 - k2) + A * s(k0 - k1)) / root;
        let d2 = (-A * s(k2 - k0) + A * s(k1 - k2)) / root;
        for (x, y) in g.0.iter().zip([d0, d1, d2]) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn line_k_examples() {
        let s = sym([4, -2, -2]);
        assert_eq!(line_k(&s, 0, 0.0, A).unwrap(), KVector::ZERO);
        let c = s.chirality.as_f64();
        for (m, kappa) in [(1, 0.3), (0, 5.1), (1, 7.0)] {
            let k = line_k(&s, m, kappa, A).unwrap();
            assert!(k.sum().abs() < 1e-12);
            let line = inner(&k.0, &c) * A / (2.0 * PI);
            assert!((line - m as f64).abs() < 1e-12);
            let w = inner(&k.0, &s.omega.as_f64()) * s.q_prime as f64;
            assert!((w - kappa).abs() < 1e-12);
        }
        assert!(line_k(&s, 2, 0.0, A).is_err());
        assert!(line_k(&s, 0, kappa_period(&s, A), A).is_err());
        assert!(line_k(&s, 0, -1e-9, A).is_err());
    }

    #[test]
    fn dirac_points_on_armchair_lines() {
        let s = sym([4, -2, -2]);
        let labels = dirac_labels(&s, &uniform());
        assert_eq!(labels.len(), 2);
        for (m, kappa) in labels {
            let k = line_k(&s, m, kappa, A).unwrap();
            assert!(graphene_e(&k.0, 1.0, A) < 1e-12);
        }
        assert!(dirac_labels(&sym([5, 0, -5]), &uniform()).is_empty());
    }

    #[test]
    fn band_table_armchair() {
        let s = sym([4, -2, -2]);
        let p = uniform();
        let tables: Vec<_> = (0..s.n).map(|m| band_table(&s, m, 128, &p).unwrap()).collect();
        assert_eq!(tables.len(), 2);
        let zero = tables.iter().any(|t| t.e_plus.iter().any(|e| e.abs() < 1e-9));
        assert!(zero);
        for t in &tables {
            assert_eq!(t.len(), 128 + t.injected);
            assert!(t.kappa.windows(2).all(|w| w[0] <= w[1]));
            for (lo, hi) in t.e_minus.iter().zip(&t.e_plus) {
                assert!(*hi >= 0.0 && *lo <= 0.0);
                assert!(*hi <= 3.0 + 1e-12 && *lo >= -3.0 - 1e-12);
            }
        }
        assert!(band_table(&s, 0, 1, &p).is_err());
        assert!(band_table(&s, 2, 16, &p).is_err());
    }

    #[test]
    fn gap_examples() {
        let p = uniform();
        let g = band_gap(&sym([4, -2, -2]), &p, DEFAULT_RESOLUTION).unwrap();
        assert!(g.gap < 1e-9 && g.metallic_by_theorem);
        let g = band_gap(&sym([5, 0, -5]), &p, DEFAULT_RESOLUTION).unwrap();
        assert!(!g.metallic_by_theorem);
        assert!((g.gap - 0.763_932_022_500_210_2).abs() < 1e-6);
        assert!((g.gap - 2.0 * graphene_e(&g.argmin_k.0, 1.0, A)).abs() < 1e-12);
        let g = band_gap(&sym([4, -1, -3]), &p, DEFAULT_RESOLUTION).unwrap();
        assert!(g.gap > 1e-3 && !g.metallic_by_theorem);
        assert!(band_gap(&sym([4, -1, -3]), &p, 63).is_err());
    }

    #[test]
    fn metallic_predicate() {
        let m = |c| is_metallic(&ChiralityVector::validate(c).unwrap());
        assert!(m([4, -2, -2]));
        assert!(!m([5, 0, -5]));
        assert!(!m([4, -1, -3]));
    }

    #[test]
    fn magnetic_zero_flux_is_uniform() {
        let c = ChiralityVector::validate([4, -1, -3]).unwrap();
        let p = magnetic_params(1.0, 0.0, &c, A).unwrap();
        assert_eq!(p, uniform());
    }

    #[test]
    fn density_of_states_mass_and_support() {
        let s = sym([5, 0, -5]);
        let p = uniform();
        let tables: Vec<_> = (0..s.n).map(|m| band_table(&s, m, 100, &p).unwrap()).collect();
        let samples: usize = tables.iter().map(|t| t.len()).sum();
        let h = density_of_states(&tables, 40).unwrap();
        assert_eq!(h.total(), 2 * samples);
        assert!(h.lo >= -3.0 - 1e-12 && h.hi <= 3.0 + 1e-12);
        let integral: f64 = h.density().iter().map(|d| d * h.bin_width()).sum();
        assert!((integral - (2 * samples) as f64).abs() < 1e-9);
        let empty = density_of_states(&[], 10).unwrap();
        assert!(empty.counts.is_empty());
        assert!(density_of_states(&tables, 0).is_err());
    }
}
