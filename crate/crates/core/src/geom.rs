//! The Euclidean plane described by three coherent axes.
//!
//! The unit vectors `e0`, `e1`, `e2` point to the vertices of an equilateral
//! triangle and sum to zero. Every plane vector `v` satisfies
//! `v = sum <v, e_i> e_i`, so the triple of projections (the canonical
//! coordinates) identifies the plane with `{u in R^3 : u0 + u1 + u2 = 0}`.
//! A general triple `(u0, u1, u2)` denotes the vector `sum u_i e_i`; triples
//! differing by `(a, a, a)` denote the same vector.

use std::ops::{Add, Mul, Neg, Sub};

const INV_SQRT6: f64 = 0.408_248_290_463_863_f64;
const INV_SQRT2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// The coherent triad `e0, e1, e2`.
pub const AXES: [PlaneVector; 3] = [
    PlaneVector { x: 2.0 * INV_SQRT6, y: 0.0 },
    PlaneVector { x: -INV_SQRT6, y: INV_SQRT2 },
    PlaneVector { x: -INV_SQRT6, y: -INV_SQRT2 },
];

/// A vector of the plane in Cartesian coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlaneVector {
    pub x: f64,
    pub y: f64,
}

impl PlaneVector {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(&self, other: &PlaneVector) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }
}

impl Add for PlaneVector {
    type Output = PlaneVector;
    fn add(self, rhs: Self) -> Self {
        PlaneVector::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for PlaneVector {
    type Output = PlaneVector;
    fn sub(self, rhs: Self) -> Self {
        PlaneVector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<PlaneVector> for f64 {
    type Output = PlaneVector;
    fn mul(self, rhs: PlaneVector) -> PlaneVector {
        PlaneVector::new(self * rhs.x, self * rhs.y)
    }
}

/// Canonical coordinates: a real triple with zero component sum.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CanonicalTriple(pub [f64; 3]);

impl CanonicalTriple {
    pub const ZERO: CanonicalTriple = CanonicalTriple([0.0; 3]);

    /// Projects an arbitrary triple onto the zero-sum plane by removing the
    /// component mean. The projected triple denotes the same plane vector.
    pub fn from_any(u: [f64; 3]) -> Self {
        let mean = (u[0] + u[1] + u[2]) / 3.0;
        CanonicalTriple([u[0] - mean, u[1] - mean, u[2] - mean])
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn norm(&self) -> f64 {
        inner(&self.0, &self.0).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }
}

impl Add for CanonicalTriple {
    type Output = CanonicalTriple;
    fn add(self, rhs: Self) -> Self {
        CanonicalTriple([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl Sub for CanonicalTriple {
    type Output = CanonicalTriple;
    fn sub(self, rhs: Self) -> Self {
        CanonicalTriple([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1], self.0[2] - rhs.0[2]])
    }
}

impl Neg for CanonicalTriple {
    type Output = CanonicalTriple;
    fn neg(self) -> Self {
        CanonicalTriple([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl Mul<CanonicalTriple> for f64 {
    type Output = CanonicalTriple;
    fn mul(self, rhs: CanonicalTriple) -> CanonicalTriple {
        CanonicalTriple([self * rhs.0[0], self * rhs.0[1], self * rhs.0[2]])
    }
}

/// `(<v, e0>, <v, e1>, <v, e2>)`.
pub fn canonical_coords(v: PlaneVector) -> CanonicalTriple {
    CanonicalTriple([v.dot(&AXES[0]), v.dot(&AXES[1]), v.dot(&AXES[2])])
}

/// `sum u_i e_i` for any real triple.
pub fn embed(u: [f64; 3]) -> PlaneVector {
    AXES.iter()
        .zip(u)
        .fold(PlaneVector::default(), |acc, (e, ui)| acc + ui * *e)
}

/// Scalar product of the plane vectors denoted by two arbitrary triples.
///
/// Computed as `sum (u_i - mean(u)) v_i`; the result does not depend on which
/// representative of either vector is passed.
pub fn inner(u: &[f64; 3], v: &[f64; 3]) -> f64 {
    let mean = (u[0] + u[1] + u[2]) / 3.0;
    (u[0] - mean) * v[0] + (u[1] - mean) * v[1] + (u[2] - mean) * v[2]
}

/// Exact scalar product of two integer triples, at least one with zero sum.
pub(crate) fn inner_int(u: &[i64; 3], v: &[i64; 3]) -> i64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}
