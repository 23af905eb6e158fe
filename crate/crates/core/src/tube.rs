//! Single-wall nanotubes as the factor space `L / Zc`.
//!
//! Rolling the sheet identifies every site `v` with `v + jc`. A class is
//! represented by the unique member whose projection on `c` falls in the
//! window `0 <= <v, c> < ||c||^2`; all arithmetic here is exact integer
//! arithmetic.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geom::inner_int;
use crate::honeycomb::{LatticeSite, TranslationVector};

/// Tube chirality `c`, restricted to `c0 > c1 >= c2` with zero sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChiralityVector([i64; 3]);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TubeClass {
    Armchair,
    Zigzag,
    Chiral,
}

impl TubeClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            TubeClass::Armchair => "armchair",
            TubeClass::Zigzag => "zigzag",
            TubeClass::Chiral => "chiral",
        }
    }
}

impl fmt::Display for TubeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn check_zero_sum(raw: [i64; 3]) -> Result<()> {
    if raw == [0, 0, 0] {
        return Err(Error::ZeroChirality);
    }
    let sum: i64 = raw.iter().sum();
    if sum != 0 {
        return Err(Error::NonzeroSum(sum));
    }
    Ok(())
}

fn in_domain(c: [i64; 3]) -> bool {
    c[0] > c[1] && c[1] >= c[2]
}

impl ChiralityVector {
    /// Accepts a triple that already lies in the domain `c0 > c1 >= c2`.
    pub fn validate(raw: [i64; 3]) -> Result<Self> {
        check_zero_sum(raw)?;
        if !in_domain(raw) {
            return Err(Error::OrderingViolation(raw));
        }
        Ok(ChiralityVector(raw))
    }

    /// Maps a nonzero zero-sum triple into the domain using the twelve signed
    /// coordinate permutations. When several images qualify the
    /// lexicographically largest is returned.
    pub fn canonicalize(raw: [i64; 3]) -> Result<Self> {
        check_zero_sum(raw)?;
        const PERMS: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        PERMS
            .iter()
            .flat_map(|p| [1i64, -1].map(|s| [s * raw[p[0]], s * raw[p[1]], s * raw[p[2]]]))
            .filter(|c| in_domain(*c))
            .max()
            .map(ChiralityVector)
            .ok_or(Error::OrderingViolation(raw))
    }

    pub fn coords(&self) -> [i64; 3] {
        self.0
    }

    pub fn as_f64(&self) -> [f64; 3] {
        self.0.map(|x| x as f64)
    }

    pub fn as_translation(&self) -> TranslationVector {
        TranslationVector(self.0)
    }

    /// `||c||^2`, an integer.
    pub fn norm_sq(&self) -> i64 {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn norm(&self) -> f64 {
        (self.norm_sq() as f64).sqrt()
    }

    pub fn class(&self) -> TubeClass {
        if self.0[1] == self.0[2] {
            TubeClass::Armchair
        } else if self.0[1] == 0 {
            TubeClass::Zigzag
        } else {
            TubeClass::Chiral
        }
    }

    /// All valid chiralities with `c0 <= max_c0`.
    pub fn enumerate(max_c0: i64) -> Vec<ChiralityVector> {
        let mut out = Vec::new();
        for c0 in 1..=max_c0 {
            for c1 in (-c0)..c0 {
                let c2 = -c0 - c1;
                if c1 >= c2 {
                    out.push(ChiralityVector([c0, c1, c2]));
                }
            }
        }
        out
    }
}

impl TryFrom<[i64; 3]> for ChiralityVector {
    type Error = Error;
    fn try_from(raw: [i64; 3]) -> Result<Self> {
        Self::validate(raw)
    }
}

impl fmt::Display for ChiralityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Tube diameter `||c|| a / pi`.
pub fn diameter(c: &ChiralityVector, a: f64) -> f64 {
    c.norm() * a / PI
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd3(v: [i64; 3]) -> i64 {
    gcd(gcd(v[0], v[1]), v[2])
}

/// Derived symmetry data of a tube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TubeSymmetry {
    pub chirality: ChiralityVector,
    /// `gcd(c0, c1, c2)`; `g_{c'}` is a rotation by `2 pi / n`.
    pub n: i64,
    pub c_prime: TranslationVector,
    /// `gcd(c1 - c2, c2 - c0, c0 - c1)`.
    pub r: i64,
    /// Shortest pure translation along the axis.
    pub b: TranslationVector,
    /// `||c||^2 / R`, the number of hexagons per translational cell.
    pub q: i64,
    pub q_prime: i64,
    /// Shortest `w` in `T` with axial projection `b / q'`.
    pub omega: TranslationVector,
}

impl TubeSymmetry {
    pub fn new(c: ChiralityVector) -> Self {
        let cv = c.0;
        let n = gcd3(cv);
        let c_prime = TranslationVector(cv.map(|x| x / n));
        let w = [cv[1] - cv[2], cv[2] - cv[0], cv[0] - cv[1]];
        let r = gcd3(w);
        let b = TranslationVector(w.map(|x| x / r));
        let q = c.norm_sq() / r;
        let q_prime = q / n;
        let omega = shortest_screw(b, c_prime, q_prime);
        TubeSymmetry { chirality: c, n, c_prime, r, b, q, q_prime, omega }
    }

    /// Spacing of the allowed k-lines, `2 pi / (a ||c||)`.
    pub fn delta(&self, a: f64) -> f64 {
        2.0 * PI / (a * self.chirality.norm())
    }

    /// The integer `j` with `b = q' omega + j c'`.
    pub fn b_winding(&self) -> i64 {
        let rest = self.b - self.omega.scale(self.q_prime);
        let cp = self.c_prime.0;
        let i = cp.iter().position(|&x| x != 0).expect("c' is nonzero");
        rest.0[i] / cp[i]
    }

    fn check_class(&self, nc: &NodeClass) -> Result<()> {
        if nc.chirality != self.chirality {
            return Err(Error::InvariantViolation(format!(
                "class of chirality {} used with symmetry data of {}",
                nc.chirality, self.chirality
            )));
        }
        Ok(())
    }

    /// Writes `[v] = tau^p g_omega^s g_{c'}^m [0,0,0]`.
    pub fn decompose(&self, nc: &NodeClass) -> Result<SymmetryDecomposition> {
        self.check_class(nc)?;
        let p = nc.rep.parity();
        let w = if p == 0 { nc.rep.0 } else { nc.rep.tau().0 };
        let bb = self.b.norm_sq();
        let num = self.q_prime * inner_int(&w, &self.b.0);
        if num % bb != 0 {
            return Err(Error::InvariantViolation(format!(
                "axial coordinate of {:?} is not an integer ({num}/{bb})",
                w
            )));
        }
        let s = num / bb;
        let residual = [
            w[0] - s * self.omega.0[0],
            w[1] - s * self.omega.0[1],
            w[2] - s * self.omega.0[2],
        ];
        let t = parallel_multiple(residual, self.c_prime.0).ok_or_else(|| {
            Error::InvariantViolation(format!(
                "residual {residual:?} is not a multiple of c' = {}",
                self.c_prime
            ))
        })?;
        Ok(SymmetryDecomposition { s, m: t.rem_euclid(self.n), p: p as u8 })
    }

    /// Inverse of [`TubeSymmetry::decompose`].
    pub fn compose(&self, d: SymmetryDecomposition) -> Result<NodeClass> {
        if d.m < 0 || d.m >= self.n {
            return Err(Error::OutOfRange { what: "m", value: d.m as f64 });
        }
        if d.p > 1 {
            return Err(Error::OutOfRange { what: "p", value: d.p as f64 });
        }
        let w = self.omega.scale(d.s) + self.c_prime.scale(d.m);
        let v = LatticeSite(w.0);
        let v = if d.p == 1 { v.tau() } else { v };
        Ok(canonical_rep(v, self.chirality))
    }

    /// Character of the one-dimensional irreducible representation `(kappa, m)`
    /// of the group generated by `g_{c'}` and `g_omega`.
    pub fn irrep_character(
        &self,
        m: i64,
        kappa: f64,
        a: f64,
        generator: IrrepGenerator,
    ) -> Result<Complex64> {
        if m < 0 || m >= self.n {
            return Err(Error::OutOfRange { what: "m", value: m as f64 });
        }
        let kappa_max = 2.0 * PI * self.q_prime as f64 / a;
        if !(0.0..kappa_max).contains(&kappa) {
            return Err(Error::OutOfRange { what: "kappa", value: kappa });
        }
        let phase = match generator {
            IrrepGenerator::CPrime => -2.0 * PI * m as f64 / self.n as f64,
            IrrepGenerator::Omega => -kappa * a / self.q_prime as f64,
        };
        Ok(Complex64::from_polar(1.0, phase))
    }
}

/// Generators of the abelian index-two subgroup of the tube group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IrrepGenerator {
    CPrime,
    Omega,
}

/// If `v = t * u` for an integer `t`, returns `t`.
fn parallel_multiple(v: [i64; 3], u: [i64; 3]) -> Option<i64> {
    let i = u.iter().position(|&x| x != 0)?;
    if v[i] % u[i] != 0 {
        return None;
    }
    let t = v[i] / u[i];
    (0..3).all(|k| v[k] == t * u[k]).then_some(t)
}

/// Minimal-norm `w` in `T` with `q' <w, b> = ||b||^2`, ties broken by the
/// lexicographically smallest triple.
///
/// Solutions form the line `w0 + Z c'`, so the shortest one has norm at most
/// `sqrt(||b||^2 / q'^2 + ||c'||^2 / 4)`; for a zero-sum triple every
/// coordinate is bounded by `sqrt(2/3)` times the norm.
fn shortest_screw(b: TranslationVector, c_prime: TranslationVector, q_prime: i64) -> TranslationVector {
    let bb = b.norm_sq();
    let bound_sq = bb as f64 / (q_prime * q_prime) as f64 + c_prime.norm_sq() as f64 / 4.0;
    let mut radius = ((2.0 / 3.0 * bound_sq).sqrt()).ceil() as i64 + 1;
    loop {
        let mut best: Option<(i64, [i64; 3])> = None;
        for x in -radius..=radius {
            for y in -radius..=radius {
                let w = [x, y, -x - y];
                if w[2].abs() > radius || q_prime * inner_int(&w, &b.0) != bb {
                    continue;
                }
                let key = (w.iter().map(|t| t * t).sum::<i64>(), w);
                if best.is_none_or(|bk| key < bk) {
                    best = Some(key);
                }
            }
        }
        if let Some((_, w)) = best {
            return TranslationVector(w);
        }
        radius *= 2;
    }
}

/// A point of the tube: the class `v + Zc` stored by its canonical member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeClass {
    pub rep: LatticeSite,
    pub chirality: ChiralityVector,
}

/// `v - j c` with `j = floor(<v, c> / ||c||^2)`.
pub fn canonical_rep(v: LatticeSite, c: ChiralityVector) -> NodeClass {
    let j = inner_int(&v.0, &c.0).div_euclid(c.norm_sq());
    let rep = LatticeSite([v.0[0] - j * c.0[0], v.0[1] - j * c.0[1], v.0[2] - j * c.0[2]]);
    NodeClass { rep, chirality: c }
}

impl NodeClass {
    pub fn new(v: LatticeSite, c: ChiralityVector) -> Self {
        canonical_rep(v, c)
    }

    /// Classes of the three nearest neighbors `[v^0], [v^1], [v^2]`.
    pub fn neighbors(&self) -> [NodeClass; 3] {
        self.rep.nearest_neighbors().map(|u| canonical_rep(u, self.chirality))
    }

    pub fn next_nearest(&self) -> [NodeClass; 6] {
        self.rep.next_nearest_neighbors().map(|u| canonical_rep(u, self.chirality))
    }

    /// `g_w [v] = [v + w]`.
    pub fn translate(&self, w: TranslationVector) -> NodeClass {
        canonical_rep(self.rep.translate(w), self.chirality)
    }

    /// `tau [v] = [-v + theta]`.
    pub fn tau(&self) -> NodeClass {
        canonical_rep(self.rep.tau(), self.chirality)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetryDecomposition {
    pub s: i64,
    pub m: i64,
    pub p: u8,
}

impl SymmetryDecomposition {
    pub fn new(s: i64, m: i64, p: u8) -> Self {
        Self { s, m, p }
    }
}
