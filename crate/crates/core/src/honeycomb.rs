//! The honeycomb lattice as integer triples.
//!
//! `L = {v in Z^3 : v0 + v1 + v2 in {0, 1}}` splits into the triangular
//! sublattice `T` (sum 0) and its shift `T + theta` with `theta = (1, 0, 0)`.
//! The graph distance is the l1 distance of the triples, and the lattice
//! symmetry group is generated by a cyclic shift, a swap and an inversion.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{embed, PlaneVector};

/// Sublattice marker `theta = (1, 0, 0)`.
pub const THETA: [i64; 3] = [1, 0, 0];

/// An atom position of the graphene sheet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeSite(pub(crate) [i64; 3]);

impl LatticeSite {
    pub const ORIGIN: LatticeSite = LatticeSite([0, 0, 0]);

    pub fn new(v0: i64, v1: i64, v2: i64) -> Result<Self> {
        Self::try_from([v0, v1, v2])
    }

    pub fn coords(&self) -> [i64; 3] {
        self.0
    }

    /// Coordinate sum: 0 on `T`, 1 on `T + theta`.
    pub fn parity(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `+1` on `T`, `-1` on `T + theta`.
    pub fn nu(&self) -> i64 {
        if self.parity() == 0 {
            1
        } else {
            -1
        }
    }

    /// `v^0, v^1, v^2`: add `nu(v)` to coordinate `j`.
    pub fn nearest_neighbors(&self) -> [LatticeSite; 3] {
        let nu = self.nu();
        std::array::from_fn(|j| {
            let mut w = self.0;
            w[j] += nu;
            LatticeSite(w)
        })
    }

    pub fn neighbor(&self, j: usize) -> LatticeSite {
        let mut w = self.0;
        w[j] += self.nu();
        LatticeSite(w)
    }

    /// The six sites `v^{ij}` with `i != j`, ordered `01, 02, 10, 12, 20, 21`.
    pub fn next_nearest_neighbors(&self) -> [LatticeSite; 6] {
        const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
        PAIRS.map(|(i, j)| self.neighbor(i).neighbor(j))
    }

    pub fn embed(&self) -> PlaneVector {
        embed(self.0.map(|x| x as f64))
    }

    pub fn translate(&self, t: TranslationVector) -> LatticeSite {
        LatticeSite([self.0[0] + t.0[0], self.0[1] + t.0[1], self.0[2] + t.0[2]])
    }

    pub fn sigma(&self) -> LatticeSite {
        LatticeSite([self.0[1], self.0[2], self.0[0]])
    }

    pub fn rho(&self) -> LatticeSite {
        LatticeSite([self.0[0], self.0[2], self.0[1]])
    }

    pub fn tau(&self) -> LatticeSite {
        LatticeSite([1 - self.0[0], -self.0[1], -self.0[2]])
    }

    /// All sites within graph distance `radius` of `center`.
    pub fn ball(center: LatticeSite, radius: i64) -> Vec<LatticeSite> {
        let mut out = Vec::new();
        for d0 in -radius..=radius {
            for d1 in -radius..=radius {
                for d2 in -radius..=radius {
                    let w = [center.0[0] + d0, center.0[1] + d1, center.0[2] + d2];
                    let s: i64 = w.iter().sum();
                    if (s == 0 || s == 1) && d0.abs() + d1.abs() + d2.abs() <= radius {
                        out.push(LatticeSite(w));
                    }
                }
            }
        }
        out
    }
}

impl TryFrom<[i64; 3]> for LatticeSite {
    type Error = Error;
    fn try_from(v: [i64; 3]) -> Result<Self> {
        match v.iter().sum::<i64>() {
            0 | 1 => Ok(LatticeSite(v)),
            _ => Err(Error::InvalidSite(v)),
        }
    }
}

impl fmt::Display for LatticeSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Graph distance `|v0-u0| + |v1-u1| + |v2-u2|`.
pub fn distance(v: &LatticeSite, u: &LatticeSite) -> i64 {
    (0..3).map(|i| (v.0[i] - u.0[i]).abs()).sum()
}

/// Multiplies lattice position vectors so that a nearest-neighbor bond has
/// the given physical length: `bond * sqrt(6) / 2`.
pub fn bond_length_scale(bond: f64) -> Result<f64> {
    if !bond.is_finite() || bond <= 0.0 {
        return Err(Error::NonPositive { what: "bond length", value: bond });
    }
    Ok(bond * 6f64.sqrt() / 2.0)
}

/// An element of the translation sublattice `T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TranslationVector(pub(crate) [i64; 3]);

impl TranslationVector {
    pub const ZERO: TranslationVector = TranslationVector([0, 0, 0]);

    pub fn new(t0: i64, t1: i64, t2: i64) -> Result<Self> {
        Self::try_from([t0, t1, t2])
    }

    pub fn coords(&self) -> [i64; 3] {
        self.0
    }

    pub fn scale(&self, k: i64) -> TranslationVector {
        TranslationVector(self.0.map(|x| k * x))
    }

    /// Squared Euclidean length of the embedded vector (exact).
    pub fn norm_sq(&self) -> i64 {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn as_f64(&self) -> [f64; 3] {
        self.0.map(|x| x as f64)
    }
}

impl TryFrom<[i64; 3]> for TranslationVector {
    type Error = Error;
    fn try_from(t: [i64; 3]) -> Result<Self> {
        if t.iter().sum::<i64>() == 0 {
            Ok(TranslationVector(t))
        } else {
            Err(Error::InvalidTranslation(t))
        }
    }
}

impl Add for TranslationVector {
    type Output = TranslationVector;
    fn add(self, rhs: Self) -> Self {
        TranslationVector([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl Sub for TranslationVector {
    type Output = TranslationVector;
    fn sub(self, rhs: Self) -> Self {
        TranslationVector([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1], self.0[2] - rhs.0[2]])
    }
}

impl Neg for TranslationVector {
    type Output = TranslationVector;
    fn neg(self) -> Self {
        TranslationVector(self.0.map(|x| -x))
    }
}

impl fmt::Display for TranslationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Generators of the honeycomb symmetry group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `(v0, v1, v2) -> (v1, v2, v0)`
    Sigma,
    /// `(v0, v1, v2) -> (v0, v2, v1)`
    Rho,
    /// `v -> -v + theta`
    Tau,
}

impl Generator {
    pub fn apply(self, v: LatticeSite) -> LatticeSite {
        match self {
            Generator::Sigma => v.sigma(),
            Generator::Rho => v.rho(),
            Generator::Tau => v.tau(),
        }
    }
}

/// A product of generators followed by an optional translation.
///
/// Generators are stored in written order and compose like maps: in
/// `sigma sigma tau` the rightmost `tau` acts first. The translation, if any,
/// is applied after the whole product.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymmetryWord {
    pub generators: Vec<Generator>,
    pub translation: Option<TranslationVector>,
}

impl SymmetryWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(generators: Vec<Generator>) -> Self {
        Self { generators, translation: None }
    }

    pub fn then_translate(mut self, t: TranslationVector) -> Self {
        self.translation = Some(t);
        self
    }

    pub fn apply(&self, v: LatticeSite) -> LatticeSite {
        let w = self.generators.iter().rev().fold(v, |acc, g| g.apply(acc));
        match self.translation {
            Some(t) => w.translate(t),
            None => w,
        }
    }
}

/// Parses words such as `"s2tst"` or `"σ²τστ"`: letters `s`/`σ`, `r`/`ρ`,
/// `t`/`τ`, each optionally followed by an exponent.
impl FromStr for SymmetryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut generators = Vec::new();
        let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
        while let Some(ch) = chars.next() {
            let g = match ch {
                's' | 'σ' => Generator::Sigma,
                'r' | 'ρ' | 'ϱ' => Generator::Rho,
                't' | 'τ' => Generator::Tau,
                other => return Err(Error::UnknownGenerator(other)),
            };
            let mut exp = 0usize;
            let mut seen_digit = false;
            while let Some(&d) = chars.peek() {
                let digit = match d {
                    '0'..='9' => d as usize - '0' as usize,
                    '²' => 2,
                    '³' => 3,
                    _ => break,
                };
                exp = exp * 10 + digit;
                seen_digit = true;
                chars.next();
            }
            let reps = if seen_digit { exp } else { 1 };
            generators.extend(std::iter::repeat_n(g, reps));
        }
        Ok(SymmetryWord::new(generators))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn site(v: [i64; 3]) -> LatticeSite {
        LatticeSite::try_from(v).unwrap()
    }

    #[test]
    fn nu_examples() {
        assert_eq!(site([0, 0, 0]).nu(), 1);
        assert_eq!(site([1, 0, 0]).nu(), -1);
        assert_eq!(site([-2, 1, 1]).nu(), 1);
    }

    #[test]
    fn invalid_site_rejected() {
        assert_eq!(LatticeSite::new(1, 1, 0), Err(Error::InvalidSite([1, 1, 0])));
        assert!(LatticeSite::new(-1, 0, 0).is_err());
    }

    #[test]
    fn nearest_neighbor_examples() {
        assert_eq!(
            site([0, 0, 0]).nearest_neighbors(),
            [site([1, 0, 0]), site([0, 1, 0]), site([0, 0, 1])]
        );
        assert_eq!(
            site([1, 0, 0]).nearest_neighbors(),
            [site([0, 0, 0]), site([1, -1, 0]), site([1, 0, -1])]
        );
        assert_eq!(
            site([0, 1, 0]).nearest_neighbors(),
            [site([-1, 1, 0]), site([0, 0, 0]), site([0, 1, -1])]
        );
    }

    #[test]
    fn next_nearest_of_origin() {
        let expected = [[1, -1, 0], [1, 0, -1], [-1, 1, 0], [0, 1, -1], [-1, 0, 1], [0, -1, 1]]
            .map(site);
        assert_eq!(site([0, 0, 0]).next_nearest_neighbors(), expected);
    }

    #[test]
    fn neighbor_index_identities() {
        for v in LatticeSite::ball(LatticeSite::ORIGIN, 3) {
            for i in 0..3 {
                assert_eq!(v.neighbor(i).neighbor(i), v);
                for j in 0..3 {
                    for l in 0..3 {
                        assert_eq!(
                            v.neighbor(i).neighbor(j).neighbor(l),
                            v.neighbor(l).neighbor(j).neighbor(i)
                        );
                    }
                }
            }
            let nnn = v.next_nearest_neighbors();
            for (a, x) in nnn.iter().enumerate() {
                assert_eq!(x.parity(), v.parity());
                assert_eq!(distance(&v, x), 2);
                assert!(nnn[a + 1..].iter().all(|y| y != x));
            }
        }
    }

    #[test]
    fn distance_examples() {
        let o = site([0, 0, 0]);
        assert_eq!(distance(&o, &o), 0);
        assert_eq!(distance(&o, &site([1, 0, 0])), 1);
        assert_eq!(distance(&o, &site([1, -1, 0])), 2);
    }

    #[test]
    fn generator_examples() {
        assert_eq!(Generator::Sigma.apply(site([1, 0, 0])), site([0, 0, 1]));
        assert_eq!(Generator::Tau.apply(site([0, 0, 0])), site([1, 0, 0]));
        let w: SymmetryWord = "σ²τστ".parse().unwrap();
        assert_eq!(w.generators.len(), 5);
        assert_eq!(w.apply(site([5, -2, -2])), site([4, -1, -2]));
    }

    #[test]
    fn word_parsing() {
        let a: SymmetryWord = "s2tst".parse().unwrap();
        let b: SymmetryWord = "σ²τστ".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!("".parse::<SymmetryWord>().unwrap(), SymmetryWord::identity());
        assert_eq!("sx".parse::<SymmetryWord>(), Err(Error::UnknownGenerator('x')));
        let t = TranslationVector::new(1, -1, 0).unwrap();
        let w = SymmetryWord::identity().then_translate(t);
        assert_eq!(w.apply(site([0, 0, 0])), site([1, -1, 0]));
    }

    #[test]
    fn bond_length_scale_examples() {
        let a = bond_length_scale(1.44).unwrap();
        assert!((a - 1.763_632_615).abs() < 1e-9);
        assert!((bond_length_scale(2.0 / 6f64.sqrt()).unwrap() - 1.0).abs() < 1e-15);
        let bond = a * site([1, 0, 0]).embed().norm();
        assert!((bond - 1.44).abs() < 1e-12);
        assert!(bond_length_scale(0.0).is_err());
        assert!(bond_length_scale(-1.0).is_err());
    }

    #[test]
    fn translation_requires_zero_sum() {
        assert!(TranslationVector::new(1, 0, 0).is_err());
        assert_eq!(TranslationVector::new(2, -1, -1).unwrap().norm_sq(), 6);
    }
}
