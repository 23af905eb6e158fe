//! Graphene and single-wall carbon nanotubes in three-axes (Miller index)
//! coordinates.
//!
//! Lattice sites are integer triples `(v0, v1, v2)` with `v0 + v1 + v2` in
//! `{0, 1}`; a nanotube of chirality `c` is the factor space of the lattice
//! modulo `Zc`. On top of that geometry the crate provides the zone-folded
//! tight-binding band structure, band-gap minimization, the metallicity
//! criterion, the axial magnetic-flux response, and an independent check of
//! all of it by explicit diagonalization of a finite tube Hamiltonian.

pub mod bands;
pub mod error;
pub mod geom;
pub mod honeycomb;
mod jacobi;
pub mod minimize;
pub mod oracle;
pub mod tube;

pub use bands::{
    band_gap, band_table, density_of_states, dispersion, gap_vs_beta, gradient, graphene_e,
    in_brillouin, is_metallic, line_k, BandParams, BandTable, GapResult, Histogram, KVector,
    SpecialPoints,
};
pub use error::{Error, Result};
pub use geom::{canonical_coords, embed, inner, CanonicalTriple, PlaneVector};
pub use honeycomb::{
    bond_length_scale, distance, Generator, LatticeSite, SymmetryWord, TranslationVector,
};
pub use jacobi::eigenvalues_hermitian;
pub use oracle::{
    analytic_spectrum, build_finite_tube, build_hamiltonian, compare_spectra, eigenvalues,
    FiniteTube, HermitianMatrix, SpectrumReport,
};
pub use tube::{
    canonical_rep, diameter, ChiralityVector, IrrepGenerator, NodeClass, SymmetryDecomposition,
    TubeClass, TubeSymmetry,
};

/// Absolute tolerance used for geometric identities.
pub const GEOM_TOL: f64 = 1e-12;

/// Carbon-carbon bond length of a graphene sheet, in angstrom.
pub const DEFAULT_BOND_LENGTH: f64 = 1.44;
