//! Exact combinatorics of inner cohomology degrees for GL(n) of prime
//! rank: weight-lattice tests, exterior-algebra Betti numbers of the
//! relative Lie algebra cohomology, the cuspidal degree window, Dirichlet
//! character groups with exact root-of-unity values, residual-spectrum
//! enumeration, and a per-degree classification report with dimension
//! upper bounds.
//!
//! All arithmetic is exact: rationals are arbitrary-precision fractions
//! and every interval-membership or parity decision is an exact
//! comparison. Every value is immutable after construction and every
//! operation is a pure function.

pub mod arith;
pub mod degree_intervals;
pub mod dirichlet;
pub mod error;
pub mod lie_cohomology;
pub mod rational;
pub mod spectral;
pub mod weight_lattice;

pub use degree_intervals::{
    cusp_bounds, degree_profile, dim_symmetric_space, s0_cusp_overlap, table_row, DegreeProfile,
    TableRow,
};
pub use dirichlet::{
    enumerate_characters, unit_group_structure, CharacterValue, CyclicFactor, DirichletCharacter,
    UnitGroupStructure,
};
pub use error::Error;
pub use lie_cohomology::{
    betti, generator_degrees, oracle_betti, poincare_polynomial, GeneratorDegrees,
    PoincarePolynomial,
};
pub use rational::{rat_from_str, rat_to_string, Rat};
pub use spectral::{
    classify, duality_pairing_check, residual_spectrum, standard_parabolic_shapes, xi0_shapes,
    CohomologyReport, ParabolicShape, ResidualDescriptor, Verdict, RESIDUAL_KERNEL_SYMBOL,
};
pub use weight_lattice::{FundamentalView, Weight};
