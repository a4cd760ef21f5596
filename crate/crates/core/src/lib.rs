//! Exact enumeration of graph superpositions through the algebra of
//! generalized cycle indices.
//!
//! The crate works with subgroups `W` of a symmetric group `S_d` together
//! with one-dimensional characters `χ: W → roots of unity`, and provides
//!
//! * the generalized cycle index `Z(χ) = |W|⁻¹ Σ_σ χ(σ) p₁^{c₁(σ)}⋯p_d^{c_d(σ)}`
//!   as an exact polynomial in the power sums `p₁,…,p_d`,
//! * the internal product `∗` of such polynomials (diagonal in the power-sum
//!   basis, with scale `z_λ`), pairwise and k-fold,
//! * the orbit decomposition of tensor products of induced monomial
//!   representations of `S_d`, including the stabilizer character `ψ` of each
//!   transitive constituent,
//! * superposition counts of multigraphs with prescribed constraints on the
//!   automorphism groups of the superpositions, and
//! * an independent brute-force oracle over tuple similarity classes.
//!
//! All arithmetic is exact: coefficients live in cyclotomic fields
//! `Q(ζ_n)` represented modulo the n-th cyclotomic polynomial, with
//! arbitrary-precision rational coordinates. There is no floating point
//! anywhere, so every equality test in this crate is decidable and every
//! count is certified by at least two independent code paths.
//!
//! The crate is `no_std` (it only needs `alloc`); file formats, JSON
//! rendering, and the command-line surface live in the companion
//! `superpose-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod character;
pub mod cyclo;
pub mod error;
pub mod graph;
pub mod group;
pub mod monomial;
pub mod oracle;
pub mod perm;
pub mod zpoly;

pub use character::{Character, CharacterSpec};
pub use cyclo::CycloNum;
pub use error::Error;
pub use graph::Multigraph;
pub use group::{GroupClassification, PermGroup};
pub use monomial::{CosetSpace, OrbitSummand, ProductSpec};
pub use oracle::TupleOrbitReport;
pub use perm::{CycleType, Permutation};
pub use zpoly::{CycleIndexPoly, VarPoly};

/// Resource bounds shared by the enumeration routines.
///
/// Every bound is a refusal threshold: an operation whose projected size
/// exceeds the relevant limit returns [`Error::BoundExceeded`] instead of a
/// partial answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest permutation degree accepted when constructing groups and
    /// graphs.
    pub max_degree: usize,
    /// Largest group order `close` will fully enumerate.
    pub max_group_order: usize,
    /// Largest orbit space `Π d!/|W_m|` that `decompose` will traverse.
    pub max_orbit_space: usize,
    /// Largest tuple space `(d!)^k` the brute-force oracle will sweep.
    pub max_tuple_space: usize,
    /// Largest number of monomials allowed when expanding into the
    /// variables `x_0,…,x_{t-1}` (that is, `t^d`, and for weighted
    /// inventories `t^d · #summands`).
    pub max_expansion: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 8,
            max_group_order: 40_320,
            max_orbit_space: 1_000_000,
            max_tuple_space: 2_000_000,
            max_expansion: 1_000_000,
        }
    }
}
