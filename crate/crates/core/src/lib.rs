//! Fusion-ring combinatorics of the free unitary quantum group `U_n^+`.
//!
//! Irreducible representations of `U_n^+` are labelled by words in two
//! letters, `a` for the fundamental representation and `b` for its
//! conjugate. The fusion ring is free on the two letters, and swapping
//! them is a ring automorphism. This crate works with
//!
//! - words, the letter swap and star classes ([`word`]),
//! - the free ring with rational coefficients ([`poly`]),
//! - fusion rules, dimensions and graded freeness ([`fusion`]),
//! - the swap-invariant subalgebra in its star basis ([`invariant`]),
//! - the degree-by-degree generation test, the product graph and its
//!   black/white invariant ([`fingen`]),
//! - the decategorified equivariantization and its surjection onto the
//!   invariants ([`equivariant`]),
//! - actions on irreducibles and orbit finiteness ([`orbit`]),
//!
//! with exact integer and rational arithmetic throughout ([`linalg`]).

pub mod equivariant;
pub mod fingen;
pub mod fusion;
pub mod invariant;
pub mod linalg;
pub mod orbit;
pub mod poly;
pub mod verify;
pub mod word;

pub use equivariant::{check_surjectivity_onto_invariants, forget, induce, EquivariantClass, Sign};
pub use fingen::{
    build_graph, bw_invariant, degree_generated, finite_generation_scan, verify_hypercube_iso,
    verify_pair_reduction, Budget, FingenError, GenerationReport, HypercubeGraph,
};
pub use fusion::{
    character_product, dim, fuse, haar_pairing, leading_part, DimensionTable, FusionElement,
    FusionError,
};
pub use invariant::{
    express_in_star_basis, graded_component, is_invariant, star_element, star_product,
    InvariantError, StarVector,
};
pub use orbit::{
    compact_action_check, orbit, verify_fusion_compatible, IrrPermutation, OrbitError, OrbitReport,
};
pub use poly::{free_multiply, gamma_poly, FreePoly};
pub use word::{dual, gamma, star_class, Letter, StarClass, Word, WordError};
