//! Finite-field rank-gap reductions.
//!
//! Two pipelines turn a hard source problem into a linear subspace of
//! symmetric matrices that contains a rank-one member exactly when the source
//! is satisfiable:
//!
//! * the *superposition* pipeline maps 3-CNF formulas to a subspace over
//!   GF(2) (or GF(2^r)) via a constant-free polynomial system and its
//!   multiplicative quadratic closure ([`superposition`]);
//! * the *direct* pipeline maps Boolean quadratic systems over any GF(q) to a
//!   pseudo-moment subspace with localizing constraints ([`moment`]).
//!
//! Subspaces are stored in equal-union quotient coordinates
//! ([`subspace::SubspaceSpec`]). The constructive steps used to argue about
//! them are available as code: symmetric rank-one decomposition and rank
//! descent ([`linalg`]), the moment-matrix decoder ([`decoder`]), and
//! brute-force oracles for small instances ([`oracles`]).

pub mod boolalg;
pub mod cli;
pub mod corpus;
pub mod decoder;
pub mod error;
pub mod frontends;
pub mod gf;
pub mod instance;
pub mod linalg;
pub mod moment;
pub mod oracles;
pub mod subspace;
pub mod superposition;

pub use boolalg::{MonomialBasis, SquarefreePoly, Subset, Universe, Variant};
pub use error::{Error, Result};
pub use gf::{FieldElement, FieldSpec, LinearFunctional};
pub use linalg::{BitMatrix, FFMatrix, RankOneDecomposition};
pub use moment::PseudoMomentVector;
pub use subspace::SubspaceSpec;
