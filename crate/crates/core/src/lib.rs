//! Kronecker coefficients `g_{λ,(n-p,p),ν}` for a two-row shape `(n-p,p)`.
//!
//! The main engine counts Kronecker tableaux, semistandard fillings of
//! `λ/α` whose reverse reading word is an α-lattice permutation and which
//! satisfy an extra condition on the first two rows. Two brute-force
//! oracles (a signed sum of Schur products, and symmetric group characters)
//! are provided for cross-checking, together with closed formulas for
//! several families of shapes.

pub mod error;
pub mod expansion;
pub mod formulas;
pub mod kronecker;
pub mod oracle;
pub mod partitions;
pub mod skew_expand;
pub mod tableaux;
pub mod verify;

pub use error::{KronError, Result};
pub use expansion::SchurExpansion;
pub use kronecker::{KronExpansion, KronMethod, KronResult, MethodChoice};
pub use oracle::CycleType;
pub use partitions::{Partition, PartitionConstraints, SkewShape};
pub use tableaux::{CompositionType, Tableau};
