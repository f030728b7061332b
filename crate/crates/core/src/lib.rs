//! Finite lattices, Möbius functions and characteristic polynomials, with
//! checkers for left-modular expansions and factorizations, NBB bases, and
//! generators for the partition, noncrossing partition, shuffle and Tamari
//! families.

pub mod bits;
pub mod charpoly;
pub mod corpus;
pub mod criteria;
pub mod error;
pub mod families;
pub mod format;
pub mod iso;
pub mod lattice;
pub mod maps;
pub mod modularity;
pub mod moebius;
pub mod nbb;
pub mod poly;
pub mod rank;
pub mod verify;

pub use error::{Error, Result};
pub use format::LatticeFile;
pub use lattice::{FiniteLattice, Interval};
pub use moebius::MobiusTable;
pub use poly::ExactPoly;
pub use rank::GeneralizedRank;
