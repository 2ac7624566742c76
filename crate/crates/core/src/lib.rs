//! Computational group theory for braid-based models of loop spaces.
//!
//! The crate provides exact word arithmetic in free groups and pure braid
//! groups (through the strand action on a free group), the simplicial
//! group built from pure braids by strand removal and doubling, cabling,
//! Brunnian braid tests, symmetric-commutator presentation builders for
//! self free products with amalgamation, a truncated series oracle for
//! lower central series questions, an exact Smith normal form, and a
//! class-2 nilpotent quotient engine. Everything is deterministic and
//! desk-scale: the point is verifying identities and reproducing the
//! bundled worked computations, not bulk computation.

pub mod amalgam;
pub mod braid;
pub mod nilpotent;
pub mod scenarios;
pub mod simplicial;
pub mod words;
