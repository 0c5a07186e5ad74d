//! Exact-arithmetic toolkit for the rational group algebras of symmetric
//! groups: Eulerian idempotent calculus, symmetric-group character theory,
//! conjugation-span rank computations, and a verification harness for the
//! associated combinatorial identities.

pub mod algebra;
pub mod cache;
pub mod characters;
pub mod error;
pub mod eulerian;
pub mod perm;
pub mod rational;
pub mod spans;
pub mod verify;
pub mod specht;
