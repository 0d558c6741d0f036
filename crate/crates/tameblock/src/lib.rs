//! Exact-arithmetic toolkit for 2-blocks with tame defect groups.
//!
//! A 2-block of a finite group whose defect group is dihedral, semidihedral,
//! or generalised quaternion of order `2^n` has a decomposition matrix drawn
//! from a short, completely known list of shapes.  This crate stores that
//! list, classifies concrete blocks from their ordinary character degrees,
//! runs the index-2 fuse/split calculus that moves decomposition matrices
//! between a group and a normal subgroup of index two, and provides the
//! partition and integer-polynomial arithmetic those computations lean on.
//!
//! The crate is `no_std` (it allocates, but performs no IO); the companion
//! `tameblock-cli` crate supplies file formats, bundled data, and a command
//! line.  All arithmetic is exact — unbounded integers throughout, no
//! floating point.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod classify;
pub mod clifford;
pub mod matrix;
pub mod partition;
pub mod polyq;

pub use num_bigint;
pub use num_rational;
pub use num_traits;
