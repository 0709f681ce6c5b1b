//! Parsimonious inversion/deletion distance between circular genomes.
//!
//! Genomes are dihedral orbits of region words ([`genome`]). Rearrangements
//! act through partial permutations ([`pperm`]) built from the generator
//! alphabet of [`algebra`]. The region alignment problem is solved exactly
//! by breadth-first search, either on the fly ([`align`]) or over the
//! precomputed D-class graphs of the symmetric inverse monoid ([`cayley`]).
//! [`distance`] turns alignments into distances and ancestors, [`evolve`]
//! simulates ground truth and [`npc`] carries the PARTITION reduction.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod align;
pub mod cayley;
pub mod distance;
pub mod error;
pub mod evolve;
pub mod genome;
pub mod npc;
pub mod pperm;

pub use error::{Error, Result};
