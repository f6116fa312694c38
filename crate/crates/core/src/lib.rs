//! Exact computation of Green's relations and of the irreducible
//! representations of finite semigroups over prime fields and the rationals.
//!
//! The simple modules with apex `J` are built from the simple modules of the
//! maximal subgroup `G_J` in two independent ways (induced module modulo its
//! radical, minimal submodule of the coinduced module), and a MeatAxe-style
//! chopper provides an independent oracle for the whole classification.

pub mod band;
pub mod chop;
pub mod cmp;
pub mod error;
pub mod field;
pub mod green;
pub mod matrix;
pub mod meataxe;
pub mod module;
mod poly;
pub mod semigroup;
pub mod verify;

pub use band::{band_irreducibles, da_irreducibles, is_band, is_in_da};
pub use chop::{chop, irreducibles, regular_module, Factor};
pub use cmp::{all_irreducibles, apex_of, Classification, MonomialRep, Side, SimpleReport};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use green::{green_structure, jclass_data, maximal_subgroup, GreenStructure, JClassData, MaxSubgroup};
pub use matrix::Matrix;
pub use meataxe::{is_simple, SearchConfig, Simplicity, SimplicityMode};
pub use module::{hom_space, quotient_module, spin, Module};
pub use semigroup::{Magma, Semigroup};
