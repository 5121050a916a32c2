//! Exact-arithmetic tools for finite-dimensional quiver representations.
//!
//! The crate is organized bottom-up:
//!
//! * [`scalar`] and [`matrix`] provide exact rational arithmetic and dense
//!   linear algebra (row reduction, kernels, solving).
//! * [`poly`] has just enough univariate polynomial machinery to support
//!   module decomposition (characteristic polynomials, square-free parts,
//!   rational roots).
//! * [`quiver`] and [`algebra`] build finite-dimensional algebras from a
//!   quiver and admissible relations via path rewriting, with multiplication
//!   tables and opposite algebras.
//! * [`module`] represents modules as quiver representations and computes
//!   Hom spaces, standard projectives/injectives, and vector-space duals.
//! * [`resolve`] covers projective covers, resolutions, Ext dimensions, and
//!   kernels/cokernels of module maps.
//! * [`decompose`] certifies indecomposability and isomorphism, splits
//!   modules into indecomposable summands, and computes the
//!   Auslander–Reiten translate and its inverse.
//! * [`approx`] handles minimal left/right approximations relative to an
//!   additive subcategory, higher kernels/cokernels, resolutions by
//!   subcategory members, and Hom-exactness verification.
//! * [`tilting`] certifies atlases of indecomposables, builds Ext tables,
//!   checks rigidity and cluster-tilting conditions, searches for
//!   cluster-tilting subcategories, and checks cotorsion-pair conditions.
//! * [`functorcat`] builds the endomorphism algebra of an additive
//!   generator, represents functors as modules over it, and checks
//!   effaceability, restriction, and exactness properties.
//!
//! All arithmetic is exact; every randomized routine takes an explicit seed
//! and is fully deterministic given it.

pub mod algebra;
pub mod approx;
pub mod decompose;
mod error;
pub mod functorcat;
pub mod matrix;
pub mod module;
pub mod poly;
pub mod quiver;
pub mod resolve;
pub mod samples;
pub mod scalar;
pub mod tilting;

pub use error::{Error, Result};
