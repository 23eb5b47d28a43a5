//! Symbolic engine for ℤ₂-graded operator algebras, free quantum fields on a
//! finite momentum lattice, and the antifield/BRST algebra of a gauge theory.

pub mod algebra;
pub mod bv;
pub mod check;
pub mod fields;
pub mod functionals;
pub mod gamma;
pub mod lattice;
pub mod lie;
pub mod oracle;
pub mod suites;
pub mod symbolic;
