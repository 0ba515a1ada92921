//! Exact computational workbench for Ariki-Koike algebras and cyclotomic
//! q-Schur algebras: cellular bases, Specht and Weyl modules, Gram forms,
//! Schur elements, blocks, crystal combinatorics, decomposition matrices
//! and Jantzen filtration data, all over exact coefficient rings.

pub mod characters;
pub mod coeff;
pub mod crystal;
pub mod combinatorics;
pub mod error;
pub mod hecke;
pub mod jantzen;
pub mod linalg;
pub mod perm;
pub mod schur;
pub mod selftest;
pub mod specht;
pub mod tensor;

pub use error::{Error, Result};
