//! Hermitian trace codes over GF(3), the 2-designs held by their minimum-weight
//! codewords, and the ternary codes spanned by those designs.
//!
//! Everything in this crate is pure computation over `alloc`; IO, export formats
//! and the command-line front end live in the `hermdes` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cyclic;
pub mod design;
pub mod design_code;
pub mod field;
pub mod grm;
pub mod hermitian;
pub mod linalg;
pub mod poly;
mod util;

pub use field::{Elem, FieldError, FieldParams, FieldTable};
pub use linalg::{FpBytes, FpVector, GenMatrixCode, Gf3Vec, WeightEnumerator};
