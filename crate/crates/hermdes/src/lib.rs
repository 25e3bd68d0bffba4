//! Verification front end for Hermitian trace codes: the check suite, export
//! formats, reference data and parallel enumeration on top of `hermdes-core`.

pub mod checks;
pub mod cli;
pub mod export;
pub mod parallel;
pub mod reference;
pub mod report;
