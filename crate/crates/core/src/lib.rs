pub mod am_checker;
pub mod codes;
pub mod combinatorics;
pub mod constructions;
pub mod design_theory;
pub mod galois;
pub mod spectra;
