//! Finite-dimensional BiHom-associative algebras and their relatives.
//!
//! Every structure is stored as structure constants over an exact field
//! and every axiom is checked exhaustively on basis tuples. Checks return a
//! [`CheckReport`]; constructions verify their preconditions and return an
//! [`Error`] with a witness when one fails.

pub mod algebra;
pub mod bialgebra;
pub mod coalgebra;
pub mod counterexample;
pub mod error;
pub mod exactnum;
pub mod fixtures;
pub mod lie;
pub mod linalg;
pub mod maps;
pub mod report;
pub mod smash;
pub mod twisting;

pub use error::{Error, Result};
pub use exactnum::{Field, Scalar};
pub use linalg::{Matrix, Tensor3};
pub use report::{CheckReport, Witness};
