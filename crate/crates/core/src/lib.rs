//! Exact computer algebra for the A-type Hecke algebra H_n(q).
pub mod error;
pub mod hecke;
pub mod idempotents;
pub mod perm;
pub mod scalar;
pub mod seminormal;
pub mod tableaux;
pub mod trace;
pub mod verify;

pub use error::{Error, Result};
pub use hecke::{Hecke, HeckeElement};
pub use perm::Permutation;
