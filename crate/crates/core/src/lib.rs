//! Exact arithmetic for MV polytopes: BZ data, Kashiwara operators, the
//! Anderson-Mirković operator, diagram folding and preprojective modules.

pub mod amop;
pub mod crystal;
pub mod error;
pub mod exec;
pub mod folding;
pub mod io;
pub mod linalg;
pub mod polytope;
pub mod preproj;
pub mod rootsys;

pub use error::{Error, Result};
