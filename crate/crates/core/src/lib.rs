pub mod error;
pub mod numbertheory;
pub mod quadform;
pub mod rootdata;
pub mod titsalgebra;
pub mod decide;
pub mod cli;

pub use error::{Error, Result};
