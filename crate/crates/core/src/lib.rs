pub mod error;
pub mod fcat;
pub mod fincat;
pub mod fixtures;
pub mod limits;
pub mod monad;
pub mod orthogonal;
pub mod sketch;

pub use error::{Error, Result};
