pub mod braid;
pub mod bundles;
pub mod dissection;
pub mod error;
pub mod invariants;
pub mod mcg;
pub mod raag;
pub mod word;

pub use error::{Error, ErrorKind, Result};
