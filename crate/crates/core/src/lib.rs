pub mod analysis;
pub mod certify;
pub mod coeffseq;
pub mod error;
pub mod exactnum;
pub mod reproduce;
pub mod trigpoly;

pub use error::{Error, Result};
