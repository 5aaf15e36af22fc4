pub mod bundles;
pub mod cli;
pub mod cocycle;
pub mod coordring;
pub mod dolbeault;
pub mod error;
pub mod gtrep;
pub mod linalg;
pub mod qarith;

pub use error::{Error, Result};
