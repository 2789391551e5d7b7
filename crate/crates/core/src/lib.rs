pub mod algebra;
pub mod cli;
pub mod cumulant;
pub mod error;
pub mod gj;
pub mod jack;
pub mod partition;
pub mod report;
pub mod setpart;
pub mod suites;
pub mod symfunc;
pub mod triple;

pub use error::{Error, Result};
