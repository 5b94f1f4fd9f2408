pub mod cli;
pub mod error;
pub mod forms;
pub mod gd;
pub mod integrate;
pub mod poly;
pub mod random;
pub mod telescoping;
pub mod vars;

pub use error::{Error, Result};
pub use forms::DiffForm;
pub use poly::{MPoly, RatFunc};
pub use vars::Vars;
