pub mod bridge;
pub mod error;
pub mod formats;
pub mod kset;
pub mod oracle;
pub mod par;
pub mod paths;
pub mod ramsey;
pub mod sat;
pub mod shift;
pub mod tower;
pub mod verdict;

pub use error::{Error, Result};
