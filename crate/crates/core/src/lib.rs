pub mod algebra;
pub mod approx;
pub mod bundled;
pub mod error;
pub mod format;
pub mod glue;
pub mod homology;
pub mod linalg;
pub mod modcat;
pub mod recollement;
pub mod tilting;

pub use error::{Error, Result};
