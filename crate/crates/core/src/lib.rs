pub mod analysis;
pub mod anchors;
pub mod closure;
pub mod error;
pub mod exact_state;
pub mod gates;
pub mod ket;
pub mod labels;
pub mod linalg;
pub mod orbits;
pub mod populations;
pub mod reference;
pub mod transitions;

pub use error::{Error, Result};
