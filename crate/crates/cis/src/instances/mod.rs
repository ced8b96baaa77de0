//! The concrete semiring carriers.

pub mod cofinite;
pub mod ideal;
pub mod polygon;
pub mod powerset;
pub mod sequence;
pub mod termset;
pub mod tropical;

pub use cofinite::Cofinite;
pub use ideal::{Ideal, QPoly};
pub use polygon::{Point, Polygon};
pub use powerset::Universe;
pub use termset::TermSet;
pub use tropical::Tropical;
