pub mod error;
pub mod geometry;
pub mod lr;
pub mod numeric;
pub mod partitions;
pub mod symfunc;
pub mod tensor_oracle;
pub mod verify;
pub mod werner;

pub use error::{Error, Result};
pub use numeric::Rational;
pub use partitions::{Cell, Partition, SkewShape, Tableau, TableauKind};
pub use symfunc::Spectrum;
pub use werner::{BoundReport, WernerState};
