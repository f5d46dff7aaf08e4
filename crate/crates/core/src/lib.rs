//! Exact graded characters of the symmetric group acting on the rational
//! cohomology of the real locus of the moduli space of stable genus-0 curves
//! with marked points, computed by a closed product formula, by cycle-index
//! series, and by brute-force linear algebra.

pub mod charformula;
pub mod cycleindex;
pub mod error;
pub mod graded;
pub mod oracle;
pub mod partition;
pub mod scalars;
pub mod sn;
pub mod symfunc;
pub mod verify;

pub use charformula::{CycleType, VirtualCycleType};
pub use error::{Error, Result};
pub use graded::GradedCharacter;
pub use partition::Partition;
pub use scalars::{BigInt, BigRational, SPoly, SRatFunc};
pub use symfunc::SymFunc;
