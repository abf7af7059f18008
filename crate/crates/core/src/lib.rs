//! Partitions, James abaci and runner matrices for the Mullineux map and the
//! extremal members of families with fixed `e`-core and runner matrix.

pub mod abacus;
pub mod classes;
pub mod error;
pub mod extremal;
pub mod mullineux;
pub mod oracle;
pub mod params;
pub mod partition;
pub mod rim;
pub mod runner;

pub use abacus::{beta_set, partition_of, BetaSet};
pub use error::{Error, Result};
pub use params::Params;
pub use partition::{OrderRelation, Partition};
pub use runner::RunnerMatrix;
