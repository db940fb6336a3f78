//! Burnside rings, bifree double Burnside groups and orthogonal units for
//! small finite groups, computed exactly from multiplication tables.

pub mod biset;
pub mod burnside;
pub mod error;
pub mod group;
pub mod units;

pub use error::{Error, Result, DEFAULT_ORDER_CAP};
