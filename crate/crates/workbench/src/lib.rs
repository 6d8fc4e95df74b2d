//! Reading workspace files, running tasks over them and writing reports.

pub mod corpus;
pub mod error;
pub mod format;
pub mod tasks;
