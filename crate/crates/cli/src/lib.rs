//! Report schema shared by the `plie` binary and its tests.

pub mod report;
