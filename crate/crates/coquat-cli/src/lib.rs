//! Report schema and rendering shared by the `cqroots` binary and its
//! integration tests.

pub mod report;
