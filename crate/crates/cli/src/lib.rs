//! IO companion to `xapx-core`: instance file formats, the run-report JSON
//! schema, the solve/bench orchestration, and the `xapx` binary.

pub mod bench;
pub mod formats;
pub mod report;
pub mod run;
