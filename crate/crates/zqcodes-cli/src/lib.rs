//! Verification harness and output documents behind the `zqcodes` binary.

pub mod harness;
pub mod output;
pub mod report;
