//! Verification pipeline, report formats and file exports for the
//! automorphism groups of root-system matroids.

pub mod formats;
pub mod report;
pub mod verify;

pub use report::{Certificate, Status, VerificationReport};
pub use verify::{
    oracle_crosscheck, verify_table, verify_theorem, verify_wreath, Budget, VerifyError,
};
