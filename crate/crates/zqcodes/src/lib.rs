//! Exact computations for simplex and MacDonald codes over Z_q.
//!
//! The crate has two independent routes to every weight distribution:
//!
//! - [`code`]: generator matrices, codeword enumeration in a fixed message
//!   order, and exhaustive (optionally partitioned) weight counting: the
//!   ground truth.
//! - [`closed_form`]: the formula side, with the parameter formulas, the S_2(q)
//!   distribution, per-codeword weight formulas for the dimension-3 codes,
//!   and published Z_4 reference tables.
//!
//! [`construct`] builds the canonical matrices both routes share, and
//! [`ring`] supplies the mod-q arithmetic and number-theoretic facts the
//! formulas consume. Keeping the routes separate is the point: agreement
//! between them is checked, never assumed.

pub mod closed_form;
pub mod code;
pub mod construct;
mod error;
pub mod ring;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Default ceiling on the number of messages any exhaustive enumeration may
/// visit. Generous for every check shipped here (those need at most 6^4
/// messages) while still catching accidental q^k blowups.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;
