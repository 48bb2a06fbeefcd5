//! Exact counts of connected divisions of 2×n chocolate bars and honeycomb
//! strips, computed five independent ways: exhaustive enumeration,
//! recurrences, closed forms, generating functions and transfer matrices.
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! ```bash
//! cargo run -p strip-divisions --example chocolate_bar_table
//! cargo run -p strip-divisions --example honeycomb_listing
//! cargo run -p strip-divisions --example generating_functions
//! cargo run -p strip-divisions --example transfer_matrices
//! cargo run -p strip-divisions --example polynomial_columns
//! cargo run -p strip-divisions --example fibonacci_identities
//! cargo run -p strip-divisions --example expected_parts
//! cargo run -p strip-divisions --example oeis_export -- /tmp
//! cargo run -p strip-divisions --example verification_suites
//! ```
//!
//! The `strip-divisions` binary wraps [`cli::run`].

pub mod analysis;
pub mod cli;
pub mod counting;
pub mod error;
pub mod export;
pub mod lattice;
pub mod oracle;
pub mod series;
pub mod transfer;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{Division, Family, Lattice, TailState};
