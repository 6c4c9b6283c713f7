//! Command-line front end for `hxdft`.

// Negated float comparisons are used on purpose: they reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod bench;
pub mod commands;
pub mod gen;
pub mod snap;
pub mod verify;

/// Seed used by `verify` when neither `--seed` nor `HXDFT_SEED` is given.
pub const DEFAULT_SEED: u64 = 0x05ee_ddf7;

pub const SEED_ENV: &str = "HXDFT_SEED";
