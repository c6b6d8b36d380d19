//! Minimum-distance bounds and decoding for q-ary cyclic codes.
//!
//! [`cyclic`] builds codes from cyclotomic cosets and computes the BCH and
//! Hartmann–Tzeng bounds plus an exhaustive minimum distance for small codes.
//! [`nzl`] searches for non-zero-locator certificates: a locator cyclic code
//! over an extension field whose zeros, interleaved with those of the code,
//! cover a long run and bound the distance by `⌈μ/d_l⌉`. [`decoder`] turns a
//! certificate into a key-equation decoder correcting `⌊(μ-1)/2⌋` errors.
//! [`cli`] is the `cyclic-bound` command line front end.

pub mod arith;
pub mod cli;
pub mod cyclic;
pub mod decoder;
pub mod gf;
pub mod nzl;
