//! Command-line support for the weylchar library: output rendering, the
//! orbit cache, and the verification suite behind `weylchar verify`.

#![forbid(unsafe_code)]

pub mod cache;
pub mod output;
pub mod suite;
