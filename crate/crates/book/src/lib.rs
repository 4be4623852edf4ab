//! The guide in `book/`, compiled so its listings run as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/exact-numbers.md")]
pub mod exact_numbers {}
#[doc = include_str!("../../../book/src/geometry.md")]
pub mod geometry {}
#[doc = include_str!("../../../book/src/flags.md")]
pub mod flags {}
#[doc = include_str!("../../../book/src/flag-files.md")]
pub mod flag_files {}
#[doc = include_str!("../../../book/src/rendering.md")]
pub mod rendering {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
