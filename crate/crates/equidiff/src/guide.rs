//! The book, compiled.
//!
//! Each chapter of the mdbook under `book/` is included here verbatim as
//! module documentation, so `cargo test --doc` builds and runs every code
//! snippet the book shows. If the book drifts from the library, the test
//! suite says so. Render the human version with `mdbook serve book`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/rationals.md")]
pub mod rationals {}

#[doc = include_str!("../../../book/src/closed-forms.md")]
pub mod closed_forms {}

#[doc = include_str!("../../../book/src/curve.md")]
pub mod curve {}

#[doc = include_str!("../../../book/src/birational.md")]
pub mod birational {}

#[doc = include_str!("../../../book/src/iteration.md")]
pub mod iteration {}

#[doc = include_str!("../../../book/src/curios.md")]
pub mod curios {}

#[doc = include_str!("../../../book/src/series.md")]
pub mod series {}

#[doc = include_str!("../../../book/src/search.md")]
pub mod search {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
