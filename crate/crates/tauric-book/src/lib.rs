//! mdBook cannot run snippets that depend on the library, so every
//! chapter is included here as module documentation and `cargo test
//! --doc` executes the code blocks. One module per chapter keeps test
//! failures attributable to their source file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/lattice.md")]
pub mod lattice {}

#[doc = include_str!("../../../book/src/polytopes.md")]
pub mod polytopes {}

#[doc = include_str!("../../../book/src/walls.md")]
pub mod walls {}

#[doc = include_str!("../../../book/src/picard.md")]
pub mod picard {}

#[doc = include_str!("../../../book/src/nef-cone.md")]
pub mod nef_cone {}

#[doc = include_str!("../../../book/src/total-index.md")]
pub mod total_index {}

#[doc = include_str!("../../../book/src/conjectures.md")]
pub mod conjectures {}

#[doc = include_str!("../../../book/src/sections.md")]
pub mod sections {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
