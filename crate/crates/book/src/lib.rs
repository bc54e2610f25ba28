//! Compiles and runs every code listing in the guide under `book/`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/rings.md")]
pub mod rings {}
#[doc = include_str!("../../../book/src/subobjects.md")]
pub mod subobjects {}
#[doc = include_str!("../../../book/src/morphisms.md")]
pub mod morphisms {}
#[doc = include_str!("../../../book/src/amalgamation.md")]
pub mod amalgamation {}
#[doc = include_str!("../../../book/src/pullbacks.md")]
pub mod pullbacks {}
#[doc = include_str!("../../../book/src/constructions.md")]
pub mod constructions {}
#[doc = include_str!("../../../book/src/dsl.md")]
pub mod dsl {}
