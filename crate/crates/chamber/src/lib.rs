//! Combinatorial engine for maps on orientable surfaces, represented as
//! chamber systems (flags with three involutions), with local
//! symmetry-preserving (lsp) and local orientation-preserving
//! symmetry-preserving (lopsp) operations, the Goldberg-Coxeter
//! construction, verification oracles, and patch enumeration.

pub mod apply;
pub mod canon;
pub mod chamber;
pub mod enumerate;
pub mod error;
pub mod expr;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod gc;
pub mod hex;
pub mod patch;
pub mod patch_format;
pub mod planar_code;
pub mod plane_graph;
pub mod seeds;
pub mod verify;

pub use chamber::{ChamberSystem, Counts};
pub use error::{Error, Result};
pub use patch::{Patch, PatchKind};
pub use patch_format::{parse_patch, serialize_patch};
pub use plane_graph::PlaneGraph;
