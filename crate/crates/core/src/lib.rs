//! Finite quandles, affine meshes and covering affine quandles.
//!
//! The crate decides whether a finite quandle embeds into, or is a
//! homomorphic image of, an affine quandle, and in the latter case builds
//! an affine quandle `Aff(A, f)` together with a surjective homomorphism
//! onto the input.

pub mod affine;
pub mod affinity;
pub mod corpus;
pub mod cover;
pub mod error;
pub mod format;
pub mod invariants;
pub mod iso;
pub mod mesh;
pub mod perm;
pub mod quandle;

pub use affine::{AbelianGroup, AffineQuandle, CyclicProduct, GroupAutomorphism};
pub use cover::{build_cover, is_homim_of_affine, CoverResult, Multitransversal};
pub use error::{CoverError, GroupError, MeshError, ParseError, QuandleError};
pub use mesh::{AffineMesh, RawMesh};
pub use perm::{PermGroup, Permutation};
pub use quandle::{Partition, Quandle};
