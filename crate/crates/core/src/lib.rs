//! Ultra-parallel complex hyperbolic triangle groups.
//!
//! Builds the generators of `<iota1, iota2, iota3>` from chain distances and
//! the angular invariant, works with their action on the Heisenberg group,
//! and decides discreteness where the compression certificate or Shimizu's
//! lemma applies.

pub mod criteria;
pub mod error;
pub mod heisenberg;
pub mod orbit;
mod precise;
pub mod projective;
pub mod scan;
pub mod tolerance;
pub mod triangle;
pub mod words;

pub use criteria::{classify, classify_with_scope, CertificateScope, Classification, Verdict, Witness};
pub use error::{Error, Result};
pub use heisenberg::{HeisPoint, HeisTranslation};
pub use orbit::{CosetLabel, TranslationLattice};
pub use projective::{CVector3, Isometry};
pub use scan::ScanRow;
pub use tolerance::Tolerance;
pub use triangle::{build_triangle, TriangleGroup, TriangleParams};
pub use words::Word;
