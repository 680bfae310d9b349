//! Executable classification of locally constant sheaves and stacks on
//! spaces given by finite algebraic data.
//!
//! A connected space enters through its fundamental group (a finite group
//! table or a presentation extracted from a simplicial 2-complex) or through
//! its full 2-type `(π₁, π₂, k)`. From that data the crate computes
//!
//! * non-abelian `H¹(X; G)` as `Hom(π₁, G)/G`,
//! * `H⁰` with coefficients in a crossed module,
//! * abelian `H²(X; G)` as monoidal functors `Π₁(ΩX) → G[1]`, with the Hopf
//!   exact sequence and its splitting when `k` vanishes,
//! * Giraud's `H²` with coefficients in `G → Aut(G)` together with the
//!   non-abelian Hopf sequence of pointed sets,
//!
//! and cross-checks every count against naive enumerators in [`oracle`].

pub mod algebra;
pub mod cohomology;
pub mod descent;
pub mod io;
pub mod monodromy;
pub mod oracle;
pub mod spaces;
pub mod verify;
pub mod xmod;

mod caps;
mod error;

pub use caps::Caps;
pub use error::{Error, GroupViolation, Result};

pub use algebra::{GroupHom, GroupTable, IntMatrix, Presentation, SourceGroup};
pub use cohomology::CohGroup;
pub use spaces::{Cochain, Complex2, ModuleHom, PModule, TwoType};
pub use xmod::{CrossedModule, SkeletalGrCat};
