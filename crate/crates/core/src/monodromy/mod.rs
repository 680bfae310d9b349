//! Classification formulas: non-abelian `H¹`, `H⁰` with crossed-module
//! coefficients, abelian `H²` through monoidal functors with the Hopf
//! sequence, group extensions and Giraud's non-abelian `H²`.

mod abelian;
mod extensions;
mod giraud;
mod h1;
mod pointed;

pub use abelian::{h2_constant_abelian, pi0_monoidal_to_g1, split_check, MonoidalPi0, SplitSection};
pub use extensions::{extensions, ExtensionClass, Extensions, OuterAction};
pub use giraud::{giraud_h2, GiraudH2};
pub use h1::{h0_crossed, h1_nonabelian, stack_classes_centerless, CrossedH0};
pub use pointed::{ExactAt, ExactSeqReport, ExactnessWitness, PointedSet, SeqTerm};
