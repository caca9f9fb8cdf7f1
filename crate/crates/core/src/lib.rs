//! Exact computation of Gabriel-Roiter measures for quiver representations
//! over prime fields.
//!
//! The crate builds up from dense linear algebra over GF(p) through quiver
//! representations, subrepresentation lattices and the Gabriel-Roiter
//! measure recursion, to concrete module families (Kronecker
//! preprojectives and tubes, subspace quivers) and a battery of
//! verification suites. All arithmetic is exact: residues, arbitrary
//! precision integers and reduced fractions, never floating point.
//!
//! Values are immutable after construction and the operations are pure
//! functions, so everything here is safe to share across threads; the
//! registry serializes insertions through `&mut` in the usual way.

pub mod caps;
pub mod endo;
pub mod error;
pub mod families;
pub mod gr;
pub mod matrix;
pub mod measure;
pub mod morphism;
pub mod poly;
pub mod quiver;
pub mod registry;
pub mod rep;
pub mod subrep;
pub mod subspace;
pub mod verify;

pub use caps::Caps;
pub use error::{Error, Result};
pub use matrix::FpMatrix;
pub use measure::{ExactRational, GRMeasure};
pub use morphism::Morphism;
pub use quiver::Quiver;
pub use registry::IndecRegistry;
pub use rep::Representation;
pub use subrep::Subrep;
pub use subspace::Subspace;
