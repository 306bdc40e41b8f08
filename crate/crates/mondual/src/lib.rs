//! Duality engine for finite monoids.
//!
//! The engine computes the dual of a finite monoid S, the monoid of all
//! homomorphisms from S into the circle-with-zero Ṫ under pointwise
//! multiplication, together with the second dual, the canonical evaluation
//! homomorphism δ, and a decision procedure for reflexivity (δ being an
//! isomorphism). At finite scale the verdict admits a purely structural
//! characterization: S is reflexive exactly when it is abelian and inverse.
//! Every theorem the engine relies on is double-checked at runtime by
//! independent algorithms rather than assumed.

pub mod characters;
pub mod circle;
pub mod corpus;
pub mod dual;
pub mod error;
pub mod monoid;
pub mod reflexivity;
pub mod semilattice;

pub use characters::{Character, CharacterGroup};
pub use circle::DotCircle;
pub use dual::{DualMonoid, Hom, RestrictedDuals};
pub use error::{Error, Result};
pub use monoid::{CliffordDecomposition, FiniteMonoid, MonoidMorphism, Submonoid};
pub use reflexivity::ReflexivityReport;
pub use semilattice::Filter;
