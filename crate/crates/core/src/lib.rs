//! Exact arithmetic in braided Thompson groups.
//!
//! The universal value is a representative triple `[T₋, β(m₁,…,m_n), T₊]`:
//! two trees with `n` leaves and a ribbon braid (a braid word in `B_n` plus
//! one integer half-twist count per strand). Triples represent elements of
//! the ribbon braided Thompson group rV; the subgroups bV, bF, bP, braided
//! T, b̂V, b̂V(1) and D̂ are carved out by decidable membership predicates.
//!
//! The layers, bottom up:
//!
//! - [`tree`]: finite rooted planar binary trees with caret surgery,
//!   refinement and depth measurements.
//! - [`perm`]: permutations of strand positions.
//! - [`braid`]: braid words with a semantic equality oracle (the action on
//!   the free group), cabling, strand deletion, purity and hat predicates.
//! - [`ribbon`]: the wreath product `B_n ≀ Z`.
//! - [`vgroup`]: Thompson's group V with unique reduced forms, used as the
//!   kernel test for bP.
//! - [`element`]: the group kernel itself — expansion, reduction to normal
//!   form, arithmetic, equality, membership, the homomorphisms χ₁ and χ₀,
//!   named elements and structural decompositions.
//! - [`verify`]: seeded random generation and the named property suites.

pub mod braid;
pub mod element;
pub mod error;
pub mod perm;
pub mod ribbon;
pub mod tree;
pub mod verify;
pub mod vgroup;

pub use braid::{BraidWord, Letter, DEFAULT_BUDGET};
pub use element::{Element, NamedElement, SubgroupTag};
pub use error::{Error, Result};
pub use perm::Perm;
pub use ribbon::RibbonBraid;
pub use tree::Tree;
pub use verify::{random_element, run_suite, GenConfig, Suite, SuiteReport};
pub use vgroup::VElement;
