//! Exact arithmetic for the inverse monoids of cofinite partial isometries
//! of ℕ (IN∞) and of ℤ (ID∞).
//!
//! * [`sets`]: finite integer sets and half-integer symmetry centres
//! * [`iso_z`]: the isometry group of ℤ
//! * [`nat`]: IN∞, its markers, gap filtration and bicyclic submonoid
//! * [`int`]: ID∞, unit covers, deficiency and maximal subgroups
//! * [`homs`]: homomorphisms out of IN∞ and the non-generation witness
//! * [`word`]: words over `a`, `b`, `e[k]` and their decompositions
//! * [`harness`]: exhaustive bounded enumeration and verification suites
//!
//! All products are read left to right: `g.compose(h)` applies `g` first.

pub mod element;
pub mod error;
pub mod harness;
pub mod homs;
pub mod int;
pub mod iso_z;
pub mod nat;
pub mod sets;
pub mod word;

pub use element::Element;
pub use error::{Error, Result};
pub use homs::{FiniteTailMap, Witness};
pub use int::{ElemID, HClassGroup};
pub use iso_z::{IsoZ, Order};
pub use nat::{BicyclicNF, ElemIN, Markers};
pub use sets::{FiniteIntSet, HalfInteger};
pub use word::{Generator, Token, Word};
