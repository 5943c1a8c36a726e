//! Finite magmas, semigroups and groups with a second "joined" operation:
//! classification of grouplikes and homogroups, e-join laws, endofunction
//! decomposers, projection factorizations, e-congruence quotients and
//! exhaustive enumeration of identical structures.

use serde::{Deserialize, Serialize};

pub mod battery;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod factor;
pub mod function;
pub mod gallery;
pub mod joined;
pub mod magma;
pub mod quotient;
pub mod rational;
pub mod subset;

pub use battery::{Battery, Leg, Verdict};
pub use error::{AlgebraError, Result};
pub use function::EndoFunction;
pub use joined::JoinedStructure;
pub use magma::{Group, Magma, Semigroup};
pub use subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
    Both,
}
