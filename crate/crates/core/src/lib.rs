//! Exact computations with dualities of finite abelian groups.
//!
//! A finite abelian group is presented as a product of cyclic groups
//! `Z/d_1 × … × Z/d_k` ([`GroupSpec`]). On top of that presentation the crate
//! provides characters and annihilators, the dualities `A → Â` together with
//! their adjoints and congruence classes, left and right dual codes of
//! additive codes `C ⊆ A^n`, the multiplication-by-`p` filtrations, and the
//! Hamming and complete MacWilliams identities. Character values live in the
//! cyclotomic integers `Z[ζ_m]`, so every identity is checked exactly.

pub mod characters;
pub mod cli;
pub mod codes;
pub mod cyclotomic;
pub mod duality;
pub mod enumerators;
mod error;
pub mod group;
pub mod json;
pub mod limits;
pub mod tables;

pub use characters::Character;
pub use codes::{AdditiveCode, PowerGroup};
pub use cyclotomic::CycInt;
pub use duality::Duality;
pub use enumerators::{CompleteEnumerator, HammingEnumerator};
pub use error::{Error, Result};
pub use group::{Automorphism, GroupElement, GroupSpec, Homomorphism, Subgroup};
