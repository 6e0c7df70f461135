//! Finite algebraic structures and their validators.

mod carrier;
pub mod catalog;
pub mod enumerate;
pub mod iso;
mod relfa;
mod table;
pub mod validate;

pub use carrier::{Carrier, Ternary};
pub use relfa::{is_epsilon_morphism, is_monoid_morphism, RelFa};
pub use table::{EffectAlgebra, Order, PartialAlgebra, PseudoEffectAlgebra, Supplements, DELTA_CONVENTION};
pub use validate::{validate, Kind, Structure};
