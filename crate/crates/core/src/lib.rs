//! Exact computation with Boolean inverse ∧-monoids.

pub mod analysis;
pub mod condition;
pub mod cuntz;
pub mod duality;
pub mod finite;
pub mod instance;
pub mod monoid;
pub mod suites;

pub use condition::{all_hold, Condition};
pub use monoid::{AlgebraError, BooleanInverseMonoid, FiniteMonoid, MonoidExt};
