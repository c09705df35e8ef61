//! The Cuntz inverse monoid `C_n`: prefix-replacement partial homeomorphisms
//! of `n`-ary Cantor space, with exact normal-form arithmetic, eventually
//! periodic points, and constructive witnesses for its structural properties.

mod check;
mod clopen;
mod point;
mod prefix_map;
mod sample;
mod text;
mod witness;
mod word;

use thiserror::Error;

pub use check::{check_f1, check_f2, check_f3};
pub use clopen::Clopen;
pub use point::EPPoint;
pub use prefix_map::PrefixMap;
pub use sample::{
    random_clopen, random_complete_code, random_involution, random_nonzero_clopen, random_point,
    random_point_in, random_prefix_map, random_subclopen, random_unit, random_unit_within,
};
pub use text::{parse_clopen, parse_map};
pub use witness::{
    clopen_iso, conjugator_unit, f1_witness, f2_construction, f2_witness, f3_construction,
    f3_witness, find_moved_point, infinitesimal_at, infinitesimal_cover, infinitesimal_factors,
    piecewise_factorize, principality_decompose, properly_infinite_witness, separating_idempotent,
    support_cover, transfer_witness, unit_in_ultrafilter, F2Construction, F3Construction,
    Principality,
};
pub use word::Word;

use crate::monoid::{AlgebraError, BooleanInverseMonoid};

pub const MAX_ARITY: u8 = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CuntzError {
    #[error("alphabet size must be between 2 and {MAX_ARITY}, got {0}")]
    InvalidArity(u8),
    #[error("invalid prefix map: {0}")]
    NotPrefixFree(String),
    #[error("{left} and {right} are not compatible")]
    Incompatible { left: String, right: String },
    #[error("{0} is not a clopen (idempotent)")]
    NotClopen(String),
    #[error("point {point} is outside the domain of {map}")]
    PointOutsideDomain { point: String, map: String },
    #[error("{0} is not a non-trivial involution")]
    NotInvolution(String),
    #[error("{e} is not below the support {support}")]
    NotBelowSupport { e: String, support: String },
    #[error("the idempotent must be non-zero")]
    ZeroIdempotent,
    #[error("the idempotent must not be the identity")]
    IdentityIdempotent,
    #[error("no map from {left} to {right}: cylinder counts {left_count} and {right_count} differ mod {modulus}")]
    NoIso {
        left: String,
        right: String,
        left_count: usize,
        right_count: usize,
        modulus: usize,
    },
    #[error("point {point} is fixed by {map}")]
    NotMoved { point: String, map: String },
    #[error("{0} has no support inside the given region")]
    EmptySupportRegion(String),
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `C_n` as a Boolean inverse ∧-monoid over [`PrefixMap`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CuntzMonoid {
    arity: u8,
}

impl CuntzMonoid {
    pub fn new(arity: u8) -> Result<Self, CuntzError> {
        if !(2..=MAX_ARITY).contains(&arity) {
            return Err(CuntzError::InvalidArity(arity));
        }
        Ok(Self { arity })
    }

    pub(crate) fn of(arity: u8) -> Self {
        Self { arity }
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn name(&self) -> String {
        format!("C{}", self.arity)
    }

    pub fn parse_element(&self, text: &str) -> Result<PrefixMap, CuntzError> {
        parse_map(self.arity, text)
    }

    pub fn parse_clopen(&self, text: &str) -> Result<Clopen, CuntzError> {
        parse_clopen(self.arity, text)
    }

    pub fn parse_point(&self, text: &str) -> Result<EPPoint, CuntzError> {
        EPPoint::parse(self.arity, text)
    }

    pub fn full(&self) -> Clopen {
        Clopen::full(self.arity)
    }
}

impl BooleanInverseMonoid for CuntzMonoid {
    type Element = PrefixMap;

    fn multiply(&self, s: &PrefixMap, t: &PrefixMap) -> PrefixMap {
        s.compose(t)
    }

    fn inverse(&self, s: &PrefixMap) -> PrefixMap {
        s.inverse()
    }

    fn zero(&self) -> PrefixMap {
        PrefixMap::zero(self.arity)
    }

    fn one(&self) -> PrefixMap {
        PrefixMap::identity(self.arity)
    }

    fn is_idempotent(&self, s: &PrefixMap) -> bool {
        s.is_idempotent()
    }

    fn idempotent_complement(&self, e: &PrefixMap) -> PrefixMap {
        e.domain_clopen().complement().to_map()
    }

    fn raw_meet(&self, s: &PrefixMap, t: &PrefixMap) -> PrefixMap {
        s.meet(t)
    }

    fn raw_join(&self, s: &PrefixMap, t: &PrefixMap) -> PrefixMap {
        s.union_unchecked(t)
    }

    fn render(&self, s: &PrefixMap) -> String {
        s.to_string()
    }
}
