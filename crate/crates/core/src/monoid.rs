//! The Boolean inverse ∧-monoid contract and every operator derived from it.
//!
//! An instance supplies multiplication, inversion, the two constants, the
//! Boolean complement on idempotents and the instance-specific meet and
//! (compatible) join. Everything else in this module (natural order,
//! compatibility, the fixed-point and support operators, unit constructions)
//! is defined once, generically, on top of [`BooleanInverseMonoid`].
//!
//! Products are written `s·t` and mean "apply `t` first, then `s`".

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

/// Failures of the generic operators. Elements are carried in rendered form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("elements {left} and {right} are not compatible, so their join does not exist")]
    Incompatible { left: String, right: String },
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("{0} is not idempotent")]
    NotIdempotent(String),
    #[error("{0} does not have equal domain and range idempotents")]
    NotBalanced(String),
    #[error("{0} is not an infinitesimal")]
    NotInfinitesimal(String),
    #[error("product {left}·{right} is not a restricted product: d({left}) != r({right})")]
    NotRestricted { left: String, right: String },
}

/// The primitive operations an instance must provide.
///
/// Elements compare by canonical form: implementations normalise eagerly so
/// that `==` coincides with equality in the monoid.
pub trait BooleanInverseMonoid {
    type Element: Clone + Eq + Ord + Hash + Debug;

    fn multiply(&self, s: &Self::Element, t: &Self::Element) -> Self::Element;
    fn inverse(&self, s: &Self::Element) -> Self::Element;
    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;

    fn is_idempotent(&self, s: &Self::Element) -> bool {
        &self.multiply(s, s) == s
    }

    /// Complement of an idempotent in the Boolean algebra of idempotents.
    /// Only called on idempotents; see [`MonoidExt::complement`] for the
    /// checked form.
    fn idempotent_complement(&self, e: &Self::Element) -> Self::Element;

    /// Greatest lower bound of an arbitrary pair.
    fn raw_meet(&self, s: &Self::Element, t: &Self::Element) -> Self::Element;

    /// Least upper bound of a compatible pair. Behaviour on incompatible
    /// pairs is unspecified; use [`MonoidExt::join`].
    fn raw_join(&self, s: &Self::Element, t: &Self::Element) -> Self::Element;

    /// Human-readable form used in reports and error messages.
    fn render(&self, s: &Self::Element) -> String {
        format!("{s:?}")
    }
}

/// Operators derived from the contract. Blanket-implemented for every instance.
pub trait MonoidExt: BooleanInverseMonoid {
    fn is_zero(&self, s: &Self::Element) -> bool {
        *s == self.zero()
    }

    /// `d(s) = s⁻¹·s`
    fn domain(&self, s: &Self::Element) -> Self::Element {
        self.multiply(&self.inverse(s), s)
    }

    /// `r(s) = s·s⁻¹`
    fn range(&self, s: &Self::Element) -> Self::Element {
        self.multiply(s, &self.inverse(s))
    }

    /// Natural partial order: `s ≤ t` iff `s = t·d(s)`.
    fn leq(&self, s: &Self::Element, t: &Self::Element) -> bool {
        *s == self.multiply(t, &self.domain(s))
    }

    fn compatible(&self, s: &Self::Element, t: &Self::Element) -> bool {
        let left = self.multiply(s, &self.inverse(t));
        let right = self.multiply(&self.inverse(s), t);
        self.is_idempotent(&left) && self.is_idempotent(&right)
    }

    fn orthogonal(&self, s: &Self::Element, t: &Self::Element) -> bool {
        self.is_zero(&self.multiply(s, &self.inverse(t)))
            && self.is_zero(&self.multiply(&self.inverse(s), t))
    }

    fn meet(&self, s: &Self::Element, t: &Self::Element) -> Self::Element {
        self.raw_meet(s, t)
    }

    fn join(&self, s: &Self::Element, t: &Self::Element) -> Result<Self::Element, AlgebraError> {
        if !self.compatible(s, t) {
            return Err(AlgebraError::Incompatible {
                left: self.render(s),
                right: self.render(t),
            });
        }
        Ok(self.raw_join(s, t))
    }

    /// Join of a finite family; the empty join is zero.
    fn join_all<'a, I>(&self, items: I) -> Result<Self::Element, AlgebraError>
    where
        I: IntoIterator<Item = &'a Self::Element>,
        Self::Element: 'a,
    {
        items
            .into_iter()
            .try_fold(self.zero(), |acc, x| self.join(&acc, x))
    }

    fn complement(&self, e: &Self::Element) -> Result<Self::Element, AlgebraError> {
        if !self.is_idempotent(e) {
            return Err(AlgebraError::NotIdempotent(self.render(e)));
        }
        Ok(self.idempotent_complement(e))
    }

    /// Fixed-point operator `φ(s) = s ∧ 1`.
    fn phi(&self, s: &Self::Element) -> Self::Element {
        self.meet(s, &self.one())
    }

    /// Support operator `σ(s) = complement(φ(s))·d(s)`.
    fn sigma(&self, s: &Self::Element) -> Self::Element {
        let fixed = self.phi(s);
        self.multiply(&self.idempotent_complement(&fixed), &self.domain(s))
    }

    /// Splits `s` into its fixed part and its moving part: `(φ(s), s·σ(s))`.
    fn cooper_decompose(&self, s: &Self::Element) -> (Self::Element, Self::Element) {
        (self.phi(s), self.multiply(s, &self.sigma(s)))
    }

    fn is_unit(&self, s: &Self::Element) -> bool {
        let one = self.one();
        self.domain(s) == one && self.range(s) == one
    }

    fn is_involution(&self, s: &Self::Element) -> bool {
        self.is_unit(s) && self.multiply(s, s) == self.one()
    }

    fn is_infinitesimal(&self, s: &Self::Element) -> bool {
        !self.is_zero(s) && self.is_zero(&self.multiply(s, s))
    }

    /// `[g,h] = g·h·g⁻¹·h⁻¹`
    fn commutator(
        &self,
        g: &Self::Element,
        h: &Self::Element,
    ) -> Result<Self::Element, AlgebraError> {
        for x in [g, h] {
            if !self.is_unit(x) {
                return Err(AlgebraError::NotAUnit(self.render(x)));
            }
        }
        let gh = self.multiply(g, h);
        let ginv_hinv = self.multiply(&self.inverse(g), &self.inverse(h));
        Ok(self.multiply(&gh, &ginv_hinv))
    }

    /// Ordinary product with the precondition `d(s) = r(t)` checked.
    fn restricted_product(
        &self,
        s: &Self::Element,
        t: &Self::Element,
    ) -> Result<Self::Element, AlgebraError> {
        if self.domain(s) != self.range(t) {
            return Err(AlgebraError::NotRestricted {
                left: self.render(s),
                right: self.render(t),
            });
        }
        Ok(self.multiply(s, t))
    }

    /// For `d(s) = r(s)`, the unit `s ∨ complement(d(s))`.
    fn unit_from_balanced(&self, s: &Self::Element) -> Result<Self::Element, AlgebraError> {
        let d = self.domain(s);
        if d != self.range(s) {
            return Err(AlgebraError::NotBalanced(self.render(s)));
        }
        self.join(s, &self.idempotent_complement(&d))
    }

    /// For an infinitesimal `a`, the involution `a⁻¹ ∨ a ∨ complement(d(a))·complement(r(a))`.
    fn involution_from_infinitesimal(
        &self,
        a: &Self::Element,
    ) -> Result<Self::Element, AlgebraError> {
        if !self.is_infinitesimal(a) {
            return Err(AlgebraError::NotInfinitesimal(self.render(a)));
        }
        let rest = self.multiply(
            &self.idempotent_complement(&self.domain(a)),
            &self.idempotent_complement(&self.range(a)),
        );
        let swap = self.join(&self.inverse(a), a)?;
        self.join(&swap, &rest)
    }
}

impl<M: BooleanInverseMonoid + ?Sized> MonoidExt for M {}

/// Instances whose carrier can be listed.
pub trait FiniteMonoid: BooleanInverseMonoid {
    /// Every element, in canonical order.
    fn elements(&self) -> Vec<Self::Element>;

    /// Short name used in reports (`I3`, `B(pair3)`, ...).
    fn name(&self) -> String;
}
