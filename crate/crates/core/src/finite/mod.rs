//! Concrete finite Boolean inverse ∧-monoids: symmetric inverse monoids,
//! direct products, and local-bisection monoids of finite groupoids.

mod bisection;
mod groupoid;
mod product;
mod symmetric;

use thiserror::Error;

pub use bisection::{ArrowSet, BisectionDisplay, LocalBisectionMonoid, MAX_BISECTION_ARROWS};
pub use groupoid::{Arrow, ArrowEntry, FiniteGroupoid, GroupoidFile};
pub use product::Product;
pub use symmetric::{PartialBijection, SymmetricInverseMonoid, MAX_SYMMETRIC_DEGREE};

use crate::monoid::{FiniteMonoid, MonoidExt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteError {
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("malformed groupoid JSON: {0}")]
    Json(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// All idempotents, in canonical order.
pub fn idempotents<S: FiniteMonoid>(s: &S) -> Vec<S::Element> {
    s.elements()
        .into_iter()
        .filter(|x| s.is_idempotent(x))
        .collect()
}

/// Atoms of the Boolean algebra of idempotents.
pub fn idempotent_atoms<S: FiniteMonoid>(s: &S) -> Vec<S::Element> {
    let es = idempotents(s);
    es.iter()
        .filter(|e| !s.is_zero(e))
        .filter(|e| !es.iter().any(|f| !s.is_zero(f) && f != *e && s.leq(f, e)))
        .cloned()
        .collect()
}

/// Atoms of `S`: the non-zero elements with nothing but zero strictly below.
///
/// Uses that `s` is an atom iff `d(s)` is an atom of `E(S)`: anything below
/// `s` is `s·f` for some `f ≤ d(s)`.
pub fn atoms<S: FiniteMonoid>(s: &S) -> Vec<S::Element> {
    let idem_atoms = idempotent_atoms(s);
    s.elements()
        .into_iter()
        .filter(|x| idem_atoms.contains(&s.domain(x)))
        .collect()
}

/// Atoms lying below `x`.
pub fn atoms_below<S: FiniteMonoid>(
    s: &S,
    atoms: &[S::Element],
    x: &S::Element,
) -> Vec<S::Element> {
    atoms.iter().filter(|a| s.leq(a, x)).cloned().collect()
}

pub fn units<S: FiniteMonoid>(s: &S) -> Vec<S::Element> {
    s.elements().into_iter().filter(|x| s.is_unit(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::BooleanInverseMonoid;

    /// Exhaustive order scan, independent of the domain-atom shortcut.
    fn atoms_by_order_scan<S: FiniteMonoid>(s: &S) -> Vec<S::Element> {
        let els = s.elements();
        els.iter()
            .filter(|x| !s.is_zero(x))
            .filter(|x| !els.iter().any(|y| !s.is_zero(y) && y != *x && s.leq(y, x)))
            .cloned()
            .collect()
    }

    fn check_atoms<S: FiniteMonoid>(s: &S) {
        let fast = atoms(s);
        assert_eq!(fast, atoms_by_order_scan(s), "{}", s.name());
        for x in s.elements() {
            let below = atoms_below(s, &fast, &x);
            assert_eq!(
                s.join_all(&below).unwrap(),
                x,
                "{} at {}",
                s.name(),
                s.render(&x)
            );
        }
    }

    #[test]
    fn atoms_of_i2_are_singleton_maps() {
        let i2 = SymmetricInverseMonoid::new(2).unwrap();
        let mut found: Vec<String> = atoms(&i2).iter().map(|a| a.to_string()).collect();
        found.sort();
        assert_eq!(found, ["{1->1}", "{1->2}", "{2->1}", "{2->2}"]);
        for n in 1..=4 {
            let i = SymmetricInverseMonoid::new(n).unwrap();
            assert_eq!(atoms(&i).len(), n * n);
            assert!(atoms(&i).iter().all(|a| a.rank() == 1));
        }
    }

    #[test]
    fn atoms_agree_with_order_scan_and_generate_by_joins() {
        check_atoms(&SymmetricInverseMonoid::new(3).unwrap());
        let b =
            LocalBisectionMonoid::new(FiniteGroupoid::from_components(&[(2, 1), (1, 2)]).unwrap())
                .unwrap();
        check_atoms(&b);
        assert!(atoms(&b).iter().all(|a| a.len() == 1));
        assert_eq!(atoms(&b).len(), b.groupoid().arrow_count());
        let i2 = SymmetricInverseMonoid::new(2).unwrap();
        check_atoms(&Product::new(i2.clone(), i2));
    }

    #[test]
    fn units_of_i3() {
        let i3 = SymmetricInverseMonoid::new(3).unwrap();
        assert_eq!(units(&i3).len(), 6);
        let i1 = SymmetricInverseMonoid::new(1).unwrap();
        assert_eq!(units(&i1), vec![i1.one()]);
    }
}
