//! Postcondition checkers for the witness constructions.

use rand::Rng;

use crate::condition::Condition;
use crate::cuntz::{random_point_in, Clopen, CuntzMonoid, EPPoint, PrefixMap};
use crate::monoid::{BooleanInverseMonoid, MonoidExt};

fn support(g: &PrefixMap) -> Clopen {
    CuntzMonoid::of(g.arity()).sigma(g).domain_clopen()
}

/// `t² = 1`, `t ≠ 1`, `σ(t) ≤ e`, `p ∈ σ(t)`.
pub fn check_f1(e: &Clopen, p: &EPPoint, t: &PrefixMap) -> Vec<Condition> {
    let c = CuntzMonoid::of(t.arity());
    let sigma = support(t);
    vec![
        Condition::new("t^2 = 1", c.multiply(t, t) == c.one()),
        Condition::new("t != 1", *t != c.one()),
        Condition::new("sigma(t) <= e", sigma.is_subset(e)),
        Condition::new("p in sigma(t)", sigma.contains_point(p)),
    ]
}

/// `g² = 1`, `σ(g) ≤ e ∨ t·e·t`, and on sampled points: `g·F = t·F` inside
/// `σ(g)` and `g·F = F` on the fixed set of `t`.
pub fn check_f2<R: Rng + ?Sized>(
    t: &PrefixMap,
    e: &Clopen,
    g: &PrefixMap,
    rng: &mut R,
    samples: usize,
) -> Vec<Condition> {
    let c = CuntzMonoid::of(t.arity());
    let sigma = support(g);
    let tet = t.restrict(e).range_clopen();
    let moved_agree = (0..samples).all(|_| match random_point_in(rng, &sigma) {
        Some(p) => g.apply(&p).ok() == t.apply(&p).ok(),
        None => true,
    });
    let fixed = c.phi(t).domain_clopen();
    let fixed_kept = (0..samples).all(|_| match random_point_in(rng, &fixed) {
        Some(p) => g.apply(&p).ok() == Some(p),
        None => true,
    });
    vec![
        Condition::new("g is a unit", c.is_unit(g)),
        Condition::new("g^2 = 1", c.multiply(g, g) == c.one()),
        Condition::new("g != 1", *g != c.one()),
        Condition::new("sigma(g) <= e v tet", sigma.is_subset(&e.union(&tet))),
        Condition::new(
            format!("g.F = t.F on {samples} points of sigma(g)"),
            moved_agree,
        ),
        Condition::new(
            format!("g.F = F on {samples} points fixed by t"),
            fixed_kept,
        ),
    ]
}

/// `g³ = 1`, `g ≠ 1`, `g² ≠ 1`, `σ(g) ≤ e`.
pub fn check_f3(e: &Clopen, g: &PrefixMap) -> Vec<Condition> {
    let c = CuntzMonoid::of(g.arity());
    let g2 = c.multiply(g, g);
    vec![
        Condition::new("g is a unit", c.is_unit(g)),
        Condition::new("g^3 = 1", c.multiply(&g2, g) == c.one()),
        Condition::new("g != 1", *g != c.one()),
        Condition::new("g^2 != 1", g2 != c.one()),
        Condition::new("sigma(g) <= e", support(g).is_subset(e)),
    ]
}
