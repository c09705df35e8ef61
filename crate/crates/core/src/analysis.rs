//! Structural classifiers: pencils and 0-simplifying, 0-simple,
//! 0-disjunctive, congruence-free, purely infinite, groups of units, and
//! classification of finite instances as symmetric inverse monoids.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::condition::{all_hold, Condition};
use crate::cuntz::{
    properly_infinite_witness, random_nonzero_clopen, random_prefix_map, transfer_witness, Clopen,
    CuntzMonoid, PrefixMap, Word,
};
use crate::duality::{atom_groupoid, fundamentality, orbit_count, theta, DualityError};
use crate::finite::{idempotent_atoms, idempotents, units, PartialBijection};
use crate::monoid::{BooleanInverseMonoid, FiniteMonoid, MonoidExt};

/// Largest carrier on which the generated ∨-ideals are enumerated directly.
pub const IDEAL_ENUMERATION_LIMIT: usize = 300;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("no pencil from {e} to {f}")]
    NoPencil { e: String, f: String },
    #[error("not classifiable: {0}")]
    NotClassifiable(String),
    #[error("outside the fundamental 0-simplifying class: {0}")]
    OutOfClass(String),
    #[error(transparent)]
    Duality(#[from] DualityError),
}

/// Elements `x_i` with `e = ⋁ d(x_i)` and every `r(x_i) ≤ f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil<E> {
    pub source: E,
    pub target: E,
    pub elements: Vec<E>,
}

/// Finds a pencil from `e` to `f` among the maximal candidates. With
/// `orthogonalize` the domains of the chosen elements are made disjoint.
pub fn find_pencil<S: FiniteMonoid>(
    s: &S,
    e: &S::Element,
    f: &S::Element,
    orthogonalize: bool,
) -> Result<Pencil<S::Element>, AnalysisError> {
    let candidates: Vec<S::Element> = s
        .elements()
        .into_iter()
        .filter(|x| !s.is_zero(x) && s.leq(&s.domain(x), e) && s.leq(&s.range(x), f))
        .collect();
    let maximal: Vec<&S::Element> = candidates
        .iter()
        .filter(|x| !candidates.iter().any(|y| y != *x && s.leq(x, y)))
        .collect();
    let mut covered = s.zero();
    let mut chosen = Vec::new();
    for x in maximal {
        let d = s.domain(x);
        if s.leq(&d, &covered) {
            continue;
        }
        let piece = if orthogonalize {
            s.multiply(x, &s.multiply(&d, &s.idempotent_complement(&covered)))
        } else {
            x.clone()
        };
        covered = s.raw_join(&covered, &d);
        chosen.push(piece);
    }
    if covered != *e {
        return Err(AnalysisError::NoPencil {
            e: s.render(e),
            f: s.render(f),
        });
    }
    Ok(Pencil {
        source: e.clone(),
        target: f.clone(),
        elements: chosen,
    })
}

/// Outcome of an exhaustive check over pairs of non-zero idempotents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub holds: bool,
    pub pairs_checked: usize,
    pub counterexample: Option<(String, String)>,
}

fn nonzero_idempotents<S: FiniteMonoid>(s: &S) -> Vec<S::Element> {
    idempotents(s)
        .into_iter()
        .filter(|e| !s.is_zero(e))
        .collect()
}

/// `e ⪯ f` for all non-zero idempotents, i.e. `≡` is universal.
pub fn zero_simplifying_check<S: FiniteMonoid>(s: &S) -> PairCheck {
    let es = nonzero_idempotents(s);
    let mut checked = 0;
    for e in &es {
        for f in &es {
            checked += 1;
            if find_pencil(s, e, f, false).is_err() {
                return PairCheck {
                    holds: false,
                    pairs_checked: checked,
                    counterexample: Some((s.render(e), s.render(f))),
                };
            }
        }
    }
    PairCheck {
        holds: true,
        pairs_checked: checked,
        counterexample: None,
    }
}

pub fn is_zero_simplifying<S: FiniteMonoid>(s: &S) -> bool {
    zero_simplifying_check(s).holds
}

/// The ∨-ideal generated by `x`: `S·x·S` closed under compatible joins.
pub fn generated_join_ideal<S: FiniteMonoid>(s: &S, x: &S::Element) -> BTreeSet<S::Element> {
    let elements = s.elements();
    let mut ideal: BTreeSet<S::Element> = BTreeSet::new();
    for a in &elements {
        let ax = s.multiply(a, x);
        for b in &elements {
            ideal.insert(s.multiply(&ax, b));
        }
    }
    loop {
        let current: Vec<S::Element> = ideal.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                if s.compatible(a, b) && ideal.insert(s.raw_join(a, b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return ideal;
        }
    }
}

/// 0-simplifying decided by enumerating the ∨-ideal generated by every
/// non-zero idempotent. `None` above [`IDEAL_ENUMERATION_LIMIT`].
pub fn zero_simplifying_by_ideals<S: FiniteMonoid>(s: &S) -> Option<bool> {
    if s.elements().len() > IDEAL_ENUMERATION_LIMIT {
        return None;
    }
    let one = s.one();
    Some(
        nonzero_idempotents(s)
            .iter()
            .all(|e| generated_join_ideal(s, e).contains(&one)),
    )
}

/// For all non-zero idempotents `e, f` some `x` has `d(x) = e`, `r(x) ≤ f`.
pub fn zero_simple_check<S: FiniteMonoid>(s: &S) -> PairCheck {
    let es = nonzero_idempotents(s);
    let spans: Vec<(S::Element, S::Element)> = s
        .elements()
        .iter()
        .filter(|x| !s.is_zero(x))
        .map(|x| (s.domain(x), s.range(x)))
        .collect();
    let mut checked = 0;
    for e in &es {
        for f in &es {
            checked += 1;
            if !spans.iter().any(|(d, r)| d == e && s.leq(r, f)) {
                return PairCheck {
                    holds: false,
                    pairs_checked: checked,
                    counterexample: Some((s.render(e), s.render(f))),
                };
            }
        }
    }
    PairCheck {
        holds: true,
        pairs_checked: checked,
        counterexample: None,
    }
}

pub fn is_zero_simple<S: FiniteMonoid>(s: &S) -> bool {
    zero_simple_check(s).holds
}

/// For all `0 ≠ f ≤ e` there is `0 ≠ g ≤ e` with `f·g = 0`, unless `f = e`.
pub fn zero_disjunctive_check<S: FiniteMonoid>(s: &S) -> PairCheck {
    let es = nonzero_idempotents(s);
    let mut checked = 0;
    for e in &es {
        for f in es.iter().filter(|f| *f != e && s.leq(f, e)) {
            checked += 1;
            let separated = es
                .iter()
                .any(|g| s.leq(g, e) && s.is_zero(&s.multiply(f, g)));
            if !separated {
                return PairCheck {
                    holds: false,
                    pairs_checked: checked,
                    counterexample: Some((s.render(e), s.render(f))),
                };
            }
        }
    }
    PairCheck {
        holds: true,
        pairs_checked: checked,
        counterexample: None,
    }
}

/// Every non-zero idempotent `e` has `x, y` with `d(x) = d(y) = e` and
/// orthogonal ranges below `e`. Returns the first idempotent without.
pub fn purely_infinite_check<S: FiniteMonoid>(s: &S) -> Result<(), String> {
    let elements = s.elements();
    for e in nonzero_idempotents(s) {
        let from_e: Vec<&S::Element> = elements
            .iter()
            .filter(|x| s.domain(x) == e && s.leq(&s.range(x), &e))
            .collect();
        let found = from_e.iter().any(|x| {
            from_e
                .iter()
                .any(|y| s.is_zero(&s.multiply(&s.range(x), &s.range(y))))
        });
        if !found {
            return Err(s.render(&e));
        }
    }
    Ok(())
}

pub fn is_purely_infinite<S: FiniteMonoid>(s: &S) -> bool {
    purely_infinite_check(s).is_ok()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitGroup {
    pub order: usize,
    pub elements: Vec<String>,
    pub generators: Vec<String>,
}

pub fn group_of_units<S: FiniteMonoid>(s: &S) -> UnitGroup {
    let all = units(s);
    let mut generated: BTreeSet<S::Element> = [s.one()].into_iter().collect();
    let mut generators = Vec::new();
    for g in &all {
        if generated.contains(g) {
            continue;
        }
        generators.push(g.clone());
        let mut frontier: Vec<S::Element> = generated.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            for h in &generators {
                let y = s.multiply(&x, h);
                if generated.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    UnitGroup {
        order: all.len(),
        elements: all.iter().map(|x| s.render(x)).collect(),
        generators: generators.iter().map(|x| s.render(x)).collect(),
    }
}

/// `|I_n| = Σ_k C(n,k)² k!`
pub fn symmetric_inverse_monoid_size(n: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    let mut fact: u128 = 1;
    for k in 0..=n as u128 {
        if k > 0 {
            binom = binom * (n as u128 + 1 - k) / k;
            fact *= k;
        }
        total += binom * binom * fact;
    }
    total
}

/// A verified isomorphism `S → I_n`, `s ↦ θ_s`.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub monoid: String,
    pub n: usize,
    /// Element and its image, a partial bijection of the atoms of `E(S)`.
    pub isomorphism: Vec<(String, String)>,
    pub checks: Vec<Condition>,
}

pub fn classify<S: FiniteMonoid>(s: &S) -> Result<Classification, AnalysisError> {
    let fund = fundamentality(s)?;
    if !fund.by_mu {
        return Err(AnalysisError::NotClassifiable("not fundamental".into()));
    }
    if !is_zero_simplifying(s) {
        return Err(AnalysisError::NotClassifiable("not 0-simplifying".into()));
    }
    let g = atom_groupoid(s)?;
    let n = g.objects.len();
    let elements = s.elements();
    let images: Vec<PartialBijection> = elements.iter().map(|x| theta(s, &g, x)).collect();
    let index: BTreeMap<&S::Element, usize> =
        elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let image = |x: &S::Element| &images[index[x]];

    let mut distinct = images.clone();
    distinct.sort();
    distinct.dedup();
    let bijective = distinct.len() == elements.len()
        && elements.len() as u128 == symmetric_inverse_monoid_size(n);
    let (mut products, mut meets, mut joins, mut inverses) = (true, true, true, true);
    for x in &elements {
        inverses &= *image(&s.inverse(x)) == image(x).inverse();
        for y in &elements {
            products &= *image(&s.multiply(x, y)) == image(x).compose(image(y));
            meets &= *image(&s.meet(x, y)) == image(x).intersection(image(y));
            if s.compatible(x, y) {
                joins &= *image(&s.raw_join(x, y)) == image(x).union(image(y));
            }
        }
    }
    let single_class = orbit_count(&g.groupoid) == 1;
    let checks = vec![
        Condition::new(
            format!("bijective onto I{n} ({} elements)", elements.len()),
            bijective,
        ),
        Condition::new("products preserved", products),
        Condition::new("inverses preserved", inverses),
        Condition::new("meets preserved", meets),
        Condition::new("compatible joins preserved", joins),
        Condition::new("atoms of E(S) form one D-class", single_class),
    ];
    if !all_hold(&checks) {
        let failed: Vec<&str> = checks
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.name.as_str())
            .collect();
        return Err(AnalysisError::NotClassifiable(format!(
            "isomorphism check failed: {}",
            failed.join(", ")
        )));
    }
    Ok(Classification {
        monoid: s.name(),
        n,
        isomorphism: elements
            .iter()
            .zip(&images)
            .map(|(x, t)| (s.render(x), t.to_string()))
            .collect(),
        checks,
    })
}

/// Groups of units versus monoids, for two classifiable instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub left: String,
    pub right: String,
    pub left_n: usize,
    pub right_n: usize,
    pub left_units: usize,
    pub right_units: usize,
    pub units_isomorphic: bool,
    pub monoids_isomorphic: bool,
}

impl Realization {
    pub fn consistent(&self) -> bool {
        self.units_isomorphic == self.monoids_isomorphic
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Both instances are classified as `I_n`, `I_m`. The monoids are isomorphic
/// iff `n = m`; the unit groups are `S_n`, `S_m`, isomorphic iff their
/// orders agree. Unit orders are counted directly and compared with `n!`.
pub fn finite_spatial_realization_check<S: FiniteMonoid, T: FiniteMonoid>(
    s: &S,
    t: &T,
) -> Result<Realization, AnalysisError> {
    let cs = classify(s).map_err(|e| AnalysisError::OutOfClass(format!("{}: {e}", s.name())))?;
    let ct = classify(t).map_err(|e| AnalysisError::OutOfClass(format!("{}: {e}", t.name())))?;
    let (us, ut) = (units(s).len(), units(t).len());
    if us != factorial(cs.n) || ut != factorial(ct.n) {
        return Err(AnalysisError::NotClassifiable(
            "unit group order differs from n!".into(),
        ));
    }
    Ok(Realization {
        left: s.name(),
        right: t.name(),
        left_n: cs.n,
        right_n: ct.n,
        left_units: us,
        right_units: ut,
        units_isomorphic: us == ut,
        monoids_isomorphic: cs.n == ct.n,
    })
}

/// `s = φ(s) ∨ ⋁ a_i` with the `a_i` the atoms below `s·σ(s)`, each an
/// infinitesimal. Fails with the first atom that is not.
pub fn finite_principality_decompose<S: FiniteMonoid>(
    s: &S,
    x: &S::Element,
) -> Result<(S::Element, Vec<S::Element>), String> {
    let (fixed, moving) = s.cooper_decompose(x);
    let parts: Vec<S::Element> = crate::finite::atoms(s)
        .into_iter()
        .filter(|a| s.leq(a, &moving))
        .collect();
    if let Some(a) = parts.iter().find(|a| !s.is_infinitesimal(a)) {
        return Err(s.render(a));
    }
    Ok((fixed, parts))
}

/// A flag with its evaluation mode and evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub value: bool,
    /// `exact` (exhaustive or decided) or `sampled` (checked with verified
    /// witnesses on a seeded sample, following a uniform construction).
    pub mode: String,
    pub evidence: String,
}

impl Flag {
    fn exact(value: bool, evidence: impl Into<String>) -> Self {
        Self {
            value,
            mode: "exact".into(),
            evidence: evidence.into(),
        }
    }

    fn sampled(value: bool, evidence: impl Into<String>) -> Self {
        Self {
            value,
            mode: "sampled".into(),
            evidence: evidence.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationSummary {
    pub n: usize,
    pub verified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub instance: String,
    pub carrier_size: Option<usize>,
    pub seed: Option<u64>,
    pub is_boolean_inverse_meet_monoid: Flag,
    pub is_fundamental: Flag,
    pub is_zero_simple: Flag,
    pub is_zero_simplifying: Flag,
    pub is_zero_disjunctive: Flag,
    pub is_congruence_free: Flag,
    pub is_purely_infinite: Flag,
    pub classification: Option<ClassificationSummary>,
    pub not_classifiable: Option<String>,
    pub units: Option<UnitGroup>,
    pub cross_checks: Vec<Condition>,
}

fn describe(check: &PairCheck, what: &str) -> String {
    match &check.counterexample {
        None => format!(
            "{what} on all {} pairs of non-zero idempotents",
            check.pairs_checked
        ),
        Some((e, f)) => format!("fails for e = {e}, f = {f}"),
    }
}

pub fn analyze_finite<S: FiniteMonoid>(s: &S) -> Result<AnalysisReport, AnalysisError> {
    let g = atom_groupoid(s)?;
    let size = s.elements().len();
    let fund = fundamentality(s)?;
    let simplifying = zero_simplifying_check(s);
    let simple = zero_simple_check(s);
    let disjunctive = zero_disjunctive_check(s);
    let infinite = purely_infinite_check(s);
    let es = idempotents(s);
    let idem_atoms = idempotent_atoms(s);
    let orbits = orbit_count(&g.groupoid);

    let mut cross_checks = vec![
        Condition::new(
            "fundamentality: mu, centralizer and theta agree",
            fund.consistent(),
        ),
        Condition::new(
            "0-simplifying iff the atom groupoid has one orbit",
            simplifying.holds == (orbits == 1),
        ),
        Condition::new(
            format!("|E(S)| = 2^{} (finite Boolean algebra)", idem_atoms.len()),
            es.len() == 1 << idem_atoms.len(),
        ),
    ];
    if let Some(by_ideals) = zero_simplifying_by_ideals(s) {
        cross_checks.push(Condition::new(
            "0-simplifying agrees with generated join-ideal enumeration",
            by_ideals == simplifying.holds,
        ));
    }
    let (classification, not_classifiable) = match classify(s) {
        Ok(c) => (
            Some(ClassificationSummary {
                n: c.n,
                verified: all_hold(&c.checks),
            }),
            None,
        ),
        Err(AnalysisError::NotClassifiable(reason)) => (None, Some(reason)),
        Err(e) => return Err(e),
    };
    let congruence_free = fund.by_mu && simple.holds && disjunctive.holds;
    Ok(AnalysisReport {
        instance: s.name(),
        carrier_size: Some(size),
        seed: None,
        is_boolean_inverse_meet_monoid: Flag::exact(
            true,
            format!(
                "E(S) is a Boolean algebra with {} atoms; {} atoms of S generate every element by joins",
                idem_atoms.len(),
                g.arrows.len()
            ),
        ),
        is_fundamental: Flag::exact(
            fund.by_mu,
            match &fund.counterexample {
                None => "mu is equality".to_string(),
                Some((x, y)) => format!("{x} and {y} are distinct but mu-related"),
            },
        ),
        is_zero_simple: Flag::exact(simple.holds, describe(&simple, "some x has d(x) = e, r(x) <= f")),
        is_zero_simplifying: Flag::exact(simplifying.holds, describe(&simplifying, "pencils exist")),
        is_zero_disjunctive: Flag::exact(
            disjunctive.holds,
            describe(&disjunctive, "separating idempotents exist"),
        ),
        is_congruence_free: Flag::exact(
            congruence_free,
            "fundamental and 0-simple and 0-disjunctive",
        ),
        is_purely_infinite: Flag::exact(
            infinite.is_ok(),
            match &infinite {
                Ok(()) => "every non-zero idempotent is properly infinite".to_string(),
                Err(e) => format!("{e} is not properly infinite"),
            },
        ),
        classification,
        not_classifiable,
        units: Some(group_of_units(s)),
        cross_checks,
    })
}

/// A cylinder `[w]` with `|w| ≤ depth` that does not commute with `a`, if any.
pub fn non_commuting_cylinder(a: &PrefixMap, depth: usize) -> Option<Word> {
    let n = a.arity();
    let mut level = vec![Word::empty()];
    for _ in 0..=depth {
        for w in &level {
            let e = Clopen::cylinder(n, w.clone()).to_map();
            if a.compose(&e) != e.compose(a) {
                return Some(w.clone());
            }
        }
        level = level
            .iter()
            .flat_map(|w| (0..n).map(move |x| w.child(x)))
            .collect();
    }
    None
}

/// Sampled analysis of `C_n`. Every sampled flag is backed by a witness
/// that is verified exactly.
pub fn analyze_cuntz<R: Rng + ?Sized>(
    c: &CuntzMonoid,
    rng: &mut R,
    samples: usize,
    seed: Option<u64>,
) -> AnalysisReport {
    let n = c.arity();
    let mut fundamental = true;
    let mut non_idempotent = 0;
    for _ in 0..samples {
        let a = random_prefix_map(rng, n);
        if c.is_idempotent(&a) {
            continue;
        }
        non_idempotent += 1;
        fundamental &= non_commuting_cylinder(&a, a.max_word_len() + 2).is_some();
    }
    let mut simple = true;
    let mut infinite = true;
    let mut disjunctive = true;
    for _ in 0..samples {
        let e = random_nonzero_clopen(rng, n);
        let f = random_nonzero_clopen(rng, n);
        simple &= match transfer_witness(&e, &f) {
            Ok(x) => x.domain_clopen() == e && x.range_clopen().is_subset(&f),
            Err(_) => false,
        };
        infinite &= match properly_infinite_witness(&e) {
            Ok((x, y)) => {
                let (rx, ry) = (x.range_clopen(), y.range_clopen());
                x.domain_clopen() == e
                    && y.domain_clopen() == e
                    && rx.is_disjoint(&ry)
                    && rx.union(&ry).is_subset(&e)
            }
            Err(_) => false,
        };
        let inner = e.intersection(&f);
        if !inner.is_empty() && inner != e {
            disjunctive &= !e.difference(&inner).is_empty();
        }
    }
    let congruence_free = fundamental && simple && disjunctive;
    AnalysisReport {
        instance: c.name(),
        carrier_size: None,
        seed,
        is_boolean_inverse_meet_monoid: Flag::exact(
            true,
            "normal-form prefix-map arithmetic; E(C_n) is the algebra of clopens",
        ),
        is_fundamental: Flag::sampled(
            fundamental,
            format!(
                "each of {non_idempotent} sampled non-idempotents fails to commute with a cylinder of depth <= max word length + 2"
            ),
        ),
        is_zero_simple: Flag::sampled(
            simple,
            format!("transfer maps d(x) = e, r(x) <= f verified on {samples} clopen pairs"),
        ),
        is_zero_simplifying: Flag::sampled(
            simple,
            format!("one-element pencils from transfer maps verified on {samples} clopen pairs"),
        ),
        is_zero_disjunctive: Flag::exact(
            disjunctive,
            "idempotents form a Boolean algebra (relative complements checked on samples)",
        ),
        is_congruence_free: Flag::sampled(
            congruence_free,
            "fundamental and 0-simple and 0-disjunctive",
        ),
        is_purely_infinite: Flag::sampled(
            infinite,
            format!("child-cylinder witnesses x, y verified on {samples} clopens"),
        ),
        classification: None,
        not_classifiable: Some("infinite instance".into()),
        units: None,
        cross_checks: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{FiniteGroupoid, LocalBisectionMonoid, Product, SymmetricInverseMonoid};

    fn sym(n: usize) -> SymmetricInverseMonoid {
        SymmetricInverseMonoid::new(n).unwrap()
    }

    #[test]
    fn pencils() {
        let i2 = sym(2);
        let p = find_pencil(&i2, &i2.one(), &i2.parse_element("{1->1}").unwrap(), true).unwrap();
        let mut found: Vec<String> = p.elements.iter().map(|x| x.to_string()).collect();
        found.sort();
        assert_eq!(found, ["{1->1}", "{2->1}"]);
        let pp = Product::new(sym(2), sym(2));
        let e = pp.one();
        let f = (i2.parse_element("{1->1}").unwrap(), i2.zero());
        assert!(matches!(
            find_pencil(&pp, &e, &f, false),
            Err(AnalysisError::NoPencil { .. })
        ));
    }

    #[test]
    fn simplicity_flags() {
        for n in 2..=4 {
            let s = sym(n);
            assert!(is_zero_simplifying(&s));
            assert!(!is_zero_simple(&s));
            assert!(!is_purely_infinite(&s));
        }
        assert!(is_zero_simple(&sym(1)));
        assert_eq!(zero_simplifying_by_ideals(&sym(3)), Some(true));
        let pp = Product::new(sym(2), sym(2));
        assert!(!is_zero_simplifying(&pp));
        assert_eq!(zero_simplifying_by_ideals(&pp), Some(false));
        assert!(zero_disjunctive_check(&sym(3)).holds);
    }

    #[test]
    fn carrier_size_formula() {
        let sizes: Vec<u128> = (1..=6).map(symmetric_inverse_monoid_size).collect();
        let enumerated: Vec<u128> = (1..=6).map(|n| sym(n).elements().len() as u128).collect();
        assert_eq!(sizes, enumerated);
    }

    #[test]
    fn classification() {
        assert_eq!(classify(&sym(3)).unwrap().n, 3);
        let b3 = LocalBisectionMonoid::new(FiniteGroupoid::pair(3).unwrap()).unwrap();
        assert_eq!(classify(&b3).unwrap().n, 3);
        match classify(&Product::new(sym(2), sym(2))) {
            Err(AnalysisError::NotClassifiable(r)) => assert_eq!(r, "not 0-simplifying"),
            other => panic!("{other:?}"),
        }
        let z2 = LocalBisectionMonoid::new(FiniteGroupoid::cyclic_group(2).unwrap()).unwrap();
        match classify(&z2) {
            Err(AnalysisError::NotClassifiable(r)) => assert_eq!(r, "not fundamental"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn units() {
        assert_eq!(group_of_units(&sym(3)).order, 6);
        assert_eq!(group_of_units(&sym(3)).generators.len(), 2);
        assert_eq!(group_of_units(&sym(1)).order, 1);
        let z2 = LocalBisectionMonoid::new(FiniteGroupoid::cyclic_group(2).unwrap()).unwrap();
        assert_eq!(group_of_units(&z2).order, 2);
    }

    #[test]
    fn realization() {
        let b3 = LocalBisectionMonoid::new(FiniteGroupoid::pair(3).unwrap()).unwrap();
        let r = finite_spatial_realization_check(&sym(3), &b3).unwrap();
        assert!(r.units_isomorphic && r.monoids_isomorphic);
        let r = finite_spatial_realization_check(&sym(2), &sym(3)).unwrap();
        assert!(!r.units_isomorphic && !r.monoids_isomorphic);
        assert!(matches!(
            finite_spatial_realization_check(&Product::new(sym(2), sym(2)), &sym(2)),
            Err(AnalysisError::OutOfClass(_))
        ));
    }

    #[test]
    fn reports() {
        let r = analyze_finite(&sym(3)).unwrap();
        assert!(r.is_fundamental.value && r.is_zero_simplifying.value);
        assert!(!r.is_zero_simple.value && !r.is_congruence_free.value);
        assert_eq!(r.classification.as_ref().unwrap().n, 3);
        assert!(all_hold(&r.cross_checks));
        let r = analyze_finite(&sym(1)).unwrap();
        assert!(r.is_congruence_free.value);
    }
}
