//! Seeded property suites over an [`Instance`]: `axioms`, `order`, `support`,
//! `duality`, `witnesses` and `classification`. Finite instances are checked
//! exhaustively where feasible; `C_n` on seeded samples.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{
    analyze_cuntz, analyze_finite, classify, finite_principality_decompose, non_commuting_cylinder,
    zero_simplifying_by_ideals, AnalysisError,
};
use crate::condition::{all_hold, Condition};
use crate::cuntz::{
    check_f1, check_f2, check_f3, clopen_iso, conjugator_unit, f1_witness, f2_witness, f3_witness,
    find_moved_point, infinitesimal_cover, infinitesimal_factors, piecewise_factorize,
    principality_decompose, properly_infinite_witness, random_clopen, random_involution,
    random_nonzero_clopen, random_point, random_point_in, random_prefix_map, random_subclopen,
    random_unit, random_unit_within, support_cover, transfer_witness, unit_in_ultrafilter, Clopen,
    CuntzError, CuntzMonoid, PrefixMap, Principality, Word,
};
use crate::duality::{atom_groupoid, check_unit_cosets, duality_checks, orbit_count};
use crate::finite::{idempotents, units};
use crate::instance::Instance;
use crate::monoid::{BooleanInverseMonoid, FiniteMonoid, MonoidExt};
use crate::with_finite;

pub const SUITES: [&str; 6] = [
    "axioms",
    "order",
    "support",
    "duality",
    "witnesses",
    "classification",
];
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 200;
/// Finite carriers with at most this many triples are checked exhaustively.
pub const EXHAUSTIVE_TRIPLES: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}` (expected one of axioms, order, support, duality, witnesses, classification)")]
    UnknownSuite(String),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instance: String,
    pub seed: u64,
    pub samples: usize,
    pub exhaustive: bool,
    pub checks: Vec<Condition>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        all_hold(&self.checks)
    }
}

struct Tally {
    name: String,
    cases: usize,
    failure: Option<String>,
}

/// Named laws with their case counts and first violation.
#[derive(Default)]
struct Laws {
    tallies: Vec<Tally>,
}

impl Laws {
    fn record(&mut self, name: &str, ok: bool, case: impl FnOnce() -> String) {
        let i = match self.tallies.iter().position(|t| t.name == name) {
            Some(i) => i,
            None => {
                self.tallies.push(Tally {
                    name: name.to_string(),
                    cases: 0,
                    failure: None,
                });
                self.tallies.len() - 1
            }
        };
        let t = &mut self.tallies[i];
        t.cases += 1;
        if !ok && t.failure.is_none() {
            t.failure = Some(case());
        }
    }

    /// Records a conditional law; cases where `applies` is false are skipped.
    fn record_if(
        &mut self,
        name: &str,
        applies: bool,
        ok: impl FnOnce() -> bool,
        case: impl FnOnce() -> String,
    ) {
        if applies {
            self.record(name, ok(), case);
        } else if !self.tallies.iter().any(|t| t.name == name) {
            self.tallies.push(Tally {
                name: name.to_string(),
                cases: 0,
                failure: None,
            });
        }
    }

    fn finish(self) -> Vec<Condition> {
        self.tallies
            .into_iter()
            .map(|t| {
                let detail = match &t.failure {
                    None => format!("{} cases", t.cases),
                    Some(case) => format!("violated at {case} ({} cases)", t.cases),
                };
                Condition::new(t.name, t.failure.is_none()).with_detail(detail)
            })
            .collect()
    }
}

struct Cases<E> {
    singles: Vec<E>,
    pairs: Vec<(E, E)>,
    triples: Vec<(E, E, E)>,
    exhaustive: bool,
}

fn finite_cases<S: FiniteMonoid, R: Rng>(s: &S, rng: &mut R, samples: usize) -> Cases<S::Element> {
    let all = s.elements();
    let n = all.len();
    let pairs: Vec<_> = all
        .iter()
        .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let exhaustive = n.pow(3) <= EXHAUSTIVE_TRIPLES;
    let triples = if exhaustive {
        pairs
            .iter()
            .flat_map(|(a, b)| all.iter().map(move |c| (a.clone(), b.clone(), c.clone())))
            .collect()
    } else {
        (0..samples.max(1000))
            .map(|_| {
                let mut pick = || all.choose(rng).expect("non-empty").clone();
                (pick(), pick(), pick())
            })
            .collect()
    };
    Cases {
        singles: all,
        pairs,
        triples,
        exhaustive,
    }
}

/// Random triples plus triples built to exercise the conditional laws:
/// `s = x·e1`, `t = x·e2` compatible, with a common lower bound and a
/// common upper bound.
fn cuntz_cases<R: Rng>(n: u8, rng: &mut R, samples: usize) -> Cases<PrefixMap> {
    let mut cases = Cases {
        singles: Vec::new(),
        pairs: Vec::new(),
        triples: Vec::new(),
        exhaustive: false,
    };
    for _ in 0..samples {
        let a = random_prefix_map(rng, n);
        let b = random_prefix_map(rng, n);
        let c = random_prefix_map(rng, n);
        let x = random_prefix_map(rng, n);
        let (e1, e2, e3) = (
            random_clopen(rng, n),
            random_clopen(rng, n),
            random_clopen(rng, n),
        );
        let s = x.restrict(&e1);
        let t = x.restrict(&e2);
        let lower = x.restrict(&e1.intersection(&e2).intersection(&e3));
        let upper = x.restrict(&e1.union(&e2).union(&e3));
        cases.singles.extend([a.clone(), s.clone()]);
        cases.pairs.extend([
            (a.clone(), b.clone()),
            (s.clone(), t.clone()),
            (lower.clone(), s.clone()),
        ]);
        cases.triples.extend([
            (a, b, c.clone()),
            (s.clone(), t.clone(), c),
            (s.clone(), t.clone(), lower),
            (s, t, upper),
        ]);
    }
    cases
}

fn axiom_laws<S: BooleanInverseMonoid>(s: &S, cases: &Cases<S::Element>) -> Vec<Condition> {
    let mut laws = Laws::default();
    let (zero, one) = (s.zero(), s.one());
    for x in &cases.singles {
        let show = || s.render(x);
        let xi = s.inverse(x);
        laws.record(
            "s s^-1 s = s and s^-1 s s^-1 = s^-1",
            s.multiply(&s.multiply(x, &xi), x) == *x && s.multiply(&s.multiply(&xi, x), &xi) == xi,
            show,
        );
        laws.record("(s^-1)^-1 = s", s.inverse(&xi) == *x, show);
        laws.record(
            "0 absorbs and 1 is neutral",
            s.multiply(&zero, x) == zero
                && s.multiply(x, &zero) == zero
                && s.multiply(&one, x) == *x
                && s.multiply(x, &one) == *x,
            show,
        );
        let (d, r) = (s.domain(x), s.range(x));
        laws.record(
            "d(s) and r(s) are idempotent",
            s.is_idempotent(&d) && s.is_idempotent(&r),
            show,
        );
        let complement_ok = [&d, &r].iter().all(|e| {
            let c = s.idempotent_complement(e);
            s.is_zero(&s.multiply(e, &c))
                && s.raw_join(e, &c) == one
                && s.idempotent_complement(&c) == **e
        });
        laws.record("Boolean complement of d(s) and r(s)", complement_ok, show);
    }
    for (x, y) in &cases.pairs {
        let show = || format!("({}, {})", s.render(x), s.render(y));
        laws.record(
            "(st)^-1 = t^-1 s^-1",
            s.inverse(&s.multiply(x, y)) == s.multiply(&s.inverse(y), &s.inverse(x)),
            show,
        );
        let (e, f) = (s.domain(x), s.range(y));
        laws.record(
            "idempotents commute",
            s.multiply(&e, &f) == s.multiply(&f, &e),
            show,
        );
        laws.record(
            "de Morgan on idempotents",
            s.idempotent_complement(&s.multiply(&e, &f))
                == s.raw_join(&s.idempotent_complement(&e), &s.idempotent_complement(&f)),
            show,
        );
        laws.record(
            "idempotent meet is the product",
            s.meet(&e, &f) == s.multiply(&e, &f),
            show,
        );
        let m = s.meet(x, y);
        laws.record(
            "meet is commutative and a lower bound",
            m == s.meet(y, x) && s.leq(&m, x) && s.leq(&m, y),
            show,
        );
        let compatible = s.compatible(x, y);
        laws.record_if(
            "compatible meet: s^t = s d(t), d(s^t) = d(s)d(t), r(s^t) = r(s)r(t)",
            compatible,
            || {
                m == s.multiply(x, &s.domain(y))
                    && s.domain(&m) == s.multiply(&s.domain(x), &s.domain(y))
                    && s.range(&m) == s.multiply(&s.range(x), &s.range(y))
            },
            show,
        );
        laws.record_if(
            "compatible join: d and r preserve joins, join is an upper bound",
            compatible,
            || match s.join(x, y) {
                Ok(j) => {
                    s.domain(&j) == s.raw_join(&s.domain(x), &s.domain(y))
                        && s.range(&j) == s.raw_join(&s.range(x), &s.range(y))
                        && s.leq(x, &j)
                        && s.leq(y, &j)
                }
                Err(_) => false,
            },
            show,
        );
    }
    for (x, y, z) in &cases.triples {
        let show = || format!("({}, {}, {})", s.render(x), s.render(y), s.render(z));
        laws.record(
            "associativity",
            s.multiply(&s.multiply(x, y), z) == s.multiply(x, &s.multiply(y, z)),
            show,
        );
        laws.record_if(
            "meet is the greatest lower bound",
            s.leq(z, x) && s.leq(z, y),
            || s.leq(z, &s.meet(x, y)),
            show,
        );
        let compatible = s.compatible(x, y);
        laws.record_if(
            "compatible join is the least upper bound",
            compatible && s.leq(x, z) && s.leq(y, z),
            || s.leq(&s.raw_join(x, y), z),
            show,
        );
        laws.record_if(
            "product distributes over compatible joins",
            compatible,
            || {
                let j = s.raw_join(x, y);
                s.multiply(z, &j) == s.raw_join(&s.multiply(z, x), &s.multiply(z, y))
                    && s.multiply(&j, z) == s.raw_join(&s.multiply(x, z), &s.multiply(y, z))
            },
            show,
        );
        laws.record_if(
            "meet distributes over compatible joins",
            compatible,
            || s.meet(z, &s.raw_join(x, y)) == s.raw_join(&s.meet(z, x), &s.meet(z, y)),
            show,
        );
        let (e, f, g) = (s.domain(x), s.range(y), s.domain(z));
        laws.record(
            "idempotents form a distributive lattice",
            s.multiply(&e, &s.raw_join(&f, &g))
                == s.raw_join(&s.multiply(&e, &f), &s.multiply(&e, &g))
                && s.raw_join(&e, &s.multiply(&f, &g))
                    == s.multiply(&s.raw_join(&e, &f), &s.raw_join(&e, &g)),
            show,
        );
    }
    laws.finish()
}

fn order_laws<S: BooleanInverseMonoid>(s: &S, cases: &Cases<S::Element>) -> Vec<Condition> {
    let mut laws = Laws::default();
    let one = s.one();
    for x in &cases.singles {
        let show = || s.render(x);
        laws.record("reflexive", s.leq(x, x), show);
        laws.record("compatible is reflexive", s.compatible(x, x), show);
        laws.record(
            "idempotents are exactly the elements below 1",
            s.is_idempotent(x) == s.leq(x, &one),
            show,
        );
    }
    for (x, y) in &cases.pairs {
        let show = || format!("({}, {})", s.render(x), s.render(y));
        let le = s.leq(x, y);
        laws.record_if("antisymmetric", le && s.leq(y, x), || x == y, show);
        laws.record(
            "s <= t iff s = r(s) t",
            le == (*x == s.multiply(&s.range(x), y)),
            show,
        );
        laws.record_if(
            "s <= t implies s^-1 <= t^-1",
            le,
            || s.leq(&s.inverse(x), &s.inverse(y)),
            show,
        );
        laws.record_if("s <= t implies compatible", le, || s.compatible(x, y), show);
        let compatible = s.compatible(x, y);
        laws.record(
            "compatible is symmetric",
            compatible == s.compatible(y, x),
            show,
        );
        laws.record_if(
            "compatible implies s d(t) = t d(s)",
            compatible,
            || s.multiply(x, &s.domain(y)) == s.multiply(y, &s.domain(x)),
            show,
        );
        let orthogonal = s.orthogonal(x, y);
        laws.record_if(
            "orthogonal implies compatible",
            orthogonal,
            || compatible,
            show,
        );
        laws.record(
            "orthogonal iff d(s)d(t) = 0 and r(s)r(t) = 0",
            orthogonal
                == (s.is_zero(&s.multiply(&s.domain(x), &s.domain(y)))
                    && s.is_zero(&s.multiply(&s.range(x), &s.range(y)))),
            show,
        );
    }
    for (x, y, z) in &cases.triples {
        let show = || format!("({}, {}, {})", s.render(x), s.render(y), s.render(z));
        laws.record_if(
            "transitive",
            s.leq(x, y) && s.leq(y, z),
            || s.leq(x, z),
            show,
        );
        laws.record_if(
            "order is compatible with products",
            s.leq(x, y),
            || {
                s.leq(&s.multiply(z, x), &s.multiply(z, y))
                    && s.leq(&s.multiply(x, z), &s.multiply(y, z))
            },
            show,
        );
    }
    laws.finish()
}

/// Support laws on elements: the fixed/moving decomposition and the
/// fixed-point operator against an idempotent oracle.
fn support_element_laws<S, O>(s: &S, elements: &[S::Element], below: O, laws: &mut Laws)
where
    S: BooleanInverseMonoid,
    O: Fn(&S::Element) -> Vec<S::Element>,
{
    for x in elements {
        let show = || s.render(x);
        let (fixed, moving) = s.cooper_decompose(x);
        laws.record(
            "fixed and moving parts are orthogonal and re-join to s",
            s.orthogonal(&fixed, &moving) && s.raw_join(&fixed, &moving) == *x,
            show,
        );
        laws.record(
            "moving part has no fixed part",
            s.is_zero(&s.phi(&moving)),
            show,
        );
        let phi = s.phi(x);
        laws.record(
            "phi(s) is an idempotent below s, sigma(s) <= d(s)",
            s.is_idempotent(&phi) && s.leq(&phi, x) && s.leq(&s.sigma(x), &s.domain(x)),
            show,
        );
        laws.record(
            "phi(s) is the largest idempotent below s",
            below(x).iter().all(|e| s.leq(e, x) == s.leq(e, &phi)),
            show,
        );
    }
}

fn support_unit_laws<S: BooleanInverseMonoid>(
    s: &S,
    pairs: &[(S::Element, S::Element)],
    laws: &mut Laws,
) {
    let one = s.one();
    for (g, h) in pairs {
        let show = || format!("({}, {})", s.render(g), s.render(h));
        let (sg, sh) = (s.sigma(g), s.sigma(h));
        laws.record("sigma(g^-1) = sigma(g)", s.sigma(&s.inverse(g)) == sg, show);
        laws.record(
            "sigma(gh) <= sigma(g) v sigma(h)",
            s.leq(&s.sigma(&s.multiply(g, h)), &s.raw_join(&sg, &sh)),
            show,
        );
        laws.record(
            "sigma(g) = 0 iff g = 1",
            s.is_zero(&sg) == (*g == one),
            show,
        );
        laws.record_if(
            "disjoint supports commute",
            s.is_zero(&s.multiply(&sg, &sh)),
            || s.commutator(g, h).ok() == Some(one.clone()),
            show,
        );
        let conj = s.multiply(&s.multiply(g, h), &s.inverse(g));
        laws.record(
            "sigma(g h g^-1) = g sigma(h) g^-1",
            s.sigma(&conj) == s.multiply(&s.multiply(g, &sh), &s.inverse(g)),
            show,
        );
    }
}

fn cylinders_at(n: u8, depth: usize) -> Vec<Word> {
    let mut level = vec![Word::empty()];
    for _ in 0..depth {
        level = level
            .iter()
            .flat_map(|w| (0..n).map(move |a| w.child(a)))
            .collect();
    }
    level
}

fn random_word<R: Rng>(rng: &mut R, n: u8, len: usize) -> Word {
    Word::from_letters((0..len).map(|_| rng.gen_range(0..n)).collect())
}

/// Unit pairs: half independent, half supported in disjoint cylinders.
fn cuntz_unit_pairs<R: Rng>(rng: &mut R, n: u8, count: usize) -> Vec<(PrefixMap, PrefixMap)> {
    (0..count)
        .map(|i| {
            if i % 2 == 0 {
                (random_unit(rng, n), random_unit(rng, n))
            } else {
                let len = rng.gen_range(1..=2);
                let w1 = random_word(rng, n, len);
                let w2 = loop {
                    let len = rng.gen_range(1..=2);
                    let w = random_word(rng, n, len);
                    if !w.comparable(&w1) {
                        break w;
                    }
                };
                (
                    random_unit_within(rng, n, &w1),
                    random_unit_within(rng, n, &w2),
                )
            }
        })
        .collect()
}

fn support_suite_finite<S: FiniteMonoid>(s: &S) -> Vec<Condition> {
    let mut laws = Laws::default();
    let es = idempotents(s);
    support_element_laws(s, &s.elements(), |_| es.clone(), &mut laws);
    let us = units(s);
    let pairs: Vec<_> = us
        .iter()
        .flat_map(|g| us.iter().map(move |h| (g.clone(), h.clone())))
        .collect();
    support_unit_laws(s, &pairs, &mut laws);
    laws.finish()
}

fn support_suite_cuntz<R: Rng>(c: &CuntzMonoid, rng: &mut R, samples: usize) -> Vec<Condition> {
    let n = c.arity();
    let mut laws = Laws::default();
    let elements: Vec<PrefixMap> = (0..samples).map(|_| random_prefix_map(rng, n)).collect();
    support_element_laws(
        c,
        &elements,
        |x| {
            cylinders_at(n, x.max_word_len() + 2)
                .into_iter()
                .map(|w| Clopen::cylinder(n, w).to_map())
                .collect()
        },
        &mut laws,
    );
    support_unit_laws(c, &cuntz_unit_pairs(rng, n, samples), &mut laws);
    for _ in 0..samples {
        let g = random_unit(rng, n);
        let sigma = c.sigma(&g).domain_clopen();
        let show = || g.to_string();
        let q = random_point(rng, n);
        let moved = g.apply(&q).map(|gq| gq != q).unwrap_or(false);
        laws.record_if(
            "moved points lie in sigma(g)",
            moved,
            || sigma.contains_point(&q),
            show,
        );
        for w in sigma.words() {
            let cylinder = Clopen::cylinder(n, w.clone());
            laws.record(
                "every cylinder of sigma(g) contains a moved point",
                find_moved_point(&g, &cylinder)
                    .map(|p| cylinder.contains_point(&p) && g.apply(&p).ok() != Some(p.clone()))
                    .unwrap_or(false),
                || format!("{g} on {cylinder}"),
            );
        }
        let e = random_nonzero_clopen(rng, n);
        let w = e.words()[0].child(0);
        laws.record(
            "every non-zero clopen has a strictly smaller non-zero clopen",
            Clopen::cylinder(n, w).is_subset(&e) && e.cylinder_count() > 0,
            || e.to_string(),
        );
        let f = random_clopen(rng, n);
        let supported_in = |g: &PrefixMap, e: &Clopen| c.sigma(g).domain_clopen().is_subset(e);
        let inner = random_unit_within(rng, n, &e.words()[0]);
        let larger = e.union(&f);
        laws.record(
            "U(e) within U(f) when e <= f",
            supported_in(&inner, &e) && supported_in(&inner, &larger),
            || format!("g = {inner}, e = {e}, f = {larger}"),
        );
        let outside = e.difference(&f);
        laws.record_if(
            "a unit of U(e) outside U(f) exists when e is not below f",
            !outside.is_empty(),
            || match f3_witness(&outside) {
                Ok(g) => supported_in(&g, &e) && !supported_in(&g, &f),
                Err(_) => false,
            },
            || format!("e = {e}, f = {f}"),
        );
        let a = random_prefix_map(rng, n);
        laws.record_if(
            "commuting with all cylinders forces an idempotent",
            !a.is_idempotent(),
            || non_commuting_cylinder(&a, a.max_word_len() + 2).is_some(),
            || a.to_string(),
        );
    }
    laws.finish()
}

fn duality_suite_finite<S: FiniteMonoid>(s: &S) -> Vec<Condition> {
    let mut out = duality_checks(s);
    match atom_groupoid(s) {
        Ok(g) => {
            out.push(check_unit_cosets(s, &g));
            if let Some(by_ideals) = zero_simplifying_by_ideals(s) {
                out.push(Condition::new(
                    "generated join-ideals are all of S iff the atom groupoid has one orbit",
                    by_ideals == (orbit_count(&g.groupoid) == 1),
                ));
            }
        }
        Err(e) => out.push(Condition::new("atom groupoid", false).with_detail(e.to_string())),
    }
    out
}

fn duality_suite_cuntz<R: Rng>(c: &CuntzMonoid, rng: &mut R, samples: usize) -> Vec<Condition> {
    let n = c.arity();
    let mut laws = Laws::default();
    for _ in 0..samples {
        let s = random_prefix_map(rng, n);
        let t = random_prefix_map(rng, n);
        let st = c.multiply(&s, &t);
        let show = || format!("({s}, {t})");
        if let Some(p) = random_point_in(rng, &st.domain_clopen()) {
            laws.record(
                "(st).p = s.(t.p)",
                st.apply(&p).ok() == t.apply(&p).and_then(|q| s.apply(&q)).ok(),
                show,
            );
        }
        let Some(p) = random_point_in(rng, &s.domain_clopen()) else {
            continue;
        };
        let show = || format!("({s}, {p})");
        laws.record(
            "s^-1.(s.p) = p",
            s.apply(&p).and_then(|q| s.inverse().apply(&q)).ok() == Some(p.clone()),
            show,
        );
        laws.record(
            "the ultrafilter of (s, p) contains a unit",
            match unit_in_ultrafilter(&s, &p) {
                Ok(g) => c.is_unit(&g) && c.meet(&g, &s).domain_clopen().contains_point(&p),
                Err(_) => false,
            },
            show,
        );
        let fixed = c.phi(&s).domain_clopen();
        laws.record_if(
            "a non-idempotent ultrafilter contains an infinitesimal or a product of two",
            !fixed.contains_point(&p),
            || match infinitesimal_factors(&s, &p) {
                Ok(parts) => {
                    let product = parts
                        .iter()
                        .skip(1)
                        .fold(parts[0].clone(), |acc, a| c.multiply(&acc, a));
                    parts.iter().all(|a| c.is_infinitesimal(a))
                        && c.leq(&product, &s)
                        && product.domain_clopen().contains_point(&p)
                }
                Err(_) => false,
            },
            show,
        );
        laws.record(
            "s.p lies in s e s^-1 for every clopen e around p",
            {
                let e = Clopen::cylinder(n, p.prefix(s.max_word_len() + 1));
                let image = c
                    .multiply(&c.multiply(&s, &e.to_map()), &s.inverse())
                    .domain_clopen();
                s.apply(&p)
                    .map(|q| image.contains_point(&q))
                    .unwrap_or(false)
            },
            show,
        );
    }
    laws.finish()
}

fn prefixed(prefix: &str, conditions: Vec<Condition>) -> impl Iterator<Item = Condition> + '_ {
    conditions.into_iter().map(move |mut c| {
        c.name = format!("{prefix}: {}", c.name);
        c
    })
}

fn witness_suite_finite<S: FiniteMonoid>(s: &S) -> Vec<Condition> {
    let mut laws = Laws::default();
    let atoms = crate::finite::atoms(s);
    for x in s.elements() {
        let show = || s.render(&x);
        let moving = s.multiply(&x, &s.sigma(&x));
        let isotropy = atoms
            .iter()
            .any(|a| s.leq(a, &moving) && s.domain(a) == s.range(a));
        laws.record(
            "s = phi(s) v atoms of s sigma(s), each infinitesimal, unless an isotropy atom lies below s",
            match finite_principality_decompose(s, &x) {
                Ok((fixed, parts)) => {
                    !isotropy
                        && s.join_all(parts.iter().chain([&fixed])).ok() == Some(x.clone())
                        && parts.iter().all(|a| s.is_infinitesimal(a))
                }
                Err(_) => isotropy,
            },
            show,
        );
        laws.record_if(
            "every infinitesimal lies below a non-trivial involution",
            s.is_infinitesimal(&x),
            || match s.involution_from_infinitesimal(&x) {
                Ok(u) => s.is_involution(&u) && u != s.one() && s.leq(&x, &u),
                Err(_) => false,
            },
            show,
        );
        let balanced = s.domain(&x) == s.range(&x);
        laws.record_if(
            "balanced elements extend to units",
            balanced,
            || match s.unit_from_balanced(&x) {
                Ok(g) => s.is_unit(&g) && s.leq(&x, &g),
                Err(_) => false,
            },
            show,
        );
    }
    laws.finish()
}

fn iso_ok(e: &Clopen, f: &Clopen) -> bool {
    let congruent = e
        .cylinder_count()
        .abs_diff(f.cylinder_count())
        .is_multiple_of(e.arity() as usize - 1);
    match clopen_iso(e, f) {
        Ok(x) => congruent && x.domain_clopen() == *e && x.range_clopen() == *f,
        Err(CuntzError::NoIso { .. }) => !congruent,
        Err(_) => false,
    }
}

fn witness_suite_cuntz<R: Rng>(c: &CuntzMonoid, rng: &mut R, samples: usize) -> Vec<Condition> {
    let n = c.arity();
    let mut out = Vec::new();
    let mut laws = Laws::default();
    let (mut f1, mut f2, mut f3) = (Laws::default(), Laws::default(), Laws::default());
    for _ in 0..samples {
        let e = random_nonzero_clopen(rng, n);
        let p = random_point_in(rng, &e).expect("non-empty");
        match f1_witness(&e, &p) {
            Ok(t) => {
                for cond in check_f1(&e, &p, &t) {
                    f1.record(&cond.name, cond.holds, || {
                        format!("e = {e}, p = {p}, t = {t}")
                    });
                }
            }
            Err(err) => f1.record("constructed", false, || format!("e = {e}, p = {p}: {err}")),
        }

        let t = random_involution(rng, n);
        let support = c.sigma(&t).domain_clopen();
        let sub = random_subclopen(rng, &support);
        let region = if sub.is_empty() { support } else { sub };
        match f2_witness(&t, &region) {
            Ok(g) => {
                for cond in check_f2(&t, &region, &g, rng, 50) {
                    f2.record(&cond.name, cond.holds, || {
                        format!("t = {t}, e = {region}, g = {g}")
                    });
                }
            }
            Err(err) => f2.record("constructed", false, || {
                format!("t = {t}, e = {region}: {err}")
            }),
        }

        match f3_witness(&e) {
            Ok(g) => {
                for cond in check_f3(&e, &g) {
                    f3.record(&cond.name, cond.holds, || format!("e = {e}, g = {g}"));
                }
            }
            Err(err) => f3.record("constructed", false, || format!("e = {e}: {err}")),
        }

        let f = random_nonzero_clopen(rng, n);
        let show = || format!("e = {e}, f = {f}");
        laws.record(
            "properly infinite: d(x) = d(y) = e, r(x), r(y) orthogonal below e",
            match properly_infinite_witness(&e) {
                Ok((x, y)) => {
                    let (rx, ry) = (x.range_clopen(), y.range_clopen());
                    x.domain_clopen() == e
                        && y.domain_clopen() == e
                        && rx.is_disjoint(&ry)
                        && rx.union(&ry).is_subset(&e)
                }
                Err(_) => false,
            },
            show,
        );
        laws.record(
            "transfer: d(x) = e, r(x) <= f",
            transfer_witness(&e, &f)
                .map(|x| x.domain_clopen() == e && x.range_clopen().is_subset(&f))
                .unwrap_or(false),
            show,
        );
        laws.record_if(
            "conjugator: unit g with g e g^-1 <= f",
            !e.is_full(),
            || match conjugator_unit(&e, &f) {
                Ok(g) => {
                    c.is_unit(&g)
                        && c.multiply(&c.multiply(&g, &e.to_map()), &g.inverse())
                            .domain_clopen()
                            .is_subset(&f)
                }
                Err(_) => false,
            },
            show,
        );
        laws.record(
            "clopen iso exists iff counts agree mod n-1",
            iso_ok(&e, &f),
            show,
        );

        let s = random_prefix_map(rng, n);
        let show = || s.to_string();
        laws.record(
            "piecewise factorization: s is an orthogonal join of restricted units",
            match piecewise_factorize(&s) {
                Ok(parts) => {
                    let pieces: Vec<PrefixMap> = parts.iter().map(|(g, e)| g.restrict(e)).collect();
                    parts
                        .iter()
                        .all(|(g, e)| c.is_unit(g) && e.is_subset(&s.domain_clopen()))
                        && pieces
                            .iter()
                            .enumerate()
                            .all(|(i, a)| pieces[i + 1..].iter().all(|b| c.orthogonal(a, b)))
                        && c.join_all(&pieces).ok() == Some(s.clone())
                }
                Err(_) => false,
            },
            show,
        );
        let depth = s.max_word_len() + 2;
        let comparable_distinct = s.pairs().iter().any(|(d, r)| d != r && d.comparable(r));
        laws.record(
            "principality: decomposition agrees with the infinitesimal cover criterion",
            match principality_decompose(&s) {
                Principality::Decomposed {
                    idempotent,
                    infinitesimals,
                } => {
                    !comparable_distinct
                        && infinitesimals.iter().all(|a| c.is_infinitesimal(a))
                        && c.join_all(infinitesimals.iter().chain([&idempotent.to_map()]))
                            .ok()
                            == Some(s.clone())
                        && infinitesimal_cover(&s, depth).is_some()
                }
                Principality::Witness {
                    domain,
                    range,
                    fixed_point,
                } => {
                    comparable_distinct
                        && s.pairs().contains(&(domain, range))
                        && s.apply(&fixed_point).ok() == Some(fixed_point.clone())
                        && !c.phi(&s).domain_clopen().contains_point(&fixed_point)
                        && infinitesimal_cover(&s, depth).is_none()
                }
            },
            show,
        );
        laws.record(
            "support cover: involutions whose supports join to e",
            match support_cover(&e) {
                Ok(ts) => {
                    ts.iter().all(|t| c.is_involution(t) && *t != c.one())
                        && ts.iter().fold(Clopen::empty(n), |acc, t| {
                            acc.union(&c.sigma(t).domain_clopen())
                        }) == e
                }
                Err(_) => false,
            },
            || e.to_string(),
        );
    }
    out.extend(prefixed("f1", f1.finish()));
    out.extend(prefixed("f2", f2.finish()));
    out.extend(prefixed("f3", f3.finish()));
    out.extend(laws.finish());
    out
}

fn flag_conditions(
    report: &crate::analysis::AnalysisReport,
    expected: &[(&str, bool)],
) -> Vec<Condition> {
    let flags = [
        ("fundamental", &report.is_fundamental),
        ("0-simple", &report.is_zero_simple),
        ("0-simplifying", &report.is_zero_simplifying),
        ("0-disjunctive", &report.is_zero_disjunctive),
        ("congruence-free", &report.is_congruence_free),
        ("purely infinite", &report.is_purely_infinite),
    ];
    expected
        .iter()
        .map(|(name, value)| {
            let flag = flags.iter().find(|(n, _)| n == name).expect("known flag").1;
            Condition::new(format!("{name} = {value}"), flag.value == *value)
                .with_detail(format!("{} ({})", flag.evidence, flag.mode))
        })
        .collect()
}

fn classification_suite_finite<S: FiniteMonoid>(s: &S) -> Result<Vec<Condition>, SuiteError> {
    let report = analyze_finite(s)?;
    let mut out = report.cross_checks.clone();
    let fund = report.is_fundamental.value;
    let simplifying = report.is_zero_simplifying.value;
    out.push(Condition::new(
        "0-simple implies 0-simplifying",
        !report.is_zero_simple.value || simplifying,
    ));
    out.push(Condition::new(
        "finite instances are not purely infinite",
        !report.is_purely_infinite.value,
    ));
    out.push(Condition::new(
        "congruence-free iff fundamental, 0-simple and 0-disjunctive",
        report.is_congruence_free.value
            == (fund && report.is_zero_simple.value && report.is_zero_disjunctive.value),
    ));
    match classify(s) {
        Ok(cl) => {
            out.push(Condition::new(
                format!("classified as I{} with a verified isomorphism", cl.n),
                fund && simplifying && all_hold(&cl.checks),
            ));
            let order: usize = (1..=cl.n).product();
            out.push(Condition::new(
                format!("group of units has order {}!", cl.n),
                report.units.as_ref().map(|u| u.order) == Some(order),
            ));
        }
        Err(AnalysisError::NotClassifiable(reason)) => out.push(
            Condition::new(
                "not classifiable exactly when not fundamental or not 0-simplifying",
                !(fund && simplifying),
            )
            .with_detail(reason),
        ),
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

fn classification_suite_cuntz<R: Rng>(
    c: &CuntzMonoid,
    rng: &mut R,
    samples: usize,
    seed: u64,
) -> Vec<Condition> {
    let report = analyze_cuntz(c, rng, samples, Some(seed));
    flag_conditions(
        &report,
        &[
            ("fundamental", true),
            ("0-simple", true),
            ("0-simplifying", true),
            ("0-disjunctive", true),
            ("congruence-free", true),
            ("purely infinite", true),
        ],
    )
}

/// Runs one suite. Every run is determined by `(suite, instance, seed, samples)`.
pub fn run_suite(
    name: &str,
    instance: &Instance,
    seed: u64,
    samples: usize,
) -> Result<SuiteReport, SuiteError> {
    if !SUITES.contains(&name) {
        return Err(SuiteError::UnknownSuite(name.to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut exhaustive = false;
    let checks = match instance {
        Instance::Finite(f) => with_finite!(f, s => {
            match name {
                "axioms" | "order" => {
                    let cases = finite_cases(s, &mut rng, samples);
                    exhaustive = cases.exhaustive;
                    if name == "axioms" { axiom_laws(s, &cases) } else { order_laws(s, &cases) }
                }
                "support" => { exhaustive = true; support_suite_finite(s) }
                "duality" => { exhaustive = true; duality_suite_finite(s) }
                "witnesses" => { exhaustive = true; witness_suite_finite(s) }
                _ => { exhaustive = true; classification_suite_finite(s)? }
            }
        }),
        Instance::Cuntz(c) => match name {
            "axioms" => axiom_laws(c, &cuntz_cases(c.arity(), &mut rng, samples)),
            "order" => order_laws(c, &cuntz_cases(c.arity(), &mut rng, samples)),
            "support" => support_suite_cuntz(c, &mut rng, samples),
            "duality" => duality_suite_cuntz(c, &mut rng, samples),
            "witnesses" => witness_suite_cuntz(c, &mut rng, samples),
            _ => classification_suite_cuntz(c, &mut rng, samples, seed),
        },
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        instance: instance.name(),
        seed,
        samples,
        exhaustive,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str, spec: &str, samples: usize) -> SuiteReport {
        run_suite(name, &Instance::parse(spec).unwrap(), 7, samples).unwrap()
    }

    fn assert_passes(report: &SuiteReport) {
        for c in &report.checks {
            assert!(
                c.holds,
                "{} / {}: {} {:?}",
                report.suite, report.instance, c.name, c.detail
            );
        }
    }

    #[test]
    fn finite_suites_pass() {
        for spec in ["I2", "I3", "prod:I2xI2", "cyclic:2", "pair:3"] {
            for name in SUITES {
                assert_passes(&run(name, spec, 50));
            }
        }
    }

    #[test]
    fn cuntz_suites_pass() {
        for spec in ["cn:2", "cn:3"] {
            for name in SUITES {
                assert_passes(&run(name, spec, 40));
            }
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(
            run_suite("nope", &Instance::parse("I2").unwrap(), 1, 1),
            Err(SuiteError::UnknownSuite(_))
        ));
    }

    #[test]
    fn runs_repeat() {
        let a = serde_json::to_string(&run("witnesses", "cn:2", 20)).unwrap();
        let b = serde_json::to_string(&run("witnesses", "cn:2", 20)).unwrap();
        assert_eq!(a, b);
    }
}
