//! Acceptance checks. Run with `cargo test -p boolinv --test acceptance`;
//! prints one PASS/FAIL line per criterion and exits non-zero on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use boolinv::analysis::{
    analyze_cuntz, classify, finite_principality_decompose, finite_spatial_realization_check,
    is_purely_infinite, is_zero_simple, is_zero_simplifying, AnalysisError,
};
use boolinv::cuntz::{
    check_f1, check_f2, check_f3, clopen_iso, f1_witness, f2_witness, f3_construction, f3_witness,
    find_moved_point, infinitesimal_cover, principality_decompose, random_involution,
    random_nonzero_clopen, random_point_in, random_prefix_map, random_subclopen, random_unit,
    random_unit_within, Clopen, CuntzError, CuntzMonoid, PrefixMap, Principality, Word,
};
use boolinv::duality::{duality_roundtrip_groupoid, duality_roundtrip_monoid};
use boolinv::finite::{FiniteGroupoid, LocalBisectionMonoid, Product, SymmetricInverseMonoid};
use boolinv::instance::Instance;
use boolinv::suites::run_suite;
use boolinv::{all_hold, with_finite, BooleanInverseMonoid, FiniteMonoid, MonoidExt};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 42;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, failure: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(failure())
    }
}

fn sym(n: usize) -> SymmetricInverseMonoid {
    SymmetricInverseMonoid::new(n).unwrap()
}

fn bisections(g: FiniteGroupoid) -> LocalBisectionMonoid {
    LocalBisectionMonoid::new(g).unwrap()
}

fn monoid_roundtrip<S: FiniteMonoid>(s: &S) -> Result<(), String> {
    let cert = duality_roundtrip_monoid(s).map_err(|e| format!("{}: {e}", s.name()))?;
    ensure(all_hold(&cert.checks), || {
        format!("{}: certificate check failed", s.name())
    })
}

fn duality_round_trip() -> Outcome {
    let start = Instant::now();
    for n in 1..=3 {
        monoid_roundtrip(&sym(n))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut arrows = 0;
    for _ in 0..20 {
        let g = FiniteGroupoid::random(&mut rng, 8).map_err(|e| e.to_string())?;
        arrows += g.arrow_count();
        let cert = duality_roundtrip_groupoid(&g).map_err(|e| e.to_string())?;
        ensure(all_hold(&cert.checks), || {
            "groupoid certificate check failed".into()
        })?;
        monoid_roundtrip(&bisections(g))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "I1..I3 and 20 groupoids ({arrows} arrows) in {} ms",
        elapsed.as_millis()
    ))
}

fn classifies_as<S: FiniteMonoid>(s: &S, n: usize) -> Result<(), String> {
    let c = classify(s).map_err(|e| format!("{}: {e}", s.name()))?;
    ensure(c.n == n && all_hold(&c.checks), || {
        format!("{} classified as I{}", s.name(), c.n)
    })
}

fn rejected_as<S: FiniteMonoid>(s: &S, reason: &str) -> Result<(), String> {
    match classify(s) {
        Err(AnalysisError::NotClassifiable(r)) if r == reason => Ok(()),
        Err(e) => Err(format!("{}: {e}", s.name())),
        Ok(c) => Err(format!("{} classified as I{}", s.name(), c.n)),
    }
}

fn finite_classification() -> Outcome {
    classifies_as(&sym(2), 2)?;
    classifies_as(&sym(3), 3)?;
    for k in 1..=4 {
        classifies_as(&bisections(FiniteGroupoid::pair(k).unwrap()), k)?;
    }
    rejected_as(&Product::new(sym(2), sym(2)), "not 0-simplifying")?;
    rejected_as(
        &bisections(FiniteGroupoid::cyclic_group(2).unwrap()),
        "not fundamental",
    )?;
    Ok("I2, I3, B(pair k) for k <= 4 classified; I2xI2 and B(Z2) rejected".into())
}

fn unit_groups_decide_isomorphism() -> Outcome {
    let specs = ["I2", "I3", "I4", "pair:3"];
    let instances: Vec<Instance> = specs.iter().map(|s| Instance::parse(s).unwrap()).collect();
    let mut pairs = 0;
    let mut isomorphic = 0;
    for (i, a) in instances.iter().enumerate() {
        for b in &instances[i..] {
            let (Instance::Finite(a), Instance::Finite(b)) = (a, b) else {
                unreachable!()
            };
            let r =
                with_finite!(a, s => with_finite!(b, t => finite_spatial_realization_check(s, t)))
                    .map_err(|e| e.to_string())?;
            ensure(r.consistent(), || format!("{} vs {}", r.left, r.right))?;
            pairs += 1;
            isomorphic += usize::from(r.monoids_isomorphic);
        }
    }
    ensure(isomorphic == 5, || {
        format!("{isomorphic} isomorphic pairs, expected 5")
    })?;
    Ok(format!("{pairs} pairs consistent, {isomorphic} isomorphic"))
}

fn axiom_suite() -> Outcome {
    let mut laws = 0;
    for (name, samples) in [("I2", 0), ("I3", 0), ("cn:2", 1000), ("cn:3", 1000)] {
        let instance = Instance::parse(name).unwrap();
        for suite in ["axioms", "order"] {
            let report = run_suite(suite, &instance, SEED, samples).map_err(|e| e.to_string())?;
            if let Some(bad) = report.checks.iter().find(|c| !c.holds) {
                return Err(format!(
                    "{suite} on {name}: {} {}",
                    bad.name,
                    bad.detail.clone().unwrap_or_default()
                ));
            }
            ensure(samples > 0 || report.exhaustive, || {
                format!("{suite} on {name} not exhaustive")
            })?;
            laws += report.checks.len();
        }
    }
    Ok(format!(
        "{laws} law checks on I2, I3 (exhaustive), C2, C3 (1000 samples)"
    ))
}

fn cooper_rejoins<S: BooleanInverseMonoid>(s: &S, x: &S::Element) -> Result<(), String> {
    let (fixed, moving) = s.cooper_decompose(x);
    ensure(
        s.orthogonal(&fixed, &moving)
            && s.raw_join(&fixed, &moving) == *x
            && fixed == s.phi(x)
            && moving == s.multiply(x, &s.sigma(x)),
        || format!("cooper_decompose fails at {}", s.render(x)),
    )
}

fn unit_laws(c: &CuntzMonoid, g: &PrefixMap, h: &PrefixMap) -> Result<bool, String> {
    let sigma = |x: &PrefixMap| c.sigma(x);
    let (sg, sh) = (sigma(g), sigma(h));
    let show = || format!("g = {g}, h = {h}");
    ensure(sigma(&g.inverse()) == sg, || {
        format!("sigma(g^-1) != sigma(g) for {}", show())
    })?;
    ensure(
        c.leq(&sigma(&c.multiply(g, h)), &c.raw_join(&sg, &sh)),
        || format!("sigma(gh) not below sigma(g) v sigma(h) for {}", show()),
    )?;
    ensure(c.is_zero(&sg) == (*g == c.one()), || {
        format!("sigma(g) = 0 iff g = 1 fails for {g}")
    })?;
    let conj = c.multiply(&c.multiply(g, h), &g.inverse());
    ensure(
        sigma(&conj) == c.multiply(&c.multiply(g, &sh), &g.inverse()),
        || format!("sigma(g h g^-1) != g sigma(h) g^-1 for {}", show()),
    )?;
    let disjoint = c.is_zero(&c.multiply(&sg, &sh));
    if disjoint {
        ensure(c.commutator(g, h).ok() == Some(c.one()), || {
            format!("disjoint supports do not commute for {}", show())
        })?;
    }
    Ok(disjoint)
}

fn support_operator() -> Outcome {
    let i3 = sym(3);
    for x in i3.elements() {
        cooper_rejoins(&i3, &x)?;
    }
    let c = CuntzMonoid::new(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..1000 {
        cooper_rejoins(&c, &random_prefix_map(&mut rng, 2))?;
    }
    let mut disjoint = 0;
    for i in 0..500 {
        let (g, h) = if i % 2 == 0 {
            (random_unit(&mut rng, 2), random_unit(&mut rng, 2))
        } else {
            let w1 = Word::from_letters(
                (0..rng.gen_range(1..=2))
                    .map(|_| rng.gen_range(0..2))
                    .collect(),
            );
            let w2 = w1
                .parent()
                .map(|p| p.child(1 - w1.letters()[w1.len() - 1]))
                .unwrap();
            (
                random_unit_within(&mut rng, 2, &w1),
                random_unit_within(&mut rng, 2, &w2),
            )
        };
        disjoint += usize::from(unit_laws(&c, &g, &h)?);
    }
    ensure(disjoint > 0, || {
        "no disjointly supported pairs sampled".into()
    })?;
    Ok(format!(
        "34 + 1000 elements, 500 unit pairs ({disjoint} with disjoint supports)"
    ))
}

fn failed(checks: &[boolinv::Condition], context: impl Fn() -> String) -> Result<(), String> {
    match checks.iter().find(|c| !c.holds) {
        Some(bad) => Err(format!("{} fails: {}", bad.name, context())),
        None => Ok(()),
    }
}

fn witness_postconditions() -> Outcome {
    for n in [2u8, 3] {
        let c = CuntzMonoid::new(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + u64::from(n));
        for _ in 0..100 {
            let e = random_nonzero_clopen(&mut rng, n);
            let p = random_point_in(&mut rng, &e).unwrap();
            let t = f1_witness(&e, &p).map_err(|err| format!("f1 at e = {e}, p = {p}: {err}"))?;
            failed(&check_f1(&e, &p, &t), || {
                format!("e = {e}, p = {p}, t = {t}")
            })?;

            let inv = random_involution(&mut rng, n);
            let support = c.sigma(&inv).domain_clopen();
            let sub = random_subclopen(&mut rng, &support);
            let region = if sub.is_empty() { support } else { sub };
            let g = f2_witness(&inv, &region)
                .map_err(|err| format!("f2 at t = {inv}, e = {region}: {err}"))?;
            failed(&check_f2(&inv, &region, &g, &mut rng, 50), || {
                format!("t = {inv}, e = {region}, g = {g}")
            })?;

            let g = f3_witness(&e).map_err(|err| format!("f3 at e = {e}: {err}"))?;
            failed(&check_f3(&e, &g), || format!("e = {e}, g = {g}"))?;
        }
    }
    let f3 = f3_construction(&Clopen::full(2)).map_err(|err| err.to_string())?;
    let cycle = f3.block_permutation();
    ensure(cycle == "(132)", || {
        format!("block action on the whole space is {cycle}")
    })?;
    let g = f3_witness(&Clopen::full(2)).map_err(|err| err.to_string())?;
    ensure(g.to_string() == "{11->2, 12->11, 2->12}", || {
        format!("unit on the whole space is {g}")
    })?;
    Ok("f1, f2, f3 on 100 configurations in C2 and C3; block action (132)".into())
}

fn has_comparable_distinct_pair(s: &PrefixMap) -> bool {
    s.pairs().iter().any(|(d, r)| d != r && d.comparable(r))
}

fn principality() -> Outcome {
    let i3 = sym(3);
    for x in i3.elements() {
        let (fixed, parts) =
            finite_principality_decompose(&i3, &x).map_err(|a| format!("{x}: atom {a}"))?;
        let mut joined = fixed.clone();
        for a in &parts {
            ensure(i3.is_infinitesimal(a) && i3.orthogonal(&joined, a), || {
                format!("{x}: part {a}")
            })?;
            joined = i3.raw_join(&joined, a);
        }
        ensure(joined == x && i3.is_idempotent(&fixed), || {
            format!("{x}: parts do not rejoin")
        })?;
    }
    let c = CuntzMonoid::new(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut decomposed, mut witnessed) = (0, 0);
    for _ in 0..500 {
        let s = random_prefix_map(&mut rng, 2);
        let covered = infinitesimal_cover(&s, s.max_word_len() + 1).is_some();
        match principality_decompose(&s) {
            Principality::Decomposed {
                idempotent,
                infinitesimals,
            } => {
                decomposed += 1;
                ensure(covered && !has_comparable_distinct_pair(&s), || {
                    format!("{s}: decomposed without criterion")
                })?;
                let mut parts = vec![idempotent.to_map()];
                parts.extend(infinitesimals.iter().cloned());
                ensure(
                    infinitesimals.iter().all(|a| c.is_infinitesimal(a))
                        && c.join_all(&parts).ok() == Some(s.clone()),
                    || format!("{s}: parts do not rejoin"),
                )?;
            }
            Principality::Witness {
                domain,
                range,
                fixed_point,
            } => {
                witnessed += 1;
                ensure(!covered && has_comparable_distinct_pair(&s), || {
                    format!("{s}: witness without criterion")
                })?;
                ensure(
                    domain != range
                        && domain.comparable(&range)
                        && s.apply(&fixed_point).ok() == Some(fixed_point.clone()),
                    || format!("{s}: {fixed_point} is not fixed"),
                )?;
            }
        }
    }
    ensure(decomposed > 0 && witnessed > 0, || {
        "one branch never triggered".into()
    })?;
    Ok(format!(
        "I3 exhaustive; C2: {decomposed} decomposed, {witnessed} witnessed"
    ))
}

fn symmetric_flags(n: usize) -> Result<(), String> {
    let s = sym(n);
    ensure(
        is_zero_simplifying(&s) && !is_purely_infinite(&s) && !is_zero_simple(&s),
        || format!("I{n} flags"),
    )
}

fn simplicity_flags() -> Outcome {
    for n in 2..=4 {
        symmetric_flags(n)?;
    }
    let c = CuntzMonoid::new(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let report = analyze_cuntz(&c, &mut rng, 100, Some(SEED));
    for (name, flag) in [
        ("0-simple", &report.is_zero_simple),
        ("0-simplifying", &report.is_zero_simplifying),
        ("purely infinite", &report.is_purely_infinite),
    ] {
        ensure(flag.value, || format!("C2 {name} false: {}", flag.evidence))?;
    }
    Ok("I2..I4: simplifying only; C2: all three on 100 clopens".into())
}

/// Numbers of cylinders of length at most `max_len` that partition `[w]`.
fn partition_sizes(n: u8, w: &Word, max_len: usize) -> BTreeSet<usize> {
    let mut sizes = BTreeSet::from([1]);
    if w.len() < max_len {
        let mut children = BTreeSet::from([0]);
        for a in 0..n {
            let child = partition_sizes(n, &w.child(a), max_len);
            children = children
                .iter()
                .flat_map(|x| child.iter().map(move |y| x + y))
                .collect();
        }
        sizes.extend(children);
    }
    sizes
}

fn clopen_sizes(e: &Clopen) -> BTreeSet<usize> {
    e.words().iter().fold(BTreeSet::from([0]), |acc, w| {
        let sizes = partition_sizes(e.arity(), w, 4);
        acc.iter()
            .flat_map(|x| sizes.iter().map(move |y| x + y))
            .collect()
    })
}

fn clopen_isomorphism_criterion() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut built, mut refused) = (0, 0);
    for _ in 0..20 {
        let e = random_nonzero_clopen(&mut rng, 3);
        let f = random_nonzero_clopen(&mut rng, 3);
        let common = clopen_sizes(&e)
            .intersection(&clopen_sizes(&f))
            .next()
            .is_some();
        let counts_agree = e.cylinder_count() % 2 == f.cylinder_count() % 2;
        ensure(common == counts_agree, || {
            format!("brute force disagrees with counts on {e}, {f}")
        })?;
        match clopen_iso(&e, &f) {
            Ok(x) => {
                built += 1;
                ensure(
                    common && x.domain_clopen() == e && x.range_clopen() == f,
                    || format!("{e} -> {f}: {x}"),
                )?;
            }
            Err(CuntzError::NoIso { .. }) => {
                refused += 1;
                ensure(!common, || {
                    format!("{e} -> {f} refused but a partition matches")
                })?;
            }
            Err(err) => return Err(err.to_string()),
        }
    }
    Ok(format!(
        "20 pairs in C3: {built} constructed, {refused} refused"
    ))
}

fn moved_points() -> Outcome {
    let c = CuntzMonoid::new(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut moved, mut cylinders) = (0, 0);
    for _ in 0..50 {
        let g = random_unit(&mut rng, 2);
        let sigma = c.sigma(&g).domain_clopen();
        for _ in 0..40 {
            let q = random_point_in(&mut rng, &c.full()).unwrap();
            if g.apply(&q).ok() != Some(q.clone()) {
                moved += 1;
                ensure(sigma.contains_point(&q), || {
                    format!("{g} moves {q} outside sigma(g)")
                })?;
            }
        }
        for w in sigma.words() {
            let cylinder = Clopen::cylinder(2, w.clone());
            let p = find_moved_point(&g, &cylinder)
                .map_err(|err| format!("{g} on {cylinder}: {err}"))?;
            ensure(
                cylinder.contains_point(&p)
                    && sigma.contains_point(&p)
                    && g.apply(&p).ok() != Some(p.clone()),
                || format!("{g} on {cylinder}: {p} not moved"),
            )?;
            cylinders += 1;
        }
    }
    Ok(format!(
        "50 units: {moved} moved points in sigma(g), {cylinders} cylinders with moved points"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("duality round trip", duality_round_trip),
        ("finite classification", finite_classification),
        (
            "unit groups decide isomorphism",
            unit_groups_decide_isomorphism,
        ),
        ("axiom suite", axiom_suite),
        ("support operator", support_operator),
        ("witness postconditions", witness_postconditions),
        ("principality", principality),
        ("simplicity flags", simplicity_flags),
        ("clopen isomorphism criterion", clopen_isomorphism_criterion),
        ("moved points", moved_points),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
