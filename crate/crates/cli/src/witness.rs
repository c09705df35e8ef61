use boolinv::cuntz::{
    check_f1, check_f2, check_f3, clopen_iso, conjugator_unit, f1_witness, f2_construction,
    f3_construction, find_moved_point, infinitesimal_at, infinitesimal_factors,
    piecewise_factorize, principality_decompose, properly_infinite_witness, separating_idempotent,
    support_cover, transfer_witness, unit_in_ultrafilter, Clopen, CuntzError, CuntzMonoid, EPPoint,
    PrefixMap, Principality, Word,
};
use boolinv::{all_hold, BooleanInverseMonoid, Condition, MonoidExt};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::Report;
use crate::Failure;

pub const KINDS: &[&str] = &[
    "f1",
    "f2",
    "f3",
    "infinitesimal",
    "properly-infinite",
    "transfer",
    "conjugator",
    "clopen-iso",
    "factorize",
    "ultrafilter-unit",
    "principality",
    "moved-point",
    "separating",
    "support-cover",
    "infinitesimal-factors",
];

#[derive(Debug, Default, Clone)]
pub struct Inputs {
    pub e: Option<String>,
    pub f: Option<String>,
    pub p: Option<String>,
    pub t: Option<String>,
    pub s: Option<String>,
}

struct Ctx<'a> {
    c: &'a CuntzMonoid,
    inputs: &'a Inputs,
    report: &'a mut Report,
}

impl Ctx<'_> {
    fn text(&mut self, name: &str) -> Result<String, Failure> {
        let value = match name {
            "e" => &self.inputs.e,
            "f" => &self.inputs.f,
            "p" => &self.inputs.p,
            "t" => &self.inputs.t,
            _ => &self.inputs.s,
        };
        let text = value
            .clone()
            .ok_or_else(|| Failure::Usage(format!("missing --{name}")))?;
        self.report.input(name, &text);
        Ok(text)
    }

    fn clopen(&mut self, name: &str) -> Result<Clopen, Failure> {
        let text = self.text(name)?;
        self.c
            .parse_clopen(&text)
            .map_err(|e| Failure::Usage(format!("--{name}: {e}")))
    }

    fn map(&mut self, name: &str) -> Result<PrefixMap, Failure> {
        let text = self.text(name)?;
        self.c
            .parse_element(&text)
            .map_err(|e| Failure::Usage(format!("--{name}: {e}")))
    }

    /// `--p`, or the point `w·1^ω` on the first cylinder of `e`.
    fn point_in(&mut self, e: &Clopen) -> Result<EPPoint, Failure> {
        if self.inputs.p.is_some() {
            let text = self.text("p")?;
            return self
                .c
                .parse_point(&text)
                .map_err(|e| Failure::Usage(format!("--p: {e}")));
        }
        let w = e.words().first().cloned().unwrap_or_else(Word::empty);
        let p = EPPoint::new(w, Word::from_letters(vec![0]))
            .map_err(|e| Failure::Usage(e.to_string()))?;
        self.report.input("p", p.to_string());
        Ok(p)
    }

    fn point(&mut self) -> Result<EPPoint, Failure> {
        let text = self.text("p")?;
        self.c
            .parse_point(&text)
            .map_err(|e| Failure::Usage(format!("--p: {e}")))
    }

    /// Prints a map witness, re-parses the printed text and re-runs the
    /// checker on the re-parsed value.
    fn witness<F>(&mut self, key: &str, w: &PrefixMap, validate: F)
    where
        F: Fn(&PrefixMap) -> Vec<Condition>,
    {
        let printed = w.to_string();
        self.report.result(key, &printed);
        let checks = validate(w);
        let again = self.c.parse_element(&printed);
        let revalidated = match &again {
            Ok(x) => x == w && all_hold(&validate(x)),
            Err(_) => false,
        };
        self.report.extend_checks(checks);
        self.report.check(Condition::new(
            format!("{key} re-parses to the same normal form and passes again"),
            revalidated,
        ));
    }

    fn reparses_clopen(&mut self, key: &str, e: &Clopen) {
        let printed = e.to_string();
        self.report.result(key, &printed);
        let ok = self
            .c
            .parse_clopen(&printed)
            .map(|x| x == *e)
            .unwrap_or(false);
        self.report.check(Condition::new(
            format!("{key} re-parses to the same clopen"),
            ok,
        ));
    }
}

/// Errors that mean "no witness exists for these inputs" become failed
/// checks (exit 1); other errors are invalid inputs (exit 2).
fn construction(report: &mut Report, err: CuntzError) -> Result<(), Failure> {
    match err {
        CuntzError::NoIso { .. }
        | CuntzError::EmptySupportRegion(_)
        | CuntzError::NotMoved { .. } => {
            report.check(Condition::new("witness exists", false).with_detail(err.to_string()));
            Ok(())
        }
        other => Err(Failure::Usage(other.to_string())),
    }
}

fn support(c: &CuntzMonoid, g: &PrefixMap) -> Clopen {
    c.sigma(g).domain_clopen()
}

pub fn run(
    c: &CuntzMonoid,
    kind: &str,
    inputs: &Inputs,
    seed: u64,
    samples: usize,
    report: &mut Report,
) -> Result<(), Failure> {
    if !KINDS.contains(&kind) {
        return Err(Failure::Usage(format!(
            "unknown witness `{kind}` (expected one of {})",
            KINDS.join(", ")
        )));
    }
    let mut cx = Ctx { c, inputs, report };
    let result = build(&mut cx, kind, seed, samples);
    match result {
        Ok(()) => Ok(()),
        Err(Built::Cuntz(e)) => construction(cx.report, e),
        Err(Built::Usage(f)) => Err(f),
    }
}

enum Built {
    Cuntz(CuntzError),
    Usage(Failure),
}

impl From<CuntzError> for Built {
    fn from(e: CuntzError) -> Self {
        Built::Cuntz(e)
    }
}

impl From<Failure> for Built {
    fn from(f: Failure) -> Self {
        Built::Usage(f)
    }
}

fn build(cx: &mut Ctx<'_>, kind: &str, seed: u64, samples: usize) -> Result<(), Built> {
    let c = cx.c;
    match kind {
        "f1" => {
            let e = cx.clopen("e")?;
            let p = cx.point_in(&e)?;
            let t = f1_witness(&e, &p)?;
            cx.witness("involution", &t, |t| check_f1(&e, &p, t));
        }
        "infinitesimal" => {
            let e = cx.clopen("e")?;
            let p = cx.point_in(&e)?;
            let a = infinitesimal_at(&e, &p)?;
            cx.witness("infinitesimal", &a, |a| {
                vec![
                    Condition::new("a^2 = 0, a != 0", c.is_infinitesimal(a)),
                    Condition::new(
                        "d(a) v r(a) <= e",
                        a.domain_clopen().union(&a.range_clopen()).is_subset(&e),
                    ),
                    Condition::new("p in d(a)", a.domain_clopen().contains_point(&p)),
                ]
            });
        }
        "f2" => {
            let t = cx.map("t")?;
            let e = if cx.inputs.e.is_some() {
                cx.clopen("e")?
            } else {
                let e = support(c, &t);
                cx.report.input("e", e.to_string());
                e
            };
            let built = f2_construction(&t, &e)?;
            cx.report.result("moved_point", &built.moved_point);
            cx.report.result("region", &built.region);
            cx.report.result("infinitesimal", &built.infinitesimal);
            cx.report.input("samples", samples);
            cx.witness("unit", &built.unit, |g| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                check_f2(&t, &e, g, &mut rng, samples)
            });
        }
        "f3" => {
            let e = cx.clopen("e")?;
            let built = f3_construction(&e)?;
            for (key, x) in [
                ("a", &built.a),
                ("b", &built.b),
                ("involution_a", &built.involution_a),
                ("involution_b", &built.involution_b),
                ("composite", &built.composite),
            ] {
                cx.report.result(key, x.to_string());
            }
            let blocks: Vec<String> = built.blocks.iter().map(|b| b.to_string()).collect();
            cx.report.result("blocks", blocks);
            cx.report
                .result("block_permutation", built.block_permutation());
            cx.witness("unit", &built.unit, |g| check_f3(&e, g));
        }
        "properly-infinite" => {
            let e = cx.clopen("e")?;
            let (x, y) = properly_infinite_witness(&e)?;
            cx.witness("x", &x, |x| {
                vec![Condition::new("d(x) = e", x.domain_clopen() == e)]
            });
            cx.witness("y", &y, |y| {
                vec![Condition::new("d(y) = e", y.domain_clopen() == e)]
            });
            let (rx, ry) = (x.range_clopen(), y.range_clopen());
            cx.report
                .check(Condition::new("r(x) r(y) = 0", rx.is_disjoint(&ry)));
            cx.report.check(Condition::new(
                "r(x) v r(y) <= e",
                rx.union(&ry).is_subset(&e),
            ));
        }
        "transfer" => {
            let e = cx.clopen("e")?;
            let f = cx.clopen("f")?;
            let x = transfer_witness(&e, &f)?;
            cx.witness("x", &x, |x| {
                vec![
                    Condition::new("d(x) = e", x.domain_clopen() == e),
                    Condition::new("r(x) <= f", x.range_clopen().is_subset(&f)),
                ]
            });
        }
        "conjugator" => {
            let e = cx.clopen("e")?;
            let f = cx.clopen("f")?;
            let g = conjugator_unit(&e, &f)?;
            cx.witness("unit", &g, |g| {
                let image = c
                    .multiply(&c.multiply(g, &e.to_map()), &g.inverse())
                    .domain_clopen();
                vec![
                    Condition::new("g is a unit", c.is_unit(g)),
                    Condition::new("g e g^-1 <= f", image.is_subset(&f)),
                ]
            });
        }
        "clopen-iso" => {
            let e = cx.clopen("e")?;
            let f = cx.clopen("f")?;
            let x = clopen_iso(&e, &f)?;
            cx.witness("x", &x, |x| {
                vec![
                    Condition::new("d(x) = e", x.domain_clopen() == e),
                    Condition::new("r(x) = f", x.range_clopen() == f),
                ]
            });
        }
        "factorize" => {
            let s = cx.map("s")?;
            let parts = piecewise_factorize(&s)?;
            let listed: Vec<[String; 2]> = parts
                .iter()
                .map(|(g, e)| [g.to_string(), e.to_string()])
                .collect();
            cx.report.result("parts", listed);
            let pieces: Vec<PrefixMap> = parts.iter().map(|(g, e)| g.restrict(e)).collect();
            let reparsed = parts.iter().all(|(g, e)| {
                c.parse_element(&g.to_string()).ok().as_ref() == Some(g)
                    && c.parse_clopen(&e.to_string()).ok().as_ref() == Some(e)
            });
            cx.report.check(Condition::new(
                "every g_i is a unit",
                parts.iter().all(|(g, _)| c.is_unit(g)),
            ));
            cx.report.check(Condition::new(
                "the pieces g_i e_i are pairwise orthogonal",
                pieces
                    .iter()
                    .enumerate()
                    .all(|(i, a)| pieces[i + 1..].iter().all(|b| c.orthogonal(a, b))),
            ));
            cx.report.check(Condition::new(
                "s = join of g_i e_i",
                c.join_all(&pieces).ok() == Some(s.clone()),
            ));
            cx.report.check(Condition::new(
                "parts re-parse to the same normal forms",
                reparsed,
            ));
        }
        "ultrafilter-unit" => {
            let s = cx.map("s")?;
            let p = cx.point()?;
            let g = unit_in_ultrafilter(&s, &p)?;
            cx.witness("unit", &g, |g| {
                vec![
                    Condition::new("g is a unit", c.is_unit(g)),
                    Condition::new(
                        "p in d(g ^ s)",
                        c.meet(g, &s).domain_clopen().contains_point(&p),
                    ),
                ]
            });
        }
        "principality" => {
            let s = cx.map("s")?;
            match principality_decompose(&s) {
                Principality::Decomposed {
                    idempotent,
                    infinitesimals,
                } => {
                    cx.report.result("branch", "decomposed");
                    cx.reparses_clopen("idempotent", &idempotent);
                    let listed: Vec<String> =
                        infinitesimals.iter().map(|a| a.to_string()).collect();
                    cx.report.result("infinitesimals", listed);
                    cx.report.check(Condition::new(
                        "every part is infinitesimal",
                        infinitesimals.iter().all(|a| c.is_infinitesimal(a)),
                    ));
                    cx.report.check(Condition::new(
                        "s = e v join of infinitesimals",
                        c.join_all(infinitesimals.iter().chain([&idempotent.to_map()]))
                            .ok()
                            == Some(s.clone()),
                    ));
                }
                Principality::Witness {
                    domain,
                    range,
                    fixed_point,
                } => {
                    cx.report.result("branch", "witness");
                    cx.report.result("pair", format!("{domain}->{range}"));
                    cx.report.result("fixed_point", fixed_point.to_string());
                    cx.report.check(Condition::new(
                        "s fixes the point",
                        s.apply(&fixed_point).ok() == Some(fixed_point.clone()),
                    ));
                    cx.report.check(Condition::new(
                        "no neighbourhood of the point is fixed",
                        !c.phi(&s).domain_clopen().contains_point(&fixed_point),
                    ));
                }
            }
        }
        "moved-point" => {
            let g = cx.map("t")?;
            let e = cx.clopen("e")?;
            let p = find_moved_point(&g, &e)?;
            cx.report.result("point", p.to_string());
            cx.report
                .check(Condition::new("p in e", e.contains_point(&p)));
            cx.report.check(Condition::new(
                "g.p != p",
                g.apply(&p).ok().as_ref() != Some(&p),
            ));
            cx.report.check(Condition::new(
                "p in sigma(g)",
                support(c, &g).contains_point(&p),
            ));
            let again = c.parse_point(&p.to_string()).ok() == Some(p.clone());
            cx.report.check(Condition::new("point re-parses", again));
        }
        "separating" => {
            let g = cx.map("t")?;
            let p = cx.point()?;
            let e = separating_idempotent(&g, &p)?;
            cx.reparses_clopen("idempotent", &e);
            cx.report
                .check(Condition::new("p in e", e.contains_point(&p)));
            cx.report.check(Condition::new(
                "e and g e g^-1 are disjoint",
                e.is_disjoint(&g.restrict(&e).range_clopen()),
            ));
        }
        "support-cover" => {
            let e = cx.clopen("e")?;
            let ts = support_cover(&e)?;
            let listed: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
            cx.report.result("involutions", listed);
            cx.report.check(Condition::new(
                "each is a non-trivial involution",
                ts.iter().all(|t| c.is_involution(t) && *t != c.one()),
            ));
            let joined = ts
                .iter()
                .fold(Clopen::empty(c.arity()), |acc, t| acc.union(&support(c, t)));
            cx.report
                .check(Condition::new("supports join to e", joined == e));
            let reparsed = ts
                .iter()
                .all(|t| c.parse_element(&t.to_string()).ok().as_ref() == Some(t));
            cx.report
                .check(Condition::new("involutions re-parse", reparsed));
        }
        _ => {
            let s = cx.map("s")?;
            let p = cx.point()?;
            let parts = infinitesimal_factors(&s, &p)?;
            let listed: Vec<String> = parts.iter().map(|a| a.to_string()).collect();
            cx.report.result("infinitesimals", listed);
            let product = parts
                .iter()
                .skip(1)
                .fold(parts[0].clone(), |acc, a| c.multiply(&acc, a));
            cx.report.result("product", product.to_string());
            cx.report.check(Condition::new(
                "each is infinitesimal",
                parts.iter().all(|a| c.is_infinitesimal(a)),
            ));
            cx.report
                .check(Condition::new("product <= s", c.leq(&product, &s)));
            cx.report.check(Condition::new(
                "p in d(product)",
                product.domain_clopen().contains_point(&p),
            ));
        }
    }
    Ok(())
}
