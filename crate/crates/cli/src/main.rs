mod ops;
mod report;
mod witness;

use std::path::PathBuf;
use std::process::ExitCode;

use boolinv::analysis::{analyze_cuntz, analyze_finite};
use boolinv::cuntz::CuntzMonoid;
use boolinv::duality::{
    duality_roundtrip_groupoid, duality_roundtrip_monoid, is_essentially_principal, orbit_count,
    DualityError,
};
use boolinv::finite::{FiniteGroupoid, LocalBisectionMonoid};
use boolinv::instance::{FiniteInstance, Instance};
use boolinv::suites::{run_suite, DEFAULT_SAMPLES, DEFAULT_SEED};
use boolinv::{with_finite, Condition, FiniteMonoid};
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::Report;

#[derive(Parser)]
#[command(
    name = "boolinv",
    version,
    about = "Exact computation with Boolean inverse meet-monoids"
)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Number of random samples for seeded checks.
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct Target {
    /// I<n>, prod:I<a>xI<b>, groupoid:<path>, pair:<k>, cyclic:<m>, discrete:<k> or cn:<n>
    #[arg(long = "in", visible_alias = "instance")]
    instance: Option<String>,
    /// Shorthand for `--in cn:<n>`.
    #[arg(long)]
    cn: Option<u8>,
    /// Shorthand for `--in groupoid:<path>`.
    #[arg(long)]
    groupoid: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Query a finite instance: info, elements, idempotents, atoms, units, or an element operation.
    Finite {
        #[command(flatten)]
        target: Target,
        #[arg(default_value = "info")]
        op: String,
        elements: Vec<String>,
    },
    /// Evaluate an element operation in C_n, or `apply <map> <point>`.
    Cuntz {
        #[command(flatten)]
        target: Target,
        /// An element operation (normalize, multiply, phi, sigma, cooper, ...) or apply
        op: String,
        elements: Vec<String>,
    },
    /// Validate a groupoid JSON file and summarise it.
    Groupoid { path: PathBuf },
    /// Structural flags with evidence (exact for finite instances, sampled for C_n).
    Analyze {
        #[command(flatten)]
        target: Target,
    },
    /// Duality certificates S = B(G(S)) and G = G(B(G)).
    Roundtrip {
        #[command(flatten)]
        target: Target,
    },
    /// Construct a witness in C_n and check its postconditions.
    Witness {
        /// f1, f2, f3, infinitesimal, properly-infinite, transfer, conjugator, clopen-iso, factorize,
        /// ultrafilter-unit, principality, moved-point, separating, support-cover, infinitesimal-factors
        kind: String,
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        e: Option<String>,
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        p: Option<String>,
        /// An involution (f2) or a unit (moved-point, separating).
        #[arg(long, visible_alias = "g")]
        t: Option<String>,
        #[arg(long)]
        s: Option<String>,
    },
    /// Run a property suite: axioms, order, support, duality, witnesses, classification.
    Test {
        suite: String,
        #[command(flatten)]
        target: Target,
    },
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
}

impl Target {
    fn spec(&self) -> Result<String, Failure> {
        let given = [
            self.instance.clone(),
            self.cn.map(|n| format!("cn:{n}")),
            self.groupoid
                .as_ref()
                .map(|p| format!("groupoid:{}", p.display())),
        ];
        let mut specs = given.into_iter().flatten();
        match (specs.next(), specs.next()) {
            (Some(spec), None) => Ok(spec),
            (None, _) => Err(Failure::Usage(
                "an instance is required (--in, --cn or --groupoid)".into(),
            )),
            _ => Err(Failure::Usage(
                "give only one of --in, --cn, --groupoid".into(),
            )),
        }
    }

    fn resolve(&self) -> Result<Instance, Failure> {
        Instance::parse(&self.spec()?).map_err(|e| Failure::Usage(e.to_string()))
    }

    fn cuntz(&self) -> Result<CuntzMonoid, Failure> {
        match self.resolve()? {
            Instance::Cuntz(c) => Ok(c),
            Instance::Finite(_) => Err(Failure::Usage(
                "this command needs a C_n instance (--cn <n>)".into(),
            )),
        }
    }

    fn finite(&self) -> Result<FiniteInstance, Failure> {
        match self.resolve()? {
            Instance::Finite(f) => Ok(f),
            Instance::Cuntz(_) => Err(Failure::Usage(
                "this command needs a finite instance".into(),
            )),
        }
    }
}

fn certificate_checks(label: &str, checks: Vec<Condition>) -> impl Iterator<Item = Condition> + '_ {
    checks.into_iter().map(move |mut c| {
        c.name = format!("{label}: {}", c.name);
        c
    })
}

fn roundtrip_failure(report: &mut Report, what: &str, err: DualityError) -> Result<(), Failure> {
    match err {
        DualityError::RoundTripFailure(_) => {
            report.check(Condition::new(what, false).with_detail(err.to_string()));
            Ok(())
        }
        other => Err(Failure::Usage(other.to_string())),
    }
}

fn roundtrip<S: FiniteMonoid>(s: &S, report: &mut Report) -> Result<(), Failure> {
    match duality_roundtrip_monoid(s) {
        Ok(cert) => {
            report.result("size", cert.size);
            report.result("atoms", cert.atoms);
            report.result("objects", cert.objects);
            report.result("pairing", &cert.pairing);
            report.extend_checks(certificate_checks("S = B(G(S))", cert.checks));
        }
        Err(e) => roundtrip_failure(report, "S = B(G(S))", e)?,
    }
    let g = boolinv::duality::atom_groupoid(s).map_err(|e| Failure::Usage(e.to_string()))?;
    match duality_roundtrip_groupoid(&g.groupoid) {
        Ok(cert) => report.extend_checks(certificate_checks("G(S) = G(B(G(S)))", cert.checks)),
        Err(e) => roundtrip_failure(report, "G(S) = G(B(G(S)))", e)?,
    }
    Ok(())
}

fn groupoid_roundtrip(g: &FiniteGroupoid, report: &mut Report) -> Result<(), Failure> {
    match duality_roundtrip_groupoid(g) {
        Ok(cert) => {
            report.result("arrows", cert.arrows);
            report.result("objects", cert.objects);
            report.result("functor", &cert.functor);
            report.extend_checks(certificate_checks("G = G(B(G))", cert.checks));
        }
        Err(e) => roundtrip_failure(report, "G = G(B(G))", e)?,
    }
    let b = LocalBisectionMonoid::new(g.clone()).map_err(|e| Failure::Usage(e.to_string()))?;
    match duality_roundtrip_monoid(&b) {
        Ok(cert) => {
            report.result("bisections", cert.size);
            report.extend_checks(certificate_checks("B(G) = B(G(B(G)))", cert.checks));
        }
        Err(e) => roundtrip_failure(report, "B(G) = B(G(B(G)))", e)?,
    }
    Ok(())
}

fn read_groupoid(path: &PathBuf) -> Result<FiniteGroupoid, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    FiniteGroupoid::from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let seed = cli.seed;
    let samples = cli.samples.unwrap_or(DEFAULT_SAMPLES);
    match &cli.command {
        Command::Finite {
            target,
            op,
            elements,
        } => {
            let f = target.finite()?;
            with_finite!(&f, s => {
                let mut report = Report::new(format!("finite {op}"), seed).instance(s.name());
                ops::finite_query(s, op, elements, &mut report)?;
                Ok(report)
            })
        }
        Command::Cuntz {
            target,
            op,
            elements,
        } => {
            let c = target.cuntz()?;
            let mut report = Report::new(format!("cuntz {op}"), seed).instance(c.name());
            if op == "apply" {
                let [map, point] = elements.as_slice() else {
                    return Err(Failure::Usage("`apply` takes a map and a point".into()));
                };
                report.input("s", map);
                report.input("p", point);
                let s = c
                    .parse_element(map)
                    .map_err(|e| Failure::Usage(format!("s: {e}")))?;
                let p = c
                    .parse_point(point)
                    .map_err(|e| Failure::Usage(format!("p: {e}")))?;
                let q = s.apply(&p).map_err(|e| Failure::Usage(e.to_string()))?;
                report.result("image", q.to_string());
            } else {
                ops::evaluate(&c, op, elements, &mut report)?;
            }
            Ok(report)
        }
        Command::Groupoid { path } => {
            let g = read_groupoid(path)?;
            let mut report = Report::new("groupoid", seed);
            report.input("path", path.display().to_string());
            report.result("objects", g.objects());
            report.result("arrows", g.arrow_count());
            report.result("orbits", orbit_count(&g));
            report.result("essentially_principal", is_essentially_principal(&g));
            report.check(Condition::new("groupoid laws validated", true));
            match LocalBisectionMonoid::new(g.clone()) {
                Ok(b) => report.result("local_bisections", b.elements().len()),
                Err(e) => report.result("local_bisections", e.to_string()),
            }
            let again = FiniteGroupoid::from_json(&g.to_json())
                .map_err(|e| Failure::Usage(e.to_string()))?;
            report.check(Condition::new(
                "canonical JSON re-loads to the same groupoid",
                again.to_json() == g.to_json(),
            ));
            Ok(report)
        }
        Command::Analyze { target } => match target.resolve()? {
            Instance::Finite(f) => with_finite!(&f, s => {
                let mut report = Report::new("analyze", seed).instance(s.name());
                let analysis = analyze_finite(s).map_err(|e| Failure::Usage(e.to_string()))?;
                report.extend_checks(analysis.cross_checks.clone());
                report.results = to_object(&analysis);
                Ok(report)
            }),
            Instance::Cuntz(c) => {
                let mut report = Report::new("analyze", seed).instance(c.name());
                report.input("samples", samples);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let analysis = analyze_cuntz(&c, &mut rng, samples, Some(seed));
                report.results = to_object(&analysis);
                Ok(report)
            }
        },
        Command::Roundtrip { target } => {
            let mut report = Report::new("roundtrip", seed);
            if let (Some(path), None, None) = (&target.groupoid, &target.instance, &target.cn) {
                let g = read_groupoid(path)?;
                report = report.instance(format!("G({})", path.display()));
                groupoid_roundtrip(&g, &mut report)?;
                return Ok(report);
            }
            let f = target.finite()?;
            with_finite!(&f, s => {
                report = report.instance(s.name());
                roundtrip(s, &mut report)?;
            });
            Ok(report)
        }
        Command::Witness {
            kind,
            target,
            e,
            f,
            p,
            t,
            s,
        } => {
            let c = target.cuntz()?;
            let mut report = Report::new(format!("witness {kind}"), seed).instance(c.name());
            let inputs = witness::Inputs {
                e: e.clone(),
                f: f.clone(),
                p: p.clone(),
                t: t.clone(),
                s: s.clone(),
            };
            witness::run(
                &c,
                kind,
                &inputs,
                seed,
                cli.samples.unwrap_or(50),
                &mut report,
            )?;
            Ok(report)
        }
        Command::Test { suite, target } => {
            let instance = target.resolve()?;
            let result = run_suite(suite, &instance, seed, samples)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let mut report = Report::new(format!("test {suite}"), seed).instance(instance.name());
            report.input("samples", samples);
            report.result("exhaustive", result.exhaustive);
            report.extend_checks(result.checks);
            Ok(report)
        }
    }
}

/// The fields of an analysis report, minus those the outer report echoes.
fn to_object(value: &impl serde::Serialize) -> serde_json::Map<String, serde_json::Value> {
    match serde_json::to_value(value).expect("reports serialize") {
        serde_json::Value::Object(mut map) => {
            for key in ["instance", "seed", "cross_checks"] {
                map.shift_remove(key);
            }
            map
        }
        _ => unreachable!("reports are structs"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
