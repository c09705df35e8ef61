use boolinv::instance::ElementSyntax;
use boolinv::{Condition, FiniteMonoid, MonoidExt};

use crate::report::Report;
use crate::Failure;

pub const ELEMENT_OPS: &[(&str, usize)] = &[
    ("normalize", 1),
    ("multiply", 2),
    ("inverse", 1),
    ("domain", 1),
    ("range", 1),
    ("leq", 2),
    ("compatible", 2),
    ("orthogonal", 2),
    ("meet", 2),
    ("join", 2),
    ("complement", 1),
    ("phi", 1),
    ("sigma", 1),
    ("cooper", 1),
    ("is-idempotent", 1),
    ("is-unit", 1),
    ("is-involution", 1),
    ("is-infinitesimal", 1),
    ("commutator", 2),
    ("unit-from-balanced", 1),
    ("involution-from-infinitesimal", 1),
];

fn parse_args<S: ElementSyntax>(
    s: &S,
    op: &str,
    args: &[String],
    report: &mut Report,
) -> Result<Vec<S::Element>, Failure> {
    let arity = ELEMENT_OPS
        .iter()
        .find(|(name, _)| *name == op)
        .map(|(_, k)| *k)
        .ok_or_else(|| {
            let known: Vec<&str> = ELEMENT_OPS.iter().map(|(n, _)| *n).collect();
            Failure::Usage(format!(
                "unknown operation `{op}` (expected one of {})",
                known.join(", ")
            ))
        })?;
    if args.len() != arity {
        return Err(Failure::Usage(format!(
            "`{op}` takes {arity} element(s), got {}",
            args.len()
        )));
    }
    let names = ["s", "t"];
    args.iter()
        .zip(names)
        .map(|(text, name)| {
            report.input(name, text);
            s.parse_text(text)
                .map_err(|e| Failure::Usage(format!("{name}: {e}")))
        })
        .collect()
}

/// Evaluates one element operation, recording the result and any
/// postconditions of constructed elements.
pub fn evaluate<S: ElementSyntax>(
    s: &S,
    op: &str,
    args: &[String],
    report: &mut Report,
) -> Result<(), Failure> {
    let xs = parse_args(s, op, args, report)?;
    let algebra = |e: boolinv::AlgebraError| Failure::Usage(e.to_string());
    let x = &xs[0];
    let show = |e: &S::Element| s.render(e);
    match op {
        "normalize" => report.result("normal_form", show(x)),
        "multiply" => report.result("product", show(&s.multiply(x, &xs[1]))),
        "inverse" => report.result("inverse", show(&s.inverse(x))),
        "domain" => report.result("domain", show(&s.domain(x))),
        "range" => report.result("range", show(&s.range(x))),
        "leq" => report.result("leq", s.leq(x, &xs[1])),
        "compatible" => report.result("compatible", s.compatible(x, &xs[1])),
        "orthogonal" => report.result("orthogonal", s.orthogonal(x, &xs[1])),
        "meet" => report.result("meet", show(&s.meet(x, &xs[1]))),
        "join" => report.result("join", show(&s.join(x, &xs[1]).map_err(algebra)?)),
        "complement" => report.result("complement", show(&s.complement(x).map_err(algebra)?)),
        "phi" => report.result("phi", show(&s.phi(x))),
        "sigma" => report.result("sigma", show(&s.sigma(x))),
        "cooper" => {
            let (fixed, moving) = s.cooper_decompose(x);
            report.result("fixed", show(&fixed));
            report.result("moving", show(&moving));
            report.check(Condition::new(
                "parts are orthogonal",
                s.orthogonal(&fixed, &moving),
            ));
            report.check(Condition::new(
                "parts re-join to s",
                s.raw_join(&fixed, &moving) == *x,
            ));
        }
        "is-idempotent" => report.result("is_idempotent", s.is_idempotent(x)),
        "is-unit" => report.result("is_unit", s.is_unit(x)),
        "is-involution" => report.result("is_involution", s.is_involution(x)),
        "is-infinitesimal" => report.result("is_infinitesimal", s.is_infinitesimal(x)),
        "commutator" => report.result(
            "commutator",
            show(&s.commutator(x, &xs[1]).map_err(algebra)?),
        ),
        "unit-from-balanced" => {
            let g = s.unit_from_balanced(x).map_err(algebra)?;
            report.result("unit", show(&g));
            report.check(Condition::new("result is a unit", s.is_unit(&g)));
            report.check(Condition::new("s <= result", s.leq(x, &g)));
        }
        "involution-from-infinitesimal" => {
            let u = s.involution_from_infinitesimal(x).map_err(algebra)?;
            report.result("involution", show(&u));
            report.check(Condition::new("u^2 = 1", s.is_involution(&u)));
            report.check(Condition::new("u != 1", u != s.one()));
            report.check(Condition::new("a <= u", s.leq(x, &u)));
        }
        _ => unreachable!("checked by parse_args"),
    }
    Ok(())
}

/// Carrier-level queries on a finite instance, or an element operation.
pub fn finite_query<S: FiniteMonoid + ElementSyntax>(
    s: &S,
    op: &str,
    args: &[String],
    report: &mut Report,
) -> Result<(), Failure> {
    let render = |xs: Vec<S::Element>| xs.iter().map(|x| s.render(x)).collect::<Vec<_>>();
    let listing = |what: &str| -> Result<(), Failure> {
        if !args.is_empty() {
            return Err(Failure::Usage(format!("`{what}` takes no elements")));
        }
        Ok(())
    };
    match op {
        "info" => {
            listing(op)?;
            report.result("size", s.elements().len());
            report.result("idempotents", boolinv::finite::idempotents(s).len());
            report.result(
                "idempotent_atoms",
                boolinv::finite::idempotent_atoms(s).len(),
            );
            report.result("atoms", boolinv::finite::atoms(s).len());
            report.result("units", boolinv::finite::units(s).len());
        }
        "elements" => {
            listing(op)?;
            report.result("elements", render(s.elements()));
        }
        "idempotents" => {
            listing(op)?;
            report.result("idempotents", render(boolinv::finite::idempotents(s)));
        }
        "atoms" => {
            listing(op)?;
            report.result("atoms", render(boolinv::finite::atoms(s)));
        }
        "units" => {
            listing(op)?;
            report.result("units", render(boolinv::finite::units(s)));
        }
        _ => evaluate(s, op, args, report)?,
    }
    Ok(())
}
