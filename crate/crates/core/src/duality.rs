//! Stone duality at finite scale: the groupoid of atoms of a finite Boolean
//! inverse ∧-monoid, the round trips `S ≅ B(G(S))` and `G ≅ G(B(G))`, the
//! action `θ` on atoms of `E(S)`, fundamentality, isotropy and orbits.
//!
//! In the finite case every ultrafilter is the up-set of an atom and the
//! Stone space is discrete, so interiors, closures and density are trivial
//! and ultrafilters are represented by their atoms.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::condition::{all_hold, Condition};
use crate::finite::{
    atoms, idempotent_atoms, idempotents, units, ArrowSet, FiniteError, FiniteGroupoid,
    LocalBisectionMonoid, PartialBijection,
};
use crate::monoid::{BooleanInverseMonoid, FiniteMonoid, MonoidExt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("idempotents do not form a Boolean algebra: {0}")]
    NotBoolean(String),
    #[error("round trip failed: {0}")]
    RoundTripFailure(String),
    #[error(transparent)]
    Finite(#[from] FiniteError),
}

/// The groupoid whose arrows are the atoms of `S` and whose objects are the
/// atoms of `E(S)`. Arrow `i` is `arrows[i]`, with id `a{i:03}`; object `j`
/// is `objects[j]`, with id `o{j:03}`.
#[derive(Clone, Debug)]
pub struct AtomGroupoid<E> {
    pub arrows: Vec<E>,
    pub objects: Vec<E>,
    pub groupoid: FiniteGroupoid,
}

impl<E: Ord> AtomGroupoid<E> {
    pub fn arrow_index(&self, a: &E) -> Option<usize> {
        self.arrows.binary_search(a).ok()
    }

    pub fn object_index(&self, e: &E) -> Option<usize> {
        self.objects.binary_search(e).ok()
    }
}

fn check_boolean<S: FiniteMonoid>(s: &S, objects: &[S::Element]) -> Result<(), DualityError> {
    let one = s.one();
    for e in idempotents(s) {
        let c = s.idempotent_complement(&e);
        if !s.is_idempotent(&c)
            || !s.is_zero(&s.multiply(&c, &e))
            || s.join(&e, &c).ok() != Some(one.clone())
        {
            return Err(DualityError::NotBoolean(format!(
                "{} has no complement",
                s.render(&e)
            )));
        }
        let below: Vec<S::Element> = objects.iter().filter(|f| s.leq(f, &e)).cloned().collect();
        if s.join_all(&below).ok() != Some(e.clone()) {
            return Err(DualityError::NotBoolean(format!(
                "{} is not the join of the atoms below it",
                s.render(&e)
            )));
        }
    }
    Ok(())
}

pub fn atom_groupoid<S: FiniteMonoid>(s: &S) -> Result<AtomGroupoid<S::Element>, DualityError> {
    let objects = idempotent_atoms(s);
    check_boolean(s, &objects)?;
    let arrows = atoms(s);
    let object_of = |e: &S::Element| {
        objects.binary_search(e).map_err(|_| {
            DualityError::NotBoolean(format!("{} is not an atom of E(S)", s.render(e)))
        })
    };
    let mut parts = Vec::with_capacity(arrows.len());
    for (i, a) in arrows.iter().enumerate() {
        parts.push((
            format!("a{i:03}"),
            object_of(&s.domain(a))?,
            object_of(&s.range(a))?,
        ));
    }
    let mut table = BTreeMap::new();
    for (i, a) in arrows.iter().enumerate() {
        for (j, b) in arrows.iter().enumerate() {
            if parts[j].2 == parts[i].1 {
                let ab = s.multiply(a, b);
                let k = arrows.binary_search(&ab).map_err(|_| {
                    DualityError::NotBoolean(format!(
                        "product {}·{} of composable atoms is not an atom",
                        s.render(a),
                        s.render(b)
                    ))
                })?;
                table.insert((i, j), k);
            }
        }
    }
    let inverse = arrows
        .iter()
        .map(|a| {
            arrows
                .binary_search(&s.inverse(a))
                .map_err(|_| DualityError::NotBoolean("inverse of an atom is not an atom".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let groupoid = FiniteGroupoid::from_parts(
        (0..objects.len()).map(|j| format!("o{j:03}")).collect(),
        parts,
        |i, j| table[&(i, j)],
        inverse,
    )?;
    Ok(AtomGroupoid {
        arrows,
        objects,
        groupoid,
    })
}

/// The set of atoms below `x`, as arrows of the atom groupoid.
pub fn atom_set<S: FiniteMonoid>(s: &S, g: &AtomGroupoid<S::Element>, x: &S::Element) -> ArrowSet {
    ArrowSet::from_indices((0..g.arrows.len()).filter(|&i| s.leq(&g.arrows[i], x)))
}

/// Evidence that `s ↦ {atoms ≤ s}` is an isomorphism `S → B(G(S))`.
#[derive(Clone, Debug, Serialize)]
pub struct MonoidCertificate {
    pub monoid: String,
    pub size: usize,
    pub atoms: usize,
    pub objects: usize,
    /// Element and the arrow ids of its image.
    pub pairing: Vec<(String, String)>,
    pub checks: Vec<Condition>,
}

pub fn duality_roundtrip_monoid<S: FiniteMonoid>(s: &S) -> Result<MonoidCertificate, DualityError> {
    let g = atom_groupoid(s)?;
    let b = LocalBisectionMonoid::named(g.groupoid.clone(), "G")?;
    let elements = s.elements();
    let image: Vec<ArrowSet> = elements.iter().map(|x| atom_set(s, &g, x)).collect();
    let index: BTreeMap<&S::Element, usize> =
        elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let f = |x: &S::Element| image[index[x]];
    let fail = |what: &str, detail: String| {
        DualityError::RoundTripFailure(format!("{what} fails at {detail}"))
    };

    let mut sorted = image.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != elements.len() {
        return Err(fail(
            "injectivity",
            "two elements with the same atoms".into(),
        ));
    }
    if sorted != b.elements() {
        return Err(fail(
            "surjectivity",
            "image differs from the local bisections".into(),
        ));
    }
    if f(&s.zero()) != ArrowSet::EMPTY {
        return Err(fail("zero", s.render(&s.zero())));
    }
    if f(&s.one()) != b.one() {
        return Err(fail("one", s.render(&s.one())));
    }
    let mut joins = 0usize;
    for x in &elements {
        if f(&s.inverse(x)) != b.inverse(&f(x)) {
            return Err(fail("inverse", s.render(x)));
        }
        for y in &elements {
            let pair = || format!("({}, {})", s.render(x), s.render(y));
            if f(&s.multiply(x, y)) != b.multiply(&f(x), &f(y)) {
                return Err(fail("product", pair()));
            }
            if f(&s.meet(x, y)) != f(x).intersection(f(y)) {
                return Err(fail("meet", pair()));
            }
            if s.compatible(x, y) {
                joins += 1;
                let j = s.join(x, y).map_err(|e| fail("join", e.to_string()))?;
                if f(&j) != f(x).union(f(y)) {
                    return Err(fail("join", pair()));
                }
            }
        }
    }
    let n = elements.len();
    Ok(MonoidCertificate {
        monoid: s.name(),
        size: n,
        atoms: g.arrows.len(),
        objects: g.objects.len(),
        pairing: elements
            .iter()
            .zip(&image)
            .map(|(x, a)| (s.render(x), b.display(*a).to_string()))
            .collect(),
        checks: vec![
            Condition::new(format!("bijective onto {} local bisections", n), true),
            Condition::new("zero and one preserved", true),
            Condition::new(format!("inverses preserved on {n} elements"), true),
            Condition::new(
                format!("products and meets preserved on {} pairs", n * n),
                true,
            ),
            Condition::new(format!("joins preserved on {joins} compatible pairs"), true),
        ],
    })
}

/// Evidence that `g ↦ {g}` is an isomorphism `G → G(B(G))`.
#[derive(Clone, Debug, Serialize)]
pub struct GroupoidCertificate {
    pub arrows: usize,
    pub objects: usize,
    /// Arrow id and the id of its image.
    pub functor: Vec<(String, String)>,
    pub checks: Vec<Condition>,
}

pub fn duality_roundtrip_groupoid(g: &FiniteGroupoid) -> Result<GroupoidCertificate, DualityError> {
    let b = LocalBisectionMonoid::new(g.clone())?;
    let ag = atom_groupoid(&b)?;
    let h = &ag.groupoid;
    let fail = |what: &str, detail: String| {
        DualityError::RoundTripFailure(format!("{what} fails at {detail}"))
    };
    let arrow_map: Vec<usize> = (0..g.arrow_count())
        .map(|a| {
            ag.arrow_index(&ArrowSet::singleton(a))
                .ok_or_else(|| fail("arrow map", g.arrow(a).id.clone()))
        })
        .collect::<Result<_, _>>()?;
    let object_map: Vec<usize> = (0..g.object_count())
        .map(|o| {
            ag.object_index(&ArrowSet::singleton(g.identity(o)))
                .ok_or_else(|| fail("object map", g.objects()[o].clone()))
        })
        .collect::<Result<_, _>>()?;
    let mut seen = arrow_map.clone();
    seen.sort();
    seen.dedup();
    if seen.len() != h.arrow_count() || g.arrow_count() != h.arrow_count() {
        return Err(fail(
            "bijectivity",
            format!("{} vs {} arrows", g.arrow_count(), h.arrow_count()),
        ));
    }
    if g.object_count() != h.object_count() {
        return Err(fail("bijectivity", "object counts differ".into()));
    }
    for a in 0..g.arrow_count() {
        let fa = h.arrow(arrow_map[a]);
        let ga = g.arrow(a);
        if fa.src != object_map[ga.src] || fa.dst != object_map[ga.dst] {
            return Err(fail("endpoints", ga.id.clone()));
        }
        if arrow_map[g.inverse(a)] != h.inverse(arrow_map[a]) {
            return Err(fail("inverse", ga.id.clone()));
        }
        for c in 0..g.arrow_count() {
            let expected = g.compose(a, c).map(|x| arrow_map[x]);
            if h.compose(arrow_map[a], arrow_map[c]) != expected {
                return Err(fail("composition", format!("{}∘{}", ga.id, g.arrow(c).id)));
            }
        }
    }
    Ok(GroupoidCertificate {
        arrows: g.arrow_count(),
        objects: g.object_count(),
        functor: (0..g.arrow_count())
            .map(|a| (g.arrow(a).id.clone(), h.arrow(arrow_map[a]).id.clone()))
            .collect(),
        checks: vec![
            Condition::new("bijective on arrows and objects", true),
            Condition::new("endpoints and inverses preserved", true),
            Condition::new(
                format!("composition preserved on {} pairs", g.arrow_count().pow(2)),
                true,
            ),
        ],
    })
}

/// `θ_s`: the partial bijection of the atoms of `E(S)` sending `f ≤ d(s)` to
/// the atom `s·f·s⁻¹`. Atoms are numbered as the objects of `g`.
pub fn theta<S: FiniteMonoid>(
    s: &S,
    g: &AtomGroupoid<S::Element>,
    x: &S::Element,
) -> PartialBijection {
    let d = s.domain(x);
    let inv = s.inverse(x);
    let pairs: Vec<(usize, usize)> = g
        .objects
        .iter()
        .enumerate()
        .filter(|(_, f)| s.leq(f, &d))
        .map(|(i, f)| {
            let image = s.multiply(&s.multiply(x, f), &inv);
            (
                i,
                g.object_index(&image)
                    .expect("conjugate of an atom below d(s) is an atom"),
            )
        })
        .collect();
    PartialBijection::from_pairs(g.objects.len(), &pairs).expect("θ is injective")
}

/// `s μ t`: equal domains and `s·e·s⁻¹ = t·e·t⁻¹` for every idempotent `e`.
pub fn mu_related<S: FiniteMonoid>(
    s: &S,
    x: &S::Element,
    y: &S::Element,
    es: &[S::Element],
) -> bool {
    if s.domain(x) != s.domain(y) || s.range(x) != s.range(y) {
        return false;
    }
    let (xi, yi) = (s.inverse(x), s.inverse(y));
    es.iter()
        .all(|e| s.multiply(&s.multiply(x, e), &xi) == s.multiply(&s.multiply(y, e), &yi))
}

/// Fundamentality decided three independent ways.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fundamentality {
    /// μ is the equality relation.
    pub by_mu: bool,
    /// Only idempotents centralise all idempotents.
    pub by_centralizer: bool,
    /// `s ↦ θ_s` is injective.
    pub by_theta: bool,
    /// A pair of distinct μ-related elements, when one exists.
    pub counterexample: Option<(String, String)>,
}

impl Fundamentality {
    pub fn consistent(&self) -> bool {
        self.by_mu == self.by_centralizer && self.by_mu == self.by_theta
    }
}

pub fn fundamentality<S: FiniteMonoid>(s: &S) -> Result<Fundamentality, DualityError> {
    let g = atom_groupoid(s)?;
    let elements = s.elements();
    let es = idempotents(s);
    let mut classes: BTreeMap<(S::Element, S::Element), Vec<&S::Element>> = BTreeMap::new();
    for x in &elements {
        classes
            .entry((s.domain(x), s.range(x)))
            .or_default()
            .push(x);
    }
    let mut counterexample = None;
    'outer: for members in classes.values() {
        for (i, x) in members.iter().enumerate() {
            for y in &members[i + 1..] {
                if mu_related(s, x, y, &es) {
                    counterexample = Some((s.render(x), s.render(y)));
                    break 'outer;
                }
            }
        }
    }
    let by_centralizer = elements
        .iter()
        .all(|x| s.is_idempotent(x) || !es.iter().all(|e| s.multiply(x, e) == s.multiply(e, x)));
    let mut thetas: Vec<PartialBijection> = elements.iter().map(|x| theta(s, &g, x)).collect();
    thetas.sort();
    thetas.dedup();
    Ok(Fundamentality {
        by_mu: counterexample.is_none(),
        by_centralizer,
        by_theta: thetas.len() == elements.len(),
        counterexample,
    })
}

pub fn is_fundamental<S: FiniteMonoid>(s: &S) -> Result<bool, DualityError> {
    Ok(fundamentality(s)?.by_mu)
}

/// All local groups trivial. In a finite discrete groupoid the interior of
/// the isotropy is the isotropy itself.
pub fn is_essentially_principal(g: &FiniteGroupoid) -> bool {
    g.arrows()
        .iter()
        .enumerate()
        .all(|(a, arrow)| arrow.src != arrow.dst || g.is_identity(a))
}

/// Number of orbits (connected classes of objects).
pub fn orbit_count(g: &FiniteGroupoid) -> usize {
    let mut parent: Vec<usize> = (0..g.object_count()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for arrow in g.arrows() {
        let (a, b) = (find(&mut parent, arrow.src), find(&mut parent, arrow.dst));
        if a != b {
            parent[a] = b;
        }
    }
    (0..g.object_count())
        .filter(|&x| find(&mut parent, x) == x)
        .count()
}

/// For atoms: the atoms below `x·y` are exactly the non-zero products of
/// atoms below `x` and below `y`.
pub fn check_atom_products<S: FiniteMonoid>(s: &S, g: &AtomGroupoid<S::Element>) -> Condition {
    let elements = s.elements();
    let below: Vec<Vec<usize>> = elements
        .iter()
        .map(|x| atom_set(s, g, x).iter().collect())
        .collect();
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            let mut products: Vec<S::Element> = Vec::new();
            for &a in &below[i] {
                for &b in &below[j] {
                    let p = s.multiply(&g.arrows[a], &g.arrows[b]);
                    if !s.is_zero(&p) {
                        products.push(p);
                    }
                }
            }
            products.sort();
            products.dedup();
            let expected: Vec<S::Element> = atom_set(s, g, &s.multiply(x, y))
                .iter()
                .map(|k| g.arrows[k].clone())
                .collect();
            if products != expected {
                return Condition::new("atoms of products", false).with_detail(format!(
                    "({}, {})",
                    s.render(x),
                    s.render(y)
                ));
            }
        }
    }
    Condition::new(
        format!("atoms of products on {} pairs", elements.len().pow(2)),
        true,
    )
}

/// For every atom `a`, the units above `a` form a non-empty coset:
/// `X = X·X⁻¹·X`.
pub fn check_unit_cosets<S: FiniteMonoid>(s: &S, g: &AtomGroupoid<S::Element>) -> Condition {
    let us = units(s);
    for a in &g.arrows {
        let x: Vec<&S::Element> = us.iter().filter(|u| s.leq(a, u)).collect();
        if x.is_empty() {
            return Condition::new("units above atoms", false).with_detail(s.render(a));
        }
        let mut xxx: Vec<S::Element> = Vec::new();
        for p in &x {
            for q in &x {
                let pq = s.multiply(p, &s.inverse(q));
                for r in &x {
                    xxx.push(s.multiply(&pq, r));
                }
            }
        }
        xxx.sort();
        xxx.dedup();
        let mut own: Vec<S::Element> = x.into_iter().cloned().collect();
        own.sort();
        if own != xxx {
            return Condition::new("units above atoms form cosets", false).with_detail(s.render(a));
        }
    }
    Condition::new(
        format!("units above each of {} atoms form a coset", g.arrows.len()),
        true,
    )
}

/// `θ_x = θ_y` iff `x μ y`, over all pairs.
pub fn check_theta_mu<S: FiniteMonoid>(s: &S, g: &AtomGroupoid<S::Element>) -> Condition {
    let elements = s.elements();
    let es = idempotents(s);
    let thetas: Vec<PartialBijection> = elements.iter().map(|x| theta(s, g, x)).collect();
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            if (thetas[i] == thetas[j]) != mu_related(s, x, y, &es) {
                return Condition::new("theta agrees with mu", false).with_detail(format!(
                    "({}, {})",
                    s.render(x),
                    s.render(y)
                ));
            }
        }
    }
    Condition::new(
        format!("theta agrees with mu on {} pairs", elements.len().pow(2)),
        true,
    )
}

/// Runs the finite duality checks on one instance.
pub fn duality_checks<S: FiniteMonoid>(s: &S) -> Vec<Condition> {
    let mut out = Vec::new();
    match duality_roundtrip_monoid(s) {
        Ok(cert) => out.push(Condition::new(
            format!("{}: S = B(G(S)) on {} elements", s.name(), cert.size),
            all_hold(&cert.checks),
        )),
        Err(e) => out.push(
            Condition::new(format!("{}: S = B(G(S))", s.name()), false).with_detail(e.to_string()),
        ),
    }
    match atom_groupoid(s) {
        Ok(g) => {
            match duality_roundtrip_groupoid(&g.groupoid) {
                Ok(cert) => out.push(Condition::new(
                    format!("{}: G(S) = G(B(G(S)))", s.name()),
                    all_hold(&cert.checks),
                )),
                Err(e) => out.push(
                    Condition::new(format!("{}: G = G(B(G))", s.name()), false)
                        .with_detail(e.to_string()),
                ),
            }
            match fundamentality(s) {
                Ok(f) => {
                    out.push(Condition::new(
                        format!("{}: fundamentality agrees three ways", s.name()),
                        f.consistent(),
                    ));
                    out.push(Condition::new(
                        format!("{}: fundamental iff essentially principal", s.name()),
                        f.by_mu == is_essentially_principal(&g.groupoid),
                    ));
                }
                Err(e) => {
                    out.push(Condition::new("fundamentality", false).with_detail(e.to_string()))
                }
            }
            out.push(check_atom_products(s, &g));
            out.push(check_theta_mu(s, &g));
        }
        Err(e) => out.push(
            Condition::new(format!("{}: atom groupoid", s.name()), false)
                .with_detail(e.to_string()),
        ),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{Product, SymmetricInverseMonoid};

    fn sym(n: usize) -> SymmetricInverseMonoid {
        SymmetricInverseMonoid::new(n).unwrap()
    }

    #[test]
    fn atom_groupoids() {
        let g2 = atom_groupoid(&sym(2)).unwrap();
        assert_eq!(
            (g2.groupoid.object_count(), g2.groupoid.arrow_count()),
            (2, 4)
        );
        assert_eq!(orbit_count(&g2.groupoid), 1);
        let g1 = atom_groupoid(&sym(1)).unwrap();
        assert_eq!(
            (g1.groupoid.object_count(), g1.groupoid.arrow_count()),
            (1, 1)
        );
        let pp = atom_groupoid(&Product::new(sym(2), sym(2))).unwrap();
        assert_eq!(pp.groupoid.arrow_count(), 8);
        assert_eq!(orbit_count(&pp.groupoid), 2);
        let g3 = atom_groupoid(&sym(3)).unwrap();
        assert!(is_essentially_principal(&g3.groupoid));
        assert_eq!(orbit_count(&g3.groupoid), 1);
        assert!(!is_essentially_principal(
            &FiniteGroupoid::cyclic_group(2).unwrap()
        ));
    }

    #[test]
    fn round_trips() {
        for n in 1..=3 {
            let cert = duality_roundtrip_monoid(&sym(n)).unwrap();
            assert!(all_hold(&cert.checks));
        }
        assert_eq!(duality_roundtrip_monoid(&sym(2)).unwrap().size, 7);
        for g in [
            FiniteGroupoid::pair(2).unwrap(),
            FiniteGroupoid::cyclic_group(2).unwrap(),
            FiniteGroupoid::discrete(3).unwrap(),
        ] {
            let cert = duality_roundtrip_groupoid(&g).unwrap();
            assert_eq!(cert.arrows, g.arrow_count());
            let b = LocalBisectionMonoid::new(g).unwrap();
            duality_roundtrip_monoid(&b).unwrap();
        }
    }

    #[test]
    fn theta_on_i2() {
        let i2 = sym(2);
        let g = atom_groupoid(&i2).unwrap();
        let s = i2.parse_element("{1->2}").unwrap();
        let t = theta(&i2, &g, &s);
        let src = g
            .object_index(&i2.parse_element("{1->1}").unwrap())
            .unwrap();
        let dst = g
            .object_index(&i2.parse_element("{2->2}").unwrap())
            .unwrap();
        assert_eq!(t.pairs(), vec![(src, dst)]);
        assert_eq!(theta(&i2, &g, &i2.one()), PartialBijection::identity(2));
    }

    #[test]
    fn fundamentality_cases() {
        let f = fundamentality(&sym(3)).unwrap();
        assert!(f.by_mu && f.consistent());
        let z2 = LocalBisectionMonoid::new(FiniteGroupoid::cyclic_group(2).unwrap()).unwrap();
        let f = fundamentality(&z2).unwrap();
        assert!(!f.by_mu && f.consistent());
        assert!(f.counterexample.is_some());
        assert!(is_fundamental(&Product::new(sym(2), sym(3))).unwrap());
    }

    #[test]
    fn unit_cosets_and_atom_products() {
        for n in 1..=3 {
            let s = sym(n);
            let g = atom_groupoid(&s).unwrap();
            assert!(check_unit_cosets(&s, &g).holds);
            assert!(all_hold(&duality_checks(&s)));
        }
        let s = sym(2);
        let g = atom_groupoid(&s).unwrap();
        assert!(check_atom_products(&s, &g).holds);
    }
}
