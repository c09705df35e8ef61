//! Constructive witnesses in `C_n`: involutions, shrinking and order-three
//! units, transfer and conjugating maps, factorisations and decompositions.

use serde::Serialize;

use crate::cuntz::{Clopen, CuntzError, CuntzMonoid, EPPoint, PrefixMap, Word};
use crate::monoid::{BooleanInverseMonoid, MonoidExt};

fn support(g: &PrefixMap) -> Clopen {
    CuntzMonoid::of(g.arity()).sigma(g).domain_clopen()
}

fn outside(p: &EPPoint, e: &Clopen) -> CuntzError {
    CuntzError::PointOutsideDomain {
        point: p.to_string(),
        map: e.to_string(),
    }
}

/// A complete binary prefix code with `k` words: `ε` for one word, otherwise
/// `0, 10, 110, ..., 1^(k-1)`.
fn binary_code(k: usize) -> Vec<Word> {
    if k == 1 {
        return vec![Word::empty()];
    }
    (0..k)
        .map(|i| {
            let mut letters = vec![1u8; i];
            if i + 1 < k {
                letters.push(0);
            }
            Word::from_letters(letters)
        })
        .collect()
}

/// An infinitesimal `a` with `d(a) ∨ r(a) ≤ e` and `p ∈ d(a)`: the cylinder of
/// `e` around `p` is extended by one letter of `p`, and the range flips that
/// letter.
pub fn infinitesimal_at(e: &Clopen, p: &EPPoint) -> Result<PrefixMap, CuntzError> {
    let w = e.cylinder_of(p).ok_or_else(|| outside(p, e))?;
    let d = p.prefix(w.len().max(1) + 1);
    let last = d.last().expect("non-empty");
    let r = d
        .parent()
        .expect("non-empty")
        .child(if last == 0 { 1 } else { 0 });
    Ok(PrefixMap::single(e.arity(), d, r))
}

/// A non-trivial involution `t` with `σ(t) ≤ e` and `p ∈ σ(t)`.
pub fn f1_witness(e: &Clopen, p: &EPPoint) -> Result<PrefixMap, CuntzError> {
    let a = infinitesimal_at(e, p)?;
    Ok(CuntzMonoid::of(e.arity()).involution_from_infinitesimal(&a)?)
}

/// A point of `e` moved by `g`. Fails if `e` misses the support of `g`.
pub fn find_moved_point(g: &PrefixMap, e: &Clopen) -> Result<EPPoint, CuntzError> {
    let region = e.intersection(&support(g));
    let w = region
        .words()
        .first()
        .ok_or_else(|| CuntzError::EmptySupportRegion(g.to_string()))?;
    for (d, _) in g.pairs().iter().filter(|(d, _)| d.comparable(w)) {
        let base = if d.len() > w.len() { d } else { w };
        for letter in 0..g.arity() {
            let q = EPPoint::new(base.clone(), Word::from_letters(vec![letter]))?;
            if g.apply(&q)? != q {
                return Ok(q);
            }
        }
    }
    Err(CuntzError::EmptySupportRegion(g.to_string()))
}

/// A cylinder around `p` disjoint from its image under `g`.
pub fn separating_idempotent(g: &PrefixMap, p: &EPPoint) -> Result<Clopen, CuntzError> {
    let q = g.apply(p)?;
    let Some(j) = p.first_difference(&q) else {
        return Err(CuntzError::NotMoved {
            point: p.to_string(),
            map: g.to_string(),
        });
    };
    let (d, _) = g.pair_at(p).expect("p lies in the domain");
    for k in d.len()..=d.len() + j + 1 {
        let cylinder = Clopen::cylinder(g.arity(), p.prefix(k));
        if cylinder.is_disjoint(&g.restrict(&cylinder).range_clopen()) {
            return Ok(cylinder);
        }
    }
    unreachable!("cylinders of length > |d| + j separate p from g·p")
}

/// The intermediate data of the shrinking construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F2Construction {
    pub moved_point: String,
    pub region: String,
    pub infinitesimal: String,
    #[serde(skip)]
    pub unit: PrefixMap,
}

/// For a non-trivial involution `t` and `0 ≠ e ≤ σ(t)`: an involution `g`
/// agreeing with `t` on its support, with `σ(g) ≤ e ∨ t·e·t`.
pub fn f2_construction(t: &PrefixMap, e: &Clopen) -> Result<F2Construction, CuntzError> {
    let c = CuntzMonoid::of(t.arity());
    if !c.is_involution(t) || *t == c.one() {
        return Err(CuntzError::NotInvolution(t.to_string()));
    }
    if e.is_empty() {
        return Err(CuntzError::ZeroIdempotent);
    }
    let sigma = support(t);
    if !e.is_subset(&sigma) {
        return Err(CuntzError::NotBelowSupport {
            e: e.to_string(),
            support: sigma.to_string(),
        });
    }
    let q = find_moved_point(t, e)?;
    let f = separating_idempotent(t, &q)?.intersection(e);
    let a = infinitesimal_at(&f, &q)?;
    let h = c.domain(&a);
    let tht = c.multiply(&c.multiply(t, &h), t);
    let rest = c.multiply(&c.idempotent_complement(&h), &c.idempotent_complement(&tht));
    let unit = c.join_all([&c.multiply(t, &h), &c.multiply(&h, t), &rest])?;
    Ok(F2Construction {
        moved_point: q.to_string(),
        region: f.to_string(),
        infinitesimal: a.to_string(),
        unit,
    })
}

pub fn f2_witness(t: &PrefixMap, e: &Clopen) -> Result<PrefixMap, CuntzError> {
    f2_construction(t, e).map(|c| c.unit)
}

/// The order-three unit built from two infinitesimals `b: P1 → P2` and
/// `a: P2 → P3` on three disjoint cylinders inside `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F3Construction {
    pub a: PrefixMap,
    pub b: PrefixMap,
    pub involution_a: PrefixMap,
    pub involution_b: PrefixMap,
    /// `a·b`, a restricted product.
    pub composite: PrefixMap,
    pub unit: PrefixMap,
    /// Blocks labelled 1, 2, 3: `d(a)`, `r(a)`, `d(b)`.
    pub blocks: [Clopen; 3],
}

impl F3Construction {
    /// The permutation the unit induces on the labelled blocks, in cycle
    /// notation.
    pub fn block_permutation(&self) -> String {
        let image: Vec<Option<usize>> = self
            .blocks
            .iter()
            .map(|b| {
                let moved = self.unit.restrict(b).range_clopen();
                self.blocks.iter().position(|x| *x == moved)
            })
            .collect();
        let mut seen = [false; 3];
        let mut out = String::new();
        for start in 0..3 {
            if seen[start] || image[start] == Some(start) {
                continue;
            }
            out.push('(');
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                out.push_str(&(i + 1).to_string());
                match image[i] {
                    Some(j) => i = j,
                    None => {
                        out.push('?');
                        break;
                    }
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            "()".into()
        } else {
            out
        }
    }
}

pub fn f3_construction(e: &Clopen) -> Result<F3Construction, CuntzError> {
    let w = e.words().first().ok_or(CuntzError::ZeroIdempotent)?;
    let n = e.arity();
    let c = CuntzMonoid::of(n);
    let p1 = w.child(0).child(0);
    let p2 = w.child(0).child(1);
    let p3 = w.child(1);
    let b = PrefixMap::single(n, p1.clone(), p2.clone());
    let a = PrefixMap::single(n, p2.clone(), p3.clone());
    let involution_a = c.involution_from_infinitesimal(&a)?;
    let involution_b = c.involution_from_infinitesimal(&b)?;
    let composite = c.restricted_product(&a, &b)?;
    let unit = c.multiply(&involution_a, &involution_b);
    Ok(F3Construction {
        a,
        b,
        involution_a,
        involution_b,
        composite,
        unit,
        blocks: [
            Clopen::cylinder(n, p2),
            Clopen::cylinder(n, p3),
            Clopen::cylinder(n, p1),
        ],
    })
}

/// A unit `g` with `σ(g) ≤ e` and `g³ = 1 ≠ g²`.
pub fn f3_witness(e: &Clopen) -> Result<PrefixMap, CuntzError> {
    f3_construction(e).map(|c| c.unit)
}

/// `x, y` with `d(x) = d(y) = e` and orthogonal ranges inside `e`.
pub fn properly_infinite_witness(e: &Clopen) -> Result<(PrefixMap, PrefixMap), CuntzError> {
    let w = e.words().first().ok_or(CuntzError::ZeroIdempotent)?;
    let code = binary_code(e.cylinder_count());
    let into = |letter: u8| {
        let base = w.child(letter);
        PrefixMap::from_normal(
            e.arity(),
            e.words()
                .iter()
                .zip(&code)
                .map(|(ci, k)| (ci.clone(), base.concat(k)))
                .collect(),
        )
    };
    Ok((into(0), into(1)))
}

/// `x` with `d(x) = e` and `r(x) ≤ f`.
pub fn transfer_witness(e: &Clopen, f: &Clopen) -> Result<PrefixMap, CuntzError> {
    if e.is_empty() {
        return Err(CuntzError::ZeroIdempotent);
    }
    let w = f.words().first().ok_or(CuntzError::ZeroIdempotent)?;
    let code = binary_code(e.cylinder_count());
    Ok(PrefixMap::from_normal(
        e.arity(),
        e.words()
            .iter()
            .zip(&code)
            .map(|(ci, k)| (ci.clone(), w.concat(k)))
            .collect(),
    ))
}

/// A unit `g` with `g·e·g⁻¹ ≤ f`, for `e ≠ 1` and `f ≠ 0`.
pub fn conjugator_unit(e: &Clopen, f: &Clopen) -> Result<PrefixMap, CuntzError> {
    if e.is_full() {
        return Err(CuntzError::IdentityIdempotent);
    }
    if f.is_empty() {
        return Err(CuntzError::ZeroIdempotent);
    }
    let c = CuntzMonoid::of(e.arity());
    if e.is_empty() {
        return Ok(c.one());
    }
    let complement = e.complement();
    let target = f.intersection(&complement);
    if !target.is_empty() {
        let a = transfer_witness(e, &target)?;
        let rest = e.union(&a.range_clopen()).complement().to_map();
        return Ok(c.join_all([&a, &a.inverse(), &rest])?);
    }
    let away = conjugator_unit(e, &complement)?;
    let back = conjugator_unit(&complement, f)?;
    Ok(c.multiply(&back, &away))
}

fn refine_shortest(words: &mut Vec<Word>, arity: u8) {
    let i = (0..words.len())
        .min_by_key(|&i| words[i].len())
        .expect("non-empty");
    let w = words.remove(i);
    words.extend((0..arity).map(|a| w.child(a)));
    words.sort();
}

/// `x` with `d(x) = e` and `r(x) = f`. Exists iff the cylinder counts agree
/// modulo `n - 1`.
pub fn clopen_iso(e: &Clopen, f: &Clopen) -> Result<PrefixMap, CuntzError> {
    if e.is_empty() || f.is_empty() {
        return Err(CuntzError::ZeroIdempotent);
    }
    let n = e.arity();
    let modulus = n as usize - 1;
    let (ce, cf) = (e.cylinder_count(), f.cylinder_count());
    if ce.abs_diff(cf) % modulus != 0 {
        return Err(CuntzError::NoIso {
            left: e.to_string(),
            right: f.to_string(),
            left_count: ce,
            right_count: cf,
            modulus,
        });
    }
    let mut left = e.words().to_vec();
    let mut right = f.words().to_vec();
    while left.len() < right.len() {
        refine_shortest(&mut left, n);
    }
    while right.len() < left.len() {
        refine_shortest(&mut right, n);
    }
    Ok(PrefixMap::from_normal(
        n,
        left.into_iter().zip(right).collect(),
    ))
}

/// Writes `s` as an orthogonal join `⋁ g_i·e_i` of restricted units.
pub fn piecewise_factorize(s: &PrefixMap) -> Result<Vec<(PrefixMap, Clopen)>, CuntzError> {
    let n = s.arity();
    let c = CuntzMonoid::of(n);
    if s.is_zero() {
        return Ok(Vec::new());
    }
    if c.is_unit(s) {
        return Ok(vec![(s.clone(), Clopen::full(n))]);
    }
    let mut parts = Vec::new();
    for (d, r) in s.pairs() {
        let pieces: Vec<(Word, Word)> = if d.is_empty() || r.is_empty() {
            (0..n).map(|a| (d.child(a), r.child(a))).collect()
        } else {
            vec![(d.clone(), r.clone())]
        };
        for (d, r) in pieces {
            let dc = Clopen::cylinder(n, d.clone());
            let rc = Clopen::cylinder(n, r.clone());
            let rest = clopen_iso(&dc.complement(), &rc.complement())?;
            let g = c.join(&PrefixMap::single(n, d, r), &rest)?;
            parts.push((g, dc));
        }
    }
    Ok(parts)
}

/// A unit agreeing with `s` on a neighbourhood of `p`.
pub fn unit_in_ultrafilter(s: &PrefixMap, p: &EPPoint) -> Result<PrefixMap, CuntzError> {
    let dom = s.domain_clopen();
    if !dom.contains_point(p) {
        return Err(outside(p, &dom));
    }
    piecewise_factorize(s)?
        .into_iter()
        .find(|(_, e)| e.contains_point(p))
        .map(|(g, _)| g)
        .ok_or_else(|| outside(p, &dom))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Principality {
    /// `s = idempotent ∨ ⋁ infinitesimals`, an orthogonal join.
    Decomposed {
        idempotent: Clopen,
        infinitesimals: Vec<PrefixMap>,
    },
    /// A pair `d -> r` with one word a proper prefix of the other; the map
    /// fixes `fixed_point` without fixing any neighbourhood of it.
    Witness {
        domain: Word,
        range: Word,
        fixed_point: EPPoint,
    },
}

pub fn principality_decompose(s: &PrefixMap) -> Principality {
    let n = s.arity();
    for (d, r) in s.pairs() {
        if d == r {
            continue;
        }
        let fixed = if let Some(x) = d.suffix_after(r) {
            Some(EPPoint::new(d.clone(), x))
        } else {
            r.suffix_after(d).map(|x| EPPoint::new(r.clone(), x))
        };
        if let Some(point) = fixed {
            return Principality::Witness {
                domain: d.clone(),
                range: r.clone(),
                fixed_point: point.expect("suffix of a distinct comparable word is non-empty"),
            };
        }
    }
    Principality::Decomposed {
        idempotent: Clopen::from_words(
            n,
            s.pairs()
                .iter()
                .filter(|(d, r)| d == r)
                .map(|p| p.0.clone())
                .collect(),
        ),
        infinitesimals: s
            .pairs()
            .iter()
            .filter(|(d, r)| d != r)
            .map(|(d, r)| PrefixMap::single(n, d.clone(), r.clone()))
            .collect(),
    }
}

/// Covers `σ(s)` by cylinders `c` with `c·s·c = 0`, refining no deeper than
/// `depth`. `None` when no such cover exists at that depth.
pub fn infinitesimal_cover(s: &PrefixMap, depth: usize) -> Option<Vec<Clopen>> {
    let n = s.arity();
    let mut todo: Vec<Word> = support(s).words().to_vec();
    let mut cover = Vec::new();
    while let Some(w) = todo.pop() {
        let cylinder = Clopen::cylinder(n, w.clone());
        let c = cylinder.to_map();
        if c.compose(s).compose(&c).is_zero() {
            cover.push(cylinder);
        } else if w.len() >= depth {
            return None;
        } else {
            todo.extend((0..n).map(|a| w.child(a)));
        }
    }
    cover.sort();
    Some(cover)
}

/// Involutions whose supports join to exactly `e`: for every cylinder `[w]`
/// and letters `i < j`, the swap of `[wi]` and `[wj]`.
pub fn support_cover(e: &Clopen) -> Result<Vec<PrefixMap>, CuntzError> {
    if e.is_empty() {
        return Err(CuntzError::ZeroIdempotent);
    }
    let n = e.arity();
    let c = CuntzMonoid::of(n);
    let mut out = Vec::new();
    for w in e.words() {
        for i in 0..n {
            for j in i + 1..n {
                let a = PrefixMap::single(n, w.child(i), w.child(j));
                out.push(c.involution_from_infinitesimal(&a)?);
            }
        }
    }
    Ok(out)
}

/// Infinitesimals whose product lies below `s` and has `p` in its domain:
/// one when `s` moves `p`, two when `s` fixes `p` without fixing any
/// neighbourhood of it. Fails when `s` is the identity around `p`.
pub fn infinitesimal_factors(s: &PrefixMap, p: &EPPoint) -> Result<Vec<PrefixMap>, CuntzError> {
    let (d, r) = s
        .pair_at(p)
        .ok_or_else(|| outside(p, &s.domain_clopen()))?
        .clone();
    if d == r {
        return Err(CuntzError::NotMoved {
            point: p.to_string(),
            map: s.to_string(),
        });
    }
    if s.apply(p)? != *p {
        let e = separating_idempotent(s, p)?;
        return Ok(vec![s.restrict(&e)]);
    }
    let n = s.arity();
    let cylinder = Clopen::cylinder(n, p.prefix(d.len() + r.len() + 1));
    let a = s.restrict(&cylinder);
    let (ad, ar) = a.pairs()[0].clone();
    let z = cylinder.union(&a.range_clopen()).complement().words()[0].clone();
    Ok(vec![
        PrefixMap::single(n, z.clone(), ar),
        PrefixMap::single(n, ad, z),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u8, text: &str) -> PrefixMap {
        crate::cuntz::parse_map(n, text).unwrap()
    }

    fn cl(n: u8, text: &str) -> Clopen {
        crate::cuntz::parse_clopen(n, text).unwrap()
    }

    fn pt(n: u8, text: &str) -> EPPoint {
        EPPoint::parse(n, text).unwrap()
    }

    #[test]
    fn infinitesimal_factors_lie_below() {
        let c = CuntzMonoid::of(2);
        let s = m(2, "{1->11, 2->2}");
        let p = EPPoint::parse(2, "e|1").unwrap();
        let parts = infinitesimal_factors(&s, &p).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|a| c.is_infinitesimal(a)));
        let product = c.multiply(&parts[0], &parts[1]);
        assert!(c.leq(&product, &s) && product.domain_clopen().contains_point(&p));
        let s = m(2, "{1->2, 2->1}");
        let parts = infinitesimal_factors(&s, &p).unwrap();
        assert_eq!(parts.len(), 1);
        assert!(c.is_infinitesimal(&parts[0]) && c.leq(&parts[0], &s));
        assert!(matches!(
            infinitesimal_factors(&c.one(), &p),
            Err(CuntzError::NotMoved { .. })
        ));
    }

    #[test]
    fn infinitesimals_at_points() {
        assert_eq!(
            infinitesimal_at(&cl(2, "[1]"), &pt(2, "1|1")).unwrap(),
            m(2, "{11->12}")
        );
        assert_eq!(
            infinitesimal_at(&cl(2, "[e]"), &pt(2, "|2")).unwrap(),
            m(2, "{22->21}")
        );
        assert_eq!(
            infinitesimal_at(&cl(2, "[1,21]"), &pt(2, "21|1")).unwrap(),
            m(2, "{211->212}")
        );
        assert!(matches!(
            infinitesimal_at(&cl(2, "[1]"), &pt(2, "|2")),
            Err(CuntzError::PointOutsideDomain { .. })
        ));
    }

    #[test]
    fn involution_witnesses() {
        let t = f1_witness(&cl(2, "[1]"), &pt(2, "1|1")).unwrap();
        assert_eq!(t, m(2, "{11->12, 12->11, 2->2}"));
        assert_eq!(support(&t), cl(2, "[1]"));
        assert_eq!(f1_witness(&cl(2, "[e]"), &pt(2, "|1")).unwrap(), t);
    }

    #[test]
    fn order_three_units() {
        let whole = f3_construction(&cl(2, "[e]")).unwrap();
        assert_eq!(whole.b, m(2, "{11->12}"));
        assert_eq!(whole.a, m(2, "{12->2}"));
        assert_eq!(whole.unit, m(2, "{11->2, 12->11, 2->12}"));
        assert_eq!(whole.composite, m(2, "{11->2}"));
        assert_eq!(whole.block_permutation(), "(132)");
        assert_eq!(
            f3_witness(&cl(2, "[1]")).unwrap(),
            m(2, "{111->12, 112->111, 12->112, 2->2}")
        );
        assert_eq!(
            f3_witness(&Clopen::empty(2)),
            Err(CuntzError::ZeroIdempotent)
        );
    }

    #[test]
    fn moved_points_and_separation() {
        let swap = m(2, "{1->2, 2->1}");
        let q = find_moved_point(&swap, &cl(2, "[1]")).unwrap();
        assert_eq!(q, pt(2, "1|1"));
        let g = m(2, "{1->11, 21->12, 22->2}");
        assert_eq!(
            separating_idempotent(&g, &pt(2, "21|1")).unwrap(),
            cl(2, "[21]")
        );
        assert!(matches!(
            separating_idempotent(&g, &pt(2, "|2")),
            Err(CuntzError::NotMoved { .. })
        ));
        assert!(matches!(
            find_moved_point(&m(2, "{1->1, 2->2}"), &cl(2, "[1]")),
            Err(CuntzError::EmptySupportRegion(_))
        ));
    }

    #[test]
    fn infinite_and_transfer_witnesses() {
        assert_eq!(
            properly_infinite_witness(&cl(2, "[1]")).unwrap(),
            (m(2, "{1->11}"), m(2, "{1->12}"))
        );
        assert_eq!(
            properly_infinite_witness(&cl(2, "[1,2]")).unwrap(),
            (m(2, "{e->1}"), m(2, "{e->2}"))
        );
        assert_eq!(
            transfer_witness(&cl(2, "[e]"), &cl(2, "[12]")).unwrap(),
            m(2, "{e->12}")
        );
        assert_eq!(
            transfer_witness(&cl(2, "[11,2]"), &cl(2, "[11]")).unwrap(),
            m(2, "{11->111, 2->112}")
        );
        assert_eq!(
            transfer_witness(&cl(2, "[1,2]"), &cl(2, "[11]")).unwrap(),
            m(2, "{1->111, 2->112}")
        );
    }

    #[test]
    fn conjugators() {
        let g = conjugator_unit(&cl(2, "[1]"), &cl(2, "[21]")).unwrap();
        assert_eq!(g, m(2, "{1->21, 21->1, 22->22}"));
        let g = conjugator_unit(&cl(2, "[1]"), &cl(2, "[1]")).unwrap();
        let c = CuntzMonoid::of(2);
        assert!(c.is_unit(&g));
        let image = g.restrict(&cl(2, "[1]")).range_clopen();
        assert!(image.is_subset(&cl(2, "[1]")));
        assert_eq!(
            conjugator_unit(&Clopen::full(2), &cl(2, "[1]")),
            Err(CuntzError::IdentityIdempotent)
        );
    }

    #[test]
    fn isomorphisms_between_clopens() {
        assert!(matches!(
            clopen_iso(&cl(3, "[1]"), &cl(3, "[1,2]")),
            Err(CuntzError::NoIso {
                left_count: 1,
                right_count: 2,
                modulus: 2,
                ..
            })
        ));
        assert_eq!(
            clopen_iso(&cl(3, "[1]"), &cl(3, "[1,2,3]")).unwrap(),
            m(3, "{1->e}")
        );
        let x = clopen_iso(&cl(2, "[11]"), &cl(2, "[1,21]")).unwrap();
        assert_eq!(x.domain_clopen(), cl(2, "[11]"));
        assert_eq!(x.range_clopen(), cl(2, "[1,21]"));
    }

    #[test]
    fn factorisations() {
        let parts = piecewise_factorize(&m(2, "{1->11}")).unwrap();
        assert_eq!(parts, vec![(m(2, "{1->11, 21->12, 22->2}"), cl(2, "[1]"))]);
        let swap = m(2, "{1->2, 2->1}");
        assert_eq!(
            piecewise_factorize(&swap).unwrap(),
            vec![(swap.clone(), Clopen::full(2))]
        );
        assert_eq!(piecewise_factorize(&m(2, "{e->1}")).unwrap().len(), 2);
        assert_eq!(
            unit_in_ultrafilter(&m(2, "{1->11}"), &pt(2, "1|2")).unwrap(),
            m(2, "{1->11, 21->12, 22->2}")
        );
        assert_eq!(
            unit_in_ultrafilter(&m(2, "{1->2}"), &pt(2, "1|1")).unwrap(),
            swap
        );
    }

    #[test]
    fn principality() {
        match principality_decompose(&m(2, "{11->11, 12->2, 2->12}")) {
            Principality::Decomposed {
                idempotent,
                infinitesimals,
            } => {
                assert_eq!(idempotent, cl(2, "[11]"));
                assert_eq!(infinitesimals, vec![m(2, "{12->2}"), m(2, "{2->12}")]);
            }
            other => panic!("{other:?}"),
        }
        match principality_decompose(&m(2, "{1->11}")) {
            Principality::Witness {
                domain,
                range,
                fixed_point,
            } => {
                assert_eq!(
                    (domain.to_string(), range.to_string()),
                    ("1".into(), "11".into())
                );
                assert_eq!(fixed_point, pt(2, "|1"));
            }
            other => panic!("{other:?}"),
        }
        assert!(infinitesimal_cover(&m(2, "{1->11}"), 6).is_none());
        assert_eq!(
            infinitesimal_cover(&m(2, "{11->11, 12->2, 2->12}"), 2).unwrap(),
            vec![cl(2, "[12]"), cl(2, "[2]")]
        );
    }

    #[test]
    fn support_covers() {
        assert_eq!(
            support_cover(&cl(2, "[e]")).unwrap(),
            vec![m(2, "{1->2, 2->1}")]
        );
        let cover = support_cover(&cl(3, "[1]")).unwrap();
        assert_eq!(cover.len(), 3);
        let joined = cover
            .iter()
            .fold(Clopen::empty(3), |acc, t| acc.union(&support(t)));
        assert_eq!(joined, cl(3, "[1]"));
    }
}
