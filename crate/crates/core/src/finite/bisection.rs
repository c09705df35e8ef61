use std::fmt;

use crate::finite::{FiniteError, FiniteGroupoid};
use crate::monoid::{BooleanInverseMonoid, FiniteMonoid};

/// Largest groupoid (in arrows) whose bisections are enumerated.
pub const MAX_BISECTION_ARROWS: usize = 16;

/// A set of arrows, as a bitmask over the groupoid's canonical arrow order.
/// Iteration yields arrow indices in increasing (id-sorted) order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ArrowSet(u64);

impl ArrowSet {
    pub const EMPTY: ArrowSet = ArrowSet(0);

    pub fn singleton(a: usize) -> Self {
        ArrowSet(1 << a)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> Self {
        ArrowSet(items.into_iter().fold(0, |acc, a| acc | (1 << a)))
    }

    pub fn contains(self, a: usize) -> bool {
        self.0 >> a & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Self) -> Self {
        ArrowSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ArrowSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ArrowSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&a| self.contains(a))
    }
}

/// The Boolean inverse ∧-monoid `B(G)` of all local bisections of a finite
/// discrete groupoid. Zero is the empty set, one the set of identities.
#[derive(Clone, Debug)]
pub struct LocalBisectionMonoid {
    groupoid: FiniteGroupoid,
    identities: ArrowSet,
    name: String,
}

impl LocalBisectionMonoid {
    pub fn new(groupoid: FiniteGroupoid) -> Result<Self, FiniteError> {
        Self::named(groupoid, "G")
    }

    pub fn named(groupoid: FiniteGroupoid, label: &str) -> Result<Self, FiniteError> {
        if groupoid.arrow_count() > MAX_BISECTION_ARROWS {
            return Err(FiniteError::TooLarge(format!(
                "groupoid has {} arrows, cap is {MAX_BISECTION_ARROWS}",
                groupoid.arrow_count()
            )));
        }
        let identities =
            ArrowSet::from_indices((0..groupoid.object_count()).map(|o| groupoid.identity(o)));
        Ok(Self {
            groupoid,
            identities,
            name: format!("B({label})"),
        })
    }

    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.groupoid
    }

    /// True iff `A⁻¹A` and `AA⁻¹` consist of identities, i.e. no two arrows
    /// of `A` share a source or a target.
    pub fn is_local_bisection(&self, set: ArrowSet) -> bool {
        let mut srcs = 0u64;
        let mut dsts = 0u64;
        for a in set.iter() {
            let arrow = self.groupoid.arrow(a);
            if srcs >> arrow.src & 1 == 1 || dsts >> arrow.dst & 1 == 1 {
                return false;
            }
            srcs |= 1 << arrow.src;
            dsts |= 1 << arrow.dst;
        }
        true
    }

    /// Parses `{a, b}` (arrow ids). Rejects sets that are not local bisections.
    pub fn parse_element(&self, text: &str) -> Result<ArrowSet, FiniteError> {
        let body = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| FiniteError::Parse(format!("expected {{...}}, got `{text}`")))?;
        let mut set = ArrowSet::EMPTY;
        for id in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let a = self
                .groupoid
                .arrow_by_id(id)
                .ok_or_else(|| FiniteError::Parse(format!("unknown arrow `{id}`")))?;
            set = set.union(ArrowSet::singleton(a));
        }
        if !self.is_local_bisection(set) {
            return Err(FiniteError::Parse(format!(
                "`{text}` is not a local bisection"
            )));
        }
        Ok(set)
    }

    pub fn display(&self, set: ArrowSet) -> BisectionDisplay<'_> {
        BisectionDisplay { monoid: self, set }
    }
}

pub struct BisectionDisplay<'a> {
    monoid: &'a LocalBisectionMonoid,
    set: ArrowSet,
}

impl fmt::Display for BisectionDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<&str> = self
            .set
            .iter()
            .map(|a| self.monoid.groupoid.arrow(a).id.as_str())
            .collect();
        write!(f, "{{{}}}", ids.join(", "))
    }
}

impl BooleanInverseMonoid for LocalBisectionMonoid {
    type Element = ArrowSet;

    fn multiply(&self, s: &ArrowSet, t: &ArrowSet) -> ArrowSet {
        let mut out = ArrowSet::EMPTY;
        for a in s.iter() {
            for b in t.iter() {
                if let Some(c) = self.groupoid.compose(a, b) {
                    out = out.union(ArrowSet::singleton(c));
                }
            }
        }
        out
    }

    fn inverse(&self, s: &ArrowSet) -> ArrowSet {
        ArrowSet::from_indices(s.iter().map(|a| self.groupoid.inverse(a)))
    }

    fn zero(&self) -> ArrowSet {
        ArrowSet::EMPTY
    }

    fn one(&self) -> ArrowSet {
        self.identities
    }

    fn is_idempotent(&self, s: &ArrowSet) -> bool {
        s.is_subset(self.identities)
    }

    fn idempotent_complement(&self, e: &ArrowSet) -> ArrowSet {
        self.identities.difference(*e)
    }

    fn raw_meet(&self, s: &ArrowSet, t: &ArrowSet) -> ArrowSet {
        s.intersection(*t)
    }

    fn raw_join(&self, s: &ArrowSet, t: &ArrowSet) -> ArrowSet {
        s.union(*t)
    }

    fn render(&self, s: &ArrowSet) -> String {
        self.display(*s).to_string()
    }
}

impl FiniteMonoid for LocalBisectionMonoid {
    fn elements(&self) -> Vec<ArrowSet> {
        fn extend(
            g: &FiniteGroupoid,
            a: usize,
            srcs: u64,
            dsts: u64,
            current: ArrowSet,
            out: &mut Vec<ArrowSet>,
        ) {
            if a == g.arrow_count() {
                out.push(current);
                return;
            }
            extend(g, a + 1, srcs, dsts, current, out);
            let arrow = g.arrow(a);
            if srcs >> arrow.src & 1 == 0 && dsts >> arrow.dst & 1 == 0 {
                extend(
                    g,
                    a + 1,
                    srcs | 1 << arrow.src,
                    dsts | 1 << arrow.dst,
                    current.union(ArrowSet::singleton(a)),
                    out,
                );
            }
        }
        let mut out = Vec::new();
        extend(&self.groupoid, 0, 0, 0, ArrowSet::EMPTY, &mut out);
        out.sort();
        out
    }

    fn name(&self) -> String {
        self.name.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::MonoidExt;

    #[test]
    fn carrier_sizes() {
        let pair2 = LocalBisectionMonoid::new(FiniteGroupoid::pair(2).unwrap()).unwrap();
        assert_eq!(pair2.elements().len(), 7);
        let discrete = LocalBisectionMonoid::new(FiniteGroupoid::discrete(2).unwrap()).unwrap();
        let els = discrete.elements();
        assert_eq!(els.len(), 4);
        assert!(els.iter().all(|e| discrete.is_idempotent(e)));
        let z2 = LocalBisectionMonoid::new(FiniteGroupoid::cyclic_group(2).unwrap()).unwrap();
        assert_eq!(z2.elements().len(), 3);
        let pair3 = LocalBisectionMonoid::new(FiniteGroupoid::pair(3).unwrap()).unwrap();
        assert_eq!(pair3.elements().len(), 34);
    }

    #[test]
    fn every_enumerated_set_is_a_bisection_and_conversely() {
        let m =
            LocalBisectionMonoid::new(FiniteGroupoid::from_components(&[(2, 1), (1, 2)]).unwrap())
                .unwrap();
        let listed = m.elements();
        let brute: Vec<ArrowSet> = (0u64..1 << m.groupoid().arrow_count())
            .map(ArrowSet)
            .filter(|s| m.is_local_bisection(*s))
            .collect();
        assert_eq!(listed, brute);
    }

    #[test]
    fn too_many_arrows() {
        let g = FiniteGroupoid::from_components(&[(4, 1), (1, 2)]).unwrap();
        assert!(matches!(
            LocalBisectionMonoid::new(g),
            Err(FiniteError::TooLarge(_))
        ));
    }

    #[test]
    fn z2_meet_of_units_is_empty() {
        let z2 = LocalBisectionMonoid::new(FiniteGroupoid::cyclic_group(2).unwrap()).unwrap();
        let g = z2.parse_element("{c0_11_g1}").unwrap();
        assert!(z2.is_unit(&g));
        assert_eq!(z2.meet(&g, &z2.one()), z2.zero());
        assert_eq!(z2.multiply(&g, &g), z2.one());
    }
}
