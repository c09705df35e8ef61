use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::cuntz::word::is_prefix_free;
use crate::cuntz::{Clopen, CuntzError, EPPoint, Word};

/// An element of `C_n`: the partial homeomorphism `d_i·w ↦ r_i·w` given by a
/// finite table of word pairs.
///
/// Always held in normal form: domains and ranges prefix-free, no complete
/// sibling family `(d·a, r·a)` for all letters `a`, pairs sorted by domain.
/// Two tables denote the same map iff their normal forms are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PrefixMap {
    arity: u8,
    pairs: Vec<(Word, Word)>,
}

impl PrefixMap {
    /// Validates letters and prefix-freeness, then normalises.
    pub fn new(arity: u8, pairs: Vec<(Word, Word)>) -> Result<Self, CuntzError> {
        for (d, r) in &pairs {
            for w in [d, r] {
                if w.max_letter().is_some_and(|m| m >= arity) {
                    return Err(CuntzError::NotPrefixFree(format!(
                        "word {w} uses a letter outside 1..{arity}"
                    )));
                }
            }
        }
        let domains: Vec<Word> = pairs.iter().map(|p| p.0.clone()).collect();
        if !is_prefix_free(&domains) {
            return Err(CuntzError::NotPrefixFree(
                "domain words are not prefix-free".into(),
            ));
        }
        let ranges: Vec<Word> = pairs.iter().map(|p| p.1.clone()).collect();
        if !is_prefix_free(&ranges) {
            return Err(CuntzError::NotPrefixFree(
                "range words are not prefix-free".into(),
            ));
        }
        Ok(Self::from_normal(arity, pairs))
    }

    /// Normalises a table already known to be valid.
    pub(crate) fn from_normal(arity: u8, pairs: Vec<(Word, Word)>) -> Self {
        Self {
            arity,
            pairs: normalize_pairs(arity, pairs),
        }
    }

    pub fn zero(arity: u8) -> Self {
        Self {
            arity,
            pairs: Vec::new(),
        }
    }

    pub fn identity(arity: u8) -> Self {
        Self {
            arity,
            pairs: vec![(Word::empty(), Word::empty())],
        }
    }

    /// The single-pair map `{d -> r}`.
    pub fn single(arity: u8, d: Word, r: Word) -> Self {
        Self::from_normal(arity, vec![(d, r)])
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn pairs(&self) -> &[(Word, Word)] {
        &self.pairs
    }

    pub fn is_zero(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_idempotent(&self) -> bool {
        self.pairs.iter().all(|(d, r)| d == r)
    }

    pub fn max_word_len(&self) -> usize {
        self.pairs
            .iter()
            .map(|(d, r)| d.len().max(r.len()))
            .max()
            .unwrap_or(0)
    }

    pub fn domain_clopen(&self) -> Clopen {
        Clopen::from_words(self.arity, self.pairs.iter().map(|p| p.0.clone()).collect())
    }

    pub fn range_clopen(&self) -> Clopen {
        Clopen::from_words(self.arity, self.pairs.iter().map(|p| p.1.clone()).collect())
    }

    /// `self·other`: apply `other`, then `self`.
    pub fn compose(&self, other: &PrefixMap) -> PrefixMap {
        let mut out = Vec::new();
        for (d, r) in &other.pairs {
            for (d2, r2) in &self.pairs {
                if let Some(x) = r.suffix_after(d2) {
                    out.push((d.concat(&x), r2.clone()));
                } else if let Some(x) = d2.suffix_after(r) {
                    out.push((d.clone(), r2.concat(&x)));
                }
            }
        }
        Self::from_normal(self.arity, out)
    }

    pub fn inverse(&self) -> PrefixMap {
        Self::from_normal(
            self.arity,
            self.pairs
                .iter()
                .map(|(d, r)| (r.clone(), d.clone()))
                .collect(),
        )
    }

    /// Largest map below both: the cylinders on which the two agree.
    pub fn meet(&self, other: &PrefixMap) -> PrefixMap {
        let mut out = Vec::new();
        for (d, r) in &self.pairs {
            for (d2, r2) in &other.pairs {
                if let Some(x) = d.suffix_after(d2) {
                    if *r2 == r.concat(&x) {
                        out.push((d2.clone(), r2.clone()));
                    }
                } else if let Some(x) = d2.suffix_after(d) {
                    if *r == r2.concat(&x) {
                        out.push((d.clone(), r.clone()));
                    }
                }
            }
        }
        Self::from_normal(self.arity, out)
    }

    /// Union of the graphs. Only meaningful for compatible maps.
    pub fn union_unchecked(&self, other: &PrefixMap) -> PrefixMap {
        let mut all: Vec<(Word, Word)> = self.pairs.iter().chain(&other.pairs).cloned().collect();
        all.sort();
        let mut kept: Vec<(Word, Word)> = Vec::with_capacity(all.len());
        for (d, r) in all {
            if kept.last().is_none_or(|(k, _)| !k.is_prefix_of(&d)) {
                kept.push((d, r));
            }
        }
        Self::from_normal(self.arity, kept)
    }

    /// Restriction to a clopen of the domain: `self·e`.
    pub fn restrict(&self, e: &Clopen) -> PrefixMap {
        self.compose(&e.to_map())
    }

    /// The pair whose domain cylinder contains `p`.
    pub fn pair_at(&self, p: &EPPoint) -> Option<&(Word, Word)> {
        self.pairs.iter().find(|(d, _)| p.starts_with(d))
    }

    pub fn apply(&self, p: &EPPoint) -> Result<EPPoint, CuntzError> {
        let (d, r) = self
            .pair_at(p)
            .ok_or_else(|| CuntzError::PointOutsideDomain {
                point: p.to_string(),
                map: self.to_string(),
            })?;
        Ok(p.drop_prefix(d.len()).prepend(r))
    }

    /// Splits every pair into its `n` children, `depth` times.
    pub fn refined(&self, depth: usize) -> Vec<(Word, Word)> {
        let mut pairs = self.pairs.clone();
        for _ in 0..depth {
            pairs = pairs
                .iter()
                .flat_map(|(d, r)| (0..self.arity).map(move |a| (d.child(a), r.child(a))))
                .collect();
        }
        pairs
    }
}

impl fmt::Display for PrefixMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .pairs
            .iter()
            .map(|(d, r)| format!("{d}->{r}"))
            .collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

fn normalize_pairs(arity: u8, mut pairs: Vec<(Word, Word)>) -> Vec<(Word, Word)> {
    let family = |(d, r): &(Word, Word)| -> Option<(Word, Word)> {
        match (d.last(), r.last()) {
            (Some(a), Some(b)) if a == b => Some((d.parent()?, r.parent()?)),
            _ => None,
        }
    };
    loop {
        let mut sizes: BTreeMap<(Word, Word), usize> = BTreeMap::new();
        for p in &pairs {
            if let Some(key) = family(p) {
                *sizes.entry(key).or_default() += 1;
            }
        }
        let complete: BTreeSet<(Word, Word)> = sizes
            .into_iter()
            .filter(|(_, c)| *c == arity as usize)
            .map(|(k, _)| k)
            .collect();
        if complete.is_empty() {
            break;
        }
        pairs.retain(|p| family(p).is_none_or(|k| !complete.contains(&k)));
        pairs.extend(complete);
    }
    pairs.sort();
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_digits(s).unwrap()
    }

    fn m(n: u8, pairs: &[(&str, &str)]) -> PrefixMap {
        PrefixMap::new(n, pairs.iter().map(|(d, r)| (w(d), w(r))).collect()).unwrap()
    }

    #[test]
    fn sibling_merge() {
        assert_eq!(m(2, &[("1", "21"), ("2", "22")]), m(2, &[("e", "2")]));
        assert_eq!(m(2, &[("11", "11"), ("12", "12")]), m(2, &[("1", "1")]));
        assert_eq!(m(2, &[("1", "1"), ("2", "2")]), PrefixMap::identity(2));
        assert_eq!(m(2, &[("1", "2"), ("2", "1")]).pairs().len(), 2);
        assert_eq!(m(3, &[("1", "21"), ("2", "22")]).pairs().len(), 2);
    }

    #[test]
    fn rejects_overlapping_words() {
        assert!(PrefixMap::new(2, vec![(w("1"), w("1")), (w("1"), w("2"))]).is_err());
        assert!(PrefixMap::new(2, vec![(w("1"), w("1")), (w("2"), w("11"))]).is_err());
        assert!(PrefixMap::new(2, vec![(w("3"), w("1"))]).is_err());
    }

    #[test]
    fn composition() {
        assert_eq!(
            m(2, &[("2", "1")]).compose(&m(2, &[("1", "2")])),
            m(2, &[("1", "1")])
        );
        assert!(m(2, &[("1", "2")]).compose(&m(2, &[("1", "2")])).is_zero());
        let s = m(2, &[("1", "2")]);
        let d = m(2, &[("11", "11")]);
        assert_eq!(s.compose(&d), m(2, &[("11", "21")]));
        assert_eq!(
            m(2, &[("e", "1")]).compose(&m(2, &[("e", "1")])),
            m(2, &[("e", "11")])
        );
        assert_eq!(m(2, &[("11", "2")]).inverse(), m(2, &[("2", "11")]));
    }

    #[test]
    fn meets_and_unions() {
        let swap = m(2, &[("1", "2"), ("2", "1")]);
        assert_eq!(swap.meet(&m(2, &[("12", "22")])), m(2, &[("12", "22")]));
        assert!(swap.meet(&PrefixMap::identity(2)).is_zero());
        assert!(m(2, &[("1", "11")]).meet(&PrefixMap::identity(2)).is_zero());
        assert_eq!(
            m(2, &[("11", "11")]).union_unchecked(&m(2, &[("12", "12")])),
            m(2, &[("1", "1")])
        );
        assert_eq!(swap.union_unchecked(&m(2, &[("11", "21")])), swap);
    }

    #[test]
    fn points() {
        let p = |s: &str| EPPoint::parse(2, s).unwrap();
        assert_eq!(m(2, &[("1", "2")]).apply(&p("1|1")).unwrap(), p("2|1"));
        assert_eq!(m(2, &[("1", "11")]).apply(&p("|1")).unwrap(), p("|1"));
        assert!(matches!(
            m(2, &[("1", "2")]).apply(&p("|2")),
            Err(CuntzError::PointOutsideDomain { .. })
        ));
    }
}
