use std::collections::BTreeMap;
use std::fmt;

use crate::cuntz::{CuntzError, EPPoint, PrefixMap, Word};

/// A clopen subset of `{1..n}^ω`, stored as its normalised cylinder list:
/// prefix-free, no complete sibling family, sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Clopen {
    arity: u8,
    words: Vec<Word>,
}

impl Clopen {
    /// The union of the cylinders `[w]`; the words may overlap.
    pub fn from_words(arity: u8, words: Vec<Word>) -> Self {
        Self {
            arity,
            words: normalize_words(arity, words),
        }
    }

    pub fn empty(arity: u8) -> Self {
        Self {
            arity,
            words: Vec::new(),
        }
    }

    pub fn full(arity: u8) -> Self {
        Self {
            arity,
            words: vec![Word::empty()],
        }
    }

    pub fn cylinder(arity: u8, w: Word) -> Self {
        Self::from_words(arity, vec![w])
    }

    /// Reads off the domain of an idempotent prefix map.
    pub fn from_map(map: &PrefixMap) -> Result<Self, CuntzError> {
        if !map.is_idempotent() {
            return Err(CuntzError::NotClopen(map.to_string()));
        }
        Ok(map.domain_clopen())
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn cylinder_count(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.words.len() == 1 && self.words[0].is_empty()
    }

    pub fn to_map(&self) -> PrefixMap {
        PrefixMap::from_normal(
            self.arity,
            self.words.iter().map(|w| (w.clone(), w.clone())).collect(),
        )
    }

    pub fn contains_point(&self, p: &EPPoint) -> bool {
        self.words.iter().any(|w| p.starts_with(w))
    }

    /// The cylinder of this set containing `p`.
    pub fn cylinder_of(&self, p: &EPPoint) -> Option<&Word> {
        self.words.iter().find(|w| p.starts_with(w))
    }

    pub fn union(&self, other: &Clopen) -> Clopen {
        let mut words = self.words.clone();
        words.extend(other.words.iter().cloned());
        Clopen::from_words(self.arity, words)
    }

    pub fn intersection(&self, other: &Clopen) -> Clopen {
        let mut words = Vec::new();
        for u in &self.words {
            for v in &other.words {
                if u.is_prefix_of(v) {
                    words.push(v.clone());
                } else if v.is_prefix_of(u) {
                    words.push(u.clone());
                }
            }
        }
        Clopen::from_words(self.arity, words)
    }

    pub fn complement(&self) -> Clopen {
        let mut out = Vec::new();
        let mut todo = vec![Word::empty()];
        while let Some(u) = todo.pop() {
            if self.words.iter().any(|w| w.is_prefix_of(&u)) {
                continue;
            }
            if !self.words.iter().any(|w| u.is_prefix_of(w)) {
                out.push(u);
                continue;
            }
            todo.extend((0..self.arity).map(|a| u.child(a)));
        }
        Clopen::from_words(self.arity, out)
    }

    pub fn difference(&self, other: &Clopen) -> Clopen {
        self.intersection(&other.complement())
    }

    pub fn is_subset(&self, other: &Clopen) -> bool {
        self.intersection(other) == *self
    }

    pub fn is_disjoint(&self, other: &Clopen) -> bool {
        self.intersection(other).is_empty()
    }
}

impl fmt::Display for Clopen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.words.iter().map(Word::to_string).collect();
        write!(f, "[{}]", words.join(","))
    }
}

fn normalize_words(arity: u8, mut words: Vec<Word>) -> Vec<Word> {
    words.sort();
    let mut kept: Vec<Word> = Vec::with_capacity(words.len());
    for w in words {
        if kept.last().is_none_or(|k| !k.is_prefix_of(&w)) {
            kept.push(w);
        }
    }
    loop {
        let mut families: BTreeMap<Word, usize> = BTreeMap::new();
        for w in &kept {
            if let Some(p) = w.parent() {
                *families.entry(p).or_default() += 1;
            }
        }
        let complete: Vec<Word> = families
            .into_iter()
            .filter(|(_, c)| *c == arity as usize)
            .map(|(p, _)| p)
            .collect();
        if complete.is_empty() {
            break;
        }
        kept.retain(|w| {
            w.parent()
                .is_none_or(|p| complete.binary_search(&p).is_err())
        });
        kept.extend(complete);
        kept.sort();
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: u8, words: &[&str]) -> Clopen {
        Clopen::from_words(
            n,
            words
                .iter()
                .map(|s| Word::from_digits(s).unwrap())
                .collect(),
        )
    }

    #[test]
    fn normal_form_merges_and_absorbs() {
        assert_eq!(c(2, &["11", "12"]), c(2, &["1"]));
        assert_eq!(c(2, &["1", "12", "2"]), Clopen::full(2));
        assert_eq!(c(3, &["1", "2"]).cylinder_count(), 2);
        assert_eq!(c(3, &["1", "2", "3"]), Clopen::full(3));
        assert_eq!(c(2, &["11", "12", "21"]).to_string(), "[1,21]");
    }

    #[test]
    fn boolean_operations() {
        let a = c(2, &["1"]);
        assert_eq!(a.complement(), c(2, &["2"]));
        assert_eq!(c(2, &["11"]).complement(), c(2, &["12", "2"]));
        assert_eq!(Clopen::full(2).complement(), Clopen::empty(2));
        assert_eq!(Clopen::empty(3).complement(), Clopen::full(3));
        assert_eq!(c(3, &["1"]).complement().cylinder_count(), 2);
        assert_eq!(c(3, &["12"]).complement().cylinder_count(), 4);
        assert_eq!(a.intersection(&c(2, &["12", "2"])), c(2, &["12"]));
        assert!(c(2, &["12"]).is_subset(&a));
        assert!(a.is_disjoint(&c(2, &["21"])));
        assert_eq!(c(2, &["1"]).difference(&c(2, &["11"])), c(2, &["12"]));
    }
}
