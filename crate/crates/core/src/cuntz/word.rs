use std::fmt;

/// A finite word over `{0..n-1}`, printed with digits `1..n` (`e` when empty).
///
/// The derived order is lexicographic, with a prefix before its extensions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    /// Parses 1-based digits; `e` or `ε` is the empty word.
    pub fn from_digits(text: &str) -> Option<Self> {
        if text == "e" || text == "ε" {
            return Some(Word::empty());
        }
        if text.is_empty() {
            return None;
        }
        text.chars()
            .map(|c| c.to_digit(10).filter(|&d| d >= 1).map(|d| (d - 1) as u8))
            .collect::<Option<Vec<u8>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn comparable(&self, other: &Word) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }

    /// The suffix `x` with `other = self·x`, if `self` is a prefix of `other`.
    pub fn suffix_after(&self, other: &Word) -> Option<Word> {
        other
            .0
            .strip_prefix(self.0.as_slice())
            .map(|x| Word(x.to_vec()))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn child(&self, letter: u8) -> Word {
        let mut v = self.0.clone();
        v.push(letter);
        Word(v)
    }

    /// Drops the last letter.
    pub fn parent(&self) -> Option<Word> {
        if self.0.is_empty() {
            None
        } else {
            Some(Word(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn truncate(&self, len: usize) -> Word {
        Word(self.0[..len.min(self.0.len())].to_vec())
    }

    pub fn max_letter(&self) -> Option<u8> {
        self.0.iter().copied().max()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for &a in &self.0 {
            write!(f, "{}", a + 1)?;
        }
        Ok(())
    }
}

/// True iff no word of the list is a prefix of another (and none repeats).
pub fn is_prefix_free(words: &[Word]) -> bool {
    let mut sorted: Vec<&Word> = words.iter().collect();
    sorted.sort();
    // in lexicographic order a prefix sits immediately before some extension
    sorted.windows(2).all(|w| !w[0].is_prefix_of(w[1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_digits(s).unwrap()
    }

    #[test]
    fn digits_round_trip() {
        assert_eq!(w("e"), Word::empty());
        assert_eq!(w("12").letters(), &[0, 1]);
        assert_eq!(w("12").to_string(), "12");
        assert_eq!(Word::empty().to_string(), "e");
        assert!(Word::from_digits("10").is_none());
        assert!(Word::from_digits("").is_none());
    }

    #[test]
    fn prefixes() {
        assert!(w("1").is_prefix_of(&w("12")));
        assert!(w("e").is_prefix_of(&w("2")));
        assert!(!w("2").comparable(&w("12")));
        assert_eq!(w("1").suffix_after(&w("121")), Some(w("21")));
        assert_eq!(w("12").parent(), Some(w("1")));
        assert!(is_prefix_free(&[w("11"), w("12"), w("2")]));
        assert!(!is_prefix_free(&[w("1"), w("12")]));
        assert!(!is_prefix_free(&[w("1"), w("2"), w("1")]));
        assert!(!is_prefix_free(&[w("1"), w("21"), w("13")]));
    }
}
