use std::fmt;

use crate::cuntz::{CuntzError, Word};

/// An eventually periodic point `u·v·v·v···` of Cantor space.
///
/// Stored canonically: the period is primitive and the preperiod minimal,
/// so two points are equal iff their representations are.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EPPoint {
    preperiod: Word,
    period: Word,
}

impl EPPoint {
    pub fn new(preperiod: Word, period: Word) -> Result<Self, CuntzError> {
        if period.is_empty() {
            return Err(CuntzError::Parse {
                position: 0,
                message: "the period of a point must be non-empty".into(),
            });
        }
        Ok(Self::canonical(
            preperiod.letters().to_vec(),
            period.letters().to_vec(),
        ))
    }

    fn canonical(mut pre: Vec<u8>, period: Vec<u8>) -> Self {
        let len = period.len();
        let root = (1..=len)
            .find(|&p| len.is_multiple_of(p) && (0..len).all(|i| period[i] == period[i % p]))
            .unwrap_or(len);
        let mut period: Vec<u8> = period[..root].to_vec();
        while let (Some(&a), Some(&b)) = (pre.last(), period.last()) {
            if a != b {
                break;
            }
            pre.pop();
            period.rotate_right(1);
        }
        Self {
            preperiod: Word::from_letters(pre),
            period: Word::from_letters(period),
        }
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    pub fn letter(&self, i: usize) -> u8 {
        let u = self.preperiod.letters();
        if i < u.len() {
            u[i]
        } else {
            let v = self.period.letters();
            v[(i - u.len()) % v.len()]
        }
    }

    /// First `k` letters.
    pub fn prefix(&self, k: usize) -> Word {
        Word::from_letters((0..k).map(|i| self.letter(i)).collect())
    }

    pub fn starts_with(&self, w: &Word) -> bool {
        w.letters()
            .iter()
            .enumerate()
            .all(|(i, &a)| self.letter(i) == a)
    }

    /// The point with its first `k` letters removed.
    pub fn drop_prefix(&self, k: usize) -> EPPoint {
        let u = self.preperiod.letters();
        let v = self.period.letters();
        if k <= u.len() {
            Self::canonical(u[k..].to_vec(), v.to_vec())
        } else {
            let mut rotated = v.to_vec();
            rotated.rotate_left((k - u.len()) % v.len());
            Self::canonical(Vec::new(), rotated)
        }
    }

    pub fn prepend(&self, w: &Word) -> EPPoint {
        let mut pre = w.letters().to_vec();
        pre.extend_from_slice(self.preperiod.letters());
        Self::canonical(pre, self.period.letters().to_vec())
    }

    /// Index of the first letter where the two points differ.
    pub fn first_difference(&self, other: &EPPoint) -> Option<usize> {
        let horizon = self.preperiod.len().max(other.preperiod.len())
            + self.period.len() * other.period.len();
        (0..horizon).find(|&i| self.letter(i) != other.letter(i))
    }

    /// Parses `u|v` (digits `1..n`, `e` or nothing for an empty preperiod).
    pub fn parse(arity: u8, text: &str) -> Result<Self, CuntzError> {
        let text = text.trim();
        let (u, v) = text.split_once('|').ok_or_else(|| CuntzError::Parse {
            position: 0,
            message: format!("expected `u|v`, got `{text}`"),
        })?;
        let word = |s: &str, offset: usize| -> Result<Word, CuntzError> {
            let s = s.trim();
            let w = if s.is_empty() {
                Some(Word::empty())
            } else {
                Word::from_digits(s)
            };
            match w {
                Some(w) if w.max_letter().is_none_or(|m| m < arity) => Ok(w),
                _ => Err(CuntzError::Parse {
                    position: offset,
                    message: format!("`{s}` is not a word over 1..{arity}"),
                }),
            }
        };
        let u = word(u, 0)?;
        let v = word(v, text.find('|').map_or(0, |i| i + 1))?;
        Self::new(u, v)
    }
}

impl fmt::Display for EPPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.preperiod, self.period)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> EPPoint {
        EPPoint::parse(3, s).unwrap()
    }

    #[test]
    fn canonical_forms_coincide() {
        assert_eq!(p("1|1"), p("e|1"));
        assert_eq!(p("|11"), p("e|1"));
        assert_eq!(p("12|12"), p("|12"));
        assert_eq!(p("2|12"), p("|21"));
        assert_ne!(p("|12"), p("|21"));
        assert_eq!(p("1|2").to_string(), "1|2");
        assert_eq!(p("111|1").to_string(), "e|1");
        assert!(EPPoint::parse(2, "1|").is_err());
        assert!(EPPoint::parse(2, "3|1").is_err());
    }

    #[test]
    fn letters_and_shifts() {
        let x = p("12|3");
        assert_eq!(x.prefix(5).to_string(), "12333");
        assert_eq!(x.drop_prefix(1), p("2|3"));
        assert_eq!(x.drop_prefix(4), p("|3"));
        assert_eq!(p("|12").drop_prefix(3), p("|21"));
        assert_eq!(p("|1").prepend(&Word::from_digits("2").unwrap()), p("2|1"));
        assert!(x.starts_with(&Word::from_digits("123").unwrap()));
        assert!(!x.starts_with(&Word::from_digits("13").unwrap()));
    }
}
