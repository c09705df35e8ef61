use std::fmt;

use crate::finite::FiniteError;
use crate::monoid::{BooleanInverseMonoid, FiniteMonoid};

/// Largest `n` for which `I_n` is enumerated.
pub const MAX_SYMMETRIC_DEGREE: usize = 6;

/// A partial bijection of `{1..n}`, stored as the image of each point.
///
/// Points are 0-based internally and printed 1-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PartialBijection {
    images: Vec<Option<u8>>,
}

impl PartialBijection {
    pub fn empty(n: usize) -> Self {
        Self {
            images: vec![None; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).map(|i| Some(i as u8)).collect(),
        }
    }

    /// Builds from 0-based `(source, target)` pairs. Fails if the pairs are
    /// not a partial injection of `{0..n-1}`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, FiniteError> {
        let mut images = vec![None; n];
        let mut hit = vec![false; n];
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(FiniteError::Parse(format!(
                    "point out of range in pair {}->{} for n = {n}",
                    i + 1,
                    j + 1
                )));
            }
            if images[i].is_some() {
                return Err(FiniteError::Parse(format!(
                    "point {} has two images",
                    i + 1
                )));
            }
            if hit[j] {
                return Err(FiniteError::Parse(format!(
                    "point {} has two preimages",
                    j + 1
                )));
            }
            images[i] = Some(j as u8);
            hit[j] = true;
        }
        Ok(Self { images })
    }

    /// Parses `{1->2, 2->1}` (1-based). `{}` is the empty map.
    pub fn parse(n: usize, text: &str) -> Result<Self, FiniteError> {
        let body = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| FiniteError::Parse(format!("expected {{...}}, got `{text}`")))?;
        let mut pairs = Vec::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, b) = item
                .split_once("->")
                .ok_or_else(|| FiniteError::Parse(format!("expected `i->j`, got `{item}`")))?;
            let parse_point = |s: &str| -> Result<usize, FiniteError> {
                let v: usize = s
                    .trim()
                    .parse()
                    .map_err(|_| FiniteError::Parse(format!("bad point `{s}`")))?;
                if v == 0 {
                    return Err(FiniteError::Parse("points are numbered from 1".into()));
                }
                Ok(v - 1)
            };
            pairs.push((parse_point(a)?, parse_point(b)?));
        }
        Self::from_pairs(n, &pairs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> Option<usize> {
        self.images[i].map(usize::from)
    }

    /// 0-based graph, sorted by source.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.images
            .iter()
            .enumerate()
            .filter_map(|(i, j)| j.map(|j| (i, usize::from(j))))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.images.iter().filter(|j| j.is_some()).count()
    }

    /// `self·other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: other
                .images
                .iter()
                .map(|j| j.and_then(|j| self.images[usize::from(j)]))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![None; self.degree()];
        for (i, j) in self.pairs() {
            images[j] = Some(i as u8);
        }
        Self { images }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            images: self
                .images
                .iter()
                .zip(&other.images)
                .map(|(a, b)| if a == b { *a } else { None })
                .collect(),
        }
    }

    /// Graph union; only meaningful when the union is again injective.
    pub fn union(&self, other: &Self) -> Self {
        Self {
            images: self
                .images
                .iter()
                .zip(&other.images)
                .map(|(a, b)| a.or(*b))
                .collect(),
        }
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(i, j)| format!("{}->{}", i + 1, j + 1))
            .collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// The symmetric inverse monoid `I_n` of all partial bijections of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricInverseMonoid {
    n: usize,
}

impl SymmetricInverseMonoid {
    pub fn new(n: usize) -> Result<Self, FiniteError> {
        if n == 0 {
            return Err(FiniteError::InvalidSize("I_n needs n >= 1".into()));
        }
        if n > MAX_SYMMETRIC_DEGREE {
            return Err(FiniteError::TooLarge(format!(
                "I_{n} exceeds the enumeration cap n <= {MAX_SYMMETRIC_DEGREE}"
            )));
        }
        Ok(Self { n })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn parse_element(&self, text: &str) -> Result<PartialBijection, FiniteError> {
        PartialBijection::parse(self.n, text)
    }
}

impl BooleanInverseMonoid for SymmetricInverseMonoid {
    type Element = PartialBijection;

    fn multiply(&self, s: &PartialBijection, t: &PartialBijection) -> PartialBijection {
        s.compose(t)
    }

    fn inverse(&self, s: &PartialBijection) -> PartialBijection {
        s.inverse()
    }

    fn zero(&self) -> PartialBijection {
        PartialBijection::empty(self.n)
    }

    fn one(&self) -> PartialBijection {
        PartialBijection::identity(self.n)
    }

    fn is_idempotent(&self, s: &PartialBijection) -> bool {
        s.pairs().into_iter().all(|(i, j)| i == j)
    }

    fn idempotent_complement(&self, e: &PartialBijection) -> PartialBijection {
        PartialBijection {
            images: e
                .images
                .iter()
                .enumerate()
                .map(|(i, j)| if j.is_some() { None } else { Some(i as u8) })
                .collect(),
        }
    }

    fn raw_meet(&self, s: &PartialBijection, t: &PartialBijection) -> PartialBijection {
        s.intersection(t)
    }

    fn raw_join(&self, s: &PartialBijection, t: &PartialBijection) -> PartialBijection {
        s.union(t)
    }

    fn render(&self, s: &PartialBijection) -> String {
        s.to_string()
    }
}

impl FiniteMonoid for SymmetricInverseMonoid {
    fn elements(&self) -> Vec<PartialBijection> {
        fn extend(
            n: usize,
            i: usize,
            used: &mut Vec<bool>,
            current: &mut Vec<Option<u8>>,
            out: &mut Vec<PartialBijection>,
        ) {
            if i == n {
                out.push(PartialBijection {
                    images: current.clone(),
                });
                return;
            }
            current.push(None);
            extend(n, i + 1, used, current, out);
            current.pop();
            for j in 0..n {
                if !used[j] {
                    used[j] = true;
                    current.push(Some(j as u8));
                    extend(n, i + 1, used, current, out);
                    current.pop();
                    used[j] = false;
                }
            }
        }
        let mut out = Vec::new();
        extend(
            self.n,
            0,
            &mut vec![false; self.n],
            &mut Vec::new(),
            &mut out,
        );
        out.sort();
        out
    }

    fn name(&self) -> String {
        format!("I{}", self.n)
    }
}
