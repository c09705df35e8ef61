use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::finite::FiniteError;

/// An arrow of a finite groupoid. `src` and `dst` index into the object list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub dst: usize,
}

/// A validated finite discrete groupoid.
///
/// Objects and arrows are kept sorted by id, so indices are canonical.
/// `a∘b` is defined iff `dst(b) = src(a)` and means "`b` first".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    compose: Vec<Option<usize>>,
    inverse: Vec<usize>,
    identity: Vec<usize>,
}

/// On-disk form of a groupoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidFile {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
    #[serde(default)]
    pub inverse: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<Vec<[String; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowEntry {
    pub id: String,
    pub src: String,
    pub dst: String,
}

fn invalid(msg: impl Into<String>) -> FiniteError {
    FiniteError::InvalidGroupoid(msg.into())
}

impl FiniteGroupoid {
    /// Validates a groupoid description.
    ///
    /// Identities may be listed (`[object, arrow]`) or are inferred as the
    /// loops `i` with `i∘i = i`. Compositions involving an identity and
    /// inverse entries given in one direction only are filled in. Every
    /// groupoid law is then checked over all composable pairs and triples.
    pub fn from_file(file: &GroupoidFile) -> Result<Self, FiniteError> {
        let objects: Vec<String> = {
            let set: BTreeSet<&String> = file.objects.iter().collect();
            if set.len() != file.objects.len() {
                return Err(invalid("duplicate object id"));
            }
            set.into_iter().cloned().collect()
        };
        let obj_index: BTreeMap<&str, usize> = objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.as_str(), i))
            .collect();
        let mut entries = file.arrows.clone();
        entries.sort_by(|a, b| a.id.cmp(&b.id));
        for w in entries.windows(2) {
            if w[0].id == w[1].id {
                return Err(invalid(format!("duplicate arrow id `{}`", w[0].id)));
            }
        }
        let mut arrows = Vec::with_capacity(entries.len());
        for e in &entries {
            let src = *obj_index
                .get(e.src.as_str())
                .ok_or_else(|| invalid(format!("arrow `{}` has unknown src `{}`", e.id, e.src)))?;
            let dst = *obj_index
                .get(e.dst.as_str())
                .ok_or_else(|| invalid(format!("arrow `{}` has unknown dst `{}`", e.id, e.dst)))?;
            arrows.push(Arrow {
                id: e.id.clone(),
                src,
                dst,
            });
        }
        let arrow_index: BTreeMap<&str, usize> = arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.id.as_str(), i))
            .collect();
        let lookup = |id: &str| -> Result<usize, FiniteError> {
            arrow_index
                .get(id)
                .copied()
                .ok_or_else(|| invalid(format!("unknown arrow `{id}`")))
        };
        let m = arrows.len();
        let mut compose: Vec<Option<usize>> = vec![None; m * m];
        for [a, b, c] in &file.compose {
            let (a, b, c) = (lookup(a)?, lookup(b)?, lookup(c)?);
            if let Some(prev) = compose[a * m + b] {
                if prev != c {
                    return Err(invalid(format!(
                        "conflicting compositions for {}∘{}",
                        arrows[a].id, arrows[b].id
                    )));
                }
            }
            compose[a * m + b] = Some(c);
        }

        let identity: Vec<usize> = match &file.identities {
            Some(list) => {
                let mut ids = vec![None; objects.len()];
                for [o, a] in list {
                    let o = *obj_index
                        .get(o.as_str())
                        .ok_or_else(|| invalid(format!("unknown object `{o}` in identities")))?;
                    ids[o] = Some(lookup(a)?);
                }
                ids.into_iter()
                    .enumerate()
                    .map(|(o, i)| {
                        i.ok_or_else(|| invalid(format!("no identity for `{}`", objects[o])))
                    })
                    .collect::<Result<_, _>>()?
            }
            None => {
                let mut ids = Vec::with_capacity(objects.len());
                for o in 0..objects.len() {
                    let loops: Vec<usize> = (0..m)
                        .filter(|&a| arrows[a].src == o && arrows[a].dst == o)
                        .collect();
                    let explicit: Vec<usize> = loops
                        .iter()
                        .copied()
                        .filter(|&a| compose[a * m + a] == Some(a))
                        .collect();
                    let chosen = match explicit.as_slice() {
                        [one] => *one,
                        [] if loops.len() == 1 => loops[0],
                        _ => {
                            return Err(invalid(format!(
                                "cannot infer identity for object `{}`",
                                objects[o]
                            )))
                        }
                    };
                    ids.push(chosen);
                }
                ids
            }
        };
        for (o, &i) in identity.iter().enumerate() {
            if arrows[i].src != o || arrows[i].dst != o {
                return Err(invalid(format!(
                    "identity `{}` is not a loop at `{}`",
                    arrows[i].id, objects[o]
                )));
            }
        }
        // fill identity compositions
        for a in 0..m {
            let (s, d) = (arrows[a].src, arrows[a].dst);
            for (slot, val) in [(identity[d] * m + a, a), (a * m + identity[s], a)] {
                match compose[slot] {
                    None => compose[slot] = Some(val),
                    Some(v) if v == val => {}
                    Some(_) => {
                        return Err(invalid(format!("identity law fails at `{}`", arrows[a].id)))
                    }
                }
            }
        }

        let mut inverse: Vec<Option<usize>> = vec![None; m];
        for &i in &identity {
            inverse[i] = Some(i);
        }
        for [a, b] in &file.inverse {
            let (a, b) = (lookup(a)?, lookup(b)?);
            for (x, y) in [(a, b), (b, a)] {
                match inverse[x] {
                    None => inverse[x] = Some(y),
                    Some(v) if v == y => {}
                    Some(_) => {
                        return Err(invalid(format!(
                            "conflicting inverses for `{}`",
                            arrows[x].id
                        )))
                    }
                }
            }
        }
        let inverse: Vec<usize> = inverse
            .into_iter()
            .enumerate()
            .map(|(a, i)| i.ok_or_else(|| invalid(format!("no inverse for `{}`", arrows[a].id))))
            .collect::<Result<_, _>>()?;

        let g = Self {
            objects,
            arrows,
            compose,
            inverse,
            identity,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn from_json(text: &str) -> Result<Self, FiniteError> {
        let file: GroupoidFile =
            serde_json::from_str(text).map_err(|e| FiniteError::Json(e.to_string()))?;
        Self::from_file(&file)
    }

    fn validate(&self) -> Result<(), FiniteError> {
        let m = self.arrows.len();
        for a in 0..m {
            for b in 0..m {
                let composable = self.arrows[b].dst == self.arrows[a].src;
                match (composable, self.compose[a * m + b]) {
                    (true, None) => {
                        return Err(invalid(format!(
                            "missing composition {}∘{}",
                            self.arrows[a].id, self.arrows[b].id
                        )))
                    }
                    (false, Some(_)) => {
                        return Err(invalid(format!(
                            "composition {}∘{} given for non-composable arrows",
                            self.arrows[a].id, self.arrows[b].id
                        )))
                    }
                    (true, Some(c)) => {
                        if self.arrows[c].src != self.arrows[b].src
                            || self.arrows[c].dst != self.arrows[a].dst
                        {
                            return Err(invalid(format!(
                                "{}∘{} = {} has wrong endpoints",
                                self.arrows[a].id, self.arrows[b].id, self.arrows[c].id
                            )));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                let Some(ab) = self.compose(a, b) else {
                    continue;
                };
                for c in 0..m {
                    let Some(bc) = self.compose(b, c) else {
                        continue;
                    };
                    if self.compose(ab, c) != self.compose(a, bc) {
                        return Err(invalid(format!(
                            "associativity fails for ({}, {}, {})",
                            self.arrows[a].id, self.arrows[b].id, self.arrows[c].id
                        )));
                    }
                }
            }
        }
        for a in 0..m {
            let inv = self.inverse[a];
            if self.compose(inv, a) != Some(self.identity[self.arrows[a].src])
                || self.compose(a, inv) != Some(self.identity[self.arrows[a].dst])
            {
                return Err(invalid(format!(
                    "inverse law fails at `{}`",
                    self.arrows[a].id
                )));
            }
        }
        Ok(())
    }

    pub fn to_file(&self) -> GroupoidFile {
        let m = self.arrows.len();
        let mut compose = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if let Some(c) = self.compose[a * m + b] {
                    compose.push([
                        self.arrows[a].id.clone(),
                        self.arrows[b].id.clone(),
                        self.arrows[c].id.clone(),
                    ]);
                }
            }
        }
        compose.sort();
        let mut inverse: Vec<[String; 2]> = (0..m)
            .map(|a| {
                [
                    self.arrows[a].id.clone(),
                    self.arrows[self.inverse[a]].id.clone(),
                ]
            })
            .collect();
        inverse.sort();
        GroupoidFile {
            objects: self.objects.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowEntry {
                    id: a.id.clone(),
                    src: self.objects[a.src].clone(),
                    dst: self.objects[a.dst].clone(),
                })
                .collect(),
            compose,
            inverse,
            identities: Some(
                self.identity
                    .iter()
                    .enumerate()
                    .map(|(o, &i)| [self.objects[o].clone(), self.arrows[i].id.clone()])
                    .collect(),
            ),
        }
    }

    /// Canonical JSON: everything sorted lexicographically by id.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("groupoid serialises")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_by_id(&self, id: &str) -> Option<usize> {
        self.arrows.binary_search_by(|a| a.id.as_str().cmp(id)).ok()
    }

    /// `a∘b`, if `dst(b) = src(a)`.
    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        self.compose[a * self.arrows.len() + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identity[object]
    }

    pub fn is_identity(&self, a: usize) -> bool {
        self.identity[self.arrows[a].src] == a
    }

    /// Builds from pre-indexed parts; objects and arrows are re-sorted by id.
    /// `compose(a, b)` is queried for every composable pair.
    pub fn from_parts<F>(
        objects: Vec<String>,
        arrows: Vec<(String, usize, usize)>,
        compose: F,
        inverse: Vec<usize>,
    ) -> Result<Self, FiniteError>
    where
        F: Fn(usize, usize) -> usize,
    {
        let m = arrows.len();
        let mut compose_entries = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if arrows[b].2 == arrows[a].1 {
                    let c = compose(a, b);
                    compose_entries.push([
                        arrows[a].0.clone(),
                        arrows[b].0.clone(),
                        arrows[c].0.clone(),
                    ]);
                }
            }
        }
        let file = GroupoidFile {
            arrows: arrows
                .iter()
                .map(|(id, s, d)| ArrowEntry {
                    id: id.clone(),
                    src: objects[*s].clone(),
                    dst: objects[*d].clone(),
                })
                .collect(),
            objects,
            compose: compose_entries,
            inverse: (0..m)
                .map(|a| [arrows[a].0.clone(), arrows[inverse[a]].0.clone()])
                .collect(),
            identities: None,
        };
        Self::from_file(&file)
    }

    /// Disjoint union of transitive components, each the product of the
    /// pair groupoid on `objects` points with the cyclic group of `order`.
    pub fn from_components(components: &[(usize, usize)]) -> Result<Self, FiniteError> {
        let mut objects = Vec::new();
        // (component, dst point, src point, group element)
        let mut arrows: Vec<(String, usize, usize)> = Vec::new();
        let mut data: Vec<(usize, usize, usize, usize)> = Vec::new();
        let mut offsets = Vec::new();
        for (c, &(k, order)) in components.iter().enumerate() {
            if k == 0 || order == 0 {
                return Err(invalid(
                    "components need at least one object and a non-trivial group order",
                ));
            }
            offsets.push(objects.len());
            for i in 0..k {
                if components.len() == 1 {
                    objects.push(format!("{}", i + 1));
                } else {
                    objects.push(format!("c{c}x{i}"));
                }
            }
            for i in 0..k {
                for j in 0..k {
                    for g in 0..order {
                        let id = if components.len() == 1 && order == 1 {
                            format!("{}{}", j + 1, i + 1)
                        } else {
                            format!("c{c}_{}{}_g{g}", j + 1, i + 1)
                        };
                        arrows.push((id, offsets[c] + j, offsets[c] + i));
                        data.push((c, i, j, g));
                    }
                }
            }
        }
        let index: BTreeMap<(usize, usize, usize, usize), usize> =
            data.iter().enumerate().map(|(a, &key)| (key, a)).collect();
        let inverse = data
            .iter()
            .map(|&(c, i, j, g)| {
                let order = components[c].1;
                index[&(c, j, i, (order - g) % order)]
            })
            .collect();
        Self::from_parts(
            objects,
            arrows,
            |a, b| {
                // a: j -> i with g, b: l -> j with h; a∘b: l -> i with g + h
                let (c, i, _, g) = data[a];
                let (_, _, l, h) = data[b];
                index[&(c, i, l, (g + h) % components[c].1)]
            },
            inverse,
        )
    }

    /// The pair groupoid on `k` objects; arrow `ij` goes from `i` to `j`.
    pub fn pair(k: usize) -> Result<Self, FiniteError> {
        Self::from_components(&[(k, 1)])
    }

    /// `Z/m` as a one-object groupoid.
    pub fn cyclic_group(m: usize) -> Result<Self, FiniteError> {
        Self::from_components(&[(1, m)])
    }

    /// `k` objects and identity arrows only.
    pub fn discrete(k: usize) -> Result<Self, FiniteError> {
        Self::from_components(&vec![(1, 1); k])
    }

    /// A random groupoid with at most `max_arrows` arrows.
    pub fn random<R: Rng>(rng: &mut R, max_arrows: usize) -> Result<Self, FiniteError> {
        // (objects, group order) with k² · order arrows
        const SHAPES: [(usize, usize); 6] = [(1, 1), (1, 2), (1, 3), (2, 1), (1, 4), (2, 2)];
        let mut budget = max_arrows.max(1);
        let mut components = Vec::new();
        loop {
            let fitting: Vec<_> = SHAPES.iter().filter(|(k, g)| k * k * g <= budget).collect();
            if fitting.is_empty() || (!components.is_empty() && rng.gen_bool(0.35)) {
                break;
            }
            let &(k, g) = fitting[rng.gen_range(0..fitting.len())];
            budget -= k * k * g;
            components.push((k, g));
        }
        Self::from_components(&components)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const PAIR2: &str = r#"{
        "objects": ["x", "y"],
        "arrows": [
            {"id": "1x", "src": "x", "dst": "x"},
            {"id": "1y", "src": "y", "dst": "y"},
            {"id": "a", "src": "x", "dst": "y"},
            {"id": "a'", "src": "y", "dst": "x"}
        ],
        "compose": [["a", "a'", "1y"], ["a'", "a", "1x"]],
        "inverse": [["a", "a'"]]
    }"#;

    #[test]
    fn loads_pair_groupoid_with_inference() {
        let g = FiniteGroupoid::from_json(PAIR2).unwrap();
        assert_eq!(g.arrow_count(), 4);
        assert_eq!(g.object_count(), 2);
        let a = g.arrow_by_id("a").unwrap();
        let a_inv = g.arrow_by_id("a'").unwrap();
        assert_eq!(g.inverse(a), a_inv);
        assert_eq!(g.compose(a, a), None);
        assert!(g.is_identity(g.arrow_by_id("1x").unwrap()));
        let again = FiniteGroupoid::from_json(&g.to_json()).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn rejects_broken_groupoids() {
        let missing = PAIR2.replace(r#"["a'", "a", "1x"]"#, r#"["a'", "a", "1y"]"#);
        assert!(FiniteGroupoid::from_json(&missing).is_err());
        let unknown = PAIR2.replace(r#""dst": "y"}"#, r#""dst": "z"}"#);
        assert!(FiniteGroupoid::from_json(&unknown).is_err());
        assert!(matches!(
            FiniteGroupoid::from_json("{"),
            Err(FiniteError::Json(_))
        ));
    }

    #[test]
    fn builders_produce_expected_shapes() {
        let p3 = FiniteGroupoid::pair(3).unwrap();
        assert_eq!((p3.object_count(), p3.arrow_count()), (3, 9));
        let z2 = FiniteGroupoid::cyclic_group(2).unwrap();
        assert_eq!((z2.object_count(), z2.arrow_count()), (1, 2));
        let d = FiniteGroupoid::discrete(2).unwrap();
        assert!((0..2).all(|a| d.is_identity(a)));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = FiniteGroupoid::random(&mut rng, 8).unwrap();
            assert!(g.arrow_count() <= 8 && g.arrow_count() >= 1);
        }
    }
}
