//! Seeded random generators for words, clopens, points and prefix maps.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cuntz::{Clopen, EPPoint, PrefixMap, Word};

fn random_word<R: Rng + ?Sized>(rng: &mut R, arity: u8, len: usize) -> Word {
    Word::from_letters((0..len).map(|_| rng.gen_range(0..arity)).collect())
}

/// A complete prefix code obtained from `{ε}` by `splits` random leaf splits.
pub fn random_complete_code<R: Rng + ?Sized>(rng: &mut R, arity: u8, splits: usize) -> Vec<Word> {
    let mut leaves = vec![Word::empty()];
    for _ in 0..splits {
        let w = leaves.swap_remove(rng.gen_range(0..leaves.len()));
        leaves.extend((0..arity).map(|a| w.child(a)));
    }
    leaves.sort();
    leaves
}

/// A random clopen, possibly empty or full.
pub fn random_clopen<R: Rng + ?Sized>(rng: &mut R, arity: u8) -> Clopen {
    let splits = rng.gen_range(1..=4);
    let words = random_complete_code(rng, arity, splits)
        .into_iter()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Clopen::from_words(arity, words)
}

pub fn random_nonzero_clopen<R: Rng + ?Sized>(rng: &mut R, arity: u8) -> Clopen {
    loop {
        let e = random_clopen(rng, arity);
        if !e.is_empty() {
            return e;
        }
    }
}

pub fn random_point<R: Rng + ?Sized>(rng: &mut R, arity: u8) -> EPPoint {
    let pre = rng.gen_range(0..=3);
    let period = rng.gen_range(1..=3);
    let u = random_word(rng, arity, pre);
    let v = random_word(rng, arity, period);
    EPPoint::new(u, v).expect("non-empty period")
}

/// A random point of `e`, or `None` when `e` is empty.
pub fn random_point_in<R: Rng + ?Sized>(rng: &mut R, e: &Clopen) -> Option<EPPoint> {
    let w = e.words().choose(rng)?;
    Some(random_point(rng, e.arity()).prepend(w))
}

/// A random unit: a bijection between two complete codes of equal size.
pub fn random_unit<R: Rng + ?Sized>(rng: &mut R, arity: u8) -> PrefixMap {
    let splits = rng.gen_range(0..=4);
    let domain = random_complete_code(rng, arity, splits);
    let mut range = random_complete_code(rng, arity, splits);
    range.shuffle(rng);
    PrefixMap::from_normal(arity, domain.into_iter().zip(range).collect())
}

/// A random unit supported in the cylinder `[w]`: a random unit copied into
/// `[w]` and extended by the identity outside.
pub fn random_unit_within<R: Rng + ?Sized>(rng: &mut R, arity: u8, w: &Word) -> PrefixMap {
    let u = random_unit(rng, arity);
    let x = PrefixMap::single(arity, Word::empty(), w.clone());
    let inside = x.compose(&u).compose(&x.inverse());
    inside.union_unchecked(&Clopen::cylinder(arity, w.clone()).complement().to_map())
}

/// A random clopen contained in `e`.
pub fn random_subclopen<R: Rng + ?Sized>(rng: &mut R, e: &Clopen) -> Clopen {
    e.intersection(&random_clopen(rng, e.arity()))
}

/// A random non-trivial involution swapping some leaves of a complete code.
pub fn random_involution<R: Rng + ?Sized>(rng: &mut R, arity: u8) -> PrefixMap {
    let splits = rng.gen_range(1..=4);
    let mut leaves = random_complete_code(rng, arity, splits);
    leaves.shuffle(rng);
    let swaps = rng.gen_range(1..=leaves.len() / 2);
    let mut pairs = Vec::with_capacity(leaves.len());
    for i in 0..swaps {
        let (x, y) = (leaves[2 * i].clone(), leaves[2 * i + 1].clone());
        pairs.push((x.clone(), y.clone()));
        pairs.push((y, x));
    }
    pairs.extend(leaves[2 * swaps..].iter().map(|w| (w.clone(), w.clone())));
    PrefixMap::from_normal(arity, pairs)
}

/// A random element of `C_n`: a clopen, a restricted unit, or a partial
/// bijection between leaves of two independent codes.
pub fn random_prefix_map<R: Rng + ?Sized>(rng: &mut R, arity: u8) -> PrefixMap {
    match rng.gen_range(0..4) {
        0 => random_clopen(rng, arity).to_map(),
        1 => random_unit(rng, arity).restrict(&random_clopen(rng, arity)),
        _ => {
            let splits = rng.gen_range(0..=4);
            let mut domain = random_complete_code(rng, arity, splits);
            let splits = rng.gen_range(0..=4);
            let mut range = random_complete_code(rng, arity, splits);
            domain.shuffle(rng);
            range.shuffle(rng);
            let k = rng.gen_range(0..=domain.len().min(range.len()));
            PrefixMap::from_normal(arity, domain.into_iter().zip(range).take(k).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuntz::CuntzMonoid;
    use crate::monoid::{BooleanInverseMonoid, MonoidExt};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_produce_what_they_claim() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [2u8, 3] {
            let c = CuntzMonoid::new(n).unwrap();
            for _ in 0..100 {
                assert!(c.is_unit(&random_unit(&mut rng, n)));
                let t = random_involution(&mut rng, n);
                assert!(c.is_involution(&t) && t != c.one());
                let e = random_nonzero_clopen(&mut rng, n);
                let p = random_point_in(&mut rng, &e).unwrap();
                assert!(e.contains_point(&p));
                let code = random_complete_code(&mut rng, n, 3);
                assert_eq!(code.len(), 1 + 3 * (n as usize - 1));
                assert_eq!(Clopen::from_words(n, code), Clopen::full(n));
            }
        }
    }

    #[test]
    fn localized_units_stay_inside() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let c = CuntzMonoid::new(2).unwrap();
        let w = Word::from_digits("12").unwrap();
        for _ in 0..50 {
            let g = random_unit_within(&mut rng, 2, &w);
            assert!(c.is_unit(&g));
            assert!(c
                .sigma(&g)
                .domain_clopen()
                .is_subset(&Clopen::cylinder(2, w.clone())));
        }
    }

    #[test]
    fn seeded_runs_repeat() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20)
                .map(|_| random_prefix_map(&mut rng, 3))
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(9), draw(9));
    }
}
