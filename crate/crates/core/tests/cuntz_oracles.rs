//! Independent oracles for `C_n`: word-level evaluation of prefix maps, the
//! fixed-point operator at bounded depth, and brute-force clopen
//! isomorphism search.

use std::collections::BTreeSet;

use boolinv::cuntz::{
    clopen_iso, random_nonzero_clopen, random_prefix_map, Clopen, CuntzError, CuntzMonoid,
    PrefixMap, Word,
};
use boolinv::{BooleanInverseMonoid, MonoidExt};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `s(w)` on a finite word long enough that the matching pair is determined.
fn eval(s: &PrefixMap, w: &Word) -> Option<Word> {
    let (d, r) = s.pairs().iter().find(|(d, _)| d.is_prefix_of(w))?;
    Some(r.concat(&d.suffix_after(w).expect("prefix")))
}

fn words(n: u8, len: usize) -> Vec<Word> {
    let mut level = vec![Word::empty()];
    for _ in 0..len {
        level = level
            .iter()
            .flat_map(|w| (0..n).map(move |a| w.child(a)))
            .collect();
    }
    level
}

#[test]
fn composition_matches_word_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in [2u8, 3] {
        let c = CuntzMonoid::new(n).unwrap();
        for _ in 0..150 {
            let s = random_prefix_map(&mut rng, n);
            let t = random_prefix_map(&mut rng, n);
            let st = c.multiply(&s, &t);
            let depth = s.max_word_len() + t.max_word_len();
            for w in words(n, depth.min(7)) {
                let direct = eval(&t, &w).and_then(|v| eval(&s, &v));
                assert_eq!(eval(&st, &w), direct, "s = {s}, t = {t}, w = {w}");
            }
        }
    }
}

#[test]
fn inverse_matches_word_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let s = random_prefix_map(&mut rng, 3);
        let si = s.inverse();
        for w in words(3, s.max_word_len() + 1) {
            if let Some(v) = eval(&s, &w) {
                assert_eq!(eval(&si, &v), Some(w));
            }
        }
    }
}

#[test]
fn phi_matches_fixed_words_at_depth() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for n in [2u8, 3] {
        let c = CuntzMonoid::new(n).unwrap();
        for _ in 0..300 {
            let s = random_prefix_map(&mut rng, n);
            let depth = s.max_word_len() + 2;
            let fixed: Vec<Word> = words(n, depth)
                .into_iter()
                .filter(|w| eval(&s, w).as_ref() == Some(w))
                .collect();
            assert_eq!(
                Clopen::from_words(n, fixed),
                c.phi(&s).domain_clopen(),
                "s = {s}"
            );
        }
    }
}

/// Numbers of cylinders, all of length at most `max_len`, that partition `[w]`.
fn partition_sizes(n: u8, w: &Word, max_len: usize) -> BTreeSet<usize> {
    let mut sizes: BTreeSet<usize> = [1].into_iter().collect();
    if w.len() < max_len {
        let mut children: BTreeSet<usize> = [0].into_iter().collect();
        for a in 0..n {
            let child = partition_sizes(n, &w.child(a), max_len);
            children = children
                .iter()
                .flat_map(|x| child.iter().map(move |y| x + y))
                .collect();
        }
        sizes.extend(children);
    }
    sizes
}

fn clopen_partition_sizes(e: &Clopen, max_len: usize) -> BTreeSet<usize> {
    e.words().iter().fold([0].into_iter().collect(), |acc, w| {
        let sizes = partition_sizes(e.arity(), w, max_len);
        acc.iter()
            .flat_map(|x| sizes.iter().map(move |y| x + y))
            .collect()
    })
}

#[test]
fn clopen_iso_against_brute_force_in_c3() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let (mut matched, mut mismatched) = (0, 0);
    for _ in 0..20 {
        let e = random_nonzero_clopen(&mut rng, 3);
        let f = random_nonzero_clopen(&mut rng, 3);
        let common = clopen_partition_sizes(&e, 4)
            .intersection(&clopen_partition_sizes(&f, 4))
            .count();
        match clopen_iso(&e, &f) {
            Ok(x) => {
                matched += 1;
                assert!(common > 0, "{e} {f}");
                assert_eq!(x.domain_clopen(), e);
                assert_eq!(x.range_clopen(), f);
            }
            Err(CuntzError::NoIso { .. }) => {
                mismatched += 1;
                assert_eq!(common, 0, "{e} {f}");
            }
            Err(other) => panic!("{other}"),
        }
    }
    assert!(matched > 0 && mismatched > 0);
}

#[test]
fn partition_sizes_follow_the_count_rule() {
    assert_eq!(
        partition_sizes(3, &Word::empty(), 2)
            .into_iter()
            .collect::<Vec<_>>(),
        [1, 3, 5, 7, 9]
    );
    assert_eq!(
        partition_sizes(2, &Word::empty(), 2)
            .into_iter()
            .collect::<Vec<_>>(),
        [1, 2, 3, 4]
    );
}
