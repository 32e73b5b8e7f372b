use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use ssplat_core::builders::{boolean, from_matroid, MatroidSpec};
use ssplat_core::canon::canonical_form;
use ssplat_core::ssp::{brute, ShatterEngine};
use ssplat_core::{
    check_inversion, is_isomorphic, is_rc, is_ssp, non_rc_family, parse_lattice,
    product_ssp_witness, shattered_set, to_text, ElementSet, Lattice, Outcome,
    Strategy as SearchStrategy,
};

/// Intersection-closed families of subsets of a 4-element set plus the full
/// set, ordered by inclusion. Every finite lattice arises this way up to
/// isomorphism for a large enough ground set.
fn closure_lattice(seeds: &[u8]) -> Lattice {
    let mut sets: Vec<u8> = seeds.iter().map(|s| s & 0xF).collect();
    sets.push(0xF);
    loop {
        let mut grown = sets.clone();
        for &a in &sets {
            for &b in &sets {
                grown.push(a & b);
            }
        }
        grown.sort_unstable();
        grown.dedup();
        if grown == sets {
            break;
        }
        sets = grown;
    }
    let mut covers = Vec::new();
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate() {
            if a != b && a & !b == 0 {
                covers.push((i, j));
            }
        }
    }
    let names = sets.iter().map(|s| format!("s{s:x}")).collect();
    Lattice::from_covers(names, &covers).unwrap()
}

fn lattice_strategy() -> impl Strategy<Value = Lattice> {
    prop::collection::vec(any::<u8>(), 0..8).prop_map(|s| closure_lattice(&s))
}

/// The same lattice with element indices permuted.
fn relabel(l: &Lattice, perm: &[usize]) -> Lattice {
    let n = l.len();
    let mut names = vec![String::new(); n];
    for x in 0..n {
        names[perm[x]] = l.name(x).to_string();
    }
    let covers: Vec<(usize, usize)> = l
        .covers()
        .iter()
        .map(|&(c, p)| (perm[c], perm[p]))
        .collect();
    Lattice::from_covers(names, &covers).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn meet_is_intersection(seeds in prop::collection::vec(any::<u8>(), 0..8)) {
        let l = closure_lattice(&seeds);
        let value = |x: usize| u8::from_str_radix(&l.name(x)[1..], 16).unwrap();
        for x in 0..l.len() {
            for y in 0..l.len() {
                prop_assert_eq!(value(l.meet(x, y)), value(x) & value(y));
                let j = l.join(x, y).unwrap();
                prop_assert_eq!(value(j) & (value(x) | value(y)), value(x) | value(y));
            }
        }
    }

    #[test]
    fn shattered_sets_are_hereditary_and_monotone(l in lattice_strategy(), a in any::<u64>(), b in any::<u64>()) {
        let n = l.len();
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let f = ElementSet::from_mask(n, a & b & mask);
        let g = ElementSet::from_mask(n, (a | b) & mask);
        let sf = shattered_set(&l, &f);
        let sg = shattered_set(&l, &g);
        prop_assert!(sf.is_subset(&sg));
        for y in &sf {
            prop_assert!(l.down_set(y).is_subset(&sf));
        }
    }

    #[test]
    fn canonical_form_ignores_labels(l in lattice_strategy(), seed in any::<u64>()) {
        let n = l.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let m = relabel(&l, &perm);
        prop_assert_eq!(canonical_form(&l), canonical_form(&m));
        prop_assert!(is_isomorphic(&l, &m));
    }

    #[test]
    fn text_format_round_trips(l in lattice_strategy()) {
        let back = parse_lattice(&to_text(&l)).unwrap();
        prop_assert_eq!(back.names(), l.names());
        prop_assert_eq!(back.covers(), l.covers());
    }

    #[test]
    fn pruned_search_equals_naive(l in lattice_strategy()) {
        let engine = ShatterEngine::new(&l).unwrap();
        let out = brute::search(&engine, false);
        prop_assert_eq!(out.covered, 1u64 << l.len());
        prop_assert_eq!(out.violations, brute::naive_violations(&engine));
    }

    #[test]
    fn non_rc_lattices_are_not_ssp(l in lattice_strategy()) {
        if let Some(w) = is_rc(&l).witness() {
            let f = non_rc_family(&l, w).unwrap();
            prop_assert!(shattered_set(&l, &f).len() < f.len());
            prop_assert_eq!(is_ssp(&l, SearchStrategy::Brute, 1 << 20).outcome, Outcome::Violated);
        }
    }

    #[test]
    fn mobius_inversion(l in lattice_strategy(), values in prop::collection::vec(-50i64..50, 16)) {
        let g: Vec<BigRational> = (0..l.len())
            .map(|i| BigRational::from_integer(BigInt::from(values[i % values.len()])))
            .collect();
        prop_assert!(check_inversion(&l, &g));
    }

    #[test]
    fn product_witness_verifies(a in 0usize..3, b in 0usize..3, family in any::<u64>()) {
        let k = boolean(a).unwrap();
        let l = boolean(b).unwrap();
        let n = k.len() * l.len();
        let f = ElementSet::from_mask(n, family & ((1u64 << n) - 1));
        let w = product_ssp_witness(&k, &l, &f).unwrap();
        prop_assert!(w.holds());
    }

    #[test]
    fn uniform_matroids_are_geometric(r in 1usize..4, extra in 0usize..3) {
        let m = MatroidSpec::uniform(r, r + extra).unwrap();
        let l = from_matroid(&m).unwrap();
        prop_assert!(l.is_ranked());
        prop_assert_eq!(l.height().unwrap(), r);
        prop_assert!(ssplat_core::weisner_check(&l).unwrap());
    }
}
