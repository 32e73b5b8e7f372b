//! The three example lattices, transcribed cover by cover.

use crate::lattice::Lattice;

fn build(names: &[&str], covers: &[(&str, &str)]) -> Lattice {
    let index = |label: &str| {
        names
            .iter()
            .position(|&n| n == label)
            .unwrap_or_else(|| panic!("unknown label {label}"))
    };
    let pairs: Vec<(usize, usize)> = covers.iter().map(|&(c, p)| (index(c), index(p))).collect();
    let names = names.iter().map(|s| s.to_string()).collect();
    Lattice::from_covers(names, &pairs).expect("hard-coded lattice is valid")
}

/// Nine elements, unranked, relatively complemented, `μ(0, 1234) = 0`.
pub fn fig1() -> Lattice {
    build(
        &["0", "1", "2", "3", "4", "12", "13", "23", "1234"],
        &[
            ("0", "1"),
            ("0", "2"),
            ("0", "3"),
            ("0", "4"),
            ("1", "12"),
            ("1", "13"),
            ("2", "12"),
            ("2", "23"),
            ("3", "13"),
            ("3", "23"),
            ("4", "1234"),
            ("12", "1234"),
            ("13", "1234"),
            ("23", "1234"),
        ],
    )
}

const FIG2_TRIPLES: [&str; 10] = [
    "123", "124", "135", "146", "156", "236", "245", "256", "345", "346",
];

/// 33 elements: the empty set, `1..6`, all pairs, ten triples and `[6]`.
/// Every pair lies in exactly two triples; `μ(∅, [6]) = 0`.
pub fn fig2() -> Lattice {
    let mut names: Vec<String> = vec!["∅".to_string()];
    names.extend((1..=6).map(|i| i.to_string()));
    let mut pairs = Vec::new();
    for a in 1..=6 {
        for b in a + 1..=6 {
            pairs.push(format!("{a}{b}"));
        }
    }
    names.extend(pairs.iter().cloned());
    names.extend(FIG2_TRIPLES.iter().map(|s| s.to_string()));
    names.push("[6]".to_string());

    let mut covers: Vec<(String, String)> = Vec::new();
    for i in 1..=6 {
        covers.push(("∅".into(), i.to_string()));
    }
    for p in &pairs {
        for c in p.chars() {
            covers.push((c.to_string(), p.clone()));
        }
    }
    for t in FIG2_TRIPLES {
        let d: Vec<char> = t.chars().collect();
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            covers.push((format!("{}{}", d[a], d[b]), t.to_string()));
        }
        covers.push((t.to_string(), "[6]".into()));
    }

    let names_ref: Vec<&str> = names.iter().map(String::as_str).collect();
    let covers_ref: Vec<(&str, &str)> = covers
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    build(&names_ref, &covers_ref)
}

/// Eleven elements with rank profile `1, 5, 4, 1`; not relatively
/// complemented (`4 < 45 < [5]` has nothing else between).
pub fn fig3b() -> Lattice {
    build(
        &["∅", "1", "2", "3", "4", "5", "12", "13", "23", "45", "[5]"],
        &[
            ("∅", "1"),
            ("∅", "2"),
            ("∅", "3"),
            ("∅", "4"),
            ("∅", "5"),
            ("1", "12"),
            ("1", "13"),
            ("2", "12"),
            ("2", "23"),
            ("3", "13"),
            ("3", "23"),
            ("4", "45"),
            ("5", "45"),
            ("12", "[5]"),
            ("13", "[5]"),
            ("23", "[5]"),
            ("45", "[5]"),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mobius::MobiusTable;
    use crate::ssp::is_rc;

    #[test]
    fn fig1_shape() {
        let l = fig1();
        assert_eq!(l.len(), 9);
        assert_eq!(l.covers().len(), 14);
        assert!(!l.is_ranked());
        assert!(is_rc(&l).is_rc());
        let mu = MobiusTable::new(&l);
        assert_eq!(mu.vanishing_pairs(), vec![(0, 8)]);
    }

    #[test]
    fn fig2_shape() {
        let l = fig2();
        assert_eq!(l.len(), 33);
        assert_eq!(l.covers().len(), 76);
        assert_eq!(l.rank_profile().unwrap(), vec![1, 6, 15, 10, 1]);
        assert!(is_rc(&l).is_rc());
        let mu = MobiusTable::new(&l);
        assert_eq!(mu.vanishing_pairs(), vec![(0, 32)]);
    }

    #[test]
    fn fig3b_shape() {
        let l = fig3b();
        assert_eq!(l.rank_profile().unwrap(), vec![1, 5, 4, 1]);
        assert_eq!(l.count_up_to(2).unwrap(), 10);
        assert!(!is_rc(&l).is_rc());
    }
}
