//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see them.

use num_bigint::BigUint;
use num_traits::Zero;

use stairgrid::closed::{catalan, i_closed, j_closed, max_nonzero_k, peak_value, Count};
use stairgrid::grid::{
    boundary_grid, construction_grid, downcore, duplicate_row, staircase_boxset, Orientation,
};
use stairgrid::perm::{avoids_all, enumerate_avoiders, parse_permutation, Pattern};
use stairgrid::series::{series_solve_f, verify_functional_equation};
use stairgrid::staircase::{decode, encode, staircase_downcore};
use stairgrid::verify::{run_suite, Bounds};

fn pattern(text: &str) -> Pattern {
    parse_permutation(text).unwrap()
}

fn passed(name: &str) {
    println!("PASS {name}");
}

/// Criterion 1: encode(58634127) yields exactly rows (2,0,1)/(1,0)/(1).
#[test]
fn criterion_01_encoding_golden() {
    let enc = encode(&parse_permutation("58634127").unwrap()).unwrap();
    assert_eq!(enc.rows(), &[vec![2, 0, 1], vec![1, 0], vec![1]]);
    passed("criterion 1: staircase encoding golden for 58634127");
}

/// Criterion 2: boundary_grid(76285143) has exactly these 19 boxes and
/// its downcore has exactly 10 edges including (2,7)-(3,6) and (6,2)-(7,1).
#[test]
fn criterion_02_boundary_golden() {
    let grid = boundary_grid(&parse_permutation("76285143").unwrap()).unwrap();
    assert_eq!(grid.len(), 19);
    let rows = grid.rows();
    let expected = [
        (1usize, 6usize, 7usize),
        (2, 3, 7),
        (3, 3, 6),
        (4, 3, 4),
        (5, 3, 3),
        (6, 2, 3),
        (7, 1, 3),
    ];
    for (y, a, b) in expected {
        assert_eq!(rows[&y], (a..=b).collect::<Vec<_>>(), "row {y}");
    }
    let g = downcore(&grid);
    assert_eq!(g.edge_count(), 10);
    assert!(g.has_edge((2, 7), (3, 6)));
    assert!(g.has_edge((6, 2), (7, 1)));
    passed("criterion 2: boundary grid and downcore golden for 76285143");
}

/// Criterion 3: I_closed(n,k) equals brute-force independent-set counts on
/// the staircase downcore for all 0 <= n <= 7 and all k.
#[test]
fn criterion_03_i_oracle() {
    for n in 0..=7usize {
        let brute: Vec<Count> = if n == 0 {
            vec![Count::from(1u32)]
        } else {
            staircase_downcore(n).independent_set_counts().unwrap()
        };
        for k in 0..=2 * n + 2 {
            let b = brute.get(k).cloned().unwrap_or_else(BigUint::zero);
            assert_eq!(i_closed(n as u64, k as u64), b, "I({n},{k})");
        }
    }
    passed("criterion 3: I(n,k) closed form matches brute force, n <= 7");
}

/// Criterion 4: the order-10 series fixed point satisfies the cleared-
/// denominator identity and matches I_closed on the full 11x11 grid.
#[test]
fn criterion_04_functional_equation() {
    let f = series_solve_f(10).unwrap();
    assert!(verify_functional_equation(&f));
    for n in 0..=10usize {
        for k in 0..=10usize {
            assert_eq!(
                f.coefficient(n, k),
                &num_bigint::BigInt::from(i_closed(n as u64, k as u64)),
                "coefficient ({n},{k})"
            );
        }
    }
    passed("criterion 4: functional equation and coefficients at order 10");
}

fn brute_j(l: usize) -> Vec<Count> {
    let p132 = pattern("132");
    let mut hist = vec![Count::zero(); 2 * l + 2];
    for sigma in enumerate_avoiders(l, &[p132]).unwrap() {
        hist[encode(&sigma).unwrap().nonzero_count()] += 1u32;
    }
    hist
}

/// Criterion 5: J_closed(l,k) equals the brute-force count over Av_l(132)
/// for all 1 <= l <= 10 and all k.
#[test]
fn criterion_05_j_oracle() {
    for l in 1..=10usize {
        let hist = brute_j(l);
        for (k, b) in hist.iter().enumerate() {
            assert_eq!(&j_closed(l as u64, k as u64), b, "J({l},{k})");
        }
    }
    passed("criterion 5: J(l,k) closed form matches brute force, l <= 10");
}

/// Criterion 6: the largest k with brute-force J(l,k) > 0 is
/// floor((2l-1)/3) for 1 <= l <= 10.
#[test]
fn criterion_06_max_nonzero_k() {
    for l in 1..=10usize {
        let hist = brute_j(l);
        let largest = hist
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
            .max()
            .unwrap();
        assert_eq!(largest, max_nonzero_k(l as u64).unwrap() as usize, "l = {l}");
    }
    passed("criterion 6: largest nonzero k is floor((2l-1)/3), l <= 10");
}

/// Criterion 7: peak values match the case formulas for 3i+2 <= 16 via
/// closed forms and l <= 10 via brute force; J(3,1) = 4 and J(6,3) = 19
/// pin the 9i^2+3i-4 coefficient.
#[test]
fn criterion_07_peak_values() {
    for l in 2..=16u64 {
        let k = max_nonzero_k(l).unwrap();
        assert_eq!(peak_value(l).unwrap(), j_closed(l, k), "closed form at l = {l}");
        match l % 3 {
            2 => assert_eq!(peak_value(l).unwrap(), catalan((l - 2) / 3)),
            1 => {
                let i = ((l - 1) / 3) as i64;
                let double: Count = peak_value(l).unwrap() * 2u32;
                assert_eq!(double, stairgrid::closed::binomial(2 * i, i) * 3u32);
            }
            _ => {}
        }
    }
    for l in 2..=10usize {
        let hist = brute_j(l);
        let k = max_nonzero_k(l as u64).unwrap() as usize;
        assert_eq!(hist[k], peak_value(l as u64).unwrap(), "brute force at l = {l}");
    }
    assert_eq!(j_closed(3, 1), Count::from(4u32));
    assert_eq!(j_closed(6, 3), Count::from(19u32));
    passed("criterion 7: peak values, including J(3,1) = 4 and J(6,3) = 19");
}

/// Criterion 8: encode is injective on Av_n(132) with decode as inverse,
/// n <= 8.
#[test]
fn criterion_08_encoding_bijection() {
    use std::collections::HashSet;
    let p132 = pattern("132");
    for n in 1..=8usize {
        let mut seen = HashSet::new();
        let mut total = 0u64;
        for sigma in enumerate_avoiders(n, &[p132.clone()]).unwrap() {
            let enc = encode(&sigma).unwrap();
            assert!(seen.insert(enc.rows().to_vec()), "collision at {sigma}");
            assert_eq!(decode(&enc).unwrap(), sigma);
            total += 1;
        }
        assert_eq!(Count::from(total), catalan(n as u64));
    }
    passed("criterion 8: staircase encoding is a bijection on Av_n(132), n <= 8");
}

/// Criterion 9: purity of the boundary-grid downcore is equivalent to
/// 2143-avoidance over all of Av_n(123), n <= 8.
#[test]
fn criterion_09_purity_iff_2143() {
    let p123 = pattern("123");
    let p2143 = pattern("2143");
    for n in 1..=8usize {
        for pi in enumerate_avoiders(n, &[p123.clone()]).unwrap() {
            let pure = downcore(&boundary_grid(&pi).unwrap())
                .purity()
                .unwrap()
                .is_pure;
            assert_eq!(pure, avoids_all(&pi, &[p2143.clone()]), "at {pi}");
        }
    }
    passed("criterion 9: pure downcore iff 2143-avoiding, over Av_n(123), n <= 8");
}

/// Criterion 10: the number of pi in Av_n(123) with pure downcore is
/// F_{2n-1}: 1, 2, 5, 13, 34, 89, 233, 610 for n = 1..8.
#[test]
fn criterion_10_fibonacci_count() {
    let p123 = pattern("123");
    let expected = [1u64, 2, 5, 13, 34, 89, 233, 610];
    for (n, &want) in (1..=8usize).zip(&expected) {
        let mut count = 0u64;
        for pi in enumerate_avoiders(n, &[p123.clone()]).unwrap() {
            if downcore(&boundary_grid(&pi).unwrap())
                .purity()
                .unwrap()
                .is_pure
            {
                count += 1;
            }
        }
        assert_eq!(count, want, "n = {n}");
    }
    passed("criterion 10: pure-downcore counts are F_{2n-1}, n <= 8");
}

/// Criterion 11: all maximal independent sets of the lower-left staircase
/// downcore have size 2n-1 for n <= 7; at n = 9 the first-column pattern
/// {1, 2, 4, 7, 9} extends to a maximal set of size 17.
#[test]
fn criterion_11_staircase_purity() {
    for n in 1..=7usize {
        let g = downcore(&staircase_boxset(n, Orientation::LowerLeft));
        for set in g.maximal_independent_sets().unwrap() {
            assert_eq!(set.len(), 2 * n - 1, "n = {n}");
        }
    }
    let g = downcore(&staircase_boxset(9, Orientation::LowerLeft));
    let mut chosen: Vec<(usize, usize)> = [1usize, 2, 4, 7, 9].iter().map(|&y| (1, y)).collect();
    for &v in g.vertices() {
        if chosen.iter().all(|&c| c != v && !g.has_edge(c, v)) {
            chosen.push(v);
        }
    }
    // Maximality check: nothing else can be added.
    for &v in g.vertices() {
        assert!(
            chosen.contains(&v) || chosen.iter().any(|&c| g.has_edge(c, v)),
            "{v:?} could still be added"
        );
    }
    assert_eq!(chosen.len(), 17);
    passed("criterion 11: staircase maximal sets have size 2n-1; first-column set at n = 9");
}

/// Criterion 12: construction_grid(n) is impure for 4 <= n <= 8, with
/// witness sizes {6, 5} at n = 4 and {3(n-2), 3(n-2)-1} present for n >= 5.
#[test]
fn criterion_12_construction_family() {
    for n in 4..=8usize {
        let g = downcore(&construction_grid(n).unwrap());
        let mut sizes: Vec<usize> = g
            .maximal_independent_sets()
            .unwrap()
            .iter()
            .map(|s| s.len())
            .collect();
        sizes.sort_unstable();
        sizes.dedup();
        assert!(sizes.len() > 1, "n = {n} is pure: {sizes:?}");
        let (lo, hi) = if n == 4 { (5, 6) } else { (3 * (n - 2) - 1, 3 * (n - 2)) };
        assert!(sizes.contains(&lo) && sizes.contains(&hi), "n = {n}: {sizes:?}");
    }
    passed("criterion 12: construction family impure with quoted witness sizes");
}

/// Criterion 13: row coverage for every maximal independent set of every
/// boundary grid with n <= 7 plus 500 seeded random skew diagrams, and
/// duplication preserves impurity over the same corpus.
#[test]
fn criterion_13_row_coverage_and_duplication() {
    let bounds = Bounds {
        max_n: Some(7),
        order: None,
        seed: Some(0),
    };
    let coverage = run_suite("row-coverage", &bounds).unwrap();
    assert!(coverage.passed(), "{coverage}");
    let dup = run_suite("duplication", &bounds).unwrap();
    assert!(dup.passed(), "{dup}");
    // Spot check beyond the suite: duplicating a specific row of an impure
    // grid keeps both witness sizes one larger.
    let g = construction_grid(4).unwrap();
    let before = downcore(&g).purity_exhaustive().unwrap();
    let after = downcore(&duplicate_row(&g, 2).unwrap())
        .purity_exhaustive()
        .unwrap();
    assert!(!after.is_pure);
    assert_eq!(after.min_size, before.min_size + 1);
    assert_eq!(after.max_size, before.max_size + 1);
    passed("criterion 13: row coverage and duplication over the diagram corpus");
}
