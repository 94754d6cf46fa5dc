use liecodes::fieldcodes::{
    analyze, dual_code, min_distance, row_space_code, weight_distribution, FpMatrix, Prime,
};
use proptest::prelude::*;

fn prime() -> impl Strategy<Value = Prime> {
    prop_oneof![Just(Prime::Two), Just(Prime::Three)]
}

/// Random generator matrix with at most `max_rows` rows and `max_cols` columns.
fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = FpMatrix> {
    (prime(), 1..=max_rows, 1..=max_cols).prop_flat_map(|(p, r, c)| {
        proptest::collection::vec(0..p.modulus(), r * c)
            .prop_map(move |data| FpMatrix::new(p, r, c, data).unwrap())
    })
}

/// Every nonzero codeword by direct enumeration of row combinations.
fn brute_min_distance(m: &FpMatrix) -> Option<usize> {
    let p = m.p().modulus() as usize;
    let mut best = None;
    for idx in 1..p.pow(m.rows() as u32) {
        let mut x = idx;
        let coeffs: Vec<i64> = (0..m.rows())
            .map(|_| {
                let c = x % p;
                x /= p;
                c as i64
            })
            .collect();
        let w = m
            .combine_rows(&coeffs)
            .unwrap()
            .iter()
            .filter(|&&s| s != 0)
            .count();
        if w > 0 {
            best = Some(best.map_or(w, |b: usize| b.min(w)));
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn min_distance_matches_brute_force(m in matrix(4, 20)) {
        let got = min_distance(&row_space_code(&m), Some(2)).ok();
        prop_assert_eq!(got, brute_min_distance(&m));
    }

    #[test]
    fn dual_is_an_involution(m in matrix(6, 12)) {
        let c = row_space_code(&m);
        let dd = dual_code(&dual_code(&c));
        prop_assert_eq!(dd.basis().to_text(), c.basis().to_text());
        prop_assert_eq!(dual_code(&c).k() + c.k(), c.n());
    }

    #[test]
    fn report_invariant_under_column_permutation_and_negation(
        m in matrix(5, 14),
        seed in any::<u64>(),
    ) {
        let n = m.cols();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let negate: Vec<usize> = (0..n).filter(|i| (seed >> (i % 64)) & 1 == 1).collect();
        let moved = m.select_columns(&perm).unwrap().negate_columns(&negate);
        let a = analyze(&row_space_code(&m));
        let b = analyze(&row_space_code(&moved));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn doubly_even_implies_self_orthogonal(m in matrix(5, 16)) {
        let r = analyze(&row_space_code(&m));
        if r.doubly_even == Some(true) {
            prop_assert!(r.self_orthogonal);
        }
        prop_assert_eq!(r.weight_distribution.iter().sum::<u64>(),
            (r.p as u64).pow(r.k as u32));
    }

    #[test]
    fn worker_count_does_not_change_distribution(m in matrix(6, 24), w in 1usize..6) {
        let c = row_space_code(&m);
        prop_assert_eq!(weight_distribution(&c, Some(1)), weight_distribution(&c, Some(w)));
    }

    #[test]
    fn text_format_round_trips(m in matrix(6, 20)) {
        let text = m.to_text();
        let back = FpMatrix::parse_text(&text).unwrap();
        prop_assert_eq!(back.to_text(), text);
    }
}

#[test]
fn registered_binary_doubly_even_cases_are_self_orthogonal() {
    use liecodes::verify::{run_suite, Limits};
    let suite = run_suite(None, &Limits::default()).unwrap();
    for r in suite.results.iter().filter_map(|r| r.computed.as_ref()) {
        if r.doubly_even == Some(true) {
            assert!(r.self_orthogonal, "{}", r.params());
        }
    }
}
