//! Cross-checks between the closed-form predictors and exhaustive
//! enumeration. Every assertion compares two independently computed values:
//! the formula side never enumerates the code it predicts, and the brute
//! side never consults a formula.

use std::collections::BTreeMap;

use zqcodes::closed_form::{
    macdonald32_codeword_weight, macdonald32_wdist, macdonald_case_minima, macdonald_params,
    simplex2_wdist, simplex2_zero_profile_census, simplex3_codeword_weight, simplex3_wdist,
    simplex_params,
};
use zqcodes::code::ZqVector;
use zqcodes::construct::{macdonald_codeword, macdonald_generator, simplex_generator};
use zqcodes::ring::RingContext;

const CAP: u64 = 1 << 20;

#[test]
fn simplex2_formula_matches_bruteforce() {
    for q in 2..=9u64 {
        let formula = simplex2_wdist(q).unwrap();
        let brute = simplex_generator(q, 2)
            .unwrap()
            .weight_distribution_bruteforce(CAP)
            .unwrap();
        assert_eq!(formula, brute, "q={q}");
    }
}

#[test]
fn macdonald32_formula_matches_bruteforce() {
    for q in 2..=9u64 {
        let formula = macdonald32_wdist(q, CAP).unwrap();
        let brute = macdonald_generator(q, 3, 2)
            .unwrap()
            .weight_distribution_bruteforce(CAP)
            .unwrap();
        assert_eq!(formula, brute, "q={q}");
    }
}

#[test]
fn simplex3_formula_matches_bruteforce() {
    for q in 2..=9u64 {
        let formula = simplex3_wdist(q, CAP).unwrap();
        let brute = simplex_generator(q, 3)
            .unwrap()
            .weight_distribution_bruteforce(CAP)
            .unwrap();
        assert_eq!(formula, brute, "q={q}");
    }
}

#[test]
fn macdonald32_binary_case_fixed_by_hand_enumeration() {
    // The eight messages of M_{3,2}(2) yield 0000 once, 1111 once, and six
    // words of weight two.
    let expected = BTreeMap::from([(0, 1), (2, 6), (4, 1)]);
    let brute = macdonald_generator(2, 3, 2)
        .unwrap()
        .weight_distribution_bruteforce(CAP)
        .unwrap();
    assert_eq!(brute.counts(), &expected);
    let formula = macdonald32_wdist(2, CAP).unwrap();
    assert_eq!(formula.counts(), &expected);
}

#[test]
fn zero_profile_census_matches_profile_scan() {
    for q in 2..=12u64 {
        let predicted = simplex2_zero_profile_census(q).unwrap();
        let mut scanned: BTreeMap<usize, u64> = BTreeMap::new();
        for (_, c) in simplex_generator(q, 2).unwrap().codewords(CAP).unwrap() {
            *scanned.entry(c.len() - c.hamming_weight()).or_insert(0) += 1;
        }
        assert_eq!(predicted, scanned, "q={q}");
    }
}

// For unit alpha the general orbit-sum formulas must collapse to the
// dedicated unit-case expressions.
#[test]
fn unit_alpha_reduces_to_unit_case_formulas() {
    for q in 2..=8u64 {
        let ctx = RingContext::new(q).unwrap();
        let n = (q + 1) as usize;
        for (_, c) in simplex_generator(q, 2).unwrap().codewords(CAP).unwrap() {
            let profile = c.coordinate_profile();
            for alpha in 1..q {
                if !ctx.is_unit(alpha) {
                    continue;
                }
                assert_eq!(
                    macdonald32_codeword_weight(&profile, alpha, &ctx),
                    1 + (q - 2) as usize * n + profile.zeros(),
                    "q={q} alpha={alpha} c={c}"
                );
                assert_eq!(
                    simplex3_codeword_weight(&profile, alpha, &ctx),
                    1 + (q - 1) as usize * n,
                    "q={q} alpha={alpha} c={c}"
                );
            }
        }
    }
}

// The unit-alpha stratum of S_3(q) contributes phi(q) * q^2 codewords, all
// of weight 1 + (q-1)(q+1) = q^2.
#[test]
fn simplex3_unit_stratum_count() {
    for q in 2..=8u64 {
        let ctx = RingContext::new(q).unwrap();
        let target = (q * q) as usize;
        let mut count = 0u64;
        for (_, c) in simplex_generator(q, 2).unwrap().codewords(CAP).unwrap() {
            let profile = c.coordinate_profile();
            for alpha in 0..q {
                if ctx.is_unit(alpha) {
                    assert_eq!(
                        simplex3_codeword_weight(&profile, alpha, &ctx),
                        target,
                        "q={q} alpha={alpha}"
                    );
                    count += 1;
                }
            }
        }
        assert_eq!(count, ctx.unit_count() * q * q, "q={q}");
    }
}

// For non-unit nonzero alpha with additive order d, the weight of the
// parameterized word is pinched between
//   1 + (q/d)[(d-2)n + n(0)] + (q/d - 1) wt(c)   and
//   1 + (q/d)(d-1)n + (q/d - 1) wt(c),
// with the middle term measured on the constructed vector itself.
#[test]
fn nonunit_weight_bounds_hold() {
    for q in [4u64, 6, 8, 9] {
        let ctx = RingContext::new(q).unwrap();
        let n = (q + 1) as usize;
        for (_, c) in simplex_generator(q, 2).unwrap().codewords(CAP).unwrap() {
            let zeros = c.len() - c.hamming_weight();
            let wt_c = c.hamming_weight();
            for alpha in 1..q {
                if ctx.is_unit(alpha) {
                    continue;
                }
                let d = ctx.additive_order(alpha) as usize;
                let ratio = (q / ctx.additive_order(alpha)) as usize;
                let lower = 1 + ratio * ((d - 2) * n + zeros) + (ratio - 1) * wt_c;
                let upper = 1 + ratio * (d - 1) * n + (ratio - 1) * wt_c;
                let middle = macdonald_codeword(q, &c, alpha).unwrap().hamming_weight();
                assert!(
                    lower <= middle && middle <= upper,
                    "q={q} alpha={alpha} c={c}: {lower} <= {middle} <= {upper}"
                );
            }
        }
    }
}

// The (c, alpha) parameterization of M_{k,k-1}(q) is exactly the message
// enumeration: index alpha*q^{k-1} + j maps to (encode(G_{k-1}, j), alpha),
// and distinct parameters give distinct codewords.
#[test]
fn macdonald_parameterization_is_the_enumeration() {
    for (q, k) in [(2u64, 3u32), (3, 3), (4, 3), (5, 3), (2, 4), (3, 4)] {
        let inner = simplex_generator(q, k - 1).unwrap();
        let outer = macdonald_generator(q, k, k - 1).unwrap();
        let inner_words: Vec<ZqVector> = inner.codewords(CAP).unwrap().map(|(_, c)| c).collect();
        let mut seen = std::collections::HashSet::new();
        let inner_total = inner_words.len() as u64;
        for (index, word) in outer.codewords(CAP).unwrap() {
            let alpha = index / inner_total;
            let c = &inner_words[(index % inner_total) as usize];
            let built = macdonald_codeword(q, c, alpha).unwrap();
            assert_eq!(built, word, "q={q} k={k} index={index}");
            assert!(seen.insert(word), "duplicate codeword at index {index}");
        }
        assert_eq!(seen.len() as u64, q.pow(k), "q={q} k={k}");
    }
}

#[test]
fn simplex_parameter_formula_matches_bruteforce() {
    for q in 2..=9u64 {
        for k in [2u32, 3] {
            let predicted = simplex_params(q, k).unwrap();
            let observed = simplex_generator(q, k)
                .unwrap()
                .weight_distribution_bruteforce(CAP)
                .unwrap()
                .parameters()
                .unwrap();
            assert_eq!(predicted, observed, "q={q} k={k}");
        }
    }
}

#[test]
fn macdonald_parameter_formula_matches_bruteforce() {
    for q in 2..=9u64 {
        let predicted = macdonald_params(q, 3).unwrap();
        let observed = macdonald_generator(q, 3, 2)
            .unwrap()
            .weight_distribution_bruteforce(CAP)
            .unwrap()
            .parameters()
            .unwrap();
        assert_eq!(predicted, observed, "q={q}");
    }
}

// The exhaustive minimum distance of M_{3,2}(q) equals both the smallest of
// the three case minima and the single closed-form value.
#[test]
fn case_minima_bracket_the_true_minimum() {
    for q in 2..=9u64 {
        let minima = macdonald_case_minima(q, 3, CAP).unwrap();
        let d_brute = macdonald_generator(q, 3, 2)
            .unwrap()
            .weight_distribution_bruteforce(CAP)
            .unwrap()
            .min_distance()
            .unwrap() as u64;
        let case_min = [
            Some(minima.min_alpha_zero),
            Some(minima.min_alpha_unit),
            minima.min_alpha_nonunit,
        ]
        .into_iter()
        .flatten()
        .min()
        .unwrap();
        assert_eq!(case_min, d_brute, "q={q} case minima {minima:?}");
        assert_eq!(minima.theorem_value, d_brute, "q={q}");
        // Prime moduli have no nonzero non-units and composite ones do.
        assert_eq!(
            minima.min_alpha_nonunit.is_none(),
            q == 2 || q == 3 || q == 5 || q == 7
        );
    }
}
