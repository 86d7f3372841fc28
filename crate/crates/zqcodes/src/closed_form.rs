//! Closed-form predictors for the constructed codes: parameter formulas,
//! the dimension-2 simplex weight distribution, per-codeword weight formulas
//! for the dimension-3 codes, case-wise minima, and two hard-coded Z_4
//! reference tables.
//!
//! Everything here is checked elsewhere against exhaustive enumeration; the
//! predictors never enumerate the code they predict (the dimension-3
//! distributions iterate S_2(q) profiles, which is a strictly smaller code).

use std::collections::BTreeMap;

use crate::code::{CodeParameters, CoordinateProfile, WeightDistribution};
use crate::construct::{simplex_generator, simplex_length};
use crate::ring::{smallest_divisor, RingContext};
use crate::{Error, Result};

/// Case-wise minimum weights of M_{k,k-1}(q), one per stratum of the scalar
/// alpha in the `(c, alpha)` parameterization, next to the single closed-form
/// value. `min_alpha_nonunit` is absent for prime q (no nonzero non-units).
///
/// No ordering among the fields is assumed here; comparing them against the
/// exhaustive minimum is the verifier's job.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseMinima {
    pub q: u64,
    pub k: u32,
    pub min_alpha_zero: u64,
    pub min_alpha_unit: u64,
    pub min_alpha_nonunit: Option<u64>,
    pub theorem_value: u64,
}

/// A published weight distribution, hard-coded for regression checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceTable {
    pub label: &'static str,
    pub distribution: WeightDistribution,
}

/// Closed-form [n, k, d] of S_k(q): n = (q^k - 1)/(q - 1) and
/// d = (q/p)(p - 1) n_{k-1} + 1 with p the smallest divisor of q exceeding 1
/// (n_0 = 0, so d = 1 in dimension 1).
pub fn simplex_params(q: u64, k: u32) -> Result<CodeParameters> {
    let n = simplex_length(q, k)?;
    let p = smallest_divisor(q)?;
    let n_prev = if k == 1 { 0 } else { simplex_length(q, k - 1)? };
    let d = (q / p)
        .checked_mul(p - 1)
        .and_then(|x| x.checked_mul(n_prev))
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow("simplex minimum distance"))?;
    let cardinality = q.checked_pow(k).ok_or(Error::Overflow("cardinality q^k"))?;
    Ok(CodeParameters {
        n,
        k,
        d_min: d,
        cardinality,
    })
}

/// Closed-form [n, k, d] of M_{k,k-1}(q): n = q^{k-1} and
/// d = 1 + (q - q/p - 1) n_{k-1} + n_{k-2}, p the smallest divisor of q.
pub fn macdonald_params(q: u64, k: u32) -> Result<CodeParameters> {
    if k < 3 {
        return Err(Error::DimensionTooSmall { k, min: 3 });
    }
    let p = smallest_divisor(q)?;
    let n = q
        .checked_pow(k - 1)
        .ok_or(Error::Overflow("macdonald length q^(k-1)"))?;
    let n_prev = simplex_length(q, k - 1)?;
    let n_prev2 = simplex_length(q, k - 2)?;
    let d = (q - q / p - 1)
        .checked_mul(n_prev)
        .and_then(|x| x.checked_add(1))
        .and_then(|x| x.checked_add(n_prev2))
        .ok_or(Error::Overflow("macdonald minimum distance"))?;
    let cardinality = q.checked_pow(k).ok_or(Error::Overflow("cardinality q^k"))?;
    Ok(CodeParameters {
        n,
        k,
        d_min: d,
        cardinality,
    })
}

/// Closed-form weight distribution of S_2(q), length n = q + 1:
/// A_0 = 1; A_q = q*phi(q) + q - 1; A_{q - q/d + 1} = d*phi(d) for every
/// divisor d of q other than 1 and q; the remainder of the q^2 codewords
/// sits at weight q + 1. Counts accumulate if two divisors share a weight;
/// zero counts are omitted.
pub fn simplex2_wdist(q: u64) -> Result<WeightDistribution> {
    let ctx = RingContext::new(q)?;
    let n = (q + 1) as usize;
    let phi_q = ctx.unit_count();
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    counts.insert(0, 1);
    accumulate(&mut counts, q as usize, q * phi_q + q - 1);
    let mut proper_sum = 0;
    for &d in ctx.divisors() {
        if d == 1 || d == q {
            continue;
        }
        let count = d * ctx.phi_of(d).expect("divisor");
        accumulate(&mut counts, (q - q / d + 1) as usize, count);
        proper_sum += count;
    }
    let full_weight = q * (q - 1) - (proper_sum + q * phi_q);
    accumulate(&mut counts, n, full_weight);
    WeightDistribution::new(q, 2, n, counts)
}

/// How many codewords of S_2(q) have each zero count n(0): the zero codeword
/// has n(0) = n; d*phi(d) codewords have n(0) = q/d for each divisor d of q
/// other than 1 and q; q*phi(q) + q - 1 codewords have n(0) = 1; the rest
/// have no zero coordinate at all.
pub fn simplex2_zero_profile_census(q: u64) -> Result<BTreeMap<usize, u64>> {
    let ctx = RingContext::new(q)?;
    let n = (q + 1) as usize;
    let phi_q = ctx.unit_count();
    let mut census: BTreeMap<usize, u64> = BTreeMap::new();
    accumulate(&mut census, n, 1);
    accumulate(&mut census, 1, q * phi_q + q - 1);
    let mut proper_sum = 0;
    for &d in ctx.divisors() {
        if d == 1 || d == q {
            continue;
        }
        let count = d * ctx.phi_of(d).expect("divisor");
        accumulate(&mut census, (q / d) as usize, count);
        proper_sum += count;
    }
    accumulate(&mut census, 0, q * (q - 1) - (proper_sum + q * phi_q));
    Ok(census)
}

fn accumulate(map: &mut BTreeMap<usize, u64>, key: usize, count: u64) {
    if count > 0 {
        *map.entry(key).or_insert(0) += count;
    }
}

/// Weight of the M-code word `(alpha, c + alpha*1, ..., c + alpha*(q-1))`
/// from the coordinate profile of c alone. For alpha = 0 this is
/// (q-1)*wt(c); otherwise, with d the additive order of alpha,
/// 1 + (q-1)n - (q/d) * sum_{i=0}^{d-1} n(i*alpha) + n(0), which for unit
/// alpha reduces to 1 + (q-2)n + n(0).
pub fn macdonald32_codeword_weight(
    profile: &CoordinateProfile,
    alpha: u64,
    ctx: &RingContext,
) -> usize {
    debug_assert_eq!(profile.q(), ctx.q());
    let q = ctx.q();
    let alpha = alpha % q;
    let n = profile.len();
    if alpha == 0 {
        return (q - 1) as usize * (n - profile.zeros());
    }
    let d = ctx.additive_order(alpha);
    let orbit: usize = (0..d).map(|i| profile.count_of(i * alpha % q)).sum();
    1 + (q - 1) as usize * n + profile.zeros() - (q / d) as usize * orbit
}

/// Weight of the S-code word `(c, alpha, c + alpha*1, ..., c + alpha*(q-1))`
/// from the coordinate profile of c alone. For alpha = 0 this is q*wt(c);
/// otherwise 1 + qn - (q/d) * sum_{i=0}^{d-1} n(i*alpha), which for unit
/// alpha reduces to 1 + (q-1)n independently of c.
pub fn simplex3_codeword_weight(
    profile: &CoordinateProfile,
    alpha: u64,
    ctx: &RingContext,
) -> usize {
    debug_assert_eq!(profile.q(), ctx.q());
    let q = ctx.q();
    let alpha = alpha % q;
    let n = profile.len();
    if alpha == 0 {
        return q as usize * (n - profile.zeros());
    }
    let d = ctx.additive_order(alpha);
    let orbit: usize = (0..d).map(|i| profile.count_of(i * alpha % q)).sum();
    1 + q as usize * n - (q / d) as usize * orbit
}

/// Weight distribution of M_{3,2}(q) by the formula path: iterate every
/// `(c, alpha)` with c in S_2(q) and alpha in Z_q and accumulate
/// [`macdonald32_codeword_weight`]. Needs q^2 <= cap to stream S_2(q).
pub fn macdonald32_wdist(q: u64, cap: u64) -> Result<WeightDistribution> {
    let ctx = RingContext::new(q)?;
    let counts = profile_sweep(&ctx, cap, macdonald32_codeword_weight)?;
    WeightDistribution::new(q, 3, (q * q) as usize, counts)
}

/// Weight distribution of S_3(q) by the formula path, same sweep as
/// [`macdonald32_wdist`] with the S-code weight formula.
pub fn simplex3_wdist(q: u64, cap: u64) -> Result<WeightDistribution> {
    let ctx = RingContext::new(q)?;
    let counts = profile_sweep(&ctx, cap, simplex3_codeword_weight)?;
    WeightDistribution::new(q, 3, (q * q + q + 1) as usize, counts)
}

fn profile_sweep(
    ctx: &RingContext,
    cap: u64,
    weight_of: fn(&CoordinateProfile, u64, &RingContext) -> usize,
) -> Result<BTreeMap<usize, u64>> {
    let q = ctx.q();
    let base = simplex_generator(q, 2)?;
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for (_, c) in base.codewords(cap)? {
        let profile = c.coordinate_profile();
        for alpha in 0..q {
            *counts.entry(weight_of(&profile, alpha, ctx)).or_insert(0) += 1;
        }
    }
    Ok(counts)
}

/// Case-wise minimum weights of M_{k,k-1}(q).
///
/// The unit-case minimum uses the true minimum zero count over all of
/// S_{k-1}(q), found by scanning profiles (not the constant 1: composite q
/// admit codewords without any zero coordinate). The non-unit case filters
/// the scan to codewords whose coordinates all lie in the order-p subgroup,
/// i.e. multiples of q/p; that set always contains p times any single row,
/// so it is never empty.
pub fn macdonald_case_minima(q: u64, k: u32, cap: u64) -> Result<CaseMinima> {
    if k < 3 {
        return Err(Error::DimensionTooSmall { k, min: 3 });
    }
    let ctx = RingContext::new(q)?;
    let p = ctx.p_smallest();
    let sub_params = simplex_params(q, k - 1)?;
    let n_prev = sub_params.n;
    let subgroup_step = q / p;

    let mut min_zeros_all = usize::MAX;
    let mut min_zeros_subgroup = usize::MAX;
    let generator = simplex_generator(q, k - 1)?;
    for (_, c) in generator.codewords(cap)? {
        let zeros = c.len() - c.hamming_weight();
        min_zeros_all = min_zeros_all.min(zeros);
        if p != q && c.coords().iter().all(|&x| x % subgroup_step == 0) {
            min_zeros_subgroup = min_zeros_subgroup.min(zeros);
        }
    }

    let min_alpha_zero = (q - 1) * sub_params.d_min;
    let min_alpha_unit = 1 + (q - 2) * n_prev + min_zeros_all as u64;
    let min_alpha_nonunit = if p == q {
        None
    } else {
        Some(1 + (q - q / p - 1) * n_prev + min_zeros_subgroup as u64)
    };
    Ok(CaseMinima {
        q,
        k,
        min_alpha_zero,
        min_alpha_unit,
        min_alpha_nonunit,
        theorem_value: macdonald_params(q, k)?.d_min,
    })
}

/// The two published Z_4 weight distributions kept as regression anchors:
/// `"M32_Z4"` for the MacDonald code M_{3,2}(4) and `"S3_Z4"` for the
/// simplex code S_3(4).
pub fn reference_table(label: &str) -> Result<ReferenceTable> {
    let (name, q, k, n, entries): (_, u64, u32, usize, &[(usize, u64)]) = match label {
        "M32_Z4" => (
            "M32_Z4",
            4,
            3,
            16,
            &[
                (0, 1),
                (7, 1),
                (8, 2),
                (9, 2),
                (11, 5),
                (12, 33),
                (13, 12),
                (14, 2),
                (15, 4),
                (16, 2),
            ],
        ),
        "S3_Z4" => (
            "S3_Z4",
            4,
            3,
            21,
            &[
                (0, 1),
                (11, 4),
                (12, 2),
                (16, 43),
                (17, 8),
                (19, 4),
                (20, 2),
            ],
        ),
        other => return Err(Error::UnknownReferenceTable(other.to_string())),
    };
    let distribution = WeightDistribution::new(q, k, n, entries.iter().copied().collect())?;
    Ok(ReferenceTable {
        label: name,
        distribution,
    })
}
