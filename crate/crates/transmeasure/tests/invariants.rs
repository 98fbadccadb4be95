//! Cross-module invariants beyond the acceptance gate: the full-rank regime
//! of the toy matrices, monotonicity of the analytic determinant bound, and
//! the certified determinant-decay comparison.

use num_rational::BigRational;
use num_traits::Zero;
use transmeasure::interdet::{
    det_complex_interval, gamma_entry, lemma3_rhs, toy_rank_check, EntryIndex, Lemma3Config,
    ToyConfig,
};
use transmeasure::numerics::{
    e_const, ln_interval, ln_rat, parse_rational, rat, CertifiedComplex, CertifiedReal,
    PrecisionCeiling,
};

fn ceiling() -> PrecisionCeiling {
    PrecisionCeiling::default()
}

/// When the degree condition of the multiplicity estimate holds for the
/// underlying reduction (bidegree (T, 2 T1), 2 S1 + 1 points, S + 1
/// derivatives), a rank deficiency would contradict it: rank must equal L.
#[test]
fn toy_rank_full_in_the_covered_regime() {
    let configs = [
        (5u64, 3u64, 1u64, 1u64, 2u64, (2i64, 1i64), (1i64, 1i64)),
        (5, 3, 1, 1, 2, (3, 2), (1, 2)),
        (7, 4, 2, 1, 3, (2, 1), (1, 1)),
        (5, 3, 1, 1, 2, (-2, 1), (2, 3)),
    ];
    for (s, s1, t, t1, h, alpha, beta) in configs {
        // (S+1)(2 S1 + 1) > (T + 2 S1 + 1)(2 T1 + 1)
        let lhs = (s + 1) * (2 * s1 + 1);
        let rhs = (t + 2 * s1 + 1) * (2 * t1 + 1);
        assert!(lhs > rhs, "config not in the covered regime");
        let cfg = ToyConfig::new(s, s1, t, t1, h, rat(alpha.0, alpha.1), rat(beta.0, beta.1));
        let report = toy_rank_check(&cfg).unwrap();
        assert_eq!(
            report.rank as u64, report.l,
            "rank deficiency in the covered regime: S={s} S1={s1} T={t} T1={t1}"
        );
        assert!(report.minor.is_some());
    }
}

/// The per-row bound is increasing in M and S and, once L log E outweighs
/// 2 (S+1) log E, decreasing in L.
#[test]
fn analytic_bound_monotonicity_grid() {
    let c = ceiling();
    let bits = 128;
    let e = e_const(192);
    let eps = CertifiedReal::exact(parse_rational("1e-40").unwrap());
    let rhs = |l: u64, m: i64, s: i64| {
        lemma3_rhs(
            &Lemma3Config {
                l,
                e_param: e.clone(),
                m: CertifiedReal::from_int(m),
                s: CertifiedReal::from_int(s),
                epsilon: eps.clone(),
            },
            bits,
            &c,
        )
        .unwrap()
    };
    for l in 2..=8u64 {
        for m in 0..=2i64 {
            for s in 0..=2i64 {
                let base = rhs(l, m, s);
                assert!(rhs(l, m + 1, s).sub(&base).certainly_positive());
                assert!(rhs(l, m, s + 1).sub(&base).certainly_positive());
                if (l as i64) > 2 * (s + 1) {
                    assert!(
                        rhs(l + 1, m, s).sub(&base).certainly_negative(),
                        "L step at L={l}, S={s}"
                    );
                }
            }
        }
    }
}

/// Certified determinant decay: for toy matrices of analytic entries,
/// (1/L) log |det| stays below the per-row bound with M taken as the
/// certified maximum of the entry logs.
#[test]
fn determinant_decay_on_toy_configurations() {
    let c = ceiling();
    let bits = 160;
    let theta = CertifiedComplex::exact_rational(&rat(1, 1));
    // (T, T1, sigma range, s range, E as a power of e)
    let configs: [(u64, i64, u64, i64, u32); 3] = [
        (1, 1, 1, 2, 1), // L = 6, rows (sigma, s) in 2 x 3
        (2, 1, 2, 2, 1), // L = 9, rows 3 x 3
        (1, 1, 1, 2, 2), // L = 6 against E = e^2
    ];
    for (t_max, t1_max, sigma_max, s_max, e_pow) in configs {
        let h = 2u64;
        let functions: Vec<(u64, i64)> = (0..=t_max)
            .flat_map(|tau| (-t1_max..=t1_max).map(move |t| (tau, t)))
            .collect();
        let l = functions.len();
        let columns: Vec<(u64, i64)> = (0..=sigma_max)
            .flat_map(|sigma| (0..=s_max).map(move |s| (sigma, s)))
            .collect();
        assert_eq!(columns.len(), l, "row/column bookkeeping");

        let mut matrix = Vec::with_capacity(l);
        let mut max_abs_hi = BigRational::zero();
        for &(tau, t) in &functions {
            let mut row = Vec::with_capacity(l);
            for &(sigma, s) in &columns {
                let idx = EntryIndex { tau, t, sigma, s };
                let entry = gamma_entry(&idx, h, &theta, bits).unwrap();
                let hi = entry.modulus(bits).unwrap().hi().clone();
                if hi > max_abs_hi {
                    max_abs_hi = hi;
                }
                row.push(entry);
            }
            matrix.push(row);
        }
        let det = det_complex_interval(&matrix);
        let det_hi = det.modulus(bits).unwrap().hi().clone();

        let e_param = e_const(192).powi(e_pow);
        let m_bound = ln_rat(&max_abs_hi, bits).unwrap();
        let s_bound = CertifiedReal::from_int(sigma_max as i64);
        let rhs = lemma3_rhs(
            &Lemma3Config {
                l: l as u64,
                e_param,
                m: m_bound,
                s: s_bound,
                epsilon: CertifiedReal::exact(parse_rational("1e-60").unwrap()),
            },
            bits,
            &c,
        )
        .unwrap();
        if det_hi.is_zero() {
            continue; // vanishing determinant satisfies any upper bound
        }
        let lhs = ln_rat(&det_hi, bits).unwrap().scale(&rat(1, l as i64));
        assert!(
            lhs.hi() <= rhs.lo(),
            "decay violated at T={t_max} T1={t1_max}: lhs={lhs} rhs={rhs}"
        );
    }
}

/// Requesting a smaller width never yields enclosures disjoint from earlier
/// ones, across the transcendental evaluators used by the bound chains.
#[test]
fn refinement_never_disjoint() {
    let mut prev: Option<CertifiedReal> = None;
    for bits in [48u32, 96, 192, 384] {
        let v = ln_interval(&e_const(bits).powi(3), bits).unwrap();
        if let Some(p) = &prev {
            assert!(p.overlaps(&v));
        }
        prev = Some(v);
    }
}
