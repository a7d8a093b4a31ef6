//! Acceptance suite: every identity the crate exists to verify, pinned at
//! its stated range and tolerance. One test per criterion; each prints a
//! PASS line on success (run with `--nocapture` to see them alongside the
//! harness output).

use cbs_core::eulerian;
use cbs_core::exact::{BiPoly, Poly, Rat};
use cbs_core::lehmer;
use cbs_core::polybernoulli as pb;
use cbs_core::verify::{run_suite, SuiteConfig};

fn p(coeffs: &[i64]) -> Poly {
    Poly::from_i64(coeffs)
}

fn scaled_bivariate(n: u64) -> Poly {
    eulerian::bivariate_at_y(n as usize, &Rat::new(1, 2))
        .scalar_mul(&Rat::from_int(2).pow(n as i64))
}

#[test]
fn criterion_01_paper_table_reproduction() {
    // small p_k and q_k
    assert_eq!(lehmer::pq_polys(-1).p, Poly::zero());
    assert_eq!(lehmer::pq_polys(-1).q, Poly::one());
    assert_eq!(lehmer::pq_polys(0).p, p(&[1]));
    assert_eq!(lehmer::pq_polys(0).q, p(&[1]));
    assert_eq!(lehmer::pq_polys(1).p, p(&[3]));
    assert_eq!(lehmer::pq_polys(1).q, p(&[1, 2]));
    assert_eq!(lehmer::pq_polys(2).p, p(&[7, 8]));
    assert_eq!(lehmer::pq_polys(2).q, p(&[1, 10, 4]));

    // table rows: q_n for n <= 4 and 2^n F_n(x, 1/2) for n <= 5
    let q_rows: [&[i64]; 6] = [
        &[1],
        &[1],
        &[1, 2],
        &[1, 10, 4],
        &[1, 36, 60, 8],
        &[1, 116, 516, 296, 16],
    ];
    for (i, row) in q_rows.iter().enumerate() {
        assert_eq!(
            lehmer::pq_polys(i as i64 - 1).q,
            p(row),
            "q_{}",
            i as i64 - 1
        );
    }
    let f_rows: [&[i64]; 6] = [
        &[1],
        &[1],
        &[1, 2],
        &[1, 10, 4],
        &[1, 36, 60, 8],
        &[1, 116, 516, 296, 16],
    ];
    for (n, row) in f_rows.iter().enumerate() {
        assert_eq!(scaled_bivariate(n as u64), p(row), "2^{n} F_{n}(x,1/2)");
    }

    // F_3(x,y) = y^3 + 3xy^2 + x^2 y + xy
    let f3 = BiPoly::monomial(Rat::one(), 0, 3)
        + BiPoly::monomial(Rat::from_int(3), 1, 2)
        + BiPoly::monomial(Rat::one(), 2, 1)
        + BiPoly::monomial(Rat::one(), 1, 1);
    assert_eq!(eulerian::bivariate(3), f3);

    // A(3,1) = 4
    assert_eq!(eulerian::eulerian_number(3, 1), 4.into());

    println!("criterion 01 (paper-table reproduction, exact): PASS");
}

#[test]
fn criterion_02_zeta_values() {
    let expected = [((1, 3), (2, 9)), ((2, 3), (2, 9)), ((4, 3), (10, 27))];
    for (k, ((rn, rd), (pn, pd))) in expected.into_iter().enumerate() {
        let z = lehmer::zeta_cb_neg(k as u64);
        assert_eq!(z.rational_part, Rat::new(rn, rd), "k={k}");
        assert_eq!(z.pi_sqrt3_part, Rat::new(pn, pd), "k={k}");
    }
    for k in 0..=6u64 {
        let exact = lehmer::zeta_cb_neg(k).to_f64();
        let partial = lehmer::dirichlet_partial_sum(k as i64, 60);
        let diff = (exact - partial).abs();
        assert!(diff < 1e-9, "k={k}: |diff| = {diff:e}");
    }
    println!("criterion 02 (zeta values, exact + 1e-9 numeric): PASS");
}

#[test]
fn criterion_03_q_equals_scaled_bivariate() {
    for n in -1..=20i64 {
        assert_eq!(lehmer::pq_polys(n).q, lehmer::q_via_eulerian(n), "n={n}");
    }
    println!("criterion 03 (q_n = 2^(n+1) F_(n+1)(x,1/2) for -1 <= n <= 20, exact): PASS");
}

#[test]
fn criterion_04_antidiagonal_sum_equals_a() {
    for n in 0..=25u64 {
        assert_eq!(lehmer::a_seq(n), pb::b_sum(n), "n={n}");
    }
    println!("criterion 04 ((2/3)^n p_n(1/4) = sum B for 0 <= n <= 25, exact): PASS");
}

#[test]
fn criterion_05_p_equals_bivariate_convolution() {
    for n in 0..=15u64 {
        assert_eq!(
            lehmer::pq_polys(n as i64).p,
            lehmer::p_via_eulerian(n),
            "n={n}"
        );
    }
    println!("criterion 05 (p_n from bivariate convolution for n <= 15, exact): PASS");
}

#[test]
fn criterion_06_shared_recursion() {
    let seq = pb::b_rec_sequence(25);
    for n in 0..=25u64 {
        assert_eq!(seq[n as usize], pb::b_sum(n), "recursion vs b at n={n}");
        assert_eq!(seq[n as usize], lehmer::a_seq(n), "recursion vs a at n={n}");
    }
    println!("criterion 06 (one recursion generates b_n and a_n, n <= 25, exact): PASS");
}

#[test]
fn criterion_07_explicit_formula() {
    for n in 0..=20u64 {
        assert_eq!(pb::b_explicit(n), pb::b_sum(n), "n={n}");
    }
    println!("criterion 07 (explicit Stirling-sum formula equals b_n, n <= 20, exact): PASS");
}

#[test]
fn criterion_08_ordinary_generating_function() {
    let series = pb::bn_ogf_series(25);
    for n in 0..=25usize {
        assert_eq!(series.coeff(n), pb::b_sum(n as u64), "coefficient {n}");
    }
    println!("criterion 08 (OGF coefficients equal b_0..b_25, exact): PASS");
}

#[test]
fn criterion_09_key_equality_and_lemma() {
    assert!(pb::key_equality_check(25));

    // 20 seeded random rational points per j, poles rejected
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    for j in 0..=6u64 {
        let mut accepted = 0;
        while accepted < 20 {
            let x = Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=9));
            let y = Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=9));
            match pb::lemma_3f2_residual(&x, &y, j) {
                Err(_) => continue,
                Ok(r) => {
                    assert!(r.is_zero(), "x={x} y={y} j={j}: residual {r}");
                    accepted += 1;
                }
            }
        }
    }
    println!("criterion 09 (series identity to order 25 + four-term relation at seeded points, exact): PASS");
}

#[test]
fn criterion_10_alternating_antidiagonal_sum() {
    for n in 1..=25u64 {
        assert_eq!(pb::alternating_sum(n), Rat::zero(), "n={n}");
    }
    println!("criterion 10 (alternating antidiagonal sum vanishes, 1 <= n <= 25, exact): PASS");
}

#[test]
fn criterion_11_oracle_equivalences() {
    // brute-force F_n equals the recursion for n <= 8
    for n in 0..=8usize {
        assert_eq!(
            eulerian::bivariate_brute(n).unwrap(),
            eulerian::bivariate(n),
            "F_{n}"
        );
    }
    // s-Eulerian enumeration equals k^n F_n(x, 1/k) for k in {1,2,3}, n <= 6
    for k in 1..=3u64 {
        for n in 0..=6usize {
            let bounds: Vec<u64> = (0..n as u64).map(|i| i * k + 1).collect();
            let lhs = eulerian::s_eulerian(&bounds).unwrap();
            let rhs = eulerian::bivariate_at_y(n, &Rat::new(1, k as i64))
                .scalar_mul(&Rat::from_int(k as i64).pow(n as i64));
            assert_eq!(lhs, rhs, "k={k} n={n}");
        }
    }
    // ascending-to-max counts over S_{n+1} equal b_n for n <= 7
    for n in 0..=7u64 {
        let count = pb::ascending_to_max_count(n as usize + 1).unwrap();
        assert_eq!(Rat::from_bigint(count), pb::b_sum(n), "n={n}");
    }
    // EGF and Stirling poly-Bernoulli routes agree for n, k <= 10
    for n in 0..=10u64 {
        for k in 0..=10u64 {
            assert_eq!(
                pb::poly_bernoulli_egf(n, -(k as i64)),
                pb::poly_bernoulli_stirling(n, k),
                "n={n} k={k}"
            );
        }
    }
    println!("criterion 11 (all four oracle equivalences, exact): PASS");
}

#[test]
fn criterion_12_numeric_closed_forms_and_odes() {
    // series vs closed form on the fixed grid
    for k in -1..=5i64 {
        for x in [0.1, 0.25, 0.3, 0.4] {
            let series = lehmer::series_partial_sum(k, x, 80).unwrap();
            let closed = lehmer::closed_form_rhs(k, x).unwrap();
            let diff = (series - closed).abs();
            assert!(diff < 1e-10, "k={k} x={x}: |diff| = {diff:e}");
        }
    }
    // P and Q closed forms vs 25-term truncated EGFs
    for (x, t) in [(0.2, 0.1), (0.04, 0.3)] {
        let diff = (lehmer::p_egf_closed(x, t).unwrap() - lehmer::p_egf_truncated(x, t, 25)).abs();
        assert!(diff < 1e-10, "P at x={x} t={t}: |diff| = {diff:e}");
    }
    for (x, t) in [(0.2, 0.0), (0.2, 0.1), (0.5, 0.05)] {
        let diff = (lehmer::q_egf_closed(x, t).unwrap() - lehmer::q_egf_truncated(x, t, 25)).abs();
        assert!(diff < 1e-10, "Q at x={x} t={t}: |diff| = {diff:e}");
    }
    // a-EGF: 25 terms at fast-decay points; t = 1.0 sits near the t = ln 4
    // singularity, so its tail needs 80 terms to support the same tolerance
    for (t, terms) in [(0.2, 25), (0.5, 25), (1.0, 80)] {
        let diff = (lehmer::a_egf_closed(t).unwrap() - lehmer::a_egf_truncated(t, terms)).abs();
        assert!(diff < 1e-10, "a-EGF at t={t}: |diff| = {diff:e}");
    }
    // differential-equation residuals, exact to truncation order 12
    for (n, r) in lehmer::q_ode_residual(12).iter().enumerate() {
        assert!(r.is_zero(), "Q-ODE residual at t^{n}: {r}");
    }
    assert!(lehmer::a_ode_residual(12).is_zero());
    println!("criterion 12 (numeric closed forms at 1e-10 + exact ODE residuals): PASS");
}

#[test]
fn full_verification_suite_passes() {
    let results = run_suite(
        "all",
        &SuiteConfig {
            max_n: Some(15),
            ..Default::default()
        },
    )
    .unwrap();
    let failures: Vec<_> = results.iter().filter(|r| !r.passed).collect();
    assert!(failures.is_empty(), "failing checks: {failures:#?}");
    println!(
        "verification suite (all, max_n = 15): PASS ({} checks)",
        results.len()
    );
}
