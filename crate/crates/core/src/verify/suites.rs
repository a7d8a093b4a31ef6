//! The check families behind each verification suite.
//!
//! Default ranges: 25 for exact sequence identities, 15-20 for polynomial
//! identities, 6-8 for brute-force oracles, order 12 for the differential
//! equation residuals, 25 for series identities. Brute-force families clamp
//! the requested range to their enumeration guards.

use super::{family, CheckResult, SuiteConfig};
use crate::eulerian;
use crate::exact::{double_factorial_odd, factorial, Poly, Rat};
use crate::lehmer;
use crate::polybernoulli as pb;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fmt_params(n: u32) -> Vec<(String, String)> {
    vec![("max_n".to_string(), n.to_string())]
}

/// a_n = b_n: the antidiagonal sum of poly-Bernoulli numbers equals
/// (2/3)^n p_n(1/4).
pub fn stephan(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let max_n = cfg.effective_n(25, None);
    vec![family("stephan", "a_eq_b", fmt_params(max_n), || {
        for n in 0..=max_n as u64 {
            let a = lehmer::a_seq(n);
            let b = pb::b_sum(n);
            if a != b {
                return Some(format!("n={n}: a_n = {a}, b_n = {b}"));
            }
        }
        None
    })]
}

/// q_n(x) = 2^{n+1} F_{n+1}(x, 1/2).
pub fn q_bivariate(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let max_n = cfg.effective_n(20, None);
    vec![family("qF", "q_eq_scaled_F", fmt_params(max_n), || {
        for n in -1..=max_n as i64 {
            let q = lehmer::pq_polys(n).q;
            let f = lehmer::q_via_eulerian(n);
            if q != f {
                return Some(format!("n={n}: q_n = {q}, 2^(n+1) F_(n+1)(x,1/2) = {f}"));
            }
        }
        None
    })]
}

/// p_n(x) = 2^n sum_k C(n+1,k) F_{n-k}(x,1/2) F_k(x,1/2).
pub fn p_bivariate(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let max_n = cfg.effective_n(15, None);
    vec![family("pF", "p_eq_convolution", fmt_params(max_n), || {
        for n in 0..=max_n as u64 {
            let p = lehmer::pq_polys(n as i64).p;
            let conv = lehmer::p_via_eulerian(n);
            if p != conv {
                return Some(format!("n={n}: p_n = {p}, convolution = {conv}"));
            }
        }
        None
    })]
}

/// Frozen table rows: the small p/q polynomials, the scaled bivariate
/// column, the S_3 bivariate polynomial, and A(3,1).
pub fn table_reproduction(_cfg: &SuiteConfig) -> Vec<CheckResult> {
    let expect_poly = |label: &str, got: &Poly, want: &[i64]| -> Option<String> {
        let want = Poly::from_i64(want);
        (got != &want).then(|| format!("{label}: computed {got}, table says {want}"))
    };

    let p_small = family("tableQ", "p_small", Vec::new(), || {
        let rows: [(i64, &[i64]); 4] = [(-1, &[]), (0, &[1]), (1, &[3]), (2, &[7, 8])];
        for (k, want) in rows {
            if let Some(d) = expect_poly(&format!("p_{k}"), &lehmer::pq_polys(k).p, want) {
                return Some(d);
            }
        }
        None
    });

    let q_small = family("tableQ", "q_small", Vec::new(), || {
        let rows: [(i64, &[i64]); 4] = [(-1, &[1]), (0, &[1]), (1, &[1, 2]), (2, &[1, 10, 4])];
        for (k, want) in rows {
            if let Some(d) = expect_poly(&format!("q_{k}"), &lehmer::pq_polys(k).q, want) {
                return Some(d);
            }
        }
        None
    });

    let q_table = family("tableQ", "q_table", Vec::new(), || {
        let rows: [(i64, &[i64]); 2] = [(3, &[1, 36, 60, 8]), (4, &[1, 116, 516, 296, 16])];
        for (k, want) in rows {
            if let Some(d) = expect_poly(&format!("q_{k}"), &lehmer::pq_polys(k).q, want) {
                return Some(d);
            }
        }
        None
    });

    let f_table = family("tableQ", "scaled_F_table", Vec::new(), || {
        let rows: [(u64, &[i64]); 6] = [
            (0, &[1]),
            (1, &[1]),
            (2, &[1, 2]),
            (3, &[1, 10, 4]),
            (4, &[1, 36, 60, 8]),
            (5, &[1, 116, 516, 296, 16]),
        ];
        for (n, want) in rows {
            let scaled = eulerian::bivariate_at_y(n as usize, &Rat::new(1, 2))
                .scalar_mul(&Rat::from_int(2).pow(n as i64));
            if let Some(d) = expect_poly(&format!("2^{n} F_{n}(x,1/2)"), &scaled, want) {
                return Some(d);
            }
        }
        None
    });

    let f3 = family("tableQ", "F3_bivariate", Vec::new(), || {
        use crate::exact::BiPoly;
        let want = BiPoly::monomial(Rat::one(), 0, 3)
            + BiPoly::monomial(Rat::from_int(3), 1, 2)
            + BiPoly::monomial(Rat::one(), 2, 1)
            + BiPoly::monomial(Rat::one(), 1, 1);
        let got = eulerian::bivariate(3);
        (got != want).then(|| format!("F_3: computed {got}, expected {want}"))
    });

    let a31 = family("tableQ", "eulerian_number", Vec::new(), || {
        let got = eulerian::eulerian_number(3, 1);
        (got != 4.into()).then(|| format!("A(3,1): computed {got}, expected 4"))
    });

    vec![p_small, q_small, q_table, f_table, f3, a31]
}

/// ((2xt-1) d/dt + 2x(1-x) d/dx + 1) Q = 0 to the truncation order.
pub fn ode_q(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let order = cfg.effective_n(12, None).max(1);
    vec![family(
        "odeQ",
        "q_ode_residual",
        fmt_params(order),
        move || {
            for (n, r) in lehmer::q_ode_residual(order as usize).iter().enumerate() {
                if !r.is_zero() {
                    return Some(format!("t^{n} coefficient of residual is {r}, expected 0"));
                }
            }
            None
        },
    )]
}

/// ((4 - e^t) d/dt - 2) A = 3 e^t to the truncation order.
pub fn ode_a(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let order = cfg.effective_n(12, None).max(1);
    vec![family(
        "odeA",
        "a_ode_residual",
        fmt_params(order),
        move || {
            let r = lehmer::a_ode_residual(order as usize);
            (!r.is_zero()).then(|| format!("residual {r}, expected 0"))
        },
    )]
}

/// sum_k (-1)^k B_{n-k}^{(-k)} = 0 for positive n.
pub fn alternating(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let max_n = cfg.effective_n(25, None);
    vec![family(
        "altsum",
        "alternating_zero",
        fmt_params(max_n),
        || {
            for n in 1..=max_n as u64 {
                let s = pb::alternating_sum(n);
                if !s.is_zero() {
                    return Some(format!("n={n}: alternating sum = {s}, expected 0"));
                }
            }
            None
        },
    )]
}

/// Independent-route agreement: poly-Bernoulli EGF vs Stirling form, and
/// the bivariate Eulerian recursion vs brute-force enumeration.
pub fn routes(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let max_nk = cfg.effective_n(10, None);
    let pb_routes = family("routes", "pb_egf_vs_stirling", fmt_params(max_nk), || {
        for n in 0..=max_nk as u64 {
            for k in 0..=max_nk as u64 {
                let egf = pb::poly_bernoulli_egf(n, -(k as i64));
                let stirling = pb::poly_bernoulli_stirling(n, k);
                if egf != stirling {
                    return Some(format!(
                        "n={n} k={k}: EGF route {egf}, Stirling route {stirling}"
                    ));
                }
            }
        }
        None
    });

    let max_brute = cfg.effective_n(8, Some(eulerian::DEFAULT_PERMUTATION_CAP as u32));
    let f_routes = family(
        "routes",
        "F_recursion_vs_brute",
        fmt_params(max_brute),
        || {
            for n in 0..=max_brute as usize {
                let rec = eulerian::bivariate(n);
                let brute = eulerian::bivariate_brute(n).expect("n clamped below guard");
                if rec != brute {
                    return Some(format!("n={n}: recursion {rec}, enumeration {brute}"));
                }
            }
            None
        },
    );

    vec![pb_routes, f_routes]
}

/// 3 c_{n+1} = 2 c_n + sum C(n+1,k) c_k + 3 generates b_n, and the same
/// sequence is a_n.
pub fn recursion(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let max_n = cfg.effective_n(25, None);
    let seq = pb::b_rec_sequence(max_n as u64);
    let seq2 = seq.clone();
    let b_side = family("recursion", "generates_b", fmt_params(max_n), move || {
        for n in 0..=max_n as u64 {
            let rec = &seq[n as usize];
            let sum = pb::b_sum(n);
            if rec != &sum {
                return Some(format!("n={n}: recursion {rec}, antidiagonal sum {sum}"));
            }
            if !rec.is_integer() || rec.is_negative() {
                return Some(format!("n={n}: {rec} is not a non-negative integer"));
            }
        }
        None
    });
    let a_side = family("recursion", "generates_a", fmt_params(max_n), move || {
        for n in 0..=max_n as u64 {
            let rec = &seq2[n as usize];
            let a = lehmer::a_seq(n);
            if rec != &a {
                return Some(format!("n={n}: recursion {rec}, a_n {a}"));
            }
        }
        None
    });
    vec![b_side, a_side]
}

/// The explicit alternating Stirling-sum formula equals b_n.
pub fn explicit(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let max_n = cfg.effective_n(20, None);
    vec![family(
        "explicit",
        "b_explicit_eq_b_sum",
        fmt_params(max_n),
        || {
            for n in 0..=max_n as u64 {
                let e = pb::b_explicit(n);
                let s = pb::b_sum(n);
                if e != s {
                    return Some(format!("n={n}: explicit formula {e}, antidiagonal sum {s}"));
                }
            }
            None
        },
    )]
}

/// Coefficients of the ordinary generating series equal b_0..b_N.
pub fn ogf(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let order = cfg.effective_n(25, None);
    vec![family(
        "ogf",
        "coefficients_eq_b",
        fmt_params(order),
        || {
            let series = pb::bn_ogf_series(order as usize);
            for n in 0..=order as usize {
                let c = series.coeff(n);
                let b = pb::b_sum(n as u64);
                if c != b {
                    return Some(format!("coefficient {n}: series {c}, b_n {b}"));
                }
            }
            None
        },
    )]
}

/// The generating-function equality behind the b_n recursion, as formal
/// power series.
pub fn key_equality(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let order = cfg.effective_n(25, None);
    vec![family(
        "keyeq",
        "series_identity",
        fmt_params(order),
        || {
            let (lhs, rhs) = pb::key_equality_sides(order as usize);
            for n in 0..=order as usize {
                let (l, r) = (lhs.coeff(n), rhs.coeff(n));
                if l != r {
                    return Some(format!("coefficient {n}: lhs {l}, rhs {r}"));
                }
            }
            None
        },
    )]
}

/// The four-term relation residual vanishes at seeded random rational
/// points, for each j.
pub fn lemma(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let seed = cfg.seed;
    (0..=6u64)
        .map(|j| {
            let params = vec![
                ("seed".to_string(), seed.to_string()),
                ("points".to_string(), "20".to_string()),
            ];
            family("lemma", &format!("j_{j}"), params, move || {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(j));
                let mut accepted = 0;
                let mut attempts = 0;
                while accepted < 20 {
                    attempts += 1;
                    if attempts > 10_000 {
                        return Some(
                            "rejection sampling failed to find 20 pole-free points".into(),
                        );
                    }
                    let x = Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=9));
                    let y = Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=9));
                    match pb::lemma_3f2_residual(&x, &y, j) {
                        Err(_) => continue, // pole: resample
                        Ok(r) if r.is_zero() => accepted += 1,
                        Ok(r) => {
                            return Some(format!("x={x} y={y} j={j}: residual {r}, expected 0"))
                        }
                    }
                }
                None
            })
        })
        .collect()
}

/// Ascending-to-max counts over S_{n+1} equal b_n.
pub fn ascending_to_max(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let max_n = cfg.effective_n(7, Some(pb::DEFAULT_PERMUTATION_CAP as u32 - 1));
    vec![family("atm", "count_eq_b", fmt_params(max_n), || {
        for n in 0..=max_n as u64 {
            let count = pb::ascending_to_max_count(n as usize + 1).expect("n clamped below guard");
            let b = pb::b_sum(n);
            if Rat::from_bigint(count.clone()) != b {
                return Some(format!("n={n}: ascending-to-max count {count}, b_n {b}"));
            }
        }
        None
    })]
}

/// s-Eulerian polynomials for s = (1, k+1, 2k+1, ...) equal k^n F_n(x, 1/k).
pub fn s_eulerian(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let max_n = cfg.effective_n(6, Some(6));
    (1..=3u64)
        .map(|k| {
            family(
                "sEulerian",
                &format!("k_{k}"),
                fmt_params(max_n),
                move || {
                    for n in 0..=max_n as usize {
                        let bounds: Vec<u64> = (0..n as u64).map(|i| i * k + 1).collect();
                        let lhs = eulerian::s_eulerian(&bounds).expect("bounds below guard");
                        let rhs = eulerian::bivariate_at_y(n, &Rat::new(1, k as i64))
                            .scalar_mul(&Rat::from_int(k as i64).pow(n as i64));
                        if lhs != rhs {
                            return Some(format!(
                                "k={k} n={n}: enumeration {lhs}, scaled bivariate {rhs}"
                            ));
                        }
                    }
                    None
                },
            )
        })
        .collect()
}

/// Special evaluations of the bivariate polynomials and of q_n.
pub fn special_values(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();

    let n_small = cfg.effective_n(8, None).min(8);
    out.push(family(
        "special_values",
        "F_at_y_1",
        fmt_params(n_small),
        move || {
            for n in 1..=n_small as usize {
                let a_n = eulerian::bivariate_at_y(n, &Rat::one());
                for k in 0..n {
                    let coeff = a_n.coeff(k);
                    let count = Rat::from_bigint(eulerian::eulerian_number(n, k));
                    if coeff != count {
                        return Some(format!(
                            "n={n} k={k}: coefficient {coeff}, Eulerian number {count}"
                        ));
                    }
                }
            }
            None
        },
    ));

    out.push(family(
        "special_values",
        "F_at_y_neg1",
        fmt_params(n_small),
        move || {
            for n in 0..=n_small as usize {
                let lhs = eulerian::bivariate_at_y(n + 1, &Rat::from_int(-1));
                let rhs = -&Poly::from_i64(&[-1, 1]).pow(n);
                if lhs != rhs {
                    return Some(format!("n={n}: F_(n+1)(x,-1) = {lhs}, -(x-1)^n = {rhs}"));
                }
            }
            None
        },
    ));

    let n_mid = cfg.effective_n(10, None).min(10);
    out.push(family(
        "special_values",
        "F_at_x_1",
        fmt_params(n_mid),
        move || {
            for n in 0..=n_mid as usize {
                let lhs = eulerian::bivariate(n + 1).subst_x(&Rat::one());
                let mut rhs = Poly::from_i64(&[0, 1]);
                for i in 1..=n as i64 {
                    rhs = &rhs * &Poly::from_coeffs(vec![Rat::from_int(i), Rat::one()]);
                }
                if lhs != rhs {
                    return Some(format!(
                        "n={n}: F_(n+1)(1,y) = {lhs}, rising factorial = {rhs}"
                    ));
                }
            }
            None
        },
    ));

    out.push(family(
        "special_values",
        "row_sums",
        fmt_params(n_mid),
        move || {
            for n in 0..=n_mid as u64 {
                let total = eulerian::bivariate_at_y(n as usize, &Rat::one()).eval(&Rat::one());
                let fact = Rat::from_bigint(factorial(n));
                if total != fact {
                    return Some(format!("n={n}: row sum {total}, n! = {fact}"));
                }
            }
            None
        },
    ));

    let n_q = cfg.effective_n(15, None);
    out.push(family(
        "special_values",
        "q_at_1",
        fmt_params(n_q),
        move || {
            for n in 0..=n_q as u64 {
                let got = lehmer::pq_polys(n as i64).q.eval(&Rat::one());
                let want = Rat::from_bigint(double_factorial_odd(n));
                if got != want {
                    return Some(format!("n={n}: q_n(1) = {got}, (2n+1)!! = {want}"));
                }
            }
            None
        },
    ));

    out.push(family("special_values", "egf_identity", Vec::new(), || {
        let samples = [
            (Rat::new(1, 3), Rat::new(1, 2)),
            (Rat::new(2, 5), Rat::new(2, 3)),
            (Rat::new(1, 4), Rat::from_int(3)),
        ];
        for (x0, y0) in samples {
            let lhs = eulerian::egf_from_polynomials(&x0, &y0, 10);
            let rhs = eulerian::egf_closed_form(&x0, &y0, 10);
            for n in 0..=10 {
                let (l, r) = (lhs.coeff(n), rhs.coeff(n));
                if l != r {
                    return Some(format!(
                        "x0={x0} y0={y0} t^{n}: polynomial side {l}, closed form {r}"
                    ));
                }
            }
        }
        None
    }));

    out
}

/// Exact zeta values against Dirichlet partial sums.
pub fn numeric_zeta(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let tol = cfg.effective_tol(1e-9);
    let params = vec![
        ("tolerance".to_string(), format!("{tol:e}")),
        ("terms".to_string(), "60".to_string()),
    ];
    vec![family(
        "numeric_zeta",
        "dirichlet_partial_sums",
        params,
        move || {
            for k in 0..=6u64 {
                let exact = lehmer::zeta_cb_neg(k).to_f64();
                let partial = lehmer::dirichlet_partial_sum(k as i64, 60);
                let diff = (exact - partial).abs();
                if diff > tol {
                    return Some(format!(
                        "k={k}: exact {exact:.15}, partial sum {partial:.15}, |diff| {diff:e}"
                    ));
                }
            }
            None
        },
    )]
}

/// The arcsin closed forms against truncated series, in double precision.
pub fn numeric_egf(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let tol = cfg.effective_tol(1e-10);
    let tol_params = vec![("tolerance".to_string(), format!("{tol:e}"))];
    let mut out = Vec::new();

    let params = tol_params.clone();
    out.push(family("numeric_egf", "lehmer_series", params, move || {
        for k in -1..=5i64 {
            for x in [0.1, 0.25, 0.3, 0.4] {
                let series = lehmer::series_partial_sum(k, x, 80).expect("x in domain");
                let closed = lehmer::closed_form_rhs(k, x).expect("x in domain");
                let diff = (series - closed).abs();
                if diff > tol {
                    return Some(format!(
                        "k={k} x={x}: series {series:.15}, closed form {closed:.15}, |diff| {diff:e}"
                    ));
                }
            }
        }
        None
    }));

    let params = tol_params.clone();
    out.push(family("numeric_egf", "p_egf", params, move || {
        for (x, t) in [(0.2, 0.1), (0.04, 0.3)] {
            let closed = lehmer::p_egf_closed(x, t).expect("point in domain");
            let series = lehmer::p_egf_truncated(x, t, 25);
            let diff = (closed - series).abs();
            if diff > tol {
                return Some(format!(
                    "x={x} t={t}: closed {closed:.15}, truncated {series:.15}, |diff| {diff:e}"
                ));
            }
        }
        None
    }));

    let params = tol_params.clone();
    out.push(family("numeric_egf", "q_egf", params, move || {
        for (x, t) in [(0.2, 0.0), (0.2, 0.1), (0.5, 0.05)] {
            let closed = lehmer::q_egf_closed(x, t).expect("point in domain");
            let series = lehmer::q_egf_truncated(x, t, 25);
            let diff = (closed - series).abs();
            if diff > tol {
                return Some(format!(
                    "x={x} t={t}: closed {closed:.15}, truncated {series:.15}, |diff| {diff:e}"
                ));
            }
        }
        None
    }));

    out.push(family("numeric_egf", "a_egf", tol_params, move || {
        // 25 terms suffice for 1e-10 only at fast-decay points (singularity
        // at t = ln 4); t = 1.0 is checked with the term count its tail needs
        for (t, terms) in [(0.2, 25), (0.5, 25), (1.0, 80)] {
            let closed = lehmer::a_egf_closed(t).expect("point in domain");
            let series = lehmer::a_egf_truncated(t, terms);
            let diff = (closed - series).abs();
            if diff > tol {
                return Some(format!(
                    "t={t} ({terms} terms): closed {closed:.15}, truncated {series:.15}, |diff| {diff:e}"
                ));
            }
        }
        None
    }));

    out
}
