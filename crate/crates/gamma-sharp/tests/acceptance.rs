//! Acceptance suite: ten end-to-end checks, one test and one PASS line
//! each. Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use gamma_sharp::analysis::{
    exact_difference_leading, log_grid, mortici_estimate, order_fit, positivity_certificate,
    published, second_difference_rational, tail_sum_bounds, verify_inequality, Direction,
    Theorem, Verdict,
};
use gamma_sharp::approx::ApproximantDef;
use gamma_sharp::correction::{derive_family, expand_difference, Family};
use gamma_sharp::interval::Iv;
use gamma_sharp::kernel::{parse_rat, rat_int, Poly, Rat};
use gamma_sharp::oracle::{oracle_gamma, oracle_lngamma, theta_probe};
use num_traits::One;
use rand::{Rng, SeedableRng};
use std::cmp::Ordering;

fn q(s: &str) -> Rat {
    parse_rat(s).unwrap()
}

/// Derives a family from scratch and checks every constant against the
/// published value, by exact rational equality.
fn check_family_constants(family: Family) {
    let (_, expected) = published::CONSTANTS
        .iter()
        .find(|(id, _)| Family::parse(id) == Some(family))
        .expect("family has published constants");
    let rec = derive_family(family, family.max_depth(), false).expect("derivation succeeds");
    let derived: Vec<(&str, &Rat)> = rec
        .levels
        .iter()
        .flat_map(|lr| lr.constants.iter().map(|c| (c.name.as_str(), &c.value)))
        .collect();
    assert_eq!(derived.len(), expected.len(), "constant count for {}", family.id());
    for ((name, value), (want_name, want_value)) in derived.iter().zip(expected.iter()) {
        assert_eq!(name, want_name);
        assert_eq!(
            **value,
            q(want_value),
            "{} {} mismatch",
            family.id(),
            name
        );
    }
}

#[test]
fn criterion_01_exact_constants_first_family() {
    check_family_constants(Family::GosperCf);
    println!("PASS criterion 1: first continued-fraction family reproduces all published constants exactly (k <= 3)");
}

#[test]
fn criterion_02_exact_constants_remaining_families() {
    check_family_constants(Family::GosperProduct);
    check_family_constants(Family::RamanujanCf);
    check_family_constants(Family::RamanujanMixed);
    println!("PASS criterion 2: product, second continued-fraction, and mixed families reproduce all published constants exactly");
}

#[test]
fn criterion_03_base_difference_coefficients() {
    let s = expand_difference(Family::GosperCf, &[], 6).unwrap();
    assert_eq!(s.coeff(3), q("-1/72"));
    assert_eq!(s.coeff(4), q("17/540"));
    println!("PASS criterion 3: uncorrected difference series has -1/72 at x^-3 and 17/540 at x^-4, exactly");
}

fn within_rel(measured: f64, expect: &Rat, tol: f64) -> bool {
    let e = Iv::from_rat(expect, 64).midpoint().to_f64().abs();
    e > 0.0 && ((measured.abs() - e) / e).abs() < tol
}

#[test]
fn criterion_04_difference_limit_worked_examples() {
    let grid = [rat_int(500), rat_int(1000)];
    for (def, mag, limit) in [
        (ApproximantDef::RamanujanBase, "11/2880", "11/11520"),
        (
            ApproximantDef::Corrected { family: Family::GosperCf, k: 0 },
            "5929/1166400",
            "5929/4665600",
        ),
    ] {
        let (order, coeff) = exact_difference_leading(&def).unwrap();
        assert_eq!(order, 5, "{}", def.id());
        assert_eq!(coeff, q(mag), "{}", def.id());
        let rep = mortici_estimate(&def, 5, &grid, 128).unwrap();
        let measured = rep.limit_check.midpoint().to_f64();
        assert!(
            within_rel(measured, &q(limit), 0.01),
            "{}: measured {measured} vs {limit}",
            def.id()
        );
    }
    println!("PASS criterion 4: exact leading difference magnitudes at x^-5 and measured x^4*E limits within 1% of the published values");
}

#[test]
fn criterion_05_convergence_orders() {
    let grid = log_grid(&rat_int(100), &rat_int(10_000), 7);
    for def in ApproximantDef::all() {
        let (mu, tol) = match def {
            ApproximantDef::Corrected { family, k } => (
                def.expected_mu() as f64,
                if family == Family::RamanujanMixed && k == 1 { 0.1 } else { 0.05 },
            ),
            _ => continue,
        };
        // deep levels push |E| below ~1e-50 at the top of the grid, so the
        // working precision scales with the expected order
        let p = 128 + 24 * (mu as u32);
        let fit = order_fit(&def, &grid, p).unwrap();
        assert!(
            (fit - mu).abs() < tol,
            "{}: fitted order {fit} vs expected {mu} (tol {tol})",
            def.id()
        );
    }
    println!("PASS criterion 5: fitted decay orders match 2k+4 / 2k+5 / 2k+6 / 10 within tolerance on [1e2, 1e4]");
}

#[test]
fn criterion_06_oracle_correctness() {
    let p = 128;
    // factorials up to 20!
    let mut fact = Rat::one();
    for n in 0..=20i64 {
        if n > 0 {
            fact *= rat_int(n);
        }
        let g = oracle_gamma(&rat_int(n + 1), p).unwrap();
        assert!(g.contains_rat(&fact), "gamma({}) misses {n}!", n + 1);
    }
    // recurrence residual ln G(x+1) - ln G(x) - ln x encloses 0
    for x in ["3/2", "2", "7/3", "10", "101/7", "50"] {
        let x = q(x);
        let lhs = oracle_lngamma(&(&x + Rat::one()), p).unwrap();
        let rhs = oracle_lngamma(&x, p).unwrap();
        let lnx = Iv::from_rat(&x, p).ln(p).unwrap();
        let resid = lhs.sub(&rhs, p).sub(&lnx, p);
        assert!(resid.contains_zero(), "recurrence residual at x={x}");
    }
    // gamma(1/2) contains sqrt(pi) with relative width <= 2^-100
    let g = oracle_gamma(&q("1/2"), p).unwrap();
    let sqrt_pi = gamma_sharp::interval::pi(p + 8).sqrt(p + 8).unwrap();
    assert!(
        g.strict_cmp(&sqrt_pi).is_none(),
        "gamma(1/2) disjoint from sqrt(pi)"
    );
    let rel = g.width(64).to_f64() / g.midpoint().to_f64();
    assert!(rel <= 2f64.powi(-100), "relative width {rel:e}");
    println!("PASS criterion 6: reference enclosures contain n! (n <= 20), satisfy the recurrence, and bracket gamma(1/2) to 2^-100 relative width");
}

#[test]
fn criterion_07_theta_probe() {
    let p = 128;
    let lo = Iv::from_rat(&q("3/10"), p);
    let hi = Iv::from_rat(&Rat::one(), p);
    let mut last = None;
    for i in 0..=14u32 {
        let x = rat_int(1i64 << i);
        let th = theta_probe(&x, p).unwrap();
        assert_eq!(th.strict_cmp(&lo), Some(Ordering::Greater), "theta({x}) vs 3/10");
        assert_eq!(th.strict_cmp(&hi), Some(Ordering::Less), "theta({x}) vs 1");
        last = Some(th);
    }
    let gap = (1.0 - last.unwrap().midpoint().to_f64()).abs();
    assert!(gap < 1e-3, "theta(2^14) is {gap:e} away from 1");
    println!("PASS criterion 7: remainder parameter stays strictly inside (3/10, 1) on x = 1..2^14 and is within 1e-3 of 1 at the top");
}

#[test]
fn criterion_08_inequality_verification() {
    let p = 128; // verify escalates once to 256 when a sample is undecided
    let mut observed: Vec<(u8, usize, Direction, Option<bool>)> = Vec::new();
    for thm_id in 1..=4u8 {
        let thm = Theorem::get(thm_id).unwrap();
        for k in thm.depths() {
            let def = thm.def(k);
            let grid = log_grid(&rat_int(def.valid_domain()), &rat_int(10_000), 40);
            let rep = verify_inequality(thm_id, k, &grid, p).unwrap();
            assert!(
                rep.samples.iter().all(|s| s.direction != Direction::Undecided),
                "theorem {thm_id} k={k}: undecided sample at p <= 256"
            );
            assert_ne!(
                rep.observed,
                Direction::Undecided,
                "theorem {thm_id} k={k}: non-uniform direction"
            );
            observed.push((thm_id, k, rep.observed, rep.agrees));
        }
    }
    // alternation between consecutive depths within each continued-fraction
    // family (theorems 1-3)
    for thm_id in 1..=3u8 {
        let dirs: Vec<Direction> = observed
            .iter()
            .filter(|(t, _, _, _)| *t == thm_id)
            .map(|(_, _, d, _)| *d)
            .collect();
        for w in dirs.windows(2) {
            assert_ne!(w[0], w[1], "theorem {thm_id}: no alternation between depths");
        }
    }
    // agreement with the published directions is reported, not asserted
    let mut agree = 0;
    let mut disagree = 0;
    for (t, k, d, a) in &observed {
        match a {
            Some(true) => agree += 1,
            Some(false) => {
                disagree += 1;
                println!(
                    "  note: theorem {t} depth {k} measured {} against the published direction",
                    d.label()
                );
            }
            None => unreachable!("all samples decided"),
        }
    }
    println!("PASS criterion 8: all 13 (theorem, depth) pairs decided and uniform on 40-point grids; alternation holds; {agree} agree / {disagree} differ from the published directions");
}

#[test]
fn criterion_09_positivity_certificate() {
    let def = ApproximantDef::Corrected { family: Family::GosperCf, k: 0 };
    let f2 = second_difference_rational(&def).unwrap();
    // denominator divisible by x (1+x)^2 (31+90x)^2 (121+90x)^2
    let mut divisor = Poly::x();
    let square = |p: &Poly| p.mul(p);
    divisor = divisor.mul(&square(&Poly::new(vec![q("1"), q("1")])));
    divisor = divisor.mul(&square(&Poly::new(vec![q("31"), q("90")])));
    divisor = divisor.mul(&square(&Poly::new(vec![q("121"), q("90")])));
    let (_, rem) = f2.den().div_rem(&divisor);
    assert!(rem.is_zero(), "denominator not divisible by the expected factor");
    let cert = positivity_certificate(&f2, &Rat::one());
    assert_ne!(cert.verdict, Verdict::Inconclusive);
    println!(
        "PASS criterion 9: second-difference denominator has the expected factorization and the shifted numerator is one-signed ({})",
        cert.verdict.label()
    );
}

#[test]
fn criterion_10_tail_sum_sandwich() {
    let p = 96;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    for case in 0..50 {
        // x in [3, 100] with denominator up to 7; lambda in (1, 6]
        let x = rat_int(rng.gen_range(3..=100)) + Rat::new(rng.gen_range(0..7).into(), 7.into());
        let lambda = Rat::one() + Rat::new(rng.gen_range(1..=50).into(), 10.into());
        let bounds = tail_sum_bounds(&x, &lambda, p).unwrap();
        // numerical sum: 150 leading terms plus a rigorous remainder
        let n = 150i64;
        let lam_iv = Iv::from_rat(&lambda, p);
        let mut summed = Iv::from_int(0);
        for j in 0..n {
            let t = Iv::from_rat(&(&x + rat_int(j)), p);
            let term = Iv::from_int(1).div(&t.pow(&lam_iv, p).unwrap(), p).unwrap();
            summed = summed.add(&term, p);
        }
        let rest = tail_sum_bounds(&(&x + rat_int(n)), &lambda, p).unwrap();
        let total = summed.add(&rest, p);
        // both enclose the exact sum, so they must overlap
        assert!(
            bounds.strict_cmp(&total).is_none(),
            "case {case}: x={x} lambda={lambda}: sum {:?} outside bounds {:?}",
            total.to_json(12),
            bounds.to_json(12)
        );
    }
    println!("PASS criterion 10: 50 randomized tail sums fall inside their sandwich bounds");
}
