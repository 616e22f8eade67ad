//! Rate estimation, tail-sum sandwich bounds, inequality verification,
//! second-derivative sign certificates, and the discrepancy report.
//!
//! Directions of the published inequalities are treated as hypotheses: the
//! verifier measures which side of Γ each approximant falls on and reports
//! agreement with the published direction as data, never asserting it.

use crate::approx::{residual, ApproxError, ApproximantDef};
use crate::correction::{log_terms, mc_rational, Family};
use crate::interval::{Iv, IvError};
use crate::kernel::{rat, rat_int, rat_pow, rat_string, Poly, Rat, RatFn};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("enclosure too wide at the requested precision: {0}")]
    WidthExceeded(String),
    #[error("no such theorem: {0}")]
    BadTheorem(u8),
    #[error(transparent)]
    Approx(#[from] ApproxError),
    #[error("interval arithmetic failed: {0}")]
    Interval(#[from] IvError),
}

/// Which side of Γ(x+1) the approximant falls on: `Gt` means Γ > A.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Lt,
    Gt,
    Undecided,
}

impl Direction {
    pub fn label(&self) -> &'static str {
        match self {
            Direction::Lt => "gamma<approx",
            Direction::Gt => "gamma>approx",
            Direction::Undecided => "undecided",
        }
    }
}

/// Sandwich enclosure of the tail sum Σ_{j≥0} 1/(x+j)^λ:
/// [1/((λ−1)x^(λ−1)), 1/((λ−1)(x−1)^(λ−1))].
pub fn tail_sum_bounds(x: &Rat, lambda: &Rat, p: u32) -> Result<Iv, AnalysisError> {
    if *x <= rat_int(2) {
        return Err(AnalysisError::Domain("tail bound requires x > 2".into()));
    }
    if *lambda <= Rat::one() {
        return Err(AnalysisError::Domain(
            "tail bound requires lambda > 1".into(),
        ));
    }
    let g = p + 16;
    let t = lambda - Rat::one();
    let t_iv = Iv::from_rat(&t, g);
    let end = |base: &Rat| -> Result<Iv, AnalysisError> {
        let pw = Iv::from_rat(base, g).pow(&t_iv, g)?;
        Ok(Iv::from_int(1).div(&t_iv.mul(&pw, g), g)?)
    };
    let lo = end(x)?;
    let hi = end(&(x - Rat::one()))?;
    Ok(Iv::new(lo.lo().clone(), hi.hi().clone()))
}

/// Difference-limit estimation per the generalized limit lemma:
/// if x^λ (E(x) − E(x+1)) → l, then x^(λ−1) E(x) → l/(λ−1).
#[derive(Debug, Clone)]
pub struct RateReport {
    pub def: ApproximantDef,
    pub lambda: i64,
    /// Richardson-extrapolated enclosure of lim x^λ (E(x) − E(x+1))
    pub l_estimate: Iv,
    /// exact |l| from the difference series, when the family has one
    pub l_exact_magnitude: Option<Rat>,
    /// Richardson-extrapolated enclosure of lim x^(λ−1) E(x)
    pub limit_check: Iv,
    pub limit_exact_magnitude: Option<Rat>,
    /// least-squares decay order of |E| over the same grid
    pub mu_estimate: Option<f64>,
}

impl RateReport {
    pub fn to_json(&self) -> Value {
        json!({
            "approximant": self.def.id(),
            "lambda": self.lambda,
            "lEstimate": self.l_estimate.to_json(25),
            "lExactMagnitude": self.l_exact_magnitude.as_ref().map(rat_string),
            "limitCheck": self.limit_check.to_json(25),
            "limitExactMagnitude": self.limit_exact_magnitude.as_ref().map(rat_string),
            "muEstimate": self.mu_estimate,
        })
    }
}

/// The exact leading difference-series coefficient magnitude, when the
/// approximant's family has an exact expansion (corrected families and the
/// base sixth-root formula).
pub fn exact_difference_leading(def: &ApproximantDef) -> Option<(i64, Rat)> {
    let (family, levels) = match def {
        ApproximantDef::Corrected { family, .. } => (*family, def.levels().ok()?),
        ApproximantDef::RamanujanBase => (Family::RamanujanCf, Vec::new()),
        _ => return None,
    };
    let order_guess = if levels.is_empty() {
        5
    } else {
        family.survivor_order(levels.len() - 1)
    };
    let series = crate::correction::expand_difference(family, &levels, order_guess + 2).ok()?;
    let (order, coeff) = series.leading()?;
    Some((order, coeff.abs()))
}

/// Richardson extrapolation with one elimination step over the last pair
/// of samples: for s(x) = l + c/x + O(1/x²) and ratio r = x₂/x₁,
/// (r·s(x₂) − s(x₁))/(r − 1) = l + O(1/x₁²).
fn richardson_last_pair(xs: &[Rat], ss: &[Iv], p: u32) -> Result<Iv, AnalysisError> {
    let n = ss.len();
    if n < 2 {
        return Err(AnalysisError::Domain(
            "rate estimation needs at least two grid points".into(),
        ));
    }
    let r = &xs[n - 1] / &xs[n - 2];
    if r <= Rat::one() {
        return Err(AnalysisError::Domain("grid must be increasing".into()));
    }
    let r_iv = Iv::from_rat(&r, p);
    let num = r_iv.mul(&ss[n - 1], p).sub(&ss[n - 2], p);
    let den = Iv::from_rat(&(r - Rat::one()), p);
    Ok(num.div(&den, p)?)
}

pub fn mortici_estimate(
    def: &ApproximantDef,
    lambda: i64,
    grid: &[Rat],
    p: u32,
) -> Result<RateReport, AnalysisError> {
    if grid.iter().any(|x| *x < rat_int(10)) {
        return Err(AnalysisError::Domain(
            "rate grid points must be >= 10".into(),
        ));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(AnalysisError::Domain("grid must be increasing".into()));
    }
    let g = p + 16;
    let mut s_vals = Vec::new(); // x^lambda (E(x) - E(x+1))
    let mut t_vals = Vec::new(); // x^(lambda-1) E(x)
    let mut e_samples = Vec::new();
    for x in grid {
        let e_here = residual(def, x, g)?.e;
        let e_next = residual(def, &(x + Rat::one()), g)?.e;
        let f = e_here.sub(&e_next, g);
        let xl = Iv::from_rat(&rat_pow(x, lambda), g);
        let xl1 = Iv::from_rat(&rat_pow(x, lambda - 1), g);
        s_vals.push(xl.mul(&f, g));
        t_vals.push(xl1.mul(&e_here, g));
        e_samples.push((x.clone(), e_here));
    }
    let l_estimate = richardson_last_pair(grid, &s_vals, g)?;
    let limit_check = richardson_last_pair(grid, &t_vals, g)?;
    for (name, iv) in [("l", &l_estimate), ("limit", &limit_check)] {
        let w = iv.width(64);
        let m = iv.midpoint().abs();
        if iv.contains_zero() || w.cmp_val(&m) != Ordering::Less {
            return Err(AnalysisError::WidthExceeded(format!(
                "{name} estimate for {} at p={p}: width {} vs midpoint {}; increase precision",
                def.id(),
                w.to_decimal(5, crate::interval::Dir::Up),
                m.to_decimal(5, crate::interval::Dir::Up),
            )));
        }
    }
    let exact = exact_difference_leading(def);
    let (l_exact_magnitude, limit_exact_magnitude) = match exact {
        Some((order, mag)) => {
            let mu = order - 1;
            (Some(mag.clone()), Some(mag / rat_int(mu)))
        }
        None => (None, None),
    };
    let mu_estimate = order_fit_samples(&e_samples).ok();
    Ok(RateReport {
        def: *def,
        lambda,
        l_estimate,
        l_exact_magnitude,
        limit_check,
        limit_exact_magnitude,
        mu_estimate,
    })
}

fn ln_f64(x: &Rat) -> f64 {
    x.numer().to_f64().unwrap_or(f64::MAX).ln() - x.denom().to_f64().unwrap_or(1.0).ln()
}

fn order_fit_samples(samples: &[(Rat, Iv)]) -> Result<f64, AnalysisError> {
    if samples.len() < 3 {
        return Err(AnalysisError::Domain(
            "order fit needs at least three samples".into(),
        ));
    }
    let span = ln_f64(&samples.last().unwrap().0) - ln_f64(&samples[0].0);
    if span < 2.0 * std::f64::consts::LN_10 - 1e-9 {
        return Err(AnalysisError::Domain(
            "order-fit grid must span at least two decades".into(),
        ));
    }
    let mut pts = Vec::new();
    for (x, e) in samples {
        if e.contains_zero() {
            return Err(AnalysisError::WidthExceeded(format!(
                "|E| enclosure at x={x} contains zero; increase precision"
            )));
        }
        let mid = e.midpoint().abs();
        let w = e.width(64);
        if w.cmp_val(&mid) != Ordering::Less {
            return Err(AnalysisError::WidthExceeded(format!(
                "|E| enclosure at x={x} too wide; increase precision"
            )));
        }
        let inv_x = (Iv::from_rat(x, 64).midpoint().to_f64()).recip();
        pts.push((ln_f64(x), inv_x, mid.log2_approx() * std::f64::consts::LN_2));
    }
    // least squares for ln|E| = a - mu ln x + b/x; the 1/x regressor absorbs
    // the subleading series term that otherwise biases the slope at the low
    // end of the grid
    let n = pts.len() as f64;
    let (mut slx, mut siv, mut sy) = (0.0, 0.0, 0.0);
    for (lx, iv, y) in &pts {
        slx += lx;
        siv += iv;
        sy += y;
    }
    let (mut a11, mut a12, mut a22, mut b1, mut b2) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for (lx, iv, y) in &pts {
        let dx = lx - slx / n;
        let dv = iv - siv / n;
        let dy = y - sy / n;
        a11 += dx * dx;
        a12 += dx * dv;
        a22 += dv * dv;
        b1 += dx * dy;
        b2 += dv * dy;
    }
    let det = a11 * a22 - a12 * a12;
    if det.abs() < 1e-12 * a11 * a22.max(1.0) {
        // degenerate regressors (e.g. two distinct x only): plain slope
        return Ok(-(b1 / a11));
    }
    let slope = (b1 * a22 - b2 * a12) / det;
    Ok(-slope)
}

/// Least-squares decay order of |E| over a log grid: the negated slope of
/// ln|E| against ln x.
pub fn order_fit(def: &ApproximantDef, grid: &[Rat], p: u32) -> Result<f64, AnalysisError> {
    let mut samples = Vec::new();
    for x in grid {
        samples.push((x.clone(), residual(def, x, p)?.e));
    }
    order_fit_samples(&samples)
}

/// Published inequality metadata per theorem index.
pub struct Theorem {
    pub id: u8,
    pub family: Family,
}

impl Theorem {
    pub fn get(id: u8) -> Result<Theorem, AnalysisError> {
        let family = match id {
            1 => Family::GosperCf,
            2 => Family::GosperProduct,
            3 => Family::RamanujanCf,
            4 => Family::RamanujanMixed,
            other => return Err(AnalysisError::BadTheorem(other)),
        };
        Ok(Theorem { id, family })
    }

    /// The k values the published statement covers.
    pub fn depths(&self) -> Vec<usize> {
        match self.family {
            Family::RamanujanMixed => vec![1],
            _ => vec![0, 1, 2, 3],
        }
    }

    /// Published direction for depth k: `Gt` = claims Γ(x+1) > A(x).
    pub fn published_direction(&self, k: usize) -> Direction {
        match (self.id, k % 2) {
            (1, 0) => Direction::Gt,
            (1, _) => Direction::Lt,
            (2, 0) | (3, 0) => Direction::Lt,
            (2, _) | (3, _) => Direction::Gt,
            (4, _) => Direction::Lt,
            _ => unreachable!(),
        }
    }

    pub fn def(&self, k: usize) -> ApproximantDef {
        ApproximantDef::Corrected {
            family: self.family,
            k,
        }
    }
}

#[derive(Debug, Clone)]
pub struct InequalitySample {
    pub x: Rat,
    pub direction: Direction,
    /// log-space margin: enclosure of ln Γ(x+1) − ln A(x)
    pub margin: Iv,
    pub escalated: bool,
}

#[derive(Debug, Clone)]
pub struct InequalityReport {
    pub theorem: u8,
    pub k: usize,
    pub domain_start: i64,
    pub samples: Vec<InequalitySample>,
    pub published: Direction,
    pub observed: Direction,
    /// None while observed is undecided
    pub agrees: Option<bool>,
}

impl InequalityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "theorem": self.theorem,
            "k": self.k,
            "domainStart": self.domain_start,
            "published": self.published.label(),
            "observed": self.observed.label(),
            "agrees": self.agrees,
            "samples": self.samples.iter().map(|s| json!({
                "x": rat_string(&s.x),
                "direction": s.direction.label(),
                "margin": s.margin.to_json(10),
                "escalated": s.escalated,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Compares the oracle and the approximant at every grid point in log
/// space; a sample is decided when the residual enclosure excludes zero.
/// Undecided samples are retried once at doubled precision.
pub fn verify_inequality(
    theorem: u8,
    k: usize,
    grid: &[Rat],
    p: u32,
) -> Result<InequalityReport, AnalysisError> {
    let thm = Theorem::get(theorem)?;
    if !thm.depths().contains(&k) {
        return Err(AnalysisError::Domain(format!(
            "theorem {theorem} makes no claim at depth {k}"
        )));
    }
    let def = thm.def(k);
    let start = def.valid_domain();
    if let Some(x) = grid.iter().find(|x| **x < rat_int(start)) {
        return Err(AnalysisError::Domain(format!(
            "grid point {x} below the stated domain x >= {start}"
        )));
    }
    let mut samples = Vec::new();
    for x in grid {
        let mut escalated = false;
        let mut e = residual(&def, x, p)?.e;
        let mut direction = decide(&e);
        if direction == Direction::Undecided {
            escalated = true;
            e = residual(&def, x, 2 * p)?.e;
            direction = decide(&e);
        }
        samples.push(InequalitySample {
            x: x.clone(),
            direction,
            margin: e,
            escalated,
        });
    }
    let mut observed = Direction::Undecided;
    let mut uniform = true;
    for s in &samples {
        match (s.direction, observed) {
            (Direction::Undecided, _) => uniform = false,
            (d, Direction::Undecided) => observed = d,
            (d, o) if d != o => uniform = false,
            _ => {}
        }
    }
    if !uniform {
        observed = Direction::Undecided;
    }
    let published = thm.published_direction(k);
    let agrees = match observed {
        Direction::Undecided => None,
        d => Some(d == published),
    };
    Ok(InequalityReport {
        theorem,
        k,
        domain_start: start,
        samples,
        published,
        observed,
        agrees,
    })
}

fn decide(e: &Iv) -> Direction {
    if e.lo().is_positive() {
        Direction::Gt
    } else if e.hi().is_negative() {
        Direction::Lt
    } else {
        Direction::Undecided
    }
}

/// Exact second derivative of the difference function
/// f(x) = E(x) − E(x+1) = −1 + x ln(1+1/x) + Σ c·ln(G(x+1)/G(x)):
/// f''(x) = −1/(x(1+x)²) + Σ c·[(G'/G)'(x+1) − (G'/G)'(x)].
pub fn second_difference_rational(def: &ApproximantDef) -> Result<RatFn, AnalysisError> {
    let family = match def {
        ApproximantDef::Corrected { family, .. } => *family,
        ApproximantDef::RamanujanBase => Family::RamanujanCf,
        ApproximantDef::Gosper => Family::GosperCf,
        other => {
            return Err(AnalysisError::Domain(format!(
                "{} has no log-ratio difference structure",
                other.id()
            )))
        }
    };
    let mc = mc_rational(&def.levels()?);
    // d²/dx² [x ln(1+1/x)] = -1/(x(1+x)^2)
    let mut f2 = RatFn::new(
        Poly::constant(rat_int(-1)),
        Poly::new(vec![Rat::zero(), Rat::one(), rat_int(2), Rat::one()]),
    )
    .expect("fixed nonzero denominator");
    for (c, gfn) in log_terms(family, &mc) {
        let logd = gfn
            .derivative(1)
            .expect("order 1 supported")
            .div(&gfn)
            .map_err(|_| AnalysisError::Domain("zero log argument".into()))?;
        let h = logd.derivative(1).expect("order 1 supported");
        let term = h.taylor_shift(&Rat::one()).sub(&h);
        f2 = f2.add(&term.mul(&RatFn::constant(c)));
    }
    Ok(f2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    AllNonneg,
    AllNonpos,
    Inconclusive,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::AllNonneg => "ALL_NONNEG",
            Verdict::AllNonpos => "ALL_NONPOS",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

/// One-signed-coefficient certificate for a rational function on [a, ∞):
/// Taylor-shift numerator and denominator to a; if the denominator's
/// shifted coefficients are one-signed (positive) and the numerator's are
/// one-signed, the sign of the function on (a, ∞) is certified.
#[derive(Debug, Clone)]
pub struct PositivityCertificate {
    pub shift: Rat,
    pub numerator_shifted: Poly,
    pub denominator_positive: bool,
    pub verdict: Verdict,
}

impl PositivityCertificate {
    pub fn to_json(&self) -> Value {
        json!({
            "shift": rat_string(&self.shift),
            "denominatorPositive": self.denominator_positive,
            "verdict": self.verdict.label(),
            "numeratorShiftedDegree": self.numerator_shifted.degree(),
        })
    }
}

pub fn positivity_certificate(rf: &RatFn, a: &Rat) -> PositivityCertificate {
    // denominators are monic after normalization, so one-signed shifted
    // coefficients certify positivity on (a, ∞)
    let den_shifted = rf.den().taylor_shift(a);
    let denominator_positive = den_shifted.coeffs_one_signed(true);
    let numerator_shifted = rf.num().taylor_shift(a);
    let verdict = if !denominator_positive {
        Verdict::Inconclusive
    } else if numerator_shifted.coeffs_one_signed(true) {
        Verdict::AllNonneg
    } else if numerator_shifted.coeffs_one_signed(false) {
        Verdict::AllNonpos
    } else {
        Verdict::Inconclusive
    };
    PositivityCertificate {
        shift: a.clone(),
        numerator_shifted,
        denominator_positive,
        verdict,
    }
}

/// Deduced sign of E on [a, ∞) from the sign of f'' via the telescoping
/// chain: sign(f'') fixes the monotonicity of f', whose limit is 0, which
/// fixes the sign of f', hence the monotonicity and sign of f, and
/// E(x) = Σ_{j≥0} f(x+j) inherits f's sign.
pub fn telescoping_conclusion(verdict: Verdict) -> Direction {
    match verdict {
        Verdict::AllNonneg => Direction::Gt,
        Verdict::AllNonpos => Direction::Lt,
        Verdict::Inconclusive => Direction::Undecided,
    }
}

/// Geometric sample grid of exact rationals: `count` points from start to
/// stop, rounded to integers above 16 and to hundredths below.
pub fn log_grid(start: &Rat, stop: &Rat, count: usize) -> Vec<Rat> {
    assert!(count >= 2 && start < stop);
    let a = ln_f64(start);
    let b = ln_f64(stop);
    let mut out: Vec<Rat> = Vec::new();
    for i in 0..count {
        let t = a + (b - a) * i as f64 / (count - 1) as f64;
        let v = t.exp();
        let q = if v >= 16.0 {
            rat_int(v.round() as i64)
        } else {
            rat((v * 100.0).round() as i64, 100)
        };
        if out.last() != Some(&q) {
            out.push(q);
        }
    }
    out
}

/// Published reference data the discrepancy report compares against.
pub mod published {
    /// (family id, per-level named constants as exact strings)
    pub const CONSTANTS: &[(&str, &[(&str, &str)])] = &[
        (
            "gosper-cf",
            &[
                ("kappa_0", "1/72"),
                ("lambda_0", "31/90"),
                ("kappa_1", "5929/32400"),
                ("lambda_1", "481937/3735270"),
                ("kappa_2", "76899172249/248039857296"),
                ("lambda_2", "7745462509019287/19149278075101482"),
                ("kappa_3", "786873417270631211749921/851541507731717527392144"),
                (
                    "lambda_3",
                    "2098335745817751685364201067279071/30311088872486921466334781589254970",
                ),
            ],
        ),
        (
            "gosper-product",
            &[
                ("kappa_0", "-1/144"),
                ("lambda_0", "4007/21600"),
                ("kappa_1", "4394/637875"),
                ("lambda_1", "130311599/15575040"),
                ("kappa_2", "7894414898425/119793516544"),
                ("lambda_2", "-265702682899837009577/34427631789478287360"),
                (
                    "kappa_3",
                    "1897560849252106177858465792/77174813342532578267347147395",
                ),
                (
                    "lambda_3",
                    "30320380455616293004898928163131563244811979/6134364315672065325746652708240298034227200",
                ),
            ],
        ),
        (
            "ramanujan-cf",
            &[
                ("a_0", "-11/240"),
                ("b_0", "79/154"),
                ("a_1", "459733/711480"),
                ("b_1", "-1455925/70798882"),
                ("a_2", "49600874140433/101450127018720"),
                ("b_2", "10259108965771635091/19545564575317443762"),
                (
                    "a_3",
                    "169085305336152527131511003963/101221579151797375403194730976",
                ),
                (
                    "b_3",
                    "-6141448535908002711219920016488834171/203275987838924050801436670299517447102",
                ),
            ],
        ),
        (
            "ramanujan-mixed",
            &[
                ("kappa_0", "-11/240"),
                ("lambda_0", "79/154"),
                ("kappa_1", "459733/15523200"),
                ("lambda_10", "71181889/70798882"),
                ("lambda_11", "717183502490887/520777318696096"),
                ("lambda_12", "1118629052995381153799/1958878792277282473920"),
            ],
        ),
    ];

    /// (approximant id, published limit magnitude of lim x^(λ−1) E)
    pub const LIMIT_MAGNITUDES: &[(&str, &str)] = &[
        ("gosper-cf(0)", "5929/4665600"),
        ("ramanujan-base", "11/11520"),
    ];
}

/// Side-by-side comparison of published values against derived/measured
/// ones: constants, limit magnitudes, and inequality directions.
pub fn discrepancy_report(p: u32) -> Result<Value, AnalysisError> {
    // constants: published vs freshly collapsed from the embedded table
    let mut constant_rows = Vec::new();
    for (family_id, consts) in published::CONSTANTS {
        let table = crate::approx::tables::TABLES
            .iter()
            .find(|t| t.family_id == *family_id)
            .expect("all families tabulated");
        let derived: Vec<(&str, &str)> = table
            .levels
            .iter()
            .flat_map(|lv| lv.constants.iter().copied())
            .collect();
        for (i, (name, value)) in consts.iter().enumerate() {
            let got = derived.get(i).copied();
            constant_rows.push(json!({
                "family": family_id,
                "name": name,
                "published": value,
                "derived": got.map(|(_, v)| v),
                "agrees": got == Some((name, value)),
            }));
        }
    }
    // limit magnitudes: published vs exact series and vs measurement
    let mut limit_rows = Vec::new();
    for (id, publ) in published::LIMIT_MAGNITUDES {
        let def = if *id == "ramanujan-base" {
            ApproximantDef::RamanujanBase
        } else {
            ApproximantDef::Corrected {
                family: Family::GosperCf,
                k: 0,
            }
        };
        let (order, mag) = exact_difference_leading(&def).expect("series exists");
        let exact_limit = &mag / rat_int(order - 1);
        let publ_rat = crate::kernel::parse_rat(publ).expect("published constant parses");
        let grid = [rat_int(500), rat_int(1000)];
        let report = mortici_estimate(&def, order, &grid, p)?;
        // one Richardson elimination leaves an O(1/x^2) bias, so compare
        // magnitudes with a relative tolerance rather than containment
        let measured = report.limit_check.midpoint().to_f64().abs();
        let expect = Iv::from_rat(&publ_rat, 64).midpoint().to_f64().abs();
        let measured_matches = expect > 0.0 && ((measured - expect) / expect).abs() < 1e-3;
        limit_rows.push(json!({
            "approximant": id,
            "published": publ,
            "exactFromSeries": rat_string(&exact_limit),
            "agreesExactly": exact_limit == publ_rat,
            "measured": report.limit_check.to_json(20),
            "measuredMagnitudeMatches": measured_matches,
        }));
    }
    // directions: published vs measured on a short log grid per theorem
    let mut direction_rows = Vec::new();
    for thm_id in 1..=4u8 {
        let thm = Theorem::get(thm_id)?;
        for k in thm.depths() {
            let def = thm.def(k);
            let grid = log_grid(&rat_int(def.valid_domain()), &rat_int(10_000), 8);
            let rep = verify_inequality(thm_id, k, &grid, p)?;
            direction_rows.push(json!({
                "theorem": thm_id,
                "k": k,
                "published": rep.published.label(),
                "observed": rep.observed.label(),
                "agrees": rep.agrees,
            }));
        }
    }
    Ok(json!({
        "constants": constant_rows,
        "limits": limit_rows,
        "directions": direction_rows,
    }))
}
