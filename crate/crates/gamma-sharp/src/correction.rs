//! Correction functions and the multiple-correction solver.
//!
//! A correction function is a nested/summed stack of fractions with a
//! leading constant and a monic denominator polynomial per level. The
//! solver expands the difference functional of the corrected approximant
//! as an exact series in 1/x and chooses each unknown constant so that the
//! lowest surviving coefficient vanishes, one unknown at a time.

use crate::kernel::{
    base_difference, log_ratio_shift, rat, rat_int, rat_string, Poly, Rat, RatFn, Series,
    SeriesError,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    GosperCf,
    GosperProduct,
    RamanujanCf,
    RamanujanMixed,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::GosperCf,
        Family::GosperProduct,
        Family::RamanujanCf,
        Family::RamanujanMixed,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Family::GosperCf => "gosper-cf",
            Family::GosperProduct => "gosper-product",
            Family::RamanujanCf => "ramanujan-cf",
            Family::RamanujanMixed => "ramanujan-mixed",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "gosper-cf" => Some(Family::GosperCf),
            "gosper-product" => Some(Family::GosperProduct),
            "ramanujan-cf" => Some(Family::RamanujanCf),
            "ramanujan-mixed" => Some(Family::RamanujanMixed),
            _ => None,
        }
    }

    pub fn max_depth(&self) -> usize {
        match self {
            Family::RamanujanMixed => 1,
            _ => 3,
        }
    }

    /// Order of the first coefficient that survives after level k is solved.
    pub fn survivor_order(&self, k: usize) -> i64 {
        match self {
            Family::GosperCf => 2 * k as i64 + 5,
            Family::GosperProduct => 2 * k as i64 + 6,
            Family::RamanujanCf => 2 * k as i64 + 7,
            Family::RamanujanMixed => {
                if k == 0 {
                    7
                } else {
                    11
                }
            }
        }
    }

    /// Exponent of convergence of the level-k residual.
    pub fn mu(&self, k: usize) -> i64 {
        self.survivor_order(k) - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attachment {
    /// Continued-fraction tail of the previous level's denominator.
    Nested,
    /// Added as a sibling fraction.
    Summed,
}

/// A denominator-template coefficient: fixed, or unknown with a fixed
/// additive offset (the solved constant is reported without the offset).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slot {
    Fixed(Rat),
    Free { name: String, offset: Rat },
}

/// One correction level before solving. The denominator is monic of
/// degree `denom.len()`; `denom[i]` is the coefficient of x^i.
#[derive(Debug, Clone)]
pub struct LevelTemplate {
    pub kappa: Slot,
    pub denom: Vec<Slot>,
    pub attachment: Attachment,
}

/// A fully solved level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvedLevel {
    pub kappa: Rat,
    /// monic denominator polynomial
    pub denom: Poly,
    pub attachment: Attachment,
}

/// Structural description of a correction function for one family,
/// truncated at some depth; levels may still contain unknowns.
#[derive(Debug, Clone)]
pub struct CorrectionSpec {
    pub family: Family,
    pub levels: Vec<LevelTemplate>,
}

impl Family {
    /// Template for level k with unknowns in place. Unknown ordering within
    /// a level: kappa first, then denominator coefficients from highest to
    /// lowest degree.
    pub fn level_template(&self, k: usize) -> LevelTemplate {
        let free = |name: String| Slot::Free {
            name,
            offset: Rat::zero(),
        };
        match self {
            Family::GosperCf | Family::GosperProduct if *self == Family::GosperProduct && k == 0 => {
                // (x + 23/90)^2 + lambda_0, the inner shift 23/90 fixed by definition
                LevelTemplate {
                    kappa: free("kappa_0".into()),
                    denom: vec![
                        Slot::Free {
                            name: "lambda_0".into(),
                            offset: rat(529, 8100),
                        },
                        Slot::Fixed(rat(23, 45)),
                    ],
                    attachment: Attachment::Nested,
                }
            }
            Family::GosperCf | Family::GosperProduct => LevelTemplate {
                kappa: free(format!("kappa_{k}")),
                denom: vec![free(format!("lambda_{k}"))],
                attachment: Attachment::Nested,
            },
            Family::RamanujanCf => LevelTemplate {
                kappa: free(format!("a_{k}")),
                denom: vec![free(format!("b_{k}"))],
                attachment: Attachment::Nested,
            },
            Family::RamanujanMixed => {
                if k == 0 {
                    LevelTemplate {
                        kappa: free("kappa_0".into()),
                        denom: vec![free("lambda_0".into())],
                        attachment: Attachment::Nested,
                    }
                } else {
                    // cubic sibling tail x^3 + l10 x^2 + l11 x + l12
                    LevelTemplate {
                        kappa: free("kappa_1".into()),
                        denom: vec![
                            free("lambda_12".into()),
                            free("lambda_11".into()),
                            free("lambda_10".into()),
                        ],
                        attachment: Attachment::Summed,
                    }
                }
            }
        }
    }
}

/// Collapses solved levels into a single reduced rational function.
/// Nested levels extend the continued fraction; a summed level starts a
/// sibling chain whose collapsed value is added.
pub fn mc_rational(levels: &[SolvedLevel]) -> RatFn {
    let mut chains: Vec<Vec<&SolvedLevel>> = Vec::new();
    for lv in levels {
        if lv.attachment == Attachment::Summed || chains.is_empty() {
            chains.push(vec![lv]);
        } else {
            chains.last_mut().unwrap().push(lv);
        }
    }
    let mut total = RatFn::zero();
    for chain in chains {
        let mut tail = RatFn::zero();
        for lv in chain.iter().rev() {
            let den = RatFn::from_poly(lv.denom.clone()).add(&tail);
            tail = RatFn::constant(lv.kappa.clone())
                .div(&den)
                .expect("monic denominator is nonzero");
        }
        total = total.add(&tail);
    }
    total
}

/// The log-ratio pieces of the difference functional for a family:
/// (prefactor, R) pairs with D built from ln(R(x+1)/R(x)) terms.
pub(crate) fn log_terms(family: Family, mc: &RatFn) -> Vec<(Rat, RatFn)> {
    let gosper_shift = Poly::new(vec![rat(1, 6), rat_int(1)]); // x + 1/6
    let ramanujan_poly = Poly::new(vec![rat(1, 30), rat_int(1), rat_int(4), rat_int(8)]);
    match family {
        Family::GosperCf => {
            let g = RatFn::from_poly(gosper_shift).add(mc);
            vec![(rat(1, 2), g)]
        }
        Family::GosperProduct => {
            // the correction enters as a reciprocal factor, so its log-ratio
            // carries a negative prefactor; see module docs of `approx`
            let one_plus = RatFn::constant(rat_int(1)).add(mc);
            vec![
                (rat(1, 2), RatFn::from_poly(gosper_shift)),
                (rat(-1, 1), one_plus),
            ]
        }
        Family::RamanujanCf | Family::RamanujanMixed => {
            let g = RatFn::from_poly(ramanujan_poly).add(mc);
            vec![(rat(1, 6), g)]
        }
    }
}

/// Exact truncated expansion of the difference functional for the given
/// solved levels. The orientation is the one whose solved tables match the
/// printed constants: the residual decreases along the expansion, i.e. the
/// series is that of E(x+1) - E(x) in log space.
pub fn expand_difference(
    family: Family,
    levels: &[SolvedLevel],
    n: i64,
) -> Result<Series, SeriesError> {
    assert!(n >= 3);
    let mc = mc_rational(levels);
    let mut s = base_difference(n);
    for (c, r) in log_terms(family, &mc) {
        s = s.add(&log_ratio_shift(&r, n)?.scale(&c));
    }
    Ok(s.neg())
}

#[derive(Debug, Error)]
pub enum DeriveError {
    #[error("level {level} unknown {unknown}: vanishing condition has no rational root")]
    NoRationalRoot { level: usize, unknown: String },
    #[error("level {level} unknown {unknown}: coefficient polynomial degree exceeds cap {cap}")]
    NonlinearUnresolved {
        level: usize,
        unknown: String,
        cap: usize,
    },
    #[error("depth {k} exceeds the derivation cap {cap} for {family} (pass experimental to override)")]
    DepthCap {
        family: &'static str,
        k: usize,
        cap: usize,
    },
    #[error("series expansion failed: {0}")]
    Series(#[from] SeriesError),
    #[error("level {level}: unknowns remain unsolved")]
    UnknownsRemain { level: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    AffineSolved,
    PolynomialSolved,
}

#[derive(Debug, Clone)]
pub struct SolvedConstant {
    pub name: String,
    pub value: Rat,
    pub status: SolveStatus,
}

#[derive(Debug, Clone)]
pub struct LevelRecord {
    pub level: usize,
    pub constants: Vec<SolvedConstant>,
    /// orders whose coefficients the solver made vanish
    pub killed_orders: Vec<i64>,
    /// first surviving order lambda and its exact coefficient l
    pub survivor_order: i64,
    pub survivor_coeff: Rat,
}

#[derive(Debug, Clone)]
pub struct DerivationRecord {
    pub family: Family,
    pub truncation_order: i64,
    pub levels: Vec<LevelRecord>,
    pub solved: Vec<SolvedLevel>,
}

impl DerivationRecord {
    /// Lemma-1 data for level k: mu = lambda - 1 and the limit magnitude
    /// |l|/(lambda - 1). The sign of the residual itself is measured
    /// numerically by the analysis layer, not inferred here.
    pub fn residual_limit(&self, k: usize) -> Option<(i64, Rat)> {
        let lr = self.levels.get(k)?;
        if lr.survivor_coeff.is_zero() {
            return None;
        }
        let mu = lr.survivor_order - 1;
        Some((mu, lr.survivor_coeff.abs() / rat_int(mu)))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "familyId": self.family.id(),
            "truncationOrder": self.truncation_order,
            "levels": self.levels.iter().map(|lv| json!({
                "level": lv.level,
                "constants": lv.constants.iter().map(|c| json!({
                    "name": c.name,
                    "value": rat_string(&c.value),
                    "status": match c.status {
                        SolveStatus::AffineSolved => "affine-solved",
                        SolveStatus::PolynomialSolved => "polynomial-solved",
                    },
                })).collect::<Vec<_>>(),
                "killedOrders": lv.killed_orders,
                "survivorOrder": lv.survivor_order,
                "survivorCoeff": rat_string(&lv.survivor_coeff),
                "mu": lv.survivor_order - 1,
                "limitMagnitude": rat_string(&(lv.survivor_coeff.abs() / rat_int(lv.survivor_order - 1))),
            })).collect::<Vec<_>>(),
        })
    }
}

const INTERPOLATION_CAP: usize = 4;

/// Derives levels 0..=k_max for a family. Depths beyond the published
/// tables are rejected unless `experimental` is set.
pub fn derive_family(
    family: Family,
    k_max: usize,
    experimental: bool,
) -> Result<DerivationRecord, DeriveError> {
    let cap = family.max_depth();
    if k_max > cap && !experimental {
        return Err(DeriveError::DepthCap {
            family: family.id(),
            k: k_max,
            cap,
        });
    }
    let n = 2 * k_max as i64 + 12;
    let mut solved: Vec<SolvedLevel> = Vec::new();
    let mut levels: Vec<LevelRecord> = Vec::new();
    for k in 0..=k_max {
        // the mixed family only has two template shapes; every other family's
        // template depends on k just through the constant names
        let template = match family {
            Family::RamanujanMixed => family.level_template(k.min(1)),
            _ => family.level_template(k),
        };
        let record = solve_level(family, &solved, &template, k, n)?;
        solved.push(instantiate(&template, &record.constants));
        levels.push(record);
    }
    Ok(DerivationRecord {
        family,
        truncation_order: n,
        levels,
        solved,
    })
}

/// Builds the solved level from a template and its solved constants.
fn instantiate(template: &LevelTemplate, constants: &[SolvedConstant]) -> SolvedLevel {
    let mut it = constants.iter();
    let kappa = match &template.kappa {
        Slot::Fixed(q) => q.clone(),
        Slot::Free { .. } => it.next().expect("kappa solved").value.clone(),
    };
    // remaining constants are listed kappa-first then highest-to-lowest degree
    let mut denom = vec![Rat::zero(); template.denom.len() + 1];
    denom[template.denom.len()] = rat_int(1);
    let mut rest: Vec<&SolvedConstant> = it.collect();
    for (i, slot) in template.denom.iter().enumerate().rev() {
        denom[i] = match slot {
            Slot::Fixed(q) => q.clone(),
            Slot::Free { offset, .. } => {
                let c = rest.remove(0);
                offset + &c.value
            }
        };
    }
    SolvedLevel {
        kappa,
        denom: Poly::new(denom),
        attachment: template.attachment,
    }
}

/// Names of the unknowns of a template in solve order.
fn unknown_names(template: &LevelTemplate) -> Vec<String> {
    let mut names = Vec::new();
    if let Slot::Free { name, .. } = &template.kappa {
        names.push(name.clone());
    }
    for slot in template.denom.iter().rev() {
        if let Slot::Free { name, .. } = slot {
            names.push(name.clone());
        }
    }
    names
}

/// Binds the template with trial values: earlier unknowns from `fixed`,
/// the current one to `u`, later ones to zero (they cannot influence the
/// current target order).
fn bind(template: &LevelTemplate, fixed: &[Rat], index: usize, u: &Rat) -> SolvedLevel {
    let mut values: Vec<Rat> = fixed.to_vec();
    values.push(u.clone());
    let total = unknown_names(template).len();
    while values.len() < total {
        values.push(Rat::zero());
    }
    let constants: Vec<SolvedConstant> = values
        .into_iter()
        .map(|v| SolvedConstant {
            name: String::new(),
            value: v,
            status: SolveStatus::AffineSolved,
        })
        .collect();
    let _ = index;
    instantiate(template, &constants)
}

fn solve_level(
    family: Family,
    solved: &[SolvedLevel],
    template: &LevelTemplate,
    level: usize,
    n: i64,
) -> Result<LevelRecord, DeriveError> {
    let names = unknown_names(template);
    let mut fixed: Vec<Rat> = Vec::new();
    let mut constants: Vec<SolvedConstant> = Vec::new();
    let mut killed: Vec<i64> = Vec::new();
    for (i, name) in names.iter().enumerate() {
        let expand = |u: &Rat| -> Result<Series, SeriesError> {
            let mut lv = solved.to_vec();
            lv.push(bind(template, &fixed, i, u));
            expand_difference(family, &lv, n)
        };
        let s0 = expand(&Rat::zero())?;
        let (target, c0) = s0
            .leading()
            .ok_or_else(|| DeriveError::NoRationalRoot {
                level,
                unknown: name.clone(),
            })?;
        let c_at = |u: i64| -> Result<Rat, SeriesError> { Ok(expand(&rat_int(u))?.coeff(target)) };
        let c1 = c_at(1)?;
        let c2 = c_at(2)?;
        let slope = &c1 - &c0;
        let (root, status) = if !slope.is_zero() && c2 == &c0 + &slope * rat_int(2) {
            // affine in the unknown; the root is confirmed by substitution below
            (-&c0 / &slope, SolveStatus::AffineSolved)
        } else {
            let root = interpolated_root(&c0, &c1, &c2, &c_at, level, name)?;
            (root, SolveStatus::PolynomialSolved)
        };
        let confirm = expand(&root)?;
        if !confirm.coeff(target).is_zero() {
            return Err(DeriveError::NoRationalRoot {
                level,
                unknown: name.clone(),
            });
        }
        killed.push(target);
        fixed.push(root.clone());
        constants.push(SolvedConstant {
            name: name.clone(),
            value: root,
            status,
        });
    }
    let mut lv = solved.to_vec();
    lv.push(instantiate(template, &constants));
    let series = expand_difference(family, &lv, n)?;
    let (survivor_order, survivor_coeff) =
        series.leading().ok_or(DeriveError::UnknownsRemain { level })?;
    Ok(LevelRecord {
        level,
        constants,
        killed_orders: killed,
        survivor_order,
        survivor_coeff,
    })
}

/// Fallback when the target coefficient is not affine in the unknown:
/// interpolate an exact polynomial from successive integer evaluations and
/// extract a rational root.
fn interpolated_root(
    c0: &Rat,
    c1: &Rat,
    c2: &Rat,
    c_at: &dyn Fn(i64) -> Result<Rat, SeriesError>,
    level: usize,
    name: &str,
) -> Result<Rat, DeriveError> {
    let mut values = vec![c0.clone(), c1.clone(), c2.clone()];
    for deg in 2..=INTERPOLATION_CAP {
        while values.len() < deg + 2 {
            values.push(c_at(values.len() as i64)?);
        }
        let poly = lagrange_interpolate(&values[..deg + 1]);
        // degree-consistency check at one extra point
        if poly.eval(&rat_int(deg as i64 + 1)) == values[deg + 1] {
            return rational_root(&poly).ok_or_else(|| DeriveError::NoRationalRoot {
                level,
                unknown: name.to_string(),
            });
        }
    }
    Err(DeriveError::NonlinearUnresolved {
        level,
        unknown: name.to_string(),
        cap: INTERPOLATION_CAP,
    })
}

/// Interpolates the polynomial through (i, values[i]) for i = 0..values.len().
fn lagrange_interpolate(values: &[Rat]) -> Poly {
    let n = values.len();
    let mut acc = Poly::zero();
    for (i, v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let mut term = Poly::one();
        let mut denom = Rat::from(BigInt::from(1));
        for j in 0..n {
            if j == i {
                continue;
            }
            term = term.mul(&Poly::new(vec![rat_int(-(j as i64)), rat_int(1)]));
            denom *= rat_int(i as i64 - j as i64);
        }
        acc = acc.add(&term.scale(&(v / denom)));
    }
    acc
}

/// A rational root of a low-degree polynomial with rational coefficients,
/// if one exists. Linear and quadratic cases are solved exactly; higher
/// degrees fall back to rational-root-theorem candidates over the factored
/// extreme coefficients.
fn rational_root(p: &Poly) -> Option<Rat> {
    match p.degree() {
        d if d <= 0 => None,
        1 => Some(-p.coeff(0) / p.coeff(1)),
        2 => {
            let (a, b, c) = (p.coeff(2), p.coeff(1), p.coeff(0));
            let disc = &b * &b - rat_int(4) * &a * &c;
            if disc.is_negative() {
                return None;
            }
            let sq = rat_sqrt_exact(&disc)?;
            Some((-&b + sq) / (rat_int(2) * a))
        }
        _ => {
            // clear denominators and try small divisor candidates
            let mut lcm = BigInt::from(1);
            for c in p.coeffs() {
                lcm = num_integer::lcm(lcm, c.denom().clone());
            }
            let ints: Vec<BigInt> = p
                .coeffs()
                .iter()
                .map(|c| c.numer() * &lcm / c.denom())
                .collect();
            let a0 = ints.iter().find(|c| !c.is_zero())?.magnitude().clone();
            let an = ints.last()?.magnitude().clone();
            let nums = small_divisors(&BigInt::from(a0))?;
            let dens = small_divisors(&BigInt::from(an))?;
            for nu in &nums {
                for de in &dens {
                    for sign in [1i64, -1] {
                        let cand = Rat::new(nu * BigInt::from(sign), de.clone());
                        if p.eval(&cand).is_zero() {
                            return Some(cand);
                        }
                    }
                }
            }
            None
        }
    }
}

/// Exact square root of a nonnegative rational, when it is a perfect square.
fn rat_sqrt_exact(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// All divisors, but only when the value factors quickly by trial division.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut m = n.magnitude().clone();
    if m.is_zero() {
        return Some(vec![BigInt::from(1)]);
    }
    let mut factors: Vec<(num_bigint::BigUint, u32)> = Vec::new();
    let mut p = num_bigint::BigUint::from(2u32);
    let limit = num_bigint::BigUint::from(100_000u32);
    while &p * &p <= m {
        if p > limit {
            return None; // refuse to enumerate divisors of large semiprimes
        }
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1u32;
    }
    if m > num_bigint::BigUint::from(1u32) {
        factors.push((m, 1));
    }
    let mut divisors = vec![num_bigint::BigUint::from(1u32)];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divisors {
            let mut pk = num_bigint::BigUint::from(1u32);
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divisors = next;
        if divisors.len() > 4096 {
            return None;
        }
    }
    Some(divisors.into_iter().map(BigInt::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::parse_rat;

    fn q(s: &str) -> Rat {
        parse_rat(s).unwrap()
    }

    #[test]
    fn gosper_cf_base_coefficients() {
        // MC = 0: printed expansion has -1/72 at x^-3 and 17/540 at x^-4
        let s = expand_difference(Family::GosperCf, &[], 6).unwrap();
        assert_eq!(s.coeff(3), q("-1/72"));
        assert_eq!(s.coeff(4), q("17/540"));
        assert_eq!(s.coeff(5), q("-641/12960"));
    }

    #[test]
    fn gosper_cf_level0_annihilation() {
        let lv = SolvedLevel {
            kappa: q("1/72"),
            denom: Poly::new(vec![q("31/90"), q("1")]),
            attachment: Attachment::Nested,
        };
        let s = expand_difference(Family::GosperCf, &[lv], 7).unwrap();
        assert!(s.coeff(3).is_zero());
        assert!(s.coeff(4).is_zero());
        assert_eq!(s.coeff(5), q("5929/1166400"));
    }

    #[test]
    fn ramanujan_base_leading_coefficient() {
        // the Lemma-1 worked example: 11/2880 at x^-5
        let s = expand_difference(Family::RamanujanCf, &[], 7).unwrap();
        assert_eq!(s.leading().unwrap(), (5, q("11/2880")));
    }

    #[test]
    fn derive_gosper_cf_level0() {
        let rec = derive_family(Family::GosperCf, 0, false).unwrap();
        let c = &rec.levels[0].constants;
        assert_eq!(c[0].value, q("1/72"));
        assert_eq!(c[1].value, q("31/90"));
        assert_eq!(rec.levels[0].survivor_order, 5);
        assert_eq!(rec.levels[0].survivor_coeff, q("5929/1166400"));
    }

    #[test]
    fn derive_ramanujan_cf_level0() {
        let rec = derive_family(Family::RamanujanCf, 0, false).unwrap();
        let c = &rec.levels[0].constants;
        assert_eq!(c[0].value, q("-11/240"));
        assert_eq!(c[1].value, q("79/154"));
    }

    #[test]
    fn residual_limit_values() {
        let rec = derive_family(Family::GosperCf, 0, false).unwrap();
        let (mu, mag) = rec.residual_limit(0).unwrap();
        assert_eq!(mu, 4);
        assert_eq!(mag, q("5929/4665600"));
    }

    #[test]
    fn depth_cap_enforced() {
        assert!(matches!(
            derive_family(Family::GosperCf, 9, false),
            Err(DeriveError::DepthCap { .. })
        ));
        assert!(matches!(
            derive_family(Family::RamanujanMixed, 2, false),
            Err(DeriveError::DepthCap { .. })
        ));
    }

    #[test]
    fn mc_rational_empty_is_zero() {
        assert!(mc_rational(&[]).is_zero());
    }

    #[test]
    fn mc_rational_level0_gosper() {
        let lv = SolvedLevel {
            kappa: q("1/72"),
            denom: Poly::new(vec![q("31/90"), q("1")]),
            attachment: Attachment::Nested,
        };
        let r = mc_rational(&[lv]);
        assert_eq!(r.eval(&q("1")).unwrap(), q("5/484"));
    }

    #[test]
    fn mc_rational_degrees_gosper_cf() {
        // k levels: numerator degree k, denominator degree k+1
        let rec = derive_family(Family::GosperCf, 1, false).unwrap();
        let r = mc_rational(&rec.solved);
        assert_eq!(r.num().degree(), 1);
        assert_eq!(r.den().degree(), 2);
    }

    #[test]
    fn determinism() {
        let a = derive_family(Family::RamanujanMixed, 1, false).unwrap();
        let b = derive_family(Family::RamanujanMixed, 1, false).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn quadratic_fallback_root() {
        // (u - 3/2)(u + 2) has rational roots; exercised directly
        let p = Poly::new(vec![q("-3"), q("1/2"), q("1")]);
        let r = rational_root(&p).unwrap();
        assert!(p.eval(&r).is_zero());
    }

    #[test]
    fn cubic_fallback_root() {
        // (u - 2/3)(u^2 + u + 1)
        let p = Poly::new(vec![q("-2/3"), q("1/3"), q("1/3"), q("1")]);
        let r = rational_root(&p).unwrap();
        assert_eq!(r, q("2/3"));
    }
}
