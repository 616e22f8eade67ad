//! The formula zoo: base and corrected approximants to Γ(x+1), evaluated
//! as rigorous enclosures, plus residuals against the oracle.
//!
//! All residuals live in log space: E(x) = ln Γ(x+1) − ln A(x). The
//! multiplicative form exp(E) − 1 is derived from E, never computed
//! separately.
//!
//! Note the product-corrected Gosper family divides by its correction
//! factor: A(x) = √(2π)(x/e)^x √(x+1/6) / (1 + MC(x)). With that reading
//! the solved constants match the published table and the measured
//! inequality directions match the published ones; the multiplied-factor
//! reading reproduces neither (its unique level-0 solution differs), see
//! the derivation notes in `correction`.

pub mod tables;

use crate::correction::{mc_rational, Attachment, Family, SolvedLevel};
use crate::interval::{pi, Iv, IvError};
use crate::kernel::{parse_rat, rat, rat_int, Poly, Rat, RatFn};
use crate::oracle::{oracle_lngamma, OracleError};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ApproxError {
    #[error("argument must be strictly positive")]
    NonPositiveArgument,
    #[error("correction denominator vanishes at the evaluation point")]
    Pole,
    #[error("radicand is not positive at the evaluation point")]
    NonPositiveRadicand,
    #[error("depth {0} exceeds the embedded table")]
    DepthOutOfRange(usize),
    #[error("unknown approximant id {0:?}")]
    UnknownId(String),
    #[error("interval arithmetic failed: {0}")]
    Interval(IvError),
    #[error("oracle failed: {0}")]
    Oracle(String),
}

impl From<IvError> for ApproxError {
    fn from(e: IvError) -> Self {
        ApproxError::Interval(e)
    }
}

impl From<OracleError> for ApproxError {
    fn from(e: OracleError) -> Self {
        ApproxError::Oracle(e.to_string())
    }
}

/// One concrete approximation formula for Γ(x+1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApproximantDef {
    Stirling,
    Burnside,
    Gosper,
    RamanujanBase,
    Corrected { family: Family, k: usize },
}

impl ApproximantDef {
    /// All approximants with embedded constants, shallow to deep.
    pub fn all() -> Vec<ApproximantDef> {
        let mut v = vec![
            ApproximantDef::Stirling,
            ApproximantDef::Burnside,
            ApproximantDef::Gosper,
            ApproximantDef::RamanujanBase,
        ];
        for family in Family::ALL {
            for k in 0..=family.max_depth() {
                v.push(ApproximantDef::Corrected { family, k });
            }
        }
        v
    }

    pub fn id(&self) -> String {
        match self {
            ApproximantDef::Stirling => "stirling".into(),
            ApproximantDef::Burnside => "burnside".into(),
            ApproximantDef::Gosper => "gosper".into(),
            ApproximantDef::RamanujanBase => "ramanujan-base".into(),
            ApproximantDef::Corrected { family, k } => format!("{}({k})", family.id()),
        }
    }

    /// Parses "stirling", "gosper-cf" + explicit k, etc.
    pub fn parse(name: &str, k: Option<usize>) -> Result<ApproximantDef, ApproxError> {
        let def = match name {
            "stirling" => ApproximantDef::Stirling,
            "burnside" => ApproximantDef::Burnside,
            "gosper" => ApproximantDef::Gosper,
            "ramanujan-base" => ApproximantDef::RamanujanBase,
            other => {
                let family = Family::parse(other)
                    .ok_or_else(|| ApproxError::UnknownId(other.to_string()))?;
                let k = k.unwrap_or(0);
                if k > family.max_depth() {
                    return Err(ApproxError::DepthOutOfRange(k));
                }
                ApproximantDef::Corrected { family, k }
            }
        };
        Ok(def)
    }

    /// Lower end of the domain on which the published inequality is stated.
    pub fn valid_domain(&self) -> i64 {
        match self {
            ApproximantDef::Corrected {
                family: Family::GosperProduct,
                k: 0,
            } => 13,
            ApproximantDef::Corrected {
                family: Family::GosperProduct,
                k: 2,
            } => 6,
            _ => 1,
        }
    }

    /// Expected exponent of convergence of E(x).
    pub fn expected_mu(&self) -> i64 {
        match self {
            ApproximantDef::Stirling => 1,
            ApproximantDef::Burnside => 1,
            ApproximantDef::Gosper => 2,
            ApproximantDef::RamanujanBase => 4,
            ApproximantDef::Corrected { family, k } => family.mu(*k),
        }
    }

    /// Solved correction levels from the embedded table (empty for bases).
    pub fn levels(&self) -> Result<Vec<SolvedLevel>, ApproxError> {
        match self {
            ApproximantDef::Corrected { family, k } => {
                let table = tables::TABLES
                    .iter()
                    .find(|t| t.family_id == family.id())
                    .expect("every family is tabulated");
                if *k >= table.levels.len() {
                    return Err(ApproxError::DepthOutOfRange(*k));
                }
                Ok(table.levels[..=*k].iter().map(level_from_table).collect())
            }
            _ => Ok(Vec::new()),
        }
    }

    /// The correction as a single reduced rational function (zero for bases).
    pub fn mc(&self) -> Result<RatFn, ApproxError> {
        Ok(mc_rational(&self.levels()?))
    }

    /// Exact rational radicand/factor material at x: the argument of the
    /// family's root, and for the product family also the divisor 1 + MC.
    fn exact_parts(&self, x: &Rat) -> Result<Parts, ApproxError> {
        if !x.is_positive() {
            return Err(ApproxError::NonPositiveArgument);
        }
        let mc_at = |def: &ApproximantDef| -> Result<Rat, ApproxError> {
            def.mc()?.eval(x).map_err(|_| ApproxError::Pole)
        };
        let gosper_shift = x + rat(1, 6);
        let cubic = rat_int(8) * crate::kernel::rat_pow(x, 3)
            + rat_int(4) * crate::kernel::rat_pow(x, 2)
            + x;
        Ok(match self {
            ApproximantDef::Stirling => Parts::TwoPi {
                half_log_of: x.clone(),
            },
            ApproximantDef::Burnside => Parts::Burnside,
            ApproximantDef::Gosper => Parts::TwoPi {
                half_log_of: gosper_shift,
            },
            ApproximantDef::RamanujanBase => Parts::PiSixth {
                sixth_log_of: cubic + rat(1, 30),
            },
            ApproximantDef::Corrected { family, .. } => match family {
                Family::GosperCf => Parts::TwoPi {
                    half_log_of: gosper_shift + mc_at(self)?,
                },
                Family::GosperProduct => Parts::Product {
                    half_log_of: gosper_shift,
                    divisor: Rat::one() + mc_at(self)?,
                },
                Family::RamanujanCf | Family::RamanujanMixed => Parts::PiSixth {
                    sixth_log_of: cubic + rat(1, 30) + mc_at(self)?,
                },
            },
        })
    }

    /// Enclosure of ln A(x).
    pub fn ln_approx(&self, x: &Rat, p: u32) -> Result<Iv, ApproxError> {
        let g = p + 16;
        let parts = self.exact_parts(x)?;
        let x_iv = Iv::from_rat(x, g);
        let ln_x = x_iv.ln(g)?;
        // x (ln x - 1), common to all but Burnside
        let stem = x_iv.mul(&ln_x.sub(&Iv::from_int(1), g), g);
        let half_ln_2pi = pi(g).scale2(1).ln(g)?.scale2(-1);
        let ln_pos = |q: &Rat| -> Result<Iv, ApproxError> {
            if !q.is_positive() {
                return Err(ApproxError::NonPositiveRadicand);
            }
            Ok(Iv::from_rat(q, g).ln(g)?)
        };
        let v = match parts {
            Parts::TwoPi { half_log_of } => half_ln_2pi
                .add(&stem, g)
                .add(&ln_pos(&half_log_of)?.scale2(-1), g),
            Parts::Product {
                half_log_of,
                divisor,
            } => half_ln_2pi
                .add(&stem, g)
                .add(&ln_pos(&half_log_of)?.scale2(-1), g)
                .sub(&ln_pos(&divisor)?, g),
            Parts::PiSixth { sixth_log_of } => pi(g)
                .ln(g)?
                .scale2(-1)
                .add(&stem, g)
                .add(
                    &ln_pos(&sixth_log_of)?
                        .div(&Iv::from_int(6), g)
                        .expect("6 != 0"),
                    g,
                ),
            Parts::Burnside => {
                let s = x + rat(1, 2);
                let s_iv = Iv::from_rat(&s, g);
                half_ln_2pi.add(&s_iv.mul(&s_iv.ln(g)?.sub(&Iv::from_int(1), g), g), g)
            }
        };
        Ok(v)
    }

    /// Enclosure of A(x) itself.
    pub fn eval_approx(&self, x: &Rat, p: u32) -> Result<Iv, ApproxError> {
        Ok(self.ln_approx(x, p + 16)?.exp(p))
    }

    /// Pole/radicand screening on [start, ∞): every correction denominator
    /// and the root argument must be one-signed positive there, shown by
    /// Taylor-shifting to the domain start.
    pub fn clear_of_singularities(&self, start: &Rat) -> Result<bool, ApproxError> {
        // evaluation always goes through the collapsed rational form, so
        // positivity of the collapsed denominator (not of every nested
        // level denominator, which may dip negative) is the right screen
        let mc = mc_rational(&self.levels()?);
        if !mc.den().taylor_shift(start).coeffs_one_signed(true) {
            return Ok(false);
        }
        // root argument: radicand polynomial + MC => (rad*den + num)/den
        let rad = match self {
            ApproximantDef::Burnside | ApproximantDef::Stirling => Poly::new(vec![Rat::zero(), Rat::one()]),
            ApproximantDef::Gosper
            | ApproximantDef::Corrected {
                family: Family::GosperCf | Family::GosperProduct,
                ..
            } => Poly::new(vec![rat(1, 6), Rat::one()]),
            ApproximantDef::RamanujanBase
            | ApproximantDef::Corrected { .. } => {
                Poly::new(vec![rat(1, 30), Rat::one(), rat_int(4), rat_int(8)])
            }
        };
        let total = match self {
            ApproximantDef::Corrected {
                family: Family::GosperProduct,
                ..
            } => {
                // divisor 1 + MC must stay positive
                RatFn::from_poly(Poly::one()).add(&mc)
            }
            _ => RatFn::from_poly(rad).add(&mc),
        };
        Ok(total.num().taylor_shift(start).coeffs_one_signed(true)
            && total.den().taylor_shift(start).coeffs_one_signed(true))
    }
}

enum Parts {
    /// √(2π) (x/e)^x sqrt(q)
    TwoPi { half_log_of: Rat },
    /// √(2π) (x/e)^x sqrt(q) / divisor
    Product { half_log_of: Rat, divisor: Rat },
    /// √π (x/e)^x q^(1/6)
    PiSixth { sixth_log_of: Rat },
    Burnside,
}

fn level_from_table(t: &tables::LevelTable) -> SolvedLevel {
    SolvedLevel {
        kappa: parse_rat(t.kappa).expect("generated table is well-formed"),
        denom: Poly::new(
            t.denom
                .iter()
                .map(|s| parse_rat(s).expect("generated table is well-formed"))
                .collect(),
        ),
        attachment: if t.summed {
            Attachment::Summed
        } else {
            Attachment::Nested
        },
    }
}

/// Log-space residual and its multiplicative form at one sample point.
#[derive(Debug, Clone)]
pub struct ResidualSample {
    pub x: Rat,
    /// E = ln Γ(x+1) − ln A(x)
    pub e: Iv,
    /// exp(E) − 1
    pub rel_e: Iv,
}

/// E(x) = ln Γ(x+1) − ln A(x), against the independent oracle.
pub fn residual(def: &ApproximantDef, x: &Rat, p: u32) -> Result<ResidualSample, ApproxError> {
    let g = p + 16;
    let lg = oracle_lngamma(&(x + Rat::one()), g)?;
    let la = def.ln_approx(x, g)?;
    let e = lg.sub(&la, p);
    let rel_e = e.exp(p).sub(&Iv::from_int(1), p);
    Ok(ResidualSample {
        x: x.clone(),
        e,
        rel_e,
    })
}

/// Depth-n truncation of the correction structure at a rational point, by
/// exact backward recurrence (an independent path from `mc_rational`).
pub fn cf_approximant(levels: &[SolvedLevel], n: usize, x: &Rat) -> Result<Rat, ApproxError> {
    if n >= levels.len() && !levels.is_empty() {
        return Err(ApproxError::DepthOutOfRange(n));
    }
    let used = if levels.is_empty() {
        &levels[..0]
    } else {
        &levels[..=n]
    };
    let mut total = Rat::zero();
    let mut tail = Rat::zero();
    // walk backward; a summed level closes the current sibling chain
    for lv in used.iter().rev() {
        let den = lv.denom.eval(x) + &tail;
        if den.is_zero() {
            return Err(ApproxError::Pole);
        }
        let value = &lv.kappa / den;
        if lv.attachment == Attachment::Summed {
            total += value;
            tail = Rat::zero();
        } else {
            tail = value;
        }
    }
    Ok(total + tail)
}
