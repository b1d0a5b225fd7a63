//! Hall-Post machinery: coupling/mass rescaling transforms, exact saturation
//! ratios for the three solvable families, asymptotic limits, and grid
//! audits of the inequalities.
//!
//! A Hall-Post inequality bounds an N-body ground-state energy from below by
//! an (N-1)-body energy with rescaled couplings: decompose the N-body
//! Hamiltonian into the N sub-Hamiltonians obtained by deleting one
//! particle, and bound each sub-Hamiltonian by its own ground state. For the
//! generic Hamiltonian
//!
//! ```text
//! H_N(m, g1, g2, g3) = sum_i p_i^2/(2m) + g1 sum_i V(r_i)
//!                    + g2 sum_{i<j} V(r_ij) + g3 sum_{i<j<k} V(r_ijk)
//! ```
//!
//! the generic bound is E_N >= N/(N-1) E_{N-1}(m, g1, g2 (N-1)/(N-2),
//! g3 (N-2)/(N-3)), and for translationally invariant Hamiltonians (g1 = 0)
//! the improved form is E_N >= (N-1)/(N-2) E_{N-1}(m, g2 N/(N-1),
//! g3 N(N-2)/((N-1)(N-3))).
//!
//! Because the three families are exactly solvable, both sides evaluate in
//! closed form and the saturation ratio R_N = E_N / bound is itself a closed
//! expression in the exponents beta (for the N-body system) and beta' (for
//! the rescaled (N-1)-body subsystem). The inequality content is then the
//! single predicate R_N >= 1 for positive energies, R_N <= 1 for negative
//! binding energies; the ratios never depend on omega or alpha.
//!
//! For the D-dimensional family the two- and three-body couplings are tied
//! by the constraint G = G(g), which a naive rescaling would break. Both
//! potential terms are positive, so the chained bound first rescales both
//! couplings and then relaxes the three-body one down to the constrained
//! value, which is legitimate because
//! N(N-2)/((N-1)(N-3)) G(g) >= G(N g/(N-1)) in every dimension
//! ([`check_three_body_rescaling`] audits exactly this margin).

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::couplings::three_body_from_two_body;
use crate::error::{Error, Result};
use crate::models::{
    energy_calogero_1d, energy_calogero_d, energy_hyper_coulomb, Calogero1DParams, CalogeroDParams,
    HyperCoulombParams,
};

/// Coupling strengths of the generic N-body Hamiltonian: one-, two- and
/// three-body strengths plus the constituent mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingTuple {
    pub mass: f64,
    pub one_body: f64,
    pub two_body: f64,
    pub three_body: f64,
}

impl CouplingTuple {
    pub fn new(mass: f64, one_body: f64, two_body: f64, three_body: f64) -> Result<Self> {
        if !(mass > 0.0) {
            return Err(Error::NonPositive {
                name: "mass",
                value: mass,
            });
        }
        Ok(Self {
            mass,
            one_body,
            two_body,
            three_body,
        })
    }

    fn check_n(&self, n: u32, context: &'static str) -> Result<f64> {
        let min = if self.three_body != 0.0 { 4 } else { 3 };
        if n < min {
            return Err(Error::TooFewParticles { context, n, min });
        }
        Ok(f64::from(n))
    }
}

/// Generic Hall-Post rescaling: claims E_N(t) >= prefactor * E_{N-1}(t').
///
/// Returns (N/(N-1), (m, g1, g2 (N-1)/(N-2), g3 (N-2)/(N-3))). A nonzero
/// three-body strength requires N >= 4.
pub fn transform_general(n: u32, t: &CouplingTuple) -> Result<(f64, CouplingTuple)> {
    let nf = t.check_n(n, "generic Hall-Post transform")?;
    let three_body = if t.three_body == 0.0 {
        0.0
    } else {
        t.three_body * (nf - 2.0) / (nf - 3.0)
    };
    Ok((
        nf / (nf - 1.0),
        CouplingTuple {
            mass: t.mass,
            one_body: t.one_body,
            two_body: t.two_body * (nf - 1.0) / (nf - 2.0),
            three_body,
        },
    ))
}

/// Translationally invariant Hall-Post rescaling: claims
/// E_N(t) >= prefactor * E_{N-1}(t') for Hamiltonians with no one-body term.
///
/// Returns ((N-1)/(N-2), (m, 0, g2 N/(N-1), g3 N(N-2)/((N-1)(N-3)))).
pub fn transform_ti(n: u32, t: &CouplingTuple) -> Result<(f64, CouplingTuple)> {
    if t.one_body != 0.0 {
        return Err(Error::InvalidArguments(format!(
            "translationally invariant transform requires a vanishing one-body strength, got {}",
            t.one_body
        )));
    }
    let nf = t.check_n(n, "translationally invariant Hall-Post transform")?;
    let three_body = if t.three_body == 0.0 {
        0.0
    } else {
        t.three_body * nf * (nf - 2.0) / ((nf - 1.0) * (nf - 3.0))
    };
    Ok((
        (nf - 1.0) / (nf - 2.0),
        CouplingTuple {
            mass: t.mass,
            one_body: 0.0,
            two_body: t.two_body * nf / (nf - 1.0),
            three_body,
        },
    ))
}

/// Which direction of the ratio means the bound is satisfied: R >= 1 for
/// positive energies (the bound sits below), R <= 1 for negative binding
/// energies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Orientation {
    AtLeastOne,
    AtMostOne,
}

/// Exact energy, Hall-Post bound, and saturation data at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub energy: f64,
    pub bound: f64,
    pub ratio: f64,
    pub orientation: Orientation,
    /// Signed distance |ratio - 1| to saturation; positive when satisfied.
    pub margin: f64,
    pub satisfied: bool,
}

impl BoundReport {
    fn from_ratio(energy: f64, ratio: f64, orientation: Orientation) -> Self {
        let satisfied = match orientation {
            Orientation::AtLeastOne => ratio >= 1.0,
            Orientation::AtMostOne => ratio <= 1.0,
        };
        let distance = (ratio - 1.0).abs();
        Self {
            energy,
            bound: energy / ratio,
            ratio,
            orientation,
            margin: if satisfied { distance } else { -distance },
            satisfied,
        }
    }

    /// Internal consistency of the report fields, re-checked by row emitters.
    pub fn invariant_holds(&self) -> bool {
        let expect_satisfied = match self.orientation {
            Orientation::AtLeastOne => self.ratio >= 1.0,
            Orientation::AtMostOne => self.ratio <= 1.0,
        };
        let distance = (self.ratio - 1.0).abs();
        let expect_margin = if expect_satisfied {
            distance
        } else {
            -distance
        };
        self.satisfied == expect_satisfied && self.margin == expect_margin
    }
}

fn check_report_n(n: u32, context: &'static str, min: u32) -> Result<f64> {
    if n < min {
        return Err(Error::TooFewParticles { context, n, min });
    }
    Ok(f64::from(n))
}

/// Exponent of the rescaled (N-1)-body subsystem in the one-dimensional
/// chain: beta' = 1/2 + sqrt(N (2 beta - 1)^2 - 1) / (2 sqrt(N - 1)),
/// equal to the exponent at coupling N g/(N-1).
pub fn betaprime_calogero(n: u32, beta: f64) -> Result<f64> {
    let nf = check_report_n(n, "one-dimensional subsystem exponent", 3)?;
    if !(beta >= 0.5) {
        return Err(Error::NonPhysicalRoot(beta));
    }
    let centered = 2.0 * beta - 1.0;
    let radicand = nf * centered * centered - 1.0;
    if radicand < 0.0 {
        return Err(Error::RescaledCouplingCollapse(radicand));
    }
    Ok(0.5 + radicand.sqrt() / (2.0 * (nf - 1.0).sqrt()))
}

/// Subsystem exponent of the hypercentral Coulomb chain:
/// beta' = 1/2 + sqrt((N-1)(2 beta - 1)^2 - 1) / (2 sqrt(N - 2)),
/// equal to the exponent at coupling (N-1) g/(N-2). The full chain needs
/// N >= 4 so that the (N-1)-body family is defined.
pub fn betaprime_hyper(n: u32, beta: f64) -> Result<f64> {
    let nf = check_report_n(n, "hypercentral Coulomb subsystem exponent", 4)?;
    if !(beta >= 0.5) {
        return Err(Error::NonPhysicalRoot(beta));
    }
    let centered = 2.0 * beta - 1.0;
    let radicand = (nf - 1.0) * centered * centered - 1.0;
    if radicand < 0.0 {
        return Err(Error::RescaledCouplingCollapse(radicand));
    }
    Ok(0.5 + radicand.sqrt() / (2.0 * (nf - 2.0).sqrt()))
}

/// Subsystem exponent of the D-dimensional chain:
/// beta' = -(D-2)/2 + sqrt(N (2 beta + D - 2)^2 - (D-2)^2) / (2 sqrt(N-1)),
/// equal to the D-dimensional exponent at coupling N g/(N-1). beta = 0 is a
/// fixed point (free bosons stay free bosons) and is returned exactly.
pub fn betaprime_ddim(n: u32, d: u32, beta: f64) -> Result<f64> {
    let nf = check_report_n(n, "D-dimensional subsystem exponent", 3)?;
    if d < 2 {
        return Err(Error::DimensionTooSmall(d));
    }
    if !(beta >= 0.0) {
        return Err(Error::NegativeExponent(beta));
    }
    if beta == 0.0 {
        return Ok(0.0);
    }
    let shift = f64::from(d) - 2.0;
    let centered = 2.0 * beta + shift;
    let radicand = nf * centered * centered - shift * shift;
    if radicand < 0.0 {
        return Err(Error::RescaledCouplingCollapse(radicand));
    }
    Ok(-shift / 2.0 + radicand.sqrt() / (2.0 * (nf - 1.0).sqrt()))
}

/// Margin of the three-body rescaling inequality that legitimises the
/// chained D-dimensional bound:
/// N(N-2)/((N-1)(N-3)) G(g) - G(N g/(N-1)), nonnegative for all g >= 0.
pub fn check_three_body_rescaling(n: u32, d: u32, g: f64) -> Result<f64> {
    let nf = check_report_n(n, "three-body rescaling margin", 4)?;
    let lhs = nf * (nf - 2.0) / ((nf - 1.0) * (nf - 3.0)) * three_body_from_two_body(g, d)?;
    let rhs = three_body_from_two_body(nf * g / (nf - 1.0), d)?;
    Ok(lhs - rhs)
}

/// Saturation report for the one-dimensional model at (N, omega, g).
///
/// Ratio R_N = [N + 1 + (beta - 1) N] / [N + (beta' - 1)(N - 1)]; the bound
/// is (N-1)/(N-2) E_{N-1} at frequency omega sqrt(N/(N-1)) and coupling
/// N g/(N-1). Independent of omega.
pub fn hp_report_calogero_1d(n: u32, omega: f64, g: f64) -> Result<BoundReport> {
    let nf = check_report_n(n, "one-dimensional Hall-Post report", 3)?;
    let p = Calogero1DParams::new(n, omega, g)?;
    let beta = p.beta();
    let bp = betaprime_calogero(n, beta)?;
    let ratio = (nf + 1.0 + (beta - 1.0) * nf) / (nf + (bp - 1.0) * (nf - 1.0));
    Ok(BoundReport::from_ratio(
        energy_calogero_1d(&p),
        ratio,
        Orientation::AtLeastOne,
    ))
}

/// Coulomb strength handed to the (N-1)-body subsystem,
/// alpha' = alpha (N-1) sqrt(N-2) / N^(3/2).
pub fn hyper_subsystem_alpha(n: u32, alpha: f64) -> f64 {
    let nf = f64::from(n);
    alpha * (nf - 1.0) * (nf - 2.0).sqrt() / nf.powf(1.5)
}

/// Saturation report for the hypercentral Coulomb model at (N, g, alpha).
///
/// Ratio R_N = N^2 [N - 3 + (N-1)(N-2) beta']^2 /
/// ((N-1)^2 [N - 2 + N(N-1) beta]^2) with beta' from [`betaprime_hyper`];
/// the bound is (N-1)/(N-2) E_{N-1} at coupling (N-1) g/(N-2) and Coulomb
/// strength [`hyper_subsystem_alpha`]. Binding energies are negative, so
/// satisfaction means R_N <= 1. Independent of alpha.
pub fn hp_report_hyper_coulomb(n: u32, g: f64, alpha: f64) -> Result<BoundReport> {
    let nf = check_report_n(n, "hypercentral Coulomb Hall-Post report", 4)?;
    let p = HyperCoulombParams::new(n, g, alpha)?;
    let beta = p.beta();
    let bp = betaprime_hyper(n, beta)?;
    let num = nf - 3.0 + (nf - 1.0) * (nf - 2.0) * bp;
    let den = nf - 2.0 + nf * (nf - 1.0) * beta;
    let ratio = (nf * nf * num * num) / ((nf - 1.0) * (nf - 1.0) * den * den);
    Ok(BoundReport::from_ratio(
        energy_hyper_coulomb(&p),
        ratio,
        Orientation::AtMostOne,
    ))
}

/// Saturation report for the D-dimensional model at (N, D, omega, g).
///
/// Ratio R_N = (D + N beta) / (D + (N-1) beta'); the bound is
/// (N-1)/(N-2) E_{N-1} at frequency omega sqrt(N/(N-1)) and two-body
/// coupling N g/(N-1) (with its own constrained three-body strength).
/// Saturated exactly at g = 0. Independent of omega.
pub fn hp_report_calogero_d(n: u32, d: u32, omega: f64, g: f64) -> Result<BoundReport> {
    let nf = check_report_n(n, "D-dimensional Hall-Post report", 4)?;
    let p = CalogeroDParams::new(n, d, omega, g)?;
    let beta = p.beta();
    let bp = betaprime_ddim(n, d, beta)?;
    let df = f64::from(d);
    let ratio = (df + nf * beta) / (df + (nf - 1.0) * bp);
    Ok(BoundReport::from_ratio(
        energy_calogero_d(&p),
        ratio,
        Orientation::AtLeastOne,
    ))
}

/// The three audited model families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Model {
    Calogero1D,
    HyperCoulomb,
    CalogeroD,
}

impl Model {
    /// Smallest particle count for which the Hall-Post report is defined.
    pub fn min_particles(&self) -> u32 {
        match self {
            Model::Calogero1D => 3,
            Model::HyperCoulomb | Model::CalogeroD => 4,
        }
    }

    pub fn needs_dimension(&self) -> bool {
        matches!(self, Model::CalogeroD)
    }
}

impl std::fmt::Display for Model {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Model::Calogero1D => write!(f, "calogero1d"),
            Model::HyperCoulomb => write!(f, "hypercoulomb"),
            Model::CalogeroD => write!(f, "calogerod"),
        }
    }
}

/// Analytic end points of the ratio curve: the weak-coupling value at
/// g -> 0 and the strong-coupling limit at g -> infinity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioLimits {
    pub at_zero: f64,
    pub at_infinity: f64,
}

/// Closed-form ratio limits. Never evaluates at a numeric infinity: the
/// strong-coupling value comes from beta'/beta -> sqrt(N/(N-1)) for the
/// oscillator families and sqrt((N-1)/(N-2)) for the Coulomb one.
pub fn ratio_limits(model: Model, n: u32, d: Option<u32>) -> Result<RatioLimits> {
    let nf = check_report_n(n, "ratio limits", model.min_particles())?;
    match model {
        Model::Calogero1D => Ok(RatioLimits {
            at_zero: (nf + 1.0) / nf,
            at_infinity: (nf / (nf - 1.0)).sqrt(),
        }),
        Model::HyperCoulomb => {
            let num = nf - 3.0 + (nf - 1.0) * (nf - 2.0);
            let den = nf - 2.0 + nf * (nf - 1.0);
            Ok(RatioLimits {
                at_zero: (nf * nf * num * num) / ((nf - 1.0) * (nf - 1.0) * den * den),
                at_infinity: (nf - 2.0) / (nf - 1.0),
            })
        }
        Model::CalogeroD => {
            let d = d.ok_or_else(|| {
                Error::InvalidArguments("the D-dimensional model needs a dimension".into())
            })?;
            if d < 2 {
                return Err(Error::DimensionTooSmall(d));
            }
            Ok(RatioLimits {
                at_zero: 1.0,
                at_infinity: (nf / (nf - 1.0)).sqrt(),
            })
        }
    }
}

/// One evaluated grid point of an audit. Domain errors are recorded, not
/// fatal; `three_body_margin` is filled for the D-dimensional model only.
#[derive(Debug, Clone, Serialize)]
pub struct AuditRow {
    pub n: u32,
    pub d: Option<u32>,
    pub g: f64,
    pub report: Option<BoundReport>,
    pub three_body_margin: Option<f64>,
    pub error: Option<String>,
}

impl AuditRow {
    pub fn is_violation(&self) -> bool {
        let bound_violated = self.report.map(|r| !r.satisfied).unwrap_or(false);
        let rescale_violated = self.three_body_margin.map(|m| m < 0.0).unwrap_or(false);
        bound_violated || rescale_violated
    }
}

/// Aggregate outcome of an audit. `worst_margin` is the minimum over every
/// audited margin (bound margins and, for the D-dimensional model, the
/// three-body rescaling margins); NaN when no point evaluated successfully.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AuditSummary {
    pub points: usize,
    pub violations: usize,
    pub errors: usize,
    pub worst_margin: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditOutcome {
    pub rows: Vec<AuditRow>,
    pub summary: AuditSummary,
}

/// Default coupling grid for audits: 0 to 5 in steps of 1/4, then decades
/// up to 10^4 to cover the strong-coupling regime.
pub fn default_g_grid() -> Vec<f64> {
    let mut grid: Vec<f64> = (0..=20).map(|i| f64::from(i) * 0.25).collect();
    grid.extend([10.0, 100.0, 1000.0, 10000.0]);
    grid
}

/// Evaluate the Hall-Post report on the Cartesian grid of particle counts,
/// dimensions (D-dimensional model only) and couplings, in lexicographic
/// (N, D, g) order. Ratios are coupling-only quantities, so the energies are
/// evaluated at omega = alpha = 1.
///
/// Per-point domain errors (for example a rescaled-coupling collapse on the
/// negative-g strip) are recorded in the row; ranges that violate the
/// model's particle-count or dimension domain are rejected up front.
pub fn audit_grid(
    model: Model,
    n_range: RangeInclusive<u32>,
    d_range: Option<RangeInclusive<u32>>,
    g_grid: &[f64],
) -> Result<AuditOutcome> {
    if n_range.is_empty() {
        return Err(Error::InvalidArguments("empty particle-count range".into()));
    }
    if g_grid.is_empty() {
        return Err(Error::InvalidArguments("empty coupling grid".into()));
    }
    check_report_n(*n_range.start(), "grid audit", model.min_particles())?;
    let d_values: Vec<Option<u32>> = match (model.needs_dimension(), d_range) {
        (true, Some(range)) => {
            if range.is_empty() {
                return Err(Error::InvalidArguments("empty dimension range".into()));
            }
            if *range.start() < 2 {
                return Err(Error::DimensionTooSmall(*range.start()));
            }
            range.map(Some).collect()
        }
        (true, None) => {
            return Err(Error::InvalidArguments(
                "the D-dimensional model needs a dimension range".into(),
            ))
        }
        (false, Some(_)) => {
            return Err(Error::InvalidArguments(
                "a dimension range only applies to the D-dimensional model".into(),
            ))
        }
        (false, None) => vec![None],
    };

    let mut g_sorted = g_grid.to_vec();
    g_sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite couplings"));

    let mut points = Vec::new();
    for n in n_range {
        for &d in &d_values {
            for &g in &g_sorted {
                points.push((n, d, g));
            }
        }
    }

    let rows: Vec<AuditRow> = points
        .par_iter()
        .map(|&(n, d, g)| evaluate_audit_point(model, n, d, g))
        .collect();

    let violations = rows.iter().filter(|r| r.is_violation()).count();
    let errors = rows.iter().filter(|r| r.error.is_some()).count();
    let worst_margin = rows
        .iter()
        .flat_map(|r| {
            r.report
                .map(|rep| rep.margin)
                .into_iter()
                .chain(r.three_body_margin)
        })
        .fold(f64::NAN, f64::min);

    let summary = AuditSummary {
        points: rows.len(),
        violations,
        errors,
        worst_margin,
    };
    Ok(AuditOutcome { rows, summary })
}

fn evaluate_audit_point(model: Model, n: u32, d: Option<u32>, g: f64) -> AuditRow {
    let mut row = AuditRow {
        n,
        d,
        g,
        report: None,
        three_body_margin: None,
        error: None,
    };
    let outcome = match model {
        Model::Calogero1D => hp_report_calogero_1d(n, 1.0, g),
        Model::HyperCoulomb => hp_report_hyper_coulomb(n, g, 1.0),
        Model::CalogeroD => {
            let dim = d.expect("dimension validated for the D-dimensional model");
            check_three_body_rescaling(n, dim, g).and_then(|margin| {
                row.three_body_margin = Some(margin);
                hp_report_calogero_d(n, dim, 1.0, g)
            })
        }
    };
    match outcome {
        Ok(report) => row.report = Some(report),
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}
