//! Exact ground-state energies of the three solvable model families, plus
//! ground-state wavefunction evaluation for the one-dimensional case.
//!
//! Units are hbar = m = 1 throughout.
//!
//! The three families:
//!
//! * One-dimensional inverse-square model with pairwise harmonic confinement
//!   (pair potential omega^2 (x_i - x_j)^2 / 4 + g/(x_i - x_j)^2); ground
//!   state E_N = sqrt(N/8) [N^2 - 1 + (beta - 1) N (N - 1)] omega.
//! * Hypercentral Coulomb model: pairwise inverse-square repulsion plus
//!   -alpha^2 / sqrt(sum (x_i - x_j)^2); binding energy
//!   E_N = -alpha^2 / (N [N - 2 + N (N - 1) beta]^2).
//! * D-dimensional analogue of the first family with the constrained
//!   three-body term; E_N = sqrt(N/8) [D (N - 1) + N (N - 1) beta] omega.
//!
//! The one-dimensional ground state is a Jastrow product of pair differences
//! raised to beta times a Gaussian in the pair separations. Its evaluation is
//! restricted to the ordered sector x_1 < ... < x_N, where log psi is real
//! for any beta.

use crate::couplings::{beta_from_g, beta_from_g_ddim};
use crate::error::{Error, Result};

/// Default floor on pair separations accepted by the wavefunction evaluator.
pub const SEPARATION_FLOOR: f64 = 1e-10;

/// Parameters of the one-dimensional model: N particles, oscillator
/// frequency omega, inverse-square strength g >= -1/4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Calogero1DParams {
    n: u32,
    omega: f64,
    g: f64,
}

impl Calogero1DParams {
    pub fn new(n: u32, omega: f64, g: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewParticles {
                context: "one-dimensional oscillator model",
                n,
                min: 2,
            });
        }
        if !(omega > 0.0) {
            return Err(Error::NonPositive {
                name: "omega",
                value: omega,
            });
        }
        beta_from_g(g)?;
        Ok(Self { n, omega, g })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    /// Jastrow exponent derived from g.
    pub fn beta(&self) -> f64 {
        beta_from_g(self.g).expect("validated on construction")
    }
}

/// Ground-state energy of the one-dimensional model. Exactly linear in omega.
pub fn energy_calogero_1d(p: &Calogero1DParams) -> f64 {
    let n = f64::from(p.n);
    let beta = p.beta();
    (n / 8.0).sqrt() * (n * n - 1.0 + (beta - 1.0) * n * (n - 1.0)) * p.omega
}

/// Parameters of the hypercentral Coulomb model: N >= 3 particles,
/// inverse-square strength g, Coulomb strength parameter alpha (the
/// hypercentral term is -alpha^2 / hyper-radius).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperCoulombParams {
    n: u32,
    g: f64,
    alpha: f64,
}

impl HyperCoulombParams {
    pub fn new(n: u32, g: f64, alpha: f64) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewParticles {
                context: "hypercentral Coulomb model",
                n,
                min: 3,
            });
        }
        if !(alpha > 0.0) {
            return Err(Error::NonPositive {
                name: "alpha",
                value: alpha,
            });
        }
        beta_from_g(g)?;
        Ok(Self { n, g, alpha })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        beta_from_g(self.g).expect("validated on construction")
    }
}

/// Ground-state binding energy of the hypercentral Coulomb model,
/// E_N = -alpha^2 / (N [N - 2 + N (N - 1) beta]^2). Always negative, and
/// scales exactly as alpha^2.
///
/// The alpha^2 prefactor is kept as published for this family even though
/// the N = 2 reduction of the Hamiltonian gives -alpha^4/(4 beta^2); see
/// [`crate::oracle::solve_two_body_radial`], which reports both values. All
/// bound ratios are invariant under that prefactor choice.
pub fn energy_hyper_coulomb(p: &HyperCoulombParams) -> f64 {
    let n = f64::from(p.n);
    let bracket = n - 2.0 + n * (n - 1.0) * p.beta();
    -(p.alpha * p.alpha) / (n * bracket * bracket)
}

/// Parameters of the D-dimensional model: N particles in D >= 2 dimensions,
/// oscillator frequency omega, two-body strength g >= 0 (the three-body
/// strength follows from the constraint G = beta^2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CalogeroDParams {
    n: u32,
    d: u32,
    omega: f64,
    g: f64,
}

impl CalogeroDParams {
    pub fn new(n: u32, d: u32, omega: f64, g: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewParticles {
                context: "D-dimensional oscillator model",
                n,
                min: 2,
            });
        }
        if !(omega > 0.0) {
            return Err(Error::NonPositive {
                name: "omega",
                value: omega,
            });
        }
        beta_from_g_ddim(g, d)?;
        Ok(Self { n, d, omega, g })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dimension(&self) -> u32 {
        self.d
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn beta(&self) -> f64 {
        beta_from_g_ddim(self.g, self.d).expect("validated on construction")
    }

    pub fn three_body(&self) -> f64 {
        let b = self.beta();
        b * b
    }
}

/// N-boson ground-state energy of the D-dimensional model. Exactly linear
/// in omega; at g = 0 it reduces to sqrt(N/8) D (N - 1) omega.
pub fn energy_calogero_d(p: &CalogeroDParams) -> f64 {
    let n = f64::from(p.n);
    let d = f64::from(p.d);
    (n / 8.0).sqrt() * (d * (n - 1.0) + n * (n - 1.0) * p.beta()) * p.omega
}

/// An ordered N-tuple of one-dimensional coordinates, x_1 < x_2 < ... < x_N.
///
/// The inverse-square walls disconnect the coordinate orderings; all
/// wavefunction work happens in this sector.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    coords: Vec<f64>,
}

impl Configuration {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 || coords.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::UnorderedConfiguration);
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Smallest pair separation; by ordering, the smallest adjacent gap.
    pub fn min_separation(&self) -> f64 {
        self.coords
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min)
    }

    fn check_matches(&self, n: u32) -> Result<()> {
        if self.coords.len() != n as usize {
            return Err(Error::WrongCoordinateCount {
                got: self.coords.len(),
                expected: n as usize,
            });
        }
        Ok(())
    }
}

/// Jastrow exponent and Gaussian coefficient of the trial state
/// psi = prod_{i<j} (x_j - x_i)^beta exp[-a sum_{i<j} (x_i - x_j)^2].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavefunctionParams {
    beta: f64,
    gauss_coeff: f64,
}

impl WavefunctionParams {
    pub fn new(beta: f64, gauss_coeff: f64) -> Result<Self> {
        if !(gauss_coeff > 0.0) {
            return Err(Error::NonPositive {
                name: "gauss_coeff",
                value: gauss_coeff,
            });
        }
        Ok(Self { beta, gauss_coeff })
    }

    /// The exact eigenstate of the one-dimensional model: beta from g and
    /// Gaussian coefficient a = omega / (2 sqrt(2 N)), the unique value that
    /// makes the local energy constant.
    pub fn eigenstate(p: &Calogero1DParams) -> Self {
        Self {
            beta: p.beta(),
            gauss_coeff: eigenstate_gauss_coeff(p.n, p.omega),
        }
    }

    /// Same beta as the eigenstate but an arbitrary Gaussian coefficient.
    /// With any a != omega / (2 sqrt(2 N)) the local energy is
    /// position-dependent, which the oracle makes visible.
    pub fn with_gauss_coeff(p: &Calogero1DParams, gauss_coeff: f64) -> Result<Self> {
        Self::new(p.beta(), gauss_coeff)
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gauss_coeff(&self) -> f64 {
        self.gauss_coeff
    }
}

/// Gaussian coefficient of the exact eigenstate, omega / (2 sqrt(2 N)).
pub fn eigenstate_gauss_coeff(n: u32, omega: f64) -> f64 {
    omega / (2.0 * (2.0 * f64::from(n)).sqrt())
}

/// Log of the ordered-sector ground-state wavefunction,
/// beta sum_{i<j} ln(x_j - x_i) - a sum_{i<j} (x_i - x_j)^2,
/// with the default separation floor of 1e-10.
pub fn log_wavefunction_calogero(
    p: &Calogero1DParams,
    w: &WavefunctionParams,
    c: &Configuration,
) -> Result<f64> {
    log_wavefunction_calogero_with_floor(p, w, c, SEPARATION_FLOOR)
}

/// As [`log_wavefunction_calogero`] with an explicit separation floor.
pub fn log_wavefunction_calogero_with_floor(
    p: &Calogero1DParams,
    w: &WavefunctionParams,
    c: &Configuration,
    floor: f64,
) -> Result<f64> {
    p_config_guard(p, c, floor)?;
    let x = c.coords();
    let mut log_jastrow = 0.0;
    let mut pair_square = 0.0;
    for i in 0..x.len() {
        for j in (i + 1)..x.len() {
            let sep = x[j] - x[i];
            log_jastrow += sep.ln();
            pair_square += sep * sep;
        }
    }
    Ok(w.beta * log_jastrow - w.gauss_coeff * pair_square)
}

pub(crate) fn p_config_guard(p: &Calogero1DParams, c: &Configuration, floor: f64) -> Result<()> {
    c.check_matches(p.n)?;
    let sep = c.min_separation();
    if sep < floor {
        return Err(Error::SeparationTooSmall { sep, floor });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn energy_1d_reference_points() {
        let e = |n, omega, g| energy_calogero_1d(&Calogero1DParams::new(n, omega, g).unwrap());
        assert_relative_eq!(e(2, 1.0, 0.0), 1.5, max_relative = 1e-15);
        assert_relative_eq!(e(2, 1.0, 2.0), 2.5, max_relative = 1e-15);
        assert_relative_eq!(
            e(3, 1.0, 2.0),
            (3.0f64 / 8.0).sqrt() * 14.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(e(3, 1.0, 2.0), 8.573_214, max_relative = 1e-6);
    }

    #[test]
    fn energy_1d_g_zero_closed_form() {
        for n in 2..12u32 {
            let p = Calogero1DParams::new(n, 1.7, 0.0).unwrap();
            let nf = f64::from(n);
            assert_relative_eq!(
                energy_calogero_1d(&p),
                (nf / 8.0).sqrt() * (nf * nf - 1.0) * 1.7,
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn hyper_coulomb_reference_points() {
        let e = |n, g, a| energy_hyper_coulomb(&HyperCoulombParams::new(n, g, a).unwrap());
        assert_relative_eq!(e(5, 0.0, 1.0), -1.0 / 2645.0, max_relative = 1e-15);
        assert_relative_eq!(e(5, 0.0, 1.0), -3.780_718e-4, max_relative = 1e-6);
        assert_relative_eq!(e(3, 0.0, 1.0), -1.0 / 147.0, max_relative = 1e-15);
    }

    #[test]
    fn hyper_coulomb_needs_three_particles() {
        assert!(matches!(
            HyperCoulombParams::new(2, 0.0, 1.0),
            Err(Error::TooFewParticles { min: 3, .. })
        ));
    }

    #[test]
    fn energy_ddim_reference_points() {
        let e = |n, d, omega, g| energy_calogero_d(&CalogeroDParams::new(n, d, omega, g).unwrap());
        assert_relative_eq!(e(3, 2, 1.0, 0.0), 6.0f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(e(2, 3, 1.0, 2.0), 2.5, max_relative = 1e-15);
        assert_relative_eq!(
            e(5, 3, 2.0, 0.0),
            2.0 * (5.0f64 / 8.0).sqrt() * 12.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(e(5, 3, 2.0, 0.0), 18.973_666, max_relative = 1e-6);
    }

    #[test]
    fn log_wavefunction_reference_points() {
        let p = Calogero1DParams::new(2, 1.0, 0.0).unwrap();
        // At N = 2, omega = 1 the eigenstate coefficient is exactly 1/4.
        let w = WavefunctionParams::eigenstate(&p);
        assert_relative_eq!(w.gauss_coeff(), 0.25, max_relative = 1e-15);
        let c = Configuration::new(vec![0.0, 1.0]).unwrap();
        assert_relative_eq!(
            log_wavefunction_calogero(&p, &w, &c).unwrap(),
            -0.25,
            max_relative = 1e-15
        );

        let p2 = Calogero1DParams::new(2, 1.0, 2.0).unwrap();
        let w2 = WavefunctionParams::with_gauss_coeff(&p2, 0.25).unwrap();
        let c2 = Configuration::new(vec![-1.0, 1.0]).unwrap();
        assert_relative_eq!(
            log_wavefunction_calogero(&p2, &w2, &c2).unwrap(),
            2.0 * 2.0f64.ln() - 1.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn log_wavefunction_rejects_tight_pairs() {
        let p = Calogero1DParams::new(3, 1.0, 0.0).unwrap();
        let w = WavefunctionParams::eigenstate(&p);
        let c = Configuration::new(vec![0.0, 1e-12, 1.0]).unwrap();
        assert!(matches!(
            log_wavefunction_calogero(&p, &w, &c),
            Err(Error::SeparationTooSmall { .. })
        ));
    }

    #[test]
    fn configuration_must_be_strictly_increasing() {
        assert!(Configuration::new(vec![0.0, 0.0, 1.0]).is_err());
        assert!(Configuration::new(vec![1.0, 0.5]).is_err());
        assert!(Configuration::new(vec![0.5]).is_err());
        let c = Configuration::new(vec![-1.0, 0.25, 2.0]).unwrap();
        assert_eq!(c.min_separation(), 1.25);
    }

    proptest! {
        #[test]
        fn omega_linearity_is_exact(n in 2u32..20, g in -0.25f64..100.0, omega in 0.01f64..10.0) {
            let e1 = energy_calogero_1d(&Calogero1DParams::new(n, omega, g).unwrap());
            let e2 = energy_calogero_1d(&Calogero1DParams::new(n, 2.0 * omega, g).unwrap());
            prop_assert!((e2 - 2.0 * e1).abs() <= 1e-15 * e1.abs());
        }

        #[test]
        fn omega_linearity_ddim(n in 2u32..20, d in 2u32..8, g in 0.0f64..100.0, omega in 0.01f64..10.0) {
            let e1 = energy_calogero_d(&CalogeroDParams::new(n, d, omega, g).unwrap());
            let e2 = energy_calogero_d(&CalogeroDParams::new(n, d, 2.0 * omega, g).unwrap());
            prop_assert!((e2 - 2.0 * e1).abs() <= 1e-15 * e1.abs());
        }

        #[test]
        fn alpha_square_scaling(n in 3u32..20, g in -0.25f64..100.0, alpha in 0.01f64..10.0) {
            let e1 = energy_hyper_coulomb(&HyperCoulombParams::new(n, g, alpha).unwrap());
            let e2 = energy_hyper_coulomb(&HyperCoulombParams::new(n, g, 2.0 * alpha).unwrap());
            prop_assert!(e1 < 0.0);
            prop_assert!((e2 - 4.0 * e1).abs() <= 1e-15 * e1.abs());
        }

        #[test]
        fn log_wavefunction_is_translation_invariant(
            shift in -10.0f64..10.0,
            gaps in proptest::collection::vec(0.2f64..2.0, 1..6),
            g in -0.25f64..10.0,
        ) {
            let mut coords = vec![0.0];
            for gap in &gaps {
                coords.push(coords.last().unwrap() + gap);
            }
            let n = coords.len() as u32;
            let p = Calogero1DParams::new(n, 1.0, g).unwrap();
            let w = WavefunctionParams::eigenstate(&p);
            let c = Configuration::new(coords.clone()).unwrap();
            let shifted = Configuration::new(coords.iter().map(|x| x + shift).collect()).unwrap();
            let a = log_wavefunction_calogero(&p, &w, &c).unwrap();
            let b = log_wavefunction_calogero(&p, &w, &shifted).unwrap();
            prop_assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0));
        }
    }
}
