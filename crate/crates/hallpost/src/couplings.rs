//! Maps between inverse-square coupling strengths and Jastrow exponents.
//!
//! In one dimension the pair strength g and the exponent beta are tied by
//! g = beta(beta - 1). The positive root beta >= 1/2 is always selected, so
//! g = 0 corresponds to beta = 1 (fermion-like nodes). The map is real for
//! g >= -1/4; below that the inverse-square attraction collapses.
//!
//! In D >= 2 dimensions the two-body strength g, the three-body strength G
//! and the exponent obey g = G + (D - 2) sqrt(G) with G = beta^2, so
//! beta = 0 corresponds to g = G = 0 (free bosons).

use crate::error::{Error, Result};

/// Positive-root exponent for a one-dimensional inverse-square strength:
/// beta = 1/2 + sqrt(1 + 4 g)/2, defined for g >= -1/4.
pub fn beta_from_g(g: f64) -> Result<f64> {
    if !(g >= -0.25) {
        return Err(Error::CouplingCollapse(g));
    }
    Ok(0.5 + 0.5 * (1.0 + 4.0 * g).sqrt())
}

/// Inverse of [`beta_from_g`]: g = beta (beta - 1), defined for beta >= 1/2.
pub fn g_from_beta(beta: f64) -> Result<f64> {
    if !(beta >= 0.5) {
        return Err(Error::NonPhysicalRoot(beta));
    }
    Ok(beta * (beta - 1.0))
}

fn check_dimension(d: u32) -> Result<f64> {
    if d < 2 {
        return Err(Error::DimensionTooSmall(d));
    }
    Ok(f64::from(d))
}

/// Nonnegative root of beta^2 + (D - 2) beta = g.
///
/// Evaluated as 2g / ((D - 2) + sqrt((D - 2)^2 + 4 g)), which stays accurate
/// when g is tiny compared to (D - 2)^2 and returns exactly 0 at g = 0.
pub fn beta_from_g_ddim(g: f64, d: u32) -> Result<f64> {
    let df = check_dimension(d)?;
    if !(g >= 0.0) {
        return Err(Error::NegativeCoupling(g));
    }
    if g == 0.0 {
        return Ok(0.0);
    }
    let shift = df - 2.0;
    Ok(2.0 * g / (shift + (shift * shift + 4.0 * g).sqrt()))
}

/// The constrained three-body strength G(g) = beta(g)^2 of the D-dimensional
/// family. Strictly increasing in g, with G(0) = 0.
pub fn three_body_from_two_body(g: f64, d: u32) -> Result<f64> {
    let beta = beta_from_g_ddim(g, d)?;
    Ok(beta * beta)
}

/// A validated (g, beta) pair for one-dimensional inverse-square interactions.
///
/// Whichever side it is built from, g = beta (beta - 1) holds and beta is the
/// positive root (beta >= 1/2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseSquarePair {
    g: f64,
    beta: f64,
}

impl InverseSquarePair {
    pub fn from_strength(g: f64) -> Result<Self> {
        Ok(Self {
            g,
            beta: beta_from_g(g)?,
        })
    }

    pub fn from_exponent(beta: f64) -> Result<Self> {
        Ok(Self {
            g: g_from_beta(beta)?,
            beta,
        })
    }

    pub fn strength(&self) -> f64 {
        self.g
    }

    pub fn exponent(&self) -> f64 {
        self.beta
    }
}

/// A validated (D, g, G, beta) tuple for the D-dimensional family, with
/// G = beta^2 and g = G + (D - 2) sqrt(G).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionedCoupling {
    d: u32,
    g: f64,
    three_body: f64,
    beta: f64,
}

impl DimensionedCoupling {
    pub fn from_two_body(g: f64, d: u32) -> Result<Self> {
        let beta = beta_from_g_ddim(g, d)?;
        Ok(Self {
            d,
            g,
            three_body: beta * beta,
            beta,
        })
    }

    pub fn dimension(&self) -> u32 {
        self.d
    }

    pub fn two_body(&self) -> f64 {
        self.g
    }

    pub fn three_body(&self) -> f64 {
        self.three_body
    }

    pub fn exponent(&self) -> f64 {
        self.beta
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn beta_from_g_reference_points() {
        assert_eq!(beta_from_g(0.0).unwrap(), 1.0);
        assert_eq!(beta_from_g(2.0).unwrap(), 2.0);
        assert_eq!(beta_from_g(-0.25).unwrap(), 0.5);
    }

    #[test]
    fn beta_from_g_rejects_collapse_regime() {
        assert!(matches!(
            beta_from_g(-0.2500001),
            Err(Error::CouplingCollapse(_))
        ));
        assert!(beta_from_g(f64::NAN).is_err());
    }

    #[test]
    fn g_from_beta_reference_points() {
        assert_eq!(g_from_beta(1.0).unwrap(), 0.0);
        assert_eq!(g_from_beta(3.0).unwrap(), 6.0);
        assert_eq!(g_from_beta(0.5).unwrap(), -0.25);
        assert!(matches!(g_from_beta(0.49), Err(Error::NonPhysicalRoot(_))));
    }

    #[test]
    fn ddim_reference_points() {
        assert_eq!(beta_from_g_ddim(0.0, 3).unwrap(), 0.0);
        assert_eq!(beta_from_g_ddim(2.0, 3).unwrap(), 1.0);
        assert_eq!(beta_from_g_ddim(1.0, 2).unwrap(), 1.0);
        assert!(matches!(
            beta_from_g_ddim(-0.1, 3),
            Err(Error::NegativeCoupling(_))
        ));
        assert!(matches!(
            beta_from_g_ddim(1.0, 1),
            Err(Error::DimensionTooSmall(1))
        ));
    }

    #[test]
    fn three_body_reference_points() {
        assert_eq!(three_body_from_two_body(2.0, 3).unwrap(), 1.0);
        // D = 2 collapses the relation to G = g.
        assert_relative_eq!(
            three_body_from_two_body(5.0, 2).unwrap(),
            5.0,
            max_relative = 1e-15
        );
        // Nonnegative root of beta^2 + beta = 2.5, squared.
        let expected = {
            let b = (11.0_f64.sqrt() - 1.0) / 2.0;
            b * b
        };
        assert_relative_eq!(
            three_body_from_two_body(2.5, 3).unwrap(),
            expected,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            three_body_from_two_body(2.5, 3).unwrap(),
            1.341_688,
            max_relative = 1e-6
        );
    }

    #[test]
    fn pair_types_expose_consistent_views() {
        let p = InverseSquarePair::from_strength(6.0).unwrap();
        assert_eq!(p.exponent(), 3.0);
        let q = InverseSquarePair::from_exponent(3.0).unwrap();
        assert_eq!(q.strength(), 6.0);

        let c = DimensionedCoupling::from_two_body(2.0, 3).unwrap();
        assert_eq!(c.exponent(), 1.0);
        assert_eq!(c.three_body(), 1.0);
        assert_eq!(c.two_body(), 2.0);
        assert_eq!(c.dimension(), 3);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn round_trip_through_strength(b in 0.5f64..50.0) {
            let back = beta_from_g(g_from_beta(b).unwrap()).unwrap();
            prop_assert!((back - b).abs() <= 1e-12 * b.abs().max(1.0));
        }

        #[test]
        fn round_trip_ddim(b in 0.0f64..50.0, d in 2u32..12) {
            let g = b * b + (f64::from(d) - 2.0) * b;
            let back = beta_from_g_ddim(g, d).unwrap();
            prop_assert!((back - b).abs() <= 1e-12 * b.abs().max(1.0));
        }

        #[test]
        fn beta_map_is_strictly_increasing(g1 in -0.25f64..100.0, dg in 1e-6f64..100.0) {
            let lo = beta_from_g(g1).unwrap();
            let hi = beta_from_g(g1 + dg).unwrap();
            prop_assert!(hi > lo);
        }

        #[test]
        fn three_body_map_is_strictly_increasing(
            g1 in 0.0f64..100.0,
            dg in 1e-6f64..100.0,
            d in 2u32..10,
        ) {
            let lo = three_body_from_two_body(g1, d).unwrap();
            let hi = three_body_from_two_body(g1 + dg, d).unwrap();
            prop_assert!(hi > lo);
        }

        #[test]
        fn pair_invariant_holds_both_directions(g in -0.25f64..200.0) {
            let p = InverseSquarePair::from_strength(g).unwrap();
            let residual = p.exponent() * (p.exponent() - 1.0) - p.strength();
            prop_assert!(residual.abs() <= 1e-12 * p.strength().abs().max(1.0));
            prop_assert!(p.exponent() >= 0.5);
        }

        #[test]
        fn dimensioned_invariant_holds(g in 0.0f64..200.0, d in 2u32..10) {
            let c = DimensionedCoupling::from_two_body(g, d).unwrap();
            let sqrt_g3 = c.three_body().sqrt();
            let residual = c.three_body() + (f64::from(d) - 2.0) * sqrt_g3 - c.two_body();
            prop_assert!(residual.abs() <= 1e-12 * c.two_body().abs().max(1.0));
            prop_assert_eq!(c.three_body() == 0.0, c.two_body() == 0.0);
            prop_assert_eq!(c.exponent() == 0.0, c.two_body() == 0.0);
        }
    }
}
