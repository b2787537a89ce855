//! Closed-form constants of the two lower spectral bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Which lower bound on the smallest eigenvalue `−1 + ℓ(ε, d)` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundVariant {
    /// Group actions by almost-automorphisms: `ℓ = ε⁴ / (2¹² d⁸)`.
    QuasiAutomorphic,
    /// Transitive groups of genuine automorphisms: `ℓ = ε⁴ / (2⁹ d¹⁰)`.
    VertexTransitive,
}

impl BoundVariant {
    fn constants(self) -> (u32, u32) {
        match self {
            BoundVariant::QuasiAutomorphic => (12, 8),
            BoundVariant::VertexTransitive => (9, 10),
        }
    }
}

fn check(epsilon: f64, d: u64) -> Result<()> {
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(Error::NonPositiveEpsilon(epsilon));
    }
    if d == 0 {
        return Err(Error::InvalidDegree(d));
    }
    Ok(())
}

/// `ℓ(ε, d)` in floating point.
pub fn ell(epsilon: f64, d: u64, variant: BoundVariant) -> Result<f64> {
    check(epsilon, d)?;
    let (two_pow, d_pow) = variant.constants();
    Ok(epsilon.powi(4) / (2f64.powi(two_pow as i32) * (d as f64).powi(d_pow as i32)))
}

/// `ℓ(ε, d)` in exact rational arithmetic.
pub fn ell_exact(epsilon: &BigRational, d: u64, variant: BoundVariant) -> Result<BigRational> {
    if !epsilon.is_positive() {
        return Err(Error::NonPositiveEpsilon(rational_to_f64(epsilon)));
    }
    if d == 0 {
        return Err(Error::InvalidDegree(d));
    }
    let (two_pow, d_pow) = variant.constants();
    let den = BigInt::from(2u32).pow(two_pow) * BigInt::from(d).pow(d_pow);
    Ok(epsilon.pow(4) / BigRational::from_integer(den))
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// `γ = d² √(2ℓ(2 − ℓ))` for `ℓ ∈ [0, 2]`.
pub fn gamma(ell_value: f64, d: u64) -> Result<f64> {
    if !(0.0..=2.0).contains(&ell_value) {
        return Err(Error::OutOfRange(ell_value));
    }
    let d2 = (d as f64).powi(2);
    Ok(d2 * (2.0 * ell_value * (2.0 - ell_value)).sqrt())
}

/// `γ²` exactly, for the same argument range.
pub fn gamma_squared_exact(ell_value: &BigRational, d: u64) -> Result<BigRational> {
    let two = BigRational::from_integer(BigInt::from(2));
    if ell_value.is_negative() || *ell_value > two {
        return Err(Error::OutOfRange(rational_to_f64(ell_value)));
    }
    let d4 = BigRational::from_integer(BigInt::from(d).pow(4));
    Ok(d4 * &two * ell_value * (&two - ell_value))
}

/// The quantity fed to `γ` in the orbit-intersection estimate:
/// `ε⁴ / (2⁹ d⁸)`, which is `d² · ℓ` for the vertex-transitive `ℓ`.
pub fn gamma_argument(epsilon: &BigRational, d: u64) -> Result<BigRational> {
    let ell = ell_exact(epsilon, d, BoundVariant::VertexTransitive)?;
    Ok(ell * BigRational::from_integer(BigInt::from(d).pow(2)))
}

/// Upper estimate `(2dγ/ε + √(6d²γ/ε²)) · n/2` for `|θ_i(O) ∩ O|` under
/// a hypothetical eigenvalue in `[−1, −1 + ℓ]`.
pub fn intersection_ceiling(epsilon: f64, d: u64, n: usize) -> Result<f64> {
    check(epsilon, d)?;
    let arg = gamma_argument(&float_to_rational(epsilon)?, d)?;
    let g = gamma(rational_to_f64(&arg), d)?;
    let df = d as f64;
    Ok((2.0 * df * g / epsilon + (6.0 * df * df * g / (epsilon * epsilon)).sqrt()) * n as f64 / 2.0)
}

fn float_to_rational(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or(Error::OutOfRange(x))
}

/// `h⁴ / (2⁹ d¹⁰)` as used for the lower endpoint, and `h²/(2d²)` for the
/// upper one, both exact.
pub fn interval_offsets(h_lower: &BigRational, h_upper: &BigRational, d: u64) -> Result<(BigRational, BigRational)> {
    let lower = if h_lower.is_zero() {
        BigRational::zero()
    } else {
        ell_exact(h_lower, d, BoundVariant::VertexTransitive)?
    };
    let den = BigRational::from_integer(BigInt::from(2) * BigInt::from(d).pow(2));
    Ok((lower, h_upper.pow(2) / den))
}
