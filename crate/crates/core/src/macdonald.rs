//! Macdonald's virtual count of included series `g^{s-d+r}_{m-d}` inside a
//! fixed `g^s_m` on a general genus-`g` curve, in both of its printed
//! coefficient-extraction forms, plus the `r = 1` closed sum, the
//! `r = s - 1` two-variable specialisation and the generalized Catalan
//! number counting the `g^s_m` themselves.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{choose, factorial, to_integer, TruncatedMultiPoly};
use crate::error::{Error, Result};

/// Parameters of an inclusion `g^{s-d+r}_{m-d} + D -> g^s_m` on a genus-`g`
/// curve, where `D` has degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SecantParams {
    pub g: u64,
    pub s: u64,
    pub m: u64,
    pub d: u64,
    pub r: u64,
}

impl SecantParams {
    pub fn new(g: u64, s: u64, m: u64, d: u64, r: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::invalid("d must be at least 1"));
        }
        if r == 0 || r > d {
            return Err(Error::invalid(format!(
                "r must satisfy 1 <= r <= d, got r={r}, d={d}"
            )));
        }
        if s == 0 {
            return Err(Error::invalid("s must be at least 1"));
        }
        if m <= d {
            return Err(Error::invalid(format!("m must exceed d, got m={m}, d={d}")));
        }
        if s + r < d {
            return Err(Error::invalid(format!(
                "included series would have negative dimension s-d+r = {}",
                s as i64 - d as i64 + r as i64
            )));
        }
        Ok(SecantParams { g, s, m, d, r })
    }

    /// The `r = 1` family with `s = 2d - 2`: `d`-secant `(d-2)`-planes.
    pub fn r1(d: u64, g: u64, m: u64) -> Result<Self> {
        Self::new(g, 2 * d - 2, m, d, 1)
    }

    /// Brill-Noether number of the ambient series.
    pub fn rho(&self) -> i64 {
        brill_noether(self.g, self.s, self.m)
    }

    /// Expected dimension of the family of secant planes.
    pub fn mu(&self) -> i64 {
        let (d, r, s) = (self.d as i64, self.r as i64, self.s as i64);
        d - r * (s + 1 - d + r)
    }

    /// Dimension `s - d + r` of the included series.
    pub fn included_rank(&self) -> u64 {
        self.s + self.r - self.d
    }

    /// Common extraction exponent `s - d + 2r`.
    pub fn extraction_exponent(&self) -> u64 {
        self.included_rank() + self.r
    }
}

impl fmt::Display for SecantParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g={}, s={}, m={}, d={}, r={}",
            self.g, self.s, self.m, self.d, self.r
        )
    }
}

pub fn brill_noether(g: u64, s: u64, m: u64) -> i64 {
    let (g, s, m) = (g as i64, s as i64, m as i64);
    g - (s + 1) * (s + g - m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Version {
    /// `r` variables, factor `prod (1 - t_i)^{g+s-m}`.
    One,
    /// `s - d + r + 1` variables, factor `prod (1 + t_i)^{m-g-s}`.
    Two,
}

/// `(-1)^{C(n,2)} / n!`: the normalisation attached to `Delta(t)^2` in `n`
/// variables.
fn vandermonde_normalisation(n: u64) -> BigRational {
    let sign = if (n * n.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    };
    BigRational::new(BigInt::from(sign), factorial(n))
}

/// `Delta(t)^2 = prod_{i>j} (t_i - t_j)^2`, truncated at `caps`.
fn vandermonde_squared(caps: &[u32]) -> TruncatedMultiPoly {
    let n = caps.len();
    let mut delta = TruncatedMultiPoly::one(caps.to_vec());
    let minus_one = BigRational::from_integer(BigInt::from(-1));
    for i in 0..n {
        for j in 0..i {
            let ti = TruncatedMultiPoly::variable(caps.to_vec(), i).expect("in range");
            let tj = TruncatedMultiPoly::variable(caps.to_vec(), j).expect("in range");
            let factor = ti.add(&tj.scale(&minus_one)).expect("same caps");
            delta = delta.mul(&factor).expect("same caps");
        }
    }
    delta.mul(&delta).expect("same caps")
}

/// Coefficient of `(t_1 ... t_n)^exponent` in
/// `prod (1 + scale t_i)^power * (1 + sum t_i)^g * Delta(t)^2`.
fn extract(n: u64, exponent: u64, scale: i64, power: i64, g: u64) -> BigRational {
    let caps = vec![exponent as u32; n as usize];
    let mut p = vandermonde_squared(&caps);
    for var in 0..n as usize {
        let series =
            TruncatedMultiPoly::linear_power(caps.clone(), var, scale, power).expect("in range");
        p = p.mul(&series).expect("same caps");
    }
    let sum_power = TruncatedMultiPoly::power_sum_power(caps.clone(), g);
    p.coefficient_of_product(&sum_power, &caps)
        .expect("target equals caps")
}

fn require_integer(value: BigRational, context: impl FnOnce() -> String) -> Result<BigInt> {
    to_integer(&value).ok_or_else(|| Error::NonIntegral {
        value: value.to_string(),
        context: context(),
    })
}

/// Macdonald's virtual number `N(g, s, m, d, r)`.
///
/// Version two is normalised by the number of variables it uses,
/// `s - d + r + 1`; with that normalisation both versions agree.
pub fn macdonald_general(p: &SecantParams, version: Version) -> Result<BigInt> {
    let exponent = p.extraction_exponent();
    let (g, s, m) = (p.g as i64, p.s as i64, p.m as i64);
    let (vars, scale, power) = match version {
        Version::One => (p.r, -1, g + s - m),
        Version::Two => (p.included_rank() + 1, 1, m - g - s),
    };
    let raw = extract(vars, exponent, scale, power, p.g);
    let value = raw * vandermonde_normalisation(vars);
    require_integer(value, || format!("{p}, version {version:?}"))
}

/// `sum_{i=0}^{d} (-1)^i C(g+2d-2-m, i) C(g, d-i)`: the `r = 1` case.
pub fn macdonald_r1(d: u64, g: u64, m: u64) -> BigInt {
    let top = g as i64 + 2 * d as i64 - 2 - m as i64;
    let mut total = BigInt::zero();
    for i in 0..=d {
        let term = choose(top, i) * choose(g as i64, d - i);
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Parameters `(g, s, m, d, r)` of the `r = s - 1` family with chain
/// multiplicity `u`: `d = 2r`, `s = r + 1`, `g = (r+2)u`, `m = (r+1)(u+1)`.
pub fn rs1_params(r: u64, u: u64) -> Result<SecantParams> {
    if r < 2 || u < 1 {
        return Err(Error::invalid(format!(
            "r = s-1 family needs r >= 2 and u >= 1, got r={r}, u={u}"
        )));
    }
    SecantParams::new((r + 2) * u, r + 1, (r + 1) * (u + 1), 2 * r, r)
}

/// Two-variable evaluation for `r = s - 1`:
/// `-1/2 [((1+t1)(1+t2))^{m-g-s} (1+t1+t2)^g (t1-t2)^2]_{t1^{r+1} t2^{r+1}}`.
pub fn macdonald_rs1(r: u64, u: u64) -> Result<BigInt> {
    let p = rs1_params(r, u)?;
    let exponent = r + 1;
    let caps = vec![exponent as u32; 2];
    let power = p.m as i64 - p.g as i64 - p.s as i64;

    let t1 = TruncatedMultiPoly::variable(caps.clone(), 0)?;
    let t2 = TruncatedMultiPoly::variable(caps.clone(), 1)?;
    let minus_one = BigRational::from_integer(BigInt::from(-1));
    let diff = t1.add(&t2.scale(&minus_one))?;
    let mut poly = diff.mul(&diff)?;
    poly = poly.mul(&TruncatedMultiPoly::linear_power(
        caps.clone(),
        0,
        1,
        power,
    )?)?;
    poly = poly.mul(&TruncatedMultiPoly::linear_power(
        caps.clone(),
        1,
        1,
        power,
    )?)?;
    let sum_power = TruncatedMultiPoly::power_sum_power(caps.clone(), p.g);
    let raw = poly.coefficient_of_product(&sum_power, &caps)?;
    let value = raw * BigRational::new(BigInt::from(-1), BigInt::from(2));
    require_integer(value, || format!("r={r}, u={u}"))
}

/// Generalized Catalan number `g! prod_{i=0}^{s} i! / (g-m+s+i)!`, the
/// number of `g^s_m` on a general curve when `rho = 0`.
pub fn eta(g: u64, s: u64, m: u64) -> Result<BigInt> {
    let rho = brill_noether(g, s, m);
    if rho != 0 {
        return Err(Error::invalid(format!(
            "eta requires rho(g,s,m) = 0, got rho = {rho}"
        )));
    }
    let base = g as i64 - m as i64 + s as i64;
    if base < 0 {
        return Err(Error::invalid(format!(
            "factorial of negative number: g-m+s = {base}"
        )));
    }
    let mut num = factorial(g);
    let mut den = BigInt::one();
    for i in 0..=s {
        num *= factorial(i);
        den *= factorial(base as u64 + i);
    }
    let (q, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::NonIntegral {
            value: BigRational::new(num, den).to_string(),
            context: format!("eta(g={g}, s={s}, m={m})"),
        });
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn closed_form_r1() {
        assert_eq!(macdonald_r1(2, 6, 6), int(4));
        assert_eq!(macdonald_r1(3, 10, 12), int(40));
        assert_eq!(macdonald_r1(2, 3, 4), int(0));
    }

    #[test]
    fn general_examples() {
        let p = SecantParams::new(6, 2, 6, 2, 1).unwrap();
        assert_eq!(macdonald_general(&p, Version::One).unwrap(), int(4));
        assert_eq!(macdonald_general(&p, Version::Two).unwrap(), int(4));
        let p = SecantParams::new(3, 2, 4, 2, 1).unwrap();
        assert_eq!(macdonald_general(&p, Version::One).unwrap(), int(0));
    }

    #[test]
    fn rs1_examples() {
        // Frozen from an independent sympy expansion of the two-variable
        // series and from direct traversal counts over Plucker chains.
        assert_eq!(macdonald_rs1(2, 1).unwrap(), int(0));
        assert_eq!(macdonald_rs1(2, 2).unwrap(), int(13));
        assert_eq!(macdonald_rs1(3, 1).unwrap(), int(0));
        assert_eq!(macdonald_rs1(3, 2).unwrap(), int(41));
        let p = SecantParams::new(10, 4, 12, 6, 3).unwrap();
        assert_eq!(macdonald_general(&p, Version::One).unwrap(), int(41));
        assert_eq!(macdonald_general(&p, Version::Two).unwrap(), int(41));
    }

    #[test]
    fn rs1_rejects_small_rank() {
        assert!(macdonald_rs1(1, 2).is_err());
        assert!(macdonald_rs1(2, 0).is_err());
    }

    #[test]
    fn params_validation() {
        assert!(SecantParams::new(6, 2, 6, 2, 0).is_err());
        assert!(SecantParams::new(6, 2, 6, 2, 3).is_err());
        assert!(SecantParams::new(6, 2, 2, 2, 1).is_err());
        assert!(SecantParams::new(6, 0, 6, 2, 1).is_err());
        assert!(SecantParams::new(6, 1, 6, 4, 2).is_err());
        let p = SecantParams::new(10, 4, 12, 6, 3).unwrap();
        assert_eq!(p.rho(), 0);
        assert_eq!(p.mu(), 0);
        assert_eq!(p.extraction_exponent(), 4);
    }

    #[test]
    fn eta_values() {
        assert_eq!(eta(4, 1, 3).unwrap(), int(2));
        assert_eq!(eta(6, 2, 6).unwrap(), int(5));
        assert_eq!(eta(0, 1, 1).unwrap(), int(1));
        // g - m + s < 0 always forces rho != 0 as well.
        assert!(eta(0, 3, 4).is_err());
        assert!(eta(5, 1, 3).is_err());
    }

    #[test]
    fn normalisation_signs() {
        assert_eq!(vandermonde_normalisation(1), BigRational::one());
        assert_eq!(
            vandermonde_normalisation(2),
            BigRational::new(int(-1), int(2))
        );
        assert_eq!(
            vandermonde_normalisation(3),
            BigRational::new(int(-1), int(6))
        );
        assert_eq!(
            vandermonde_normalisation(4),
            BigRational::new(int(1), int(24))
        );
    }
}
