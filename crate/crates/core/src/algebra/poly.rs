use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::binomial::{choose, factorial};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients and a
/// maximum exponent per variable.
///
/// Products drop every term whose exponent exceeds a cap in some variable,
/// so the stored polynomial agrees with the untruncated one on every
/// exponent vector `<= caps`. Coefficients beyond the caps are undefined
/// and [`TruncatedMultiPoly::coefficient`] refuses to report them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedMultiPoly {
    caps: Vec<u32>,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl TruncatedMultiPoly {
    pub fn zero(caps: Vec<u32>) -> Self {
        TruncatedMultiPoly {
            caps,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(caps: Vec<u32>, value: BigRational) -> Self {
        let mut p = Self::zero(caps);
        let origin = vec![0; p.caps.len()];
        p.insert(origin, value);
        p
    }

    pub fn one(caps: Vec<u32>) -> Self {
        Self::constant(caps, BigRational::one())
    }

    /// `coeff * t^exponents`; zero if the monomial lies beyond the caps.
    pub fn monomial(caps: Vec<u32>, exponents: Vec<u32>, coeff: BigRational) -> Result<Self> {
        if exponents.len() != caps.len() {
            return Err(Error::invalid(format!(
                "exponent vector has {} entries, polynomial has {} variables",
                exponents.len(),
                caps.len()
            )));
        }
        let mut p = Self::zero(caps);
        if exponents.iter().zip(&p.caps).all(|(e, c)| e <= c) {
            p.insert(exponents, coeff);
        }
        Ok(p)
    }

    /// The single variable `t_var`.
    pub fn variable(caps: Vec<u32>, var: usize) -> Result<Self> {
        let n = caps.len();
        if var >= n {
            return Err(Error::invalid(format!(
                "variable index {var} out of range for {n} variables"
            )));
        }
        let mut exps = vec![0; n];
        exps[var] = 1;
        Self::monomial(caps, exps, BigRational::one())
    }

    /// Truncated binomial series `(1 + scale * t_var)^exponent`; the
    /// exponent may be negative.
    pub fn linear_power(caps: Vec<u32>, var: usize, scale: i64, exponent: i64) -> Result<Self> {
        let n = caps.len();
        if var >= n {
            return Err(Error::invalid(format!(
                "variable index {var} out of range for {n} variables"
            )));
        }
        let cap = caps[var];
        let mut p = Self::zero(caps);
        let scale = BigInt::from(scale);
        let mut power = BigInt::one();
        for k in 0..=cap {
            let mut exps = vec![0; n];
            exps[var] = k;
            p.insert(
                exps,
                BigRational::from_integer(choose(exponent, k as u64) * &power),
            );
            power *= &scale;
        }
        Ok(p)
    }

    /// `(1 + t_1 + ... + t_n)^exponent` for `exponent >= 0`, filled in
    /// directly from multinomial coefficients.
    pub fn power_sum_power(caps: Vec<u32>, exponent: u64) -> Self {
        let mut p = Self::zero(caps);
        let g_fact = factorial(exponent);
        let mut exps = vec![0u32; p.caps.len()];
        loop {
            let total: u64 = exps.iter().map(|&e| e as u64).sum();
            if total <= exponent {
                let mut denom = factorial(exponent - total);
                for &e in &exps {
                    denom *= factorial(e as u64);
                }
                let value = BigRational::from_integer(&g_fact / denom);
                p.insert(exps.clone(), value);
            }
            if !advance(&mut exps, &p.caps) {
                break;
            }
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.caps.len()
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Result<BigRational> {
        self.check_within_caps(exponents)?;
        Ok(self
            .terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigRational::zero))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_caps(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        let mut out = Self::zero(self.caps.clone());
        if factor.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c * factor);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_caps(other)?;
        let mut acc: HashMap<Vec<u32>, BigRational> = HashMap::new();
        let mut exps = vec![0u32; self.caps.len()];
        for (ea, ca) in &self.terms {
            'inner: for (eb, cb) in &other.terms {
                for (i, slot) in exps.iter_mut().enumerate() {
                    let e = ea[i] + eb[i];
                    if e > self.caps[i] {
                        continue 'inner;
                    }
                    *slot = e;
                }
                let prod = ca * cb;
                match acc.get_mut(&exps) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(exps.clone(), prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(TruncatedMultiPoly {
            caps: self.caps.clone(),
            terms,
        })
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut result = Self::one(self.caps.clone());
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same caps");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same caps");
            }
        }
        result
    }

    /// A single coefficient of `self * other` without forming the product.
    pub fn coefficient_of_product(&self, other: &Self, exponents: &[u32]) -> Result<BigRational> {
        self.check_same_caps(other)?;
        self.check_within_caps(exponents)?;
        let mut total = BigRational::zero();
        let mut rest = vec![0u32; exponents.len()];
        'outer: for (e, c) in &self.terms {
            for i in 0..exponents.len() {
                if e[i] > exponents[i] {
                    continue 'outer;
                }
                rest[i] = exponents[i] - e[i];
            }
            if let Some(d) = other.terms.get(&rest) {
                total += c * d;
            }
        }
        Ok(total)
    }

    fn insert(&mut self, exps: Vec<u32>, value: BigRational) {
        if value.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v += value;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, value);
            }
        }
    }

    fn check_same_caps(&self, other: &Self) -> Result<()> {
        if self.caps != other.caps {
            return Err(Error::CapMismatch {
                left: self.caps.clone(),
                right: other.caps.clone(),
            });
        }
        Ok(())
    }

    fn check_within_caps(&self, exponents: &[u32]) -> Result<()> {
        if exponents.len() != self.caps.len()
            || exponents.iter().zip(&self.caps).any(|(e, c)| e > c)
        {
            return Err(Error::BeyondCap {
                exponent: exponents.to_vec(),
                caps: self.caps.clone(),
            });
        }
        Ok(())
    }
}

/// Odometer step over all exponent vectors `<= caps`.
fn advance(exps: &mut [u32], caps: &[u32]) -> bool {
    for i in 0..exps.len() {
        if exps[i] < caps[i] {
            exps[i] += 1;
            return true;
        }
        exps[i] = 0;
    }
    false
}

impl fmt::Display for TruncatedMultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (v, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*t{}", v + 1)?,
                    _ => write!(f, "*t{}^{e}", v + 1)?,
                }
            }
        }
        Ok(())
    }
}
