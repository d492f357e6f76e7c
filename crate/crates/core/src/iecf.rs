//! Closed-form inclusion-exclusion for the backwards-edge strata: counts
//! of paths with at least `j` backwards edges, converted to exact counts
//! through a table of coefficients `gamma_j^k`.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{binom, choose_nonneg, multinomial, partitions_of, ExactInt, Partition};
use crate::error::{Error, Result};

pub const GAMMA_HEADER: &str = "gamma-table v1";
pub const GAMMA_FILE: &str = "gamma.txt";
const SHIPPED_GAMMA: &str = include_str!("../data/gamma.txt");

/// `N(a, e) = binom(a + e - 1, a)`; zero when `e = 0` and `a > 0`.
fn path_count(a: u64, e: u64) -> BigInt {
    choose_nonneg(a as i64 + e as i64 - 1, a)
}

/// Binary strings on `d - 1` bits whose runs of ones have lengths `lam`
/// (in any order): `multinomial(e_1, ..) * binom(d - |lam|, l(lam))`.
pub fn c_d(d: u64, lam: &Partition) -> ExactInt {
    let (w, l) = (lam.weight(), lam.len() as u64);
    if w + l > d {
        return BigInt::zero();
    }
    let mults: Vec<u64> = lam
        .multiplicities()
        .iter()
        .map(|&(_, e)| e as u64)
        .collect();
    multinomial(&mults) * choose_nonneg((d - w) as i64, l)
}

/// `prod_i N(lam_i + 1, 2d - 2 - 2 lam_i) * (2d - 2)^(d - l - |lam|)`,
/// zero when the exponent is negative.
pub fn m_d(d: u64, lam: &Partition) -> ExactInt {
    let (w, l) = (lam.weight(), lam.len() as u64);
    if w + l > d || d == 0 {
        return BigInt::zero();
    }
    let mut out = BigInt::from(2 * d - 2).pow((d - l - w) as u32);
    for &p in lam.parts() {
        let p = p as u64;
        let e = (2 * d - 2).saturating_sub(2 * p);
        out *= path_count(p + 1, e);
    }
    out
}

fn check_level(d: u64, j: u64) -> Result<()> {
    if d < 2 {
        return Err(Error::invalid(format!("need d >= 2, got {d}")));
    }
    if j > d - 2 {
        return Err(Error::invalid(format!("level {j} outside [0, {}]", d - 2)));
    }
    Ok(())
}

/// Paths with at least `j` marked backwards edges: `sum_{|lam| = j} c_d m_d`.
pub fn n_plus(d: u64, j: u64) -> Result<ExactInt> {
    check_level(d, j)?;
    Ok(partitions_of(j as u32)
        .iter()
        .map(|lam| c_d(d, lam) * m_d(d, lam))
        .sum())
}

/// `sum_{k=j}^{d-2} (-1)^(k-j) gamma_j^k n_plus(d, k)`.
pub fn n_exact_closed(d: u64, j: u64, gammas: &GammaTable) -> Result<ExactInt> {
    check_level(d, j)?;
    let mut total = BigInt::zero();
    for k in j..=d - 2 {
        let gamma = gammas.get(d, j, k).ok_or_else(|| {
            Error::invalid(format!("gamma table has no entry for d={d}, j={j}, k={k}"))
        })?;
        let term = gamma * n_plus(d, k)?;
        if (k - j).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Closed sum for the top stratum `k = d - 2`.
pub fn n_top(d: u64) -> Result<ExactInt> {
    if d < 2 {
        return Err(Error::invalid(format!("n_top needs d >= 2, got {d}")));
    }
    let d = d as i64;
    let mut total = BigInt::zero();
    for j in 1..d {
        total += binom(2 * d - j - 1, j)? * binom(d + j - 1, d - j)?;
    }
    Ok(total)
}

/// Coefficients `gamma_j^k(d)` keyed by `(d, j, k)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GammaTable {
    entries: BTreeMap<(u64, u64, u64), BigInt>,
}

impl GammaTable {
    /// The table shipped with the crate (`d = 2..=6`).
    pub fn shipped() -> Self {
        Self::parse(SHIPPED_GAMMA, GAMMA_FILE).expect("embedded gamma table parses")
    }

    /// `gamma_j^k = binom(k, j)` for every `d` up to `max_d`.
    pub fn binomial(max_d: u64) -> Self {
        let mut entries = BTreeMap::new();
        for d in 2..=max_d {
            for j in 0..=d - 2 {
                for k in j..=d - 2 {
                    entries.insert((d, j, k), choose_nonneg(k as i64, j));
                }
            }
        }
        GammaTable { entries }
    }

    /// Header line `gamma-table v1`, then `d j k value` per line.
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::Parse {
            path: origin.to_string(),
            line,
            message,
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, l)) if l == GAMMA_HEADER => {}
            Some((n, l)) => {
                return Err(err(
                    n,
                    format!("expected header `{GAMMA_HEADER}`, got `{l}`"),
                ))
            }
            None => return Err(err(0, "empty gamma table".into())),
        }
        let mut entries = BTreeMap::new();
        for (n, l) in lines {
            let fields: Vec<&str> = l.split_whitespace().collect();
            if fields.len() != 4 {
                return Err(err(n, format!("expected `d j k value`, got `{l}`")));
            }
            let key = |i: usize| {
                fields[i]
                    .parse::<u64>()
                    .map_err(|e| err(n, format!("bad index `{}`: {e}", fields[i])))
            };
            let (d, j, k) = (key(0)?, key(1)?, key(2)?);
            if d < 2 || j > k || k > d - 2 {
                return Err(err(
                    n,
                    format!("indices need j <= k <= d - 2, got {d} {j} {k}"),
                ));
            }
            let value: BigInt = fields[3]
                .parse()
                .map_err(|e| err(n, format!("bad value `{}`: {e}", fields[3])))?;
            if entries.insert((d, j, k), value).is_some() {
                return Err(err(n, format!("duplicate entry for {d} {j} {k}")));
            }
        }
        Ok(GammaTable { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn get(&self, d: u64, j: u64, k: u64) -> Option<&BigInt> {
        self.entries.get(&(d, j, k))
    }

    pub fn insert(&mut self, d: u64, j: u64, k: u64, value: BigInt) {
        self.entries.insert((d, j, k), value);
    }

    pub fn max_d(&self) -> u64 {
        self.entries.keys().map(|&(d, _, _)| d).max().unwrap_or(0)
    }

    /// Every `gamma_j^j` equals one.
    pub fn is_unitriangular(&self) -> bool {
        self.entries
            .iter()
            .filter(|((_, j, k), _)| j == k)
            .all(|(_, v)| v.is_one())
    }
}
