use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};

use super::vanishing::NearConsecSeq;

/// Largest rank the exhaustive claim checks accept.
pub const MAX_CLAIM_RANK: u64 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    /// Complement `m - 1 - L_i`, except `m - L_i` at the distinguished index.
    A,
    /// Complement `m - L_i` everywhere.
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimParams {
    pub s: u64,
    pub m: u64,
    /// 1-based position of the gap in the nearly consecutive sequence.
    pub i0: u64,
    /// Number of base points.
    pub big_m: u64,
    /// Length of the included sequence minus one.
    pub sstar: u64,
}

impl fmt::Display for ClaimParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "s={}, m={}, i0={}, M={}, s*={}",
            self.s, self.m, self.i0, self.big_m, self.sstar
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub kind: ClaimKind,
    pub params: ClaimParams,
    /// Smallest shift over all feasible pairs; `None` when there are none.
    pub min_shift: Option<i64>,
    pub vacuous: bool,
    /// The asserted lower bound `M * s* + 1`.
    pub bound: i64,
    pub feasible_pairs: u64,
}

fn check_params(p: &ClaimParams) -> Result<()> {
    if p.s > MAX_CLAIM_RANK {
        return Err(Error::GuardExceeded {
            what: "claim check rank",
            size: p.s as u128,
            limit: MAX_CLAIM_RANK as u128,
        });
    }
    if p.big_m < 2 {
        return Err(Error::invalid(format!(
            "M must be at least 2, got {}",
            p.big_m
        )));
    }
    if p.i0 < 2 || p.i0 > p.s {
        return Err(Error::invalid(format!(
            "distinguished index {} outside [2, {}]",
            p.i0, p.s
        )));
    }
    if p.sstar > p.s {
        return Err(Error::invalid(format!(
            "s* = {} exceeds s = {}",
            p.sstar, p.s
        )));
    }
    if p.m <= p.s {
        return Err(Error::invalid(format!(
            "degree {} too small for rank {}",
            p.m, p.s
        )));
    }
    Ok(())
}

fn verify(kind: ClaimKind, p: ClaimParams) -> Result<ClaimReport> {
    check_params(&p)?;
    let n = (p.s + 1) as usize;
    let i0 = p.i0 as usize;
    let m = p.m as i64;
    let big_m = p.big_m as i64;
    let len = (p.sstar + 1) as usize;

    let l: Vec<i64> = NearConsecSeq::with_gap(i0, p.s as usize)?
        .values()
        .iter()
        .map(|&v| v as i64)
        .collect();
    let (complement, bound_vec): (Vec<i64>, Vec<i64>) = match kind {
        ClaimKind::A => {
            let c = (0..n)
                .map(|i| if i + 1 == i0 { m - l[i] } else { m - 1 - l[i] })
                .collect();
            let mut b = vec![m - big_m - 1; len];
            b[len - 1] = m - big_m;
            (c, b)
        }
        ClaimKind::B => ((0..n).map(|i| m - l[i]).collect(), vec![m - big_m; len]),
    };

    let mut best: Option<i64> = None;
    let mut feasible = 0u64;
    let subsets: Vec<Vec<usize>> = (0..n).combinations(len).collect();
    for rows in &subsets {
        for cols in &subsets {
            let ok = rows
                .iter()
                .zip(cols)
                .zip(&bound_vec)
                .all(|((&i, &j), &b)| l[i] + complement[j] <= b);
            if ok {
                feasible += 1;
                let sh: i64 = rows
                    .iter()
                    .zip(cols)
                    .map(|(&i, &j)| j as i64 - i as i64)
                    .sum();
                best = Some(best.map_or(sh, |b| b.min(sh)));
            }
        }
    }

    let bound = big_m * p.sstar as i64 + 1;
    if let Some(min_shift) = best {
        if min_shift < bound {
            return Err(Error::ClaimViolated {
                params: format!("claim {kind:?} ({p})"),
                min_shift,
                bound,
            });
        }
    }
    Ok(ClaimReport {
        kind,
        params: p,
        min_shift: best,
        vacuous: best.is_none(),
        bound,
        feasible_pairs: feasible,
    })
}

/// Exhaustively checks the shift bound against the `m°`-complement.
pub fn verify_claim_a(p: ClaimParams) -> Result<ClaimReport> {
    verify(ClaimKind::A, p)
}

/// Exhaustively checks the shift bound against the `m°°`-complement.
pub fn verify_claim_b(p: ClaimParams) -> Result<ClaimReport> {
    verify(ClaimKind::B, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(s: u64, m: u64, i0: u64, big_m: u64, sstar: u64) -> ClaimParams {
        ClaimParams {
            s,
            m,
            i0,
            big_m,
            sstar,
        }
    }

    #[test]
    fn known_minima() {
        let a = verify_claim_a(params(4, 20, 3, 2, 1)).unwrap();
        assert_eq!(a.min_shift, Some(3));
        let b = verify_claim_b(params(4, 20, 3, 2, 1)).unwrap();
        assert_eq!(b.min_shift, Some(3));
        // i0 = 2 needs s >= 2.
        let a = verify_claim_a(params(2, 6, 2, 2, 0)).unwrap();
        assert_eq!(a.min_shift, Some(1));
    }

    #[test]
    fn vacuous_instance() {
        let b = verify_claim_b(params(3, 10, 2, 3, 1)).unwrap();
        assert!(b.vacuous);
        assert_eq!(b.feasible_pairs, 0);
    }

    #[test]
    fn guards() {
        assert!(verify_claim_a(params(9, 30, 2, 2, 1)).is_err());
        assert!(verify_claim_a(params(4, 20, 1, 2, 1)).is_err());
        assert!(verify_claim_a(params(4, 20, 3, 1, 1)).is_err());
        assert!(verify_claim_a(params(4, 20, 3, 2, 5)).is_err());
    }
}
