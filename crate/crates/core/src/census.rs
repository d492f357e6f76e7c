//! Degeneration-side counts: positive traversals of prohibition grids,
//! the backwards-edge stratification of top-to-bottom paths, and the
//! band diagram attached to an arbitrary prohibition sequence.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{binom, choose_nonneg, ExactInt};
use crate::error::{Error, Result};

/// Limit on the number of tuples any brute-force enumerator will visit.
pub const BRUTE_FORCE_LIMIT: u128 = 100_000_000;
/// Limit for the set `S` enumeration.
pub const SET_S_LIMIT: u128 = 10_000_000;

/// Forbidden column label per row; `0` means the row has no prohibition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProhibitionSequence {
    labels: Vec<u32>,
    modulus: u32,
}

impl ProhibitionSequence {
    pub fn new(labels: Vec<u32>, modulus: u32) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::invalid(
                "prohibition sequence needs at least one row",
            ));
        }
        if modulus < 2 {
            return Err(Error::invalid(format!(
                "modulus must be at least 2, got {modulus}"
            )));
        }
        if let Some(bad) = labels.iter().find(|&&l| l > modulus) {
            return Err(Error::invalid(format!(
                "label {bad} outside [0, {modulus}]"
            )));
        }
        Ok(ProhibitionSequence { labels, modulus })
    }

    /// No prohibitions at all.
    pub fn free(rows: usize, modulus: u32) -> Result<Self> {
        Self::new(vec![0; rows], modulus)
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.labels.len()
    }
}

impl fmt::Display for ProhibitionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A `rows x g` grid whose column `c` carries label `1 + (c-1) mod modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridSpec {
    pub g: u64,
    pub prohibition: ProhibitionSequence,
}

impl GridSpec {
    pub fn new(g: u64, prohibition: ProhibitionSequence) -> Self {
        GridSpec { g, prohibition }
    }

    pub fn rows(&self) -> usize {
        self.prohibition.rows()
    }

    pub fn modulus(&self) -> u32 {
        self.prohibition.modulus
    }

    pub fn label(&self, column: u64) -> u32 {
        column_label(column, self.modulus())
    }

    /// `row` is 0-based, `column` 1-based.
    pub fn is_prohibited(&self, row: usize, column: u64) -> bool {
        let l = self.prohibition.labels[row];
        l != 0 && self.label(column) == l
    }
}

fn column_label(column: u64, modulus: u32) -> u32 {
    1 + ((column - 1) % modulus as u64) as u32
}

/// Row-by-row prefix-sum count of strictly increasing column tuples that
/// avoid every prohibited cell.
pub fn count_traversals_dp(spec: &GridSpec) -> ExactInt {
    let g = spec.g as usize;
    let d = spec.rows();
    if d > g {
        return BigInt::zero();
    }
    // ways[c]: admissible prefixes whose last column is c + 1.
    let mut ways: Vec<BigInt> = (1..=g as u64)
        .map(|c| BigInt::from(!spec.is_prohibited(0, c) as u8))
        .collect();
    for row in 1..d {
        let mut next = vec![BigInt::zero(); g];
        let mut running = BigInt::zero();
        for c in 1..g {
            running += &ways[c - 1];
            if !spec.is_prohibited(row, c as u64 + 1) {
                next[c] = running.clone();
            }
        }
        ways = next;
    }
    ways.into_iter().sum()
}

/// Direct enumeration of the same tuples; guarded.
pub fn count_traversals_brute(spec: &GridSpec) -> Result<ExactInt> {
    let d = spec.rows();
    let size = binom(spec.g as i64, d as i64)?;
    guard("count_traversals_brute", &size, BRUTE_FORCE_LIMIT)?;

    fn rec(spec: &GridSpec, row: usize, from: u64) -> u64 {
        if row == spec.rows() {
            return 1;
        }
        (from..=spec.g)
            .filter(|&c| !spec.is_prohibited(row, c))
            .map(|c| rec(spec, row + 1, c + 1))
            .sum()
    }
    Ok(BigInt::from(rec(spec, 0, 1)))
}

fn guard(what: &'static str, size: &BigInt, limit: u128) -> Result<()> {
    match size.to_u128() {
        Some(n) if n <= limit => Ok(()),
        other => Err(Error::GuardExceeded {
            what,
            size: other.unwrap_or(u128::MAX),
            limit,
        }),
    }
}

/// Forbidden labels for the pencil case: row `k` avoids `2k - 1` reduced
/// into `[1, 2t+1]`.
pub fn r1_prohibition(t: u32) -> Result<ProhibitionSequence> {
    if t == 0 {
        return Err(Error::invalid("t must be at least 1"));
    }
    let modulus = 2 * t + 1;
    let labels = (1..=t + 1).map(|k| 1 + (2 * k - 2) % modulus).collect();
    ProhibitionSequence::new(labels, modulus)
}

pub fn r1_grid(t: u32, u: u32) -> Result<GridSpec> {
    if u == 0 {
        return Err(Error::invalid("u must be at least 1"));
    }
    Ok(GridSpec::new(
        (2 * t as u64 + 1) * u as u64,
        r1_prohibition(t)?,
    ))
}

/// `|{ j_1 < ... < j_{t+1} in [(2t+1)u] : j_k != 2k-1 mod 2t+1 }|`, by
/// listing the subsets.
pub fn count_set_s(t: u32, u: u32) -> Result<ExactInt> {
    if t == 0 || u == 0 {
        return Err(Error::invalid("t and u must be at least 1"));
    }
    let n = (2 * t as u64 + 1) * u as u64;
    let d = t as usize + 1;
    guard("count_set_s", &binom(n as i64, d as i64)?, SET_S_LIMIT)?;
    let modulus = 2 * t as u64 + 1;

    let mut count = 0u64;
    let mut js: Vec<u64> = (1..=d as u64).collect();
    if js.len() as u64 > n {
        return Ok(BigInt::zero());
    }
    loop {
        let ok = js
            .iter()
            .enumerate()
            .all(|(k, &j)| !(j + modulus - (2 * k as u64 + 1) % modulus).is_multiple_of(modulus));
        count += ok as u64;
        // next combination of [1, n]
        let mut i = d;
        while i > 0 && js[i - 1] == n - (d - i) as u64 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        js[i - 1] += 1;
        for k in i..d {
            js[k] = js[k - 1] + 1;
        }
    }
    Ok(BigInt::from(count))
}

/// Top-to-bottom paths of `Gamma(d, e)`: `binom(d + e - 1, d)`.
pub fn path_count_gamma(d: u64, e: u64) -> Result<ExactInt> {
    if d == 0 || e == 0 {
        return Err(Error::invalid("path_count_gamma needs d, e >= 1"));
    }
    binom((d + e - 1) as i64, d as i64)
}

/// Walks every path of `Gamma(d, e)` (one weakly-rightward step per row).
pub fn path_count_gamma_brute(d: u64, e: u64) -> Result<ExactInt> {
    guard(
        "path_count_gamma_brute",
        &path_count_gamma(d, e)?,
        BRUTE_FORCE_LIMIT,
    )?;
    fn rec(rows_left: u64, col: u64, e: u64) -> u64 {
        if rows_left == 0 {
            return 1;
        }
        (col..=e).map(|c| rec(rows_left - 1, c, e)).sum()
    }
    Ok(BigInt::from(rec(d, 1, e)))
}

/// Counts `W^s(d)`: tuples `x` with `j <= x_1 + ... + x_j <= s + j - 1`,
/// stratified by the number of negative entries. Index `k` of the result
/// is the number of tuples with `k` negative entries.
pub fn enumerate_w(s: u32, d: u32) -> Result<Vec<u64>> {
    if s == 0 || d == 0 {
        return Err(Error::invalid("enumerate_w needs s, d >= 1"));
    }
    let size = BigInt::from(s).pow(d);
    guard("enumerate_w", &size, BRUTE_FORCE_LIMIT)?;
    let rows = w_rows(s, d);
    Ok(enumerate_strata(&rows, |prev, cur| cur < prev))
}

/// Admissible partial sums per row, with the fixed `P_0 = 0` in front.
fn w_rows(s: u32, d: u32) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![0i64]];
    rows.extend((1..=d as i64).map(|j| (j..=s as i64 + j - 1).collect()));
    rows
}

/// Brute-force strata over all tuples picking one value per row; `back`
/// decides whether a step between consecutive rows is backwards.
fn enumerate_strata<F>(rows: &[Vec<i64>], back: F) -> Vec<u64>
where
    F: Fn(i64, i64) -> bool + Sync,
{
    let n = rows.len();
    fn rec<F: Fn(i64, i64) -> bool>(
        rows: &[Vec<i64>],
        row: usize,
        prev: i64,
        k: usize,
        back: &F,
        counts: &mut [u64],
    ) {
        if row == rows.len() {
            counts[k] += 1;
            return;
        }
        for &v in &rows[row] {
            rec(rows, row + 1, v, k + back(prev, v) as usize, back, counts);
        }
    }
    // Shard over the first two rows.
    let prefixes: Vec<(i64, i64)> = match n {
        0 => return vec![1],
        1 => return vec![rows[0].len() as u64],
        _ => rows[0]
            .iter()
            .flat_map(|&a| rows[1].iter().map(move |&b| (a, b)))
            .collect(),
    };
    prefixes
        .par_iter()
        .map(|&(a, b)| {
            let mut counts = vec![0u64; n];
            rec(rows, 2, b, back(a, b) as usize, &back, &mut counts);
            counts
        })
        .reduce(
            || vec![0u64; n],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                x
            },
        )
}

/// Same strata by dynamic programming over (row, value, backwards steps).
fn dp_strata<F>(rows: &[Vec<i64>], back: F) -> Vec<BigInt>
where
    F: Fn(i64, i64) -> bool,
{
    let n = rows.len();
    if n == 0 {
        return vec![BigInt::from(1)];
    }
    let mut cur: Vec<Vec<BigInt>> = rows[0]
        .iter()
        .map(|_| {
            let mut v = vec![BigInt::zero(); n];
            v[0] = BigInt::from(1);
            v
        })
        .collect();
    for r in 1..n {
        let next = rows[r]
            .iter()
            .map(|&v| {
                let mut acc = vec![BigInt::zero(); n];
                for (&p, counts) in rows[r - 1].iter().zip(&cur) {
                    let shift = back(p, v) as usize;
                    for k in 0..n - shift {
                        if !counts[k].is_zero() {
                            acc[k + shift] += &counts[k];
                        }
                    }
                }
                acc
            })
            .collect();
        cur = next;
    }
    let mut total = vec![BigInt::zero(); n];
    for counts in cur {
        for (t, c) in total.iter_mut().zip(counts) {
            *t += c;
        }
    }
    total
}

/// `N_k^s(d)` for `k = 0..=d` without enumeration.
pub fn w_strata(s: u32, d: u32) -> Result<Vec<ExactInt>> {
    if s == 0 || d == 0 {
        return Err(Error::invalid("w_strata needs s, d >= 1"));
    }
    let mut strata = dp_strata(&w_rows(s, d), |prev, cur| cur < prev);
    strata.truncate(d as usize + 1);
    Ok(strata)
}

/// Pencil-case count `sum_k N_k binom(d + u - 2 - k, d)` with `d = t+1`,
/// `s = 2t`.
pub fn count_r1(t: u32, u: u32) -> Result<ExactInt> {
    if t == 0 || u == 0 {
        return Err(Error::invalid("t and u must be at least 1"));
    }
    let d = t + 1;
    let strata = w_strata(2 * t, d)?;
    Ok(strata
        .iter()
        .enumerate()
        .map(|(k, n)| n * choose_nonneg(d as i64 + u as i64 - 2 - k as i64, d as u64))
        .sum())
}

/// Bands of width `s` read off a prohibition sequence: each row starts
/// at the first unprohibited column after the previous row's start.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BandDiagram {
    pub prohibition: ProhibitionSequence,
    pub bands: Vec<Vec<u64>>,
    /// Number of `s+1`-column periods the bands occupy.
    pub periods: u64,
}

impl BandDiagram {
    pub fn new(prohibition: &ProhibitionSequence) -> Self {
        let modulus = prohibition.modulus;
        let s = modulus as u64 - 1;
        let mut bands = Vec::with_capacity(prohibition.rows());
        let mut start = 0u64;
        for &l in prohibition.labels() {
            let forbidden = |c: u64| l != 0 && column_label(c, modulus) == l;
            start += 1;
            while forbidden(start) {
                start += 1;
            }
            let band: Vec<u64> = (start..=start + s)
                .filter(|&c| !forbidden(c))
                .take(s as usize)
                .collect();
            bands.push(band);
        }
        let last = *bands.last().and_then(|b| b.last()).unwrap_or(&0);
        let periods = last.div_ceil(modulus as u64);
        BandDiagram {
            prohibition: prohibition.clone(),
            bands,
            periods,
        }
    }

    fn rows_i64(&self) -> Vec<Vec<i64>> {
        self.bands
            .iter()
            .map(|b| b.iter().map(|&c| c as i64).collect())
            .collect()
    }

    /// Band tuples stratified by the number of weakly backwards steps
    /// `c_{j+1} <= c_j`, for `k = 0..=d`.
    pub fn strata(&self) -> Vec<ExactInt> {
        let mut strata = dp_strata(&self.rows_i64(), |prev, cur| cur <= prev);
        strata.push(BigInt::zero());
        strata
    }

    /// Enumerative version of [`Self::strata`]; guarded.
    pub fn strata_brute(&self) -> Result<Vec<u64>> {
        let size: BigInt = self.bands.iter().map(|b| BigInt::from(b.len())).product();
        guard("band strata", &size, BRUTE_FORCE_LIMIT)?;
        let mut strata = enumerate_strata(&self.rows_i64(), |prev, cur| cur <= prev);
        strata.push(0);
        Ok(strata)
    }

    /// `sum_k N_k binom(d + u - p - k, d)`.
    pub fn stratified_count(&self, u: u64) -> ExactInt {
        let d = self.prohibition.rows() as i64;
        let p = self.periods as i64;
        self.strata()
            .iter()
            .enumerate()
            .map(|(k, n)| n * choose_nonneg(d + u as i64 - p - k as i64, d as u64))
            .sum()
    }

    /// Positive traversals of the `(s+1)u`-column grid not accounted for
    /// by [`Self::stratified_count`].
    pub fn leftover(&self, u: u64) -> ExactInt {
        let g = self.prohibition.modulus as u64 * u;
        count_traversals_dp(&GridSpec::new(g, self.prohibition.clone())) - self.stratified_count(u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn set_s_examples() {
        assert_eq!(count_set_s(1, 2).unwrap(), big(4));
        assert_eq!(count_set_s(1, 1).unwrap(), big(0));
        assert_eq!(count_set_s(2, 2).unwrap(), big(40));
        assert!(matches!(
            count_set_s(10, 10),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn dp_examples() {
        let free = GridSpec::new(6, ProhibitionSequence::free(2, 3).unwrap());
        assert_eq!(count_traversals_dp(&free), big(15));
        assert_eq!(count_traversals_dp(&r1_grid(1, 2).unwrap()), big(4));
        let tall = GridSpec::new(5, ProhibitionSequence::new(vec![1; 6], 3).unwrap());
        assert_eq!(count_traversals_dp(&tall), big(0));
    }

    #[test]
    fn dp_matches_brute() {
        for labels in [vec![1, 3, 2], vec![0, 2, 2], vec![4, 1, 3, 2]] {
            for g in 1..14 {
                let spec = GridSpec::new(g, ProhibitionSequence::new(labels.clone(), 4).unwrap());
                assert_eq!(
                    count_traversals_dp(&spec),
                    count_traversals_brute(&spec).unwrap()
                );
            }
        }
    }

    #[test]
    fn r1_labels() {
        assert_eq!(r1_prohibition(1).unwrap().labels(), &[1, 3]);
        assert_eq!(r1_prohibition(2).unwrap().labels(), &[1, 3, 5]);
        assert_eq!(r1_prohibition(3).unwrap().labels(), &[1, 3, 5, 7]);
        assert_eq!(r1_prohibition(4).unwrap().labels(), &[1, 3, 5, 7, 9]);
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(path_count_gamma(1, 7).unwrap(), big(7));
        assert_eq!(path_count_gamma(5, 1).unwrap(), big(1));
        assert_eq!(path_count_gamma(2, 4).unwrap(), big(10));
        assert_eq!(path_count_gamma_brute(2, 4).unwrap(), big(10));
        assert!(path_count_gamma(0, 3).is_err());
    }

    #[test]
    fn w_examples() {
        assert_eq!(enumerate_w(2, 2).unwrap(), vec![4, 0, 0]);
        assert_eq!(enumerate_w(4, 3).unwrap(), vec![40, 24, 0, 0]);
        assert_eq!(enumerate_w(6, 4).unwrap(), vec![364, 784, 148, 0, 0]);
        assert_eq!(
            enumerate_w(8, 5).unwrap(),
            vec![3264, 16920, 11664, 920, 0, 0]
        );
    }

    #[test]
    fn w_dp_matches_enumeration() {
        for s in 1..6 {
            for d in 1..6 {
                let brute = enumerate_w(s, d).unwrap();
                let dp = w_strata(s, d).unwrap();
                assert_eq!(
                    dp,
                    brute.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>()
                );
            }
        }
    }

    #[test]
    fn r1_counts() {
        let expected = [[0, 4, 12], [0, 40, 184], [0, 364, 2604]];
        for t in 1..=3u32 {
            for u in 1..=3u32 {
                assert_eq!(
                    count_r1(t, u).unwrap(),
                    big(expected[t as usize - 1][u as usize - 1])
                );
            }
        }
    }

    #[test]
    fn band_for_pencil_case_has_no_leftover() {
        for t in 1..=3 {
            let band = BandDiagram::new(&r1_prohibition(t).unwrap());
            assert_eq!(band.periods, 2);
            let strata = band.strata();
            let w = w_strata(2 * t, t + 1).unwrap();
            assert_eq!(strata, w);
            for u in 1..=5 {
                assert!(band.leftover(u).is_zero());
            }
        }
    }

    #[test]
    fn band_worked_chain() {
        let band = BandDiagram::new(&ProhibitionSequence::new(vec![1, 3, 2, 4, 3, 5], 5).unwrap());
        assert_eq!(band.bands[0], vec![2, 3, 4, 5]);
        assert_eq!(band.bands[5], vec![8, 9, 11, 12]);
        assert_eq!(band.periods, 3);
        let strata: Vec<BigInt> = [121, 1457, 2103, 411, 4, 0, 0]
            .iter()
            .map(|&v| big(v))
            .collect();
        assert_eq!(band.strata(), strata);
        assert_eq!(
            band.strata_brute().unwrap(),
            vec![121, 1457, 2103, 411, 4, 0, 0]
        );
        assert_eq!(band.leftover(1), big(0));
        assert_eq!(band.leftover(2), big(4));
    }
}
