//! Self-verification suites: every engine is run against every other one
//! on bounded parameter grids and each comparison becomes a [`Check`].

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::census::{
    count_r1, count_set_s, count_traversals_dp, enumerate_w, r1_grid, w_strata, BandDiagram,
    ProhibitionSequence,
};
use crate::chains::{
    chan_ambient_table, chan_included_table, eh_violations, enumerate_tableaux, verify_claim_a,
    verify_claim_b, ChainTable, ClaimParams, ClaimReport, CHAN_AMBIENT_FILE, CHAN_INCLUDED_FILE,
};
use crate::error::Result;
use crate::iecf::{n_exact_closed, n_top, GammaTable};
use crate::macdonald::{
    eta, macdonald_general, macdonald_r1, macdonald_rs1, rs1_params, SecantParams, Version,
};
use crate::plucker::{count_rs1, maximal_chains, prohibition_of_chain};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub params: Value,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(
        suite: &'static str,
        name: &'static str,
        params: Value,
        pass: bool,
        detail: impl Into<String>,
    ) -> Self {
        Check {
            suite,
            name,
            params,
            pass,
            detail: detail.into(),
        }
    }

    fn from_result(
        suite: &'static str,
        name: &'static str,
        params: Value,
        r: Result<(bool, String)>,
    ) -> Self {
        match r {
            Ok((pass, detail)) => Check::new(suite, name, params, pass, detail),
            Err(e) => Check::new(suite, name, params, false, format!("error: {e}")),
        }
    }
}

/// Coefficients (constant term first) of the `r = 1` counts as
/// polynomials in `u`, for `d = 2..=6`.
pub const R1_POLYNOMIALS: [(u64, &[&str]); 5] = [
    (2, &["0", "-2", "2"]),
    (3, &["0", "4/3", "-12", "32/3"]),
    (4, &["0", "-2", "20", "-72", "54"]),
    (5, &["0", "8/5", "-100/3", "556/3", "-1280/3", "4096/15"]),
    (
        6,
        &["0", "-2", "392/9", "-386", "13100/9", "-2500", "12500/9"],
    ),
];

pub fn eval_polynomial(coeffs: &[&str], u: u64) -> BigRational {
    let u = BigRational::from_integer(BigInt::from(u));
    coeffs
        .iter()
        .rev()
        .fold(BigRational::from_integer(BigInt::from(0)), |acc, c| {
            acc * &u + c.parse::<BigRational>().expect("well-formed coefficient")
        })
}

fn stratified_r1(strata: &[BigInt], d: u64, u: u64) -> BigInt {
    strata
        .iter()
        .enumerate()
        .map(|(k, n)| n * crate::algebra::choose_nonneg(d as i64 + u as i64 - 2 - k as i64, d))
        .sum()
}

/// Counting identities: strata, the central identity, polynomial forms,
/// the `r = 1` and `r = s - 1` oracles, Macdonald self-consistency and
/// tableau counts.
pub fn identities(max_d: u64, max_u: u64) -> Vec<Check> {
    const S: &str = "identities";
    let mut out = Vec::new();
    let gammas = GammaTable::shipped();

    for d in 2..=max_d {
        let s = 2 * d - 2;
        let params = json!({"s": s, "d": d});
        out.push(Check::from_result(
            S,
            "strata",
            params.clone(),
            (|| {
                let dp = w_strata(s as u32, d as u32)?;
                let mut detail = dp
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                let mut pass = dp
                    .iter()
                    .skip(d as usize - 1)
                    .all(|v| v == &BigInt::from(0));
                pass &= dp.iter().sum::<BigInt>() == BigInt::from(s).pow(d as u32);
                if let Ok(brute) = enumerate_w(s as u32, d as u32) {
                    pass &= brute.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>() == dp;
                    detail.push_str(" (enumerated)");
                }
                if d <= gammas.max_d() {
                    for j in 0..=d - 2 {
                        pass &= n_exact_closed(d, j, &gammas)? == dp[j as usize];
                    }
                    pass &= n_top(d)? == dp[d as usize - 2];
                }
                Ok((pass, detail))
            })(),
        ));

        let strata = match w_strata(s as u32, d as u32) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let poly = R1_POLYNOMIALS.iter().find(|(pd, _)| *pd == d);
        for u in 1..=max_u {
            let g = (2 * d - 1) * u;
            let m = (2 * d - 2) * (u + 1);
            let params = json!({"d": d, "u": u});
            let lhs = stratified_r1(&strata, d, u);
            let rhs = macdonald_r1(d, g, m);
            out.push(Check::new(
                S,
                "central",
                params.clone(),
                lhs == rhs,
                format!("{lhs} vs {rhs}"),
            ));
            if let Some((_, coeffs)) = poly {
                let p = eval_polynomial(coeffs, u);
                let pass = p == BigRational::from_integer(lhs.clone());
                out.push(Check::new(
                    S,
                    "polynomial",
                    params.clone(),
                    pass,
                    format!("{lhs} vs {p}"),
                ));
            }
            out.push(Check::from_result(
                S,
                "macdonald_versions",
                params.clone(),
                (|| {
                    let p = SecantParams::r1(d, g, m)?;
                    let one = macdonald_general(&p, Version::One)?;
                    let two = macdonald_general(&p, Version::Two)?;
                    Ok((one == two && one == rhs, format!("{one} / {two} / {rhs}")))
                })(),
            ));
            let t = d - 1;
            if t <= 3 && u <= 5 {
                out.push(Check::from_result(
                    S,
                    "r1_oracles",
                    params,
                    (|| {
                        let dp = count_traversals_dp(&r1_grid(t as u32, u as u32)?);
                        let strat = count_r1(t as u32, u as u32)?;
                        let brute = count_set_s(t as u32, u as u32)?;
                        let pass = dp == strat && dp == brute && dp == rhs;
                        Ok((
                            pass,
                            format!("set {brute}, dp {dp}, strata {strat}, formula {rhs}"),
                        ))
                    })(),
                ));
            }
        }
    }

    for r in 2..=(max_d / 2).clamp(2, 4) {
        for u in 1..=max_u.min(6) {
            let params = json!({"r": r, "u": u});
            out.push(Check::from_result(
                S,
                "rs1",
                params,
                (|| {
                    let chains = count_rs1(r as u32, u as u32)?;
                    let two_var = macdonald_rs1(r, u)?;
                    let p = rs1_params(r, u)?;
                    let one = macdonald_general(&p, Version::One)?;
                    let two = macdonald_general(&p, Version::Two)?;
                    let pass = chains == two_var && chains == one && chains == two;
                    Ok((
                        pass,
                        format!("chains {chains}, two-variable {two_var}, general {one} / {two}"),
                    ))
                })(),
            ));
        }
    }

    out.push(Check::from_result(
        S,
        "worked_chain",
        json!({"labels": [1, 3, 2, 4, 3, 5], "u": 2}),
        (|| {
            let lam = ProhibitionSequence::new(vec![1, 3, 2, 4, 3, 5], 5)?;
            let listed = maximal_chains(5)?
                .iter()
                .any(|c| prohibition_of_chain(c) == lam);
            let leftover = BandDiagram::new(&lam).leftover(2);
            let pass = listed && leftover == BigInt::from(4) && maximal_chains(5)?.len() == 5;
            Ok((pass, format!("leftover {leftover}")))
        })(),
    ));

    for n in 3..=8u32 {
        out.push(Check::from_result(
            S,
            "catalan",
            json!({"n": n}),
            (|| {
                let chains = maximal_chains(n)?.len();
                let tabs = enumerate_tableaux(2, n as usize - 2)?.len();
                let catalan =
                    crate::algebra::binom(2 * (n as i64 - 2), n as i64 - 2)? / (n as i64 - 1);
                let pass = BigInt::from(chains) == catalan && BigInt::from(tabs) == catalan;
                Ok((
                    pass,
                    format!("chains {chains}, tableaux {tabs}, catalan {catalan}"),
                ))
            })(),
        ));
    }

    for (g, s, m) in eta_cases(16) {
        out.push(Check::from_result(
            S,
            "eta",
            json!({"g": g, "s": s, "m": m}),
            (|| {
                let e = eta(g, s, m)?;
                let t = enumerate_tableaux((g + s - m) as usize, s as usize + 1)?.len();
                Ok((e == BigInt::from(t), format!("eta {e}, tableaux {t}")))
            })(),
        ));
    }
    out
}

/// All `(g, s, m)` with `rho = 0` and a rectangle of at most `max_cells`
/// cells, i.e. `g = a(s+1)` and `m = g + s - a`.
pub fn eta_cases(max_cells: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for s in 1..max_cells {
        for a in 1..=max_cells / (s + 1) {
            let g = a * (s + 1);
            out.push((g, s, g + s - a));
        }
    }
    out
}

/// Exhaustive checks of both claims for `s <= max_s`, `m <= 3s + 6`,
/// `2 <= M <= 4`, one aggregated check per (claim, s).
pub fn claims(max_s: u64) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, f) in [
        (
            "claim_a",
            verify_claim_a as fn(ClaimParams) -> Result<ClaimReport>,
        ),
        ("claim_b", verify_claim_b),
    ] {
        for s in 2..=max_s {
            let (mut instances, mut nonvacuous, mut failures) = (0u64, 0u64, Vec::new());
            for m in s + 1..=3 * s + 6 {
                for i0 in 2..=s {
                    for big_m in 2..=4 {
                        for sstar in 0..=s {
                            let p = ClaimParams {
                                s,
                                m,
                                i0,
                                big_m,
                                sstar,
                            };
                            instances += 1;
                            match f(p) {
                                Ok(r) => nonvacuous += !r.vacuous as u64,
                                Err(e) => failures.push(e.to_string()),
                            }
                        }
                    }
                }
            }
            let detail = match failures.first() {
                None => format!("{instances} instances, {nonvacuous} non-vacuous"),
                Some(first) => format!("{} failures, first: {first}", failures.len()),
            };
            out.push(Check::new(
                "claims",
                name,
                json!({"s": s}),
                failures.is_empty(),
                detail,
            ));
        }
    }
    out
}

/// Compatibility of the shipped vanishing tables; `dir` overrides the
/// embedded copies.
pub fn fixtures(dir: Option<&Path>) -> Vec<Check> {
    const S: &str = "fixtures";
    let load = |file: &str, embedded: fn() -> ChainTable| -> Result<ChainTable> {
        match dir {
            Some(d) => ChainTable::load(&d.join(file)),
            None => Ok(embedded()),
        }
    };
    let mut out = Vec::new();
    let check = |table: Result<ChainTable>, d: i64| -> Result<(bool, String)> {
        let v = eh_violations(&table?, d)?;
        let detail = match v.first() {
            None => "compatible at every node".to_string(),
            Some(first) => format!("{} violation(s), first at {first}", v.len()),
        };
        Ok((v.is_empty(), detail))
    };
    out.push(Check::from_result(
        S,
        "ambient",
        json!({"file": CHAN_AMBIENT_FILE, "d": 10}),
        check(load(CHAN_AMBIENT_FILE, chan_ambient_table), 10),
    ));
    out.push(Check::from_result(
        S,
        "included",
        json!({"file": CHAN_INCLUDED_FILE, "d": 7}),
        check(load(CHAN_INCLUDED_FILE, chan_included_table), 7),
    ));
    out.push(Check::from_result(
        S,
        "perturbed",
        json!({"file": CHAN_AMBIENT_FILE, "component": 8, "d": 10}),
        (|| {
            let table = load(CHAN_AMBIENT_FILE, chan_ambient_table)?;
            let before = eh_violations(&table, 10)?.len();
            let mut bumped = table.clone();
            bumped.components[7].incoming[0] -= 1;
            let after = eh_violations(&bumped, 10)?.len();
            Ok((after > before, format!("violations {before} -> {after}")))
        })(),
    ));
    out
}
