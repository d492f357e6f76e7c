//! The rank-two Plücker poset, its maximal chains, and the `r = s - 1`
//! count obtained by summing grid traversals over the chains.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::census::{count_traversals_dp, GridSpec, ProhibitionSequence};
use crate::error::{Error, Result};

pub const MAX_PLUCKER_N: u32 = 10;

/// A 2-subset `{a, b}` of `[n]`, `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PluckerVertex {
    pub a: u32,
    pub b: u32,
}

impl PluckerVertex {
    pub fn new(a: u32, b: u32, n: u32) -> Result<Self> {
        if a == 0 || a >= b || b > n {
            return Err(Error::invalid(format!(
                "{{{a},{b}}} is not a 2-subset of [1, {n}]"
            )));
        }
        Ok(PluckerVertex { a, b })
    }

    /// The element shared with `other`, if they differ in one place.
    fn common(&self, other: &Self) -> Option<u32> {
        if self.a == other.a || self.a == other.b {
            Some(self.a)
        } else if self.b == other.a || self.b == other.b {
            Some(self.b)
        } else {
            None
        }
    }

    fn covers_up(&self, n: u32) -> Vec<PluckerVertex> {
        let mut out = Vec::with_capacity(2);
        if self.b < n {
            out.push(PluckerVertex {
                a: self.a,
                b: self.b + 1,
            });
        }
        if self.a + 1 < self.b {
            out.push(PluckerVertex {
                a: self.a + 1,
                b: self.b,
            });
        }
        out
    }
}

impl fmt::Display for PluckerVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

/// Vertices of `Gr(2, n)` with their cover relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PluckerPoset {
    pub n: u32,
    pub vertices: Vec<PluckerVertex>,
    /// `(lower, upper)` pairs.
    pub covers: Vec<(PluckerVertex, PluckerVertex)>,
}

pub fn plucker_poset(n: u32) -> Result<PluckerPoset> {
    if n < 3 {
        return Err(Error::invalid(format!(
            "Plücker poset needs n >= 3, got {n}"
        )));
    }
    let vertices: Vec<PluckerVertex> = (1..n)
        .flat_map(|a| (a + 1..=n).map(move |b| PluckerVertex { a, b }))
        .collect();
    let covers = vertices
        .iter()
        .flat_map(|v| v.covers_up(n).into_iter().map(move |w| (*v, w)))
        .collect();
    Ok(PluckerPoset {
        n,
        vertices,
        covers,
    })
}

/// A saturated chain from `{1,2}` to `{n-1,n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PluckerChain {
    n: u32,
    vertices: Vec<PluckerVertex>,
}

impl PluckerChain {
    pub fn new(n: u32, vertices: Vec<PluckerVertex>) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("chains need n >= 3, got {n}")));
        }
        if vertices.first() != Some(&PluckerVertex { a: 1, b: 2 })
            || vertices.last() != Some(&PluckerVertex { a: n - 1, b: n })
        {
            return Err(Error::invalid("chain must run from {1,2} to {n-1,n}"));
        }
        for p in vertices.windows(2) {
            if !p[0].covers_up(n).contains(&p[1]) {
                return Err(Error::invalid(format!("{} does not cover {}", p[1], p[0])));
            }
        }
        Ok(PluckerChain { n, vertices })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> &[PluckerVertex] {
        &self.vertices
    }

    /// Number of edges, `2(n - 2)`.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The shared element of each edge.
    pub fn nu(&self) -> Vec<u32> {
        self.vertices
            .windows(2)
            .map(|p| p[0].common(&p[1]).expect("cover pairs share an element"))
            .collect()
    }
}

impl fmt::Display for PluckerChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" < "))
    }
}

/// All maximal chains of `Gr(2, n)`, in lexicographic order of their
/// vertex lists.
pub fn maximal_chains(n: u32) -> Result<Vec<PluckerChain>> {
    if n < 3 {
        return Err(Error::invalid(format!(
            "maximal_chains needs n >= 3, got {n}"
        )));
    }
    if n > MAX_PLUCKER_N {
        return Err(Error::GuardExceeded {
            what: "maximal_chains",
            size: n as u128,
            limit: MAX_PLUCKER_N as u128,
        });
    }
    fn rec(n: u32, path: &mut Vec<PluckerVertex>, out: &mut Vec<PluckerChain>) {
        let top = *path.last().unwrap();
        if top == (PluckerVertex { a: n - 1, b: n }) {
            out.push(PluckerChain {
                n,
                vertices: path.clone(),
            });
            return;
        }
        for next in top.covers_up(n) {
            path.push(next);
            rec(n, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut vec![PluckerVertex { a: 1, b: 2 }], &mut out);
    Ok(out)
}

/// `Lambda_j = nu_j` with column labels taken modulo `n`.
pub fn prohibition_of_chain(c: &PluckerChain) -> ProhibitionSequence {
    let n = c.n();
    let labels = c.nu().iter().map(|&v| 1 + (v - 1) % n).collect();
    ProhibitionSequence::new(labels, n).expect("chain labels lie in [1, n]")
}

/// Sum of positive-traversal counts of a `g`-column grid over several
/// prohibition sequences.
pub fn count_over_prohibitions(g: u64, sequences: &[ProhibitionSequence]) -> BigInt {
    sequences
        .par_iter()
        .map(|p| count_traversals_dp(&GridSpec::new(g, p.clone())))
        .reduce(BigInt::default, |a, b| a + b)
}

/// `r = s - 1` count with `d = 2r`, `s = r + 1`, `g = (r + 2) u`.
pub fn count_rs1(r: u32, u: u32) -> Result<BigInt> {
    if r < 2 || u == 0 {
        return Err(Error::invalid(format!(
            "count_rs1 needs r >= 2, u >= 1, got r={r}, u={u}"
        )));
    }
    let n = r + 2;
    let prohibitions: Vec<ProhibitionSequence> = maximal_chains(n)?
        .iter()
        .map(prohibition_of_chain)
        .collect();
    Ok(count_over_prohibitions(n as u64 * u as u64, &prohibitions))
}
