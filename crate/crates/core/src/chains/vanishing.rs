use crate::error::{Error, Result};
use crate::macdonald::brill_noether;

use super::compat::{ChainTable, ComponentOrders};
use super::tableau::WordType;

/// Vanishing orders of a refined series on each elliptic component.
///
/// `incoming[j]` is increasing (orders at the left node of component
/// `j+1`); `outgoing[j]` is decreasing (orders at the right node).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingTable {
    s: usize,
    m: u64,
    incoming: Vec<Vec<u64>>,
    outgoing: Vec<Vec<u64>>,
}

impl VanishingTable {
    pub fn rank(&self) -> usize {
        self.s
    }

    pub fn degree(&self) -> u64 {
        self.m
    }

    pub fn genus(&self) -> usize {
        self.incoming.len()
    }

    pub fn incoming(&self) -> &[Vec<u64>] {
        &self.incoming
    }

    pub fn outgoing(&self) -> &[Vec<u64>] {
        &self.outgoing
    }

    /// Same data in the shape accepted by [`super::eh_compatible`].
    pub fn to_chain_table(&self) -> ChainTable {
        let components = self
            .incoming
            .iter()
            .zip(&self.outgoing)
            .map(|(a, b)| ComponentOrders {
                incoming: a.iter().map(|&v| v as i64).collect(),
                outgoing: b.iter().map(|&v| v as i64).collect(),
            })
            .collect();
        ChainTable { components }
    }
}

/// Runs the increment rule along `w`: every order goes up by one except
/// the one indexed by the current letter, which stays put.
pub fn vanishing_sequences(w: &WordType, m: u64) -> Result<VanishingTable> {
    let s = w.rank();
    let g = w.genus();
    let rho = brill_noether(g as u64, s as u64, m);
    if rho != 0 {
        return Err(Error::invalid(format!(
            "vanishing sequences need rho = 0, got rho({g}, {s}, {m}) = {rho}"
        )));
    }
    let mut a: Vec<u64> = (0..=s as u64).collect();
    let mut incoming = Vec::with_capacity(g);
    let mut outgoing = Vec::with_capacity(g);
    for (j, &letter) in w.letters().iter().enumerate() {
        incoming.push(a.clone());
        let fixed = letter - 1;
        let next: Vec<u64> = a
            .iter()
            .enumerate()
            .map(|(i, &v)| if i == fixed { v } else { v + 1 })
            .collect();
        if next.windows(2).any(|p| p[0] >= p[1]) || next.iter().any(|&v| v > m) {
            return Err(Error::InvalidWord {
                letters: w.letters().to_vec(),
                reason: format!(
                    "orders {next:?} after component {} are not increasing within [0, {m}]",
                    j + 1
                ),
            });
        }
        outgoing.push(next.iter().map(|&v| m - v).collect());
        a = next;
    }
    Ok(VanishingTable {
        s,
        m,
        incoming,
        outgoing,
    })
}

/// An increasing sequence starting at 0 whose steps are all 1 except for
/// at most one step of 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NearConsecSeq {
    values: Vec<u64>,
}

impl NearConsecSeq {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.first() != Some(&0) {
            return Err(Error::invalid(format!(
                "nearly consecutive sequence must start at 0: {values:?}"
            )));
        }
        let mut gaps = 0;
        for p in values.windows(2) {
            match p[1].checked_sub(p[0]) {
                Some(1) => {}
                Some(2) => gaps += 1,
                _ => return Err(Error::invalid(format!("steps must be 1 or 2: {values:?}"))),
            }
        }
        if gaps > 1 {
            return Err(Error::invalid(format!("more than one gap: {values:?}")));
        }
        Ok(NearConsecSeq { values })
    }

    /// The sequence of length `s+1` with its gap just before the 1-based
    /// position `i0`.
    pub fn with_gap(i0: usize, s: usize) -> Result<Self> {
        if i0 < 2 || i0 > s + 1 {
            return Err(Error::invalid(format!(
                "distinguished index {i0} outside [2, {}]",
                s + 1
            )));
        }
        let values = (1..=s + 1)
            .map(|i| if i < i0 { i as u64 - 1 } else { i as u64 })
            .collect();
        Ok(NearConsecSeq { values })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// 1-based index of the entry right after the gap, if there is one.
    pub fn distinguished_index(&self) -> Option<usize> {
        self.values
            .windows(2)
            .position(|p| p[1] - p[0] == 2)
            .map(|i| i + 2)
    }
}

/// Total displacement `sum_i (w_i - v_i)` between two index sets.
pub fn shift(v: &[u64], w: &[u64]) -> Result<i64> {
    if v.len() != w.len() {
        return Err(Error::invalid(format!(
            "shift needs equal lengths, got {} and {}",
            v.len(),
            w.len()
        )));
    }
    for seq in [v, w] {
        if seq.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::invalid(format!(
                "{seq:?} is not strictly increasing"
            )));
        }
    }
    Ok(v.iter().zip(w).map(|(&a, &b)| b as i64 - a as i64).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_u1() {
        let t = vanishing_sequences(&WordType::canonical(2, 1), 4).unwrap();
        assert_eq!(t.incoming(), &[vec![0, 1, 2], vec![0, 2, 3], vec![1, 2, 4]]);
        assert_eq!(t.outgoing()[2], vec![2, 1, 0]);
    }

    #[test]
    fn canonical_endpoints() {
        for s in 1..5usize {
            for u in 1..4usize {
                let g = (s + 1) * u;
                let m = (s * (u + 1)) as u64;
                let t = vanishing_sequences(&WordType::canonical(s, u), m).unwrap();
                assert_eq!(t.incoming()[0], (0..=s as u64).collect::<Vec<_>>());
                let mut last: Vec<u64> = (m - s as u64 - 1..m - 1).collect();
                last.push(m);
                assert_eq!(t.incoming()[g - 1], last);
                for a in t.incoming() {
                    NearConsecSeq::new(a.iter().map(|v| v - a[0]).collect()).unwrap();
                }
            }
        }
    }

    #[test]
    fn rejects_positive_rho() {
        assert!(vanishing_sequences(&WordType::canonical(2, 1), 5).is_err());
    }

    #[test]
    fn near_consecutive() {
        let v = NearConsecSeq::new(vec![0, 2, 3]).unwrap();
        assert_eq!(v.distinguished_index(), Some(2));
        assert_eq!(
            NearConsecSeq::new(vec![0, 1, 2])
                .unwrap()
                .distinguished_index(),
            None
        );
        assert!(NearConsecSeq::new(vec![0, 2, 4]).is_err());
        assert!(NearConsecSeq::new(vec![1, 2]).is_err());
        assert_eq!(
            NearConsecSeq::with_gap(3, 4).unwrap().values(),
            &[0, 1, 3, 4, 5]
        );
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift(&[0, 1], &[0, 1]).unwrap(), 0);
        assert_eq!(shift(&[0, 1], &[1, 2]).unwrap(), 2);
        assert!(shift(&[0], &[0, 1]).is_err());
        assert!(shift(&[1, 0], &[0, 1]).is_err());
    }
}
