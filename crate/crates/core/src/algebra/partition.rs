use std::fmt;

use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts into decreasing order first.
    pub fn from_unordered(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Distinct part values with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((value, count)) if *value == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `k` in lexicographically decreasing order.
pub fn partitions_of(k: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent count: p(n, m) = number of partitions of n with parts <= m.
    fn partition_count(n: u32, m: u32) -> u64 {
        if n == 0 {
            return 1;
        }
        if m == 0 {
            return 0;
        }
        let mut total = partition_count(n, m - 1);
        if m <= n {
            total += partition_count(n - m, m);
        }
        total
    }

    #[test]
    fn small_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let three: Vec<Vec<u32>> = partitions_of(3)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(three, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions_of(6).len(), 11);
    }

    #[test]
    fn counts_and_order() {
        for k in 0..15 {
            let ps = partitions_of(k);
            assert_eq!(ps.len() as u64, partition_count(k, k));
            assert!(ps.iter().all(|p| p.weight() == k as u64));
            assert!(ps.windows(2).all(|w| w[0].parts() > w[1].parts()));
        }
    }

    #[test]
    fn multiplicity_profile() {
        let p = Partition::new(vec![3, 3, 2, 1, 1, 1]).unwrap();
        assert_eq!(p.multiplicities(), vec![(3, 2), (2, 1), (1, 3)]);
        assert_eq!(p.len(), 6);
        assert_eq!(p.weight(), 11);
        assert_eq!(p.to_string(), "(3,3,2,1,1,1)");
    }

    #[test]
    fn rejects_malformed() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(
            Partition::from_unordered(vec![1, 3, 2]).unwrap().parts(),
            &[3, 2, 1]
        );
    }
}
