use std::fmt;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

pub const FIXTURE_HEADER: &str = "vanishing-table v1";
pub const CHAN_AMBIENT_FILE: &str = "chan_ambient.txt";
pub const CHAN_INCLUDED_FILE: &str = "chan_included.txt";

const CHAN_AMBIENT: &str = include_str!("../../data/chan_ambient.txt");
const CHAN_INCLUDED: &str = include_str!("../../data/chan_included.txt");

/// Vanishing orders of one series on one component: increasing at the
/// incoming node, decreasing at the outgoing node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentOrders {
    pub incoming: Vec<i64>,
    pub outgoing: Vec<i64>,
}

/// Components listed along the chain; component `j` meets `j+1` at a node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainTable {
    pub components: Vec<ComponentOrders>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeViolation {
    /// 1-based component on the left of the node.
    pub node: usize,
    /// 0-based coordinate.
    pub index: usize,
    pub sum: i64,
    pub required: i64,
}

impl fmt::Display for NodeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "node Z{}-Z{}, coordinate {}: {} < {}",
            self.node,
            self.node + 1,
            self.index,
            self.sum,
            self.required
        )
    }
}

impl ChainTable {
    /// Parses the plain-text fixture format: a `vanishing-table v1` header,
    /// then one block of two lines per component. `#` starts a comment.
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::Parse {
            path: origin.to_string(),
            line,
            message,
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()));

        match lines.by_ref().find(|(_, l)| !l.is_empty()) {
            Some((_, l)) if l == FIXTURE_HEADER => {}
            Some((n, l)) => {
                return Err(err(
                    n,
                    format!("expected header `{FIXTURE_HEADER}`, got `{l}`"),
                ))
            }
            None => return Err(err(0, "empty fixture".into())),
        }

        let mut blocks: Vec<Vec<(usize, Vec<i64>)>> = vec![Vec::new()];
        for (n, l) in lines {
            if l.is_empty() {
                if !blocks.last().unwrap().is_empty() {
                    blocks.push(Vec::new());
                }
                continue;
            }
            let row = l
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|e| err(n, format!("bad integer `{t}`: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.last_mut().unwrap().push((n, row));
        }
        if blocks.last().is_some_and(Vec::is_empty) {
            blocks.pop();
        }

        let mut components = Vec::with_capacity(blocks.len());
        for block in blocks {
            let first = block[0].0;
            if block.len() != 2 {
                return Err(err(
                    first,
                    format!("component block has {} lines, expected 2", block.len()),
                ));
            }
            let mut it = block.into_iter();
            let (_, incoming) = it.next().unwrap();
            let (n, outgoing) = it.next().unwrap();
            if incoming.len() != outgoing.len() {
                return Err(err(n, "incoming and outgoing rows differ in length".into()));
            }
            components.push(ComponentOrders { incoming, outgoing });
        }
        if components.is_empty() {
            return Err(err(0, "no components".into()));
        }
        Ok(ChainTable { components })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Drops every coordinate not listed in `keep` (per component).
    pub fn restrict(&self, keep: &[(Vec<usize>, Vec<usize>)]) -> Result<Self> {
        if keep.len() != self.len() {
            return Err(Error::invalid("one index pair per component is required"));
        }
        let pick = |row: &[i64], idx: &[usize]| -> Result<Vec<i64>> {
            idx.iter()
                .map(|&i| {
                    row.get(i)
                        .copied()
                        .ok_or_else(|| Error::invalid(format!("index {i} out of range")))
                })
                .collect()
        };
        let components = self
            .components
            .iter()
            .zip(keep)
            .map(|(c, (ki, ko))| {
                Ok(ComponentOrders {
                    incoming: pick(&c.incoming, ki)?,
                    outgoing: pick(&c.outgoing, ko)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(ChainTable { components })
    }
}

/// Every node and coordinate where `outgoing(j) + incoming(j+1) >= d` fails.
pub fn eh_violations(table: &ChainTable, d: i64) -> Result<Vec<NodeViolation>> {
    let width = table.components.first().map_or(0, |c| c.incoming.len());
    for (j, c) in table.components.iter().enumerate() {
        if c.incoming.len() != width || c.outgoing.len() != width {
            return Err(Error::invalid(format!(
                "component {} has sequences of length {}/{}, expected {width}",
                j + 1,
                c.incoming.len(),
                c.outgoing.len()
            )));
        }
    }
    let mut out = Vec::new();
    for (j, pair) in table.components.windows(2).enumerate() {
        for (i, (&b, &a)) in pair[0].outgoing.iter().zip(&pair[1].incoming).enumerate() {
            if a + b < d {
                out.push(NodeViolation {
                    node: j + 1,
                    index: i,
                    sum: a + b,
                    required: d,
                });
            }
        }
    }
    Ok(out)
}

/// Componentwise compatibility at every node.
pub fn eh_compatible(table: &ChainTable, d: i64) -> Result<bool> {
    Ok(eh_violations(table, d)?.is_empty())
}

/// The shipped 13-component ambient table (degree 10).
pub fn chan_ambient_table() -> ChainTable {
    ChainTable::parse(CHAN_AMBIENT, CHAN_AMBIENT_FILE).expect("embedded fixture parses")
}

/// The shipped included pencil (degree 7).
pub fn chan_included_table() -> ChainTable {
    ChainTable::parse(CHAN_INCLUDED, CHAN_INCLUDED_FILE).expect("embedded fixture parses")
}
