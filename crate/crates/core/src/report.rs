//! Tabular output: stratum tables and count tables as CSV or JSON, with
//! every count written as a decimal string.

use std::io::Write;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::census::{count_r1, w_strata};
use crate::error::{Error, Result};
use crate::plucker::count_rs1;

pub fn decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NkRow {
    pub d: u64,
    pub k: u64,
    #[serde(serialize_with = "decimal")]
    pub value: BigInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountCase {
    R1,
    Rs1,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub case: CountCase,
    pub param: u64,
    pub u: u64,
    #[serde(serialize_with = "decimal")]
    pub value: BigInt,
}

/// `N_k^{2d-2}(d)` for `k = 0..=d-2`, sorted by `(d, k)`.
pub fn nk_table(ds: RangeInclusive<u64>) -> Result<Vec<NkRow>> {
    let mut rows = Vec::new();
    for d in ds {
        if d < 2 {
            return Err(Error::invalid(format!(
                "strata tables need d >= 2, got {d}"
            )));
        }
        let strata = w_strata(2 * d as u32 - 2, d as u32)?;
        rows.extend(
            strata
                .into_iter()
                .take(d as usize - 1)
                .enumerate()
                .map(|(k, value)| NkRow {
                    d,
                    k: k as u64,
                    value,
                }),
        );
    }
    Ok(rows)
}

/// Counts by the default engine of each case, sorted by `(param, u)`.
pub fn counts_table(
    case: CountCase,
    params: RangeInclusive<u64>,
    us: RangeInclusive<u64>,
) -> Result<Vec<CountRow>> {
    let mut rows = Vec::new();
    for param in params {
        for u in us.clone() {
            let value = match case {
                CountCase::R1 => count_r1(param as u32, u as u32)?,
                CountCase::Rs1 => count_rs1(param as u32, u as u32)?,
            };
            rows.push(CountRow {
                case,
                param,
                u,
                value,
            });
        }
    }
    Ok(rows)
}

pub fn write_csv<T: Serialize>(rows: &[T], header: &[&str], out: &mut dyn Write) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    let io = |e: csv::Error| Error::invalid(format!("csv output failed: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.serialize(row).map_err(io)?;
    }
    w.flush()
        .map_err(|e| Error::invalid(format!("csv output failed: {e}")))?;
    Ok(())
}

pub fn write_json<T: Serialize>(rows: &[T], out: &mut dyn Write) -> Result<()> {
    let text = serde_json::to_string_pretty(rows)
        .map_err(|e| Error::invalid(format!("json output failed: {e}")))?;
    writeln!(out, "{text}").map_err(|e| Error::invalid(format!("write failed: {e}")))
}

pub const NK_HEADER: [&str; 3] = ["d", "k", "value"];
pub const COUNT_HEADER: [&str; 4] = ["case", "param", "u", "value"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nk_rows() {
        let rows = nk_table(5..=5).unwrap();
        let values: Vec<String> = rows.iter().map(|r| r.value.to_string()).collect();
        assert_eq!(values, ["3264", "16920", "11664", "920"]);
        assert!(nk_table(1..=2).is_err());
    }

    #[test]
    fn csv_layout() {
        let rows = counts_table(CountCase::R1, 1..=1, 1..=3).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &COUNT_HEADER, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "case,param,u,value\nr1,1,1,0\nr1,1,2,4\nr1,1,3,12\n"
        );
    }

    #[test]
    fn json_values_are_strings() {
        let rows = nk_table(2..=2).unwrap();
        let mut buf = Vec::new();
        write_json(&rows, &mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v[0]["value"], "4");
    }
}
