use num_bigint::BigUint;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

const TABLE1: &str = include_str!("../../data/table1.csv");
const TABLE1_SHA256: &str = include_str!("../../data/table1.csv.sha256");
const SIMPLE_GROUPS: &str = include_str!("../../data/simple_groups.csv");
const SIMPLE_GROUPS_SHA256: &str = include_str!("../../data/simple_groups.csv.sha256");

/// One line of the table of almost simple groups `G` with socle `X` and a
/// point stabilizer `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogLine {
    pub line: u32,
    pub group: String,
    pub stabilizer: String,
    pub socle: String,
    pub group_order: BigUint,
    pub socle_order: BigUint,
    pub stabilizer_order: BigUint,
    /// `|H ∩ X|`.
    pub socle_stabilizer_order: BigUint,
    pub v: BigUint,
}

impl CatalogLine {
    /// `|X| / |H ∩ X|`, or `None` if the division is not exact.
    pub fn recomputed_v(&self) -> Option<BigUint> {
        exact_div(&self.socle_order, &self.socle_stabilizer_order)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGroupEntry {
    pub label: String,
    pub order: BigUint,
    pub out_order: BigUint,
}

fn exact_div(a: &BigUint, b: &BigUint) -> Option<BigUint> {
    if *b == BigUint::from(0u32) || a % b != BigUint::from(0u32) {
        None
    } else {
        Some(a / b)
    }
}

fn verify_checksum(name: &str, text: &str, expected: &str) -> Result<()> {
    let actual = hex::encode(Sha256::digest(text.as_bytes()));
    if actual != expected.trim() {
        return Err(Error::Integrity(format!(
            "{name}: checksum {actual} does not match {}",
            expected.trim()
        )));
    }
    Ok(())
}

#[derive(Deserialize)]
struct TableRow {
    line: u32,
    #[serde(rename = "G")]
    group: String,
    #[serde(rename = "H")]
    stabilizer: String,
    socle: String,
    #[serde(rename = "G_order")]
    group_order: String,
    #[serde(rename = "X_order")]
    socle_order: String,
    #[serde(rename = "H_order")]
    stabilizer_order: String,
    #[serde(rename = "HX_order")]
    socle_stabilizer_order: String,
    v: String,
}

#[derive(Deserialize)]
struct SimpleRow {
    label: String,
    order: String,
    out_order: String,
}

fn records<T: DeserializeOwned>(text: &str) -> Result<Vec<(usize, T)>> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    reader
        .deserialize()
        .map(|row: std::result::Result<T, csv::Error>| {
            row.map_err(|e| {
                let line = e.position().map_or(0, |p| p.line() as usize);
                Error::parse(line, e.to_string())
            })
        })
        .enumerate()
        .map(|(i, row)| row.map(|r| (i + 2, r)))
        .collect()
}

fn big(lno: usize, field: &str) -> Result<BigUint> {
    field
        .parse()
        .map_err(|_| Error::parse(lno, format!("bad integer `{field}`")))
}

/// Parses and checks a table in the bundled format. Every line must satisfy
/// `|G|/|H| = |X|/|H∩X| = v`.
pub fn parse_table1(text: &str, checksum: &str) -> Result<Vec<CatalogLine>> {
    verify_checksum("table1.csv", text, checksum)?;
    let mut out = Vec::new();
    for (lno, row) in records::<TableRow>(text)? {
        let line = CatalogLine {
            line: row.line,
            group: row.group,
            stabilizer: row.stabilizer,
            socle: row.socle,
            group_order: big(lno, &row.group_order)?,
            socle_order: big(lno, &row.socle_order)?,
            stabilizer_order: big(lno, &row.stabilizer_order)?,
            socle_stabilizer_order: big(lno, &row.socle_stabilizer_order)?,
            v: big(lno, &row.v)?,
        };
        let via_socle = line.recomputed_v();
        let via_group = exact_div(&line.group_order, &line.stabilizer_order);
        if via_socle.as_ref() != Some(&line.v) || via_group.as_ref() != Some(&line.v) {
            return Err(Error::Integrity(format!(
                "line {}: v = {} but |X|/|H∩X| = {:?} and |G|/|H| = {:?}",
                line.line, line.v, via_socle, via_group
            )));
        }
        out.push(line);
    }
    let numbers: Vec<u32> = out.iter().map(|l| l.line).collect();
    if numbers != (1..=out.len() as u32).collect::<Vec<_>>() {
        return Err(Error::Integrity("line numbers are not 1, 2, ... in order".into()));
    }
    Ok(out)
}

pub fn parse_simple_groups(text: &str, checksum: &str) -> Result<Vec<SimpleGroupEntry>> {
    verify_checksum("simple_groups.csv", text, checksum)?;
    let mut out = Vec::new();
    for (lno, row) in records::<SimpleRow>(text)? {
        let entry = SimpleGroupEntry {
            label: row.label,
            order: big(lno, &row.order)?,
            out_order: big(lno, &row.out_order)?,
        };
        if entry.order < BigUint::from(60u32) {
            return Err(Error::Integrity(format!("{} has order below 60", entry.label)));
        }
        out.push(entry);
    }
    Ok(out)
}

/// The 26-line table, validated.
pub fn table1() -> Result<Vec<CatalogLine>> {
    parse_table1(TABLE1, TABLE1_SHA256)
}

/// Nonabelian simple groups of order below one million with `|Out|`.
pub fn simple_groups() -> Result<Vec<SimpleGroupEntry>> {
    parse_simple_groups(SIMPLE_GROUPS, SIMPLE_GROUPS_SHA256)
}
