//! Text format for incidence structures:
//!
//! ```text
//! # comment
//! D <v> <b> <k>
//! <point> <point> ...        (one block per line, k points)
//! ```
//!
//! The writer emits blocks in canonical order, so equal structures give
//! identical text.

use std::fmt::Write as _;

use super::IncidenceStructure;
use crate::error::{Error, Result};

pub fn write_design(s: &IncidenceStructure) -> String {
    let mut out = String::with_capacity(s.num_blocks() * s.k() * 3 + 32);
    writeln!(out, "D {} {} {}", s.v(), s.num_blocks(), s.k()).unwrap();
    for block in s.blocks() {
        let mut first = true;
        for x in block {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{x}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_design(text: &str) -> Result<IncidenceStructure> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (lno, header) = lines.next().ok_or_else(|| Error::parse(1, "empty design file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let parse_num = |t: &str, what: &str| {
        t.parse::<usize>()
            .map_err(|_| Error::parse(lno, format!("bad {what} `{t}`")))
    };
    let (v, b, k) = match fields.as_slice() {
        ["D", v, b, k] => (parse_num(v, "v")?, parse_num(b, "b")?, parse_num(k, "k")?),
        _ => return Err(Error::parse(lno, "expected `D <v> <b> <k>`")),
    };
    let mut blocks = Vec::with_capacity(b);
    for (lno, line) in lines {
        let mut block = line
            .split_whitespace()
            .map(|t| t.parse::<u32>().map_err(|_| Error::parse(lno, format!("bad point `{t}`"))))
            .collect::<Result<Vec<u32>>>()?;
        if block.len() != k {
            return Err(Error::parse(lno, format!("block has {} points, expected {k}", block.len())));
        }
        block.sort_unstable();
        if block.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::parse(lno, "block repeats a point"));
        }
        if block[k - 1] as usize >= v {
            return Err(Error::parse(lno, format!("point outside 0..{v}")));
        }
        blocks.push(block);
    }
    if blocks.len() != b {
        return Err(Error::parse(
            text.lines().count().max(1),
            format!("expected {b} blocks, found {}", blocks.len()),
        ));
    }
    IncidenceStructure::new(v, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_canonical() {
        let text = "# fano\nD 7 7 3\n0 1 3\n1 2 4\n2 3 5\n3 4 6\n4 5 0\n5 6 1\n6 0 2\n";
        let s = parse_design(text).unwrap();
        let out = write_design(&s);
        assert!(out.starts_with("D 7 7 3\n0 1 3\n0 2 6\n0 4 5\n"));
        assert_eq!(parse_design(&out).unwrap(), s);
        assert_eq!(write_design(&parse_design(&out).unwrap()), out);
    }

    #[test]
    fn errors_carry_lines() {
        let err = parse_design("D 4 2 2\n0 1\n0 9\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(matches!(parse_design("D 4 2 2\n0 1\n").unwrap_err(), Error::Parse { .. }));
        assert!(matches!(parse_design("X 4\n").unwrap_err(), Error::Parse { line: 1, .. }));
        assert!(parse_design("D 4 2 2\n0 1\n1 0\n").is_err());
    }
}
