//! Text format for permutation groups:
//!
//! ```text
//! # comment
//! G <degree> <num_generators>
//! order <decimal>            (optional)
//! <image of 0> <image of 1> ...
//! ```

use std::fmt::Write as _;

use num_bigint::BigUint;

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

pub fn write_group(g: &PermGroup) -> String {
    let mut out = String::new();
    writeln!(out, "G {} {}", g.degree(), g.generators().len()).unwrap();
    if let Some(order) = g.known_order() {
        writeln!(out, "order {order}").unwrap();
    }
    for gen in g.generators() {
        let line: Vec<String> = gen.images().iter().map(u32::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn parse_group(text: &str) -> Result<PermGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (lno, header) = lines.next().ok_or_else(|| Error::parse(1, "empty group file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (degree, ngens) = match fields.as_slice() {
        ["G", d, n] => (
            d.parse::<usize>().map_err(|_| Error::parse(lno, "bad degree"))?,
            n.parse::<usize>().map_err(|_| Error::parse(lno, "bad generator count"))?,
        ),
        _ => return Err(Error::parse(lno, "expected `G <degree> <num_generators>`")),
    };

    let mut order = None;
    let mut gens = Vec::with_capacity(ngens);
    for (lno, line) in lines {
        if let Some(rest) = line.strip_prefix("order") {
            if order.is_some() || !gens.is_empty() {
                return Err(Error::parse(lno, "`order` must precede the generators, once"));
            }
            let value = rest
                .trim()
                .parse::<BigUint>()
                .map_err(|_| Error::parse(lno, "bad order"))?;
            order = Some(value);
            continue;
        }
        let images = line
            .split_whitespace()
            .map(|t| t.parse::<u32>().map_err(|_| Error::parse(lno, format!("bad image `{t}`"))))
            .collect::<Result<Vec<u32>>>()?;
        if images.len() != degree {
            return Err(Error::parse(
                lno,
                format!("generator has {} images, expected {degree}", images.len()),
            ));
        }
        let perm = Permutation::from_images(images).map_err(|e| Error::parse(lno, e.to_string()))?;
        gens.push(perm);
    }
    if gens.len() != ngens {
        return Err(Error::parse(
            text.lines().count().max(1),
            format!("expected {ngens} generators, found {}", gens.len()),
        ));
    }
    let group = PermGroup::new(degree, gens).map_err(|e| Error::parse(lno, e.to_string()))?;
    Ok(match order {
        Some(o) => group.with_known_order(o),
        None => group,
    })
}
