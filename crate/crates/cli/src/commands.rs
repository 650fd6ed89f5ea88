use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use flagsieve::construct::{build_c55, build_pg32};
use flagsieve::design::io::{parse_design, write_design};
use flagsieve::design::{
    derive_params, verify_2design, verify_flag_transitive, IncidenceStructure, PairBalance,
};
use flagsieve::perm::io::{parse_group, write_group};
use flagsieve::perm::{is_primitive, subdegrees, PermGroup, Primitivity};
use flagsieve::sieve::{
    diagonal_type_sieve, eliminate_253, imprimitive_sieve, intransitive_sieve, product_type_sieve,
    simple_groups, table1_survey, Group253, SieveReport,
};
use flagsieve::Error;
use serde_json::{json, Value};

use crate::report::{Outcome, Verdict};
use crate::{SieveName, Which};

/// A bad invocation that clap cannot catch on its own.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn verdict_text(verdicts: &[Verdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let mark = if v.pass { "ok" } else { "FAIL" };
        writeln!(out, "[{mark}] {}: {}", v.name, v.detail).unwrap();
    }
    out
}

pub fn params(v: u64, k: u64, lambda: u64) -> Result<Outcome> {
    let (verdict, payload, text) = match derive_params(v, k, lambda) {
        Ok(p) => (
            Verdict::new("feasible", true, p.to_string()),
            json!({ "v": v, "k": k, "lambda": lambda, "derived": p, "infeasible": null }),
            format!("r={} b={}\n", p.r, p.b),
        ),
        Err(Error::Infeasible(why)) => (
            Verdict::new("feasible", false, why.to_string()),
            json!({ "v": v, "k": k, "lambda": lambda, "derived": null, "infeasible": why }),
            format!("infeasible: {why}\n"),
        ),
        Err(e) => return Err(e.into()),
    };
    let verdicts = vec![verdict];
    Ok(Outcome {
        text: text + &verdict_text(&verdicts),
        verdicts,
        artifacts: Vec::new(),
        payload,
    })
}

/// Default ranges, each multiplied by `extend`.
pub fn sieve(name: SieveName, extend: u64, group: Option<&str>) -> Result<Outcome> {
    if extend == 0 {
        return Err(usage("--extend must be at least 1"));
    }
    if group.is_some() && name != SieveName::Eliminate253 {
        return Err(usage("--group only applies to eliminate-253"));
    }
    let reports: Vec<SieveReport> = match name {
        SieveName::Intransitive => vec![intransitive_sieve(200 * extend, 7)?],
        SieveName::Imprimitive => vec![imprimitive_sieve(16 * extend, 16 * extend)?],
        SieveName::Product => vec![product_type_sieve(5 * extend, 30 * extend, 7)?],
        SieveName::Diagonal => vec![diagonal_type_sieve(&simple_groups()?, 100 * extend)?],
        SieveName::Table1 => vec![table1_survey()?],
        SieveName::Eliminate253 => {
            let groups = match group {
                Some(g) => vec![parse_group_label(g)?],
                None => vec![Group253::A23, Group253::S23],
            };
            groups.into_iter().map(eliminate_253).collect::<Result<_, _>>()?
        }
    };
    let mut verdicts = Vec::new();
    let mut text = String::new();
    for r in &reports {
        let prefix = r.ranges.get("group").map(|g| format!("{g}: ")).unwrap_or_default();
        for c in &r.checks {
            verdicts.push(Verdict::new(
                format!("{prefix}{}", c.name),
                c.pass,
                format!("expected {}, got {}", c.expected, c.actual),
            ));
        }
        write!(text, "{r}").unwrap();
    }
    Ok(Outcome {
        verdicts,
        artifacts: Vec::new(),
        payload: json!({ "reports": reports }),
        text,
    })
}

/// `<A|S><n>`; only `n = 23` has a sieve behind it.
fn parse_group_label(label: &str) -> Result<Group253> {
    let well_formed = label.len() > 1
        && matches!(&label[..1], "A" | "S")
        && label[1..].chars().all(|c| c.is_ascii_digit());
    if !well_formed {
        return Err(usage(format!("--group expects <A|S><n>, got `{label}`")));
    }
    label.parse().map_err(|e: Error| usage(e.to_string()))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_group(path: &Path) -> Result<PermGroup> {
    parse_group(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_design(path: &Path) -> Result<IncidenceStructure> {
    parse_design(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// Design and flag checks shared by `construct` and `verify`.
fn check_design(design: &IncidenceStructure, group: &PermGroup) -> Result<(Vec<Verdict>, Value)> {
    let balance = verify_2design(design);
    let mut verdicts = vec![match &balance {
        PairBalance::Balanced { lambda } => Verdict::new(
            "2-design",
            *lambda > 0,
            format!("2-({},{},{}) with b = {}", design.v(), design.k(), lambda, design.num_blocks()),
        ),
        PairBalance::Unbalanced { first, second } => Verdict::new(
            "2-design",
            false,
            format!("pairs covered {first:?} and {second:?} times"),
        ),
    }];
    let order = match group.order() {
        Ok(order) => order,
        Err(e @ Error::Integrity(_)) => {
            verdicts.push(Verdict::new("group order", false, e.to_string()));
            return Ok((verdicts, Value::Null));
        }
        Err(e) => return Err(e.into()),
    };
    verdicts.push(Verdict::new("group order", true, format!("|G| = {order}")));
    let flag = match verify_flag_transitive(group, design) {
        Ok(flag) => flag,
        Err(e @ Error::NotAutomorphism(_)) => {
            verdicts.push(Verdict::new("automorphisms", false, e.to_string()));
            return Ok((verdicts, Value::Null));
        }
        Err(e) => return Err(e.into()),
    };
    verdicts.push(Verdict::new(
        "flag-transitive",
        flag.flag_transitive,
        format!(
            "block orbit {} of {}, block stabilizer order {}, its orbits on the block {:?}",
            flag.block_orbit_size, flag.num_blocks, flag.block_stabilizer_order, flag.stabilizer_orbits_on_block
        ),
    ));
    let payload = json!({
        "v": design.v(),
        "b": design.num_blocks(),
        "k": design.k(),
        "lambda": balance.lambda(),
        "group_order": order.to_string(),
        "flag_transitive": flag.flag_transitive,
        "block_orbit_size": flag.block_orbit_size,
        "block_stabilizer_order": flag.block_stabilizer_order.to_string(),
        "stabilizer_orbits_on_block": flag.stabilizer_orbits_on_block,
    });
    Ok((verdicts, payload))
}

pub fn construct(which: Which, dir: &Path) -> Result<Outcome> {
    let c = match which {
        Which::Pg32 => build_pg32()?,
        Which::C55 => build_c55()?,
    };
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let design_path = dir.join(format!("{}.design", c.name));
    let group_path = dir.join(format!("{}.group", c.name));
    fs::write(&design_path, write_design(&c.design))
        .with_context(|| format!("writing {}", design_path.display()))?;
    fs::write(&group_path, write_group(&c.group))
        .with_context(|| format!("writing {}", group_path.display()))?;

    let design = load_design(&design_path)?;
    let group = load_group(&group_path)?;
    let (mut verdicts, mut payload) = check_design(&design, &group)?;
    verdicts.insert(
        0,
        Verdict::new(
            "files read back",
            design == c.design && group.generators() == c.group.generators(),
            format!("{} and {}", design_path.display(), group_path.display()),
        ),
    );
    if let Value::Object(map) = &mut payload {
        map.insert("name".into(), json!(c.name));
        map.insert("base_block".into(), json!(c.base_block));
        map.insert("via_search".into(), json!(c.via_search));
    }
    let artifacts = vec![design_path.display().to_string(), group_path.display().to_string()];
    let mut text = String::new();
    for a in &artifacts {
        writeln!(text, "wrote {a}").unwrap();
    }
    Ok(Outcome {
        text: text + &verdict_text(&verdicts),
        verdicts,
        artifacts,
        payload,
    })
}

pub fn verify(design: &Path, group: &Path) -> Result<Outcome> {
    let (verdicts, payload) = check_design(&load_design(design)?, &load_group(group)?)?;
    Ok(Outcome {
        text: verdict_text(&verdicts),
        verdicts,
        artifacts: Vec::new(),
        payload,
    })
}

pub fn subdegrees_cmd(group: &Path, point: usize) -> Result<Outcome> {
    let g = load_group(group)?;
    if point >= g.degree() {
        return Err(usage(format!("point {point} outside degree {}", g.degree())));
    }
    let (verdict, payload, line) = match subdegrees(&g, point) {
        Ok(subs) => {
            let line = subs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            (
                Verdict::new("transitive", true, format!("subdegrees at {point}: {line}")),
                json!({ "point": point, "subdegrees": subs }),
                line,
            )
        }
        Err(Error::Intransitive { orbits }) => (
            Verdict::new("transitive", false, format!("{} orbits", orbits.len())),
            json!({ "point": point, "orbits": orbits }),
            format!("intransitive: {} orbits", orbits.len()),
        ),
        Err(e) => return Err(e.into()),
    };
    Ok(Outcome {
        text: line + "\n",
        verdicts: vec![verdict],
        artifacts: Vec::new(),
        payload,
    })
}

fn braces(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| format!("{{{}}}", b.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn primitivity(group: &Path) -> Result<Outcome> {
    let g = load_group(group)?;
    let (verdict, payload) = match is_primitive(&g) {
        Ok(Primitivity::Primitive) => (
            Verdict::new("primitive", true, "no non-trivial block system"),
            json!({ "primitive": true, "blocks": null }),
        ),
        Ok(Primitivity::Imprimitive { blocks }) => (
            Verdict::new("primitive", false, format!("block system {}", braces(&blocks))),
            json!({ "primitive": false, "blocks": blocks }),
        ),
        Err(Error::Intransitive { orbits }) => (
            Verdict::new("primitive", false, format!("intransitive, orbits {}", braces(&orbits))),
            json!({ "primitive": false, "orbits": orbits }),
        ),
        Err(e) => return Err(e.into()),
    };
    let text = if verdict.pass {
        "primitive\n".to_string()
    } else {
        format!("imprimitive: {}\n", verdict.detail)
    };
    Ok(Outcome {
        text,
        verdicts: vec![verdict],
        artifacts: Vec::new(),
        payload,
    })
}
