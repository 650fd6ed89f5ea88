use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::catalog::{table1, CatalogLine, SimpleGroupEntry};
use super::filters::{divisor_parameter_scan, grid_two_path_check, order_bound, subdegree_divisibility};
use super::report::{params, SieveReport};
use super::{factorial_factorization, FactoredInt};
use crate::error::{Error, Result};
use crate::perm::{alternating_group, induced_action, orbits_on_unordered_pairs, symmetric_group, ActionSpace};

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn binom(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * big(n - i) / big(i + 1))
}

/// `C(n, k) <= bound` without computing huge binomials.
fn binom_at_most(n: u64, k: u64, bound: u128) -> bool {
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * (n - i) as u128 / (i + 1) as u128;
        if c > bound {
            return false;
        }
    }
    true
}

/// `base^exp < bound`, stopping as soon as the power reaches the bound.
fn pow_below(base: u64, exp: u64, bound: u128) -> bool {
    let mut x: u128 = 1;
    for _ in 0..exp {
        x *= base as u128;
        if x >= bound {
            return false;
        }
    }
    x < bound
}

fn pow_at_most(base: u64, exp: u64, bound: u128) -> bool {
    pow_below(base, exp, bound + 1)
}

/// Number of partitions of `st` letters into `t` classes of size `s`:
/// `C(ts-1, s-1) · C((t-1)s-1, s-1) ··· C(2s-1, s-1)`.
pub fn uniform_partition_count(s: u64, t: u64) -> BigUint {
    (2..=t).fold(BigUint::one(), |acc, j| acc * binom(j * s - 1, s - 1))
}

fn gcd6(v: &BigUint) -> BigUint {
    (v - 1u32).gcd(&big(6))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if v.is_empty() {
        "none".to_string()
    } else {
        v.join(", ")
    }
}

/// Orbits of `G` on points identified with `s`-subsets: `v = C(c, s)`,
/// `c = s + t`, `1 <= s < c/2`.
pub fn intransitive_sieve(c_max: u64, k: u64) -> Result<SieveReport> {
    if c_max < 5 {
        return Err(Error::invalid("intransitive sieve needs c_max >= 5"));
    }
    let mut report = SieveReport::new(
        "intransitive",
        params([("c", format!("5..={c_max}")), ("s", "1..c/2".into()), ("k", k.to_string())]),
    );
    let mut large_s_solutions = Vec::new();
    for c in 5..=c_max {
        for s in (1..).take_while(|s| 2 * s < c) {
            let t = c - s;
            let p = params([("c", c.to_string()), ("s", s.to_string())]);
            if s == 1 {
                report.eliminate(
                    p,
                    "complete: for s = 1 the group is (v-2)-transitive on points, so every k-subset is a block",
                );
                continue;
            }
            let bound = 6 * s as u128 * t as u128 + 1;
            if !binom_at_most(c, s, bound) {
                report.eliminate(p, format!("binomial bound: C({c},{s}) > 6st+1 = {bound}"));
                continue;
            }
            if s >= 4 {
                large_s_solutions.push((s, t));
            }
            let v = binom(c, s);
            let d = big(s * t);
            let mut trail = vec![format!("binomial bound: C({c},{s}) = {v} <= 6st+1 = {bound}")];
            if !subdegree_divisibility(&v, k, &d) {
                report.eliminate(
                    p,
                    format!(
                        "subdegree divisibility: v-1 = {} does not divide gcd(k-1,v-1)·s(c-s) = {}",
                        &v - 1u32,
                        (&v - 1u32).gcd(&big(k - 1)) * &d
                    ),
                );
                continue;
            }
            trail.push(format!(
                "subdegree divisibility: v-1 = {} divides gcd(k-1,v-1)·s(c-s) = {}",
                &v - 1u32,
                (&v - 1u32).gcd(&big(k - 1)) * &d
            ));
            if s == 2 {
                let halved = big(c - 2);
                trail.push(format!(
                    "subdegrees on 2-subsets: 1, {}, {}; the halved reading for S_c gives {} and {} and {} the divisibility",
                    2 * (c - 2),
                    binom(c - 2, 2),
                    c - 2,
                    binom(c - 2, 2) / 2u32,
                    if subdegree_divisibility(&v, k, &halved) { "passes" } else { "fails" }
                ));
            }
            if v < big(100) {
                trail.push(format!("v = {v} < 100: left to the classification of small designs"));
            } else if c == 23 && s == 2 {
                trail.push("v = 253 >= 100: passed to eliminate-253".into());
            } else {
                trail.push(format!("v = {v} >= 100: open"));
            }
            let mut p = p;
            p.insert("t".into(), t.to_string());
            p.insert("v".into(), v.to_string());
            report.survive(p, trail);
        }
    }
    let s2: Vec<String> = report
        .survivors
        .iter()
        .filter(|s| s.params["s"] == "2")
        .map(|s| format!("({},{})", s.params["c"], s.params["v"]))
        .collect();
    let expected: Vec<String> = [(5, 10), (7, 21), (11, 55), (23, 253)]
        .iter()
        .filter(|(c, _)| *c <= c_max)
        .map(|(c, v)| format!("({c},{v})"))
        .collect();
    report.check("s=2 survivors (c,v)", join(expected), join(s2));
    report.check(
        "s>=4 solutions of the binomial bound",
        "none",
        join(large_s_solutions.iter().map(|(s, t)| format!("({s},{t})"))),
    );
    let s3: Vec<u64> = (5..=c_max)
        .filter(|&c| {
            let v = binom(c, 3);
            subdegree_divisibility(&v, k, &big(3 * (c - 3)))
        })
        .collect();
    report.check("s=3 divisibility holds for c", "5", join(&s3));
    report.check("s=3 at c=5 has s > c-s", true, 3 > 5 - 3);
    Ok(report)
}

/// Points identified with partitions of `st` letters into `t` classes of
/// size `s`.
pub fn imprimitive_sieve(s_max: u64, t_max: u64) -> Result<SieveReport> {
    if s_max < 2 || t_max < 2 {
        return Err(Error::invalid("imprimitive sieve needs s_max >= 2 and t_max >= 2"));
    }
    let mut report = SieveReport::new(
        "imprimitive",
        params([("s", format!("2..={s_max}")), ("t", format!("2..={t_max}")), ("k", "7".into())]),
    );
    let mut s2_survivors = Vec::new();
    for t in 2..=t_max {
        let v = uniform_partition_count(2, t);
        let double_factorial = (0..=t - 2).fold(BigUint::one(), |acc, i| acc * big(2 * t - (2 * i + 1)));
        if v != double_factorial {
            return Err(Error::Integrity(format!("s=2, t={t}: {v} != {double_factorial}")));
        }
        let p = params([("s", "2".into()), ("t", t.to_string())]);
        let rhs = big(6 * t * (t - 1));
        if &v - 1u32 > rhs {
            report.eliminate(p, format!("bound v-1 <= 6t(t-1): {} > {rhs}", &v - 1u32));
            continue;
        }
        let d = big(t * (t - 1));
        let exact = subdegree_divisibility(&v, 7, &d);
        let mut trail = vec![
            format!("bound v-1 <= 6t(t-1): {} <= {rhs}", &v - 1u32),
            format!(
                "exact divisibility v-1 | gcd(6,v-1)·t(t-1) = {}: {}",
                gcd6(&v) * &d,
                if exact { "holds" } else { "fails" }
            ),
        ];
        if 2 * t < 5 {
            trail.push(format!("c = st = {} < 5", 2 * t));
        }
        trail.push(format!("v = {v} < 100: contradiction"));
        s2_survivors.push(t);
        let mut p = p;
        p.insert("v".into(), v.to_string());
        p.insert("case".into(), "s=2".into());
        report.survive(p, trail);
    }

    let mut solutions = Vec::new();
    let mut finals = Vec::new();
    for s in 3..=s_max {
        for t in 2..=t_max {
            let p = params([("s", s.to_string()), ("t", t.to_string())]);
            let exp = (s - 1) * (t - 1) - 2;
            let bound = 3 * (s as u128) * (s as u128);
            if !pow_below(t, exp, bound) {
                report.eliminate(p, format!("power bound: {t}^{exp} >= 3s² = {bound}"));
                continue;
            }
            solutions.push((s, t));
            let v = uniform_partition_count(s, t);
            let d = big(s * s * t * (t - 1) / 2);
            let strict = pow_at_most(t, (s - 1) * (t - 1), bound * t as u128 * (t - 1) as u128);
            if !subdegree_divisibility(&v, 7, &d) {
                report.eliminate(
                    p,
                    format!(
                        "subdegree divisibility: v-1 = {} does not divide gcd(6,v-1)·s²C(t,2) = {}",
                        &v - 1u32,
                        gcd6(&v) * &d
                    ),
                );
                continue;
            }
            finals.push((s, t, v.clone()));
            let trail = vec![
                format!("power bound: {t}^{exp} < 3s² = {bound}"),
                format!(
                    "unrelaxed bound t^((s-1)(t-1)) <= 3s²t(t-1): {}",
                    if strict { "holds" } else { "fails" }
                ),
                format!(
                    "subdegree divisibility: v-1 = {} divides gcd(6,v-1)·s²C(t,2) = {}",
                    &v - 1u32,
                    gcd6(&v) * &d
                ),
                format!("v = {v} < 100: contradiction"),
            ];
            let mut p = p;
            p.insert("v".into(), v.to_string());
            p.insert("case".into(), "s>=3".into());
            report.survive(p, trail);
        }
    }

    report.check(
        "s=2 survivors t",
        join([2u64, 3].into_iter().filter(|&t| t <= t_max)),
        join(&s2_survivors),
    );
    let mut expected: Vec<(u64, u64)> = (3..=11u64.min(s_max)).map(|s| (s, 2)).collect();
    if t_max >= 3 {
        expected.push((3, 3));
    }
    expected.sort_unstable();
    let fmt = |v: &[(u64, u64)]| join(v.iter().map(|(s, t)| format!("({s},{t})")));
    report.check("s>=3 power-bound solutions (s,t)", fmt(&expected), fmt(&solutions));
    report.check(
        "s>=3 final survivors",
        "(3,2) v=10",
        join(finals.iter().map(|(s, t, v)| format!("({s},{t}) v={v}"))),
    );
    Ok(report)
}

/// `m^ℓ - 1 <= gcd(k-1, v-1) · ℓ(m-1)` with `v = m^ℓ`.
pub fn product_type_sieve(l_max: u64, m_max: u64, k: u64) -> Result<SieveReport> {
    if l_max < 2 || m_max < 2 {
        return Err(Error::invalid("product sieve needs l_max >= 2 and m_max >= 2"));
    }
    let mut report = SieveReport::new(
        "product",
        params([("l", format!("2..={l_max}")), ("m", format!("2..={m_max}")), ("k", k.to_string())]),
    );
    for l in 2..=l_max {
        for m in 2..=m_max {
            let v = big(m).pow(l as u32);
            let g = (&v - 1u32).gcd(&big(k - 1));
            let rhs = &g * big(l * (m - 1));
            let p = params([("l", l.to_string()), ("m", m.to_string())]);
            if &v - 1u32 > rhs {
                report.eliminate(
                    p,
                    format!("subdegree bound: m^l-1 = {} > gcd·l(m-1) = {g}·{} = {rhs}", &v - 1u32, l * (m - 1)),
                );
                continue;
            }
            let grid = grid_two_path_check(k, m)?;
            let trail = vec![
                format!("subdegree bound: m^l-1 = {} <= gcd·l(m-1) = {g}·{} = {rhs}", &v - 1u32, l * (m - 1)),
                if m >= 5 {
                    "m >= 5: admissible component degree".to_string()
                } else {
                    "m < 5: below the minimum component degree".to_string()
                },
                if v < big(100) {
                    format!("v = {v} < 100: no product action example")
                } else {
                    format!(
                        "v = {v}: grid 2-path count k(k-1)/(m+1) = {}/{} = {} is {}",
                        k * (k - 1),
                        m + 1,
                        grid.value,
                        if grid.integral { "integral" } else { "not integral" }
                    )
                },
            ];
            let mut p = p;
            p.insert("v".into(), v.to_string());
            report.survive(p, trail);
        }
    }
    let expected: Vec<String> = [2u64, 3, 4, 5, 7, 11]
        .iter()
        .filter(|&&m| m <= m_max)
        .map(|m| format!("(2,{m})"))
        .collect();
    let actual: Vec<String> = report
        .survivors
        .iter()
        .map(|s| format!("({},{})", s.params["l"], s.params["m"]))
        .collect();
    report.check("survivors (l,m)", join(expected), join(actual));
    let grid = grid_two_path_check(k, 11)?;
    report.check("grid 2-path count at m=11", "7/2 not integral", format!(
        "{} {}",
        grid.value,
        if grid.integral { "integral" } else { "not integral" }
    ));
    Ok(report)
}

/// `|T|^(m-2) < 6m` for `m >= 3` with `|T| >= 60`, then
/// `|T| - 1 <= 4|Out(T)|` across the table.
pub fn diagonal_type_sieve(table: &[SimpleGroupEntry], m_max: u64) -> Result<SieveReport> {
    if table.is_empty() {
        return Err(Error::invalid("simple-group table is empty"));
    }
    if let Some(e) = table.iter().find(|e| e.order < big(60)) {
        return Err(Error::invalid(format!("{} has order below 60", e.label)));
    }
    let mut report = SieveReport::new(
        "diagonal",
        params([("m", format!("3..={m_max}")), ("table", format!("{} groups", table.len()))]),
    );
    let mut excluded_all = true;
    for m in 3..=m_max {
        let lhs = big(60).pow((m - 2) as u32);
        let rhs = big(6 * m);
        let p = params([("m", m.to_string())]);
        if lhs >= rhs {
            let shown = if m <= 6 { lhs.to_string() } else { format!("60^{}", m - 2) };
            report.eliminate(p, format!("copies bound: 60^(m-2) = {shown} >= 6m = {rhs}"));
        } else {
            excluded_all = false;
            report.survive(p, vec![format!("copies bound: 60^(m-2) < 6m = {rhs}")]);
        }
    }
    let mut found = Vec::new();
    for e in table {
        let lhs = &e.order - 1u32;
        let rhs = &e.out_order * 4u32;
        let p = params([("T", e.label.clone())]);
        if lhs <= rhs {
            found.push(e.label.clone());
            report.survive(p, vec![format!("|T|-1 = {lhs} <= 4|Out(T)| = {rhs}")]);
        } else {
            report.eliminate(p, format!("outer bound: |T|-1 = {lhs} > 4|Out(T)| = {rhs}"));
        }
    }
    report.check("m >= 3 excluded", true, excluded_all);
    report.check("entries with |T|-1 <= 4|Out(T)|", "none", join(&found));
    for label in ["A5", "A6"] {
        let e = table
            .iter()
            .find(|e| e.label == label)
            .ok_or_else(|| Error::invalid(format!("table lacks {label}")))?;
        let (lhs, rhs) = (&e.order - 1u32, &e.out_order * 4u32);
        let expected = if label == "A5" { "59 > 8" } else { "359 > 16" };
        let actual = format!("{lhs} {} {rhs}", if lhs > rhs { ">" } else { "<=" });
        report.check(&format!("{label} fails |T|-1 <= 4|Out(T)|"), expected, actual);
    }
    Ok(report)
}

fn factor_order(line: &CatalogLine) -> Result<FactoredInt> {
    let value = line
        .group_order
        .to_u128()
        .ok_or_else(|| Error::invalid(format!("line {}: order exceeds 128 bits", line.line)))?;
    FactoredInt::factor(value)
}

/// Recomputes every line of the bundled table, keeps `v >= 100` lines that
/// satisfy the order bound, and scans each survivor's divisors for
/// `(b, r, λ)`.
pub fn table1_survey() -> Result<SieveReport> {
    let table = table1()?;
    let mut report = SieveReport::new("table1", params([("lines", format!("1..={}", table.len())), ("k", "7".into())]));
    let recomputed = table
        .iter()
        .filter(|l| l.recomputed_v().as_ref() == Some(&l.v))
        .count();
    report.check("lines with v = |X|/|H∩X|", table.len(), recomputed);
    let mut lines = Vec::new();
    let mut scans_empty = true;
    for l in &table {
        let p = params([
            ("line", l.line.to_string()),
            ("G", l.group.clone()),
            ("H", l.stabilizer.clone()),
            ("|H|", l.stabilizer_order.to_string()),
            ("v", l.v.to_string()),
        ]);
        if l.v < big(100) {
            report.eliminate(p, format!("v = {} < 100", l.v));
            continue;
        }
        if !order_bound(&l.group_order, &l.stabilizer_order, &l.v, 7)? {
            let g = (&l.v - 1u32).gcd(&big(6));
            report.eliminate(
                p,
                format!(
                    "order bound: |G| = {} > gcd(6,v-1)|H|²+|H| = {}",
                    l.group_order,
                    g * &l.stabilizer_order * &l.stabilizer_order + &l.stabilizer_order
                ),
            );
            continue;
        }
        let v = l.v.to_u64().ok_or_else(|| Error::invalid("v exceeds 64 bits"))?;
        let scan = divisor_parameter_scan(&factor_order(l)?, v, 7)?;
        scans_empty &= scan.is_empty();
        lines.push(l.line);
        report.survive(
            p,
            vec![
                "v >= 100".into(),
                "order bound holds".into(),
                format!("divisor scan of |G| = {}: {} feasible (r,λ)", l.group_order, scan.len()),
            ],
        );
    }
    report.check("order-bound survivors with v >= 100", "4, 13, 15, 16", join(&lines));
    report.check("feasible (r,λ) across survivors", true, scans_empty);
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group253 {
    A23,
    S23,
}

impl std::str::FromStr for Group253 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A23" => Ok(Group253::A23),
            "S23" => Ok(Group253::S23),
            _ => Err(Error::invalid(format!("expected A23 or S23, got `{s}`"))),
        }
    }
}

impl std::fmt::Display for Group253 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Group253::A23 => "A23",
            Group253::S23 => "S23",
        })
    }
}

/// Lengths of the orbits of `A_23` or `S_23` on unordered pairs of the 253
/// points given by 2-subsets, computed from the induced action.
pub fn pair_orbit_lengths_253(which: Group253) -> Result<Vec<usize>> {
    let g = match which {
        Group253::A23 => alternating_group(23)?,
        Group253::S23 => symmetric_group(23)?,
    };
    let on_pairs = induced_action(&g, &ActionSpace::unordered_pairs(23)?)?;
    let mut lengths: Vec<usize> = orbits_on_unordered_pairs(&on_pairs)?
        .into_iter()
        .map(|(_, len)| len)
        .collect();
    lengths.sort_unstable();
    Ok(lengths)
}

/// Every divisor-scan candidate for `v = 253` fails the pair-orbit
/// integrality `|O_i|·λ/b ∈ Z`.
pub fn eliminate_253(which: Group253) -> Result<SieveReport> {
    let lengths = pair_orbit_lengths_253(which)?;
    let order = factorial_factorization(23, which == Group253::A23)?;
    let scan = divisor_parameter_scan(&order, 253, 7)?;
    let mut report = SieveReport::new(
        "eliminate-253",
        params([("group", which.to_string()), ("v", "253".into()), ("k", "7".into())]),
    );
    let mut value_sets = BTreeSet::new();
    let mut sample = None;
    for t in &scan {
        let values: Vec<BigRational> = lengths
            .iter()
            .map(|&len| {
                BigRational::new(BigInt::from(&t.lambda * big(len as u64)), BigInt::from(t.b.clone()))
            })
            .collect();
        let p = params([
            ("b", t.b.to_string()),
            ("r", t.r.to_string()),
            ("lambda", t.lambda.to_string()),
        ]);
        if t.b == big(4554) {
            sample = Some(values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
        }
        match values.iter().zip(&lengths).find(|(x, _)| !x.is_integer()) {
            Some((x, len)) => report.eliminate(p, format!("pair-orbit integrality: λ·{len}/b = {x} is not an integer")),
            None => {
                return Err(Error::Refutation(format!(
                    "(253, {}, {}, 7, {}) passes pair-orbit integrality",
                    t.b, t.r, t.lambda
                )))
            }
        }
        value_sets.insert(values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    }
    report.check("pair-orbit lengths", "5313, 26565", join(&lengths));
    let expected_count = match which {
        Group253::A23 => 51840,
        Group253::S23 => 54720,
    };
    report.check("candidate triples", expected_count, scan.len());
    report.check("distinct (λ|O1|/b, λ|O2|/b)", "7/2, 35/2", value_sets.into_iter().collect::<Vec<_>>().join(" | "));
    report.check(
        "sample (253, 4554, 126, 7, 3)",
        "7/2, 35/2",
        sample.unwrap_or_else(|| "absent".into()),
    );
    report.check("survivors", 0, report.survivors.len());
    if scan.iter().any(|t| t.b == big(4554) && (t.r != big(126) || t.lambda != big(3))) {
        return Err(Error::Integrity("sample triple has unexpected r or λ".into()));
    }
    if report.eliminated_count as usize != scan.len() {
        return Err(Error::Integrity("eliminated count differs from scan size".into()));
    }
    Ok(report)
}
