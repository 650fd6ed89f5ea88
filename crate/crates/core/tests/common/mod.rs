//! Transitive permutation groups of small degree and brute-force oracles.
#![allow(dead_code)]

use flagsieve::perm::{alternating_group, cyclic_group, symmetric_group, PermGroup, Permutation};

pub fn perm(images: &[u32]) -> Permutation {
    Permutation::from_images(images.to_vec()).unwrap()
}

pub fn from_fn(n: usize, f: impl Fn(u32) -> u32) -> Permutation {
    Permutation::from_images((0..n as u32).map(f).collect::<Vec<_>>()).unwrap()
}

pub fn group(n: usize, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::new(n, gens).unwrap()
}

pub fn dihedral(n: usize) -> PermGroup {
    let m = n as u32;
    group(n, vec![from_fn(n, |x| (x + 1) % m), from_fn(n, |x| (m - x) % m)])
}

/// `x ↦ x + 1` and `x ↦ gx` on the integers mod `p`.
pub fn affine_line(p: u32, g: u32) -> PermGroup {
    let n = p as usize;
    group(n, vec![from_fn(n, |x| (x + 1) % p), from_fn(n, |x| (x * g) % p)])
}

fn inv_mod(x: u32, p: u32) -> u32 {
    (1..p).find(|y| x * y % p == 1).unwrap()
}

/// `PSL(2,p)` or `PGL(2,p)` on the projective line `{0..p-1, ∞ = p}` via
/// `x ↦ x+1`, `x ↦ gx` and `x ↦ -1/x`.
pub fn projective_line(p: u32, g: u32) -> PermGroup {
    let n = (p + 1) as usize;
    let inf = p;
    let t = from_fn(n, |x| if x == inf { inf } else { (x + 1) % p });
    let m = from_fn(n, |x| if x == inf { inf } else { x * g % p });
    let s = from_fn(n, |x| {
        if x == inf {
            0
        } else if x == 0 {
            inf
        } else {
            (p - inv_mod(x, p)) % p
        }
    });
    group(n, vec![t, m, s])
}

/// Multiplication in the field of 8 elements, modulo `x³ + x + 1`.
fn gf8_mul(a: u32, b: u32) -> u32 {
    let mut r = 0;
    for i in 0..3 {
        if b >> i & 1 == 1 {
            r ^= a << i;
        }
    }
    for bit in (3..5).rev() {
        if r >> bit & 1 == 1 {
            r ^= 0b1011 << (bit - 3);
        }
    }
    r
}

/// Named transitive groups of degree at most 8.
pub fn transitive_fixtures() -> Vec<(String, PermGroup)> {
    let mut out: Vec<(String, PermGroup)> = Vec::new();
    for n in 2..=8 {
        out.push((format!("C{n}"), cyclic_group(n).unwrap()));
        out.push((format!("S{n}"), symmetric_group(n).unwrap()));
    }
    for n in 3..=8 {
        out.push((format!("A{n}"), alternating_group(n).unwrap()));
        out.push((format!("D{n}"), dihedral(n)));
    }
    out.push((
        "V4 regular".into(),
        group(4, vec![perm(&[1, 0, 3, 2]), perm(&[2, 3, 0, 1])]),
    ));
    out.push((
        "C2^3 regular".into(),
        group(8, (0..3).map(|i| from_fn(8, move |x| x ^ (1 << i))).collect()),
    ));
    out.push((
        "C4xC2 regular".into(),
        group(
            8,
            vec![
                from_fn(8, |x| (x % 4 + 1) % 4 + 4 * (x / 4)),
                from_fn(8, |x| (x + 4) % 8),
            ],
        ),
    ));
    out.push(("AGL(1,5)".into(), affine_line(5, 2)));
    out.push(("AGL(1,7)".into(), affine_line(7, 3)));
    out.push(("C7:C3".into(), affine_line(7, 2)));
    out.push(("PGL(2,5)".into(), projective_line(5, 2)));
    out.push(("PSL(2,5)".into(), projective_line(5, 4)));
    out.push(("PGL(2,7)".into(), projective_line(7, 3)));
    out.push(("PSL(2,7)".into(), projective_line(7, 2)));
    out.push((
        "AGL(1,8)".into(),
        group(8, vec![from_fn(8, |x| x ^ 1), from_fn(8, |x| gf8_mul(x, 2))]),
    ));
    out.push((
        "S2 wr S4".into(),
        group(
            8,
            vec![
                perm(&[1, 0, 2, 3, 4, 5, 6, 7]),
                perm(&[2, 3, 0, 1, 4, 5, 6, 7]),
                perm(&[2, 3, 4, 5, 6, 7, 0, 1]),
            ],
        ),
    ));
    out.push((
        "S4 wr S2".into(),
        group(
            8,
            vec![
                perm(&[1, 0, 2, 3, 4, 5, 6, 7]),
                perm(&[1, 2, 3, 0, 4, 5, 6, 7]),
                perm(&[4, 5, 6, 7, 0, 1, 2, 3]),
            ],
        ),
    ));
    out.push((
        "S3 wr S2".into(),
        group(6, vec![perm(&[1, 0, 2, 3, 4, 5]), perm(&[1, 2, 0, 3, 4, 5]), perm(&[3, 4, 5, 0, 1, 2])]),
    ));
    for (name, g) in &out {
        assert!(g.is_transitive(), "{name} is not transitive");
    }
    out
}

/// Every set partition of `0..n`, as block labels.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max {
            cur.push(b);
            rec(i + 1, n, cur, max.max(b + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), 0, &mut out);
    out
}

/// Whether the generators map blocks of the labelled partition to blocks.
pub fn preserves(g: &PermGroup, labels: &[usize]) -> bool {
    let n = labels.len();
    g.generators().iter().all(|p| {
        let mut image_label = vec![usize::MAX; n];
        for x in 0..n {
            let y = p.apply(x);
            let block = labels[x];
            if image_label[block] == usize::MAX {
                image_label[block] = labels[y];
            } else if image_label[block] != labels[y] {
                return false;
            }
        }
        true
    })
}

/// Primitivity by checking every nontrivial partition.
pub fn brute_force_primitive(g: &PermGroup) -> bool {
    let n = g.degree();
    set_partitions(n).iter().all(|labels| {
        let blocks = labels.iter().max().map_or(0, |m| m + 1);
        blocks == 1 || blocks == n || !preserves(g, labels)
    })
}
