//! Closure order on unipotent classes.
//!
//! In odd characteristic the order is dominance of partitions. In
//! characteristic 2 it is generated by rewriting rules on V/W decompositions;
//! the engine is sound but not claimed to be complete.

use crate::algebra_core::{Block, ClassDescriptor, Family, GroupSpec, Variant};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write;

/// All partitions of `n` in descending order, each with parts descending.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for x in (1..=max.min(n)).rev() {
            cur.push(x);
            go(n - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dominance order: every partial sum of `pi1` is at least that of `pi2`.
pub fn dominates(pi1: &[usize], pi2: &[usize]) -> Result<bool> {
    let (s1, s2): (usize, usize) = (pi1.iter().sum(), pi2.iter().sum());
    if s1 != s2 {
        return Err(Error::SizeMismatch(s1, s2));
    }
    let mut a = pi1.to_vec();
    let mut b = pi2.to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    let (mut sa, mut sb) = (0, 0);
    for i in 0..a.len().max(b.len()) {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa < sb {
            return Ok(false);
        }
    }
    Ok(true)
}

fn dom(a: &[usize], b: &[usize]) -> bool {
    dominates(a, b).unwrap_or(false)
}

/// Decorated decomposition: `V` sizes and expanded `W` sizes, both descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct State {
    v: Vec<usize>,
    w: Vec<usize>,
}

impl State {
    fn from_blocks(dec: &[Block]) -> Self {
        let mut v = Vec::new();
        let mut w = Vec::new();
        for b in dec {
            match *b {
                Block::V(x) => v.push(x),
                Block::W { ell, mult } => w.extend(std::iter::repeat_n(ell, mult)),
            }
        }
        State::normalized(v, w)
    }

    fn normalized(mut v: Vec<usize>, mut w: Vec<usize>) -> Self {
        v.retain(|&x| x > 0);
        w.retain(|&x| x > 0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        // V(2m)^3 is isometric to V(2m) + W(2m)
        let mut i = 0;
        while i + 2 < v.len() {
            if v[i] == v[i + 2] {
                let x = v[i];
                v.drain(i..i + 2);
                w.push(x);
            } else {
                i += 1;
            }
        }
        w.sort_unstable_by(|a, b| b.cmp(a));
        State { v, w }
    }

    fn successors(&self, symplectic: bool) -> Vec<State> {
        let mut out = Vec::new();
        let v = &self.v;
        for i in 0..v.len() {
            for j in 0..v.len() {
                if i == j {
                    continue;
                }
                let (m1, m2) = (v[i] / 2, v[j] / 2);
                let rest: Vec<usize> = (0..v.len()).filter(|&t| t != i && t != j).map(|t| v[t]).collect();
                if m1 > m2 + 1 {
                    let mut nv = rest.clone();
                    nv.push(2 * m1 - 2);
                    nv.push(2 * m2 + 2);
                    out.push(State::normalized(nv, self.w.clone()));
                }
                if m1 >= m2 && i < j || m1 > m2 {
                    let mut nw = self.w.clone();
                    nw.push(m1 + m2);
                    out.push(State::normalized(rest, nw));
                }
            }
            if symplectic {
                // a lone V(2m) spans a symplectic summand of its own
                let m1 = v[i] / 2;
                let rest: Vec<usize> = (0..v.len()).filter(|&t| t != i).map(|t| v[t]).collect();
                if m1 > 1 {
                    let mut nv = rest.clone();
                    nv.push(2 * m1 - 2);
                    nv.push(2);
                    out.push(State::normalized(nv, self.w.clone()));
                }
                let mut nw = self.w.clone();
                nw.push(m1);
                out.push(State::normalized(rest, nw));
            }
        }
        let w = &self.w;
        for i in 0..w.len() {
            for j in i + 1..=w.len() {
                let b = w.get(j).copied().unwrap_or(0);
                if w[i] >= b + 2 {
                    let mut nw = w.clone();
                    nw[i] -= 1;
                    if j < w.len() {
                        nw[j] += 1;
                    } else {
                        nw.push(1);
                    }
                    out.push(State::normalized(self.v.clone(), nw));
                }
            }
        }
        out
    }
}

fn reachable(start: State, symplectic: bool) -> BTreeSet<State> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(s) = queue.pop_front() {
        for t in s.successors(symplectic) {
            if seen.insert(t.clone()) {
                queue.push_back(t);
            }
        }
    }
    seen
}

/// Whether the rewriting rules lead from `upper` to `lower` (characteristic 2).
pub fn decorated_in_closure(family: Family, upper: &[Block], lower: &[Block]) -> bool {
    let target = State::from_blocks(lower);
    reachable(State::from_blocks(upper), family == Family::Sp).contains(&target)
}

fn split_partition(parts: &[usize]) -> bool {
    parts.iter().all(|x| x % 2 == 0)
}

/// Whether `lower` lies in the closure of `upper`.
pub fn in_closure(group: &GroupSpec, upper: &ClassDescriptor, lower: &ClassDescriptor) -> Result<bool> {
    let (Some(u), Some(l)) = (upper.unipotent_data(), lower.unipotent_data()) else {
        return Err(Error::MixedKinds);
    };
    let frame = group.frame();
    if let (Some(du), Some(dl)) = (&u.decoration, &l.decoration) {
        return Ok(decorated_in_closure(frame.fam, du, dl));
    }
    if !dom(&u.partition, &l.partition) {
        return Ok(false);
    }
    let (vu, vl) = (u.variant, l.variant);
    let opposite = vu != Variant::Unspecified && vl != Variant::Unspecified && vu != vl;
    if !opposite {
        return Ok(true);
    }
    // classes with opposite labels meet only through a non-split class in between
    let n: usize = u.partition.iter().sum();
    Ok(admissible_partitions(frame.fam, frame.p, n)
        .iter()
        .any(|nu| !split_partition(nu) && dom(&u.partition, nu) && dom(nu, &l.partition)))
}

/// Partitions of `n` admissible for the family in odd characteristic.
pub fn admissible_partitions(fam: Family, p: u32, n: usize) -> Vec<Vec<usize>> {
    let p = if p == 2 { 0 } else { p };
    partitions(n).into_iter().filter(|pi| crate::algebra_core::class_admissible(fam, p, pi)).collect()
}

fn equal_parts(n: usize, m: usize) -> Vec<usize> {
    let (q, r) = (n / m, n % m);
    let mut v = vec![q + 1; r];
    v.extend(std::iter::repeat_n(q, m - r));
    v
}

/// The unique minimal class with exactly `m` Jordan blocks.
pub fn smallest_class_with_blocks(group: &GroupSpec, m: usize) -> Result<ClassDescriptor> {
    let frame = group.frame();
    let n = frame.n;
    if m == 0 || m >= n {
        return Err(Error::NoSuchClass(format!("{m} blocks (noncentral classes have 1..{})", n - 1)));
    }
    if frame.fam == Family::SL {
        return Ok(ClassDescriptor::unipotent(&equal_parts(n, m)));
    }
    if frame.p == 2 {
        if m % 2 == 1 {
            return Err(Error::NoSuchClass(format!("{m} blocks in characteristic 2 (odd count)")));
        }
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for x in equal_parts(n / 2, m / 2) {
            *counts.entry(x).or_insert(0) += 1;
        }
        let dec: Vec<Block> = counts.into_iter().rev().map(|(ell, mult)| Block::W { ell, mult }).collect();
        return group.validate(&ClassDescriptor::decorated(&dec)).map_err(|e| match e {
            Error::OrderViolation(_) => Error::NoSuchClass(format!("{m} blocks of order 2")),
            other => other,
        });
    }
    let cands: Vec<Vec<usize>> =
        admissible_partitions(frame.fam, frame.p, n).into_iter().filter(|pi| pi.len() == m).collect();
    let minimal: Vec<&Vec<usize>> = cands.iter().filter(|a| cands.iter().all(|b| dom(b, a))).collect();
    match minimal.as_slice() {
        [] if cands.is_empty() => Err(Error::NoSuchClass(format!("{m} blocks for {group}"))),
        [one] => Ok(ClassDescriptor::unipotent(one)),
        _ => panic!("no unique minimal class with {m} blocks for {group}"),
    }
}

/// Whether the `O(V)`-class splits into two `SO(V)`-classes.
pub fn splits_in_g(group: &GroupSpec, class: &ClassDescriptor) -> Result<bool> {
    if !matches!(group.family, Family::SO | Family::Spin8) || group.is_so6() {
        return Err(Error::NotApplicable(format!("class splitting for {group}")));
    }
    if group.n % 2 == 1 {
        return Ok(false);
    }
    if let Some(p) = class.pattern() {
        return Ok(p.mult_one == 0 && p.mult_minus_one == 0);
    }
    let u = class.unipotent_data().expect("unipotent");
    Ok(match &u.decoration {
        Some(dec) => dec.iter().all(|b| matches!(b, Block::W { ell, .. } if ell % 2 == 0)),
        None => split_partition(&u.partition),
    })
}

/// Decorations of all unipotent involutions of `Sp_n` or `SO_n` in characteristic 2.
pub fn involution_decorations(fam: Family, n: usize) -> Vec<Vec<Block>> {
    let mut out = Vec::new();
    for s in 1..=n / 2 {
        let ones = (n - 2 * s) / 2;
        let mut tail = Vec::new();
        let push_w = |v: &mut Vec<Block>, ell, mult| {
            if mult > 0 {
                v.push(Block::W { ell, mult });
            }
        };
        push_w(&mut tail, 1, ones);
        let with = |vs: usize, w2: usize| {
            let mut d: Vec<Block> = std::iter::repeat_n(Block::V(2), vs).collect();
            if w2 > 0 {
                d.push(Block::W { ell: 2, mult: w2 });
            }
            d.extend(tail.iter().copied());
            d
        };
        if s % 2 == 0 {
            out.push(with(0, s / 2));
            out.push(with(2, (s - 2) / 2));
        } else if fam == Family::Sp {
            out.push(with(1, (s - 1) / 2));
        }
    }
    out
}

/// Unipotent classes of the group: all classes in odd characteristic,
/// involutions in characteristic 2. Split classes appear once per label.
pub fn unipotent_classes(group: &GroupSpec) -> Result<Vec<ClassDescriptor>> {
    let frame = group.frame();
    let mut raw = Vec::new();
    if frame.p == 2 && frame.fam != Family::SL {
        for dec in involution_decorations(frame.fam, frame.n) {
            raw.push(ClassDescriptor::decorated(&dec));
        }
    } else {
        for pi in admissible_partitions(frame.fam, 0, frame.n) {
            raw.push(ClassDescriptor::unipotent(&pi));
        }
    }
    let any = GroupSpec { p: 0, ..*group };
    let mut out = Vec::new();
    for c in raw {
        let probe = if frame.p == 2 { *group } else { any };
        let Ok(c) = probe.validate(&c) else { continue };
        if frame.fam == Family::SO && splits_in_g(group, &c).unwrap_or(false) {
            out.push(c.clone().with_variant(Variant::Plus));
            out.push(c.with_variant(Variant::Minus));
        } else {
            out.push(c);
        }
    }
    Ok(out)
}

/// Hasse diagram of the closure order in DOT format.
pub fn closure_dot(group: &GroupSpec) -> Result<String> {
    let classes = unipotent_classes(group)?;
    let k = classes.len();
    let mut below = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            below[i][j] = i != j && in_closure(group, &classes[i], &classes[j])?;
        }
    }
    let mut s = String::new();
    writeln!(s, "digraph closure {{").unwrap();
    for (i, c) in classes.iter().enumerate() {
        writeln!(s, "  n{i} [label=\"{c}\"];").unwrap();
    }
    for i in 0..k {
        for j in 0..k {
            let covered = below[i][j] && !(0..k).any(|t| below[i][t] && below[t][j]);
            if covered {
                writeln!(s, "  n{i} -> n{j};").unwrap();
            }
        }
    }
    s.push_str("}\n");
    Ok(s)
}
