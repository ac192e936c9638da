//! Classes of prime order `r` with the largest dimension among those with
//! points over `GF(q)`, and limits of `(r, s)`-generation probabilities.

use crate::algebra_core::{is_prime, ClassDescriptor, Family, GroupSpec};
use crate::closure::{partitions, unipotent_classes};
use crate::error::{Error, Result};
use crate::invariants::class_dim;
use serde::Serialize;
use std::fmt;

/// How `q` enters: only through the order `i` of `q` modulo `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QContext {
    pub r: u32,
    /// Smallest `i ≥ 1` with `r | q^i − 1`; 1 when `r = p`.
    pub i: u32,
    pub is_p: bool,
}

impl QContext {
    pub fn new(r: u32, i: u32, p: u32) -> Result<Self> {
        if !is_prime(r) {
            return Err(Error::Malformed(format!("r = {r} is not prime")));
        }
        if r == p {
            return Ok(QContext { r, i: 1, is_p: true });
        }
        if i == 0 || !(r - 1).is_multiple_of(i) {
            return Err(Error::Malformed(format!("i = {i} does not divide r - 1 = {}", r - 1)));
        }
        Ok(QContext { r, i, is_p: false })
    }

    /// Context for an explicit field size `q = p^f`.
    pub fn from_q(r: u32, q: u64, p: u32) -> Result<Self> {
        if r == p {
            return QContext::new(r, 1, p);
        }
        let r64 = u64::from(r);
        let mut x = q % r64;
        let mut i = 1;
        while x != 1 {
            x = x * (q % r64) % r64;
            i += 1;
            if i > r {
                return Err(Error::Malformed(format!("q = {q} is divisible by r = {r}")));
            }
        }
        QContext::new(r, i, p)
    }

    /// Number of Frobenius orbits on the primitive `r`-th roots of unity.
    pub fn t(&self) -> u32 {
        (self.r - 1) / self.i
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxClass {
    pub class: ClassDescriptor,
    pub dim: usize,
    /// Every class attaining the maximum, `class` first.
    pub all: Vec<ClassDescriptor>,
}

fn best(group: &GroupSpec, cands: Vec<ClassDescriptor>) -> Result<MaxClass> {
    let mut scored = Vec::new();
    for c in cands {
        let Ok(c) = group.validate(&c) else { continue };
        match class_dim(group, &c) {
            Ok(d) => scored.push((d.dim_class, c)),
            Err(Error::UnsupportedChar2Class(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    let dim = scored
        .iter()
        .map(|s| s.0)
        .max()
        .ok_or_else(|| Error::Infeasible(format!("no noncentral element of the requested order in {group}")))?;
    let mut all: Vec<ClassDescriptor> = scored.into_iter().filter(|s| s.0 == dim).map(|s| s.1).collect();
    all.sort_by_key(|c| c.to_string());
    all.dedup();
    Ok(MaxClass { class: all[0].clone(), dim, all })
}

/// Pair labels for `k` Galois blocks each holding `per_block` labels.
fn tagged_class(group: &GroupSpec, e: usize, mults: &[usize], per_block: usize, r: u32) -> ClassDescriptor {
    let names: Vec<(String, usize)> =
        mults.iter().enumerate().flat_map(|(j, &a)| (0..per_block).map(move |k| (format!("l{j}_{k}"), a))).collect();
    let refs: Vec<(&str, usize)> = names.iter().map(|(l, a)| (l.as_str(), *a)).collect();
    let mut c = if group.frame().fam == Family::SL {
        ClassDescriptor::sl_semisimple(e, &refs)
    } else {
        ClassDescriptor::semisimple(e, 0, &refs)
    };
    for (l, _) in &names {
        c = c.with_relation(l, &format!("{l}^{r}=1"));
    }
    c
}

fn semisimple_candidates(group: &GroupSpec, ctx: QContext) -> Vec<ClassDescriptor> {
    let frame = group.frame();
    let n = frame.n;
    let (r, i) = (ctx.r, ctx.i as usize);
    if r == 2 {
        let mut out: Vec<ClassDescriptor> = (1..n)
            .map(|b| {
                if frame.fam == Family::SL {
                    ClassDescriptor::sl_semisimple(0, &[("l", n - b), ("m", b)])
                } else {
                    ClassDescriptor::semisimple(n - b, b, &[])
                }
            })
            .collect();
        if n.is_multiple_of(2) && frame.fam != Family::SL {
            out.push(ClassDescriptor::semisimple(0, 0, &[("l", n / 2)]).with_relation("l", "l^2=-1"));
        }
        return out;
    }
    // A Galois block has `size` eigenvalues, `size / 2` of them up to inversion.
    let (size, blocks, per_block) = if frame.fam == Family::SL {
        (i, ctx.t() as usize, i)
    } else if i % 2 == 0 {
        (i, ctx.t() as usize, i / 2)
    } else {
        (2 * i, ctx.t() as usize / 2, i)
    };
    let mut out = Vec::new();
    for used in 1..=n / size {
        let e = n - used * size;
        for mults in partitions(used).into_iter().filter(|m| m.len() <= blocks) {
            out.push(tagged_class(group, e, &mults, per_block, r));
        }
    }
    out
}

/// A class of order `r` modulo the center with maximal dimension over `GF(q)`.
pub fn max_class(group: &GroupSpec, ctx: QContext) -> Result<MaxClass> {
    if ctx.is_p && group.p != ctx.r {
        return Err(Error::Malformed(format!("context has r = p but the group has p = {}", group.p)));
    }
    if !ctx.is_p && group.p == ctx.r {
        return Err(Error::Malformed("r equals the characteristic; use an r = p context".into()));
    }
    let cands = if ctx.is_p {
        unipotent_classes(group)?
            .into_iter()
            .map(|mut c| {
                c.order = None;
                c
            })
            .collect()
    } else {
        semisimple_candidates(group, ctx)
    };
    best(group, cands)
}

/// Limit of the probability that random elements of orders `r` and `s` generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Limit {
    Zero,
    Half,
    ThreeQuarters,
    One,
}

impl Limit {
    pub fn as_f64(self) -> f64 {
        match self {
            Limit::Zero => 0.0,
            Limit::Half => 0.5,
            Limit::ThreeQuarters => 0.75,
            Limit::One => 1.0,
        }
    }
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Limit::Zero => "0",
            Limit::Half => "1/2",
            Limit::ThreeQuarters => "3/4",
            Limit::One => "1",
        })
    }
}

/// Limit of `P_{r,s}(G(q))` as `q → ∞` through powers of `p`.
pub fn rs_limit(family: Family, n: usize, p: u32, r: u32, s: u32) -> Result<Limit> {
    if !is_prime(r) || !is_prime(s) || s <= 2 {
        return Err(Error::Malformed(format!("need primes r and s > 2, got ({r}, {s})")));
    }
    if p == 0 {
        return Err(Error::NotApplicable("finite groups need p > 0".into()));
    }
    let g = GroupSpec::new(family, n, p)?;
    // SO5 and Sp4 have the same simple quotients.
    let sp4 = (g.family == Family::Sp && g.n == 4) || (g.family == Family::SO && g.n == 5);
    Ok(match (sp4, r, s) {
        (true, 2, 3) if p <= 3 => Limit::Zero,
        (true, 2, 3) => Limit::Half,
        (true, 3, 3) if p == 3 => Limit::Zero,
        (true, 3, 3) if p == 2 => Limit::Half,
        (true, 3, 3) => Limit::ThreeQuarters,
        _ => Limit::One,
    })
}
