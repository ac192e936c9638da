//! Generic stabilizers: the generically free threshold `d(G)`, enumeration of
//! prime order class shapes, and the constant `c(G) = max r·dim C`.

use crate::algebra_core::{ClassDescriptor, Family, GroupSpec};
use crate::closure::{partitions, unipotent_classes};
use crate::error::{Error, Result};
use crate::invariants::class_dim;
use crate::oracle::min_generators;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Exceptional {
    E8,
    E7,
    E6,
    F4,
    G2,
}

/// A simple group as far as the threshold table is concerned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieType {
    Classical(GroupSpec),
    Exceptional(Exceptional),
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieType::Classical(g) => write!(f, "{g}"),
            LieType::Exceptional(e) => write!(f, "{e:?}"),
        }
    }
}

/// `d(G)` and `d'(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThresholdRow {
    pub d: Ratio<i64>,
    pub d_prime: Ratio<i64>,
}

pub fn threshold(ty: &LieType) -> Result<ThresholdRow> {
    let row = |d: Ratio<i64>, d_prime: Ratio<i64>| Ok(ThresholdRow { d, d_prime });
    let int = Ratio::from_integer;
    match *ty {
        LieType::Exceptional(e) => {
            let (d, dp) = match e {
                Exceptional::E8 => (720, 1200),
                Exceptional::E7 => (378, 630),
                Exceptional::E6 => (216, 360),
                Exceptional::F4 => (144, 240),
                Exceptional::G2 => (36, 48),
            };
            row(int(d), int(dp))
        }
        LieType::Classical(g) => {
            let n = g.n as i64;
            let sq = int(n * n);
            match g.family {
                Family::SL if n == 2 => row(int(6), int(9)),
                Family::SL => row(sq * Ratio::new(9, 4), sq * Ratio::new(9, 4)),
                Family::Sp if n == 4 || (n == 6 && g.p == 2) => row(sq * Ratio::new(9, 8) + 2, sq * Ratio::new(3, 2)),
                Family::Sp => row(sq * Ratio::new(9, 8), sq * Ratio::new(3, 2)),
                Family::SO | Family::Spin8 if n >= 7 => row(sq * Ratio::new(9, 8), int(2 * (n - 1) * (n - 1))),
                _ => Err(Error::UnsupportedGroup(format!("{g} has no threshold row"))),
            }
        }
    }
}

/// True iff `dim V − dim V^G > d(G)`, which forces a trivial generic stabilizer.
pub fn generically_free(ty: &LieType, dim_v: usize, dim_vg: usize) -> Result<bool> {
    if dim_vg > dim_v {
        return Err(Error::Malformed(format!("dim V^G = {dim_vg} exceeds dim V = {dim_v}")));
    }
    let row = threshold(ty)?;
    Ok(Ratio::from_integer((dim_v - dim_vg) as i64) > row.d)
}

pub const DEFAULT_SHAPE_BOUND: usize = 12;

/// Small primes used to tag eigenvalues whose order matters.
const TAG_PRIMES: [u32; 3] = [3, 5, 7];

fn labels(k: usize) -> Vec<String> {
    (0..k).map(|i| format!("l{i}")).collect()
}

fn pair_class(a: usize, b: usize, mults: &[usize], tag: Option<&str>) -> ClassDescriptor {
    let names = labels(mults.len());
    let pairs: Vec<(&str, usize)> = names.iter().map(String::as_str).zip(mults.iter().copied()).collect();
    let mut c = ClassDescriptor::semisimple(a, b, &pairs);
    if let Some(t) = tag {
        for l in &names {
            c = c.with_relation(l, &format!("{l}{t}"));
        }
    }
    c
}

fn raw_semisimple(g: &GroupSpec) -> Vec<ClassDescriptor> {
    let frame = g.frame();
    let n = frame.n;
    let mut out = Vec::new();
    if frame.fam == Family::SL {
        for pi in partitions(n).into_iter().filter(|pi| pi.len() >= 2) {
            let names = labels(pi.len());
            let free: Vec<(&str, usize)> = names.iter().map(String::as_str).zip(pi.iter().copied()).collect();
            out.push(ClassDescriptor::sl_semisimple(0, &free));
        }
        if n == 2 {
            out.push(
                ClassDescriptor::sl_semisimple(0, &[("l0", 1), ("l1", 1)])
                    .with_relation("l0", "l0^2=-1")
                    .with_relation("l1", "l1^2=-1"),
            );
        }
        return out;
    }
    // Involutions modulo the center.
    for b in 1..n {
        if g.has_minus_identity() && 2 * b > n {
            continue;
        }
        out.push(ClassDescriptor::semisimple(n - b, b, &[]));
    }
    if n.is_multiple_of(2) {
        out.push(pair_class(0, 0, &[n / 2], Some("^2=-1")));
    }
    // Odd prime order: 1-eigenspace plus pairs.
    for a in 0..n {
        if (n - a) % 2 == 1 {
            continue;
        }
        for mults in partitions((n - a) / 2) {
            out.push(pair_class(a, 0, &mults, None));
            for r in TAG_PRIMES {
                if mults.len() <= (r as usize - 1) / 2 {
                    out.push(pair_class(a, 0, &mults, Some(&format!("^{r}=1"))));
                }
            }
        }
    }
    out
}

/// Canonical shapes of prime order classes, modulo the center.
///
/// Semisimple shapes come with generic labels and, where it can change the
/// answer, with labels tagged by the small primes 3, 5 and 7.
pub fn enumerate_class_shapes(group: &GroupSpec, bound: usize) -> Result<Vec<ClassDescriptor>> {
    if group.n > bound {
        return Err(Error::BoundExceeded { n: group.n, bound });
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |c: ClassDescriptor| {
        let key = format!("{c}|{:?}", c.pattern().map(|p| &p.relations));
        if seen.insert(key) {
            out.push(c);
        }
    };
    for c in raw_semisimple(group) {
        let Ok(c) = group.validate(&c) else { continue };
        if !prime_order_mod_center(group, &c) {
            continue;
        }
        push(c);
    }
    for mut c in unipotent_classes(group)? {
        c.order = None;
        if let Ok(c) = group.validate(&c) {
            push(c);
        }
    }
    Ok(out)
}

/// Whether a semisimple shape can be realized with prime order modulo the center.
fn prime_order_mod_center(g: &GroupSpec, c: &ClassDescriptor) -> bool {
    let Some(p) = c.pattern() else { return true };
    if g.frame().fam == Family::SL {
        return true;
    }
    let (a, b) = (p.mult_one, p.mult_minus_one);
    let orders = p.label_orders();
    if p.pairs.is_empty() {
        return g.p != 2;
    }
    if a > 0 && b > 0 {
        return false;
    }
    let all_tagged = p.pairs.iter().all(|l| orders.contains_key(&l.label));
    let none_tagged = p.pairs.iter().all(|l| !orders.contains_key(&l.label));
    if none_tagged {
        return b == 0;
    }
    if !all_tagged {
        return false;
    }
    let ks: BTreeSet<u32> = orders.values().copied().collect();
    match ks.iter().next() {
        Some(4) if ks.len() == 1 => a == 0 && b == 0 && g.p != 2,
        Some(&k) if ks.len() == 1 => b == 0 && k != g.p,
        _ => false,
    }
}

/// `c(G)` with a maximizing `(class, r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CValue {
    pub c: usize,
    pub class: ClassDescriptor,
    pub r: usize,
    pub dim_class: usize,
    /// Shapes skipped because their class dimension is not available.
    pub skipped: usize,
}

/// `(r·dim, r, dim, name, class)`.
type Scored = (usize, usize, usize, String, ClassDescriptor);

pub fn c_value(group: &GroupSpec) -> Result<CValue> {
    let shapes = enumerate_class_shapes(group, DEFAULT_SHAPE_BOUND)?;
    let scored: Vec<Option<Scored>> = shapes
        .into_par_iter()
        .map(|c| {
            let dim = match class_dim(group, &c) {
                Ok(d) => d.dim_class,
                Err(Error::UnsupportedChar2Class(_)) => return Ok(None),
                Err(e) => return Err(e),
            };
            let r = min_generators(group, &c)?;
            Ok(Some((r * dim, r, dim, c.to_string(), c)))
        })
        .collect::<Result<_>>()?;
    let skipped = scored.iter().filter(|s| s.is_none()).count();
    // Largest value; ties go to the larger r, then the smaller name.
    let best = scored
        .into_iter()
        .flatten()
        .max_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)).then(y.3.cmp(&x.3)))
        .ok_or_else(|| Error::Infeasible(format!("no class shapes for {group}")))?;
    Ok(CValue { c: best.0, r: best.1, dim_class: best.2, class: best.4, skipped })
}
