//! Enumeration of small matrix groups and random generation experiments.

use super::field::{Elt, Field};
use super::matrix::{Form, GFMatrix, Mat};
use crate::algebra_core::Family;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

pub const DEFAULT_CAP: usize = 1_000_000;

/// Outcome of [`group_closure`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Closure {
    pub size: usize,
    pub truncated: bool,
}

fn bfs(gens: &[Mat], cap: usize, mut keep: impl FnMut(&Mat)) -> Closure {
    let Some(first) = gens.first() else { return Closure { size: 1, truncated: false } };
    let id = Mat::identity(&first.f, first.rows);
    let mut seen = HashSet::new();
    seen.insert(id.key());
    keep(&id);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.key()) {
                if seen.len() > cap {
                    return Closure { size: seen.len(), truncated: true };
                }
                keep(&y);
                queue.push_back(y);
            }
        }
    }
    Closure { size: seen.len(), truncated: false }
}

/// Order of the group generated by `generators`, or `truncated` once it exceeds `cap`.
pub fn group_closure(generators: &[GFMatrix], cap: usize) -> Closure {
    let gens: Vec<Mat> = generators.iter().map(|g| g.m.clone()).collect();
    bfs(&gens, cap, |_| {})
}

/// Order of the finite classical group `family(n, q)` of isometries of the
/// standard form, from the order polynomial. `SO` assumes `q` odd and the
/// split form in even degree.
pub fn order_formula(family: Family, n: usize, q: u64) -> u128 {
    let q = q as u128;
    let prod = |range: std::ops::RangeInclusive<usize>, step: usize| -> u128 {
        range.map(|i| q.pow((step * i) as u32) - 1).product()
    };
    match family {
        Family::SL => q.pow((n * (n - 1) / 2) as u32) * prod(2..=n, 1),
        Family::Sp => {
            let m = n / 2;
            q.pow((m * m) as u32) * prod(1..=m, 2)
        }
        Family::SO | Family::Spin8 if n % 2 == 1 => {
            let m = n / 2;
            q.pow((m * m) as u32) * prod(1..=m, 2)
        }
        Family::SO | Family::Spin8 => {
            let m = n / 2;
            q.pow((m * (m - 1)) as u32) * (q.pow(m as u32) - 1) * prod(1..=m - 1, 2)
        }
    }
}

/// A finite group of interest, by family, degree and field size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupTarget {
    pub family: Family,
    pub n: usize,
    pub q: u32,
}

/// Standard generators: elementary unitriangular matrices for `SL2(q)` and
/// symplectic transvections `x ↦ x + a·B(x, v)·v` for `Sp4(q)`, with `a`
/// running over an additive basis of the field.
pub fn standard_generators(target: GroupTarget) -> Result<Vec<GFMatrix>> {
    let f = Field::new(target.q)?;
    let basis = f.prime_basis();
    match (target.family, target.n) {
        (Family::SL, 2) => Ok(basis
            .iter()
            .flat_map(|&a| {
                [Mat::from_rows(&f, &[vec![1, a], vec![0, 1]]), Mat::from_rows(&f, &[vec![1, 0], vec![a, 1]])]
            })
            .map(|m| GFMatrix { m, form: Form::None })
            .collect()),
        (Family::Sp, 4) => {
            let gram = Mat::from_rows(
                &f,
                &[vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![f.neg(1), 0, 0, 0], vec![0, f.neg(1), 0, 0]],
            );
            // basis order e1, e2, f1, f2
            let vs: [[Elt; 4]; 5] = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1], [1, 1, 0, 0]];
            let mut out = Vec::new();
            for v in vs {
                // B(x, v) = xᵀ·J·v, so the row functional is (J v)ᵀ
                let jv = gram.mul_vec(&v);
                for &a in &basis {
                    let m = Mat::from_fn(&f, 4, 4, |i, j| f.add(Elt::from(i == j), f.mul(a, f.mul(v[i], jv[j]))));
                    out.push(GFMatrix { m, form: Form::Symplectic(gram.clone()) });
                }
            }
            Ok(out)
        }
        _ => Err(Error::UnsupportedGroup(format!(
            "no standard generators for {:?}{}({})",
            target.family, target.n, target.q
        ))),
    }
}

/// A fully enumerated matrix group with its scalar center.
pub struct FiniteGroup {
    pub target: GroupTarget,
    pub field: Arc<Field>,
    pub generators: Vec<Mat>,
    pub elements: Vec<Mat>,
    pub center: Vec<Mat>,
    index: HashMap<Vec<u8>, usize>,
}

impl FiniteGroup {
    /// Enumerates the group from its standard generators.
    pub fn enumerate(target: GroupTarget, cap: usize) -> Result<FiniteGroup> {
        let expected = order_formula(target.family, target.n, target.q as u64);
        if expected > cap as u128 {
            return Err(Error::GroupTooLarge(format!("order {expected} exceeds cap {cap}")));
        }
        let gens: Vec<Mat> = standard_generators(target)?.into_iter().map(|g| g.m).collect();
        let field = gens[0].f.clone();
        let mut elements = Vec::new();
        let c = bfs(&gens, cap, |x| elements.push(x.clone()));
        if c.truncated {
            return Err(Error::GroupTooLarge(format!("more than {cap} elements")));
        }
        let center = elements.iter().filter(|x| x.is_scalar().is_some()).cloned().collect();
        let index = elements.iter().enumerate().map(|(i, x)| (x.key(), i)).collect();
        Ok(FiniteGroup { target, field, generators: gens, elements, center, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Order of the quotient by the center.
    pub fn order_mod_center(&self) -> usize {
        self.order() / self.center.len()
    }

    pub fn index_of(&self, x: &Mat) -> Option<usize> {
        self.index.get(&x.key()).copied()
    }

    /// Smallest `k ≥ 1` with `x^k` central.
    pub fn order_mod_center_of(&self, x: &Mat) -> usize {
        let mut y = x.clone();
        let mut k = 1;
        while y.is_scalar().is_none() {
            y = y.mul(x);
            k += 1;
        }
        k
    }

    /// Indices of the elements whose image modulo the center has order `r`.
    pub fn elements_of_order(&self, r: usize) -> Vec<usize> {
        (0..self.order()).into_par_iter().filter(|&i| self.order_mod_center_of(&self.elements[i]) == r).collect()
    }

    /// Whether `⟨x, y⟩Z = G`. A subgroup of more than half the group is the group.
    pub fn generates_mod_center(&self, x: &Mat, y: &Mat) -> bool {
        let mut gens = vec![x.clone(), y.clone()];
        gens.extend(self.center.iter().cloned());
        bfs(&gens, self.order() / 2, |_| {}).truncated
    }

    /// Conjugacy classes (as index lists) of the given elements.
    pub fn classes_of(&self, members: &[usize]) -> Vec<Vec<usize>> {
        let inv: Vec<Mat> = self.generators.iter().map(|g| g.inverse().expect("invertible")).collect();
        let wanted: HashSet<usize> = members.iter().copied().collect();
        let mut done = HashSet::new();
        let mut out = Vec::new();
        for &m in members {
            if done.contains(&m) {
                continue;
            }
            let mut orbit = vec![m];
            done.insert(m);
            let mut k = 0;
            while k < orbit.len() {
                let x = &self.elements[orbit[k]];
                for (g, gi) in self.generators.iter().zip(&inv) {
                    let y = g.mul(x).mul(gi);
                    let j = self.index_of(&y).expect("closed under conjugation");
                    if done.insert(j) {
                        debug_assert!(wanted.contains(&j));
                        orbit.push(j);
                    }
                }
                k += 1;
            }
            out.push(orbit);
        }
        out
    }
}

/// Exact count of generating pairs modulo the center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCount {
    pub generating: u64,
    pub total: u64,
}

impl PairCount {
    pub fn ratio(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.generating as f64 / self.total as f64
        }
    }
}

/// Counts pairs `(x, y)` of elements of orders `r` and `s` modulo the center
/// with `⟨x, y⟩Z = G`, testing one `x` per conjugacy class.
pub fn exact_generation_count(g: &FiniteGroup, r: usize, s: usize) -> PairCount {
    let xs = g.elements_of_order(r);
    let ys = g.elements_of_order(s);
    let classes = g.classes_of(&xs);
    let generating: u64 = classes
        .iter()
        .map(|cls| {
            let x = &g.elements[cls[0]];
            let hits = ys.par_iter().filter(|&&j| g.generates_mod_center(x, &g.elements[j])).count();
            hits as u64 * cls.len() as u64
        })
        .sum();
    PairCount { generating, total: xs.len() as u64 * ys.len() as u64 }
}

/// Same count by testing every pair; for cross-checking the class reduction.
pub fn naive_generation_count(g: &FiniteGroup, r: usize, s: usize) -> PairCount {
    let xs = g.elements_of_order(r);
    let ys = g.elements_of_order(s);
    let generating = xs
        .par_iter()
        .map(|&i| ys.iter().filter(|&&j| g.generates_mod_center(&g.elements[i], &g.elements[j])).count() as u64)
        .sum();
    PairCount { generating, total: xs.len() as u64 * ys.len() as u64 }
}

/// Monte Carlo estimate: `trials` uniform pairs of elements of orders `r` and
/// `s` modulo the center. Trial `t` draws from ChaCha8 seeded with `seed` on
/// stream `t`, so the result does not depend on scheduling.
pub fn estimate_generation_probability(
    target: GroupTarget,
    r: usize,
    s: usize,
    trials: u64,
    seed: u64,
    cap: usize,
) -> Result<(u64, u64)> {
    let g = FiniteGroup::enumerate(target, cap)?;
    let xs = g.elements_of_order(r);
    let ys = g.elements_of_order(s);
    if xs.is_empty() || ys.is_empty() {
        return Ok((0, trials));
    }
    let hits = (0..trials)
        .into_par_iter()
        .filter(|&t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t);
            let x = &g.elements[xs[rng.gen_range(0..xs.len())]];
            let y = &g.elements[ys[rng.gen_range(0..ys.len())]];
            g.generates_mod_center(x, y)
        })
        .count() as u64;
    Ok((hits, trials))
}
