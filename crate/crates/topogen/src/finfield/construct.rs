//! Explicit representatives of catalog classes over `GF(q)`.
//!
//! Every matrix is built block by block on a hyperbolic basis, so the form it
//! preserves is a direct sum of small standard pieces.

use super::field::{Elt, Field};
use super::matrix::{Form, GFMatrix, Mat};
use crate::algebra_core::{Block, ClassDescriptor, ClassKind, EigenPattern, Family, GroupSpec};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Eigenvalue chosen for each label of a semisimple class.
pub type LabelAssignment = BTreeMap<String, Elt>;

fn uninst(q: u32, reason: impl Into<String>) -> Error {
    Error::Uninstantiable { q, reason: reason.into() }
}

/// Hyperbolic form on `2k` coordinates `(e_1..e_k, f_1..f_k)`.
fn hyperbolic(f: &Arc<Field>, fam: Family, k: usize) -> Form {
    let n = 2 * k;
    match fam {
        Family::SL => Form::None,
        Family::Sp => Form::Symplectic(Mat::from_fn(f, n, n, |i, j| {
            if j == i + k {
                1
            } else if i == j + k {
                f.neg(1)
            } else {
                0
            }
        })),
        Family::SO | Family::Spin8 => Form::Orthogonal {
            gram: Mat::from_fn(f, n, n, |i, j| Elt::from(j == i + k || i == j + k)),
            quad: Mat::from_fn(f, n, n, |i, j| Elt::from(j == i + k)),
        },
    }
}

/// Nondegenerate form of dimension `d` on which a scalar acts.
fn scalar_space(f: &Arc<Field>, fam: Family, d: usize) -> Result<Form> {
    if fam == Family::SL || d.is_multiple_of(2) {
        return Ok(if fam == Family::SL { Form::None } else { hyperbolic(f, fam, d / 2) });
    }
    if fam == Family::Sp || f.p == 2 {
        return Err(uninst(f.q, format!("odd-dimensional eigenspace for {fam:?}")));
    }
    let mut parts = Vec::new();
    if d > 1 {
        parts.push(hyperbolic(f, fam, d / 2));
    }
    let one = Mat::identity(f, 1);
    parts.push(Form::Orthogonal { gram: one.scale(f.from_int(2)), quad: one });
    Ok(Form::direct_sum(f, &parts))
}

/// Picks field values for every label, honoring order tags and keeping the
/// eigenvalue multiset generic. Patterns with free labels (the `SL` case)
/// also get determinant 1; among those assignments the one with the most
/// distinct pairwise eigenvalue products is kept, so that `∧²` stays generic.
pub fn assign_labels(f: &Field, pat: &EigenPattern) -> Result<LabelAssignment> {
    let orders = pat.label_orders();
    let minus = f.neg(1);
    let g = f.primitive();
    let paired = pat.pairs.iter().map(|l| (l.label.as_str(), l.mult, true));
    let free = pat.free.iter().map(|l| (l.label.as_str(), l.mult, false));
    let slots: Vec<Slot> = paired
        .chain(free)
        .map(|(label, mult, is_pair)| Slot { order: orders.get(label).copied(), mult, is_pair })
        .collect();
    for (s, l) in slots.iter().zip(pat.pairs.iter().chain(&pat.free)) {
        if let Some(k) = s.order {
            if !(f.q - 1).is_multiple_of(k) {
                return Err(uninst(f.q, format!("no element of order {k} for {}", l.label)));
            }
        }
    }
    let base: Vec<(Elt, usize)> =
        [(1, pat.mult_one), (minus, pat.mult_minus_one)].into_iter().filter(|&(_, m)| m > 0).collect();
    let mut search = Search {
        f,
        all: (0..f.q as u64 - 1).map(|j| f.pow(g, j)).collect(),
        slots,
        det_one: !pat.free.is_empty(),
        base,
        chosen: Vec::new(),
        used: vec![1, minus],
        best: None,
        budget: 1_000_000,
    };
    let sign = if pat.mult_minus_one % 2 == 1 { minus } else { 1 };
    search.run(sign);
    let Some((_, vals)) = search.best else {
        let why = if search.det_one { "no generic values with determinant 1" } else { "not enough distinct values" };
        return Err(uninst(f.q, why));
    };
    let labels = pat.pairs.iter().chain(&pat.free).map(|l| l.label.clone());
    Ok(labels.zip(vals).collect())
}

struct Slot {
    order: Option<u32>,
    mult: usize,
    is_pair: bool,
}

struct Search<'a> {
    f: &'a Field,
    all: Vec<Elt>,
    slots: Vec<Slot>,
    det_one: bool,
    /// `1` and `−1` with their multiplicities, when they occur.
    base: Vec<(Elt, usize)>,
    chosen: Vec<Elt>,
    used: Vec<Elt>,
    best: Option<(usize, Vec<Elt>)>,
    budget: usize,
}

impl Search<'_> {
    fn fits(&self, x: Elt) -> bool {
        let slot = &self.slots[self.chosen.len()];
        let ok_order = match slot.order {
            Some(k) => self.f.order_of(x) == k,
            None => x != 1 && x != self.f.neg(1),
        };
        let xi = self.f.inv(x);
        // a free value inverse to another one would turn the class into a pair
        ok_order && !self.used.contains(&x) && !self.used.contains(&xi) && (!slot.is_pair || xi != x)
    }

    /// Number of distinct eigenvalues of `∧²`.
    fn score(&self) -> usize {
        let f = self.f;
        let mut vals = self.base.clone();
        for (x, s) in self.chosen.iter().zip(&self.slots) {
            vals.push((*x, s.mult));
            if s.is_pair {
                vals.push((f.inv(*x), s.mult));
            }
        }
        let mut prods = std::collections::BTreeSet::new();
        for (i, &(a, ma)) in vals.iter().enumerate() {
            if ma > 1 {
                prods.insert(f.mul(a, a));
            }
            for &(b, _) in &vals[i + 1..] {
                prods.insert(f.mul(a, b));
            }
        }
        prods.len()
    }

    /// Returns true once the search can stop.
    fn run(&mut self, det: Elt) -> bool {
        if self.chosen.len() == self.slots.len() {
            if !self.det_one {
                self.best = Some((0, self.chosen.clone()));
                return true;
            }
            if det == 1 {
                let sc = self.score();
                if self.best.as_ref().is_none_or(|(b, _)| sc > *b) {
                    self.best = Some((sc, self.chosen.clone()));
                }
            }
            return false;
        }
        for k in 0..self.all.len() {
            if self.budget == 0 {
                return true;
            }
            self.budget -= 1;
            let x = self.all[k];
            if !self.fits(x) {
                continue;
            }
            let slot = &self.slots[self.chosen.len()];
            // pairs contribute x·x⁻¹ = 1
            let next = if slot.is_pair { det } else { self.f.mul(det, self.f.pow(x, slot.mult as u64)) };
            let mark = self.used.len();
            self.used.push(x);
            if slot.is_pair {
                self.used.push(self.f.inv(x));
            }
            self.chosen.push(x);
            let stop = self.run(next);
            self.chosen.pop();
            self.used.truncate(mark);
            if stop {
                return true;
            }
        }
        false
    }
}

fn semisimple(f: &Arc<Field>, fam: Family, pat: &EigenPattern, labels: &LabelAssignment) -> Result<GFMatrix> {
    let mut mats = Vec::new();
    let mut forms = Vec::new();
    let minus = f.neg(1);
    for (val, d) in [(1, pat.mult_one), (minus, pat.mult_minus_one)] {
        if d > 0 {
            mats.push(Mat::scalar(f, d, val));
            forms.push(scalar_space(f, fam, d)?);
        }
    }
    let value = |l: &str| labels.get(l).copied().ok_or_else(|| uninst(f.q, format!("no value for label {l}")));
    for lm in &pat.pairs {
        let x = value(&lm.label)?;
        let xi = f.inv(x);
        let c = lm.mult;
        mats.push(Mat::from_fn(f, 2 * c, 2 * c, |i, j| match (i == j, i < c) {
            (false, _) => 0,
            (true, true) => x,
            (true, false) => xi,
        }));
        forms.push(if fam == Family::SL { Form::None } else { hyperbolic(f, fam, c) });
    }
    for lm in &pat.free {
        mats.push(Mat::scalar(f, lm.mult, value(&lm.label)?));
        forms.push(Form::None);
    }
    Ok(GFMatrix { m: Mat::direct_sum(f, &mats), form: Form::direct_sum(f, &forms) })
}

/// Upper shift `X e_{i+1} = e_i` of size `l`.
fn shift(f: &Arc<Field>, l: usize) -> Mat {
    Mat::from_fn(f, l, l, |i, j| Elt::from(j == i + 1))
}

/// A nilpotent element of the form's Lie algebra with the given partition,
/// and the form.
fn nilpotent(f: &Arc<Field>, fam: Family, parts: &[usize]) -> Result<(Mat, Form)> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &l in parts {
        *counts.entry(l).or_default() += 1;
    }
    let mut mats = Vec::new();
    let mut forms = Vec::new();
    for (&l, &m) in counts.iter().rev() {
        let single = match fam {
            Family::SL => true,
            Family::Sp => l % 2 == 0,
            _ => l % 2 == 1,
        };
        if single {
            for _ in 0..m {
                mats.push(shift(f, l));
                // A_{i, l-1-i} = (-1)^i is invariant under the shift
                let gram = Mat::from_fn(f, l, l, |i, j| match (i + j + 1 == l, i % 2) {
                    (false, _) => 0,
                    (true, 0) => 1,
                    (true, _) => f.neg(1),
                });
                forms.push(match fam {
                    Family::SL => Form::None,
                    Family::Sp => Form::Symplectic(gram),
                    _ => Form::from_symmetric(gram),
                });
            }
        } else {
            if m % 2 == 1 {
                return Err(Error::ParityViolation(format!("part {l} needs even multiplicity")));
            }
            for _ in 0..m / 2 {
                let x = shift(f, l);
                let y = x.transpose().scale(f.neg(1));
                mats.push(Mat::direct_sum(f, &[x, y]));
                forms.push(hyperbolic(f, fam, l));
            }
        }
    }
    Ok((Mat::direct_sum(f, &mats), Form::direct_sum(f, &forms)))
}

/// `(1 + X)(1 − X)⁻¹`, valid in odd characteristic.
fn cayley(x: &Mat) -> Mat {
    let f = &x.f;
    let id = Mat::identity(f, x.rows);
    let inv = id.sub(x).inverse().expect("1 - nilpotent is invertible");
    id.add(x).mul(&inv)
}

/// Unipotent element in characteristic 2 from its decoration.
fn char2(f: &Arc<Field>, fam: Family, dec: &[Block]) -> Result<GFMatrix> {
    let mut mats = Vec::new();
    let mut forms = Vec::new();
    let v2 = dec.iter().filter(|b| **b == Block::V(2)).count();
    if fam == Family::SO && v2 % 2 == 1 {
        return Err(uninst(f.q, "odd number of V(2) summands in SO"));
    }
    if fam == Family::SO && v2 > 0 {
        // V(2) + V(2) = r_v r_w with v = e1 + f1, w = e2 + f2
        for _ in 0..v2 / 2 {
            let form = hyperbolic(f, fam, 2);
            let refl = |v: [Elt; 4]| {
                let g = form.gram().unwrap();
                let gv = g.mul_vec(&v);
                Mat::from_fn(f, 4, 4, |i, j| f.add(Elt::from(i == j), f.mul(v[i], gv[j])))
            };
            mats.push(refl([1, 0, 1, 0]).mul(&refl([0, 1, 0, 1])));
            forms.push(form);
        }
    }
    for b in dec {
        match *b {
            Block::V(2) if fam == Family::Sp => {
                mats.push(Mat::from_rows(f, &[vec![1, 1], vec![0, 1]]));
                forms.push(hyperbolic(f, fam, 1));
            }
            Block::V(2) => {}
            Block::V(k) => return Err(uninst(f.q, format!("V({k}) summand"))),
            Block::W { ell, mult } => {
                for _ in 0..mult {
                    let j = Mat::identity(f, ell).add(&shift(f, ell));
                    let jt = j.inverse().expect("unipotent").transpose();
                    mats.push(Mat::direct_sum(f, &[j, jt]));
                    forms.push(hyperbolic(f, fam, ell));
                }
            }
        }
    }
    Ok(GFMatrix { m: Mat::direct_sum(f, &mats), form: Form::direct_sum(f, &forms) })
}

/// Matrix representative of `class` in the natural module of `group` over `GF(q)`.
///
/// `SO6` classes are realized on the 4-dimensional module of `SL4` and `Spin8`
/// classes on the natural 8-dimensional module.
pub fn matrix_from_class(
    group: &GroupSpec,
    class: &ClassDescriptor,
    q: u32,
    labels: Option<&LabelAssignment>,
) -> Result<GFMatrix> {
    let f = Field::new(q)?;
    if group.p != 0 && group.p != f.p {
        return Err(uninst(q, format!("characteristic {} differs from the group's", f.p)));
    }
    let frame = group.frame();
    let class = group.validate(class)?;
    match &class.kind {
        ClassKind::Semisimple(pat) => {
            let own;
            let labels = match labels {
                Some(l) => l,
                None => {
                    own = assign_labels(&f, pat)?;
                    &own
                }
            };
            for (l, k) in pat.label_orders() {
                if let Some(&x) = labels.get(&l) {
                    if f.order_of(x) != k {
                        return Err(uninst(q, format!("{l} must have order {k}")));
                    }
                }
            }
            semisimple(&f, frame.fam, pat, labels)
        }
        ClassKind::Unipotent(u) => match (&u.decoration, f.p) {
            (Some(dec), 2) if frame.fam != Family::SL => char2(&f, frame.fam, dec),
            (_, 2) if frame.fam == Family::SL => {
                let (x, form) = nilpotent(&f, Family::SL, &u.partition)?;
                Ok(GFMatrix { m: Mat::identity(&f, x.rows).add(&x), form })
            }
            (_, 2) => Err(Error::MissingDecoration(class.to_string())),
            _ => {
                let (x, form) = nilpotent(&f, frame.fam, &u.partition)?;
                Ok(GFMatrix { m: cayley(&x), form })
            }
        },
    }
}

/// The element `(J₂⁴, J₁)` of `SO₉(q)`: `u = 1 + N` with `N f₁ = e₂`,
/// `N f₂ = −e₁`, `N f₃ = e₄`, `N f₄ = −e₃` on the basis `e₁..e₄, f₁..f₄, v₀`
/// with `Q = Σ xᵢyᵢ + z²`. Valid in every characteristic.
pub fn so9_j2_4(q: u32) -> Result<GFMatrix> {
    let f = Field::new(q)?;
    let mut n = Mat::zeros(&f, 9, 9);
    let minus = f.neg(1);
    // column = image of the basis vector
    n.set(1, 4, 1);
    n.set(0, 5, minus);
    n.set(3, 6, 1);
    n.set(2, 7, minus);
    let m = Mat::identity(&f, 9).add(&n);
    let mut quad = Mat::from_fn(&f, 9, 9, |i, j| Elt::from(i < 4 && j == i + 4));
    quad.set(8, 8, 1);
    let gram = Mat::from_fn(&f, 9, 9, |i, j| {
        if i == 8 && j == 8 {
            f.from_int(2)
        } else {
            Elt::from((i < 8 && j < 8) && (j == i + 4 || i == j + 4))
        }
    });
    Ok(GFMatrix { m, form: Form::Orthogonal { gram, quad } })
}
