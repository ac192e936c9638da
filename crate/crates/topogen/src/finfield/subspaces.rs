//! Counting invariant subspaces level by level.

use super::field::Elt;
use super::matrix::{Form, GFMatrix, Mat};
use crate::error::{Error, Result};
use crate::invariants::SubspaceType;
use std::collections::HashSet;

pub const DEFAULT_SUBSPACE_CAP: usize = 2_000_000;

/// Row-reduced basis of a subspace, used as its canonical key.
fn canonical(rows: &[Vec<Elt>], f: &std::sync::Arc<super::Field>) -> Vec<Vec<Elt>> {
    let (r, piv) = Mat::from_rows(f, rows).rref();
    (0..piv.len()).map(|i| r.row(i).to_vec()).collect()
}

fn singular_ext(form: &Form, u: &[Vec<Elt>], v: &[Elt]) -> bool {
    let isotropic = match form {
        Form::Orthogonal { .. } => form.q_value(v) == Some(0),
        _ => true,
    };
    isotropic && u.iter().all(|w| form.bilinear(w, v) == Some(0))
}

/// Number of `g`-invariant `k`-dimensional subspaces of the given type.
///
/// Every invariant subspace of a split operator contains an invariant
/// hyperplane, so level `d + 1` is reached from level `d` by adding a line of
/// `{v : (g − λ)v ∈ U} / U` for each eigenvalue `λ`. Total singularity is
/// inherited by subspaces, so pruning at every level is exact.
pub fn invariant_subspace_count(g: &GFMatrix, k: usize, ty: SubspaceType, cap: usize) -> Result<u64> {
    let m = &g.m;
    let f = &m.f;
    let n = m.rows;
    if ty == SubspaceType::ComplementaryPair {
        return Err(Error::NotApplicable("complementary pairs are not counted by matrices".into()));
    }
    if ty == SubspaceType::TotallySingular && g.form == Form::None {
        return Err(Error::NotApplicable("no form declared".into()));
    }
    if k > n {
        return Ok(0);
    }
    let eigen: Vec<(Elt, Mat)> = super::ops::jordan_type(g)?.keys().map(|&l| (l, m.minus_scalar(l))).collect();
    let q = f.q as usize;
    let mut level: Vec<Vec<Vec<Elt>>> = vec![Vec::new()];
    for _ in 0..k {
        let mut next: HashSet<Vec<Vec<Elt>>> = HashSet::new();
        for u in &level {
            // Φ: rows span the annihilator of U
            let phi = if u.is_empty() {
                Mat::identity(f, n)
            } else {
                let ns = Mat::from_rows(f, u).nullspace();
                if ns.is_empty() {
                    continue;
                }
                Mat::from_rows(f, &ns)
            };
            for (_, a) in &eigen {
                let kern = phi.mul(a).nullspace();
                // complement of U inside K
                let mut span = u.clone();
                let mut comp = Vec::new();
                for v in kern {
                    let mut trial = span.clone();
                    trial.push(v.clone());
                    if Mat::from_rows(f, &trial).rank() > span.len() {
                        span = trial;
                        comp.push(v);
                    }
                }
                let t = comp.len();
                // lines of K/U: coefficient vectors with leading entry 1
                for lead in 0..t {
                    let free = t - lead - 1;
                    for code in 0..q.pow(free as u32) {
                        let mut v = comp[lead].clone();
                        let mut c = code;
                        for w in &comp[lead + 1..] {
                            // field elements are encoded as 0..q
                            let a = (c % q) as Elt;
                            c /= q;
                            if a != 0 {
                                for (x, &y) in v.iter_mut().zip(w) {
                                    *x = f.add(*x, f.mul(a, y));
                                }
                            }
                        }
                        if ty == SubspaceType::TotallySingular && !singular_ext(&g.form, u, &v) {
                            continue;
                        }
                        let mut rows = u.clone();
                        rows.push(v);
                        next.insert(canonical(&rows, f));
                        if next.len() > cap {
                            return Err(Error::EnumerationTooLarge(cap));
                        }
                    }
                }
            }
        }
        level = next.into_iter().collect();
    }
    Ok(level.len() as u64)
}
