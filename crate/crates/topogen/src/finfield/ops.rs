//! Jordan data, induced actions and Lie centralizers of explicit matrices.

use super::field::Elt;
use super::matrix::{Form, GFMatrix, Mat};
use crate::algebra_core::{Family, GroupSpec};
use crate::error::{Error, Result};
use crate::invariants::Functor;
use std::collections::BTreeMap;

/// Jordan partition (descending) for every eigenvalue in `GF(q)`.
pub fn jordan_type(g: &GFMatrix) -> Result<BTreeMap<Elt, Vec<usize>>> {
    let m = &g.m;
    let n = m.rows;
    let mut out = BTreeMap::new();
    let mut covered = 0;
    for lam in 0..m.f.q as Elt {
        if covered == n {
            break;
        }
        let a = m.minus_scalar(lam);
        let mut ranks = vec![n, a.rank()];
        if ranks[1] == n {
            continue;
        }
        let mut pw = a.clone();
        while ranks[ranks.len() - 1] != ranks[ranks.len() - 2] {
            pw = pw.mul(&a);
            ranks.push(pw.rank());
        }
        // blocks of size >= k: r_{k-1} - r_k
        let ge: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let mut parts = Vec::new();
        for k in 1..ge.len() + 1 {
            let at_least = ge[k - 1];
            let bigger = ge.get(k).copied().unwrap_or(0);
            parts.extend(std::iter::repeat_n(k, at_least - bigger));
        }
        parts.sort_unstable_by(|x, y| y.cmp(x));
        covered += n - ranks[ranks.len() - 1];
        out.insert(lam, parts);
    }
    if covered != n {
        return Err(Error::NonSplit(m.f.q));
    }
    Ok(out)
}

/// Number of Jordan blocks for eigenvalue 1, that is `n − rank(g − 1)`.
pub fn fixed_dim(g: &Mat) -> usize {
    g.rows - g.minus_scalar(1).rank()
}

/// `a ⊗ b` on the basis `e_i ⊗ e_j` in lexicographic order.
pub fn tensor_product(a: &Mat, b: &Mat) -> Mat {
    let f = &a.f;
    let (n, k) = (a.rows, b.rows);
    Mat::from_fn(f, n * k, n * k, |r, c| f.mul(a.get(r / k, c / k), b.get(r % k, c % k)))
}

fn wedge2(g: &Mat) -> Mat {
    let f = &g.f;
    let n = g.rows;
    let basis: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let d = basis.len();
    Mat::from_fn(f, d, d, |r, c| {
        let (k, l) = basis[r];
        let (i, j) = basis[c];
        f.sub(f.mul(g.get(k, i), g.get(l, j)), f.mul(g.get(l, i), g.get(k, j)))
    })
}

fn sym2(g: &Mat) -> Mat {
    let f = &g.f;
    let n = g.rows;
    let basis: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let d = basis.len();
    Mat::from_fn(f, d, d, |r, c| {
        let (k, l) = basis[r];
        let (i, j) = basis[c];
        if k == l {
            f.mul(g.get(k, i), g.get(k, j))
        } else {
            f.add(f.mul(g.get(k, i), g.get(l, j)), f.mul(g.get(l, i), g.get(k, j)))
        }
    })
}

/// Action of `g` on `V ⊗ V`, `∧²V` or `S²V` in the standard monomial basis.
pub fn induced_matrix(g: &GFMatrix, functor: Functor) -> GFMatrix {
    let m = match functor {
        Functor::Tensor => tensor_product(&g.m, &g.m),
        Functor::Wedge2 => wedge2(&g.m),
        Functor::Sym2 => sym2(&g.m),
    };
    GFMatrix { m, form: Form::None }
}

/// Unipotent Jordan block `J_a` over `GF(q)`.
pub fn jordan_block(f: &std::sync::Arc<super::Field>, a: usize) -> Mat {
    Mat::from_fn(f, a, a, |i, j| Elt::from(i == j || j == i + 1))
}

/// Dimension of `{X ∈ Lie(G) : Xg = gX}` computed by Gaussian elimination.
///
/// The Lie algebra is cut out by `XᵀJ + JX = 0` for the declared form, or by
/// `tr X = 0` when `group` is linear on the given module.
pub fn centralizer_lie_dim(group: &GroupSpec, g: &GFMatrix) -> usize {
    let m = &g.m;
    let f = &m.f;
    let n = m.rows;
    let var = |i: usize, j: usize| i * n + j;
    let mut rows: Vec<Vec<Elt>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut eq = vec![0; n * n];
            for k in 0..n {
                // (Xm - mX)_{ij}
                eq[var(i, k)] = f.add(eq[var(i, k)], m.get(k, j));
                eq[var(k, j)] = f.sub(eq[var(k, j)], m.get(i, k));
            }
            rows.push(eq);
        }
    }
    if let Some(gram) = g.form.gram() {
        for i in 0..n {
            for j in 0..n {
                let mut eq = vec![0; n * n];
                for k in 0..n {
                    // (XᵀJ + JX)_{ij}
                    eq[var(k, i)] = f.add(eq[var(k, i)], gram.get(k, j));
                    eq[var(k, j)] = f.add(eq[var(k, j)], gram.get(i, k));
                }
                rows.push(eq);
            }
        }
    } else if group.frame().fam == Family::SL {
        let mut eq = vec![0; n * n];
        for i in 0..n {
            eq[var(i, i)] = 1;
        }
        rows.push(eq);
    }
    n * n - Mat::from_rows(f, &rows).rank()
}
