//! Dense matrices over `GF(q)` and the bilinear forms they preserve.

use super::field::{Elt, Field};
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct Mat {
    pub f: Arc<Field>,
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Elt>,
}

impl PartialEq for Mat {
    fn eq(&self, o: &Mat) -> bool {
        self.f.q == o.f.q && self.rows == o.rows && self.cols == o.cols && self.a == o.a
    }
}
impl Eq for Mat {}

impl fmt::Debug for Mat {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(fm, "GF({}) {}x{}", self.f.q, self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(fm, "  {:?}", &self.a[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(f: &Arc<Field>, rows: usize, cols: usize) -> Mat {
        Mat { f: f.clone(), rows, cols, a: vec![0; rows * cols] }
    }
    pub fn identity(f: &Arc<Field>, n: usize) -> Mat {
        Mat::scalar(f, n, 1)
    }
    pub fn scalar(f: &Arc<Field>, n: usize, c: Elt) -> Mat {
        let mut m = Mat::zeros(f, n, n);
        for i in 0..n {
            m.set(i, i, c);
        }
        m
    }
    pub fn from_rows(f: &Arc<Field>, rows: &[Vec<Elt>]) -> Mat {
        let cols = rows.first().map_or(0, Vec::len);
        Mat { f: f.clone(), rows: rows.len(), cols, a: rows.concat() }
    }
    pub fn from_fn(f: &Arc<Field>, rows: usize, cols: usize, g: impl Fn(usize, usize) -> Elt) -> Mat {
        let mut m = Mat::zeros(f, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.a[i * cols + j] = g(i, j);
            }
        }
        m
    }
    /// Block diagonal sum.
    pub fn direct_sum(f: &Arc<Field>, blocks: &[Mat]) -> Mat {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = Mat::zeros(f, n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.rows;
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elt {
        self.a[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elt) {
        self.a[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[Elt] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let f = &self.f;
        let mut out = Mat::zeros(f, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    let y = o.get(k, j);
                    if y != 0 {
                        let idx = i * o.cols + j;
                        out.a[idx] = f.add(out.a[idx], f.mul(x, y));
                    }
                }
            }
        }
        out
    }
    pub fn mul_vec(&self, v: &[Elt]) -> Vec<Elt> {
        let f = &self.f;
        (0..self.rows).map(|i| self.row(i).iter().zip(v).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))).collect()
    }
    pub fn add(&self, o: &Mat) -> Mat {
        let a = self.a.iter().zip(&o.a).map(|(&x, &y)| self.f.add(x, y)).collect();
        Mat { a, ..self.clone() }
    }
    pub fn sub(&self, o: &Mat) -> Mat {
        let a = self.a.iter().zip(&o.a).map(|(&x, &y)| self.f.sub(x, y)).collect();
        Mat { a, ..self.clone() }
    }
    pub fn scale(&self, c: Elt) -> Mat {
        let a = self.a.iter().map(|&x| self.f.mul(c, x)).collect();
        Mat { a, ..self.clone() }
    }
    /// `self − c·I`.
    pub fn minus_scalar(&self, c: Elt) -> Mat {
        let mut m = self.clone();
        for i in 0..self.rows {
            m.set(i, i, self.f.sub(self.get(i, i), c));
        }
        m
    }
    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.f, self.cols, self.rows, |i, j| self.get(j, i))
    }
    pub fn is_identity(&self) -> bool {
        self.is_scalar() == Some(1)
    }
    /// The scalar `c` if `self = c·I`.
    pub fn is_scalar(&self) -> Option<Elt> {
        let c = self.get(0, 0);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) != if i == j { c } else { 0 } {
                    return None;
                }
            }
        }
        Some(c)
    }
    pub fn pow(&self, mut e: u64) -> Mat {
        let mut base = self.clone();
        let mut acc = Mat::identity(&self.f, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let f = &self.f;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else { continue };
            if piv != r {
                for j in 0..m.cols {
                    m.a.swap(piv * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                let v = f.mul(inv, m.get(r, j));
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let x = m.get(i, c);
                if i != r && x != 0 {
                    for j in c..m.cols {
                        let v = f.sub(m.get(i, j), f.mul(x, m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
    /// Basis of `{v : self·v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Elt>> {
        let f = &self.f;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0; self.cols];
                v[fc] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(i, fc));
                }
                v
            })
            .collect()
    }
    pub fn inverse(&self) -> Option<Mat> {
        let n = self.rows;
        let aug = Mat::from_fn(&self.f, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j)
            } else if j - n == i {
                1
            } else {
                0
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(&self.f, n, n, |i, j| r.get(i, n + j)))
    }
    /// Compact key for hashing group elements.
    pub fn key(&self) -> Vec<u8> {
        if self.f.q <= 256 {
            self.a.iter().map(|&x| x as u8).collect()
        } else {
            self.a.iter().flat_map(|x| x.to_le_bytes()).collect()
        }
    }
}

/// Form preserved by a matrix, in the basis the matrix is written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Form {
    None,
    /// Alternating Gram matrix.
    Symplectic(Mat),
    /// Quadratic form `Q(v) = vᵀ·quad·v` with `quad` upper triangular, and its polar form.
    Orthogonal {
        gram: Mat,
        quad: Mat,
    },
}

impl Form {
    pub fn gram(&self) -> Option<&Mat> {
        match self {
            Form::None => None,
            Form::Symplectic(g) | Form::Orthogonal { gram: g, .. } => Some(g),
        }
    }
    pub fn direct_sum(f: &Arc<Field>, parts: &[Form]) -> Form {
        let grams: Vec<Mat> = parts.iter().filter_map(|p| p.gram().cloned()).collect();
        match parts.first() {
            None | Some(Form::None) => Form::None,
            Some(Form::Symplectic(_)) => Form::Symplectic(Mat::direct_sum(f, &grams)),
            Some(Form::Orthogonal { .. }) => {
                let quads: Vec<Mat> = parts
                    .iter()
                    .map(|p| match p {
                        Form::Orthogonal { quad, .. } => quad.clone(),
                        _ => unreachable!("mixed forms"),
                    })
                    .collect();
                Form::Orthogonal { gram: Mat::direct_sum(f, &grams), quad: Mat::direct_sum(f, &quads) }
            }
        }
    }
    /// Orthogonal form from a symmetric Gram matrix, for odd `q`.
    pub fn from_symmetric(gram: Mat) -> Form {
        let f = gram.f.clone();
        let half = f.inv(f.from_int(2));
        let quad = Mat::from_fn(&f, gram.rows, gram.cols, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => gram.get(i, j),
            std::cmp::Ordering::Equal => f.mul(half, gram.get(i, i)),
            std::cmp::Ordering::Greater => 0,
        });
        Form::Orthogonal { gram, quad }
    }
    pub fn q_value(&self, v: &[Elt]) -> Option<Elt> {
        let Form::Orthogonal { quad, .. } = self else { return None };
        let f = &quad.f;
        let w = quad.mul_vec(v);
        Some(v.iter().zip(&w).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y))))
    }
    pub fn bilinear(&self, u: &[Elt], v: &[Elt]) -> Option<Elt> {
        let g = self.gram()?;
        let f = &g.f;
        let w = g.mul_vec(v);
        Some(u.iter().zip(&w).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y))))
    }
}

/// A matrix together with the form it is meant to preserve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GFMatrix {
    pub m: Mat,
    pub form: Form,
}

impl GFMatrix {
    pub fn q(&self) -> u32 {
        self.m.f.q
    }
    pub fn n(&self) -> usize {
        self.m.rows
    }
    /// `gᵀ·J·g = J`, and `Q(g·v) = Q(v)` on a basis and its pairwise sums.
    pub fn preserves_form(&self) -> bool {
        let Some(j) = self.form.gram() else { return true };
        let g = &self.m;
        if g.transpose().mul(j).mul(g) != *j {
            return false;
        }
        if let Form::Orthogonal { .. } = &self.form {
            let n = g.rows;
            let unit = |i: usize| (0..n).map(|k| Elt::from(k == i)).collect::<Vec<_>>();
            for i in 0..n {
                let v = unit(i);
                if self.form.q_value(&g.mul_vec(&v)) != self.form.q_value(&v) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_rank() {
        let f = Field::new(7).unwrap();
        let m = Mat::from_rows(&f, &[vec![1, 2, 0], vec![0, 1, 3], vec![4, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let sing = Mat::from_rows(&f, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(sing.rank(), 1);
        assert!(sing.inverse().is_none());
        let ns = sing.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(sing.mul_vec(&ns[0]).iter().all(|&x| x == 0));
    }
}
