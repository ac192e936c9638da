//! Numerical invariants of classes: eigenspace data, class dimensions and
//! Jordan block counts of induced actions.

mod grassmann;

pub use grassmann::{grassmannian_fixed_dim, GrassDim, SubspaceType};

use crate::algebra_core::{eigen::Eigen, ClassDescriptor, ClassKind, Family, Frame, GroupSpec, InvolutionType};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Largest eigenspace dimension `d` and fixed space dimension `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenProfile {
    pub d: usize,
    pub e: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spin8: Option<[usize; 3]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDim {
    pub dim_class: usize,
    pub dim_centralizer: usize,
}

/// Profile on the module the class is written on (`W` for `SO6`).
pub(crate) fn frame_profile(class: &ClassDescriptor) -> Result<EigenProfile> {
    match &class.kind {
        ClassKind::Semisimple(p) => {
            let eig = p.eigenvalues()?;
            let d = eig.values().copied().max().unwrap_or(0);
            let e = eig.get(&Eigen::one()).copied().unwrap_or(0);
            Ok(EigenProfile { d, e, spin8: None })
        }
        ClassKind::Unipotent(u) => Ok(EigenProfile { d: u.blocks(), e: u.blocks(), spin8: None }),
    }
}

/// `d` and `e` on the natural module; `SO6` classes go through `∧²W`.
pub fn eigen_profile(group: &GroupSpec, class: &ClassDescriptor) -> Result<EigenProfile> {
    profile_of_valid(group, &group.validate(class)?)
}

pub(crate) fn profile_of_valid(group: &GroupSpec, class: &ClassDescriptor) -> Result<EigenProfile> {
    if group.is_so6() {
        return crate::oracle::so6_transfer(class, group.p);
    }
    frame_profile(class)
}

/// Minimal polynomial of degree 2 on the module the class is written on.
pub fn is_quadratic(class: &ClassDescriptor) -> bool {
    match &class.kind {
        ClassKind::Semisimple(p) => p.eigenvalues().map(|e| e.len() == 2).unwrap_or(false),
        ClassKind::Unipotent(u) => u.partition.first() == Some(&2),
    }
}

/// Conjugate partition.
pub fn conjugate(parts: &[usize]) -> Vec<usize> {
    let max = parts.iter().copied().max().unwrap_or(0);
    (1..=max).map(|k| parts.iter().filter(|&&x| x >= k).count()).collect()
}

fn sum_sq(v: &[usize]) -> usize {
    v.iter().map(|x| x * x).sum()
}

fn frame_centralizer(frame: Frame, class: &ClassDescriptor) -> Result<usize> {
    match &class.kind {
        ClassKind::Semisimple(pat) => {
            let eig = pat.eigenvalues()?;
            if frame.fam == Family::SL {
                return Ok(eig.values().map(|m| m * m).sum::<usize>() - 1);
            }
            let a = eig.get(&Eigen::one()).copied().unwrap_or(0);
            let b = eig.get(&Eigen::minus_one()).copied().unwrap_or(0);
            let gl: usize =
                eig.iter().filter(|(v, _)| !v.is_one() && !v.is_minus_one()).map(|(_, m)| m * m).sum::<usize>() / 2;
            let form = |x: usize| match frame.fam {
                Family::Sp => x * (x + 1) / 2,
                _ => x * x.saturating_sub(1) / 2,
            };
            Ok(form(a) + form(b) + gl)
        }
        ClassKind::Unipotent(u) => {
            let q = sum_sq(&conjugate(&u.partition));
            let odd = u.partition.iter().filter(|x| *x % 2 == 1).count();
            let base = match frame.fam {
                Family::SL => return Ok(q - 1),
                Family::Sp => (q + odd) / 2,
                _ => (q - odd) / 2,
            };
            if u.decoration.is_none() {
                return Ok(base);
            }
            let t = u.as_type().ok_or_else(|| Error::UnsupportedChar2Class(format!("{class} is not an involution")))?;
            Ok(match (frame.fam, t) {
                (Family::Sp, InvolutionType::A(s)) => base + s,
                (Family::Sp, _) => base,
                (_, InvolutionType::A(_)) => base,
                (_, InvolutionType::C(s)) => base - s,
                (_, InvolutionType::B(_)) => {
                    return Err(Error::UnsupportedChar2Class("b-type involution in SO".into()))
                }
            })
        }
    }
}

/// Dimensions of the class and of its centralizer.
pub fn class_dim(group: &GroupSpec, class: &ClassDescriptor) -> Result<ClassDim> {
    dim_of_valid(group, &group.validate(class)?)
}

pub(crate) fn dim_of_valid(group: &GroupSpec, class: &ClassDescriptor) -> Result<ClassDim> {
    // SO6 classes live on SL4, which has the same adjoint dimension
    let dim_centralizer = frame_centralizer(group.frame(), class)?;
    let dim = group.dim();
    Ok(ClassDim { dim_class: dim - dim_centralizer, dim_centralizer })
}

/// Induced representation for [`induced_block_count`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Functor {
    Tensor,
    Wedge2,
    Sym2,
}

/// Number of Jordan blocks of `J_a ⊗ J_b`, `∧²(J_a)` or `S²(J_a)`.
pub fn induced_block_count(kind: Functor, a: usize, b: Option<usize>, p: u32) -> usize {
    match kind {
        Functor::Tensor => a.min(b.unwrap_or(a)),
        Functor::Wedge2 => a / 2,
        Functor::Sym2 => a.div_ceil(2) + usize::from(a.is_multiple_of(2) && p == 2),
    }
}

fn pairwise_min(parts: &[usize]) -> usize {
    let mut s = 0;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            s += parts[i].min(parts[j]);
        }
    }
    s
}

/// Fixed space dimension on `S²(W)` of a unipotent element of `GL(W)`.
pub fn sym2_fixed_dim(partition: &[usize], p: u32) -> usize {
    partition.iter().map(|&a| induced_block_count(Functor::Sym2, a, None, p)).sum::<usize>() + pairwise_min(partition)
}

/// Fixed space dimension on `∧²(W)` of a unipotent element of `GL(W)`.
pub fn wedge2_block_count(partition: &[usize]) -> usize {
    partition.iter().map(|&a| a / 2).sum::<usize>() + pairwise_min(partition)
}

/// Exact value (when available) and upper bound for `dim ∧²(V)^g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wedge2Fixed {
    pub exact: Option<usize>,
    pub upper: usize,
}

/// Fixed points of `g ∈ GL_n` on `∧²V`.
pub fn wedge2_fixed_dim(n: usize, class: &ClassDescriptor) -> Result<Wedge2Fixed> {
    match &class.kind {
        ClassKind::Semisimple(pat) => {
            if pat.degree() != n {
                return Err(Error::DimensionMismatch(format!("pattern has degree {}", pat.degree())));
            }
            let eig = pat.eigenvalues()?;
            let d = eig.values().copied().max().unwrap_or(0);
            let mut exact = 0;
            for (v, &m) in &eig {
                let w = v.inv();
                if *v == w {
                    exact += m * (m - 1) / 2;
                } else if v < &w {
                    exact += m * eig.get(&w).copied().unwrap_or(0);
                }
            }
            let mut upper = d * (n / 2);
            let both = eig.contains_key(&Eigen::one()) && eig.contains_key(&Eigen::minus_one());
            if both {
                upper = upper.min((d * (n - 1)).div_ceil(2) - 1);
            }
            Ok(Wedge2Fixed { exact: Some(exact), upper })
        }
        ClassKind::Unipotent(u) => {
            let total: usize = u.partition.iter().sum();
            if total != n {
                return Err(Error::DimensionMismatch(format!("partition of {total}, expected {n}")));
            }
            if u.decoration.is_some() && u.partition.iter().any(|&x| x > 2) {
                return Err(Error::UnsupportedChar2Class("non-involution in characteristic 2".into()));
            }
            let d = u.blocks();
            Ok(Wedge2Fixed { exact: Some(wedge2_block_count(&u.partition)), upper: d * (n / 2) })
        }
    }
}
