//! Eigenspace data of Spin8 classes on the three 8-dimensional modules, and
//! the transfer of SL4 classes to the 6-dimensional orthogonal module.

use crate::algebra_core::{eigen::tally, eigen::Eigen, ClassDescriptor, ClassKind, InvolutionType, Variant};
use crate::error::{Error, Result};
use crate::invariants::{wedge2_block_count, EigenProfile};

fn max_mult<I: IntoIterator<Item = Eigen>>(items: I) -> usize {
    tally(items.into_iter().map(|e| (e, 1))).values().copied().max().unwrap_or(0)
}

/// `(d₁, d₃, d₄)` for a class given on the natural module of `SO8`.
///
/// Semisimple classes are computed from a torus element. Unipotent classes
/// come from a fixed table; an unlabelled split class is read as `+`.
pub fn spin8_profile(class: &ClassDescriptor, p: u32) -> Result<[usize; 3]> {
    match &class.kind {
        ClassKind::Semisimple(pat) => {
            let values = pat.label_values()?;
            let mut t: Vec<Eigen> = Vec::new();
            t.extend(std::iter::repeat_n(Eigen::one(), pat.mult_one / 2));
            t.extend(std::iter::repeat_n(Eigen::minus_one(), pat.mult_minus_one / 2));
            for lm in &pat.pairs {
                t.extend(std::iter::repeat_n(values[&lm.label].clone(), lm.mult));
            }
            if pat.variant == Variant::Minus {
                t[3] = t[3].inv();
            }
            let d1 = max_mult(t.iter().flat_map(|x| [x.clone(), x.inv()]));
            let s: Vec<Eigen> = t.iter().map(Eigen::sqrt).collect();
            let mut even = Vec::new();
            let mut odd = Vec::new();
            for mask in 0u32..16 {
                let mut v = Eigen::one();
                for (i, si) in s.iter().enumerate() {
                    v = v.mul(&if mask >> i & 1 == 1 { si.inv() } else { si.clone() });
                }
                if mask.count_ones() % 2 == 0 {
                    even.push(v);
                } else {
                    odd.push(v);
                }
            }
            Ok([d1, max_mult(even), max_mult(odd)])
        }
        ClassKind::Unipotent(u) => {
            let minus = u.variant == Variant::Minus;
            let out = if p == 2 {
                match u.as_type() {
                    Some(InvolutionType::A(2)) => Some([6, 6, 6]),
                    Some(InvolutionType::C(2)) => Some([6, 4, 4]),
                    Some(InvolutionType::A(4)) => Some(if minus { [4, 4, 6] } else { [4, 6, 4] }),
                    Some(InvolutionType::C(4)) => Some([4, 4, 4]),
                    _ => None,
                }
            } else {
                match u.partition.as_slice() {
                    [2, 2, 1, 1, 1, 1] => Some([6, 6, 6]),
                    [3, 1, 1, 1, 1, 1] => Some([6, 4, 4]),
                    [2, 2, 2, 2] => Some(if minus { [4, 4, 6] } else { [4, 6, 4] }),
                    [3, 3, 1, 1] | [3, 2, 2, 1] => Some([4, 4, 4]),
                    [5, 1, 1, 1] => Some([4, 2, 2]),
                    [4, 4] => Some(if minus { [2, 2, 4] } else { [2, 4, 2] }),
                    [5, 3] | [7, 1] => Some([2, 2, 2]),
                    _ => None,
                }
            };
            out.ok_or_else(|| Error::OutsideCatalog(format!("Spin8 profile of {class}")))
        }
    }
}

/// Profile on `V = ∧²W` of a class of `SL(W)`, `dim W = 4`.
pub fn so6_transfer(class: &ClassDescriptor, _p: u32) -> Result<EigenProfile> {
    match &class.kind {
        ClassKind::Semisimple(pat) => {
            let eig: Vec<(Eigen, usize)> = pat.eigenvalues()?.into_iter().collect();
            let mut items = Vec::new();
            for (i, (a, ma)) in eig.iter().enumerate() {
                items.push((a.mul(a), ma * (ma - 1) / 2));
                for (b, mb) in &eig[i + 1..] {
                    items.push((a.mul(b), ma * mb));
                }
            }
            let t = tally(items);
            Ok(EigenProfile {
                d: t.values().copied().max().unwrap_or(0),
                e: t.get(&Eigen::one()).copied().unwrap_or(0),
                spin8: None,
            })
        }
        ClassKind::Unipotent(u) => {
            let b = wedge2_block_count(&u.partition);
            Ok(EigenProfile { d: b, e: b, spin8: None })
        }
    }
}
