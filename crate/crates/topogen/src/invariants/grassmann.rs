//! Fixed point dimensions on isotropic Grassmannians.
//!
//! Three sources, tried in order: a table of values established by hand,
//! the eigenspace decomposition for semisimple elements on maximal totally
//! singular subspaces, and the parabolic identity `dim Y^g = dim S²(W)^g`
//! (resp. `∧²(W)^g` for even orthogonal groups of odd Witt index) for
//! unipotent elements of a Levi subgroup `GL(W)`.

use super::{sym2_fixed_dim, wedge2_block_count};
use crate::algebra_core::{eigen::Eigen, Block, ClassDescriptor, ClassKind, Family, GroupSpec};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubspaceType {
    /// Totally singular `k`-spaces.
    TotallySingular,
    /// All `k`-spaces.
    Any,
    /// Pairs of complementary maximal totally singular subspaces.
    ComplementaryPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GrassDim {
    Dim(usize),
    NoFixedPoints,
}

fn jordan_is(class: &ClassDescriptor, blocks: &[(usize, usize)]) -> bool {
    let mut parts = Vec::new();
    for &(s, m) in blocks {
        parts.extend(std::iter::repeat_n(s, m));
    }
    class.partition() == Some(parts.as_slice())
}

/// `(a, b, pair multiplicities)` up to multiplication by `-I`.
fn shape(class: &ClassDescriptor) -> Option<(usize, usize, Vec<usize>)> {
    let p = class.pattern()?;
    let mut pairs: Vec<usize> = p.pairs.iter().map(|l| l.mult).collect();
    pairs.sort_unstable_by(|a, b| b.cmp(a));
    Some((p.mult_one, p.mult_minus_one, pairs))
}

fn shape_is(class: &ClassDescriptor, a: usize, b: usize, pairs: &[usize]) -> bool {
    match shape(class) {
        Some((x, y, ps)) => ps == pairs && ((x, y) == (a, b) || (x, y) == (b, a)),
        None => false,
    }
}

fn catalog(g: &GroupSpec, c: &ClassDescriptor, k: usize, ty: SubspaceType) -> Option<GrassDim> {
    use GrassDim::*;
    use SubspaceType::*;
    if g.p == 2 {
        return None;
    }
    match (g.family, g.n, k, ty) {
        (Family::SO, 9, 4, TotallySingular) => {
            if jordan_is(c, &[(3, 3)]) {
                Some(Dim(3))
            } else if jordan_is(c, &[(2, 4), (1, 1)]) {
                Some(Dim(6))
            } else {
                None
            }
        }
        (Family::Sp, 6, 3, TotallySingular) => {
            if jordan_is(c, &[(2, 1), (1, 4)]) || jordan_is(c, &[(2, 3)]) || jordan_is(c, &[(2, 2), (1, 2)]) {
                Some(Dim(3))
            } else if jordan_is(c, &[(3, 2)]) {
                Some(Dim(2))
            } else {
                None
            }
        }
        (Family::Sp, 6, 3, ComplementaryPair) => {
            if shape_is(c, 4, 2, &[]) {
                Some(Dim(8))
            } else if jordan_is(c, &[(2, 1), (1, 4)]) || jordan_is(c, &[(2, 3)]) {
                Some(NoFixedPoints)
            } else if jordan_is(c, &[(2, 2), (1, 2)]) || shape_is(c, 4, 0, &[1]) {
                Some(Dim(6))
            } else if shape_is(c, 0, 0, &[3]) {
                let eig = c.pattern()?.eigenvalues().ok()?;
                let square_is_minus_one = eig.keys().any(|v| v.mul(v).is_minus_one());
                Some(Dim(if square_is_minus_one { 6 } else { 4 }))
            } else if jordan_is(c, &[(3, 2)]) {
                Some(Dim(4))
            } else {
                odd_order_small(c)
            }
        }
        (Family::Sp, 8, 4, TotallySingular) => {
            if jordan_is(c, &[(3, 2), (1, 2)]) {
                Some(Dim(4))
            } else if jordan_is(c, &[(3, 2), (2, 1)]) {
                Some(Dim(3))
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Semisimple elements of odd order with every eigenspace of dimension at most 2.
fn odd_order_small(c: &ClassDescriptor) -> Option<GrassDim> {
    let p = c.pattern()?;
    if p.mult_minus_one > 0 {
        return None;
    }
    let orders = p.label_orders();
    let odd = p.pairs.iter().all(|l| orders.get(&l.label).is_some_and(|k| k % 2 == 1));
    let eig = p.eigenvalues().ok()?;
    if !odd || eig.values().any(|&m| m > 2) {
        return None;
    }
    let eps = if eig.contains_key(&Eigen::one()) { 3 } else { 0 };
    Some(GrassDim::Dim(1 + eps))
}

/// Maximal totally singular subspaces fixed by a semisimple element.
fn semisimple_maximal(g: &GroupSpec, c: &ClassDescriptor) -> Option<usize> {
    let eig = c.pattern()?.eigenvalues().ok()?;
    let a = eig.get(&Eigen::one()).copied().unwrap_or(0);
    let b = eig.get(&Eigen::minus_one()).copied().unwrap_or(0);
    let sym = g.family == Family::Sp;
    if !sym && a + b == 0 {
        // the two families of maximal subspaces then behave differently
        return None;
    }
    let form_part = |x: usize| {
        let h = x / 2;
        if sym {
            h * (h + 1) / 2
        } else if x.is_multiple_of(2) {
            h * h.saturating_sub(1) / 2
        } else {
            h * (h + 1) / 2
        }
    };
    let gl: usize = eig
        .iter()
        .filter(|(v, _)| !v.is_one() && !v.is_minus_one() && **v < v.inv())
        .map(|(_, &m)| (m / 2) * m.div_ceil(2))
        .sum();
    Some(form_part(a) + form_part(b) + gl)
}

/// Halved partition of a unipotent element lying in a Levi subgroup `GL(W)`.
fn levi_partition(g: &GroupSpec, c: &ClassDescriptor) -> Option<Vec<usize>> {
    let u = c.unipotent_data()?;
    if let Some(dec) = &u.decoration {
        if dec.iter().any(|b| matches!(b, Block::V(_))) {
            return None;
        }
    }
    let _ = g;
    let mut half = Vec::new();
    let mut i = 0;
    while i < u.partition.len() {
        let x = u.partition[i];
        let m = u.partition[i..].iter().take_while(|&&y| y == x).count();
        if m % 2 == 1 {
            return None;
        }
        half.extend(std::iter::repeat_n(x, m / 2));
        i += m;
    }
    Some(half)
}

/// `dim X^g` for the variety `X` of `k`-subspaces of the given type, when known.
pub fn grassmannian_fixed_dim(
    group: &GroupSpec,
    class: &ClassDescriptor,
    k: usize,
    ty: SubspaceType,
) -> Option<GrassDim> {
    if group.is_so6() {
        return None;
    }
    if let Some(v) = catalog(group, class, k, ty) {
        return Some(v);
    }
    if ty != SubspaceType::TotallySingular || k != group.n / 2 || group.family == Family::SL {
        return None;
    }
    match &class.kind {
        ClassKind::Semisimple(_) => semisimple_maximal(group, class).map(GrassDim::Dim),
        ClassKind::Unipotent(_) => {
            let half = levi_partition(group, class)?;
            match group.family {
                Family::Sp => Some(GrassDim::Dim(sym2_fixed_dim(&half, group.p))),
                Family::SO if group.n % 4 == 2 => Some(GrassDim::Dim(wedge2_block_count(&half))),
                _ => None,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixed(g: GroupSpec, c: ClassDescriptor, k: usize, ty: SubspaceType) -> Option<GrassDim> {
        let c = g.validate(&c).unwrap();
        grassmannian_fixed_dim(&g, &c, k, ty)
    }

    #[test]
    fn catalog_anchors() {
        use GrassDim::Dim;
        use SubspaceType::*;
        let so9 = GroupSpec::so(9, 0).unwrap();
        assert_eq!(fixed(so9, ClassDescriptor::jordan(&[(3, 3)]), 4, TotallySingular), Some(Dim(3)));
        assert_eq!(fixed(so9, ClassDescriptor::semisimple(3, 0, &[("l", 3)]), 4, TotallySingular), Some(Dim(3)));
        assert_eq!(fixed(so9, ClassDescriptor::jordan(&[(2, 4), (1, 1)]), 4, TotallySingular), Some(Dim(6)));
        let sp8 = GroupSpec::sp(8, 0).unwrap();
        assert_eq!(fixed(sp8, ClassDescriptor::semisimple(6, 2, &[]), 4, TotallySingular), Some(Dim(7)));
        assert_eq!(fixed(sp8, ClassDescriptor::semisimple(4, 4, &[]), 4, TotallySingular), Some(Dim(6)));
        let sp6 = GroupSpec::sp(6, 0).unwrap();
        assert_eq!(fixed(sp6, ClassDescriptor::semisimple(4, 2, &[]), 3, TotallySingular), Some(Dim(4)));
        assert_eq!(fixed(sp6, ClassDescriptor::semisimple(4, 2, &[]), 3, ComplementaryPair), Some(Dim(8)));
        assert_eq!(fixed(sp6, ClassDescriptor::jordan(&[(2, 3)]), 3, ComplementaryPair), Some(GrassDim::NoFixedPoints));
        let i4 = ClassDescriptor::semisimple(0, 0, &[("l", 3)]).with_relation("l", "l^2=-1");
        assert_eq!(fixed(sp6, i4, 3, ComplementaryPair), Some(Dim(6)));
        assert_eq!(fixed(sp6, ClassDescriptor::semisimple(0, 0, &[("l", 3)]), 3, ComplementaryPair), Some(Dim(4)));
    }

    #[test]
    fn levi_rule_agrees_with_catalog() {
        let sp6 = GroupSpec::sp(6, 0).unwrap();
        for c in [ClassDescriptor::jordan(&[(2, 2), (1, 2)]), ClassDescriptor::jordan(&[(3, 2)])] {
            let c = sp6.validate(&c).unwrap();
            let half = levi_partition(&sp6, &c).unwrap();
            let listed = catalog(&sp6, &c, 3, SubspaceType::TotallySingular).unwrap();
            assert_eq!(listed, GrassDim::Dim(sym2_fixed_dim(&half, 0)));
        }
        let sp8 = GroupSpec::sp(8, 0).unwrap();
        let c = sp8.validate(&ClassDescriptor::jordan(&[(3, 2), (1, 2)])).unwrap();
        assert_eq!(sym2_fixed_dim(&levi_partition(&sp8, &c).unwrap(), 0), 4);
    }

    #[test]
    fn semisimple_rule_agrees_with_catalog() {
        let sp6 = GroupSpec::sp(6, 0).unwrap();
        let cases = [
            (ClassDescriptor::semisimple(4, 2, &[]), 4),
            (ClassDescriptor::semisimple(0, 0, &[("l", 3)]), 2),
            (ClassDescriptor::semisimple(4, 0, &[("l", 1)]), 3),
        ];
        for (c, want) in cases {
            let c = sp6.validate(&c).unwrap();
            assert_eq!(semisimple_maximal(&sp6, &c), Some(want));
        }
    }

    #[test]
    fn outside_catalog_is_absent() {
        let sp6 = GroupSpec::sp(6, 0).unwrap();
        let c = sp6.validate(&ClassDescriptor::jordan(&[(4, 1), (2, 1)])).unwrap();
        assert_eq!(grassmannian_fixed_dim(&sp6, &c, 3, SubspaceType::TotallySingular), None);
        assert_eq!(grassmannian_fixed_dim(&sp6, &c, 2, SubspaceType::Any), None);
    }
}
