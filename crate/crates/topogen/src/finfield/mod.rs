//! Brute-force cross-checks over small finite fields.
//!
//! Classes are realized as explicit matrices, and their Jordan data, induced
//! actions, centralizers and invariant subspaces are computed directly. Small
//! groups are enumerated outright to count generating pairs.

mod construct;
mod field;
mod group;
mod matrix;
mod ops;
mod subspaces;

pub use construct::{assign_labels, matrix_from_class, so9_j2_4, LabelAssignment};
pub use field::{Elt, Field, MAX_Q};
pub use group::{
    estimate_generation_probability, exact_generation_count, group_closure, naive_generation_count, order_formula,
    standard_generators, Closure, FiniteGroup, GroupTarget, PairCount, DEFAULT_CAP,
};
pub use matrix::{Form, GFMatrix, Mat};
pub use ops::{centralizer_lie_dim, fixed_dim, induced_matrix, jordan_block, jordan_type, tensor_product};
pub use subspaces::{invariant_subspace_count, DEFAULT_SUBSPACE_CAP};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::{ClassDescriptor, Family, GroupSpec};
    use crate::invariants::{class_dim, Functor, SubspaceType};

    #[test]
    fn sp4_transvection() {
        let g = GroupSpec::sp(4, 3).unwrap();
        let c = ClassDescriptor::jordan(&[(2, 1), (1, 2)]);
        let m = matrix_from_class(&g, &c, 3, None).unwrap();
        assert!(m.preserves_form());
        assert_eq!(jordan_type(&m).unwrap()[&1], vec![2, 1, 1]);
        assert_eq!(centralizer_lie_dim(&g, &m), 6);
    }

    #[test]
    fn sp4_involution() {
        let g = GroupSpec::sp(4, 5).unwrap();
        let m = matrix_from_class(&g, &ClassDescriptor::semisimple(2, 2, &[]), 5, None).unwrap();
        assert!(m.preserves_form());
        let jt = jordan_type(&m).unwrap();
        assert_eq!(jt[&1], vec![1, 1]);
        assert_eq!(jt[&4], vec![1, 1]);
    }

    #[test]
    fn so10_order_five_pairs() {
        let g = GroupSpec::so(10, 0).unwrap();
        let c = ClassDescriptor::semisimple(2, 0, &[("l", 4)]).with_relation("l", "l^5=1");
        let m = matrix_from_class(&g, &c, 11, None).unwrap();
        assert!(m.preserves_form());
        let mut dims: Vec<usize> = jordan_type(&m).unwrap().values().map(Vec::len).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![2, 4, 4]);
        assert_eq!(centralizer_lie_dim(&g, &m), 45 - class_dim(&g, &c).unwrap().dim_class);
    }

    #[test]
    fn jordan_examples() {
        let f = Field::new(5).unwrap();
        let j = Mat::direct_sum(&f, &[jordan_block(&f, 3), jordan_block(&f, 1)]);
        let jt = jordan_type(&GFMatrix { m: j, form: Form::None }).unwrap();
        assert_eq!(jt[&1], vec![3, 1]);
        let d = Mat::from_rows(&f, &[vec![2, 0], vec![0, 3]]);
        let jt = jordan_type(&GFMatrix { m: d, form: Form::None }).unwrap();
        assert_eq!(jt.keys().copied().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(f.mul(2, 3), 1);
        let rot = Mat::from_rows(&f, &[vec![0, 4], vec![1, 0]]);
        let nonsplit = Mat::from_rows(&f, &[vec![0, 3], vec![1, 0]]);
        assert!(jordan_type(&GFMatrix { m: rot, form: Form::None }).is_ok());
        assert!(jordan_type(&GFMatrix { m: nonsplit, form: Form::None }).is_err());
    }

    #[test]
    fn induced_examples() {
        let blocks = |q: u32, a: usize, fun: Functor| {
            let f = Field::new(q).unwrap();
            let m = GFMatrix { m: jordan_block(&f, a), form: Form::None };
            fixed_dim(&induced_matrix(&m, fun).m)
        };
        assert_eq!(blocks(7, 5, Functor::Wedge2), 2);
        assert_eq!(blocks(2, 4, Functor::Sym2), 3);
        assert_eq!(blocks(3, 2, Functor::Tensor), 2);
    }

    #[test]
    fn wedge_of_so6_class() {
        let g = GroupSpec::sl(4, 3).unwrap();
        let wedge = |parts: &[(usize, usize)]| {
            let m = matrix_from_class(&g, &ClassDescriptor::jordan(parts), 3, None).unwrap();
            jordan_type(&induced_matrix(&m, Functor::Wedge2)).unwrap()[&1].clone()
        };
        assert_eq!(wedge(&[(2, 2)]), vec![3, 1, 1, 1]);
        assert_eq!(wedge(&[(2, 1), (1, 2)]), vec![2, 2, 1, 1]);
    }

    #[test]
    fn closure_sizes() {
        let sp = standard_generators(GroupTarget { family: Family::Sp, n: 4, q: 3 }).unwrap();
        assert_eq!(group_closure(&sp, DEFAULT_CAP), Closure { size: 51840, truncated: false });
        assert_eq!(order_formula(Family::Sp, 4, 3), 51840);
        assert_eq!(group_closure(&sp[..1], 10).size, 3);
        let f = Field::new(5).unwrap();
        let d1 = GFMatrix { m: Mat::from_rows(&f, &[vec![2, 0], vec![0, 1]]), form: Form::None };
        let d2 = GFMatrix { m: Mat::from_rows(&f, &[vec![1, 0], vec![0, 4]]), form: Form::None };
        assert_eq!(group_closure(&[d1, d2], 100).size, 8);
        assert!(group_closure(&sp, 1000).truncated);
    }

    #[test]
    fn class_reduction_matches_naive() {
        let g = FiniteGroup::enumerate(GroupTarget { family: Family::SL, n: 2, q: 5 }, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 120);
        assert_eq!(g.order_mod_center(), 60);
        let a = exact_generation_count(&g, 2, 3);
        assert_eq!(a, naive_generation_count(&g, 2, 3));
        assert!(a.generating > 0);
    }

    #[test]
    fn estimate_is_reproducible() {
        let t = GroupTarget { family: Family::SL, n: 2, q: 7 };
        let a = estimate_generation_probability(t, 2, 3, 500, 9, DEFAULT_CAP).unwrap();
        let b = estimate_generation_probability(t, 2, 3, 500, 9, DEFAULT_CAP).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn subspace_counts() {
        let f = Field::new(3).unwrap();
        let id = GFMatrix { m: Mat::identity(&f, 4), form: Form::None };
        assert_eq!(invariant_subspace_count(&id, 1, SubspaceType::Any, 1000).unwrap(), 40);
        assert_eq!(invariant_subspace_count(&id, 2, SubspaceType::Any, 1000).unwrap(), 130);
        let j = GFMatrix { m: jordan_block(&f, 5), form: Form::None };
        assert_eq!(invariant_subspace_count(&j, 1, SubspaceType::Any, 1000).unwrap(), 1);
        assert_eq!(invariant_subspace_count(&j, 3, SubspaceType::Any, 1000).unwrap(), 1);
    }

    #[test]
    fn so9_element() {
        for q in [2, 3] {
            let u = so9_j2_4(q).unwrap();
            assert!(u.preserves_form());
            assert_eq!(jordan_type(&u).unwrap()[&1], vec![2, 2, 2, 2, 1]);
        }
    }
}
