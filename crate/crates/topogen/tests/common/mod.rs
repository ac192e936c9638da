//! Helpers shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use topogen::oracle::scott_lower_bound;
use topogen::stabilizers::{enumerate_class_shapes, DEFAULT_SHAPE_BOUND};
use topogen::{decide, ClassDescriptor, Family, GroupSpec, Reason, Verdict};

/// Every group with `n ≤ 10` in characteristics 0, 2, 3 and 5.
pub fn small_groups() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for (fam, ns) in [(Family::SL, 2..=10), (Family::Sp, 4..=10), (Family::SO, 5..=10)] {
        for n in ns {
            for p in [0, 2, 3, 5] {
                if let Ok(g) = GroupSpec::new(fam, n, p) {
                    out.push(g);
                }
            }
        }
    }
    out
}

pub fn catalog(g: &GroupSpec) -> Vec<ClassDescriptor> {
    enumerate_class_shapes(g, DEFAULT_SHAPE_BOUND).unwrap_or_default()
}

/// All multisets of size `r` drawn from `0..k`, as sorted index vectors.
pub fn multisets(k: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            go(k, r, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, r, 0, &mut Vec::new(), &mut out);
    out
}

/// `count` random index tuples of size `r`, reproducible from `seed`.
pub fn sampled(k: usize, r: usize, count: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (0..r).map(|_| rng.gen_range(0..k)).collect()).collect()
}

#[derive(Debug, Default, Clone, Copy)]
pub struct PropStats {
    pub checked: usize,
    pub skipped: usize,
    pub permutation: usize,
    pub monotonicity: usize,
    pub scott: usize,
    pub large_r: usize,
}

impl PropStats {
    pub fn violations(&self) -> usize {
        self.permutation + self.monotonicity + self.scott + self.large_r
    }
    fn merge(mut self, o: PropStats) -> PropStats {
        self.checked += o.checked;
        self.skipped += o.skipped;
        self.permutation += o.permutation;
        self.monotonicity += o.monotonicity;
        self.scott += o.scott;
        self.large_r += o.large_r;
        self
    }
}

fn same(a: &Verdict, b: &Verdict) -> bool {
    a.empty == b.empty && a.reason == b.reason
}

/// Checks one tuple: permutation invariance, Scott consistency, the `r ≥ 5`
/// rule, and monotonicity against each class in `extras`.
pub fn check_tuple(g: &GroupSpec, cat: &[ClassDescriptor], idx: &[usize], extras: &[usize]) -> PropStats {
    let mut st = PropStats::default();
    let classes: Vec<ClassDescriptor> = idx.iter().map(|&i| cat[i].clone()).collect();
    let Ok(v) = decide(g, &classes, None) else {
        st.skipped += 1;
        return st;
    };
    st.checked += 1;
    let mut rev = classes.clone();
    rev.reverse();
    let mut rot = classes.clone();
    rot.rotate_left(1);
    for perm in [rev, rot] {
        match decide(g, &perm, None) {
            Ok(w) if same(&v, &w) => {}
            _ => st.permutation += 1,
        }
    }
    if classes.len() >= 5 && v.empty && !matches!(v.reason, Reason::DimObstruction | Reason::SpChar2FixedVector) {
        st.large_r += 1;
    }
    if !v.empty {
        if let Ok(s) = scott_lower_bound(g, &classes) {
            if !s.holds {
                st.scott += 1;
            }
        }
        for &e in extras {
            let mut more = classes.clone();
            more.push(cat[e].clone());
            match decide(g, &more, None) {
                Ok(w) if !w.empty => {}
                Ok(_) => st.monotonicity += 1,
                Err(_) => st.skipped += 1,
            }
        }
    }
    st
}

/// Runs the oracle property suite over `groups`.
///
/// Pairs are exhaustive and each is extended by every catalog class; tuples
/// of size 3 to 5 are sampled and extended by one sampled class.
pub fn oracle_properties(groups: &[GroupSpec], samples: usize) -> PropStats {
    groups
        .par_iter()
        .enumerate()
        .map(|(gi, g)| {
            let cat = catalog(g);
            let k = cat.len();
            if k == 0 {
                return PropStats::default();
            }
            let all: Vec<usize> = (0..k).collect();
            let mut st = multisets(k, 2)
                .par_iter()
                .map(|t| check_tuple(g, &cat, t, &all))
                .reduce(PropStats::default, PropStats::merge);
            for r in 3..=5 {
                let seed = (gi as u64) << 8 | r as u64;
                let tuples = sampled(k, r, samples, seed);
                let extra = sampled(k, 1, samples, seed ^ 0xff);
                st = st.merge(
                    tuples
                        .par_iter()
                        .zip(extra.par_iter())
                        .map(|(t, e)| {
                            let ext: &[usize] = if r < 5 { e } else { &[] };
                            check_tuple(g, &cat, t, ext)
                        })
                        .reduce(PropStats::default, PropStats::merge),
                );
            }
            st
        })
        .reduce(PropStats::default, PropStats::merge)
}
