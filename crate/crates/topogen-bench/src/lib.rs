//! Fixtures shared by the benchmarks.

use topogen::stabilizers::{enumerate_class_shapes, DEFAULT_SHAPE_BOUND};
use topogen::{ClassDescriptor, GroupSpec};

/// One group per family at the top of the supported range.
pub fn groups() -> Vec<GroupSpec> {
    vec![
        GroupSpec::sl(10, 0).unwrap(),
        GroupSpec::sp(10, 3).unwrap(),
        GroupSpec::so(10, 5).unwrap(),
        GroupSpec::spin8(0).unwrap(),
    ]
}

/// Every unordered pair of catalog classes.
pub fn catalog_pairs(group: &GroupSpec) -> Vec<[ClassDescriptor; 2]> {
    let cat = enumerate_class_shapes(group, DEFAULT_SHAPE_BOUND).unwrap_or_default();
    let mut out = Vec::new();
    for (i, a) in cat.iter().enumerate() {
        for b in &cat[i..] {
            out.push([a.clone(), b.clone()]);
        }
    }
    out
}
