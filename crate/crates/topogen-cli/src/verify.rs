//! Cross-check suites comparing the closed formulas with explicit matrices.

use crate::{Failure, Outcome};
use clap::ValueEnum;
use serde_json::{json, Value};
use topogen::finfield::{
    centralizer_lie_dim, estimate_generation_probability, exact_generation_count, fixed_dim, group_closure,
    induced_matrix, invariant_subspace_count, jordan_block, matrix_from_class, order_formula, so9_j2_4,
    standard_generators, tensor_product, Field, FiniteGroup, Form, GFMatrix, GroupTarget, DEFAULT_CAP,
    DEFAULT_SUBSPACE_CAP,
};
use topogen::invariants::{class_dim, induced_block_count, Functor};
use topogen::stabilizers::{enumerate_class_shapes, DEFAULT_SHAPE_BOUND};
use topogen::{Error, Family, GroupSpec, SubspaceType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Blocks,
    Centralizers,
    Psp4,
    So9Count,
}

pub struct Options {
    pub seed: u64,
    pub trials: u64,
    pub cap: Option<usize>,
}

pub fn run(suite: Suite, opts: &Options) -> Outcome {
    let (report, mismatches) = match suite {
        Suite::Blocks => blocks()?,
        Suite::Centralizers => centralizers()?,
        Suite::Psp4 => psp4(opts)?,
        Suite::So9Count => so9_count(opts)?,
    };
    let mut v = report;
    v["suite"] = suite.to_possible_value().expect("no skipped variants").get_name().into();
    v["mismatches"] = json!(mismatches);
    if mismatches.is_empty() {
        Ok(v)
    } else {
        Err(Failure::Mismatch(v))
    }
}

type Report = Result<(Value, Vec<String>), Failure>;

fn blocks() -> Report {
    let mut bad = Vec::new();
    let mut checked = 0;
    for q in [2u32, 3, 5, 101] {
        let f = Field::new(q)?;
        for a in 2..=9 {
            let ja = jordan_block(&f, a);
            for b in 2..=9 {
                let got = fixed_dim(&tensor_product(&ja, &jordan_block(&f, b)));
                let want = induced_block_count(Functor::Tensor, a, Some(b), f.p);
                if got != want {
                    bad.push(format!("J{a} x J{b} over GF({q}): {got} blocks, formula {want}"));
                }
                checked += 1;
            }
            let m = GFMatrix { m: ja.clone(), form: Form::None };
            for fun in [Functor::Wedge2, Functor::Sym2] {
                let got = fixed_dim(&induced_matrix(&m, fun).m);
                let want = induced_block_count(fun, a, None, f.p);
                if got != want {
                    bad.push(format!("{fun:?}(J{a}) over GF({q}): {got} blocks, formula {want}"));
                }
                checked += 1;
            }
        }
    }
    Ok((json!({ "checked": checked }), bad))
}

fn centralizers() -> Report {
    let mut bad = Vec::new();
    let (mut checked, mut skipped) = (0, 0);
    let groups =
        [(Family::Sp, 4), (Family::Sp, 6), (Family::SO, 7), (Family::SO, 8), (Family::SO, 9), (Family::SO, 10)];
    for (fam, n) in groups {
        for q in [3u32, 5, 7] {
            let g = GroupSpec::new(fam, n, q)?;
            for c in enumerate_class_shapes(&g, DEFAULT_SHAPE_BOUND)? {
                let m = match matrix_from_class(&g, &c, q, None) {
                    Ok(m) => m,
                    Err(Error::Uninstantiable { .. }) => {
                        skipped += 1;
                        continue;
                    }
                    Err(e) => return Err(e.into()),
                };
                let want = g.dim() - class_dim(&g, &c)?.dim_class;
                let got = centralizer_lie_dim(&g, &m);
                if got != want || !m.preserves_form() {
                    bad.push(format!("{g} {c} over GF({q}): centralizer {got}, formula {want}"));
                }
                checked += 1;
            }
        }
    }
    Ok((json!({ "checked": checked, "skipped_unrealizable": skipped }), bad))
}

fn psp4(opts: &Options) -> Report {
    let cap = opts.cap.unwrap_or(DEFAULT_CAP);
    let target = GroupTarget { family: Family::Sp, n: 4, q: 3 };
    let closure = group_closure(&standard_generators(target)?, cap);
    if closure.truncated {
        return Err(Error::GroupTooLarge(format!("Sp4(3) exceeds cap {cap}")).into());
    }
    let g = FiniteGroup::enumerate(target, cap)?;
    let order = g.order_mod_center();
    let mut bad = Vec::new();
    if order_formula(Family::Sp, 4, 3) != closure.size as u128 {
        bad.push(format!("|Sp4(3)| = {} disagrees with the order polynomial", closure.size));
    }
    let mut pairs = Vec::new();
    for (r, s) in [(2usize, 3usize), (3, 3)] {
        let exact = exact_generation_count(&g, r, s);
        let (hits, n) = estimate_generation_probability(target, r, s, opts.trials, opts.seed, cap)?;
        if exact.generating != 0 || hits != 0 {
            bad.push(format!("({r},{s}): {} exact and {hits} sampled generating pairs", exact.generating));
        }
        pairs.push(json!({
            "r": r,
            "s": s,
            "generating": exact.generating,
            "total": exact.total,
            "sampled_hits": hits,
            "sampled_trials": n,
        }));
    }
    Ok((json!({ "order_mod_center": order, "pairs": pairs }), bad))
}

fn so9_count(opts: &Options) -> Report {
    let cap = opts.cap.unwrap_or(DEFAULT_SUBSPACE_CAP);
    let mut counts = Vec::new();
    for q in [2u32, 3] {
        let u = so9_j2_4(q)?;
        counts.push(invariant_subspace_count(&u, 4, SubspaceType::TotallySingular, cap)?);
    }
    let est = (counts[1] as f64 / counts[0] as f64).ln() / 1.5f64.ln();
    let mut bad = Vec::new();
    if !(5.0..=7.0).contains(&est) {
        bad.push(format!("dimension estimate {est:.3} outside [5, 7]"));
    }
    Ok((json!({ "counts": { "2": counts[0], "3": counts[1] }, "dimension_estimate": est }), bad))
}
