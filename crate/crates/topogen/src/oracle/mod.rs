//! Decision procedure for topological generation by a tuple of classes.
//!
//! [`decide`] runs the general obstructions first (dimension count, fixed
//! vectors in characteristic 2, quadratic pairs), then the exceptional cases
//! of each family. Anything left over is generated.

mod pattern;
mod spin8;

pub use pattern::table_row;
pub use spin8::{so6_transfer, spin8_profile};

use crate::algebra_core::{eigen::Eigen, ClassDescriptor, ClassKind, Family, GroupSpec, InvolutionType};
use crate::error::{Error, Result};
use crate::invariants::{dim_of_valid, frame_profile, is_quadratic, profile_of_valid, EigenProfile};
use pattern::{match_unordered, ss, uni, Slot};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

/// Why the generating set is empty (or `Generic` when it is not).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    DimObstruction,
    SpChar2FixedVector,
    QuadraticPair,
    /// `dim X < dim G + rk G − dim Z(Lie G)`: generation fails on the adjoint module.
    AdjointObstruction,
    TableRow(String),
    FamilyTheoremCase(String),
    Generic,
}

impl Reason {
    pub fn code(&self) -> &'static str {
        match self {
            Reason::DimObstruction => "DimObstruction",
            Reason::SpChar2FixedVector => "SpChar2FixedVector",
            Reason::QuadraticPair => "QuadraticPair",
            Reason::AdjointObstruction => "AdjointObstruction",
            Reason::TableRow(_) => "TableRow",
            Reason::FamilyTheoremCase(_) => "FamilyTheoremCase",
            Reason::Generic => "Generic",
        }
    }

    /// Row or case identifier, when there is one.
    pub fn id(&self) -> Option<&str> {
        match self {
            Reason::TableRow(s) | Reason::FamilyTheoremCase(s) => Some(s),
            _ => None,
        }
    }
}

/// Quantities computed on the way to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub sum_d: usize,
    pub sum_e: usize,
    /// `n(r - 1)`.
    pub bound: usize,
    pub profiles: Vec<EigenProfile>,
    pub quadratic: Vec<bool>,
    /// Module carrying the dimension obstruction for `Spin8`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spin8_sums: Option<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table_row: Option<String>,
    /// Adjoint-module bound, when it was needed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scott: Option<ScottCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub empty: bool,
    pub reason: Reason,
    pub witnesses: Witnesses,
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("empty", &self.empty)?;
        m.serialize_entry("reason", self.reason.code())?;
        match &self.reason {
            Reason::TableRow(id) => m.serialize_entry("row", id)?,
            Reason::FamilyTheoremCase(id) => m.serialize_entry("case", id)?,
            _ => {}
        }
        m.serialize_entry("witnesses", &self.witnesses)?;
        m.end()
    }
}

const MODULES: [&str; 3] = ["V1", "V3", "V4"];

/// Decides whether some tuple in `C₁ × ⋯ × C_r` topologically generates the group.
///
/// `spin8_profiles` overrides the built-in `(d₁, d₃, d₄)` catalog for `Spin8`.
pub fn decide(
    group: &GroupSpec,
    classes: &[ClassDescriptor],
    spin8_profiles: Option<&[[usize; 3]]>,
) -> Result<Verdict> {
    let r = classes.len();
    if r < 2 {
        return Err(Error::Malformed(format!("need at least two classes, got {r}")));
    }
    let classes: Vec<ClassDescriptor> = classes.iter().map(|c| group.validate(c)).collect::<Result<_>>()?;
    let n = group.n;
    let bound = n * (r - 1);

    let mut profiles: Vec<EigenProfile> = classes.iter().map(|c| profile_of_valid(group, c)).collect::<Result<_>>()?;
    let mut spin8_sums = None;
    let mut module = None;
    if group.family == Family::Spin8 {
        if let Some(given) = spin8_profiles {
            if given.len() != r {
                return Err(Error::SizeMismatch(given.len(), r));
            }
        }
        let mut sums = [0usize; 3];
        for (i, (c, prof)) in classes.iter().zip(&mut profiles).enumerate() {
            let t = match spin8_profiles {
                Some(given) => given[i],
                None => spin8_profile(c, group.p).map_err(|_| Error::MissingSpin8Profile(c.to_string()))?,
            };
            prof.spin8 = Some(t);
            prof.d = t[0];
            for j in 0..3 {
                sums[j] += t[j];
            }
        }
        module = sums.iter().position(|&s| s > bound).map(|j| MODULES[j].to_string());
        spin8_sums = Some(sums);
    }

    let mut w = Witnesses {
        sum_d: profiles.iter().map(|p| p.d).sum(),
        sum_e: profiles.iter().map(|p| p.e).sum(),
        bound,
        quadratic: classes.iter().map(is_quadratic).collect(),
        profiles,
        module,
        spin8_sums,
        theorem_case: None,
        table_row: None,
        scott: None,
    };
    let verdict = |empty, reason, witnesses| Ok(Verdict { empty, reason, witnesses });
    // recorded even when a general obstruction decides first
    w.table_row = table_row(group, &classes).map(String::from);

    // Fixed vectors of Sp in characteristic 2 are checked first: they also
    // cover the equality case the dimension count misses.
    if group.family == Family::Sp && group.p == 2 && w.sum_e >= bound {
        return verdict(true, Reason::SpChar2FixedVector, w);
    }
    if w.sum_d > bound || w.module.is_some() {
        if w.module.is_none() && group.family == Family::Spin8 {
            w.module = Some(MODULES[0].into());
        }
        return verdict(true, Reason::DimObstruction, w);
    }
    // For SO6 the classes live on W; quadratic pairs there are a family case.
    if r == 2 && n >= 3 && !group.is_so6() && w.quadratic.iter().all(|&q| q) {
        return verdict(true, Reason::QuadraticPair, w);
    }
    match family_case(group, &classes)? {
        Some(case) => {
            w.theorem_case = Some(case.to_string());
            let reason = match &w.table_row {
                Some(row) => Reason::TableRow(row.clone()),
                None => Reason::FamilyTheoremCase(case.to_string()),
            };
            verdict(true, reason, w)
        }
        None => {
            // The family cases can miss tuples the adjoint-module bound rules out.
            if let Ok(s) = scott_of_valid(group, &classes) {
                if !s.holds {
                    w.scott = Some(s);
                    return verdict(true, Reason::AdjointObstruction, w);
                }
            }
            verdict(false, Reason::Generic, w)
        }
    }
}

fn involution_mod_center(c: &ClassDescriptor, p: u32) -> bool {
    match &c.kind {
        ClassKind::Semisimple(pat) => match pat.eigenvalues() {
            Ok(e) => {
                let v: Vec<&Eigen> = e.keys().collect();
                v.len() == 2 && v[0].mul(&v[1].inv()).is_minus_one()
            }
            Err(_) => false,
        },
        ClassKind::Unipotent(_) => p == 2,
    }
}

/// Exceptional cases of the family theorems, past the general obstructions.
fn family_case(g: &GroupSpec, cs: &[ClassDescriptor]) -> Result<Option<&'static str>> {
    let r = cs.len();
    let n = g.n;
    let m = n / 2;
    let p = g.p;
    let fits = |slots: Vec<Slot>| match_unordered(g, &slots, cs);
    let case = match g.family {
        Family::SL if n == 2 => (r == 2 && cs.iter().all(|c| involution_mod_center(c, p))).then_some("SL2-involutions"),
        Family::SL => None,
        Family::SO if n == 6 => {
            let mut dw = Vec::with_capacity(r);
            for c in cs {
                dw.push(frame_profile(c)?.d);
            }
            let nonregular = |c: &ClassDescriptor| Slot::NonRegular.matches(g, c);
            if r == 3 && dw.iter().all(|&d| d == 3) {
                Some("SO6-i")
            } else if r == 2 && cs.iter().all(is_quadratic) {
                Some("SO6-ii")
            } else if r == 2 && ((dw[0] == 3 && nonregular(&cs[1])) || (dw[1] == 3 && nonregular(&cs[0]))) {
                Some("SO6-iii")
            } else {
                None
            }
        }
        Family::Spin8 => {
            let same = r == 2 && cs[0] == cs[1];
            if same && p != 2 && ss(4, 4, &[]).matches(g, &cs[0]) {
                Some("Spin8-i")
            } else if same && p == 2 && cs[0].as_type() == Some(InvolutionType::C(4)) {
                Some("Spin8-ii")
            } else {
                None
            }
        }
        Family::SO if n % 2 == 1 => {
            if r == 3 && m == 2 && fits(vec![uni(&[(2, 2), (1, 1)]); 3]) {
                Some("SO-odd-i")
            } else if r == 2 && m.is_multiple_of(2) && fits(vec![uni(&[(2, m), (1, 1)]), ss(1, 0, &[m])]) {
                Some("SO-odd-ii")
            } else {
                None
            }
        }
        Family::SO if m % 2 == 1 && m >= 5 && r == 2 => {
            let mut x1 = vec![ss(2, 0, &[m - 1])];
            if p != 2 {
                x1.push(uni(&[(3, 2), (2, m - 3)]));
            }
            let x2 = if p != 2 { uni(&[(2, m - 1), (1, 2)]) } else { Slot::TypeA(m - 1) };
            fits(vec![Slot::Any(x1), x2]).then_some("SO2m-odd")
        }
        Family::SO if m.is_multiple_of(2) && m >= 6 && r == 2 => {
            let mut x1 = vec![ss(2, 0, &[m - 1])];
            if p != 2 {
                x1.push(uni(&[(3, 2), (2, m - 4), (1, 2)]));
            }
            let x2 = if p != 2 { uni(&[(2, m)]) } else { Slot::TypeA(m) };
            if fits(vec![Slot::Any(x1), x2]) {
                Some("SO2m-even")
            } else if p != 2 && fits(vec![uni(&[(3, 1), (2, m - 2), (1, 1)]), uni(&[(2, m)])]) {
                Some("SO2m-even-ii")
            } else {
                None
            }
        }
        Family::SO => None,
        Family::Sp if p != 2 => match (m, r) {
            (2, 2) => fits(vec![ss(2, 2, &[]), Slot::NonRegular]).then_some("Sp4-ii"),
            (2, 3) => fits(vec![ss(2, 2, &[]), ss(2, 2, &[]), Slot::Quadratic]).then_some("Sp4-iii"),
            (2, 4) => fits(vec![ss(2, 2, &[]); 4]).then_some("Sp4-iv"),
            (3, 2) => fits(vec![ss(4, 2, &[]), Slot::Any(vec![uni(&[(3, 2)]), ss(2, 0, &[2])])]).then_some("Sp6-ii"),
            (3, 3) => fits(vec![ss(4, 2, &[]); 3]).then_some("Sp6-iii"),
            (4, 2) => {
                let x2 = Slot::Any(vec![ss(4, 0, &[1, 1]), ss(4, 0, &[2]), uni(&[(3, 2), (1, 2)])]);
                fits(vec![ss(4, 4, &[]), x2]).then_some("Sp8-ii")
            }
            (4, 3) => fits(vec![ss(6, 2, &[]), ss(6, 2, &[]), ss(4, 4, &[])]).then_some("Sp8-iii"),
            _ => None,
        },
        Family::Sp => match (m, r) {
            (2, 3) => fits(vec![Slot::TypeA(2), Slot::TypeA(2), Slot::Quadratic]).then_some("Sp4p2-ii"),
            (2, 4) => fits(vec![Slot::TypeA(2); 4]).then_some("Sp4p2-iii"),
            _ => None,
        },
    };
    Ok(case)
}

/// Outcome of the necessary dimension condition `Σ dim Cᵢ ≥ dim G + rk G − dim Z(L)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScottCheck {
    pub holds: bool,
    pub lhs: usize,
    pub rhs: usize,
}

pub fn scott_lower_bound(group: &GroupSpec, classes: &[ClassDescriptor]) -> Result<ScottCheck> {
    let classes: Vec<ClassDescriptor> = classes.iter().map(|c| group.validate(c)).collect::<Result<_>>()?;
    scott_of_valid(group, &classes)
}

fn scott_of_valid(group: &GroupSpec, classes: &[ClassDescriptor]) -> Result<ScottCheck> {
    if group.p == 2 && group.family != Family::SL {
        return Err(Error::BadCharacteristic(format!("{group}: centre of the Lie algebra not tabulated")));
    }
    let mut lhs = 0;
    for c in classes {
        lhs += dim_of_valid(group, c)?.dim_class;
    }
    let (dim, rank) = group.dim_and_rank();
    let z = usize::from(group.family == Family::SL && group.p != 0 && group.n.is_multiple_of(group.p as usize));
    let rhs = dim + rank - z;
    Ok(ScottCheck { holds: lhs >= rhs, lhs, rhs })
}

/// Fewest conjugates of `class` that topologically generate.
pub fn min_generators(group: &GroupSpec, class: &ClassDescriptor) -> Result<usize> {
    let class = group.validate(class)?;
    for r in 2..=group.n + 1 {
        if !decide(group, &vec![class.clone(); r], None)?.empty {
            return Ok(r);
        }
    }
    Err(Error::Infeasible(format!("no r <= {} generates", group.n + 1)))
}
