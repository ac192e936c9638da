//! Class patterns used by the exceptional cases, and the two tables of
//! special `r = 2` and `r ∈ {3, 4}` tuples.

use crate::algebra_core::{ClassDescriptor, ClassKind, Family, GroupSpec, InvolutionType};
use crate::invariants::{class_dim, is_quadratic};

/// A predicate on a single validated class.
#[derive(Debug, Clone)]
pub(crate) enum Slot {
    /// Semisimple `(I_a, -I_b, pairs)`, read up to `-I` when it is central.
    Ss {
        a: usize,
        b: usize,
        pairs: Vec<usize>,
    },
    /// Jordan type, descending.
    Uni(Vec<usize>),
    /// Characteristic 2 involution of type `a_s`.
    TypeA(usize),
    Quadratic,
    NonRegular,
    Any(Vec<Slot>),
}

pub(crate) fn ss(a: usize, b: usize, pairs: &[usize]) -> Slot {
    Slot::Ss { a, b, pairs: pairs.to_vec() }
}

/// `parts` given as `(size, multiplicity)`.
pub(crate) fn uni(blocks: &[(usize, usize)]) -> Slot {
    Slot::Uni(blocks.iter().flat_map(|&(s, m)| std::iter::repeat_n(s, m)).collect())
}

impl Slot {
    pub(crate) fn matches(&self, g: &GroupSpec, c: &ClassDescriptor) -> bool {
        match self {
            Slot::Ss { a, b, pairs } => {
                let ClassKind::Semisimple(pat) = &c.kind else { return false };
                if !pat.free.is_empty() {
                    return false;
                }
                let mut mults: Vec<usize> = pat.pairs.iter().map(|l| l.mult).collect();
                mults.sort_unstable_by(|x, y| y.cmp(x));
                if mults != *pairs {
                    return false;
                }
                let ab = (pat.mult_one, pat.mult_minus_one);
                ab == (*a, *b) || (g.has_minus_identity() && ab == (*b, *a))
            }
            Slot::Uni(parts) => c.partition() == Some(parts.as_slice()),
            Slot::TypeA(s) => c.as_type() == Some(InvolutionType::A(*s)),
            Slot::Quadratic => is_quadratic(c),
            Slot::NonRegular => class_dim(g, c).map(|d| d.dim_centralizer > g.rank()).unwrap_or(false),
            Slot::Any(v) => v.iter().any(|s| s.matches(g, c)),
        }
    }
}

/// True if some ordering of `classes` matches `slots` position by position.
pub(crate) fn match_unordered(g: &GroupSpec, slots: &[Slot], classes: &[ClassDescriptor]) -> bool {
    fn go(g: &GroupSpec, slots: &[Slot], classes: &[ClassDescriptor], used: &mut Vec<bool>) -> bool {
        let Some((first, rest)) = slots.split_first() else { return true };
        for i in 0..classes.len() {
            if !used[i] && first.matches(g, &classes[i]) {
                used[i] = true;
                let ok = go(g, rest, classes, used);
                used[i] = false;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    slots.len() == classes.len() && go(g, slots, classes, &mut vec![false; classes.len()])
}

struct Row {
    id: &'static str,
    applies: fn(&GroupSpec) -> bool,
    slots: fn(&GroupSpec) -> Vec<Slot>,
}

fn half(g: &GroupSpec) -> usize {
    g.n / 2
}

fn odd_p(g: &GroupSpec) -> bool {
    g.p != 2
}

fn so_even(g: &GroupSpec, odd_m: bool) -> bool {
    let m = half(g);
    g.family == Family::SO && g.n.is_multiple_of(2) && m % 2 == usize::from(odd_m) && m >= if odd_m { 5 } else { 6 }
}

fn rows() -> Vec<Row> {
    vec![
        Row {
            id: "SO2m-odd-r2",
            applies: |g| so_even(g, true),
            slots: |g| {
                let m = half(g);
                let mut x1 = vec![ss(2, 0, &[m - 1])];
                if odd_p(g) {
                    x1.push(uni(&[(3, 2), (2, m - 3)]));
                }
                let x2 = if odd_p(g) { uni(&[(2, m - 1), (1, 2)]) } else { Slot::TypeA(m - 1) };
                vec![Slot::Any(x1), x2]
            },
        },
        Row {
            id: "SO2m-even-r2",
            applies: |g| so_even(g, false),
            slots: |g| {
                let m = half(g);
                let mut x1 = vec![ss(2, 0, &[m - 1])];
                if odd_p(g) {
                    x1.push(uni(&[(3, 2), (2, m - 4), (1, 2)]));
                    x1.push(uni(&[(3, 1), (2, m - 2), (1, 1)]));
                }
                let x2 = if odd_p(g) { uni(&[(2, m)]) } else { Slot::TypeA(m) };
                vec![Slot::Any(x1), x2]
            },
        },
        Row {
            id: "SO2m+1-r2",
            applies: |g| g.family == Family::SO && g.n % 2 == 1 && half(g) >= 2 && half(g).is_multiple_of(2),
            slots: |g| {
                let m = half(g);
                vec![ss(1, 0, &[m]), uni(&[(2, m), (1, 1)])]
            },
        },
        Row { id: "Sp4-r2", applies: |g| sp(g, 4) && odd_p(g), slots: |_| vec![ss(2, 2, &[]), Slot::NonRegular] },
        Row {
            id: "SO5-r3",
            applies: |g| g.family == Family::SO && g.n == 5,
            slots: |_| vec![uni(&[(2, 2), (1, 1)]); 3],
        },
        Row {
            id: "Sp8-r3",
            applies: |g| sp(g, 8) && odd_p(g),
            slots: |_| vec![ss(6, 2, &[]), ss(6, 2, &[]), ss(4, 4, &[])],
        },
        Row { id: "Sp6-r3", applies: |g| sp(g, 6) && odd_p(g), slots: |_| vec![ss(4, 2, &[]); 3] },
        Row {
            id: "Sp4-r3",
            applies: |g| sp(g, 4) && odd_p(g),
            slots: |_| vec![ss(2, 2, &[]), ss(2, 2, &[]), Slot::Quadratic],
        },
        Row { id: "Sp4-r4", applies: |g| sp(g, 4) && odd_p(g), slots: |_| vec![ss(2, 2, &[]); 4] },
        Row {
            id: "Sp4p2-r3",
            applies: |g| sp(g, 4) && g.p == 2,
            slots: |_| vec![Slot::TypeA(2), Slot::TypeA(2), Slot::Quadratic],
        },
        Row { id: "Sp4p2-r4", applies: |g| sp(g, 4) && g.p == 2, slots: |_| vec![Slot::TypeA(2); 4] },
    ]
}

fn sp(g: &GroupSpec, n: usize) -> bool {
    g.family == Family::Sp && g.n == n
}

/// Identifier of the table row matching `classes` up to ordering, if any.
///
/// This is a literal reading of the two tables and is kept separate from the
/// case analysis in [`super::decide`] so the two can be compared.
pub fn table_row(group: &GroupSpec, classes: &[ClassDescriptor]) -> Option<&'static str> {
    rows()
        .into_iter()
        .filter(|row| (row.applies)(group))
        .find(|row| match_unordered(group, &(row.slots)(group), classes))
        .map(|row| row.id)
}
