//! Exact symbolic eigenvalues.
//!
//! An eigenvalue is a root of unity times a monomial in algebraically
//! independent generic labels. Labels carrying an order tag are replaced by a
//! concrete root of unity, so coincidences such as `λ⁻¹ = -λ` for `λ² = -1`
//! are detected exactly.

use num_rational::Ratio;
use std::collections::BTreeMap;

/// Rational exponent / angle arithmetic.
pub type Q = Ratio<i64>;

/// `exp(2πi·root) · Π label^exp`, with `root` reduced into `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Eigen {
    root: Q,
    gens: BTreeMap<String, Q>,
}

fn frac(x: Q) -> Q {
    x - x.floor()
}

impl Eigen {
    pub fn one() -> Self {
        Eigen { root: Q::from_integer(0), gens: BTreeMap::new() }
    }

    pub fn minus_one() -> Self {
        Eigen::root_of_unity(1, 2)
    }

    /// `exp(2πi·j/k)`.
    pub fn root_of_unity(j: i64, k: i64) -> Self {
        Eigen { root: frac(Q::new(j, k)), gens: BTreeMap::new() }
    }

    /// A generic transcendental label.
    pub fn generic(label: &str) -> Self {
        let mut gens = BTreeMap::new();
        gens.insert(label.to_string(), Q::from_integer(1));
        Eigen { root: Q::from_integer(0), gens }
    }

    pub fn mul(&self, other: &Eigen) -> Eigen {
        let mut gens = self.gens.clone();
        for (k, v) in &other.gens {
            let e = gens.entry(k.clone()).or_insert(Q::from_integer(0));
            *e += *v;
        }
        gens.retain(|_, v| *v != Q::from_integer(0));
        Eigen { root: frac(self.root + other.root), gens }
    }

    pub fn inv(&self) -> Eigen {
        Eigen { root: frac(-self.root), gens: self.gens.iter().map(|(k, v)| (k.clone(), -*v)).collect() }
    }

    /// The square root with halved angle and exponents; a fixed choice of branch.
    pub fn sqrt(&self) -> Eigen {
        let half = Q::new(1, 2);
        Eigen { root: self.root * half, gens: self.gens.iter().map(|(k, v)| (k.clone(), *v * half)).collect() }
    }

    pub fn is_one(&self) -> bool {
        self.gens.is_empty() && self.root == Q::from_integer(0)
    }

    pub fn is_minus_one(&self) -> bool {
        self.gens.is_empty() && self.root == Q::new(1, 2)
    }
}

/// Collects equal eigenvalues of a list with multiplicities.
pub fn tally<I: IntoIterator<Item = (Eigen, usize)>>(items: I) -> BTreeMap<Eigen, usize> {
    let mut out = BTreeMap::new();
    for (e, m) in items {
        if m > 0 {
            *out.entry(e).or_insert(0) += m;
        }
    }
    out
}
