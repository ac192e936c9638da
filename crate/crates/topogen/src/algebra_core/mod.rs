//! Groups, conjugacy class descriptors and their validation.

mod class;
pub mod eigen;

pub(crate) use class::is_admissible as class_admissible;
pub use class::{
    Block, ClassDescriptor, ClassKind, EigenPattern, InvolutionType, LabelMult, OrderTag, UnipotentData, Variant,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Classical family of the simple group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    SL,
    Sp,
    SO,
    Spin8,
}

/// A simple classical algebraic group over an algebraically closed field.
///
/// `SO` with `n = 8` is routed to `Spin8` on construction. `SO` with `n = 6`
/// takes its classes on the 4-dimensional module of `SL4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGroup")]
pub struct GroupSpec {
    pub family: Family,
    pub n: usize,
    pub p: u32,
}

#[derive(Deserialize)]
struct RawGroup {
    family: Family,
    #[serde(default)]
    n: Option<usize>,
    #[serde(default)]
    p: u32,
}

impl TryFrom<RawGroup> for GroupSpec {
    type Error = Error;
    fn try_from(raw: RawGroup) -> Result<Self> {
        let n = match (raw.family, raw.n) {
            (Family::Spin8, None) => 8,
            (_, Some(n)) => n,
            (f, None) => return Err(Error::InvalidGroup(format!("{f:?} needs n"))),
        };
        GroupSpec::new(raw.family, n, raw.p)
    }
}

pub fn is_prime(x: u32) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The linear group on which classes of `group` are written down.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Frame {
    pub fam: Family,
    pub n: usize,
    pub p: u32,
}

impl Frame {
    pub fn sl(n: usize, p: u32) -> Self {
        Frame { fam: Family::SL, n, p }
    }
}

impl GroupSpec {
    pub fn new(family: Family, n: usize, p: u32) -> Result<Self> {
        if p != 0 && !is_prime(p) {
            return Err(Error::InvalidGroup(format!("characteristic {p} is not 0 or a prime")));
        }
        let family = match (family, n) {
            (Family::SO, 8) => Family::Spin8,
            (f, _) => f,
        };
        match family {
            Family::SL if n < 2 => Err(Error::InvalidGroup("SL needs n >= 2".into())),
            Family::Sp if n < 4 || n % 2 == 1 => Err(Error::InvalidGroup(format!("Sp needs even n >= 4, got {n}"))),
            Family::SO if n < 5 => Err(Error::InvalidGroup(format!("SO needs n >= 5, got {n}"))),
            Family::SO if n % 2 == 1 && p == 2 => Err(Error::InvalidGroup("odd-dimensional SO needs p != 2".into())),
            Family::Spin8 if n != 8 => Err(Error::InvalidGroup("Spin8 has n = 8".into())),
            _ => Ok(GroupSpec { family, n, p }),
        }
    }

    pub fn sl(n: usize, p: u32) -> Result<Self> {
        GroupSpec::new(Family::SL, n, p)
    }
    pub fn sp(n: usize, p: u32) -> Result<Self> {
        GroupSpec::new(Family::Sp, n, p)
    }
    pub fn so(n: usize, p: u32) -> Result<Self> {
        GroupSpec::new(Family::SO, n, p)
    }
    pub fn spin8(p: u32) -> Result<Self> {
        GroupSpec::new(Family::Spin8, 8, p)
    }

    /// `(dim G, rank G)`.
    pub fn dim_and_rank(&self) -> (usize, usize) {
        let n = self.n;
        match self.family {
            Family::SL => (n * n - 1, n - 1),
            Family::Sp => (n * (n + 1) / 2, n / 2),
            Family::SO | Family::Spin8 => (n * (n - 1) / 2, n / 2),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim_and_rank().0
    }

    pub fn rank(&self) -> usize {
        self.dim_and_rank().1
    }

    pub fn is_so6(&self) -> bool {
        self.family == Family::SO && self.n == 6
    }

    /// Orthogonal group of even degree, Spin8 included.
    pub fn is_even_orthogonal(&self) -> bool {
        matches!(self.family, Family::Spin8) || (self.family == Family::SO && self.n.is_multiple_of(2))
    }

    /// Whether `-I` on the natural module is central and distinct from `I`.
    pub fn has_minus_identity(&self) -> bool {
        self.p != 2
            && match self.family {
                Family::Sp | Family::Spin8 => true,
                Family::SO => self.n.is_multiple_of(2),
                Family::SL => self.n.is_multiple_of(2),
            }
    }

    pub(crate) fn frame(&self) -> Frame {
        match self.family {
            Family::SO if self.n == 6 => Frame::sl(4, self.p),
            Family::Spin8 => Frame { fam: Family::SO, n: 8, p: self.p },
            f => Frame { fam: f, n: self.n, p: self.p },
        }
    }

    /// Validates and canonicalizes a class for this group.
    pub fn validate(&self, raw: &ClassDescriptor) -> Result<ClassDescriptor> {
        class::validate(self.frame(), raw)
    }
}

/// Free-function form of [`GroupSpec::validate`].
pub fn validate_class(group: &GroupSpec, raw: &ClassDescriptor) -> Result<ClassDescriptor> {
    group.validate(raw)
}

/// Free-function form of [`GroupSpec::dim_and_rank`].
pub fn dim_and_rank(group: &GroupSpec) -> (usize, usize) {
    group.dim_and_rank()
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Spin8 => write!(f, "Spin8")?,
            fam => write!(f, "{:?}{}", fam, self.n)?,
        }
        write!(f, " (p = {})", self.p)
    }
}
