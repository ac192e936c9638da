//! Class descriptors and their canonical form.

use super::eigen::{tally, Eigen};
use super::{is_prime, Family, Frame};
use crate::error::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Splitting label for even orthogonal classes that break into two classes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Plus,
    Minus,
    #[default]
    Unspecified,
}

impl Variant {
    fn is_unspecified(&self) -> bool {
        *self == Variant::Unspecified
    }
}

/// A symbolic label with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabelMult {
    pub label: String,
    pub mult: usize,
}

/// Eigenvalue multiplicities of a semisimple class.
///
/// `pairs` holds `(λ, λ⁻¹)` blocks; `free` holds single eigenvalues and is
/// only meaningful for `SL`. `relations` maps a label to a tag such as
/// `"l^3=1"` (exact order 3) or `"l^2=-1"` (exact order 4).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EigenPattern {
    #[serde(default)]
    pub mult_one: usize,
    #[serde(default)]
    pub mult_minus_one: usize,
    #[serde(default)]
    pub pairs: Vec<LabelMult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub free: Vec<LabelMult>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub relations: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Variant::is_unspecified")]
    pub variant: Variant,
}

/// Indecomposable summand of a unipotent element in characteristic 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    /// One Jordan block of even size carrying a nondegenerate form.
    V(usize),
    /// `mult` copies of a pair of totally singular blocks of size `ell`.
    W { ell: usize, mult: usize },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawBlock {
    V {
        #[serde(rename = "V")]
        v: usize,
    },
    W {
        #[serde(rename = "W")]
        w: usize,
        #[serde(default = "one")]
        mult: usize,
    },
}

fn one() -> usize {
    1
}

impl Serialize for Block {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Block::V(v) => RawBlock::V { v },
            Block::W { ell, mult } => RawBlock::W { w: ell, mult },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Block {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match RawBlock::deserialize(d)? {
            RawBlock::V { v } => Block::V(v),
            RawBlock::W { w, mult } => Block::W { ell: w, mult },
        })
    }
}

/// Jordan data of a unipotent class.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnipotentData {
    #[serde(default)]
    pub partition: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decoration: Option<Vec<Block>>,
    #[serde(default, skip_serializing_if = "Variant::is_unspecified")]
    pub variant: Variant,
}

/// Label of a unipotent involution in characteristic 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvolutionType {
    A(usize),
    B(usize),
    C(usize),
}

impl fmt::Display for InvolutionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvolutionType::A(s) => write!(f, "a{s}"),
            InvolutionType::B(s) => write!(f, "b{s}"),
            InvolutionType::C(s) => write!(f, "c{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Semisimple(EigenPattern),
    Unipotent(UnipotentData),
}

/// Declared order modulo the center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderTag {
    Prime(u32),
    UnipotentChar0,
}

const CHAR0_TAG: &str = "unipotent-char-0";

impl Serialize for OrderTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            OrderTag::Prime(r) => s.serialize_u32(*r),
            OrderTag::UnipotentChar0 => s.serialize_str(CHAR0_TAG),
        }
    }
}

impl<'de> Deserialize<'de> for OrderTag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u32),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(r) => Ok(OrderTag::Prime(r)),
            Raw::S(s) if s == CHAR0_TAG => Ok(OrderTag::UnipotentChar0),
            Raw::S(s) => Err(serde::de::Error::custom(format!("unknown order tag {s:?}"))),
        }
    }
}

/// A noncentral conjugacy class of prime order modulo the center.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassDescriptor {
    #[serde(flatten)]
    pub kind: ClassKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderTag>,
}

// ---------------------------------------------------------------- builders

impl ClassDescriptor {
    /// Unipotent class from `(size, multiplicity)` pairs.
    pub fn jordan(blocks: &[(usize, usize)]) -> Self {
        let mut parts = Vec::new();
        for &(s, m) in blocks {
            parts.extend(std::iter::repeat_n(s, m));
        }
        Self::unipotent(&parts)
    }

    /// Unipotent class from a list of parts.
    pub fn unipotent(parts: &[usize]) -> Self {
        ClassDescriptor {
            kind: ClassKind::Unipotent(UnipotentData { partition: parts.to_vec(), ..Default::default() }),
            order: None,
        }
    }

    /// Characteristic 2 class from its decoration.
    pub fn decorated(blocks: &[Block]) -> Self {
        ClassDescriptor {
            kind: ClassKind::Unipotent(UnipotentData {
                partition: Vec::new(),
                decoration: Some(blocks.to_vec()),
                variant: Variant::Unspecified,
            }),
            order: None,
        }
    }

    /// Semisimple class `(I_one, -I_minus, λ I_c, λ⁻¹ I_c, ...)`.
    pub fn semisimple(one: usize, minus: usize, pairs: &[(&str, usize)]) -> Self {
        ClassDescriptor {
            kind: ClassKind::Semisimple(EigenPattern {
                mult_one: one,
                mult_minus_one: minus,
                pairs: pairs.iter().map(|&(l, m)| LabelMult { label: l.into(), mult: m }).collect(),
                ..Default::default()
            }),
            order: None,
        }
    }

    /// `SL` semisimple class with unpaired eigenvalues.
    pub fn sl_semisimple(one: usize, free: &[(&str, usize)]) -> Self {
        let mut c = Self::semisimple(one, 0, &[]);
        if let ClassKind::Semisimple(p) = &mut c.kind {
            p.free = free.iter().map(|&(l, m)| LabelMult { label: l.into(), mult: m }).collect();
        }
        c
    }

    pub fn with_relation(mut self, label: &str, tag: &str) -> Self {
        if let ClassKind::Semisimple(p) = &mut self.kind {
            p.relations.insert(label.into(), tag.into());
        }
        self
    }

    pub fn with_variant(mut self, v: Variant) -> Self {
        match &mut self.kind {
            ClassKind::Semisimple(p) => p.variant = v,
            ClassKind::Unipotent(u) => u.variant = v,
        }
        self
    }

    pub fn with_order(mut self, r: u32) -> Self {
        self.order = Some(OrderTag::Prime(r));
        self
    }

    pub fn is_unipotent(&self) -> bool {
        matches!(self.kind, ClassKind::Unipotent(_))
    }

    pub fn pattern(&self) -> Option<&EigenPattern> {
        match &self.kind {
            ClassKind::Semisimple(p) => Some(p),
            _ => None,
        }
    }

    pub fn unipotent_data(&self) -> Option<&UnipotentData> {
        match &self.kind {
            ClassKind::Unipotent(u) => Some(u),
            _ => None,
        }
    }

    pub fn variant(&self) -> Variant {
        match &self.kind {
            ClassKind::Semisimple(p) => p.variant,
            ClassKind::Unipotent(u) => u.variant,
        }
    }

    /// Partition of a unipotent class.
    pub fn partition(&self) -> Option<&[usize]> {
        self.unipotent_data().map(|u| u.partition.as_slice())
    }

    /// Involution label for a decorated class with all parts at most 2.
    pub fn as_type(&self) -> Option<InvolutionType> {
        self.unipotent_data().and_then(|u| u.as_type())
    }
}

impl UnipotentData {
    pub fn blocks(&self) -> usize {
        self.partition.len()
    }

    pub fn as_type(&self) -> Option<InvolutionType> {
        let dec = self.decoration.as_ref()?;
        if self.partition.iter().any(|&x| x > 2) {
            return None;
        }
        let v2 = dec.iter().filter(|b| **b == Block::V(2)).count();
        let s = self.partition.iter().filter(|&&x| x == 2).count();
        Some(match v2 {
            0 => InvolutionType::A(s),
            1 => InvolutionType::B(s),
            _ => InvolutionType::C(s),
        })
    }
}

/// Partition (descending) described by a decoration.
pub(crate) fn decoration_partition(dec: &[Block]) -> Vec<usize> {
    let mut parts = Vec::new();
    for b in dec {
        match *b {
            Block::V(v) => parts.push(v),
            Block::W { ell, mult } => parts.extend(std::iter::repeat_n(ell, 2 * mult)),
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Sorted decoration with merged `W` multiplicities.
pub(crate) fn canonical_decoration(dec: &[Block]) -> Vec<Block> {
    let mut vs: Vec<usize> = Vec::new();
    let mut ws: BTreeMap<usize, usize> = BTreeMap::new();
    for b in dec {
        match *b {
            Block::V(v) => vs.push(v),
            Block::W { ell, mult } => *ws.entry(ell).or_insert(0) += mult,
        }
    }
    vs.sort_unstable_by(|a, b| b.cmp(a));
    let mut out: Vec<Block> = vs.into_iter().map(Block::V).collect();
    out.extend(ws.into_iter().rev().filter(|(_, m)| *m > 0).map(|(ell, mult)| Block::W { ell, mult }));
    out
}

// ---------------------------------------------------------------- labels

/// Exact order encoded by a relation tag `l^k=1` or `l^k=-1`.
pub(crate) fn parse_tag(label: &str, tag: &str) -> Result<u32> {
    let t: String = tag.chars().filter(|c| !c.is_whitespace()).collect();
    let bad =
        || Error::Malformed(format!("relation {tag:?} for {label} is not of the form {label}^k=1 or {label}^k=-1"));
    let rest = t.strip_prefix(label).and_then(|r| r.strip_prefix('^')).ok_or_else(bad)?;
    let (k, rhs) = rest.split_once('=').ok_or_else(bad)?;
    let k: u32 = k.parse().map_err(|_| bad())?;
    let order = match rhs {
        "1" => k,
        "-1" => 2 * k,
        _ => return Err(bad()),
    };
    if order < 3 {
        return Err(Error::OrderViolation(format!("{label} would satisfy {label}^2 = 1")));
    }
    Ok(order)
}

fn canonical_tag(label: &str, order: u32) -> String {
    if order.is_multiple_of(2) {
        format!("{label}^{}=-1", order / 2)
    } else {
        format!("{label}^{order}=1")
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn units(k: i64) -> Vec<i64> {
    (1..k).filter(|&j| gcd(j, k) == 1).collect()
}

/// Result of assigning roots of unity to tagged labels.
struct Resolved {
    pairs: Vec<LabelMult>,
    free: Vec<LabelMult>,
    values: BTreeMap<String, Eigen>,
    orders: BTreeMap<String, u32>,
}

fn resolve(p: &EigenPattern) -> Result<Resolved> {
    let mut orders = BTreeMap::new();
    let known: BTreeSet<&str> = p.pairs.iter().chain(&p.free).map(|l| l.label.as_str()).collect();
    for (label, tag) in &p.relations {
        if !known.contains(label.as_str()) {
            return Err(Error::Malformed(format!("relation for unknown label {label}")));
        }
        orders.insert(label.clone(), parse_tag(label, tag)?);
    }
    let mut pairs: Vec<LabelMult> = p.pairs.clone();
    let mut free: Vec<LabelMult> = p.free.clone();
    pairs.sort_by(|a, b| a.label.cmp(&b.label));
    free.sort_by(|a, b| a.label.cmp(&b.label));

    let mut used: BTreeMap<u32, BTreeSet<i64>> = BTreeMap::new();
    let mut first_pair_of: BTreeMap<u32, String> = BTreeMap::new();
    let mut values = BTreeMap::new();
    let mut merged: BTreeMap<String, usize> = BTreeMap::new();
    let mut out_pairs: Vec<LabelMult> = Vec::new();

    for lm in pairs {
        let Some(&k) = orders.get(&lm.label) else {
            values.insert(lm.label.clone(), Eigen::generic(&lm.label));
            out_pairs.push(lm);
            continue;
        };
        let ki = k as i64;
        let taken = used.entry(k).or_default();
        let pick = units(ki).into_iter().find(|&j| !taken.contains(&j) && !taken.contains(&(ki - j)));
        match pick {
            Some(j) => {
                taken.insert(j);
                taken.insert(ki - j);
                values.insert(lm.label.clone(), Eigen::root_of_unity(j, ki));
                first_pair_of.entry(k).or_insert_with(|| lm.label.clone());
                out_pairs.push(lm);
            }
            None if units(ki).len() == 2 && first_pair_of.contains_key(&k) => {
                *merged.entry(first_pair_of[&k].clone()).or_insert(0) += lm.mult;
            }
            None => return Err(Error::OrderViolation(format!("too many distinct eigenvalue pairs of order {k}"))),
        }
    }
    for lm in &mut out_pairs {
        if let Some(extra) = merged.get(&lm.label) {
            lm.mult += extra;
        }
    }
    for lm in &free {
        let Some(&k) = orders.get(&lm.label) else {
            values.insert(lm.label.clone(), Eigen::generic(&lm.label));
            continue;
        };
        let ki = k as i64;
        let taken = used.entry(k).or_default();
        let j = units(ki)
            .into_iter()
            .find(|j| !taken.contains(j))
            .ok_or_else(|| Error::OrderViolation(format!("too many distinct eigenvalues of order {k}")))?;
        taken.insert(j);
        values.insert(lm.label.clone(), Eigen::root_of_unity(j, ki));
    }
    orders.retain(|l, _| values.contains_key(l));
    Ok(Resolved { pairs: out_pairs, free, values, orders })
}

impl EigenPattern {
    /// Value of every label after order tags are resolved.
    pub fn label_values(&self) -> Result<BTreeMap<String, Eigen>> {
        Ok(resolve(self)?.values)
    }

    /// Exact order of every tagged label.
    pub fn label_orders(&self) -> BTreeMap<String, u32> {
        self.relations.iter().filter_map(|(l, t)| parse_tag(l, t).ok().map(|k| (l.clone(), k))).collect()
    }

    /// Distinct eigenvalues on the natural module with multiplicities.
    pub fn eigenvalues(&self) -> Result<BTreeMap<Eigen, usize>> {
        let values = self.label_values()?;
        let mut items = vec![(Eigen::one(), self.mult_one), (Eigen::minus_one(), self.mult_minus_one)];
        for lm in &self.pairs {
            let v = &values[&lm.label];
            items.push((v.clone(), lm.mult));
            items.push((v.inv(), lm.mult));
        }
        for lm in &self.free {
            items.push((values[&lm.label].clone(), lm.mult));
        }
        Ok(tally(items))
    }

    /// Natural module dimension described by the pattern.
    pub fn degree(&self) -> usize {
        self.mult_one
            + self.mult_minus_one
            + 2 * self.pairs.iter().map(|l| l.mult).sum::<usize>()
            + self.free.iter().map(|l| l.mult).sum::<usize>()
    }

    /// The pattern of `-x`.
    pub fn negated(&self) -> EigenPattern {
        let mut out = self.clone();
        std::mem::swap(&mut out.mult_one, &mut out.mult_minus_one);
        out
    }
}

// ---------------------------------------------------------------- validation

fn sort_label_mults(v: &mut [LabelMult]) {
    v.sort_by(|a, b| b.mult.cmp(&a.mult).then_with(|| a.label.cmp(&b.label)));
}

fn validate_semisimple(frame: Frame, raw: &EigenPattern, order: Option<OrderTag>) -> Result<EigenPattern> {
    let Frame { fam, n, p } = frame;
    if fam != Family::SL && !raw.free.is_empty() {
        return Err(Error::Malformed("unpaired eigenvalue labels are only allowed for SL".into()));
    }
    let mut seen = BTreeSet::new();
    for lm in raw.pairs.iter().chain(&raw.free) {
        if lm.mult == 0 {
            return Err(Error::Malformed(format!("label {} has multiplicity 0", lm.label)));
        }
        if lm.label.is_empty() || !seen.insert(lm.label.as_str()) {
            return Err(Error::Malformed(format!("label {:?} is empty or repeated", lm.label)));
        }
    }
    if raw.degree() != n {
        return Err(Error::DimensionMismatch(format!("multiplicities sum to {}, expected {n}", raw.degree())));
    }
    let (a, b) = (raw.mult_one, raw.mult_minus_one);
    if p == 2 && b > 0 {
        return Err(Error::ParityViolation("-1 = 1 in characteristic 2".into()));
    }
    match fam {
        Family::Sp => {
            if a % 2 == 1 || b % 2 == 1 {
                return Err(Error::ParityViolation("symplectic ±1-eigenspaces have even dimension".into()));
            }
        }
        Family::SO if n % 2 == 0 => {
            if a % 2 == 1 || b % 2 == 1 {
                return Err(Error::ParityViolation("±1-eigenspaces of SO(2m) have even dimension".into()));
            }
        }
        Family::SO if (a % 2 == 0 || b % 2 == 1) => {
            return Err(Error::ParityViolation("SO(2m+1) needs odd 1-eigenspace and even -1-eigenspace".into()));
        }
        _ => {}
    }
    let r = resolve(raw)?;
    for (label, &k) in &r.orders {
        if p != 0 && k % p == 0 {
            return Err(Error::OrderViolation(format!("{label} has order divisible by the characteristic")));
        }
    }
    let mut out = EigenPattern {
        mult_one: a,
        mult_minus_one: b,
        pairs: r.pairs,
        free: r.free,
        relations: r.orders.iter().map(|(l, &k)| (l.clone(), canonical_tag(l, k))).collect(),
        variant: raw.variant,
    };
    sort_label_mults(&mut out.pairs);
    sort_label_mults(&mut out.free);
    let eig = out.eigenvalues()?;
    if eig.len() < 2 {
        return Err(Error::CentralClass("a single eigenvalue is a scalar".into()));
    }
    if let Some(OrderTag::Prime(rr)) = order {
        check_semisimple_order(fam, &out, rr, p)?;
    }
    if order == Some(OrderTag::UnipotentChar0) {
        return Err(Error::OrderViolation("semisimple class tagged unipotent".into()));
    }
    let splits = fam == Family::SO && n % 2 == 0 && a == 0 && b == 0;
    if !splits {
        out.variant = Variant::Unspecified;
    }
    Ok(out)
}

fn check_semisimple_order(fam: Family, pat: &EigenPattern, r: u32, p: u32) -> Result<()> {
    if !is_prime(r) {
        return Err(Error::OrderViolation(format!("declared order {r} is not prime")));
    }
    if r == p {
        return Err(Error::OrderViolation("semisimple elements have order prime to p".into()));
    }
    if fam == Family::SL {
        return Ok(());
    }
    let orders = pat.label_orders();
    let (a, b) = (pat.mult_one, pat.mult_minus_one);
    for lm in &pat.pairs {
        let ok = match orders.get(&lm.label) {
            None => false,
            Some(&k) if r == 2 => k == 4 && a == 0 && b == 0,
            Some(&k) if a > 0 => k == r,
            Some(&k) if b > 0 => k == 2 * r,
            Some(&k) => k == r || k == 2 * r,
        };
        if !ok {
            return Err(Error::OrderViolation(format!(
                "eigenvalue {} is incompatible with order {r} modulo the center",
                lm.label
            )));
        }
    }
    if r % 2 == 1 && a > 0 && b > 0 {
        return Err(Error::OrderViolation(format!("1 and -1 cannot both occur at odd order {r}")));
    }
    Ok(())
}

fn admissible_partition(fam: Family, p: u32, parts: &[usize]) -> Result<()> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in parts {
        *counts.entry(x).or_insert(0) += 1;
    }
    match fam {
        Family::Sp if p != 2 => {
            if let Some((x, _)) = counts.iter().find(|(x, m)| *x % 2 == 1 && *m % 2 == 1) {
                return Err(Error::ParityViolation(format!("odd part {x} has odd multiplicity")));
            }
        }
        Family::SO if p != 2 => {
            if let Some((x, _)) = counts.iter().find(|(x, m)| *x % 2 == 0 && *m % 2 == 1) {
                return Err(Error::ParityViolation(format!("even part {x} has odd multiplicity")));
            }
        }
        _ => {}
    }
    Ok(())
}

/// Admissibility of a partition for a frame, without order constraints.
pub(crate) fn is_admissible(fam: Family, p: u32, parts: &[usize]) -> bool {
    admissible_partition(fam, p, parts).is_ok()
}

/// Checks a decoration for an `Sp` or `SO` frame in characteristic 2.
pub(crate) fn check_decoration(fam: Family, dec: &[Block]) -> Result<()> {
    let mut vcount: BTreeMap<usize, usize> = BTreeMap::new();
    for b in dec {
        match *b {
            Block::V(v) => {
                if v == 0 || v % 2 == 1 {
                    return Err(Error::ParityViolation(format!("V block of odd size {v}")));
                }
                *vcount.entry(v).or_insert(0) += 1;
            }
            Block::W { ell, mult } => {
                if ell == 0 || mult == 0 {
                    return Err(Error::Malformed("W block with zero size or multiplicity".into()));
                }
            }
        }
    }
    if let Some((v, _)) = vcount.iter().find(|(_, &a)| a > 2) {
        return Err(Error::ParityViolation(format!("V({v}) occurs more than twice")));
    }
    if fam == Family::SO && vcount.values().sum::<usize>() % 2 == 1 {
        return Err(Error::ParityViolation("SO needs an even number of V blocks".into()));
    }
    Ok(())
}

fn validate_unipotent(frame: Frame, raw: &UnipotentData, order: Option<OrderTag>) -> Result<(UnipotentData, OrderTag)> {
    let Frame { fam, n, p } = frame;
    let forms = fam != Family::SL;
    let mut out = UnipotentData { variant: raw.variant, ..Default::default() };
    if p == 2 && forms {
        let dec = raw.decoration.as_ref().ok_or_else(|| {
            Error::MissingDecoration("Sp/SO unipotent classes in characteristic 2 need V/W blocks".into())
        })?;
        check_decoration(fam, dec)?;
        let dec = canonical_decoration(dec);
        let parts = decoration_partition(&dec);
        if !raw.partition.is_empty() {
            let mut given = raw.partition.clone();
            given.sort_unstable_by(|a, b| b.cmp(a));
            if given != parts {
                return Err(Error::DimensionMismatch("partition disagrees with decoration".into()));
            }
        }
        out.partition = parts;
        out.decoration = Some(dec);
    } else {
        if raw.decoration.is_some() {
            return Err(Error::Malformed("decorations only apply to Sp/SO in characteristic 2".into()));
        }
        if raw.partition.contains(&0) {
            return Err(Error::Malformed("zero part".into()));
        }
        out.partition = raw.partition.clone();
        out.partition.sort_unstable_by(|a, b| b.cmp(a));
        admissible_partition(fam, p, &out.partition)?;
    }
    let total: usize = out.partition.iter().sum();
    if total != n {
        return Err(Error::DimensionMismatch(format!("parts sum to {total}, expected {n}")));
    }
    if out.partition.iter().all(|&x| x == 1) {
        return Err(Error::CentralClass("all Jordan blocks have size 1".into()));
    }
    if p > 0 && out.partition[0] > p as usize {
        return Err(Error::OrderViolation(format!("part {} exceeds p = {p}", out.partition[0])));
    }
    let tag = match (p, order) {
        (0, None | Some(OrderTag::UnipotentChar0)) => OrderTag::UnipotentChar0,
        (0, Some(OrderTag::Prime(r))) => {
            return Err(Error::OrderViolation(format!("unipotent classes in characteristic 0 have no order {r}")))
        }
        (_, None) => OrderTag::Prime(p),
        (_, Some(OrderTag::Prime(r))) if r == p => OrderTag::Prime(p),
        (_, Some(t)) => return Err(Error::OrderViolation(format!("unipotent class with order {t:?} but p = {p}"))),
    };
    let splits = fam == Family::SO
        && n % 2 == 0
        && match &out.decoration {
            Some(dec) => dec.iter().all(|b| matches!(b, Block::W { ell, .. } if ell % 2 == 0)),
            None => out.partition.iter().all(|x| x % 2 == 0),
        };
    if !splits {
        out.variant = Variant::Unspecified;
    }
    Ok((out, tag))
}

pub(crate) fn validate(frame: Frame, raw: &ClassDescriptor) -> Result<ClassDescriptor> {
    match &raw.kind {
        ClassKind::Semisimple(p) => Ok(ClassDescriptor {
            kind: ClassKind::Semisimple(validate_semisimple(frame, p, raw.order)?),
            order: raw.order,
        }),
        ClassKind::Unipotent(u) => {
            let (u, tag) = validate_unipotent(frame, u, raw.order)?;
            Ok(ClassDescriptor { kind: ClassKind::Unipotent(u), order: Some(tag) })
        }
    }
}

// ---------------------------------------------------------------- display

fn power(base: &str, m: usize) -> String {
    if m == 1 {
        base.to_string()
    } else {
        format!("{base}^{m}")
    }
}

impl fmt::Display for ClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<String> = Vec::new();
        match &self.kind {
            ClassKind::Semisimple(p) => {
                if p.mult_minus_one > 0 {
                    items.push(format!("-I{}", p.mult_minus_one));
                }
                if p.mult_one > 0 {
                    items.push(format!("I{}", p.mult_one));
                }
                for lm in &p.pairs {
                    items.push(format!("{}I{}", lm.label, lm.mult));
                    items.push(format!("{}^-1I{}", lm.label, lm.mult));
                }
                for lm in &p.free {
                    items.push(format!("{}I{}", lm.label, lm.mult));
                }
                write!(f, "({})", items.join(","))?;
                for (l, t) in &p.relations {
                    let _ = l;
                    write!(f, "[{t}]")?;
                }
            }
            ClassKind::Unipotent(u) => {
                let mut i = 0;
                while i < u.partition.len() {
                    let x = u.partition[i];
                    let m = u.partition[i..].iter().take_while(|&&y| y == x).count();
                    items.push(power(&format!("J{x}"), m));
                    i += m;
                }
                write!(f, "({})", items.join(","))?;
                if let Some(dec) = &u.decoration {
                    match u.as_type() {
                        Some(t) => write!(f, "[{t}]")?,
                        None => {
                            let s: Vec<String> = dec
                                .iter()
                                .map(|b| match *b {
                                    Block::V(v) => format!("V({v})"),
                                    Block::W { ell, mult } => power(&format!("W({ell})"), mult),
                                })
                                .collect();
                            write!(f, "[{}]", s.join("+"))?;
                        }
                    }
                }
            }
        }
        match self.variant() {
            Variant::Plus => write!(f, "+"),
            Variant::Minus => write!(f, "-"),
            Variant::Unspecified => Ok(()),
        }
    }
}
