//! Finite fields `GF(q)` with `q ≤ 1024`, table driven.

use crate::algebra_core::is_prime;
use crate::error::{Error, Result};
use std::sync::Arc;

pub type Elt = u16;

/// Largest field order supported.
pub const MAX_Q: u32 = 1024;

#[derive(Debug)]
pub struct Field {
    pub q: u32,
    pub p: u32,
    pub degree: u32,
    add: Vec<Elt>,
    neg: Vec<Elt>,
    /// `exp[k] = g^k` for a primitive element `g`, `k < q − 1`.
    exp: Vec<Elt>,
    log: Vec<u32>,
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut x, mut k) = (q, 0);
    while x % p == 0 {
        x /= p;
        k += 1;
    }
    (x == 1 && is_prime(p)).then_some((p, k))
}

/// Polynomial over `GF(p)` as base-`p` digits, least significant first.
fn digits(mut x: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Multiplies by `x` modulo the monic polynomial with low coefficients `low`.
fn times_x(a: &[u32], low: &[u32], p: u32) -> Vec<u32> {
    let k = a.len();
    let top = a[k - 1];
    let mut out = vec![0; k];
    for i in (1..k).rev() {
        out[i] = a[i - 1];
    }
    for i in 0..k {
        out[i] = (out[i] + (p - low[i]) * top) % p;
    }
    out
}

impl Field {
    pub fn new(q: u32) -> Result<Arc<Field>> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::Malformed(format!("{q} is not a prime power")))?;
        if q > MAX_Q {
            return Err(Error::Malformed(format!("GF({q}) exceeds the supported size {MAX_Q}")));
        }
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut neg = vec![0; n];
        for a in 0..q {
            let da = digits(a, p, k);
            neg[a as usize] = undigits(&da.iter().map(|&c| (p - c) % p).collect::<Vec<_>>(), p) as Elt;
            for b in 0..q {
                let db = digits(b, p, k);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * n + b as usize] = undigits(&s, p) as Elt;
            }
        }
        let (exp, log) = Self::primitive_tables(q, p, k);
        Ok(Arc::new(Field { q, p, degree: k, add, neg, exp, log }))
    }

    fn primitive_tables(q: u32, p: u32, k: u32) -> (Vec<Elt>, Vec<u32>) {
        let order = (q - 1) as usize;
        if k == 1 {
            // Smallest generator of the cyclic group GF(p)^×.
            for g in 2..q.max(3) {
                let mut exp = Vec::with_capacity(order);
                let mut x = 1u32;
                for _ in 0..order {
                    exp.push(x as Elt);
                    x = x * g % p;
                }
                if x == 1 && Self::distinct(&exp) {
                    return Self::with_log(q, exp);
                }
            }
            return Self::with_log(q, vec![1]);
        }
        for code in 0..q {
            let low = digits(code, p, k);
            if low[0] == 0 {
                continue;
            }
            let mut exp = Vec::with_capacity(order);
            let mut cur = digits(1, p, k);
            for _ in 0..order {
                exp.push(undigits(&cur, p) as Elt);
                cur = times_x(&cur, &low, p);
            }
            if undigits(&cur, p) == 1 && Self::distinct(&exp) {
                return Self::with_log(q, exp);
            }
        }
        unreachable!("every finite field has a primitive polynomial")
    }

    fn distinct(v: &[Elt]) -> bool {
        let mut s = v.to_vec();
        s.sort_unstable();
        s.dedup();
        s.len() == v.len()
    }

    fn with_log(q: u32, exp: Vec<Elt>) -> (Vec<Elt>, Vec<u32>) {
        let mut log = vec![u32::MAX; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        (exp, log)
    }

    #[inline]
    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        self.add[a as usize * self.q as usize + b as usize]
    }
    #[inline]
    pub fn neg(&self, a: Elt) -> Elt {
        self.neg[a as usize]
    }
    #[inline]
    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }
    #[inline]
    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[s as usize]
    }
    pub fn inv(&self, a: Elt) -> Elt {
        assert!(a != 0, "division by zero in GF({})", self.q);
        let l = self.log[a as usize];
        self.exp[((self.q - 1 - l) % (self.q - 1)) as usize]
    }
    pub fn pow(&self, a: Elt, e: u64) -> Elt {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let l = u64::from(self.log[a as usize]) * e % u64::from(self.q - 1);
        self.exp[l as usize]
    }
    /// Image of the integer `k` in the prime field.
    pub fn from_int(&self, k: i64) -> Elt {
        let p = i64::from(self.p);
        k.rem_euclid(p) as Elt
    }
    pub fn primitive(&self) -> Elt {
        self.exp.get(1).copied().unwrap_or(1)
    }
    /// An element of exact multiplicative order `k`, if `k | q − 1`.
    pub fn element_of_order(&self, k: u32) -> Option<Elt> {
        let order = self.q - 1;
        (k >= 1 && order.is_multiple_of(k)).then(|| self.exp[(order / k) as usize % order as usize])
    }
    pub fn order_of(&self, a: Elt) -> u32 {
        let l = self.log[a as usize];
        let n = self.q - 1;
        n / gcd(n, l)
    }
    /// Basis `1, g, g², …` of `GF(q)` over `GF(p)` used for generating sets.
    pub fn prime_basis(&self) -> Vec<Elt> {
        (0..self.degree).map(|i| self.pow(self.primitive(), u64::from(i))).collect()
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
