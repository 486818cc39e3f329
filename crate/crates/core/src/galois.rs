//! Exact arithmetic in GF(p^m) for small prime powers.
//!
//! Elements are dense integer labels. A label `e` in `[0, q)` encodes the
//! polynomial `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` with `e = sum c_i p^i`
//! (little-endian base p). Label 0 is the additive identity and label 1 the
//! multiplicative identity. This labeling is the one used by every code file
//! and construction in the crate.
//!
//! The modulus for each `(p, m)` is the first monic irreducible polynomial of
//! degree `m` when the lower coefficients are ordered by their base-p label.
//! For `m = 1` this is `x`, so GF(p) labels coincide with integers mod p.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest field order accepted unless a caller asks for a different cap.
pub const DEFAULT_FIELD_CAP: u32 = 1 << 16;

/// Orders up to this size get a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NonPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{m} exceeds the cap {cap}")]
    CapExceeded { p: u32, m: u32, cap: u32 },
    #[error("no irreducible polynomial of degree {m} over GF({p})")]
    NoModulusAvailable { p: u32, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("label {label} is out of range for GF({q})")]
    LabelOutOfRange { label: u32, q: u32 },
}

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, little-endian, length m + 1.
    modulus: Vec<u32>,
    /// exp[i] = g^i for a fixed primitive element g, i in [0, q-1).
    exp: Vec<u32>,
    /// log[e] for e != 0; log[0] is unused.
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// A finite field GF(p^m) with the canonical labeling. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl Field {
    /// Builds GF(p^m) under the default order cap.
    pub fn new(p: u32, m: u32) -> Result<Self, FieldError> {
        Self::with_cap(p, m, DEFAULT_FIELD_CAP)
    }

    pub fn with_cap(p: u32, m: u32, cap: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u64)
            .checked_pow(m)
            .filter(|&q| q <= cap as u64)
            .ok_or(FieldError::CapExceeded { p, m, cap })? as u32;
        let modulus = lowest_irreducible(p, m).ok_or(FieldError::NoModulusAvailable { p, m })?;
        Ok(Field(Arc::new(build_tables(p, m, q, modulus))))
    }

    /// Builds the field of order `q`, which must be a prime power.
    pub fn from_order(q: u32) -> Result<Self, FieldError> {
        Self::from_order_with_cap(q, DEFAULT_FIELD_CAP)
    }

    pub fn from_order_with_cap(q: u32, cap: u32) -> Result<Self, FieldError> {
        let (p, m) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        Self::with_cap(p, m, cap)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients, little-endian, including the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_same(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }

    pub fn element(&self, label: u32) -> Result<FieldElement, FieldError> {
        self.check(label)?;
        Ok(FieldElement { field: self.clone(), label })
    }

    pub fn check(&self, label: u32) -> Result<(), FieldError> {
        if label < self.0.q {
            Ok(())
        } else {
            Err(FieldError::LabelOutOfRange { label, q: self.0.q })
        }
    }

    /// Base-p coefficient vector of a label, little-endian, length m.
    pub fn coefficients(&self, label: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.0.m as usize);
        let mut e = label;
        for _ in 0..self.0.m {
            out.push(e % self.0.p);
            e /= self.0.p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let t = &self.0;
        match &t.add {
            Some(table) => table[(a * t.q + b) as usize],
            None => digitwise(t.p, t.m, a, b, |x, y| (x + y) % t.p),
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &self.0;
        let s = (t.log[a as usize] + t.log[b as usize]) % (t.q - 1);
        t.exp[s as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let t = &self.0;
        let l = t.log[a as usize];
        Ok(t.exp[((t.q - 1 - l) % (t.q - 1)) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &self.0;
        let l = (t.log[a as usize] as u64 * e) % (t.q as u64 - 1);
        t.exp[l as usize]
    }

    /// Inner product of two label vectors. Callers guarantee equal lengths.
    pub fn dot_labels(&self, v: &[u32], w: &[u32]) -> u32 {
        v.iter()
            .zip(w)
            .fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    /// Iterator over all labels `0..q`.
    pub fn labels(&self) -> std::ops::Range<u32> {
        0..self.0.q
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.0.p)
            .field("m", &self.0.m)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.is_same(other)
    }
}

impl Eq for Field {}

/// A field element carrying its field, for checked arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    label: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn label(&self) -> u32 {
        self.label
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
}

pub fn arith(a: &FieldElement, b: &FieldElement, op: Op) -> Result<FieldElement, FieldError> {
    if !a.field.is_same(&b.field) {
        return Err(FieldError::FieldMismatch);
    }
    let f = &a.field;
    let label = match op {
        Op::Add => f.add(a.label, b.label),
        Op::Sub => f.sub(a.label, b.label),
        Op::Mul => f.mul(a.label, b.label),
        Op::Div => f.div(a.label, b.label)?,
    };
    Ok(FieldElement { field: f.clone(), label })
}

/// Computes `sum v_i w_i`. An empty pair of vectors needs an explicit field,
/// so the zero of `field` is returned in that case.
pub fn dot(field: &Field, v: &[FieldElement], w: &[FieldElement]) -> Result<FieldElement, FieldError> {
    if v.len() != w.len() {
        return Err(FieldError::LengthMismatch(v.len(), w.len()));
    }
    let mut acc = 0;
    for (a, b) in v.iter().zip(w) {
        if !a.field.is_same(field) || !b.field.is_same(field) {
            return Err(FieldError::FieldMismatch);
        }
        acc = field.add(acc, field.mul(a.label, b.label));
    }
    Ok(FieldElement { field: field.clone(), label: acc })
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, m)` with `q = p^m` when `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// All prime powers in `[lo, hi]`, ascending. Sieve of primes up to `hi`,
/// then every power of each prime that lands in range.
pub fn prime_powers_in(lo: u32, hi: u32) -> Vec<u32> {
    if hi < 2 {
        return Vec::new();
    }
    let n = hi as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
        let mut pw = i as u64;
        while pw <= hi as u64 {
            if pw >= lo as u64 {
                out.push(pw as u32);
            }
            pw *= i as u64;
        }
    }
    out.sort_unstable();
    out
}

fn digitwise(p: u32, m: u32, a: u32, b: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
    let (mut a, mut b) = (a, b);
    let mut out = 0;
    let mut place = 1;
    for _ in 0..m {
        out += f(a % p, b % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn build_tables(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Tables {
    let neg: Vec<u32> = (0..q).map(|a| digitwise(p, m, a, 0, |x, _| (p - x) % p)).collect();
    let add = (q <= ADD_TABLE_LIMIT).then(|| {
        let mut t = Vec::with_capacity((q * q) as usize);
        for a in 0..q {
            for b in 0..q {
                t.push(digitwise(p, m, a, b, |x, y| (x + y) % p));
            }
        }
        t
    });

    let mulmod = |a: u32, b: u32| poly_mulmod_label(p, m, &modulus, a, b);
    let order = q - 1;
    let factors = prime_factors(order);
    let powmod = |g: u32, mut e: u32| {
        let (mut base, mut acc) = (g, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            e >>= 1;
        }
        acc
    };
    // q = 2 has the trivial group; any nonzero element generates it.
    let generator = (1..q)
        .find(|&g| factors.iter().all(|&r| powmod(g, order / r) != 1))
        .expect("the multiplicative group of a finite field is cyclic");

    let mut exp = Vec::with_capacity(order as usize);
    let mut log = vec![0u32; q as usize];
    let mut x = 1u32;
    for i in 0..order {
        exp.push(x);
        log[x as usize] = i;
        x = mulmod(x, generator);
    }
    Tables { p, m, q, modulus, exp, log, neg, add }
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn poly_mulmod_label(p: u32, m: u32, modulus: &[u32], a: u32, b: u32) -> u32 {
    let da = label_to_poly(p, m, a);
    let db = label_to_poly(p, m, b);
    let mut prod = vec![0u32; (2 * m) as usize];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let r = poly_rem(p, prod, modulus);
    r.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn label_to_poly(p: u32, m: u32, mut e: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let c = e % p;
            e /= p;
            c
        })
        .collect()
}

/// Remainder of `a` modulo the monic polynomial `b`, both little-endian.
/// The result has exactly `deg b` coefficients.
fn poly_rem(p: u32, mut a: Vec<u32>, b: &[u32]) -> Vec<u32> {
    let db = b.len() - 1;
    while a.len() > db {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let shift = a.len() - db;
            for (i, &c) in b[..db].iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - (lead * c) % p) % p;
            }
        }
    }
    a.resize(db, 0);
    a
}

fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return true;
    }
    // A reducible f has a monic factor of degree at most deg / 2.
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for tail in 0..count {
            let mut g = label_to_poly(p, d as u32, tail as u32);
            g.push(1);
            if poly_rem(p, f.to_vec(), &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn lowest_irreducible(p: u32, m: u32) -> Option<Vec<u32>> {
    let count = (p as u64).pow(m);
    (0..count).find_map(|tail| {
        let mut f = label_to_poly(p, m, tail as u32);
        f.push(1);
        is_irreducible(p, &f).then_some(f)
    })
}
