//! Finite fields GF(p^m) with log/antilog tables, and polynomials over them.
//!
//! Elements are encoded as integers in `[0, p^m)`: the base-`p` digits of the
//! integer are the coefficients of the element in the polynomial basis
//! `1, x, ..., x^(m-1)` modulo the field's primitive polynomial (digit `i` is
//! the coefficient of `x^i`). Zero has no logarithm and is handled by explicit
//! branches; every nonzero element is a power of the fixed generator `γ`,
//! which is the residue class of `x`.

mod euclid;
mod poly;

pub use euclid::{extended_euclid_step_sequence, EuclidStep, RemainderSequence};
pub use poly::Poly;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::arith;

/// Upper bound on `p^m` for table-backed fields.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    CompositeCharacteristic(u64),
    #[error("field of order {p}^{m} exceeds the table limit of 2^20 elements")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("gcd({q}, {n}) != 1")]
    NotCoprime { q: u64, n: u64 },
    #[error("order {n} does not divide the multiplicative group order {group}")]
    OrderDoesNotDivide { n: u64, group: u64 },
    #[error("polynomials belong to different fields")]
    FieldMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{0} is not a subfield order of this field")]
    NotASubfield(u64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// A field element in the polynomial-basis integer encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    /// Coefficients of the monic primitive polynomial, lowest degree first;
    /// `m + 1` entries with the last equal to 1.
    pub prim_poly: Vec<u32>,
}

/// A concrete finite field GF(p^m). Immutable after construction.
pub struct FieldCtx {
    spec: FieldSpec,
    order: u32,
    /// `exp[i] = γ^i` for `i` in `[0, 2(order-1))`; doubled so products of
    /// two logs index directly.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.spec.p, self.spec.m)
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for FieldCtx {}

/// Builds GF(p^m) with the lexicographically smallest primitive polynomial
/// (coefficients compared from the constant term upward).
pub fn build_field(p: u64, m: u32) -> Result<Arc<FieldCtx>, GfError> {
    FieldCtx::new(p, m).map(Arc::new)
}

/// Like [`build_field`] but memoized process-wide; fields are immutable, so
/// sharing one instance per `(p, m)` is safe.
pub fn cached_field(p: u64, m: u32) -> Result<Arc<FieldCtx>, GfError> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), Arc<FieldCtx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().expect("field cache poisoned").get(&(p, m)) {
        return Ok(Arc::clone(f));
    }
    let field = build_field(p, m)?;
    cache
        .lock()
        .expect("field cache poisoned")
        .entry((p, m))
        .or_insert_with(|| Arc::clone(&field));
    Ok(field)
}

/// Smallest `s` with `n | q^s - 1`, i.e. the multiplicative order of `q` mod `n`.
pub fn min_extension_degree(q: u64, n: u64) -> Result<u32, GfError> {
    arith::multiplicative_order(q, n)
        .map(|s| s as u32)
        .ok_or(GfError::NotCoprime { q, n })
}

/// Degree `r = lcm(s, u * s_l)` of the field holding both roots of unity.
pub fn combined_degree(s: u32, u: u32, s_l: u32) -> u32 {
    arith::lcm(s as u64, (u * s_l) as u64) as u32
}

/// An element of multiplicative order exactly `n`: `γ^((p^m - 1)/n)`.
pub fn nth_root_of_unity(ctx: &FieldCtx, n: u64) -> Result<Elem, GfError> {
    let group = ctx.group_order();
    if n == 0 || group % n != 0 {
        return Err(GfError::OrderDoesNotDivide { n, group });
    }
    Ok(ctx.gen_pow((group / n) as i64))
}

impl FieldCtx {
    fn new(p: u64, m: u32) -> Result<Self, GfError> {
        if !arith::is_prime(p) {
            return Err(GfError::CompositeCharacteristic(p));
        }
        if m == 0 {
            return Err(GfError::ZeroDegree);
        }
        let order = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(GfError::FieldTooLarge { p, m });
        }
        let order = order as u64;
        let prim_poly = find_primitive_poly(p, m, order);
        let p32 = p as u32;

        let group = (order - 1) as usize;
        let mut exp = vec![0u32; 2 * group.max(1)];
        let mut log = vec![0u32; order as usize];
        let mut digits = vec![0u32; m as usize];
        digits[0] = 1;
        for (i, slot) in exp.iter_mut().take(group).enumerate() {
            let value = encode_digits(&digits, p32);
            *slot = value;
            log[value as usize] = i as u32;
            mul_by_x(&mut digits, &prim_poly, p32);
        }
        for i in group..exp.len() {
            exp[i] = exp[i - group];
        }
        Ok(FieldCtx {
            spec: FieldSpec {
                p: p32,
                m,
                prim_poly,
            },
            order: order as u32,
            exp,
            log,
        })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn characteristic(&self) -> u32 {
        self.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.spec.m
    }

    /// Number of elements `p^m`.
    pub fn order(&self) -> u64 {
        self.order as u64
    }

    /// Order of the multiplicative group, `p^m - 1`.
    pub fn group_order(&self) -> u64 {
        self.order as u64 - 1
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.spec.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let p = self.spec.p;
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.spec.p == 2 {
            return a;
        }
        let p = self.spec.p;
        let mut x = a.0;
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        Elem(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(!a.is_zero(), "inverse of zero in {self:?}");
        let l = self.log[a.0 as usize];
        if l == 0 {
            return Elem::ONE;
        }
        Elem(self.exp[(self.group_order() as u32 - l) as usize])
    }

    /// `a / b`. Panics if `b` is zero.
    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    /// `a^e` for any integer exponent; `0^0 = 1`, negative powers of zero panic.
    pub fn pow(&self, a: Elem, e: i64) -> Elem {
        if a.is_zero() {
            assert!(e >= 0, "negative power of zero");
            return if e == 0 { Elem::ONE } else { Elem::ZERO };
        }
        let group = self.group_order() as i64;
        let l = self.log[a.0 as usize] as i64;
        let idx = ((l as i128 * e as i128).rem_euclid(group as i128)) as usize;
        Elem(self.exp[idx])
    }

    /// `γ^i` for the fixed generator `γ`.
    pub fn gen_pow(&self, i: i64) -> Elem {
        let group = self.group_order() as i64;
        Elem(self.exp[i.rem_euclid(group) as usize])
    }

    pub fn generator(&self) -> Elem {
        self.gen_pow(1)
    }

    /// Discrete log base `γ`; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.0 as usize])
    }

    /// The element `k · 1`, i.e. `k mod p` in the prime subfield.
    pub fn from_int(&self, k: i64) -> Elem {
        Elem(k.rem_euclid(self.spec.p as i64) as u32)
    }

    /// Multiplicative order of a nonzero element.
    pub fn elem_order(&self, a: Elem) -> u64 {
        let l = self.log(a).expect("order of zero") as u64;
        self.group_order() / arith::gcd(l, self.group_order())
    }

    pub fn contains_subfield(&self, q: u64) -> bool {
        match arith::prime_power(q) {
            Some((p, a)) => p == self.spec.p as u64 && self.spec.m % a == 0,
            None => false,
        }
    }

    /// Whether `a` lies in the subfield GF(q), tested by `a^q = a`.
    pub fn in_subfield(&self, a: Elem, q: u64) -> bool {
        self.pow(a, q as i64) == a
    }

    /// Elements of the subfield GF(q) in digit order (see [`FieldCtx::digit_to_elem`]).
    pub fn subfield_elements(&self, q: u64) -> Result<Vec<Elem>, GfError> {
        (0..q).map(|d| self.digit_to_elem(d as u32, q)).collect()
    }

    /// Maps a base-`q` digit to an element of the subfield GF(q).
    ///
    /// For prime `q` the digit is the constant `d · 1`. For `q = p^a`, `a > 1`,
    /// digit 0 maps to zero and digit `d ≥ 1` to `ζ^(d-1)`, where
    /// `ζ = γ^((p^m - 1)/(q - 1))` generates GF(q)^*; this encoding is tied to
    /// this particular field.
    pub fn digit_to_elem(&self, d: u32, q: u64) -> Result<Elem, GfError> {
        if !self.contains_subfield(q) {
            return Err(GfError::NotASubfield(q));
        }
        if d as u64 >= q {
            return Err(GfError::InvalidInput(format!(
                "digit {d} out of range for q = {q}"
            )));
        }
        if q == self.spec.p as u64 || d == 0 {
            return Ok(Elem(d));
        }
        let step = (self.group_order() / (q - 1)) as i64;
        Ok(self.gen_pow(step * (d as i64 - 1)))
    }

    /// Inverse of [`FieldCtx::digit_to_elem`]; `None` if `a` is outside GF(q).
    pub fn elem_to_digit(&self, a: Elem, q: u64) -> Option<u32> {
        if !self.contains_subfield(q) || !self.in_subfield(a, q) {
            return None;
        }
        if q == self.spec.p as u64 || a.is_zero() {
            return Some(a.0);
        }
        let step = self.group_order() / (q - 1);
        let l = self.log(a)? as u64;
        Some((l / step) as u32 + 1)
    }

    /// Iterator over all field elements in integer order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(Elem)
    }

    /// Multiplies by polynomial arithmetic modulo the primitive polynomial,
    /// bypassing the tables. Used to cross-check table construction.
    pub fn mul_reference(&self, a: Elem, b: Elem) -> Elem {
        let p = self.spec.p;
        let m = self.spec.m as usize;
        let da = decode_digits(a.0, p, m);
        let db = decode_digits(b.0, p, m);
        let mut prod = vec![0u32; 2 * m];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for deg in (m..2 * m).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            // x^m = -(c_0 + ... + c_{m-1} x^{m-1})
            for (k, &pc) in self.spec.prim_poly[..m].iter().enumerate() {
                let idx = deg - m + k;
                prod[idx] = (prod[idx] + (p - pc % p) % p * c) % p;
            }
            prod[deg] = 0;
        }
        Elem(encode_digits(&prod[..m], p))
    }
}

fn encode_digits(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

fn decode_digits(mut x: u32, p: u32, m: usize) -> Vec<u32> {
    let mut out = vec![0u32; m];
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

/// Replaces `digits` (an element mod `prim`) by `x · digits`.
fn mul_by_x(digits: &mut [u32], prim: &[u32], p: u32) {
    let m = digits.len();
    let top = digits[m - 1];
    for i in (1..m).rev() {
        digits[i] = digits[i - 1];
    }
    digits[0] = 0;
    if top != 0 {
        for i in 0..m {
            digits[i] = (digits[i] + (p - prim[i] % p) % p * top) % p;
        }
    }
}

/// Returns `x^e mod f` (as a digit vector) for monic `f` of degree `m`.
fn x_pow_mod(e: u64, prim: &[u32], p: u32) -> Vec<u32> {
    let m = prim.len() - 1;
    let mulmod = |a: &[u32], b: &[u32]| -> Vec<u32> {
        let mut prod = vec![0u64; 2 * m];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        for deg in (m..2 * m).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            for k in 0..m {
                let idx = deg - m + k;
                prod[idx] =
                    (prod[idx] + (p as u64 - prim[k] as u64 % p as u64) % p as u64 * c) % p as u64;
            }
            prod[deg] = 0;
        }
        prod[..m].iter().map(|&v| v as u32).collect()
    };
    let mut result = vec![0u32; m];
    result[0] = 1;
    let mut base = vec![0u32; m];
    if m == 1 {
        // x ≡ -c_0 modulo x + c_0
        base[0] = (p - prim[0] % p) % p;
    } else {
        base[1] = 1;
    }
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(&result, &base);
        }
        base = mulmod(&base, &base);
        e >>= 1;
    }
    result
}

fn is_one(digits: &[u32]) -> bool {
    digits[0] == 1 && digits[1..].iter().all(|&d| d == 0)
}

fn find_primitive_poly(p: u64, m: u32, order: u64) -> Vec<u32> {
    let group = order - 1;
    let factors = arith::prime_factors(group);
    let p32 = p as u32;
    let m = m as usize;
    // Enumerate (c_0, ..., c_{m-1}) lexicographically with c_0 most significant.
    let total = order;
    for idx in 0..total {
        let mut coeffs = vec![0u32; m + 1];
        let mut rest = idx;
        for i in (0..m).rev() {
            coeffs[i] = (rest % p) as u32;
            rest /= p;
        }
        coeffs[m] = 1;
        if coeffs[0] == 0 {
            continue;
        }
        if !is_one(&x_pow_mod(group, &coeffs, p32)) {
            continue;
        }
        if factors
            .iter()
            .all(|&f| !is_one(&x_pow_mod(group / f, &coeffs, p32)))
        {
            return coeffs;
        }
    }
    unreachable!("every finite field has a primitive polynomial")
}
