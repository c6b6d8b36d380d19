//! Cyclic codes described by their defining sets.

mod bounds;
mod oracle;
mod small_distance;

pub use bounds::{
    bch_bound, ht_bound, verify_ht_template, BchBound, BchWitness, HtBound, HtSearch, HtWitness,
};
pub use oracle::{min_distance_oracle, min_weight_in_field, DEFAULT_ORACLE_CAP};
pub use small_distance::{
    distance_three_witness, has_distance_two, lowest_rate_d2_code, lowest_rate_d2_proof_set,
    lowest_rate_d3_code,
};

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::gf::{self, Elem, FieldCtx, GfError, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
    #[error("gcd(n = {n}, q = {q}) != 1")]
    NotCoprime { q: u64, n: u64 },
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("code length must be positive")]
    ZeroLength,
    #[error("representatives {0} and {1} lie in the same cyclotomic coset")]
    DuplicateCoset(u64, u64),
    #[error("search cap exceeded: {0}")]
    SearchCapExceeded(String),
    #[error("{count} codewords exceed the enumeration cap of {cap}")]
    TooManyCodewords { count: u128, cap: u128 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("code has no field instance: {0}")]
    NoFieldInstance(GfError),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// Cyclotomic coset `{ r q^j mod n }` in orbit order, starting at `r mod n`.
pub fn cyclotomic_coset(n: u64, q: u64, r: u64) -> Result<Vec<u64>, CyclicError> {
    if n == 0 {
        return Err(CyclicError::ZeroLength);
    }
    if arith::gcd(n, q) != 1 {
        return Err(CyclicError::NotCoprime { q, n });
    }
    let start = r % n;
    let mut out = vec![start];
    let mut x = (start * q) % n;
    while x != start {
        out.push(x);
        x = (x * q) % n;
    }
    Ok(out)
}

/// All cyclotomic cosets modulo `n`, ordered by their smallest element.
pub fn all_cosets(n: u64, q: u64) -> Result<Vec<Vec<u64>>, CyclicError> {
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for r in 0..n {
        if seen[r as usize] {
            continue;
        }
        let c = cyclotomic_coset(n, q, r)?;
        for &x in &c {
            seen[x as usize] = true;
        }
        out.push(c);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMethod {
    /// Exhaustive enumeration of all codewords.
    Oracle,
    /// gcd criterion for distance two.
    GcdTest,
    /// Explicit weight-3 codeword from a subfield element `β` with `1 + β + β^b = 0`.
    WeightThreeConstruction,
}

/// Minimum distance together with a codeword attaining it, as base-q digits
/// (coefficient of `x^0` first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceWitness {
    pub d_true: u64,
    pub codeword: Option<Vec<u32>>,
    pub method: DistanceMethod,
}

/// A cyclic code instantiated in a concrete field: the root of unity and
/// the generator polynomial `g(x) = ∏_{i ∈ D_C} (x - α^i)`.
#[derive(Debug, Clone)]
pub struct CodeField {
    pub field: Arc<FieldCtx>,
    pub alpha: Elem,
    pub generator: Poly,
}

/// A q-ary cyclic code of length `n` given by its defining set.
#[derive(Debug, Clone)]
pub struct CyclicCode {
    q: u64,
    n: u64,
    defining_set: Vec<u64>,
    coset_reps: Vec<u64>,
    code_field: Option<CodeField>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub q: u64,
    pub n: u64,
    pub k: u64,
    pub coset_reps: Vec<u64>,
    pub defining_set: Vec<u64>,
}

fn check_params(q: u64, n: u64) -> Result<(), CyclicError> {
    if n == 0 {
        return Err(CyclicError::ZeroLength);
    }
    if arith::prime_power(q).is_none() {
        return Err(CyclicError::NotPrimePower(q));
    }
    if arith::gcd(n, q) != 1 {
        return Err(CyclicError::NotCoprime { q, n });
    }
    Ok(())
}

impl CyclicCode {
    /// Code whose defining set is the union of the cosets of `coset_reps`.
    pub fn build(q: u64, n: u64, coset_reps: &[u64]) -> Result<Self, CyclicError> {
        check_params(q, n)?;
        let mut set = BTreeSet::new();
        let mut owner: Vec<Option<u64>> = vec![None; n as usize];
        for &r in coset_reps {
            let coset = cyclotomic_coset(n, q, r)?;
            if let Some(prev) = owner[(r % n) as usize] {
                return Err(CyclicError::DuplicateCoset(prev, r));
            }
            for &x in &coset {
                owner[x as usize] = Some(r);
                set.insert(x);
            }
        }
        Ok(Self::from_closed_set(q, n, set))
    }

    /// Code from an arbitrary index list (negative values allowed, reduced
    /// mod `n`). The set is closed under multiplication by `q`; the flag
    /// reports whether closure added anything.
    pub fn from_defining_set(q: u64, n: u64, indices: &[i64]) -> Result<(Self, bool), CyclicError> {
        check_params(q, n)?;
        let given: BTreeSet<u64> = indices
            .iter()
            .map(|&i| i.rem_euclid(n as i64) as u64)
            .collect();
        let mut closed = BTreeSet::new();
        for &i in &given {
            closed.extend(cyclotomic_coset(n, q, i)?);
        }
        let added = closed.len() != given.len();
        Ok((Self::from_closed_set(q, n, closed), added))
    }

    fn from_closed_set(q: u64, n: u64, set: BTreeSet<u64>) -> Self {
        let defining_set: Vec<u64> = set.into_iter().collect();
        let mut reps = Vec::new();
        let mut seen = BTreeSet::new();
        for &i in &defining_set {
            if seen.contains(&i) {
                continue;
            }
            reps.push(i);
            seen.extend(cyclotomic_coset(n, q, i).expect("parameters checked"));
        }
        let mut code = CyclicCode {
            q,
            n,
            defining_set,
            coset_reps: reps,
            code_field: None,
        };
        code.code_field = code.natural_field().and_then(|f| code.in_field(f)).ok();
        code
    }

    /// GF(q^s) with `s` the multiplicative order of `q` mod `n`.
    pub fn natural_field(&self) -> Result<Arc<FieldCtx>, CyclicError> {
        let (p, a) = arith::prime_power(self.q).expect("checked");
        let s = gf::min_extension_degree(self.q, self.n)?;
        gf::cached_field(p, a * s).map_err(CyclicError::NoFieldInstance)
    }

    /// Instantiates the code in `field`, which must contain GF(q) and the
    /// `n`-th roots of unity; `α = γ^((|F| - 1)/n)`.
    pub fn in_field(&self, field: Arc<FieldCtx>) -> Result<CodeField, CyclicError> {
        if !field.contains_subfield(self.q) {
            return Err(GfError::NotASubfield(self.q).into());
        }
        let alpha = gf::nth_root_of_unity(&field, self.n)?;
        let generator = Poly::from_roots(
            &field,
            self.defining_set
                .iter()
                .map(|&i| field.pow(alpha, i as i64)),
        );
        debug_assert!(generator
            .coeffs()
            .iter()
            .all(|&c| field.in_subfield(c, self.q)));
        Ok(CodeField {
            field,
            alpha,
            generator,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.n - self.defining_set.len() as u64
    }

    pub fn defining_set(&self) -> &[u64] {
        &self.defining_set
    }

    pub fn coset_reps(&self) -> &[u64] {
        &self.coset_reps
    }

    pub fn contains_zero(&self, i: u64) -> bool {
        self.defining_set.binary_search(&(i % self.n)).is_ok()
    }

    /// Membership bitmap of the defining set over `[0, n)`.
    pub fn zero_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.n as usize];
        for &i in &self.defining_set {
            mask[i as usize] = true;
        }
        mask
    }

    /// The instance in GF(q^s), absent when that field exceeds the table limit.
    pub fn code_field(&self) -> Option<&CodeField> {
        self.code_field.as_ref()
    }

    pub fn generator(&self) -> Option<&Poly> {
        self.code_field.as_ref().map(|c| &c.generator)
    }

    pub fn summary(&self) -> CodeSummary {
        CodeSummary {
            q: self.q,
            n: self.n,
            k: self.k(),
            coset_reps: self.coset_reps.clone(),
            defining_set: self.defining_set.clone(),
        }
    }
}

impl PartialEq for CyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.n == other.n && self.defining_set == other.defining_set
    }
}

impl CodeField {
    /// `m(x) g(x)` for a message of GF(q) digits (lowest degree first).
    pub fn encode(&self, q: u64, message: &[u32]) -> Result<Vec<Elem>, CyclicError> {
        let n = self.field_len();
        let coeffs = message
            .iter()
            .map(|&d| self.field.digit_to_elem(d, q))
            .collect::<Result<Vec<_>, _>>()?;
        let m = Poly::new(Arc::clone(&self.field), coeffs);
        let c = &m * &self.generator;
        if c.degree().is_some_and(|d| d as u64 >= n) {
            return Err(CyclicError::PreconditionViolated(
                "message longer than the code dimension".into(),
            ));
        }
        let mut out = c.into_coeffs();
        out.resize(n as usize, Elem::ZERO);
        Ok(out)
    }

    fn field_len(&self) -> u64 {
        self.field.elem_order(self.alpha)
    }

    /// `c(α^i)` for a word given as field elements.
    pub fn eval_at(&self, word: &[Elem], i: i64) -> Elem {
        let x = self.field.pow(self.alpha, i);
        word.iter().rev().fold(Elem::ZERO, |acc, &c| {
            self.field.add(self.field.mul(acc, x), c)
        })
    }
}
