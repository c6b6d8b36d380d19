//! Syndrome decoding up to `⌊(d* - 1)/2⌋` errors with a non-zero-locator certificate.
//!
//! With `α_w = α^w`, the syndromes `S_j = r(α^(e + w j)) a(β^(j + t))`,
//! `j < μ - 1`, satisfy `S(x) ≡ Ω(x)/Λ(x) mod x^(μ-1)` where
//! `Λ(x) = ∏_{i ∈ E} f(x α_w^i)` and `f(x) = ∏_{z ∈ Z} (1 - x β^z)`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cyclic::{CodeField, CyclicCode, CyclicError};
use crate::gf::{self, extended_euclid_step_sequence, Elem, FieldCtx, GfError, Poly};
use crate::nzl::{self, NzlCertificate, NzlError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecodeError {
    #[error("combined field GF({p}^{m}) exceeds the table limit")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("certificate does not hold for this code: {0}")]
    InvalidCertificate(String),
    #[error("received word has length {got}, expected {expected}")]
    LengthMismatch { expected: u64, got: u64 },
    #[error("symbol {0} is not a digit of the base field")]
    InvalidDigit(u32),
    #[error("all syndromes are zero")]
    ZeroSyndrome,
    #[error("error locator is inconsistent: {0}")]
    InconsistentLocator(String),
    #[error("error evaluator denominator vanishes at position {0}")]
    EvaluatorSingular(u64),
    #[error("error value at position {0} is outside the base field")]
    ValueOutsideBaseField(u64),
    #[error("corrected word is not a codeword")]
    NotACodeword,
    #[error(transparent)]
    Gf(GfError),
    #[error(transparent)]
    Nzl(#[from] NzlError),
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
}

impl From<GfError> for DecodeError {
    fn from(e: GfError) -> Self {
        match e {
            GfError::FieldTooLarge { p, m } => DecodeError::FieldTooLarge { p, m },
            other => DecodeError::Gf(other),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecodeStatus {
    Success,
    Failure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeResult {
    pub status: DecodeStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    /// Error positions in increasing order.
    pub positions: Vec<u64>,
    /// Error values as base-field digits, aligned with `positions`.
    pub values: Vec<u32>,
    /// The corrected codeword; absent on failure.
    pub corrected: Option<Vec<u32>>,
}

impl DecodeResult {
    pub fn is_success(&self) -> bool {
        self.status == DecodeStatus::Success
    }

    fn failure(err: DecodeError) -> Self {
        DecodeResult {
            status: DecodeStatus::Failure,
            reason: Some(err.to_string()),
            positions: Vec::new(),
            values: Vec::new(),
            corrected: None,
        }
    }
}

/// Everything needed to decode one code with one certificate; immutable.
#[derive(Debug, Clone)]
pub struct DecoderContext {
    code: CyclicCode,
    cert: NzlCertificate,
    code_field: CodeField,
    beta: Elem,
    alpha_w: Elem,
    /// `a(β^(j + t))` for `j = 0, ..., μ - 2`.
    a_values: Vec<Elem>,
    f: Poly,
    h: Poly,
    kappa: u64,
    support: Vec<u64>,
}

impl DecoderContext {
    /// Builds GF(q^r) with `r = lcm(s, u s_l)`, `α` of order `n`, `β` of
    /// order `n_l`, the locator codeword in that field, `f`, `h` and `κ = min Z`.
    pub fn build(code: &CyclicCode, cert: &NzlCertificate) -> Result<Self, DecodeError> {
        let loc = &cert.locator;
        if loc.q != code.q() {
            return Err(DecodeError::InvalidCertificate(format!(
                "locator is paired with q = {}, code has q = {}",
                loc.q,
                code.q()
            )));
        }
        if !nzl::verify_certificate(code.defining_set(), code.n(), cert) {
            return Err(DecodeError::InvalidCertificate(
                "covering condition or d* does not check".into(),
            ));
        }
        let q = code.q();
        let (p, a) = arith::prime_power(q).expect("validated code");
        let s = gf::min_extension_degree(q, code.n())?;
        let s_l = gf::min_extension_degree(loc.q_l(), loc.n_l)?;
        let r = gf::combined_degree(s, loc.u, s_l);
        let field = gf::cached_field(p, a * r)?;
        let code_field = code.in_field(Arc::clone(&field))?;
        let beta = gf::nth_root_of_unity(&field, loc.n_l)?;
        let alpha_w = field.pow(code_field.alpha, cert.w as i64);

        let (support, coeffs) = loc.codeword_in(&field)?;
        let kappa = support[0];
        // Shifted locator a(β^t x): coefficients a_z β^(z t).
        let shifted: Vec<Elem> = support
            .iter()
            .zip(&coeffs)
            .map(|(&z, &c)| field.mul(c, field.pow(beta, (z * cert.t) as i64)))
            .collect();
        let one_minus = |z: u64| {
            Poly::new(
                Arc::clone(&field),
                vec![Elem::ONE, field.neg(field.pow(beta, z as i64))],
            )
        };
        let f = support
            .iter()
            .fold(Poly::one(&field), |acc, &z| &acc * &one_minus(z));
        let mut h = Poly::zero(&field);
        for (k, &ak) in shifted.iter().enumerate() {
            let term = support
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .fold(Poly::constant(&field, ak), |acc, (_, &z)| {
                    &acc * &one_minus(z)
                });
            h = &h + &term;
        }

        let a_values = (0..cert.mu - 1)
            .map(|j| {
                let x = field.pow(beta, (j + cert.t) as i64);
                support
                    .iter()
                    .zip(&coeffs)
                    .fold(Elem::ZERO, |acc, (&z, &c)| {
                        field.add(acc, field.mul(c, field.pow(x, z as i64)))
                    })
            })
            .collect();

        let ctx = DecoderContext {
            code: code.clone(),
            cert: cert.clone(),
            code_field,
            beta,
            alpha_w,
            a_values,
            f,
            h,
            kappa,
            support,
        };
        ctx.check_invariants()?;
        Ok(ctx)
    }

    fn check_invariants(&self) -> Result<(), DecodeError> {
        let field = self.field();
        let n = self.code.n();
        if field.elem_order(self.code_field.alpha) != n
            || field.elem_order(self.beta) != self.cert.locator.n_l
        {
            return Err(DecodeError::InvalidCertificate("root orders".into()));
        }
        let root = field.pow(self.beta, -(self.kappa as i64));
        if !self.f.eval(root).is_zero()
            || self.f.degree() != Some(self.cert.locator.d_l as usize)
            || self
                .h
                .degree()
                .is_some_and(|d| d as u64 >= self.cert.locator.d_l)
        {
            return Err(DecodeError::InvalidCertificate(
                "locator polynomials".into(),
            ));
        }
        // Distinct positions must map to distinct candidate roots.
        let mut gammas: Vec<u32> = (0..n).map(|p| self.gamma(p).0).collect();
        gammas.sort_unstable();
        gammas.dedup();
        if gammas.len() as u64 != n {
            return Err(DecodeError::InvalidCertificate(
                "position map is not injective".into(),
            ));
        }
        Ok(())
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.code_field.field
    }

    pub fn code(&self) -> &CyclicCode {
        &self.code
    }

    pub fn certificate(&self) -> &NzlCertificate {
        &self.cert
    }

    pub fn alpha(&self) -> Elem {
        self.code_field.alpha
    }

    pub fn beta(&self) -> Elem {
        self.beta
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn h(&self) -> &Poly {
        &self.h
    }

    pub fn kappa(&self) -> u64 {
        self.kappa
    }

    /// Support `Z` of the locator codeword.
    pub fn support(&self) -> &[u64] {
        &self.support
    }

    pub fn a_values(&self) -> &[Elem] {
        &self.a_values
    }

    /// `⌊(d* - 1)/2⌋`.
    pub fn radius(&self) -> u64 {
        (self.cert.d_star - 1) / 2
    }

    /// `γ_p = β^(-κ) α_w^(-p)`.
    pub fn gamma(&self, p: u64) -> Elem {
        let field = self.field();
        field.mul(
            field.pow(self.beta, -(self.kappa as i64)),
            field.pow(self.alpha_w, -(p as i64)),
        )
    }

    /// Encodes base-field message digits (`k` of them, lowest degree first).
    pub fn encode(&self, message: &[u32]) -> Result<Vec<u32>, DecodeError> {
        if message.len() as u64 != self.code.k() {
            return Err(DecodeError::LengthMismatch {
                expected: self.code.k(),
                got: message.len() as u64,
            });
        }
        let word = self.code_field.encode(self.code.q(), message)?;
        Ok(self.to_digits(&word).expect("codeword over the base field"))
    }

    fn to_elems(&self, word: &[u32]) -> Result<Vec<Elem>, DecodeError> {
        let n = self.code.n();
        if word.len() as u64 != n {
            return Err(DecodeError::LengthMismatch {
                expected: n,
                got: word.len() as u64,
            });
        }
        let q = self.code.q();
        word.iter()
            .map(|&d| {
                if d as u64 >= q {
                    return Err(DecodeError::InvalidDigit(d));
                }
                Ok(self.field().digit_to_elem(d, q)?)
            })
            .collect()
    }

    fn to_digits(&self, word: &[Elem]) -> Option<Vec<u32>> {
        word.iter()
            .map(|&c| self.field().elem_to_digit(c, self.code.q()))
            .collect()
    }

    /// Whether every defining-set syndrome `c(α^i)` vanishes.
    pub fn is_codeword(&self, word: &[u32]) -> Result<bool, DecodeError> {
        let elems = self.to_elems(word)?;
        Ok(self.vanishes_on_defining_set(&elems))
    }

    fn vanishes_on_defining_set(&self, word: &[Elem]) -> bool {
        self.code
            .defining_set()
            .iter()
            .all(|&i| self.code_field.eval_at(word, i as i64).is_zero())
    }

    /// `S(x) = Σ_{j < μ-1} r(α^(e + w j)) a(β^(j + t)) x^j`.
    pub fn syndromes(&self, received: &[u32]) -> Result<Poly, DecodeError> {
        let r = self.to_elems(received)?;
        Ok(self.syndromes_of(&r))
    }

    fn syndromes_of(&self, r: &[Elem]) -> Poly {
        let field = self.field();
        let coeffs = self
            .a_values
            .iter()
            .enumerate()
            .map(|(j, &a)| {
                let exp = (self.cert.e + self.cert.w * j as u64) as i64;
                field.mul(self.code_field.eval_at(r, exp), a)
            })
            .collect();
        Poly::new(Arc::clone(field), coeffs)
    }

    /// Positions `p` with `Λ(γ_p) = 0`; their number times `d_l` must equal `deg Λ`.
    pub fn find_error_positions(&self, lambda: &Poly) -> Result<Vec<u64>, DecodeError> {
        let positions: Vec<u64> = (0..self.code.n())
            .filter(|&p| lambda.eval(self.gamma(p)).is_zero())
            .collect();
        let deg = lambda.degree().unwrap_or(0) as u64;
        if positions.len() as u64 * self.cert.locator.d_l != deg {
            return Err(DecodeError::InconsistentLocator(format!(
                "{} roots found for a locator of degree {deg}",
                positions.len()
            )));
        }
        Ok(positions)
    }

    /// Error values by the generalized Forney formula
    /// `e_p = Ω(γ_p) α_w^p f'(β^(-κ)) / (Λ'(γ_p) α^(p e) h(β^(-κ)))`,
    /// returned as base-field digits.
    ///
    /// The factor `α_w^p` comes from differentiating `f(x α_w^p)`.
    pub fn error_values(
        &self,
        lambda: &Poly,
        omega: &Poly,
        positions: &[u64],
    ) -> Result<Vec<u32>, DecodeError> {
        let field = self.field();
        let root = field.pow(self.beta, -(self.kappa as i64));
        let f_prime = self.f.derivative().eval(root);
        let h_root = self.h.eval(root);
        let d_lambda = lambda.derivative();
        positions
            .iter()
            .map(|&p| {
                let g = self.gamma(p);
                let den = field.mul(
                    field.mul(
                        d_lambda.eval(g),
                        field.pow(self.alpha(), (p * self.cert.e) as i64),
                    ),
                    h_root,
                );
                if den.is_zero() || f_prime.is_zero() {
                    return Err(DecodeError::EvaluatorSingular(p));
                }
                let num = field.mul(
                    field.mul(omega.eval(g), field.pow(self.alpha_w, p as i64)),
                    f_prime,
                );
                let v = field.div(num, den);
                if v.is_zero() {
                    return Err(DecodeError::EvaluatorSingular(p));
                }
                field
                    .elem_to_digit(v, self.code.q())
                    .ok_or(DecodeError::ValueOutsideBaseField(p))
            })
            .collect()
    }

    /// Bounded-distance decoding. Malformed input is an `Err`; decoding
    /// failures are reported in the result.
    pub fn decode(&self, received: &[u32]) -> Result<DecodeResult, DecodeError> {
        let r = self.to_elems(received)?;
        let s = self.syndromes_of(&r);
        if s.is_zero() {
            if !self.vanishes_on_defining_set(&r) {
                return Ok(DecodeResult::failure(DecodeError::NotACodeword));
            }
            return Ok(DecodeResult {
                status: DecodeStatus::Success,
                reason: None,
                positions: Vec::new(),
                values: Vec::new(),
                corrected: Some(received.to_vec()),
            });
        }
        Ok(match self.correct(received, &s) {
            Ok(res) => res,
            Err(e) => DecodeResult::failure(e),
        })
    }

    fn correct(&self, received: &[u32], s: &Poly) -> Result<DecodeResult, DecodeError> {
        let (lambda, omega) = solve_key_equation(s, self.cert.mu)?;
        let positions = self.find_error_positions(&lambda)?;
        if positions.is_empty() {
            return Err(DecodeError::InconsistentLocator(
                "no error positions".into(),
            ));
        }
        let values = self.error_values(&lambda, &omega, &positions)?;
        let q = self.code.q();
        let field = self.field();
        let mut corrected = received.to_vec();
        for (&p, &v) in positions.iter().zip(&values) {
            let r = field.digit_to_elem(corrected[p as usize], q)?;
            let e = field.digit_to_elem(v, q)?;
            corrected[p as usize] = field
                .elem_to_digit(field.sub(r, e), q)
                .expect("base field is closed");
        }
        if !self.is_codeword(&corrected)? {
            return Err(DecodeError::NotACodeword);
        }
        Ok(DecodeResult {
            status: DecodeStatus::Success,
            reason: None,
            positions,
            values,
            corrected: Some(corrected),
        })
    }
}

/// Solves `S(x) Λ(x) ≡ Ω(x) mod x^(μ-1)` by the extended Euclidean algorithm
/// on `(x^(μ-1), S)`, stopping at the first remainder of degree below
/// `(μ - 1)/2`; `Λ` is normalized to `Λ(0) = 1`.
///
/// With `t ≤ ⌊(d* - 1)/2⌋` errors, `deg Λ = t d_l` and
/// `2 t d_l ≤ (d* - 1) d_l < μ`, so `2 deg Λ ≤ μ - 1` and the solution is unique.
pub fn solve_key_equation(s: &Poly, mu: u64) -> Result<(Poly, Poly), DecodeError> {
    if s.is_zero() {
        return Err(DecodeError::ZeroSyndrome);
    }
    let field = s.field();
    let len = (mu - 1) as usize;
    let modulus = Poly::monomial(field, Elem::ONE, len);
    let stop = len.div_ceil(2);
    let (remainder, cofactor) = extended_euclid_step_sequence(&modulus, s, stop)?;
    let c0 = cofactor.coeff(0);
    if c0.is_zero() {
        return Err(DecodeError::InconsistentLocator("Λ(0) = 0".into()));
    }
    let norm = field.inv(c0);
    let lambda = cofactor.scale(norm);
    let omega = remainder.scale(norm);
    if omega.degree() >= lambda.degree() {
        return Err(DecodeError::InconsistentLocator("deg Ω ≥ deg Λ".into()));
    }
    Ok((lambda, omega))
}
