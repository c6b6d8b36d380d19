//! Non-zero-locator codes: construction, minimum-weight codewords and candidates.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::NzlError;
use crate::arith;
use crate::cyclic::{self, all_cosets, CyclicCode};
use crate::gf::{self, Elem, FieldCtx, Poly};

/// Enumeration cap for locator minimum-weight searches.
pub const LOCATOR_SEARCH_CAP: u128 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocatorKind {
    /// Length one, `a(x) = 1`: plain consecutive-run bound.
    Trivial,
    Spc,
    Rs,
    Hamming,
    LowestRateD2,
    LowestRateD3,
    Custom,
}

/// A cyclic code `L` over GF(q^u) used as non-zero-locator code.
///
/// `support` and `coeffs` describe a minimum-weight codeword in the natural
/// field of the locator (the smallest extension of GF(q^u) with `n_l`-th
/// roots of unity); `coeffs` uses that field's element encoding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocatorSpec {
    pub kind: LocatorKind,
    /// Field size of the codes the locator is paired with.
    pub q: u64,
    /// Extension degree: the locator is defined over GF(q^u).
    pub u: u32,
    pub n_l: u64,
    pub defining_set: Vec<u64>,
    pub d_l: u64,
    pub support: Vec<u64>,
    pub coeffs: Vec<u32>,
}

fn q_pow(q: u64, u: u32) -> Result<u64, NzlError> {
    q.checked_pow(u)
        .filter(|&v| v <= gf::MAX_FIELD_ORDER)
        .ok_or_else(|| NzlError::InvalidLocator(format!("{q}^{u} exceeds the field table limit")))
}

/// Splits a codeword into its support and nonzero coefficients.
fn support_of(word: &[Elem]) -> (Vec<u64>, Vec<Elem>) {
    word.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, &c)| (i as u64, c))
        .unzip()
}

impl LocatorSpec {
    pub fn k_l(&self) -> u64 {
        self.n_l - self.defining_set.len() as u64
    }

    /// `q^u`.
    pub fn q_l(&self) -> u64 {
        self.q.pow(self.u)
    }

    /// The locator of length one with `a(x) = 1`.
    pub fn trivial(q: u64) -> Self {
        LocatorSpec {
            kind: LocatorKind::Trivial,
            q,
            u: 1,
            n_l: 1,
            defining_set: Vec::new(),
            d_l: 1,
            support: vec![0],
            coeffs: vec![1],
        }
    }

    /// Single parity check code of length `n_l`, `a(x) = 1 - x`. It is placed
    /// over the smallest GF(q^u), `u ≤ max_u`, containing the `n_l`-th roots
    /// of unity, and over GF(q) otherwise.
    pub fn spc(q: u64, n_l: u64, max_u: u32) -> Result<Self, NzlError> {
        if n_l < 2 || arith::gcd(n_l, q) != 1 {
            return Err(NzlError::InvalidLocator(format!(
                "single parity check length {n_l} must be at least 2 and coprime to q = {q}"
            )));
        }
        let ord = arith::multiplicative_order(q, n_l).expect("coprime") as u32;
        let u = if ord <= max_u { ord } else { 1 };
        let (p, _) = arith::prime_power(q).ok_or(NzlError::InvalidLocator(format!("q = {q}")))?;
        Ok(LocatorSpec {
            kind: LocatorKind::Spc,
            q,
            u,
            n_l,
            defining_set: vec![0],
            d_l: 2,
            support: vec![0, 1],
            coeffs: vec![1, (p - 1) as u32],
        })
    }

    /// Cyclic Reed–Solomon code RS(q^u; n_l, k_l, δ = 0) with `n_l | q^u - 1`;
    /// defining set `{0, ..., n_l - k_l - 1}` and `a(x) = g_0(x)`.
    pub fn rs(q: u64, u: u32, n_l: u64, k_l: u64) -> Result<Self, NzlError> {
        let ql = q_pow(q, u)?;
        if n_l < 2 || (ql - 1) % n_l != 0 || k_l == 0 || k_l >= n_l {
            return Err(NzlError::InvalidLocator(format!(
                "RS({ql}; {n_l}, {k_l}) needs n_l | q^u - 1 and 0 < k_l < n_l"
            )));
        }
        let (p, a) = arith::prime_power(q).ok_or(NzlError::InvalidLocator(format!("q = {q}")))?;
        let field = gf::cached_field(p, a * u)?;
        let mut spec = LocatorSpec {
            kind: LocatorKind::Rs,
            q,
            u,
            n_l,
            defining_set: (0..n_l - k_l).collect(),
            d_l: n_l - k_l + 1,
            support: Vec::new(),
            coeffs: Vec::new(),
        };
        let (support, coeffs) = spec.codeword_in(&field)?;
        spec.support = support;
        spec.coeffs = coeffs.iter().map(|c| c.0).collect();
        Ok(spec)
    }

    /// Any cyclic code over GF(q^u) given by defining-set indices; the set is
    /// closed under multiplication by `q^u` and `d_l` is computed exhaustively.
    pub fn cyclic(
        kind: LocatorKind,
        q: u64,
        u: u32,
        n_l: u64,
        indices: &[i64],
    ) -> Result<Self, NzlError> {
        let ql = q_pow(q, u)?;
        let (code, _) = CyclicCode::from_defining_set(ql, n_l, indices)?;
        if code.k() == 0 {
            return Err(NzlError::InvalidLocator(
                "locator code has dimension zero".into(),
            ));
        }
        let cf = code
            .code_field()
            .ok_or_else(|| NzlError::InvalidLocator(format!("no field for length {n_l}")))?;
        let (d_l, word) = cyclic::min_weight_in_field(&code, cf, LOCATOR_SEARCH_CAP)
            .map_err(|e| NzlError::SearchCapExceeded(e.to_string()))?;
        let (support, coeffs) = support_of(&word);
        Ok(LocatorSpec {
            kind,
            q,
            u,
            n_l,
            defining_set: code.defining_set().to_vec(),
            d_l,
            support,
            coeffs: coeffs.iter().map(|c| c.0).collect(),
        })
    }

    /// Minimum-weight codeword `(Z, a_z)` of the locator instantiated in
    /// `field` with `β = γ^((|F| - 1)/n_l)`. Checked to vanish at `β^i` for
    /// every `i` in the defining set and to have weight `d_l`.
    pub fn codeword_in(&self, field: &Arc<FieldCtx>) -> Result<(Vec<u64>, Vec<Elem>), NzlError> {
        let beta = gf::nth_root_of_unity(field, self.n_l)?;
        let (support, coeffs) = match self.kind {
            LocatorKind::Trivial => (vec![0], vec![Elem::ONE]),
            LocatorKind::Spc => (vec![0, 1], vec![Elem::ONE, field.neg(Elem::ONE)]),
            LocatorKind::Rs => {
                let g = Poly::from_roots(
                    field,
                    self.defining_set.iter().map(|&i| field.pow(beta, i as i64)),
                );
                if g.weight() as u64 != self.d_l {
                    return Err(NzlError::InvalidLocator(
                        "Reed-Solomon generator is not of full weight".into(),
                    ));
                }
                let coeffs = g.into_coeffs();
                ((0..coeffs.len() as u64).collect(), coeffs)
            }
            _ => {
                let indices: Vec<i64> = self.defining_set.iter().map(|&i| i as i64).collect();
                let (code, _) = CyclicCode::from_defining_set(self.q_l(), self.n_l, &indices)?;
                let cf = code.in_field(Arc::clone(field))?;
                let (_, word) = cyclic::min_weight_in_field(&code, &cf, LOCATOR_SEARCH_CAP)
                    .map_err(|e| NzlError::SearchCapExceeded(e.to_string()))?;
                support_of(&word)
            }
        };
        if support.len() as u64 != self.d_l {
            return Err(NzlError::InvalidLocator(format!(
                "codeword weight {} differs from d_l = {}",
                support.len(),
                self.d_l
            )));
        }
        for &i in &self.defining_set {
            let x = field.pow(beta, i as i64);
            let v = support
                .iter()
                .zip(&coeffs)
                .fold(Elem::ZERO, |acc, (&z, &c)| {
                    field.add(acc, field.mul(c, field.pow(x, z as i64)))
                });
            if !v.is_zero() {
                return Err(NzlError::InvalidLocator(format!(
                    "codeword does not vanish at beta^{i}"
                )));
            }
        }
        Ok((support, coeffs))
    }

    /// Degree over GF(q) of the smallest field containing GF(q^u) and the
    /// `n_l`-th roots of unity, i.e. `u · s_l`.
    pub fn field_degree(&self) -> u32 {
        let s_l = arith::multiplicative_order(self.q_l(), self.n_l).expect("coprime") as u32;
        self.u * s_l
    }

    pub fn label(&self) -> String {
        match self.kind {
            LocatorKind::Trivial => "trivial".into(),
            LocatorKind::Spc => format!("SPC({}) over GF({})", self.n_l, self.q_l()),
            LocatorKind::Rs => format!("RS({}; {}, {}, 0)", self.q_l(), self.n_l, self.k_l()),
            _ => format!(
                "{:?}({}, {}, {}) over GF({}), D_L = {:?}",
                self.kind,
                self.n_l,
                self.k_l(),
                self.d_l,
                self.q_l(),
                self.defining_set
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateLimits {
    pub max_n_l: u64,
    pub max_u: u32,
    /// Also emit the lowest-rate distance-two codes (they never beat SPC).
    pub lowest_rate_d2: bool,
}

impl Default for CandidateLimits {
    fn default() -> Self {
        CandidateLimits {
            max_n_l: 15,
            max_u: 2,
            lowest_rate_d2: false,
        }
    }
}

/// Deterministic list of locator candidates for codes of length `n` over GF(q),
/// deduplicated by `(n_l, D_L)` keeping the first occurrence.
///
/// Order: trivial, single parity check codes, Reed–Solomon codes, binary
/// distance-3 codes of length `2^g - 1`, lowest-rate distance-3 codes and,
/// if enabled, lowest-rate distance-2 codes.
pub fn candidate_locators(n: u64, q: u64, limits: CandidateLimits) -> Vec<LocatorSpec> {
    let mut out = vec![LocatorSpec::trivial(q)];
    let usable = |n_l: u64| n_l >= 2 && arith::gcd(n_l, n) == 1 && arith::gcd(n_l, q) == 1;

    for n_l in 2..=limits.max_n_l {
        if usable(n_l) {
            out.extend(LocatorSpec::spc(q, n_l, limits.max_u).ok());
        }
    }
    for u in 1..=limits.max_u {
        let Ok(ql) = q_pow(q, u) else { break };
        for n_l in 2..=limits.max_n_l.min(ql - 1) {
            if (ql - 1) % n_l != 0 || !usable(n_l) {
                continue;
            }
            for k_l in 1..n_l - 1 {
                out.extend(LocatorSpec::rs(q, u, n_l, k_l).ok());
            }
        }
    }
    if q == 2 {
        for g in 2..=20u32 {
            let ng = (1u64 << g) - 1;
            if ng > limits.max_n_l {
                break;
            }
            if !usable(ng) {
                continue;
            }
            for coset in all_cosets(ng, 2).expect("odd length") {
                let r = coset[0];
                if r == 0 || arith::gcd(r, ng) != 1 {
                    continue;
                }
                out.extend(LocatorSpec::cyclic(LocatorKind::Hamming, 2, 1, ng, &[r as i64]).ok());
            }
        }
        for g in 2..=20u32 {
            let ng = (1u64 << g) - 1;
            for a in 2..=limits.max_n_l / ng {
                let n_l = a * ng;
                if !usable(n_l) {
                    continue;
                }
                for r in arith::units(ng) {
                    if let Ok(code) = cyclic::lowest_rate_d3_code(a, g, r) {
                        let idx: Vec<i64> = code.defining_set().iter().map(|&i| i as i64).collect();
                        out.extend(
                            LocatorSpec::cyclic(LocatorKind::LowestRateD3, 2, 1, n_l, &idx).ok(),
                        );
                    }
                }
            }
        }
        if limits.lowest_rate_d2 {
            for n_l in 2..=limits.max_n_l {
                if !usable(n_l) {
                    continue;
                }
                for g in 2..n_l {
                    if n_l % g != 0 || n_l / g < 2 {
                        continue;
                    }
                    if let Ok(code) = cyclic::lowest_rate_d2_code(n_l / g, g) {
                        let idx: Vec<i64> = code.defining_set().iter().map(|&i| i as i64).collect();
                        out.extend(
                            LocatorSpec::cyclic(LocatorKind::LowestRateD2, 2, 1, n_l, &idx).ok(),
                        );
                    }
                }
            }
        }
    }
    let mut seen = BTreeSet::new();
    out.retain(|l| seen.insert((l.n_l, l.defining_set.clone())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has(cands: &[LocatorSpec], kind: LocatorKind, n_l: u64, d_l: &[u64]) -> bool {
        cands
            .iter()
            .any(|l| l.kind == kind && l.n_l == n_l && l.defining_set == d_l)
    }

    #[test]
    fn spc_coprimality_filter() {
        let c = candidate_locators(21, 2, CandidateLimits::default());
        assert!(has(&c, LocatorKind::Spc, 5, &[0]));
        assert!(!c.iter().any(|l| l.n_l == 3 || l.n_l == 7));
    }

    #[test]
    fn spc_over_gf4_for_length_65() {
        let c = candidate_locators(65, 2, CandidateLimits::default());
        let spc3 = c
            .iter()
            .find(|l| l.kind == LocatorKind::Spc && l.n_l == 3)
            .unwrap();
        assert_eq!(spc3.q_l(), 4);
        let spc5 = LocatorSpec::spc(2, 5, 2).unwrap();
        assert_eq!(
            (spc5.q_l(), spc5.support.clone(), spc5.coeffs.clone()),
            (2, vec![0, 1], vec![1, 1])
        );
    }

    #[test]
    fn rs_4_2_locator() {
        let l = LocatorSpec::rs(5, 1, 4, 2).unwrap();
        assert_eq!(l.defining_set, vec![0, 1]);
        assert_eq!(l.d_l, 3);
        assert_eq!(l.support, vec![0, 1, 2]);
        assert!(l.coeffs.iter().all(|&c| c != 0));
        let c = candidate_locators(21, 5, CandidateLimits::default());
        assert!(has(&c, LocatorKind::Rs, 4, &[0, 1]));
        assert!(LocatorSpec::rs(2, 1, 4, 2).is_err());
    }

    #[test]
    fn hamming_locators() {
        let l = LocatorSpec::cyclic(LocatorKind::Hamming, 2, 1, 7, &[3]).unwrap();
        assert_eq!(l.defining_set, vec![3, 5, 6]);
        assert_eq!(l.d_l, 3);
        assert_eq!(l.support.len(), 3);
        let c = candidate_locators(65, 2, CandidateLimits::default());
        assert!(has(&c, LocatorKind::Hamming, 7, &[3, 5, 6]));
        assert!(has(&c, LocatorKind::Hamming, 7, &[1, 2, 4]));
        assert!(c
            .iter()
            .any(|l| l.kind == LocatorKind::LowestRateD3 && l.n_l == 9));
    }

    #[test]
    fn candidates_are_deduplicated_and_deterministic() {
        let a = candidate_locators(
            31,
            2,
            CandidateLimits {
                lowest_rate_d2: true,
                ..Default::default()
            },
        );
        let b = candidate_locators(
            31,
            2,
            CandidateLimits {
                lowest_rate_d2: true,
                ..Default::default()
            },
        );
        assert_eq!(a, b);
        let keys: BTreeSet<_> = a.iter().map(|l| (l.n_l, l.defining_set.clone())).collect();
        assert_eq!(keys.len(), a.len());
        assert_eq!(a[0].kind, LocatorKind::Trivial);
    }

    #[test]
    fn codewords_in_a_larger_field() {
        let field = gf::build_field(2, 12).unwrap();
        for l in candidate_locators(65, 2, CandidateLimits::default()) {
            if 4095 % l.n_l != 0 {
                continue;
            }
            let (z, a) = l.codeword_in(&field).unwrap();
            assert_eq!(z.len() as u64, l.d_l);
            assert!(a.iter().all(|c| !c.is_zero()));
        }
    }
}
