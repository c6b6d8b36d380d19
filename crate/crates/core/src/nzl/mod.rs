//! Non-zero-locator bound: μ-search, certificates and candidate selection.
//!
//! A cyclic code `C` of length `n` with defining set `D_C` and a locator
//! code `L` of coprime length `n_l` give the bound `d ≥ ⌈μ/d_l⌉` whenever
//! `(e + w j) mod n ∈ D_C` or `(j + t) mod n_l ∈ D_L` for every
//! `j = 0, ..., μ - 2`.

mod closed_form;
mod coprime;
mod locator;

use std::cmp::Reverse;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cyclic::{self, BchBound, CyclicCode, CyclicError, HtBound, HtSearch};
use crate::gf::GfError;

pub use closed_form::{
    grid_to_csv, ht_improvement_predicate, ratio_grid, rs_closed_form, spc_closed_form,
    synthetic_pattern, GridRow, MRule, SyntheticPattern,
};
pub use coprime::{factor_products_coprime, factor_sets_disjoint};
pub use locator::{
    candidate_locators, CandidateLimits, LocatorKind, LocatorSpec, LOCATOR_SEARCH_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NzlError {
    #[error("locator length {n_l} is not coprime to code length {n}")]
    NotCoprime { n: u64, n_l: u64 },
    #[error("every position is covered: the code or the locator is the zero code")]
    DegenerateCover,
    #[error("closed form needs m > nu + 1, got m = {m}, nu = {nu}")]
    InvalidGeometry { m: u64, nu: u64 },
    #[error("invalid locator: {0}")]
    InvalidLocator(String),
    #[error("search cap exceeded: {0}")]
    SearchCapExceeded(String),
    #[error("multiplier {w} is not a unit modulo {n}")]
    NotAUnit { w: u64, n: u64 },
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
    #[error(transparent)]
    Gf(#[from] GfError),
}

/// `d* = ⌈μ / d_l⌉`.
pub fn nzl_bound(mu: u64, d_l: u64) -> u64 {
    arith::ceil_div(mu, d_l.max(1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NzlCertificate {
    /// Offset in `[0, n)`.
    pub e: u64,
    /// Multiplier, a unit mod `n`.
    pub w: u64,
    /// Locator shift in `[0, n_l)`.
    pub t: u64,
    /// One more than the length of the covered run. `μ = 1` means no
    /// position is covered and the bound is vacuous.
    pub mu: u64,
    pub d_star: u64,
    pub locator: LocatorSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuSearchOptions {
    /// Search every unit multiplier `w` mod `n`; otherwise use `w` below.
    pub search_w: bool,
    pub w: u64,
}

impl Default for MuSearchOptions {
    fn default() -> Self {
        MuSearchOptions {
            search_w: true,
            w: 1,
        }
    }
}

impl MuSearchOptions {
    pub fn fixed(w: u64) -> Self {
        MuSearchOptions { search_w: false, w }
    }
}

fn membership(set: &[u64], modulus: u64) -> Vec<bool> {
    let mut mask = vec![false; modulus as usize];
    for &i in set {
        mask[(i % modulus) as usize] = true;
    }
    mask
}

/// Maximal covered run over all offsets `e`, shifts `t` and (optionally)
/// multipliers `w`.
///
/// For a fixed `w` the pair `(e, t)` is in bijection with `J ∈ Z_{n n_l}`
/// through `e = w J mod n`, `t = J mod n_l`, so one circular scan of length
/// `n n_l` covers all of them. Ties prefer the smaller `e`, then `t`, then `w`.
pub fn mu_search(
    defining_set: &[u64],
    n: u64,
    locator: &LocatorSpec,
    opts: MuSearchOptions,
) -> Result<NzlCertificate, NzlError> {
    let n_l = locator.n_l;
    if n == 0 {
        return Err(CyclicError::ZeroLength.into());
    }
    if arith::gcd(n, n_l) != 1 {
        return Err(NzlError::NotCoprime { n, n_l });
    }
    let ws = if opts.search_w {
        arith::units(n)
    } else {
        if arith::gcd(opts.w, n) != 1 {
            return Err(NzlError::NotAUnit { w: opts.w, n });
        }
        vec![opts.w % n]
    };
    let in_c = membership(defining_set, n);
    let in_l = membership(&locator.defining_set, n_l);
    let period = (n * n_l) as usize;

    type Key = (u64, Reverse<(u64, u64, u64)>);
    let mut best: Option<Key> = None;
    let mut cond = vec![false; period];
    let mut runs = vec![0u64; period];
    for &w in &ws {
        for (jj, c) in cond.iter_mut().enumerate() {
            let j = jj as u64;
            *c = in_c[(w * j % n) as usize] || in_l[(j % n_l) as usize];
        }
        let Some(gap) = cond.iter().position(|&c| !c) else {
            return Err(NzlError::DegenerateCover);
        };
        // Walk backwards from the gap so each run length is known when needed.
        runs[gap] = 0;
        let mut x = gap;
        for _ in 0..period {
            x = (x + period - 1) % period;
            runs[x] = if cond[x] {
                runs[(x + 1) % period] + 1
            } else {
                0
            };
        }
        for (jj, &run) in runs.iter().enumerate() {
            let j = jj as u64;
            let key = (run + 1, Reverse((w * j % n, j % n_l, w)));
            if best.is_none_or(|b| key > b) {
                best = Some(key);
            }
        }
    }
    let (mu, Reverse((e, t, w))) = best.expect("nonempty search");
    Ok(NzlCertificate {
        e,
        w,
        t,
        mu,
        d_star: nzl_bound(mu, locator.d_l),
        locator: locator.clone(),
    })
}

/// Re-checks a certificate by direct scan, independently of [`mu_search`]:
/// coprime lengths, `w` a unit, the covering condition for `j < μ - 1`, its
/// failure at `j = μ - 1`, and `d* = ⌈μ/d_l⌉`.
pub fn verify_certificate(defining_set: &[u64], n: u64, cert: &NzlCertificate) -> bool {
    let loc = &cert.locator;
    if n == 0 || loc.n_l == 0 || arith::gcd(n, loc.n_l) != 1 || arith::gcd(cert.w, n) != 1 {
        return false;
    }
    if cert.e >= n || cert.t >= loc.n_l || cert.mu == 0 || loc.d_l == 0 {
        return false;
    }
    let covered = |j: u64| {
        let exp = (cert.e + cert.w % n * (j % n)) % n;
        defining_set.iter().any(|&i| i % n == exp)
            || loc
                .defining_set
                .iter()
                .any(|&i| i % loc.n_l == (j + cert.t) % loc.n_l)
    };
    (0..cert.mu - 1).all(covered)
        && !covered(cert.mu - 1)
        && cert.d_star == arith::ceil_div(cert.mu, loc.d_l)
}

/// Order used to compare certificates from different locators: larger `d*`,
/// then smaller `d_l`, `n_l`, `e`, `t`, `w`.
fn rank(c: &NzlCertificate) -> (u64, Reverse<(u64, u64, u64, u64, u64)>) {
    (
        c.d_star,
        Reverse((c.locator.d_l, c.locator.n_l, c.e, c.t, c.w)),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundLimits {
    pub candidates: CandidateLimits,
    /// Multiplier search is used for `n` up to this length.
    pub search_w_max_n: u64,
    pub ht: HtSearch,
}

impl Default for BoundLimits {
    fn default() -> Self {
        BoundLimits {
            candidates: CandidateLimits::default(),
            search_w_max_n: 255,
            ht: HtSearch::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BestBound {
    pub certificate: NzlCertificate,
    pub bch: BchBound,
    /// `None` when the code is longer than the HT search limit.
    pub ht: Option<HtBound>,
    pub d_star: u64,
}

/// Runs [`mu_search`] for every candidate locator and keeps the best
/// certificate. Candidates are evaluated in parallel; the result does not
/// depend on scheduling.
pub fn best_bound(code: &CyclicCode, limits: BoundLimits) -> Result<BestBound, NzlError> {
    let n = code.n();
    let cands = candidate_locators(n, code.q(), limits.candidates);
    let opts = MuSearchOptions {
        search_w: n <= limits.search_w_max_n,
        w: 1,
    };
    let certs: Vec<NzlCertificate> = cands
        .par_iter()
        .map(|l| mu_search(code.defining_set(), n, l, opts))
        .collect::<Result<_, _>>()?;
    // Earliest candidate wins remaining ties.
    let certificate = certs
        .into_iter()
        .enumerate()
        .max_by_key(|(i, c)| (rank(c), Reverse(*i)))
        .map(|(_, c)| c)
        .expect("trivial locator is always a candidate");
    debug_assert!(verify_certificate(code.defining_set(), n, &certificate));
    let ht = match cyclic::ht_bound(code, limits.ht) {
        Ok(h) => Some(h),
        Err(CyclicError::SearchCapExceeded(_)) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(BestBound {
        d_star: certificate.d_star,
        certificate,
        bch: cyclic::bch_bound(code),
        ht,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::{min_distance_oracle, DEFAULT_ORACLE_CAP};

    fn example1() -> CyclicCode {
        CyclicCode::build(2, 21, &[1, 3, 7, 9]).unwrap()
    }

    #[test]
    fn bound_values() {
        assert_eq!(nzl_bound(14, 2), 7);
        assert_eq!(nzl_bound(19, 3), 7);
        assert_eq!(nzl_bound(9, 1), 9);
    }

    #[test]
    fn example1_with_spc5() {
        let code = example1();
        let spc = LocatorSpec::spc(2, 5, 1).unwrap();
        let c = mu_search(code.defining_set(), 21, &spc, MuSearchOptions::fixed(1)).unwrap();
        assert_eq!((c.e, c.t, c.w, c.mu, c.d_star), (0, 0, 1, 14, 7));
        assert!(verify_certificate(code.defining_set(), 21, &c));
        let searched =
            mu_search(code.defining_set(), 21, &spc, MuSearchOptions::default()).unwrap();
        assert_eq!(searched.d_star, 7);
    }

    #[test]
    fn code_65_with_spc3() {
        let code = CyclicCode::build(2, 65, &[1, 5]).unwrap();
        let spc = LocatorSpec::spc(2, 3, 2).unwrap();
        assert_eq!(spc.q_l(), 4);
        let c = mu_search(code.defining_set(), 65, &spc, MuSearchOptions::default()).unwrap();
        assert_eq!(c.d_star, 7);
        assert!(verify_certificate(code.defining_set(), 65, &c));
    }

    #[test]
    fn trivial_locator_is_bch() {
        for reps in [&[1u64][..], &[1, 3], &[1, 3, 5], &[3, 7]] {
            let code = CyclicCode::build(2, 31, reps).unwrap();
            let c = mu_search(
                code.defining_set(),
                31,
                &LocatorSpec::trivial(2),
                Default::default(),
            )
            .unwrap();
            assert_eq!(c.d_star, cyclic::bch_bound(&code).value, "{reps:?}");
        }
    }

    #[test]
    fn errors() {
        let spc3 = LocatorSpec::spc(2, 3, 2).unwrap();
        assert_eq!(
            mu_search(&[1, 2], 21, &spc3, Default::default()),
            Err(NzlError::NotCoprime { n: 21, n_l: 3 })
        );
        let all: Vec<u64> = (0..7).collect();
        assert_eq!(
            mu_search(&all, 7, &LocatorSpec::trivial(2), Default::default()),
            Err(NzlError::DegenerateCover)
        );
        assert!(matches!(
            mu_search(&[1], 9, &LocatorSpec::trivial(2), MuSearchOptions::fixed(3)),
            Err(NzlError::NotAUnit { .. })
        ));
    }

    fn signed(n: u64, set: &[i64]) -> Vec<u64> {
        set.iter().map(|&i| i.rem_euclid(n as i64) as u64).collect()
    }

    #[test]
    fn family_with_spc_locator() {
        let set: Vec<i64> = (-10..=10).filter(|i: &i64| i.rem_euclid(3) != 0).collect();
        let spc = LocatorSpec::spc(2, 3, 2).unwrap();
        let c = mu_search(&signed(41, &set), 41, &spc, MuSearchOptions::fixed(1)).unwrap();
        assert_eq!((c.mu, c.d_star), (22, 11));
    }

    #[test]
    fn family_with_hamming_locator() {
        let set = [1, 2, 4, 7, 8, 9, 11, 14, 15, 16, 18];
        let ham = LocatorSpec::cyclic(LocatorKind::Hamming, 2, 1, 7, &[3]).unwrap();
        let c = mu_search(&signed(23, &set), 23, &ham, MuSearchOptions::fixed(1)).unwrap();
        assert_eq!((c.mu, c.d_star), (21, 7));
        assert_eq!((c.e, c.t), (1, 1));
    }

    #[test]
    fn family_with_rs_locator() {
        let set = [-13, -11, -5, -3, 3, 5, 11, 13];
        let rs = LocatorSpec::rs(5, 1, 4, 2).unwrap();
        let c = mu_search(&signed(63, &set), 63, &rs, MuSearchOptions::fixed(2)).unwrap();
        assert_eq!((c.mu, c.d_star), (19, 7));
        assert_eq!(c.e, 63 - 17);
    }

    #[test]
    fn verifier_rejects_tampering() {
        let code = example1();
        let spc = LocatorSpec::spc(2, 5, 1).unwrap();
        let c = mu_search(code.defining_set(), 21, &spc, MuSearchOptions::fixed(1)).unwrap();
        let mut longer = c.clone();
        longer.mu += 1;
        longer.d_star = nzl_bound(longer.mu, 2);
        assert!(!verify_certificate(code.defining_set(), 21, &longer));
        let mut shorter = c.clone();
        shorter.mu -= 1;
        assert!(!verify_certificate(code.defining_set(), 21, &shorter));
        let mut inflated = c.clone();
        inflated.locator.d_l = 1;
        assert!(!verify_certificate(code.defining_set(), 21, &inflated));
    }

    #[test]
    fn best_bound_example1() {
        let b = best_bound(&example1(), BoundLimits::default()).unwrap();
        assert_eq!(b.d_star, 7);
        assert_eq!(b.bch.value, 5);
        assert_eq!(b.ht.unwrap().value, 6);
        let again = best_bound(&example1(), BoundLimits::default()).unwrap();
        assert_eq!(b, again);
    }

    #[test]
    fn sound_on_small_codes() {
        for n in [15u64, 21] {
            let reps: Vec<u64> = cyclic::all_cosets(n, 2)
                .unwrap()
                .iter()
                .map(|c| c[0])
                .collect();
            for mask in 1u32..(1 << reps.len()) {
                let chosen: Vec<u64> = reps
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &r)| r)
                    .collect();
                let code = CyclicCode::build(2, n, &chosen).unwrap();
                if code.k() == 0 {
                    continue;
                }
                let d = min_distance_oracle(&code, DEFAULT_ORACLE_CAP)
                    .unwrap()
                    .d_true;
                let b = best_bound(&code, BoundLimits::default()).unwrap();
                assert!(
                    b.d_star <= d,
                    "n = {n}, reps = {chosen:?}: {} > {d}",
                    b.d_star
                );
                assert!(verify_certificate(code.defining_set(), n, &b.certificate));
            }
        }
    }
}
