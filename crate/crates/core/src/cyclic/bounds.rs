//! BCH and Hartmann–Tzeng bounds with explicit witnesses.

use serde::{Deserialize, Serialize};

use super::{CyclicCode, CyclicError};
use crate::arith;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BchWitness {
    /// First exponent of the run.
    pub b: u64,
    /// Step, a unit mod `n`.
    pub m1: u64,
    /// Number of consecutive exponents `b, b + m1, ...` in the defining set.
    pub run: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BchBound {
    pub value: u64,
    pub witness: Option<BchWitness>,
}

/// Template `{ b1 + i1 m1 + i2 m2 : 0 ≤ i1 ≤ d0 - 2, 0 ≤ i2 ≤ ν }` contained
/// in the defining set; certifies `d ≥ d0 + ν`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HtWitness {
    pub b1: u64,
    pub m1: u64,
    pub m2: u64,
    pub d0: u64,
    pub nu: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HtBound {
    pub value: u64,
    pub witness: Option<HtWitness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HtSearch {
    /// Largest length searched.
    pub max_n: u64,
    /// Search every pair of unit steps instead of one `m2` per orbit of
    /// multiplication by `q`.
    pub full: bool,
}

impl Default for HtSearch {
    fn default() -> Self {
        HtSearch {
            max_n: 255,
            full: false,
        }
    }
}

/// `runs[x]`: how many of `x, x + step, x + 2 step, ...` lie in the set
/// before the first gap. Requires a gap to exist.
fn run_lengths(mask: &[bool], step: u64) -> Vec<u64> {
    let n = mask.len() as u64;
    let mut runs = vec![0u64; mask.len()];
    let gap = (0..n).find(|&x| !mask[x as usize]).expect("set has a gap");
    // Walk backwards along the step starting just before a gap.
    let mut x = gap;
    for _ in 0..n {
        x = (x + n - step % n) % n;
        let next = (x + step) % n;
        runs[x as usize] = if mask[x as usize] {
            runs[next as usize] + 1
        } else {
            0
        };
    }
    runs
}

/// Longest arithmetic run with unit step inside the defining set, plus one.
///
/// The zero code (every exponent in the defining set) gets `n + 1`.
pub fn bch_bound(code: &CyclicCode) -> BchBound {
    let n = code.n();
    let mask = code.zero_mask();
    if code.k() == 0 {
        return BchBound {
            value: n + 1,
            witness: Some(BchWitness {
                b: 0,
                m1: 1 % n.max(2),
                run: n,
            }),
        };
    }
    let mut best: Option<BchWitness> = None;
    for m1 in arith::units(n) {
        let runs = run_lengths(&mask, m1);
        for (b, &run) in runs.iter().enumerate() {
            if run > best.map_or(0, |w| w.run) {
                best = Some(BchWitness {
                    b: b as u64,
                    m1,
                    run,
                });
            }
        }
    }
    BchBound {
        value: best.map_or(1, |w| w.run + 1),
        witness: best,
    }
}

/// Smallest element of each orbit of the units mod `n` under multiplication by `q`.
fn unit_orbit_reps(n: u64, q: u64) -> Vec<u64> {
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for u in arith::units(n) {
        if seen[u as usize] {
            continue;
        }
        out.push(u);
        let mut x = u;
        loop {
            seen[x as usize] = true;
            x = (x * q) % n;
            if x == u {
                break;
            }
        }
    }
    out
}

/// Maximizes `d0 + ν` over Hartmann–Tzeng templates.
///
/// Ties prefer the larger `d0`, then the smaller `(b1, m1, m2)`. Since the
/// defining set is invariant under multiplication by `q`, the default search
/// only tries one `m2` per orbit `{m2 q^j}`; the value is unaffected.
pub fn ht_bound(code: &CyclicCode, search: HtSearch) -> Result<HtBound, CyclicError> {
    let n = code.n();
    if n > search.max_n {
        return Err(CyclicError::SearchCapExceeded(format!(
            "Hartmann-Tzeng search limited to n <= {}, got n = {n}",
            search.max_n
        )));
    }
    if code.k() == 0 {
        return Ok(HtBound {
            value: n + 1,
            witness: None,
        });
    }
    let mask = code.zero_mask();
    let units = arith::units(n);
    let m2_set = if search.full {
        units.clone()
    } else {
        unit_orbit_reps(n, code.q())
    };
    let runs_by_m1: Vec<Vec<u64>> = units.iter().map(|&m1| run_lengths(&mask, m1)).collect();

    type Key = (u64, u64, std::cmp::Reverse<(u64, u64, u64)>);
    let mut best: Option<(Key, HtWitness)> = None;
    for (mi, &m1) in units.iter().enumerate() {
        let runs = &runs_by_m1[mi];
        for &m2 in &m2_set {
            for b1 in 0..n {
                let mut cur = u64::MAX;
                for nu in 0..n {
                    let x = (b1 + nu * m2) % n;
                    cur = cur.min(runs[x as usize]);
                    if cur == 0 {
                        break;
                    }
                    let d0 = cur + 1;
                    let key = (d0 + nu, d0, std::cmp::Reverse((b1, m1, m2)));
                    if best.as_ref().is_none_or(|(k, _)| key > *k) {
                        best = Some((key, HtWitness { b1, m1, m2, d0, nu }));
                    }
                }
            }
        }
    }
    Ok(match best {
        Some((key, w)) => HtBound {
            value: key.0,
            witness: Some(w),
        },
        None => HtBound {
            value: 1,
            witness: None,
        },
    })
}

/// Checks a template directly against the defining set.
pub fn verify_ht_template(code: &CyclicCode, w: &HtWitness) -> bool {
    let n = code.n();
    if w.d0 < 2 || arith::gcd(w.m1, n) != 1 || arith::gcd(w.m2, n) != 1 {
        return false;
    }
    (0..=w.d0 - 2)
        .all(|i1| (0..=w.nu).all(|i2| code.contains_zero((w.b1 + i1 * w.m1 + i2 * w.m2) % n)))
}
