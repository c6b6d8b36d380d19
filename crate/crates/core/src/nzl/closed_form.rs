//! Closed-form bounds for single parity check and Reed–Solomon locators, and
//! the ratio grids comparing them with Hartmann–Tzeng.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use super::{LocatorSpec, NzlError};
use crate::arith;

/// `⌈d0 + ν(d0 - 1)/2⌉`: the bound from a template with `m = ν + 2` and a
/// single parity check locator.
pub fn spc_closed_form(d0: u64, nu: u64) -> u64 {
    d0 + arith::ceil_div(nu * (d0 - 1), 2)
}

fn check_geometry(nu: u64, m: u64) -> Result<(), NzlError> {
    if m <= nu + 1 {
        return Err(NzlError::InvalidGeometry { m, nu });
    }
    Ok(())
}

/// `⌈(m d0 - ν)/(m - ν)⌉` with an RS locator of length `m` and distance `m - ν`.
pub fn rs_closed_form(d0: u64, nu: u64, m: u64) -> Result<u64, NzlError> {
    check_geometry(nu, m)?;
    Ok(arith::ceil_div(m * d0 - nu, m - nu))
}

/// Whether the RS-locator bound beats `d0 + ν`.
///
/// For `ν > 0` this is `d0 > m - ν + 1`; for `ν = 0` both bounds equal `d0`.
pub fn ht_improvement_predicate(d0: u64, nu: u64, m: u64) -> Result<bool, NzlError> {
    check_geometry(nu, m)?;
    Ok(nu > 0 && d0 + nu > m + 1)
}

/// How `m` is chosen for each `ν` in a grid: `m = ν + offset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MRule {
    pub offsets: Vec<u64>,
}

impl MRule {
    /// `m = ν + 2`: single parity check locators.
    pub fn spc() -> Self {
        MRule { offsets: vec![2] }
    }

    pub fn offsets(range: RangeInclusive<u64>) -> Self {
        MRule {
            offsets: range.collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridRow {
    pub nu: u64,
    pub d0: u64,
    pub m: u64,
    pub d_star: u64,
    /// `d0 + ν`.
    pub ht: u64,
    pub ratio: f64,
}

/// `d*/(d0 + ν)` over the grid, ordered by `ν`, then `m`, then `d0`.
pub fn ratio_grid(
    nus: RangeInclusive<u64>,
    d0s: RangeInclusive<u64>,
    rule: &MRule,
) -> Result<Vec<GridRow>, NzlError> {
    if *d0s.start() < 2 {
        return Err(NzlError::InvalidGeometry { m: 0, nu: 0 });
    }
    let mut rows = Vec::new();
    for nu in nus {
        for &off in &rule.offsets {
            let m = nu + off;
            for d0 in d0s.clone() {
                let d_star = rs_closed_form(d0, nu, m)?;
                let ht = d0 + nu;
                rows.push(GridRow {
                    nu,
                    d0,
                    m,
                    d_star,
                    ht,
                    ratio: d_star as f64 / ht as f64,
                });
            }
        }
    }
    Ok(rows)
}

pub fn grid_to_csv(rows: &[GridRow]) -> String {
    let mut out = String::from("nu,d0,m,d_star,ht,ratio\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{:.6}",
            r.nu, r.d0, r.m, r.d_star, r.ht, r.ratio
        )
        .expect("writing to a String");
    }
    out
}

/// A defining set containing exactly the normalized template
/// `{1 + i1 m + i2 : 0 ≤ i1 ≤ d0 - 2, 0 ≤ i2 ≤ ν}` and a Reed–Solomon
/// locator RS(q; m, ν + 1) with `D_L = {0, ..., m - ν - 2}`.
#[derive(Debug, Clone)]
pub struct SyntheticPattern {
    pub q: u64,
    pub n: u64,
    pub defining_set: Vec<u64>,
    pub locator: LocatorSpec,
}

fn smallest_prime_one_mod(m: u64) -> u64 {
    (1..)
        .map(|k| k * m + 1)
        .find(|&p| arith::is_prime(p))
        .expect("Dirichlet")
}

/// Builds the pattern over the smallest prime field with `m | q - 1`. The
/// length is the first `n ≥ 2m(d0 + 1) + 1` coprime to `m`, long enough that
/// runs cannot wrap around.
pub fn synthetic_pattern(d0: u64, nu: u64, m: u64) -> Result<SyntheticPattern, NzlError> {
    check_geometry(nu, m)?;
    if d0 < 2 {
        return Err(NzlError::InvalidGeometry { m, nu });
    }
    let q = smallest_prime_one_mod(m);
    let n = (2 * m * (d0 + 1) + 1..)
        .find(|&n| arith::gcd(n, m) == 1)
        .expect("unbounded");
    let mut set: Vec<u64> = (0..=d0 - 2)
        .flat_map(|i1| (0..=nu).map(move |i2| 1 + i1 * m + i2))
        .collect();
    set.sort_unstable();
    set.dedup();
    let locator = LocatorSpec::rs(q, 1, m, nu + 1)?;
    Ok(SyntheticPattern {
        q,
        n,
        defining_set: set,
        locator,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{mu_search, MuSearchOptions};
    use super::*;

    #[test]
    fn closed_form_values() {
        assert_eq!(spc_closed_form(5, 1), 7);
        assert_eq!(spc_closed_form(9, 0), 9);
        assert_eq!(spc_closed_form(4, 2), 7);
        assert_eq!(rs_closed_form(5, 1, 3).unwrap(), 7);
        assert_eq!(rs_closed_form(8, 0, 4).unwrap(), 8);
        assert_eq!(rs_closed_form(6, 2, 5).unwrap(), 10);
        assert_eq!(
            rs_closed_form(5, 2, 3),
            Err(NzlError::InvalidGeometry { m: 3, nu: 2 })
        );
    }

    #[test]
    fn predicate_matches_comparison() {
        assert!(ht_improvement_predicate(5, 1, 3).unwrap());
        for nu in 0..=6 {
            assert!(!ht_improvement_predicate(3, nu, nu + 2).unwrap());
            for d0 in 2..=20 {
                for m in nu + 2..=nu + 6 {
                    assert_eq!(
                        ht_improvement_predicate(d0, nu, m).unwrap(),
                        rs_closed_form(d0, nu, m).unwrap() > d0 + nu,
                        "d0 = {d0}, nu = {nu}, m = {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn spc_is_rs_with_two_more() {
        for nu in 0..=6 {
            for d0 in 2..=20 {
                assert_eq!(
                    spc_closed_form(d0, nu),
                    rs_closed_form(d0, nu, nu + 2).unwrap()
                );
            }
        }
    }

    #[test]
    fn search_matches_closed_form_on_patterns() {
        for (d0, nu, m) in [(5, 1, 3), (4, 2, 4), (6, 2, 5), (2, 0, 2), (7, 3, 9)] {
            let p = synthetic_pattern(d0, nu, m).unwrap();
            let c = mu_search(&p.defining_set, p.n, &p.locator, MuSearchOptions::fixed(1)).unwrap();
            assert_eq!(c.mu, m * d0 - nu, "d0 = {d0}, nu = {nu}, m = {m}");
            assert_eq!(c.d_star, rs_closed_form(d0, nu, m).unwrap());
        }
    }

    #[test]
    fn grids() {
        let grid = ratio_grid(1..=6, 2..=20, &MRule::spc()).unwrap();
        assert_eq!(grid.len(), 6 * 19);
        for r in &grid {
            assert_eq!(r.ratio > 1.0, r.d0 > 3);
        }
        let flat = ratio_grid(0..=0, 2..=20, &MRule::offsets(2..=6)).unwrap();
        assert!(flat.iter().all(|r| r.ratio == 1.0));
        let csv = grid_to_csv(&grid[..2]);
        assert_eq!(
            csv,
            "nu,d0,m,d_star,ht,ratio\n1,2,3,3,3,1.000000\n1,3,3,4,4,1.000000\n"
        );
    }
}
