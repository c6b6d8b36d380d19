//! Regression table of reference values for the `check` command.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cyclic::{self, CyclicCode, HtSearch, HtWitness};
use crate::decoder::DecoderContext;
use crate::gf;
use crate::nzl::{self, LocatorKind, LocatorSpec, MRule, MuSearchOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

type Check = (&'static str, fn() -> (String, String));

fn example1() -> CyclicCode {
    CyclicCode::build(2, 21, &[1, 3, 7, 9]).expect("valid code")
}

fn code65() -> CyclicCode {
    CyclicCode::build(2, 65, &[1, 5]).expect("valid code")
}

fn mod_set(n: u64, set: &[i64]) -> Vec<u64> {
    set.iter().map(|&i| i.rem_euclid(n as i64) as u64).collect()
}

fn s<T: std::fmt::Debug>(v: T) -> String {
    format!("{v:?}")
}

fn err(e: impl std::fmt::Display) -> String {
    format!("error: {e}")
}

const CHECKS: &[Check] = &[
    ("field-degree", || {
        let got = (
            gf::min_extension_degree(2, 21),
            gf::min_extension_degree(2, 5),
        );
        (
            s((6, 4)),
            match got {
                (Ok(a), Ok(b)) => s((a, b)),
                _ => err("no extension"),
            },
        )
    }),
    ("root-of-order-21", || {
        let computed = gf::build_field(2, 6)
            .and_then(|f| gf::nth_root_of_unity(&f, 21).map(|a| f.elem_order(a)));
        ("21".into(), computed.map_or_else(err, |o| o.to_string()))
    }),
    ("coset-of-7-mod-21", || {
        (
            "[7, 14]".into(),
            cyclic::cyclotomic_coset(21, 2, 7).map_or_else(err, |mut c| {
                c.sort_unstable();
                s(c)
            }),
        )
    }),
    ("coset-of-9-mod-21", || {
        (
            "[9, 15, 18]".into(),
            cyclic::cyclotomic_coset(21, 2, 9).map_or_else(err, |mut c| {
                c.sort_unstable();
                s(c)
            }),
        )
    }),
    ("example1-defining-set", || {
        let c = example1();
        (
            "k = 7, D_C = [1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 14, 15, 16, 18]".into(),
            format!("k = {}, D_C = {:?}", c.k(), c.defining_set()),
        )
    }),
    ("example1-bch", || {
        ("5".into(), cyclic::bch_bound(&example1()).value.to_string())
    }),
    ("example1-ht", || {
        let computed = cyclic::ht_bound(&example1(), HtSearch::default()).map(|h| {
            let w = h.witness.expect("witness");
            let steps: BTreeSet<u64> = [w.m1, w.m2].into();
            format!(
                "{} (b1 = {}, steps = {steps:?}, d0 = {}, nu = {})",
                h.value, w.b1, w.d0, w.nu
            )
        });
        (
            "6 (b1 = 1, steps = {1, 5}, d0 = 5, nu = 1)".into(),
            computed.unwrap_or_else(err),
        )
    }),
    ("example1-oracle", || {
        let d = cyclic::min_distance_oracle(&example1(), cyclic::DEFAULT_ORACLE_CAP);
        ("8".into(), d.map_or_else(err, |w| w.d_true.to_string()))
    }),
    ("example1-spc5", || {
        let c = example1();
        let r = LocatorSpec::spc(2, 5, 1)
            .and_then(|l| nzl::mu_search(c.defining_set(), 21, &l, MuSearchOptions::fixed(1)));
        (
            "e = 0, t = 0, mu - 1 = 13, d* = 7".into(),
            r.map_or_else(err, |c| {
                format!(
                    "e = {}, t = {}, mu - 1 = {}, d* = {}",
                    c.e,
                    c.t,
                    c.mu - 1,
                    c.d_star
                )
            }),
        )
    }),
    ("example1-best-bound", || {
        let c = example1();
        let r = nzl::best_bound(&c, Default::default());
        (
            "d* = 7, HT = 6".into(),
            r.map_or_else(err, |b| {
                format!("d* = {}, HT = {}", b.d_star, b.ht.map_or(0, |h| h.value))
            }),
        )
    }),
    ("code65-dimension", || {
        ("41".into(), code65().k().to_string())
    }),
    ("code65-ht-template", || {
        // b = -5, m = 3, d0 = 5, nu = 1 in normalized form
        let w = HtWitness {
            b1: 60,
            m1: 3,
            m2: 1,
            d0: 5,
            nu: 1,
        };
        let ok = cyclic::verify_ht_template(&code65(), &w);
        (
            "6".into(),
            if ok {
                (w.d0 + w.nu).to_string()
            } else {
                "template not contained".into()
            },
        )
    }),
    ("code65-spc3-gf4", || {
        let c = code65();
        let r = LocatorSpec::spc(2, 3, 2).and_then(|l| {
            let q_l = l.q_l();
            nzl::mu_search(c.defining_set(), 65, &l, Default::default()).map(|c| (q_l, c.d_star))
        });
        (
            "GF(4), d* = 7".into(),
            r.map_or_else(err, |(q, d)| format!("GF({q}), d* = {d}")),
        )
    }),
    ("code65-best-bound", || {
        let r = nzl::best_bound(&code65(), Default::default());
        ("7".into(), r.map_or_else(err, |b| b.d_star.to_string()))
    }),
    ("code65-oracle-capped", || {
        let r = cyclic::min_distance_oracle(&code65(), cyclic::DEFAULT_ORACLE_CAP);
        (
            "capped at 2^41 codewords".into(),
            match r {
                Err(cyclic::CyclicError::TooManyCodewords { count, .. }) if count == 1 << 41 => {
                    "capped at 2^41 codewords".into()
                }
                other => s(other.map(|w| w.d_true)),
            },
        )
    }),
    ("code65-candidates", || {
        let cands = nzl::candidate_locators(65, 2, Default::default());
        let found = cands
            .iter()
            .find(|l| l.kind == LocatorKind::Spc && l.n_l == 3)
            .map(|l| format!("SPC(3) over GF({})", l.q_l()));
        (
            "SPC(3) over GF(4)".into(),
            found.unwrap_or_else(|| "missing".into()),
        )
    }),
    ("rs-4-2-locator", || {
        let cands = nzl::candidate_locators(21, 5, Default::default());
        let found = cands
            .iter()
            .find(|l| l.kind == LocatorKind::Rs && l.n_l == 4 && l.defining_set == [0, 1])
            .map(|l| format!("D_L = {:?}, d_l = {}", l.defining_set, l.d_l));
        (
            "D_L = [0, 1], d_l = 3".into(),
            found.unwrap_or_else(|| "missing".into()),
        )
    }),
    ("nzl-bound-values", || {
        (
            "7, 7".into(),
            format!("{}, {}", nzl::nzl_bound(14, 2), nzl::nzl_bound(19, 3)),
        )
    }),
    ("spc-closed-form", || {
        ("7".into(), nzl::spc_closed_form(5, 1).to_string())
    }),
    ("rs-closed-form-spc-case", || {
        (
            "7".into(),
            nzl::rs_closed_form(5, 1, 3).map_or_else(err, |v| v.to_string()),
        )
    }),
    ("improvement-predicate", || {
        let yes = nzl::ht_improvement_predicate(5, 1, 3).unwrap_or(false);
        let no = (1..=6).all(|nu| nzl::ht_improvement_predicate(3, nu, nu + 2) == Ok(false));
        (
            "(5,1,3) true; (3,nu,nu+2) false".into(),
            format!("(5,1,3) {yes}; (3,nu,nu+2) {}", !no),
        )
    }),
    ("spc3-length-41", || {
        let set: Vec<i64> = (-10..=10).filter(|i: &i64| i.rem_euclid(3) != 0).collect();
        let r = LocatorSpec::spc(2, 3, 2)
            .and_then(|l| nzl::mu_search(&mod_set(41, &set), 41, &l, MuSearchOptions::fixed(1)));
        (
            "mu = 22, d* = 11".into(),
            r.map_or_else(err, |c| format!("mu = {}, d* = {}", c.mu, c.d_star)),
        )
    }),
    ("hamming7-length-23", || {
        let set = [1, 2, 4, 7, 8, 9, 11, 14, 15, 16, 18];
        let r = LocatorSpec::cyclic(LocatorKind::Hamming, 2, 1, 7, &[3])
            .and_then(|l| nzl::mu_search(&mod_set(23, &set), 23, &l, MuSearchOptions::fixed(1)));
        (
            "mu = 21, d* = 7".into(),
            r.map_or_else(err, |c| format!("mu = {}, d* = {}", c.mu, c.d_star)),
        )
    }),
    ("rs-4-2-length-63", || {
        let set = [-13, -11, -5, -3, 3, 5, 11, 13];
        let r = LocatorSpec::rs(5, 1, 4, 2)
            .and_then(|l| nzl::mu_search(&mod_set(63, &set), 63, &l, MuSearchOptions::fixed(2)));
        (
            "mu = 19, d* = 7".into(),
            r.map_or_else(err, |c| format!("mu = {}, d* = {}", c.mu, c.d_star)),
        )
    }),
    ("length119-gcd", || {
        (
            "false".into(),
            cyclic::has_distance_two(119, &[1, 11, 51]).to_string(),
        )
    }),
    ("length119-weight3", || {
        let r = cyclic::distance_three_witness(119, &[1, 11, 51], 3, 1);
        (
            "weight 3".into(),
            r.map_or_else(err, |w| {
                let wt = w
                    .codeword
                    .map_or(0, |c| c.iter().filter(|&&d| d != 0).count());
                format!("weight {wt}")
            }),
        )
    }),
    ("lowest-rate-d2-dimension", || {
        let r = cyclic::lowest_rate_d2_code(7, 3);
        (
            "k = 14".into(),
            r.map_or_else(err, |c| format!("k = {}", c.k())),
        )
    }),
    ("lowest-rate-d3-119", || {
        let r = cyclic::lowest_rate_d3_code(17, 3, 1);
        (
            "n = 119, k = 68".into(),
            r.map_or_else(err, |c| format!("n = {}, k = {}", c.n(), c.k())),
        )
    }),
    ("lowest-rate-d3-hamming-repetition", || {
        let (a, g) = (5u64, 2u32);
        let ng = (1u64 << g) - 1;
        let expect: Vec<u64> = (0..a)
            .flat_map(|j| (0..g).map(move |t| j * ng + (1 << t)))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let r = cyclic::lowest_rate_d3_code(a, g, 1);
        (s(&expect), r.map_or_else(err, |c| s(c.defining_set())))
    }),
    ("spc-ratio-above-one-iff-d0-above-3", || {
        let r = nzl::ratio_grid(1..=6, 2..=20, &MRule::spc());
        (
            "true".into(),
            r.map_or_else(err, |rows| {
                rows.iter()
                    .all(|r| (r.ratio > 1.0) == (r.d0 > 3))
                    .to_string()
            }),
        )
    }),
    ("rs-ratio-nonincreasing-in-m", || {
        let r = nzl::ratio_grid(6..=6, 2..=20, &MRule::offsets(2..=6));
        (
            "true".into(),
            r.map_or_else(err, |rows| {
                (2..=20u64)
                    .all(|d0| {
                        let ratios: Vec<f64> = rows
                            .iter()
                            .filter(|r| r.d0 == d0)
                            .map(|r| r.ratio)
                            .collect();
                        ratios.windows(2).all(|w| w[0] >= w[1])
                    })
                    .to_string()
            }),
        )
    }),
    ("trivial-locator-polynomials", || {
        let code = CyclicCode::build(2, 15, &[1, 3]).expect("valid code");
        let r = nzl::mu_search(
            code.defining_set(),
            15,
            &LocatorSpec::trivial(2),
            Default::default(),
        )
        .map_err(|e| e.to_string())
        .and_then(|c| DecoderContext::build(&code, &c).map_err(|e| e.to_string()));
        (
            "f = 1 - x, h = 1".into(),
            match r {
                Ok(ctx) => {
                    let f = ctx.f().coeffs().iter().map(|c| c.0).collect::<Vec<_>>();
                    let h = ctx.h().coeffs().iter().map(|c| c.0).collect::<Vec<_>>();
                    if f == [1, 1] && h == [1] {
                        "f = 1 - x, h = 1".into()
                    } else {
                        format!("f = {f:?}, h = {h:?}")
                    }
                }
                Err(e) => err(e),
            },
        )
    }),
    ("codeword-syndromes-vanish", || {
        let code = example1();
        let r = LocatorSpec::spc(2, 5, 1)
            .and_then(|l| nzl::mu_search(code.defining_set(), 21, &l, MuSearchOptions::fixed(1)))
            .map_err(|e| e.to_string())
            .and_then(|c| DecoderContext::build(&code, &c).map_err(|e| e.to_string()))
            .and_then(|ctx| {
                let c = ctx
                    .encode(&[1, 1, 0, 1, 0, 0, 1])
                    .map_err(|e| e.to_string())?;
                ctx.syndromes(&c).map_err(|e| e.to_string())
            });
        (
            "S = 0".into(),
            r.map_or_else(err, |s| {
                if s.is_zero() {
                    "S = 0".into()
                } else {
                    format!("{:?}", s.coeffs())
                }
            }),
        )
    }),
];

/// Names of all fixtures, in table order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Runs the fixtures whose name contains `only` (all when `None`).
pub fn run_checks(only: Option<&str>) -> Vec<CheckRow> {
    CHECKS
        .iter()
        .filter(|(name, _)| only.is_none_or(|o| name.contains(o)))
        .map(|(name, check)| {
            let (expected, computed) = check();
            CheckRow {
                name: name.to_string(),
                pass: expected == computed,
                expected,
                computed,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_passes() {
        for row in run_checks(None) {
            assert!(row.pass, "{row:?}");
        }
    }

    #[test]
    fn filter_selects_one_row() {
        let rows = run_checks(Some("example1-oracle"));
        assert_eq!(rows.len(), 1);
        let names = check_names();
        assert_eq!(names.iter().collect::<BTreeSet<_>>().len(), names.len());
    }
}
