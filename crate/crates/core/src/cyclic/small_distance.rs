//! Binary cyclic codes of minimum distance two and three.

use std::collections::BTreeSet;

use super::{cyclotomic_coset, CyclicCode, CyclicError, DistanceMethod, DistanceWitness};
use crate::arith;
use crate::gf::{self, Elem};

fn violated(msg: impl Into<String>) -> CyclicError {
    CyclicError::PreconditionViolated(msg.into())
}

/// Binary cyclic code with the given representatives has distance two iff
/// `gcd(n, i_1, ..., i_s) > 1`. The empty code (`s = 0`) has distance one.
pub fn has_distance_two(n: u64, coset_reps: &[u64]) -> bool {
    !coset_reps.is_empty() && arith::gcd_all(n, coset_reps.iter().copied()) > 1
}

/// Weight-3 codeword `1 + x^(u·(1/r)) + x^(u·(b/r))` of the binary cyclic code
/// with the given representatives, where `u = n/(2^g - 1)`, `β = α^u` and
/// `1 + β + β^b = 0`; quotients are taken mod `2^g - 1`.
///
/// Every representative must reduce into the coset of `r` modulo `2^g - 1`
/// and `gcd(n, reps) = 1`, so the code has no codeword of weight below 3
/// and the distance is exactly 3.
pub fn distance_three_witness(
    n: u64,
    coset_reps: &[u64],
    g: u32,
    r: u64,
) -> Result<DistanceWitness, CyclicError> {
    if !(2..=20).contains(&g) {
        return Err(violated(format!(
            "subfield exponent g = {g} outside [2, 20]"
        )));
    }
    let ng = (1u64 << g) - 1;
    if n % ng != 0 {
        return Err(violated(format!(
            "2^{g} - 1 = {ng} does not divide n = {n}"
        )));
    }
    if r == 0 || r >= ng || arith::gcd(r, ng) != 1 {
        return Err(violated(format!("r = {r} is not a unit in (0, {ng})")));
    }
    if coset_reps.is_empty() {
        return Err(violated("no coset representatives"));
    }
    let target: BTreeSet<u64> = cyclotomic_coset(ng, 2, r)?.into_iter().collect();
    if let Some(&bad) = coset_reps.iter().find(|&&i| !target.contains(&(i % ng))) {
        return Err(violated(format!(
            "representative {bad} is not in the coset of {r} modulo {ng}"
        )));
    }
    if has_distance_two(n, coset_reps) {
        return Err(violated(
            "gcd(n, representatives) > 1: the code has distance two",
        ));
    }
    let code = CyclicCode::build(2, n, coset_reps)?;
    let u = n / ng;
    let r_inv = arith::mod_inverse(r as i64, ng as i64).expect("r is a unit") as u64;

    let word_from = |b: u64| {
        let e1 = u * r_inv;
        let e2 = u * ((b * r_inv) % ng);
        let mut word = vec![0u32; n as usize];
        for e in [0, e1, e2] {
            word[e as usize] ^= 1;
        }
        word
    };

    let word = match code.code_field() {
        Some(cf) => {
            let f = &cf.field;
            let beta = f.pow(cf.alpha, u as i64);
            let b = solve_b(f, beta, ng)?;
            let word = word_from(b);
            let elems: Vec<Elem> = word.iter().map(|&d| Elem(d)).collect();
            for &i in code.defining_set() {
                if !cf.eval_at(&elems, i as i64).is_zero() {
                    return Err(violated(format!(
                        "construction does not vanish at exponent {i}"
                    )));
                }
            }
            word
        }
        None => {
            // The code field is beyond the table limit. Evaluating at α^i only
            // involves β = α^u, so check inside GF(2^g) instead:
            // c(α^i) = 1 + β^(i/r) + β^(i b/r).
            let f = gf::cached_field(2, g)?;
            let beta = f.generator();
            let b = solve_b(&f, beta, ng)?;
            for &i in code.defining_set() {
                let t1 = f.pow(beta, ((i * r_inv) % ng) as i64);
                let t2 = f.pow(beta, ((i * b % ng) * r_inv % ng) as i64);
                if !f.add(f.add(Elem::ONE, t1), t2).is_zero() {
                    return Err(violated(format!(
                        "construction does not vanish at exponent {i}"
                    )));
                }
            }
            word_from(b)
        }
    };
    debug_assert_eq!(word.iter().filter(|&&d| d == 1).count(), 3);
    Ok(DistanceWitness {
        d_true: 3,
        codeword: Some(word),
        method: DistanceMethod::WeightThreeConstruction,
    })
}

/// The `b ∈ [1, 2^g - 2]` with `1 + β + β^b = 0`.
fn solve_b(f: &gf::FieldCtx, beta: Elem, ng: u64) -> Result<u64, CyclicError> {
    let target = f.add(Elem::ONE, beta);
    (1..ng)
        .find(|&b| f.pow(beta, b as i64) == target)
        .ok_or_else(|| violated("β is not a primitive element of GF(2^g)"))
}

fn check_odd_length(n: u64) -> Result<(), CyclicError> {
    if n % 2 == 0 {
        return Err(violated(format!(
            "binary cyclic codes need odd length, got n = {n}"
        )));
    }
    Ok(())
}

/// Binary cyclic code of length `n = a·g` with defining set
/// `{0, g, 2g, ..., (a-1)g}`: distance two, dimension `a(g-1)`.
pub fn lowest_rate_d2_code(a: u64, g: u64) -> Result<CyclicCode, CyclicError> {
    if a < 2 || g < 2 {
        return Err(violated(format!(
            "need a > 1 and g > 1, got a = {a}, g = {g}"
        )));
    }
    let n = a * g;
    check_odd_length(n)?;
    let set: Vec<i64> = (0..a).map(|j| (j * g) as i64).collect();
    let (code, added) = CyclicCode::from_defining_set(2, n, &set)?;
    debug_assert!(!added);
    let proof_set = lowest_rate_d2_proof_set(a, g)?;
    if proof_set != code.defining_set() {
        log::warn!(
            "multiples of g = {g} differ from the union of cosets with gcd(i, g) > 1 \
             (n = {n}: {} vs {} elements); using the multiples",
            code.defining_set().len(),
            proof_set.len()
        );
    }
    Ok(code)
}

/// `{ i ∈ [0, a·g) : gcd(i, g) > 1 }`, the alternative distance-two selection.
/// It coincides with the multiples of `g` exactly when `g` is prime.
pub fn lowest_rate_d2_proof_set(a: u64, g: u64) -> Result<Vec<u64>, CyclicError> {
    let n = a * g;
    check_odd_length(n)?;
    Ok((0..n).filter(|&i| arith::gcd(i, g) > 1).collect())
}

/// Binary cyclic code of length `n = a(2^g - 1)` with defining set
/// `{ r·i mod n : i = j(2^g - 1) + 2^t, 0 ≤ j < a, 0 ≤ t < g }`: distance
/// three, dimension `a(2^g - 1 - g)`.
pub fn lowest_rate_d3_code(a: u64, g: u32, r: u64) -> Result<CyclicCode, CyclicError> {
    if a < 2 || !(2..=20).contains(&g) {
        return Err(violated(format!(
            "need a > 1 and 2 <= g <= 20, got a = {a}, g = {g}"
        )));
    }
    let ng = (1u64 << g) - 1;
    if r == 0 || r >= ng || arith::gcd(r, ng) != 1 {
        return Err(violated(format!("r = {r} is not a unit in (0, {ng})")));
    }
    let n = a * ng;
    check_odd_length(n)?;
    let set: BTreeSet<u64> = (0..a)
        .flat_map(|j| (0..g).map(move |t| j * ng + (1u64 << t)))
        .map(|i| (r * i) % n)
        .collect();
    if set.len() as u64 != a * g as u64 {
        return Err(violated(format!(
            "r = {r} maps the pattern onto only {} of {} exponents mod {n}",
            set.len(),
            a * g as u64
        )));
    }
    let indices: Vec<i64> = set.iter().map(|&i| i as i64).collect();
    let (code, added) = CyclicCode::from_defining_set(2, n, &indices)?;
    if added {
        return Err(violated("pattern is not closed under multiplication by 2"));
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::{min_distance_oracle, DEFAULT_ORACLE_CAP};

    #[test]
    fn distance_two_gcd_test() {
        assert!(has_distance_two(21, &[3, 9]));
        assert!(!has_distance_two(119, &[1, 11, 51]));
        assert!(has_distance_two(15, &[0]));
        assert!(!has_distance_two(15, &[]));
        let code = CyclicCode::build(2, 21, &[3, 9]).unwrap();
        assert_eq!(
            min_distance_oracle(&code, DEFAULT_ORACLE_CAP)
                .unwrap()
                .d_true,
            2
        );
    }

    #[test]
    fn witness_for_length_119() {
        let w = distance_three_witness(119, &[1, 11, 51], 3, 1).unwrap();
        let cw = w.codeword.unwrap();
        assert_eq!(cw.iter().filter(|&&d| d == 1).count(), 3);
        assert_eq!(cw[0], 1);
        // exponents are multiples of u = 17
        for (i, &d) in cw.iter().enumerate() {
            if d == 1 {
                assert_eq!(i % 17, 0);
            }
        }
    }

    #[test]
    fn witness_in_primitive_case_checked_in_code_field() {
        // n = 2^4 - 1, u = 1: the Hamming code and a larger code in the coset of 1 mod 15.
        for reps in [&[1u64][..]] {
            let w = distance_three_witness(15, reps, 4, 1).unwrap();
            let code = CyclicCode::build(2, 15, reps).unwrap();
            let cf = code.code_field().unwrap();
            let elems: Vec<Elem> = w.codeword.unwrap().iter().map(|&d| Elem(d)).collect();
            for &i in code.defining_set() {
                assert_eq!(cf.eval_at(&elems, i as i64), Elem::ZERO);
            }
            assert_eq!(
                min_distance_oracle(&code, DEFAULT_ORACLE_CAP)
                    .unwrap()
                    .d_true,
                3
            );
        }
    }

    #[test]
    fn witness_preconditions() {
        assert!(distance_three_witness(21, &[3, 9], 2, 1).is_err());
        assert!(distance_three_witness(119, &[1, 3], 3, 1).is_err());
        assert!(distance_three_witness(22, &[1], 3, 1).is_err());
        assert!(distance_three_witness(21, &[1], 3, 7).is_err());
    }

    #[test]
    fn lowest_rate_d2() {
        let c = lowest_rate_d2_code(7, 3).unwrap();
        assert_eq!((c.n(), c.k()), (21, 14));
        assert_eq!(c.defining_set(), &[0, 3, 6, 9, 12, 15, 18]);
        assert_eq!(
            min_distance_oracle(&c, DEFAULT_ORACLE_CAP).unwrap().d_true,
            2
        );
        assert!(lowest_rate_d2_code(2, 2).is_err());
        // g composite: the two selections differ
        assert_ne!(
            lowest_rate_d2_proof_set(3, 9).unwrap(),
            lowest_rate_d2_code(3, 9).unwrap().defining_set()
        );
    }

    #[test]
    fn lowest_rate_d3() {
        let c = lowest_rate_d3_code(17, 3, 1).unwrap();
        assert_eq!((c.n(), c.k()), (119, 68));
        assert_eq!(c, CyclicCode::build(2, 119, &[1, 11, 51]).unwrap());
        let small = lowest_rate_d3_code(5, 2, 1).unwrap();
        assert_eq!((small.n(), small.k()), (15, 5));
        assert_eq!(
            min_distance_oracle(&small, DEFAULT_ORACLE_CAP)
                .unwrap()
                .d_true,
            3
        );
        let other = lowest_rate_d3_code(5, 3, 3).unwrap();
        assert_eq!(other.k(), 5 * 4);
        assert!(lowest_rate_d3_code(3, 3, 3).is_err());
        assert_eq!(
            min_distance_oracle(&other, DEFAULT_ORACLE_CAP)
                .unwrap()
                .d_true,
            3
        );
    }
}
