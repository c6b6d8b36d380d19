//! Exhaustive minimum-distance computation for small codes.

use rayon::prelude::*;

use super::{CodeField, CyclicCode, CyclicError, DistanceMethod, DistanceWitness};
use crate::gf::Elem;

/// Default limit on the number of enumerated messages.
pub const DEFAULT_ORACLE_CAP: u128 = 1 << 24;

/// Low message bits handled through a lookup table in the binary path.
const LOW_BITS: u32 = 12;

/// Exact minimum distance by enumerating all nonzero `m(x) g(x)` with
/// `deg m < k`. Messages are visited in increasing order of their base-`q`
/// value (digit `i` is the coefficient of `x^i`); among codewords of minimum
/// weight the first one in that order is returned.
pub fn min_distance_oracle(code: &CyclicCode, cap: u128) -> Result<DistanceWitness, CyclicError> {
    let cf = match code.code_field() {
        Some(cf) => cf,
        None => {
            check_count(code, cap)?;
            return Err(code.natural_field().expect_err("field instance missing"));
        }
    };
    let (weight, word) = min_weight_in_field(code, cf, cap)?;
    let q = code.q();
    let digits = word
        .iter()
        .map(|&c| cf.field.elem_to_digit(c, q).expect("codeword over GF(q)"))
        .collect();
    Ok(DistanceWitness {
        d_true: weight,
        codeword: Some(digits),
        method: DistanceMethod::Oracle,
    })
}

fn check_count(code: &CyclicCode, cap: u128) -> Result<(), CyclicError> {
    let k = code.k();
    if k == 0 {
        return Err(CyclicError::PreconditionViolated(
            "the zero code has no nonzero codeword".into(),
        ));
    }
    let count = (code.q() as u128)
        .checked_pow(k as u32)
        .unwrap_or(u128::MAX);
    if count > cap {
        return Err(CyclicError::TooManyCodewords { count, cap });
    }
    Ok(())
}

/// Like [`min_distance_oracle`] but for the code instantiated in an arbitrary
/// field; the codeword is returned as elements of that field.
pub fn min_weight_in_field(
    code: &CyclicCode,
    cf: &CodeField,
    cap: u128,
) -> Result<(u64, Vec<Elem>), CyclicError> {
    check_count(code, cap)?;
    let k = code.k();
    let n = code.n() as usize;
    let q = code.q();
    if q == 2 && n <= 128 {
        // Over GF(2) the coefficients are 0 and 1 in every field of characteristic 2.
        let g: Vec<u32> = cf.generator.coeffs().iter().map(|c| c.0).collect();
        let (w, bits) = binary_search(&g, k as u32, n);
        Ok((w as u64, bits.into_iter().map(Elem).collect()))
    } else {
        let digits = cf.field.subfield_elements(q)?;
        let (w, word) = general_search(&cf.field, &digits, cf.generator.coeffs(), k as usize, n);
        Ok((w as u64, word))
    }
}

fn binary_search(g: &[u32], k: u32, n: usize) -> (u32, Vec<u32>) {
    let gbits: u128 = g
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == 1)
        .fold(0, |acc, (i, _)| acc | 1u128 << i);
    let low = k.min(LOW_BITS);
    let high = k - low;
    let table: Vec<u128> = (0..1u64 << low).map(|m| combine(gbits, m, 0)).collect();
    let (weight, msg) = (0..1u64 << high)
        .into_par_iter()
        .map(|h| {
            let base = combine(gbits, h, low);
            let mut best = (u32::MAX, u64::MAX);
            for (l, &t) in table.iter().enumerate() {
                let msg = h << low | l as u64;
                if msg == 0 {
                    continue;
                }
                let w = (base ^ t).count_ones();
                if w < best.0 {
                    best = (w, msg);
                }
            }
            best
        })
        .min()
        .expect("at least one message");
    let word = combine(gbits, msg, 0);
    (weight, (0..n).map(|i| (word >> i & 1) as u32).collect())
}

/// `Σ_{i : bit i of m} g · x^(i + shift)` over GF(2).
fn combine(g: u128, m: u64, shift: u32) -> u128 {
    (0..64)
        .filter(|&i| m >> i & 1 == 1)
        .fold(0, |acc, i| acc ^ g << (i + shift))
}

fn general_search(
    field: &crate::gf::FieldCtx,
    digits: &[Elem],
    g: &[Elem],
    k: usize,
    n: usize,
) -> (u32, Vec<Elem>) {
    let mut msg = vec![0usize; k];
    let mut word = vec![Elem::ZERO; n];
    let mut best: Option<(u32, Vec<Elem>)> = None;
    'outer: loop {
        // Odometer increment, updating the codeword by the change in one digit.
        let mut i = 0;
        loop {
            if i == k {
                break 'outer;
            }
            let old = digits[msg[i]];
            msg[i] = (msg[i] + 1) % digits.len();
            let delta = field.sub(digits[msg[i]], old);
            for (j, &c) in g.iter().enumerate() {
                word[i + j] = field.add(word[i + j], field.mul(delta, c));
            }
            if msg[i] != 0 {
                break;
            }
            i += 1;
        }
        let w = word.iter().filter(|c| !c.is_zero()).count() as u32;
        if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
            best = Some((w, word.clone()));
            if w == 1 {
                break;
            }
        }
    }
    best.expect("at least one message")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weight(w: &[u32]) -> u64 {
        w.iter().filter(|&&d| d != 0).count() as u64
    }

    #[test]
    fn example1_distance_eight() {
        let code = CyclicCode::build(2, 21, &[1, 3, 7, 9]).unwrap();
        let w = min_distance_oracle(&code, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(w.d_true, 8);
        let cw = w.codeword.unwrap();
        assert_eq!(weight(&cw), 8);
        let cf = code.code_field().unwrap();
        let elems: Vec<Elem> = cw.iter().map(|&d| Elem(d)).collect();
        for &i in code.defining_set() {
            assert_eq!(cf.eval_at(&elems, i as i64), Elem::ZERO);
        }
    }

    #[test]
    fn repetition_code() {
        let code = CyclicCode::build(2, 9, &[1, 3]).unwrap();
        assert_eq!(code.k(), 1);
        assert_eq!(
            min_distance_oracle(&code, DEFAULT_ORACLE_CAP)
                .unwrap()
                .d_true,
            9
        );
    }

    #[test]
    fn hamming_like_code_respects_bch() {
        let code = CyclicCode::build(2, 21, &[1]).unwrap();
        let d = min_distance_oracle(&code, DEFAULT_ORACLE_CAP)
            .unwrap()
            .d_true;
        assert!(d >= super::super::bch_bound(&code).value);
    }

    #[test]
    fn cap_is_enforced() {
        let code = CyclicCode::build(2, 65, &[1, 5]).unwrap();
        assert!(matches!(
            min_distance_oracle(&code, DEFAULT_ORACLE_CAP),
            Err(CyclicError::TooManyCodewords { .. })
        ));
    }

    #[test]
    fn general_path_agrees_with_binary_path() {
        for reps in [&[1u64][..], &[1, 3], &[0, 1], &[1, 5, 7]] {
            let code = CyclicCode::build(2, 15, reps).unwrap();
            let cf = code.code_field().unwrap();
            let g: Vec<u32> = cf.generator.coeffs().iter().map(|c| c.0).collect();
            let (wb, cb) = binary_search(&g, code.k() as u32, 15);
            let digits = cf.field.subfield_elements(2).unwrap();
            let (wg, cg) = general_search(
                &cf.field,
                &digits,
                cf.generator.coeffs(),
                code.k() as usize,
                15,
            );
            assert_eq!(wb, wg);
            let cg: Vec<u32> = cg.iter().map(|c| c.0).collect();
            assert_eq!(cb, cg, "first minimum-weight codeword in message order");
        }
    }

    #[test]
    fn quaternary_code() {
        // Over GF(4), length 5: cosets {0}, {1, 4}, {2, 3}.
        let code = CyclicCode::build(4, 5, &[1]).unwrap();
        assert_eq!(code.k(), 3);
        let w = min_distance_oracle(&code, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(weight(w.codeword.as_ref().unwrap()), w.d_true);
        assert!(w.d_true >= super::super::bch_bound(&code).value);
    }
}
