use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::subsequence;

use cyclic_bound::cyclic::{self, CyclicCode};
use cyclic_bound::decoder::DecoderContext;
use cyclic_bound::gf::{self, Elem, Poly};
use cyclic_bound::nzl::{self, MuSearchOptions};

const FIELDS: [(u64, u32); 6] = [(2, 1), (2, 4), (2, 8), (3, 3), (5, 2), (7, 2)];

fn field_and_elems() -> impl Strategy<Value = ((u64, u32), u32, u32, u32)> {
    prop::sample::select(&FIELDS[..]).prop_flat_map(|(p, m)| {
        let order = (p as u32).pow(m);
        (Just((p, m)), 0..order, 0..order, 0..order)
    })
}

/// Small binary codes given by a random nonempty subset of cosets.
fn binary_code() -> impl Strategy<Value = CyclicCode> {
    prop::sample::select(vec![15u64, 21, 23, 31, 35, 45, 51]).prop_flat_map(|n| {
        let reps: Vec<u64> = cyclic::all_cosets(n, 2)
            .unwrap()
            .iter()
            .map(|c| c[0])
            .collect();
        let len = reps.len();
        subsequence(reps, 1..len).prop_map(move |r| CyclicCode::build(2, n, &r).unwrap())
    })
}

/// Decoders for a few fixed codes over GF(2), GF(3) and GF(4), each with
/// the best certificate found by the bound search.
fn decoders() -> &'static [DecoderContext] {
    static CTX: OnceLock<Vec<DecoderContext>> = OnceLock::new();
    CTX.get_or_init(|| {
        [
            (2, 21, vec![1, 3, 7, 9]),
            (2, 65, vec![1, 5]),
            (3, 13, vec![1, 2, 4]),
            (4, 15, vec![1, 2, 3]),
        ]
        .into_iter()
        .map(|(q, n, reps)| {
            let code = CyclicCode::build(q, n, &reps).unwrap();
            let best = nzl::best_bound(&code, Default::default()).unwrap();
            DecoderContext::build(&code, &best.certificate).unwrap()
        })
        .collect()
    })
}

proptest! {
    #[test]
    fn field_axioms(((p, m), a, b, c) in field_and_elems()) {
        let f = gf::cached_field(p, m).unwrap();
        let (a, b, c) = (Elem(a), Elem(b), Elem(c));
        prop_assert_eq!(f.mul(a, b), f.mul_reference(a, b));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Elem(0));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a)), Elem(1));
            prop_assert_eq!(f.pow(a, f.group_order() as i64), Elem(1));
        }
    }

    #[test]
    fn poly_division(a in prop::collection::vec(0u32..16, 0..12), b in prop::collection::vec(0u32..16, 1..6)) {
        let f = gf::cached_field(2, 4).unwrap();
        let pa = Poly::new(f.clone(), a.into_iter().map(Elem).collect());
        let pb = Poly::new(f.clone(), b.into_iter().map(Elem).collect());
        prop_assume!(!pb.is_zero());
        let (q, r) = pa.div_rem(&pb).unwrap();
        prop_assert_eq!(q.checked_mul(&pb).unwrap().checked_add(&r).unwrap(), pa);
        prop_assert!(r.degree().is_none_or(|d| Some(d) < pb.degree()));
    }

    #[test]
    fn certificates_verify_and_respect_distance(code in binary_code()) {
        let n = code.n();
        let d = (code.k() <= 16).then(|| cyclic::min_distance_oracle(&code, 1 << 16).unwrap().d_true);
        for loc in nzl::candidate_locators(n, 2, Default::default()) {
            let cert = match nzl::mu_search(code.defining_set(), n, &loc, MuSearchOptions::default()) {
                Ok(c) => c,
                Err(nzl::NzlError::DegenerateCover) => continue,
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            };
            prop_assert!(nzl::verify_certificate(code.defining_set(), n, &cert));
            prop_assert_eq!(cert.d_star, nzl::nzl_bound(cert.mu, loc.d_l));
            // the run is maximal, so a longer claim is rejected
            let longer = nzl::NzlCertificate { mu: cert.mu + 1, ..cert.clone() };
            prop_assert!(!nzl::verify_certificate(code.defining_set(), n, &longer));
            if let Some(d) = d {
                prop_assert!(cert.d_star <= d, "{} gives {} > {}", loc.label(), cert.d_star, d);
            }
        }
        // the trivial locator never loses to BCH
        let trivial = nzl::mu_search(code.defining_set(), n, &nzl::LocatorSpec::trivial(2), Default::default());
        if let Ok(c) = trivial {
            prop_assert!(c.d_star >= cyclic::bch_bound(&code).value);
        }
    }

    #[test]
    fn codewords_are_annihilated(idx in 0usize..4, seed in prop::collection::vec(0u32..64, 68)) {
        let ctx = &decoders()[idx];
        let q = ctx.code().q() as u32;
        let msg: Vec<u32> = seed.iter().take(ctx.code().k() as usize).map(|&s| s % q).collect();
        let c = ctx.encode(&msg).unwrap();
        prop_assert!(ctx.is_codeword(&c).unwrap());
        prop_assert!(ctx.syndromes(&c).unwrap().is_zero());
        let res = ctx.decode(&c).unwrap();
        prop_assert!(res.is_success() && res.positions.is_empty());
    }

    #[test]
    fn planted_errors_are_corrected(
        idx in 0usize..4,
        seed in prop::collection::vec(0u32..64, 68),
        picks in prop::collection::vec((0usize..65, 1u32..4), 0..4),
    ) {
        let ctx = &decoders()[idx];
        let code = ctx.code();
        let (q, n) = (code.q(), code.n() as usize);
        let msg: Vec<u32> = seed.iter().take(code.k() as usize).map(|&s| s % q as u32).collect();
        let c = ctx.encode(&msg).unwrap();
        let mut errors: Vec<(usize, u32)> = Vec::new();
        for (p, v) in picks {
            let p = p % n;
            if errors.len() < ctx.radius() as usize && errors.iter().all(|e| e.0 != p) {
                errors.push((p, 1 + (v - 1) % (q as u32 - 1)));
            }
        }
        errors.sort_unstable();
        let f = ctx.field();
        let mut r = c.clone();
        for &(p, v) in &errors {
            let sum = f.add(f.digit_to_elem(r[p], q).unwrap(), f.digit_to_elem(v, q).unwrap());
            r[p] = f.elem_to_digit(sum, q).unwrap();
        }
        let res = ctx.decode(&r).unwrap();
        prop_assert!(res.is_success(), "{:?}", res);
        prop_assert_eq!(res.positions, errors.iter().map(|e| e.0 as u64).collect::<Vec<_>>());
        prop_assert_eq!(res.values, errors.iter().map(|e| e.1).collect::<Vec<_>>());
        prop_assert_eq!(res.corrected, Some(c));
    }
}
