use super::{GfError, Poly};

/// One row of the extended Euclidean remainder sequence:
/// `cofactor_b · B + cofactor_a · A = remainder`.
#[derive(Debug, Clone)]
pub struct EuclidStep {
    pub index: usize,
    pub remainder: Poly,
    pub cofactor_b: Poly,
    pub cofactor_a: Poly,
}

/// Iterator over the remainder sequence `r_0 = B, r_1, ...` of `(A, B)`,
/// ending before the first zero remainder.
pub struct RemainderSequence {
    prev: Option<EuclidStep>,
    cur: Option<EuclidStep>,
}

impl RemainderSequence {
    pub fn new(a: &Poly, b: &Poly) -> Result<Self, GfError> {
        let field = a.field();
        if **b.field() != **field {
            return Err(GfError::FieldMismatch);
        }
        let prev = EuclidStep {
            index: 0,
            remainder: a.clone(),
            cofactor_b: Poly::zero(field),
            cofactor_a: Poly::one(field),
        };
        let cur = EuclidStep {
            index: 0,
            remainder: b.clone(),
            cofactor_b: Poly::one(field),
            cofactor_a: Poly::zero(field),
        };
        Ok(RemainderSequence {
            prev: Some(prev),
            cur: (!b.is_zero()).then_some(cur),
        })
    }
}

impl Iterator for RemainderSequence {
    type Item = EuclidStep;

    fn next(&mut self) -> Option<EuclidStep> {
        let cur = self.cur.take()?;
        let prev = self.prev.take().expect("sequence state");
        let (q, r) = prev
            .remainder
            .div_rem(&cur.remainder)
            .expect("current remainder is nonzero");
        if !r.is_zero() {
            self.cur = Some(EuclidStep {
                index: cur.index + 1,
                remainder: r,
                cofactor_b: &prev.cofactor_b - &(&q * &cur.cofactor_b),
                cofactor_a: &prev.cofactor_a - &(&q * &cur.cofactor_a),
            });
        }
        self.prev = Some(cur.clone());
        Some(cur)
    }
}

/// Runs the remainder sequence of `(A, B)` and returns the first
/// `(r_j, u_j)` with `deg r_j < stop_degree`, where `u_j · B ≡ r_j (mod A)`.
/// If the sequence reaches a zero remainder first, the last nonzero
/// remainder (the gcd) and its cofactor are returned.
pub fn extended_euclid_step_sequence(
    a: &Poly,
    b: &Poly,
    stop_degree: usize,
) -> Result<(Poly, Poly), GfError> {
    match (a.degree(), b.degree()) {
        (Some(da), Some(db)) if da > db => {}
        _ => {
            return Err(GfError::InvalidInput(
                "extended Euclid requires deg A > deg B >= 0".into(),
            ))
        }
    }
    let mut last = None;
    for step in RemainderSequence::new(a, b)? {
        let below = step.remainder.degree().is_none_or(|d| d < stop_degree);
        if below {
            return Ok((step.remainder, step.cofactor_b));
        }
        last = Some(step);
    }
    let last = last.expect("B is nonzero");
    Ok((last.remainder, last.cofactor_b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{build_field, Elem};
    use std::sync::Arc;

    #[test]
    fn already_below_threshold() {
        let f = build_field(2, 1).unwrap();
        let a = Poly::monomial(&f, Elem::ONE, 3);
        let b = Poly::monomial(&f, Elem::ONE, 1);
        let (r, u) = extended_euclid_step_sequence(&a, &b, 2).unwrap();
        assert_eq!(r, b);
        assert_eq!(u, Poly::one(&f));
    }

    #[test]
    fn stop_zero_yields_gcd() {
        let f = build_field(2, 4).unwrap();
        let common = Poly::from_roots(&f, [f.gen_pow(3), f.gen_pow(7)]);
        let a = &common * &Poly::from_roots(&f, [f.gen_pow(1), f.gen_pow(2), Elem::ONE]);
        let b = &common * &Poly::from_roots(&f, [f.gen_pow(5)]);
        let (r, _) = extended_euclid_step_sequence(&a, &b, 0).unwrap();
        assert_eq!(r.monic(), common);
    }

    #[test]
    fn rejects_bad_degrees() {
        let f = build_field(2, 2).unwrap();
        let a = Poly::monomial(&f, Elem::ONE, 1);
        assert!(extended_euclid_step_sequence(&a, &a, 0).is_err());
        assert!(extended_euclid_step_sequence(&a, &Poly::zero(&f), 0).is_err());
    }

    #[test]
    fn bezout_and_degree_invariants() {
        let f = build_field(3, 3).unwrap();
        let a = Poly::monomial(&f, Elem::ONE, 9);
        let b = Poly::new(Arc::clone(&f), (1..9).map(|i| f.gen_pow(i * 5)).collect());
        let steps: Vec<_> = RemainderSequence::new(&a, &b).unwrap().collect();
        assert!(steps.len() > 2);
        let mut prev_deg = a.degree().unwrap();
        for s in &steps {
            let lhs = &(&s.cofactor_b * &b) + &(&s.cofactor_a * &a);
            assert_eq!(lhs, s.remainder);
            assert_eq!(
                s.cofactor_b.degree().unwrap() + prev_deg,
                a.degree().unwrap()
            );
            prev_deg = s.remainder.degree().unwrap();
        }
    }
}
