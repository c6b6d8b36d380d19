use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

use super::{Elem, FieldCtx, GfError};

/// Univariate polynomial over a [`FieldCtx`], coefficients lowest degree first.
///
/// The coefficient vector is kept trimmed, so the zero polynomial has no
/// coefficients and [`Poly::degree`] returns `None` (degree −∞).
#[derive(Clone)]
pub struct Poly {
    field: Arc<FieldCtx>,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(field: Arc<FieldCtx>, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: &Arc<FieldCtx>) -> Self {
        Poly::new(Arc::clone(field), Vec::new())
    }

    pub fn one(field: &Arc<FieldCtx>) -> Self {
        Poly::constant(field, Elem::ONE)
    }

    pub fn constant(field: &Arc<FieldCtx>, c: Elem) -> Self {
        Poly::new(Arc::clone(field), vec![c])
    }

    /// `c · x^deg`.
    pub fn monomial(field: &Arc<FieldCtx>, c: Elem, deg: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly::new(Arc::clone(field), coeffs)
    }

    /// `∏ (x - r)` over the given roots.
    pub fn from_roots(field: &Arc<FieldCtx>, roots: impl IntoIterator<Item = Elem>) -> Self {
        let mut acc = Poly::one(field);
        for r in roots {
            let lin = Poly::new(Arc::clone(field), vec![field.neg(r), Elem::ONE]);
            acc = &acc * &lin;
        }
        acc
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn same_field(&self, other: &Poly) -> Result<(), GfError> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, GfError> {
        self.same_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Poly::new(Arc::clone(f), coeffs))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, GfError> {
        self.same_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Poly::new(Arc::clone(f), coeffs))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, GfError> {
        self.same_field(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(f));
        }
        let mut coeffs = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(Arc::clone(f), coeffs))
    }

    /// Quotient and remainder of division by `divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), GfError> {
        self.same_field(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(GfError::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd]);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], lead_inv);
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((
            Poly::new(Arc::clone(f), quot),
            Poly::new(Arc::clone(f), rem),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, GfError> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// `Σ P_i x^i` by Horner's rule.
    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Formal derivative; the multiplier `i` is reduced modulo the characteristic.
    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
            .collect();
        Poly::new(Arc::clone(f), coeffs)
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(
            Arc::clone(f),
            self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        )
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(self.field.inv(l)),
            None => self.clone(),
        }
    }

    /// `P(c·x)`.
    pub fn scale_arg(&self, c: Elem) -> Poly {
        let f = &self.field;
        let mut power = Elem::ONE;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                let v = f.mul(a, power);
                power = f.mul(power, c);
                v
            })
            .collect();
        Poly::new(Arc::clone(f), coeffs)
    }

    /// `P mod x^k`.
    pub fn truncate(&self, k: usize) -> Poly {
        let coeffs = self.coeffs.iter().take(k).copied().collect();
        Poly::new(Arc::clone(&self.field), coeffs)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, GfError> {
        self.same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other).is_ok() && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{:?}](", self.field)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c.0)?;
        }
        write!(f, ")")
    }
}

/// Panics if the operands live in different fields; use `checked_add` to handle that case.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomial field mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomial field mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial field mismatch")
    }
}
