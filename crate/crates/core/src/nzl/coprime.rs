//! Distinct error positions give coprime locator factors when `gcd(n, n_l) = 1`.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::NzlError;
use crate::gf::{self, FieldCtx, Poly};

fn factor_roots(
    field: &FieldCtx,
    alpha: gf::Elem,
    beta: gf::Elem,
    support: &[u64],
    i: u64,
) -> BTreeSet<u32> {
    support
        .iter()
        .map(|&m| {
            field
                .mul(field.pow(alpha, i as i64), field.pow(beta, m as i64))
                .0
        })
        .collect()
}

fn roots(field: &Arc<FieldCtx>, n: u64, n_l: u64) -> Result<(gf::Elem, gf::Elem), NzlError> {
    Ok((
        gf::nth_root_of_unity(field, n)?,
        gf::nth_root_of_unity(field, n_l)?,
    ))
}

/// `{α^i β^m : m ∈ Z}` and `{α^j β^m : m ∈ Z}` share no element.
pub fn factor_sets_disjoint(
    field: &Arc<FieldCtx>,
    n: u64,
    n_l: u64,
    support: &[u64],
    i: u64,
    j: u64,
) -> Result<bool, NzlError> {
    let (alpha, beta) = roots(field, n, n_l)?;
    let a = factor_roots(field, alpha, beta, support, i);
    let b = factor_roots(field, alpha, beta, support, j);
    Ok(a.is_disjoint(&b))
}

/// `gcd(∏_{m ∈ Z} (1 - x α^i β^m), ∏_{m ∈ Z} (1 - x α^j β^m)) = 1`, computed
/// with polynomial arithmetic.
pub fn factor_products_coprime(
    field: &Arc<FieldCtx>,
    n: u64,
    n_l: u64,
    support: &[u64],
    i: u64,
    j: u64,
) -> Result<bool, NzlError> {
    let (alpha, beta) = roots(field, n, n_l)?;
    let product = |i: u64| {
        // 1 - x c has the single root c^{-1}.
        let inv_roots = support
            .iter()
            .map(|&m| field.inv(field.mul(field.pow(alpha, i as i64), field.pow(beta, m as i64))));
        Poly::from_roots(field, inv_roots)
    };
    let g = product(i).gcd(&product(j))?;
    Ok(g.degree() == Some(0))
}
