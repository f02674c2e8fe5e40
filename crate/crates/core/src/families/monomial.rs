//! Monomials `x^n`.

use crate::gf::{FieldElement, FieldSpec};
use crate::numtheory::{gcd, mod_inverse};
use crate::perm::Permutation;

use super::FamilyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialParams {
    pub n: u64,
}

/// `x^n` permutes `F_q` iff `gcd(n, q-1) = 1`.
pub fn monomial_is_permutation(field: &FieldSpec, n: u64) -> bool {
    n >= 1 && gcd(n, field.order()) == 1
}

/// The exponent `m` with `nm ≡ 1 (mod q-1)`, so that `x^m` inverts `x^n`.
pub fn monomial_inverse_exponent(field: &FieldSpec, n: u64) -> Result<u64, FamilyError> {
    if !monomial_is_permutation(field, n) {
        return Err(not_a_permutation(field, n));
    }
    if field.order() == 1 {
        return Ok(1);
    }
    Ok(mod_inverse(n, field.order())?)
}

pub fn monomial_eval(field: &FieldSpec, n: u64, x: FieldElement) -> FieldElement {
    field.pow(x, n as i64).expect("non-negative exponent")
}

/// Closed form `Π(0) = 0`, `Π(i) = n·i mod (q-1)` in `{1, …, q-1}`.
pub fn monomial_interleaver(field: &FieldSpec, n: u64) -> Result<Permutation, FamilyError> {
    if !monomial_is_permutation(field, n) {
        return Err(not_a_permutation(field, n));
    }
    let order = field.order() as u128;
    let image = (0..field.q())
        .map(|i| match i {
            0 => 0,
            i => ((n as u128 * i as u128 + order - 1) % order + 1) as usize,
        })
        .collect();
    Ok(Permutation::new(image)?)
}

fn not_a_permutation(field: &FieldSpec, n: u64) -> FamilyError {
    FamilyError::NotAPermutation(format!(
        "gcd(n,q-1)≠1 (n={n}, q-1={}, gcd={})",
        field.order(),
        gcd(n, field.order())
    ))
}
