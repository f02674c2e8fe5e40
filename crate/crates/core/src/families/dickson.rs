//! Dickson polynomials of the first kind, `D_n(x, a)` with `D_n(u + v, uv) = u^n + v^n`.
//!
//! Evaluation uses the recurrence `D_0 = 2`, `D_1 = x`,
//! `D_k = x·D_{k-1} - a·D_{k-2}`, advanced by index doubling so large degrees
//! cost O(log n) field operations.

use std::fmt;

use crate::gf::{FieldElement, FieldSpec};
use crate::numtheory::{gcd, mod_inverse};
use crate::perm::{interleaver_from_field_map, Permutation};

use super::FamilyError;

/// The parameter `a`, restricted to the values with a known inverse formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DicksonA {
    Zero,
    One,
    MinusOne,
}

impl DicksonA {
    pub fn from_int(a: i64) -> Result<DicksonA, FamilyError> {
        match a {
            0 => Ok(DicksonA::Zero),
            1 => Ok(DicksonA::One),
            -1 => Ok(DicksonA::MinusOne),
            _ => Err(FamilyError::Unsupported(format!(
                "Dickson parameter a={a} is outside {{0, 1, -1}}"
            ))),
        }
    }

    /// Classifies a field element; fails unless it is `0`, `1` or `-1`.
    pub fn from_element(field: &FieldSpec, a: FieldElement) -> Result<DicksonA, FamilyError> {
        if a.is_zero() {
            Ok(DicksonA::Zero)
        } else if a == field.one() {
            Ok(DicksonA::One)
        } else if a == field.neg(field.one()) {
            Ok(DicksonA::MinusOne)
        } else {
            Err(FamilyError::Unsupported(format!(
                "Dickson parameter {} is outside {{0, 1, -1}}",
                field.display(a)
            )))
        }
    }

    pub fn to_element(self, field: &FieldSpec) -> FieldElement {
        match self {
            DicksonA::Zero => field.zero(),
            DicksonA::One => field.one(),
            DicksonA::MinusOne => field.neg(field.one()),
        }
    }

    pub fn as_int(self) -> i64 {
        match self {
            DicksonA::Zero => 0,
            DicksonA::One => 1,
            DicksonA::MinusOne => -1,
        }
    }
}

impl fmt::Display for DicksonA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_int())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DicksonParams {
    pub n: u64,
    pub a: DicksonA,
}

impl DicksonParams {
    pub fn new(n: u64, a: DicksonA) -> DicksonParams {
        DicksonParams { n, a }
    }
}

/// `D_n(x, a)` for an arbitrary parameter `a ∈ F_q`.
pub fn dickson_eval_with(field: &FieldSpec, n: u64, a: FieldElement, x: FieldElement) -> FieldElement {
    let two = field.from_int(2);
    if n == 0 {
        return two;
    }
    // (D_k, D_{k+1}, a^k), starting from k = 0
    let (mut dk, mut dk1, mut ak) = (two, x, field.one());
    for bit in (0..64 - n.leading_zeros()).rev() {
        let d2k = field.sub(field.mul(dk, dk), field.mul(two, ak));
        let d2k1 = field.sub(field.mul(dk, dk1), field.mul(ak, x));
        let a2k = field.mul(ak, ak);
        if (n >> bit) & 1 == 0 {
            (dk, dk1, ak) = (d2k, d2k1, a2k);
        } else {
            let a2k1 = field.mul(a2k, a);
            let d2k2 = field.sub(field.mul(dk1, dk1), field.mul(two, field.mul(ak, a)));
            (dk, dk1, ak) = (d2k1, d2k2, a2k1);
        }
    }
    dk
}

/// Plain step-by-step recurrence; O(n).
pub fn dickson_eval_linear(field: &FieldSpec, n: u64, a: FieldElement, x: FieldElement) -> FieldElement {
    let (mut prev, mut cur) = (field.from_int(2), x);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = field.sub(field.mul(x, cur), field.mul(a, prev));
        prev = cur;
        cur = next;
    }
    cur
}

pub fn dickson_eval(field: &FieldSpec, params: &DicksonParams, x: FieldElement) -> FieldElement {
    dickson_eval_with(field, params.n, params.a.to_element(field), x)
}

/// `gcd(n, q²-1) = 1`, or `gcd(n, q-1) = 1` when `a = 0` (then `D_n = x^n`).
pub fn dickson_is_permutation(field: &FieldSpec, params: &DicksonParams) -> bool {
    let q = field.q();
    match params.a {
        DicksonA::Zero => gcd(params.n, q - 1) == 1,
        _ => gcd(params.n, q * q - 1) == 1,
    }
}

/// Degree `m` of the inverse `D_m(x, a)`: `nm ≡ 1 (mod q²-1)` (mod `q-1` when `a = 0`).
pub fn dickson_inverse_degree(field: &FieldSpec, params: &DicksonParams) -> Result<u64, FamilyError> {
    if !dickson_is_permutation(field, params) {
        return Err(not_a_permutation(field, params));
    }
    let q = field.q();
    let modulus = match params.a {
        DicksonA::Zero => q - 1,
        _ => q * q - 1,
    };
    if modulus == 1 {
        return Ok(1);
    }
    Ok(mod_inverse(params.n, modulus)?)
}

pub fn dickson_interleaver(field: &FieldSpec, params: &DicksonParams) -> Result<Permutation, FamilyError> {
    if !dickson_is_permutation(field, params) {
        return Err(not_a_permutation(field, params));
    }
    let a = params.a.to_element(field);
    Ok(interleaver_from_field_map(field, |x| dickson_eval_with(field, params.n, a, x))?)
}

fn not_a_permutation(field: &FieldSpec, params: &DicksonParams) -> FamilyError {
    let q = field.q();
    FamilyError::NotAPermutation(match params.a {
        DicksonA::Zero => format!("gcd(n,q-1)≠1 (n={}, q-1={})", params.n, q - 1),
        _ => format!("gcd(n,q^2-1)≠1 (n={}, q^2-1={})", params.n, q * q - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;
    use crate::numtheory::prime_power_decomposition;

    /// Explicit sum `Σ n/(n-i)·C(n-i, i)·(-a)^i·x^{n-2i}`, integer coefficients reduced mod p.
    fn closed_form(field: &FieldSpec, n: u64, a: FieldElement, x: FieldElement) -> FieldElement {
        if n == 0 {
            return field.from_int(2);
        }
        let p = field.p() as u128;
        let mut acc = field.zero();
        let minus_a = field.neg(a);
        for i in 0..=n / 2 {
            // n/(n-i)·C(n-i,i) = C(n-i,i) + C(n-i-1,i-1)
            let c = binom(n - i, i) + if i == 0 { 0 } else { binom(n - i - 1, i - 1) };
            let coeff = field.from_int((c % p) as i64);
            let term = field.mul(
                coeff,
                field.mul(
                    field.pow(minus_a, i as i64).unwrap(),
                    field.pow(x, (n - 2 * i) as i64).unwrap(),
                ),
            );
            acc = field.add(acc, term);
        }
        acc
    }

    fn binom(n: u64, k: u64) -> u128 {
        if k > n {
            return 0;
        }
        let k = k.min(n - k);
        let mut r: u128 = 1;
        for j in 0..k {
            r = r * (n - j) as u128 / (j + 1) as u128;
        }
        r
    }

    fn fields_up_to(qmax: u64) -> Vec<FieldSpec> {
        (2..=qmax)
            .filter_map(prime_power_decomposition)
            .map(|(p, m)| build_field(p, m, None).unwrap())
            .collect()
    }

    #[test]
    fn d19_over_f11_matches_displayed_polynomial() {
        let f = build_field(11, 1, None).unwrap();
        let params = DicksonParams::new(19, DicksonA::One);
        for v in 0..11i64 {
            let x = f.from_int(v);
            let expected = (v.pow(9) + 3 * v.pow(7) + 9 * v.pow(5) + 5 * v.pow(3) + 5 * v) % 11;
            assert_eq!(f.to_vector(dickson_eval(&f, &params, x)), expected as u64, "x={v}");
        }
    }

    #[test]
    fn d1_is_identity() {
        let f = build_field(3, 3, None).unwrap();
        for a in f.elements() {
            for x in f.elements() {
                assert_eq!(dickson_eval_with(&f, 1, a, x), x);
            }
        }
    }

    #[test]
    fn defining_identity_on_full_grids() {
        for f in fields_up_to(32) {
            for n in [0u64, 1, 2, 3, 5, 6, 7, 12, 19] {
                for u in f.elements() {
                    for v in f.elements() {
                        let lhs = dickson_eval_with(&f, n, f.mul(u, v), f.add(u, v));
                        let rhs = f.add(f.pow(u, n as i64).unwrap(), f.pow(v, n as i64).unwrap());
                        assert_eq!(lhs, rhs, "q={} n={n}", f.q());
                    }
                }
            }
        }
    }

    #[test]
    fn recurrence_matches_closed_form() {
        for f in fields_up_to(64) {
            let minus_one = f.neg(f.one());
            for a in [f.zero(), f.one(), minus_one, f.alpha()] {
                for n in 0..=50u64 {
                    for x in f.elements() {
                        let fast = dickson_eval_with(&f, n, a, x);
                        assert_eq!(fast, dickson_eval_linear(&f, n, a, x), "q={} n={n}", f.q());
                        assert_eq!(fast, closed_form(&f, n, a, x), "q={} n={n}", f.q());
                    }
                }
            }
        }
    }

    #[test]
    fn permutation_predicate_examples() {
        let f11 = build_field(11, 1, None).unwrap();
        let p19 = DicksonParams::new(19, DicksonA::One);
        assert!(dickson_is_permutation(&f11, &p19));
        assert_eq!(dickson_inverse_degree(&f11, &p19), Ok(19));
        assert!(!dickson_is_permutation(&f11, &DicksonParams::new(2, DicksonA::One)));
        let p7 = DicksonParams::new(7, DicksonA::Zero);
        assert!(dickson_is_permutation(&f11, &p7));
        let image = dickson_interleaver(&f11, &p7).unwrap();
        assert_eq!(image.size(), 11);
        assert!(DicksonA::from_int(2).is_err());
        assert!(DicksonA::from_element(&f11, f11.from_int(3)).is_err());
        assert_eq!(DicksonA::from_element(&f11, f11.from_int(10)), Ok(DicksonA::MinusOne));
    }

    #[test]
    fn example_interleaver_over_f11() {
        let f11 = build_field(11, 1, None).unwrap();
        let p = dickson_interleaver(&f11, &DicksonParams::new(19, DicksonA::One)).unwrap();
        assert_eq!(p.image(), &[0, 1, 2, 3, 9, 5, 6, 7, 8, 4, 10]);
    }

    #[test]
    fn inverse_degree_inverts() {
        for f in fields_up_to(32) {
            let q = f.q();
            for a in [DicksonA::Zero, DicksonA::One, DicksonA::MinusOne] {
                for n in 1..=q * q {
                    let params = DicksonParams::new(n, a);
                    if !dickson_is_permutation(&f, &params) {
                        assert!(dickson_interleaver(&f, &params).is_err());
                        continue;
                    }
                    let m = dickson_inverse_degree(&f, &params).unwrap();
                    let fwd = dickson_interleaver(&f, &params).unwrap();
                    let inv = dickson_interleaver(&f, &DicksonParams::new(m, a)).unwrap();
                    assert!(fwd.compose(&inv).unwrap().is_identity(), "q={q} n={n} a={a}");
                }
            }
        }
    }
}
