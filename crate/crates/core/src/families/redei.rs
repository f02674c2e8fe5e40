//! Rédei functions `R_n = G_n/H_n`, where `(x + √a)^n = G_n(x, a) + H_n(x, a)·√a`
//! for a non-square `a` in a field of odd characteristic.
//!
//! `G_n` and `H_n` are expanded with the binomial theorem, so no arithmetic in
//! the quadratic extension is needed.

use crate::gf::{FieldElement, FieldSpec};
use crate::numtheory::{gcd, mod_inverse};
use crate::perm::{try_interleaver_from_field_map, Permutation};

use super::FamilyError;

/// Degree `n` and a non-square `a ≠ 0`; the field must have odd characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RedeiParams {
    n: u64,
    a: FieldElement,
}

impl RedeiParams {
    pub fn new(field: &FieldSpec, n: u64, a: FieldElement) -> Result<RedeiParams, FamilyError> {
        if !field.contains(a) {
            return Err(crate::gf::GfError::MixedFields.into());
        }
        if field.p() == 2 {
            return Err(FamilyError::Unsupported(
                "Rédei functions need odd characteristic".into(),
            ));
        }
        if n == 0 {
            return Err(FamilyError::Unsupported("Rédei degree must be at least 1".into()));
        }
        if a.is_zero() {
            return Err(FamilyError::Unsupported("Rédei parameter a must be nonzero".into()));
        }
        if field.is_square(a) {
            return Err(FamilyError::Unsupported(format!(
                "Rédei parameter a={} is a square in F_{}",
                field.display(a),
                field.q()
            )));
        }
        Ok(RedeiParams { n, a })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn a(&self) -> FieldElement {
        self.a
    }

    /// Same `a`, different degree.
    pub fn with_degree(&self, n: u64) -> RedeiParams {
        assert!(n >= 1);
        RedeiParams { n, a: self.a }
    }
}

/// Coefficients of `G_n` and `H_n`, indexed by the power of `x` (constant term first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedeiPolynomials {
    pub g: Vec<FieldElement>,
    pub h: Vec<FieldElement>,
}

impl RedeiPolynomials {
    pub fn eval_g(&self, field: &FieldSpec, x: FieldElement) -> FieldElement {
        horner(field, &self.g, x)
    }

    pub fn eval_h(&self, field: &FieldSpec, x: FieldElement) -> FieldElement {
        horner(field, &self.h, x)
    }

    /// `G_n(x)/H_n(x)`, or the pole error when `H_n(x) = 0`.
    pub fn eval(&self, field: &FieldSpec, x: FieldElement) -> Result<FieldElement, FamilyError> {
        let h = self.eval_h(field, x);
        if h.is_zero() {
            return Err(FamilyError::PoleEncountered { code: x.code() });
        }
        Ok(field.div(self.eval_g(field, x), h)?)
    }
}

fn horner(field: &FieldSpec, coeffs: &[FieldElement], x: FieldElement) -> FieldElement {
    coeffs
        .iter()
        .rev()
        .fold(field.zero(), |acc, &c| field.add(field.mul(acc, x), c))
}

/// `C(n, k) mod p` by Lucas' theorem.
fn binom_mod_p(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while k > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        acc = acc * small_binom_mod(ni, ki, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

/// `C(n, k) mod p` for `k ≤ n < p`.
fn small_binom_mod(n: u64, k: u64, p: u64) -> u64 {
    let k = k.min(n - k);
    let (mut num, mut den) = (1u128, 1u128);
    let pm = p as u128;
    for j in 0..k {
        num = num * (n - j) as u128 % pm;
        den = den * (j + 1) as u128 % pm;
    }
    // den is a unit since every factor is below p
    let inv = crate::numtheory::pow_mod(den as u64, p - 2, p) as u128;
    (num * inv % pm) as u64
}

pub fn redei_numerator_denominator(field: &FieldSpec, params: &RedeiParams) -> RedeiPolynomials {
    let n = params.n;
    let len = n as usize + 1;
    let mut g = vec![field.zero(); len];
    let mut h = vec![field.zero(); len];
    let mut a_pow = field.one();
    for k in 0..=n {
        let c = binom_mod_p(n, k, field.p());
        if c != 0 {
            let term = field.mul(field.from_int(c as i64), a_pow);
            let slot = (n - k) as usize;
            if k % 2 == 0 {
                g[slot] = term;
            } else {
                h[slot] = term;
            }
        }
        if k % 2 == 1 {
            a_pow = field.mul(a_pow, params.a);
        }
    }
    // H_n has degree n-1
    h.truncate(len - 1);
    RedeiPolynomials { g, h }
}

pub fn redei_eval(field: &FieldSpec, params: &RedeiParams, x: FieldElement) -> Result<FieldElement, FamilyError> {
    redei_numerator_denominator(field, params).eval(field, x)
}

/// `gcd(n, q+1) = 1`.
pub fn redei_is_permutation(field: &FieldSpec, params: &RedeiParams) -> bool {
    gcd(params.n, field.q() + 1) == 1
}

/// `m` with `nm ≡ 1 (mod q+1)`.
pub fn redei_inverse_degree(field: &FieldSpec, params: &RedeiParams) -> Result<u64, FamilyError> {
    if !redei_is_permutation(field, params) {
        return Err(not_a_permutation(field, params));
    }
    Ok(mod_inverse(params.n, field.q() + 1)?)
}

pub fn redei_interleaver(field: &FieldSpec, params: &RedeiParams) -> Result<Permutation, FamilyError> {
    if !redei_is_permutation(field, params) {
        return Err(not_a_permutation(field, params));
    }
    let polys = redei_numerator_denominator(field, params);
    try_interleaver_from_field_map(field, |x| polys.eval(field, x))
}

fn not_a_permutation(field: &FieldSpec, params: &RedeiParams) -> FamilyError {
    let q1 = field.q() + 1;
    FamilyError::NotAPermutation(format!(
        "gcd({},{})≠1 (gcd(n,q+1)={})",
        params.n,
        q1,
        gcd(params.n, q1)
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;
    use crate::numtheory::prime_power_decomposition;

    fn odd_fields_up_to(qmax: u64) -> Vec<FieldSpec> {
        (3..=qmax)
            .filter_map(prime_power_decomposition)
            .filter(|&(p, _)| p != 2)
            .map(|(p, m)| build_field(p, m, None).unwrap())
            .collect()
    }

    fn non_squares(f: &FieldSpec) -> Vec<FieldElement> {
        f.nonzero_elements().filter(|&a| !f.is_square(a)).collect()
    }

    /// `(x + √a)^n` computed in pairs `(u, v) ↔ u + v√a`.
    fn pair_power(f: &FieldSpec, a: FieldElement, x: FieldElement, n: u64) -> (FieldElement, FieldElement) {
        let mul = |(u, v): (FieldElement, FieldElement), (s, t): (FieldElement, FieldElement)| {
            (
                f.add(f.mul(u, s), f.mul(a, f.mul(v, t))),
                f.add(f.mul(u, t), f.mul(v, s)),
            )
        };
        let mut acc = (f.one(), f.zero());
        let mut base = (x, f.one());
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn ints(f: &FieldSpec, v: &[i64]) -> Vec<FieldElement> {
        v.iter().map(|&c| f.from_int(c)).collect()
    }

    #[test]
    fn g5_h5_over_f11() {
        let f = build_field(11, 1, None).unwrap();
        let params = RedeiParams::new(&f, 5, f.from_int(2)).unwrap();
        let polys = redei_numerator_denominator(&f, &params);
        assert_eq!(polys.g, ints(&f, &[0, 9, 0, 9, 0, 1]));
        assert_eq!(polys.h, ints(&f, &[4, 0, 9, 0, 5]));
        for v in 0..11 {
            let x = f.from_int(v);
            let (g, h) = (polys.eval_g(&f, x), polys.eval_h(&f, x));
            let lhs = f.sub(f.mul(g, g), f.mul(f.from_int(2), f.mul(h, h)));
            let rhs = f.pow(f.sub(f.mul(x, x), f.from_int(2)), 5).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn degree_one_is_identity() {
        let f = build_field(11, 1, None).unwrap();
        let params = RedeiParams::new(&f, 1, f.from_int(2)).unwrap();
        let polys = redei_numerator_denominator(&f, &params);
        assert_eq!(polys.g, ints(&f, &[0, 1]));
        assert_eq!(polys.h, ints(&f, &[1]));
        assert!(redei_interleaver(&f, &params).unwrap().is_identity());
    }

    #[test]
    fn evaluation_examples() {
        let f = build_field(11, 1, None).unwrap();
        let params = RedeiParams::new(&f, 5, f.from_int(2)).unwrap();
        let at = |v: i64| f.to_vector(redei_eval(&f, &params, f.from_int(v)).unwrap());
        assert_eq!(at(1), 9);
        assert_eq!(at(9), 1);
        assert_eq!(at(0), 0);
    }

    #[test]
    fn constructor_and_predicates() {
        let f11 = build_field(11, 1, None).unwrap();
        assert!(RedeiParams::new(&f11, 5, f11.from_int(3)).is_err());
        assert!(RedeiParams::new(&f11, 5, f11.zero()).is_err());
        assert!(RedeiParams::new(&f11, 0, f11.from_int(2)).is_err());
        let f8 = build_field(2, 3, None).unwrap();
        assert!(RedeiParams::new(&f8, 3, f8.alpha()).is_err());

        let p5 = RedeiParams::new(&f11, 5, f11.from_int(2)).unwrap();
        assert!(redei_is_permutation(&f11, &p5));
        assert_eq!(redei_inverse_degree(&f11, &p5), Ok(5));
        let p3 = p5.with_degree(3);
        assert!(!redei_is_permutation(&f11, &p3));
        assert!(matches!(redei_interleaver(&f11, &p3), Err(FamilyError::NotAPermutation(_))));

        let f13 = build_field(13, 1, None).unwrap();
        let q5 = RedeiParams::new(&f13, 5, f13.from_int(2)).unwrap();
        assert_eq!(redei_inverse_degree(&f13, &q5), Ok(3));
    }

    #[test]
    fn binomial_split_matches_pair_power() {
        for f in odd_fields_up_to(81) {
            for a in non_squares(&f).into_iter().take(3) {
                for n in 1..=2 * f.q() + 3 {
                    let polys = redei_numerator_denominator(&f, &RedeiParams::new(&f, n, a).unwrap());
                    for x in f.elements() {
                        let (g, h) = pair_power(&f, a, x, n);
                        assert_eq!((polys.eval_g(&f, x), polys.eval_h(&f, x)), (g, h), "q={} n={n}", f.q());
                    }
                }
            }
        }
    }

    #[test]
    fn no_poles_for_permutation_degrees() {
        for f in odd_fields_up_to(128) {
            let q = f.q();
            for a in non_squares(&f) {
                for n in (1..=q + 1).filter(|&n| gcd(n, q + 1) == 1) {
                    let polys = redei_numerator_denominator(&f, &RedeiParams::new(&f, n, a).unwrap());
                    for x in f.elements() {
                        assert!(!polys.eval_h(&f, x).is_zero(), "q={q} n={n} x={}", x.code());
                    }
                }
            }
        }
    }

    #[test]
    fn composition_law() {
        for f in odd_fields_up_to(64) {
            let a = non_squares(&f)[0];
            let base = RedeiParams::new(&f, 1, a).unwrap();
            for n in 1..=10u64 {
                for m in 1..=10u64 {
                    let rn = redei_numerator_denominator(&f, &base.with_degree(n));
                    let rm = redei_numerator_denominator(&f, &base.with_degree(m));
                    let rnm = redei_numerator_denominator(&f, &base.with_degree(n * m));
                    for x in f.elements() {
                        let Ok(inner) = rm.eval(&f, x) else { continue };
                        let Ok(outer) = rn.eval(&f, inner) else { continue };
                        assert_eq!(Ok(outer), rnm.eval(&f, x), "q={} n={n} m={m}", f.q());
                    }
                }
            }
        }
    }

    #[test]
    fn identity_criterion() {
        for f in odd_fields_up_to(64) {
            let q = f.q();
            let a = non_squares(&f)[0];
            for n in (1..=3 * (q + 1)).filter(|&n| gcd(n, q + 1) == 1) {
                let perm = redei_interleaver(&f, &RedeiParams::new(&f, n, a).unwrap()).unwrap();
                assert_eq!(perm.is_identity(), n % (q + 1) == 1, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn addition_law_off_the_antidiagonal() {
        for f in odd_fields_up_to(32) {
            let q = f.q();
            let a = non_squares(&f)[0];
            for n in (1..=q + 1).filter(|&n| gcd(n, q + 1) == 1) {
                let r = redei_numerator_denominator(&f, &RedeiParams::new(&f, n, a).unwrap());
                for x in f.elements() {
                    for y in f.elements() {
                        let s = f.add(x, y);
                        if s.is_zero() {
                            continue;
                        }
                        let arg = f.div(f.add(f.mul(x, y), a), s).unwrap();
                        let (rx, ry) = (r.eval(&f, x).unwrap(), r.eval(&f, y).unwrap());
                        let rhs = f
                            .div(f.add(f.mul(rx, ry), a), f.add(rx, ry))
                            .unwrap();
                        assert_eq!(r.eval(&f, arg).unwrap(), rhs, "q={q} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_degree_inverts() {
        for f in odd_fields_up_to(256) {
            let q = f.q();
            let a = non_squares(&f)[0];
            for n in (1..=q + 1).filter(|&n| gcd(n, q + 1) == 1) {
                let params = RedeiParams::new(&f, n, a).unwrap();
                let m = redei_inverse_degree(&f, &params).unwrap();
                let fwd = redei_interleaver(&f, &params).unwrap();
                let inv = redei_interleaver(&f, &params.with_degree(m)).unwrap();
                assert!(fwd.compose(&inv).unwrap().is_identity(), "q={q} n={n}");
            }
        }
    }
}
