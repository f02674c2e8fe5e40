//! Finite fields `F_q`, `q = p^m`, in power representation.
//!
//! An element is stored as its log-index `code ∈ [0, q-1]`: code 0 is the
//! zero element and code `i ∈ [1, q-1]` is `α^i`, so the identity is
//! `α^{q-1}` and carries code `q-1`. Multiplication is exponent arithmetic;
//! addition goes through a Zech-logarithm table built once from the
//! polynomial (vector) representation. Every field operation is O(1).

use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

use thiserror::Error;

use crate::numtheory::{factorize, is_prime};

/// Default upper bound on `q`; tables are O(q).
pub const DEFAULT_Q_BOUND: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size {p}^{m} exceeds the configured bound {bound}")]
    BoundExceeded { p: u64, m: u32, bound: u64 },
    #[error("polynomial must be monic of degree {degree} with coefficients below {p}")]
    MalformedPolynomial { degree: u32, p: u64 },
    #[error("polynomial {poly:?} is not primitive: {reason}")]
    NonPrimitivePolynomial { poly: Vec<u32>, reason: String },
    #[error("elements belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("code {code} out of range for a field of size {q}")]
    CodeOutOfRange { code: u64, q: u64 },
}

static NEXT_FIELD_ID: AtomicU32 = AtomicU32::new(1);

/// An element of some [`FieldSpec`], in power representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    code: u32,
    field: u32,
}

impl FieldElement {
    /// 0 for the zero element, `i` for `α^i` (`i ∈ [1, q-1]`).
    pub fn code(self) -> u32 {
        self.code
    }

    pub fn is_zero(self) -> bool {
        self.code == 0
    }
}

/// The field `F_{p^m}` with its exp/log/Zech tables.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    id: u32,
    p: u32,
    m: u32,
    q: u32,
    primitive_poly: Vec<u32>,
    /// `exp[i]` is the vector encoding `Σ c_k p^k` of `α^i`; `exp[0] = 0` (zero).
    exp: Vec<u32>,
    /// Inverse of `exp`: vector encoding to code.
    log: Vec<u32>,
    /// `zech[i]` is the code of `1 + α^i` for `i ∈ [1, q-1]`.
    zech: Vec<u32>,
}

/// Builds `F_{p^m}` with the default size bound.
pub fn build_field(p: u64, m: u32, primitive_poly: Option<&[u32]>) -> Result<FieldSpec, GfError> {
    build_field_bounded(p, m, primitive_poly, DEFAULT_Q_BOUND)
}

/// Builds `F_{p^m}`. When `primitive_poly` is `None` the smallest primitive
/// polynomial is searched for (see [`find_primitive_poly`]); for `m = 1` that
/// is `x - g` with `g` the smallest primitive root of `p`.
pub fn build_field_bounded(
    p: u64,
    m: u32,
    primitive_poly: Option<&[u32]>,
    bound: u64,
) -> Result<FieldSpec, GfError> {
    if !is_prime(p) {
        return Err(GfError::NotPrime(p));
    }
    if m == 0 {
        return Err(GfError::ZeroDegree);
    }
    let q = (p as u128).checked_pow(m).filter(|&q| q <= bound as u128);
    let Some(q) = q else {
        return Err(GfError::BoundExceeded { p, m, bound });
    };
    let q = q as u64;
    let poly: Vec<u32> = match primitive_poly {
        Some(coeffs) => {
            let coeffs = coeffs.to_vec();
            if coeffs.len() != m as usize + 1
                || coeffs[m as usize] != 1
                || coeffs.iter().any(|&c| c as u64 >= p)
            {
                return Err(GfError::MalformedPolynomial { degree: m, p });
            }
            check_primitive(p, m, &coeffs)?;
            coeffs
        }
        None => find_primitive_poly(p, m),
    };
    Ok(FieldSpec::from_primitive(p as u32, m, q as u32, poly))
}

/// The smallest primitive polynomial of degree `m` over `F_p`, constant term first.
///
/// For `m = 1` this is `x - g` for the smallest primitive root `g`. For
/// `m >= 2` monic candidates are enumerated by the integer `Σ c_k p^k` of their
/// lower coefficients, tested for irreducibility by trial division and then for
/// root order `p^m - 1`.
pub fn find_primitive_poly(p: u64, m: u32) -> Vec<u32> {
    assert!(m >= 1);
    if m == 1 {
        let g = smallest_primitive_root(p);
        return vec![((p - g) % p) as u32, 1];
    }
    let count = p.pow(m);
    for index in 0..count {
        let mut coeffs = fp_poly::digits(index, p, m as usize);
        if coeffs[0] == 0 {
            continue;
        }
        coeffs.push(1);
        if fp_poly::is_irreducible(&coeffs, p) && fp_poly::root_order_is_full(&coeffs, p) {
            return coeffs.into_iter().map(|c| c as u32).collect();
        }
    }
    unreachable!("primitive polynomials exist for every p, m")
}

fn smallest_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let order = p - 1;
    let primes: Vec<u64> = factorize(order).primes().collect();
    (2..p)
        .find(|&g| {
            primes
                .iter()
                .all(|&r| crate::numtheory::pow_mod(g, order / r, p) != 1)
        })
        .expect("every prime has a primitive root")
}

fn check_primitive(p: u64, m: u32, coeffs: &[u32]) -> Result<(), GfError> {
    let c: Vec<u64> = coeffs.iter().map(|&c| c as u64).collect();
    let fail = |reason: &str| GfError::NonPrimitivePolynomial {
        poly: coeffs.to_vec(),
        reason: reason.to_string(),
    };
    if m == 1 {
        // root is -c0
        let root = (p - c[0]) % p;
        if root == 0 {
            return Err(fail("root is zero"));
        }
        let order = crate::numtheory::mult_order(root, p).expect("nonzero residue mod a prime");
        if order != p - 1 {
            return Err(fail(&format!("root has order {order} < {}", p - 1)));
        }
        return Ok(());
    }
    if !fp_poly::is_irreducible(&c, p) {
        return Err(fail("reducible"));
    }
    if !fp_poly::root_order_is_full(&c, p) {
        return Err(fail("root order is a proper divisor of q-1"));
    }
    Ok(())
}

impl FieldSpec {
    fn from_primitive(p: u32, m: u32, q: u32, poly: Vec<u32>) -> FieldSpec {
        let qs = q as usize;
        let mut exp = vec![0u32; qs];
        let mut log = vec![0u32; qs];
        let pu = p as u64;
        // vector of α^i as base-p digits, constant term first
        let mut digits = vec![0u64; m as usize];
        if m == 1 {
            digits[0] = (pu - poly[0] as u64) % pu;
        } else {
            digits[1] = 1;
        }
        for i in 1..qs {
            let v = fp_poly::encode(&digits, pu) as u32;
            exp[i] = v;
            log[v as usize] = i as u32;
            multiply_by_alpha(&mut digits, &poly, pu);
        }
        debug_assert_eq!(exp[qs - 1], 1, "α^(q-1) must be 1");
        let mut zech = vec![0u32; qs];
        for i in 1..qs {
            let mut v = fp_poly::digits(exp[i] as u64, pu, m as usize);
            v[0] = (v[0] + 1) % pu;
            zech[i] = log[fp_poly::encode(&v, pu) as usize];
        }
        FieldSpec {
            id: NEXT_FIELD_ID.fetch_add(1, Ordering::Relaxed),
            p,
            m,
            q,
            primitive_poly: poly,
            exp,
            log,
            zech,
        }
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }

    /// Order of the multiplicative group, `q - 1`.
    pub fn order(&self) -> u64 {
        self.q as u64 - 1
    }

    /// Coefficients of the primitive polynomial, constant term first.
    pub fn primitive_poly(&self) -> &[u32] {
        &self.primitive_poly
    }

    /// `exp[i]` is the vector encoding of `α^i`, `i ∈ [1, q-1]`; `exp[0]` encodes zero.
    pub fn exp_table(&self) -> &[u32] {
        &self.exp
    }

    /// Maps vector encodings to codes; `log[0] = 0`.
    pub fn log_table(&self) -> &[u32] {
        &self.log
    }

    /// Text header `p m q c0,c1,...,cm`.
    pub fn header(&self) -> String {
        let coeffs: Vec<String> = self.primitive_poly.iter().map(|c| c.to_string()).collect();
        format!("{} {} {} {}", self.p, self.m, self.q, coeffs.join(","))
    }

    /// Human form of the primitive polynomial, e.g. `x^4 + x + 1`.
    pub fn poly_string(&self) -> String {
        let mut terms = Vec::new();
        for (k, &c) in self.primitive_poly.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            terms.push(match (c, k) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            });
        }
        terms.join(" + ")
    }

    pub fn elem(&self, code: u64) -> Result<FieldElement, GfError> {
        if code >= self.q as u64 {
            return Err(GfError::CodeOutOfRange {
                code,
                q: self.q as u64,
            });
        }
        Ok(self.raw(code as u32))
    }

    #[inline]
    fn raw(&self, code: u32) -> FieldElement {
        FieldElement {
            code,
            field: self.id,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.raw(0)
    }

    pub fn one(&self) -> FieldElement {
        self.raw(self.q - 1)
    }

    /// The primitive element `α` (code 1).
    pub fn alpha(&self) -> FieldElement {
        // in F_2 this is also 1 = α^{q-1}
        self.raw(1)
    }

    /// `α^i` for any integer exponent.
    pub fn alpha_pow(&self, i: i64) -> FieldElement {
        self.raw(self.reduce_exponent(i as i128))
    }

    /// Element whose vector (polynomial) encoding is `v = Σ c_k p^k`.
    pub fn from_vector(&self, v: u64) -> Result<FieldElement, GfError> {
        if v >= self.q as u64 {
            return Err(GfError::CodeOutOfRange {
                code: v,
                q: self.q as u64,
            });
        }
        Ok(self.raw(self.log[v as usize]))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> FieldElement {
        let r = k.rem_euclid(self.p as i64) as usize;
        self.raw(self.log[r])
    }

    /// Vector encoding `Σ c_k p^k` of the element (0 for zero).
    pub fn to_vector(&self, a: FieldElement) -> u64 {
        self.exp[a.code as usize] as u64
    }

    /// Polynomial coefficients of the element in `α`, constant term first.
    pub fn to_coeffs(&self, a: FieldElement) -> Vec<u64> {
        fp_poly::digits(self.to_vector(a), self.p as u64, self.m as usize)
    }

    /// All elements in code order `0, α^1, …, α^{q-1}`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|c| self.raw(c))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.q).map(|c| self.raw(c))
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.field == self.id && a.code < self.q
    }

    /// Maps an exponent into the representative set `{1, …, q-1}`.
    #[inline]
    fn reduce_exponent(&self, e: i128) -> u32 {
        let n = (self.q - 1) as i128;
        ((e - 1).rem_euclid(n) + 1) as u32
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        if a.code == 0 {
            return b;
        }
        if b.code == 0 {
            return a;
        }
        let n = self.q - 1;
        // a + b = a·(1 + b/a)
        let d = if b.code > a.code {
            b.code - a.code
        } else {
            b.code + n - a.code
        };
        let z = self.zech[d as usize];
        if z == 0 {
            return self.zero();
        }
        let s = a.code + z;
        self.raw(if s > n { s - n } else { s })
    }

    pub fn try_add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        self.check_pair(a, b)?;
        Ok(self.add(a, b))
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if a.code == 0 || self.p == 2 {
            return a;
        }
        let half = (self.q - 1) / 2;
        let s = a.code + half;
        let n = self.q - 1;
        self.raw(if s > n { s - n } else { s })
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        if a.code == 0 || b.code == 0 {
            return self.zero();
        }
        let n = self.q - 1;
        let s = a.code + b.code;
        self.raw(if s > n { s - n } else { s })
    }

    pub fn try_mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        self.check_pair(a, b)?;
        Ok(self.mul(a, b))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, GfError> {
        if a.code == 0 {
            return Err(GfError::DivisionByZero);
        }
        let n = self.q - 1;
        Ok(self.raw(if a.code == n { n } else { n - a.code }))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^n` for any integer `n`; `pow(0, 0) = 1`, negative powers of zero fail.
    pub fn pow(&self, a: FieldElement, n: i64) -> Result<FieldElement, GfError> {
        if a.code == 0 {
            return match n {
                0 => Ok(self.one()),
                n if n > 0 => Ok(self.zero()),
                _ => Err(GfError::DivisionByZero),
            };
        }
        Ok(self.raw(self.reduce_exponent(a.code as i128 * n as i128)))
    }

    /// Discrete logarithm to base `α`: 0 for zero, `i ∈ [1, q-1]` otherwise
    /// (so `dlog(1) = q-1`).
    pub fn dlog(&self, a: FieldElement) -> u64 {
        a.code as u64
    }

    /// Whether `a` is a nonzero square. For odd `q` these are the even codes.
    pub fn is_square(&self, a: FieldElement) -> bool {
        if a.code == 0 {
            return false;
        }
        if self.p == 2 {
            return true;
        }
        // Euler's criterion: a^((q-1)/2) = 1
        self.pow(a, ((self.q - 1) / 2) as i64).expect("nonzero") == self.one()
    }

    fn check_pair(&self, a: FieldElement, b: FieldElement) -> Result<(), GfError> {
        if a.field != self.id || b.field != self.id {
            return Err(GfError::MixedFields);
        }
        Ok(())
    }

    /// Formats an element as its vector encoding (the residue itself when `m = 1`).
    pub fn display(&self, a: FieldElement) -> ElementDisplay<'_> {
        ElementDisplay { field: self, elem: a }
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.primitive_poly == other.primitive_poly
    }
}

impl Eq for FieldSpec {}

pub struct ElementDisplay<'a> {
    field: &'a FieldSpec,
    elem: FieldElement,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.to_vector(self.elem))
    }
}

fn multiply_by_alpha(digits: &mut [u64], poly: &[u32], p: u64) {
    let m = digits.len();
    if m == 1 {
        // α = -c0
        let alpha = (p - poly[0] as u64) % p;
        digits[0] = digits[0] * alpha % p;
        return;
    }
    let lead = digits[m - 1];
    for k in (1..m).rev() {
        digits[k] = digits[k - 1];
    }
    digits[0] = 0;
    if lead != 0 {
        // x^m = -(c_{m-1} x^{m-1} + … + c_0)
        for k in 0..m {
            let sub = lead * poly[k] as u64 % p;
            digits[k] = (digits[k] + p - sub) % p;
        }
    }
}

/// Dense polynomials over `F_p`, coefficients constant term first.
pub(crate) mod fp_poly {
    use crate::numtheory::factorize;

    pub fn digits(mut v: u64, p: u64, len: usize) -> Vec<u64> {
        let mut out = vec![0u64; len];
        for d in out.iter_mut() {
            *d = v % p;
            v /= p;
        }
        out
    }

    pub fn encode(digits: &[u64], p: u64) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * p + d)
    }

    fn trim(a: &mut Vec<u64>) {
        while a.len() > 1 && *a.last().unwrap() == 0 {
            a.pop();
        }
    }

    /// Remainder of `a` modulo the monic polynomial `b`.
    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let db = b.len() - 1;
        let mut r = a.to_vec();
        trim(&mut r);
        while r.len() > db && !(r.len() == 1 && r[0] == 0) {
            let shift = r.len() - 1 - db;
            let lead = *r.last().unwrap();
            if lead != 0 {
                for (k, &bk) in b.iter().enumerate() {
                    r[shift + k] = (r[shift + k] + p - lead * bk % p) % p;
                }
            }
            r.pop();
            trim(&mut r);
        }
        r
    }

    pub fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % p;
            }
        }
        rem(&prod, f, p)
    }

    /// `x^e mod f`.
    pub fn x_pow_mod(mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut base = rem(&[0, 1], f, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base, f, p);
            }
            base = mul_mod(&base, &base, f, p);
            e >>= 1;
        }
        acc
    }

    /// Trial division of the monic `f` by every monic polynomial of degree `1..=deg f / 2`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let m = f.len() - 1;
        for d in 1..=m / 2 {
            for index in 0..p.pow(d as u32) {
                let mut g = digits(index, p, d);
                g.push(1);
                let r = rem(f, &g, p);
                if r.iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }

    /// For irreducible `f` of degree `m`: whether `x` has order exactly `p^m - 1` mod `f`.
    pub fn root_order_is_full(f: &[u64], p: u64) -> bool {
        let m = (f.len() - 1) as u32;
        let n = p.pow(m) - 1;
        if x_pow_mod(n, f, p) != [1] {
            return false;
        }
        factorize(n)
            .primes()
            .all(|r| x_pow_mod(n / r, f, p) != [1])
    }
}
