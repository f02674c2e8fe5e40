//! Cycle-structure predictions for the field families, stated as executable
//! predicates and censuses that can be reconciled with [`Permutation::cycle_structure`].
//!
//! [`Permutation::cycle_structure`]: crate::perm::Permutation::cycle_structure

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::families::dickson::DicksonA;
use crate::families::mobius::MobiusParams;
use crate::families::redei::{redei_is_permutation, RedeiParams};
use crate::families::FamilyError;
use crate::gf::FieldSpec;
use crate::numtheory::{factorize, gcd, mult_order, neg_order, pow_mod, Factorization, PrimePower};
use crate::perm::{census_size, Census};

pub mod quadext;
pub mod sweep;

use quadext::QuadExt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    /// A counting recurrence produced a non-integral or negative count.
    #[error("inconsistent cycle count at j={j}: {detail}")]
    InconsistentCount { j: u64, detail: String },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Identifies which cycle theorem (or verification sweep) a result belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    MonomialSameLength,
    MonomialInvolution,
    DicksonInvolution,
    MobiusCensus,
    MobiusTraceZero,
    RedeiCycleOfLength,
    RedeiCounts,
    RedeiInverse,
    RedeiSelfInverse,
    RedeiSameLength,
    RedeiPrimePower,
    SkolemExistence,
    SkolemSelfInverse,
    SkolemGeneralized,
    Prescribed,
    Field,
}

impl Theorem {
    pub const ALL: [Theorem; 16] = [
        Theorem::MonomialSameLength,
        Theorem::MonomialInvolution,
        Theorem::DicksonInvolution,
        Theorem::MobiusCensus,
        Theorem::MobiusTraceZero,
        Theorem::RedeiCycleOfLength,
        Theorem::RedeiCounts,
        Theorem::RedeiInverse,
        Theorem::RedeiSelfInverse,
        Theorem::RedeiSameLength,
        Theorem::RedeiPrimePower,
        Theorem::SkolemExistence,
        Theorem::SkolemSelfInverse,
        Theorem::SkolemGeneralized,
        Theorem::Prescribed,
        Theorem::Field,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Theorem::MonomialSameLength => "monomial-samelength",
            Theorem::MonomialInvolution => "monomial-involution",
            Theorem::DicksonInvolution => "dickson-involution",
            Theorem::MobiusCensus => "mobius-census",
            Theorem::MobiusTraceZero => "mobius-trace0",
            Theorem::RedeiCycleOfLength => "redei-cycle-j",
            Theorem::RedeiCounts => "redei-Nj",
            Theorem::RedeiInverse => "redei-inverse",
            Theorem::RedeiSelfInverse => "redei-selfinv",
            Theorem::RedeiSameLength => "redei-samelength",
            Theorem::RedeiPrimePower => "redei-primepower",
            Theorem::SkolemExistence => "skolem-existence",
            Theorem::SkolemSelfInverse => "skolem-selfinv",
            Theorem::SkolemGeneralized => "skolem-generalized",
            Theorem::Prescribed => "prescribed",
            Theorem::Field => "field",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Theorem, String> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| format!("unknown theorem tag {s:?}"))
    }
}

/// A predicted full census together with the intermediate quantities that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePrediction {
    pub theorem: Theorem,
    pub parameters: Vec<(&'static str, String)>,
    pub census: Census,
}

fn census_add(census: &mut Census, len: u64, count: u64) {
    if len > 0 && count > 0 {
        *census.entry(len as usize).or_insert(0) += count as usize;
    }
}

/// For each prime power `P = p^k ∥ modulus`: `n ≡ 1 (mod P)`, or `j = ord_P(n)` with
/// `j | p-1`, or `j = ord_P(n)` with `k ≥ 2` and `j = p`.
fn prime_power_same_length(n: u64, modulus: &Factorization, j: u64) -> bool {
    modulus.prime_powers().all(|pp| {
        let PrimePower { prime, exponent, value } = pp;
        if n % value == 1 % value {
            return true;
        }
        let ord = mult_order(n, value).expect("n is a unit");
        ord == j && ((prime - 1) % j == 0 || (exponent >= 2 && j == prime))
    })
}

// ---------------------------------------------------------------- monomial

/// Whether `x^n` has only cycles of length `j` or 1.
pub fn monomial_same_length_condition(field: &FieldSpec, n: u64, j: u64) -> Result<bool, CycleError> {
    let q = field.q();
    if gcd(n, q - 1) != 1 {
        return Err(CycleError::NotAPermutation(format!("gcd(n,q-1)≠1 (n={n}, q-1={})", q - 1)));
    }
    if j == 0 {
        return Err(CycleError::Unsupported("cycle length must be at least 1".into()));
    }
    Ok(prime_power_same_length(n, &factorize(q - 1), j))
}

/// Exponents `n` for which `x^n` is an involution fixing exactly `0, 1, -1`.
///
/// `{q-2, (q-3)/2}` when `8 | q-1`, `{q-2}` when `4 ∥ q-1`, empty otherwise.
pub fn monomial_involution_exponents(field: &FieldSpec) -> BTreeSet<u64> {
    let q = field.q();
    let mut out = BTreeSet::new();
    if (q - 1) % 4 == 0 {
        out.insert(q - 2);
        if (q - 1) % 8 == 0 {
            out.insert((q - 3) / 2);
        }
    }
    out
}

// ---------------------------------------------------------------- Dickson

/// How the two clause groups of the Dickson involution criteria are combined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DicksonReading {
    /// Every prime power of `q-1` passes a group-1 clause and every prime power of
    /// `q+1` passes a group-2 clause.
    Verbatim,
    /// For each of `q-1` and `q+1` separately, one clause group is passed by all of
    /// its prime powers.
    Uniform,
    /// The group-theoretic form: `n² ≡ ±1` modulo `q-1` and `q+1` for `a = 1`;
    /// `n² ≡ 1 (mod q-1)` and `n² ≡ 1 or q (mod 2(q+1))` for `a = -1`, `q` odd.
    Structural,
}

impl DicksonReading {
    pub const ALL: [DicksonReading; 3] =
        [DicksonReading::Verbatim, DicksonReading::Uniform, DicksonReading::Structural];

    pub fn name(self) -> &'static str {
        match self {
            DicksonReading::Verbatim => "verbatim",
            DicksonReading::Uniform => "uniform",
            DicksonReading::Structural => "structural",
        }
    }
}

struct Clause {
    n: u64,
    prime: u64,
    exponent: u32,
    value: u64,
}

type ClauseFn = fn(&Clause) -> bool;

fn neg_order_is_two(c: &Clause) -> bool {
    neg_order(c.n, c.value).expect("n is a unit") == Some(2)
}

fn order_is_two(c: &Clause) -> bool {
    mult_order(c.n, c.value).expect("n is a unit") == 2
}

fn two_n_plus_one_vanishes(c: &Clause) -> bool {
    (2 * (c.n % c.value + 1)) % c.value == 0
}

const PLUS_GROUP1: &[ClauseFn] = &[
    |c| c.n % c.value == 1 % c.value && c.value == 2,
    |c| neg_order_is_two(c) && (c.prime - 1) % 4 == 0,
];

const PLUS_GROUP2: &[ClauseFn] = &[
    |c| {
        let r = c.n % c.value;
        r == 1 % c.value || r == c.value - 1
    },
    |c| order_is_two(c) && c.prime == 2 && c.exponent >= 2 && c.n % c.value != c.value - 1,
];

const MINUS_GROUP1: &[ClauseFn] = &[
    |c| two_n_plus_one_vanishes(c) && (c.value == 2 || c.value == 4),
    |c| neg_order_is_two(c) && (c.prime - 1) % 4 == 0,
];

const MINUS_GROUP2: &[ClauseFn] = &[
    two_n_plus_one_vanishes,
    |c| c.n % c.value == 1 % c.value,
    |c| order_is_two(c) && c.exponent >= 2 && c.prime == 2,
];

fn group_holds_at(group: &[ClauseFn], n: u64, pp: PrimePower) -> bool {
    let clause = Clause {
        n,
        prime: pp.prime,
        exponent: pp.exponent,
        value: pp.value,
    };
    group.iter().any(|f| f(&clause))
}

fn group_holds_everywhere(group: &[ClauseFn], n: u64, modulus: &Factorization) -> bool {
    modulus.prime_powers().all(|pp| group_holds_at(group, n, pp))
}

fn dickson_preconditions(field: &FieldSpec, n: u64, a: DicksonA) -> Result<(), CycleError> {
    if a == DicksonA::Zero {
        return Err(CycleError::Unsupported("involution criteria need a ∈ {1, -1}".into()));
    }
    let q = field.q();
    if gcd(n, q * q - 1) != 1 {
        return Err(CycleError::NotAPermutation(format!(
            "gcd(n,q^2-1)≠1 (n={n}, q^2-1={})",
            q * q - 1
        )));
    }
    Ok(())
}

/// Evaluates the involution criterion for `D_n(x, a)` under a chosen reading.
pub fn dickson_involution_reading(
    field: &FieldSpec,
    n: u64,
    a: DicksonA,
    reading: DicksonReading,
) -> Result<bool, CycleError> {
    dickson_preconditions(field, n, a)?;
    let q = field.q();
    let (minus, plus) = (factorize(q - 1), factorize(q + 1));
    let (g1, g2) = match a {
        DicksonA::MinusOne => (MINUS_GROUP1, MINUS_GROUP2),
        _ => (PLUS_GROUP1, PLUS_GROUP2),
    };
    Ok(match reading {
        DicksonReading::Verbatim => {
            group_holds_everywhere(g1, n, &minus) && group_holds_everywhere(g2, n, &plus)
        }
        DicksonReading::Uniform => [&minus, &plus].into_iter().all(|m| {
            group_holds_everywhere(g1, n, m) || group_holds_everywhere(g2, n, m)
        }),
        DicksonReading::Structural => {
            let sq = |m: u64| pow_mod(n, 2, m);
            // in characteristic 2, -1 = 1
            if a == DicksonA::One || q % 2 == 0 {
                [q - 1, q + 1].into_iter().all(|m| {
                    let r = sq(m);
                    m <= 2 || r == 1 || r == m - 1
                })
            } else {
                let r = sq(2 * (q + 1));
                sq(q - 1) == 1 % (q - 1) && (r == 1 || r == q)
            }
        }
    })
}

/// Whether `D_n(x, a)` is the identity or has only 2-cycles besides fixed points.
///
/// Uses the uniform clause reading for `a = 1` (and for `a = -1` in characteristic 2,
/// where the two coincide) and the structural form for `a = -1` in odd characteristic;
/// these are the readings that agree with direct enumeration.
pub fn dickson_involution_condition(field: &FieldSpec, n: u64, a: DicksonA) -> Result<bool, CycleError> {
    let reading = if a == DicksonA::MinusOne && field.p() != 2 {
        DicksonReading::Structural
    } else {
        DicksonReading::Uniform
    };
    let a = if field.p() == 2 { DicksonA::One } else { a };
    dickson_involution_reading(field, n, a, reading)
}

// ---------------------------------------------------------------- Möbius

/// How `t(x) = x² - (a+d)x + (ad-bc)` factors over the base field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MobiusCase {
    Irreducible,
    DistinctRoots,
    DoubleRoot,
}

impl MobiusCase {
    pub fn name(self) -> &'static str {
        match self {
            MobiusCase::Irreducible => "irreducible",
            MobiusCase::DistinctRoots => "distinct-roots",
            MobiusCase::DoubleRoot => "double-root",
        }
    }
}

/// Classifies `t` by enumerating its roots.
pub fn mobius_case(field: &FieldSpec, params: &MobiusParams) -> MobiusCase {
    let (tau, delta) = (params.trace(field), params.determinant(field));
    let roots: Vec<_> = field
        .elements()
        .filter(|&x| field.add(field.sub(field.mul(x, x), field.mul(tau, x)), delta).is_zero())
        .collect();
    match roots.len() {
        0 => MobiusCase::Irreducible,
        1 => MobiusCase::DoubleRoot,
        _ => MobiusCase::DistinctRoots,
    }
}

/// Predicted census of `Π_T`, from the order `k` of the ratio of the roots of `t`.
pub fn mobius_cycle_prediction(field: &FieldSpec, params: &MobiusParams) -> CyclePrediction {
    let q = field.q();
    let p = field.p();
    let (tau, delta) = (params.trace(field), params.determinant(field));
    let case = mobius_case(field, params);
    let mut census = Census::new();
    let mut parameters = vec![("case", case.name().to_string())];
    match case {
        MobiusCase::Irreducible => {
            let ext = QuadExt::new(field, tau, delta);
            let ratio = ext.root_ratio();
            let k = factorize(q + 1)
                .divisors()
                .into_iter()
                .find(|&d| ext.pow(ratio, d) == ext.one())
                .expect("ratio has norm 1");
            let s = (q + 1) / k;
            census_add(&mut census, k, s - 1);
            census_add(&mut census, k - 1, 1);
            parameters.push(("k", k.to_string()));
            parameters.push(("s", s.to_string()));
        }
        MobiusCase::DistinctRoots => {
            let mut roots = field
                .elements()
                .filter(|&x| field.add(field.sub(field.mul(x, x), field.mul(tau, x)), delta).is_zero());
            let (r1, r2) = (roots.next().unwrap(), roots.next().unwrap());
            let ratio = field.div(r1, r2).expect("δ ≠ 0 so roots are nonzero");
            let e = field.dlog(ratio) % (q - 1);
            let k = (q - 1) / gcd(e, q - 1);
            let s = (q - 1) / k;
            census_add(&mut census, k, s - 1);
            census_add(&mut census, k - 1, 1);
            census_add(&mut census, 1, 2);
            parameters.push(("k", k.to_string()));
            parameters.push(("s", s.to_string()));
        }
        MobiusCase::DoubleRoot => {
            census_add(&mut census, p, q / p - 1);
            census_add(&mut census, p - 1, 1);
            census_add(&mut census, 1, 1);
            parameters.push(("k", p.to_string()));
        }
    }
    assert_eq!(census_size(&census) as u64, q, "Möbius census must cover F_q");
    CyclePrediction {
        theorem: Theorem::MobiusCensus,
        parameters,
        census,
    }
}

/// `tr(A_T) = 0`, which implies `Π_T` is self-inverse (the converse is not claimed).
pub fn mobius_trace_zero_self_inverse(field: &FieldSpec, params: &MobiusParams) -> bool {
    params.trace(field).is_zero()
}

// ---------------------------------------------------------------- Rédei

fn redei_checked(field: &FieldSpec, params: &RedeiParams) -> Result<(u64, u64), CycleError> {
    if !redei_is_permutation(field, params) {
        return Err(CycleError::NotAPermutation(format!(
            "gcd({},{})≠1",
            params.n(),
            field.q() + 1
        )));
    }
    Ok((params.n(), field.q() + 1))
}

/// Some divisor `s` of `q+1` has `ord_s(n) = j`.
pub fn redei_has_cycle_of_length(field: &FieldSpec, params: &RedeiParams, j: u64) -> Result<bool, CycleError> {
    let (n, m) = redei_checked(field, params)?;
    Ok(factorize(m)
        .divisors()
        .into_iter()
        .any(|s| mult_order(n, s).expect("unit") == j))
}

/// `N_j` for `j = 1..=j_max` from `j·N_j = gcd(n^j - 1, q+1) - 1 - Σ_{i|j, i<j} i·N_i`.
///
/// Zero counts are omitted from the returned map.
pub fn redei_cycle_counts(field: &FieldSpec, params: &RedeiParams, j_max: u64) -> Result<Census, CycleError> {
    let (n, m) = redei_checked(field, params)?;
    let mut counts: Vec<i64> = vec![0; j_max as usize + 1];
    for j in 1..=j_max {
        let g = gcd((pow_mod(n, j, m) + m - 1) % m, m) as i64;
        let below: i64 = (1..j).filter(|i| j % i == 0).map(|i| i as i64 * counts[i as usize]).sum();
        let rest = g - 1 - below;
        if rest < 0 || rest % j as i64 != 0 {
            return Err(CycleError::InconsistentCount {
                j,
                detail: format!("{rest} is not a nonnegative multiple of {j}"),
            });
        }
        counts[j as usize] = rest / j as i64;
    }
    Ok(counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(j, &c)| (j, c as usize))
        .collect())
}

/// The full predicted census of `Π_{R_n}`; cycle lengths divide `ord_{q+1}(n)`.
pub fn redei_cycle_prediction(field: &FieldSpec, params: &RedeiParams) -> Result<CyclePrediction, CycleError> {
    let (n, m) = redei_checked(field, params)?;
    let ord = mult_order(n, m).expect("unit");
    let census = redei_cycle_counts(field, params, ord)?;
    if census_size(&census) as u64 != field.q() {
        return Err(CycleError::InconsistentCount {
            j: ord,
            detail: format!("census covers {} points, not {}", census_size(&census), field.q()),
        });
    }
    Ok(CyclePrediction {
        theorem: Theorem::RedeiCounts,
        parameters: vec![("ord", ord.to_string())],
        census,
    })
}

/// For every divisor `s` of `q+1`: `n ≡ 1 (mod s)` or `j = ord_s(n)`.
pub fn redei_all_same_length_condition(field: &FieldSpec, params: &RedeiParams, j: u64) -> Result<bool, CycleError> {
    let (n, m) = redei_checked(field, params)?;
    Ok(factorize(m).divisors().into_iter().all(|s| {
        n % s == 1 % s || mult_order(n, s).expect("unit") == j
    }))
}

/// `n² ≡ 1 (mod q+1)`.
pub fn redei_self_inverse_condition(field: &FieldSpec, params: &RedeiParams) -> Result<bool, CycleError> {
    let (n, m) = redei_checked(field, params)?;
    Ok(pow_mod(n, 2, m) == 1 % m)
}

/// The prime-power form of [`redei_all_same_length_condition`].
pub fn redei_prime_power_condition(field: &FieldSpec, params: &RedeiParams, j: u64) -> Result<bool, CycleError> {
    let (n, m) = redei_checked(field, params)?;
    Ok(prime_power_same_length(n, &factorize(m), j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::dickson::{dickson_interleaver, DicksonParams};
    use crate::families::mobius::mobius_interleaver;
    use crate::families::monomial::monomial_interleaver;
    use crate::families::redei::redei_interleaver;
    use crate::gf::build_field;
    use crate::numtheory::prime_power_decomposition;

    fn fields_up_to(qmax: u64) -> Vec<FieldSpec> {
        (2..=qmax)
            .filter_map(prime_power_decomposition)
            .map(|(p, m)| build_field(p, m, None).unwrap())
            .collect()
    }

    fn mobius(f: &FieldSpec, abcd: [i64; 4]) -> MobiusParams {
        let [a, b, c, d] = abcd.map(|v| f.from_int(v));
        MobiusParams::new(f, a, b, c, d).unwrap()
    }

    fn redei(f: &FieldSpec, n: u64, a: i64) -> RedeiParams {
        RedeiParams::new(f, n, f.from_int(a)).unwrap()
    }

    #[test]
    fn theorem_tags_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.tag().parse::<Theorem>(), Ok(t));
        }
        assert!("nope".parse::<Theorem>().is_err());
    }

    #[test]
    fn monomial_examples() {
        let f13 = build_field(13, 1, None).unwrap();
        assert_eq!(monomial_same_length_condition(&f13, 11, 2), Ok(true));
        assert_eq!(monomial_same_length_condition(&f13, 1, 1), Ok(true));
        // 5 mod 4 = 1 and ord_3(5) = 2
        assert_eq!(monomial_same_length_condition(&f13, 5, 2), Ok(true));
        assert_eq!(monomial_same_length_condition(&f13, 5, 3), Ok(false));
        assert!(monomial_same_length_condition(&f13, 2, 2).is_err());
        let census = monomial_interleaver(&f13, 5).unwrap().cycle_structure();
        assert!(census.lengths_within(2));
    }

    #[test]
    fn involution_exponents() {
        let set = |q: u64| {
            let (p, m) = prime_power_decomposition(q).unwrap();
            monomial_involution_exponents(&build_field(p, m, None).unwrap())
        };
        assert_eq!(set(13), BTreeSet::from([11]));
        assert_eq!(set(17), BTreeSet::from([7, 15]));
        assert_eq!(set(5), BTreeSet::from([3]));
        assert!(set(7).is_empty());
        assert!(set(16).is_empty());
    }

    #[test]
    fn dickson_examples() {
        let f11 = build_field(11, 1, None).unwrap();
        assert_eq!(dickson_involution_condition(&f11, 19, DicksonA::One), Ok(true));
        assert_eq!(dickson_involution_condition(&f11, 1, DicksonA::One), Ok(true));
        assert_eq!(dickson_involution_condition(&f11, 1, DicksonA::MinusOne), Ok(true));
        assert!(dickson_involution_condition(&f11, 19, DicksonA::Zero).is_err());
        assert!(dickson_involution_condition(&f11, 2, DicksonA::One).is_err());
        // the per-prime-power reading rejects the example: 19 ≡ -1 (mod 5) only passes group 2
        assert_eq!(
            dickson_involution_reading(&f11, 19, DicksonA::One, DicksonReading::Verbatim),
            Ok(false)
        );
    }

    #[test]
    fn dickson_condition_matches_enumeration() {
        for f in fields_up_to(32) {
            let q = f.q();
            for a in [DicksonA::One, DicksonA::MinusOne] {
                for n in (1..q * q).filter(|&n| gcd(n, q * q - 1) == 1) {
                    let perm = dickson_interleaver(&f, &DicksonParams::new(n, a)).unwrap();
                    let oracle = perm.is_self_inverse();
                    assert_eq!(dickson_involution_condition(&f, n, a), Ok(oracle), "q={q} n={n} a={a}");
                    if a == DicksonA::One {
                        assert_eq!(
                            dickson_involution_reading(&f, n, a, DicksonReading::Structural),
                            Ok(oracle)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn mobius_example_double_root() {
        let f5 = build_field(5, 1, None).unwrap();
        let t = mobius(&f5, [1, 1, 1, 0]);
        assert_eq!(mobius_case(&f5, &t), MobiusCase::DoubleRoot);
        let pred = mobius_cycle_prediction(&f5, &t);
        assert_eq!(pred.census, Census::from([(1, 1), (4, 1)]));
        let perm = mobius_interleaver(&f5, &t).unwrap();
        assert_eq!(perm.cycle_structure().counts, pred.census);
    }

    #[test]
    fn mobius_full_sweep_small_fields() {
        for f in fields_up_to(9) {
            let q = f.q();
            for abcd in (0..q.pow(4)).map(|i| [i % q, i / q % q, i / q / q % q, i / q / q / q]) {
                let [a, b, c, d] = abcd.map(|v| f.elem(v).unwrap());
                let Ok(t) = MobiusParams::new(&f, a, b, c, d) else {
                    continue;
                };
                let perm = mobius_interleaver(&f, &t).unwrap();
                let pred = mobius_cycle_prediction(&f, &t);
                assert_eq!(perm.cycle_structure().counts, pred.census, "q={q} {abcd:?}");
                if mobius_trace_zero_self_inverse(&f, &t) {
                    assert!(perm.is_self_inverse());
                }
            }
        }
    }

    #[test]
    fn mobius_trace_zero_example() {
        let f7 = build_field(7, 1, None).unwrap();
        let t = mobius(&f7, [1, 0, 1, -1]);
        assert!(mobius_trace_zero_self_inverse(&f7, &t));
        assert!(mobius_interleaver(&f7, &t).unwrap().is_self_inverse());
    }

    #[test]
    fn redei_examples() {
        let f11 = build_field(11, 1, None).unwrap();
        let r = redei(&f11, 5, 2);
        assert_eq!(redei_has_cycle_of_length(&f11, &r, 2), Ok(true));
        assert_eq!(redei_has_cycle_of_length(&f11, &r, 3), Ok(false));
        assert_eq!(redei_has_cycle_of_length(&f11, &r.with_degree(1), 1), Ok(true));
        assert_eq!(redei_cycle_counts(&f11, &r, 12), Ok(Census::from([(1, 3), (2, 4)])));
        assert_eq!(redei_all_same_length_condition(&f11, &r, 2), Ok(true));
        assert_eq!(redei_self_inverse_condition(&f11, &r), Ok(true));
        assert_eq!(redei_prime_power_condition(&f11, &r, 2), Ok(true));
        assert_eq!(redei_prime_power_condition(&f11, &r.with_degree(1), 1), Ok(true));
        assert_eq!(redei_cycle_counts(&f11, &r.with_degree(13), 12), Ok(Census::from([(1, 11)])));
        assert!(redei_cycle_counts(&f11, &r.with_degree(3), 12).is_err());
        let perm = redei_interleaver(&f11, &r).unwrap();
        assert_eq!(perm.cycle_structure().counts, Census::from([(1, 3), (2, 4)]));
    }

    #[test]
    fn redei_predictions_match_enumeration() {
        for q in [7u64, 9, 11, 13, 19, 23, 25, 27] {
            let (p, m) = prime_power_decomposition(q).unwrap();
            let f = build_field(p, m, None).unwrap();
            for a in f.nonzero_elements().filter(|&a| !f.is_square(a)) {
                for n in (1..=q + 1).filter(|&n| gcd(n, q + 1) == 1) {
                    let params = RedeiParams::new(&f, n, a).unwrap();
                    let census = redei_interleaver(&f, &params).unwrap().cycle_structure();
                    assert_eq!(redei_cycle_prediction(&f, &params).unwrap().census, census.counts);
                    for j in 1..=q + 1 {
                        let within = census.lengths_within(j as usize);
                        assert_eq!(redei_all_same_length_condition(&f, &params, j), Ok(within));
                        assert_eq!(redei_prime_power_condition(&f, &params, j), Ok(within));
                        assert_eq!(
                            redei_has_cycle_of_length(&f, &params, j),
                            Ok(census.has_length(j as usize))
                        );
                    }
                }
            }
        }
    }
}
