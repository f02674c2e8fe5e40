//! Verification sweeps: every prediction evaluated over a parameter grid and
//! compared with the brute-force cycle census of the constructed permutation.
//!
//! Grids are built up front and evaluated with rayon; records come back in grid
//! order whatever the thread count.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

use super::*;
use crate::families::dickson::{dickson_interleaver, DicksonParams};
use crate::families::mobius::mobius_interleaver;
use crate::families::monomial::monomial_interleaver;
use crate::families::redei::{redei_interleaver, redei_inverse_degree};
use crate::gf::{build_field, FieldElement, GfError};
use crate::numtheory::prime_power_decomposition;
use crate::perm::Permutation;
use crate::skolem::{
    self, modify, prescribed_cycle_interleaver, search_sequence, skolem_exists, skolem_interleaver,
    SearchOutcome, SkolemError, SkolemKind,
};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid sweep range: {0}")]
    InvalidRange(String),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error(transparent)]
    Skolem(#[from] SkolemError),
    #[error(transparent)]
    Perm(#[from] crate::perm::PermError),
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub theorem: String,
    pub q: u64,
    pub params: Map<String, Value>,
    pub condition: bool,
    pub oracle_agrees: bool,
    pub census: Census,
}

/// Sweep bounds; unset fields take per-theorem defaults (see [`SweepConfig::resolve`]).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepConfig {
    pub q_min: Option<u64>,
    pub q_max: Option<u64>,
    pub n_max: Option<u64>,
    pub j_max: Option<u64>,
    /// Bound on `j·n` for generalized sequences.
    pub jn_max: Option<u64>,
    /// Node budget for each Skolem search.
    pub search_nodes: Option<u64>,
}

/// [`SweepConfig`] with every bound filled in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub q_min: u64,
    pub q_max: u64,
    pub n_max: u64,
    pub j_max: u64,
    pub jn_max: u64,
    pub search_nodes: u64,
}

impl SweepConfig {
    pub fn resolve(&self, theorem: Theorem) -> Result<Bounds, SweepError> {
        use Theorem::*;
        let q_max = match theorem {
            Field | MonomialInvolution => 1024,
            MonomialSameLength | RedeiSelfInverse => 128,
            MobiusCensus | MobiusTraceZero => 13,
            _ => 64,
        };
        let n_max = match theorem {
            SkolemSelfInverse => 50,
            _ => 12,
        };
        let b = Bounds {
            q_min: self.q_min.unwrap_or(2),
            q_max: self.q_max.unwrap_or(q_max),
            n_max: self.n_max.unwrap_or(n_max),
            j_max: self.j_max.unwrap_or(if theorem == Prescribed { 6 } else { 120 }),
            jn_max: self.jn_max.unwrap_or(120),
            search_nodes: self.search_nodes.unwrap_or(skolem::DEFAULT_SEARCH_NODES),
        };
        if b.q_min > b.q_max {
            return Err(SweepError::InvalidRange(format!("q-min {} > q-max {}", b.q_min, b.q_max)));
        }
        if b.n_max == 0 || b.j_max < 2 && matches!(theorem, SkolemGeneralized | Prescribed) {
            return Err(SweepError::InvalidRange("empty n or j range".into()));
        }
        Ok(b)
    }
}

/// Counts over a finished sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub theorem: String,
    pub records: usize,
    pub agree: usize,
    pub disagree: usize,
    /// Records whose condition was true.
    pub condition_true: usize,
    pub notes: Vec<String>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.disagree == 0
    }
}

pub fn summarize(theorem: Theorem, records: &[VerificationRecord]) -> SweepSummary {
    let agree = records.iter().filter(|r| r.oracle_agrees).count();
    let mut notes = Vec::new();
    match theorem {
        Theorem::MobiusTraceZero => {
            let converse_fails = records
                .iter()
                .filter(|r| !r.condition && r.params.get("self_inverse") == Some(&Value::Bool(true)))
                .count();
            notes.push(format!("self-inverse with nonzero trace: {converse_fails}"));
        }
        Theorem::SkolemGeneralized => {
            let undecided = records
                .iter()
                .filter(|r| r.params.get("search") == Some(&json!("undecided")))
                .count();
            let refuted = records
                .iter()
                .filter(|r| r.condition && r.params.get("search") == Some(&json!("none")))
                .count();
            notes.push(format!("condition true but no sequence: {refuted}"));
            notes.push(format!("undecided within budget: {undecided}"));
        }
        _ => {}
    }
    SweepSummary {
        theorem: theorem.tag().to_string(),
        records: records.len(),
        agree,
        disagree: records.len() - agree,
        condition_true: records.iter().filter(|r| r.condition).count(),
        notes,
    }
}

/// Runs the sweep for `theorem`; records follow grid order.
pub fn run_sweep(theorem: Theorem, config: &SweepConfig) -> Result<Vec<VerificationRecord>, SweepError> {
    let b = config.resolve(theorem)?;
    match theorem {
        Theorem::Field => sweep_field(&b),
        Theorem::MonomialSameLength => sweep_monomial_same_length(&b),
        Theorem::MonomialInvolution => sweep_monomial_involution(&b),
        Theorem::DicksonInvolution => sweep_dickson(&b),
        Theorem::MobiusCensus => sweep_mobius(&b, false),
        Theorem::MobiusTraceZero => sweep_mobius(&b, true),
        Theorem::RedeiCycleOfLength
        | Theorem::RedeiCounts
        | Theorem::RedeiInverse
        | Theorem::RedeiSelfInverse
        | Theorem::RedeiSameLength
        | Theorem::RedeiPrimePower => sweep_redei(theorem, &b),
        Theorem::SkolemExistence => sweep_skolem_existence(&b),
        Theorem::SkolemSelfInverse => sweep_skolem_self_inverse(&b),
        Theorem::SkolemGeneralized => sweep_generalized(&b),
        Theorem::Prescribed => sweep_prescribed(&b),
    }
}

fn par_records<T, F>(points: &[T], f: F) -> Result<Vec<VerificationRecord>, SweepError>
where
    T: Sync,
    F: Fn(&T) -> Result<VerificationRecord, SweepError> + Sync + Send,
{
    points.par_iter().map(f).collect()
}

/// All fields `F_q` with `q_min ≤ q ≤ q_max`, default primitive polynomials.
pub fn fields_in_range(q_min: u64, q_max: u64) -> Result<Vec<FieldSpec>, GfError> {
    (q_min.max(2)..=q_max)
        .filter_map(prime_power_decomposition)
        .map(|(p, m)| build_field(p, m, None))
        .collect()
}

fn record(theorem: Theorem, q: u64, params: Value, condition: bool, oracle_agrees: bool, census: Census) -> VerificationRecord {
    let params = match params {
        Value::Object(map) => map,
        _ => Map::new(),
    };
    VerificationRecord {
        theorem: theorem.tag().to_string(),
        q,
        params,
        condition,
        oracle_agrees,
        census,
    }
}

fn codes(field: &FieldSpec, xs: &[FieldElement]) -> Vec<u64> {
    let _ = field;
    xs.iter().map(|x| x.code() as u64).collect()
}

// ---------------------------------------------------------------- field

/// Exp/log tables are mutually inverse, `a·a⁻¹ = 1`, and logs of nonzero
/// elements are exactly `{1, …, q-1}`.
pub fn field_self_check(field: &FieldSpec) -> bool {
    let q = field.q();
    let mut logs = BTreeSet::new();
    for a in field.nonzero_elements() {
        let l = field.dlog(a);
        logs.insert(l);
        if field.alpha_pow(l as i64) != a {
            return false;
        }
        match field.inv(a) {
            Ok(b) if field.mul(a, b) == field.one() => {}
            _ => return false,
        }
    }
    let exp_log = (1..q).all(|i| field.dlog(field.alpha_pow(i as i64)) == i);
    exp_log && logs.len() as u64 == q - 1 && logs.iter().copied().eq(1..q) && field.dlog(field.zero()) == 0
}

fn sweep_field(b: &Bounds) -> Result<Vec<VerificationRecord>, SweepError> {
    let qs: Vec<u64> = (b.q_min.max(2)..=b.q_max).filter(|&q| prime_power_decomposition(q).is_some()).collect();
    par_records(&qs, |&q| {
        let (p, m) = prime_power_decomposition(q).expect("prime power");
        let field = build_field(p, m, None)?;
        let ok = field_self_check(&field);
        Ok(record(
            Theorem::Field,
            q,
            json!({"p": p, "m": m, "poly": field.poly_string()}),
            ok,
            ok,
            Census::new(),
        ))
    })
}

// ---------------------------------------------------------------- monomial

fn sweep_monomial_same_length(b: &Bounds) -> Result<Vec<VerificationRecord>, SweepError> {
    let fields = fields_in_range(b.q_min.max(3), b.q_max)?;
    let points: Vec<(&FieldSpec, u64)> = fields
        .iter()
        .flat_map(|f| (1..f.q() - 1).filter(move |&n| gcd(n, f.q() - 1) == 1).map(move |n| (f, n)))
        .collect();
    par_records(&points, |&(field, n)| {
        let cs = monomial_interleaver(field, n)?.cycle_structure();
        let mut js = Vec::new();
        let mut agrees = true;
        for j in 2..field.q() {
            let c = monomial_same_length_condition(field, n, j)?;
            agrees &= c == cs.lengths_within(j as usize);
            if c {
                js.push(j);
            }
        }
        Ok(record(
            Theorem::MonomialSameLength,
            field.q(),
            json!({"n": n, "j": js}),
            !js.is_empty(),
            agrees,
            cs.counts,
        ))
    })
}

fn sweep_monomial_involution(b: &Bounds) -> Result<Vec<VerificationRecord>, SweepError> {
    let fields: Vec<FieldSpec> = fields_in_range(b.q_min.max(3), b.q_max)?
        .into_iter()
        .filter(|f| f.p() != 2)
        .collect();
    let points: Vec<(&FieldSpec, u64)> = fields
        .iter()
        .flat_map(|f| {
            let q = f.q();
            let mut ns = vec![q - 2];
            if (q - 1) % 8 == 0 {
                ns.push((q - 3) / 2);
            }
            ns.into_iter().map(move |n| (f, n))
        })
        .collect();
    par_records(&points, |&(field, n)| {
        let q = field.q();
        let perm = monomial_interleaver(field, n)?;
        let cs = perm.cycle_structure();
        let expected: Vec<usize> = codes(field, &[field.zero(), field.neg(field.one()), field.one()])
            .into_iter()
            .map(|c| c as usize)
            .collect();
        let mut fixed = cs.fixed_points.clone();
        fixed.sort_unstable();
        let mut want = expected.clone();
        want.sort_unstable();
        let listed = monomial_involution_exponents(field).contains(&n);
        let ok = perm.is_self_inverse() && fixed == want;
        Ok(record(
            Theorem::MonomialInvolution,
            q,
            json!({"n": n, "listed": listed, "fixed": fixed}),
            true,
            ok,
            cs.counts,
        ))
    })
}

// ---------------------------------------------------------------- Dickson

fn sweep_dickson(b: &Bounds) -> Result<Vec<VerificationRecord>, SweepError> {
    let fields = fields_in_range(b.q_min.max(2), b.q_max)?;
    let mut points = Vec::new();
    for f in &fields {
        let m = f.q() * f.q() - 1;
        let signs: &[DicksonA] = if f.p() == 2 {
            &[DicksonA::One]
        } else {
            &[DicksonA::One, DicksonA::MinusOne]
        };
        for &a in signs {
            for n in (1..m).filter(|&n| gcd(n, m) == 1) {
                points.push((f, n, a));
            }
        }
    }
    par_records(&points, |&(field, n, a)| {
        let cond = dickson_involution_condition(field, n, a)?;
        let cs = dickson_interleaver(field, &DicksonParams::new(n, a))?.cycle_structure();
        Ok(record(
            Theorem::DicksonInvolution,
            field.q(),
            json!({"n": n, "a": a.as_int()}),
            cond,
            cond == cs.lengths_within(2),
            cs.counts,
        ))
    })
}

// ---------------------------------------------------------------- Möbius

/// Every valid `(a, b, c, d)` over `field` in lexicographic code order.
pub fn mobius_tuples(field: &FieldSpec) -> Vec<MobiusParams> {
    let els: Vec<FieldElement> = field.elements().collect();
    let mut out = Vec::new();
    for &a in &els {
        for &b in &els {
            for &c in &els {
                for &d in &els {
                    if let Ok(p) = MobiusParams::new(field, a, b, c, d) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn sweep_mobius(b: &Bounds, trace_zero: bool) -> Result<Vec<VerificationRecord>, SweepError> {
    let fields = fields_in_range(b.q_min.max(2), b.q_max)?;
    let per_field: Vec<Vec<MobiusParams>> = fields.iter().map(mobius_tuples).collect();
    let points: Vec<(&FieldSpec, &MobiusParams)> = fields
        .iter()
        .zip(&per_field)
        .flat_map(|(f, ps)| ps.iter().map(move |p| (f, p)))
        .collect();
    par_records(&points, |&(field, params)| {
        let cs = mobius_interleaver(field, params)?.cycle_structure();
        let abcd = codes(field, &params.coefficients());
        if trace_zero {
            let cond = mobius_trace_zero_self_inverse(field, params);
            let self_inverse = cs.lengths_within(2);
            Ok(record(
                Theorem::MobiusTraceZero,
                field.q(),
                json!({"abcd": abcd, "self_inverse": self_inverse}),
                cond,
                !cond || self_inverse,
                cs.counts,
            ))
        } else {
            let pred = mobius_cycle_prediction(field, params);
            let mut params_json = json!({"abcd": abcd});
            for (k, v) in &pred.parameters {
                params_json[*k] = json!(v);
            }
            Ok(record(
                Theorem::MobiusCensus,
                field.q(),
                params_json,
                true,
                pred.census == cs.counts,
                cs.counts,
            ))
        }
    })
}

// ---------------------------------------------------------------- Rédei

fn redei_points(fields: &[FieldSpec], n_cap: Option<u64>) -> Vec<(&FieldSpec, RedeiParams)> {
    let mut out = Vec::new();
    for f in fields.iter().filter(|f| f.p() != 2) {
        let m = f.q() + 1;
        for a in f.nonzero_elements().filter(|&a| !f.is_square(a)) {
            for n in (1..=n_cap.unwrap_or(m).min(m)).filter(|&n| gcd(n, m) == 1) {
                out.push((f, RedeiParams::new(f, n, a).expect("valid Rédei parameters")));
            }
        }
    }
    out
}

fn sweep_redei(theorem: Theorem, b: &Bounds) -> Result<Vec<VerificationRecord>, SweepError> {
    let fields = fields_in_range(b.q_min.max(3), b.q_max)?;
    let points = redei_points(&fields, None);
    par_records(&points, |(field, params)| {
        let q = field.q();
        let perm = redei_interleaver(field, params)?;
        let cs = perm.cycle_structure();
        let base = json!({"n": params.n(), "a": params.a().code()});
        let rec = |cond: bool, agrees: bool, extra: Value| {
            let mut p = base.clone();
            if let Value::Object(m) = extra {
                for (k, v) in m {
                    p[k] = v;
                }
            }
            record(theorem, q, p, cond, agrees, cs.counts.clone())
        };
        Ok(match theorem {
            Theorem::RedeiCycleOfLength => {
                let mut agrees = true;
                let mut js = Vec::new();
                for j in 1..=q + 1 {
                    let c = redei_has_cycle_of_length(field, params, j)?;
                    agrees &= c == cs.has_length(j as usize);
                    if c {
                        js.push(j);
                    }
                }
                rec(true, agrees, json!({"j": js}))
            }
            Theorem::RedeiCounts => {
                let counts = redei_cycle_counts(field, params, q + 1)?;
                rec(true, counts == cs.counts, json!({}))
            }
            Theorem::RedeiInverse => {
                let m = redei_inverse_degree(field, params)?;
                let inv = redei_interleaver(field, &params.with_degree(m))?;
                let ok = perm.compose(&inv)?.is_identity() && inv.compose(&perm)?.is_identity();
                rec(true, ok, json!({"m": m}))
            }
            Theorem::RedeiSelfInverse => {
                let c = redei_self_inverse_condition(field, params)?;
                rec(c, c == perm.is_self_inverse(), json!({}))
            }
            Theorem::RedeiSameLength | Theorem::RedeiPrimePower => {
                let mut agrees = true;
                let mut js = Vec::new();
                for j in 2..=q + 1 {
                    let c = redei_all_same_length_condition(field, params, j)?;
                    agrees &= c == cs.lengths_within(j as usize);
                    if theorem == Theorem::RedeiPrimePower {
                        agrees &= c == redei_prime_power_condition(field, params, j)?;
                    }
                    if c {
                        js.push(j);
                    }
                }
                rec(!js.is_empty(), agrees, json!({"j": js}))
            }
            _ => unreachable!("not a Rédei theorem"),
        })
    })
}

// ---------------------------------------------------------------- Skolem

/// Plain, hooked and every k-extended kind for each order up to `n_max`.
pub fn classic_kinds(n_max: u64) -> Vec<(SkolemKind, usize)> {
    let mut out = Vec::new();
    for n in 1..=n_max as usize {
        out.push((SkolemKind::Plain, n));
        out.push((SkolemKind::Hooked, n));
        for k in 1..=2 * n + 1 {
            out.push((SkolemKind::KExtended { k }, n));
        }
    }
    out
}

fn kind_json(kind: SkolemKind, n: usize) -> Value {
    let mut v = json!({"kind": kind.name(), "n": n});
    match kind {
        SkolemKind::KExtended { k } => v["k"] = json!(k),
        SkolemKind::Generalized { j } => v["j"] = json!(j),
        _ => {}
    }
    v
}

fn search_label(outcome: &SearchOutcome) -> &'static str {
    match outcome {
        SearchOutcome::Found(_) => "found",
        SearchOutcome::NoneExists => "none",
        SearchOutcome::Undecided => "undecided",
    }
}

/// Census of the interleaver of the modified sequence, and whether its cycle
/// lengths are within `{1, j}` with the holes fixed.
fn modified_structure(seq: &skolem::SkolemSequence) -> Result<(Census, bool), SweepError> {
    let perm: Permutation = skolem_interleaver(&modify(seq))?;
    let cs = perm.cycle_structure();
    let j = seq.kind().multiplicity();
    let holes_fixed = seq
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e == 0)
        .all(|(i, _)| perm.apply(i) == i);
    let ok = cs.lengths_within(j) && holes_fixed && (j != 2 || perm.is_self_inverse());
    Ok((cs.counts, ok))
}

fn sweep_skolem_existence(b: &Bounds) -> Result<Vec<VerificationRecord>, SweepError> {
    let points = classic_kinds(b.n_max);
    par_records(&points, |&(kind, n)| {
        let cond = skolem_exists(kind, n)?;
        let outcome = search_sequence(kind, n, b.search_nodes)?;
        let mut params = kind_json(kind, n);
        params["search"] = json!(search_label(&outcome));
        let (agrees, census) = match &outcome {
            SearchOutcome::Found(seq) => {
                let (census, ok) = modified_structure(seq)?;
                (cond && ok, census)
            }
            SearchOutcome::NoneExists => (!cond, Census::new()),
            SearchOutcome::Undecided => (false, Census::new()),
        };
        Ok(record(Theorem::SkolemExistence, kind.length(n) as u64, params, cond, agrees, census))
    })
}

fn sweep_skolem_self_inverse(b: &Bounds) -> Result<Vec<VerificationRecord>, SweepError> {
    let points: Vec<(SkolemKind, usize)> = classic_kinds(b.n_max)
        .into_iter()
        .filter(|&(kind, n)| skolem_exists(kind, n).unwrap_or(false))
        .collect();
    par_records(&points, |&(kind, n)| {
        let seq = skolem::generate(kind, n)?;
        let (census, ok) = modified_structure(&seq)?;
        Ok(record(Theorem::SkolemSelfInverse, seq.len() as u64, kind_json(kind, n), true, ok, census))
    })
}

fn sweep_generalized(b: &Bounds) -> Result<Vec<VerificationRecord>, SweepError> {
    // every order up to n_max; beyond it only where the congruence admits one
    let mut points = Vec::new();
    for j in 2..=b.j_max.min(b.jn_max) as usize {
        for n in 1..=b.jn_max as usize / j {
            if n as u64 <= b.n_max || skolem::generalized_skolem_condition(j, n)? {
                points.push((SkolemKind::Generalized { j }, n));
            }
        }
    }
    par_records(&points, |&(kind, n)| {
        let SkolemKind::Generalized { j } = kind else { unreachable!() };
        let cond = skolem::generalized_skolem_condition(j, n)?;
        let outcome = search_sequence(kind, n, b.search_nodes)?;
        let mut params = kind_json(kind, n);
        params["search"] = json!(search_label(&outcome));
        let (agrees, census) = match &outcome {
            SearchOutcome::Found(seq) => {
                let (census, ok) = modified_structure(seq)?;
                (cond && ok, census)
            }
            SearchOutcome::NoneExists => (!cond, Census::new()),
            SearchOutcome::Undecided => (false, Census::new()),
        };
        Ok(record(Theorem::SkolemGeneralized, (j * n) as u64, params, cond, agrees, census))
    })
}

/// Deterministic grid of censuses `{1: f, j: i}` for the prescribed builder.
pub fn prescribed_grid(j_max: u64) -> Vec<Census> {
    let mut out = Vec::new();
    for j in 2..=j_max as usize {
        for i in 1..=8 {
            for f in [0, 1, 3] {
                let mut spec = Census::new();
                spec.insert(j, i);
                if f > 0 {
                    spec.insert(1, f);
                }
                out.push(spec);
            }
        }
    }
    out
}

fn sweep_prescribed(b: &Bounds) -> Result<Vec<VerificationRecord>, SweepError> {
    let specs = prescribed_grid(b.j_max);
    par_records(&specs, |spec| {
        let cond = spec
            .iter()
            .filter(|(&j, _)| j >= 2)
            .map(|(&j, &c)| skolem::generalized_skolem_condition(j, j * c))
            .collect::<Result<Vec<bool>, _>>()?
            .into_iter()
            .all(|c| c);
        let spec_json: Map<String, Value> = spec.iter().map(|(j, c)| (j.to_string(), json!(c))).collect();
        let (agrees, census, size) = match prescribed_cycle_interleaver(spec) {
            Ok(built) => {
                let cs = built.permutation.cycle_structure();
                (cond && &cs.counts == spec, cs.counts, built.permutation.size())
            }
            Err(SkolemError::BlockUnrealizable { .. }) => (!cond, Census::new(), census_size(spec)),
            Err(e) => return Err(e.into()),
        };
        Ok(record(
            Theorem::Prescribed,
            size as u64,
            json!({"spec": spec_json}),
            cond,
            agrees,
            census,
        ))
    })
}
