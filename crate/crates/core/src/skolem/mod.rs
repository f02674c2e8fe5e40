//! Skolem-type sequences (plain, hooked, k-extended, generalized), their
//! modification into self-inverse or `j`-cycle interleavers, and a builder for
//! permutations with a prescribed cycle census.
//!
//! Positions inside a sequence are 1-based; the conversion to 0-based indices
//! happens in [`skolem_interleaver`].

use std::fmt;

use thiserror::Error;

use crate::numtheory::{factorize, smallest_prime_factor};
use crate::perm::{census_size, Census, PermError, Permutation};

pub mod bitsearch;
pub mod exact_cover;

use exact_cover::{ExactCover, Outcome};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkolemError {
    #[error("k-extended sequences need a hole position k")]
    MissingK,
    #[error("hole position k={k} outside [1, {max}]")]
    InvalidK { k: usize, max: usize },
    #[error("multiplicity j={0} must be at least 2")]
    InvalidJ(usize),
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("no such sequence: {0}")]
    ExistenceViolated(String),
    #[error("search exhausted for {0} although the existence condition holds")]
    SearchExhausted(String),
    #[error("search budget exhausted before {0} was found or ruled out")]
    Undecided(String),
    #[error("invalid sequence: {0}")]
    Invalid(Violation),
    #[error("cannot realize {count} cycles of length {j}: {reason}")]
    BlockUnrealizable { j: usize, count: usize, reason: String },
    #[error("malformed sequence text: {0}")]
    Parse(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SkolemKind {
    Plain,
    /// Hole at position `2n` of `2n+1`.
    Hooked,
    /// Hole at position `k` of `2n+1`.
    KExtended { k: usize },
    /// Every symbol `i` occurs `j` times, `i` apart.
    Generalized { j: usize },
}

impl SkolemKind {
    pub fn name(&self) -> &'static str {
        match self {
            SkolemKind::Plain => "plain",
            SkolemKind::Hooked => "hooked",
            SkolemKind::KExtended { .. } => "k-extended",
            SkolemKind::Generalized { .. } => "generalized",
        }
    }

    /// How often each symbol occurs.
    pub fn multiplicity(&self) -> usize {
        match *self {
            SkolemKind::Generalized { j } => j,
            _ => 2,
        }
    }

    /// Sequence length `t` for order `n`.
    pub fn length(&self, n: usize) -> usize {
        match *self {
            SkolemKind::Plain => 2 * n,
            SkolemKind::Hooked | SkolemKind::KExtended { .. } => 2 * n + 1,
            SkolemKind::Generalized { j } => j * n,
        }
    }

    /// The 1-based hole position, if any.
    pub fn hole(&self, n: usize) -> Option<usize> {
        match *self {
            SkolemKind::Hooked => Some(2 * n),
            SkolemKind::KExtended { k } => Some(k),
            _ => None,
        }
    }

    fn check(&self, n: usize) -> Result<(), SkolemError> {
        if n == 0 {
            return Err(SkolemError::ZeroOrder);
        }
        match *self {
            SkolemKind::KExtended { k } if k == 0 || k > 2 * n + 1 => {
                Err(SkolemError::InvalidK { k, max: 2 * n + 1 })
            }
            SkolemKind::Generalized { j } if j < 2 => Err(SkolemError::InvalidJ(j)),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for SkolemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkolemKind::KExtended { k } => write!(f, "k-extended(k={k})"),
            SkolemKind::Generalized { j } => write!(f, "generalized(j={j})"),
            other => f.write_str(other.name()),
        }
    }
}

/// The first position where a sequence breaks its kind's rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// 1-based; `None` when a symbol is missing altogether.
    pub position: Option<usize>,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.position {
            Some(p) => write!(f, "position {p}: {}", self.reason),
            None => f.write_str(&self.reason),
        }
    }
}

// ---------------------------------------------------------------- existence

fn mod4_in(n: usize, residues: &[usize]) -> bool {
    residues.contains(&(n % 4))
}

/// Existence of plain, hooked and k-extended sequences by the congruence conditions.
pub fn skolem_exists(kind: SkolemKind, n: usize) -> Result<bool, SkolemError> {
    kind.check(n)?;
    Ok(match kind {
        SkolemKind::Plain => mod4_in(n, &[0, 1]),
        SkolemKind::Hooked => mod4_in(n, &[2, 3]),
        SkolemKind::KExtended { k } => {
            if k % 2 == 1 {
                mod4_in(n, &[0, 1])
            } else {
                mod4_in(n, &[2, 3])
            }
        }
        SkolemKind::Generalized { j } => generalized_skolem_exists(j, n)?,
    })
}

/// With `j = p^e·t`, `p` the smallest prime factor of `j`: `n mod p^{e+1} < p`.
///
/// Necessary for a `(j, n)` sequence to exist, but not sufficient: `(3, 2)` and
/// `(4, 8)`, among others, satisfy it without a sequence existing.
pub fn generalized_skolem_condition(j: usize, n: usize) -> Result<bool, SkolemError> {
    if j < 2 {
        return Err(SkolemError::InvalidJ(j));
    }
    if n == 0 {
        return Err(SkolemError::ZeroOrder);
    }
    let p = smallest_prime_factor(j as u64) as usize;
    let e = factorize(j as u64).factors()[0].1;
    Ok(n % p.pow(e + 1) < p)
}

/// Exact existence of a `(j, n)` generalized sequence: the congruence condition,
/// settled by searching for a witness within [`DEFAULT_SEARCH_NODES`].
///
/// Fails with [`SkolemError::Undecided`] if the search budget runs out.
pub fn generalized_skolem_exists(j: usize, n: usize) -> Result<bool, SkolemError> {
    if !generalized_skolem_condition(j, n)? {
        return Ok(false);
    }
    match search_sequence(SkolemKind::Generalized { j }, n, DEFAULT_SEARCH_NODES)? {
        SearchOutcome::Found(_) => Ok(true),
        SearchOutcome::NoneExists => Ok(false),
        SearchOutcome::Undecided => Err(SkolemError::Undecided(format!("generalized(j={j}) of order {n}"))),
    }
}

// ---------------------------------------------------------------- generation

/// Node budget used by [`generate`] and [`generalized_skolem_exists`].
pub const DEFAULT_SEARCH_NODES: u64 = 25_000_000;

const SEARCH_SEED: u64 = 0x5ec0_1e77;

/// What a bounded search established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(SkolemSequence),
    /// A complete search found nothing.
    NoneExists,
    /// The node budget ran out first.
    Undecided,
}

/// Complete search for a sequence, by two engines taking turns under a growing
/// node budget.
///
/// One is an exact cover (a column per symbol and per non-hole position, a row per
/// admissible placement) solved by dancing links; it tends to find sequences fast.
/// The other fills the leftmost empty cell first over bitmasks and remembers dead
/// states; it tends to rule sequences out fast, and is used for lengths up to 128.
/// The first round lists symbols largest first; later rounds shuffle placements and
/// symbol order with a fixed-seed generator, so results are deterministic. A round
/// that finishes within its budget without a sequence proves that none exists. At
/// most `max_nodes` nodes are spent in total.
pub fn search_sequence(kind: SkolemKind, n: usize, max_nodes: u64) -> Result<SearchOutcome, SkolemError> {
    kind.check(n)?;
    let t = kind.length(n);
    let j = kind.multiplicity();
    let hole = kind.hole(n);
    // column index of each position; symbol i takes column n - i
    let mut col_of = vec![usize::MAX; t + 1];
    let mut next = n;
    for (pos, slot) in col_of.iter_mut().enumerate().skip(1) {
        if Some(pos) != hole {
            *slot = next;
            next += 1;
        }
    }
    let mut placements = Vec::new();
    for i in (1..=n).rev() {
        for r in 1..=t.saturating_sub((j - 1) * i) {
            if (0..j).all(|w| Some(r + w * i) != hole) {
                placements.push((i, r));
            }
        }
    }
    let decode_bits = |code: Vec<usize>| {
        let mut entries = vec![0usize; t];
        for c in code {
            let (i, r) = (c / t, c % t);
            for w in 0..j {
                entries[r + w * i] = i;
            }
        }
        entries
    };
    let decode_rows = |rows: Vec<usize>, placements: &[(usize, usize)]| {
        let mut entries = vec![0usize; t];
        for row in rows {
            let (i, r) = placements[row];
            for w in 0..j {
                entries[r + w * i - 1] = i;
            }
        }
        entries
    };
    let mut bits = (t <= bitsearch::MAX_LENGTH).then(|| bitsearch::BitSearch::new(n, j, t, hole.map(|h| h - 1)));
    let mut order: Vec<usize> = (1..=n).rev().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEARCH_SEED);
    let mut budget = 64 * (placements.len() as u64 + 1);
    let mut spent = 0u64;
    while spent < max_nodes {
        let mut ec = ExactCover::new(next);
        let mut cols = Vec::with_capacity(j + 1);
        for &(i, r) in &placements {
            cols.clear();
            cols.push(n - i);
            cols.extend((0..j).map(|w| col_of[r + w * i]));
            ec.add_row(&cols);
        }
        // dancing-links nodes cost more, so it gets a smaller share when both run
        let share = if bits.is_some() { budget / 8 } else { budget };
        let (outcome, used) = ec.solve_bounded(share.min(max_nodes - spent));
        spent += used;
        match outcome {
            Outcome::Found(rows) => {
                let entries = decode_rows(rows, &placements);
                return Ok(SearchOutcome::Found(SkolemSequence::new(kind, n, entries)?));
            }
            Outcome::Exhausted => return Ok(SearchOutcome::NoneExists),
            Outcome::BudgetExceeded => {}
        }
        if let Some(bs) = bits.as_mut() {
            if spent >= max_nodes {
                break;
            }
            let (outcome, used) = bs.attempt(&order, budget.min(max_nodes - spent));
            spent += used;
            match outcome {
                Outcome::Found(code) => {
                    return Ok(SearchOutcome::Found(SkolemSequence::new(kind, n, decode_bits(code))?));
                }
                Outcome::Exhausted => return Ok(SearchOutcome::NoneExists),
                Outcome::BudgetExceeded => order.shuffle(&mut rng),
            }
        }
        placements.shuffle(&mut rng);
        budget += budget / 2;
    }
    Ok(SearchOutcome::Undecided)
}

/// A valid sequence; 1-based positions, `0` marks the hole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkolemSequence {
    kind: SkolemKind,
    order: usize,
    entries: Vec<usize>,
}

impl SkolemSequence {
    /// Validates `entries` against `kind` and `order`.
    pub fn new(kind: SkolemKind, order: usize, entries: Vec<usize>) -> Result<SkolemSequence, SkolemError> {
        kind.check(order)?;
        let signed: Vec<i64> = entries.iter().map(|&e| e as i64).collect();
        validate(kind, order, &signed).map_err(SkolemError::Invalid)?;
        Ok(SkolemSequence { kind, order, entries })
    }

    pub fn kind(&self) -> SkolemKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `s_pos` for 1-based `pos`.
    pub fn at(&self, pos: usize) -> usize {
        self.entries[pos - 1]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_text(&self) -> String {
        let signed: Vec<i64> = self.entries.iter().map(|&e| e as i64).collect();
        sequence_text(self.kind, self.order, &signed)
    }
}

/// The order-6 hooked sequence used as the worked example throughout.
pub const HOOKED_ORDER_6: [usize; 13] = [2, 5, 2, 6, 1, 1, 5, 3, 4, 6, 3, 0, 4];

/// A deterministic sequence of the requested kind.
///
/// Hooked order 6 returns [`HOOKED_ORDER_6`]; everything else comes from search.
pub fn generate(kind: SkolemKind, n: usize) -> Result<SkolemSequence, SkolemError> {
    kind.check(n)?;
    let admissible = match kind {
        SkolemKind::Generalized { j } => generalized_skolem_condition(j, n)?,
        _ => skolem_exists(kind, n)?,
    };
    if !admissible {
        return Err(SkolemError::ExistenceViolated(existence_reason(kind, n)));
    }
    if kind == SkolemKind::Hooked && n == 6 {
        return SkolemSequence::new(kind, n, HOOKED_ORDER_6.to_vec());
    }
    let what = || format!("{kind} of order {n}");
    match search_sequence(kind, n, DEFAULT_SEARCH_NODES)? {
        SearchOutcome::Found(seq) => Ok(seq),
        SearchOutcome::NoneExists => Err(SkolemError::SearchExhausted(what())),
        SearchOutcome::Undecided => Err(SkolemError::Undecided(what())),
    }
}

/// Names the congruence that rules out `(kind, n)`.
pub fn existence_reason(kind: SkolemKind, n: usize) -> String {
    match kind {
        SkolemKind::Plain => format!("n≡{} (mod 4); plain sequences need n≡0,1 (mod 4)", n % 4),
        SkolemKind::Hooked => format!("n≡{} (mod 4); hooked sequences need n≡2,3 (mod 4)", n % 4),
        SkolemKind::KExtended { k } => {
            let need = if k % 2 == 1 { "0,1" } else { "2,3" };
            format!("n≡{} (mod 4); k={k} needs n≡{need} (mod 4)", n % 4)
        }
        SkolemKind::Generalized { j } => {
            let p = smallest_prime_factor(j as u64) as usize;
            let e = factorize(j as u64).factors()[0].1;
            let m = p.pow(e + 1);
            let residues: Vec<String> = (0..p).map(|r| r.to_string()).collect();
            format!("n≡{} (mod {m}); j={j} needs n≡{} (mod {m})", n % m, residues.join(","))
        }
    }
}

// ---------------------------------------------------------------- validation

/// Checks `entries` (1-based positions, `0` = hole) against the rules of `kind`.
///
/// Negative entries are rejected; use [`validate_modified`] for modified sequences.
pub fn validate(kind: SkolemKind, n: usize, entries: &[i64]) -> Result<(), Violation> {
    let fail = |position: Option<usize>, reason: String| Err(Violation { position, reason });
    if kind.check(n).is_err() {
        return fail(None, format!("invalid parameters for {kind} of order {n}"));
    }
    let t = kind.length(n);
    if entries.len() != t {
        return fail(None, format!("length {} but {kind} of order {n} has length {t}", entries.len()));
    }
    let j = kind.multiplicity();
    let hole = kind.hole(n);
    let mut first = vec![0usize; n + 1];
    let mut count = vec![0usize; n + 1];
    for (idx, &v) in entries.iter().enumerate() {
        let pos = idx + 1;
        if Some(pos) == hole {
            if v != 0 {
                return fail(Some(pos), format!("expected the hole, found {v}"));
            }
            continue;
        }
        if v == 0 {
            return fail(Some(pos), "unexpected hole".into());
        }
        if v < 0 || v as usize > n {
            return fail(Some(pos), format!("symbol {v} outside [1, {n}]"));
        }
        let i = v as usize;
        if count[i] == 0 {
            first[i] = pos;
        } else {
            let expected = first[i] + count[i] * i;
            if count[i] >= j {
                return fail(Some(pos), format!("symbol {i} occurs more than {j} times"));
            }
            if pos != expected {
                return fail(Some(pos), format!("symbol {i} expected at position {expected}"));
            }
        }
        count[i] += 1;
    }
    for i in 1..=n {
        if count[i] == 0 {
            return fail(None, format!("symbol {i} missing"));
        }
        if count[i] < j {
            return fail(
                Some(first[i] + count[i] * i),
                format!("symbol {i} occurs {} of {j} times", count[i]),
            );
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- modification

/// A sequence whose last occurrence of each symbol `i` is replaced by `-(j-1)·i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModifiedSkolemSequence {
    kind: SkolemKind,
    order: usize,
    entries: Vec<i64>,
}

impl ModifiedSkolemSequence {
    /// Checks that `entries` is the modification of a valid sequence.
    pub fn new(kind: SkolemKind, order: usize, entries: Vec<i64>) -> Result<ModifiedSkolemSequence, SkolemError> {
        kind.check(order)?;
        validate_modified(kind, order, &entries).map_err(SkolemError::Invalid)?;
        Ok(ModifiedSkolemSequence { kind, order, entries })
    }

    pub fn kind(&self) -> SkolemKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn to_text(&self) -> String {
        sequence_text(self.kind, self.order, &self.entries)
    }
}

/// Undoes the modification and validates the underlying sequence.
pub fn validate_modified(kind: SkolemKind, n: usize, entries: &[i64]) -> Result<(), Violation> {
    let j = kind.multiplicity() as i64;
    let mut seen_negative = vec![false; n + 1];
    let mut restored = Vec::with_capacity(entries.len());
    for (idx, &v) in entries.iter().enumerate() {
        if v >= 0 {
            restored.push(v);
            continue;
        }
        if v % (j - 1) != 0 || (-v / (j - 1)) as usize > n {
            return Err(Violation {
                position: Some(idx + 1),
                reason: format!("{v} is not -(j-1)·i for a symbol i"),
            });
        }
        let i = -v / (j - 1);
        if seen_negative[i as usize] {
            return Err(Violation {
                position: Some(idx + 1),
                reason: format!("second negative entry for symbol {i}"),
            });
        }
        seen_negative[i as usize] = true;
        restored.push(i);
    }
    validate(kind, n, &restored)?;
    // the negative entry must be the last occurrence
    let mut last = vec![0usize; n + 1];
    for (idx, &v) in restored.iter().enumerate() {
        if v > 0 {
            last[v as usize] = idx;
        }
    }
    for i in 1..=n {
        if entries[last[i]] >= 0 {
            return Err(Violation {
                position: Some(last[i] + 1),
                reason: format!("last occurrence of {i} is not negated"),
            });
        }
    }
    Ok(())
}

pub fn modify(seq: &SkolemSequence) -> ModifiedSkolemSequence {
    let j = seq.kind.multiplicity() as i64;
    let mut entries: Vec<i64> = seq.entries.iter().map(|&e| e as i64).collect();
    let mut done = vec![false; seq.order + 1];
    for e in entries.iter_mut().rev() {
        let i = *e as usize;
        if i > 0 && !done[i] {
            done[i] = true;
            *e = -(j - 1) * i as i64;
        }
    }
    ModifiedSkolemSequence {
        kind: seq.kind,
        order: seq.order,
        entries,
    }
}

/// `Π(u-1) = u + s_u - 1`; holes are fixed points.
pub fn skolem_interleaver(mseq: &ModifiedSkolemSequence) -> Result<Permutation, SkolemError> {
    let image = mseq
        .entries
        .iter()
        .enumerate()
        .map(|(idx, &s)| (idx as i64 + s) as usize)
        .collect();
    Ok(Permutation::new(image)?)
}

// ---------------------------------------------------------------- text format

fn sequence_text(kind: SkolemKind, n: usize, entries: &[i64]) -> String {
    let body: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
    format!(
        "# kind={} n={n} j={} k={}\n{}\n",
        kind.name(),
        kind.multiplicity(),
        kind.hole(n).unwrap_or(0),
        body.join(" ")
    )
}

/// Parses the header-plus-line format written by `to_text`.
///
/// Returns the kind, order and raw entries (modified or not).
pub fn parse_sequence_text(text: &str) -> Result<(SkolemKind, usize, Vec<i64>), SkolemError> {
    let bad = |m: &str| SkolemError::Parse(m.to_string());
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| bad("empty input"))?;
    let header = header.strip_prefix('#').ok_or_else(|| bad("missing '#' header"))?;
    let (mut kind, mut n, mut j, mut k) = (None, None, None, None);
    for field in header.split_whitespace() {
        let (key, value) = field.split_once('=').ok_or_else(|| bad(field))?;
        match key {
            "kind" => kind = Some(value.to_string()),
            "n" => n = Some(value.parse::<usize>().map_err(|_| bad(field))?),
            "j" => j = Some(value.parse::<usize>().map_err(|_| bad(field))?),
            "k" => k = Some(value.parse::<usize>().map_err(|_| bad(field))?),
            _ => return Err(bad(field)),
        }
    }
    let n = n.ok_or_else(|| bad("header lacks n"))?;
    let kind = match kind.as_deref() {
        Some("plain") => SkolemKind::Plain,
        Some("hooked") => SkolemKind::Hooked,
        Some("k-extended") => SkolemKind::KExtended {
            k: k.ok_or(SkolemError::MissingK)?,
        },
        Some("generalized") => SkolemKind::Generalized {
            j: j.ok_or_else(|| bad("header lacks j"))?,
        },
        _ => return Err(bad("unknown kind")),
    };
    let body = lines.next().ok_or_else(|| bad("missing sequence line"))?;
    let entries = body
        .split_whitespace()
        .map(|tok| tok.parse::<i64>().map_err(|_| bad(tok)))
        .collect::<Result<Vec<_>, _>>()?;
    if lines.next().is_some() {
        return Err(bad("trailing lines"));
    }
    Ok((kind, n, entries))
}

// ---------------------------------------------------------------- prescribed census

/// Largest order tried for a single block; larger counts are split.
pub const MAX_BLOCK_ORDER: usize = 24;

/// Search budget per candidate block order.
const BLOCK_SEARCH_NODES: u64 = 200_000;

/// One block of a prescribed-census permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub cycle_length: usize,
    /// Orders of the generalized sequences used, one per sub-block.
    pub orders: Vec<usize>,
    pub offset: usize,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrescribedInterleaver {
    pub permutation: Permutation,
    pub blocks: Vec<Block>,
}

/// Builds a permutation with exactly `spec[j]` cycles of length `j`.
///
/// Each length `j ≥ 2` needs the `(j, j·i_j)` congruence condition to hold.
/// Cycles of length `j` come from modified `(j, m)` sequences with the orders `m`
/// summing to `i_j`: the largest order up to [`MAX_BLOCK_ORDER`] whose sequence is
/// found quickly is used first, and order 1 always works.
/// Fixed points are appended last.
pub fn prescribed_cycle_interleaver(spec: &Census) -> Result<PrescribedInterleaver, SkolemError> {
    let mut image = Vec::with_capacity(census_size(spec));
    let mut blocks = Vec::new();
    for (&j, &count) in spec.iter().filter(|(&j, &c)| j >= 2 && c > 0) {
        if !generalized_skolem_condition(j, j * count)? {
            return Err(SkolemError::BlockUnrealizable {
                j,
                count,
                reason: existence_reason(SkolemKind::Generalized { j }, j * count),
            });
        }
        let offset = image.len();
        let mut orders = Vec::new();
        let mut remaining = count;
        while remaining > 0 {
            let (m, seq) = (1..=remaining.min(MAX_BLOCK_ORDER))
                .rev()
                .filter(|&m| generalized_skolem_condition(j, m).unwrap_or(false))
                .find_map(|m| match search_sequence(SkolemKind::Generalized { j }, m, BLOCK_SEARCH_NODES) {
                    Ok(SearchOutcome::Found(s)) => Some((m, s)),
                    _ => None,
                })
                .expect("order 1 always exists");
            let perm = skolem_interleaver(&modify(&seq))?;
            let base = image.len();
            image.extend(perm.image().iter().map(|&v| v + base));
            orders.push(m);
            remaining -= m;
        }
        blocks.push(Block {
            cycle_length: j,
            orders,
            offset,
            size: image.len() - offset,
        });
    }
    if let Some(&fixed) = spec.get(&1) {
        let offset = image.len();
        image.extend(offset..offset + fixed);
        if fixed > 0 {
            blocks.push(Block {
                cycle_length: 1,
                orders: vec![],
                offset,
                size: fixed,
            });
        }
    }
    if spec.contains_key(&0) {
        return Err(SkolemError::BlockUnrealizable {
            j: 0,
            count: spec[&0],
            reason: "cycle length 0".into(),
        });
    }
    let permutation = Permutation::new(image)?;
    debug_assert_eq!(&permutation.cycle_structure().counts, &normalized(spec));
    Ok(PrescribedInterleaver { permutation, blocks })
}

fn normalized(spec: &Census) -> Census {
    spec.iter().filter(|(_, &c)| c > 0).map(|(&j, &c)| (j, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;


    /// Independent search: fill the leftmost empty position with each unused symbol.
    fn exhaustive_exists(kind: SkolemKind, n: usize) -> bool {
        fn rec(s: &mut [usize], used: &mut [bool], n: usize, j: usize) -> bool {
            let Some(pos) = s.iter().position(|&v| v == 0) else {
                return true;
            };
            for i in 1..=n {
                if used[i] {
                    continue;
                }
                let ps: Vec<usize> = (0..j).map(|w| pos + w * i).collect();
                if ps.iter().any(|&p| p >= s.len() || s[p] != 0) {
                    continue;
                }
                ps.iter().for_each(|&p| s[p] = i);
                used[i] = true;
                if rec(s, used, n, j) {
                    return true;
                }
                ps.iter().for_each(|&p| s[p] = 0);
                used[i] = false;
            }
            false
        }
        let mut s = vec![0usize; kind.length(n)];
        if let Some(h) = kind.hole(n) {
            s[h - 1] = usize::MAX;
        }
        rec(&mut s, &mut vec![false; n + 1], n, kind.multiplicity())
    }

    #[test]
    fn existence_examples() {
        assert_eq!(skolem_exists(SkolemKind::Plain, 4), Ok(true));
        assert_eq!(skolem_exists(SkolemKind::Hooked, 6), Ok(true));
        assert_eq!(skolem_exists(SkolemKind::Plain, 6), Ok(false));
        assert_eq!(generalized_skolem_condition(2, 4), Ok(true));
        assert_eq!(generalized_skolem_condition(2, 6), Ok(false));
        assert_eq!(generalized_skolem_condition(3, 9), Ok(true));
        assert_eq!(generalized_skolem_exists(3, 9), Ok(true));
        assert_eq!(generalized_skolem_condition(3, 2), Ok(true));
        assert_eq!(generalized_skolem_exists(3, 2), Ok(false));
        assert!(generalized_skolem_condition(1, 3).is_err());
        assert_eq!(
            skolem_exists(SkolemKind::KExtended { k: 0 }, 3),
            Err(SkolemError::InvalidK { k: 0, max: 7 })
        );
    }

    #[test]
    fn existence_matches_exhaustive_search() {
        for n in 1..=10 {
            for kind in [SkolemKind::Plain, SkolemKind::Hooked] {
                assert_eq!(skolem_exists(kind, n).unwrap(), exhaustive_exists(kind, n), "{kind} n={n}");
            }
            for k in 1..=2 * n + 1 {
                let kind = SkolemKind::KExtended { k };
                assert_eq!(skolem_exists(kind, n).unwrap(), exhaustive_exists(kind, n), "{kind} n={n}");
            }
        }
        for (j, n_max) in [(3, 8), (4, 6), (5, 4), (6, 4)] {
            for n in 1..=n_max {
                let kind = SkolemKind::Generalized { j };
                assert_eq!(generalized_skolem_exists(j, n).unwrap(), exhaustive_exists(kind, n), "{kind} n={n}");
            }
        }
    }

    #[test]
    fn generation_examples() {
        assert_eq!(generate(SkolemKind::Plain, 1).unwrap().entries(), &[1, 1]);
        assert_eq!(generate(SkolemKind::Generalized { j: 3 }, 1).unwrap().entries(), &[1, 1, 1]);
        assert!(matches!(generate(SkolemKind::Plain, 6), Err(SkolemError::ExistenceViolated(_))));
        assert!(matches!(
            generate(SkolemKind::Generalized { j: 3 }, 2),
            Err(SkolemError::SearchExhausted(_))
        ));
        let s = generate(SkolemKind::Plain, 4).unwrap();
        assert_eq!(s, generate(SkolemKind::Plain, 4).unwrap());
    }

    #[test]
    fn validate_examples() {
        let ok = |kind, n, e: &[i64]| validate(kind, n, e);
        assert_eq!(ok(SkolemKind::Plain, 4, &[4, 1, 1, 3, 4, 2, 3, 2]), Ok(()));
        let hooked: Vec<i64> = HOOKED_ORDER_6.iter().map(|&e| e as i64).collect();
        assert_eq!(ok(SkolemKind::Hooked, 6, &hooked), Ok(()));
        assert!(ok(SkolemKind::Plain, 2, &[1, 2, 1]).is_err());
        let v = ok(SkolemKind::Plain, 4, &[4, 1, 1, 3, 4, 2, 2, 3]).unwrap_err();
        assert_eq!(v.position, Some(7));
        let v = ok(SkolemKind::Hooked, 2, &[1, 1, 2, 2, 0]).unwrap_err();
        assert_eq!(v.position, Some(4));
    }

    #[test]
    fn modification_and_interleaver_of_hooked_example() {
        let seq = SkolemSequence::new(SkolemKind::Hooked, 6, HOOKED_ORDER_6.to_vec()).unwrap();
        let m = modify(&seq);
        assert_eq!(m.entries(), &[2, 5, -2, 6, 1, -1, -5, 3, 4, -6, -3, 0, -4]);
        let perm = skolem_interleaver(&m).unwrap();
        let one_based: Vec<usize> = perm.image().iter().map(|v| v + 1).collect();
        assert_eq!(one_based, vec![3, 7, 1, 10, 6, 5, 2, 11, 13, 4, 8, 12, 9]);
        assert!(perm.is_self_inverse());
    }

    #[test]
    fn small_modifications() {
        let m = modify(&generate(SkolemKind::Plain, 1).unwrap());
        assert_eq!(m.entries(), &[1, -1]);
        assert_eq!(skolem_interleaver(&m).unwrap().image(), &[1, 0]);
        let m = modify(&generate(SkolemKind::Generalized { j: 3 }, 1).unwrap());
        assert_eq!(m.entries(), &[1, 1, -2]);
        assert_eq!(skolem_interleaver(&m).unwrap().image(), &[1, 2, 0]);
        assert!(ModifiedSkolemSequence::new(SkolemKind::Plain, 1, vec![-1, 1]).is_err());
        assert!(ModifiedSkolemSequence::new(SkolemKind::Plain, 1, vec![1, -1]).is_ok());
    }

    #[test]
    fn text_round_trip() {
        let seq = SkolemSequence::new(SkolemKind::Hooked, 6, HOOKED_ORDER_6.to_vec()).unwrap();
        let text = seq.to_text();
        assert_eq!(text, "# kind=hooked n=6 j=2 k=12\n2 5 2 6 1 1 5 3 4 6 3 0 4\n");
        let (kind, n, entries) = parse_sequence_text(&text).unwrap();
        assert_eq!((kind, n), (SkolemKind::Hooked, 6));
        let m = ModifiedSkolemSequence::new(kind, n, modify(&seq).entries().to_vec()).unwrap();
        assert_eq!(parse_sequence_text(&m.to_text()).unwrap().2, m.entries());
        assert_eq!(entries.len(), 13);
        assert!(parse_sequence_text("2 2").is_err());
        assert!(parse_sequence_text("# kind=k-extended n=2 j=2\n1 1 0 2 2").is_err());
    }

    #[test]
    fn generated_sequences_give_self_inverse_interleavers() {
        for n in 1..=30 {
            let mut kinds = vec![SkolemKind::Plain, SkolemKind::Hooked];
            kinds.extend((1..=2 * n + 1).step_by(7).map(|k| SkolemKind::KExtended { k }));
            for kind in kinds {
                if !skolem_exists(kind, n).unwrap() {
                    continue;
                }
                let seq = generate(kind, n).unwrap();
                let perm = skolem_interleaver(&modify(&seq)).unwrap();
                assert!(perm.is_self_inverse(), "{kind} n={n}");
            }
        }
    }

    #[test]
    fn prescribed_examples() {
        let spec = Census::from([(1, 3)]);
        assert!(prescribed_cycle_interleaver(&spec).unwrap().permutation.is_identity());
        for spec in [Census::from([(2, 4)]), Census::from([(1, 2), (3, 3)])] {
            let built = prescribed_cycle_interleaver(&spec).unwrap();
            assert_eq!(built.permutation.cycle_structure().counts, spec);
        }
        let built = prescribed_cycle_interleaver(&Census::from([(2, 4)])).unwrap();
        assert_eq!(built.blocks[0].orders, vec![4]);
        assert!(matches!(
            prescribed_cycle_interleaver(&Census::from([(2, 3)])),
            Err(SkolemError::BlockUnrealizable { j: 2, count: 3, .. })
        ));
    }
}
