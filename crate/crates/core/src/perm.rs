//! Index permutations (interleavers), their inverses and cycle structure.
//!
//! [`Permutation::cycle_structure`] is the brute-force oracle that every
//! cycle-structure prediction in [`crate::cycletheory`] is checked against.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{FieldElement, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a bijection: value {value} is hit twice (second time at index {index})")]
    NotABijection { index: usize, value: usize },
    #[error("image value {value} at index {index} is out of range for size {size}")]
    OutOfRange {
        index: usize,
        value: usize,
        size: usize,
    },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("permutation must have at least one point")]
    Empty,
    #[error("malformed permutation: {0}")]
    Malformed(String),
}

/// Number of cycles of each length.
pub type Census = BTreeMap<usize, usize>;

/// A bijection of `{0, …, N-1}` stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation {
    size: usize,
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Permutation, PermError> {
        let size = image.len();
        if size == 0 {
            return Err(PermError::Empty);
        }
        let mut seen = vec![false; size];
        for (index, &value) in image.iter().enumerate() {
            if value >= size {
                return Err(PermError::OutOfRange { index, value, size });
            }
            if std::mem::replace(&mut seen[value], true) {
                return Err(PermError::NotABijection { index, value });
            }
        }
        Ok(Permutation { size, image })
    }

    pub fn identity(size: usize) -> Permutation {
        assert!(size >= 1);
        Permutation {
            size,
            image: (0..size).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.size != other.size {
            return Err(PermError::SizeMismatch(self.size, other.size));
        }
        Ok(Permutation {
            size: self.size,
            image: other.image.iter().map(|&j| self.image[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation {
            size: self.size,
            image: inv,
        }
    }

    /// The cycles, each starting at its smallest index, ordered by that index.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut visited = vec![false; self.size];
        let mut out = Vec::new();
        for start in 0..self.size {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                cycle.push(i);
                i = self.image[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Exact cycle decomposition by index chasing.
    pub fn cycle_structure(&self) -> CycleStructure {
        let mut visited = vec![false; self.size];
        let mut counts = Census::new();
        let mut fixed_points = Vec::new();
        for start in 0..self.size {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                len += 1;
                i = self.image[i];
            }
            if len == 1 {
                fixed_points.push(start);
            }
            *counts.entry(len).or_insert(0) += 1;
        }
        CycleStructure {
            counts,
            fixed_points,
        }
    }

    pub fn is_self_inverse(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(i, &v)| self.image[v] == i)
    }

    /// Two-row layout: indices on top, images below, columns right-aligned.
    /// `base` is added to every entry (use 1 for 1-indexed tables).
    pub fn two_row(&self, base: usize) -> String {
        let top: Vec<String> = (0..self.size).map(|i| (i + base).to_string()).collect();
        let bottom: Vec<String> = self.image.iter().map(|v| (v + base).to_string()).collect();
        let widths: Vec<usize> = top
            .iter()
            .zip(&bottom)
            .map(|(a, b)| a.len().max(b.len()))
            .collect();
        let row = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("{}\n{}\n", row(&top), row(&bottom))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("permutation serializes")
    }

    pub fn from_json(text: &str) -> Result<Permutation, PermError> {
        #[derive(Deserialize)]
        struct Raw {
            size: usize,
            image: Vec<usize>,
        }
        let raw: Raw =
            serde_json::from_str(text).map_err(|e| PermError::Malformed(e.to_string()))?;
        if raw.size != raw.image.len() {
            return Err(PermError::Malformed(format!(
                "size {} but {} image entries",
                raw.size,
                raw.image.len()
            )));
        }
        Permutation::new(raw.image)
    }

    /// `index,image` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,image\n");
        for (i, v) in self.image.iter().enumerate() {
            out.push_str(&format!("{i},{v}\n"));
        }
        out
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            size: usize,
            image: Vec<usize>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.size != raw.image.len() {
            return Err(serde::de::Error::custom("size does not match image length"));
        }
        Permutation::new(raw.image).map_err(serde::de::Error::custom)
    }
}

/// Census of cycle lengths plus the explicit fixed points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleStructure {
    pub counts: Census,
    pub fixed_points: Vec<usize>,
}

impl CycleStructure {
    /// `Σ j·N_j`.
    pub fn size(&self) -> usize {
        census_size(&self.counts)
    }

    pub fn max_len(&self) -> usize {
        self.counts.keys().copied().max().unwrap_or(0)
    }

    pub fn has_length(&self, j: usize) -> bool {
        self.counts.contains_key(&j)
    }

    /// Whether every cycle has length 1 or `j`.
    pub fn lengths_within(&self, j: usize) -> bool {
        self.counts.keys().all(|&len| len == 1 || len == j)
    }
}

impl fmt::Display for CycleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", CensusDisplay(&self.counts))
    }
}

pub fn census_size(census: &Census) -> usize {
    census.iter().map(|(j, n)| j * n).sum()
}

/// `{1:3, 2:5}`
pub struct CensusDisplay<'a>(pub &'a Census);

impl fmt::Display for CensusDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(|(j, n)| format!("{j}:{n}")).collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

/// `Π_P(i) = ln(P(ι(i)))` with `ι(0) = 0` and `ι(i) = α^i`.
///
/// Index `i` and field-element code `i` coincide, so the interleaver is the
/// map on codes. Fails if `map` is not a bijection of the field.
pub fn interleaver_from_field_map<F>(field: &FieldSpec, mut map: F) -> Result<Permutation, PermError>
where
    F: FnMut(FieldElement) -> FieldElement,
{
    let image = field.elements().map(|x| field.dlog(map(x)) as usize).collect();
    Permutation::new(image)
}

/// Like [`interleaver_from_field_map`] for maps that can fail pointwise.
pub fn try_interleaver_from_field_map<F, E>(field: &FieldSpec, mut map: F) -> Result<Permutation, E>
where
    F: FnMut(FieldElement) -> Result<FieldElement, E>,
    E: From<PermError>,
{
    let mut image = Vec::with_capacity(field.q() as usize);
    for x in field.elements() {
        image.push(field.dlog(map(x)?) as usize);
    }
    Ok(Permutation::new(image)?)
}
