//! Möbius transformations `T(x) = (ax + b)/(cx + d)` with `T(-d/c) = a/c`.

use crate::gf::{FieldElement, FieldSpec};
use crate::perm::{interleaver_from_field_map, Permutation};

use super::FamilyError;

/// Coefficients with `c ≠ 0` and `ad - bc ≠ 0`; only constructible through [`MobiusParams::new`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MobiusParams {
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
    d: FieldElement,
}

impl MobiusParams {
    pub fn new(
        field: &FieldSpec,
        a: FieldElement,
        b: FieldElement,
        c: FieldElement,
        d: FieldElement,
    ) -> Result<MobiusParams, FamilyError> {
        for e in [a, b, c, d] {
            if !field.contains(e) {
                return Err(crate::gf::GfError::MixedFields.into());
            }
        }
        if c.is_zero() {
            return Err(FamilyError::InvalidMobius("c = 0".into()));
        }
        if field.sub(field.mul(a, d), field.mul(b, c)).is_zero() {
            return Err(FamilyError::InvalidMobius("ad - bc = 0".into()));
        }
        Ok(MobiusParams { a, b, c, d })
    }

    pub fn a(&self) -> FieldElement {
        self.a
    }

    pub fn b(&self) -> FieldElement {
        self.b
    }

    pub fn c(&self) -> FieldElement {
        self.c
    }

    pub fn d(&self) -> FieldElement {
        self.d
    }

    /// `(a, b, c, d)`.
    pub fn coefficients(&self) -> [FieldElement; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// `tr(A_T) = a + d`.
    pub fn trace(&self, field: &FieldSpec) -> FieldElement {
        field.add(self.a, self.d)
    }

    /// `det(A_T) = ad - bc`.
    pub fn determinant(&self, field: &FieldSpec) -> FieldElement {
        field.sub(field.mul(self.a, self.d), field.mul(self.b, self.c))
    }

    /// The point `-d/c` that is sent to `a/c`.
    pub fn pole(&self, field: &FieldSpec) -> FieldElement {
        field.neg(field.div(self.d, self.c).expect("c ≠ 0"))
    }
}

pub fn mobius_eval(field: &FieldSpec, params: &MobiusParams, x: FieldElement) -> FieldElement {
    let MobiusParams { a, b, c, d } = *params;
    let den = field.add(field.mul(c, x), d);
    if den.is_zero() {
        return field.div(a, c).expect("c ≠ 0");
    }
    let num = field.add(field.mul(a, x), b);
    field.div(num, den).expect("nonzero denominator")
}

/// Coefficients `(d, -b, -c, a)` of `T^{-1}`.
pub fn mobius_inverse_params(field: &FieldSpec, params: &MobiusParams) -> MobiusParams {
    MobiusParams {
        a: params.d,
        b: field.neg(params.b),
        c: field.neg(params.c),
        d: params.a,
    }
}

pub fn mobius_interleaver(field: &FieldSpec, params: &MobiusParams) -> Result<Permutation, FamilyError> {
    Ok(interleaver_from_field_map(field, |x| mobius_eval(field, params, x))?)
}
