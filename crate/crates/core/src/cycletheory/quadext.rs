//! Arithmetic in `F_q[θ]/(θ² - τθ + δ)` for an irreducible `t(x) = x² - τx + δ`.
//!
//! Elements are pairs `(u, v) ↔ u + vθ`. The quadratic itself serves as the
//! modulus, so `θ` is a root of `t` and `τ - θ` is the other one.

use crate::gf::{FieldElement, FieldSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quad {
    pub u: FieldElement,
    pub v: FieldElement,
}

pub struct QuadExt<'f> {
    field: &'f FieldSpec,
    tau: FieldElement,
    delta: FieldElement,
}

impl<'f> QuadExt<'f> {
    /// Caller guarantees `x² - τx + δ` has no root in the base field.
    pub fn new(field: &'f FieldSpec, tau: FieldElement, delta: FieldElement) -> QuadExt<'f> {
        debug_assert!(field
            .elements()
            .all(|x| !field.add(field.sub(field.mul(x, x), field.mul(tau, x)), delta).is_zero()));
        QuadExt { field, tau, delta }
    }

    pub fn one(&self) -> Quad {
        Quad {
            u: self.field.one(),
            v: self.field.zero(),
        }
    }

    /// The root `θ`.
    pub fn theta(&self) -> Quad {
        Quad {
            u: self.field.zero(),
            v: self.field.one(),
        }
    }

    pub fn mul(&self, x: Quad, y: Quad) -> Quad {
        let f = self.field;
        // θ² = τθ - δ
        let vv = f.mul(x.v, y.v);
        Quad {
            u: f.sub(f.mul(x.u, y.u), f.mul(vv, self.delta)),
            v: f.add(f.add(f.mul(x.u, y.v), f.mul(x.v, y.u)), f.mul(vv, self.tau)),
        }
    }

    pub fn pow(&self, x: Quad, mut e: u64) -> Quad {
        let (mut acc, mut base) = (self.one(), x);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `θ / (τ - θ)`, the quotient of the two roots of `t`.
    ///
    /// Since `θ(τ - θ) = δ`, this equals `θ²/δ = (τθ - δ)/δ`.
    pub fn root_ratio(&self) -> Quad {
        let f = self.field;
        let inv = f.inv(self.delta).expect("δ ≠ 0");
        Quad {
            u: f.neg(f.one()),
            v: f.mul(self.tau, inv),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;

    #[test]
    fn ratio_times_conjugate_root_is_theta() {
        let f = build_field(7, 1, None).unwrap();
        // x² - x + 3 has no root mod 7
        let (tau, delta) = (f.from_int(1), f.from_int(3));
        let ext = QuadExt::new(&f, tau, delta);
        let other = Quad {
            u: tau,
            v: f.neg(f.one()),
        };
        assert_eq!(ext.mul(ext.root_ratio(), other), ext.theta());
        // the multiplicative group has order q² - 1
        assert_eq!(ext.pow(ext.theta(), 48), ext.one());
        // the ratio has norm 1, so its order divides q + 1
        assert_eq!(ext.pow(ext.root_ratio(), 8), ext.one());
    }
}
