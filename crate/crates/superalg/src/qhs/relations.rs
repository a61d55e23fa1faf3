//! Instances of the defining relations of R_θ at a fixed idempotent.

use super::{Monomial, Poly, Qhs, QhsElement, QhsError};
use crate::coeffs::Scalar;
use crate::combin::Permutation;

/// One relation evaluated in the normal form: it holds iff `lhs == rhs`.
#[derive(Clone, Debug)]
pub struct RelationInstance<S> {
    pub name: &'static str,
    pub lhs: QhsElement<S>,
    pub rhs: QhsElement<S>,
}

impl<S: Scalar> RelationInstance<S> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Names of all relations, in the order `relations` emits them.
pub const RELATION_NAMES: &[&str] = &["R1", "R1'", "R2", "R2.5", "R2.75", "R3", "R5a", "R5b", "R6", "R4", "R65", "R7"];

impl<S: Scalar> Qhs<S> {
    fn poly_at(&self, poly: &Poly, idem: &[usize], p: usize, q: usize) -> QhsElement<S> {
        let mut out = QhsElement::zero();
        for &(c, a, b) in poly {
            let mut m = Monomial { w: Permutation::identity(self.n), k: vec![0; self.n], idem: idem.to_vec() };
            m.k[p] += a;
            m.k[q] += b;
            out = out.add(&QhsElement::monomial(m).scale(&S::from_i64(c)));
        }
        out
    }

    /// Both sides of every relation that makes sense at (𝒊, r, s), with
    /// 1 ≤ r < n and 1 ≤ s ≤ n. Each side is a product of generators
    /// evaluated by `multiply`, and the right sides are written in the
    /// normal form directly. `other` is a second word used for R1'.
    pub fn relations(&self, idem: &[usize], other: &[usize], r: usize, s: usize) -> Result<Vec<RelationInstance<S>>, QhsError> {
        let n = self.n;
        if s == 0 || s > n || (n >= 2 && (r == 0 || r >= n)) {
            return Err(QhsError::BadIndex(format!("r = {r}, s = {s} with n = {n}")));
        }
        let mul = |x: &QhsElement<S>, y: &QhsElement<S>| self.multiply(x, y);
        let e = self.idempotent(idem)?;
        let f = self.idempotent(other)?;
        let even = |t: usize| idem[t - 1] == 0;
        let sign = |neg: bool| if neg { S::one().neg() } else { S::one() };
        let mut out = Vec::new();
        let mut push = |name, lhs, rhs| out.push(RelationInstance { name, lhs, rhs });
        push("R1", mul(&e, &e)?, e.clone());
        push("R1'", mul(&e, &f)?, if other == idem { e.clone() } else { QhsElement::zero() });
        push("R2", mul(&self.one(), &e)?, e.clone());
        let ys = self.y_all(s)?;
        push("R2.5", mul(&ys, &e)?, mul(&e, &ys)?);
        if n >= 2 {
            let pr = self.psi_all(r)?;
            let sr_i = Permutation::s(r, n).act(idem);
            push("R2.75", mul(&pr, &e)?, mul(&self.idempotent(&sr_i)?, &pr)?);
            let yr = self.y_all(r)?;
            let r1 = if s != r { s } else { r % n + 1 };
            let ys1 = self.y_all(r1)?;
            push("R3", mul(&yr, &self.y(r1, idem)?)?, mul(&ys1, &self.y(r, idem)?)?.scale(&sign(even(r) && even(r1))));
            let delta = if idem[r - 1] == idem[r] { e.clone() } else { QhsElement::zero() };
            let eps = sign(even(r) && even(r + 1));
            let yr1 = self.y_all(r + 1)?;
            push("R5a", mul(&pr, &self.y(r + 1, idem)?)?.sub(&mul(&yr, &self.psi(r, idem)?)?.scale(&eps)), delta.clone());
            push("R5b", mul(&yr1, &self.psi(r, idem)?)?.sub(&mul(&pr, &self.y(r, idem)?)?.scale(&eps)), delta);
            let q = self.q_poly(idem[r - 1], idem[r]);
            push("R6", mul(&pr, &self.psi(r, idem)?)?, self.poly_at(&q, idem, r - 1, r));
            if s != r && s != r + 1 {
                let rhs = mul(&ys, &self.psi(r, idem)?)?.scale(&sign(even(r) && even(r + 1) && even(s)));
                push("R4", mul(&pr, &self.y(s, idem)?)?, rhs);
            }
            if s < n && s.abs_diff(r) > 1 {
                let ps = self.psi_all(s)?;
                let rhs = mul(&ps, &self.psi(r, idem)?)?.scale(&sign(even(r) && even(r + 1) && even(s) && even(s + 1)));
                push("R65", mul(&pr, &self.psi(s, idem)?)?, rhs);
            }
            if r + 2 <= n {
                let pr1 = self.psi_all(r + 1)?;
                let lhs = mul(&pr1, &mul(&pr, &self.psi(r + 1, idem)?)?)?.sub(&mul(&pr, &mul(&pr1, &self.psi(r, idem)?)?)?);
                let b = self.b_poly(idem[r - 1], idem[r], idem[r + 1]);
                push("R7", lhs, self.poly_at(&b, idem, r - 1, r + 1));
            }
        }
        Ok(out)
    }
}
