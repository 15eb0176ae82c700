use std::collections::BTreeMap;

use super::{dim_check, Field, LinMap, LinearError, Scalar, Vector};

/// Structure constants of a bilinear map A × B → C: `eval(e_i, e_j)_k = c[k][i][j]`.
/// Only non-zero coefficients are stored, keyed by `(k, i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilMap {
    field: Field,
    dim_a: usize,
    dim_b: usize,
    dim_c: usize,
    coeffs: BTreeMap<(usize, usize, usize), Scalar>,
}

impl BilMap {
    pub fn zero(field: Field, dim_a: usize, dim_b: usize, dim_c: usize) -> Self {
        BilMap { field, dim_a, dim_b, dim_c, coeffs: BTreeMap::new() }
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn dim_a(&self) -> usize {
        self.dim_a
    }
    pub fn dim_b(&self) -> usize {
        self.dim_b
    }
    pub fn dim_c(&self) -> usize {
        self.dim_c
    }
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.dim_a, self.dim_b, self.dim_c)
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> Scalar {
        self.coeffs.get(&(k, i, j)).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, v: Scalar) {
        assert!(k < self.dim_c && i < self.dim_a && j < self.dim_b, "index out of range");
        if v.is_zero() {
            self.coeffs.remove(&(k, i, j));
        } else {
            self.coeffs.insert((k, i, j), v);
        }
    }

    pub fn add_at(&mut self, k: usize, i: usize, j: usize, v: &Scalar) {
        let cur = self.get(k, i, j);
        self.set(k, i, j, &cur + v);
    }

    /// Non-zero coefficients in canonical `(k, i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.coeffs.iter()
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, a: &[Scalar], b: &[Scalar]) -> Result<Vector, LinearError> {
        dim_check(self.dim_a, a.len())?;
        dim_check(self.dim_b, b.len())?;
        Ok(self.eval_vec(a, b))
    }

    pub(crate) fn eval_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        debug_assert_eq!(a.len(), self.dim_a);
        debug_assert_eq!(b.len(), self.dim_b);
        let mut out = vec![self.field.zero(); self.dim_c];
        if a.iter().all(Scalar::is_zero) || b.iter().all(Scalar::is_zero) {
            return out;
        }
        for (&(k, i, j), c) in &self.coeffs {
            if a[i].is_zero() || b[j].is_zero() {
                continue;
            }
            out[k] += &(&(c * &a[i]) * &b[j]);
        }
        out
    }

    /// Value on the basis pair (e_i, e_j).
    pub fn eval_basis(&self, i: usize, j: usize) -> Vector {
        let mut out = vec![self.field.zero(); self.dim_c];
        for (&(k, ii, jj), c) in self.coeffs.range((0, 0, 0)..) {
            if ii == i && jj == j {
                out[k] = c.clone();
            }
        }
        out
    }

    /// `(a, b) ↦ out(B(left a, right b))`.
    pub fn pullback(&self, out: &LinMap, left: &LinMap, right: &LinMap) -> Result<BilMap, LinearError> {
        dim_check(self.dim_a, left.rows())?;
        dim_check(self.dim_b, right.rows())?;
        dim_check(self.dim_c, out.cols())?;
        let mut r = BilMap::zero(self.field, left.cols(), right.cols(), out.rows());
        let lcols: Vec<Vector> = (0..left.cols()).map(|i| left.column(i)).collect();
        let rcols: Vec<Vector> = (0..right.cols()).map(|j| right.column(j)).collect();
        for (i, a) in lcols.iter().enumerate() {
            for (j, b) in rcols.iter().enumerate() {
                let v = out.mul_vec(&self.eval_vec(a, b));
                for (k, x) in v.into_iter().enumerate() {
                    r.set(k, i, j, x);
                }
            }
        }
        Ok(r)
    }

    /// Adds `self` into `target` at the given block offsets.
    pub fn add_block_into(&self, target: &mut BilMap, off_a: usize, off_b: usize, off_c: usize) {
        for (&(k, i, j), v) in &self.coeffs {
            target.add_at(off_c + k, off_a + i, off_b + j, v);
        }
    }

    /// The block of `self` with arguments and output restricted to the given index ranges.
    pub fn sub_block(
        &self,
        a: std::ops::Range<usize>,
        b: std::ops::Range<usize>,
        c: std::ops::Range<usize>,
    ) -> BilMap {
        let mut r = BilMap::zero(self.field, a.len(), b.len(), c.len());
        for (&(k, i, j), v) in &self.coeffs {
            if a.contains(&i) && b.contains(&j) && c.contains(&k) {
                r.set(k - c.start, i - a.start, j - b.start, v.clone());
            }
        }
        r
    }

    /// `(a, b) ↦ B(b, a)` as a map B × A → C.
    pub fn swapped(&self) -> BilMap {
        let mut r = BilMap::zero(self.field, self.dim_b, self.dim_a, self.dim_c);
        for (&(k, i, j), v) in &self.coeffs {
            r.set(k, j, i, v.clone());
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::basis;

    fn e1e1_e2(f: Field) -> BilMap {
        let mut b = BilMap::zero(f, 2, 2, 2);
        b.set(1, 0, 0, f.one());
        b
    }

    #[test]
    fn reads_off_structure_constants() {
        let q = Field::Rationals;
        let b = e1e1_e2(q);
        assert_eq!(b.eval(&basis(q, 2, 0), &basis(q, 2, 0)).unwrap(), basis(q, 2, 1));
        let s = vec![q.one(), q.one()];
        assert_eq!(b.eval(&s, &basis(q, 2, 0)).unwrap(), basis(q, 2, 1));
        assert_eq!(b.eval(&[q.zero(), q.zero()], &s).unwrap(), vec![q.zero(); 2]);
        assert!(b.eval(&s, &[q.one()]).is_err());
    }

    #[test]
    fn setting_zero_removes() {
        let f = Field::Prime(5);
        let mut b = e1e1_e2(f);
        b.set(1, 0, 0, f.int(5));
        assert!(b.is_zero());
    }

    #[test]
    fn pullback_along_identity_is_identity() {
        let f = Field::Prime(5);
        let b = e1e1_e2(f);
        let id = LinMap::identity(f, 2);
        assert_eq!(b.pullback(&id, &id, &id).unwrap(), b);
    }
}
