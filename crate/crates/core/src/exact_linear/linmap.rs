use super::{dim_check, Field, LinearError, Scalar, Vector};

/// A linear map stored as a dense `rows × cols` matrix (codomain × domain).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl LinMap {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        LinMap { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: usize, cols: usize, entries: Vec<Vec<Scalar>>) -> Self {
        assert_eq!(entries.len(), rows);
        let mut m = Self::zero(field, rows, cols);
        for (r, row) in entries.into_iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (c, v) in row.into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn from_ints(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        LinMap { field, rows, cols, data: entries.iter().map(|&x| field.int(x)).collect() }
    }

    /// The map whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zero(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }
    /// Codomain dimension.
    pub fn rows(&self) -> usize {
        self.rows
    }
    /// Domain dimension.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector, LinearError> {
        dim_check(self.cols, v.len())?;
        Ok(self.mul_vec(v))
    }

    pub(crate) fn mul_vec(&self, v: &[Scalar]) -> Vector {
        debug_assert_eq!(self.cols, v.len());
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> Result<LinMap, LinearError> {
        dim_check(self.cols, other.rows)?;
        let mut m = LinMap::zero(self.field, self.rows, other.cols);
        for c in 0..other.cols {
            let col = self.mul_vec(&other.column(c));
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        Ok(m)
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap, LinearError> {
        dim_check(self.rows, other.rows)?;
        dim_check(self.cols, other.cols)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(LinMap { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap, LinearError> {
        dim_check(self.rows, other.rows)?;
        dim_check(self.cols, other.cols)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(LinMap { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// Row echelon form; returns (reduced matrix rows, pivot columns).
    fn echelon(&self) -> (Vec<Vector>, Vec<usize>) {
        let mut a: Vec<Vector> =
            (0..self.rows).map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec()).collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(row, p);
            let inv = a[row][col].inv().expect("nonzero pivot");
            a[row] = a[row].iter().map(|x| x * &inv).collect();
            for r in 0..a.len() {
                if r != row && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    let pr = a[row].clone();
                    for (x, y) in a[r].iter_mut().zip(&pr) {
                        *x -= &(&f * y);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == a.len() {
                break;
            }
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<LinMap> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = LinMap::zero(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, self.field.one());
        }
        let (red, piv) = aug.echelon();
        if piv.len() < n || piv.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut inv = LinMap::zero(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red[r][n + c].clone());
            }
        }
        Some(inv)
    }

    /// A basis of the kernel.
    pub fn kernel(&self) -> Vec<Vector> {
        let (red, piv) = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (r, &pc) in piv.iter().enumerate() {
                    v[pc] = -&red[r][f];
                }
                v
            })
            .collect()
    }

    /// Block matrix [[a, b], [c, d]].
    pub fn block(a: &LinMap, b: &LinMap, c: &LinMap, d: &LinMap) -> LinMap {
        assert!(a.rows == b.rows && c.rows == d.rows && a.cols == c.cols && b.cols == d.cols);
        let (r0, c0) = (a.rows, a.cols);
        let mut m = LinMap::zero(a.field, r0 + c.rows, c0 + b.cols);
        for (blk, ro, co) in [(a, 0, 0), (b, 0, c0), (c, r0, 0), (d, r0, c0)] {
            for r in 0..blk.rows {
                for col in 0..blk.cols {
                    m.set(ro + r, co + col, blk.get(r, col).clone());
                }
            }
        }
        m
    }

    /// Rows `r0..r1` of the matrix.
    pub fn row_slice(&self, r0: usize, r1: usize) -> LinMap {
        let mut m = LinMap::zero(self.field, r1 - r0, self.cols);
        for r in r0..r1 {
            for c in 0..self.cols {
                m.set(r - r0, c, self.get(r, c).clone());
            }
        }
        m
    }

    /// Columns `c0..c1` of the matrix.
    pub fn col_slice(&self, c0: usize, c1: usize) -> LinMap {
        let mut m = LinMap::zero(self.field, self.rows, c1 - c0);
        for r in 0..self.rows {
            for c in c0..c1 {
                m.set(r, c - c0, self.get(r, c).clone());
            }
        }
        m
    }

    /// Non-zero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(i, v)| (i / self.cols, i % self.cols, v))
    }

    pub fn scalars(&self) -> &[Scalar] {
        &self.data
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_zero_apply() {
        let q = Field::Rationals;
        let v: Vector = [1, 2, 3].iter().map(|&x| q.int(x)).collect();
        assert_eq!(LinMap::identity(q, 3).apply(&v).unwrap(), v);
        let z = LinMap::zero(q, 2, 2);
        assert_eq!(z.apply(&v[..2]).unwrap(), vec![q.zero(), q.zero()]);
        assert!(z.apply(&v).is_err());
    }

    #[test]
    fn gf5_hand_example() {
        let f = Field::Prime(5);
        let m = LinMap::from_ints(f, 2, 2, &[2, 1, 0, 3]);
        let out = m.apply(&[f.int(1), f.int(4)]).unwrap();
        assert_eq!(out, vec![f.int(1), f.int(2)]);
    }

    #[test]
    fn inverse_rank_kernel() {
        let f = Field::Prime(7);
        let m = LinMap::from_ints(f, 2, 2, &[1, 2, 3, 4]);
        let inv = m.inverse().unwrap();
        assert!(m.compose(&inv).unwrap().is_identity());
        let s = LinMap::from_ints(f, 2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(s.rank(), 1);
        let k = s.kernel();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(super::super::is_zero(&s.apply(&v).unwrap()));
        }
        assert!(s.inverse().is_none());
    }
}
