//! Dense matrices over an exact [`Field`] and the elimination routines the
//! rest of the crate is built on.
//!
//! Every basis this module returns is canonical: column spaces come back in
//! reduced column echelon form and kernels are indexed by free columns in
//! increasing order, so downstream output is reproducible bit for bit.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Row-major entries; every entry must belong to `field`.
    pub fn from_entries(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Matrix {
            rows,
            cols,
            field,
            data,
        })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::shape("ragged rows"));
        }
        Self::from_entries(field, r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(field: Field, rows: usize, cols: usize, values: &[i64]) -> Result<Self> {
        Self::from_entries(
            field,
            rows,
            cols,
            values.iter().map(|&v| field.from_i64(v)).collect(),
        )
    }

    /// A single column.
    pub fn column_vector(field: Field, entries: Vec<Scalar>) -> Result<Self> {
        let n = entries.len();
        Self::from_entries(field, n, 1, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "field mismatch in Matrix::set");
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            field: self.field,
            data,
        }
    }

    /// Matrix product `self · rhs`. Panics on shape or field mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.field, rhs.field, "field mismatch in Matrix::mul");
        assert_eq!(
            self.cols, rhs.rows,
            "shape mismatch in Matrix::mul: {}x{} · {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.zip(rhs, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    fn zip(&self, rhs: &Matrix, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        assert_eq!(self.field, rhs.field, "field mismatch");
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shape mismatch: {}x{} vs {}x{}",
            self.rows,
            self.cols,
            rhs.rows,
            rhs.cols
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }

    /// Horizontal concatenation; all blocks need `rows` rows.
    pub fn hstack(field: Field, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.paste(0, offset, b);
            offset += b.cols;
        }
        out
    }

    /// Vertical concatenation; all blocks need `cols` columns.
    pub fn vstack(field: Field, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            out.paste(offset, 0, b);
            offset += b.rows;
        }
        out
    }

    pub fn block_diagonal(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c).clone();
            }
        }
    }

    /// The sub-block of rows `r0..r0+rows` and columns `c0..c0+cols`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(self.get(r0 + r, c0 + c).clone());
            }
        }
        Matrix {
            rows,
            cols,
            field: self.field,
            data,
        }
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.rows,
            cols: cols.len(),
            field: self.field,
            data,
        }
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // Over ℚ pick the pivot of smallest height to keep entries short.
            let candidate = (row..m.rows)
                .filter(|&r| !m.get(r, col).is_zero())
                .min_by_key(|&r| m.get(r, col).height());
            let Some(p) = candidate else { continue };
            m.swap_rows(p, row);
            let inv = m.get(row, col).inverse().expect("nonzero pivot");
            for c in col..m.cols {
                let idx = row * m.cols + c;
                m.data[idx] = &m.data[idx] * &inv;
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let sub = &factor * m.get(row, c);
                    let idx = r * m.cols + c;
                    m.data[idx] = &m.data[idx] - &sub;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Dimension of the column space.
    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Columns form a basis of `{x : self · x = 0}`, one column per free
    /// variable in increasing order.
    pub fn kernel_basis(&self) -> Matrix {
        let rref = self.rref();
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| !rref.pivots.contains(c))
            .collect();
        let mut out = Matrix::zeros(self.field, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, self.field.one());
            for (r, &p) in rref.pivots.iter().enumerate() {
                out.set(p, k, -rref.reduced.get(r, f));
            }
        }
        out
    }

    /// Some `X` with `self · X = rhs`, or `None` when the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve_right(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.field, rhs.field));
        }
        if self.rows != rhs.rows {
            return Err(Error::shape(format!(
                "solve_right: {} rows vs {} rows",
                self.rows, rhs.rows
            )));
        }
        let aug = Matrix::hstack(self.field, self.rows, &[self, rhs]);
        let rref = aug.rref();
        if rref.pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (r, &p) in rref.pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(p, c, rref.reduced.get(r, self.cols + c).clone());
            }
        }
        Ok(Some(x))
    }

    /// Canonical basis of the column space (reduced column echelon form).
    pub fn column_space(&self) -> Matrix {
        let rref = self.transpose().rref();
        let k = rref.pivots.len();
        rref.reduced.block(0, 0, k, self.rows).transpose()
    }

    /// Whether the square matrix is invertible.
    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_invertible() {
            return None;
        }
        self.solve_right(&Matrix::identity(self.field, self.rows))
            .ok()
            .flatten()
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    /// Reduces `v` modulo the row space: the result vanishes at every pivot
    /// column and is zero iff `v` lies in the row space.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let factor = out[p].clone();
            if factor.is_zero() {
                continue;
            }
            for (c, slot) in out.iter_mut().enumerate() {
                let e = self.reduced.get(r, c);
                if !e.is_zero() {
                    *slot = &*slot - &(&factor * e);
                }
            }
        }
        out
    }
}

/// A basis of the sum of the column spaces of `spans`.
pub fn subspace_sum(spans: &[Matrix]) -> Result<Matrix> {
    let first = spans
        .first()
        .ok_or_else(|| Error::shape("subspace_sum needs at least one span"))?;
    for s in spans {
        if s.field != first.field {
            return Err(Error::FieldMismatch(first.field, s.field));
        }
        if s.rows != first.rows {
            return Err(Error::shape(format!(
                "subspace_sum: ambient dimensions {} and {} differ",
                first.rows, s.rows
            )));
        }
    }
    let refs: Vec<&Matrix> = spans.iter().collect();
    Ok(Matrix::hstack(first.field, first.rows, &refs).column_space())
}

/// A complement of a subspace of `k^n` spanned by standard basis vectors.
///
/// `positions` are the coordinates not hit by pivots of the subspace, and
/// [`Complement::project`] expresses a vector modulo the subspace in those
/// coordinates.
#[derive(Debug, Clone)]
pub struct Complement {
    pub ambient: usize,
    pub positions: Vec<usize>,
    rows: Rref,
}

impl Complement {
    /// `subspace` holds a spanning set as columns.
    pub fn new(subspace: &Matrix) -> Complement {
        let rows = subspace.transpose().rref();
        let positions = (0..subspace.rows())
            .filter(|c| !rows.pivots.contains(c))
            .collect();
        Complement {
            ambient: subspace.rows(),
            positions,
            rows,
        }
    }

    pub fn dim(&self) -> usize {
        self.positions.len()
    }

    /// Coordinates of `v + subspace` in the complement basis.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let reduced = self.rows.reduce(v);
        self.positions.iter().map(|&p| reduced[p].clone()).collect()
    }

    /// Projection matrix `k^n → k^c`.
    pub fn projection(&self, field: Field) -> Matrix {
        let mut out = Matrix::zeros(field, self.dim(), self.ambient);
        let mut e = vec![field.zero(); self.ambient];
        for j in 0..self.ambient {
            e[j] = field.one();
            for (i, x) in self.project(&e).into_iter().enumerate() {
                out.set(i, j, x);
            }
            e[j] = field.zero();
        }
        out
    }

    /// Inclusion of the complement `k^c → k^n` by standard vectors.
    pub fn lift(&self, field: Field) -> Matrix {
        let mut out = Matrix::zeros(field, self.ambient, self.dim());
        for (i, &p) in self.positions.iter().enumerate() {
            out.set(p, i, field.one());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn gf2() -> Field {
        Field::Prime(2)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(gf2(), 2).rank(), 2);
        assert_eq!(Matrix::zeros(q(), 3, 3).rank(), 0);
        assert_eq!(
            Matrix::from_i64(q(), 2, 2, &[1, 2, 2, 4]).unwrap().rank(),
            1
        );
    }

    #[test]
    fn mixed_field_entries_are_rejected() {
        let err = Matrix::from_rows(q(), vec![vec![q().one(), gf2().one()]]).unwrap_err();
        assert_eq!(err, Error::FieldMismatch(q(), gf2()));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(q(), 3).kernel_basis().cols(), 0);
        let k = Matrix::zeros(q(), 3, 3).kernel_basis();
        assert_eq!(k.cols(), 3);
        assert_eq!(k.rank(), 3);
        let k = Matrix::from_i64(gf2(), 1, 2, &[1, 1])
            .unwrap()
            .kernel_basis();
        assert_eq!(k, Matrix::from_i64(gf2(), 2, 1, &[1, 1]).unwrap());
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_i64(q(), 2, 3, &[1, 2, 3, 4, 5, 6]).unwrap();
        let x = Matrix::identity(q(), 2).solve_right(&b).unwrap().unwrap();
        assert_eq!(x, b);
        let nonzero = Matrix::from_i64(q(), 2, 1, &[1, 0]).unwrap();
        assert!(Matrix::zeros(q(), 2, 2)
            .solve_right(&nonzero)
            .unwrap()
            .is_none());
        let a = Matrix::from_i64(q(), 2, 1, &[1, 1]).unwrap();
        assert!(a.solve_right(&nonzero).unwrap().is_none());
        assert!(a.solve_right(&Matrix::zeros(q(), 3, 1)).is_err());
    }

    #[test]
    fn subspace_sum_examples() {
        let e1 = Matrix::from_i64(q(), 2, 1, &[1, 0]).unwrap();
        let e2 = Matrix::from_i64(q(), 2, 1, &[0, 1]).unwrap();
        assert_eq!(
            subspace_sum(&[e1.clone(), e2]).unwrap(),
            Matrix::identity(q(), 2)
        );
        assert_eq!(subspace_sum(&[e1.clone(), e1.clone()]).unwrap(), e1);
        let u = Matrix::from_i64(q(), 2, 1, &[1, 1]).unwrap();
        let v = Matrix::from_i64(q(), 2, 1, &[1, -1]).unwrap();
        assert_eq!(subspace_sum(&[u, v]).unwrap().cols(), 2);
        // over GF(2) the same two vectors coincide
        let u = Matrix::from_i64(gf2(), 2, 1, &[1, 1]).unwrap();
        let v = Matrix::from_i64(gf2(), 2, 1, &[1, -1]).unwrap();
        assert_eq!(subspace_sum(&[u, v]).unwrap().cols(), 1);
    }

    #[test]
    fn complement_projects_modulo_subspace() {
        let sub = Matrix::from_i64(q(), 3, 1, &[1, 1, 0]).unwrap();
        let c = Complement::new(&sub);
        assert_eq!(c.positions, vec![1, 2]);
        let proj = c.projection(q());
        assert!(proj.mul(&sub).is_zero());
        assert_eq!(proj.mul(&c.lift(q())), Matrix::identity(q(), 2));
    }

    #[test]
    fn inverse_of_invertible() {
        let a = Matrix::from_i64(q(), 2, 2, &[2, 1, 1, 1]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(q(), 2));
        assert!(Matrix::from_i64(q(), 2, 2, &[1, 2, 2, 4])
            .unwrap()
            .inverse()
            .is_none());
    }
}
