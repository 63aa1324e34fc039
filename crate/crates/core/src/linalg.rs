//! Dense exact linear algebra.
//!
//! Vectors are column vectors; a linear map `V -> W` is a `dim W x dim V`
//! matrix. Tensor products use left-factor-major indexing, see [`tensor_index`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{mismatch, Error, Result};
use crate::field::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_text()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_data(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(mismatch("matrix entries", rows * cols, data.len()));
        }
        if let Some(bad) = data.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds from a list of rows. All rows must share one length.
    pub fn from_rows(field: Field, rows: &[Vec<Scalar>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(mismatch("matrix row", cols, r.len()));
            }
            data.extend(r.iter().cloned());
        }
        Matrix::from_data(field, rows.len(), cols, data)
    }

    /// Builds from a list of columns, each of length `rows`.
    pub fn from_cols(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Result<Matrix> {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(mismatch("matrix column", rows, c.len()));
            }
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, &rows).expect("ragged rows")
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * other.cols + j].add_mul(a, b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = vec![self.field.zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (k, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                o.add_mul(self.get(i, k), x);
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        self.with_data(data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix difference shape");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        self.with_data(data)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        self.with_data(data)
    }

    pub fn add_assign(&mut self, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape");
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            a.add_mul(s, b);
        }
    }

    fn with_data(&self, data: Vec<Scalar>) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Kronecker product `self ⊗ other`, matching [`tensor_index`] on both sides.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Matrix::zeros(self.field, self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * r2 + k, j * c2 + l, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack shape");
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack shape");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Columns `cols` of `self`, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend(self.row(r).iter().cloned());
        }
        Matrix {
            field: self.field,
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Reduces to reduced row echelon form in place and returns the pivot
    /// columns. Pivot search scans columns left to right and takes the first
    /// row holding a nonzero entry, so the result is canonical.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv();
            if !inv.is_one() {
                for j in c..self.cols {
                    let v = self.get(r, j) * &inv;
                    self.set(r, j, v);
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (c..self.cols)
                .filter_map(|j| {
                    let v = self.get(r, j);
                    (!v.is_zero()).then(|| (j, v.clone()))
                })
                .collect();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                let nf = -&f;
                for (j, v) in &pivot_row {
                    self.get_mut(i, *j).add_mul(&nf, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(self.field, n));
        let piv = aug.rref_in_place();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(aug.select_cols(&cols))
    }

    /// A left inverse of a matrix with independent columns: `X` with `X · self = I`.
    /// `None` if the columns are dependent.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let d = self.cols;
        let mut t = self.transpose();
        let pivots = t.rref_in_place();
        if pivots.len() < d {
            return None;
        }
        // rows of `self` at the pivot positions form an invertible d x d block
        let block = self.select_rows(&pivots);
        let inv = block.inverse()?;
        let mut out = Matrix::zeros(self.field, d, self.rows);
        for (k, &p) in pivots.iter().enumerate() {
            for i in 0..d {
                out.set(i, p, inv.get(i, k).clone());
            }
        }
        Some(out)
    }

    /// Row-major flattening.
    pub fn to_vec(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    /// Power of a square matrix.
    pub fn pow(&self, e: usize) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// A subspace of `k^n` stored by its reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    /// `dim x ambient_dim`, in reduced row echelon form, no zero rows.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            field,
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Subspace {
        Subspace::from_matrix_rows(Matrix::identity(field, ambient_dim))
    }

    /// Span of the rows of `generators`.
    pub fn from_matrix_rows(mut generators: Matrix) -> Subspace {
        let pivots = generators.rref_in_place();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        Subspace {
            field: generators.field(),
            ambient_dim: generators.cols(),
            basis: generators.select_rows(&keep),
            pivots,
        }
    }

    pub fn span(field: Field, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Subspace> {
        if vectors.is_empty() {
            return Ok(Subspace::zero(field, ambient_dim));
        }
        let m = Matrix::from_rows(field, vectors)?;
        if m.cols() != ambient_dim {
            return Err(mismatch("spanning vector", ambient_dim, m.cols()));
        }
        Ok(Subspace::from_matrix_rows(m))
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    /// Basis vectors as the rows of a matrix.
    pub fn basis_rows(&self) -> &Matrix {
        &self.basis
    }
    /// Basis vectors as columns: the inclusion map `k^dim -> k^ambient`.
    pub fn embedding(&self) -> Matrix {
        self.basis.transpose()
    }
    pub fn vector(&self, i: usize) -> Vec<Scalar> {
        self.basis.row(i).to_vec()
    }

    /// Subtracts the projection onto the echelon basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let f = out[p].clone();
            if f.is_zero() {
                continue;
            }
            let nf = -&f;
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    out[j].add_mul(&nf, b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|s| s.is_zero())
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Matrix sending ambient vectors of the subspace to their coordinates.
    /// Only meaningful on vectors inside the subspace.
    pub fn coordinate_map(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim(), self.ambient_dim);
        for (i, &p) in self.pivots.iter().enumerate() {
            m.set(i, p, self.field.one());
        }
        m
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_matrix_rows(self.basis.vstack(&other.basis))
    }

    /// Intersection via the kernel of `[B1; -B2]^T`.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.field, self.ambient_dim);
        }
        let stacked = self.basis.vstack(&other.basis.scale(&-self.field.one()));
        let k = kernel(&stacked.transpose());
        let d1 = self.dim();
        let mut vecs = Vec::new();
        for i in 0..k.dim() {
            let c = k.vector(i);
            let mut v = vec![self.field.zero(); self.ambient_dim];
            for (a, coef) in c[..d1].iter().enumerate() {
                for (j, b) in self.basis.row(a).iter().enumerate() {
                    v[j].add_mul(coef, b);
                }
            }
            vecs.push(v);
        }
        Subspace::span(self.field, self.ambient_dim, &vecs).unwrap()
    }
}

/// Null space of `m` as a subspace of `k^{cols}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let mut r = m.clone();
    let pivots = r.rref_in_place();
    let n = m.cols();
    let field = m.field();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut vecs = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![field.zero(); n];
        v[f] = field.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(i, f);
        }
        vecs.push(v);
    }
    if vecs.is_empty() {
        return Subspace::zero(field, n);
    }
    Subspace::from_matrix_rows(Matrix::from_rows(field, &vecs).unwrap())
}

/// A particular solution of `m x = rhs`, or `None` if the system is inconsistent.
pub fn solve(m: &Matrix, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if rhs.len() != m.rows() {
        return Err(mismatch("right-hand side", m.rows(), rhs.len()));
    }
    let field = m.field();
    let b = Matrix::from_cols(field, m.rows(), &[rhs.to_vec()])?;
    let mut aug = m.hstack(&b);
    let pivots = aug.rref_in_place();
    let n = m.cols();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = aug.get(i, n).clone();
    }
    Ok(Some(x))
}

/// Projector onto `k^n / relations` and a linear section of it.
///
/// Quotient coordinates are the non-pivot coordinates of the reduced vector;
/// the lift sends the `i`-th quotient basis vector to the unit vector at the
/// `i`-th non-pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSection {
    pub projector: Matrix,
    pub lift: Matrix,
}

pub fn quotient_section(ambient_dim: usize, relations: &Subspace) -> Result<QuotientSection> {
    if relations.ambient_dim() != ambient_dim {
        return Err(mismatch("relation space ambient", ambient_dim, relations.ambient_dim()));
    }
    let field = relations.field();
    let free: Vec<usize> = (0..ambient_dim)
        .filter(|c| !relations.pivots().contains(c))
        .collect();
    let q = free.len();
    let mut projector = Matrix::zeros(field, q, ambient_dim);
    let mut lift = Matrix::zeros(field, ambient_dim, q);
    for (i, &f) in free.iter().enumerate() {
        lift.set(f, i, field.one());
    }
    for j in 0..ambient_dim {
        let mut e = vec![field.zero(); ambient_dim];
        e[j] = field.one();
        let red = relations.reduce(&e);
        for (i, &f) in free.iter().enumerate() {
            projector.set(i, j, red[f].clone());
        }
    }
    Ok(QuotientSection { projector, lift })
}

/// Index of `e_i ⊗ f_j` in `V ⊗ W`: left factor major, 0-based.
pub fn tensor_index(i: usize, j: usize, dim_v: usize, dim_w: usize) -> Result<usize> {
    if i >= dim_v {
        return Err(Error::IndexOutOfRange { index: i, bound: dim_v });
    }
    if j >= dim_w {
        return Err(Error::IndexOutOfRange { index: j, bound: dim_w });
    }
    Ok(i * dim_w + j)
}

/// All `p x q` matrices `X` with `X A_t = B_t X` for every constraint, as a
/// subspace of row-major flattened matrices.
pub fn intertwiner_space(
    field: Field,
    p: usize,
    q: usize,
    constraints: &[(Matrix, Matrix)],
) -> Result<Subspace> {
    let n = p * q;
    let mut acc = Subspace::full(field, n);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (a, b) in constraints {
        if a.rows() != q || a.cols() != q {
            return Err(mismatch("intertwiner constraint A", q, a.rows().max(a.cols())));
        }
        if b.rows() != p || b.cols() != p {
            return Err(mismatch("intertwiner constraint B", p, b.rows().max(b.cols())));
        }
        // (X A)_{ij} - (B X)_{ij} = sum_k X_{ik} A_{kj} - sum_k B_{ik} X_{kj}
        for i in 0..p {
            for j in 0..q {
                let mut row = vec![field.zero(); n];
                for k in 0..q {
                    row[i * q + k] += a.get(k, j);
                }
                for k in 0..p {
                    row[k * q + j] -= b.get(i, k);
                }
                if row.iter().any(|s| !s.is_zero()) {
                    rows.push(row);
                }
            }
        }
        if rows.len() > 4 * n {
            acc = acc.intersection(&kernel(&Matrix::from_rows(field, &rows)?));
            rows.clear();
        }
    }
    if !rows.is_empty() {
        acc = acc.intersection(&kernel(&Matrix::from_rows(field, &rows)?));
    }
    Ok(acc)
}

/// Serializable view of a matrix: dimensions plus entries as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixText {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<String>,
}

impl From<&Matrix> for MatrixText {
    fn from(m: &Matrix) -> Self {
        MatrixText {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.data().iter().map(|s| s.to_text()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn kernel_rank_one() {
        let m = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 1);
        // canonical echelon form of span{(-2,1)} is (1, -1/2)
        assert!(k.contains(&[q().from_i64(-2), q().from_i64(1)]));
        assert_eq!(k.vector(0), vec![q().one(), q().ratio(-1, 2)]);
    }

    #[test]
    fn kernel_identity_is_zero() {
        assert_eq!(kernel(&Matrix::identity(q(), 3)).dim(), 0);
    }

    #[test]
    fn kernel_gf2_brute_force() {
        let f = Field::prime(2).unwrap();
        let m = Matrix::from_i64(f, &[&[1, 1], &[1, 1]]);
        let k = kernel(&m);
        let els = f.elements().unwrap();
        let mut sols = 0;
        for a in &els {
            for b in &els {
                let v = vec![a.clone(), b.clone()];
                let zero = m.mul_vec(&v).iter().all(|s| s.is_zero());
                assert_eq!(zero, k.contains(&v));
                sols += zero as usize;
            }
        }
        assert_eq!(sols, 2);
        assert_eq!(k.vector(0), vec![f.one(), f.one()]);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(q(), 2);
        let v = vec![q().from_i64(3), q().from_i64(-7)];
        assert_eq!(solve(&id, &v).unwrap(), Some(v.clone()));
        let z = Matrix::zeros(q(), 2, 2);
        assert_eq!(solve(&z, &v).unwrap(), None);
        let d = Matrix::from_i64(q(), &[&[2, 0], &[0, 3]]);
        let x = solve(&d, &[q().one(), q().one()]).unwrap().unwrap();
        assert_eq!(x, vec![q().ratio(1, 2), q().ratio(1, 3)]);
        assert!(solve(&d, &[q().one()]).is_err());
    }

    #[test]
    fn quotient_trivial_and_rank_one() {
        let qs = quotient_section(3, &Subspace::zero(q(), 3)).unwrap();
        assert!(qs.projector.is_identity() && qs.lift.is_identity());

        let rel = Subspace::span(q(), 2, &[vec![q().one(), q().from_i64(-1)]]).unwrap();
        let qs = quotient_section(2, &rel).unwrap();
        assert_eq!(qs.projector.rows(), 1);
        assert!(qs.projector.mul(&qs.lift).is_identity());
        assert!(qs.projector.mul_vec(&rel.vector(0))[0].is_zero());
    }

    #[test]
    fn quotient_gf5_kernel_is_relations() {
        let f = Field::prime(5).unwrap();
        let rel = Subspace::span(f, 3, &[vec![f.from_i64(2), f.from_i64(4), f.from_i64(1)]]).unwrap();
        let qs = quotient_section(3, &rel).unwrap();
        assert_eq!(qs.projector.rows(), 2);
        assert_eq!(kernel(&qs.projector), rel);
        assert!(qs.projector.mul(&qs.lift).is_identity());
    }

    #[test]
    fn tensor_index_convention() {
        assert_eq!(tensor_index(0, 0, 1, 7).unwrap(), 0);
        assert_eq!(tensor_index(1, 2, 2, 3).unwrap(), 5);
        assert_eq!(tensor_index(2, 0, 3, 4).unwrap(), 8);
        assert!(tensor_index(1, 3, 2, 3).is_err());
        assert!(tensor_index(2, 0, 2, 3).is_err());
    }

    #[test]
    fn intertwiners_basic() {
        let full = intertwiner_space(q(), 2, 2, &[]).unwrap();
        assert_eq!(full.dim(), 4);
        let id = Matrix::identity(q(), 2);
        assert_eq!(intertwiner_space(q(), 2, 2, &[(id.clone(), id)]).unwrap().dim(), 4);
        // regular representation of C2: the generator swaps the basis
        let g = Matrix::from_i64(q(), &[&[0, 1], &[1, 0]]);
        let s = intertwiner_space(q(), 2, 2, &[(g.clone(), g.clone())]).unwrap();
        assert_eq!(s.dim(), 2);
        // brute-force oracle: X g = g X for X = [[a,b],[c,d]] forces a=d, b=c
        for i in 0..s.dim() {
            let v = s.vector(i);
            assert_eq!(v[0], v[3]);
            assert_eq!(v[1], v[2]);
        }
        let bad = Matrix::identity(q(), 3);
        assert!(intertwiner_space(q(), 2, 2, &[(bad, g)]).is_err());
    }

    #[test]
    fn inverse_and_kron() {
        let a = Matrix::from_i64(q(), &[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).inverse().is_none());
        let b = Matrix::from_i64(q(), &[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        // (a⊗b)(i*2+k, j*2+l) = a(i,j) b(k,l)
        assert_eq!(k.get(tensor_index(1, 0, 2, 2).unwrap(), tensor_index(0, 1, 2, 2).unwrap()), &q().from_i64(3));
    }

    #[test]
    fn left_inverse_of_embedding() {
        let g = Matrix::from_i64(q(), &[&[1, 0], &[2, 0], &[0, 3], &[1, 1]]);
        assert!(g.left_inverse().unwrap().mul(&g).is_identity());
        let dep = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        assert!(dep.left_inverse().is_none());
    }

    #[test]
    fn intersection_of_planes() {
        let f = q();
        let a = Subspace::span(f, 3, &[vec![f.one(), f.zero(), f.zero()], vec![f.zero(), f.one(), f.zero()]]).unwrap();
        let b = Subspace::span(f, 3, &[vec![f.zero(), f.one(), f.zero()], vec![f.zero(), f.zero(), f.one()]]).unwrap();
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[f.zero(), f.one(), f.zero()]));
    }
}
