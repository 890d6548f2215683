//! Dense exact matrices and Gaussian elimination over ℚ / ℚ(i).
//!
//! Everything here is deterministic: identical inputs produce structurally
//! identical outputs. Row operations skip zero entries, which keeps
//! elimination fast on the very sparse matrices produced by regular
//! representations.

use crate::error::{Error, Result};
use crate::exactlin::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(i, j).clone() + a * b;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let mut out = vec![Scalar::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = Scalar::zero();
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                acc += a * &v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() + rhs.at(i, j).clone()
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Reduced row echelon form in place; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            // Choose the nonzero pivot with the smallest bit size to slow
            // down coefficient growth.
            let mut best: Option<(usize, u64)> = None;
            for r in pivot_row..self.rows {
                let v = self.at(r, col);
                if !v.is_zero() {
                    let c = v.complexity();
                    if best.map_or(true, |(_, bc)| c < bc) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((r, _)) = best else { continue };
            self.swap_rows(pivot_row, r);
            let inv = self.at(pivot_row, col).inverse();
            self.scale_row(pivot_row, &inv, col);
            for r in 0..self.rows {
                if r != pivot_row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    self.row_sub(r, pivot_row, &factor, col);
                }
            }
            pivots.push(col);
            pivot_row += 1;
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

    fn scale_row(&mut self, r: usize, c: &Scalar, from_col: usize) {
        for j in from_col..self.cols {
            if !self.at(r, j).is_zero() {
                let v = self.at(r, j) * c;
                self.set(r, j, v);
            }
        }
    }

    /// row r -= factor * row p, starting at column `from_col`.
    fn row_sub(&mut self, r: usize, p: usize, factor: &Scalar, from_col: usize) {
        for j in from_col..self.cols {
            let pv = self.at(p, j);
            if pv.is_zero() {
                continue;
            }
            let v = self.at(r, j).clone() - factor * pv;
            self.set(r, j, v);
        }
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Exact rank via Gaussian elimination.
pub fn rank(m: &Matrix) -> usize {
    let mut work = m.clone();
    work.rref().len()
}

/// Basis of the right null space. Empty iff the rank equals the column
/// count. Every returned vector satisfies m·v = 0 exactly (debug-checked).
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let mut work = m.clone();
    let pivots = work.rref();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..m.cols() {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Scalar::zero(); m.cols()];
        v[free] = Scalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            let c = work.at(row, free);
            if !c.is_zero() {
                v[p] = -c.clone();
            }
        }
        debug_assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
        basis.push(v);
    }
    basis
}

/// Some exact solution of m·x = b, or `Error::NoSolution`.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Vec<Scalar>> {
    assert_eq!(m.rows(), b.len(), "dimension mismatch");
    let mut aug = Matrix::from_fn(m.rows(), m.cols() + 1, |i, j| {
        if j < m.cols() {
            m.at(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = aug.rref();
    if pivots.last() == Some(&m.cols()) {
        return Err(Error::NoSolution);
    }
    let mut x = vec![Scalar::zero(); m.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = aug.at(row, m.cols()).clone();
    }
    Ok(x)
}

/// Incremental row-space accumulator. Feeding vectors one at a time keeps
/// elimination cheap when the final rank is far below the ambient
/// dimension (module bases, radical bases, centralizers).
#[derive(Clone)]
pub struct SpanBuilder {
    dim: usize,
    /// Rows in echelon form, each paired with its pivot column.
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl SpanBuilder {
    pub fn new(dim: usize) -> Self {
        SpanBuilder { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current span; returns the residual if it is
    /// independent (after inserting it), `None` if `v` was dependent.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.dim);
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for (j, rv) in row.iter().enumerate() {
                    if !rv.is_zero() {
                        v[j] = v[j].clone() - &factor * rv;
                    }
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inverse();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        // Back-substitute into earlier rows to keep reduced form.
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for (j, nv) in v.iter().enumerate() {
                    if !nv.is_zero() {
                        row[j] = row[j].clone() - &factor * nv;
                    }
                }
            }
        }
        let at = self
            .rows
            .binary_search_by(|(p, _)| p.cmp(&pivot))
            .unwrap_err();
        self.rows.insert(at, (pivot, v));
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Scalar::is_zero)
    }

    /// Residual of `v` after reduction against the span.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for (j, rv) in row.iter().enumerate() {
                    if !rv.is_zero() {
                        v[j] = v[j].clone() - &factor * rv;
                    }
                }
            }
        }
        v
    }

    /// Coordinates of `v` in the stored echelon basis, if it lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let mut v = v.to_vec();
        let mut coords = vec![Scalar::zero(); self.rows.len()];
        for (idx, (pivot, row)) in self.rows.iter().enumerate() {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                coords[idx] = factor.clone();
                for (j, rv) in row.iter().enumerate() {
                    if !rv.is_zero() {
                        v[j] = v[j].clone() - &factor * rv;
                    }
                }
            }
        }
        if v.iter().all(Scalar::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(rank(&Matrix::identity(3)), 3);
        assert_eq!(rank(&Matrix::zero(2, 5)), 0);
    }

    #[test]
    fn rank_dependent_rows() {
        let m = Matrix::from_rows(vec![vec![s(1), s(2)], vec![s(2), s(4)]]);
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(4)).is_empty());
        assert_eq!(kernel_basis(&Matrix::zero(2, 2)).len(), 2);
        let m = Matrix::from_rows(vec![vec![s(1), s(1)]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        // span{(1,-1)} up to scaling
        assert_eq!(k[0][0].clone() + k[0][1].clone(), s(0));
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(2);
        let b = vec![s(3), s(-1)];
        assert_eq!(solve(&id, &b).unwrap(), b);

        let m = Matrix::from_rows(vec![vec![s(2)]]);
        assert_eq!(solve(&m, &[s(1)]).unwrap(), vec![Scalar::from_ratio(1, 2)]);

        let sing = Matrix::from_rows(vec![vec![s(1), s(1)], vec![s(1), s(1)]]);
        assert!(matches!(solve(&sing, &[s(1), s(2)]), Err(Error::NoSolution)));
    }

    #[test]
    fn rank_nullity() {
        let m = Matrix::from_rows(vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(0), s(1), s(1)],
        ]);
        assert_eq!(rank(&m) + kernel_basis(&m).len(), m.cols());
    }

    #[test]
    fn span_builder_matches_rref() {
        let mut sb = SpanBuilder::new(3);
        assert!(sb.insert(vec![s(1), s(2), s(3)]));
        assert!(sb.insert(vec![s(0), s(1), s(1)]));
        assert!(!sb.insert(vec![s(1), s(3), s(4)]));
        assert_eq!(sb.rank(), 2);
        assert!(sb.contains(&[s(2), s(5), s(7)]));
        assert!(!sb.contains(&[s(0), s(0), s(1)]));
        let coords = sb.coordinates(&[s(2), s(5), s(7)]).unwrap();
        assert_eq!(coords.len(), 2);
    }

    #[test]
    fn gaussian_elimination_over_qi() {
        let i = Scalar::i();
        let m = Matrix::from_rows(vec![
            vec![s(1), i.clone()],
            vec![-i.clone(), s(1)],
        ]);
        // second row = -i * first row
        assert_eq!(rank(&m), 1);
        assert_eq!(kernel_basis(&m).len(), 1);
    }
}
