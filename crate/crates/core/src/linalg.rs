//! Exact linear algebra over the rationals: dense matrices and an incremental sparse echelon form.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::rational::Q;

/// Sparse vector, entries sorted by column with no zeros.
pub type SparseRow = Vec<(usize, Q)>;

/// `a - c·b` for sparse rows.
pub fn axpy(a: &[(usize, Q)], c: &Q, b: &[(usize, Q)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0, -&(c * &b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &a[i].1 - &(c * &b[j].1);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub fn sparse_from_dense(v: &[Q]) -> SparseRow {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// Row space built incrementally; rows are stored with leading coefficient one.
#[derive(Clone, Default, Debug)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon { pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Eliminates leading entries until the leading column is not a pivot.
    fn reduce_head(&self, mut row: SparseRow) -> SparseRow {
        while let Some((c, v)) = row.first() {
            match self.pivots.get(c) {
                Some(p) => {
                    let v = v.clone();
                    row = axpy(&row, &v, p);
                }
                None => break,
            }
        }
        row
    }

    /// Fully reduced representative of `row` modulo the row space.
    pub fn reduce(&self, row: SparseRow) -> SparseRow {
        let mut row = row;
        let mut k = 0;
        while k < row.len() {
            let c = row[k].0;
            if let Some(p) = self.pivots.get(&c) {
                let v = row[k].1.clone();
                row = axpy(&row, &v, p);
            } else {
                k += 1;
            }
        }
        row
    }

    /// Adds a row; returns whether it enlarged the span.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce_head(row);
        match row.first() {
            None => false,
            Some((c, v)) => {
                let c = *c;
                let inv = v.recip();
                let row: SparseRow = row.into_iter().map(|(i, x)| (i, &x * &inv)).collect();
                self.pivots.insert(c, row);
                true
            }
        }
    }

    pub fn contains(&self, row: &[(usize, Q)]) -> bool {
        self.reduce_head(row.to_vec()).is_empty()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseRow> {
        self.pivots.values()
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Q::ZERO; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new();
        for i in 0..self.rows {
            e.insert(sparse_from_dense(self.row(i)));
        }
        e.rank()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).filter(|&i| !m.get(i, c).is_zero()).min_by_key(|&i| m.get(i, c).height())
            else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let (m, pivots) = self.rref();
        let mut free = Vec::new();
        let mut pi = 0;
        for c in 0..self.cols {
            if pi < pivots.len() && pivots[pi] == c {
                pi += 1;
            } else {
                free.push(c);
            }
        }
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::ZERO; self.cols];
                v[f] = Q::ONE;
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    pub fn mul_vec(&self, x: &[Q]) -> Vec<Q> {
        (0..self.rows)
            .map(|i| {
                let mut acc = Q::ZERO;
                for (a, b) in self.row(i).iter().zip(x) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Determinant by fraction-carrying elimination; square matrices only.
    pub fn determinant(&self) -> Q {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Q::ONE;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Q::ZERO;
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) / &piv;
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    #[test]
    fn rank_and_kernel() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(1), q(0), q(1)]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn determinant_matches_expansion() {
        let m = Matrix::from_rows(vec![vec![q(2), q(-1), q(0)], vec![q(1), q(3), q(4)], vec![q(0), q(5), q(-2)]]);
        // 2(3·-2 - 4·5) - (-1)(1·-2 - 0) + 0
        assert_eq!(m.determinant(), q(2 * (-6 - 20) + (-2)));
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(vec![(0, q(2)), (3, q(1))]));
        assert!(e.insert(vec![(1, q(1)), (3, q(1))]));
        assert!(!e.insert(vec![(0, q(4)), (1, q(3)), (3, q(5))]));
        assert!(e.contains(&[(0, q(1)), (3, q(1) / q(2))]));
        assert_eq!(e.reduce(vec![(3, q(1))]), vec![(3, q(1))]);
    }
}
