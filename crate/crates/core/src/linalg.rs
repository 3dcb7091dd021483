//! Dense exact linear algebra over ℚ.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    BigRational::from_integer(BigInt::from(v))
}

/// Row-major dense matrix with rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }
}

/// Result of reducing a matrix to reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: QMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `v` modulo the row space, returning the remainder.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for c in 0..self.matrix.cols {
                let m = &self.matrix[(r, c)];
                if !m.is_zero() {
                    out[c] -= &f * m;
                }
            }
        }
        out
    }

    /// Columns that are not pivots, i.e. coordinates on the quotient space.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.matrix.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.matrix.cols).filter(|&c| !is_pivot[c]).collect()
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, values: &[i64]) -> Self {
        assert_eq!(values.len(), rows * cols);
        Self { rows, cols, data: values.iter().map(|&v| q(v)).collect() }
    }

    pub fn from_rows(rows: Vec<Vec<Q>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols);
            data.extend(row);
        }
        Self { rows: n, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Q>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m[(r, c)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut s = Q::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = &self[(r, c)];
                    if !a.is_zero() && !x.is_zero() {
                        s += a * x;
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &QMatrix) -> QMatrix {
        let mut out = QMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out[(self.rows + r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        out
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m[(row, col)].recip();
            for c in col..m.cols {
                let v = &m[(row, c)] * &inv;
                m[(row, c)] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone();
                for c in col..m.cols {
                    let sub = &f * &m[(row, c)];
                    if !sub.is_zero() {
                        m[(r, c)] -= sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        m.rows = pivots.len();
        m.data.truncate(m.rows * m.cols);
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of `{x : A x = 0}` as column vectors.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let rref = self.rref();
        let free = rref.free_columns();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (r, &p) in rref.pivots.iter().enumerate() {
                    v[p] = -rref.matrix[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    /// For a matrix with independent columns, solve `self · X = rhs` exactly.
    /// Returns `None` if some column of `rhs` is outside the column space.
    pub fn solve_columns(&self, rhs: &QMatrix) -> Option<QMatrix> {
        assert_eq!(self.rows, rhs.rows);
        let n = self.cols;
        let mut aug = QMatrix::zeros(self.rows, n + rhs.cols);
        for r in 0..self.rows {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..rhs.cols {
                aug[(r, n + c)] = rhs[(r, c)].clone();
            }
        }
        let rref = aug.rref();
        if rref.pivots.iter().any(|&p| p >= n) || rref.pivots.len() < n {
            return None;
        }
        let mut out = QMatrix::zeros(n, rhs.cols);
        for (r, &p) in rref.pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                out[(p, c)] = rref.matrix[(r, n + c)].clone();
            }
        }
        Some(out)
    }

    /// Integer entries, if all entries are integral and fit in `i64`.
    pub fn to_i64(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
                    .collect()
            })
            .collect()
    }

    pub fn max_abs_numerator(&self) -> BigInt {
        self.data.iter().map(|x| x.numer().abs()).max().unwrap_or_default()
    }
}

/// Canonical basis of the span of `vectors` (rows of the RREF).
pub fn span_basis(vectors: &[Vec<Q>], dim: usize) -> QMatrix {
    QMatrix::from_rows(vectors.to_vec(), dim).rref().matrix
}

/// Solve `a x = b` over ℚ for square nonsingular `a` and return `x` if integral.
pub fn solve_integer(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<i64>> {
    let n = a.len();
    let m = QMatrix::from_rows(a.iter().map(|row| row.iter().map(|&v| q(v)).collect()).collect(), n);
    let rhs = QMatrix::from_columns(&[b.iter().map(|&v| q(v)).collect()], n);
    let x = m.solve_columns(&rhs)?;
    (0..n)
        .map(|r| {
            let v = &x[(r, 0)];
            if v.is_integer() {
                v.to_integer().to_i64()
            } else {
                None
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let m = QMatrix::from_i64(3, 4, &[1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 0]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_integer_cartan() {
        // A2: ϖ1 = (2α1 + α2)/3 is not integral, ϖ1 + ϖ2 = α1 + α2 is.
        let c = vec![vec![2, -1], vec![-1, 2]];
        assert_eq!(solve_integer(&c, &[1, 0]), None);
        assert_eq!(solve_integer(&c, &[1, 1]), Some(vec![1, 1]));
    }

    #[test]
    fn solve_columns_rejects_outside_span() {
        let a = QMatrix::from_i64(3, 1, &[1, 0, 0]);
        let b = QMatrix::from_i64(3, 1, &[0, 1, 0]);
        assert!(a.solve_columns(&b).is_none());
        let b = QMatrix::from_i64(3, 1, &[5, 0, 0]);
        assert_eq!(a.solve_columns(&b).unwrap(), QMatrix::from_i64(1, 1, &[5]));
    }

    #[test]
    fn reduce_modulo_rowspace() {
        let m = QMatrix::from_i64(1, 3, &[1, 1, 0]);
        let rref = m.rref();
        let r = rref.reduce(&[q(2), q(3), q(1)]);
        assert_eq!(r, vec![q(0), q(1), q(1)]);
        assert_eq!(rref.free_columns(), vec![1, 2]);
    }
}
