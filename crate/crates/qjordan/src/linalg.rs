//! Dense exact linear algebra over a [`FieldSpec`].
//!
//! Vectors are rows and operators act on the right: `apply(x, A)` is the row
//! vector `x·A`, and `A.mul(B)` is "apply A, then B", so `(xA)B = x(A·B)`.
//! Every operator-composition identity in the crate is written in this
//! application order.

use crate::gf::{Fe, FieldSpec};
use crate::{Error, Result};

/// A coordinate row vector.
pub type Vector = Vec<Fe>;

/// A dense matrix over one field, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        if rows.iter().any(|v| v.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// Row-major flattening, the layout used for operator unknowns.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vector) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Product in application order: applying `self` then `rhs`.
    pub fn mul(&self, rhs: &Matrix, f: &FieldSpec) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix size mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                let rrow = rhs.row(k);
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, &r) in orow.iter_mut().zip(rrow) {
                    *o = f.add(*o, f.mul(a, r));
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix, f: &FieldSpec) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix size mismatch");
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, rhs: &Matrix, f: &FieldSpec) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix size mismatch");
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self, f: &FieldSpec) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.neg(a)).collect(),
        }
    }

    pub fn scale(&self, c: Fe, f: &FieldSpec) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(c, a)).collect(),
        }
    }

    /// Gauss–Jordan inverse; `None` is the singular verdict.
    pub fn inverse(&self, f: &FieldSpec) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.at(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a.at(col, j), a.at(pivot, j));
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                    let (x, y) = (inv.at(col, j), inv.at(pivot, j));
                    inv.set(col, j, y);
                    inv.set(pivot, j, x);
                }
            }
            let scale = f.inv(a.at(col, col)).expect("pivot is nonzero");
            for j in 0..n {
                a.set(col, j, f.mul(scale, a.at(col, j)));
                inv.set(col, j, f.mul(scale, inv.at(col, j)));
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.at(r, col);
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    a.set(r, j, f.sub(a.at(r, j), f.mul(factor, a.at(col, j))));
                    inv.set(r, j, f.sub(inv.at(r, j), f.mul(factor, inv.at(col, j))));
                }
            }
        }
        Some(inv)
    }

    /// Reduced row echelon form with deterministic pivoting (leftmost nonzero
    /// column, topmost candidate row). Returns the form and the pivot columns.
    pub fn rref(&self, f: &FieldSpec) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(pivot) = (r..a.rows).find(|&i| !a.at(i, col).is_zero()) else {
                continue;
            };
            if pivot != r {
                for j in 0..a.cols {
                    let (x, y) = (a.at(r, j), a.at(pivot, j));
                    a.set(r, j, y);
                    a.set(pivot, j, x);
                }
            }
            let scale = f.inv(a.at(r, col)).expect("pivot is nonzero");
            for j in 0..a.cols {
                a.set(r, j, f.mul(scale, a.at(r, j)));
            }
            for i in 0..a.rows {
                if i == r {
                    continue;
                }
                let factor = a.at(i, col);
                if factor.is_zero() {
                    continue;
                }
                for j in 0..a.cols {
                    a.set(i, j, f.sub(a.at(i, j), f.mul(factor, a.at(r, j))));
                }
            }
            pivots.push(col);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self, f: &FieldSpec) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of the right null space `{x : A·x = 0}` in reduced echelon form.
    pub fn kernel_basis(&self, f: &FieldSpec) -> Vec<Vector> {
        let (a, pivots) = self.rref(f);
        let mut basis = Vec::new();
        for free in 0..a.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Fe::ZERO; a.cols];
            v[free] = Fe::ONE;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(a.at(row, free));
            }
            basis.push(v);
        }
        canonical_basis(basis, f)
    }

    /// Renders as one line per row, entries space-separated.
    pub fn render(&self, f: &FieldSpec) -> String {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|&e| f.render(e))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Row vector times matrix: the operator `a` applied to `v`.
pub fn apply(v: &[Fe], a: &Matrix, f: &FieldSpec) -> Vector {
    assert_eq!(v.len(), a.rows(), "vector/matrix size mismatch");
    let mut out = vec![Fe::ZERO; a.cols()];
    for (k, &c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (o, &r) in out.iter_mut().zip(a.row(k)) {
            *o = f.add(*o, f.mul(c, r));
        }
    }
    out
}

pub fn vec_add(x: &[Fe], y: &[Fe], f: &FieldSpec) -> Vector {
    x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect()
}

pub fn vec_sub(x: &[Fe], y: &[Fe], f: &FieldSpec) -> Vector {
    x.iter().zip(y).map(|(&a, &b)| f.sub(a, b)).collect()
}

pub fn vec_neg(x: &[Fe], f: &FieldSpec) -> Vector {
    x.iter().map(|&a| f.neg(a)).collect()
}

pub fn vec_scale(c: Fe, x: &[Fe], f: &FieldSpec) -> Vector {
    x.iter().map(|&a| f.mul(c, a)).collect()
}

pub fn vec_is_zero(x: &[Fe]) -> bool {
    x.iter().all(|e| e.is_zero())
}

/// Canonical (reduced-echelon) basis of the span of the given vectors.
/// Two lists span the same subspace iff their canonical bases are equal.
pub fn canonical_basis(vectors: Vec<Vector>, f: &FieldSpec) -> Vec<Vector> {
    if vectors.is_empty() {
        return vectors;
    }
    let m = Matrix::from_rows(vectors).expect("uniform vector lengths");
    let (r, pivots) = m.rref(f);
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}
