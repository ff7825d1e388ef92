//! Dense exact matrices with reduced row echelon form, kernels, and
//! inverses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::scalar::{canonicalize_vector, common_field, Field, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

/// Output of `Matrix::rref`.
#[derive(Debug, Clone)]
pub struct RrefResult {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    /// Builds a matrix from rows, checking all entries share one field.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::EmptyInput);
        }
        let cols = rows[0].len();
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
        }
        let field = common_field(rows.iter().flatten())?;
        let nrows = rows.len();
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        Ok(Matrix {
            rows: nrows,
            cols,
            field,
            data,
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: Field,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        assert!(rows > 0 && cols > 0);
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                assert!(v.field() == field, "entry field mismatch");
                data.push(v);
            }
        }
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    pub fn identity(n: usize, field: Field) -> Matrix {
        Matrix::from_fn(n, n, field, |i, j| {
            if i == j {
                field.one()
            } else {
                field.zero()
            }
        })
    }

    pub fn zero(rows: usize, cols: usize, field: Field) -> Matrix {
        Matrix::from_fn(rows, cols, field, |_, _| field.zero())
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

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(v.field() == self.field);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| {
            self.at(j, i).clone()
        })
    }

    /// Stacks two matrices with equal column counts.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("stack: column counts".into()));
        }
        if self.field != other.field {
            return Err(Error::MixedField(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        let mut rows = self.row_vecs();
        rows.extend(other.row_vecs());
        Matrix::from_rows(rows)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch("mul: inner dimensions".into()));
        }
        if self.field != other.field {
            return Err(Error::MixedField(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        Ok(Matrix::from_fn(
            self.rows,
            other.cols,
            self.field,
            |i, j| {
                let mut acc = self.field.zero();
                for t in 0..self.cols {
                    acc = acc.add(&self.at(i, t).mul(other.at(t, j)));
                }
                acc
            },
        ))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.at(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(v: &[Scalar], m: &Matrix) -> Vec<Scalar> {
        assert_eq!(v.len(), m.rows);
        (0..m.cols)
            .map(|j| {
                let mut acc = m.field.zero();
                for i in 0..m.rows {
                    acc = acc.add(&v[i].mul(m.at(i, j)));
                }
                acc
            })
            .collect()
    }

    /// Divides a rational row by the gcd of its entries (cleared of
    /// denominators first). Keeps intermediate entry growth under control
    /// during elimination; no-op over prime fields.
    fn normalize_row_content(row: &mut [Scalar]) {
        if row.is_empty() || row[0].field() != Field::Q {
            return;
        }
        let mut lcm = BigInt::from(1);
        for x in row.iter() {
            lcm = lcm.lcm(x.as_rational().unwrap().denom());
        }
        let mut gcd = BigInt::zero();
        for x in row.iter() {
            gcd = gcd.gcd(&(x.as_rational().unwrap().numer() * (&lcm / x.as_rational().unwrap().denom())));
        }
        if gcd.is_zero() {
            return;
        }
        for x in row.iter_mut() {
            let r = x.as_rational().unwrap();
            let scaled = r.numer() * (&lcm / r.denom()) / &gcd;
            *x = Scalar::Rat(BigRational::from_integer(scaled));
        }
    }

    /// Reduced row echelon form with rank and pivot columns. The result
    /// is the unique RREF, so equality of row spans is equality of RREFs.
    pub fn rref(&self) -> RrefResult {
        let mut rows: Vec<Vec<Scalar>> = self.row_vecs();
        let m = self.rows;
        let n = self.cols;
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for col in 0..n {
            if pr >= m {
                break;
            }
            let Some(sel) = (pr..m).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(pr, sel);
            Matrix::normalize_row_content(&mut rows[pr]);
            let inv = rows[pr][col].inv().expect("pivot nonzero");
            for j in col..n {
                rows[pr][j] = rows[pr][j].mul(&inv);
            }
            for r in 0..m {
                if r != pr && !rows[r][col].is_zero() {
                    let factor = rows[r][col].clone();
                    for j in col..n {
                        let sub = factor.mul(&rows[pr][j]);
                        rows[r][j] = rows[r][j].sub(&sub);
                    }
                }
            }
            pivots.push(col);
            pr += 1;
        }
        let rank = pivots.len();
        RrefResult {
            matrix: Matrix {
                rows: m,
                cols: n,
                field: self.field,
                data: rows.into_iter().flatten().collect(),
            },
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical basis of the right null space, one vector per free
    /// column of the RREF. Over Q each vector is cleared to a primitive
    /// integer vector with positive leading entry.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let r = self.rref();
        let n = self.cols;
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; n];
            for (row, &col) in r.pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in (0..n).filter(|c| pivot_of_col[*c].is_none()) {
            let mut vker = vec![self.field.zero(); n];
            vker[free] = self.field.one();
            for (col, pr) in pivot_of_col.iter().enumerate() {
                if let Some(row) = pr {
                    vker[col] = r.matrix.at(*row, free).neg();
                }
            }
            canonicalize_vector(&mut vker);
            basis.push(vker);
        }
        basis
    }

    /// Inverse of a square matrix, or an error if singular.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse: not square".into()));
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, self.field, |i, j| {
            if j < n {
                self.at(i, j).clone()
            } else if j - n == i {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let r = aug.rref();
        if r.pivots.len() < n || r.pivots[n - 1] != n - 1 {
            return Err(Error::Degenerate("singular matrix".into()));
        }
        Ok(Matrix::from_fn(n, n, self.field, |i, j| {
            r.matrix.at(i, n + j).clone()
        }))
    }

    /// Determinant by elimination (exact).
    pub fn det(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("det: not square".into()));
        }
        let n = self.rows;
        let mut rows = self.row_vecs();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(sel) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
                return Ok(self.field.zero());
            };
            if sel != col {
                rows.swap(col, sel);
                det = det.neg();
            }
            det = det.mul(&rows[col][col]);
            let inv = rows[col][col].inv().unwrap();
            for r in col + 1..n {
                if !rows[r][col].is_zero() {
                    let factor = rows[r][col].mul(&inv);
                    for j in col..n {
                        let sub = factor.mul(&rows[col][j]);
                        rows[r][j] = rows[r][j].sub(&sub);
                    }
                }
            }
        }
        Ok(det)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_ratio(x, 1)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let m = Matrix::identity(3, Field::Q);
        let r = m.rref();
        assert_eq!(r.matrix, m);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_dependent_rows() {
        let m = qm(&[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix, qm(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_mod_3() {
        // [[1,1],[1,2]] over F_3 reduces to the identity: R2-R1 = [0,1],
        // then R1-R2 = [1,0].
        let f = Field::fp(3).unwrap();
        let m = Matrix::from_rows(vec![
            vec![f.from_i64(1), f.from_i64(1)],
            vec![f.from_i64(1), f.from_i64(2)],
        ])
        .unwrap();
        let r = m.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.matrix, Matrix::identity(2, f));
    }

    #[test]
    fn mixed_field_rejected() {
        let bad = Matrix::from_rows(vec![vec![
            Scalar::from_ratio(1, 1),
            Field::fp(5).unwrap().from_i64(1),
        ]]);
        assert!(matches!(bad, Err(Error::MixedField(_, _))));
    }

    #[test]
    fn kernel_identity_empty() {
        assert!(Matrix::identity(2, Field::Q).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_single_row() {
        let m = qm(&[&[1, 2, 3]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            let prod: Scalar = m.mul_vec(v).pop().unwrap();
            assert!(prod.is_zero());
        }
        // Canonical: primitive integer vectors, positive leading entry.
        assert_eq!(
            k[0],
            vec![
                Scalar::from_ratio(2, 1),
                Scalar::from_ratio(-1, 1),
                Scalar::from_ratio(0, 1)
            ]
        );
    }

    #[test]
    fn kernel_up_to_scale() {
        let m = qm(&[&[1, 1], &[2, 2]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![Scalar::from_ratio(1, 1), Scalar::from_ratio(-1, 1)]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = qm(&[&[2, 1, 0], &[1, -1, 3], &[0, 5, 7]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3, Field::Q));
    }

    #[test]
    fn det_matches_elimination() {
        let m = qm(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.det().unwrap(), Scalar::from_ratio(1, 1));
        let sing = qm(&[&[1, 2], &[2, 4]]);
        assert!(sing.det().unwrap().is_zero());
    }
}
