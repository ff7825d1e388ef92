//! Linear subspaces of P^n as canonical row spans.

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};

use super::point::ProjPoint;

/// A linear subspace of P^n, stored as a full-row-rank spanning matrix in
/// reduced row echelon form. Projective dimension is `rows - 1`; the empty
/// subspace has zero rows and dimension -1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinSubspace {
    ambient: usize,
    field: Field,
    /// RREF rows; empty for the empty subspace.
    basis: Vec<Vec<Scalar>>,
}

/// Inputs accepted by `span`.
#[derive(Debug, Clone)]
pub enum SpanItem {
    Point(ProjPoint),
    Subspace(LinSubspace),
}

impl From<ProjPoint> for SpanItem {
    fn from(p: ProjPoint) -> Self {
        SpanItem::Point(p)
    }
}

impl From<LinSubspace> for SpanItem {
    fn from(s: LinSubspace) -> Self {
        SpanItem::Subspace(s)
    }
}

impl LinSubspace {
    /// The empty subspace of P^n.
    pub fn empty(field: Field, ambient: usize) -> LinSubspace {
        LinSubspace {
            ambient,
            field,
            basis: Vec::new(),
        }
    }

    /// The whole of P^n.
    pub fn full(field: Field, ambient: usize) -> LinSubspace {
        LinSubspace::from_rows(
            field,
            ambient,
            Matrix::identity(ambient + 1, field).row_vecs(),
        )
        .unwrap()
    }

    /// Builds the row span of the given vectors (dependent rows allowed).
    pub fn from_rows(field: Field, ambient: usize, rows: Vec<Vec<Scalar>>) -> Result<LinSubspace> {
        if rows.is_empty() {
            return Ok(LinSubspace::empty(field, ambient));
        }
        for r in &rows {
            if r.len() != ambient + 1 {
                return Err(Error::AmbientMismatch(r.len() - 1, ambient));
            }
        }
        let m = Matrix::from_rows(rows)?;
        if m.field() != field {
            return Err(Error::MixedField(field.to_string(), m.field().to_string()));
        }
        let r = m.rref();
        let basis = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        Ok(LinSubspace {
            ambient,
            field,
            basis,
        })
    }

    pub fn from_point(p: &ProjPoint) -> LinSubspace {
        LinSubspace::from_rows(p.field(), p.ambient(), vec![p.coords().to_vec()]).unwrap()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Projective dimension; -1 for the empty subspace.
    pub fn dim(&self) -> i64 {
        self.basis.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis_rows(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Option<Matrix> {
        if self.basis.is_empty() {
            None
        } else {
            Some(Matrix::from_rows(self.basis.clone()).unwrap())
        }
    }

    /// Canonical basis points (rows of the RREF basis).
    pub fn basis_points(&self) -> Vec<ProjPoint> {
        self.basis
            .iter()
            .map(|r| ProjPoint::new(r.clone()).unwrap())
            .collect()
    }

    pub fn contains_point(&self, p: &ProjPoint) -> bool {
        if p.ambient() != self.ambient || p.field() != self.field {
            return false;
        }
        self.reduce_against(p.coords()).iter().all(|c| c.is_zero())
    }

    pub fn contains_subspace(&self, other: &LinSubspace) -> bool {
        other
            .basis
            .iter()
            .all(|row| self.reduce_against(row).iter().all(|c| c.is_zero()))
    }

    /// Reduces a vector modulo the RREF basis; the residue is zero exactly
    /// when the vector lies in the span.
    pub fn reduce_against(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for row in &self.basis {
            // The pivot is the first nonzero entry of an RREF row (it is 1).
            let Some(pc) = row.iter().position(|c| !c.is_zero()) else {
                continue;
            };
            if !v[pc].is_zero() {
                let factor = v[pc].clone();
                for (j, r) in row.iter().enumerate() {
                    let sub = factor.mul(r);
                    v[j] = v[j].sub(&sub);
                }
            }
        }
        v
    }

    /// Coordinates of an ambient point in this subspace's basis, if the
    /// point lies on it. RREF structure makes the coefficients direct
    /// reads at the pivot columns.
    pub fn coordinates_of(&self, p: &ProjPoint) -> Option<Vec<Scalar>> {
        if !self.contains_point(p) {
            return None;
        }
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|row| row.iter().position(|c| !c.is_zero()).unwrap())
            .collect();
        Some(pivots.iter().map(|&c| p.coords()[c].clone()).collect())
    }

    /// Maps a coordinate vector in this subspace's basis to the ambient
    /// point it represents.
    pub fn embed_coords(&self, coords: &[Scalar]) -> Result<ProjPoint> {
        if coords.len() != self.basis.len() {
            return Err(Error::DimensionMismatch(
                "coordinate length vs basis size".into(),
            ));
        }
        let mut v = vec![self.field.zero(); self.ambient + 1];
        for (c, row) in coords.iter().zip(&self.basis) {
            for (j, r) in row.iter().enumerate() {
                v[j] = v[j].add(&c.mul(r));
            }
        }
        ProjPoint::new(v)
    }

    /// Dual equations: a canonical basis of linear forms vanishing on the
    /// subspace.
    pub fn dual_forms(&self) -> Vec<Vec<Scalar>> {
        match self.basis_matrix() {
            None => Matrix::identity(self.ambient + 1, self.field).row_vecs(),
            Some(m) => m.kernel_basis(),
        }
    }
}

/// Smallest linear subspace containing all the given points and
/// subspaces. Errors on empty input or mismatched ambients.
pub fn span(items: &[SpanItem]) -> Result<LinSubspace> {
    if items.is_empty() {
        return Err(Error::EmptyInput);
    }
    let (field, ambient) = match &items[0] {
        SpanItem::Point(p) => (p.field(), p.ambient()),
        SpanItem::Subspace(s) => (s.field(), s.ambient()),
    };
    let mut rows = Vec::new();
    for item in items {
        match item {
            SpanItem::Point(p) => {
                if p.ambient() != ambient {
                    return Err(Error::AmbientMismatch(p.ambient(), ambient));
                }
                rows.push(p.coords().to_vec());
            }
            SpanItem::Subspace(s) => {
                if s.ambient() != ambient {
                    return Err(Error::AmbientMismatch(s.ambient(), ambient));
                }
                rows.extend(s.basis_rows().iter().cloned());
            }
        }
    }
    if rows.is_empty() {
        // All inputs were empty subspaces.
        return Ok(LinSubspace::empty(field, ambient));
    }
    LinSubspace::from_rows(field, ambient, rows)
}

/// Convenience span of points only.
pub fn span_points(points: &[ProjPoint]) -> Result<LinSubspace> {
    span(
        &points
            .iter()
            .map(|p| SpanItem::Point(p.clone()))
            .collect::<Vec<_>>(),
    )
}

/// Intersection of two subspaces, computed from the kernel of their
/// stacked dual equations.
pub fn meet(a: &LinSubspace, b: &LinSubspace) -> Result<LinSubspace> {
    if a.ambient() != b.ambient() {
        return Err(Error::AmbientMismatch(a.ambient(), b.ambient()));
    }
    if a.field() != b.field() {
        return Err(Error::MixedField(a.field().to_string(), b.field().to_string()));
    }
    if a.is_empty() || b.is_empty() {
        return Ok(LinSubspace::empty(a.field(), a.ambient()));
    }
    let mut forms = a.dual_forms();
    forms.extend(b.dual_forms());
    if forms.is_empty() {
        // Both subspaces are all of P^n.
        return Ok(a.clone());
    }
    let m = Matrix::from_rows(forms)?;
    let kernel = m.kernel_basis();
    LinSubspace::from_rows(a.field(), a.ambient(), kernel)
}
