//! Canonical bases for the degree-2 part of an ideal.
//!
//! A quadric is stored as its coefficient vector over the degree-2
//! monomials x_i x_j (i <= j) in lexicographic order. A `QuadricSet` keeps
//! a row-reduced basis of such vectors, so set equality is syntactic and
//! works in every characteristic.

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Poly2, Scalar};
use crate::projgeom::{LinSubspace, ProjPoint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricSet {
    ambient: usize,
    field: Field,
    /// RREF rows over the monomial basis; never contains a zero row.
    basis: Vec<Vec<Scalar>>,
}

/// Number of degree-2 monomials in n+1 variables.
pub(crate) fn monomial_count(ambient: usize) -> usize {
    (ambient + 1) * (ambient + 2) / 2
}

/// Index of x_i x_j (i <= j) in the lexicographic monomial order
/// (0,0), (0,1), ..., (0,n), (1,1), ..., (n,n).
pub(crate) fn monomial_index(i: usize, j: usize, ambient: usize) -> usize {
    debug_assert!(i <= j && j <= ambient);
    let n = ambient + 1;
    i * n - i * (i + 1) / 2 + j
}

impl QuadricSet {
    /// Builds the canonical set spanned by the given coefficient vectors.
    pub fn from_forms(ambient: usize, field: Field, forms: Vec<Vec<Scalar>>) -> Result<QuadricSet> {
        let len = monomial_count(ambient);
        for f in &forms {
            if f.len() != len {
                return Err(Error::DimensionMismatch(
                    "quadric coefficient length".into(),
                ));
            }
        }
        if forms.is_empty() {
            return Ok(QuadricSet {
                ambient,
                field,
                basis: Vec::new(),
            });
        }
        let r = Matrix::from_rows(forms)?.rref();
        let basis = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        Ok(QuadricSet {
            ambient,
            field,
            basis,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Evaluates one coefficient vector at a point.
    pub fn eval_form(form: &[Scalar], coords: &[Scalar]) -> Scalar {
        let n = coords.len() - 1;
        let field = coords[0].field();
        let mut acc = field.zero();
        for i in 0..=n {
            if coords[i].is_zero() {
                continue;
            }
            for j in i..=n {
                let c = &form[monomial_index(i, j, n)];
                if c.is_zero() || coords[j].is_zero() {
                    continue;
                }
                acc = acc.add(&c.mul(&coords[i]).mul(&coords[j]));
            }
        }
        acc
    }

    pub fn vanishes_at(&self, p: &ProjPoint) -> bool {
        self.basis
            .iter()
            .all(|f| QuadricSet::eval_form(f, p.coords()).is_zero())
    }

    /// Exact containment of a linear subspace: a quadric vanishes on a
    /// subspace iff it vanishes at every basis point and every pairwise
    /// sum of basis points, which probes each restricted coefficient.
    pub fn contains_subspace(&self, sub: &LinSubspace) -> bool {
        if sub.is_empty() {
            return true;
        }
        let rows = sub.basis_rows();
        for f in &self.basis {
            for (a, ra) in rows.iter().enumerate() {
                if !QuadricSet::eval_form(f, ra).is_zero() {
                    return false;
                }
                for rb in rows.iter().skip(a + 1) {
                    let sum: Vec<Scalar> =
                        ra.iter().zip(rb.iter()).map(|(x, y)| x.add(y)).collect();
                    if !QuadricSet::eval_form(f, &sum).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Symbolic vanishing on a parameterized curve: substitutes the
    /// component forms and checks the resulting binary form is zero.
    pub fn vanishes_on_curve(&self, forms: &[Poly2]) -> bool {
        let n = forms.len() - 1;
        for f in &self.basis {
            let mut acc = Poly2::zero(self.field);
            for i in 0..=n {
                if forms[i].is_zero() {
                    continue;
                }
                for j in i..=n {
                    let c = &f[monomial_index(i, j, n)];
                    if c.is_zero() || forms[j].is_zero() {
                        continue;
                    }
                    let term = forms[i].mul(&forms[j]).scale(c);
                    acc = if acc.is_zero() { term } else { acc.add(&term) };
                }
            }
            if !acc.is_zero() {
                return false;
            }
        }
        true
    }
}

/// Applies the linear substitution x -> A x to a quadric given over the
/// y-coordinates: returns the coefficient vector of q(A x) when `form` is
/// the vector of q(y). Rows of `a` are the linear forms y_r = A_r . x.
pub(crate) fn substitute_linear(form: &[Scalar], a: &Matrix) -> Vec<Scalar> {
    let m = a.rows() - 1; // y-space ambient
    let n = a.cols() - 1; // x-space ambient
    let field = a.field();
    let mut out = vec![field.zero(); monomial_count(n)];
    for u in 0..=m {
        for v in u..=m {
            let c = &form[monomial_index(u, v, m)];
            if c.is_zero() {
                continue;
            }
            // c * (A_u . x)(A_v . x)
            for s in 0..=n {
                let au = a.at(u, s);
                if au.is_zero() {
                    continue;
                }
                for t in 0..=n {
                    let av = a.at(v, t);
                    if av.is_zero() {
                        continue;
                    }
                    let coeff = c.mul(au).mul(av);
                    let (i, j) = if s <= t { (s, t) } else { (t, s) };
                    let idx = monomial_index(i, j, n);
                    out[idx] = out[idx].add(&coeff);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_indexing_is_a_bijection() {
        let n = 4;
        let mut seen = vec![false; monomial_count(n)];
        for i in 0..=n {
            for j in i..=n {
                let idx = monomial_index(i, j, n);
                assert!(!seen[idx]);
                seen[idx] = true;
            }
        }
        assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn segre_quadric_vanishes_on_segre_points() {
        // x0 x3 - x1 x2 on (a c : a d : b c : b d)
        let n = 3;
        let f = Field::Q;
        let mut form = vec![f.zero(); monomial_count(n)];
        form[monomial_index(0, 3, n)] = f.from_i64(1);
        form[monomial_index(1, 2, n)] = f.from_i64(-1);
        let qs = QuadricSet::from_forms(n, f, vec![form]).unwrap();
        for (a, b, c, d) in [(1i64, 2, 3, 4), (5, -1, 2, 7), (1, 0, 4, 9)] {
            let p = ProjPoint::from_i64(f, &[a * c, a * d, b * c, b * d]).unwrap();
            assert!(qs.vanishes_at(&p));
        }
        assert!(!qs.vanishes_at(&ProjPoint::from_i64(f, &[1, 0, 0, 1]).unwrap()));
    }

    #[test]
    fn subspace_containment_probe() {
        // The quadric x0 x3 - x1 x2 contains the line {x1 = x3 = 0}? On it
        // the form restricts to 0, so yes; the line {x2 = x3 = 0} gives
        // x0*0 - x1*0 = 0 as well. A plane is too big to fit in the smooth
        // quadric.
        let n = 3;
        let f = Field::Q;
        let mut form = vec![f.zero(); monomial_count(n)];
        form[monomial_index(0, 3, n)] = f.from_i64(1);
        form[monomial_index(1, 2, n)] = f.from_i64(-1);
        let qs = QuadricSet::from_forms(n, f, vec![form]).unwrap();
        let e = |i| ProjPoint::standard(f, n, i);
        let line = crate::projgeom::span_points(&[e(0), e(2)]).unwrap();
        assert!(qs.contains_subspace(&line));
        let plane = crate::projgeom::span_points(&[e(0), e(1), e(2)]).unwrap();
        assert!(!qs.contains_subspace(&plane));
    }
}
