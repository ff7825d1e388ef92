//! Projectivities of P^n and Möbius maps of P^1.

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, ParamPoint, Scalar};

use super::point::ProjPoint;

/// An invertible projectivity of P^n, stored as an (n+1)x(n+1) matrix
/// normalized so the first nonzero entry of the first nonzero row is 1.
/// Points transform as column vectors: x -> M x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjMap {
    mat: Matrix,
}

impl ProjMap {
    pub fn new(mat: Matrix) -> Result<ProjMap> {
        if mat.rows() != mat.cols() {
            return Err(Error::DimensionMismatch("projectivity must be square".into()));
        }
        if mat.det()?.is_zero() {
            return Err(Error::Degenerate("projectivity must be invertible".into()));
        }
        Ok(ProjMap {
            mat: normalize_scale(mat),
        })
    }

    pub fn identity(field: Field, n: usize) -> ProjMap {
        ProjMap {
            mat: Matrix::identity(n + 1, field),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn ambient(&self) -> usize {
        self.mat.rows() - 1
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(self.mat.mul_vec(p.coords())).expect("projectivity preserves nonzero")
    }

    pub fn inverse(&self) -> ProjMap {
        ProjMap {
            mat: normalize_scale(self.mat.inverse().expect("invertible by construction")),
        }
    }

    pub fn compose(&self, other: &ProjMap) -> ProjMap {
        ProjMap {
            mat: normalize_scale(self.mat.mul(&other.mat).expect("compatible sizes")),
        }
    }

    /// The unique projectivity sending the standard frame
    /// (e_0, ..., e_n, ones) to the given n+2 points: columns are the
    /// first n+1 points scaled so the ones-point lands on the last.
    pub fn from_frame(points: &[ProjPoint]) -> Result<ProjMap> {
        if points.len() < 3 {
            return Err(Error::DegenerateFrame("need at least 3 points".into()));
        }
        let n = points[0].ambient();
        if points.len() != n + 2 {
            return Err(Error::DegenerateFrame(format!(
                "need {} points in P^{}, got {}",
                n + 2,
                n,
                points.len()
            )));
        }
        let field = points[0].field();
        for p in points {
            if p.ambient() != n {
                return Err(Error::AmbientMismatch(p.ambient(), n));
            }
        }
        // Solve [p_0 | ... | p_n] c = p_{n+1}; all c_i must be nonzero.
        let cols = Matrix::from_fn(n + 1, n + 1, field, |i, j| points[j].coords()[i].clone());
        let inv = cols
            .inverse()
            .map_err(|_| Error::DegenerateFrame("first n+1 points are dependent".into()))?;
        let c = inv.mul_vec(points[n + 1].coords());
        if c.iter().any(|x| x.is_zero()) {
            return Err(Error::DegenerateFrame(
                "last point lies on a coordinate hyperplane of the others".into(),
            ));
        }
        let mat = Matrix::from_fn(n + 1, n + 1, field, |i, j| {
            points[j].coords()[i].mul(&c[j])
        });
        ProjMap::new(mat)
    }
}

/// Scales a matrix so its first nonzero entry (row-major) is 1.
fn normalize_scale(m: Matrix) -> Matrix {
    let mut lead = None;
    'outer: for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.at(i, j).is_zero() {
                lead = Some(m.at(i, j).clone());
                break 'outer;
            }
        }
    }
    let Some(lead) = lead else { return m };
    let inv = lead.inv().unwrap();
    Matrix::from_fn(m.rows(), m.cols(), m.field(), |i, j| m.at(i, j).mul(&inv))
}

/// An invertible 2x2 matrix acting on (s : t), up to scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusMap {
    mat: Matrix,
}

impl MoebiusMap {
    pub fn new(mat: Matrix) -> Result<MoebiusMap> {
        if mat.rows() != 2 || mat.cols() != 2 {
            return Err(Error::DimensionMismatch("Moebius map must be 2x2".into()));
        }
        if mat.det()?.is_zero() {
            return Err(Error::Degenerate("Moebius map must be invertible".into()));
        }
        Ok(MoebiusMap {
            mat: normalize_scale(mat),
        })
    }

    pub fn identity(field: Field) -> MoebiusMap {
        MoebiusMap {
            mat: Matrix::identity(2, field),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn apply(&self, p: &ParamPoint) -> ParamPoint {
        let v = self.mat.mul_vec(&[p.s.clone(), p.t.clone()]);
        ParamPoint::new(v[0].clone(), v[1].clone()).expect("invertible map preserves nonzero")
    }

    /// The unique Möbius map with (1:0) -> a, (1:1) -> b, (0:1) -> c for
    /// pairwise distinct points of P^1.
    pub fn through_three(a: &ParamPoint, b: &ParamPoint, c: &ParamPoint) -> Result<MoebiusMap> {
        if a == b || b == c || a == c {
            return Err(Error::CoincidentPoints);
        }
        let field = a.field();
        // Scale representatives of a and c so their sum is b.
        let cols = Matrix::from_rows(vec![
            vec![a.s.clone(), c.s.clone()],
            vec![a.t.clone(), c.t.clone()],
        ])?;
        let w = cols
            .inverse()
            .map_err(|_| Error::CoincidentPoints)?
            .mul_vec(&[b.s.clone(), b.t.clone()]);
        if w[0].is_zero() || w[1].is_zero() {
            return Err(Error::CoincidentPoints);
        }
        let mat = Matrix::from_rows(vec![
            vec![a.s.mul(&w[0]), c.s.mul(&w[1])],
            vec![a.t.mul(&w[0]), c.t.mul(&w[1])],
        ])?;
        let _ = field;
        MoebiusMap::new(mat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_map_fixes_standard_frame() {
        let n = 2;
        let mut pts: Vec<ProjPoint> = (0..=n).map(|i| ProjPoint::standard(Field::Q, n, i)).collect();
        pts.push(ProjPoint::ones(Field::Q, n));
        let m = ProjMap::from_frame(&pts).unwrap();
        assert_eq!(m, ProjMap::identity(Field::Q, n));
    }

    #[test]
    fn frame_map_with_scaled_last_point_is_diagonal() {
        let n = 2;
        let mut pts: Vec<ProjPoint> = (0..=n).map(|i| ProjPoint::standard(Field::Q, n, i)).collect();
        pts.push(ProjPoint::from_i64(Field::Q, &[1, 2, 3]).unwrap());
        let m = ProjMap::from_frame(&pts).unwrap();
        for i in 0..=n {
            let img = m.apply(&ProjPoint::standard(Field::Q, n, i));
            assert_eq!(img, ProjPoint::standard(Field::Q, n, i));
        }
        assert_eq!(
            m.apply(&ProjPoint::ones(Field::Q, n)),
            ProjPoint::from_i64(Field::Q, &[1, 2, 3]).unwrap()
        );
    }

    #[test]
    fn frame_map_hits_random_fp_frame() {
        // Apply-and-compare oracle over F_101 on a fixed nondegenerate frame.
        let f = Field::fp(101).unwrap();
        let pts = vec![
            ProjPoint::from_i64(f, &[1, 2, 3]).unwrap(),
            ProjPoint::from_i64(f, &[4, 5, 61]).unwrap(),
            ProjPoint::from_i64(f, &[7, 81, 9]).unwrap(),
            ProjPoint::from_i64(f, &[10, 1, 12]).unwrap(),
        ];
        let m = ProjMap::from_frame(&pts).unwrap();
        for (i, expect) in pts.iter().take(3).enumerate() {
            assert_eq!(&m.apply(&ProjPoint::standard(f, 2, i)), expect);
        }
        assert_eq!(&m.apply(&ProjPoint::ones(f, 2)), &pts[3]);
    }

    #[test]
    fn moebius_identity_case() {
        let f = Field::Q;
        let a = ParamPoint::from_i64(1, 0, f);
        let b = ParamPoint::from_i64(1, 1, f);
        let c = ParamPoint::from_i64(0, 1, f);
        let m = MoebiusMap::through_three(&a, &b, &c).unwrap();
        assert_eq!(m, MoebiusMap::identity(f));
    }

    #[test]
    fn moebius_swap() {
        let f = Field::Q;
        let a = ParamPoint::from_i64(0, 1, f);
        let b = ParamPoint::from_i64(1, 1, f);
        let c = ParamPoint::from_i64(1, 0, f);
        let m = MoebiusMap::through_three(&a, &b, &c).unwrap();
        assert_eq!(m.apply(&ParamPoint::from_i64(1, 0, f)), a);
        assert_eq!(m.apply(&ParamPoint::from_i64(0, 1, f)), c);
        // s <-> t swap.
        assert_eq!(
            m.apply(&ParamPoint::from_i64(2, 5, f)),
            ParamPoint::from_i64(5, 2, f)
        );
    }

    #[test]
    fn moebius_through_random_triple_mod_7() {
        let f = Field::fp(7).unwrap();
        let a = ParamPoint::from_i64(1, 3, f);
        let b = ParamPoint::from_i64(1, 5, f);
        let c = ParamPoint::from_i64(0, 1, f);
        let m = MoebiusMap::through_three(&a, &b, &c).unwrap();
        assert_eq!(m.apply(&ParamPoint::from_i64(1, 0, f)), a);
        assert_eq!(m.apply(&ParamPoint::from_i64(1, 1, f)), b);
        assert_eq!(m.apply(&ParamPoint::from_i64(0, 1, f)), c);
    }

    #[test]
    fn moebius_rejects_coincident() {
        let f = Field::Q;
        let a = ParamPoint::from_i64(1, 0, f);
        let b = ParamPoint::from_i64(1, 0, f);
        let c = ParamPoint::from_i64(0, 1, f);
        assert!(MoebiusMap::through_three(&a, &b, &c).is_err());
    }
}
