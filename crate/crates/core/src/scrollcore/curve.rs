//! Parameterized rational normal curves and interpolation through n+3
//! points.

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, ParamPoint, Poly2, Scalar};
use crate::projgeom::{in_general_position, ProjMap, ProjPoint};

/// A rational curve of degree a in P^n given by n+1 homogeneous forms of
/// degree a in (s : t) with no common factor, whose image spans an
/// a-plane (the coefficient matrix has full column rank a+1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatCurveParam {
    ambient: usize,
    degree: usize,
    forms: Vec<Poly2>,
    field: Field,
}

impl RatCurveParam {
    pub fn new(ambient: usize, degree: usize, forms: Vec<Poly2>) -> Result<RatCurveParam> {
        if forms.len() != ambient + 1 {
            return Err(Error::DimensionMismatch(format!(
                "expected {} component forms, got {}",
                ambient + 1,
                forms.len()
            )));
        }
        let mut field = None;
        for f in &forms {
            if !f.is_zero() {
                if f.degree() != degree {
                    return Err(Error::DimensionMismatch(
                        "component form of wrong degree".into(),
                    ));
                }
                field = Some(f.field());
            }
        }
        let field = field.ok_or(Error::ZeroPolynomial)?;
        let curve = RatCurveParam {
            ambient,
            degree,
            forms,
            field,
        };
        if curve.coefficient_matrix().rank() != degree + 1 {
            return Err(Error::Degenerate(
                "curve image does not span a full a-plane".into(),
            ));
        }
        // No common factor: the forms' gcd must be constant.
        let mut g: Option<Poly2> = None;
        for f in &curve.forms {
            if f.is_zero() {
                continue;
            }
            g = Some(match g {
                None => f.clone(),
                Some(prev) => prev.gcd(f)?,
            });
            if g.as_ref().unwrap().is_constant() {
                break;
            }
        }
        if !g.unwrap().is_constant() {
            return Err(Error::Degenerate("component forms share a factor".into()));
        }
        Ok(curve)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn forms(&self) -> &[Poly2] {
        &self.forms
    }

    /// Coefficient matrix, (n+1) x (a+1), rows = components.
    pub fn coefficient_matrix(&self) -> Matrix {
        Matrix::from_fn(self.ambient + 1, self.degree + 1, self.field, |i, j| {
            if self.forms[i].is_zero() {
                self.field.zero()
            } else {
                self.forms[i].coeff(j)
            }
        })
    }

    pub fn eval(&self, at: &ParamPoint) -> ProjPoint {
        let coords: Vec<Scalar> = self.forms.iter().map(|f| f.eval(at)).collect();
        ProjPoint::new(coords).expect("coprime forms have no common zero")
    }
}

/// Result of interpolating a rational normal curve: the curve plus the
/// parameter at which it passes through each input point, in input order.
#[derive(Debug, Clone)]
pub struct RncResult {
    pub curve: RatCurveParam,
    pub params: Vec<ParamPoint>,
}

/// The rational normal curve of degree n through n+3 points of P^n.
///
/// The first n+2 points are sent to the standard frame; writing the last
/// point as (p_0 : ... : p_n) in frame coordinates (all coordinates
/// nonzero and pairwise distinct, an open condition), the curve has frame
/// components p_i * prod_{j != i} (s + p_j t); it passes through e_i at
/// (-p_i : 1), the ones-point at (0 : 1), and the last point at (1 : 0).
pub fn rnc_through_points(points: &[ProjPoint]) -> Result<RncResult> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = points[0].ambient();
    if points.len() != n + 3 {
        return Err(Error::DimensionMismatch(format!(
            "need {} points in P^{}, got {}",
            n + 3,
            n,
            points.len()
        )));
    }
    if !in_general_position(points) {
        return Err(Error::Degenerate("points not in general position".into()));
    }
    let field = points[0].field();
    let frame = ProjMap::from_frame(&points[..n + 2])?;
    let inv = frame.inverse();
    let last = inv.apply(&points[n + 2]);
    let p = last.coords().to_vec();
    if p.iter().any(|c| c.is_zero()) {
        return Err(Error::Degenerate(
            "normalized last point has a zero coordinate".into(),
        ));
    }
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] == p[j] {
                return Err(Error::Degenerate(
                    "normalized last point has coincident coordinates".into(),
                ));
            }
        }
    }
    // Frame-coordinate components p_i * prod_{j != i} (s + p_j t).
    let mut frame_forms = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut f = Poly2::constant(p[i].clone());
        for (j, pj) in p.iter().enumerate() {
            if j != i {
                f = f.mul(&Poly2::new(field, vec![field.one(), pj.clone()]));
            }
        }
        frame_forms.push(f);
    }
    // Transform back: component c of the output is sum_i F[c][i] * f_i.
    let fm = frame.matrix();
    let mut forms = Vec::with_capacity(n + 1);
    for c in 0..=n {
        let mut acc = Poly2::zero(field);
        for (i, fi) in frame_forms.iter().enumerate() {
            let term = fi.scale(fm.at(c, i));
            acc = if acc.is_zero() { term } else { acc.add(&term) };
        }
        forms.push(acc);
    }
    let curve = RatCurveParam::new(n, n, forms)?;
    let mut params = Vec::with_capacity(n + 3);
    for pi in p.iter().take(n + 1) {
        params.push(ParamPoint::new(pi.neg(), field.one())?);
    }
    params.push(ParamPoint::new(field.zero(), field.one())?);
    params.push(ParamPoint::new(field.one(), field.zero())?);
    // Exactness of the construction: each input point is hit at its
    // recorded parameter.
    for (pt, at) in points.iter().zip(&params) {
        if &curve.eval(at) != pt {
            return Err(Error::VerificationFailed(
                "constructed curve misses an input point".into(),
            ));
        }
    }
    Ok(RncResult { curve, params })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_example_in_p3() {
        // e_0..e_3, (1:1:1:1), (1:2:3:4): frame coordinates of the last
        // point are (1,2,3,4) and the curve is p_i prod_{j!=i}(s + p_j t).
        let f = Field::Q;
        let mut pts: Vec<ProjPoint> = (0..4).map(|i| ProjPoint::standard(f, 3, i)).collect();
        pts.push(ProjPoint::ones(f, 3));
        pts.push(ProjPoint::from_i64(f, &[1, 2, 3, 4]).unwrap());
        let r = rnc_through_points(&pts).unwrap();
        assert_eq!(r.curve.degree(), 3);
        // Incidence at all six recorded parameters was checked by the
        // constructor; spot-check the distinguished ones.
        assert_eq!(
            r.curve.eval(&ParamPoint::from_i64(1, 0, f)),
            ProjPoint::from_i64(f, &[1, 2, 3, 4]).unwrap()
        );
        assert_eq!(
            r.curve.eval(&ParamPoint::from_i64(0, 1, f)),
            ProjPoint::ones(f, 3)
        );
        assert_eq!(
            r.curve.eval(&ParamPoint::from_i64(-2, 1, f)),
            ProjPoint::standard(f, 3, 1)
        );
        // Nondegenerate: coefficient matrix has rank 4.
        assert_eq!(r.curve.coefficient_matrix().rank(), 4);
    }

    #[test]
    fn collinear_input_rejected() {
        let f = Field::Q;
        let pts = vec![
            ProjPoint::from_i64(f, &[1, 0, 0]).unwrap(),
            ProjPoint::from_i64(f, &[0, 1, 0]).unwrap(),
            ProjPoint::from_i64(f, &[1, 1, 0]).unwrap(),
            ProjPoint::from_i64(f, &[0, 0, 1]).unwrap(),
            ProjPoint::from_i64(f, &[1, 2, 3]).unwrap(),
        ];
        assert!(rnc_through_points(&pts).is_err());
    }
}
