//! Scrolls as swept ruling planes of k directrix curves.

use crate::error::{Error, Result};
use crate::exactlin::{minors, Field, Matrix, ParamPoint, Poly2, Scalar};
use crate::projgeom::{span_points, LinSubspace, MoebiusMap, ProjPoint};

use super::curve::RatCurveParam;
use super::quadric::{monomial_count, monomial_index, substitute_linear, QuadricSet};

/// A rational normal scroll S(a_1, ..., a_k) in P^(d+k-1), d = sum a_i,
/// presented by ordered directrix curves of degrees a_1 >= ... >= a_k >= 1
/// in complementary subspaces. The assembled coefficient matrix (columns
/// grouped by directrix) is square and invertible exactly when the spans
/// are complementary and fill the ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scroll {
    ambient: usize,
    field: Field,
    type_vec: Vec<usize>,
    directrices: Vec<RatCurveParam>,
    assembled: Matrix,
    assembled_inv: Matrix,
}

/// Outcome of testing a point against a scroll: the validated in-field
/// fiber parameters and the degree of any unsplit factor of the parameter
/// locus. A point is (geometrically) on the scroll iff the minor gcd is
/// non-constant, even when no parameter is visible in the field.
#[derive(Debug, Clone)]
pub struct MembershipReport {
    pub on_scroll: bool,
    pub params: Vec<ParamPoint>,
    pub residual_degree: usize,
}

impl Scroll {
    /// Assembles a scroll from directrix curves (sorted by descending
    /// degree; the sort is stable so equal-degree directrices keep their
    /// given order).
    pub fn from_directrices(curves: Vec<RatCurveParam>) -> Result<Scroll> {
        if curves.is_empty() {
            return Err(Error::EmptyInput);
        }
        let ambient = curves[0].ambient();
        let field = curves[0].field();
        for c in &curves {
            if c.ambient() != ambient {
                return Err(Error::AmbientMismatch(c.ambient(), ambient));
            }
            if c.field() != field {
                return Err(Error::MixedField(field.to_string(), c.field().to_string()));
            }
            if c.degree() == 0 {
                return Err(Error::InvalidScrollType("degree-0 directrix".into()));
            }
        }
        let mut curves = curves;
        curves.sort_by(|a, b| b.degree().cmp(&a.degree()));
        let type_vec: Vec<usize> = curves.iter().map(|c| c.degree()).collect();
        let total: usize = type_vec.iter().map(|a| a + 1).sum();
        if total != ambient + 1 {
            return Err(Error::InvalidScrollType(format!(
                "type {:?} does not fill P^{}",
                type_vec, ambient
            )));
        }
        // Column-assemble the coefficient matrices.
        let assembled = Matrix::from_fn(ambient + 1, ambient + 1, field, |i, j| {
            let (curve, col) = locate_column(&type_vec, j);
            curves[curve].coefficient_matrix().at(i, col).clone()
        });
        let assembled_inv = assembled
            .inverse()
            .map_err(|_| Error::NonComplementarySpans)?;
        let scroll = Scroll {
            ambient,
            field,
            type_vec,
            directrices: curves,
            assembled,
            assembled_inv,
        };
        // Ruling-plane rank at k+1 sample parameters; invertibility of the
        // assembled matrix certifies the rest symbolically.
        for sample in 0..=scroll.dim_k() {
            let at = ParamPoint::from_i64(1, sample as i64, field);
            scroll.fiber_plane(&at)?;
        }
        scroll.fiber_plane(&ParamPoint::from_i64(0, 1, field))?;
        Ok(scroll)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Scroll dimension k.
    pub fn dim_k(&self) -> usize {
        self.type_vec.len()
    }

    /// Degree d = sum of directrix degrees.
    pub fn degree(&self) -> usize {
        self.type_vec.iter().sum()
    }

    pub fn type_vec(&self) -> &[usize] {
        &self.type_vec
    }

    pub fn directrices(&self) -> &[RatCurveParam] {
        &self.directrices
    }

    pub fn assembled_matrix(&self) -> &Matrix {
        &self.assembled
    }

    /// The point sum_i u_i phi_i(s:t) of the ruling plane at (s:t).
    pub fn point_at(&self, at: &ParamPoint, weights: &[Scalar]) -> Result<ProjPoint> {
        if weights.len() != self.dim_k() {
            return Err(Error::DimensionMismatch("weight count".into()));
        }
        if weights.iter().all(|w| w.is_zero()) {
            return Err(Error::ZeroVector);
        }
        let mut coords = vec![self.field.zero(); self.ambient + 1];
        for (w, dir) in weights.iter().zip(&self.directrices) {
            if w.is_zero() {
                continue;
            }
            for (c, form) in dir.forms().iter().enumerate() {
                coords[c] = coords[c].add(&w.mul(&form.eval(at)));
            }
        }
        ProjPoint::new(coords)
    }

    /// The ruling plane at (s:t): the span of the directrix points, of
    /// projective dimension exactly k-1 for every parameter.
    pub fn fiber_plane(&self, at: &ParamPoint) -> Result<LinSubspace> {
        let pts: Vec<ProjPoint> = self.directrices.iter().map(|d| d.eval(at)).collect();
        let span = span_points(&pts)?;
        if span.dim() != self.dim_k() as i64 - 1 {
            return Err(Error::Degenerate(format!(
                "ruling plane at {at} has dimension {}",
                span.dim()
            )));
        }
        Ok(span)
    }

    /// Membership test via the gcd of the maximal minors of
    /// [phi_1(s:t) | ... | phi_k(s:t) | x]. In-field roots of the gcd are
    /// validated as fiber parameters by an exact rank check.
    pub fn membership(&self, x: &ProjPoint) -> Result<MembershipReport> {
        if x.ambient() != self.ambient {
            return Err(Error::AmbientMismatch(x.ambient(), self.ambient));
        }
        let k = self.dim_k();
        // Rows of the (n+1) x (k+1) polynomial matrix.
        let rows: Vec<Vec<Poly2>> = (0..=self.ambient)
            .map(|c| {
                let mut row: Vec<Poly2> = self
                    .directrices
                    .iter()
                    .map(|d| d.forms()[c].clone())
                    .collect();
                row.push(Poly2::constant(x.coords()[c].clone()));
                row
            })
            .collect();
        let mins = minors(&rows, k + 1)?;
        let mut g: Option<Poly2> = None;
        for m in &mins {
            if m.is_zero() {
                continue;
            }
            g = Some(match g {
                None => m.monic(),
                Some(prev) => prev.gcd(m)?,
            });
            if g.as_ref().unwrap().is_constant() {
                break;
            }
        }
        let Some(g) = g else {
            return Err(Error::Degenerate(
                "all membership minors vanish identically".into(),
            ));
        };
        if g.is_constant() {
            return Ok(MembershipReport {
                on_scroll: false,
                params: Vec::new(),
                residual_degree: 0,
            });
        }
        let roots = g.projective_roots()?;
        let mut params = Vec::new();
        for (at, _) in roots.roots {
            if self.point_in_fiber(x, &at) {
                params.push(at);
            }
        }
        Ok(MembershipReport {
            on_scroll: true,
            params,
            residual_degree: roots.residual_degree,
        })
    }

    fn point_in_fiber(&self, x: &ProjPoint, at: &ParamPoint) -> bool {
        let mut rows: Vec<Vec<Scalar>> = self
            .directrices
            .iter()
            .map(|d| d.eval(at).coords().to_vec())
            .collect();
        rows.push(x.coords().to_vec());
        Matrix::from_rows(rows).map(|m| m.rank() == self.dim_k()).unwrap_or(false)
    }

    /// The unique ruling plane through a point of the scroll; errors when
    /// the point is off the scroll, its parameter lies outside the base
    /// field, or more than one fiber passes through it.
    pub fn fiber_through_point(&self, x: &ProjPoint) -> Result<(ParamPoint, LinSubspace)> {
        let report = self.membership(x)?;
        if !report.on_scroll {
            return Err(Error::NotOnScroll);
        }
        match report.params.len() {
            0 => Err(Error::NoFieldFiber(report.residual_degree)),
            1 => {
                let at = report.params.into_iter().next().unwrap();
                let plane = self.fiber_plane(&at)?;
                Ok((at, plane))
            }
            n => Err(Error::AmbiguousFiber(n)),
        }
    }

    /// Canonical basis of quadrics through the scroll: the 2x2 minors of
    /// the standard block matrix for the type, pulled back through the
    /// inverse of the assembled coefficient matrix. Requires d >= 2
    /// (a plane has no canonical quadric model).
    pub fn quadrics(&self) -> Result<QuadricSet> {
        let d = self.degree();
        if d < 2 {
            return Err(Error::DegreeTooSmall(d));
        }
        let n = self.ambient;
        // Standard coordinates y_{i,0..a_i} per block; the block matrix is
        //   [ y_{i,0} ... y_{i,a_i - 1} ]
        //   [ y_{i,1} ... y_{i,a_i}     ]
        // and every 2x2 minor (columns may cross blocks) is a quadric.
        let mut columns: Vec<(usize, usize)> = Vec::new(); // (top y-index, bottom y-index)
        let mut offset = 0usize;
        for &a in &self.type_vec {
            for c in 0..a {
                columns.push((offset + c, offset + c + 1));
            }
            offset += a + 1;
        }
        debug_assert_eq!(columns.len(), d);
        let mut forms = Vec::with_capacity(d * (d - 1) / 2);
        for i in 0..columns.len() {
            for j in i + 1..columns.len() {
                let (t1, b1) = columns[i];
                let (t2, b2) = columns[j];
                // y_{t1} y_{b2} - y_{t2} y_{b1}
                let mut form = vec![self.field.zero(); monomial_count(n)];
                add_monomial(&mut form, t1, b2, self.field.one(), n);
                add_monomial(&mut form, t2, b1, self.field.from_i64(-1), n);
                forms.push(substitute_linear(&form, &self.assembled_inv));
            }
        }
        let qs = QuadricSet::from_forms(n, self.field, forms)?;
        // Every quadric vanishes identically on the sweep: it suffices
        // that phi_i^T Q phi_j + phi_j^T Q phi_i = 0 as binary forms for
        // all directrix pairs, which vanishes_on_curve checks pairwise.
        debug_assert!(self.quadrics_vanish_symbolically(&qs));
        Ok(qs)
    }

    /// q(sum u_a phi_a) expands as sum over a <= b of u_a u_b P_ab(s:t);
    /// the formal identity vanishes iff every coefficient form P_ab does.
    fn quadrics_vanish_symbolically(&self, qs: &QuadricSet) -> bool {
        let k = self.dim_k();
        let n = self.ambient;
        for a in 0..k {
            for b in a..k {
                let fa = self.directrices[a].forms();
                let fb = self.directrices[b].forms();
                for q in qs.basis() {
                    let mut acc = Poly2::zero(self.field);
                    for i in 0..=n {
                        for j in i..=n {
                            let c = &q[monomial_index(i, j, n)];
                            if c.is_zero() {
                                continue;
                            }
                            // Coefficient of u_a u_b in x_i x_j evaluated
                            // on the sweep.
                            let term = if a == b {
                                fa[i].mul(&fa[j])
                            } else {
                                fa[i].mul(&fb[j]).add(&fa[j].mul(&fb[i]))
                            };
                            if term.is_zero() {
                                continue;
                            }
                            let term = term.scale(c);
                            acc = if acc.is_zero() { term } else { acc.add(&term) };
                        }
                    }
                    if !acc.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn add_monomial(form: &mut [Scalar], i: usize, j: usize, c: Scalar, ambient: usize) {
    let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
    let idx = monomial_index(lo, hi, ambient);
    form[idx] = form[idx].add(&c);
}

fn locate_column(type_vec: &[usize], j: usize) -> (usize, usize) {
    let mut offset = 0usize;
    for (idx, &a) in type_vec.iter().enumerate() {
        if j < offset + a + 1 {
            return (idx, j - offset);
        }
        offset += a + 1;
    }
    unreachable!("column out of range");
}

/// Ideal-theoretic equality: scrolls of minimal degree are cut out by
/// their quadrics, so identical canonical quadric sets mean identical
/// point sets. Requires d >= 2 on both sides.
pub fn scrolls_equal(a: &Scroll, b: &Scroll) -> Result<bool> {
    if a.ambient() != b.ambient()
        || a.field() != b.field()
        || a.degree() != b.degree()
        || a.dim_k() != b.dim_k()
    {
        return Ok(false);
    }
    Ok(a.quadrics()? == b.quadrics()?)
}

/// Degree via a codimension-k slice: writes the slicing plane as k
/// independent linear forms L_j, forms the k x k matrix L_j(phi_i(s:t)),
/// and reads the degree off the determinant. A plane meeting some ruling
/// plane in positive dimension makes the determinant vanish identically
/// and is rejected (the caller resamples).
pub fn degree_by_slicing(scroll: &Scroll, plane: &LinSubspace) -> Result<usize> {
    if plane.ambient() != scroll.ambient() {
        return Err(Error::AmbientMismatch(plane.ambient(), scroll.ambient()));
    }
    let k = scroll.dim_k();
    let n = scroll.ambient();
    if plane.dim() != n as i64 - k as i64 {
        return Err(Error::DimensionMismatch(format!(
            "slicing plane must have codimension {k}"
        )));
    }
    let duals = plane.dual_forms();
    debug_assert_eq!(duals.len(), k);
    let mat: Vec<Vec<Poly2>> = duals
        .iter()
        .map(|form| {
            scroll
                .directrices()
                .iter()
                .map(|dir| {
                    let mut acc = Poly2::zero(scroll.field());
                    for (c, comp) in dir.forms().iter().enumerate() {
                        if form[c].is_zero() || comp.is_zero() {
                            continue;
                        }
                        let term = comp.scale(&form[c]);
                        acc = if acc.is_zero() { term } else { acc.add(&term) };
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let det = minors(&mat, k)?.pop().expect("k x k determinant");
    if det.is_zero() {
        return Err(Error::Degenerate(
            "slicing plane meets a ruling plane in positive dimension".into(),
        ));
    }
    Ok(det.degree())
}

/// Whether a scroll meets a linear subspace at an in-field point: stacks
/// the subspace's dual forms against the directrices and looks for a
/// parameter where the ruling plane intersects. Returns a witness point.
pub fn scroll_meets_subspace(scroll: &Scroll, sub: &LinSubspace) -> Result<Option<ProjPoint>> {
    if sub.ambient() != scroll.ambient() {
        return Err(Error::AmbientMismatch(sub.ambient(), scroll.ambient()));
    }
    if sub.is_empty() {
        return Ok(None);
    }
    let k = scroll.dim_k();
    let duals = sub.dual_forms();
    // Entry (r, i) = L_r(phi_i(s:t)).
    let mat: Vec<Vec<Poly2>> = duals
        .iter()
        .map(|form| {
            scroll
                .directrices()
                .iter()
                .map(|dir| {
                    let mut acc = Poly2::zero(scroll.field());
                    for (c, comp) in dir.forms().iter().enumerate() {
                        if form[c].is_zero() || comp.is_zero() {
                            continue;
                        }
                        let term = comp.scale(&form[c]);
                        acc = if acc.is_zero() { term } else { acc.add(&term) };
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let candidate_params: Vec<ParamPoint> = if duals.len() < k {
        // Fewer constraints than the fiber dimension: every fiber meets.
        vec![ParamPoint::from_i64(1, 0, scroll.field())]
    } else {
        let mins = minors(&mat, k)?;
        let mut g: Option<Poly2> = None;
        for m in &mins {
            if m.is_zero() {
                continue;
            }
            g = Some(match g {
                None => m.monic(),
                Some(prev) => prev.gcd(m)?,
            });
            if g.as_ref().unwrap().is_constant() {
                break;
            }
        }
        match g {
            // All minors vanish identically: every fiber meets the plane.
            None => vec![ParamPoint::from_i64(1, 0, scroll.field())],
            Some(g) if g.is_constant() => Vec::new(),
            Some(g) => g.projective_roots()?.roots.into_iter().map(|(p, _)| p).collect(),
        }
    };
    for at in candidate_params {
        // Kernel of the evaluated constraint matrix gives the weights of
        // a fiber point inside the subspace.
        let rows: Vec<Vec<Scalar>> = mat
            .iter()
            .map(|row| row.iter().map(|f| f.eval(&at)).collect())
            .collect();
        let m = Matrix::from_rows(rows)?;
        for w in m.kernel_basis() {
            if let Ok(pt) = scroll.point_at(&at, &w) {
                if sub.contains_point(&pt) {
                    return Ok(Some(pt));
                }
            }
        }
    }
    Ok(None)
}

/// The unique Segre scroll S(1^k) through k lines and three (k-1)-planes
/// in P^(2k-1), each line meeting each plane in a single point, all 3k
/// intersection points distinct, and the lines spanning.
///
/// Each line is parameterized by the Möbius map sending (1:0), (1:1),
/// (0:1) to its intersections with the three planes, so the output
/// contains each line as a sweep line and each plane as the fiber at the
/// corresponding distinguished parameter.
pub fn segre_from_config(lines: &[LinSubspace], planes: &[LinSubspace; 3]) -> Result<Scroll> {
    let k = lines.len();
    if k < 2 {
        return Err(Error::InvalidScrollType("need at least 2 lines".into()));
    }
    let ambient = 2 * k - 1;
    let field = lines[0].field();
    for (i, l) in lines.iter().enumerate() {
        if l.ambient() != ambient {
            return Err(Error::AmbientMismatch(l.ambient(), ambient));
        }
        if l.dim() != 1 {
            return Err(Error::Degenerate(format!("input {i} is not a line")));
        }
    }
    for (j, p) in planes.iter().enumerate() {
        if p.ambient() != ambient {
            return Err(Error::AmbientMismatch(p.ambient(), ambient));
        }
        if p.dim() != k as i64 - 1 {
            return Err(Error::Degenerate(format!(
                "plane {j} has dimension {}, expected {}",
                p.dim(),
                k - 1
            )));
        }
    }
    // Lines must span P^(2k-1).
    {
        let mut rows = Vec::new();
        for l in lines {
            rows.extend(l.basis_rows().iter().cloned());
        }
        if Matrix::from_rows(rows)?.rank() != 2 * k {
            return Err(Error::Degenerate("lines do not span the ambient space".into()));
        }
    }
    // Intersection points z[i][j] = l_i meet Lambda_j, all single points,
    // pairwise distinct.
    let mut z: Vec<Vec<ProjPoint>> = Vec::with_capacity(k);
    for (i, l) in lines.iter().enumerate() {
        let mut zrow = Vec::with_capacity(3);
        for (j, p) in planes.iter().enumerate() {
            let m = crate::projgeom::meet(l, p)?;
            if m.dim() != 0 {
                return Err(Error::Degenerate(format!(
                    "line {i} meets plane {j} in dimension {}",
                    m.dim()
                )));
            }
            zrow.push(m.basis_points().pop().unwrap());
        }
        z.push(zrow);
    }
    for i1 in 0..k {
        for j1 in 0..3 {
            for i2 in 0..k {
                for j2 in 0..3 {
                    if (i1, j1) < (i2, j2) && z[i1][j1] == z[i2][j2] {
                        return Err(Error::Degenerate(format!(
                            "intersection points ({i1},{j1}) and ({i2},{j2}) coincide"
                        )));
                    }
                }
            }
        }
    }
    // Per line: Möbius parameterization pinned at the three planes.
    let mut directrices = Vec::with_capacity(k);
    for (i, l) in lines.iter().enumerate() {
        let coords: Vec<ParamPoint> = (0..3)
            .map(|j| {
                let c = l
                    .coordinates_of(&z[i][j])
                    .expect("intersection point lies on its line");
                ParamPoint::new(c[0].clone(), c[1].clone())
            })
            .collect::<Result<_>>()?;
        let moebius = MoebiusMap::through_three(&coords[0], &coords[1], &coords[2])?;
        let basis = l.basis_rows();
        let mm = moebius.matrix();
        // phi_i(s:t) = (m00 s + m01 t) b0 + (m10 s + m11 t) b1
        let forms: Vec<Poly2> = (0..=ambient)
            .map(|c| {
                let lin0 = Poly2::new(field, vec![mm.at(0, 0).clone(), mm.at(0, 1).clone()]);
                let lin1 = Poly2::new(field, vec![mm.at(1, 0).clone(), mm.at(1, 1).clone()]);
                lin0.scale(&basis[0][c]).add(&lin1.scale(&basis[1][c]))
            })
            .collect();
        directrices.push(RatCurveParam::new(ambient, 1, forms)?);
    }
    let scroll = Scroll::from_directrices(directrices)?;
    // Forced by the construction: the fibers at the distinguished
    // parameters are the input planes.
    for (j, (s, t)) in [(1, 0), (1, 1), (0, 1)].iter().enumerate() {
        let fiber = scroll.fiber_plane(&ParamPoint::from_i64(*s, *t, field))?;
        if &fiber != &planes[j] {
            return Err(Error::VerificationFailed(format!(
                "fiber at distinguished parameter {j} differs from its plane"
            )));
        }
    }
    Ok(scroll)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn standard_segre_s11() -> Scroll {
        // phi_1 = (s, t, 0, 0), phi_2 = (0, 0, s, t)
        let f = Field::Q;
        let s = Poly2::from_i64(f, &[1, 0]);
        let t = Poly2::from_i64(f, &[0, 1]);
        let z = Poly2::zero(f);
        let c1 = RatCurveParam::new(3, 1, vec![s.clone(), t.clone(), z.clone(), z.clone()]).unwrap();
        let c2 = RatCurveParam::new(3, 1, vec![z.clone(), z.clone(), s, t]).unwrap();
        Scroll::from_directrices(vec![c1, c2]).unwrap()
    }

    #[test]
    fn two_disjoint_lines_give_s11() {
        let s = standard_segre_s11();
        assert_eq!(s.type_vec(), &[1, 1]);
        assert_eq!(s.degree(), 2);
        assert_eq!(s.ambient(), 3);
    }

    #[test]
    fn conic_plus_line_gives_s21() {
        let f = Field::Q;
        let s2 = Poly2::from_i64(f, &[1, 0, 0]);
        let st = Poly2::from_i64(f, &[0, 1, 0]);
        let t2 = Poly2::from_i64(f, &[0, 0, 1]);
        let z2 = Poly2::zero(f);
        let conic = RatCurveParam::new(
            4,
            2,
            vec![s2, st, t2, z2.clone(), z2.clone()],
        )
        .unwrap();
        let s1 = Poly2::from_i64(f, &[1, 0]);
        let t1 = Poly2::from_i64(f, &[0, 1]);
        let line = RatCurveParam::new(4, 1, vec![z2.clone(), z2.clone(), z2.clone(), s1, t1]).unwrap();
        let scroll = Scroll::from_directrices(vec![line, conic]).unwrap();
        // Constructor re-sorts by descending degree.
        assert_eq!(scroll.type_vec(), &[2, 1]);
        assert_eq!(scroll.ambient(), 4);
    }

    #[test]
    fn overlapping_spans_rejected() {
        let f = Field::Q;
        let s = Poly2::from_i64(f, &[1, 0]);
        let t = Poly2::from_i64(f, &[0, 1]);
        let z = Poly2::zero(f);
        let c1 = RatCurveParam::new(3, 1, vec![s.clone(), t.clone(), z.clone(), z.clone()]).unwrap();
        let c2 = RatCurveParam::new(3, 1, vec![t.clone(), s.clone(), z.clone(), z.clone()]).unwrap();
        assert!(matches!(
            Scroll::from_directrices(vec![c1, c2]),
            Err(Error::NonComplementarySpans)
        ));
    }

    #[test]
    fn sweep_point_example() {
        // S(1,1) at (1:2) with weights (1,3) gives (1:2:3:6).
        let s = standard_segre_s11();
        let f = Field::Q;
        let p = s
            .point_at(
                &ParamPoint::from_i64(1, 2, f),
                &[f.from_i64(1), f.from_i64(3)],
            )
            .unwrap();
        assert_eq!(p, ProjPoint::from_i64(f, &[1, 2, 3, 6]).unwrap());
    }

    #[test]
    fn unit_weights_trace_directrices() {
        let s = standard_segre_s11();
        let f = Field::Q;
        let at = ParamPoint::from_i64(5, 7, f);
        let p = s.point_at(&at, &[f.from_i64(1), f.from_i64(0)]).unwrap();
        assert_eq!(p, s.directrices()[0].eval(&at));
    }

    #[test]
    fn fiber_planes_of_s11() {
        let s = standard_segre_s11();
        let f = Field::Q;
        let fiber0 = s.fiber_plane(&ParamPoint::from_i64(1, 0, f)).unwrap();
        let e = |i| ProjPoint::standard(f, 3, i);
        assert_eq!(fiber0, span_points(&[e(0), e(2)]).unwrap());
        let fiber12 = s.fiber_plane(&ParamPoint::from_i64(1, 2, f)).unwrap();
        let expect = span_points(&[
            ProjPoint::from_i64(f, &[1, 2, 0, 0]).unwrap(),
            ProjPoint::from_i64(f, &[0, 0, 1, 2]).unwrap(),
        ])
        .unwrap();
        assert_eq!(fiber12, expect);
    }

    #[test]
    fn distinct_fibers_are_disjoint_on_s11() {
        let s = standard_segre_s11();
        let f = Field::Q;
        let params = [(1i64, 0i64), (0, 1), (1, 1), (1, -3), (2, 5)];
        for (a, pa) in params.iter().enumerate() {
            for pb in params.iter().skip(a + 1) {
                let fa = s.fiber_plane(&ParamPoint::from_i64(pa.0, pa.1, f)).unwrap();
                let fb = s.fiber_plane(&ParamPoint::from_i64(pb.0, pb.1, f)).unwrap();
                assert!(crate::projgeom::meet(&fa, &fb).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn membership_of_sweep_point() {
        let s = standard_segre_s11();
        let f = Field::Q;
        let x = ProjPoint::from_i64(f, &[1, 2, 3, 6]).unwrap();
        let r = s.membership(&x).unwrap();
        assert!(r.on_scroll);
        assert_eq!(r.params, vec![ParamPoint::from_i64(1, 2, f)]);
        let (at, fiber) = s.fiber_through_point(&x).unwrap();
        assert_eq!(at, ParamPoint::from_i64(1, 2, f));
        assert!(fiber.contains_point(&x));
    }

    #[test]
    fn membership_rejects_off_scroll_point() {
        let s = standard_segre_s11();
        let f = Field::Q;
        let x = ProjPoint::from_i64(f, &[1, 0, 0, 1]).unwrap();
        let r = s.membership(&x).unwrap();
        assert!(!r.on_scroll);
        assert!(matches!(s.fiber_through_point(&x), Err(Error::NotOnScroll)));
    }

    #[test]
    fn membership_of_directrix_endpoint() {
        let s = standard_segre_s11();
        let f = Field::Q;
        let x = s.directrices()[0].eval(&ParamPoint::from_i64(1, 0, f));
        let (at, _) = s.fiber_through_point(&x).unwrap();
        assert_eq!(at, ParamPoint::from_i64(1, 0, f));
    }

    #[test]
    fn quadrics_of_s11_is_the_segre_quadric() {
        let s = standard_segre_s11();
        let qs = s.quadrics().unwrap();
        assert_eq!(qs.len(), 1);
        // x0 x3 - x1 x2 up to the canonical scaling.
        let f = Field::Q;
        let mut form = vec![f.zero(); monomial_count(3)];
        form[monomial_index(0, 3, 3)] = f.from_i64(1);
        form[monomial_index(1, 2, 3)] = f.from_i64(-1);
        let expect = QuadricSet::from_forms(3, f, vec![form]).unwrap();
        assert_eq!(qs, expect);
    }

    #[test]
    fn quadrics_of_twisted_cubic() {
        // RNC in P^3: forms (s^3, s^2 t, s t^2, t^3), 3 quadrics.
        let f = Field::Q;
        let forms = vec![
            Poly2::from_i64(f, &[1, 0, 0, 0]),
            Poly2::from_i64(f, &[0, 1, 0, 0]),
            Poly2::from_i64(f, &[0, 0, 1, 0]),
            Poly2::from_i64(f, &[0, 0, 0, 1]),
        ];
        let curve = RatCurveParam::new(3, 3, forms).unwrap();
        let scroll = Scroll::from_directrices(vec![curve]).unwrap();
        let qs = scroll.quadrics().unwrap();
        assert_eq!(qs.len(), 3);
        assert!(qs.vanishes_on_curve(scroll.directrices()[0].forms()));
    }

    #[test]
    fn quadrics_reject_degree_one() {
        let f = Field::Q;
        let line = RatCurveParam::new(
            1,
            1,
            vec![Poly2::from_i64(f, &[1, 0]), Poly2::from_i64(f, &[0, 1])],
        )
        .unwrap();
        let scroll = Scroll::from_directrices(vec![line]).unwrap();
        assert!(matches!(scroll.quadrics(), Err(Error::DegreeTooSmall(1))));
    }

    #[test]
    fn slicing_degree_of_s11() {
        let s = standard_segre_s11();
        let f = Field::Q;
        // A line in P^3 (codimension 2).
        let plane = span_points(&[
            ProjPoint::from_i64(f, &[1, 5, -2, 4]).unwrap(),
            ProjPoint::from_i64(f, &[3, 1, 7, 2]).unwrap(),
        ])
        .unwrap();
        assert_eq!(degree_by_slicing(&s, &plane).unwrap(), 2);
    }

    #[test]
    fn slicing_degree_of_twisted_cubic_and_s21() {
        let f = Field::Q;
        let cubic = Scroll::from_directrices(vec![RatCurveParam::new(
            3,
            3,
            vec![
                Poly2::from_i64(f, &[1, 0, 0, 0]),
                Poly2::from_i64(f, &[0, 1, 0, 0]),
                Poly2::from_i64(f, &[0, 0, 1, 0]),
                Poly2::from_i64(f, &[0, 0, 0, 1]),
            ],
        )
        .unwrap()])
        .unwrap();
        let plane = span_points(&[
            ProjPoint::from_i64(f, &[1, 2, -1, 3]).unwrap(),
            ProjPoint::from_i64(f, &[2, -5, 1, 1]).unwrap(),
            ProjPoint::from_i64(f, &[4, 1, 1, -7]).unwrap(),
        ])
        .unwrap();
        assert_eq!(degree_by_slicing(&cubic, &plane).unwrap(), 3);

        let s2 = Poly2::from_i64(f, &[1, 0, 0]);
        let st = Poly2::from_i64(f, &[0, 1, 0]);
        let t2 = Poly2::from_i64(f, &[0, 0, 1]);
        let z = Poly2::zero(f);
        let conic = RatCurveParam::new(4, 2, vec![s2, st, t2, z.clone(), z.clone()]).unwrap();
        let line = RatCurveParam::new(
            4,
            1,
            vec![
                z.clone(),
                z.clone(),
                z.clone(),
                Poly2::from_i64(f, &[1, 0]),
                Poly2::from_i64(f, &[0, 1]),
            ],
        )
        .unwrap();
        let s21 = Scroll::from_directrices(vec![conic, line]).unwrap();
        let slice = span_points(&[
            ProjPoint::from_i64(f, &[1, 2, -1, 3, 2]).unwrap(),
            ProjPoint::from_i64(f, &[2, -5, 1, 1, 9]).unwrap(),
            ProjPoint::from_i64(f, &[4, 1, 1, -7, 5]).unwrap(),
        ])
        .unwrap();
        assert_eq!(degree_by_slicing(&s21, &slice).unwrap(), 3);
    }

    #[test]
    fn segre_from_worked_configuration() {
        // Lines <e0,e1>, <e2,e3>; planes <e0,e2>, <e0+e1, e2+e3>, <e1,e3>
        // give the standard Segre quadric x0 x3 = x1 x2.
        let f = Field::Q;
        let e = |i| ProjPoint::standard(f, 3, i);
        let lines = vec![
            span_points(&[e(0), e(1)]).unwrap(),
            span_points(&[e(2), e(3)]).unwrap(),
        ];
        let planes = [
            span_points(&[e(0), e(2)]).unwrap(),
            span_points(&[
                ProjPoint::from_i64(f, &[1, 1, 0, 0]).unwrap(),
                ProjPoint::from_i64(f, &[0, 0, 1, 1]).unwrap(),
            ])
            .unwrap(),
            span_points(&[e(1), e(3)]).unwrap(),
        ];
        let scroll = segre_from_config(&lines, &planes).unwrap();
        assert_eq!(scroll.quadrics().unwrap(), standard_segre_s11().quadrics().unwrap());
        // Line-order permutation gives the identical quadric set.
        let permuted = segre_from_config(&[lines[1].clone(), lines[0].clone()], &planes).unwrap();
        assert!(scrolls_equal(&scroll, &permuted).unwrap());
    }

    #[test]
    fn segre_rejects_line_inside_plane() {
        let f = Field::Q;
        let e = |i| ProjPoint::standard(f, 3, i);
        let lines = vec![
            span_points(&[e(0), e(2)]).unwrap(), // lies inside plane 1
            span_points(&[e(1), e(3)]).unwrap(),
        ];
        let planes = [
            span_points(&[e(0), e(2)]).unwrap(),
            span_points(&[
                ProjPoint::from_i64(f, &[1, 1, 0, 0]).unwrap(),
                ProjPoint::from_i64(f, &[0, 0, 1, 1]).unwrap(),
            ])
            .unwrap(),
            span_points(&[e(1), e(3)]).unwrap(),
        ];
        assert!(segre_from_config(&lines, &planes).is_err());
    }
}
