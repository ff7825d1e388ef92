//! Fano components of t-planes in a scroll, with exhaustive line
//! enumeration over prime fields.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::{Field, ParamPoint, Scalar};
use crate::projgeom::{span_points, LinSubspace, ProjPoint};

use super::scroll::Scroll;

/// The two kinds of linear spaces a scroll carries: planes inside ruling
/// fibers, and (for t = 1) the section lines swept by constant weights on
/// the degree-1 directrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FanoKind {
    FiberContained,
    DirectrixSections,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoComponent {
    pub kind: FanoKind,
    pub dim: i64,
    /// Set when j = 1: the section family is a single line, a degenerate
    /// reading in which the two descriptions can overlap.
    pub degenerate_overlap: bool,
}

/// Component descriptors for the family of t-planes in a scroll of the
/// given type. The fiber component is a Grassmannian bundle over P^1 of
/// dimension 1 + (t+1)(k-1-t); for t = 1 and j >= 1 degree-1 directrices
/// there is additionally a section family of dimension j - 1.
pub fn fano_components(type_vec: &[usize], t: usize) -> Result<Vec<FanoComponent>> {
    let k = type_vec.len();
    if k < 2 || t < 1 || t > k - 1 {
        return Err(Error::TOutOfRange {
            t,
            max: k.saturating_sub(1),
        });
    }
    if type_vec.iter().any(|&a| a == 0) {
        return Err(Error::InvalidScrollType("zero entry in type".into()));
    }
    let j = type_vec.iter().filter(|&&a| a == 1).count();
    let mut out = vec![FanoComponent {
        kind: FanoKind::FiberContained,
        dim: 1 + ((t + 1) * (k - 1 - t)) as i64,
        degenerate_overlap: false,
    }];
    if t == 1 && j >= 1 {
        out.push(FanoComponent {
            kind: FanoKind::DirectrixSections,
            dim: j as i64 - 1,
            degenerate_overlap: j == 1,
        });
    }
    Ok(out)
}

/// Number of lines in P^m(F_q): the Gaussian binomial [m+1 choose 2]_q.
pub fn lines_in_projective_space(m: usize, q: u64) -> u128 {
    if m < 1 {
        return 0;
    }
    let n = (m + 1) as u32;
    let qq = q as u128;
    // (q^n - 1)(q^n - q) / ((q^2 - 1)(q^2 - q))
    let num = (qq.pow(n) - 1) * (qq.pow(n) - qq);
    let den = (qq * qq - 1) * (qq * qq - qq);
    num / den
}

/// Every line contained in a scroll over F_p, deduplicated and in a
/// canonical order: lines inside each of the p+1 ruling planes, plus the
/// section lines from constant weights on the degree-1 directrices. Each
/// returned line is re-verified against the scroll's quadrics.
pub fn enumerate_lines_fp(scroll: &Scroll) -> Result<Vec<LinSubspace>> {
    let Field::Fp(p) = scroll.field() else {
        return Err(Error::RequiresPrimeField);
    };
    let field = scroll.field();
    let k = scroll.dim_k();
    if k < 2 {
        return Ok(Vec::new());
    }
    let quadrics = scroll.quadrics()?;
    let mut seen: BTreeMap<Vec<u64>, LinSubspace> = BTreeMap::new();

    // Lines inside each fiber.
    for at in p1_points(p, field) {
        let fiber = scroll.fiber_plane(&at)?;
        let pts = points_of_subspace(&fiber, p);
        for (a, pa) in pts.iter().enumerate() {
            for pb in pts.iter().skip(a + 1) {
                let line = span_points(&[pa.clone(), pb.clone()])?;
                debug_assert_eq!(line.dim(), 1);
                seen.entry(subspace_key(&line)).or_insert(line);
            }
        }
    }

    // Section lines: constant weights supported on degree-1 directrices.
    let ones: Vec<usize> = (0..k).filter(|&i| scroll.type_vec()[i] == 1).collect();
    if !ones.is_empty() {
        for w in projective_vectors(ones.len(), p, field) {
            let mut weights = vec![field.zero(); k];
            for (slot, val) in ones.iter().zip(&w) {
                weights[*slot] = val.clone();
            }
            let p0 = scroll
                .point_at(&ParamPoint::from_i64(1, 0, field), &weights)
                .expect("nonzero weights");
            let p1 = scroll
                .point_at(&ParamPoint::from_i64(0, 1, field), &weights)
                .expect("nonzero weights");
            let line = span_points(&[p0, p1])?;
            debug_assert_eq!(line.dim(), 1);
            seen.entry(subspace_key(&line)).or_insert(line);
        }
    }

    let lines: Vec<LinSubspace> = seen.into_values().collect();
    for line in &lines {
        if !quadrics.contains_subspace(line) {
            return Err(Error::VerificationFailed(
                "enumerated line fails quadric vanishing".into(),
            ));
        }
    }
    Ok(lines)
}

/// The p+1 points of P^1(F_p) in canonical order.
pub fn p1_points(p: u64, field: Field) -> Vec<ParamPoint> {
    let mut out: Vec<ParamPoint> = (0..p)
        .map(|c| ParamPoint::from_i64(1, c as i64, field))
        .collect();
    out.push(ParamPoint::from_i64(0, 1, field));
    out
}

/// All points of a subspace over F_p: projective weight vectors applied
/// to the basis rows.
pub fn points_of_subspace(sub: &LinSubspace, p: u64) -> Vec<ProjPoint> {
    let dim = sub.basis_rows().len();
    projective_vectors(dim, p, sub.field())
        .into_iter()
        .map(|w| sub.embed_coords(&w).expect("nonzero weights"))
        .collect()
}

/// Canonical representatives of P^(len-1)(F_p): first nonzero entry 1.
fn projective_vectors(len: usize, p: u64, field: Field) -> Vec<Vec<Scalar>> {
    let mut out = Vec::new();
    for pivot in 0..len {
        let tail = len - pivot - 1;
        let count = (p as u128).pow(tail as u32);
        for mut idx in 0..count {
            let mut v = vec![field.zero(); len];
            v[pivot] = field.one();
            for slot in 0..tail {
                let digit = (idx % p as u128) as i64;
                idx /= p as u128;
                v[pivot + 1 + slot] = field.from_i64(digit);
            }
            out.push(v);
        }
    }
    out
}

/// Stable dedup key: residues of the RREF basis, row-major.
fn subspace_key(sub: &LinSubspace) -> Vec<u64> {
    sub.basis_rows()
        .iter()
        .flat_map(|row| row.iter().map(|s| s.as_residue().expect("prime field")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Poly2;
    use crate::scrollcore::RatCurveParam;

    fn segre_s11_fp(p: u64) -> Scroll {
        let f = Field::fp(p).unwrap();
        let s = Poly2::from_i64(f, &[1, 0]);
        let t = Poly2::from_i64(f, &[0, 1]);
        let z = Poly2::zero(f);
        let c1 = RatCurveParam::new(3, 1, vec![s.clone(), t.clone(), z.clone(), z.clone()]).unwrap();
        let c2 = RatCurveParam::new(3, 1, vec![z.clone(), z.clone(), s, t]).unwrap();
        Scroll::from_directrices(vec![c1, c2]).unwrap()
    }

    #[test]
    fn fano_dims_for_s111() {
        let comps = fano_components(&[1, 1, 1], 1).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].kind, FanoKind::FiberContained);
        assert_eq!(comps[0].dim, 3);
        assert_eq!(comps[1].kind, FanoKind::DirectrixSections);
        assert_eq!(comps[1].dim, 2);
        assert!(!comps[1].degenerate_overlap);
    }

    #[test]
    fn fano_dims_for_s21() {
        let comps = fano_components(&[2, 1], 1).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].dim, 1);
        assert_eq!(comps[1].dim, 0);
        assert!(comps[1].degenerate_overlap);
    }

    #[test]
    fn fano_single_component_for_t2() {
        let comps = fano_components(&[1, 1, 1], 2).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].dim, 1);
        assert!(fano_components(&[2, 1], 2).is_err());
    }

    #[test]
    fn lines_on_quadric_surface_f3() {
        // A smooth quadric surface over F_q carries 2(q+1) lines.
        let s = segre_s11_fp(3);
        let lines = enumerate_lines_fp(&s).unwrap();
        assert_eq!(lines.len(), 8);
    }

    #[test]
    fn gaussian_count_matches_direct_enumeration() {
        // Lines in P^2(F_3): (3^3-1)(3^3-3)/((9-1)(9-3)) = 13.
        assert_eq!(lines_in_projective_space(2, 3), 13);
        assert_eq!(lines_in_projective_space(3, 3), 130);
        assert_eq!(lines_in_projective_space(1, 5), 1);
    }
}
