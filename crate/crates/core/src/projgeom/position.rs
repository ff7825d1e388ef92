//! General-position predicates.

use crate::exactlin::Matrix;

use super::point::ProjPoint;

/// True when every subset of at most n+1 of the points is linearly
/// independent (n the ambient dimension). This is the classical notion;
/// individual constructions enforce their own sharper open conditions.
pub fn in_general_position(points: &[ProjPoint]) -> bool {
    if points.is_empty() {
        return true;
    }
    let n = points[0].ambient();
    if points.iter().any(|p| p.ambient() != n) {
        return false;
    }
    let k = (n + 1).min(points.len());
    subsets_independent(points, k)
}

fn subsets_independent(points: &[ProjPoint], k: usize) -> bool {
    let idx: Vec<usize> = (0..points.len()).collect();
    let mut chosen = Vec::with_capacity(k);
    independent_rec(points, &idx, 0, k, &mut chosen)
}

fn independent_rec(
    points: &[ProjPoint],
    idx: &[usize],
    start: usize,
    k: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == k {
        let rows: Vec<Vec<_>> = chosen
            .iter()
            .map(|&i| points[i].coords().to_vec())
            .collect();
        let m = Matrix::from_rows(rows).expect("validated points");
        return m.rank() == k;
    }
    for pos in start..idx.len() {
        chosen.push(idx[pos]);
        if !independent_rec(points, idx, pos + 1, k, chosen) {
            chosen.pop();
            return false;
        }
        chosen.pop();
    }
    true
}
