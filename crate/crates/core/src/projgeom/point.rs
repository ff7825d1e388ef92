//! Points of projective space in canonical coordinates.

use crate::error::{Error, Result};
use crate::exactlin::{Field, Scalar};

use super::subspace::LinSubspace;

/// A point of P^n. Coordinates are canonical: over Q a primitive integer
/// vector with positive first nonzero entry, over F_p scaled so the first
/// nonzero entry is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: Vec<Scalar>,
}

impl ProjPoint {
    pub fn new(coords: Vec<Scalar>) -> Result<ProjPoint> {
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        crate::exactlin::common_field(coords.iter())?;
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroVector);
        }
        let mut coords = coords;
        crate::exactlin::canonicalize_vector(&mut coords);
        Ok(ProjPoint { coords })
    }

    pub fn from_i64(field: Field, coords: &[i64]) -> Result<ProjPoint> {
        ProjPoint::new(coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// Standard basis point e_i of P^n.
    pub fn standard(field: Field, n: usize, i: usize) -> ProjPoint {
        assert!(i <= n);
        let mut coords = vec![field.zero(); n + 1];
        coords[i] = field.one();
        ProjPoint { coords }
    }

    /// The all-ones point (1 : 1 : ... : 1).
    pub fn ones(field: Field, n: usize) -> ProjPoint {
        ProjPoint {
            coords: vec![field.one(); n + 1],
        }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Ambient projective dimension n.
    pub fn ambient(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    pub fn on_subspace(&self, sub: &LinSubspace) -> bool {
        sub.contains_point(self)
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_over_q() {
        let p = ProjPoint::from_i64(Field::Q, &[-2, 4, 0]).unwrap();
        assert_eq!(p, ProjPoint::from_i64(Field::Q, &[1, -2, 0]).unwrap());
    }

    #[test]
    fn zero_vector_rejected() {
        assert!(ProjPoint::from_i64(Field::Q, &[0, 0]).is_err());
    }

    #[test]
    fn canonical_form_over_fp() {
        let f = Field::fp(7).unwrap();
        let p = ProjPoint::from_i64(f, &[0, 3, 5]).unwrap();
        assert_eq!(p, ProjPoint::from_i64(f, &[0, 1, 4]).unwrap());
    }
}
