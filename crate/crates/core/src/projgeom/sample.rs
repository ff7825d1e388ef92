//! Seeded sampling of points, subspaces, and constrained configurations.
//!
//! All draws go through one `SplitMix64` stream, so a configuration is a
//! pure function of (seed, field). Over Q coordinates are integers drawn
//! uniformly from [-999, 999]; over F_p residues are drawn from [0, p).
//! Every constrained sample retries a failed open condition at most
//! `RETRY_BUDGET` times before reporting the predicate that failed.

use crate::error::{Error, Result};
use crate::exactlin::{Field, ParamPoint, Scalar};
use crate::rng::SplitMix64;

use super::point::ProjPoint;
use super::position::in_general_position;
use super::subspace::{span, span_points, LinSubspace, SpanItem};

/// Shared retry budget for rejection sampling.
pub const RETRY_BUDGET: usize = 100;

/// Draws geometric data over a fixed field from a deterministic stream.
#[derive(Debug, Clone)]
pub struct Sampler {
    pub field: Field,
    rng: SplitMix64,
}

impl Sampler {
    pub fn new(field: Field, seed: u64) -> Sampler {
        Sampler {
            field,
            rng: SplitMix64::new(seed),
        }
    }

    pub fn from_rng(field: Field, rng: SplitMix64) -> Sampler {
        Sampler { field, rng }
    }

    pub fn rng(&mut self) -> &mut SplitMix64 {
        &mut self.rng
    }

    pub fn scalar(&mut self) -> Scalar {
        match self.field {
            Field::Q => self.field.from_i64(self.rng.range_i64(-999, 999)),
            Field::Fp(p) => self.field.from_i64(self.rng.below(p) as i64),
        }
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// A point of P^n with fresh coordinates (zero vector rejected).
    pub fn point(&mut self, ambient: usize) -> ProjPoint {
        loop {
            let coords: Vec<Scalar> = (0..=ambient).map(|_| self.scalar()).collect();
            if let Ok(p) = ProjPoint::new(coords) {
                return p;
            }
        }
    }

    /// A point drawn from a subspace (random combination of its basis).
    pub fn point_in(&mut self, sub: &LinSubspace) -> Result<ProjPoint> {
        if sub.is_empty() {
            return Err(Error::EmptyInput);
        }
        for _ in 0..RETRY_BUDGET {
            let coords: Vec<Scalar> = (0..sub.basis_rows().len()).map(|_| self.scalar()).collect();
            if coords.iter().all(|c| c.is_zero()) {
                continue;
            }
            if let Ok(p) = sub.embed_coords(&coords) {
                return Ok(p);
            }
        }
        Err(Error::RetryExhausted {
            site: "point_in",
            attempts: RETRY_BUDGET,
            detail: "could not sample a nonzero combination".into(),
        })
    }

    /// A point of the subspace avoiding a list of forbidden points.
    pub fn point_in_avoiding(
        &mut self,
        sub: &LinSubspace,
        avoid: &[&ProjPoint],
    ) -> Result<ProjPoint> {
        for _ in 0..RETRY_BUDGET {
            let p = self.point_in(sub)?;
            if avoid.iter().all(|a| *a != &p) {
                return Ok(p);
            }
        }
        Err(Error::RetryExhausted {
            site: "point_in_avoiding",
            attempts: RETRY_BUDGET,
            detail: "all samples hit forbidden points".into(),
        })
    }

    /// A point off a given subspace.
    pub fn point_off(&mut self, ambient: usize, sub: &LinSubspace) -> Result<ProjPoint> {
        for _ in 0..RETRY_BUDGET {
            let p = self.point(ambient);
            if !sub.contains_point(&p) {
                return Ok(p);
            }
        }
        Err(Error::RetryExhausted {
            site: "point_off",
            attempts: RETRY_BUDGET,
            detail: format!("every sample landed on a dim-{} subspace", sub.dim()),
        })
    }

    /// A parameter point of P^1.
    pub fn param(&mut self) -> ParamPoint {
        loop {
            let s = self.scalar();
            let t = self.scalar();
            if let Ok(p) = ParamPoint::new(s, t) {
                return p;
            }
        }
    }

    /// A subspace of the given projective dimension, sampled as the span
    /// of dim+1 points and retried until the dimension is exact.
    pub fn subspace(&mut self, ambient: usize, dim: usize) -> Result<LinSubspace> {
        for _ in 0..RETRY_BUDGET {
            let pts: Vec<ProjPoint> = (0..=dim).map(|_| self.point(ambient)).collect();
            let s = span_points(&pts)?;
            if s.dim() == dim as i64 {
                return Ok(s);
            }
        }
        Err(Error::RetryExhausted {
            site: "subspace",
            attempts: RETRY_BUDGET,
            detail: format!("span kept collapsing below dimension {dim}"),
        })
    }

    /// A hyperplane of P^n.
    pub fn hyperplane(&mut self, ambient: usize) -> Result<LinSubspace> {
        self.subspace(ambient, ambient - 1)
    }

    /// A subspace of the given dimension containing the given items.
    pub fn subspace_through(
        &mut self,
        ambient: usize,
        dim: usize,
        through: &[SpanItem],
    ) -> Result<LinSubspace> {
        let base = span(through)?;
        if base.dim() > dim as i64 {
            return Err(Error::Degenerate(format!(
                "required items already span dimension {}",
                base.dim()
            )));
        }
        for _ in 0..RETRY_BUDGET {
            let mut items: Vec<SpanItem> = vec![SpanItem::Subspace(base.clone())];
            for _ in 0..(dim as i64 - base.dim()) {
                items.push(SpanItem::Point(self.point(ambient)));
            }
            let s = span(&items)?;
            if s.dim() == dim as i64 {
                return Ok(s);
            }
        }
        Err(Error::RetryExhausted {
            site: "subspace_through",
            attempts: RETRY_BUDGET,
            detail: format!("could not extend to dimension {dim}"),
        })
    }

    /// n+2 points forming a projective frame (every n+1 independent).
    pub fn frame(&mut self, ambient: usize) -> Result<Vec<ProjPoint>> {
        for _ in 0..RETRY_BUDGET {
            let pts: Vec<ProjPoint> = (0..ambient + 2).map(|_| self.point(ambient)).collect();
            if in_general_position(&pts) {
                return Ok(pts);
            }
        }
        Err(Error::RetryExhausted {
            site: "frame",
            attempts: RETRY_BUDGET,
            detail: "no frame in general position".into(),
        })
    }
}

/// Declarative request for a seeded configuration.
#[derive(Debug, Clone)]
pub struct ConfigRequest {
    pub ambient: usize,
    pub items: Vec<ItemSpec>,
    /// When set, the sampled points must additionally pass the classical
    /// general-position predicate.
    pub require_general_position: bool,
}

#[derive(Debug, Clone)]
pub enum ItemSpec {
    /// `count` points, optionally confined to a subspace.
    Points {
        count: usize,
        within: Option<LinSubspace>,
    },
    /// One subspace of dimension `dim`, optionally through a fixed point
    /// and/or meeting each of the listed subspaces.
    Subspace {
        dim: usize,
        through: Vec<ProjPoint>,
        meeting: Vec<LinSubspace>,
    },
}

/// A sampled configuration: points first, then subspaces, in request
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub points: Vec<ProjPoint>,
    pub subspaces: Vec<LinSubspace>,
}

/// Samples a configuration satisfying the request's constraints.
/// Deterministic in (seed, field); errors when the retry budget runs out,
/// which signals a too-small field or contradictory constraints.
pub fn random_config(req: &ConfigRequest, field: Field, seed: u64) -> Result<Configuration> {
    let mut sampler = Sampler::new(field, seed);
    for attempt in 0..RETRY_BUDGET {
        match try_config(req, &mut sampler) {
            Ok(cfg) => return Ok(cfg),
            Err(_) if attempt + 1 < RETRY_BUDGET => continue,
            Err(e) => {
                return Err(Error::RetryExhausted {
                    site: "random_config",
                    attempts: RETRY_BUDGET,
                    detail: e.to_string(),
                })
            }
        }
    }
    unreachable!()
}

fn try_config(req: &ConfigRequest, sampler: &mut Sampler) -> Result<Configuration> {
    let mut points = Vec::new();
    let mut subspaces = Vec::new();
    for item in &req.items {
        match item {
            ItemSpec::Points { count, within } => {
                for _ in 0..*count {
                    let p = match within {
                        Some(sub) => sampler.point_in(sub)?,
                        None => sampler.point(req.ambient),
                    };
                    points.push(p);
                }
            }
            ItemSpec::Subspace {
                dim,
                through,
                meeting,
            } => {
                // One fresh sampled point on each subspace to be met, the
                // fixed through-points, then generic padding.
                let mut items: Vec<SpanItem> = Vec::new();
                for p in through {
                    items.push(SpanItem::Point(p.clone()));
                }
                for m in meeting {
                    items.push(SpanItem::Point(sampler.point_in(m)?));
                }
                let s = sampler.subspace_through(req.ambient, *dim, &items)?;
                subspaces.push(s);
            }
        }
    }
    if req.require_general_position && !in_general_position(&points) {
        return Err(Error::Degenerate("points not in general position".into()));
    }
    Ok(Configuration { points, subspaces })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_points_in_p3_pass_predicate() {
        let req = ConfigRequest {
            ambient: 3,
            items: vec![ItemSpec::Points {
                count: 6,
                within: None,
            }],
            require_general_position: true,
        };
        let f = Field::fp(101).unwrap();
        let cfg = random_config(&req, f, 7).unwrap();
        assert_eq!(cfg.points.len(), 6);
        assert!(in_general_position(&cfg.points));
    }

    #[test]
    fn hyperplane_constraint_is_satisfied() {
        // All sampled points lie on the hyperplane x_0 = 0.
        let f = Field::fp(101).unwrap();
        let h = LinSubspace::from_rows(
            f,
            3,
            vec![
                ProjPoint::standard(f, 3, 1).coords().to_vec(),
                ProjPoint::standard(f, 3, 2).coords().to_vec(),
                ProjPoint::standard(f, 3, 3).coords().to_vec(),
            ],
        )
        .unwrap();
        let req = ConfigRequest {
            ambient: 3,
            items: vec![ItemSpec::Points {
                count: 4,
                within: Some(h.clone()),
            }],
            require_general_position: false,
        };
        let cfg = random_config(&req, f, 3).unwrap();
        for p in &cfg.points {
            assert!(p.coords()[0].is_zero());
            assert!(h.contains_point(p));
        }
    }

    #[test]
    fn same_seed_same_output() {
        let req = ConfigRequest {
            ambient: 4,
            items: vec![
                ItemSpec::Points {
                    count: 5,
                    within: None,
                },
                ItemSpec::Subspace {
                    dim: 2,
                    through: vec![],
                    meeting: vec![],
                },
            ],
            require_general_position: true,
        };
        let a = random_config(&req, Field::Q, 99).unwrap();
        let b = random_config(&req, Field::Q, 99).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn meeting_constraint() {
        let f = Field::fp(101).unwrap();
        let mut s = Sampler::new(f, 5);
        let line = s.subspace(5, 1).unwrap();
        let req = ConfigRequest {
            ambient: 5,
            items: vec![ItemSpec::Subspace {
                dim: 2,
                through: vec![],
                meeting: vec![line.clone()],
            }],
            require_general_position: false,
        };
        let cfg = random_config(&req, f, 11).unwrap();
        let m = crate::projgeom::meet(&cfg.subspaces[0], &line).unwrap();
        assert!(!m.is_empty());
    }
}
