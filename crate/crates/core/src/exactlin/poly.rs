//! Homogeneous polynomials in two variables (s, t).
//!
//! Coefficients are stored by descending s-power: `coeffs[i]` multiplies
//! s^(a-i) t^i for a form of degree a. The zero polynomial is the empty
//! coefficient vector; a nonzero form of degree a always stores exactly
//! a+1 coefficients, of which the leading ones may be zero (a factor of t).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly2 {
    field: Field,
    coeffs: Vec<Scalar>,
}

/// A point of P^1 in canonical form: (1 : c) or (0 : 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamPoint {
    pub s: Scalar,
    pub t: Scalar,
}

impl ParamPoint {
    pub fn new(s: Scalar, t: Scalar) -> Result<ParamPoint> {
        if s.is_zero() && t.is_zero() {
            return Err(Error::ZeroVector);
        }
        if s.field() != t.field() {
            return Err(Error::MixedField(s.field().to_string(), t.field().to_string()));
        }
        Ok(if s.is_zero() {
            ParamPoint {
                s: s.field().zero(),
                t: t.field().one(),
            }
        } else {
            ParamPoint {
                t: t.div(&s).unwrap(),
                s: s.field().one(),
            }
        })
    }

    pub fn field(&self) -> Field {
        self.s.field()
    }

    pub fn from_i64(s: i64, t: i64, field: Field) -> ParamPoint {
        ParamPoint::new(field.from_i64(s), field.from_i64(t)).unwrap()
    }
}

impl std::fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}:{})", self.s, self.t)
    }
}

/// Projective roots of a form, with multiplicity, plus the degree of the
/// factor that does not split over the base field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Roots {
    pub roots: Vec<(ParamPoint, usize)>,
    pub residual_degree: usize,
}

impl Poly2 {
    pub fn zero(field: Field) -> Poly2 {
        Poly2 {
            field,
            coeffs: Vec::new(),
        }
    }

    /// Builds a form from coefficients by descending s-power. An all-zero
    /// vector collapses to the canonical zero polynomial.
    pub fn new(field: Field, coeffs: Vec<Scalar>) -> Poly2 {
        for c in &coeffs {
            assert!(c.field() == field, "coefficient field mismatch");
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            return Poly2::zero(field);
        }
        Poly2 { field, coeffs }
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Poly2 {
        Poly2::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn constant(c: Scalar) -> Poly2 {
        let field = c.field();
        Poly2::new(field, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Homogeneous degree. Panics on the zero polynomial, which has none.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "zero polynomial has no degree");
        self.coeffs.len() - 1
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of s^(a-i) t^i.
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or(self.field.zero())
    }

    pub fn eval(&self, at: &ParamPoint) -> Scalar {
        if self.is_zero() {
            return self.field.zero();
        }
        let a = self.degree();
        // Horner in t/s with the two monomial towers.
        let mut spow = vec![self.field.one()];
        let mut tpow = vec![self.field.one()];
        for i in 0..a {
            spow.push(spow[i].mul(&at.s));
            tpow.push(tpow[i].mul(&at.t));
        }
        let mut acc = self.field.zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = acc.add(&c.mul(&spow[a - i]).mul(&tpow[i]));
        }
        acc
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(
            self.degree(),
            other.degree(),
            "adding forms of different degrees"
        );
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Poly2::new(self.field, coeffs)
    }

    pub fn sub(&self, other: &Poly2) -> Poly2 {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero(self.field);
        }
        Poly2::new(self.field, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        if self.is_zero() || other.is_zero() {
            return Poly2::zero(self.field);
        }
        let (a, b) = (self.degree(), other.degree());
        let mut coeffs = vec![self.field.zero(); a + b + 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&x.mul(y));
            }
        }
        Poly2::new(self.field, coeffs)
    }

    /// Scales so the leading nonzero coefficient is 1.
    pub fn monic(&self) -> Poly2 {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.coeffs.iter().find(|c| !c.is_zero()).unwrap();
        self.scale(&lead.inv().unwrap())
    }

    /// Exact division; error if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly2) -> Result<Poly2> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Poly2::zero(self.field));
        }
        let (num_t, num_core) = self.split_t();
        let (den_t, den_core) = divisor.split_t();
        if den_t > num_t {
            return Err(Error::Degenerate("inexact polynomial division".into()));
        }
        // After stripping t-powers the leading coefficients are nonzero,
        // so ordinary long division in the dehomogenized variable works.
        let (q, r) = num_core.long_divide(&den_core)?;
        if !r.is_zero() {
            return Err(Error::Degenerate("inexact polynomial division".into()));
        }
        Ok(q.mul_t_power(num_t - den_t))
    }

    /// Splits off the maximal power of t: self = t^k * core where core has
    /// a nonzero leading (s-power) coefficient.
    fn split_t(&self) -> (usize, Poly2) {
        assert!(!self.is_zero());
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (
            k,
            Poly2::new(self.field, self.coeffs[k..].to_vec()),
        )
    }

    fn mul_t_power(&self, k: usize) -> Poly2 {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly2::new(self.field, coeffs)
    }

    /// Long division for forms with nonzero leading coefficient; returns
    /// (quotient, remainder) with the remainder homogenized at the
    /// dividend's degree.
    fn long_divide(&self, divisor: &Poly2) -> Result<(Poly2, Poly2)> {
        assert!(!divisor.coeffs[0].is_zero());
        if self.degree() < divisor.degree() {
            return Ok((Poly2::zero(self.field), self.clone()));
        }
        let qdeg = self.degree() - divisor.degree();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![self.field.zero(); qdeg + 1];
        let lead_inv = divisor.coeffs[0].inv().unwrap();
        for i in 0..=qdeg {
            let c = rem[i].mul(&lead_inv);
            quo[i] = c.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let sub = c.mul(d);
                rem[i + j] = rem[i + j].sub(&sub);
            }
        }
        let rem_coeffs = rem[qdeg + 1..].to_vec();
        Ok((
            Poly2::new(self.field, quo),
            Poly2::new(self.field, rem_coeffs),
        ))
    }

    /// Monic greatest common divisor. Errors when both inputs are zero.
    pub fn gcd(&self, other: &Poly2) -> Result<Poly2> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(other.monic());
        }
        if other.is_zero() {
            return Ok(self.monic());
        }
        let (ta, ca) = self.split_t();
        let (tb, cb) = other.split_t();
        // Factors of s show up as trailing zero coefficients of the cores.
        let (sa, ca) = ca.split_s();
        let (sb, cb) = cb.split_s();
        let mut f = ca;
        let mut g = cb;
        while !g.is_zero() {
            let (_, r) = f.long_divide(&g)?;
            f = g;
            // The cores carry no s or t factor, so factors of either
            // variable picked up by a remainder are coprime to the gcd.
            g = r.strip_st();
        }
        let core_gcd = f.monic();
        Ok(core_gcd
            .mul_t_power(ta.min(tb))
            .mul_s_power(sa.min(sb))
            .monic())
    }

    /// Splits off the maximal power of s (trailing zero coefficients).
    fn split_s(&self) -> (usize, Poly2) {
        assert!(!self.is_zero());
        let k = self.coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        let n = self.coeffs.len();
        (
            k,
            Poly2::new(self.field, self.coeffs[..n - k].to_vec()),
        )
    }

    /// Removes any s- and t-factors (trailing and leading zero
    /// coefficients). Zero stays zero.
    fn strip_st(&self) -> Poly2 {
        if self.is_zero() {
            return self.clone();
        }
        self.split_t().1.split_s().1
    }

    fn mul_s_power(&self, k: usize) -> Poly2 {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat(self.field.zero()).take(k));
        Poly2::new(self.field, coeffs)
    }

    /// Projective roots over the base field with multiplicities.
    ///
    /// Over F_p every point of P^1(F_p) is tested. Over Q the form is
    /// cleared to integer content and candidate roots are read off the
    /// divisors of the extreme coefficients (degrees 1 and 2 are solved
    /// directly). Roots outside the field are only visible through
    /// `residual_degree`.
    pub fn projective_roots(&self) -> Result<Roots> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let deg = self.degree();
        let mut roots: Vec<(ParamPoint, usize)> = Vec::new();

        // (1:0) carries multiplicity = t-adic valuation; (0:1) the s-adic one.
        let (tk, core) = self.split_t();
        if tk > 0 {
            roots.push((ParamPoint::from_i64(1, 0, self.field), tk));
        }
        let (sk, mut core) = core.split_s();
        if sk > 0 {
            roots.push((ParamPoint::from_i64(0, 1, self.field), sk));
        }

        // core now has nonzero first and last coefficients; its roots are
        // all of the form (1:c) with c != 0.
        match self.field {
            Field::Fp(p) => {
                for c in 1..p {
                    let pt = ParamPoint {
                        s: self.field.one(),
                        t: self.field.from_i64(c as i64),
                    };
                    let mut mult = 0usize;
                    while !core.is_constant() && core.eval(&pt).is_zero() {
                        core = core.div_exact(&linear_factor(&pt))?;
                        mult += 1;
                    }
                    if mult > 0 {
                        roots.push((pt, mult));
                    }
                    if core.is_constant() {
                        break;
                    }
                }
            }
            Field::Q => {
                if !core.is_constant() {
                    for cand in rational_root_candidates(&core) {
                        let pt = ParamPoint {
                            s: self.field.one(),
                            t: Scalar::Rat(cand),
                        };
                        let mut mult = 0usize;
                        while !core.is_constant() && core.eval(&pt).is_zero() {
                            core = core.div_exact(&linear_factor(&pt))?;
                            mult += 1;
                        }
                        if mult > 0 {
                            roots.push((pt, mult));
                        }
                        if core.is_constant() {
                            break;
                        }
                    }
                }
            }
        }
        let found: usize = roots.iter().map(|(_, m)| m).sum();
        Ok(Roots {
            roots,
            residual_degree: deg - found,
        })
    }
}

/// The linear form t*s_0 - s*t_0 vanishing exactly at (s_0 : t_0); for
/// canonical points this is (t - c s) at (1:c) and s at (0:1).
fn linear_factor(at: &ParamPoint) -> Poly2 {
    let field = at.field();
    if at.s.is_zero() {
        // s
        Poly2::new(field, vec![field.one(), field.zero()])
    } else {
        // stored descending in s: (-c) s + t
        Poly2::new(field, vec![at.t.neg(), field.one()])
    }
}

/// Candidate rational roots of a form with nonzero extreme coefficients:
/// +-(p/q) with p dividing the trailing and q the leading integer
/// coefficient after clearing content. Degrees 1 and 2 are solved exactly
/// instead. Divisor enumeration trial-divides up to 10^6, which covers
/// every constructed value that occurs in the pipeline.
fn rational_root_candidates(core: &Poly2) -> Vec<num_rational::BigRational> {
    use num_rational::BigRational;
    let deg = core.degree();
    if deg == 1 {
        // c0 s + c1 t = 0 at t/s = -c0/c1
        let c0 = core.coeff(0);
        let c1 = core.coeff(1);
        let root = c0.neg().div(&c1).unwrap();
        return vec![root.as_rational().unwrap().clone()];
    }
    if deg == 2 {
        // c0 s^2 + c1 st + c2 t^2, roots in u = t/s: c2 u^2 + c1 u + c0 = 0
        let a = core.coeff(2).as_rational().unwrap().clone();
        let b = core.coeff(1).as_rational().unwrap().clone();
        let c = core.coeff(0).as_rational().unwrap().clone();
        let disc = &b * &b - BigRational::from_integer(BigInt::from(4)) * &a * &c;
        if disc.is_negative() {
            return vec![];
        }
        if let Some(sq) = rational_sqrt(&disc) {
            let two_a = BigRational::from_integer(BigInt::from(2)) * &a;
            return vec![(-&b + &sq) / &two_a, (-&b - &sq) / &two_a];
        }
        return vec![];
    }
    // General degree: integer-root-theorem candidates.
    let mut lcm = BigInt::from(1);
    for c in core.coeffs() {
        lcm = lcm.lcm(c.as_rational().unwrap().denom());
    }
    let ints: Vec<BigInt> = core
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            r.numer() * (&lcm / r.denom())
        })
        .collect();
    let content = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let ints: Vec<BigInt> = ints.iter().map(|x| x / &content).collect();
    let lead = ints.last().unwrap().abs();
    let trail = ints.first().unwrap().abs();
    let dp = bounded_divisors(&trail);
    let dq = bounded_divisors(&lead);
    let mut cands = Vec::new();
    for p in &dp {
        for q in &dq {
            let r = BigRational::new(p.clone(), q.clone());
            cands.push(r.clone());
            cands.push(-r);
        }
    }
    cands.sort();
    cands.dedup();
    cands
}

fn rational_sqrt(r: &num_rational::BigRational) -> Option<num_rational::BigRational> {
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(num_rational::BigRational::new(sn, sd))
    } else {
        None
    }
}

fn bounded_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigInt::from(1)];
    if n.is_zero() {
        return divs;
    }
    let mut rem = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    let cap = BigInt::from(1_000_000u64);
    while &(&p * &p) <= &rem && p <= cap {
        let mut e = 0;
        while (&rem % &p).is_zero() {
            rem /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1;
    }
    if rem > BigInt::from(1) {
        primes.push((rem, 1));
    }
    for (p, e) in primes {
        let cur = divs.clone();
        let mut pk = BigInt::from(1);
        for _ in 0..e {
            pk = &pk * &p;
            for d in &cur {
                divs.push(d * &pk);
            }
        }
    }
    divs.sort();
    divs.dedup();
    divs
}

/// All r x r minors of a matrix of forms, in lexicographic order of
/// (row-tuple, column-tuple), expanded by cofactors in exact arithmetic.
pub fn minors(mat: &[Vec<Poly2>], r: usize) -> Result<Vec<Poly2>> {
    let rows = mat.len();
    let cols = if rows > 0 { mat[0].len() } else { 0 };
    if r == 0 || r > rows || r > cols {
        return Err(Error::MinorOutOfRange { r, rows, cols });
    }
    let row_sets = combinations(rows, r);
    let col_sets = combinations(cols, r);
    let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
    for rs in &row_sets {
        for cs in &col_sets {
            out.push(poly_det(mat, rs, cs));
        }
    }
    Ok(out)
}

fn poly_det(mat: &[Vec<Poly2>], rows: &[usize], cols: &[usize]) -> Poly2 {
    let field = mat[rows[0]][cols[0]].field();
    if rows.len() == 1 {
        return mat[rows[0]][cols[0]].clone();
    }
    let mut acc = Poly2::zero(field);
    let sub_rows = &rows[1..];
    for (idx, &c) in cols.iter().enumerate() {
        let entry = &mat[rows[0]][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&cc| cc != c)
            .collect();
        let sub = poly_det(mat, sub_rows, &rest);
        let term = entry.mul(&sub);
        let signed = if idx % 2 == 0 {
            term
        } else {
            term.scale(&field.from_i64(-1))
        };
        if acc.is_zero() {
            acc = signed;
        } else if !signed.is_zero() {
            acc = acc.add(&signed);
        }
    }
    acc
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(coeffs: &[i64]) -> Poly2 {
        Poly2::from_i64(Field::Q, coeffs)
    }

    #[test]
    fn gcd_of_monomials() {
        // gcd(s*t, t^2) = t
        let st = qp(&[0, 1, 0]);
        let t2 = qp(&[0, 0, 1]);
        let g = st.gcd(&t2).unwrap();
        assert_eq!(g, qp(&[0, 1]));
    }

    #[test]
    fn gcd_with_common_linear_factor() {
        // gcd(s^2 - t^2, s^2 - 2st + t^2) = s - t
        let f = qp(&[1, 0, -1]);
        let g = qp(&[1, -2, 1]);
        assert_eq!(f.gcd(&g).unwrap(), qp(&[1, -1]));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let f = qp(&[1, 0, 1]); // s^2 + t^2
        let g = qp(&[1, -1]); // s - t
        let got = f.gcd(&g).unwrap();
        assert!(got.is_constant() && got.coeff(0).is_one());
    }

    #[test]
    fn gcd_divides_both() {
        let f = qp(&[2, 3, -1, 4]);
        let g = qp(&[1, -1]);
        let prod_f = f.mul(&g);
        let prod_g = g.mul(&qp(&[5, 1]));
        let gg = prod_f.gcd(&prod_g).unwrap();
        assert!(prod_f.div_exact(&gg).is_ok());
        assert!(prod_g.div_exact(&gg).is_ok());
    }

    #[test]
    fn roots_of_monomial_product() {
        // s*t^2 -> (1:0) mult 1, (0:1) mult 2
        let f = qp(&[0, 0, 1, 0]); // degree 3: s^3*0 + s^2 t*0 + s t^2 *1 + t^3*0
        let r = f.projective_roots().unwrap();
        assert_eq!(r.residual_degree, 0);
        let mut map = std::collections::BTreeMap::new();
        for (pt, m) in &r.roots {
            map.insert(format!("{pt}"), *m);
        }
        assert_eq!(map.get("(1/1:0/1)"), Some(&1));
        assert_eq!(map.get("(0/1:1/1)"), Some(&2));
    }

    #[test]
    fn irreducible_over_q_has_residual_two() {
        let f = qp(&[1, 0, 1]); // s^2 + t^2
        let r = f.projective_roots().unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.residual_degree, 2);
    }

    #[test]
    fn splits_mod_5() {
        // s^2 + t^2 over F_5: (1:2) and (1:3), i.e. (2:1) and (3:1) up to scale.
        let f5 = Field::fp(5).unwrap();
        let f = Poly2::from_i64(f5, &[1, 0, 1]);
        let r = f.projective_roots().unwrap();
        assert_eq!(r.residual_degree, 0);
        let pts: Vec<String> = r.roots.iter().map(|(p, _)| format!("{p}")).collect();
        assert_eq!(pts, vec!["(1:2)", "(1:3)"]);
    }

    #[test]
    fn quadratic_rational_roots() {
        // (s - 2t)(s + 3t) = s^2 + st - 6t^2
        let f = qp(&[1, 1, -6]);
        let r = f.projective_roots().unwrap();
        assert_eq!(r.residual_degree, 0);
        assert_eq!(r.roots.len(), 2);
    }

    #[test]
    fn minors_of_symmetric_2x2() {
        let s = qp(&[1, 0]);
        let t = qp(&[0, 1]);
        let m = vec![vec![s.clone(), t.clone()], vec![t.clone(), s.clone()]];
        let out = minors(&m, 2).unwrap();
        assert_eq!(out, vec![qp(&[1, 0, -1])]); // s^2 - t^2
    }

    #[test]
    fn minors_r1_lists_entries() {
        let s = qp(&[1, 0]);
        let t = qp(&[0, 1]);
        let m = vec![vec![s.clone(), t.clone()]];
        let out = minors(&m, 1).unwrap();
        assert_eq!(out, vec![s, t]);
    }

    #[test]
    fn minors_of_catalecticant() {
        // [[s,t,0],[0,s,t]] -> {s^2, st, t^2}
        let s = qp(&[1, 0]);
        let t = qp(&[0, 1]);
        let z = Poly2::zero(Field::Q);
        let m = vec![
            vec![s.clone(), t.clone(), z.clone()],
            vec![z.clone(), s.clone(), t.clone()],
        ];
        let out = minors(&m, 2).unwrap();
        assert_eq!(out, vec![qp(&[1, 0, 0]), qp(&[0, 1, 0]), qp(&[0, 0, 1])]);
    }

    #[test]
    fn root_multiplicity_sum_bounded_by_degree() {
        let f = qp(&[1, -3, 3, -1]); // (s-t)^3
        let r = f.projective_roots().unwrap();
        assert_eq!(r.roots.len(), 1);
        assert_eq!(r.roots[0].1, 3);
        assert_eq!(r.residual_degree, 0);
    }
}
