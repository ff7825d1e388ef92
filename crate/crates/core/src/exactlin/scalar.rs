//! Field elements: arbitrary-precision rationals or prime-field residues.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Descriptor of the base field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// The rationals.
    Q,
    /// The prime field F_p, p < 2^31.
    Fp(u64),
}

impl Field {
    /// Validates a prime-field descriptor. The modulus must be prime and
    /// below 2^31 so that products of residues fit in a u64.
    pub fn fp(p: u64) -> Result<Field> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::BadModulus(p));
        }
        Ok(Field::Fp(p))
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, Field::Fp(_))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Rat(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { val: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Rat(BigRational::one()),
            Field::Fp(p) => Scalar::Fp { val: 1, p: *p },
        }
    }

    /// Embeds a signed integer.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { val: m, p: *p }
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "Fp:{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut i = 37u64;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 2;
    }
    true
}

/// An exact field element. Rational values are kept reduced with a
/// positive denominator; prime-field values store their residue in
/// `[0, p)` together with the modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { val: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Scalar {
        assert!(den != 0);
        Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Panics on mixed fields: scalar arithmetic between values from
    /// different fields is a programming error. API boundaries validate
    /// field uniformity before arithmetic begins.
    fn check_same(&self, other: &Scalar) -> (u64, bool) {
        match (self, other) {
            (Scalar::Rat(_), Scalar::Rat(_)) => (0, false),
            (Scalar::Fp { p: p1, .. }, Scalar::Fp { p: p2, .. }) if p1 == p2 => (*p1, true),
            _ => panic!(
                "mixed-field arithmetic: {} vs {}",
                self.field(),
                other.field()
            ),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        let (p, fp) = self.check_same(other);
        if fp {
            let (a, b) = (self.fp_val(), other.fp_val());
            Scalar::Fp {
                val: (a + b) % p,
                p,
            }
        } else {
            Scalar::Rat(self.rat() + other.rat())
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        let (p, fp) = self.check_same(other);
        if fp {
            let (a, b) = (self.fp_val(), other.fp_val());
            Scalar::Fp {
                val: (a + p - b) % p,
                p,
            }
        } else {
            Scalar::Rat(self.rat() - other.rat())
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        let (p, fp) = self.check_same(other);
        if fp {
            let (a, b) = (self.fp_val(), other.fp_val());
            Scalar::Fp {
                val: (a * b) % p,
                p,
            }
        } else {
            Scalar::Rat(self.rat() * other.rat())
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (p, fp) = self.check_same(other);
        if fp {
            let inv = fp_inv(other.fp_val(), p);
            Ok(Scalar::Fp {
                val: (self.fp_val() * inv) % p,
                p,
            })
        } else {
            Ok(Scalar::Rat(self.rat() / other.rat()))
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Fp { val, p } => Scalar::Fp {
                val: (p - val) % p,
                p: *p,
            },
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        self.field().one().div(self)
    }

    fn rat(&self) -> &BigRational {
        match self {
            Scalar::Rat(r) => r,
            _ => unreachable!(),
        }
    }

    fn fp_val(&self) -> u64 {
        match self {
            Scalar::Fp { val, .. } => *val,
            _ => unreachable!(),
        }
    }

    /// The underlying rational, for callers that know the field is Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// The underlying residue, for callers that know the field is F_p.
    pub fn as_residue(&self) -> Option<u64> {
        match self {
            Scalar::Fp { val, .. } => Some(*val),
            _ => None,
        }
    }
}

/// Modular inverse by Fermat: p is prime, so a^(p-2) = a^(-1).
pub(crate) fn fp_inv(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverting zero mod {p}");
    fp_pow(a % p, p - 2, p)
}

pub(crate) fn fp_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

/// Parses the canonical text forms: "a/b" or a bare integer over Q,
/// a residue over F_p.
pub fn parse_scalar(s: &str, field: Field) -> Result<Scalar> {
    match field {
        Field::Q => {
            let (num, den) = match s.split_once('/') {
                Some((n, d)) => (n, d),
                None => (s, "1"),
            };
            let n: BigInt = num
                .parse()
                .map_err(|_| Error::InvalidTask(format!("bad rational {s:?}")))?;
            let d: BigInt = den
                .parse()
                .map_err(|_| Error::InvalidTask(format!("bad rational {s:?}")))?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Scalar::Rat(BigRational::new(n, d)))
        }
        Field::Fp(p) => {
            let v: i64 = s
                .parse()
                .map_err(|_| Error::InvalidTask(format!("bad residue {s:?}")))?;
            Ok(Scalar::Fp {
                val: v.rem_euclid(p as i64) as u64,
                p,
            })
        }
    }
}

/// Clears a rational vector to a primitive integer vector whose first
/// nonzero entry is positive. Prime-field vectors are scaled so the first
/// nonzero entry is 1. This is the canonical representative used for
/// projective points and kernel vectors.
pub fn canonicalize_vector(v: &mut [Scalar]) {
    if v.is_empty() {
        return;
    }
    match v[0].field() {
        Field::Q => {
            use num_integer::Integer;
            let mut lcm = BigInt::one();
            for x in v.iter() {
                let r = x.as_rational().unwrap();
                lcm = lcm.lcm(r.denom());
            }
            let mut gcd = BigInt::zero();
            for x in v.iter() {
                let r = x.as_rational().unwrap();
                let scaled = r.numer() * (&lcm / r.denom());
                gcd = gcd.gcd(&scaled);
            }
            if gcd.is_zero() {
                return;
            }
            let mut sign_fixed = false;
            let mut negate = false;
            for x in v.iter_mut() {
                let r = x.as_rational().unwrap();
                let mut scaled = r.numer() * (&lcm / r.denom()) / &gcd;
                if !sign_fixed && !scaled.is_zero() {
                    sign_fixed = true;
                    negate = scaled.is_negative();
                }
                if negate {
                    scaled = -scaled;
                }
                *x = Scalar::Rat(BigRational::from_integer(scaled));
            }
        }
        Field::Fp(_) => {
            let lead = v.iter().find(|x| !x.is_zero()).cloned();
            if let Some(l) = lead {
                let inv = l.inv().unwrap();
                for x in v.iter_mut() {
                    *x = x.mul(&inv);
                }
            }
        }
    }
}

/// Checks all entries share one field, returning it.
pub fn common_field<'a, I: IntoIterator<Item = &'a Scalar>>(entries: I) -> Result<Field> {
    let mut field = None;
    for e in entries {
        match field {
            None => field = Some(e.field()),
            Some(f) if f == e.field() => {}
            Some(f) => return Err(Error::MixedField(f.to_string(), e.field().to_string())),
        }
    }
    field.ok_or(Error::EmptyInput)
}
