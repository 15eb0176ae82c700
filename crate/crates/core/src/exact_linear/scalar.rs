use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinearError;

/// The base field. `Prime(p)` is GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

/// A field together with the small-characteristic override.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub field: Field,
    small_char: bool,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec { field: Field::Rationals, small_char: false }
    }

    /// GF(p). Characteristic 2 and 3 are refused unless `allow_small_char` is set.
    pub fn prime(p: u64, allow_small_char: bool) -> Result<Self, LinearError> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(LinearError::NotPrime(p));
        }
        if (p == 2 || p == 3) && !allow_small_char {
            return Err(LinearError::SmallCharacteristic(p));
        }
        Ok(FieldSpec { field: Field::Prime(p), small_char: p == 2 || p == 3 })
    }

    /// False for GF(2) and GF(3).
    pub fn conforming(&self) -> bool {
        !self.small_char
    }

    /// Parses `q`, `Q`, `gf5`, `GF(5)`.
    pub fn parse(s: &str, allow_small_char: bool) -> Result<Self, LinearError> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "rationals" {
            return Ok(Self::rationals());
        }
        let digits = t
            .strip_prefix("gf")
            .map(|r| r.trim_start_matches('(').trim_end_matches(')'))
            .ok_or_else(|| LinearError::BadField(s.to_string()))?;
        let p: u64 = digits.parse().map_err(|_| LinearError::BadField(s.to_string()))?;
        Self::prime(p, allow_small_char)
    }
}

impl Field {
    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp { v: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Fp { v: n.rem_euclid(p as i64) as u64, p },
        }
    }

    pub fn ratio(self, n: i64, d: i64) -> Result<Scalar, LinearError> {
        self.int(n).div(&self.int(d))
    }

    /// Parses "3", "-2", "3/4". In GF(p) a fraction means n·d⁻¹.
    pub fn parse(self, s: &str) -> Result<Scalar, LinearError> {
        let bad = || LinearError::BadScalar(s.to_string());
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s.trim(), None),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = match d {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(LinearError::DivisionByZero);
        }
        match self {
            Field::Rationals => Ok(Scalar::Q(BigRational::new(n, d))),
            Field::Prime(p) => {
                let red = |x: &BigInt| {
                    let m = BigInt::from(p);
                    (((x % &m) + &m) % &m).to_u64().unwrap()
                };
                let (nv, dv) = (red(&n), red(&d));
                if dv == 0 {
                    return Err(LinearError::DivisionByZero);
                }
                Scalar::Fp { v: nv, p }.div(&Scalar::Fp { v: dv, p })
            }
        }
    }

    /// Number of elements, `None` for Q.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(p),
        }
    }

    /// The element with residue `i`; only meaningful for GF(p).
    pub fn element(self, i: u64) -> Scalar {
        match self {
            Field::Rationals => self.int(i as i64),
            Field::Prime(p) => Scalar::Fp { v: i % p, p },
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// An exact field element in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar, LinearError> {
        if self.is_zero() {
            return Err(LinearError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { v, p } => Scalar::Fp { v: pow_mod(*v, p - 2, *p), p: *p },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, LinearError> {
        Ok(self * &other.inv()?)
    }

    /// Residue for GF(p) elements.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Fp { v, .. } => Some(*v),
            Scalar::Q(_) => None,
        }
    }

    /// Total order used for canonical serialization: numeric for Q, residue for GF(p).
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => a.cmp(b),
            (Scalar::Fp { v: a, .. }, Scalar::Fp { v: b, .. }) => a.cmp(b),
            (a, b) => a.field().cmp(&b.field()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => {
                Scalar::Fp { v: (a + b) % p, p: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => {
                Scalar::Fp { v: (a + p - b) % p, p: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => {
                Scalar::Fp { v: a * b % p, p: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp { v: (p - v) % p, p: *p },
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Fp { v, p }, Scalar::Fp { v: b, p: q }) if p == q => *v = (*v + b) % *p,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl Scalar {
    /// Sign of a rational, 0/1 otherwise. Used only for display decisions.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum() {
        let q = Field::Rationals;
        let s = q.ratio(1, 2).unwrap() + q.ratio(1, 3).unwrap();
        assert_eq!(s.to_string(), "5/6");
    }

    #[test]
    fn gf5_inverse_and_sum() {
        let f = Field::Prime(5);
        assert_eq!(f.int(2).inv().unwrap(), f.int(3));
        assert_eq!(f.int(4) + f.int(4), f.int(3));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(matches!(Field::Prime(7).zero().inv(), Err(LinearError::DivisionByZero)));
        assert!(Field::Rationals.zero().inv().is_err());
    }

    #[test]
    fn parse_forms() {
        let f = Field::Prime(5);
        assert_eq!(f.parse("3/4").unwrap(), f.int(3).div(&f.int(4)).unwrap());
        assert_eq!(f.parse("-1").unwrap(), f.int(4));
        assert_eq!(Field::Rationals.parse("6/8").unwrap().to_string(), "3/4");
        assert!(Field::Rationals.parse("x").is_err());
        assert!(f.parse("1/5").is_err());
    }

    #[test]
    fn small_characteristic_needs_override() {
        assert!(FieldSpec::prime(3, false).is_err());
        let f = FieldSpec::prime(3, true).unwrap();
        assert!(!f.conforming());
        assert!(FieldSpec::prime(5, false).unwrap().conforming());
        assert!(FieldSpec::prime(9, true).is_err());
        assert_eq!(FieldSpec::parse("gf7", false).unwrap().field, Field::Prime(7));
        assert_eq!(FieldSpec::parse("q", false).unwrap().field, Field::Rationals);
    }
}
