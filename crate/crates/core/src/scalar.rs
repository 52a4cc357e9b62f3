//! Exact scalars: big rationals and the quadratic field Q(√5).
//!
//! Text forms are `p/q` for rationals and `p/q+r/s*sqrt5` for elements of
//! Q(√5); [`core::str::FromStr`] accepts what [`core::fmt::Display`] prints
//! (plus bare integers and a bare rational for `b = 0`).

use alloc::format;
use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact field element used for root coordinates.
pub trait Scalar:
    Clone
    + Eq
    + Ord
    + fmt::Debug
    + fmt::Display
    + FromStr<Err = Error>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_integer(value: i64) -> Self;
    fn from_rational(value: Rational) -> Self;
    fn is_zero(&self) -> bool;
    /// Sign relative to zero.
    fn signum(&self) -> Ordering;
    fn inv(&self) -> Result<Self>;

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * &rhs.inv()?)
    }
}

/// An arbitrary-precision rational in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_int(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

/// An element `a + b·√5` of Q(√5).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadExt { a, b }
    }

    /// √5.
    pub fn sqrt5() -> Self {
        QuadExt::new(Rational::zero(), Rational::one())
    }

    /// The golden ratio (1 + √5)/2.
    pub fn phi() -> Self {
        let half = Rational::new(1, 2).expect("nonzero denominator");
        QuadExt::new(half.clone(), half)
    }

    /// The field automorphism √5 ↦ −√5.
    pub fn galois(&self) -> Self {
        QuadExt::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² − 5b²`; zero only at zero.
    pub fn norm(&self) -> Rational {
        let five = Rational::from_int(5);
        self.a.clone() * &self.a - five * &self.b * &self.b
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn from_integer(value: i64) -> Self {
        Rational::from_int(value)
    }

    fn from_rational(value: Rational) -> Self {
        value
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn signum(&self) -> Ordering {
        if self.0.is_positive() {
            Ordering::Greater
        } else if self.0.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }
}

impl Scalar for QuadExt {
    fn zero() -> Self {
        QuadExt::new(Rational::zero(), Rational::zero())
    }

    fn one() -> Self {
        QuadExt::new(Rational::one(), Rational::zero())
    }

    fn from_integer(value: i64) -> Self {
        QuadExt::new(Rational::from_int(value), Rational::zero())
    }

    fn from_rational(value: Rational) -> Self {
        QuadExt::new(value, Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn signum(&self) -> Ordering {
        let (sa, sb) = (self.a.signum(), self.b.signum());
        match (sa, sb) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (x, y) if x == y => x,
            // Opposite signs: the larger of a² and 5b² wins; they never tie.
            _ => {
                let a2 = self.a.clone() * &self.a;
                let b2 = Rational::from_int(5) * &self.b * &self.b;
                if a2 > b2 {
                    sa
                } else {
                    sb
                }
            }
        }
    }

    fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ninv = n.inv()?;
        Ok(QuadExt::new(
            self.a.clone() * &ninv,
            -(self.b.clone() * &ninv),
        ))
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other).signum()
    }
}

macro_rules! forward_binops {
    ($ty:ty, $($trait:ident :: $method:ident => $body:expr),* $(,)?) => {
        $(
            impl $trait for $ty {
                type Output = $ty;
                fn $method(self, rhs: $ty) -> $ty {
                    let f: fn(&$ty, &$ty) -> $ty = $body;
                    f(&self, &rhs)
                }
            }
            impl<'a> $trait<&'a $ty> for $ty {
                type Output = $ty;
                fn $method(self, rhs: &'a $ty) -> $ty {
                    let f: fn(&$ty, &$ty) -> $ty = $body;
                    f(&self, rhs)
                }
            }
            impl<'a, 'b> $trait<&'b $ty> for &'a $ty {
                type Output = $ty;
                fn $method(self, rhs: &'b $ty) -> $ty {
                    let f: fn(&$ty, &$ty) -> $ty = $body;
                    f(self, rhs)
                }
            }
        )*
    };
}

forward_binops!(Rational,
    Add::add => |x, y| Rational(&x.0 + &y.0),
    Sub::sub => |x, y| Rational(&x.0 - &y.0),
    Mul::mul => |x, y| Rational(&x.0 * &y.0),
);

forward_binops!(QuadExt,
    Add::add => |x, y| QuadExt::new(&x.a + &y.a, &x.b + &y.b),
    Sub::sub => |x, y| QuadExt::new(&x.a - &y.a, &x.b - &y.b),
    // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
    Mul::mul => |x, y| QuadExt::new(
        &x.a * &y.a + Rational::from_int(5) * &x.b * &y.b,
        &x.a * &y.b + &x.b * &y.a,
    ),
);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-self.a, -self.b)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.signum() == Ordering::Less {
            write!(f, "{}{}*sqrt5", self.a, self.b)
        } else {
            write!(f, "{}+{}*sqrt5", self.a, self.b)
        }
    }
}

fn parse_int(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return Err(Error::Parse(format!("invalid integer {s:?}")));
    }
    BigInt::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Rational::new(parse_int(n)?, d)
            }
            None => Ok(Rational::from_int(parse_int(s)?)),
        }
    }
}

impl FromStr for QuadExt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(body) = s.strip_suffix("*sqrt5") else {
            return Ok(QuadExt::from_rational(s.parse()?));
        };
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(|| Error::Parse(format!("missing rational part in {s:?}")))?;
        let (a, rest) = body.split_at(split);
        let b = rest.strip_prefix('+').unwrap_or(rest);
        let a = a.strip_suffix('+').unwrap_or(a);
        Ok(QuadExt::new(a.parse()?, b.parse()?))
    }
}

/// Scales a rational vector to a primitive integer vector (same line, same
/// sign pattern).
pub fn primitive_integer_vector(v: &[Rational]) -> alloc::vec::Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: alloc::vec::Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(q(2, -4), q(-1, 2));
        assert_eq!(q(0, 7).to_string(), "0/1");
    }

    #[test]
    fn golden_ratio_squares_to_phi_plus_one() {
        let phi = QuadExt::phi();
        let sq = phi.clone() * &phi;
        assert_eq!(sq, phi.clone() + QuadExt::one());
        assert_eq!(sq, QuadExt::new(q(3, 2), q(1, 2)));
    }

    #[test]
    fn inverse_of_sqrt5() {
        assert_eq!(
            QuadExt::sqrt5().inv().unwrap(),
            QuadExt::new(q(0, 1), q(1, 5))
        );
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Rational::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(QuadExt::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(
            q(1, 1).checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        );
        assert!(Rational::new(1, 0).is_err());
        assert!("3/0".parse::<Rational>().is_err());
    }

    #[test]
    fn galois_of_phi() {
        let g = QuadExt::phi().galois();
        assert_eq!(g, QuadExt::new(q(1, 2), q(-1, 2)));
        assert_eq!(g.galois(), QuadExt::phi());
    }

    #[test]
    fn sign_of_mixed_terms() {
        // 2 - √5 < 0, 3 - √5 > 0, -1 + φ > 0
        assert_eq!(QuadExt::new(q(2, 1), q(-1, 1)).signum(), Ordering::Less);
        assert_eq!(QuadExt::new(q(3, 1), q(-1, 1)).signum(), Ordering::Greater);
        assert!(QuadExt::phi() > QuadExt::one());
        assert!(QuadExt::phi().galois() < QuadExt::zero());
    }

    #[test]
    fn text_forms() {
        let x = QuadExt::new(q(-1, 2), q(-3, 4));
        assert_eq!(x.to_string(), "-1/2-3/4*sqrt5");
        assert_eq!(x.to_string().parse::<QuadExt>().unwrap(), x);
        assert_eq!("1/2+1/2*sqrt5".parse::<QuadExt>().unwrap(), QuadExt::phi());
        assert_eq!("3".parse::<QuadExt>().unwrap(), QuadExt::from_integer(3));
        assert_eq!("-6/4".parse::<Rational>().unwrap(), q(-3, 2));
        assert!("1/2+*sqrt5".parse::<QuadExt>().is_err());
        assert!("abc".parse::<Rational>().is_err());
    }

    #[test]
    fn primitive_vectors() {
        let v = [q(1, 2), q(-1, 2), q(0, 1), q(3, 2)];
        let p = primitive_integer_vector(&v);
        assert_eq!(p, [1, -1, 0, 3].map(BigInt::from));
        let w = [q(2, 1), q(4, 1)];
        assert_eq!(primitive_integer_vector(&w), [1, 2].map(BigInt::from));
    }
}
