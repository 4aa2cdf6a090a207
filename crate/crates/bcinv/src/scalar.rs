//! Field scalars: exact rationals and prime-field residues.
//!
//! Every scalar is stored in canonical form — rationals reduced with positive
//! denominator (`num_rational` maintains this), residues reduced into `[0, p)`.
//! Equality is therefore plain structural equality.

use crate::error::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// The scalar field a matrix ring is built over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    /// The rational numbers with arbitrary-precision arithmetic.
    Rational,
    /// The prime field F_p.
    Prime(u64),
}

impl FieldKind {
    /// Checked constructor for F_p; rejects non-primes.
    pub fn prime(p: u64) -> Result<Self, Error> {
        if is_prime(p) {
            Ok(FieldKind::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Rational(BigRational::zero()),
            FieldKind::Prime(p) => Scalar::Prime { p, value: 0 },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Rational(BigRational::one()),
            FieldKind::Prime(p) => Scalar::Prime { p, value: 1 % p },
        }
    }

    pub fn from_integer(self, i: i64) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(i))),
            FieldKind::Prime(p) => Scalar::Prime {
                p,
                value: i.rem_euclid(p as i64) as u64,
            },
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// Deterministic Miller-Rabin primality test. The fixed witness set decides
/// primality exactly for every `u64`, in O(log n) time even at the top of
/// the range.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// An element of a scalar field. Residues carry their modulus so values are
/// self-describing; mixing fields in arithmetic is a programming error and
/// panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { p: u64, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldKind {
        match self {
            Scalar::Rational(_) => FieldKind::Rational,
            Scalar::Prime { p, .. } => FieldKind::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { p: q, value: b }) => {
                assert_eq!(p, q, "scalar fields differ");
                Scalar::Prime {
                    p: *p,
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                }
            }
            _ => panic!("scalar fields differ"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { p: q, value: b }) => {
                assert_eq!(p, q, "scalar fields differ");
                Scalar::Prime {
                    p: *p,
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                }
            }
            _ => panic!("scalar fields differ"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { p, value } => Scalar::Prime {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(a.recip()))
                }
            }
            Scalar::Prime { p, value } => {
                mod_inverse(*value, *p).map(|v| Scalar::Prime { p: *p, value: v })
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", rational_to_string(r)),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Inverse of `a` mod prime `p` via the extended Euclidean algorithm.
fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus must be prime");
    Some(t0.rem_euclid(p as i128) as u64)
}

/// Canonical textual form of a rational: `"p"` for integers, `"p/q"` with
/// q > 1 otherwise, lowest terms, sign on the numerator.
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"` into a reduced rational. Accepts non-canonical
/// input like `"2/4"` or `"1/-2"` and normalizes; rejects a zero denominator.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = num_str
        .trim()
        .parse()
        .map_err(|_| Error::parse(format!("bad rational numerator in {s:?}")))?;
    let denom: BigInt = den_str
        .trim()
        .parse()
        .map_err(|_| Error::parse(format!("bad rational denominator in {s:?}")))?;
    if denom.is_zero() {
        return Err(Error::parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(5));
        assert!(is_prime(97));
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(91)); // 7 * 13
        assert!(is_prime(2_305_843_009_213_693_951)); // 2^61 - 1
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
                                                       // Strong pseudoprime to bases 2, 3, 5, and 7 (151 * 751 * 28351);
                                                       // only the larger witnesses expose it.
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldKind::prime(5).unwrap();
        let a = f.from_integer(3);
        let b = f.from_integer(4);
        assert_eq!(a.mul(&b), f.from_integer(2)); // 12 mod 5
        assert_eq!(a.add(&b), f.from_integer(2));
        assert_eq!(a.neg(), f.from_integer(2));
        assert_eq!(a.inv().unwrap(), f.from_integer(2)); // 3 * 2 = 6 = 1
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn rational_parse_and_canonical_form() {
        let half = parse_rational("1/2").unwrap();
        assert_eq!(parse_rational("2/4").unwrap(), half);
        assert_eq!(parse_rational("-1/-2").unwrap(), half);
        assert_eq!(rational_to_string(&half), "1/2");
        assert_eq!(rational_to_string(&parse_rational("1/-2").unwrap()), "-1/2");
        assert_eq!(rational_to_string(&parse_rational("7").unwrap()), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn negative_integers_reduce_into_range() {
        let f = FieldKind::prime(5).unwrap();
        assert_eq!(f.from_integer(-1), f.from_integer(4));
    }
}
