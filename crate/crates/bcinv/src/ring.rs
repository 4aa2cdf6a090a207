//! The concrete rings the library computes in, behind one element type.
//!
//! Supported rings: `Z_n` (any n ≥ 1), the fields `Q` and `F_p`, and square
//! matrix rings over either field. Elements are kept in canonical form at all
//! times — residues reduced, rationals in lowest terms, prime-field scalars
//! reduced — so equality is plain structural equality.
//!
//! Finite rings (`Z_n` and `M_k(F_p)`) can be enumerated in a fixed canonical
//! order: residues ascending, matrices ordered lexicographically by their
//! row-major entry list. Every exhaustive search in the crate relies on this
//! order being stable.

use crate::error::Error;
use crate::linalg::Matrix;
use crate::scalar::{FieldKind, Scalar};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RingDescriptor {
    ZMod { n: u64 },
    Field(FieldKind),
    MatrixRing { base: FieldKind, dim: usize },
}

impl RingDescriptor {
    pub fn zmod(n: u64) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidModulus);
        }
        Ok(RingDescriptor::ZMod { n })
    }

    pub fn rationals() -> Self {
        RingDescriptor::Field(FieldKind::Rational)
    }

    pub fn prime_field(p: u64) -> Result<Self, Error> {
        Ok(RingDescriptor::Field(FieldKind::prime(p)?))
    }

    pub fn matrix_ring(base: FieldKind, dim: usize) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::InvalidDimension);
        }
        Ok(RingDescriptor::MatrixRing { base, dim })
    }

    pub fn is_finite(&self) -> bool {
        match self {
            RingDescriptor::ZMod { .. } => true,
            RingDescriptor::Field(_) => false,
            RingDescriptor::MatrixRing { base, .. } => matches!(base, FieldKind::Prime(_)),
        }
    }

    pub fn is_commutative(&self) -> bool {
        match self {
            RingDescriptor::ZMod { .. } | RingDescriptor::Field(_) => true,
            RingDescriptor::MatrixRing { dim, .. } => *dim == 1,
        }
    }

    /// Number of elements, or `None` for infinite rings. Sizes too large for
    /// u128 saturate; the enumeration caps reject them long before that
    /// matters.
    pub fn size(&self) -> Option<u128> {
        match self {
            RingDescriptor::ZMod { n } => Some(*n as u128),
            RingDescriptor::Field(_) => None,
            RingDescriptor::MatrixRing { base, dim } => match base {
                FieldKind::Rational => None,
                FieldKind::Prime(p) => Some(
                    (*p as u128)
                        .checked_pow((dim * dim) as u32)
                        .unwrap_or(u128::MAX),
                ),
            },
        }
    }

    pub fn zero(&self) -> RingElement {
        self.from_integer(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_integer(1)
    }

    /// The image of the integer `i` under the unique ring map from Z
    /// (diagonal embedding for matrix rings).
    pub fn from_integer(&self, i: i64) -> RingElement {
        let value = match self {
            RingDescriptor::ZMod { n } => Value::Residue(i.rem_euclid(*n as i64) as u64),
            RingDescriptor::Field(f) => Value::Scalar(f.from_integer(i)),
            RingDescriptor::MatrixRing { base, dim } => {
                let mut m = Matrix::zeros(*dim, *dim, *base);
                for k in 0..*dim {
                    m.set(k, k, base.from_integer(i));
                }
                Value::Matrix(m)
            }
        };
        RingElement { ring: *self, value }
    }

    /// Element at `index` in canonical enumeration order. For matrix rings
    /// the index is read base p with the top-left entry as the most
    /// significant digit, which makes ascending indices agree with row-major
    /// lexicographic order on the entries.
    pub fn element_at(&self, index: u128) -> Result<RingElement, Error> {
        let size = self
            .size()
            .ok_or_else(|| Error::NotFinite(self.to_string()))?;
        assert!(
            index < size,
            "element index {index} out of range for {self}"
        );
        let value = match self {
            RingDescriptor::ZMod { .. } => Value::Residue(index as u64),
            RingDescriptor::Field(_) => unreachable!("fields are not enumerable"),
            RingDescriptor::MatrixRing { base, dim } => {
                let p = match base {
                    FieldKind::Prime(p) => *p as u128,
                    FieldKind::Rational => unreachable!("rational matrices are not enumerable"),
                };
                let d = *dim;
                let mut digits = vec![0u64; d * d];
                let mut rest = index;
                for slot in digits.iter_mut().rev() {
                    *slot = (rest % p) as u64;
                    rest /= p;
                }
                Value::Matrix(Matrix::from_fn(d, d, *base, |i, j| {
                    base.from_integer(digits[i * d + j] as i64)
                }))
            }
        };
        Ok(RingElement { ring: *self, value })
    }

    /// Every element exactly once, in canonical order.
    pub fn enumerate_elements(&self) -> Result<ElementIter, Error> {
        if !self.is_finite() {
            return Err(Error::NotFinite(self.to_string()));
        }
        Ok(ElementIter {
            ring: *self,
            next: 0,
            size: self.size().expect("finite ring has a size"),
        })
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::ZMod { n } => write!(f, "Z_{n}"),
            RingDescriptor::Field(k) => write!(f, "{k}"),
            RingDescriptor::MatrixRing { base, dim } => write!(f, "M_{dim}({base})"),
        }
    }
}

pub struct ElementIter {
    ring: RingDescriptor,
    next: u128,
    size: u128,
}

impl Iterator for ElementIter {
    type Item = RingElement;

    fn next(&mut self) -> Option<RingElement> {
        if self.next >= self.size {
            return None;
        }
        let el = self
            .ring
            .element_at(self.next)
            .expect("index below size is valid");
        self.next += 1;
        Some(el)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.size - self.next) as usize;
        (left, Some(left))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Value {
    Residue(u64),
    Scalar(Scalar),
    Matrix(Matrix),
}

/// An element of one of the supported rings, always in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: RingDescriptor,
    value: Value,
}

impl RingElement {
    /// Wraps a raw value after checking it matches the descriptor's shape.
    /// Residues must already be reduced; use [`RingDescriptor::from_integer`]
    /// or the codec to build elements from unnormalized input.
    pub fn new(ring: RingDescriptor, value: Value) -> Result<Self, Error> {
        let ok = match (&ring, &value) {
            (RingDescriptor::ZMod { n }, Value::Residue(r)) => r < n,
            (RingDescriptor::Field(k), Value::Scalar(s)) => s.field() == *k,
            (RingDescriptor::MatrixRing { base, dim }, Value::Matrix(m)) => {
                m.field() == *base && m.rows() == *dim && m.cols() == *dim
            }
            _ => false,
        };
        if !ok {
            return Err(Error::parse(format!("value does not fit ring {ring}")));
        }
        Ok(RingElement { ring, value })
    }

    pub fn from_matrix(m: Matrix) -> RingElement {
        assert!(m.is_square(), "ring elements are square matrices");
        assert!(m.rows() > 0, "matrix ring dimension must be positive");
        let ring = RingDescriptor::MatrixRing {
            base: m.field(),
            dim: m.rows(),
        };
        RingElement {
            ring,
            value: Value::Matrix(m),
        }
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn as_residue(&self) -> u64 {
        match &self.value {
            Value::Residue(r) => *r,
            _ => panic!("element of {} is not a residue", self.ring),
        }
    }

    pub fn as_scalar(&self) -> &Scalar {
        match &self.value {
            Value::Scalar(s) => s,
            _ => panic!("element of {} is not a scalar", self.ring),
        }
    }

    pub fn as_matrix(&self) -> &Matrix {
        match &self.value {
            Value::Matrix(m) => m,
            _ => panic!("element of {} is not a matrix", self.ring),
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == self.ring.zero()
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring.one()
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    fn require_same_ring(&self, other: &RingElement) {
        assert_eq!(
            self.ring, other.ring,
            "ring mismatch: {} vs {}",
            self.ring, other.ring
        );
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        self.require_same_ring(other);
        let value = match (&self.value, &other.value) {
            (Value::Residue(x), Value::Residue(y)) => {
                let n = self.modulus();
                Value::Residue(((*x as u128 + *y as u128) % n as u128) as u64)
            }
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x.add(y)),
            (Value::Matrix(x), Value::Matrix(y)) => Value::Matrix(x.add(y)),
            _ => unreachable!("same ring implies same value shape"),
        };
        RingElement {
            ring: self.ring,
            value,
        }
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RingElement {
        let value = match &self.value {
            Value::Residue(x) => {
                let n = self.modulus();
                Value::Residue(if *x == 0 { 0 } else { n - x })
            }
            Value::Scalar(x) => Value::Scalar(x.neg()),
            Value::Matrix(x) => Value::Matrix(x.neg()),
        };
        RingElement {
            ring: self.ring,
            value,
        }
    }

    pub fn mul(&self, other: &RingElement) -> RingElement {
        self.require_same_ring(other);
        let value = match (&self.value, &other.value) {
            (Value::Residue(x), Value::Residue(y)) => {
                let n = self.modulus();
                Value::Residue(((*x as u128 * *y as u128) % n as u128) as u64)
            }
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x.mul(y)),
            (Value::Matrix(x), Value::Matrix(y)) => Value::Matrix(x.mul(y)),
            _ => unreachable!("same ring implies same value shape"),
        };
        RingElement {
            ring: self.ring,
            value,
        }
    }

    pub fn pow(&self, mut exp: u32) -> RingElement {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn checked_add(&self, other: &RingElement) -> Result<RingElement, Error> {
        self.checked_pair(other)?;
        Ok(self.add(other))
    }

    pub fn checked_sub(&self, other: &RingElement) -> Result<RingElement, Error> {
        self.checked_pair(other)?;
        Ok(self.sub(other))
    }

    pub fn checked_mul(&self, other: &RingElement) -> Result<RingElement, Error> {
        self.checked_pair(other)?;
        Ok(self.mul(other))
    }

    fn checked_pair(&self, other: &RingElement) -> Result<(), Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(())
    }

    fn modulus(&self) -> u64 {
        match self.ring {
            RingDescriptor::ZMod { n } => n,
            _ => panic!("element of {} has no modulus", self.ring),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Residue(r) => write!(f, "{r}"),
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Matrix(m) => write!(f, "{m}"),
        }
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.ring, self)
    }
}

/// Is `x ∈ aR`? For `Z_n` the right ideal generated by `a` is exactly the
/// set of multiples of gcd(a, n). For matrix rings, right multiples of `a`
/// are the matrices whose column space lies in the column space of `a`. In a
/// field every nonzero element generates the whole ring.
pub fn right_ideal_member(x: &RingElement, a: &RingElement) -> bool {
    assert_eq!(x.ring(), a.ring(), "ring mismatch in ideal membership");
    match (&x.value, &a.value) {
        (Value::Residue(xv), Value::Residue(av)) => {
            let n = x.modulus();
            let g = gcd(*av, n);
            xv % g == 0
        }
        (Value::Scalar(xv), Value::Scalar(av)) => !av.is_zero() || xv.is_zero(),
        (Value::Matrix(xm), Value::Matrix(am)) => am.solve_right(xm).is_some(),
        _ => unreachable!("same ring implies same value shape"),
    }
}

/// Is `x ∈ Ra`? Mirror of [`right_ideal_member`]; for matrices this is row
/// space containment.
pub fn left_ideal_member(x: &RingElement, a: &RingElement) -> bool {
    assert_eq!(x.ring(), a.ring(), "ring mismatch in ideal membership");
    match (&x.value, &a.value) {
        (Value::Matrix(xm), Value::Matrix(am)) => am.solve_left(xm).is_some(),
        _ => right_ideal_member(x, a),
    }
}

/// `aR ⊆ bR`, decided as `a ∈ bR`.
pub fn right_ideal_subset(a: &RingElement, b: &RingElement) -> bool {
    right_ideal_member(a, b)
}

/// `Ra ⊆ Rb`, decided as `a ∈ Rb`.
pub fn left_ideal_subset(a: &RingElement, b: &RingElement) -> bool {
    left_ideal_member(a, b)
}

pub fn same_right_ideal(a: &RingElement, b: &RingElement) -> bool {
    right_ideal_subset(a, b) && right_ideal_subset(b, a)
}

pub fn same_left_ideal(a: &RingElement, b: &RingElement) -> bool {
    left_ideal_subset(a, b) && left_ideal_subset(b, a)
}

fn gcd(a: u64, n: u64) -> u64 {
    num_integer::gcd(a, n)
}
