//! Generalized inverses: inner, group, the (b,c)-inverse by two independent
//! routes, and the named special cases (inverse along an element, Bott–Duffin,
//! image-kernel, (p,q)-outer).
//!
//! The defining system of the (b,c)-inverse of `a` is
//!
//! ```text
//! y ∈ bRy,   y ∈ yRc,   yab = b,   cay = c
//! ```
//!
//! and a solution, when it exists, is unique. Two facts make it computable:
//! with inner inverses b⁻ and c⁻ the memberships become the linear equations
//! `y = bb⁻y` and `y = yc⁻c`, so over a matrix ring the whole system is
//! linear in the entries of `y`; and any element `w` with `wR = bR`,
//! `Rw = Rc` recovers the inverse through group inverses as `w(aw)^#`. The
//! linear/enumerative route is the authoritative decision procedure; the
//! group route is a verified-candidate cross-check.
//!
//! Scalar fields are handled by embedding into the 1x1 matrix ring, so every
//! code path below deals with just residues and matrices.

use crate::error::Error;
use crate::linalg::Matrix;
use crate::ring::{
    left_ideal_member, left_ideal_subset, right_ideal_member, right_ideal_subset, same_left_ideal,
    same_right_ideal, RingDescriptor, RingElement, Value,
};
use crate::scalar::{FieldKind, Scalar};
use std::fmt;

/// Why a (b,c)-inverse computation reported nonexistence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NoInverseReason {
    BNotRegular,
    CNotRegular,
    LinearSystemInconsistent,
    GroupInverseMissing,
    RankMismatch,
    NoWitness,
}

impl NoInverseReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            NoInverseReason::BNotRegular => "b-not-regular",
            NoInverseReason::CNotRegular => "c-not-regular",
            NoInverseReason::LinearSystemInconsistent => "linear-system-inconsistent",
            NoInverseReason::GroupInverseMissing => "group-inverse-missing",
            NoInverseReason::RankMismatch => "rank-mismatch",
            NoInverseReason::NoWitness => "no-witness",
        }
    }
}

impl fmt::Display for NoInverseReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a (b,c)-inverse computation. An `Exists` value has passed
/// [`verify_bc_axioms`] before being returned.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BCResult {
    Exists(RingElement),
    NotExists(NoInverseReason),
}

impl BCResult {
    pub fn exists(&self) -> Option<&RingElement> {
        match self {
            BCResult::Exists(y) => Some(y),
            BCResult::NotExists(_) => None,
        }
    }

    pub fn into_exists(self) -> Option<RingElement> {
        match self {
            BCResult::Exists(y) => Some(y),
            BCResult::NotExists(_) => None,
        }
    }
}

/// A (p,q)-outer inverse together with its reflexivity flag (`aya = a`),
/// which distinguishes a^(2) from a^(1,2). The flag is set only on existence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PqOuter {
    pub result: BCResult,
    pub reflexive: Option<bool>,
}

fn is_field(x: &RingElement) -> bool {
    matches!(x.ring(), RingDescriptor::Field(_))
}

fn embed(x: &RingElement) -> RingElement {
    let s = x.as_scalar();
    RingElement::from_matrix(Matrix::new(1, 1, s.field(), vec![s.clone()]))
}

fn unembed(x: &RingElement) -> RingElement {
    let m = x.as_matrix();
    RingElement::new(
        RingDescriptor::Field(m.field()),
        Value::Scalar(m.get(0, 0).clone()),
    )
    .expect("1x1 matrix entry fits its scalar field")
}

fn unembed_result(res: BCResult) -> BCResult {
    match res {
        BCResult::Exists(y) => BCResult::Exists(unembed(&y)),
        other => other,
    }
}

/// A deterministic inner inverse (`aya = a`) of `a`, or `None` when `a` is
/// not regular. Finite rings take the first witness in canonical order;
/// matrix rings build one from a rank factorization (every matrix over a
/// field is regular).
pub fn inner_inverse(a: &RingElement) -> Option<RingElement> {
    match a.ring() {
        RingDescriptor::ZMod { .. } => a
            .ring()
            .enumerate_elements()
            .expect("Z_n is finite")
            .find(|y| a.mul(y).mul(a) == *a),
        RingDescriptor::Field(_) => inner_inverse(&embed(a)).map(|y| unembed(&y)),
        RingDescriptor::MatrixRing { .. } => Some(RingElement::from_matrix(matrix_inner_inverse(
            a.as_matrix(),
        ))),
    }
}

fn matrix_inner_inverse(a: &Matrix) -> Matrix {
    let f = a.rank_factorization();
    let id_r = Matrix::identity(f.rank(), a.field());
    // right has full row rank and left full column rank, so both one-sided
    // inverses exist; the free-variable convention keeps them deterministic.
    let right_inv = f.right.solve_right(&id_r).expect("full row rank");
    let left_inv = f.left.solve_left(&id_r).expect("full column rank");
    let y = right_inv.mul(&left_inv);
    debug_assert_eq!(a.mul(&y).mul(a), *a);
    y
}

/// The group inverse of `a` (`aya = a`, `yay = y`, `ay = ya`), or `None`.
pub fn group_inverse(a: &RingElement) -> Option<RingElement> {
    match a.ring() {
        RingDescriptor::ZMod { .. } => {
            let witnesses: Vec<_> = a
                .ring()
                .enumerate_elements()
                .expect("Z_n is finite")
                .filter(|y| a.mul(y).mul(a) == *a && y.mul(a).mul(y) == *y && a.mul(y) == y.mul(a))
                .collect();
            assert!(witnesses.len() <= 1, "group inverse must be unique");
            witnesses.into_iter().next()
        }
        RingDescriptor::Field(_) => group_inverse(&embed(a)).map(|y| unembed(&y)),
        RingDescriptor::MatrixRing { .. } => {
            a.as_matrix().group_inverse().map(RingElement::from_matrix)
        }
    }
}

/// Checks the four defining conditions of the (b,c)-inverse on a candidate.
///
/// `y ∈ bRy` is decided by enumerating the middle factor on finite rings. On
/// matrix rings every element is regular, so `y ∈ bRy` collapses to column
/// space containment `y ∈ bR` (take the middle factor b⁻), and `y ∈ yRc` to
/// row space containment.
pub fn verify_bc_axioms(
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
    y: &RingElement,
) -> bool {
    if is_field(a) {
        return verify_bc_axioms(&embed(a), &embed(b), &embed(c), &embed(y));
    }
    if y.mul(a).mul(b) != *b || c.mul(a).mul(y) != *c {
        return false;
    }
    match a.ring() {
        RingDescriptor::ZMod { .. } => {
            let all: Vec<_> = a
                .ring()
                .enumerate_elements()
                .expect("Z_n is finite")
                .collect();
            all.iter().any(|r| b.mul(r).mul(y) == *y) && all.iter().any(|r| y.mul(r).mul(c) == *y)
        }
        RingDescriptor::MatrixRing { .. } => right_ideal_member(y, b) && left_ideal_member(y, c),
        RingDescriptor::Field(_) => unreachable!("fields were embedded above"),
    }
}

/// Equation system `A·x = rhs` whose unknown is a dim x dim matrix flattened
/// row-major. Equations are added as left or right multiplications.
struct MatrixSystem {
    field: FieldKind,
    dim: usize,
    coeffs: Vec<Scalar>,
    rhs: Vec<Scalar>,
    rows: usize,
}

impl MatrixSystem {
    fn new(field: FieldKind, dim: usize) -> Self {
        MatrixSystem {
            field,
            dim,
            coeffs: Vec::new(),
            rhs: Vec::new(),
            rows: 0,
        }
    }

    /// Adds the dim² scalar equations of `l · y = t`.
    fn left_mul_eq(&mut self, l: &Matrix, t: &Matrix) {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for m in 0..d {
                        self.coeffs.push(if m == j {
                            l.get(i, k).clone()
                        } else {
                            self.field.zero()
                        });
                    }
                }
                self.rhs.push(t.get(i, j).clone());
                self.rows += 1;
            }
        }
    }

    /// Adds the dim² scalar equations of `y · r = t`.
    fn right_mul_eq(&mut self, r: &Matrix, t: &Matrix) {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for m in 0..d {
                    for k in 0..d {
                        self.coeffs.push(if m == i {
                            r.get(k, j).clone()
                        } else {
                            self.field.zero()
                        });
                    }
                }
                self.rhs.push(t.get(i, j).clone());
                self.rows += 1;
            }
        }
    }

    /// Solves the accumulated system. The boolean reports whether the
    /// solution is unique (coefficient matrix has full column rank).
    fn solve(self) -> Option<(Matrix, bool)> {
        let d = self.dim;
        let a = Matrix::new(self.rows, d * d, self.field, self.coeffs);
        let rhs = Matrix::new(self.rows, 1, self.field, self.rhs);
        let r = a.rref();
        let c = r.transform.mul(&rhs);
        for i in r.rank..self.rows {
            if !c.get(i, 0).is_zero() {
                return None;
            }
        }
        let mut flat = vec![self.field.zero(); d * d];
        for (i, &pivot_col) in r.pivots.iter().enumerate() {
            flat[pivot_col] = c.get(i, 0).clone();
        }
        let unique = r.rank == d * d;
        let y = Matrix::from_fn(d, d, self.field, |i, j| flat[i * d + j].clone());
        Some((y, unique))
    }
}

/// The (b,c)-inverse of `a` by the linear route: fix inner inverses b⁻, c⁻,
/// then solve `y = bb⁻y`, `y = yc⁻c`, `yab = b`, `cay = c` — a linear system
/// in `y` whose every solution is the (b,c)-inverse. This is the
/// authoritative existence decision on the supported rings.
pub fn bc_inverse_linear(a: &RingElement, b: &RingElement, c: &RingElement) -> BCResult {
    if is_field(a) {
        return unembed_result(bc_inverse_linear(&embed(a), &embed(b), &embed(c)));
    }
    let Some(b_inner) = inner_inverse(b) else {
        return BCResult::NotExists(NoInverseReason::BNotRegular);
    };
    let Some(c_inner) = inner_inverse(c) else {
        return BCResult::NotExists(NoInverseReason::CNotRegular);
    };
    bc_inverse_linear_with(a, b, c, &b_inner, &c_inner)
}

/// Same as [`bc_inverse_linear`] but with caller-chosen inner inverses. The
/// result provably does not depend on the choice; tests exercise that.
pub fn bc_inverse_linear_with(
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
    b_inner: &RingElement,
    c_inner: &RingElement,
) -> BCResult {
    if is_field(a) {
        return unembed_result(bc_inverse_linear_with(
            &embed(a),
            &embed(b),
            &embed(c),
            &embed(b_inner),
            &embed(c_inner),
        ));
    }
    assert_eq!(b.mul(b_inner).mul(b), *b, "b_inner is not an inner inverse");
    assert_eq!(c.mul(c_inner).mul(c), *c, "c_inner is not an inner inverse");
    match a.ring() {
        RingDescriptor::ZMod { .. } => {
            let bb = b.mul(b_inner);
            let cc = c_inner.mul(c);
            let witnesses: Vec<_> = a
                .ring()
                .enumerate_elements()
                .expect("Z_n is finite")
                .filter(|y| {
                    bb.mul(y) == *y
                        && y.mul(&cc) == *y
                        && y.mul(a).mul(b) == *b
                        && c.mul(a).mul(y) == *c
                })
                .collect();
            assert!(witnesses.len() <= 1, "(b,c)-inverse must be unique");
            match witnesses.into_iter().next() {
                Some(y) => {
                    assert!(verify_bc_axioms(a, b, c, &y));
                    BCResult::Exists(y)
                }
                None => BCResult::NotExists(NoInverseReason::NoWitness),
            }
        }
        RingDescriptor::MatrixRing { base, dim } => {
            let id = Matrix::identity(dim, base);
            let am = a.as_matrix();
            let bm = b.as_matrix();
            let cm = c.as_matrix();
            let mut sys = MatrixSystem::new(base, dim);
            // (1 - bb⁻)·y = 0 and y·(1 - c⁻c) = 0 encode the memberships.
            sys.left_mul_eq(
                &id.sub(&bm.mul(b_inner.as_matrix())),
                &Matrix::zeros(dim, dim, base),
            );
            sys.right_mul_eq(
                &id.sub(&c_inner.as_matrix().mul(cm)),
                &Matrix::zeros(dim, dim, base),
            );
            sys.right_mul_eq(&am.mul(bm), bm);
            sys.left_mul_eq(&cm.mul(am), cm);
            match sys.solve() {
                None => BCResult::NotExists(NoInverseReason::LinearSystemInconsistent),
                Some((ym, unique)) => {
                    // Uniqueness of the (b,c)-inverse forces a
                    // zero-dimensional solution space whenever the system is
                    // consistent.
                    assert!(unique, "(b,c)-inverse solution space must be a point");
                    let y = RingElement::from_matrix(ym);
                    assert!(verify_bc_axioms(a, b, c, &y));
                    BCResult::Exists(y)
                }
            }
        }
        RingDescriptor::Field(_) => unreachable!("fields were embedded above"),
    }
}

/// The authoritative (b,c)-inverse entry point.
pub fn bc_inverse(a: &RingElement, b: &RingElement, c: &RingElement) -> BCResult {
    bc_inverse_linear(a, b, c)
}

/// An element `w` with `wR = bR` and `Rw = Rc`, when one exists. Matrix
/// rings build it from rank factorizations b = B₁B₂, c = C₁C₂ as w = B₁C₂
/// (so `w = b` exactly when `b = c`); ranks must agree. Finite rings take
/// the first element in canonical order with the two ideal equalities.
pub fn make_w(b: &RingElement, c: &RingElement) -> Option<RingElement> {
    if is_field(b) {
        return make_w(&embed(b), &embed(c)).map(|w| unembed(&w));
    }
    match b.ring() {
        RingDescriptor::ZMod { .. } => b
            .ring()
            .enumerate_elements()
            .expect("Z_n is finite")
            .find(|w| same_right_ideal(w, b) && same_left_ideal(w, c)),
        RingDescriptor::MatrixRing { .. } => {
            let bf = b.as_matrix().rank_factorization();
            let cf = c.as_matrix().rank_factorization();
            if bf.rank() != cf.rank() {
                return None;
            }
            let w = RingElement::from_matrix(bf.left.mul(&cf.right));
            debug_assert!(same_right_ideal(&w, b) && same_left_ideal(&w, c));
            Some(w)
        }
        RingDescriptor::Field(_) => unreachable!("fields were embedded above"),
    }
}

/// The (b,c)-inverse through the group-inverse construction: with
/// `w = make_w(b, c)`, the candidate is `w(aw)^#`, verified against the
/// definition before being returned. Nonexistence answers are advisory
/// (the construction is sufficient, not complete); [`bc_inverse`] decides.
pub fn bc_inverse_via_group(a: &RingElement, b: &RingElement, c: &RingElement) -> BCResult {
    if is_field(a) {
        return unembed_result(bc_inverse_via_group(&embed(a), &embed(b), &embed(c)));
    }
    let Some(w) = make_w(b, c) else {
        return BCResult::NotExists(NoInverseReason::RankMismatch);
    };
    let aw = a.mul(&w);
    let Some(aw_sharp) = group_inverse(&aw) else {
        return BCResult::NotExists(NoInverseReason::GroupInverseMissing);
    };
    let y = w.mul(&aw_sharp);
    if !verify_bc_axioms(a, b, c, &y) {
        return BCResult::NotExists(NoInverseReason::NoWitness);
    }
    // Once y is verified the companion identities are theorems; check them.
    let wa = w.mul(a);
    let wa_sharp = group_inverse(&wa).expect("wa is group invertible alongside aw");
    assert_eq!(y, wa_sharp.mul(&w));
    assert_eq!(w, y.mul(a).mul(&w));
    assert_eq!(w, w.mul(a).mul(&y));
    BCResult::Exists(y)
}

/// The inverse of `a` along `d`: the (d,d)-inverse, with its characteristic
/// identities re-checked on success (`yad = d = day`, `yR ⊆ dR`, `Ry ⊆ Rd`).
pub fn mary_inverse(a: &RingElement, d: &RingElement) -> BCResult {
    let res = bc_inverse(a, d, d);
    if let BCResult::Exists(y) = &res {
        assert_eq!(y.mul(a).mul(d), *d);
        assert_eq!(d.mul(a).mul(y), *d);
        assert!(right_ideal_subset(y, d));
        assert!(left_ideal_subset(y, d));
    }
    res
}

/// The Bott–Duffin (e,f)-inverse for idempotents e, f: the unique y with
/// `y = ey = yf`, `yae = e`, `fay = f`. This is exactly the (e,f)-inverse,
/// so the computation delegates and then re-checks the displayed form.
pub fn bott_duffin_ef(
    a: &RingElement,
    e: &RingElement,
    f: &RingElement,
) -> Result<BCResult, Error> {
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent { name: "e" });
    }
    if !f.is_idempotent() {
        return Err(Error::NotIdempotent { name: "f" });
    }
    let res = bc_inverse(a, e, f);
    if let BCResult::Exists(y) = &res {
        assert_eq!(*y, e.mul(y));
        assert_eq!(*y, y.mul(f));
        assert_eq!(y.mul(a).mul(e), *e);
        assert_eq!(f.mul(a).mul(y), *f);
    }
    Ok(res)
}

/// The image-kernel (e,f)-inverse: the Bott–Duffin (e, 1-f)-inverse.
pub fn image_kernel_inverse(
    a: &RingElement,
    e: &RingElement,
    f: &RingElement,
) -> Result<BCResult, Error> {
    if !f.is_idempotent() {
        return Err(Error::NotIdempotent { name: "f" });
    }
    let one_minus_f = a.ring().one().sub(f);
    bott_duffin_ef(a, e, &one_minus_f)
}

/// The (p,q)-outer inverse for idempotents p, q: the unique y with
/// `yay = y`, `ya = p`, `ay = 1-q`. Given `ya = p`, the quadratic `yay = y`
/// reduces to the linear `py = y`, so matrix rings solve a linear system.
/// The reflexivity flag records whether additionally `aya = a`.
pub fn pq_outer_inverse(
    a: &RingElement,
    p: &RingElement,
    q: &RingElement,
) -> Result<PqOuter, Error> {
    if !p.is_idempotent() {
        return Err(Error::NotIdempotent { name: "p" });
    }
    if !q.is_idempotent() {
        return Err(Error::NotIdempotent { name: "q" });
    }
    if is_field(a) {
        let inner = pq_outer_inverse(&embed(a), &embed(p), &embed(q))?;
        return Ok(PqOuter {
            result: unembed_result(inner.result),
            reflexive: inner.reflexive,
        });
    }
    let one_minus_q = a.ring().one().sub(q);
    let result = match a.ring() {
        RingDescriptor::ZMod { .. } => {
            let witnesses: Vec<_> = a
                .ring()
                .enumerate_elements()
                .expect("Z_n is finite")
                .filter(|y| y.mul(a) == *p && a.mul(y) == one_minus_q && y.mul(a).mul(y) == *y)
                .collect();
            assert!(witnesses.len() <= 1, "(p,q)-outer inverse must be unique");
            match witnesses.into_iter().next() {
                Some(y) => BCResult::Exists(y),
                None => BCResult::NotExists(NoInverseReason::NoWitness),
            }
        }
        RingDescriptor::MatrixRing { base, dim } => {
            let id = Matrix::identity(dim, base);
            let am = a.as_matrix();
            let pm = p.as_matrix();
            let mut sys = MatrixSystem::new(base, dim);
            sys.right_mul_eq(am, pm);
            sys.left_mul_eq(am, one_minus_q.as_matrix());
            sys.left_mul_eq(&id.sub(pm), &Matrix::zeros(dim, dim, base));
            match sys.solve() {
                None => BCResult::NotExists(NoInverseReason::LinearSystemInconsistent),
                Some((ym, unique)) => {
                    assert!(unique, "(p,q)-outer solution space must be a point");
                    let y = RingElement::from_matrix(ym);
                    assert_eq!(
                        y.mul(a).mul(&y),
                        y,
                        "outer axiom follows from the linear ones"
                    );
                    BCResult::Exists(y)
                }
            }
        }
        RingDescriptor::Field(_) => unreachable!("fields were embedded above"),
    };
    let reflexive = result.exists().map(|y| a.mul(y).mul(a) == *a);
    Ok(PqOuter { result, reflexive })
}
