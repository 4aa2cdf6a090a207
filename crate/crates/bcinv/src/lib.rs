//! Exact (b,c)-inverses, their special cases, and reverse-order-law checking
//! in concrete rings.
//!
//! The library works in rings where every computation can be done exactly:
//! modular integers `Z_n`, the rationals `Q`, prime fields `F_p`, and matrix
//! rings over the two fields. On top of element arithmetic it provides
//! generalized inverses — the (b,c)-inverse and the special cases it subsumes
//! (inverse along an element, Bott–Duffin, image-kernel, (p,q)-outer, group,
//! inner) — plus a law checker that evaluates reverse-order-law criteria,
//! computes both sides, and can sweep finite rings for counterexamples with
//! an independent brute-force oracle as referee.

pub mod codec;
pub mod error;
pub mod inverse;
pub mod laws;
pub mod linalg;
pub mod oracle;
pub mod ring;
pub mod scalar;

pub use error::Error;
