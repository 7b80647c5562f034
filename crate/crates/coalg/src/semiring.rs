//! Coefficient semirings.
//!
//! A semiring supplies the weight arithmetic for polynomials, grammars and
//! lifted output/derivative pairs. All built-in carriers are exact, so every
//! equality in this crate is decidable and bit-stable: [`Bool`] (the boolean
//! semiring), [`BigUint`] (natural numbers) and [`BigInt`] (integers).

use core::fmt;

pub use num_bigint::{BigInt, BigUint};

/// An exact semiring `(S, 0, 1, +, ·)`.
///
/// Laws expected of implementors (checked by the test suite on the built-in
/// carriers): `+` is associative and commutative with unit [`zero`](Semiring::zero);
/// `·` is associative with unit [`one`](Semiring::one) and distributes over `+`
/// on both sides; `zero` annihilates multiplication. When
/// [`COMMUTATIVE`](Semiring::COMMUTATIVE) is set, `·` commutes as well.
///
/// `Ord` is required so that values built over a semiring (polynomials, stack
/// predicates, ...) have a canonical order and can serve as memo keys; the
/// order carries no algebraic meaning.
pub trait Semiring: Clone + Eq + Ord + fmt::Debug + fmt::Display {
    /// Whether multiplication commutes. Operations that need a commutative
    /// coefficient semiring (polynomial substitution, grammar construction)
    /// reject carriers without this flag at runtime.
    const COMMUTATIVE: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Parses a coefficient from its decimal rendering, the inverse of the
    /// `Display` instance. Used by the textual polynomial syntax.
    fn parse_coefficient(text: &str) -> Option<Self>;
}

/// The boolean semiring: `+` is disjunction, `·` is conjunction.
///
/// Displayed as `0`/`1` so that boolean coefficients round-trip through the
/// same textual syntax as numeric ones.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Bool(pub bool);

impl fmt::Display for Bool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl From<bool> for Bool {
    fn from(b: bool) -> Self {
        Bool(b)
    }
}

impl Semiring for Bool {
    const COMMUTATIVE: bool = true;

    fn zero() -> Self {
        Bool(false)
    }

    fn one() -> Self {
        Bool(true)
    }

    fn add(&self, rhs: &Self) -> Self {
        Bool(self.0 || rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Bool(self.0 && rhs.0)
    }

    fn parse_coefficient(text: &str) -> Option<Self> {
        match text {
            "0" => Some(Bool(false)),
            "1" => Some(Bool(true)),
            _ => None,
        }
    }
}

impl Semiring for BigUint {
    const COMMUTATIVE: bool = true;

    fn zero() -> Self {
        BigUint::from(0u32)
    }

    fn one() -> Self {
        BigUint::from(1u32)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn parse_coefficient(text: &str) -> Option<Self> {
        text.parse().ok()
    }
}

impl Semiring for BigInt {
    const COMMUTATIVE: bool = true;

    fn zero() -> Self {
        BigInt::from(0i32)
    }

    fn one() -> Self {
        BigInt::from(1i32)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn parse_coefficient(text: &str) -> Option<Self> {
        text.parse().ok()
    }
}
