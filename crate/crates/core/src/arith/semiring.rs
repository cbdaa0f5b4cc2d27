//! Semirings with elements represented as exact rationals.
//!
//! Each instance declares its carrier as a subset of the rationals: the
//! naturals are the non-negative integers, the Boolean semiring is `{0, 1}`,
//! a table semiring is `{0, .., size-1}`. This keeps one value type for
//! weighted counting regardless of the semiring.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A finite semiring given by its operation tables over `{0, .., size-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSemiring {
    name: String,
    size: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
}

impl TableSemiring {
    /// Checks only table shape; see [`TableSemiring::check_laws`] for the axioms.
    pub fn new(
        name: impl Into<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let size = add.len();
        let square = |t: &Vec<Vec<usize>>| {
            t.len() == size && t.iter().all(|row| row.len() == size && row.iter().all(|&x| x < size))
        };
        if size == 0 || !square(&add) || !square(&mul) {
            return Err(Error::Validation("semiring tables must be square over 0..size".into()));
        }
        if zero >= size || one >= size {
            return Err(Error::Validation("semiring identities must lie in the carrier".into()));
        }
        Ok(TableSemiring { name: name.into(), size, add, mul, zero, one })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Exhaustively verifies the semiring axioms, naming the first failure.
    pub fn check_laws(&self) -> Result<()> {
        let n = self.size;
        let (a, m) = (&self.add, &self.mul);
        let fail =
            |law: &str, x: usize, y: usize, z: usize| Err(Error::Validation(format!("{law} fails at ({x}, {y}, {z})")));
        for x in 0..n {
            if a[x][self.zero] != x || a[self.zero][x] != x {
                return fail("additive identity", x, self.zero, 0);
            }
            if m[x][self.one] != x || m[self.one][x] != x {
                return fail("multiplicative identity", x, self.one, 0);
            }
            if m[x][self.zero] != self.zero || m[self.zero][x] != self.zero {
                return fail("annihilation", x, self.zero, 0);
            }
            for y in 0..n {
                if a[x][y] != a[y][x] {
                    return fail("additive commutativity", x, y, 0);
                }
                for z in 0..n {
                    if a[a[x][y]][z] != a[x][a[y][z]] {
                        return fail("additive associativity", x, y, z);
                    }
                    if m[m[x][y]][z] != m[x][m[y][z]] {
                        return fail("multiplicative associativity", x, y, z);
                    }
                    if m[x][a[y][z]] != a[m[x][y]][m[x][z]] || m[a[y][z]][x] != a[m[y][x]][m[z][x]] {
                        return fail("distributivity", x, y, z);
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemiringKind {
    /// `(N, +, *, 0, 1)`
    Naturals,
    /// `({0, 1}, or, and, 0, 1)`
    Boolean,
    /// `(Q, +, *, 0, 1)`
    Rationals,
    Table(TableSemiring),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semiring {
    kind: SemiringKind,
}

/// Looks up `naturals`, `boolean` or `rationals`.
pub fn semiring_instance(name: &str) -> Result<Semiring> {
    let kind = match name {
        "naturals" | "nat" | "bag" => SemiringKind::Naturals,
        "boolean" | "bool" => SemiringKind::Boolean,
        "rationals" | "rat" | "reals" => SemiringKind::Rationals,
        other => return Err(Error::Validation(format!("unknown semiring `{other}`"))),
    };
    Ok(Semiring { kind })
}

fn small_index(r: &BigRational) -> Option<usize> {
    if r.is_integer() && !r.is_negative() {
        r.to_integer().to_usize()
    } else {
        None
    }
}

fn from_index(i: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

impl Semiring {
    pub fn naturals() -> Self {
        Semiring { kind: SemiringKind::Naturals }
    }

    pub fn boolean() -> Self {
        Semiring { kind: SemiringKind::Boolean }
    }

    pub fn rationals() -> Self {
        Semiring { kind: SemiringKind::Rationals }
    }

    pub fn table(t: TableSemiring) -> Self {
        Semiring { kind: SemiringKind::Table(t) }
    }

    pub fn kind(&self) -> &SemiringKind {
        &self.kind
    }

    pub fn name(&self) -> &str {
        match &self.kind {
            SemiringKind::Naturals => "naturals",
            SemiringKind::Boolean => "boolean",
            SemiringKind::Rationals => "rationals",
            SemiringKind::Table(t) => &t.name,
        }
    }

    pub fn contains(&self, r: &BigRational) -> bool {
        match &self.kind {
            SemiringKind::Naturals => r.is_integer() && !r.is_negative(),
            SemiringKind::Boolean => r.is_zero() || r.is_one(),
            SemiringKind::Rationals => true,
            SemiringKind::Table(t) => small_index(r).is_some_and(|i| i < t.size),
        }
    }

    pub fn check(&self, r: &BigRational) -> Result<()> {
        if self.contains(r) {
            Ok(())
        } else {
            Err(Error::Carrier { semiring: self.name().to_string(), value: crate::arith::format_rational(r) })
        }
    }

    pub fn zero(&self) -> BigRational {
        match &self.kind {
            SemiringKind::Table(t) => from_index(t.zero),
            _ => BigRational::zero(),
        }
    }

    pub fn one(&self) -> BigRational {
        match &self.kind {
            SemiringKind::Table(t) => from_index(t.one),
            _ => BigRational::one(),
        }
    }

    /// Both arguments must lie in the carrier.
    pub fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        match &self.kind {
            SemiringKind::Naturals | SemiringKind::Rationals => a + b,
            SemiringKind::Boolean => {
                if a.is_one() || b.is_one() {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }
            SemiringKind::Table(t) => {
                from_index(t.add[small_index(a).expect("carrier")][small_index(b).expect("carrier")])
            }
        }
    }

    pub fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        match &self.kind {
            SemiringKind::Naturals | SemiringKind::Rationals => a * b,
            SemiringKind::Boolean => {
                if a.is_one() && b.is_one() {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }
            SemiringKind::Table(t) => {
                from_index(t.mul[small_index(a).expect("carrier")][small_index(b).expect("carrier")])
            }
        }
    }

    pub fn equal(&self, a: &BigRational, b: &BigRational) -> bool {
        a == b
    }

    /// Adds up `items` starting from zero.
    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a BigRational>) -> BigRational {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Multiplies `items` left to right starting from one.
    pub fn product<'a>(&self, items: impl IntoIterator<Item = &'a BigRational>) -> BigRational {
        items.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }
}
