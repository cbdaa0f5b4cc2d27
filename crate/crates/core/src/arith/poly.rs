use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::format_rational;
use crate::error::{Error, Result};

/// Exact polynomial in one (`x`) or two (`x`, `y`) variables with rational
/// coefficients, stored sparsely by exponent pair. Zero coefficients are never
/// stored; univariate polynomials only use exponents `(i, 0)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        assert!(arity == 1 || arity == 2, "polynomials have one or two variables");
        Polynomial { arity, terms: BTreeMap::new() }
    }

    pub fn constant(c: BigRational, arity: usize) -> Self {
        Self::monomial(c, 0, 0, arity)
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(BigRational::one(), arity)
    }

    /// `c * x^i * y^j`
    pub fn monomial(c: BigRational, i: u32, j: u32, arity: usize) -> Self {
        assert!(arity == 2 || j == 0, "univariate polynomial cannot use y");
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert((i, j), c);
        }
        p
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1, 0, 1)
    }

    /// Univariate polynomial from ascending coefficients.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut p = Self::zero(1);
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert((i as u32, 0), c);
            }
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Ascending coefficients of a univariate polynomial.
    pub fn coeffs(&self) -> Vec<BigRational> {
        assert_eq!(self.arity, 1, "coeffs() is for univariate polynomials");
        let len = self.degree().map_or(0, |d| d as usize + 1);
        (0..len as u32).map(|i| self.coeff(i, 0)).collect()
    }

    /// Coefficient of the highest power of `x` (univariate only).
    pub fn leading_coefficient(&self) -> BigRational {
        self.degree().map_or_else(BigRational::zero, |d| self.coeff(d, 0))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.arity), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.arity);
        if !c.is_zero() {
            for (k, v) in &self.terms {
                out.terms.insert(*k, v * c);
            }
        }
        out
    }

    /// Exact value at `point`, which must have one entry per variable.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.arity {
            return Err(Error::Arity { expected: self.arity, actual: point.len() });
        }
        let zero = BigRational::zero();
        let (x, y) = (&point[0], point.get(1).unwrap_or(&zero));
        let mut total = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            total += c * pow_rat(x, i) * pow_rat(y, j);
        }
        Ok(total)
    }

    fn insert_add(&mut self, key: (u32, u32), c: BigRational) {
        let entry = self.terms.entry(key).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }
}

fn pow_rat(base: &BigRational, exp: u32) -> BigRational {
    num_traits::pow(base.clone(), exp as usize)
}

/// Evaluates `p` at `point`.
pub fn poly_eval(p: &Polynomial, point: &[BigRational]) -> Result<BigRational> {
    p.eval(point)
}

/// The unique univariate polynomial of degree at most `degree` through
/// `points`, by Newton divided differences. Needs exactly `degree + 1` points
/// with distinct abscissae.
pub fn poly_interpolate(points: &[(BigRational, BigRational)], degree: usize) -> Result<Polynomial> {
    if points.len() != degree + 1 {
        return Err(Error::Validation(format!(
            "degree {degree} interpolation needs {} points, got {}",
            degree + 1,
            points.len()
        )));
    }
    for (i, (a, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(b, _)| a == b) {
            return Err(Error::Validation(format!("duplicate abscissa {}", format_rational(a))));
        }
    }
    let xs: Vec<&BigRational> = points.iter().map(|(x, _)| x).collect();
    let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..points.len() {
        for i in (level..points.len()).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner over the Newton basis
    let mut result = Polynomial::zero(1);
    for i in (0..points.len()).rev() {
        let factor = &Polynomial::x() - &Polynomial::constant(xs[i].clone(), 1);
        result = &(&result * &factor) + &Polynomial::constant(table[i].clone(), 1);
    }
    Ok(result)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial { arity: self.arity.max(rhs.arity), terms: self.terms.clone() };
        for (k, v) in &rhs.terms {
            out.insert_add(*k, v.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { arity: self.arity, terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.arity.max(rhs.arity));
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.insert_add((i + k, j + l), a * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Univariate: ascending degree, `"c0 + c1*x + c2*x^2"`. Bivariate: graded-lex,
/// ascending total degree and then ascending `x` exponent.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(i, j)| (i + j, i));
        for (idx, key) in keys.into_iter().enumerate() {
            let c = &self.terms[key];
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            let (i, j) = *key;
            if !abs.is_one() || (i == 0 && j == 0) {
                factors.push(format_rational(&abs));
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    fn r(n: i64) -> BigRational {
        rational(n, 1)
    }

    fn x_minus(a: i64) -> Polynomial {
        &Polynomial::x() - &Polynomial::constant(r(a), 1)
    }

    #[test]
    fn evaluation() {
        // x(x-1)(x-2) at 3
        let k3 = &(&Polynomial::x() * &x_minus(1)) * &x_minus(2);
        assert_eq!(poly_eval(&k3, &[r(3)]).unwrap(), r(6));
        assert_eq!(poly_eval(&k3, &[r(0)]).unwrap(), k3.coeff(0, 0));
        assert!(matches!(poly_eval(&k3, &[r(1), r(2)]), Err(Error::Arity { expected: 1, actual: 2 })));

        // x^2 + x*y at (2, -1)
        let cep = Polynomial::monomial(r(1), 2, 0, 2) + Polynomial::monomial(r(1), 1, 1, 2);
        assert_eq!(cep.eval(&[r(2), r(-1)]).unwrap(), r(2));
        assert_eq!(cep.eval(&[r(0), r(0)]).unwrap(), r(0));
    }

    #[test]
    fn interpolates_p3() {
        // values of x(x-1)^2 at 0..3, counted by hand: 0, 0, 2, 12
        let pts: Vec<_> = [(0, 0), (1, 0), (2, 2), (3, 12)].iter().map(|&(a, b)| (r(a), r(b))).collect();
        let p = poly_interpolate(&pts, 3).unwrap();
        assert_eq!(p, &Polynomial::x() * &x_minus(1).pow(2));
        for (x, y) in &pts {
            assert_eq!(&p.eval(std::slice::from_ref(x)).unwrap(), y);
        }
    }

    #[test]
    fn interpolates_line_and_rejects_duplicates() {
        let p = poly_interpolate(&[(rational(1, 2), r(1)), (r(2), r(4))], 1).unwrap();
        assert_eq!(p, Polynomial::from_coeffs([r(0), r(2)]));
        assert!(poly_interpolate(&[(r(1), r(1)), (r(1), r(2))], 1).is_err());
        assert!(poly_interpolate(&[(r(1), r(1))], 1).is_err());
    }

    #[test]
    fn interpolates_c8_closed_form() {
        let target = &x_minus(1).pow(8) + &x_minus(1);
        let pts: Vec<_> = (0..=8).map(|k| (r(k), target.eval(&[r(k)]).unwrap())).collect();
        assert_eq!(poly_interpolate(&pts, 8).unwrap(), target);
    }

    #[test]
    fn text_forms() {
        let c8 = &x_minus(1).pow(8) + &x_minus(1);
        assert_eq!(c8.to_string(), "-7*x + 28*x^2 - 56*x^3 + 70*x^4 - 56*x^5 + 28*x^6 - 8*x^7 + x^8");
        assert_eq!(Polynomial::zero(1).to_string(), "0");
        assert_eq!(Polynomial::from_coeffs([r(-1), r(0), r(1)]).to_string(), "-1 + x^2");
        assert_eq!(Polynomial::from_coeffs([rational(1, 2), rational(-3, 4)]).to_string(), "1/2 - 3/4*x");
        let cep = Polynomial::monomial(r(1), 2, 0, 2) + Polynomial::monomial(r(1), 1, 1, 2);
        assert_eq!(cep.to_string(), "x*y + x^2");
        let ind = Polynomial::monomial(r(1), 0, 2, 2) + Polynomial::monomial(r(2), 1, 1, 2);
        assert_eq!(ind.to_string(), "y^2 + 2*x*y");
    }

    #[test]
    fn no_zero_terms_stored() {
        let p = x_minus(1);
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(x_minus(1).pow(3).leading_coefficient(), r(1));
    }
}
