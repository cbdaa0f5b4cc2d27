//! Exact rational linear programming.
//!
//! A dense two-phase tableau simplex with Bland's rule; every optimal point is
//! checked against all constraints before it is returned.

mod simplex;

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::format_rational;
use crate::error::{Error, Result};

pub use simplex::solve_lp;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    Max,
    Min,
    /// Any feasible point; the objective is ignored.
    Feasibility,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        }
    }

    /// Whether `lhs (rel) rhs` holds.
    pub fn holds(self, lhs: &BigRational, rhs: &BigRational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

impl Constraint {
    pub fn new(coeffs: Vec<BigRational>, relation: Relation, rhs: BigRational) -> Self {
        Constraint { coeffs, relation, rhs }
    }
}

/// `sense c·x` subject to the constraint rows and `x >= lower_bounds`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProgram {
    pub sense: Sense,
    pub objective: Vec<BigRational>,
    pub constraints: Vec<Constraint>,
    pub lower_bounds: Vec<BigRational>,
}

impl LpProgram {
    /// A program with lower bounds 0 and no rows yet.
    pub fn new(sense: Sense, objective: Vec<BigRational>) -> Self {
        let n = objective.len();
        LpProgram { sense, objective, constraints: Vec::new(), lower_bounds: vec![BigRational::zero(); n] }
    }

    /// A feasibility program over `vars` variables.
    pub fn feasibility(vars: usize) -> Self {
        Self::new(Sense::Feasibility, vec![BigRational::zero(); vars])
    }

    pub fn var_count(&self) -> usize {
        self.objective.len()
    }

    pub fn add(&mut self, coeffs: Vec<BigRational>, relation: Relation, rhs: BigRational) -> &mut Self {
        self.constraints.push(Constraint::new(coeffs, relation, rhs));
        self
    }

    /// Checks that every row and the bound vector have one entry per variable.
    pub fn check_dimensions(&self) -> Result<()> {
        let n = self.var_count();
        if self.lower_bounds.len() != n {
            return Err(Error::Dimension(format!("{} lower bounds for {n} variables", self.lower_bounds.len())));
        }
        for (i, row) in self.constraints.iter().enumerate() {
            if row.coeffs.len() != n {
                return Err(Error::Dimension(format!(
                    "row {i} has {} coefficients for {n} variables",
                    row.coeffs.len()
                )));
            }
        }
        Ok(())
    }

    /// Whether `x` satisfies every row and bound exactly.
    pub fn is_feasible(&self, x: &[BigRational]) -> bool {
        x.len() == self.var_count()
            && x.iter().zip(&self.lower_bounds).all(|(v, l)| v >= l)
            && self.constraints.iter().all(|row| row.relation.holds(&dot(&row.coeffs, x), &row.rhs))
    }

    pub fn objective_value(&self, x: &[BigRational]) -> BigRational {
        dot(&self.objective, x)
    }
}

pub(crate) fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).filter(|(x, _)| !x.is_zero()).map(|(x, y)| x * y).sum()
}

impl fmt::Display for LpProgram {
    /// One line for the objective, one per row, then any non-zero lower bounds.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = match self.sense {
            Sense::Max => "max",
            Sense::Min => "min",
            Sense::Feasibility => "feasible",
        };
        writeln!(f, "{head} {}", linear(&self.objective))?;
        for row in &self.constraints {
            writeln!(f, "{} {} {}", linear(&row.coeffs), row.relation.symbol(), format_rational(&row.rhs))?;
        }
        for (i, l) in self.lower_bounds.iter().enumerate() {
            if !l.is_zero() {
                writeln!(f, "x{i} >= {}", format_rational(l))?;
            }
        }
        Ok(())
    }
}

fn linear(coeffs: &[BigRational]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&format!("{}*x{i}", format_rational(&c.abs())));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Result of [`solve_lp`]. `values` and `objective` are only meaningful for
/// [`LpStatus::Optimal`]; otherwise `values` is empty and `objective` zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    pub objective: BigRational,
    pub values: Vec<BigRational>,
}

impl LpSolution {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

/// The textbook dual of `min c·x, Ax >= b, x >= 0` (giving
/// `max b·y, Aᵀy <= c, y >= 0`) and of the reverse form.
pub fn dualize(p: &LpProgram) -> Result<LpProgram> {
    p.check_dimensions()?;
    if p.lower_bounds.iter().any(|l| !l.is_zero()) {
        return Err(Error::NonStandardForm("non-zero lower bounds".into()));
    }
    let (want, sense, rel) = match p.sense {
        Sense::Min => (Relation::Ge, Sense::Max, Relation::Le),
        Sense::Max => (Relation::Le, Sense::Min, Relation::Ge),
        Sense::Feasibility => return Err(Error::NonStandardForm("feasibility program has no dual objective".into())),
    };
    if let Some(i) = p.constraints.iter().position(|r| r.relation != want) {
        return Err(Error::NonStandardForm(format!(
            "row {i} uses `{}` but a {} program needs `{}`",
            p.constraints[i].relation.symbol(),
            if p.sense == Sense::Min { "min" } else { "max" },
            want.symbol()
        )));
    }
    let objective: Vec<BigRational> = p.constraints.iter().map(|r| r.rhs.clone()).collect();
    let mut dual = LpProgram::new(sense, objective);
    for j in 0..p.var_count() {
        let column = p.constraints.iter().map(|r| r.coeffs[j].clone()).collect();
        dual.add(column, rel, p.objective[j].clone());
    }
    Ok(dual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    fn r(p: i64) -> BigRational {
        rational(p, 1)
    }

    #[test]
    fn dump_format() {
        let mut p = LpProgram::new(Sense::Min, vec![r(1), r(0), rational(-1, 2)]);
        p.add(vec![r(1), r(-1), r(0)], Relation::Ge, r(2));
        p.add(vec![r(0), r(0), r(0)], Relation::Eq, r(0));
        p.lower_bounds[1] = rational(-3, 4);
        assert_eq!(p.to_string(), "min 1*x0 - 1/2*x2\n1*x0 - 1*x1 >= 2\n0 = 0\nx1 >= -3/4\n");
    }

    #[test]
    fn dualize_shapes() {
        let mut p = LpProgram::new(Sense::Max, vec![r(1)]);
        p.add(vec![r(1)], Relation::Le, r(3));
        let d = dualize(&p).unwrap();
        assert_eq!(d.sense, Sense::Min);
        assert_eq!((d.var_count(), d.constraints.len()), (1, 1));
        assert_eq!(d.constraints[0].relation, Relation::Ge);
        assert_eq!(dualize(&d).unwrap(), p);

        let mut bad = LpProgram::new(Sense::Min, vec![r(1)]);
        bad.add(vec![r(1)], Relation::Le, r(3));
        assert!(matches!(dualize(&bad), Err(Error::NonStandardForm(_))));
        assert!(dualize(&LpProgram::feasibility(2)).is_err());
    }

    #[test]
    fn dimension_errors() {
        let mut p = LpProgram::new(Sense::Max, vec![r(1), r(1)]);
        p.add(vec![r(1)], Relation::Le, r(3));
        assert!(matches!(p.check_dimensions(), Err(Error::Dimension(_))));
    }
}
