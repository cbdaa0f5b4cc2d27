use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{dot, LpProgram, LpSolution, LpStatus, Relation, Sense};
use crate::error::{Error, Result};

/// Dense tableau: `rows[i]` holds the coefficients of every column followed by
/// the right-hand side; `cost` the reduced costs followed by minus the value.
struct Tableau {
    rows: Vec<Vec<BigRational>>,
    cost: Vec<BigRational>,
    basis: Vec<usize>,
    width: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &BigRational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let p = self.rows[r][e].clone();
        if !p.is_one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x /= &p;
                }
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let eliminate = |row: &mut Vec<BigRational>| {
            let f = row[e].clone();
            if f.is_zero() {
                return;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.rows[r] = pivot_row;
        self.basis[r] = e;
    }

    /// Minimizes with Bland's rule over the columns `allowed` admits.
    fn run(&mut self, allowed: impl Fn(usize) -> bool) -> Outcome {
        loop {
            let entering = (0..self.width).find(|&j| allowed(j) && self.cost[j].is_negative());
            let Some(e) = entering else { return Outcome::Optimal };
            let mut leave: Option<(usize, BigRational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                None => return Outcome::Unbounded,
                Some((r, _)) => self.pivot(r, e),
            }
        }
    }

    /// Loads `costs` (one per column) as the objective and prices out the basis.
    fn set_costs(&mut self, costs: &[BigRational]) {
        let mut cost = costs.to_vec();
        cost.push(BigRational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = cost[b].clone();
            if cb.is_zero() {
                continue;
            }
            for (x, y) in cost.iter_mut().zip(&self.rows[i]) {
                if !y.is_zero() {
                    *x -= &cb * y;
                }
            }
        }
        self.cost = cost;
    }
}

/// Solves `p` exactly. Variables are shifted by their lower bounds, rows are
/// brought to non-negative right-hand sides, and phase one minimizes the sum
/// of artificial variables before phase two optimizes the real objective.
pub fn solve_lp(p: &LpProgram) -> Result<LpSolution> {
    p.check_dimensions()?;
    let n = p.var_count();
    let m = p.constraints.len();

    // x = x' + l, so a·x (rel) b becomes a·x' (rel) b - a·l
    let mut rows: Vec<(Vec<BigRational>, Relation, BigRational)> = p
        .constraints
        .iter()
        .map(|c| {
            let rhs = &c.rhs - dot(&c.coeffs, &p.lower_bounds);
            if rhs.is_negative() {
                let flipped = match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                (c.coeffs.iter().map(|x| -x).collect(), flipped, -rhs)
            } else {
                (c.coeffs.clone(), c.relation, rhs)
            }
        })
        .collect();

    let slacks = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let artificials = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let width = n + slacks + artificials;
    let first_artificial = n + slacks;
    let mut table = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut s, mut a) = (n, first_artificial);
    for (coeffs, rel, rhs) in rows.drain(..) {
        let mut row = coeffs;
        row.resize(width + 1, BigRational::zero());
        row[width] = rhs;
        match rel {
            Relation::Le => {
                row[s] = BigRational::one();
                basis.push(s);
                s += 1;
            }
            Relation::Ge => {
                row[s] = -BigRational::one();
                s += 1;
                row[a] = BigRational::one();
                basis.push(a);
                a += 1;
            }
            Relation::Eq => {
                row[a] = BigRational::one();
                basis.push(a);
                a += 1;
            }
        }
        table.push(row);
    }
    let mut t = Tableau { rows: table, cost: Vec::new(), basis, width };

    if artificials > 0 {
        let phase_one: Vec<BigRational> =
            (0..width).map(|j| if j >= first_artificial { BigRational::one() } else { BigRational::zero() }).collect();
        t.set_costs(&phase_one);
        t.run(|_| true);
        if !t.cost[width].is_zero() {
            return Ok(LpSolution { status: LpStatus::Infeasible, objective: BigRational::zero(), values: Vec::new() });
        }
        // drive zero-valued artificials out of the basis; drop redundant rows
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= first_artificial {
                match (0..first_artificial).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut costs = vec![BigRational::zero(); width];
    for (j, c) in p.objective.iter().enumerate() {
        costs[j] = match p.sense {
            Sense::Min => c.clone(),
            Sense::Max => -c,
            Sense::Feasibility => BigRational::zero(),
        };
    }
    t.set_costs(&costs);
    if let Outcome::Unbounded = t.run(|j| j < first_artificial) {
        return Ok(LpSolution { status: LpStatus::Unbounded, objective: BigRational::zero(), values: Vec::new() });
    }

    let mut values = p.lower_bounds.clone();
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            values[b] += t.rhs(i);
        }
    }
    if !p.is_feasible(&values) {
        return Err(Error::Internal("simplex returned a point violating a constraint".into()));
    }
    let objective = match p.sense {
        Sense::Feasibility => BigRational::zero(),
        _ => p.objective_value(&values),
    };
    Ok(LpSolution { status: LpStatus::Optimal, objective, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use crate::lp::dualize;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn r(p: i64) -> BigRational {
        rational(p, 1)
    }

    #[test]
    fn one_variable() {
        let mut p = LpProgram::new(Sense::Max, vec![r(1)]);
        p.add(vec![r(1)], Relation::Le, r(3));
        let s = solve_lp(&p).unwrap();
        assert_eq!((s.status, s.objective.clone()), (LpStatus::Optimal, r(3)));

        let mut q = LpProgram::feasibility(1);
        q.add(vec![r(1)], Relation::Le, r(1)).add(vec![r(1)], Relation::Ge, r(2));
        assert_eq!(solve_lp(&q).unwrap().status, LpStatus::Infeasible);

        let u = LpProgram::new(Sense::Max, vec![r(1)]);
        assert_eq!(solve_lp(&u).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn pentagon_cover() {
        // the 11 independent sets of C5 (empty set included) covering each vertex
        let mut sets: Vec<u32> = vec![0];
        for v in 0..5u32 {
            sets.push(1 << v);
            sets.push((1 << v) | (1 << ((v + 2) % 5)));
        }
        let mut p = LpProgram::new(Sense::Min, vec![r(1); sets.len()]);
        for v in 0..5 {
            p.add(sets.iter().map(|s| r(((s >> v) & 1) as i64)).collect(), Relation::Ge, r(1));
        }
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.objective, rational(5, 2));
        let d = dualize(&p).unwrap();
        assert_eq!((d.var_count(), d.constraints.len()), (5, 11));
        assert_eq!(solve_lp(&d).unwrap().objective, rational(5, 2));
    }

    #[test]
    fn equalities_bounds_and_redundant_rows() {
        // x + y = 2 twice, x - y >= 1, x >= 1/2, y >= -1: min x attains 3/2
        let mut p = LpProgram::new(Sense::Min, vec![r(1), r(0)]);
        p.add(vec![r(1), r(1)], Relation::Eq, r(2)).add(vec![r(2), r(2)], Relation::Eq, r(4)).add(
            vec![r(1), r(-1)],
            Relation::Ge,
            r(1),
        );
        p.lower_bounds = vec![rational(1, 2), r(-1)];
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.values, vec![rational(3, 2), rational(1, 2)]);
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's classic example cycles under the largest-coefficient rule
        let q = |p, d| rational(p, d);
        let mut p = LpProgram::new(Sense::Min, vec![q(-3, 4), r(150), q(-1, 50), r(6)]);
        p.add(vec![q(1, 4), r(-60), q(-1, 25), r(9)], Relation::Le, r(0))
            .add(vec![q(1, 2), r(-90), q(-1, 50), r(3)], Relation::Le, r(0))
            .add(vec![r(0), r(0), r(1), r(0)], Relation::Le, r(1));
        assert_eq!(solve_lp(&p).unwrap().objective, q(-1, 20));
    }

    #[test]
    fn random_duality() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let (n, m) = (rng.gen_range(1..6), rng.gen_range(1..6));
            let mut p = LpProgram::new(Sense::Max, (0..n).map(|_| r(rng.gen_range(-3..6))).collect());
            for _ in 0..m {
                let coeffs = (0..n).map(|_| r(rng.gen_range(-1..4))).collect();
                p.add(coeffs, Relation::Le, r(rng.gen_range(0..8)));
            }
            let primal = solve_lp(&p).unwrap();
            let dual = solve_lp(&dualize(&p).unwrap()).unwrap();
            // the origin is feasible, so the primal is optimal or unbounded
            match primal.status {
                LpStatus::Optimal => {
                    assert!(p.is_feasible(&primal.values));
                    assert_eq!(dual.status, LpStatus::Optimal);
                    assert_eq!(primal.objective, dual.objective);
                }
                LpStatus::Unbounded => assert_eq!(dual.status, LpStatus::Infeasible),
                LpStatus::Infeasible => panic!("origin is feasible"),
            }
        }
    }
}
