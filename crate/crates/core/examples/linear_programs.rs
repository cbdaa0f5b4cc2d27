//! Exact simplex on a small program and its dual.

use homvec::arith::{format_rational, rational};
use homvec::lp::{dualize, solve_lp, LpProgram, Relation, Sense};

fn main() -> homvec::Result<()> {
    // min x + y  s.t.  x + 2y >= 3,  3x + y >= 4
    let mut p = LpProgram::new(Sense::Min, vec![rational(1, 1), rational(1, 1)]);
    p.add(vec![rational(1, 1), rational(2, 1)], Relation::Ge, rational(3, 1));
    p.add(vec![rational(3, 1), rational(1, 1)], Relation::Ge, rational(4, 1));
    print!("{p}");
    let s = solve_lp(&p)?;
    let xs: Vec<String> = s.values.iter().map(format_rational).collect();
    println!("{:?}: {} at [{}]", s.status, format_rational(&s.objective), xs.join(", "));

    let d = dualize(&p)?;
    print!("{d}");
    let t = solve_lp(&d)?;
    println!("{:?}: {}", t.status, format_rational(&t.objective));
    Ok(())
}
