//! Clique, chromatic and fractional numbers, with a Kneser cross-check.

use homvec::arith::format_rational;
use homvec::graph::{gen_kneser, gen_standard, StandardKind::*};
use homvec::relax::{chromatic_number, clique_number, fractional_parameters, kneser_fraction};

fn main() -> homvec::Result<()> {
    let graphs = [
        ("C5", gen_standard(Cycle, 5)?),
        ("C7", gen_standard(Cycle, 7)?),
        ("Petersen", gen_kneser(5, 2)?),
        ("K4", gen_standard(Clique, 4)?),
    ];
    println!("graph,omega,chi_f,chi,kneser");
    for (name, g) in &graphs {
        println!(
            "{name},{},{},{},{}",
            clique_number(g)?,
            format_rational(&fractional_parameters(g)?),
            chromatic_number(g)?,
            format_rational(&kneser_fraction(g, 3)?)
        );
    }
    Ok(())
}
