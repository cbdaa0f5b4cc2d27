//! k-WL colour refinement and the fractional-isomorphism LP.

use homvec::arith::format_rational;
use homvec::graph::gen_frac_pair;
use homvec::relax::{fractional_isomorphism_lp, wl_equivalent, wl_refine};

fn main() -> homvec::Result<()> {
    let (g, h) = gen_frac_pair(3)?;
    for k in 1..=2 {
        let p = wl_refine(&g, k)?;
        println!("{k}-WL on 2C3: {} classes after {} rounds, sizes {:?}", p.class_count(), p.rounds, p.class_sizes());
        println!("{k}-WL equivalent to C6: {}", wl_equivalent(&g, &h, k)?);
    }
    if let Some(x) = fractional_isomorphism_lp(&g, &h) {
        println!("doubly stochastic X with AX = XB:");
        for row in x {
            println!("  {}", row.iter().map(format_rational).collect::<Vec<_>>().join(" "));
        }
    }
    Ok(())
}
