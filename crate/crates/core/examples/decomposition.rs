//! hom(D, G) as a sum of surjective counts times subgraph counts.

use homvec::graph::{gen_standard, StandardKind::*};
use homvec::homcount::decomposition_check;

fn main() -> homvec::Result<()> {
    let d = gen_standard(Cycle, 4)?;
    let g = gen_standard(Clique, 4)?;
    let dec = decomposition_check(&d, &g)?;
    for (e, c) in &dec.terms {
        println!("{:<4} {c}", e.as_str());
    }
    println!("hom = {}, sum = {}, holds = {}", dec.lhs, dec.rhs, dec.holds());
    Ok(())
}
