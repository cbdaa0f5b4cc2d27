//! Weighted homomorphism counts over the built-in semirings and a table one.

use homvec::arith::{format_rational, rational, Semiring, TableSemiring};
use homvec::graph::{gen_lollipop, gen_standard, gen_weighted_clique, write_weighted_json, StandardKind::*};
use homvec::homcount::count_hom_weighted;
use homvec::WeightedGraph;

fn main() -> homvec::Result<()> {
    let lollipop = gen_lollipop(&rational(1, 2), &rational(3, 1));
    println!("{}", write_weighted_json(&lollipop));
    let p3 = gen_standard(Path, 3)?;
    let v = count_hom_weighted(&p3, &lollipop, &Semiring::rationals())?;
    println!("hom(P3, lollipop) = {}", format_rational(&v));

    // loops weigh 1 + y: y = 0 counts every map, y = -1 only proper colourings
    let k3 = gen_standard(Clique, 3)?;
    for y in [0, -1] {
        let w = gen_weighted_clique(3, &rational(y, 1))?;
        println!("hom(K3, K_3,{y}) = {}", format_rational(&count_hom_weighted(&k3, &w, &Semiring::rationals())?));
    }

    // GF(2): the parity of hom(C4, K3)
    let gf2 = TableSemiring::new("gf2", vec![vec![0, 1], vec![1, 0]], vec![vec![0, 0], vec![0, 1]], 0, 1)?;
    gf2.check_laws()?;
    let unit = WeightedGraph::lift(&k3);
    let parity = count_hom_weighted(&gen_standard(Cycle, 4)?, &unit, &Semiring::table(gf2))?;
    println!("hom(C4, K3) mod 2 = {}", format_rational(&parity));
    Ok(())
}
