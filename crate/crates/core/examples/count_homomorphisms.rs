//! hom, inj, sur and aut counts between small graphs.

use homvec::graph::{gen_kneser, gen_standard, StandardKind::*};
use homvec::homcount::{count_aut, count_hom, count_inj, count_sur, find_hom};

fn main() -> homvec::Result<()> {
    let c5 = gen_standard(Cycle, 5)?;
    let k3 = gen_standard(Clique, 3)?;
    println!("hom(C5, K3) = {}", count_hom(&c5, &k3));
    println!("inj(C5, K3) = {}", count_inj(&c5, &k3));
    println!("sur(C5, K3) = {}", count_sur(&c5, &k3));
    println!("aut(C5)     = {}", count_aut(&c5));

    let petersen = gen_kneser(5, 2)?;
    println!("aut(Petersen) = {}", count_aut(&petersen));
    // a proper 3-colouring, as an explicit map
    if let Some(h) = find_hom(&petersen, &k3) {
        println!("Petersen -> K3: {:?}", h);
    }
    Ok(())
}
