//! Chromatic, characteristic, cluster-expansion and independence polynomials.

use homvec::arith::rational;
use homvec::graph::{gen_kneser, gen_standard, StandardKind::*};
use homvec::polys::{
    characteristic_polynomial, chromatic_polynomial, cluster_expansion_polynomial, independence_polynomial,
};

fn main() -> homvec::Result<()> {
    let c8 = gen_standard(Cycle, 8)?;
    println!("chromatic(C8)      = {}", chromatic_polynomial(&c8)?);
    let petersen = gen_kneser(5, 2)?;
    let chi = chromatic_polynomial(&petersen)?;
    println!("chromatic(Petersen)(3) = {}", chi.eval(&[rational(3, 1)])?);
    println!("characteristic(C5) = {}", characteristic_polynomial(&gen_standard(Cycle, 5)?)?);

    let k3 = gen_standard(Clique, 3)?;
    let cep = cluster_expansion_polynomial(&k3)?;
    println!("cep(K3)            = {cep}");
    // y = -1 recovers the chromatic polynomial
    println!("cep(K3)(3, -1)     = {}", cep.eval(&[rational(3, 1), rational(-1, 1)])?);
    println!("independence(P4)   = {}", independence_polynomial(&gen_standard(Path, 4)?)?);
    Ok(())
}
