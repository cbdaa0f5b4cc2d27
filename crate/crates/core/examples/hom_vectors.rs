//! Homomorphism vectors over standard classes, and the first entry that
//! tells two graphs apart.

use homvec::graph::{gen_frac_pair, gen_standard, StandardKind::*};
use homvec::vectors::{ext_closed_check, first_distinguisher, left_vector, right_vector, ClassSpec, NamedClass, Side};

fn main() -> homvec::Result<()> {
    let p3 = gen_standard(Path, 3)?;
    print!("{}", left_vector(&p3, &ClassSpec::named(NamedClass::Cycles, 4))?.to_csv());
    print!("{}", right_vector(&p3, &ClassSpec::named(NamedClass::Cliques, 4))?.to_csv());

    // trees cannot separate this pair, graphs of treewidth 2 can
    let (g, h) = gen_frac_pair(3)?;
    for class in [NamedClass::Trees, NamedClass::TreewidthLe(2)] {
        let d = first_distinguisher(&g, &h, Side::Left, &ClassSpec::named(class, 6))?;
        match d {
            Some(d) => println!("{class}: {:?} gives {} vs {}", d.member, d.count_g, d.count_h),
            None => println!("{class}: no distinguisher"),
        }
    }

    for class in [NamedClass::Trees, NamedClass::Cycles] {
        println!("{class} closed under homomorphic images: {}", ext_closed_check(&ClassSpec::named(class, 4))?);
    }
    Ok(())
}
