//! Deciding the isomorphism relaxations on classic pairs.

use homvec::graph::{gen_chrom_pair, gen_frac_pair, gen_standard, Graph, StandardKind::*};
use homvec::relax::Equivalence;

fn main() -> homvec::Result<()> {
    let (g3, h3) = gen_frac_pair(3)?;
    let (x1, x2) = gen_chrom_pair();
    let star = Graph::new(5, (1..5).map(|v| (0, v)))?;
    let c4_i1 = gen_standard(Cycle, 4)?.disjoint_union(&gen_standard(Independent, 1)?);
    let pairs = [("2C3 / C6", &g3, &h3), ("X1 / X2", &x1, &x2), ("C4+K1 / K1,4", &c4_i1, &star)];

    let relations = ["iso", "fraciso", "wl:1", "wl:2", "cospectral", "chromeq", "homeq"];
    println!("{:<14}{}", "", relations.join(" "));
    for (name, g, h) in pairs {
        let mut row = format!("{name:<14}");
        for r in relations {
            let rel: Equivalence = r.parse()?;
            let mark = if rel.decide(g, h)? { "=" } else { "≠" };
            row.push_str(&format!("{mark:<w$} ", w = r.len()));
        }
        println!("{}", row.trim_end());
    }
    Ok(())
}
