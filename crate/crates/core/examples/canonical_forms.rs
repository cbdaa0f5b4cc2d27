//! Canonical graph6 codes, isomorphism-free enumeration and treewidth.

use homvec::graph::{canonical_form, enumerate_graphs_exact, enumerate_trees, parse_graph6, treewidth};

fn main() -> homvec::Result<()> {
    // two labellings of P4
    let a = parse_graph6("Ch")?;
    let b = parse_graph6("CU")?;
    println!("{} {}", canonical_form(&a).as_str(), canonical_form(&b).as_str());

    for n in 1..=7 {
        let graphs = enumerate_graphs_exact(n)?;
        let mut by_tw = [0usize; 7];
        for g in &graphs {
            by_tw[treewidth(g)?] += 1;
        }
        println!("n={n}: {} graphs, {} trees, by treewidth {:?}", graphs.len(), enumerate_trees(n)?.len(), &by_tw[..n]);
    }
    Ok(())
}
