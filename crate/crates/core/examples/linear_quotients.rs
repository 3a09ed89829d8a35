//! Linear quotients of path ideals and the Betti numbers they predict.

use cutideal::cut::cut_ideal;
use cutideal::graph::path_graph;
use cutideal::homology::{betti_from_linear_quotients, linear_quotients_certificate, tree_betti_formula};

fn main() -> Result<(), cutideal::Error> {
    for r in 1..=5 {
        let ideal = cut_ideal(&path_graph(r)?)?;
        let Some(cert) = linear_quotients_certificate(&ideal)? else {
            println!("T_{r}: lex order has no linear quotients");
            continue;
        };
        let predicted = betti_from_linear_quotients(&cert);
        let formula: Vec<u64> = (0..=r).map(|i| tree_betti_formula(r, i)).collect::<Result<_, _>>()?;
        println!("T_{r}: r_k = {:?}", cert.set_sizes());
        println!("     betti(I) = {predicted:?}, closed form {formula:?}");
    }
    Ok(())
}
