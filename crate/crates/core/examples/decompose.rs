//! Structural minimal primes against the transversal oracle, for a few
//! graphs containing cycles.

use cutideal::cut::cut_ideal;
use cutideal::graph::{cycle_graph, Graph};
use cutideal::structure::{general_decomposition, height_classification};

fn main() -> Result<(), cutideal::Error> {
    let mut graphs: Vec<Graph> = (3..=6).map(cycle_graph).collect::<Result<_, _>>()?;
    graphs.push(Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])?);
    for g in &graphs {
        let d = general_decomposition(g)?;
        let oracle = cut_ideal(g)?.minimal_primes();
        let heights = height_classification(&d, g);
        println!(
            "[{g}]  structural {}  oracle {}  heights {:?}",
            d.len(),
            oracle.len(),
            heights.histogram
        );
        for c in d.components().iter().filter(|c| c.prime.height() > 2).take(3) {
            println!("    {} from {}", d.ctx().render(c.prime.vars()), c.provenance.label());
        }
    }
    Ok(())
}
