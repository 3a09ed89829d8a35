//! Betti diagrams of paths and cycles via Hochster's formula.

use cutideal::cut::cut_ideal;
use cutideal::graph::{cycle_graph, path_graph};
use cutideal::homology::{graded_betti, invariants_from_betti, Prime};
use cutideal::report::betti_diagram;

fn main() -> Result<(), cutideal::Error> {
    let graphs = [path_graph(2)?, path_graph(3)?, cycle_graph(3)?, cycle_graph(4)?];
    for g in &graphs {
        let ideal = cut_ideal(g)?;
        let table = graded_betti(&ideal, Prime::TWO)?;
        let inv = invariants_from_betti(&table, ideal.ctx().num_vars())?;
        println!("[{g}]  projdim {}  reg {}  depth {}", inv.projdim, inv.reg, inv.depth);
        print!("{}", betti_diagram(&table));
        println!();
    }
    Ok(())
}
