//! Edge deletion on the 4-cycle with a pendant edge: colon by s_e t_e, and
//! the whisker splitting.

use cutideal::cut::{cut_ideal, cut_ideal_without_edge};
use cutideal::graph::Graph;
use cutideal::report::ideal_text;
use cutideal::verify::edge_prime;

fn main() -> Result<(), cutideal::Error> {
    let g = Graph::new(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)])?;
    let ideal = cut_ideal(&g)?;
    let ctx = ideal.ctx().clone();
    for e in g.edge_indices() {
        let colon = ideal.colon_by_monomial(ctx.edge_product(e))?;
        let deleted = cut_ideal_without_edge(&g, e)?;
        println!(
            "edge {:?}: I:(s t) has {} generators, equals I(G - e): {}",
            g.edge(e),
            colon.gens().len(),
            colon.equals(&deleted)?
        );
        if g.is_whisker(e) {
            let rebuilt = deleted.intersect(&edge_prime(&ctx, e)?)?;
            println!("  whisker: I(G - e) ∩ (s, t) = I(G): {}", rebuilt.equals(&ideal)?);
            println!("  I(G - e) = {}", ideal_text(&deleted));
        }
    }
    Ok(())
}
