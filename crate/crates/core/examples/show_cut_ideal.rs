//! Generators of the cut ideal of a graph given on the command line.
//!
//! cargo run --example show_cut_ideal -- "4; 1 2; 2 3; 3 4; 1 4"

use cutideal::cut::{cut_ideal, cut_monomial, enumerate_partitions};
use cutideal::graph::parse_graph;

fn main() -> Result<(), cutideal::Error> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "3; 1 2; 2 3; 1 3".to_string());
    let g = parse_graph(&text)?;
    let ideal = cut_ideal(&g)?;
    let ctx = ideal.ctx();
    println!("G = [{g}], {} variables", ctx.num_vars());
    for p in enumerate_partitions(&g)? {
        let b: Vec<String> = p.side_b().map(|v| v.to_string()).collect();
        let u = cut_monomial(&g, p);
        println!(
            "  B = {{{}}}: {}  (s-degree {})",
            b.join(","),
            ctx.render(u),
            ctx.s_degree(u)
        );
    }
    println!("{} minimal generators", ideal.gens().len());
    Ok(())
}
