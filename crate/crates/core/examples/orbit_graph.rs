//! Build the orbit connectivity graph, print distances from the product
//! orbit and write DOT and JSON exports.
//!
//! ```bash
//! cargo run --release --example orbit_graph -- real
//! dot -Tsvg orbits-real.dot > orbits-real.svg
//! ```

use clifford4::analysis::Analysis;
use clifford4::gates::Mode;

fn main() -> clifford4::Result<()> {
    let mode: Mode = std::env::args().nth(1).as_deref().unwrap_or("complex").parse()?;
    let a = Analysis::build(mode)?;
    let g = &a.graph;
    println!("{} nodes, {} edges, diameter {}", g.len(), g.edge_count(), g.diameter()?);

    let s0 = a.orbit_of_state(&clifford4::exact_state::ExactState::zero()).unwrap();
    let dist = g.distances(s0);
    let mut by_level: Vec<(usize, &str)> = (0..g.len()).map(|o| (dist[o].unwrap(), g.name(o))).collect();
    by_level.sort();
    for level in 0..=by_level.last().map_or(0, |x| x.0) {
        let names: Vec<&str> = by_level.iter().filter(|x| x.0 == level).map(|x| x.1).collect();
        println!("  {level} CNOTs from {}: {}", g.name(s0), names.join(" "));
    }

    std::fs::write(format!("orbits-{mode}.dot"), g.to_dot())?;
    std::fs::write(format!("orbits-{mode}.json"), g.to_json())?;
    println!("wrote orbits-{mode}.dot and orbits-{mode}.json");
    Ok(())
}
