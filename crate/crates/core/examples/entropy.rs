//! Schmidt ranks, entropies and the orbit family of a state given in ket
//! notation.
//!
//! ```bash
//! cargo run --example entropy -- "1/2(|1111> + |1100> - |0011> - |0000>)"
//! ```

use clifford4::ket::parse_state;
use clifford4::orbits::{entanglement_entropy, schmidt_rank, Bipartition, Fingerprint};

fn main() -> clifford4::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "(1/sqrt2)(|1110> - |1101>)".to_string());
    let s = parse_state(&text)?;
    println!("state: {s}");
    for q in 1..=4 {
        let cut = Bipartition::single(q);
        println!("  {cut}: rank {}", schmidt_rank(&s, cut)?);
    }
    for cut in Bipartition::two_two_cuts() {
        println!("  {cut}: rank {}", schmidt_rank(&s, cut)?);
    }
    let fp = Fingerprint::of(&s)?;
    println!("entanglement entropy: {}", entanglement_entropy(&s)?);
    println!("support size: {}", fp.support_size);
    match fp.profile().family() {
        Some(f) => println!("family: {f}"),
        None => println!("family: none (not a Clifford state?)"),
    }
    Ok(())
}
