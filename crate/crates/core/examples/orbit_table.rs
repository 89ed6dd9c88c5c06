//! Split the enumerated states into local-Clifford orbits, label them and
//! audit the published representatives.
//!
//! ```bash
//! cargo run --release --example orbit_table -- real
//! ```

use clifford4::analysis::Analysis;
use clifford4::gates::Mode;
use clifford4::reference;

fn main() -> clifford4::Result<()> {
    let mode: Mode = std::env::args().nth(1).as_deref().unwrap_or("complex").parse()?;
    let a = Analysis::build(mode)?;
    println!("{} orbits over {} states\n", a.partition.len(), a.set.len());
    println!("{:<10} {:>6} {:>8}  {:>9} {:>6}", "orbit", "size", "entropy", "singles", "cuts");
    for o in a.partition.orbits() {
        let label = a.label_of(o.id);
        let mark = if reference::orbit_size(&label) == Some(o.size) { "" } else { "  (size differs)" };
        println!(
            "{:<10} {:>6} {:>8}  {:>9} {:>6}{mark}",
            o.name(),
            o.size,
            o.entropy.to_string(),
            format!("{:?}", o.profile.single_entropies).replace(", ", ""),
            format!("{:?}", o.profile.cut_entropies).replace(", ", ""),
        );
    }
    println!("\npublished representatives:");
    for f in &a.anchors {
        println!("  {f}");
    }
    Ok(())
}
