//! How each CZ gate moves the states of one orbit between orbits, next to
//! the published row.
//!
//! ```bash
//! cargo run --release --example transition_table -- complex U12/34
//! cargo run --release --example transition_table -- real What^r
//! ```

use clifford4::analysis::Analysis;
use clifford4::gates::Mode;
use clifford4::labels::OrbitLabel;

fn main() -> clifford4::Result<()> {
    let mut args = std::env::args().skip(1);
    let mode: Mode = args.next().as_deref().unwrap_or("complex").parse()?;
    let label: OrbitLabel = args.next().as_deref().unwrap_or("U12/34").parse()?;
    let a = Analysis::build(mode)?;
    let Some(id) = a.orbit_id(&label) else {
        eprintln!("no orbit {label} in {mode} mode");
        std::process::exit(2);
    };
    println!("{label} ({} states)", a.partition.orbit(id).size);
    for row in a.compare_census().iter().filter(|r| r.source == label) {
        let status = if row.matches { "matches" } else { "DIFFERS" };
        println!("  CZ{}: {}  [{status}]", row.pair, row.describe_computed());
        for cell in row.misprints() {
            let mp = cell.misprint.as_ref().unwrap();
            println!("        published \"{}\": {}", mp.printed, mp.reason);
        }
    }
    Ok(())
}
