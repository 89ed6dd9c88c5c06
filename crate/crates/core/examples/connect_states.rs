//! Synthesize a circuit between two states with as few CNOTs as the orbit
//! graph allows, then replay it.
//!
//! ```bash
//! cargo run --release --example connect_states -- complex "|0000>" "1/2(|1111> - |1001> - |0110> - |0000>)"
//! ```

use clifford4::analysis::Analysis;
use clifford4::gates::Mode;
use clifford4::ket::parse_state;

fn main() -> clifford4::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mode: Mode = args.first().map_or("complex", String::as_str).parse()?;
    let from = parse_state(args.get(1).map_or("|0000>", String::as_str))?;
    let to = parse_state(
        args.get(2)
            .map_or("1/2(|1111> - |1001> - |0110> - |0000>)", String::as_str),
    )?;

    let a = Analysis::build(mode)?;
    let conn = a.connector()?;
    let circuit = conn.connect(&from, &to)?;
    let (oa, ob) = (a.orbit_of_state(&from).unwrap(), a.orbit_of_state(&to).unwrap());
    println!("{from}  in {}", a.label_of(oa));
    println!("{to}  in {}", a.label_of(ob));
    println!("orbit path: {:?}", a.graph.shortest_path(oa, ob).unwrap().iter().map(|&o| a.graph.name(o)).collect::<Vec<_>>());
    println!("circuit ({} gates, {} CNOTs): {circuit}", circuit.len(), circuit.cnot_count());
    assert_eq!(circuit.apply(&from), to);
    println!("replay reaches the target exactly");
    Ok(())
}
