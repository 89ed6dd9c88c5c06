//! Real-mode pipeline against the golden diagram and the published
//! tables; the complex mode is covered by the acceptance target.

use std::collections::BTreeSet;

use clifford4::analysis::{verify, Analysis, Outcome};
use clifford4::exact_state::ExactState;
use clifford4::gates::Mode;
use clifford4::ket::parse_state;
use clifford4::labels::OrbitLabel;
use clifford4::orbits::orbit_report;
use clifford4::reference;

fn real() -> Analysis {
    Analysis::build(Mode::Real).unwrap()
}

#[test]
fn real_graph_matches_golden_diagram() {
    let a = real();
    let golden: BTreeSet<(String, String)> = reference::diagram_edges(Mode::Real)
        .into_iter()
        .map(|(x, y)| {
            let (x, y) = (x.to_string(), y.to_string());
            if x <= y {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect();
    assert_eq!(a.graph.named_edges(), golden);
    assert_eq!(a.graph.diameter().unwrap(), 5);
    let what = a.orbit_id(&"What^r".parse().unwrap()).unwrap();
    let hats: BTreeSet<String> = a.graph.neighbors(what).iter().map(|&o| a.graph.name(o).to_string()).collect();
    assert_eq!(hats.len(), 6);
    assert!(hats.iter().all(|n| n.starts_with("Xhat")));
}

#[test]
fn real_verification_has_only_warnings() {
    let a = real();
    let report = verify(&a, 300);
    let failures: Vec<String> = report
        .checks
        .iter()
        .filter(|c| c.outcome == Outcome::Fail)
        .map(|c| c.to_string())
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
    // Vhat3, Vhat4, T14, X12/34 representatives and the six What cells
    assert_eq!(report.warnings().count(), 10, "{report}");
}

#[test]
fn exports_are_deterministic() {
    let (a, b) = (real(), real());
    assert_eq!(a.graph.to_dot(), b.graph.to_dot());
    assert_eq!(a.graph.to_json(), b.graph.to_json());
    assert_eq!(a.census.to_tsv(&a.partition), b.census.to_tsv(&b.partition));
    assert_eq!(orbit_report(&a.partition), orbit_report(&b.partition));
}

#[test]
fn census_tsv_shape() {
    let a = real();
    let tsv = a.census.to_tsv(&a.partition);
    let mut lines = tsv.lines();
    assert_eq!(lines.next(), Some("orbit\tgate\ttarget\tcount"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split('\t').collect()).collect();
    assert!(rows.iter().all(|r| r.len() == 4));
    // every (orbit, gate) group sums to the orbit size
    let total: u64 = rows.iter().map(|r| r[3].parse::<u64>().unwrap()).sum();
    assert_eq!(total, 6 * 8640);
}

#[test]
fn orbit_report_lines_parse() {
    let a = real();
    let report = orbit_report(&a.partition);
    let lines: Vec<serde_json::Value> = report.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 29);
    for v in &lines {
        let rep = ExactState::from_hex(v["representative"].as_str().unwrap()).unwrap();
        let label: OrbitLabel = v["label"].as_str().unwrap().parse().unwrap();
        assert_eq!(a.label_of(a.orbit_of_state(&rep).unwrap()), label);
        assert!(["0/1", "2/3", "1/1", "4/3", "5/3"].contains(&v["entropy"].as_str().unwrap()));
    }
}

#[test]
fn connect_examples() {
    let a = real();
    let conn = a.connector().unwrap();
    let zero = ExactState::zero();
    assert!(conn.connect(&zero, &zero).unwrap().is_empty());
    let t12 = parse_state("(1/sqrt2)(|1110> - |1101>)").unwrap();
    let c = conn.connect(&zero, &t12).unwrap();
    assert_eq!(c.cnot_count(), 1);
    assert_eq!(c.apply(&zero), t12);
    let complex_only = parse_state("(1/sqrt2)(|0000> + i|1111>)").unwrap();
    assert!(matches!(
        conn.connect(&zero, &complex_only),
        Err(clifford4::Error::RealModeViolation(_))
    ));
}
