//! Acceptance criteria, one line each.
//!
//! Runs without the libtest harness so every criterion prints exactly one
//! `PASS`/`FAIL` line. A criterion that fails only because of a documented
//! inconsistency in the published data prints `FAIL (documented)` and does
//! not fail the run; any other failure exits nonzero.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use clifford4::analysis::{refinement, Analysis};
use clifford4::exact_state::ExactState;
use clifford4::gates::{cnot_gates, Gate, Mode, QubitPair};
use clifford4::ket::parse_state;
use clifford4::labels::{Family, OrbitLabel};
use clifford4::orbits::{AnchorStatus, Entropy, EntropyProfile};
use clifford4::populations::population_census;
use clifford4::reference;
use clifford4::transitions::cnot_census;

enum Verdict {
    Pass(String),
    /// Fails only on cells or rows listed in the decisions log.
    Documented(String),
    Fail(String),
}

fn check(cond: bool, detail: String) -> Verdict {
    if cond {
        Verdict::Pass(detail)
    } else {
        Verdict::Fail(detail)
    }
}

fn label(s: &str) -> OrbitLabel {
    s.parse().unwrap()
}

fn c1_enumeration(c: &Analysis, r: &Analysis) -> Verdict {
    let (nc, nr) = (c.set.len(), r.set.len());
    check(nc == 293760 && nr == 8640, format!("complex {nc}, real {nr}"))
}

fn size_multiset(a: &Analysis) -> BTreeMap<usize, usize> {
    a.partition.size_multiset()
}

fn c2_orbits(c: &Analysis, r: &Analysis) -> Verdict {
    let want_c = BTreeMap::from([(10368, 1), (6912, 6), (4608, 3), (20736, 5), (41472, 3)]);
    let want_r = BTreeMap::from([(512, 9), (256, 12), (128, 7), (64, 1)]);
    let (gc, gr) = (size_multiset(c), size_multiset(r));
    let per_label = [c, r].iter().all(|a| {
        a.partition
            .orbits()
            .iter()
            .all(|o| reference::orbit_size(&a.label_of(o.id)) == Some(o.size))
    });
    check(
        c.partition.len() == 18 && r.partition.len() == 29 && gc == want_c && gr == want_r && per_label,
        format!("{} complex orbits {gc:?}; {} real orbits {gr:?}", c.partition.len(), r.partition.len()),
    )
}

fn c3_entropy(c: &Analysis, r: &Analysis) -> Verdict {
    let mut problems = Vec::new();
    for a in [c, r] {
        if let Err(e) = a.partition.check_profiles(&a.set) {
            problems.push(e.to_string());
        }
        for o in a.partition.orbits() {
            let l = a.label_of(o.id);
            if o.entropy != reference::orbit_entropy(&l) {
                problems.push(format!("{l}: {} vs published {}", o.entropy, reference::orbit_entropy(&l)));
            }
        }
    }
    let values: BTreeSet<Entropy> = c.partition.orbits().iter().map(|o| o.entropy).collect();
    let want: BTreeSet<Entropy> = [0, 2, 3, 4, 5].into_iter().map(Entropy::from_thirds).collect();
    let max = values.iter().max().copied().unwrap();
    let shown: Vec<String> = values.iter().map(Entropy::to_string).collect();
    check(
        problems.is_empty() && values == want && max == Entropy::from_thirds(5),
        if problems.is_empty() {
            format!("values {{{}}}, max {max}, constant on every orbit", shown.join(", "))
        } else {
            problems.join("; ")
        },
    )
}

fn c4_transitions(c: &Analysis, r: &Analysis) -> Verdict {
    let mut undocumented = Vec::new();
    let mut fixed_1526 = Vec::new();
    let mut what_rows = Vec::new();
    let mut rows = 0;
    for a in [c, r] {
        for row in a.compare_census() {
            rows += 1;
            if !row.matches {
                undocumented.push(format!("{} CZ{}: {}", row.source, row.pair, row.describe_computed()));
                continue;
            }
            for cell in row.misprints() {
                let printed = &cell.misprint.as_ref().unwrap().printed;
                if printed.starts_with("1526") {
                    // the row-sum oracle: the other cell is 3072, the orbit 4608
                    let others: u64 = row.computed.values().sum::<u64>() - cell.count;
                    if cell.count == 1536 && others + cell.count == 4608 {
                        fixed_1526.push(format!("{} CZ{}", row.source, row.pair));
                    } else {
                        undocumented.push(format!("{} CZ{}: 1526 cell is {}", row.source, row.pair, cell.count));
                    }
                } else if row.source.family == Family::WHat {
                    what_rows.push(format!("CZ{} -> {} (printed {printed})", row.pair, cell.target));
                } else {
                    undocumented.push(format!("{} CZ{}: unexpected misprint {printed}", row.source, row.pair));
                }
            }
        }
    }
    if !undocumented.is_empty() {
        return Verdict::Fail(undocumented.join("; "));
    }
    let detail = format!(
        "{rows} rows; every published cell reproduced except: \"1526\" computed as 1536 in {} cells (warned); \
         What^r row gives {} (involution-symmetric with the Xhat_ab row)",
        fixed_1526.len(),
        what_rows.join(", ")
    );
    if fixed_1526.len() == 6 && what_rows.is_empty() {
        Verdict::Pass(detail)
    } else if fixed_1526.len() == 6 && what_rows.len() == 6 {
        Verdict::Documented(detail)
    } else {
        Verdict::Fail(detail)
    }
}

fn c5_diagrams(c: &Analysis, r: &Analysis) -> Verdict {
    let mut details = Vec::new();
    let mut ok = true;
    for (a, want) in [(c, 3), (r, 5)] {
        let golden: BTreeSet<(String, String)> = reference::diagram_edges(a.mode)
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
        let edges = a.graph.named_edges();
        let d = a.graph.diameter().ok();
        ok &= edges == golden && d == Some(want);
        details.push(format!("{}: {} edges (golden {}), diameter {d:?}", a.mode, edges.len(), golden.len()));
    }
    check(ok, details.join("; "))
}

fn c6_connect(c: &Analysis, r: &Analysis) -> Verdict {
    let mut details = Vec::new();
    let mut ok = true;
    for a in [c, r] {
        let conn = a.connector().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut worst = 0;
        let mut bad = 0;
        for _ in 0..1000 {
            let x = a.set.get(rng.gen_range(0..a.set.len()));
            let y = a.set.get(rng.gen_range(0..a.set.len()));
            let circ = conn.connect(&x, &y).unwrap();
            let d = a
                .graph
                .distance(a.orbit_of_state(&x).unwrap(), a.orbit_of_state(&y).unwrap())
                .unwrap();
            if circ.apply(&x) != y || circ.cnot_count() > d {
                bad += 1;
            }
            if a.mode == Mode::Real && circ.gates.iter().any(|g| !g.is_real()) {
                bad += 1;
            }
            worst = worst.max(circ.cnot_count());
        }
        let zero = ExactState::zero();
        let (far, far_label) = match a.mode {
            Mode::Complex => (
                parse_state("1/2(|1111> - |1001> - |0110> - |0000>)").unwrap(),
                "X14/23",
            ),
            Mode::Real => (
                parse_state(
                    "1/(2sqrt2)(|1110> + |1101> + |1011> - |1000> + |0111> - |0100> - |0010> - |0001>)",
                )
                .unwrap(),
                "What^r",
            ),
        };
        let far_circ = conn.connect(&zero, &far).unwrap();
        let want = if a.mode == Mode::Complex { 3 } else { 5 };
        let far_ok = far_circ.apply(&zero) == far
            && far_circ.cnot_count() == want
            && a.label_of(a.orbit_of_state(&far).unwrap()) == label(far_label);
        ok &= bad == 0 && far_ok;
        details.push(format!(
            "{}: 1000 pairs, {bad} failures, max {worst} CNOTs; S0 -> {far_label} uses {}",
            a.mode,
            far_circ.cnot_count()
        ));
    }
    check(ok, details.join("; "))
}

fn c7_populations(c: &Analysis) -> Verdict {
    match population_census(&c.set) {
        Ok(pc) => {
            let by_size = pc.by_size();
            let want = BTreeMap::from([(1, 16), (2, 120), (4, 140), (8, 30), (16, 1)]);
            check(
                by_size == want && pc.total() == 307,
                format!("uniform on all {} states; {by_size:?} total {}", c.set.len(), pc.total()),
            )
        }
        Err(e) => Verdict::Fail(e.to_string()),
    }
}

fn every_gate() -> Vec<Gate> {
    let mut g: Vec<Gate> = (1..=4)
        .flat_map(|q| [Gate::H(q), Gate::P(q), Gate::Z(q), Gate::X(q)])
        .collect();
    g.extend(cnot_gates());
    g.extend(QubitPair::all().map(|p| Gate::Cz(p.lo, p.hi)));
    g
}

fn c8_properties(c: &Analysis, r: &Analysis) -> Verdict {
    let gates = every_gate();
    // independent norm: sum of squared components against 2^k
    let norm_ok = |s: &ExactState| {
        let n: i64 = (0..16).map(|b| s.amp(b).re.pow(2) + s.amp(b).im.pow(2)).sum();
        n == 1i64 << s.k()
    };
    let involution = |g: &Gate, s: &ExactState| match g {
        Gate::P(_) => (0..4).fold(*s, |acc, _| g.apply(&acc)) == *s,
        _ => g.apply(&g.apply(s)) == *s,
    };
    let state_ok = |s: &ExactState| gates.iter().all(|g| norm_ok(&g.apply(s)) && involution(g, s));
    let real_bad = r.set.states().par_iter().filter(|s| !state_ok(s)).count();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let sample: Vec<ExactState> = (0..20_000).map(|_| c.set.get(rng.gen_range(0..c.set.len()))).collect();
    let complex_bad = sample.par_iter().filter(|s| !state_ok(s)).count();

    let mut form_mismatch = 0;
    for a in [c, r] {
        let cn = cnot_census(&a.set, &a.partition).unwrap();
        form_mismatch += a.census.mismatched_forms(&cn).len();
    }
    let flat = [c, r].iter().all(|a| {
        a.set
            .states()
            .par_iter()
            .all(|s| EntropyProfile::of(s).is_ok())
    });
    let distinct: HashSet<[u8; 33]> = c.set.states().par_iter().map(|s| s.encode()).collect();
    check(
        real_bad == 0 && complex_bad == 0 && form_mismatch == 0 && flat && distinct.len() == c.set.len(),
        format!(
            "{} gates: {real_bad} bad of {} real states, {complex_bad} bad of {} sampled complex; \
             CZ/CNOT form mismatches {form_mismatch}; flat spectra {flat}; {} distinct encodings",
            gates.len(),
            r.set.len(),
            sample.len(),
            distinct.len()
        ),
    )
}

fn c9_anchors(c: &Analysis, r: &Analysis) -> Verdict {
    let expected_bad: BTreeMap<OrbitLabel, &str> = [
        ("T14", "T23"),
        ("T14^r", "T23^r"),
        ("X12/34", "U12/34"),
        ("X12/34^r", "U12/34^r"),
        ("Vhat4^r", "malformed"),
    ]
    .into_iter()
    .map(|(l, a)| (label(l), a))
    .collect();
    let mut confirmed = 0;
    let mut predicted = Vec::new();
    let mut extra = Vec::new();
    let mut wrong = Vec::new();
    for f in c.anchors.iter().chain(&r.anchors) {
        let got = match &f.status {
            AnchorStatus::Confirmed => {
                confirmed += 1;
                if expected_bad.contains_key(&f.label) {
                    wrong.push(format!("{} unexpectedly confirmed", f.label));
                }
                continue;
            }
            AnchorStatus::Duplicate { actual } => actual.to_string(),
            AnchorStatus::Malformed { .. } => "malformed".to_string(),
            AnchorStatus::NotEnumerated => "not enumerated".to_string(),
        };
        match expected_bad.get(&f.label) {
            Some(&want) if want == got => predicted.push(f.label.to_string()),
            Some(_) => wrong.push(f.to_string()),
            // published Vhat3^r state: 1/2(|1010> + |1001> - |0011> - |0000>)
            None if f.label == label("Vhat3^r") && got == "V3^r" => extra.push(f.to_string()),
            None => wrong.push(f.to_string()),
        }
    }
    let total = c.anchors.len() + r.anchors.len();
    let detail = format!(
        "{confirmed} of {total} confirmed; predicted inconsistencies detected: {}; additional: {}",
        predicted.join(", "),
        if extra.is_empty() { "none".to_string() } else { extra.join("; ") }
    );
    if !wrong.is_empty() || predicted.len() != expected_bad.len() {
        Verdict::Fail(format!("{detail}; unexpected: {}", wrong.join("; ")))
    } else if extra.is_empty() {
        Verdict::Pass(detail)
    } else {
        Verdict::Documented(detail)
    }
}

fn c10_refinement(c: &Analysis, r: &Analysis) -> Verdict {
    match refinement(c, r) {
        Ok(map) => {
            let mut pieces: BTreeMap<OrbitLabel, usize> = BTreeMap::new();
            for cl in map.values() {
                *pieces.entry(*cl).or_insert(0) += 1;
            }
            let ok = pieces.len() == 18
                && pieces.iter().all(|(l, &k)| {
                    k == match l.family {
                        Family::S0 | Family::T(_) | Family::U(_) => 1,
                        Family::V(_) | Family::W => 2,
                        Family::X(_) => 3,
                        _ => 0,
                    }
                })
                && map.iter().all(|(rl, cl)| rl.family.unhatted() == cl.family);
            let shown: Vec<String> = pieces.iter().map(|(l, k)| format!("{l}:{k}")).collect();
            check(ok, shown.join(" "))
        }
        Err(e) => Verdict::Fail(e.to_string()),
    }
}

fn main() -> ExitCode {
    let t = Instant::now();
    let c = Analysis::build(Mode::Complex).expect("complex pipeline");
    let r = Analysis::build(Mode::Real).expect("real pipeline");
    println!("acceptance: pipelines built in {:.1?}", t.elapsed());

    let criteria: Vec<(&str, Verdict)> = vec![
        ("1 enumeration counts", c1_enumeration(&c, &r)),
        ("2 orbit counts and sizes", c2_orbits(&c, &r)),
        ("3 entropy spectrum", c3_entropy(&c, &r)),
        ("4 transition tables", c4_transitions(&c, &r)),
        ("5 connectivity diagrams", c5_diagrams(&c, &r)),
        ("6 circuit synthesis", c6_connect(&c, &r)),
        ("7 population census", c7_populations(&c)),
        ("8 property suite", c8_properties(&c, &r)),
        ("9 anchor audit", c9_anchors(&c, &r)),
        ("10 real/complex splitting", c10_refinement(&c, &r)),
    ];
    let mut failed = false;
    for (name, v) in &criteria {
        match v {
            Verdict::Pass(d) => println!("PASS {name}: {d}"),
            Verdict::Documented(d) => println!("FAIL (documented) {name}: {d}"),
            Verdict::Fail(d) => {
                failed = true;
                println!("FAIL {name}: {d}");
            }
        }
    }
    println!("acceptance: finished in {:.1?}", t.elapsed());
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
