//! Enumerate every Clifford state reachable from |0000>, in both modes,
//! and round-trip the complex set through the on-disk format.
//!
//! ```bash
//! cargo run --release --example enumerate
//! ```

use std::io::Cursor;
use std::time::Instant;

use clifford4::closure::{closure, StateSet};
use clifford4::exact_state::ExactState;
use clifford4::gates::{GeneratorSet, Mode};

fn main() -> clifford4::Result<()> {
    for mode in [Mode::Complex, Mode::Real] {
        let gens = mode.full_generators();
        let t = Instant::now();
        let set = closure(&[ExactState::zero()], &gens)?;
        println!(
            "{mode:>7}: {} states under {} ({} generators) in {:.2?}",
            set.len(),
            gens.name,
            gens.len(),
            t.elapsed()
        );
        let real = set.iter().filter(|s| s.is_real()).count();
        println!("         {real} of them have real amplitudes");
        println!("         first: {}", set.get(0));
        println!("         last:  {}", set.get(set.len() - 1));

        if mode == Mode::Complex {
            let mut buf = Vec::new();
            set.write_to(&mut buf)?;
            let back = StateSet::read_from(Cursor::new(&buf))?;
            assert_eq!(back.states(), set.states());
            println!("         state file: {} bytes, reloads identically", buf.len());
        }
    }

    // local gates alone never entangle
    let local = closure(&[ExactState::zero()], &GeneratorSet::local_complex())?;
    println!("product states (local closure of |0000>): {}", local.len());
    Ok(())
}
