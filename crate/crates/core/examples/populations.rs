//! Count the distinct measurement populations of all Clifford states and
//! check that each support is an affine subspace of the bit hypercube.
//!
//! ```bash
//! cargo run --release --example populations
//! ```

use clifford4::closure::closure;
use clifford4::exact_state::ExactState;
use clifford4::gates::Mode;
use clifford4::populations::population_census;

fn main() -> clifford4::Result<()> {
    for mode in [Mode::Complex, Mode::Real] {
        let set = closure(&[ExactState::zero()], &mode.full_generators())?;
        let pc = population_census(&set)?;
        println!("{mode}: every population is uniform over its support");
        print!("{}", pc.to_table());
        println!("non-affine supports: {}\n", pc.non_affine().len());
    }
    Ok(())
}
