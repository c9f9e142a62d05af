//! The transfer G -> A as a power of the average of one function's conjugates.
//!
//! Runs every built-in setup and compares against the coset-action formula.

use distributors::catalog::transfer_setups;
use distributors::transfer::{transfer, transfer_base_function, transfer_multiplicity, verify_transfer_power_relation};

fn main() -> distributors::Result<()> {
    for (name, setup) in transfer_setups() {
        let f = transfer_base_function(&setup)?;
        let theta = transfer(&setup)?;
        let m = transfer_multiplicity(&setup)?;
        println!("{name}");
        println!("  [G:H] = {}, |Stab(f)| = {}, m = {m}", setup.index(), f.stabilizer()?.order());
        println!("  transfer = {:?}{}", theta.values(), if theta.is_trivial() { " (trivial)" } else { "" });
        println!("  power relation holds: {}", verify_transfer_power_relation(&setup)?);
    }
    Ok(())
}
