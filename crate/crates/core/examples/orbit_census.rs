//! Orbit sizes of G acting on identity-preserving functions G -> H; fixed points are
//! exactly the homomorphisms.
//!
//! ```text
//! cargo run --example orbit_census -- cyclic:3 symmetric:3
//! ```

use std::sync::Arc;

use distributors::function::{GroupFunction, DEFAULT_ENUMERATION_CAP};
use distributors::harness::orbit_census;
use distributors::io::parse_group_spec;

fn main() -> distributors::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let d = args.first().map_or("cyclic:3", String::as_str);
    let c = args.get(1).map_or("symmetric:3", String::as_str);
    let (g, h) = (Arc::new(parse_group_spec(d)?), Arc::new(parse_group_spec(c)?));

    let census = orbit_census(&g, &h, DEFAULT_ENUMERATION_CAP)?;
    println!("{d} -> {c}: {} functions", census.total);
    for (size, count) in &census.orbit_size_histogram {
        println!("  size {size:>3}: {count}");
    }
    for values in &census.fixed_points {
        let f = GroupFunction::new(&g, &h, values.clone())?;
        assert!(f.is_homomorphism());
        let labels: Vec<String> = values.iter().map(|&v| h.label(v)).collect();
        println!("  homomorphism [{}]", labels.join(", "));
    }
    Ok(())
}
