//! Find an element of prime order by counting fixed points of Z_p acting on functions.
//!
//! ```text
//! cargo run --example cauchy -- symmetric:4 3
//! ```

use std::sync::Arc;

use distributors::function::DEFAULT_ENUMERATION_CAP;
use distributors::harness::cauchy_demo;
use distributors::io::parse_group_spec;

fn main() -> distributors::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let spec = args.first().map_or("symmetric:3", String::as_str);
    let p: usize = args.get(1).map_or(Ok(3), |s| s.parse()).expect("prime");
    let g = Arc::new(parse_group_spec(spec)?);

    let out = cauchy_demo(&g, p, DEFAULT_ENUMERATION_CAP)?;
    println!("{spec} (order {}), p = {p}", g.order());
    println!("  mode: {}", out.census_mode);
    if let Some(census) = &out.census {
        println!("  {} identity-preserving functions Z_{p} -> G", census.total);
        for (size, count) in &census.orbit_size_histogram {
            println!("  {count} orbit(s) of size {size}");
        }
    }
    println!("  {} fixed points, a multiple of {p}", out.fixed_point_count);
    println!("  element {} = {} has order {p}", out.element, out.element_label);
    Ok(())
}
