//! Grow a p-subgroup through normalisers until it reaches the full p-part of |G|.
//!
//! ```text
//! cargo run --example sylow -- symmetric:4 2
//! ```

use std::sync::Arc;

use distributors::function::DEFAULT_ENUMERATION_CAP;
use distributors::harness::sylow_build;
use distributors::io::parse_group_spec;

fn main() -> distributors::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let spec = args.first().map_or("symmetric:4", String::as_str);
    let p: usize = args.get(1).map_or(Ok(2), |s| s.parse()).expect("prime");
    let g = Arc::new(parse_group_spec(spec)?);

    let out = sylow_build(&g, p, DEFAULT_ENUMERATION_CAP)?;
    for it in &out.iterations {
        println!(
            "|H| = {:>3}  |N(H)| = {:>3}  [N(H):H] = {:>2}  extend by {}",
            it.subgroup_order,
            it.normalizer_order,
            it.normalizer_index,
            g.label(it.new_generator)
        );
    }
    let h = &out.subgroup;
    println!("Sylow {p}-subgroup of {spec}: order {}", h.order());
    let labels: Vec<String> = h.members().iter().map(|&x| g.label(x)).collect();
    println!("  {}", labels.join(" "));
    Ok(())
}
