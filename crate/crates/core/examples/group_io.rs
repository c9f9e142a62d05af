//! Parse group expressions, build groups from permutations, and round-trip JSON.

use distributors::group::{Group, DEFAULT_ELEMENT_CAP};
use distributors::io::{group_from_json, group_to_json, parse_group_spec};
use distributors::subgroup::{derived_series, normal_subgroups, Subgroup};
use std::sync::Arc;

fn main() -> distributors::Result<()> {
    for spec in ["cyclic:6", "dihedral:4", "product:cyclic:2,symmetric:3", "alternating:4"] {
        let g = Arc::new(parse_group_spec(spec)?);
        let series: Vec<usize> = derived_series(&Subgroup::whole(&g)).iter().map(Subgroup::order).collect();
        println!(
            "{spec:<30} order {:>2}, abelian {:<5}, {} normal subgroups, derived series {series:?}",
            g.order(),
            g.is_abelian(),
            normal_subgroups(&g).len()
        );
    }

    // the affine group of Z_5
    let g = Group::from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![0, 2, 4, 1, 3]], DEFAULT_ELEMENT_CAP)?;
    let text = group_to_json(&g);
    println!("\nZ5:Z4 as JSON ({} bytes)", text.len());
    assert_eq!(group_from_json(&text)?, g);

    match parse_group_spec("product:cyclic:2;cyclic:3") {
        Err(e) => println!("bad expression: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
