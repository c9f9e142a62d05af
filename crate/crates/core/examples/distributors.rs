//! Distributors of a function and the subgroup they generate.
//!
//! For inversion the distributors are commutators and the subgroup is G'.

use std::sync::Arc;

use distributors::distributor::{canonical_quotient_hom, distributor_census, verify_minimality, DistributorTable};
use distributors::function::GroupFunction;
use distributors::group::Group;

fn main() -> distributors::Result<()> {
    for g in [Group::symmetric(3)?, Group::dihedral(4)?, Group::alternating(4)?, Group::symmetric(4)?] {
        let g = Arc::new(g);
        let inv = GroupFunction::inversion(&g);
        let census = distributor_census(&inv)?;
        let q = canonical_quotient_hom(&inv)?;
        println!(
            "order {:>2}: {} distinct distributors, [G,G;inv] of order {}, quotient of order {}, minimal: {}",
            g.order(),
            DistributorTable::new(&inv).values().len(),
            census.distributor_subgroup_order,
            q.quotient.group().order(),
            verify_minimality(&inv)?,
        );
    }

    let s3 = Arc::new(Group::symmetric(3)?);
    let inv = GroupFunction::inversion(&s3);
    let table = DistributorTable::new(&inv);
    println!("\n[x,y;inv] on S_3:");
    for x in s3.elements() {
        let row: Vec<String> = s3.elements().map(|y| format!("{:>9}", s3.label(table.get(x, y)))).collect();
        println!("{:>9} |{}", s3.label(x), row.join(""));
    }
    Ok(())
}
