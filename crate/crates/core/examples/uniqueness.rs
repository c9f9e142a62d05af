//! Any two lifts through an abelian kernel are conjugate by a kernel element, and the
//! conjugator comes from the same averaging formula.
//!
//! Enumerates every section of S_3 -> S_3/A_3, lifts each, and conjugates each pair.

use std::collections::BTreeSet;

use distributors::catalog::{all_sections, s3_over_a3};
use distributors::distributed::{conjugator_between, lift_section};

fn main() -> distributors::Result<()> {
    let ext = s3_over_a3();
    let q = ext.quotient();
    let h = ext.extension_group();
    let lifts = all_sections(&ext).iter().map(|s| lift_section(&q, &ext.hom, s).map(|l| l.hom)).collect::<Result<Vec<_>, _>>()?;
    let images: BTreeSet<Vec<usize>> = lifts.iter().map(|l| l.image().members().to_vec()).collect();
    println!("{} sections, {} distinct complements", lifts.len(), images.len());
    for image in &images {
        let labels: Vec<String> = image.iter().map(|&x| h.label(x)).collect();
        println!("  {{{}}}", labels.join(", "));
    }
    for (i, f1) in lifts.iter().enumerate() {
        for (j, f2) in lifts.iter().enumerate() {
            let c = conjugator_between(f1, f2, &ext.kernel)?;
            println!("  lift {i} = c⁻¹ · lift {j} · c with c = {}", h.label(c));
        }
    }
    Ok(())
}
