//! Lift homomorphisms G -> H/N to G -> H when |N| and |G| are coprime.
//!
//! Abelian kernels take one averaging step; a soluble kernel takes one per derived layer.

use distributors::catalog::{abelian_extensions, s3z5_over_s3, Extension};
use distributors::distributed::{sz_lift_abelian, sz_lift_soluble};

fn show(ext: &Extension, soluble: bool) -> distributors::Result<()> {
    let lift = if soluble { sz_lift_soluble(&ext.kernel, &ext.hom)? } else { sz_lift_abelian(&ext.kernel, &ext.hom)? };
    let h = ext.extension_group();
    let labels: Vec<String> = lift.hom.values().iter().map(|&x| h.label(x)).collect();
    println!("{}: |N| = {}, |G| = {}", ext.name, ext.kernel.order(), ext.hom.domain().order());
    for step in &lift.steps {
        println!("  step: kernel order {}, [G:K] = {}, m = {}", step.kernel_order, step.index, step.m);
    }
    println!("  lift = [{}], image of order {}", labels.join(", "), lift.hom.image().order());
    Ok(())
}

fn main() -> distributors::Result<()> {
    for ext in abelian_extensions() {
        show(&ext, false)?;
    }
    show(&s3z5_over_s3(), true)
}
