//! The average function over a conjugation orbit, and the transfer as a power of it.
//!
//! For `H ≤ G`, `π : H → A` with abelian image, and right-coset representatives
//! `G = ⋃ H·t_i` with `t_1 = 1`, the base function `f(h·t_i) = π(h)` is fixed
//! by `H` under conjugation and
//!
//! ```text
//! θ*(x) = ∏ f^{t_i}(x) = f̄(x)^m,   m = [Stab_G(f) : H]
//! ```
//!
//! where `f̄` is the product of the distinct conjugates of `f`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::function::{GroupFunction, Homomorphism};
use crate::group::{Elem, Group};
use crate::subgroup::{CosetSide, CosetSystem, Subgroup};

/// Pointwise product of `functions` in the given order.
fn product_of(functions: &[GroupFunction]) -> Result<GroupFunction> {
    let first = functions.first().ok_or_else(|| Error::Precondition("empty product".into()))?;
    let mut acc = GroupFunction::constant_identity(first.domain(), first.codomain());
    for f in functions {
        acc = acc.pointwise_product(f)?;
    }
    Ok(acc)
}

/// `f̄ = f^{g_1} * … * f^{g_n}` over the distinct conjugates of `f`.
///
/// Requires `⟨f(G)⟩` abelian; conjugate values lie in it, so the product is order-free.
pub fn average_function(f: &GroupFunction) -> Result<Homomorphism> {
    let span = f.image_subgroup();
    if !span.is_abelian() {
        return Err(Error::NotAbelian(format!("⟨f(G)⟩ has order {} and does not commute", span.order())));
    }
    // f^1 has the same conjugates as f and is identity preserving.
    let orbit = f.conjugate(0)?.orbit()?;
    let avg = product_of(&orbit.members)?;
    Homomorphism::new(avg).map_err(|e| Error::InvariantViolation(format!("average function: {e}")))
}

/// `H ≤ G`, a homomorphism `π : H → A` with abelian image, and right-coset representatives of `H`.
#[derive(Clone, Debug)]
pub struct TransferSetup {
    pub group: Arc<Group>,
    pub subgroup: Subgroup,
    /// Domain is `subgroup.as_group()`: local index `i` stands for `subgroup.members()[i]`.
    pub target_hom: Homomorphism,
    pub cosets: CosetSystem,
}

impl TransferSetup {
    pub fn new(subgroup: &Subgroup, target_hom: Homomorphism) -> Result<TransferSetup> {
        let local = subgroup.as_group();
        if **target_hom.domain() != *local {
            return Err(Error::Shape("target homomorphism is not defined on the subgroup".into()));
        }
        if !target_hom.image().is_abelian() {
            return Err(Error::NotAbelian("image of the target homomorphism".into()));
        }
        let cosets = CosetSystem::new(subgroup, CosetSide::Right);
        Ok(TransferSetup { group: subgroup.parent().clone(), subgroup: subgroup.clone(), target_hom, cosets })
    }

    /// Replaces the coset representatives; the identity must be one of them.
    pub fn with_representatives(&self, reps: &[Elem]) -> Result<TransferSetup> {
        if !reps.contains(&0) {
            return Err(Error::Precondition("the identity must be a coset representative".into()));
        }
        let cosets = CosetSystem::with_representatives(&self.subgroup, CosetSide::Right, reps)?;
        Ok(TransferSetup { cosets, ..self.clone() })
    }

    pub fn index(&self) -> usize {
        self.cosets.len()
    }

    fn pi(&self, h: Elem) -> Elem {
        self.target_hom.value(self.subgroup.local_index(h).expect("element of H"))
    }
}

/// `f(h·t_i) = π(h)`.
pub fn transfer_base_function(setup: &TransferSetup) -> Result<GroupFunction> {
    let g = &setup.group;
    let mut values = Vec::with_capacity(g.order());
    for x in g.elements() {
        let (h, _t) = setup.cosets.decompose(x);
        if !setup.subgroup.contains(h) {
            return Err(Error::InvariantViolation(format!("coset decomposition of {x} left H")));
        }
        values.push(setup.pi(h));
    }
    GroupFunction::new(g, setup.target_hom.codomain(), values)
}

/// `θ*(x) = ∏_i f^{t_i}(x)`, in representative order.
pub fn transfer(setup: &TransferSetup) -> Result<Homomorphism> {
    let f = transfer_base_function(setup)?;
    let conjugates = setup.cosets.representatives().iter().map(|&t| f.conjugate(t)).collect::<Result<Vec<_>>>()?;
    let theta = product_of(&conjugates)?;
    Homomorphism::new(theta).map_err(|e| Error::InvariantViolation(format!("transfer: {e}")))
}

/// `[Stab_G(f) : H]` for the base function, after checking `H ≤ Stab_G(f)`.
pub fn transfer_multiplicity(setup: &TransferSetup) -> Result<usize> {
    let f = transfer_base_function(setup)?;
    let stab = f.stabilizer()?;
    if !setup.subgroup.is_subset_of(&stab) {
        return Err(Error::InvariantViolation("base function is not stabilised by H".into()));
    }
    Ok(stab.order() / setup.subgroup.order())
}

/// Checks `θ*(x) = f̄(x)^m` for every `x`.
pub fn verify_transfer_power_relation(setup: &TransferSetup) -> Result<bool> {
    let f = transfer_base_function(setup)?;
    let m = transfer_multiplicity(setup)?;
    let theta = transfer(setup)?;
    let avg = average_function(&f)?;
    Ok(avg.function().pointwise_pow(m) == *theta.function())
}
