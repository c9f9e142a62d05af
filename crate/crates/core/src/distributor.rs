//! Distributors `[x,y;f] = f(y)⁻¹·f(x)⁻¹·f(xy)`, the operators `D_a`, and the
//! distributor subgroup `[G,G;f]`.
//!
//! Distributors are to arbitrary functions what commutators are to groups:
//! for the inversion map they are exactly the commutators `[y⁻¹,x⁻¹]`, and for
//! a coset section they are the factor set of the extension.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::{GroupFunction, Homomorphism};
use crate::group::Elem;
use crate::subgroup::{is_normal, normal_subgroups, QuotientGroup, Subgroup};

/// Largest image subgroup for which [`verify_minimality`] enumerates normal subgroups.
pub const MINIMALITY_IMAGE_CAP: usize = 24;

#[inline]
pub(crate) fn distributor_unchecked(f: &GroupFunction, x: Elem, y: Elem) -> Elem {
    let (g, h) = (f.domain(), f.codomain());
    h.mul(h.mul(h.inv(f.value(y)), h.inv(f.value(x))), f.value(g.mul(x, y)))
}

/// `[x,y;f]`, evaluated both as `f(y)⁻¹f(x)⁻¹f(xy)` and as `f(y)⁻¹f^x(y)`.
pub fn distributor(f: &GroupFunction, x: Elem, y: Elem) -> Result<Elem> {
    let (g, h) = (f.domain(), f.codomain());
    g.check(x)?;
    g.check(y)?;
    let direct = distributor_unchecked(f, x, y);
    let fx_y = h.mul(h.inv(f.value(x)), f.value(g.mul(x, y)));
    let via_conjugate = h.mul(h.inv(f.value(y)), fx_y);
    if direct != via_conjugate {
        return Err(Error::InvariantViolation(format!("distributor forms disagree at ({x},{y})")));
    }
    if f.value(g.mul(x, y)) != h.mul(h.mul(f.value(x), f.value(y)), direct) {
        return Err(Error::InvariantViolation(format!("f(xy) != f(x)f(y)[x,y;f] at ({x},{y})")));
    }
    Ok(direct)
}

/// All `|G|²` distributors of a function.
#[derive(Clone, Debug)]
pub struct DistributorTable {
    pub function: GroupFunction,
    entries: Vec<Elem>,
}

impl DistributorTable {
    pub fn new(f: &GroupFunction) -> DistributorTable {
        let n = f.domain().order();
        let mut entries = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                entries.push(distributor_unchecked(f, x, y));
            }
        }
        DistributorTable { function: f.clone(), entries }
    }

    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.entries[x * self.function.domain().order() + y]
    }

    /// Distinct distributor values, ascending.
    pub fn values(&self) -> Vec<Elem> {
        self.entries.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }
}

/// `D_a f : x ↦ [x,a;f]`.
pub fn distributor_operator(f: &GroupFunction, a: Elem) -> Result<GroupFunction> {
    f.domain().check(a)?;
    let values = f.domain().elements().map(|x| distributor_unchecked(f, x, a)).collect();
    GroupFunction::new(f.domain(), f.codomain(), values)
}

/// `[y,z;f][x,yz;f] = [x,y;f]^{f(z)}[xy,z;f]`.
pub fn verify_triple_identity(f: &GroupFunction, x: Elem, y: Elem, z: Elem) -> bool {
    let (g, h) = (f.domain(), f.codomain());
    let d = |a, b| distributor_unchecked(f, a, b);
    let lhs = h.mul(d(y, z), d(x, g.mul(y, z)));
    let rhs = h.mul(h.conj(d(x, y), f.value(z)), d(g.mul(x, y), z));
    lhs == rhs
}

/// `[xy,z;f] = [x,z;f][y,z;f^x]`.
pub fn verify_action_shift(f: &GroupFunction, x: Elem, y: Elem, z: Elem) -> bool {
    let (g, h) = (f.domain(), f.codomain());
    let fx = f.conjugate(x).expect("x in range");
    let lhs = distributor_unchecked(f, g.mul(x, y), z);
    let rhs = h.mul(distributor_unchecked(f, x, z), distributor_unchecked(&fx, y, z));
    lhs == rhs
}

/// `[G,G;f] = ⟨[x,y;f] : x,y ∈ G⟩`, checked to be normal in `⟨f(G)⟩`.
pub fn distributor_subgroup(f: &GroupFunction) -> Result<Subgroup> {
    let mut values = DistributorTable::new(f).values();
    values.retain(|&v| v != 0);
    let sub = Subgroup::closure(f.codomain(), &values)?;
    let image = f.image_subgroup();
    let h = f.codomain();
    for &d in sub.members() {
        for &y in image.members() {
            if !sub.contains(h.conj(d, y)) {
                return Err(Error::InvariantViolation(format!(
                    "distributor subgroup not normal in the image: {d} conjugated by {y}"
                )));
            }
        }
    }
    Ok(sub)
}

/// `π ∘ f : G → f(G)/[G,G;f]` together with the pieces it was built from.
#[derive(Clone, Debug)]
pub struct DistributorQuotient {
    /// `⟨f(G)⟩` in the codomain.
    pub image: Subgroup,
    /// `[G,G;f]` in the codomain.
    pub distributors: Subgroup,
    /// Quotient of `image.as_group()` by the localized distributor subgroup.
    pub quotient: QuotientGroup,
    pub hom: Homomorphism,
}

/// Projects `f` onto `f(G)/[G,G;f]`, where it becomes a homomorphism.
pub fn canonical_quotient_hom(f: &GroupFunction) -> Result<DistributorQuotient> {
    let image = f.image_subgroup();
    let distributors = distributor_subgroup(f)?;
    let local = image.as_group();
    let kernel = image.localize(&distributors, &local)?;
    let quotient = QuotientGroup::new(&kernel)
        .map_err(|e| Error::InvariantViolation(format!("distributor subgroup quotient failed: {e}")))?;
    let values = f.values().iter().map(|&v| quotient.project(image.local_index(v).unwrap())).collect();
    let pf = GroupFunction::new(f.domain(), quotient.group(), values)?;
    let hom = Homomorphism::new(pf).map_err(|e| Error::InvariantViolation(format!("π∘f is not a homomorphism: {e}")))?;
    Ok(DistributorQuotient { image, distributors, quotient, hom })
}

/// For every normal `K ⊴ f(G)`: `π_K ∘ f` is a homomorphism iff `[G,G;f] ≤ K`.
pub fn verify_minimality(f: &GroupFunction) -> Result<bool> {
    let image = f.image_subgroup();
    if image.order() > MINIMALITY_IMAGE_CAP {
        return Err(Error::SizeLimit {
            what: "image subgroup order".into(),
            count: image.order() as u128,
            cap: MINIMALITY_IMAGE_CAP as u128,
        });
    }
    let distributors = distributor_subgroup(f)?;
    let local: Arc<_> = image.as_group();
    let local_distributors = image.localize(&distributors, &local)?;
    let local_f: Vec<Elem> = f.values().iter().map(|&v| image.local_index(v).unwrap()).collect();
    for k in normal_subgroups(&local) {
        debug_assert!(is_normal(&k));
        let q = QuotientGroup::new(&k)?;
        let pf = GroupFunction::new(f.domain(), q.group(), local_f.iter().map(|&v| q.project(v)).collect())?;
        if pf.is_homomorphism() != local_distributors.is_subset_of(&k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Summary of `f(G)/[G,G;f]` for reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DistributorCensus {
    pub function: Vec<Elem>,
    pub distributor_subgroup_order: usize,
    pub image_order: usize,
    pub quotient_order: usize,
}

pub fn distributor_census(f: &GroupFunction) -> Result<DistributorCensus> {
    let q = canonical_quotient_hom(f)?;
    Ok(DistributorCensus {
        function: f.values().to_vec(),
        distributor_subgroup_order: q.distributors.order(),
        image_order: q.image.order(),
        quotient_order: q.image.order() / q.distributors.order(),
    })
}
