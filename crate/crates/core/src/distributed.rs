//! The distributed average and Schur–Zassenhaus lifting.
//!
//! Given `f : G → H` with `[G,G;f] ≤ A` for an abelian `A`, a subgroup
//! `K ≤ Stab_G(f)` with `gcd([G:K], |A|) = 1`, representatives `a_i` of the
//! right cosets `K·a_i`, and `m·[G:K] ≡ 1 (mod |A|)`:
//!
//! ```text
//! d(x)  = (∏_i [a_i,x;f])^m
//! f̄̄(x) = f(x)·d(x)
//! ```
//!
//! `f̄̄` is a homomorphism and does not depend on the choice of `K`, `A`, the
//! representatives or `m`. Applied to a coset section of a homomorphism into
//! `H/A` with `gcd(|G|,|A|) = 1` it produces a lift into `H`; iterating down a
//! derived series handles soluble kernels. Two lifts differ by conjugation
//! with `c = (∏ a(t_i))^m`, where `a` is their pointwise difference.

use std::sync::Arc;

use serde::Serialize;

use crate::arith::{gcd, mod_inverse};
use crate::distributor::{distributor_subgroup, distributor_unchecked};
use crate::error::{Error, Result};
use crate::function::{coset_section, coset_section_with, GroupFunction, Homomorphism};
use crate::group::{Elem, Group};
use crate::subgroup::{derived_series, is_normal, CosetSide, CosetSystem, QuotientGroup, Subgroup};

/// Everything needed to evaluate the distributed average of one function.
#[derive(Clone, Debug)]
pub struct DistributedAverageContext {
    pub function: GroupFunction,
    pub k_subgroup: Subgroup,
    pub a_subgroup: Subgroup,
    /// Right cosets `K·a_i`.
    pub reps: CosetSystem,
    pub m: usize,
}

impl DistributedAverageContext {
    /// Validates `f`, `K` and `A`; omitted subgroups default to `Stab_G(f)` and `[G,G;f]`.
    pub fn new(f: &GroupFunction, k: Option<&Subgroup>, a: Option<&Subgroup>) -> Result<Self> {
        let stab = f.stabilizer()?;
        let k_subgroup = match k {
            Some(k) => {
                if **k.parent() != **f.domain() {
                    return Err(Error::Shape("K is not a subgroup of the domain".into()));
                }
                if !k.is_subset_of(&stab) {
                    return Err(Error::Containment(format!(
                        "K (order {}) is not contained in Stab(f) (order {})",
                        k.order(),
                        stab.order()
                    )));
                }
                k.clone()
            }
            None => stab,
        };
        let distributors = distributor_subgroup(f)?;
        let a_subgroup = match a {
            Some(a) => {
                if **a.parent() != **f.codomain() {
                    return Err(Error::Shape("A is not a subgroup of the codomain".into()));
                }
                if !distributors.is_subset_of(a) {
                    return Err(Error::Containment(format!(
                        "[G,G;f] (order {}) is not contained in A (order {})",
                        distributors.order(),
                        a.order()
                    )));
                }
                a.clone()
            }
            None => distributors,
        };
        if !a_subgroup.is_abelian() {
            return Err(Error::NotAbelian(format!("A has order {}", a_subgroup.order())));
        }
        let index = k_subgroup.index();
        if gcd(index, a_subgroup.order()) != 1 {
            return Err(Error::NotCoprime { a: index, b: a_subgroup.order() });
        }
        let m = mod_inverse(index, a_subgroup.order())?;
        let reps = CosetSystem::new(&k_subgroup, CosetSide::Right);
        Ok(DistributedAverageContext { function: f.clone(), k_subgroup, a_subgroup, reps, m })
    }

    /// Same context with other representatives for the right cosets of `K`.
    pub fn with_representatives(&self, reps: &[Elem]) -> Result<Self> {
        let reps = CosetSystem::with_representatives(&self.k_subgroup, CosetSide::Right, reps)?;
        Ok(DistributedAverageContext { reps, ..self.clone() })
    }

    /// Same context with another valid exponent (`m·[G:K] ≡ 1 mod |A|`).
    pub fn with_m(&self, m: usize) -> Result<Self> {
        let modulus = self.a_subgroup.order();
        if (m as u128 * self.index() as u128) % modulus as u128 != 1 % modulus as u128 {
            return Err(Error::Precondition(format!("{m}·{} is not 1 mod {modulus}", self.index())));
        }
        Ok(DistributedAverageContext { m, ..self.clone() })
    }

    /// `[G:K]`.
    pub fn index(&self) -> usize {
        self.k_subgroup.index()
    }
}

/// `d(x) = (∏_i [a_i,x;f])^m`, multiplied in representative order.
pub fn average_distributor(ctx: &DistributedAverageContext) -> Result<GroupFunction> {
    let f = &ctx.function;
    let h = f.codomain();
    let mut values = Vec::with_capacity(f.domain().order());
    for x in f.domain().elements() {
        let product = ctx.reps.representatives().iter().fold(0, |acc, &a| h.mul(acc, distributor_unchecked(f, a, x)));
        let d = h.pow(product, ctx.m);
        if !ctx.a_subgroup.contains(d) {
            return Err(Error::InvariantViolation(format!("average distributor at {x} left A")));
        }
        values.push(d);
    }
    GroupFunction::new(f.domain(), h, values)
}

/// `f̄̄(x) = f(x)·d(x)`, certified to be a homomorphism.
pub fn distributed_average(ctx: &DistributedAverageContext) -> Result<Homomorphism> {
    let d = average_distributor(ctx)?;
    let avg = ctx.function.pointwise_product(&d)?;
    Homomorphism::new(avg).map_err(|e| Error::InvariantViolation(format!("distributed average: {e}")))
}

/// All contexts wrap the same function and give the same distributed average.
pub fn verify_invariance(f: &GroupFunction, contexts: &[DistributedAverageContext]) -> Result<bool> {
    let mut first: Option<Homomorphism> = None;
    for ctx in contexts {
        if ctx.function != *f {
            return Err(Error::Precondition("context wraps a different function".into()));
        }
        let avg = distributed_average(ctx)?;
        match &first {
            None => first = Some(avg),
            Some(expected) if *expected != avg => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

/// One abelian layer of a lift.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LiftStep {
    pub kernel_order: usize,
    pub m: usize,
    pub index: usize,
}

#[derive(Clone, Debug)]
pub struct Lift {
    pub hom: Homomorphism,
    pub steps: Vec<LiftStep>,
}

fn check_target(q: &QuotientGroup, f: &Homomorphism) -> Result<()> {
    if **f.codomain() != **q.group() {
        return Err(Error::Shape("homomorphism does not map into the quotient".into()));
    }
    Ok(())
}

/// Distributed average of a given section of `f : G → H/A`, checked against the projection.
pub fn lift_section(q: &QuotientGroup, f: &Homomorphism, section: &GroupFunction) -> Result<Lift> {
    check_target(q, f)?;
    if section.then(q.projection())? != *f.function() {
        return Err(Error::Containment("section does not project onto the homomorphism".into()));
    }
    let ctx = DistributedAverageContext::new(section, None, Some(q.kernel()))?;
    let hom = distributed_average(&ctx)?;
    if hom.function().then(q.projection())? != *f.function() {
        return Err(Error::InvariantViolation("lift does not project onto the homomorphism".into()));
    }
    let step = LiftStep { kernel_order: q.kernel().order(), m: ctx.m, index: ctx.index() };
    Ok(Lift { hom, steps: vec![step] })
}

fn check_lift_preconditions(kernel: &Subgroup, f: &Homomorphism) -> Result<()> {
    if !is_normal(kernel) {
        return Err(Error::NotNormal(format!("kernel of order {}", kernel.order())));
    }
    if gcd(kernel.order(), f.domain().order()) != 1 {
        return Err(Error::NotCoprime { a: kernel.order(), b: f.domain().order() });
    }
    Ok(())
}

/// How a lift picks coset representatives for its section.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionChoice {
    /// Minimal element of each coset.
    Canonical,
    /// Maximal element of each non-identity coset (the identity coset keeps 1).
    Maximal,
}

pub fn section_for(q: &QuotientGroup, f: &Homomorphism, choice: SectionChoice) -> Result<GroupFunction> {
    match choice {
        SectionChoice::Canonical => coset_section(q, f),
        SectionChoice::Maximal => {
            let mut reps = vec![0; q.group().order()];
            for x in q.parent().elements() {
                let c = q.project(x);
                if c != 0 {
                    reps[c] = reps[c].max(x);
                }
            }
            coset_section_with(q, f, &reps)
        }
    }
}

/// Lifts `f : G → H/A` to `G → H` for abelian normal `A` with `gcd(|A|,|G|) = 1`.
pub fn sz_lift_abelian(a: &Subgroup, f: &Homomorphism) -> Result<Lift> {
    sz_lift_abelian_with(a, f, SectionChoice::Canonical)
}

pub fn sz_lift_abelian_with(a: &Subgroup, f: &Homomorphism, choice: SectionChoice) -> Result<Lift> {
    check_lift_preconditions(a, f)?;
    if !a.is_abelian() {
        return Err(Error::NotAbelian(format!("kernel of order {}", a.order())));
    }
    let q = QuotientGroup::new(a)?;
    check_target(&q, f)?;
    let section = section_for(&q, f, choice)?;
    lift_section(&q, f, &section)
}

/// Image of `sub` under a quotient projection, as a subgroup of the quotient.
fn project_subgroup(q: &QuotientGroup, sub: &Subgroup) -> Subgroup {
    let members: Vec<Elem> = sub.members().iter().map(|&x| q.project(x)).collect();
    Subgroup::from_members(q.group(), &members).expect("image of a subgroup")
}

/// Re-expresses `f : G → H/N` (over `from`'s table) in the isomorphic `to`, where
/// `to` is the quotient of `via.group()` by the image of `N`.
fn transport(f: &Homomorphism, from: &QuotientGroup, via: &QuotientGroup, to: &QuotientGroup) -> Result<Homomorphism> {
    let values = f.values().iter().map(|&c| to.project(via.project(from.lift_element(c)))).collect();
    Homomorphism::new(GroupFunction::new(f.domain(), to.group(), values)?)
}

/// The abelian layers `H/N⁽ʲ⁾ ← H/N⁽ʲ⁺¹⁾` of a soluble normal subgroup.
struct Layer {
    /// `H/N⁽ʲ⁾`.
    upper: QuotientGroup,
    /// `H/N⁽ʲ⁺¹⁾`.
    lower: QuotientGroup,
    /// `(H/N⁽ʲ⁺¹⁾) / (N⁽ʲ⁾/N⁽ʲ⁺¹⁾)`, isomorphic to `upper`.
    top: QuotientGroup,
}

fn layers(n: &Subgroup) -> Result<Vec<Layer>> {
    let series = derived_series(n);
    let last = series.last().unwrap();
    if !last.is_trivial() {
        return Err(Error::NotSoluble(last.order()));
    }
    let mut out = Vec::new();
    for pair in series.windows(2) {
        let upper = QuotientGroup::new(&pair[0])?;
        let lower = QuotientGroup::new(&pair[1])?;
        let top = QuotientGroup::new(&project_subgroup(&lower, &pair[0]))?;
        out.push(Layer { upper, lower, top });
    }
    Ok(out)
}

/// Lifts `f : G → H/N` to `G → H` for soluble normal `N` with `gcd(|N|,|G|) = 1`,
/// one abelian layer of the derived series at a time.
pub fn sz_lift_soluble(n: &Subgroup, f: &Homomorphism) -> Result<Lift> {
    sz_lift_soluble_with(n, f, SectionChoice::Canonical)
}

pub fn sz_lift_soluble_with(n: &Subgroup, f: &Homomorphism, choice: SectionChoice) -> Result<Lift> {
    check_lift_preconditions(n, f)?;
    let h = n.parent();
    let layers = layers(n)?;
    let mut current = f.clone();
    let mut steps = Vec::new();
    match layers.first() {
        Some(first) => check_target(&first.upper, f)?,
        None => check_target(&QuotientGroup::new(n)?, f)?,
    }
    for layer in &layers {
        let f_top = transport(&current, &layer.upper, &layer.lower, &layer.top)?;
        let lift = sz_lift_abelian_with(layer.top.kernel(), &f_top, choice)?;
        steps.extend(lift.steps);
        current = lift.hom.function().with_codomain(layer.lower.group())?.as_homomorphism()?;
    }
    // current maps into H/1, whose canonical representatives are the elements themselves
    let bottom = QuotientGroup::new(&Subgroup::trivial(h))?;
    let values: Vec<Elem> = current.values().iter().map(|&c| bottom.lift_element(c)).collect();
    let hom = Homomorphism::new(GroupFunction::new(f.domain(), h, values)?)
        .map_err(|e| Error::InvariantViolation(format!("soluble lift: {e}")))?;
    let top = QuotientGroup::new(n)?;
    if hom.function().then(top.projection())? != *f.function() {
        return Err(Error::InvariantViolation("soluble lift does not project onto the homomorphism".into()));
    }
    Ok(Lift { hom, steps })
}

/// `f * a`, for `a` an identity-preserving `A`-valued function stabilised by `K`.
pub fn twist(f: &GroupFunction, a: &GroupFunction, a_subgroup: &Subgroup, k: &Subgroup) -> Result<GroupFunction> {
    if let Some(x) = f.domain().elements().find(|&x| !a_subgroup.contains(a.value(x))) {
        return Err(Error::Containment(format!("a({x}) = {} is not in A", a.value(x))));
    }
    if !k.is_subset_of(&a.stabilizer()?) {
        return Err(Error::Containment("K is not contained in Stab(a)".into()));
    }
    f.pointwise_product(a)
}

/// `c = (∏_i a(t_i))^m` over the context's representatives.
pub fn twist_conjugator(ctx: &DistributedAverageContext, a: &GroupFunction) -> Elem {
    let h = a.codomain();
    let product = ctx.reps.representatives().iter().fold(0, |acc, &t| h.mul(acc, a.value(t)));
    h.pow(product, ctx.m)
}

/// The difference `a(g) = f2(g)⁻¹·f1(g)`, so that `f1 = f2 * a`; must land in `A`.
pub fn difference(f1: &GroupFunction, f2: &GroupFunction, a_subgroup: &Subgroup) -> Result<GroupFunction> {
    let diff = f2.pointwise_inverse().pointwise_product(f1)?;
    if let Some(x) = f1.domain().elements().find(|&x| !a_subgroup.contains(diff.value(x))) {
        return Err(Error::Containment(format!("lifts are not congruent modulo A at {x}")));
    }
    Ok(diff)
}

/// Conjugator `c` with `f1 = c⁻¹·f2·c`, for two lifts agreeing modulo abelian `A`.
///
/// `ctx` must wrap `f2`, and its `K` must also stabilise the difference.
pub fn conjugator_with_context(f1: &Homomorphism, f2: &Homomorphism, ctx: &DistributedAverageContext) -> Result<Elem> {
    if ctx.function != *f2.function() {
        return Err(Error::Precondition("context does not wrap the second homomorphism".into()));
    }
    let diff = difference(f1.function(), f2.function(), &ctx.a_subgroup)?;
    if !ctx.k_subgroup.is_subset_of(&diff.stabilizer()?) {
        return Err(Error::Containment("K does not stabilise the difference of the lifts".into()));
    }
    let c = twist_conjugator(ctx, &diff);
    if f2.function().conjugate_values_by(c) != *f1.function() {
        return Err(Error::InvariantViolation(format!("conjugator {c} does not carry one lift to the other")));
    }
    Ok(c)
}

/// [`conjugator_with_context`] with `K = 1`, which stabilises every difference.
pub fn conjugator_between(f1: &Homomorphism, f2: &Homomorphism, a_subgroup: &Subgroup) -> Result<Elem> {
    if gcd(f1.domain().order(), a_subgroup.order()) != 1 {
        return Err(Error::NotCoprime { a: f1.domain().order(), b: a_subgroup.order() });
    }
    difference(f1.function(), f2.function(), a_subgroup)?;
    let trivial = Subgroup::trivial(f2.domain());
    let ctx = DistributedAverageContext::new(f2.function(), Some(&trivial), Some(a_subgroup))?;
    conjugator_with_context(f1, f2, &ctx)
}

/// Conjugator in `N` between two lifts agreeing modulo a soluble `N`, composed layer by layer.
pub fn soluble_conjugator(f1: &Homomorphism, f2: &Homomorphism, n: &Subgroup) -> Result<Elem> {
    let h: &Arc<Group> = n.parent();
    difference(f1.function(), f2.function(), n)?;
    let mut total = 0;
    let mut current = f2.clone();
    for layer in layers(n)? {
        let down = |f: &Homomorphism| -> Result<Homomorphism> { Homomorphism::new(f.function().then(layer.lower.projection())?) };
        let (p1, p2) = (down(f1)?, down(&current)?);
        let c = conjugator_between(&p1, &p2, layer.top.kernel())?;
        let lifted = layer.lower.lift_element(c);
        total = h.mul(total, lifted);
        current = Homomorphism::new(current.function().conjugate_values_by(lifted))?;
    }
    if !n.contains(total) || f2.function().conjugate_values_by(total) != *f1.function() {
        return Err(Error::InvariantViolation("composed conjugator does not carry one lift to the other".into()));
    }
    Ok(total)
}
