//! Arbitrary functions between finite groups and the function conjugation action.
//!
//! For `f : G → H` and `a ∈ G` the conjugate is `f^a(x) = f(a)⁻¹·f(a·x)`.
//! Conjugation composes as `(f^a)^b = f^{ab}`, every conjugate fixes the
//! identity, and `f ↦ f^{(a⁻¹)}` is a left action of `G` on the
//! identity-preserving functions whose fixed points are the homomorphisms.

use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Elem, Group};
use crate::subgroup::{CosetSide, CosetSystem, QuotientGroup, Subgroup};

/// Default bound on how many functions [`enumerate_identity_preserving`] may produce.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// A total function `G → H`, stored as the image of every domain element.
#[derive(Clone)]
pub struct GroupFunction {
    domain: Arc<Group>,
    codomain: Arc<Group>,
    values: Vec<Elem>,
}

impl PartialEq for GroupFunction {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
            && (Arc::ptr_eq(&self.domain, &other.domain) || self.domain == other.domain)
            && (Arc::ptr_eq(&self.codomain, &other.codomain) || self.codomain == other.codomain)
    }
}

impl Eq for GroupFunction {}

impl Hash for GroupFunction {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.values.hash(state);
    }
}

impl fmt::Debug for GroupFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupFunction({:?})", self.values)
    }
}

impl GroupFunction {
    pub fn new(domain: &Arc<Group>, codomain: &Arc<Group>, values: Vec<Elem>) -> Result<GroupFunction> {
        if values.len() != domain.order() {
            return Err(Error::Shape(format!("{} values for a domain of order {}", values.len(), domain.order())));
        }
        for &v in &values {
            codomain.check(v)?;
        }
        Ok(GroupFunction { domain: domain.clone(), codomain: codomain.clone(), values })
    }

    pub fn constant_identity(domain: &Arc<Group>, codomain: &Arc<Group>) -> GroupFunction {
        GroupFunction { domain: domain.clone(), codomain: codomain.clone(), values: vec![0; domain.order()] }
    }

    /// The inversion map `g ↦ g⁻¹` on `g`.
    pub fn inversion(g: &Arc<Group>) -> GroupFunction {
        GroupFunction { domain: g.clone(), codomain: g.clone(), values: g.elements().map(|x| g.inv(x)).collect() }
    }

    pub fn identity_map(g: &Arc<Group>) -> GroupFunction {
        GroupFunction { domain: g.clone(), codomain: g.clone(), values: g.elements().collect() }
    }

    pub fn domain(&self) -> &Arc<Group> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Group> {
        &self.codomain
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    #[inline]
    pub fn value(&self, x: Elem) -> Elem {
        self.values[x]
    }

    pub fn is_identity_preserving(&self) -> bool {
        self.values[0] == 0
    }

    fn require_identity_preserving(&self) -> Result<()> {
        if self.is_identity_preserving() {
            Ok(())
        } else {
            Err(Error::Precondition(format!("function maps the identity to {}", self.values[0])))
        }
    }

    fn same_shape(&self, other: &GroupFunction) -> Result<()> {
        let same = |a: &Arc<Group>, b: &Arc<Group>| Arc::ptr_eq(a, b) || a == b;
        if same(&self.domain, &other.domain) && same(&self.codomain, &other.codomain) {
            Ok(())
        } else {
            Err(Error::Shape("functions have different domains or codomains".into()))
        }
    }

    /// `f^a(x) = f(a)⁻¹·f(a·x)`.
    pub fn conjugate(&self, a: Elem) -> Result<GroupFunction> {
        self.domain.check(a)?;
        let (g, h) = (&self.domain, &self.codomain);
        let fa_inv = h.inv(self.values[a]);
        let values = g.elements().map(|x| h.mul(fa_inv, self.values[g.mul(a, x)])).collect();
        Ok(GroupFunction { domain: g.clone(), codomain: h.clone(), values })
    }

    /// The left action `a·f = f^{(a⁻¹)}` on identity-preserving functions.
    pub fn act(&self, a: Elem) -> Result<GroupFunction> {
        self.require_identity_preserving()?;
        self.domain.check(a)?;
        self.conjugate(self.domain.inv(a))
    }

    /// `(f*g)(x) = f(x)·g(x)`.
    pub fn pointwise_product(&self, other: &GroupFunction) -> Result<GroupFunction> {
        self.same_shape(other)?;
        let h = &self.codomain;
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| h.mul(a, b)).collect();
        Ok(GroupFunction { domain: self.domain.clone(), codomain: h.clone(), values })
    }

    /// `x ↦ f(x)⁻¹`.
    pub fn pointwise_inverse(&self) -> GroupFunction {
        let h = &self.codomain;
        GroupFunction {
            domain: self.domain.clone(),
            codomain: h.clone(),
            values: self.values.iter().map(|&v| h.inv(v)).collect(),
        }
    }

    /// `x ↦ f(x)^k`.
    pub fn pointwise_pow(&self, k: usize) -> GroupFunction {
        let h = &self.codomain;
        GroupFunction {
            domain: self.domain.clone(),
            codomain: h.clone(),
            values: self.values.iter().map(|&v| h.pow(v, k)).collect(),
        }
    }

    /// `x ↦ c⁻¹·f(x)·c`.
    pub fn conjugate_values_by(&self, c: Elem) -> GroupFunction {
        let h = &self.codomain;
        GroupFunction {
            domain: self.domain.clone(),
            codomain: h.clone(),
            values: self.values.iter().map(|&v| h.conj(v, c)).collect(),
        }
    }

    /// Post-composition with a function out of the codomain.
    pub fn then(&self, outer: &GroupFunction) -> Result<GroupFunction> {
        if !(Arc::ptr_eq(&self.codomain, &outer.domain) || *self.codomain == *outer.domain) {
            return Err(Error::Shape("composition: codomain and domain differ".into()));
        }
        let values = self.values.iter().map(|&v| outer.values[v]).collect();
        Ok(GroupFunction { domain: self.domain.clone(), codomain: outer.codomain.clone(), values })
    }

    /// Same values, reinterpreted in an equal codomain table.
    pub fn with_codomain(&self, codomain: &Arc<Group>) -> Result<GroupFunction> {
        if *self.codomain != **codomain {
            return Err(Error::Shape("codomain tables differ".into()));
        }
        Ok(GroupFunction { domain: self.domain.clone(), codomain: codomain.clone(), values: self.values.clone() })
    }

    /// First pair `(x, y)` with `f(xy) != f(x)f(y)`.
    pub fn homomorphism_witness(&self) -> Option<(Elem, Elem)> {
        let (g, h) = (&self.domain, &self.codomain);
        for x in g.elements() {
            for y in g.elements() {
                if self.values[g.mul(x, y)] != h.mul(self.values[x], self.values[y]) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_homomorphism(&self) -> bool {
        self.homomorphism_witness().is_none()
    }

    /// `{a : f^a = f}`.
    pub fn stabilizer(&self) -> Result<Subgroup> {
        self.require_identity_preserving()?;
        let mut members = Vec::new();
        for a in self.domain.elements() {
            if self.conjugate(a)?.values == self.values {
                members.push(a);
            }
        }
        Subgroup::from_members(&self.domain, &members)
            .map_err(|e| Error::InvariantViolation(format!("stabilizer is not a subgroup: {e}")))
    }

    /// The distinct conjugates of `f`, indexed by canonical right-coset representatives of the stabilizer.
    ///
    /// `f^{ka} = (f^k)^a = f^a` for `k` in the stabilizer, so conjugates are
    /// constant on right cosets `Stab·a`.
    pub fn orbit(&self) -> Result<FunctionOrbit> {
        let stabilizer = self.stabilizer()?;
        let cosets = CosetSystem::new(&stabilizer, CosetSide::Right);
        let representatives = cosets.representatives().to_vec();
        let members = representatives.iter().map(|&a| self.conjugate(a)).collect::<Result<Vec<_>>>()?;
        if members.len() * stabilizer.order() != self.domain.order() {
            return Err(Error::InvariantViolation("orbit-stabilizer count mismatch".into()));
        }
        let distinct: std::collections::HashSet<&[Elem]> = members.iter().map(|m| m.values.as_slice()).collect();
        if distinct.len() != members.len() {
            return Err(Error::InvariantViolation("orbit members are not distinct".into()));
        }
        Ok(FunctionOrbit { base: self.clone(), representatives, members, stabilizer })
    }

    /// `⟨f(g) : g ∈ G⟩`.
    pub fn image_subgroup(&self) -> Subgroup {
        let mut vals: Vec<Elem> = self.values.clone();
        vals.sort_unstable();
        vals.dedup();
        vals.retain(|&v| v != 0);
        Subgroup::closure(&self.codomain, &vals).expect("values are in range")
    }

    pub fn as_homomorphism(&self) -> Result<Homomorphism> {
        Homomorphism::new(self.clone())
    }
}

/// A function certified (exhaustively) to be a homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    function: GroupFunction,
    kernel: Subgroup,
    image: Subgroup,
}

impl Homomorphism {
    pub fn new(function: GroupFunction) -> Result<Homomorphism> {
        if let Some((x, y)) = function.homomorphism_witness() {
            return Err(Error::NotHomomorphism(format!("f({x}·{y}) != f({x})·f({y})")));
        }
        let kernel_members: Vec<Elem> = function.domain.elements().filter(|&x| function.values[x] == 0).collect();
        let kernel = Subgroup::from_members(&function.domain, &kernel_members)?;
        let image = function.image_subgroup();
        Ok(Homomorphism { function, kernel, image })
    }

    pub fn trivial(domain: &Arc<Group>, codomain: &Arc<Group>) -> Homomorphism {
        Homomorphism::new(GroupFunction::constant_identity(domain, codomain)).unwrap()
    }

    /// Extends images of generators to a homomorphism, rejecting inconsistent assignments.
    pub fn from_generator_images(
        domain: &Arc<Group>,
        codomain: &Arc<Group>,
        generators: &[Elem],
        images: &[Elem],
    ) -> Result<Homomorphism> {
        if generators.len() != images.len() {
            return Err(Error::Shape(format!("{} generators but {} images", generators.len(), images.len())));
        }
        for &g in generators {
            domain.check(g)?;
        }
        for &v in images {
            codomain.check(v)?;
        }
        let mut values = vec![usize::MAX; domain.order()];
        values[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (&s, &img) in generators.iter().zip(images) {
                let y = domain.mul(x, s);
                let v = codomain.mul(values[x], img);
                if values[y] == usize::MAX {
                    values[y] = v;
                    queue.push_back(y);
                } else if values[y] != v {
                    return Err(Error::NotHomomorphism(format!(
                        "generator images are inconsistent at element {y} ({} vs {v})",
                        values[y]
                    )));
                }
            }
        }
        if let Some(x) = values.iter().position(|&v| v == usize::MAX) {
            return Err(Error::Precondition(format!("generators do not generate the domain (missing {x})")));
        }
        Homomorphism::new(GroupFunction::new(domain, codomain, values)?)
    }

    pub fn function(&self) -> &GroupFunction {
        &self.function
    }

    pub fn into_function(self) -> GroupFunction {
        self.function
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn image(&self) -> &Subgroup {
        &self.image
    }

    pub fn value(&self, x: Elem) -> Elem {
        self.function.value(x)
    }

    pub fn values(&self) -> &[Elem] {
        self.function.values()
    }

    pub fn domain(&self) -> &Arc<Group> {
        self.function.domain()
    }

    pub fn codomain(&self) -> &Arc<Group> {
        self.function.codomain()
    }

    pub fn is_trivial(&self) -> bool {
        self.function.values.iter().all(|&v| v == 0)
    }
}

/// The orbit of a function under conjugation.
#[derive(Clone, Debug)]
pub struct FunctionOrbit {
    pub base: GroupFunction,
    /// Canonical right-coset representatives of the stabilizer; `members[i] = base^{representatives[i]}`.
    pub representatives: Vec<Elem>,
    pub members: Vec<GroupFunction>,
    pub stabilizer: Subgroup,
}

impl FunctionOrbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Lexicographic stream of all identity-preserving functions `domain → codomain`.
pub struct IdentityPreserving {
    domain: Arc<Group>,
    codomain: Arc<Group>,
    next: Option<Vec<Elem>>,
}

impl Iterator for IdentityPreserving {
    type Item = GroupFunction;

    fn next(&mut self) -> Option<GroupFunction> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let h = self.codomain.order();
        let mut i = succ.len();
        let mut advanced = false;
        while i > 1 {
            i -= 1;
            succ[i] += 1;
            if succ[i] < h {
                advanced = true;
                break;
            }
            succ[i] = 0;
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(GroupFunction { domain: self.domain.clone(), codomain: self.codomain.clone(), values: current })
    }
}

/// Number of identity-preserving functions, `|codomain|^(|domain|-1)`, saturating.
pub fn identity_preserving_count(domain: &Group, codomain: &Group) -> u128 {
    let mut count: u128 = 1;
    for _ in 1..domain.order() {
        count = count.saturating_mul(codomain.order() as u128);
    }
    count
}

pub fn enumerate_identity_preserving(domain: &Arc<Group>, codomain: &Arc<Group>, cap: u128) -> Result<IdentityPreserving> {
    let count = identity_preserving_count(domain, codomain);
    if count > cap {
        return Err(Error::SizeLimit { what: "identity-preserving function count".into(), count, cap });
    }
    Ok(IdentityPreserving { domain: domain.clone(), codomain: codomain.clone(), next: Some(vec![0; domain.order()]) })
}

fn check_quotient_target(q: &QuotientGroup, target: &Homomorphism) -> Result<()> {
    if **target.codomain() != **q.group() {
        return Err(Error::Shape("homomorphism does not map into the quotient".into()));
    }
    Ok(())
}

/// `f̂ = (canonical representative) ∘ f`, so that `projection ∘ f̂ = f`.
pub fn coset_section(q: &QuotientGroup, target: &Homomorphism) -> Result<GroupFunction> {
    check_quotient_target(q, target)?;
    let values = target.values().iter().map(|&v| q.lift_element(v)).collect();
    GroupFunction::new(target.domain(), q.parent(), values)
}

/// A section using the caller's representative `choice[c]` for quotient element `c`.
pub fn coset_section_with(q: &QuotientGroup, target: &Homomorphism, choice: &[Elem]) -> Result<GroupFunction> {
    check_quotient_target(q, target)?;
    if choice.len() != q.group().order() {
        return Err(Error::Shape(format!("{} representatives for a quotient of order {}", choice.len(), q.group().order())));
    }
    for (c, &r) in choice.iter().enumerate() {
        q.parent().check(r)?;
        if q.project(r) != c {
            return Err(Error::Containment(format!("element {r} does not lie in coset {c}")));
        }
    }
    let values = target.values().iter().map(|&v| choice[v]).collect();
    GroupFunction::new(target.domain(), q.parent(), values)
}
