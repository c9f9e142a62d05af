//! Runnable demonstrations behind the command-line tool, each producing a JSON [`Report`].

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{is_prime, p_part};
use crate::distributed::{
    conjugator_between, soluble_conjugator, sz_lift_abelian, sz_lift_soluble, sz_lift_soluble_with, Lift, LiftStep,
    SectionChoice,
};
use crate::error::{Error, Result};
use crate::function::{enumerate_identity_preserving, identity_preserving_count, GroupFunction, Homomorphism};
use crate::group::{Elem, Group};
use crate::subgroup::{is_normal, is_soluble, normalizer, QuotientGroup, Subgroup};
use crate::transfer::{transfer, transfer_multiplicity, verify_transfer_power_relation, TransferSetup};

/// One named invariant re-checked while producing a report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check { name: name.into(), pass: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Check {
        Check { name: name.into(), pass: false, witness: Some(witness.into()) }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Check {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, witness())
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self, pretty: bool) -> String {
        if pretty {
            serde_json::to_string_pretty(self).unwrap()
        } else {
            serde_json::to_string(self).unwrap()
        }
    }
}

fn require_prime_divisor(g: &Group, p: usize) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    if g.order() % p != 0 {
        return Err(Error::Precondition(format!("{p} does not divide the group order {}", g.order())));
    }
    Ok(())
}

/// Orbit sizes of the conjugation action on all identity-preserving functions.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OrbitCensus {
    pub total: u128,
    /// Orbit size → number of orbits of that size.
    pub orbit_size_histogram: BTreeMap<String, usize>,
    /// Value lists of the functions in size-one orbits.
    pub fixed_points: Vec<Vec<Elem>>,
}

impl OrbitCensus {
    pub fn orbits_of_size(&self, size: usize) -> usize {
        self.orbit_size_histogram.get(&size.to_string()).copied().unwrap_or(0)
    }
}

pub fn orbit_census(domain: &Arc<Group>, codomain: &Arc<Group>, cap: u128) -> Result<OrbitCensus> {
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut fixed_points = vec![];
    let mut total = 0u128;
    for f in enumerate_identity_preserving(domain, codomain, cap)? {
        total += 1;
        if seen.contains(f.values()) {
            continue;
        }
        let mut orbit: HashSet<Vec<Elem>> = HashSet::new();
        for a in domain.elements() {
            orbit.insert(f.act(a)?.values().to_vec());
        }
        *histogram.entry(orbit.len()).or_default() += 1;
        if orbit.len() == 1 {
            fixed_points.push(f.values().to_vec());
        }
        seen.extend(orbit);
    }
    let orbit_size_histogram = histogram.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    Ok(OrbitCensus { total, orbit_size_histogram, fixed_points })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CauchyOutcome {
    pub element: Elem,
    pub element_label: String,
    /// `"full_enumeration"` or `"fixed_points_only"`.
    pub census_mode: String,
    pub fixed_point_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<OrbitCensus>,
}

/// Finds an element of order `p` by counting fixed points of `Z_p` acting on functions `Z_p → G`.
pub fn cauchy_demo(g: &Arc<Group>, p: usize, cap: u128) -> Result<CauchyOutcome> {
    require_prime_divisor(g, p)?;
    let zp = Arc::new(Group::cyclic(p)?);
    let (census, fixed): (Option<OrbitCensus>, Vec<Elem>) = if identity_preserving_count(&zp, g) <= cap {
        let census = orbit_census(&zp, g, cap)?;
        let fixed = census.fixed_points.iter().map(|v| v[1]).collect();
        (Some(census), fixed)
    } else {
        // a function Z_p → G is fixed iff it is a homomorphism, i.e. determined by f(1) with f(1)^p = 1
        (None, g.elements().filter(|&x| g.pow(x, p) == 0).collect())
    };
    if fixed.len() % p != 0 || fixed.len() < p {
        return Err(Error::InvariantViolation(format!("{} fixed points is not a positive multiple of {p}", fixed.len())));
    }
    let element = *fixed.iter().find(|&&x| x != 0).expect("at least p fixed points");
    if g.element_order(element)? != p {
        return Err(Error::InvariantViolation(format!("element {element} does not have order {p}")));
    }
    Ok(CauchyOutcome {
        element,
        element_label: g.label(element),
        census_mode: if census.is_some() { "full_enumeration" } else { "fixed_points_only" }.into(),
        fixed_point_count: fixed.len(),
        census,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SylowIteration {
    pub subgroup_order: usize,
    pub normalizer_order: usize,
    /// `[N_G(H):H]`, asserted divisible by p.
    pub normalizer_index: usize,
    pub new_generator: Elem,
}

#[derive(Clone, Debug)]
pub struct SylowOutcome {
    pub subgroup: Subgroup,
    pub iterations: Vec<SylowIteration>,
}

/// Grows a p-subgroup through `N_G(H)/H` until its order is the p-part of `|G|`.
pub fn sylow_build(g: &Arc<Group>, p: usize, cap: u128) -> Result<SylowOutcome> {
    require_prime_divisor(g, p)?;
    let start = cauchy_demo(g, p, cap)?.element;
    let mut h = Subgroup::closure(g, &[start])?;
    let mut iterations = vec![];
    while (g.order() / h.order()) % p == 0 {
        let n = normalizer(&h);
        let normalizer_index = n.order() / h.order();
        if normalizer_index % p != 0 {
            return Err(Error::InvariantViolation(format!("p = {p} does not divide [N_G(H):H] = {normalizer_index}")));
        }
        let local = n.as_group();
        let q = QuotientGroup::new(&n.localize(&h, &local)?)?;
        let c = cauchy_demo(q.group(), p, cap)?.element;
        let y = n.members()[q.lift_element(c)];
        iterations.push(SylowIteration {
            subgroup_order: h.order(),
            normalizer_order: n.order(),
            normalizer_index,
            new_generator: y,
        });
        let mut gens = h.generators().to_vec();
        gens.push(y);
        let next = Subgroup::closure(g, &gens)?;
        if next.order() != h.order() * p {
            return Err(Error::InvariantViolation(format!("extension has order {} not {}", next.order(), h.order() * p)));
        }
        h = next;
    }
    if h.order() != p_part(g.order(), p) {
        return Err(Error::InvariantViolation(format!("final order {} is not the {p}-part", h.order())));
    }
    Ok(SylowOutcome { subgroup: h, iterations })
}

pub fn cauchy_report(spec: &str, g: &Arc<Group>, p: usize, cap: u128) -> Result<Report> {
    let outcome = cauchy_demo(g, p, cap)?;
    let scan: Vec<Elem> = g.elements().filter(|&x| g.element_order(x).unwrap() == p).collect();
    let mut checks = vec![
        Check::from_bool("element_has_order_p", g.element_order(outcome.element)? == p, || {
            format!("element {}", outcome.element)
        }),
        Check::from_bool("fixed_points_match_order_scan", outcome.fixed_point_count == scan.len() + 1, || {
            format!("{} fixed points, {} elements of order p", outcome.fixed_point_count, scan.len())
        }),
        Check::from_bool("fixed_points_divisible_by_p", outcome.fixed_point_count % p == 0, || {
            outcome.fixed_point_count.to_string()
        }),
    ];
    if let Some(census) = &outcome.census {
        let sizes_ok = census.orbit_size_histogram.keys().all(|k| k == "1" || *k == p.to_string());
        checks.push(Check::from_bool("orbit_sizes_are_1_or_p", sizes_ok, || format!("{:?}", census.orbit_size_histogram)));
    }
    Ok(Report {
        command: "cauchy".into(),
        inputs: json!({"group": spec, "prime": p, "order": g.order()}),
        result: serde_json::to_value(&outcome).unwrap(),
        checks,
    })
}

pub fn sylow_report(spec: &str, g: &Arc<Group>, p: usize, cap: u128) -> Result<Report> {
    let outcome = sylow_build(g, p, cap)?;
    let h = &outcome.subgroup;
    let closed = h.members().iter().all(|&a| h.members().iter().all(|&b| h.contains(g.mul(a, b))));
    let checks = vec![
        Check::from_bool("order_is_p_part", h.order() == p_part(g.order(), p), || h.order().to_string()),
        Check::from_bool("subgroup_closed", closed, || "product left the subgroup".into()),
        Check::from_bool(
            "p_divides_normalizer_index",
            outcome.iterations.iter().all(|it| it.normalizer_index % p == 0),
            || format!("{:?}", outcome.iterations),
        ),
    ];
    Ok(Report {
        command: "sylow".into(),
        inputs: json!({"group": spec, "prime": p, "order": g.order()}),
        result: json!({
            "subgroup_order": h.order(),
            "members": h.members(),
            "generators": h.generators(),
            "iterations": outcome.iterations,
        }),
        checks,
    })
}

pub fn census_report(domain_spec: &str, codomain_spec: &str, domain: &Arc<Group>, codomain: &Arc<Group>, cap: u128) -> Result<Report> {
    let census = orbit_census(domain, codomain, cap)?;
    let homs = enumerate_identity_preserving(domain, codomain, cap)?.filter(GroupFunction::is_homomorphism).count();
    let counted: u128 = census.orbit_size_histogram.iter().map(|(k, v)| k.parse::<u128>().unwrap() * *v as u128).sum();
    let checks = vec![
        Check::from_bool("fixed_points_are_homomorphisms", census.fixed_points.len() == homs, || {
            format!("{} fixed points, {homs} homomorphisms", census.fixed_points.len())
        }),
        Check::from_bool("orbits_partition_functions", counted == census.total, || format!("{counted} vs {}", census.total)),
    ];
    Ok(Report {
        command: "census".into(),
        inputs: json!({"domain": domain_spec, "codomain": codomain_spec}),
        result: serde_json::to_value(&census).unwrap(),
        checks,
    })
}

/// JSON payload of a transfer computation.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TransferReport {
    pub group: String,
    pub subgroup_order: usize,
    pub index: usize,
    pub multiplicity_m: usize,
    pub transfer_values: Vec<Elem>,
    pub is_trivial: bool,
}

/// Representatives that differ from the canonical ones wherever possible (largest element
/// of each non-trivial coset).
fn alternative_right_representatives(setup: &TransferSetup) -> Vec<Elem> {
    let mut reps = vec![0; setup.index()];
    for x in setup.group.elements() {
        let c = setup.cosets.coset_of(x);
        if setup.cosets.representatives()[c] != 0 {
            reps[c] = reps[c].max(x);
        }
    }
    reps
}

pub fn transfer_report(spec: &str, g: &Arc<Group>, subgroup_gens: &[Elem], target: &Arc<Group>, pi_values: &[Elem]) -> Result<Report> {
    let h = Subgroup::closure(g, subgroup_gens)?;
    let local = h.as_group();
    let local_gens: Vec<Elem> = subgroup_gens.iter().map(|&x| h.local_index(x).unwrap()).collect();
    let pi = Homomorphism::from_generator_images(&local, target, &local_gens, pi_values)?;
    let setup = TransferSetup::new(&h, pi)?;
    let theta = transfer(&setup)?;
    let m = transfer_multiplicity(&setup)?;
    let other = setup.with_representatives(&alternative_right_representatives(&setup))?;
    let theta_other = transfer(&other)?;
    let checks = vec![
        Check::pass("transfer_is_homomorphism"),
        Check::from_bool("power_relation", verify_transfer_power_relation(&setup)?, || "θ* != f̄^m".into()),
        Check::from_bool("representative_invariance", theta_other == theta, || {
            format!("{:?} vs {:?}", theta.values(), theta_other.values())
        }),
    ];
    let payload = TransferReport {
        group: spec.into(),
        subgroup_order: h.order(),
        index: setup.index(),
        multiplicity_m: m,
        transfer_values: theta.values().to_vec(),
        is_trivial: theta.is_trivial(),
    };
    Ok(Report {
        command: "transfer".into(),
        inputs: json!({"group": spec, "subgroup": subgroup_gens, "pi": pi_values, "target_order": target.order()}),
        result: serde_json::to_value(&payload).unwrap(),
        checks,
    })
}

/// JSON payload of a lift computation.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LiftReport {
    pub group: String,
    pub extension: String,
    pub kernel_order: usize,
    pub steps: Vec<LiftStep>,
    pub lift_values: Vec<Elem>,
    pub conjugacy_class_size_of_image: usize,
    pub second_lift_values: Vec<Elem>,
    pub conjugator: Elem,
}

pub fn lift_report(ext_spec: &str, domain_spec: &str, n: &Subgroup, f: &Homomorphism) -> Result<Report> {
    let h = n.parent();
    if !is_normal(n) {
        return Err(Error::NotNormal(format!("subgroup generated by {:?}", n.generators())));
    }
    let lift: Lift = if n.is_abelian() {
        sz_lift_abelian(n, f)?
    } else if is_soluble(n) {
        sz_lift_soluble(n, f)?
    } else {
        return Err(Error::NotSoluble(crate::subgroup::derived_series(n).last().unwrap().order()));
    };
    let q = QuotientGroup::new(n)?;
    let second = sz_lift_soluble_with(n, f, SectionChoice::Maximal)?.hom;
    let conjugator = if n.is_abelian() {
        conjugator_between(&lift.hom, &second, n)?
    } else {
        soluble_conjugator(&lift.hom, &second, n)?
    };
    let image = lift.hom.image();
    let class_size = h.order() / normalizer(image).order();
    let checks = vec![
        Check::from_bool("lift_is_homomorphism", lift.hom.function().is_homomorphism(), || "not a homomorphism".into()),
        Check::from_bool("projection_compatible", lift.hom.function().then(q.projection())? == *f.function(), || {
            "projection of the lift differs from the input".into()
        }),
        Check::from_bool("second_lift_projection_compatible", second.function().then(q.projection())? == *f.function(), || {
            "second lift does not project correctly".into()
        }),
        Check::from_bool(
            "lifts_conjugate_in_kernel",
            n.contains(conjugator) && second.function().conjugate_values_by(conjugator) == *lift.hom.function(),
            || format!("conjugator {conjugator}"),
        ),
    ];
    let payload = LiftReport {
        group: domain_spec.into(),
        extension: ext_spec.into(),
        kernel_order: n.order(),
        steps: lift.steps,
        lift_values: lift.hom.values().to_vec(),
        conjugacy_class_size_of_image: class_size,
        second_lift_values: second.values().to_vec(),
        conjugator,
    };
    Ok(Report {
        command: "lift".into(),
        inputs: json!({"extension": ext_spec, "normal": n.generators(), "domain": domain_spec, "hom": f.values()}),
        result: serde_json::to_value(&payload).unwrap(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::DEFAULT_ENUMERATION_CAP;

    fn arc(g: Result<Group>) -> Arc<Group> {
        Arc::new(g.unwrap())
    }

    #[test]
    fn cauchy_on_s3() {
        let s3 = arc(Group::symmetric(3));
        let two = cauchy_demo(&s3, 2, DEFAULT_ENUMERATION_CAP).unwrap();
        let census = two.census.unwrap();
        assert_eq!((census.orbits_of_size(1), census.orbits_of_size(2)), (4, 1));
        assert_eq!(s3.element_order(two.element), Ok(2));
        let three = cauchy_demo(&s3, 3, DEFAULT_ENUMERATION_CAP).unwrap();
        let census = three.census.unwrap();
        assert_eq!((census.orbits_of_size(1), census.orbits_of_size(3)), (3, 11));
        assert_eq!(s3.element_order(three.element), Ok(3));
    }

    #[test]
    fn cauchy_on_z4_and_fallback() {
        let z4 = arc(Group::cyclic(4));
        assert_eq!(cauchy_demo(&z4, 2, DEFAULT_ENUMERATION_CAP).unwrap().element, 2);
        let z11 = arc(Group::cyclic(11));
        let out = cauchy_demo(&z11, 11, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(out.census_mode, "fixed_points_only");
        assert_eq!(out.fixed_point_count, 11);
        assert!(matches!(cauchy_demo(&z4, 4, 10), Err(Error::Precondition(_))));
        assert!(matches!(cauchy_demo(&z4, 3, 10), Err(Error::Precondition(_))));
    }

    #[test]
    fn sylow_examples() {
        let s4 = arc(Group::symmetric(4));
        assert_eq!(sylow_build(&s4, 2, DEFAULT_ENUMERATION_CAP).unwrap().subgroup.order(), 8);
        assert_eq!(sylow_build(&s4, 3, DEFAULT_ENUMERATION_CAP).unwrap().subgroup.order(), 3);
        let z12 = arc(Group::cyclic(12));
        assert_eq!(sylow_build(&z12, 2, DEFAULT_ENUMERATION_CAP).unwrap().subgroup.members(), &[0, 3, 6, 9]);
    }

    #[test]
    fn census_examples() {
        let z2 = arc(Group::cyclic(2));
        let c = orbit_census(&z2, &z2, 10).unwrap();
        assert_eq!(c.orbit_size_histogram, BTreeMap::from([("1".to_string(), 2)]));
        let z3 = arc(Group::cyclic(3));
        let s3 = arc(Group::symmetric(3));
        let report = census_report("cyclic:3", "symmetric:3", &z3, &s3, 1000).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.result["total"], 36);
    }

    #[test]
    fn transfer_reports() {
        let s3 = arc(Group::symmetric(3));
        let z3 = arc(Group::cyclic(3));
        let r = transfer_report("symmetric:3", &s3, &[3], &z3, &[1]).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.result["is_trivial"], true);
        let z6 = arc(Group::cyclic(6));
        let r = transfer_report("cyclic:6", &z6, &[2], &z3, &[1]).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.result["is_trivial"], false);
    }

    #[test]
    fn lift_reports() {
        for ext in [crate::catalog::s3_over_a3(), crate::catalog::a4_over_v4(), crate::catalog::s3z5_over_s3()] {
            let r = lift_report(ext.name, "cyclic", &ext.kernel, &ext.hom).unwrap();
            assert!(r.all_passed(), "{}: {:?}", ext.name, r.checks);
        }
        let ext = crate::catalog::s3_over_a3();
        let r = lift_report("symmetric:3", "cyclic:2", &ext.kernel, &ext.hom).unwrap();
        assert_eq!(r.result["conjugacy_class_size_of_image"], 3);
    }
}
