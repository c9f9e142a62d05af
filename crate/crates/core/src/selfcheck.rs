//! The release gate: every invariant suite over the built-in catalog, plus validation of
//! group and function fixtures.

use std::collections::BTreeSet;
use std::path::Path;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::json;

use crate::arith::{gcd, p_part};
use crate::catalog::{
    self, abelian_extensions, all_sections, domain_subgroups, generated_contexts, invariance_variants,
    stabilised_kernel_functions, transfer_setups, Extension,
};
use crate::distributed::{
    conjugator_between, distributed_average, lift_section, sz_lift_abelian, sz_lift_soluble, verify_invariance,
    DistributedAverageContext,
};
use crate::distributor::{canonical_quotient_hom, distributor_subgroup, verify_action_shift, verify_minimality, verify_triple_identity};
use crate::error::{Error, Result};
use crate::function::{enumerate_identity_preserving, GroupFunction, Homomorphism, DEFAULT_ENUMERATION_CAP};
use crate::group::{Elem, Group};
use crate::harness::{cauchy_demo, orbit_census, sylow_build, Check, Report};
use crate::io::{FunctionJson, GroupJson};
use crate::subgroup::{derived_subgroup, is_soluble, Subgroup};
use crate::transfer::{average_function, transfer, verify_transfer_power_relation};

/// Random samples drawn by each sampled suite.
pub const DEFAULT_SAMPLES: usize = 1000;

#[derive(Clone, Debug)]
pub struct SelfcheckOptions {
    pub seed: u64,
    pub cap: u128,
    pub samples: usize,
}

impl Default for SelfcheckOptions {
    fn default() -> Self {
        SelfcheckOptions { seed: 0, cap: DEFAULT_ENUMERATION_CAP, samples: DEFAULT_SAMPLES }
    }
}

/// A group table or a function, loaded from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum Fixture {
    Function(FunctionJson),
    Group(GroupJson),
}

/// Fixtures checked on every run.
pub const BUILTIN_FIXTURES: &[(&str, &str)] = &[
    ("s3.json", include_str!("../fixtures/s3.json")),
    ("sign_s3.json", include_str!("../fixtures/sign_s3.json")),
    ("z4_into_z6.json", include_str!("../fixtures/z4_into_z6.json")),
];

pub fn parse_fixture(text: &str) -> Result<Fixture> {
    serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })
}

pub fn load_fixture(path: &Path) -> Result<Fixture> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_fixture(&text)
}

/// Validates a fixture; the witness names the failing axiom or the failing pair.
pub fn check_fixture(name: &str, fixture: &Fixture) -> Check {
    let check_name = format!("fixture {name}");
    match fixture {
        Fixture::Group(g) => match g.to_group() {
            Ok(_) => Check::pass(check_name),
            Err(e) => Check::fail(check_name, e.to_string()),
        },
        Fixture::Function(fj) => {
            let f = match fj.to_function() {
                Ok(f) => f,
                Err(e) => return Check::fail(check_name, e.to_string()),
            };
            match (fj.homomorphism, f.homomorphism_witness()) {
                (Some(true), Some((x, y))) => Check::fail(
                    check_name,
                    format!("claimed homomorphism fails at x = {x}, y = {y}: f(xy) = {} but f(x)f(y) = {}",
                        f.value(f.domain().mul(x, y)),
                        f.codomain().mul(f.value(x), f.value(y))),
                ),
                (Some(false), None) => Check::fail(check_name, "claimed non-homomorphism is a homomorphism".to_string()),
                _ => Check::pass(check_name),
            }
        }
    }
}

type Outcome = Result<Option<String>>;

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
    Ok(if ok { None } else { Some(witness()) })
}

fn group(spec: &str) -> Arc<Group> {
    Arc::new(crate::io::parse_group_spec(spec).expect("built-in spec"))
}

fn random_function(rng: &mut ChaCha8Rng, domain: &Arc<Group>, codomain: &Arc<Group>) -> GroupFunction {
    let values = domain.elements().map(|_| rng.gen_range(0..codomain.order())).collect();
    GroupFunction::new(domain, codomain, values).unwrap()
}

/// Catalog groups of order at most `max`.
fn small_catalog(max: usize) -> Vec<(String, Arc<Group>)> {
    catalog::catalog().into_iter().filter(|(_, g)| g.order() <= max).collect()
}

/// `(f^a)^b = f^{ab}`, `f^a(1) = 1`, and fixed point ⟺ homomorphism, exhaustively.
pub fn action_laws() -> Outcome {
    let pairs = [("cyclic:2", "cyclic:2"), ("cyclic:2", "cyclic:3"), ("cyclic:2", "symmetric:3"), ("cyclic:3", "cyclic:3"), ("cyclic:3", "symmetric:3")];
    for (d, c) in pairs {
        let (g, h) = (group(d), group(c));
        for f in enumerate_identity_preserving(&g, &h, DEFAULT_ENUMERATION_CAP)? {
            let mut fixed = true;
            for a in g.elements() {
                let fa = f.conjugate(a)?;
                if fa.value(0) != 0 {
                    return Ok(Some(format!("{d}→{c}: f = {:?}, f^{a}(1) ≠ 1", f.values())));
                }
                fixed &= f.act(a)? == f;
                for b in g.elements() {
                    if fa.conjugate(b)? != f.conjugate(g.mul(a, b))? {
                        return Ok(Some(format!("{d}→{c}: f = {:?}, (f^{a})^{b} ≠ f^({a}·{b})", f.values())));
                    }
                }
            }
            if fixed != f.is_homomorphism() {
                return Ok(Some(format!("{d}→{c}: f = {:?} fixed = {fixed}", f.values())));
            }
        }
    }
    Ok(None)
}

pub fn cauchy_census(cap: u128) -> Outcome {
    let s3 = group("symmetric:3");
    let c3 = orbit_census(&group("cyclic:3"), &s3, cap)?;
    let c2 = orbit_census(&group("cyclic:2"), &s3, cap)?;
    ensure(
        c3.total == 36 && c3.orbits_of_size(1) == 3 && c3.orbits_of_size(3) == 11 && c3.orbit_size_histogram.len() == 2
            && c2.total == 6 && c2.orbits_of_size(1) == 4 && c2.orbits_of_size(2) == 1 && c2.orbit_size_histogram.len() == 2,
        || format!("Z3→S3 {:?} total {}; Z2→S3 {:?} total {}", c3.orbit_size_histogram, c3.total, c2.orbit_size_histogram, c2.total),
    )
}

fn prime_divisors(n: usize) -> Vec<usize> {
    (2..=n).filter(|&p| n % p == 0 && crate::arith::is_prime(p)).collect()
}

pub fn cauchy_end_to_end(cap: u128) -> Outcome {
    for (spec, g) in small_catalog(24) {
        for p in prime_divisors(g.order()) {
            let e = cauchy_demo(&g, p, cap)?.element;
            let scan_has = g.elements().any(|x| g.element_order(x).unwrap() == p);
            if g.element_order(e)? != p || !scan_has {
                return Ok(Some(format!("{spec}, p = {p}: returned {e}")));
            }
        }
    }
    Ok(None)
}

pub fn sylow(cap: u128) -> Outcome {
    let s4 = group("symmetric:4");
    let orders = (sylow_build(&s4, 2, cap)?.subgroup.order(), sylow_build(&s4, 3, cap)?.subgroup.order());
    if orders != (8, 3) {
        return Ok(Some(format!("S4 Sylow orders {orders:?}")));
    }
    for (spec, g) in small_catalog(24) {
        for p in prime_divisors(g.order()) {
            let out = sylow_build(&g, p, cap)?;
            if out.subgroup.order() != p_part(g.order(), p) {
                return Ok(Some(format!("{spec}, p = {p}: order {}", out.subgroup.order())));
            }
            if let Some(it) = out.iterations.iter().find(|it| it.normalizer_index % p != 0) {
                return Ok(Some(format!("{spec}, p = {p}: [N:H] = {}", it.normalizer_index)));
            }
        }
    }
    Ok(None)
}

fn product_rule_at(f: &GroupFunction, g: &GroupFunction, a: Elem, x: Elem) -> Result<bool> {
    let h = f.codomain();
    let lhs = f.pointwise_product(g)?.conjugate(a)?.value(x);
    let rhs = h.mul(h.conj(f.conjugate(a)?.value(x), g.value(a)), g.conjugate(a)?.value(x));
    Ok(lhs == rhs)
}

pub fn product_rule(rng: &mut ChaCha8Rng, samples: usize) -> Outcome {
    let (z2, s3) = (group("cyclic:2"), group("symmetric:3"));
    let all: Vec<_> = (0..36).map(|i| GroupFunction::new(&z2, &s3, vec![i / 6, i % 6]).unwrap()).collect();
    for f in &all {
        for g in &all {
            for a in z2.elements() {
                for x in z2.elements() {
                    if !product_rule_at(f, g, a, x)? {
                        return Ok(Some(format!("Z2→S3 f = {:?}, g = {:?}, a = {a}, x = {x}", f.values(), g.values())));
                    }
                }
            }
        }
    }
    let cat = small_catalog(24);
    for _ in 0..samples {
        let (dn, d) = &cat[rng.gen_range(0..cat.len())];
        let (cn, c) = &cat[rng.gen_range(0..cat.len())];
        let (f, g) = (random_function(rng, d, c), random_function(rng, d, c));
        let (a, x) = (rng.gen_range(0..d.order()), rng.gen_range(0..d.order()));
        if !product_rule_at(&f, &g, a, x)? {
            return Ok(Some(format!("{dn}→{cn} f = {:?}, g = {:?}, a = {a}, x = {x}", f.values(), g.values())));
        }
    }
    Ok(None)
}

pub fn average_function_suite(cap: u128) -> Outcome {
    let (z4, z6) = (group("cyclic:4"), group("cyclic:6"));
    let mut count = 0;
    for f in enumerate_identity_preserving(&z4, &z6, cap)? {
        count += 1;
        let avg = average_function(&f)?;
        if f.is_homomorphism() && *avg.function() != f {
            return Ok(Some(format!("homomorphism {:?} averages to {:?}", f.values(), avg.values())));
        }
    }
    ensure(count == 216, || format!("enumerated {count} functions"))
}

pub fn transfer_suite() -> Outcome {
    let setups = transfer_setups();
    let (_, s3a3) = &setups[0];
    if !transfer(s3a3)?.is_trivial() {
        return Ok(Some("S3 → A3 transfer is not trivial".into()));
    }
    for (name, setup) in &setups {
        if !verify_transfer_power_relation(setup)? {
            return Ok(Some(format!("{name}: θ* ≠ f̄^m")));
        }
        let theta = transfer(setup)?;
        // the largest element of each right coset, with the identity kept for H itself
        let mut reps = vec![0; setup.index()];
        for x in setup.group.elements() {
            let c = setup.cosets.coset_of(x);
            if c != setup.cosets.coset_of(0) {
                reps[c] = reps[c].max(x);
            }
        }
        let other = setup.with_representatives(&reps)?;
        if transfer(&other)? != theta || !verify_transfer_power_relation(&other)? {
            return Ok(Some(format!("{name}: representatives {reps:?} change the transfer")));
        }
    }
    Ok(None)
}

pub fn distributor_identities(rng: &mut ChaCha8Rng, samples: usize) -> Outcome {
    let s3 = group("symmetric:3");
    let mo = GroupFunction::inversion(&s3);
    for x in s3.elements() {
        for y in s3.elements() {
            for z in s3.elements() {
                if !verify_triple_identity(&mo, x, y, z) || !verify_action_shift(&mo, x, y, z) {
                    return Ok(Some(format!("inversion on S3 at ({x}, {y}, {z})")));
                }
            }
        }
    }
    let cat = small_catalog(24);
    for _ in 0..samples {
        let (dn, d) = &cat[rng.gen_range(0..cat.len())];
        let (cn, c) = &cat[rng.gen_range(0..cat.len())];
        let f = random_function(rng, d, c);
        let [x, y, z] = [0; 3].map(|_| rng.gen_range(0..d.order()));
        if !verify_triple_identity(&f, x, y, z) || !verify_action_shift(&f, x, y, z) {
            return Ok(Some(format!("{dn}→{cn} f = {:?} at ({x}, {y}, {z})", f.values())));
        }
    }
    Ok(None)
}

pub fn distributor_subgroup_suite() -> Outcome {
    for (spec, g) in catalog::catalog() {
        let mo = GroupFunction::inversion(&g);
        let d = distributor_subgroup(&mo)?;
        if d != derived_subgroup(&Subgroup::whole(&g)) {
            return Ok(Some(format!("{spec}: [G,G;inversion] has order {}", d.order())));
        }
        let expected = match spec.as_str() {
            "symmetric:3" => Some(3),
            "symmetric:4" => Some(12),
            _ => None,
        };
        if expected.is_some_and(|n| n != d.order()) {
            return Ok(Some(format!("{spec}: distributor subgroup order {}", d.order())));
        }
        canonical_quotient_hom(&mo)?;
        if !verify_minimality(&mo)? {
            return Ok(Some(format!("{spec}: minimality fails")));
        }
    }
    Ok(None)
}

pub fn distributed_average_suite() -> Outcome {
    let contexts = generated_contexts();
    if contexts.len() < 100 {
        return Ok(Some(format!("only {} contexts generated", contexts.len())));
    }
    for (name, ctx) in &contexts {
        let avg = distributed_average(ctx)?;
        // the ambient A is the kernel of the extension this context came from
        let variants = invariance_variants(ctx, &ctx.a_subgroup);
        if variants.len() < 4 || !verify_invariance(&ctx.function, &variants)? {
            return Ok(Some(format!("{name}: distributed average {:?} varies", avg.values())));
        }
    }
    Ok(None)
}

fn projects_onto(lift: &Homomorphism, ext: &Extension) -> Result<bool> {
    Ok(lift.function().then(ext.quotient().projection())? == *ext.hom.function())
}

pub fn schur_zassenhaus() -> Outcome {
    for ext in [catalog::s3_over_a3(), catalog::a4_over_v4()] {
        let lift = sz_lift_abelian(&ext.kernel, &ext.hom)?;
        if !projects_onto(&lift.hom, &ext)? {
            return Ok(Some(format!("{}: lift does not project", ext.name)));
        }
    }
    let ext = catalog::s3z5_over_s3();
    if !is_soluble(&ext.kernel) {
        return Ok(Some("S3 kernel not soluble".into()));
    }
    let lift = sz_lift_soluble(&ext.kernel, &ext.hom)?;
    if !projects_onto(&lift.hom, &ext)? || lift.steps.len() != 2 {
        return Ok(Some(format!("{}: lift does not project or has {} steps", ext.name, lift.steps.len())));
    }

    let ext = catalog::s3_over_a3();
    let q = ext.quotient();
    let lifts = all_sections(&ext)
        .iter()
        .map(|s| lift_section(&q, &ext.hom, s).map(|l| l.hom))
        .collect::<Result<Vec<_>>>()?;
    let images: BTreeSet<Vec<Elem>> = lifts.iter().map(|l| l.image().members().to_vec()).collect();
    if images.len() != 3 {
        return Ok(Some(format!("S3/A3 lifts have {} images", images.len())));
    }
    for f1 in &lifts {
        for f2 in &lifts {
            let c = conjugator_between(f1, f2, &ext.kernel)?;
            let brute: Vec<Elem> = ext
                .kernel
                .members()
                .iter()
                .copied()
                .filter(|&c| f2.function().conjugate_values_by(c) == *f1.function())
                .collect();
            if !ext.kernel.contains(c) || !brute.contains(&c) {
                return Ok(Some(format!("conjugator {c} for {:?} and {:?}; search finds {brute:?}", f1.values(), f2.values())));
            }
        }
    }
    Ok(None)
}

pub fn triviality() -> Outcome {
    let mut tested = 0;
    for ext in abelian_extensions() {
        let g = ext.hom.domain();
        for k in domain_subgroups(&ext) {
            if gcd(k.index(), ext.kernel.order()) != 1 {
                continue;
            }
            for a in stabilised_kernel_functions(&ext, &k) {
                let ctx = DistributedAverageContext::new(&a, Some(&k), Some(&ext.kernel))?;
                tested += 1;
                if !distributed_average(&ctx)?.is_trivial() {
                    return Ok(Some(format!("{}: a = {:?} with |K| = {} on |G| = {}", ext.name, a.values(), k.order(), g.order())));
                }
            }
        }
    }
    ensure(tested > 0, || "no functions tested".into())
}

fn to_check(name: &str, outcome: Outcome) -> Check {
    match outcome {
        Ok(None) => Check::pass(name),
        Ok(Some(w)) => Check::fail(name, w),
        Err(e) => Check::fail(name, format!("error: {e}")),
    }
}

/// Runs every suite in order; one check per suite.
pub fn run_suites(opts: &SelfcheckOptions) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    vec![
        to_check("action_laws", action_laws()),
        to_check("cauchy_census", cauchy_census(opts.cap)),
        to_check("cauchy_end_to_end", cauchy_end_to_end(opts.cap)),
        to_check("sylow", sylow(opts.cap)),
        to_check("product_rule", product_rule(&mut rng, opts.samples)),
        to_check("average_function", average_function_suite(opts.cap)),
        to_check("transfer", transfer_suite()),
        to_check("distributor_identities", distributor_identities(&mut rng, opts.samples)),
        to_check("distributor_subgroup", distributor_subgroup_suite()),
        to_check("distributed_average", distributed_average_suite()),
        to_check("schur_zassenhaus", schur_zassenhaus()),
        to_check("triviality", triviality()),
    ]
}

/// The suites plus the built-in and the given fixtures.
pub fn selfcheck(opts: &SelfcheckOptions, extra: &[(String, std::result::Result<Fixture, Error>)]) -> Report {
    let mut checks = run_suites(opts);
    for (name, text) in BUILTIN_FIXTURES {
        checks.push(match parse_fixture(text) {
            Ok(f) => check_fixture(name, &f),
            Err(e) => Check::fail(format!("fixture {name}"), e.to_string()),
        });
    }
    for (name, fixture) in extra {
        checks.push(match fixture {
            Ok(f) => check_fixture(name, f),
            Err(e) => Check::fail(format!("fixture {name}"), e.to_string()),
        });
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    Report {
        command: "selfcheck".into(),
        inputs: json!({
            "seed": opts.seed,
            "cap": opts.cap.to_string(),
            "samples": opts.samples,
            "fixtures": extra.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(),
        }),
        result: json!({
            "catalog_size": catalog::CATALOG_SPECS.len(),
            "passed": passed,
            "failed": checks.len() - passed,
        }),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_fixtures_pass() {
        for (name, text) in BUILTIN_FIXTURES {
            let c = check_fixture(name, &parse_fixture(text).unwrap());
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn corrupted_table_has_witness() {
        let text = BUILTIN_FIXTURES[0].1.replacen("[1, 0, 4", "[1, 0, 5", 1);
        let c = check_fixture("bad", &parse_fixture(&text).unwrap());
        assert!(!c.pass);
        assert!(c.witness.is_some());
    }

    #[test]
    fn false_homomorphism_claim_has_witness() {
        let text = BUILTIN_FIXTURES[1].1.replace("[0, 1, 1, 0, 0, 1]", "[0, 1, 1, 0, 1, 1]");
        let c = check_fixture("bad", &parse_fixture(&text).unwrap());
        assert!(c.witness.unwrap().contains("fails at"));
    }

    #[test]
    fn catalog_has_at_least_fifteen_groups() {
        assert!(catalog::CATALOG_SPECS.len() >= 15);
    }

    #[test]
    fn suites_pass() {
        let checks = run_suites(&SelfcheckOptions { samples: 50, ..Default::default() });
        for c in &checks {
            assert!(c.pass, "{c:?}");
        }
    }
}
