//! Built-in groups and group extensions used by the demonstrations and the self-check.

use std::sync::Arc;

use crate::distributed::{twist, DistributedAverageContext};
use crate::function::{enumerate_identity_preserving, GroupFunction, Homomorphism};
use crate::group::{Elem, Group, DEFAULT_ELEMENT_CAP};
use crate::io::parse_group_spec;
use crate::subgroup::{all_subgroups, derived_subgroup, QuotientGroup, Subgroup};
use crate::transfer::TransferSetup;

/// Group expressions in the catalog: every order ≤ 12 case we ship, plus A_4 and S_4.
pub const CATALOG_SPECS: &[&str] = &[
    "cyclic:1",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "cyclic:6",
    "cyclic:7",
    "cyclic:8",
    "cyclic:9",
    "cyclic:10",
    "cyclic:11",
    "cyclic:12",
    "dihedral:2",
    "dihedral:3",
    "dihedral:4",
    "dihedral:5",
    "dihedral:6",
    "symmetric:3",
    "product:cyclic:2,cyclic:2",
    "product:cyclic:2,cyclic:4",
    "product:cyclic:3,cyclic:3",
    "product:cyclic:2,cyclic:6",
    "product:cyclic:2,symmetric:3",
    "alternating:4",
    "symmetric:4",
];

pub fn catalog() -> Vec<(String, Arc<Group>)> {
    CATALOG_SPECS
        .iter()
        .map(|s| (s.to_string(), Arc::new(parse_group_spec(s).expect("catalog spec parses"))))
        .collect()
}

/// The double transpositions of S_4, which with the identity form V_4.
pub fn klein_in_s4() -> Vec<Elem> {
    let s4 = Group::symmetric(4).unwrap();
    s4.elements().filter(|&x| s4.label(x).matches('(').count() == 2).collect()
}

/// A homomorphism `G → H/N` together with the data to lift it.
#[derive(Clone, Debug)]
pub struct Extension {
    pub name: &'static str,
    /// The normal subgroup `N` of `H`; `H` is `kernel.parent()`.
    pub kernel: Subgroup,
    /// `G → H/N`, with the canonical quotient table.
    pub hom: Homomorphism,
}

impl Extension {
    /// `G = Z_k` mapped into `H/N` by sending 1 to the coset of `image`, where `k` is the coset's order.
    fn cyclic_onto(name: &'static str, kernel: Subgroup, image: Elem) -> Extension {
        let q = QuotientGroup::new(&kernel).expect("kernel is normal");
        let c = q.project(image);
        let k = q.group().element_order(c).unwrap();
        let domain = Arc::new(Group::cyclic(k).unwrap());
        let hom = Homomorphism::from_generator_images(&domain, q.group(), &[1], &[c]).unwrap();
        Extension { name, kernel, hom }
    }

    pub fn extension_group(&self) -> &Arc<Group> {
        self.kernel.parent()
    }

    pub fn quotient(&self) -> QuotientGroup {
        QuotientGroup::new(&self.kernel).unwrap()
    }
}

/// `Z_2 → S_3/A_3`, an isomorphism.
pub fn s3_over_a3() -> Extension {
    let s3 = Arc::new(Group::symmetric(3).unwrap());
    let a3 = derived_subgroup(&Subgroup::whole(&s3));
    Extension::cyclic_onto("S3/A3", a3, 1)
}

/// `Z_3 → A_4/V_4`, an isomorphism.
pub fn a4_over_v4() -> Extension {
    let a4 = Arc::new(Group::alternating(4).unwrap());
    let v4 = derived_subgroup(&Subgroup::whole(&a4));
    let three_cycle = a4.elements().find(|&x| a4.element_order(x).unwrap() == 3).unwrap();
    Extension::cyclic_onto("A4/V4", v4, three_cycle)
}

/// `Z_5 → (S_3 × Z_5)/(S_3 × 1)`, with a soluble non-abelian kernel.
pub fn s3z5_over_s3() -> Extension {
    let s3 = Group::symmetric(3).unwrap();
    let z5 = Group::cyclic(5).unwrap();
    let h = Arc::new(Group::direct_product(&s3, &z5));
    // (a, b) has index 5a + b
    let n = Subgroup::closure(&h, &[5, 15]).unwrap();
    Extension::cyclic_onto("(S3xZ5)/(S3x1)", n, 1)
}

/// `Z_2 → D_5/⟨r⟩`.
pub fn d5_over_rotations() -> Extension {
    let d5 = Arc::new(Group::dihedral(5).unwrap());
    let rotations = Subgroup::closure(&d5, &[1]).unwrap();
    Extension::cyclic_onto("D5/Z5", rotations, 5)
}

/// Affine group `x ↦ ax + b` over Z_p restricted to multipliers generated by `mult`;
/// returns the extension over its translation subgroup.
fn affine(name: &'static str, p: usize, mult: usize) -> Extension {
    let translate: Vec<usize> = (0..p).map(|x| (x + 1) % p).collect();
    let scale: Vec<usize> = (0..p).map(|x| (x * mult) % p).collect();
    let h = Arc::new(Group::from_permutations(p, &[translate, scale], DEFAULT_ELEMENT_CAP).unwrap());
    // breadth-first discovery puts the generators at indices 1 and 2
    let translations = Subgroup::closure(&h, &[1]).unwrap();
    Extension::cyclic_onto(name, translations, 2)
}

/// `Z_3 → (Z_7 ⋊ Z_3)/Z_7`.
pub fn z7_by_z3() -> Extension {
    affine("Z7:Z3", 7, 2)
}

/// `Z_4 → (Z_5 ⋊ Z_4)/Z_5`.
pub fn z5_by_z4() -> Extension {
    affine("Z5:Z4", 5, 2)
}

/// Extensions with abelian kernels of order prime to the domain.
pub fn abelian_extensions() -> Vec<Extension> {
    vec![s3_over_a3(), a4_over_v4(), d5_over_rotations(), z7_by_z3(), z5_by_z4()]
}

/// Every identity-preserving section of `ext.hom`, in lexicographic order of choices.
pub fn all_sections(ext: &Extension) -> Vec<GroupFunction> {
    let q = ext.quotient();
    let h = ext.extension_group();
    let g = ext.hom.domain();
    let mut out = vec![];
    let mut values = vec![0; g.order()];
    fn fill(i: usize, values: &mut Vec<Elem>, ext: &Extension, q: &QuotientGroup, h: &Arc<Group>, out: &mut Vec<GroupFunction>) {
        let g = ext.hom.domain();
        if i == g.order() {
            out.push(GroupFunction::new(g, h, values.clone()).unwrap());
            return;
        }
        let target = ext.hom.value(i);
        for x in h.elements().filter(|&x| q.project(x) == target) {
            values[i] = x;
            fill(i + 1, values, ext, q, h, out);
        }
    }
    fill(1, &mut values, ext, &q, h, &mut out);
    out
}

/// Identity-preserving `a : G → A` (into `ext.kernel`) stabilised by `k`.
pub fn stabilised_kernel_functions(ext: &Extension, k: &Subgroup) -> Vec<GroupFunction> {
    let a_group = ext.kernel.as_group();
    let h = ext.extension_group();
    let embed = GroupFunction::new(&a_group, h, ext.kernel.members().to_vec()).unwrap();
    enumerate_identity_preserving(ext.hom.domain(), &a_group, 1 << 20)
        .unwrap()
        .map(|a| a.then(&embed).unwrap())
        .filter(|a| k.is_subset_of(&a.stabilizer().unwrap()))
        .collect()
}

/// Subgroups of the domain of `ext.hom`.
pub fn domain_subgroups(ext: &Extension) -> Vec<Subgroup> {
    all_subgroups(ext.hom.domain())
}

/// Transfer setups shipped with the crate: `S_3 ⊇ A_3 ≅ Z_3`, `Z_6 ⊇ ⟨2⟩`, and several
/// subgroups with `π` the projection onto their abelianisation.
pub fn transfer_setups() -> Vec<(String, TransferSetup)> {
    let mut out = vec![];
    let s3 = Arc::new(Group::symmetric(3).unwrap());
    let a3 = Subgroup::closure(&s3, &[3]).unwrap();
    let z3 = Arc::new(Group::cyclic(3).unwrap());
    let iso = Homomorphism::from_generator_images(&a3.as_group(), &z3, &[1], &[1]).unwrap();
    out.push(("S3>A3 iso Z3".to_string(), TransferSetup::new(&a3, iso).unwrap()));
    let z6 = Arc::new(Group::cyclic(6).unwrap());
    let h = Subgroup::closure(&z6, &[2]).unwrap();
    let id = Homomorphism::new(GroupFunction::identity_map(&h.as_group())).unwrap();
    out.push(("Z6>2Z6".to_string(), TransferSetup::new(&h, id).unwrap()));
    let s4 = Arc::new(Group::symmetric(4).unwrap());
    let a4 = derived_subgroup(&Subgroup::whole(&s4));
    let d4 = Subgroup::closure(&s4, &[klein_in_s4()[0], 1]).unwrap();
    let d8 = Arc::new(Group::dihedral(4).unwrap());
    let cases: Vec<(&str, Subgroup)> = vec![
        ("S3>(1 2)", Subgroup::closure(&s3, &[1]).unwrap()),
        ("S4>A4", a4.clone()),
        ("S4>D4", d4),
        ("S4>S3", Subgroup::closure(&s4, &[1, 2]).unwrap()),
        ("D4>rotations", Subgroup::closure(&d8, &[1]).unwrap()),
        ("D4>reflections", Subgroup::closure(&d8, &[4, 6]).unwrap()),
        ("Z12>3Z12", Subgroup::closure(&Arc::new(Group::cyclic(12).unwrap()), &[3]).unwrap()),
    ];
    for (name, h) in cases {
        let local = h.as_group();
        let ab = QuotientGroup::new(&derived_subgroup(&Subgroup::whole(&local))).unwrap();
        let pi = Homomorphism::new(ab.projection().clone()).unwrap();
        out.push((format!("{name} abelianisation"), TransferSetup::new(&h, pi).unwrap()));
    }
    out
}

/// Distributed-average contexts across the shipped abelian extensions: every identity-preserving
/// section of each quotient homomorphism, and twists of the canonical lift by `K`-stabilised
/// kernel-valued functions for every subgroup `K` of the domain.
pub fn generated_contexts() -> Vec<(String, DistributedAverageContext)> {
    let mut out = vec![];
    for ext in abelian_extensions() {
        for (i, section) in all_sections(&ext).into_iter().enumerate() {
            let ctx = DistributedAverageContext::new(&section, None, Some(&ext.kernel)).unwrap();
            out.push((format!("{} section {i}", ext.name), ctx));
        }
        let lift = crate::distributed::sz_lift_abelian(&ext.kernel, &ext.hom).unwrap().hom;
        for k in domain_subgroups(&ext) {
            if k.is_trivial() {
                continue; // the sections already cover K = 1
            }
            for (i, a) in stabilised_kernel_functions(&ext, &k).into_iter().enumerate() {
                let f = twist(lift.function(), &a, &ext.kernel, &k).unwrap();
                let ctx = DistributedAverageContext::new(&f, Some(&k), Some(&ext.kernel)).unwrap();
                out.push((format!("{} twist K={:?} #{i}", ext.name, k.members()), ctx));
            }
        }
    }
    out
}

/// Admissible variations of one context: other representatives, `K = 1`, the smallest
/// and largest admissible `A`, and `m` shifted by `|A|`.
pub fn invariance_variants(ctx: &DistributedAverageContext, ambient_a: &Subgroup) -> Vec<DistributedAverageContext> {
    let f = &ctx.function;
    let mut out = vec![ctx.clone()];
    let mut reps = vec![0; ctx.reps.len()];
    for x in f.domain().elements() {
        let c = ctx.reps.coset_of(x);
        reps[c] = reps[c].max(x);
    }
    out.push(ctx.with_representatives(&reps).unwrap());
    out.push(ctx.with_m(ctx.m + ctx.a_subgroup.order()).unwrap());
    let trivial = Subgroup::trivial(f.domain());
    if let Ok(c) = DistributedAverageContext::new(f, Some(&trivial), Some(&ctx.a_subgroup)) {
        out.push(c);
    }
    for a in [None, Some(ambient_a)] {
        if let Ok(c) = DistributedAverageContext::new(f, Some(&ctx.k_subgroup), a) {
            out.push(c);
        }
    }
    out
}
