//! Algebraic identities on random functions between catalog groups.

use std::sync::Arc;

use distributors::arith::{gcd, mod_inverse};
use distributors::catalog::CATALOG_SPECS;
use distributors::distributed::{distributed_average, DistributedAverageContext};
use distributors::distributor::{distributor, verify_action_shift, verify_triple_identity};
use distributors::function::GroupFunction;
use distributors::group::Group;
use distributors::io::{group_from_json, group_to_json, parse_group_spec};
use distributors::subgroup::{all_subgroups, Subgroup};
use proptest::prelude::*;

/// Catalog groups up to order 12, to keep shrinking fast.
fn small_group() -> impl Strategy<Value = Arc<Group>> {
    let specs: Vec<&str> = CATALOG_SPECS.iter().copied().filter(|s| parse_group_spec(s).unwrap().order() <= 12).collect();
    proptest::sample::select(specs).prop_map(|s| Arc::new(parse_group_spec(s).unwrap()))
}

prop_compose! {
    /// A function with arbitrary values, plus three domain elements.
    fn function_and_points()(g in small_group(), h in small_group())
        (values in proptest::collection::vec(0..h.order(), g.order()),
         pts in proptest::array::uniform3(0..g.order()),
         g in Just(g), h in Just(h)) -> (GroupFunction, [usize; 3]) {
        (GroupFunction::new(&g, &h, values).unwrap(), pts)
    }
}

proptest! {
    #[test]
    fn conjugation_composes((f, [a, b, x]) in function_and_points()) {
        let g = f.domain();
        prop_assert_eq!(f.conjugate(a).unwrap().conjugate(b).unwrap().value(x), f.conjugate(g.mul(a, b)).unwrap().value(x));
        prop_assert_eq!(f.conjugate(a).unwrap().value(0), 0);
    }

    #[test]
    fn action_is_left_action((f, [a, b, _]) in function_and_points()) {
        let g = f.domain();
        let f = f.conjugate(0).unwrap();
        prop_assert_eq!(f.act(a).unwrap().act(b).unwrap(), f.act(g.mul(b, a)).unwrap());
    }

    #[test]
    fn product_rule((f, [a, x, _]) in function_and_points(), seed in any::<u64>()) {
        let (g, h) = (f.domain(), f.codomain());
        let other: Vec<usize> = g.elements().map(|i| ((seed >> (i % 60)) as usize + i) % h.order()).collect();
        let k = GroupFunction::new(g, h, other).unwrap();
        let lhs = f.pointwise_product(&k).unwrap().conjugate(a).unwrap().value(x);
        let rhs = h.mul(h.conj(f.conjugate(a).unwrap().value(x), k.value(a)), k.conjugate(a).unwrap().value(x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn distributor_identities((f, [x, y, z]) in function_and_points()) {
        prop_assert!(verify_triple_identity(&f, x, y, z));
        prop_assert!(verify_action_shift(&f, x, y, z));
        let h = f.codomain();
        let d = distributor(&f, x, y).unwrap();
        prop_assert_eq!(f.value(f.domain().mul(x, y)), h.mul(h.mul(f.value(x), f.value(y)), d));
    }

    #[test]
    fn mod_inverse_inverts(a in 1usize..500, n in 1usize..500) {
        match mod_inverse(a, n) {
            Ok(m) => {
                prop_assert_eq!(gcd(a, n), 1);
                // least positive inverse
                prop_assert!(m >= 1 && m <= n);
                prop_assert!((1..m).all(|k| (a * k) % n != 1 % n));
                prop_assert_eq!((a * m) % n, 1 % n);
            }
            Err(_) => prop_assert!(gcd(a, n) != 1),
        }
    }

    #[test]
    fn json_round_trip(g in small_group()) {
        let text = group_to_json(&g);
        let back = group_from_json(&text).unwrap();
        prop_assert_eq!(group_to_json(&back), text);
        prop_assert_eq!(back, (*g).clone());
    }

    /// Whenever the defaults admit a context, the distributed average is a homomorphism
    /// agreeing with the one computed with `K = 1`.
    #[test]
    fn distributed_average_when_admissible((f, _) in function_and_points()) {
        let f = f.conjugate(0).unwrap();
        if let Ok(ctx) = DistributedAverageContext::new(&f, None, None) {
            let avg = distributed_average(&ctx).unwrap();
            prop_assert!(avg.function().is_homomorphism());
            let trivial = Subgroup::trivial(f.domain());
            if let Ok(other) = DistributedAverageContext::new(&f, Some(&trivial), Some(&ctx.a_subgroup)) {
                prop_assert_eq!(distributed_average(&other).unwrap(), avg);
            }
        }
    }

    #[test]
    fn stabilizer_is_a_subgroup((f, _) in function_and_points()) {
        let f = f.conjugate(0).unwrap();
        let stab = f.stabilizer().unwrap();
        let orbit = f.orbit().unwrap();
        prop_assert_eq!(orbit.len() * stab.order(), f.domain().order());
        prop_assert!(all_subgroups(f.domain()).contains(&stab));
    }
}
