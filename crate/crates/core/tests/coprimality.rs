//! The distributed average of a `K`-stabilised `a : G → A` need not be trivial when only
//! `[G:K]` is prime to `|A|`; the triviality statement needs `|G|` prime to `|A|`.

use std::sync::Arc;

use distributors::distributed::{distributed_average, DistributedAverageContext};
use distributors::function::Homomorphism;
use distributors::group::Group;
use distributors::subgroup::Subgroup;

#[test]
fn sign_on_s3_survives_averaging() {
    let s3 = Arc::new(Group::symmetric(3).unwrap());
    let z2 = Arc::new(Group::cyclic(2).unwrap());
    let sign = Homomorphism::from_generator_images(&s3, &z2, &[1, 3], &[1, 0]).unwrap();
    assert_eq!(sign.values(), &[0, 1, 1, 0, 0, 1]);

    // K = ⟨(1 2)⟩ stabilises every homomorphism, and [S_3 : K] = 3 is prime to 2
    let k = Subgroup::closure(&s3, &[1]).unwrap();
    let a = Subgroup::whole(&z2);
    let ctx = DistributedAverageContext::new(sign.function(), Some(&k), Some(&a)).unwrap();
    assert_eq!((ctx.index(), ctx.m), (3, 1));
    let avg = distributed_average(&ctx).unwrap();
    assert_eq!(avg, sign);
    assert!(!avg.is_trivial());
}
