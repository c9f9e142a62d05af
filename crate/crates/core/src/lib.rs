//! Arbitrary functions between finite groups: conjugation of functions, distributors,
//! the average function and the transfer, the distributed average, and lifts through
//! coprime extensions.
//!
//! Groups are dense Cayley tables with the identity at index 0. Conventions:
//! `a^b = b⁻¹ab`, `[x, y] = x⁻¹y⁻¹xy`, and `f^a(x) = f(a)⁻¹ f(ax)`.

pub mod arith;
pub mod catalog;
pub mod distributed;
pub mod distributor;
pub mod error;
pub mod function;
pub mod group;
pub mod harness;
pub mod io;
pub mod selfcheck;
pub mod subgroup;
pub mod transfer;

pub use distributed::{DistributedAverageContext, Lift, SectionChoice};
pub use distributor::{distributor, DistributorQuotient, DistributorTable};
pub use error::{Error, Result};
pub use function::{GroupFunction, Homomorphism};
pub use group::{Elem, Group};
pub use harness::{Check, Report};
pub use subgroup::{CosetSide, CosetSystem, QuotientGroup, Subgroup};
pub use transfer::TransferSetup;
