//! Subgroups, coset systems, normalizers, quotients and derived series.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::function::GroupFunction;
use crate::group::{Elem, Group};

/// Members of `⟨generators⟩`, in breadth-first discovery order starting at the identity.
pub fn closure_members(g: &Group, generators: &[Elem]) -> Vec<Elem> {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut found = vec![0];
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &s in generators {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                found.push(y);
                queue.push_back(y);
            }
        }
    }
    found
}

/// A subgroup of a parent group, stored as a sorted member list.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<Group>,
    members: Vec<Elem>,
    generators: Vec<Elem>,
    mask: Vec<bool>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && *self.parent == *other.parent
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup").field("members", &self.members).field("generators", &self.generators).finish()
    }
}

impl Subgroup {
    /// `⟨generators⟩` in `parent`.
    pub fn closure(parent: &Arc<Group>, generators: &[Elem]) -> Result<Subgroup> {
        for &x in generators {
            parent.check(x)?;
        }
        let mut members = closure_members(parent, generators);
        members.sort_unstable();
        let sub = Subgroup::from_sorted(parent, members, generators.to_vec());
        // Lagrange is asserted, not assumed.
        if parent.order() % sub.order() != 0 {
            return Err(Error::InvariantViolation(format!(
                "subgroup order {} does not divide {}",
                sub.order(),
                parent.order()
            )));
        }
        Ok(sub)
    }

    fn from_sorted(parent: &Arc<Group>, members: Vec<Elem>, generators: Vec<Elem>) -> Subgroup {
        let mut mask = vec![false; parent.order()];
        for &m in &members {
            mask[m] = true;
        }
        Subgroup { parent: parent.clone(), members, generators, mask }
    }

    pub fn trivial(parent: &Arc<Group>) -> Subgroup {
        Subgroup::from_sorted(parent, vec![0], vec![])
    }

    pub fn whole(parent: &Arc<Group>) -> Subgroup {
        let gens = parent.greedy_generators();
        Subgroup::from_sorted(parent, parent.elements().collect(), gens)
    }

    /// Wraps an explicit element set, checking that it is a subgroup.
    pub fn from_members(parent: &Arc<Group>, members: &[Elem]) -> Result<Subgroup> {
        let set: BTreeSet<Elem> = members.iter().copied().collect();
        for &x in &set {
            parent.check(x)?;
        }
        let members: Vec<Elem> = set.into_iter().collect();
        let sub = Subgroup::from_sorted(parent, members, vec![]);
        if !sub.contains(0) {
            return Err(Error::Containment("element set does not contain the identity".into()));
        }
        for &a in &sub.members {
            for &b in &sub.members {
                if !sub.contains(parent.mul(a, b)) {
                    return Err(Error::Containment(format!("element set not closed: {a}·{b}")));
                }
            }
        }
        let generators = sub.members.iter().copied().filter(|&x| x != 0).collect();
        Ok(Subgroup { generators, ..sub })
    }

    pub fn parent(&self) -> &Arc<Group> {
        &self.parent
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        self.members.iter().all(|&a| self.members.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// `⟨self, other⟩`.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.generators.clone();
        gens.extend(other.members.iter().copied().filter(|&x| !self.contains(x)));
        Subgroup::closure(&self.parent, &gens).expect("elements already validated")
    }

    /// `x⁻¹·self·x`.
    pub fn conjugate_by(&self, x: Elem) -> Subgroup {
        let g = &self.parent;
        let mut members: Vec<Elem> = self.members.iter().map(|&s| g.conj(s, x)).collect();
        members.sort_unstable();
        let gens = self.generators.iter().map(|&s| g.conj(s, x)).collect();
        Subgroup::from_sorted(g, members, gens)
    }

    /// The subgroup as a group in its own right: element `i` of the result is `members[i]`.
    pub fn as_group(&self) -> Arc<Group> {
        let n = self.order();
        let mut local = vec![u32::MAX; self.parent.order()];
        for (i, &m) in self.members.iter().enumerate() {
            local[m] = i as u32;
        }
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.members {
            for &b in &self.members {
                table.push(local[self.parent.mul(a, b)]);
            }
        }
        let labels = self.members.iter().map(|&m| self.parent.label(m)).collect();
        Arc::new(Group::from_trusted_table(n, table, Some(labels)))
    }

    /// Position of a member in `members`, i.e. its index in [`Subgroup::as_group`].
    pub fn local_index(&self, x: Elem) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    /// Maps a subgroup of `self.as_group()` back into the parent.
    pub fn embed(&self, local: &Subgroup) -> Subgroup {
        let gens: Vec<Elem> = local.generators.iter().map(|&i| self.members[i]).collect();
        let mut members: Vec<Elem> = local.members.iter().map(|&i| self.members[i]).collect();
        members.sort_unstable();
        Subgroup::from_sorted(&self.parent, members, gens)
    }

    /// Restricts a subgroup of the parent contained in `self` to `self.as_group()` indices.
    pub fn localize(&self, inner: &Subgroup, local_group: &Arc<Group>) -> Result<Subgroup> {
        if !inner.is_subset_of(self) {
            return Err(Error::Containment("subgroup is not contained in the ambient subgroup".into()));
        }
        let members: Vec<Elem> = inner.members.iter().map(|&x| self.local_index(x).unwrap()).collect();
        let gens = inner.generators.iter().map(|&x| self.local_index(x).unwrap()).collect();
        Ok(Subgroup::from_sorted(local_group, members, gens))
    }
}

pub fn is_normal(s: &Subgroup) -> bool {
    let g = s.parent();
    g.elements().all(|x| s.members.iter().all(|&m| s.contains(g.conj(m, x))))
}

/// `N_G(S) = { x : x⁻¹ S x = S }`.
pub fn normalizer(s: &Subgroup) -> Subgroup {
    let g = s.parent();
    let members: Vec<Elem> = g.elements().filter(|&x| s.members.iter().all(|&m| s.contains(g.conj(m, x)))).collect();
    Subgroup::from_members(g, &members).expect("a normalizer is always a subgroup")
}

/// Closure of all commutators `x⁻¹y⁻¹xy` with `x, y ∈ s`.
pub fn derived_subgroup(s: &Subgroup) -> Subgroup {
    let g = s.parent();
    let mut comms = BTreeSet::new();
    for &x in s.members() {
        for &y in s.members() {
            comms.insert(g.commutator(x, y));
        }
    }
    comms.remove(&0);
    let gens: Vec<Elem> = comms.into_iter().collect();
    Subgroup::closure(g, &gens).expect("commutators are in range")
}

/// `s = N⁽⁰⁾ ⊇ N⁽¹⁾ ⊇ …` up to the first repeated term.
pub fn derived_series(s: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![s.clone()];
    loop {
        let next = derived_subgroup(series.last().unwrap());
        if next.order() == series.last().unwrap().order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_soluble(s: &Subgroup) -> bool {
    derived_series(s).last().unwrap().is_trivial()
}

/// Every subgroup of `g`, sorted by order then members. Intended for small groups.
pub fn all_subgroups(g: &Arc<Group>) -> Vec<Subgroup> {
    let mut found: BTreeSet<Vec<Elem>> = BTreeSet::new();
    let mut frontier: Vec<Subgroup> = Vec::new();
    for x in g.elements() {
        let c = Subgroup::closure(g, &[x]).unwrap();
        if found.insert(c.members.clone()) {
            frontier.push(c);
        }
    }
    let cyclic = frontier.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for c in &cyclic {
                if c.is_subset_of(s) {
                    continue;
                }
                let j = s.join(c);
                if found.insert(j.members.clone()) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut subs: Vec<Subgroup> = found
        .into_iter()
        .map(|m| Subgroup::from_members(g, &m).unwrap())
        .collect();
    subs.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
    subs
}

pub fn normal_subgroups(g: &Arc<Group>) -> Vec<Subgroup> {
    all_subgroups(g).into_iter().filter(is_normal).collect()
}

/// Which side the subgroup multiplies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetSide {
    /// Cosets `gS`.
    Left,
    /// Cosets `Sg`.
    Right,
}

/// A transversal of the cosets of a subgroup, with a lookup from elements to cosets.
#[derive(Clone, Debug)]
pub struct CosetSystem {
    subgroup: Subgroup,
    side: CosetSide,
    representatives: Vec<Elem>,
    coset_of: Vec<usize>,
}

impl CosetSystem {
    /// Canonical representatives: the minimal index of each coset, in ascending order.
    pub fn new(s: &Subgroup, side: CosetSide) -> CosetSystem {
        let g = s.parent();
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut representatives = Vec::new();
        for x in g.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let pos = representatives.len();
            representatives.push(x);
            for &m in s.members() {
                let y = match side {
                    CosetSide::Left => g.mul(x, m),
                    CosetSide::Right => g.mul(m, x),
                };
                coset_of[y] = pos;
            }
        }
        CosetSystem { subgroup: s.clone(), side, representatives, coset_of }
    }

    /// Same cosets, caller-chosen representatives (one per coset, any order).
    pub fn with_representatives(s: &Subgroup, side: CosetSide, reps: &[Elem]) -> Result<CosetSystem> {
        let canonical = CosetSystem::new(s, side);
        if reps.len() != canonical.representatives.len() {
            return Err(Error::Precondition(format!(
                "expected {} coset representatives, got {}",
                canonical.representatives.len(),
                reps.len()
            )));
        }
        let mut hit = vec![false; reps.len()];
        for &r in reps {
            s.parent().check(r)?;
            let c = canonical.coset_of[r];
            if hit[c] {
                return Err(Error::Precondition(format!("two representatives lie in the coset of {}", canonical.representatives[c])));
            }
            hit[c] = true;
        }
        let coset_of = canonical.coset_of.iter().map(|&c| reps.iter().position(|&r| canonical.coset_of[r] == c).unwrap()).collect();
        Ok(CosetSystem { subgroup: s.clone(), side, representatives: reps.to_vec(), coset_of })
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn side(&self) -> CosetSide {
        self.side
    }

    pub fn representatives(&self) -> &[Elem] {
        &self.representatives
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Position (in `representatives`) of the coset containing `x`.
    pub fn coset_of(&self, x: Elem) -> usize {
        self.coset_of[x]
    }

    pub fn representative_of(&self, x: Elem) -> Elem {
        self.representatives[self.coset_of[x]]
    }

    /// Splits `x` as `(s, t)` with `x = t·s` (left) or `x = s·t` (right), `t` the representative.
    pub fn decompose(&self, x: Elem) -> (Elem, Elem) {
        let g = self.subgroup.parent();
        let t = self.representative_of(x);
        let s = match self.side {
            CosetSide::Left => g.mul(g.inv(t), x),
            CosetSide::Right => g.mul(x, g.inv(t)),
        };
        (s, t)
    }
}

/// A quotient `G/N` realised as its own table over the canonical coset representatives.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    group: Arc<Group>,
    projection: GroupFunction,
    kernel: Subgroup,
    cosets: CosetSystem,
}

impl QuotientGroup {
    pub fn new(n: &Subgroup) -> Result<QuotientGroup> {
        if !is_normal(n) {
            return Err(Error::NotNormal(format!("subgroup of order {} with generators {:?}", n.order(), n.generators())));
        }
        let g = n.parent();
        let cosets = CosetSystem::new(n, CosetSide::Left);
        let reps = cosets.representatives();
        let k = reps.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in reps {
            for &b in reps {
                table.push(cosets.coset_of(g.mul(a, b)) as u32);
            }
        }
        let labels = reps.iter().map(|&r| format!("{}N", g.label(r))).collect();
        let group = Arc::new(Group::from_trusted_table(k, table, Some(labels)));
        let projection = GroupFunction::new(g, &group, (0..g.order()).map(|x| cosets.coset_of(x)).collect())?;
        let q = QuotientGroup { group, projection, kernel: n.clone(), cosets };
        // kernel of the projection equals N, and it multiplies correctly
        if !q.projection.is_homomorphism() {
            return Err(Error::InvariantViolation("quotient projection is not a homomorphism".into()));
        }
        Ok(q)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn projection(&self) -> &GroupFunction {
        &self.projection
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn cosets(&self) -> &CosetSystem {
        &self.cosets
    }

    pub fn parent(&self) -> &Arc<Group> {
        self.kernel.parent()
    }

    pub fn project(&self, x: Elem) -> Elem {
        self.projection.value(x)
    }

    /// Canonical representative in the parent of a quotient element.
    pub fn lift_element(&self, q: Elem) -> Elem {
        self.cosets.representatives()[q]
    }
}
