//! Finite groups as dense multiplication tables.
//!
//! Elements are the indices `0..order` and index 0 is always the identity.
//! Every constructor either builds a table that is a group by construction or
//! validates an imported one in full (latin square, identity, associativity).

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// An element of a [`Group`], as an index into its table.
pub type Elem = usize;

/// Default bound on the number of elements a closure-based constructor may produce.
pub const DEFAULT_ELEMENT_CAP: usize = 5040;

/// Largest `n` accepted by [`Group::symmetric`].
pub const MAX_SYMMETRIC_DEGREE: usize = 6;

#[derive(Clone)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group").field("order", &self.order).finish_non_exhaustive()
    }
}

impl Group {
    /// Builds a group from a table that is known to satisfy the group axioms.
    pub(crate) fn from_trusted_table(order: usize, table: Vec<u32>, labels: Option<Vec<String>>) -> Group {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverse[a] = row.iter().position(|&v| v == 0).expect("row without identity") as u32;
        }
        Group { order, table, inverse, labels }
    }

    /// Imports and fully validates a Cayley table.
    ///
    /// Fails with a message naming the first bad row, column or triple.
    pub fn from_cayley_table(rows: &[Vec<usize>]) -> Result<Group> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let mut table = Vec::with_capacity(order * order);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Validation(format!("row {a} has length {} but order is {order}", row.len())));
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(Error::Validation(format!("entry ({a},{b}) = {v} is out of range")));
                }
                table.push(v as u32);
            }
        }
        for x in 0..order {
            if table[x] as usize != x || table[x * order] as usize != x {
                return Err(Error::Validation(format!("index 0 is not an identity at element {x}")));
            }
        }
        let mut seen = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                let v = table[a * order + b] as usize;
                if seen[v] == a {
                    return Err(Error::Validation(format!("row {a} is not a permutation (repeats {v})")));
                }
                seen[v] = a;
            }
        }
        let mut seen = vec![usize::MAX; order];
        for b in 0..order {
            for a in 0..order {
                let v = table[a * order + b] as usize;
                if seen[v] == b {
                    return Err(Error::Validation(format!("column {b} is not a permutation (repeats {v})")));
                }
                seen[v] = b;
            }
        }
        let g = Group::from_trusted_table(order, table, None);
        if let Some((a, b, c)) = g.associativity_witness() {
            return Err(Error::Validation(format!("associativity fails for triple ({a},{b},{c})")));
        }
        Ok(g)
    }

    /// First triple `(a,b,c)` with `(ab)c != a(bc)`, if any.
    pub fn associativity_witness(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Z_n with `a·b = (a+b) mod n`.
    pub fn cyclic(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let table = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
        Ok(Group::from_trusted_table(n, table, None))
    }

    /// Dihedral group of order `2n`: element `r^k s^e` has index `k + n·e`.
    pub fn dihedral(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let order = 2 * n;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            let (a, e) = (x % n, x / n);
            for y in 0..order {
                let (b, f) = (y % n, y / n);
                let k = if e == 0 { (a + b) % n } else { (a + n - b) % n };
                table.push((k + n * ((e + f) % 2)) as u32);
            }
        }
        let labels = (0..order)
            .map(|x| match (x % n, x / n) {
                (0, 0) => "e".to_string(),
                (k, 0) => format!("r{k}"),
                (0, _) => "s".to_string(),
                (k, _) => format!("r{k}s"),
            })
            .collect();
        Ok(Group::from_trusted_table(order, table, Some(labels)))
    }

    /// S_n over all permutations of `0..n`, ordered lexicographically by one-line notation.
    ///
    /// Multiplication is composition, `(a·b)(i) = a(b(i))`.
    pub fn symmetric(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if n > MAX_SYMMETRIC_DEGREE {
            return Err(Error::SizeLimit {
                what: format!("symmetric group degree {n}"),
                count: n as u128,
                cap: MAX_SYMMETRIC_DEGREE as u128,
            });
        }
        Ok(Group::from_perm_list(lexicographic_permutations(n)))
    }

    /// A_n: the even permutations of `0..n`, in lexicographic order.
    pub fn alternating(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if n > MAX_SYMMETRIC_DEGREE {
            return Err(Error::SizeLimit {
                what: format!("alternating group degree {n}"),
                count: n as u128,
                cap: MAX_SYMMETRIC_DEGREE as u128,
            });
        }
        let perms = lexicographic_permutations(n).into_iter().filter(|p| is_even(p)).collect();
        Ok(Group::from_perm_list(perms))
    }

    /// Builds the table of an explicit list of permutations closed under composition.
    /// The first permutation must be the identity.
    fn from_perm_list(perms: Vec<Vec<usize>>) -> Group {
        let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let order = perms.len();
        let mut table = Vec::with_capacity(order * order);
        for a in &perms {
            for b in &perms {
                let ab = compose(a, b);
                table.push(index[ab.as_slice()] as u32);
            }
        }
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        Group::from_trusted_table(order, table, Some(labels))
    }

    /// Closure of permutation generators on `0..degree`.
    ///
    /// Index 0 is the identity; further indices are assigned in breadth-first
    /// discovery order, right-multiplying by the generators in input order.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<Group> {
        for (i, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::Validation(format!("generator {i} has length {} but degree is {degree}", g.len())));
            }
            let mut hit = vec![false; degree];
            for &v in g {
                if v >= degree || hit[v] {
                    return Err(Error::Validation(format!("generator {i} is not a permutation of 0..{degree}")));
                }
                hit[v] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut perms = vec![identity.clone()];
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let next = compose(&perms[i], g);
                if !seen.contains_key(&next) {
                    if perms.len() >= cap {
                        return Err(Error::SizeLimit {
                            what: "permutation group closure".into(),
                            count: perms.len() as u128 + 1,
                            cap: cap as u128,
                        });
                    }
                    seen.insert(next.clone(), perms.len());
                    queue.push_back(perms.len());
                    perms.push(next);
                }
            }
        }
        Ok(Group::from_perm_list(perms))
    }

    /// `g1 × g2` with `(a,b)` at index `a·|g2| + b`.
    pub fn direct_product(g1: &Group, g2: &Group) -> Group {
        let (n1, n2) = (g1.order, g2.order);
        let order = n1 * n2;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let a = g1.mul(x / n2, y / n2);
                let b = g2.mul(x % n2, y % n2);
                table.push((a * n2 + b) as u32);
            }
        }
        let labels = (0..order).map(|x| format!("({},{})", g1.label(x / n2), g2.label(x % n2))).collect();
        Group::from_trusted_table(order, table, Some(labels))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b] as Elem
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a] as Elem
    }

    pub fn check(&self, a: Elem) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::OutOfRange { element: a, order: self.order })
        }
    }

    pub fn try_mul(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn try_inv(&self, a: Elem) -> Result<Elem> {
        self.check(a)?;
        Ok(self.inv(a))
    }

    /// Least `k >= 1` with `a^k = 1`.
    pub fn element_order(&self, a: Elem) -> Result<usize> {
        self.check(a)?;
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        Ok(k)
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        let (mut result, mut base, mut k) = (0, a, k);
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    /// `a^b = b⁻¹·a·b`.
    pub fn conj(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(b), a), b)
    }

    /// `[x,y] = x⁻¹·y⁻¹·x·y`.
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn label(&self, a: Elem) -> String {
        match &self.labels {
            Some(labels) => labels[a].clone(),
            None => a.to_string(),
        }
    }

    /// Sorted list of element orders; the crate's only isomorphism heuristic.
    pub fn order_multiset(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = self.elements().map(|a| self.element_order(a).unwrap()).collect();
        orders.sort_unstable();
        orders
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.table[a * self.order..(a + 1) * self.order].iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// Smallest generating set found greedily by ascending index.
    pub fn greedy_generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut members = vec![false; self.order];
        members[0] = true;
        for x in self.elements() {
            if !members[x] {
                gens.push(x);
                for m in crate::subgroup::closure_members(self, &gens) {
                    members[m] = true;
                }
            }
        }
        gens
    }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn lexicographic_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    // next_permutation
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut done = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if done[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        done[start] = true;
        let mut x = p[start];
        while x != start {
            cycle.push(x);
            done[x] = true;
            x = p[x];
        }
        out.push('(');
        out.push_str(&cycle.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}
