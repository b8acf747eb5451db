//! Finite groups as validated Cayley tables, with the structural queries
//! the classifiers need: conjugacy, centralizers, subgroup lattices,
//! quotients and homomorphism enumeration.
//!
//! Element `0` is always the identity. All types are immutable after
//! construction and cheap to share through [`std::sync::Arc`].

mod homs;
mod label;
mod subgroup;

use std::sync::Arc;

use thiserror::Error;

pub use homs::{find_isomorphism, homs_between, GroupHom};
pub(crate) use homs::generating_set;
pub use label::small_group_label;
pub use subgroup::{
    all_subgroups, normal_subgroups_in, quotient_group, subgroup_conjugacy_reps, QuotientGroup,
    Subgroup,
};

/// Hard cap on group order (Cayley-table representation).
pub const MAX_ORDER: usize = 1 << 16;

/// Orders up to this bound get a full associativity check on load;
/// larger tables are checked on a deterministic sample of triples.
const FULL_ASSOC_BOUND: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("line {line}: {msg}")]
    MalformedSpec { line: usize, msg: String },
    #[error("not a group: {reason}")]
    NotAGroup { reason: String },
    #[error("{what} too large: {got} exceeds limit {limit}")]
    TooLarge { what: &'static str, limit: usize, got: usize },
    #[error("subgroup is not normal")]
    NotNormal,
}

/// A finite group presented by its multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    /// row-major: `table[g * order + h] = g · h`
    table: Vec<u32>,
    inv: Vec<u32>,
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table, validating the
    /// identity conventions, the Latin-square property, associativity
    /// (exhaustive up to order 64, sampled beyond) and two-sided inverses.
    pub fn from_table(name: impl Into<String>, rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::NotAGroup { reason: "empty table".into() });
        }
        if order > MAX_ORDER {
            return Err(GroupError::TooLarge { what: "group order", limit: MAX_ORDER, got: order });
        }
        let mut table = Vec::with_capacity(order * order);
        for row in &rows {
            if row.len() != order {
                return Err(GroupError::NotAGroup { reason: "table is not square".into() });
            }
            for &v in row {
                if v >= order {
                    return Err(GroupError::NotAGroup {
                        reason: format!("entry {v} out of range 0..{order}"),
                    });
                }
                table.push(v as u32);
            }
        }
        let g = FiniteGroup { name: name.into(), order, table, inv: Vec::new() };
        g.validated()
    }

    fn validated(mut self) -> Result<Self, GroupError> {
        let n = self.order;
        for i in 0..n {
            if self.mul(0, i) != i || self.mul(i, 0) != i {
                return Err(GroupError::NotAGroup {
                    reason: format!("element 0 is not a two-sided identity at {i}"),
                });
            }
        }
        // Latin square: every row and column is a permutation
        let mut seen = vec![false; n];
        for g in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for h in 0..n {
                let v = self.mul(g, h);
                if seen[v] {
                    return Err(GroupError::NotAGroup {
                        reason: format!("row {g} repeats entry {v}"),
                    });
                }
                seen[v] = true;
            }
        }
        for h in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for g in 0..n {
                let v = self.mul(g, h);
                if seen[v] {
                    return Err(GroupError::NotAGroup {
                        reason: format!("column {h} repeats entry {v}"),
                    });
                }
                seen[v] = true;
            }
        }
        // associativity
        if n <= FULL_ASSOC_BOUND {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(GroupError::NotAGroup {
                                reason: format!("associativity fails at ({a}, {b}, {c})"),
                            });
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64 ^ (n as u64);
            let samples = (n * 64).min(1 << 18);
            for _ in 0..samples {
                let a = splitmix(&mut state) as usize % n;
                let b = splitmix(&mut state) as usize % n;
                let c = splitmix(&mut state) as usize % n;
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(GroupError::NotAGroup {
                        reason: format!("associativity fails at ({a}, {b}, {c})"),
                    });
                }
            }
        }
        // two-sided inverses
        let mut inv = vec![0u32; n];
        for g in 0..n {
            let mut found = None;
            for h in 0..n {
                if self.mul(g, h) == 0 && self.mul(h, g) == 0 {
                    found = Some(h);
                    break;
                }
            }
            match found {
                Some(h) => inv[g] = h as u32,
                None => {
                    return Err(GroupError::NotAGroup {
                        reason: format!("element {g} has no two-sided inverse"),
                    })
                }
            }
        }
        self.inv = inv;
        Ok(self)
    }

    /// Table known to satisfy the group laws (re-indexed subgroups,
    /// quotients, direct products); skips re-validation.
    pub(crate) fn from_table_unchecked(name: String, order: usize, table: Vec<u32>) -> Self {
        let mut inv = vec![0u32; order];
        for g in 0..order {
            for h in 0..order {
                if table[g * order + h] == 0 {
                    inv[g] = h as u32;
                    break;
                }
            }
        }
        FiniteGroup { name, order, table, inv }
    }

    /// The cyclic group ℤ/m with `i · j = i + j mod m`.
    pub fn cyclic(m: usize) -> Arc<FiniteGroup> {
        assert!(m >= 1);
        let mut table = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                table.push(((i + j) % m) as u32);
            }
        }
        Arc::new(FiniteGroup::from_table_unchecked(format!("Z{m}"), m, table))
    }

    /// Direct product with lexicographic element indexing `(a, b) ↦ a·|B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Arc<FiniteGroup> {
        let n = a.order * b.order;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let (xa, xb) = (x / b.order, x % b.order);
            for y in 0..n {
                let (ya, yb) = (y / b.order, y % b.order);
                let za = a.mul(xa, ya);
                let zb = b.mul(xb, yb);
                table.push((za * b.order + zb) as u32);
            }
        }
        Arc::new(FiniteGroup::from_table_unchecked(
            format!("{}x{}", a.name, b.name),
            n,
            table,
        ))
    }

    /// The dihedral group of order `2n` (symmetries of the regular n-gon),
    /// generated by the rotation and a reflection.
    pub fn dihedral(n: usize) -> Arc<FiniteGroup> {
        assert!(n >= 1);
        let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        FiniteGroup::from_permutations(format!("D{n}"), n, &[rotation, reflection])
            .expect("dihedral generators close")
    }

    /// The quaternion group of order 8, with elements ordered
    /// `1, −1, i, −i, j, −j, k, −k`.
    pub fn quaternion8() -> Arc<FiniteGroup> {
        let mul = |a: usize, b: usize| -> usize {
            let (sa, xa) = (a % 2, a / 2);
            let (sb, xb) = (b % 2, b / 2);
            let (axis, sign) = match (xa, xb) {
                (0, x) => (x, 0),
                (x, 0) => (x, 0),
                (x, y) if x == y => (0, 1),
                (1, 2) => (3, 0),
                (2, 1) => (3, 1),
                (2, 3) => (1, 0),
                (3, 2) => (1, 1),
                (3, 1) => (2, 0),
                (1, 3) => (2, 1),
                _ => unreachable!(),
            };
            axis * 2 + (sa + sb + sign) % 2
        };
        let table: Vec<Vec<usize>> =
            (0..8).map(|a| (0..8).map(|b| mul(a, b)).collect()).collect();
        Arc::new(FiniteGroup::from_table("Q8", table).expect("quaternion table is a group"))
    }

    /// Closes a set of permutations (0-based images of `0..degree`) into a
    /// group under composition `(p ∘ q)(x) = p(q(x))`.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        gens: &[Vec<usize>],
    ) -> Result<Arc<FiniteGroup>, GroupError> {
        for p in gens {
            if p.len() != degree {
                return Err(GroupError::NotAGroup {
                    reason: "generator has wrong degree".into(),
                });
            }
            let mut seen = vec![false; degree];
            for &x in p {
                if x >= degree || seen[x] {
                    return Err(GroupError::NotAGroup {
                        reason: "generator is not a permutation".into(),
                    });
                }
                seen[x] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elems = vec![identity.clone()];
        let mut index = std::collections::HashMap::new();
        index.insert(identity, 0usize);
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            for gen in gens {
                let composed: Vec<usize> = elems[i].iter().map(|&x| gen[x]).collect();
                if !index.contains_key(&composed) {
                    if elems.len() >= MAX_ORDER {
                        return Err(GroupError::TooLarge {
                            what: "permutation closure",
                            limit: MAX_ORDER,
                            got: elems.len() + 1,
                        });
                    }
                    index.insert(composed.clone(), elems.len());
                    frontier.push(elems.len());
                    elems.push(composed);
                }
            }
        }
        // canonical indexing: identity first, the rest in lexicographic order
        let mut rest: Vec<Vec<usize>> = elems
            .into_iter()
            .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
            .collect();
        rest.sort();
        let mut ordered = vec![(0..degree).collect::<Vec<usize>>()];
        ordered.extend(rest);
        let n = ordered.len();
        let mut pos = std::collections::HashMap::new();
        for (i, p) in ordered.iter().enumerate() {
            pos.insert(p.clone(), i);
        }
        let mut table = Vec::with_capacity(n * n);
        for p in &ordered {
            for q in &ordered {
                let composed: Vec<usize> = q.iter().map(|&x| p[x]).collect();
                table.push(pos[&composed] as u32);
            }
        }
        Ok(Arc::new(FiniteGroup::from_table_unchecked(name.into(), n, table)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn elem_order(&self, g: usize) -> usize {
        let mut acc = g;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.order {
            for b in (a + 1)..self.order {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Sorted multiset of element orders; an isomorphism invariant.
    pub fn order_multiset(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = (0..self.order).map(|g| self.elem_order(g)).collect();
        orders.sort_unstable();
        orders
    }

    /// Structural equality of the multiplication tables (names ignored).
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.order == other.order && self.table == other.table
    }

    /// Closes a subset (as element indices) under multiplication.
    pub fn closure(&self, seed: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut members = vec![0usize];
        let mut frontier: Vec<usize> = Vec::new();
        for g in seed {
            if !in_set[g] {
                in_set[g] = true;
                members.push(g);
                frontier.push(g);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            i += 1;
            for j in 0..members.len() {
                for prod in [self.mul(a, members[j]), self.mul(members[j], a)] {
                    if !in_set[prod] {
                        in_set[prod] = true;
                        members.push(prod);
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Partition of the elements into conjugacy classes; each class is
    /// sorted and classes are ordered by their least element, so the
    /// identity class `{0}` comes first.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order];
        let mut classes = Vec::new();
        for g in 0..self.order {
            if assigned[g] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order).map(|x| self.conj(x, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                assigned[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// The centralizer `{ x : x g = g x }` as a subgroup.
    pub fn centralizer(self: &Arc<Self>, g: usize) -> Subgroup {
        assert!(g < self.order, "element out of range");
        let elems: Vec<usize> =
            (0..self.order).filter(|&x| self.mul(x, g) == self.mul(g, x)).collect();
        Subgroup::from_elements(self, elems).expect("centralizer is a subgroup")
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}
