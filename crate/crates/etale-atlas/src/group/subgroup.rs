use std::collections::BTreeSet;
use std::sync::Arc;

use super::{FiniteGroup, GroupError};

/// Practical bound for exhaustive subgroup-lattice enumeration.
const LATTICE_ORDER_BOUND: usize = 1024;

/// A subgroup of a parent group, carrying its own re-indexed group
/// structure. `embed(i)` maps subgroup index `i` to a parent element;
/// element sets are kept sorted so `embed(0) = 0`.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
    as_group: Arc<FiniteGroup>,
}

impl Subgroup {
    /// Validates closure, identity and inverses, then re-indexes.
    pub fn from_elements(
        parent: &Arc<FiniteGroup>,
        elements: impl IntoIterator<Item = usize>,
    ) -> Result<Subgroup, GroupError> {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        if !set.contains(&0) {
            return Err(GroupError::NotAGroup { reason: "subgroup misses the identity".into() });
        }
        if let Some(&max) = set.iter().next_back() {
            if max >= parent.order() {
                return Err(GroupError::NotAGroup {
                    reason: format!("element {max} outside the parent group"),
                });
            }
        }
        for &a in &set {
            if !set.contains(&parent.inv(a)) {
                return Err(GroupError::NotAGroup {
                    reason: format!("inverse of {a} missing"),
                });
            }
            for &b in &set {
                if !set.contains(&parent.mul(a, b)) {
                    return Err(GroupError::NotAGroup {
                        reason: format!("not closed: {a}·{b} escapes"),
                    });
                }
            }
        }
        let elements: Vec<usize> = set.into_iter().collect();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for &a in &elements {
            for &b in &elements {
                let p = parent.mul(a, b);
                let idx = elements.binary_search(&p).expect("closure checked above");
                table.push(idx as u32);
            }
        }
        let name = format!(
            "{}{{{}}}",
            parent.name(),
            elements.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
        );
        let as_group = Arc::new(FiniteGroup::from_table_unchecked(name, n, table));
        Ok(Subgroup { parent: Arc::clone(parent), elements, as_group })
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Subgroup {
        Subgroup::from_elements(parent, [0]).expect("trivial subgroup")
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Subgroup {
        Subgroup::from_elements(parent, 0..parent.order()).expect("whole group")
    }

    /// Closes a generating set inside the parent.
    pub fn generated_by(
        parent: &Arc<FiniteGroup>,
        gens: impl IntoIterator<Item = usize>,
    ) -> Subgroup {
        let elems = parent.closure(gens);
        Subgroup::from_elements(parent, elems).expect("closure is a subgroup")
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    /// Sorted parent-element indices.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The subgroup re-indexed as a standalone group.
    pub fn as_group(&self) -> &Arc<FiniteGroup> {
        &self.as_group
    }

    /// Subgroup index → parent element.
    pub fn embed(&self, i: usize) -> usize {
        self.elements[i]
    }

    /// Parent element → subgroup index, when the element belongs.
    pub fn position_of(&self, parent_elem: usize) -> Option<usize> {
        self.elements.binary_search(&parent_elem).ok()
    }

    pub fn contains(&self, parent_elem: usize) -> bool {
        self.position_of(parent_elem).is_some()
    }

    /// The element set of `g · self · g⁻¹`.
    pub fn conjugated_elements(&self, g: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.elements.iter().map(|&x| self.parent.conj(g, x)).collect();
        out.sort_unstable();
        out
    }

    pub fn is_normal_in_parent(&self) -> bool {
        (0..self.parent.order()).all(|g| self.conjugated_elements(g) == self.elements)
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?} of {}", self.elements, self.parent.name())
    }
}

/// A quotient `H/N` together with the projection map.
#[derive(Clone)]
pub struct QuotientGroup {
    source: Subgroup,
    kernel: Subgroup,
    as_group: Arc<FiniteGroup>,
    /// source index (in `H.as_group`) → coset index
    project: Vec<usize>,
}

impl std::fmt::Debug for QuotientGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "QuotientGroup({} cosets of {:?})",
            self.as_group.order(),
            self.kernel.elements()
        )
    }
}

impl QuotientGroup {
    pub fn source(&self) -> &Subgroup {
        &self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn as_group(&self) -> &Arc<FiniteGroup> {
        &self.as_group
    }

    pub fn project(&self, h_index: usize) -> usize {
        self.project[h_index]
    }
}

/// Forms `H/N` for `N` normal in `H`. The kernel must be a subgroup of
/// `H.as_group()`. Cosets are indexed by their least member, so the
/// identity coset is `0`.
pub fn quotient_group(h: &Subgroup, n: &Subgroup) -> Result<QuotientGroup, GroupError> {
    assert!(
        n.parent().same_table(h.as_group()),
        "kernel must be a subgroup of H re-indexed as a group"
    );
    if !n.is_normal_in_parent() {
        return Err(GroupError::NotNormal);
    }
    let hg = h.as_group();
    let order = hg.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut coset_reps: Vec<usize> = Vec::new();
    for x in 0..order {
        if coset_of[x] != usize::MAX {
            continue;
        }
        // x is the least member of its coset because we scan in order
        let id = coset_reps.len();
        coset_reps.push(x);
        for i in 0..n.order() {
            coset_of[hg.mul(x, n.embed(i))] = id;
        }
    }
    let k = coset_reps.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &coset_reps {
        for &b in &coset_reps {
            table.push(coset_of[hg.mul(a, b)] as u32);
        }
    }
    let name = format!("{}/{}", hg.name(), n.as_group().name());
    let as_group = Arc::new(FiniteGroup::from_table_unchecked(name, k, table));
    Ok(QuotientGroup { source: h.clone(), kernel: n.clone(), as_group, project: coset_of })
}

/// All subgroups, found by cyclic extension: close each known subgroup
/// with one extra generator until nothing new appears. Output is sorted
/// by (order, element set).
pub fn all_subgroups(g: &Arc<FiniteGroup>) -> Result<Vec<Subgroup>, GroupError> {
    if g.order() > LATTICE_ORDER_BOUND {
        return Err(GroupError::TooLarge {
            what: "subgroup enumeration",
            limit: LATTICE_ORDER_BOUND,
            got: g.order(),
        });
    }
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let trivial = vec![0usize];
    found.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while let Some(base) = frontier.pop() {
        for cand in 1..g.order() {
            if base.binary_search(&cand).is_ok() {
                continue;
            }
            // Lagrange pruning: the extension contains a subgroup of order
            // lcm(|base|, ord(cand)), which must divide |G|
            let lcm = num_integer::lcm(base.len(), g.elem_order(cand));
            if g.order() % lcm != 0 {
                continue;
            }
            let closed = g.closure(base.iter().copied().chain([cand]));
            if found.insert(closed.clone()) {
                frontier.push(closed);
            }
        }
    }
    let mut sets: Vec<Vec<usize>> = found.into_iter().collect();
    sets.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(sets.into_iter().map(|s| Subgroup::from_elements(g, s).expect("closed set")).collect())
}

/// One representative per conjugation orbit of subgroups: the
/// lexicographically least element set in its orbit. Sorted by
/// (order, element set).
pub fn subgroup_conjugacy_reps(g: &Arc<FiniteGroup>) -> Result<Vec<Subgroup>, GroupError> {
    let all = all_subgroups(g)?;
    let mut reps: Vec<Subgroup> = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for sub in &all {
        if seen.contains(sub.elements()) {
            continue;
        }
        let mut orbit: BTreeSet<Vec<usize>> = BTreeSet::new();
        for x in 0..g.order() {
            orbit.insert(sub.conjugated_elements(x));
        }
        let least = orbit.iter().next().expect("orbit nonempty").clone();
        seen.extend(orbit);
        reps.push(Subgroup::from_elements(g, least).expect("conjugate of a subgroup"));
    }
    reps.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    Ok(reps)
}

/// All normal subgroups of `H`, as subgroups of `H.as_group()`.
pub fn normal_subgroups_in(h: &Subgroup) -> Result<Vec<Subgroup>, GroupError> {
    Ok(all_subgroups(h.as_group())?
        .into_iter()
        .filter(|n| n.is_normal_in_parent())
        .collect())
}
