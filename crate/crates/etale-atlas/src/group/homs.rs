use std::sync::Arc;

use super::{FiniteGroup, GroupError};

/// Bound on the domain order for exhaustive homomorphism search.
const HOM_DOMAIN_BOUND: usize = 64;

/// A homomorphism between finite groups, stored by its image array.
#[derive(Clone)]
pub struct GroupHom {
    domain: Arc<FiniteGroup>,
    codomain: Arc<FiniteGroup>,
    images: Vec<usize>,
}

impl GroupHom {
    pub fn new(
        domain: &Arc<FiniteGroup>,
        codomain: &Arc<FiniteGroup>,
        images: Vec<usize>,
    ) -> Result<GroupHom, GroupError> {
        if images.len() != domain.order() {
            return Err(GroupError::NotAGroup { reason: "image array has wrong length".into() });
        }
        if images[0] != 0 {
            return Err(GroupError::NotAGroup { reason: "identity must map to identity".into() });
        }
        for a in 0..domain.order() {
            for b in 0..domain.order() {
                if images[domain.mul(a, b)] != codomain.mul(images[a], images[b]) {
                    return Err(GroupError::NotAGroup {
                        reason: format!("homomorphism law fails at ({a}, {b})"),
                    });
                }
            }
        }
        Ok(GroupHom { domain: Arc::clone(domain), codomain: Arc::clone(codomain), images })
    }

    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteGroup> {
        &self.codomain
    }

    pub fn apply(&self, g: usize) -> usize {
        self.images[g]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(|&y| y == 0)
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.order() == self.codomain.order() && {
            let mut seen = vec![false; self.codomain.order()];
            self.images.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        }
    }
}

impl std::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupHom{:?}", self.images)
    }
}

/// A greedy minimal generating sequence: scan elements, keep those that
/// enlarge the generated subgroup.
pub(crate) fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut closed = vec![0usize];
    for cand in 1..g.order() {
        if closed.binary_search(&cand).is_err() {
            gens.push(cand);
            closed = g.closure(gens.iter().copied());
            if closed.len() == g.order() {
                break;
            }
        }
    }
    gens
}

/// Extends generator images to a full image array by closing the graph
/// inside D × C. Returns `None` on conflict. A completed closure of size
/// |D| is automatically a homomorphism (it is a subgroup of the product
/// projecting bijectively to D).
fn close_graph(
    d: &FiniteGroup,
    c: &FiniteGroup,
    gens: &[usize],
    gen_images: &[usize],
) -> Option<Vec<usize>> {
    let mut img = vec![usize::MAX; d.order()];
    img[0] = 0;
    let mut known = vec![0usize];
    for (&g, &y) in gens.iter().zip(gen_images) {
        if img[g] == usize::MAX {
            img[g] = y;
            known.push(g);
        } else if img[g] != y {
            return None;
        }
    }
    let mut i = 0;
    while i < known.len() {
        let a = known[i];
        i += 1;
        for j in 0..known.len() {
            let b = known[j];
            for (p, q) in [(d.mul(a, b), c.mul(img[a], img[b])), (d.mul(b, a), c.mul(img[b], img[a]))] {
                if img[p] == usize::MAX {
                    img[p] = q;
                    known.push(p);
                } else if img[p] != q {
                    return None;
                }
            }
        }
    }
    if known.len() == d.order() {
        Some(img)
    } else {
        // generators do not generate; caller guarantees they do
        unreachable!("generating set failed to generate")
    }
}

/// All homomorphisms D → C, by assigning images to a generating set and
/// closing; candidates are pruned by element-order divisibility. Output is
/// sorted by image array.
pub fn homs_between(
    d: &Arc<FiniteGroup>,
    c: &Arc<FiniteGroup>,
) -> Result<Vec<GroupHom>, GroupError> {
    if d.order() > HOM_DOMAIN_BOUND {
        return Err(GroupError::TooLarge {
            what: "homomorphism search domain",
            limit: HOM_DOMAIN_BOUND,
            got: d.order(),
        });
    }
    let gens = generating_set(d);
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    search_homs(d, c, &gens, &mut stack, &mut out, false);
    out.sort();
    Ok(out
        .into_iter()
        .map(|images| GroupHom {
            domain: Arc::clone(d),
            codomain: Arc::clone(c),
            images,
        })
        .collect())
}

fn search_homs(
    d: &FiniteGroup,
    c: &FiniteGroup,
    gens: &[usize],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    isomorphic_only: bool,
) {
    if chosen.len() == gens.len() {
        if let Some(img) = close_graph(d, c, gens, chosen) {
            if gens.is_empty() && d.order() == 1 {
                out.push(img);
                return;
            }
            if !isomorphic_only || is_bijection(&img, c.order()) {
                out.push(img);
            }
        }
        return;
    }
    let g = gens[chosen.len()];
    let g_ord = d.elem_order(g);
    for y in 0..c.order() {
        let y_ord = c.elem_order(y);
        let admissible = if isomorphic_only { y_ord == g_ord } else { g_ord % y_ord == 0 };
        if !admissible {
            continue;
        }
        chosen.push(y);
        // partial consistency: close what we have so far
        if close_graph_partial(d, c, &gens[..chosen.len()], chosen) {
            search_homs(d, c, gens, chosen, out, isomorphic_only);
        }
        chosen.pop();
    }
}

/// Consistency check for a partial assignment: the closure of the chosen
/// generator pairs inside D × C must not conflict.
fn close_graph_partial(d: &FiniteGroup, c: &FiniteGroup, gens: &[usize], images: &[usize]) -> bool {
    let mut img = vec![usize::MAX; d.order()];
    img[0] = 0;
    let mut known = vec![0usize];
    for (&g, &y) in gens.iter().zip(images) {
        if img[g] == usize::MAX {
            img[g] = y;
            known.push(g);
        } else if img[g] != y {
            return false;
        }
    }
    let mut i = 0;
    while i < known.len() {
        let a = known[i];
        i += 1;
        for j in 0..known.len() {
            let b = known[j];
            for (p, q) in [(d.mul(a, b), c.mul(img[a], img[b])), (d.mul(b, a), c.mul(img[b], img[a]))] {
                if img[p] == usize::MAX {
                    img[p] = q;
                    known.push(p);
                } else if img[p] != q {
                    return false;
                }
            }
        }
    }
    true
}

fn is_bijection(img: &[usize], codomain_order: usize) -> bool {
    if img.len() != codomain_order {
        return false;
    }
    let mut seen = vec![false; codomain_order];
    img.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
}

/// Searches for an isomorphism D ≅ C; fingerprints (order, element-order
/// multiset, abelianness) prune before the exhaustive search.
pub fn find_isomorphism(
    d: &Arc<FiniteGroup>,
    c: &Arc<FiniteGroup>,
) -> Result<Option<GroupHom>, GroupError> {
    if d.order() != c.order()
        || d.is_abelian() != c.is_abelian()
        || d.order_multiset() != c.order_multiset()
    {
        return Ok(None);
    }
    if d.order() > HOM_DOMAIN_BOUND {
        return Err(GroupError::TooLarge {
            what: "isomorphism search domain",
            limit: HOM_DOMAIN_BOUND,
            got: d.order(),
        });
    }
    let gens = generating_set(d);
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    search_homs(d, c, &gens, &mut stack, &mut out, true);
    Ok(out.into_iter().next().map(|images| GroupHom {
        domain: Arc::clone(d),
        codomain: Arc::clone(c),
        images,
    }))
}
