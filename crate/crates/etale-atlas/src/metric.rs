//! Metric groups: finite abelian groups with a quadratic form `q : B → ℚ/ℤ`.
//! At the pointed level these present non-degenerate braided fusion
//! categories, with `O(B, q)` standing in for the braided automorphism
//! group.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::group::FiniteGroup;
use crate::zlinalg::Qz;

/// Cap on the orthogonal-group size the exhaustive search will build a
/// Cayley table for.
const ORTHOGONAL_SIZE_BOUND: usize = 10_000;

/// Cap on |B| for the orthogonal-group search.
const ORTHOGONAL_ORDER_BOUND: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricError {
    #[error("the underlying group is not abelian")]
    NotAbelian,
    #[error("q is not a quadratic form: {witness}")]
    NotQuadratic { witness: String },
    #[error("expected {expected} q-values, got {got}")]
    ValueCount { expected: usize, got: usize },
    #[error("{what} too large: {got} exceeds limit {limit}")]
    TooLarge { what: &'static str, limit: usize, got: usize },
}

/// A finite abelian group `B` with quadratic form `q` and its associated
/// bilinear form `b(x, y) = q(x + y) − q(x) − q(y)`.
#[derive(Clone)]
pub struct MetricGroup {
    name: String,
    group: Arc<FiniteGroup>,
    q: Vec<Qz>,
    b: Vec<Qz>,
}

impl MetricGroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn q(&self, x: usize) -> Qz {
        self.q[x]
    }

    pub fn b(&self, x: usize, y: usize) -> Qz {
        self.b[x * self.group.order() + y]
    }

    pub fn is_trivial(&self) -> bool {
        self.group.order() == 1
    }

    /// Elements pairing trivially with everything under `b`.
    pub fn radical(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&x| (0..self.order()).all(|y| self.b(x, y).is_zero()))
            .collect()
    }
}

impl std::fmt::Debug for MetricGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MetricGroup({}, |B| = {})", self.name, self.order())
    }
}

/// Validates the quadratic-form laws exhaustively and derives the
/// bilinear form.
pub fn make_metric_group(
    name: impl Into<String>,
    group: &Arc<FiniteGroup>,
    q_values: Vec<Qz>,
) -> Result<MetricGroup, MetricError> {
    if !group.is_abelian() {
        return Err(MetricError::NotAbelian);
    }
    let n = group.order();
    if q_values.len() != n {
        return Err(MetricError::ValueCount { expected: n, got: q_values.len() });
    }
    let q = q_values;
    if !q[0].is_zero() {
        return Err(MetricError::NotQuadratic { witness: format!("q(0) = {} ≠ 0", q[0]) });
    }
    for x in 0..n {
        let minus = group.inv(x);
        if q[minus] != q[x] {
            return Err(MetricError::NotQuadratic {
                witness: format!("q(-{x}) = {} but q({x}) = {}", q[minus], q[x]),
            });
        }
        // q(k·x) = k²·q(x) for every scalar
        let mut kx = 0usize;
        for k in 0..=n {
            let expect = q[x].scale((k * k) as i64);
            if q[kx] != expect {
                return Err(MetricError::NotQuadratic {
                    witness: format!("q({k}·{x}) = {} but k²·q({x}) = {expect}", q[kx]),
                });
            }
            kx = group.mul(kx, x);
        }
    }
    let mut b = vec![Qz::ZERO; n * n];
    for x in 0..n {
        for y in 0..n {
            b[x * n + y] = q[group.mul(x, y)].sub(&q[x]).sub(&q[y]);
        }
    }
    // b is symmetric by construction; bi-additivity is the remaining law
    for x in 0..n {
        for y in 0..n {
            let xy = group.mul(x, y);
            for z in 0..n {
                let lhs = b[xy * n + z];
                let rhs = b[x * n + z].add(&b[y * n + z]);
                if lhs != rhs {
                    return Err(MetricError::NotQuadratic {
                        witness: format!(
                            "b({x}+{y}, {z}) = {lhs} but b({x},{z}) + b({y},{z}) = {rhs}"
                        ),
                    });
                }
            }
        }
    }
    Ok(MetricGroup { name: name.into(), group: Arc::clone(group), q, b })
}

/// True when the radical of `b` is trivial.
pub fn is_nondegenerate(m: &MetricGroup) -> bool {
    m.radical() == [0]
}

/// The group of automorphisms of `B` preserving `q`, with its own Cayley
/// table. The identity automorphism has index 0; the action is exposed
/// through [`OrthogonalGroup::apply`].
pub struct OrthogonalGroup {
    as_group: Arc<FiniteGroup>,
    maps: Vec<Vec<usize>>,
}

impl OrthogonalGroup {
    pub fn as_group(&self) -> &Arc<FiniteGroup> {
        &self.as_group
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    /// The image of `elem` under automorphism `auto`.
    pub fn apply(&self, auto: usize, elem: usize) -> usize {
        self.maps[auto][elem]
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }
}

impl std::fmt::Debug for OrthogonalGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrthogonalGroup(order {})", self.maps.len())
    }
}

/// Enumerates all q-preserving automorphisms by generator-image search
/// with order and q-value pruning.
pub fn orthogonal_group(m: &MetricGroup) -> Result<OrthogonalGroup, MetricError> {
    let g = m.group();
    let n = g.order();
    if n > ORTHOGONAL_ORDER_BOUND {
        return Err(MetricError::TooLarge {
            what: "orthogonal group search",
            limit: ORTHOGONAL_ORDER_BOUND,
            got: n,
        });
    }
    let gens = crate::group::generating_set(g);
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut chosen = Vec::new();
    search_orthogonal(m, &gens, &mut chosen, &mut found)?;

    // canonical order: identity first, the rest lexicographic
    let identity: Vec<usize> = (0..n).collect();
    let mut ordered: Vec<Vec<usize>> =
        found.into_iter().filter(|f| *f != identity).collect();
    ordered.sort();
    ordered.insert(0, identity);

    let index: HashMap<&Vec<usize>, usize> =
        ordered.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let k = ordered.len();
    let mut table = Vec::with_capacity(k * k);
    for a in &ordered {
        for b in &ordered {
            let composed: Vec<usize> = (0..n).map(|x| a[b[x]]).collect();
            table.push(*index.get(&composed).expect("automorphisms are closed") as u32);
        }
    }
    let as_group = Arc::new(FiniteGroup::from_table_unchecked(
        format!("O({})", m.name()),
        k,
        table,
    ));
    Ok(OrthogonalGroup { as_group, maps: ordered })
}

fn search_orthogonal(
    m: &MetricGroup,
    gens: &[usize],
    chosen: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) -> Result<(), MetricError> {
    let g = m.group();
    let n = g.order();
    if chosen.len() == gens.len() {
        if let Some(img) = close_automorphism(m, gens, chosen) {
            found.push(img);
            if found.len() > ORTHOGONAL_SIZE_BOUND {
                return Err(MetricError::TooLarge {
                    what: "orthogonal group order",
                    limit: ORTHOGONAL_SIZE_BOUND,
                    got: found.len(),
                });
            }
        }
        return Ok(());
    }
    let gen = gens[chosen.len()];
    for y in 0..n {
        if g.elem_order(y) != g.elem_order(gen) || m.q(y) != m.q(gen) {
            continue;
        }
        chosen.push(y);
        search_orthogonal(m, gens, chosen, found)?;
        chosen.pop();
    }
    Ok(())
}

/// Closes generator images into a full map; `None` on any conflict, on a
/// q-value mismatch, or when the result is not bijective.
fn close_automorphism(m: &MetricGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let g = m.group();
    let n = g.order();
    let mut img = vec![usize::MAX; n];
    img[0] = 0;
    let mut known = vec![0usize];
    for (&x, &y) in gens.iter().zip(images) {
        if img[x] == usize::MAX {
            img[x] = y;
            known.push(x);
        } else if img[x] != y {
            return None;
        }
    }
    let mut i = 0;
    while i < known.len() {
        let a = known[i];
        i += 1;
        for j in 0..known.len() {
            let b = known[j];
            let p = g.mul(a, b);
            let q = g.mul(img[a], img[b]);
            if img[p] == usize::MAX {
                if m.q(p) != m.q(q) {
                    return None;
                }
                img[p] = q;
                known.push(p);
            } else if img[p] != q {
                return None;
            }
        }
    }
    if known.len() != n {
        return None;
    }
    let mut seen = vec![false; n];
    for &y in &img {
        if std::mem::replace(&mut seen[y], true) {
            return None;
        }
    }
    for x in 0..n {
        if m.q(x) != m.q(img[x]) {
            return None;
        }
    }
    Some(img)
}

/// Independent non-degeneracy oracle: evaluates `|Σ_x e(q(x))|²` exactly
/// as the pair sum `Σ_{y,z} e(q(z) + b(y,z))` in the cyclotomic integers
/// ℤ[ζ_L], and compares with |B|. Agreement with [`is_nondegenerate`] is a
/// theorem (the Gauss sum of a non-degenerate form has absolute value
/// √|B|), so a disagreement flags a defect.
pub fn gauss_sum_check(m: &MetricGroup) -> bool {
    let n = m.order();
    let mut level: u64 = 1;
    for z in 0..n {
        for y in 0..n {
            level = num_integer::lcm(level, m.q(z).add(&m.b(y, z)).denom());
        }
    }
    let level = level as usize;
    let mut counts = vec![0i128; level];
    for z in 0..n {
        for y in 0..n {
            let v = m.q(z).add(&m.b(y, z));
            let slot = (v.numer() as usize) * (level / v.denom() as usize);
            counts[slot] += 1;
        }
    }
    counts[0] -= n as i128;
    // the sum is |B| exactly when Σ counts·ζ^k − |B| vanishes in Z[ζ_L]
    let phi = cyclotomic_polynomial(level);
    let rem = poly_rem(&counts, &phi);
    rem.iter().all(|&c| c == 0)
}

/// Φ_L, by dividing x^L − 1 by all proper cyclotomic factors.
fn cyclotomic_polynomial(level: usize) -> Vec<i128> {
    let mut num = vec![0i128; level + 1];
    num[0] = -1;
    num[level] = 1;
    for d in 1..level {
        if level % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact division by a monic polynomial.
fn poly_div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let mut quo = vec![0i128; rem.len().saturating_sub(dd)];
    for i in (dd..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        quo[i - dd] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i - dd + j] -= c * dc;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quo
}

/// Remainder modulo a monic polynomial.
fn poly_rem(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "modulus must be monic");
    for i in (dd..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        for (j, &dc) in den.iter().enumerate() {
            rem[i - dd + j] -= c * dc;
        }
    }
    rem.truncate(dd.max(1));
    rem
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: usize) -> Arc<FiniteGroup> {
        FiniteGroup::cyclic(m)
    }

    pub(crate) fn semion() -> MetricGroup {
        make_metric_group("semion", &z(2), vec![Qz::ZERO, Qz::new(1, 4)]).unwrap()
    }

    #[test]
    fn semion_is_valid_and_nondegenerate() {
        let m = semion();
        assert_eq!(m.b(1, 1), Qz::new(1, 2));
        assert!(is_nondegenerate(&m));
        assert!(gauss_sum_check(&m));
    }

    #[test]
    fn wrong_denominator_violates_the_law() {
        let err = make_metric_group("bad", &z(2), vec![Qz::ZERO, Qz::new(1, 3)]).unwrap_err();
        assert!(matches!(err, MetricError::NotQuadratic { .. }));
    }

    #[test]
    fn trivial_metric_group() {
        let m = make_metric_group("unit", &z(1), vec![Qz::ZERO]).unwrap();
        assert!(is_nondegenerate(&m));
        assert!(gauss_sum_check(&m));
        assert_eq!(orthogonal_group(&m).unwrap().order(), 1);
    }

    #[test]
    fn degenerate_form_on_z2() {
        let m = make_metric_group("toric-e", &z(2), vec![Qz::ZERO, Qz::new(1, 2)]).unwrap();
        assert!(!is_nondegenerate(&m));
        assert!(!gauss_sum_check(&m));
        assert_eq!(m.radical(), vec![0, 1]);
    }

    #[test]
    fn nonabelian_base_is_rejected() {
        let s3 =
            FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let err = make_metric_group("bad", &s3, vec![Qz::ZERO; 6]).unwrap_err();
        assert_eq!(err, MetricError::NotAbelian);
    }

    #[test]
    fn orthogonal_group_of_semion_is_trivial() {
        let o = orthogonal_group(&semion()).unwrap();
        assert_eq!(o.order(), 1);
        assert_eq!(o.apply(0, 1), 1);
    }

    #[test]
    fn orthogonal_group_of_z3_form() {
        // q(x) = x²/3
        let q = vec![Qz::ZERO, Qz::new(1, 3), Qz::new(4, 3)];
        let m = make_metric_group("z3", &z(3), q).unwrap();
        let o = orthogonal_group(&m).unwrap();
        // brute-force filter of both automorphisms of Z/3
        assert_eq!(o.order(), 2);
        assert_eq!(o.apply(1, 1), 2, "the nontrivial member is negation");
        assert!(is_nondegenerate(&m));
        assert!(gauss_sum_check(&m));
    }

    #[test]
    fn orthogonal_group_of_hyperbolic_v4() {
        // q(a, b) = ab/2 on Z2 x Z2 with index (a, b) = 2a + b;
        // of the six automorphisms of V4, exactly the identity and the
        // coordinate swap preserve q
        let z2 = z(2);
        let v4 = FiniteGroup::direct_product(&z2, &z2);
        let q = vec![Qz::ZERO, Qz::ZERO, Qz::ZERO, Qz::new(1, 2)];
        let m = make_metric_group("hyperbolic", &v4, q).unwrap();
        assert!(is_nondegenerate(&m));
        assert!(gauss_sum_check(&m));
        let o = orthogonal_group(&m).unwrap();
        assert_eq!(o.order(), 2);
        let swap = o.maps().iter().find(|f| *f != &vec![0, 1, 2, 3]).unwrap();
        assert_eq!(swap.as_slice(), &[0, 2, 1, 3]);
    }

    #[test]
    fn orthogonal_members_form_a_group_preserving_q() {
        let q = vec![Qz::ZERO, Qz::new(1, 3), Qz::new(4, 3)];
        let m = make_metric_group("z3", &z(3), q).unwrap();
        let o = orthogonal_group(&m).unwrap();
        for a in 0..o.order() {
            for x in 0..3 {
                assert_eq!(m.q(o.apply(a, x)), m.q(x));
            }
            for b in 0..o.order() {
                let c = o.as_group().mul(a, b);
                for x in 0..3 {
                    assert_eq!(o.apply(c, x), o.apply(a, o.apply(b, x)));
                }
            }
        }
    }

    #[test]
    fn gauss_sum_agrees_with_radical_on_corpus() {
        // every metric group with |B| ≤ 16 exercised in this module plus a
        // few extra forms on Z4 and Z2xZ4
        let mut corpus = vec![
            semion(),
            make_metric_group("unit", &z(1), vec![Qz::ZERO]).unwrap(),
            make_metric_group("deg", &z(2), vec![Qz::ZERO, Qz::new(1, 2)]).unwrap(),
        ];
        for num in 0..8i64 {
            let q: Vec<Qz> = (0..4i64).map(|x| Qz::new(num * x * x, 8)).collect();
            if let Ok(m) = make_metric_group("z4", &z(4), q) {
                corpus.push(m);
            }
        }
        let z2z4 = FiniteGroup::direct_product(&z(2), &z(4));
        for na in 0..4i64 {
            for nb in 0..8i64 {
                let q: Vec<Qz> = (0..8usize)
                    .map(|i| {
                        let (a, b) = ((i / 4) as i64, (i % 4) as i64);
                        Qz::new(na * a * a, 4).add(&Qz::new(nb * b * b, 8))
                    })
                    .collect();
                if let Ok(m) = make_metric_group("z2z4", &z2z4, q) {
                    corpus.push(m);
                }
            }
        }
        assert!(corpus.len() > 10);
        for m in &corpus {
            assert_eq!(
                is_nondegenerate(m),
                gauss_sum_check(m),
                "radical and Gauss sum disagree on {}",
                m.name()
            );
        }
    }
}
