use super::FiniteGroup;

/// A human-readable isomorphism label for small groups, used in reports.
///
/// Abelian groups are decomposed into invariant factors by matching the
/// element-order multiset (which determines an abelian group). A few
/// familiar nonabelian groups are recognized by their fingerprint; anything
/// else is labeled by its order.
pub fn small_group_label(g: &FiniteGroup) -> String {
    let n = g.order();
    if n == 1 {
        return "1".to_string();
    }
    if g.is_abelian() {
        if let Some(chain) = invariant_factor_chain(g) {
            return chain
                .iter()
                .map(|m| format!("Z{m}"))
                .collect::<Vec<_>>()
                .join("x");
        }
    }
    let multiset = g.order_multiset();
    for (order, orders, name) in KNOWN_NONABELIAN {
        if n == *order && multiset == *orders {
            return (*name).to_string();
        }
    }
    format!("group of order {n}")
}

const KNOWN_NONABELIAN: &[(usize, &[usize], &str)] = &[
    (6, &[1, 2, 2, 2, 3, 3], "S3"),
    (8, &[1, 2, 2, 2, 2, 2, 4, 4], "D4"),
    (8, &[1, 2, 4, 4, 4, 4, 4, 4], "Q8"),
    (10, &[1, 2, 2, 2, 2, 2, 5, 5, 5, 5], "D5"),
    (12, &[1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3], "A4"),
    (12, &[1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 6, 6], "D6"),
    (12, &[1, 2, 3, 3, 4, 4, 4, 4, 4, 4, 6, 6], "Dic3"),
    (14, &[1, 2, 2, 2, 2, 2, 2, 2, 7, 7, 7, 7, 7, 7], "D7"),
];

/// Invariant factors m₁ | m₂ | … with ∏ mᵢ = |G|, found by matching the
/// element-order multiset against candidate divisor chains.
fn invariant_factor_chain(g: &FiniteGroup) -> Option<Vec<usize>> {
    let n = g.order();
    let target = g.order_multiset();
    let mut chains = Vec::new();
    divisor_chains(n, n, &mut Vec::new(), &mut chains);
    chains.into_iter().find(|chain| order_multiset_of_product(chain) == target)
}

/// All chains m₁ | m₂ | … | m_k (each ≥ 2, listed ascending) with product `n`.
fn divisor_chains(n: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 1 {
        let mut chain = acc.clone();
        chain.reverse();
        out.push(chain);
        return;
    }
    for m in 2..=max.min(n) {
        if n % m != 0 {
            continue;
        }
        // chain condition: the next (smaller) factor must divide m
        if acc.last().is_some_and(|&prev| prev % m != 0) {
            continue;
        }
        if !acc.is_empty() && n % m != 0 {
            continue;
        }
        acc.push(m);
        divisor_chains(n / m, m, acc, out);
        acc.pop();
    }
}

fn order_multiset_of_product(chain: &[usize]) -> Vec<usize> {
    let mut orders = Vec::new();
    let mut idx = vec![0usize; chain.len()];
    loop {
        let ord = idx
            .iter()
            .zip(chain)
            .map(|(&i, &m)| if i == 0 { 1 } else { m / num_integer::gcd(i, m) })
            .fold(1usize, num_integer::lcm);
        orders.push(ord);
        // mixed-radix increment
        let mut k = 0;
        loop {
            if k == chain.len() {
                orders.sort_unstable();
                return orders;
            }
            idx[k] += 1;
            if idx[k] < chain[k] {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}
