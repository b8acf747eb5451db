use std::sync::Arc;

use num_bigint::BigInt;

use crate::group::FiniteGroup;
use crate::zlinalg::{IntMatrix, Qz};

use super::{budget_limit, CohError};

/// Number of normalized `degree`-tuples over non-identity elements,
/// guarded by the bar-complex budget.
pub(crate) fn normalized_dim(order: usize, degree: usize) -> Result<usize, CohError> {
    let m = (order - 1) as u128;
    let mut acc: u128 = 1;
    for _ in 0..degree {
        acc = acc.checked_mul(m).ok_or(CohError::TooLarge {
            what: "normalized cochain dimension",
            limit: budget_limit(),
            got: usize::MAX,
        })?;
    }
    let limit = budget_limit() as u128;
    if acc > limit {
        return Err(CohError::TooLarge {
            what: "normalized cochain dimension",
            limit: budget_limit(),
            got: acc.min(usize::MAX as u128) as usize,
        });
    }
    Ok(acc as usize)
}

/// Lexicographic index of a tuple of non-identity elements (leftmost
/// component most significant).
#[inline]
pub(crate) fn tuple_index(order: usize, tuple: &[usize]) -> usize {
    let m = order - 1;
    let mut idx = 0;
    for &g in tuple {
        debug_assert!(g >= 1 && g < order);
        idx = idx * m + (g - 1);
    }
    idx
}

/// Writes the tuple for `idx` into `buf` (components in `1..order`).
#[inline]
pub(crate) fn index_tuple(order: usize, mut idx: usize, buf: &mut [usize]) {
    let m = order - 1;
    for slot in buf.iter_mut().rev() {
        *slot = idx % m + 1;
        idx /= m;
    }
}

/// A normalized cochain `Gⁿ → ℚ/ℤ`: values are stored only on tuples of
/// non-identity elements; any tuple containing the identity is zero.
#[derive(Clone)]
pub struct Cochain {
    group: Arc<FiniteGroup>,
    degree: usize,
    values: Vec<Qz>,
}

impl Cochain {
    pub fn zero(group: &Arc<FiniteGroup>, degree: usize) -> Result<Cochain, CohError> {
        let dim = normalized_dim(group.order(), degree)?;
        Ok(Cochain { group: Arc::clone(group), degree, values: vec![Qz::ZERO; dim] })
    }

    pub fn from_values(
        group: &Arc<FiniteGroup>,
        degree: usize,
        values: Vec<Qz>,
    ) -> Result<Cochain, CohError> {
        let dim = normalized_dim(group.order(), degree)?;
        if values.len() != dim {
            return Err(CohError::ValueCount { expected: dim, got: values.len() });
        }
        Ok(Cochain { group: Arc::clone(group), degree, values })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[Qz] {
        &self.values
    }

    /// Value on a tuple of group elements; tuples containing the identity
    /// give zero (normalization).
    pub fn value_at(&self, tuple: &[usize]) -> Qz {
        debug_assert_eq!(tuple.len(), self.degree);
        if tuple.iter().any(|&g| g == 0) {
            return Qz::ZERO;
        }
        self.values[tuple_index(self.group.order(), tuple)]
    }

    /// Sets the value on a tuple of non-identity elements.
    pub fn set_value(&mut self, tuple: &[usize], value: Qz) {
        assert!(
            tuple.iter().all(|&g| g >= 1 && g < self.group.order()),
            "normalized cochains carry values on non-identity tuples only"
        );
        let idx = tuple_index(self.group.order(), tuple);
        self.values[idx] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Qz::is_zero)
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert!(self.compatible_with(other));
        let values =
            self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect();
        Cochain { group: Arc::clone(&self.group), degree: self.degree, values }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        assert!(self.compatible_with(other));
        let values =
            self.values.iter().zip(&other.values).map(|(a, b)| a.sub(b)).collect();
        Cochain { group: Arc::clone(&self.group), degree: self.degree, values }
    }

    pub fn scale(&self, k: i64) -> Cochain {
        let values = self.values.iter().map(|v| v.scale(k)).collect();
        Cochain { group: Arc::clone(&self.group), degree: self.degree, values }
    }

    fn compatible_with(&self, other: &Cochain) -> bool {
        self.degree == other.degree && self.group.same_table(&other.group)
    }

    /// Largest denominator appearing among the values.
    pub fn max_denominator(&self) -> u64 {
        self.values.iter().map(|v| v.denom()).max().unwrap_or(1)
    }

    /// The normalized bar-complex coboundary, evaluated directly:
    ///
    /// `(dφ)(g₁,…,g_{n+1}) = φ(g₂,…) + Σᵢ (−1)ⁱ φ(…, gᵢ·g_{i+1}, …) + (−1)^{n+1} φ(…,gₙ)`
    ///
    /// with terms whose argument contains the identity dropped.
    pub fn apply_d(&self) -> Result<Cochain, CohError> {
        let n = self.degree;
        let order = self.group.order();
        let out_dim = normalized_dim(order, n + 1)?;
        let mut out = vec![Qz::ZERO; out_dim];
        let mut tuple = vec![0usize; n + 1];
        let mut arg = vec![0usize; n];
        for (row, slot) in out.iter_mut().enumerate() {
            index_tuple(order, row, &mut tuple);
            let mut acc = self.value_at(&tuple[1..]);
            for k in 0..n {
                arg[..k].copy_from_slice(&tuple[..k]);
                arg[k] = self.group.mul(tuple[k], tuple[k + 1]);
                arg[k + 1..].copy_from_slice(&tuple[k + 2..]);
                let term = self.value_at(&arg);
                acc = if (k + 1) % 2 == 1 { acc.sub(&term) } else { acc.add(&term) };
            }
            let last = self.value_at(&tuple[..n]);
            acc = if (n + 1) % 2 == 1 { acc.sub(&last) } else { acc.add(&last) };
            *slot = acc;
        }
        Ok(Cochain { group: Arc::clone(&self.group), degree: n + 1, values: out })
    }

    pub fn is_cocycle(&self) -> Result<bool, CohError> {
        Ok(self.apply_d()?.is_zero())
    }
}

impl PartialEq for Cochain {
    fn eq(&self, other: &Self) -> bool {
        self.compatible_with(other) && self.values == other.values
    }
}

impl std::fmt::Debug for Cochain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Cochain(degree {} on {}, {} nonzero)",
            self.degree,
            self.group.name(),
            self.values.iter().filter(|v| !v.is_zero()).count()
        )
    }
}

/// The integer matrix of the normalized bar differential
/// `dⁿ : Cⁿ → Cⁿ⁺¹`, with rows indexed by (n+1)-tuples and columns by
/// n-tuples of non-identity elements.
pub fn coboundary_matrix(group: &Arc<FiniteGroup>, degree: usize) -> Result<IntMatrix, CohError> {
    let order = group.order();
    let n = degree;
    let rows = normalized_dim(order, n + 1)?;
    let cols = normalized_dim(order, n)?;
    let mut triplets: Vec<(usize, usize, BigInt)> = Vec::with_capacity(rows * (n + 2) / 2);
    let mut tuple = vec![0usize; n + 1];
    let mut arg = vec![0usize; n];
    let push = |trips: &mut Vec<(usize, usize, BigInt)>, row: usize, arg: &[usize], sign: i64| {
        if arg.iter().all(|&g| g != 0) {
            trips.push((row, tuple_index(order, arg), BigInt::from(sign)));
        }
    };
    for row in 0..rows {
        index_tuple(order, row, &mut tuple);
        push(&mut triplets, row, &tuple[1..], 1);
        for k in 0..n {
            arg[..k].copy_from_slice(&tuple[..k]);
            arg[k] = group.mul(tuple[k], tuple[k + 1]);
            arg[k + 1..].copy_from_slice(&tuple[k + 2..]);
            let sign = if (k + 1) % 2 == 1 { -1 } else { 1 };
            push(&mut triplets, row, &arg, sign);
        }
        let sign = if (n + 1) % 2 == 1 { -1 } else { 1 };
        push(&mut triplets, row, &tuple[..n], sign);
    }
    Ok(IntMatrix::from_triplets(rows, cols, triplets))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_roundtrip() {
        let order = 4;
        let mut buf = [0usize; 3];
        for idx in 0..27 {
            index_tuple(order, idx, &mut buf);
            assert_eq!(tuple_index(order, &buf), idx);
        }
    }

    #[test]
    fn z2_degree1_differential_is_doubling() {
        let g = FiniteGroup::cyclic(2);
        let d1 = coboundary_matrix(&g, 1).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (1, 1));
        assert_eq!(d1.get(0, 0), BigInt::from(2));
    }

    #[test]
    fn degree0_differential_is_zero() {
        for g in [FiniteGroup::cyclic(3), FiniteGroup::cyclic(5)] {
            let d0 = coboundary_matrix(&g, 0).unwrap();
            assert!(d0.is_zero());
        }
    }

    #[test]
    fn d_squared_is_zero_on_s3_matrices() {
        let g = FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        for n in [2usize, 3] {
            let d_n = coboundary_matrix(&g, n).unwrap();
            let d_next = coboundary_matrix(&g, n + 1).unwrap();
            assert!(d_next.mul(&d_n).is_zero(), "d∘d != 0 at degree {n}");
        }
    }

    #[test]
    fn apply_d_matches_matrix_action() {
        let g = FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let mut c = Cochain::zero(&g, 2).unwrap();
        // an arbitrary 2-cochain with mixed denominators
        for (i, idx) in [(0usize, 3usize), (7, 11), (13, 24)].iter().enumerate() {
            let mut tuple = [0usize; 2];
            index_tuple(g.order(), idx.1 % 25, &mut tuple);
            c.set_value(&tuple, Qz::new(i as i64 + 1, 6));
            let _ = idx.0;
        }
        let via_formula = c.apply_d().unwrap();
        let via_matrix = coboundary_matrix(&g, 2).unwrap().mul_qz(c.values());
        assert_eq!(via_formula.values(), via_matrix.as_slice());
        // d twice kills it
        assert!(via_formula.apply_d().unwrap().is_zero());
    }

    #[test]
    fn zero_cochain_has_zero_coboundary() {
        let g = FiniteGroup::cyclic(4);
        let z = Cochain::zero(&g, 2).unwrap();
        assert!(z.apply_d().unwrap().is_zero());
    }
}
