use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::group::FiniteGroup;
use crate::zlinalg::{smith_normal_form_with, Qz, SnfOptions, SnfResult};

use super::cochain::{coboundary_matrix, Cochain};
use super::{CohError, MAX_DEGREE};

/// `Hⁿ(G; ℚ/ℤ)` presented by invariant factors and one representative
/// cocycle per factor, together with the coordinate protocol for
/// arbitrary cocycles.
///
/// The computation runs on the Smith normal form `U·dⁿ·V = S`. Writing a
/// cochain as `x = V y`, the cocycle condition becomes `sᵢ yᵢ ∈ ℤ` on the
/// pivot coordinates and leaves the rest free; because `dⁿ ∘ dⁿ⁻¹ = 0`,
/// the coboundary image fills exactly the free coordinates (that it fills
/// them completely is the vanishing of rational cohomology, checked here
/// against `rank dⁿ⁻¹`). The quotient is therefore `⊕ ℤ/sᵢ` over the
/// pivot entries `sᵢ > 1`, with generators `V eᵢ / sᵢ`.
pub struct CohomologyGroup {
    group: Arc<FiniteGroup>,
    degree: usize,
    invariant_factors: Vec<u64>,
    generators: Vec<Cochain>,
    snf: SnfResult,
    torsion_positions: Vec<usize>,
}

impl CohomologyGroup {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Invariant factors `> 1`, each dividing the next.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    /// One representative cocycle per invariant factor.
    pub fn generators(&self) -> &[Cochain] {
        &self.generators
    }

    /// Group order `∏ factors` (the torsor size when used as one).
    pub fn total_size(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Coordinates of a cocycle class: exponents `e` with
    /// `c − Σ eᵢ·genᵢ` a coboundary, unique modulo the factors.
    pub fn class_of(&self, c: &Cochain) -> Result<Vec<u64>, CohError> {
        if !c.group().same_table(&self.group) {
            return Err(CohError::WrongParent { context: "class_of" });
        }
        if c.degree() != self.degree {
            return Err(CohError::DegreeOutOfRange {
                degree: c.degree(),
                min: self.degree,
                max: self.degree,
            });
        }
        if !c.is_cocycle()? {
            return Err(CohError::NotACocycle);
        }
        let y = self.snf.apply_v_inv_qz(c.values());
        let mut exponents = Vec::with_capacity(self.torsion_positions.len());
        for (&pos, &factor) in self.torsion_positions.iter().zip(&self.invariant_factors) {
            let coord = y[pos];
            if factor % coord.order() != 0 {
                return Err(CohError::InternalInconsistency(format!(
                    "cocycle coordinate {coord} at pivot {pos} is not {factor}-torsion"
                )));
            }
            // e = s·y mod s, an integer because den(y) | s
            let e = (coord.numer() as u128 * (factor / coord.denom()) as u128
                % factor as u128) as u64;
            exponents.push(e);
        }
        Ok(exponents)
    }

    /// True when the class coordinates are all zero.
    pub fn is_trivial_class(&self, c: &Cochain) -> Result<bool, CohError> {
        Ok(self.class_of(c)?.iter().all(|&e| e == 0))
    }

    /// The linear combination `Σ eᵢ·genᵢ` as a cochain.
    pub fn combination(&self, exponents: &[u64]) -> Result<Cochain, CohError> {
        if exponents.len() != self.generators.len() {
            return Err(CohError::ValueCount {
                expected: self.generators.len(),
                got: exponents.len(),
            });
        }
        let mut acc = Cochain::zero(&self.group, self.degree)?;
        for (gen, &e) in self.generators.iter().zip(exponents) {
            acc = acc.add(&gen.scale(e as i64));
        }
        Ok(acc)
    }
}

impl std::fmt::Debug for CohomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "H^{}({}) = ", self.degree, self.group.name())?;
        if self.invariant_factors.is_empty() {
            write!(f, "0")
        } else {
            let parts: Vec<String> =
                self.invariant_factors.iter().map(|m| format!("Z/{m}")).collect();
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Computes `Hⁿ(G; ℚ/ℤ)` for `1 ≤ n ≤ 5` from the Smith normal forms of
/// `dⁿ` and `dⁿ⁻¹`.
pub fn cohomology_group(
    group: &Arc<FiniteGroup>,
    degree: usize,
) -> Result<CohomologyGroup, CohError> {
    if degree < 1 || degree > MAX_DEGREE {
        return Err(CohError::DegreeOutOfRange { degree, min: 1, max: MAX_DEGREE });
    }
    let d_n = coboundary_matrix(group, degree)?;
    let snf = smith_normal_form_with(
        &d_n,
        SnfOptions { track_row_ops: false, track_col_ops: true },
    );

    // no-free-rank check: rank dⁿ⁻¹ must fill the rational kernel of dⁿ
    let d_prev = coboundary_matrix(group, degree - 1)?;
    let prev_rank = smith_normal_form_with(
        &d_prev,
        SnfOptions { track_row_ops: false, track_col_ops: false },
    )
    .rank();
    let free = d_n.cols() - snf.rank();
    if prev_rank != free {
        return Err(CohError::InternalInconsistency(format!(
            "free rank {} in H^{degree}({}): rank d^{} = {}, kernel dimension {}",
            free - prev_rank.min(free),
            group.name(),
            degree - 1,
            prev_rank,
            free
        )));
    }

    let order = group.order() as u64;
    let mut invariant_factors = Vec::new();
    let mut torsion_positions = Vec::new();
    let mut generators = Vec::new();
    for (pos, s) in snf.diag().iter().enumerate() {
        if s.is_one() {
            continue;
        }
        let factor = s.to_u64().filter(|f| order % f == 0).ok_or_else(|| {
            CohError::InternalInconsistency(format!(
                "invariant factor {s} does not divide the group order {order}"
            ))
        })?;
        // generator: the pivot column of V, divided by the factor
        let mut e = vec![BigInt::zero(); d_n.cols()];
        e[pos] = BigInt::one();
        let column = snf.apply_v_int(&e);
        let values: Vec<Qz> =
            column.iter().map(|v| Qz::from_big(v, factor)).collect();
        let gen = Cochain::from_values(group, degree, values)?;
        if !gen.is_cocycle()? {
            return Err(CohError::InternalInconsistency(format!(
                "generator at pivot {pos} of H^{degree}({}) is not a cocycle",
                group.name()
            )));
        }
        invariant_factors.push(factor);
        torsion_positions.push(pos);
        generators.push(gen);
    }

    Ok(CohomologyGroup {
        group: Arc::clone(group),
        degree,
        invariant_factors,
        generators,
        snf,
        torsion_positions,
    })
}
