use crate::group::{GroupHom, QuotientGroup, Subgroup};
use crate::zlinalg::{solve_qz, Qz};

use super::basis::CohomologyGroup;
use super::cochain::{coboundary_matrix, index_tuple, Cochain};
use super::CohError;

/// Cap on the brute-force enumeration in [`inflation_preimage`].
const PREIMAGE_ENUM_BOUND: u64 = 1 << 20;

/// Restriction along a subgroup inclusion: the value on an `H`-tuple is
/// the value on its embedded parent tuple.
pub fn restrict(c: &Cochain, h: &Subgroup) -> Result<Cochain, CohError> {
    if !c.group().same_table(h.parent()) {
        return Err(CohError::WrongParent { context: "restrict" });
    }
    let hg = h.as_group();
    let n = c.degree();
    if n == 0 {
        return Cochain::from_values(hg, 0, c.values().to_vec());
    }
    let dim = super::normalized_dim(hg.order(), n)?;
    let mut tuple = vec![0usize; n];
    let mut embedded = vec![0usize; n];
    let mut values = vec![Qz::ZERO; dim];
    for (idx, slot) in values.iter_mut().enumerate() {
        index_tuple(hg.order(), idx, &mut tuple);
        for (e, &t) in embedded.iter_mut().zip(&tuple) {
            *e = h.embed(t);
        }
        *slot = c.value_at(&embedded);
    }
    Cochain::from_values(hg, n, values)
}

/// Inflation along a quotient `H ↠ H/N`: the value on an `H`-tuple is the
/// value on its projected tuple; projections hitting the identity coset
/// contribute zero by normalization.
pub fn inflate(c: &Cochain, q: &QuotientGroup) -> Result<Cochain, CohError> {
    if !c.group().same_table(q.as_group()) {
        return Err(CohError::WrongParent { context: "inflate" });
    }
    let hg = q.source().as_group();
    let n = c.degree();
    if n == 0 {
        return Cochain::from_values(hg, 0, c.values().to_vec());
    }
    let mut tuple = vec![0usize; n];
    let mut projected = vec![0usize; n];
    let dim = super::normalized_dim(hg.order(), n)?;
    let mut values = vec![Qz::ZERO; dim];
    for (idx, slot) in values.iter_mut().enumerate() {
        index_tuple(hg.order(), idx, &mut tuple);
        for (p, &t) in projected.iter_mut().zip(&tuple) {
            *p = q.project(t);
        }
        *slot = c.value_at(&projected);
    }
    Cochain::from_values(hg, n, values)
}

/// Pullback along a group homomorphism (used for conjugation
/// isomorphisms): the value on a tuple is the value on its image tuple.
pub fn pullback(c: &Cochain, along: &GroupHom) -> Result<Cochain, CohError> {
    if !c.group().same_table(along.codomain()) {
        return Err(CohError::WrongParent { context: "pullback" });
    }
    let dg = along.domain();
    let n = c.degree();
    if n == 0 {
        return Cochain::from_values(dg, 0, c.values().to_vec());
    }
    let mut tuple = vec![0usize; n];
    let mut mapped = vec![0usize; n];
    let dim = super::normalized_dim(dg.order(), n)?;
    let mut values = vec![Qz::ZERO; dim];
    for (idx, slot) in values.iter_mut().enumerate() {
        index_tuple(dg.order(), idx, &mut tuple);
        for (m, &t) in mapped.iter_mut().zip(&tuple) {
            *m = along.apply(t);
        }
        *slot = c.value_at(&mapped);
    }
    Cochain::from_values(dg, n, values)
}

/// Finds `φ` with `dφ = c`, or `None` when `[c] ≠ 0`. With the flag set,
/// the input is first checked to be a cocycle.
pub fn trivialize(c: &Cochain, must_be_cocycle: bool) -> Result<Option<Cochain>, CohError> {
    if c.degree() == 0 {
        return Err(CohError::DegreeOutOfRange { degree: 0, min: 1, max: super::MAX_DEGREE });
    }
    if must_be_cocycle && !c.is_cocycle()? {
        return Err(CohError::NotACocycle);
    }
    let d_prev = coboundary_matrix(c.group(), c.degree() - 1)?;
    match solve_qz(&d_prev, c.values())? {
        Some(values) => {
            let phi = Cochain::from_values(c.group(), c.degree() - 1, values)?;
            debug_assert_eq!(&phi.apply_d()?, c);
            Ok(Some(phi))
        }
        None => Ok(None),
    }
}

/// All classes on `H/N` whose inflation along `q` has the given
/// coordinates on `H`: images of the quotient basis generators are
/// computed once, then the finite coefficient space is searched.
pub fn inflation_preimage(
    basis_h: &CohomologyGroup,
    basis_q: &CohomologyGroup,
    q: &QuotientGroup,
    target: &[u64],
) -> Result<Vec<Vec<u64>>, CohError> {
    if !basis_h.group().same_table(q.source().as_group()) {
        return Err(CohError::WrongParent { context: "inflation_preimage (H side)" });
    }
    if !basis_q.group().same_table(q.as_group()) {
        return Err(CohError::WrongParent { context: "inflation_preimage (quotient side)" });
    }
    if basis_h.degree() != basis_q.degree() {
        return Err(CohError::DegreeOutOfRange {
            degree: basis_q.degree(),
            min: basis_h.degree(),
            max: basis_h.degree(),
        });
    }
    if target.len() != basis_h.invariant_factors().len() {
        return Err(CohError::ValueCount {
            expected: basis_h.invariant_factors().len(),
            got: target.len(),
        });
    }

    let gen_images: Vec<Vec<u64>> = basis_q
        .generators()
        .iter()
        .map(|gen| basis_h.class_of(&inflate(gen, q)?))
        .collect::<Result<_, _>>()?;

    let q_factors = basis_q.invariant_factors();
    let space: u64 = q_factors.iter().product();
    if space > PREIMAGE_ENUM_BOUND {
        return Err(CohError::TooLarge {
            what: "inflation preimage enumeration",
            limit: PREIMAGE_ENUM_BOUND as usize,
            got: space as usize,
        });
    }
    let h_factors = basis_h.invariant_factors();
    let mut out = Vec::new();
    let mut coeffs = vec![0u64; q_factors.len()];
    loop {
        let mut image = vec![0u64; h_factors.len()];
        for (c, gen_img) in coeffs.iter().zip(&gen_images) {
            for ((slot, &v), &m) in image.iter_mut().zip(gen_img).zip(h_factors) {
                *slot = (*slot + (c % m) * (v % m)) % m;
            }
        }
        if image == target {
            out.push(coeffs.clone());
        }
        // mixed-radix increment over the quotient coefficient space
        let mut k = 0;
        loop {
            if k == coeffs.len() {
                return Ok(out);
            }
            coeffs[k] += 1;
            if coeffs[k] < q_factors[k] {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
    }
}
