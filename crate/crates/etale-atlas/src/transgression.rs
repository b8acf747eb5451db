//! Transgression maps `τ_g : Hⁿ(G; ℚ/ℤ) → Hⁿ⁻¹(Z(g); ℚ/ℤ)` for n = 3, 4:
//! the twists attached to the conjugacy-class sectors of a Drinfeld
//! center.
//!
//! On cochains the map inserts `g` in every slot with alternating signs,
//!
//! `τ_g(π)(h, k, l) = π(g,h,k,l) − π(h,g,k,l) + π(h,k,g,l) − π(h,k,l,g)`
//!
//! restricted to `h, k, l` in the centralizer `Z(g)` (and the three-term
//! analogue one degree down). This is the shuffle pairing with the loop
//! `(g)`; since `g` commutes with `Z(g)`, it is a chain map up to sign, so
//! cocycles map to cocycles and coboundaries to coboundaries. Both facts
//! are re-checked mechanically on every call and in the property suite —
//! a failed check aborts rather than returning a wrong twist.

use std::sync::Arc;

use crate::cohomology::{cohomology_group, CohError, Cochain, CohomologyGroup};
use crate::group::{FiniteGroup, GroupHom, Subgroup};
use crate::zlinalg::Qz;

/// The transgressed twist at a group element: the centralizer, the
/// degree-(n−1) cocycle on it, and its class coordinates in
/// `Hⁿ⁻¹(Z(g))`.
pub struct TransgressionResult {
    element: usize,
    centralizer: Subgroup,
    cochain: Cochain,
    class: Vec<u64>,
    basis: CohomologyGroup,
}

impl TransgressionResult {
    pub fn element(&self) -> usize {
        self.element
    }

    pub fn centralizer(&self) -> &Subgroup {
        &self.centralizer
    }

    /// The transgressed cocycle on `Z(g)` (degree n−1).
    pub fn cochain(&self) -> &Cochain {
        &self.cochain
    }

    /// Exponent coordinates of the twist in `Hⁿ⁻¹(Z(g))`.
    pub fn class(&self) -> &[u64] {
        &self.class
    }

    pub fn is_trivial_class(&self) -> bool {
        self.class.iter().all(|&e| e == 0)
    }

    /// The cohomology basis the class coordinates refer to.
    pub fn basis(&self) -> &CohomologyGroup {
        &self.basis
    }
}

/// `τ_g` on a degree-4 cocycle, with the class computed in `H³(Z(g))`.
pub fn transgress(pi: &Cochain, g: usize) -> Result<TransgressionResult, CohError> {
    transgress_at_degree(pi, g, 4)
}

/// `τ_g` on a degree-3 cocycle, with the class computed in `H²(Z(g))`.
pub fn transgress3(omega: &Cochain, g: usize) -> Result<TransgressionResult, CohError> {
    transgress_at_degree(omega, g, 3)
}

fn transgress_at_degree(
    c: &Cochain,
    g: usize,
    degree: usize,
) -> Result<TransgressionResult, CohError> {
    if c.degree() != degree {
        return Err(CohError::DegreeOutOfRange { degree: c.degree(), min: degree, max: degree });
    }
    let (centralizer, cochain) = transgress_cochain(c, g)?;
    let basis = cohomology_group(centralizer.as_group(), degree - 1)?;
    let class = basis.class_of(&cochain)?;
    Ok(TransgressionResult { element: g, centralizer, cochain, class, basis })
}

/// The transgressed cochain alone (no class computation): cheap enough to
/// run in bulk property tests. The input must be a normalized cocycle and
/// the output is cocycle-checked.
pub fn transgress_cochain(c: &Cochain, g: usize) -> Result<(Subgroup, Cochain), CohError> {
    let group = c.group();
    assert!(g < group.order(), "element out of range");
    if !c.is_cocycle()? {
        return Err(CohError::NotACocycle);
    }
    let centralizer = group.centralizer(g);
    let cochain = insert_alternating(c, g, &centralizer)?;
    if !cochain.is_cocycle()? {
        return Err(CohError::InternalInconsistency(format!(
            "transgression at {g} of a {}-cocycle on {} failed the cocycle check",
            c.degree(),
            group.name()
        )));
    }
    Ok((centralizer, cochain))
}

/// `Σᵢ (−1)ⁱ c(h₁,…,hᵢ, g, h_{i+1},…)` over centralizer tuples.
fn insert_alternating(c: &Cochain, g: usize, z: &Subgroup) -> Result<Cochain, CohError> {
    let n = c.degree();
    assert!(n >= 1);
    let zg = z.as_group();
    let out_dim = crate::cohomology::normalized_dim(zg.order(), n - 1)?;
    let mut values = vec![Qz::ZERO; out_dim];
    let mut tuple = vec![0usize; n - 1];
    let mut embedded = vec![0usize; n - 1];
    let mut arg = vec![0usize; n];
    for (idx, slot) in values.iter_mut().enumerate() {
        decode_tuple(zg.order(), idx, &mut tuple);
        for (e, &t) in embedded.iter_mut().zip(&tuple) {
            *e = z.embed(t);
        }
        let mut acc = Qz::ZERO;
        for pos in 0..n {
            arg[..pos].copy_from_slice(&embedded[..pos]);
            arg[pos] = g;
            arg[pos + 1..].copy_from_slice(&embedded[pos..]);
            let term = c.value_at(&arg);
            acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        *slot = acc;
    }
    Cochain::from_values(zg, n - 1, values)
}

fn decode_tuple(order: usize, mut idx: usize, buf: &mut [usize]) {
    let m = order - 1;
    for slot in buf.iter_mut().rev() {
        *slot = idx % m + 1;
        idx /= m;
    }
}

/// For `g' = x g x⁻¹`, the conjugation isomorphism `Z(g) → Z(g')`,
/// `h ↦ x h x⁻¹`, as a homomorphism between the re-indexed centralizers.
pub fn conjugation_isomorphism(
    group: &Arc<FiniteGroup>,
    x: usize,
    g: usize,
) -> (usize, GroupHom) {
    let g_conj = group.conj(x, g);
    let z = group.centralizer(g);
    let z_conj = group.centralizer(g_conj);
    let images: Vec<usize> = (0..z.order())
        .map(|i| {
            z_conj
                .position_of(group.conj(x, z.embed(i)))
                .expect("conjugation carries Z(g) onto Z(xgx⁻¹)")
        })
        .collect();
    let hom = GroupHom::new(z.as_group(), z_conj.as_group(), images)
        .expect("conjugation is an isomorphism");
    (g_conj, hom)
}
