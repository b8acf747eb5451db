//! Enumeration of the finite data classifying connected étale and
//! Lagrangian algebras in the Drinfeld centers `Z₁(Vect^ω_G)` and
//! `Z₁(2Vect^π_G)`, in their computable (pointed) sectors.
//!
//! Records are emitted for rejected candidates too, carrying the
//! obstruction class, so negative results stay auditable. Counts are
//! reported both as record counts and as torsor-weighted totals: when a
//! trivialization exists, the set of choices up to coboundary is a torsor
//! over the relevant cohomology group, and the weighted number treats
//! distinct choices as distinct algebras. Output ordering is canonical
//! (subgroups by order and element set), independent of execution order.

use std::sync::Arc;

use thiserror::Error;

use crate::cohomology::{
    cohomology_group, inflation_preimage, restrict, trivialize, CohError, Cochain,
};
use crate::group::{
    homs_between, normal_subgroups_in, quotient_group, small_group_label,
    subgroup_conjugacy_reps, FiniteGroup, GroupError, GroupHom, Subgroup,
};
use crate::metric::{is_nondegenerate, orthogonal_group, MetricError, MetricGroup};
use crate::transgression::{transgress, transgress3, TransgressionResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cohomology(#[from] CohError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error("twist has degree {got}, this classifier needs degree {expected}")]
    TwistDegree { expected: usize, got: usize },
}

/// Totals for a classification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationSummary {
    /// admissible records
    pub records: usize,
    /// torsor-weighted total over admissible records
    pub weighted_count: u64,
    /// rejected records (still emitted, flagged)
    pub rejected: usize,
}

/// A Lagrangian algebra datum in `Z₁(Vect^ω_G)`: a subgroup `H` with
/// `[ω|_H] = 0`, one trivialization `dψ = ω|_H`, and the `H²(H)` torsor of
/// further choices.
pub struct LagrangianDatum1 {
    pub h: Subgroup,
    pub h_label: String,
    /// a trivialization when admissible
    pub psi_rep: Option<Cochain>,
    /// invariant factors of `H²(H)`
    pub torsor: Vec<u64>,
    /// coordinates of `[ω|_H]` in `H³(H)`
    pub restriction_class: Vec<u64>,
    /// invariant factors of `H³(H)` (the basis for `restriction_class`)
    pub h3_factors: Vec<u64>,
    pub rejected: bool,
}

pub struct Lagrangian1Output {
    pub records: Vec<LagrangianDatum1>,
    pub summary: ClassificationSummary,
}

/// Classifies Lagrangian algebras in `Z₁(Vect^ω_G)`: one record per
/// subgroup representative, admissible exactly when `ω|_H` trivializes.
pub fn enumerate_lagrangian1(
    g: &Arc<FiniteGroup>,
    omega: &Cochain,
) -> Result<Lagrangian1Output, ClassifyError> {
    expect_twist(g, omega, 3)?;
    let mut records = Vec::new();
    let mut summary = ClassificationSummary { records: 0, weighted_count: 0, rejected: 0 };
    for h in subgroup_conjugacy_reps(g)? {
        let omega_h = restrict(omega, &h)?;
        let psi_rep = trivialize(&omega_h, true)?;
        let h2 = cohomology_group(h.as_group(), 2)?;
        let h3 = cohomology_group(h.as_group(), 3)?;
        let restriction_class = h3.class_of(&omega_h)?;
        let rejected = psi_rep.is_none();
        if rejected {
            summary.rejected += 1;
        } else {
            summary.records += 1;
            summary.weighted_count += h2.total_size();
        }
        records.push(LagrangianDatum1 {
            h_label: small_group_label(h.as_group()),
            h,
            psi_rep,
            torsor: h2.invariant_factors().to_vec(),
            restriction_class,
            h3_factors: h3.invariant_factors().to_vec(),
            rejected,
        });
    }
    Ok(Lagrangian1Output { records, summary })
}

/// A connected étale algebra datum in `Z₁(Vect^ω_G)`: `(H, N, φ, ω̄)` with
/// `dφ = ω|_N` and `ω̄` a class on `H/N` inflating to `[ω|_H]`.
pub struct EtaleDatum1 {
    pub h: Subgroup,
    pub h_label: String,
    /// normal subgroup of `H.as_group()`
    pub n: Subgroup,
    pub n_label: String,
    pub phi_exists: bool,
    pub phi_rep: Option<Cochain>,
    /// invariant factors of `H²(N)` (choices of φ up to coboundary)
    pub phi_torsor: Vec<u64>,
    /// classes on `H/N` inflating to `[ω|_H]`, as exponent vectors over
    /// `extension_factors`
    pub extension_classes: Vec<Vec<u64>>,
    /// invariant factors of `H³(H/N)`
    pub extension_factors: Vec<u64>,
    pub rejected: bool,
}

pub struct Etale1Output {
    pub records: Vec<EtaleDatum1>,
    pub summary: ClassificationSummary,
}

/// Classifies connected étale algebras in `Z₁(Vect^ω_G)` over all pairs
/// `N ⊴ H ≤ G` (H up to conjugacy). The weighted count multiplies the
/// `H²(N)` torsor size by the number of admissible extension classes.
pub fn enumerate_etale1(
    g: &Arc<FiniteGroup>,
    omega: &Cochain,
) -> Result<Etale1Output, ClassifyError> {
    expect_twist(g, omega, 3)?;
    let mut records = Vec::new();
    let mut summary = ClassificationSummary { records: 0, weighted_count: 0, rejected: 0 };
    for h in subgroup_conjugacy_reps(g)? {
        let omega_h = restrict(omega, &h)?;
        let basis_h3 = cohomology_group(h.as_group(), 3)?;
        let target = basis_h3.class_of(&omega_h)?;
        for n in normal_subgroups_in(&h)? {
            let omega_n = restrict(&omega_h, &n)?;
            let phi_rep = trivialize(&omega_n, true)?;
            let phi_exists = phi_rep.is_some();
            let h2n = cohomology_group(n.as_group(), 2)?;
            let q = quotient_group(&h, &n)?;
            let basis_q3 = cohomology_group(q.as_group(), 3)?;
            let extension_classes = inflation_preimage(&basis_h3, &basis_q3, &q, &target)?;
            let rejected = !phi_exists || extension_classes.is_empty();
            if rejected {
                summary.rejected += 1;
            } else {
                summary.records += 1;
                summary.weighted_count += h2n.total_size() * extension_classes.len() as u64;
            }
            records.push(EtaleDatum1 {
                h_label: small_group_label(h.as_group()),
                h: h.clone(),
                n_label: small_group_label(n.as_group()),
                n,
                phi_exists,
                phi_rep,
                phi_torsor: h2n.invariant_factors().to_vec(),
                extension_classes,
                extension_factors: basis_q3.invariant_factors().to_vec(),
                rejected,
            });
        }
    }
    Ok(Etale1Output { records, summary })
}

/// A pointed-sector Lagrangian algebra datum in `Z₁(2Vect^π_G)` with
/// trivial `A = Vect`: a subgroup `H` with `[π|_H] = 0`, one
/// trivialization `dφ = π|_H`, and the `H³(H)` torsor. Every admissible
/// record is a bosonic fusion 2-category in the pointed sector, with
/// Drinfeld center `Z₁(2Vect^π_G)`.
pub struct LagrangianDatum2Pointed {
    pub h: Subgroup,
    pub h_label: String,
    pub trivialization_rep: Option<Cochain>,
    /// invariant factors of `H³(H)`
    pub trivialization_torsor: Vec<u64>,
    /// coordinates of `[π|_H]` in `H⁴(H)`
    pub restriction_class: Vec<u64>,
    /// invariant factors of `H⁴(H)`
    pub h4_factors: Vec<u64>,
    pub rejected: bool,
}

impl LagrangianDatum2Pointed {
    /// COMPLETE: with trivial `A` the higher layers carry no further data.
    pub fn status(&self) -> &'static str {
        "COMPLETE"
    }
}

pub struct Lagrangian2Output {
    pub records: Vec<LagrangianDatum2Pointed>,
    pub summary: ClassificationSummary,
}

/// Classifies pointed-sector Lagrangian algebras in `Z₁(2Vect^π_G)` with
/// trivial `A` per the `N = H`, non-degenerate-`A` criterion; with
/// `A = Vect` the remaining condition is exactly `[π|_H] = 0`.
pub fn enumerate_lagrangian2_trivial_pointed(
    g: &Arc<FiniteGroup>,
    pi: &Cochain,
) -> Result<Lagrangian2Output, ClassifyError> {
    expect_twist(g, pi, 4)?;
    let mut records = Vec::new();
    let mut summary = ClassificationSummary { records: 0, weighted_count: 0, rejected: 0 };
    for h in subgroup_conjugacy_reps(g)? {
        let pi_h = restrict(pi, &h)?;
        let trivialization_rep = trivialize(&pi_h, true)?;
        let h3 = cohomology_group(h.as_group(), 3)?;
        let h4 = cohomology_group(h.as_group(), 4)?;
        let restriction_class = h4.class_of(&pi_h)?;
        let rejected = trivialization_rep.is_none();
        if rejected {
            summary.rejected += 1;
        } else {
            summary.records += 1;
            summary.weighted_count += h3.total_size();
        }
        records.push(LagrangianDatum2Pointed {
            h_label: small_group_label(h.as_group()),
            h,
            trivialization_rep,
            trivialization_torsor: h3.invariant_factors().to_vec(),
            restriction_class,
            h4_factors: h4.invariant_factors().to_vec(),
            rejected,
        });
    }
    Ok(Lagrangian2Output { records, summary })
}

/// A connected étale algebra in `2Rep(G)` at the pointed level: a
/// subgroup `H`, a metric group `A`, and an action `γ : H → O(A)`. The
/// realized category is `Fun_H(G, A)`.
pub struct Etale2RepDatum {
    pub h: Subgroup,
    pub h_label: String,
    pub metric_name: String,
    pub gamma: GroupHom,
    pub label: String,
}

pub struct Etale2RepOutput {
    pub records: Vec<Etale2RepDatum>,
    pub summary: ClassificationSummary,
}

/// Enumerates `(H, A, γ)` triples over the supplied metric-group
/// candidates.
pub fn enumerate_etale_2rep_pointed(
    g: &Arc<FiniteGroup>,
    candidates: &[MetricGroup],
) -> Result<Etale2RepOutput, ClassifyError> {
    let mut records = Vec::new();
    let mut summary = ClassificationSummary { records: 0, weighted_count: 0, rejected: 0 };
    for h in subgroup_conjugacy_reps(g)? {
        let h_label = small_group_label(h.as_group());
        for a in candidates {
            let o = orthogonal_group(a)?;
            for gamma in homs_between(h.as_group(), o.as_group())? {
                summary.records += 1;
                summary.weighted_count += 1;
                records.push(Etale2RepDatum {
                    h: h.clone(),
                    h_label: h_label.clone(),
                    metric_name: a.name().to_string(),
                    label: format!("Fun_{{{}}}({}, {})", h_label, g.name(), a.name()),
                    gamma,
                });
            }
        }
    }
    Ok(Etale2RepOutput { records, summary })
}

/// The θ-layer verdict on an étale-algebra skeleton.
pub enum PiLayerNote {
    /// `A` trivial: θ exists iff `[π|_N] = 0`; carries the verdict and a
    /// trivialization representative when admissible.
    TrivialA { admissible: bool, rep: Option<Cochain> },
    /// `A` nontrivial: the `H²(N; B)` / `H³(N; B)` layers and the `H⁴`
    /// obstruction comparison are outside the computable scope.
    UnverifiedHigherData,
}

/// A computable skeleton `(H, N, A, γ)` of a connected étale algebra in
/// `Z₁(2Vect^π_G)`, with the θ-layer decided only for trivial `A`.
pub struct Etale2Skeleton {
    pub h: Subgroup,
    pub h_label: String,
    pub n: Subgroup,
    pub n_label: String,
    pub metric_name: String,
    pub nondegenerate: bool,
    pub gamma: GroupHom,
    pub pi_layer: PiLayerNote,
    /// Lagrangian candidates need `N = H` and non-degenerate `A`
    pub lagrangian_shape: bool,
}

pub struct Etale2Output {
    pub records: Vec<Etale2Skeleton>,
    pub summary: ClassificationSummary,
}

/// Enumerates skeleta `(H, N ⊴ H, γ : H → O(A))` for one metric group
/// `A`. With trivial `A` the θ-existence condition `[π|_N] = 0` is decided
/// exactly; otherwise records carry `UNVERIFIED_HIGHER_DATA`.
pub fn enumerate_etale2_skeleton(
    g: &Arc<FiniteGroup>,
    pi: &Cochain,
    a: &MetricGroup,
) -> Result<Etale2Output, ClassifyError> {
    expect_twist(g, pi, 4)?;
    let o = orthogonal_group(a)?;
    let a_trivial = a.is_trivial();
    let a_nondeg = is_nondegenerate(a);
    let mut records = Vec::new();
    let mut summary = ClassificationSummary { records: 0, weighted_count: 0, rejected: 0 };
    for h in subgroup_conjugacy_reps(g)? {
        let pi_h = restrict(pi, &h)?;
        let h_label = small_group_label(h.as_group());
        let gammas = homs_between(h.as_group(), o.as_group())?;
        for n in normal_subgroups_in(&h)? {
            let n_label = small_group_label(n.as_group());
            let pi_layer_template = if a_trivial {
                let pi_n = restrict(&pi_h, &n)?;
                let rep = trivialize(&pi_n, true)?;
                Some(rep)
            } else {
                None
            };
            for gamma in &gammas {
                let pi_layer = match &pi_layer_template {
                    Some(rep) => PiLayerNote::TrivialA {
                        admissible: rep.is_some(),
                        rep: rep.clone(),
                    },
                    None => PiLayerNote::UnverifiedHigherData,
                };
                let admissible = match &pi_layer {
                    PiLayerNote::TrivialA { admissible, .. } => *admissible,
                    // unverified records are counted, not rejected: the
                    // computable layers hold, higher ones are out of scope
                    PiLayerNote::UnverifiedHigherData => true,
                };
                if admissible {
                    summary.records += 1;
                    summary.weighted_count += 1;
                } else {
                    summary.rejected += 1;
                }
                records.push(Etale2Skeleton {
                    h: h.clone(),
                    h_label: h_label.clone(),
                    n: n.clone(),
                    n_label: n_label.clone(),
                    metric_name: a.name().to_string(),
                    nondegenerate: a_nondeg,
                    gamma: gamma.clone(),
                    pi_layer,
                    lagrangian_shape: a_nondeg && n.order() == h.order(),
                });
            }
        }
    }
    Ok(Etale2Output { records, summary })
}

/// One conjugacy-class sector of a Drinfeld center, with its transgressed
/// twist.
pub struct CenterSector {
    pub rep: usize,
    pub class_size: usize,
    pub centralizer: Subgroup,
    pub centralizer_label: String,
    /// coordinates of `τ_g(twist)` in `Hⁿ⁻¹(Z(g))`
    pub twist_class: Vec<u64>,
    /// invariant factors of `Hⁿ⁻¹(Z(g))`
    pub twist_factors: Vec<u64>,
    pub twist_trivial: bool,
}

pub struct CenterOutput {
    pub sectors: Vec<CenterSector>,
    pub group_order: usize,
}

/// Decomposes `Z₁(Vect^ω_G)` (degree 3) or `Z₁(2Vect^π_G)` (degree 4)
/// into conjugacy-class sectors `Rep(Z(g), τ_g)` / `2Rep(Z(g), τ_g)`.
pub fn center_sectors(
    g: &Arc<FiniteGroup>,
    twist: &Cochain,
    degree: usize,
) -> Result<CenterOutput, ClassifyError> {
    if degree != 3 && degree != 4 {
        return Err(ClassifyError::TwistDegree { expected: 4, got: degree });
    }
    expect_twist(g, twist, degree)?;
    let mut sectors = Vec::new();
    for class in g.conjugacy_classes() {
        let rep = class[0];
        let result: TransgressionResult = if degree == 4 {
            transgress(twist, rep)?
        } else {
            transgress3(twist, rep)?
        };
        sectors.push(CenterSector {
            rep,
            class_size: class.len(),
            centralizer_label: small_group_label(result.centralizer().as_group()),
            twist_trivial: result.is_trivial_class(),
            twist_class: result.class().to_vec(),
            twist_factors: result.basis().invariant_factors().to_vec(),
            centralizer: g.centralizer(rep),
        });
    }
    let total: usize = sectors.iter().map(|s| s.class_size).sum();
    debug_assert_eq!(total, g.order());
    Ok(CenterOutput { sectors, group_order: g.order() })
}

fn expect_twist(g: &Arc<FiniteGroup>, twist: &Cochain, degree: usize) -> Result<(), ClassifyError> {
    if !twist.group().same_table(g) {
        return Err(ClassifyError::Cohomology(CohError::WrongParent {
            context: "classifier twist",
        }));
    }
    if twist.degree() != degree {
        return Err(ClassifyError::TwistDegree { expected: degree, got: twist.degree() });
    }
    if !twist.is_cocycle().map_err(ClassifyError::Cohomology)? {
        return Err(ClassifyError::Cohomology(CohError::NotACocycle));
    }
    Ok(())
}
