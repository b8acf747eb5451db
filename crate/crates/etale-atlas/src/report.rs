//! Deterministic text reports: one `RECORD` block per classification
//! datum with `key: value` lines, then a `SUMMARY` block with `records=`,
//! `weighted_count=` and `rejected=`. Identical inputs produce
//! byte-identical reports; all numbers are exact fractions.

use std::fmt::Write as _;

use crate::classify::{
    CenterOutput, ClassificationSummary, Etale1Output, Etale2Output, Etale2RepOutput,
    Lagrangian1Output, Lagrangian2Output, PiLayerNote,
};
use crate::cohomology::{Cochain, CohomologyGroup};
use crate::files::write_cocycle;
use crate::group::{FiniteGroup, Subgroup};
use crate::transgression::TransgressionResult;

fn factors_line(factors: &[u64]) -> String {
    if factors.is_empty() {
        "trivial".to_string()
    } else {
        factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn class_line(class: &[u64]) -> String {
    if class.is_empty() {
        "()".to_string()
    } else {
        format!(
            "({})",
            class.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

fn elements_line(sub: &Subgroup) -> String {
    sub.elements()
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Nonzero values as `g1,g2=num/den` pairs joined by `;` — `0` when the
/// cochain vanishes identically.
fn cochain_inline(c: &Cochain) -> String {
    let order = c.group().order();
    let n = c.degree();
    let mut parts = Vec::new();
    let mut tuple = vec![0usize; n];
    for (idx, v) in c.values().iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        crate::cohomology::decode_tuple_pub(order, idx, &mut tuple);
        let tup = tuple.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",");
        parts.push(format!("{tup}={v}"));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("; ")
    }
}

fn summary_block(out: &mut String, s: &ClassificationSummary) {
    let _ = writeln!(out, "SUMMARY");
    let _ = writeln!(out, "records={}", s.records);
    let _ = writeln!(out, "weighted_count={}", s.weighted_count);
    let _ = writeln!(out, "rejected={}", s.rejected);
}

pub fn lagrangian1_report(g: &FiniteGroup, out: &Lagrangian1Output) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# Lagrangian algebras in Z1(Vect^w_{})", g.name());
    for r in &out.records {
        let _ = writeln!(s, "RECORD lagrangian1");
        let _ = writeln!(s, "H: {}", elements_line(&r.h));
        let _ = writeln!(s, "H_label: {}", r.h_label);
        let _ = writeln!(s, "H_order: {}", r.h.order());
        let _ = writeln!(s, "admissible: {}", !r.rejected);
        let _ = writeln!(s, "restriction_class: {}", class_line(&r.restriction_class));
        let _ = writeln!(s, "H3_factors: {}", factors_line(&r.h3_factors));
        let _ = writeln!(s, "torsor_H2: {}", factors_line(&r.torsor));
        let torsor_size: u64 = r.torsor.iter().product();
        let _ = writeln!(s, "torsor_size: {torsor_size}");
        match &r.psi_rep {
            Some(psi) => {
                let _ = writeln!(s, "psi: {}", cochain_inline(psi));
            }
            None => {
                let _ = writeln!(s, "psi: -");
            }
        }
        let _ = writeln!(s);
    }
    summary_block(&mut s, &out.summary);
    s
}

pub fn etale1_report(g: &FiniteGroup, out: &Etale1Output) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# Connected etale algebras in Z1(Vect^w_{})", g.name());
    for r in &out.records {
        let _ = writeln!(s, "RECORD etale1");
        let _ = writeln!(s, "H: {}", elements_line(&r.h));
        let _ = writeln!(s, "H_label: {}", r.h_label);
        let _ = writeln!(s, "N: {}", elements_line(&r.n));
        let _ = writeln!(s, "N_label: {}", r.n_label);
        let _ = writeln!(s, "admissible: {}", !r.rejected);
        let _ = writeln!(s, "phi_exists: {}", r.phi_exists);
        let _ = writeln!(s, "phi_torsor_H2N: {}", factors_line(&r.phi_torsor));
        match &r.phi_rep {
            Some(phi) => {
                let _ = writeln!(s, "phi: {}", cochain_inline(phi));
            }
            None => {
                let _ = writeln!(s, "phi: -");
            }
        }
        let _ = writeln!(s, "extension_factors_H3Q: {}", factors_line(&r.extension_factors));
        let ext = r
            .extension_classes
            .iter()
            .map(|c| class_line(c))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(
            s,
            "extension_classes: {}",
            if ext.is_empty() { "-".to_string() } else { ext }
        );
        let _ = writeln!(s, "extension_count: {}", r.extension_classes.len());
        let _ = writeln!(s);
    }
    summary_block(&mut s, &out.summary);
    s
}

pub fn lagrangian2_report(g: &FiniteGroup, out: &Lagrangian2Output) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "# Pointed-sector Lagrangian algebras in Z1(2Vect^pi_{}) (bosonic fusion 2-categories)",
        g.name()
    );
    for r in &out.records {
        let _ = writeln!(s, "RECORD lagrangian2_pointed");
        let _ = writeln!(s, "H: {}", elements_line(&r.h));
        let _ = writeln!(s, "H_label: {}", r.h_label);
        let _ = writeln!(s, "A: Vect");
        let _ = writeln!(s, "status: {}", r.status());
        let _ = writeln!(s, "admissible: {}", !r.rejected);
        let _ = writeln!(s, "restriction_class: {}", class_line(&r.restriction_class));
        let _ = writeln!(s, "H4_factors: {}", factors_line(&r.h4_factors));
        let _ = writeln!(s, "torsor_H3: {}", factors_line(&r.trivialization_torsor));
        let torsor_size: u64 = r.trivialization_torsor.iter().product();
        let _ = writeln!(s, "torsor_size: {torsor_size}");
        match &r.trivialization_rep {
            Some(phi) => {
                let _ = writeln!(s, "phi: {}", cochain_inline(phi));
            }
            None => {
                let _ = writeln!(s, "phi: -");
            }
        }
        let _ = writeln!(s);
    }
    summary_block(&mut s, &out.summary);
    s
}

pub fn etale_2rep_report(g: &FiniteGroup, out: &Etale2RepOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# Connected etale algebras in 2Rep({}) (pointed A)", g.name());
    for r in &out.records {
        let _ = writeln!(s, "RECORD etale_2rep");
        let _ = writeln!(s, "H: {}", elements_line(&r.h));
        let _ = writeln!(s, "H_label: {}", r.h_label);
        let _ = writeln!(s, "A: {}", r.metric_name);
        let gamma = r
            .gamma
            .images()
            .iter()
            .map(|y| y.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(s, "gamma: {gamma}");
        let _ = writeln!(s, "category: {}", r.label);
        let _ = writeln!(s);
    }
    summary_block(&mut s, &out.summary);
    s
}

pub fn etale2_report(g: &FiniteGroup, out: &Etale2Output) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# Connected etale algebra skeleta in Z1(2Vect^pi_{})", g.name());
    for r in &out.records {
        let _ = writeln!(s, "RECORD etale2_skeleton");
        let _ = writeln!(s, "H: {}", elements_line(&r.h));
        let _ = writeln!(s, "H_label: {}", r.h_label);
        let _ = writeln!(s, "N: {}", elements_line(&r.n));
        let _ = writeln!(s, "N_label: {}", r.n_label);
        let _ = writeln!(s, "A: {}", r.metric_name);
        let _ = writeln!(s, "A_nondegenerate: {}", r.nondegenerate);
        let gamma = r
            .gamma
            .images()
            .iter()
            .map(|y| y.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(s, "gamma: {gamma}");
        match &r.pi_layer {
            PiLayerNote::TrivialA { admissible, rep } => {
                let _ = writeln!(s, "theta_layer: decided");
                let _ = writeln!(s, "theta_admissible: {admissible}");
                match rep {
                    Some(phi) => {
                        let _ = writeln!(s, "theta_rep: {}", cochain_inline(phi));
                    }
                    None => {
                        let _ = writeln!(s, "theta_rep: -");
                    }
                }
            }
            PiLayerNote::UnverifiedHigherData => {
                let _ = writeln!(s, "theta_layer: UNVERIFIED_HIGHER_DATA");
            }
        }
        let _ = writeln!(s, "lagrangian_shape: {}", r.lagrangian_shape);
        let _ = writeln!(s);
    }
    summary_block(&mut s, &out.summary);
    s
}

pub fn center_report(g: &FiniteGroup, out: &CenterOutput, degree: usize) -> String {
    let mut s = String::new();
    let center = if degree == 4 {
        format!("Z1(2Vect^pi_{})", g.name())
    } else {
        format!("Z1(Vect^w_{})", g.name())
    };
    let _ = writeln!(s, "# Conjugacy-class sectors of {center}");
    for sector in &out.sectors {
        let _ = writeln!(s, "RECORD center_sector");
        let _ = writeln!(s, "rep: {}", sector.rep);
        let _ = writeln!(s, "class_size: {}", sector.class_size);
        let _ = writeln!(s, "centralizer: {}", elements_line(&sector.centralizer));
        let _ = writeln!(s, "centralizer_label: {}", sector.centralizer_label);
        let _ = writeln!(s, "twist_class: {}", class_line(&sector.twist_class));
        let _ = writeln!(s, "twist_factors: {}", factors_line(&sector.twist_factors));
        let _ = writeln!(s, "twist_trivial: {}", sector.twist_trivial);
        let _ = writeln!(s);
    }
    let _ = writeln!(s, "SUMMARY");
    let _ = writeln!(s, "records={}", out.sectors.len());
    let _ = writeln!(s, "weighted_count={}", out.group_order);
    let _ = writeln!(s, "rejected=0");
    s
}

pub fn cohomology_report(g: &FiniteGroup, basis: &CohomologyGroup) -> String {
    let mut s = String::new();
    let n = basis.degree();
    let group_part = if basis.invariant_factors().is_empty() {
        "0".to_string()
    } else {
        basis
            .invariant_factors()
            .iter()
            .map(|m| format!("Z/{m}"))
            .collect::<Vec<_>>()
            .join(" x ")
    };
    let _ = writeln!(s, "group: {} (order {})", g.name(), g.order());
    let _ = writeln!(s, "H^{n} = {group_part}");
    for (i, (gen, factor)) in basis
        .generators()
        .iter()
        .zip(basis.invariant_factors())
        .enumerate()
    {
        let _ = writeln!(s, "\ngenerator {} (order {factor}):", i + 1);
        let _ = write!(s, "{}", write_cocycle(&format!("h{n}_gen{}", i + 1), gen));
    }
    s
}

pub fn transgress_report(g: &FiniteGroup, res: &TransgressionResult) -> String {
    let mut s = String::new();
    let n = res.cochain().degree() + 1;
    let _ = writeln!(s, "group: {} (order {})", g.name(), g.order());
    let _ = writeln!(s, "element: {}", res.element());
    let _ = writeln!(s, "centralizer: {}", elements_line(res.centralizer()));
    let _ = writeln!(
        s,
        "centralizer_label: {}",
        crate::group::small_group_label(res.centralizer().as_group())
    );
    let _ = writeln!(s, "twist_degree: {}", n - 1);
    let _ = writeln!(s, "twist_class: {}", class_line(res.class()));
    let _ = writeln!(
        s,
        "twist_factors: {}",
        factors_line(res.basis().invariant_factors())
    );
    let _ = writeln!(s, "twist_trivial: {}", res.is_trivial_class());
    let _ = writeln!(s, "\n# transgressed cocycle on the centralizer (subgroup indices)");
    let _ = write!(s, "{}", write_cocycle("tau", res.cochain()));
    s
}
