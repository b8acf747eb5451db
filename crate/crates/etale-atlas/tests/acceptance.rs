//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//! Expected values are either verified against the exhaustive-enumeration
//! oracle in `common` before being trusted, or pinned by the hand
//! computations recorded in the comments.

mod common;

use std::collections::HashMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use etale_atlas::classify::{enumerate_etale1, enumerate_lagrangian1, enumerate_lagrangian2_trivial_pointed};
use etale_atlas::cohomology::{
    coboundary_matrix, cohomology_group, trivialize, Cochain, CohomologyGroup,
};
use etale_atlas::group::{all_subgroups, subgroup_conjugacy_reps, FiniteGroup};
use etale_atlas::transgression::{conjugation_isomorphism, transgress_cochain};
use etale_atlas::zlinalg::{
    smith_normal_form, smith_normal_form_with, solve_qz, IntMatrix, Qz, SnfOptions,
};

use common::{
    bareiss_abs_det, bareiss_rank, bareiss_rank_minor, brute_force_cohomology, det_mod_p,
    groups_up_to_order_8,
};

const ORACLE_CAP: u64 = 2_100_000;

fn factors(g: &Arc<FiniteGroup>, n: usize) -> Vec<u64> {
    cohomology_group(g, n).unwrap().invariant_factors().to_vec()
}

/// Criterion 1: Hⁿ(ℤ/m; ℚ/ℤ) = ℤ/m, 0, ℤ/m, 0 for n = 1..4, m = 2, 3, 4,
/// exactly, in under five seconds. Values are cross-checked against the
/// exhaustive oracle wherever its enumeration is feasible; the remaining
/// degrees are pinned by the period-2 pattern of cyclic cohomology, whose
/// low-degree instances the oracle does cover.
#[test]
fn criterion_1_cyclic_cohomology_table() {
    let t0 = Instant::now();
    let mut computed: HashMap<(usize, usize), Vec<u64>> = HashMap::new();
    for m in [2usize, 3, 4] {
        let g = FiniteGroup::cyclic(m);
        for n in 1..=4 {
            computed.insert((m, n), factors(&g, n));
        }
    }
    let engine_time = t0.elapsed();
    assert!(engine_time < Duration::from_secs(5), "engine took {engine_time:?}");

    for m in [2usize, 3, 4] {
        let expect_odd = vec![m as u64];
        assert_eq!(computed[&(m, 1)], expect_odd, "H^1(Z{m})");
        assert_eq!(computed[&(m, 2)], vec![], "H^2(Z{m})");
        assert_eq!(computed[&(m, 3)], expect_odd, "H^3(Z{m})");
        assert_eq!(computed[&(m, 4)], vec![], "H^4(Z{m})");
    }

    // oracle verification on every feasible (m, n)
    let mut oracle_hits = 0;
    for m in [2usize, 3, 4] {
        let g = FiniteGroup::cyclic(m);
        for n in 1..=4 {
            if let Some(oracle) = brute_force_cohomology(&g, n, ORACLE_CAP) {
                assert_eq!(computed[&(m, n)], oracle, "oracle disagrees at H^{n}(Z{m})");
                oracle_hits += 1;
            }
        }
    }
    assert!(oracle_hits >= 9, "only {oracle_hits} oracle-checkable cases");

    // periodicity cross-check pins the infeasible degrees
    for m in [2usize, 3, 4] {
        assert_eq!(computed[&(m, 3)], computed[&(m, 1)], "periodicity H^3 = H^1");
        assert_eq!(computed[&(m, 4)], computed[&(m, 2)], "periodicity H^4 = H^2");
    }
    println!(
        "ACCEPTANCE 1 (cyclic cohomology table): PASS in {:?} ({oracle_hits} oracle checks)",
        t0.elapsed()
    );
}

/// Criterion 2: H²(V₄) = ℤ/2 (oracle-verified), H³(V₄) = (ℤ/2)³ and
/// H⁴(V₄) = (ℤ/2)², exactly, in under ten seconds.
///
/// The H³/H⁴ fixtures come from Künneth for ℤ/2 × ℤ/2 with
/// H_*(ℤ/2; ℤ) = ℤ, ℤ/2, 0, ℤ/2, 0:
///   H_3 = (H_3⊗H_0) ⊕ (H_1⊗H_1... via Tor) — explicitly
///   H_3(V₄) = H_3⊕H_3 ⊕ Tor(H_1, H_1) = ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2,
///   H_4(V₄) = (H_3⊗H_1) ⊕ (H_1⊗H_3) = ℤ/2 ⊕ ℤ/2,
/// and Hⁿ(V₄; ℚ/ℤ) ≅ H_n(V₄; ℤ) for n ≥ 1.
#[test]
fn criterion_2_klein_four_cohomology() {
    let t0 = Instant::now();
    let z2 = FiniteGroup::cyclic(2);
    let v4 = FiniteGroup::direct_product(&z2, &z2);
    let h2 = factors(&v4, 2);
    let h3 = factors(&v4, 3);
    let h4 = factors(&v4, 4);
    let engine_time = t0.elapsed();
    assert!(engine_time < Duration::from_secs(10), "engine took {engine_time:?}");

    let oracle_h2 = brute_force_cohomology(&v4, 2, ORACLE_CAP).expect("H^2(V4) is feasible");
    assert_eq!(h2, oracle_h2);
    assert_eq!(h2, vec![2]);
    assert_eq!(h3, vec![2, 2, 2]);
    assert_eq!(h4, vec![2, 2]);
    println!("ACCEPTANCE 2 (Klein four-group cohomology): PASS in {:?}", t0.elapsed());
}

/// Criterion 3: Lagrangian-algebra counts in Z₁(Vect^ω_G) — the gapped
/// boundary counts. The torsor formula Σ|H²(H)| is cross-checked against
/// independently brute-forced H² groups: directly where the enumeration
/// is feasible, and through the Sylow-restriction argument for S₃ (its
/// H² injects into H²(ℤ/2) ⊕ H²(ℤ/3) on primary parts, both of which the
/// oracle computes to be zero).
#[test]
fn criterion_3_lagrangian_boundary_counts() {
    let t0 = Instant::now();
    let z2 = FiniteGroup::cyclic(2);
    let v4 = FiniteGroup::direct_product(&z2, &z2);
    let s3 = FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();

    // toric code: 2 boundaries
    let out = enumerate_lagrangian1(&z2, &Cochain::zero(&z2, 3).unwrap()).unwrap();
    assert_eq!(out.summary.weighted_count, 2);
    // double semion: 1 boundary
    let omega = cohomology_group(&z2, 3).unwrap().generators()[0].clone();
    let out = enumerate_lagrangian1(&z2, &omega).unwrap();
    assert_eq!(out.summary.weighted_count, 1);
    // untwisted S3 gauge theory: 4 boundaries
    let out = enumerate_lagrangian1(&s3, &Cochain::zero(&s3, 3).unwrap()).unwrap();
    assert_eq!(out.summary.weighted_count, 4);
    // untwisted V4: 6 boundaries (the full subgroup carries |H²| = 2)
    let out = enumerate_lagrangian1(&v4, &Cochain::zero(&v4, 3).unwrap()).unwrap();
    assert_eq!(out.summary.weighted_count, 6);

    // torsor cross-check against the oracle, per admitted subgroup
    for g in [z2.clone(), v4.clone(), s3.clone()] {
        for h in subgroup_conjugacy_reps(&g).unwrap() {
            let engine = factors(h.as_group(), 2);
            match brute_force_cohomology(h.as_group(), 2, ORACLE_CAP) {
                Some(oracle) => assert_eq!(engine, oracle, "H^2 of {:?}", h),
                None => {
                    // S3 itself: both Sylow restrictions are oracle-zero,
                    // and restriction is injective on primary parts
                    assert_eq!(h.order(), 6);
                    let sylow2 = brute_force_cohomology(&z2, 2, ORACLE_CAP).unwrap();
                    let z3 = FiniteGroup::cyclic(3);
                    let sylow3 = brute_force_cohomology(&z3, 2, ORACLE_CAP).unwrap();
                    assert!(sylow2.is_empty() && sylow3.is_empty());
                    assert!(engine.is_empty());
                }
            }
        }
    }
    println!("ACCEPTANCE 3 (Lagrangian boundary counts): PASS in {:?}", t0.elapsed());
}

/// Criterion 4: pointed-sector Lagrangian count in Z₁(2Vect_{ℤ/2}) with
/// π = 0 and trivial A: weighted count 3 = Σ_H |H³(H)| over the two
/// subgroup classes (1 + |H³(ℤ/2)| = 1 + 2).
#[test]
fn criterion_4_pointed_lagrangian_count() {
    let t0 = Instant::now();
    let z2 = FiniteGroup::cyclic(2);
    let out =
        enumerate_lagrangian2_trivial_pointed(&z2, &Cochain::zero(&z2, 4).unwrap()).unwrap();
    assert_eq!(out.summary.records, 2);
    assert_eq!(out.summary.weighted_count, 3);
    assert_eq!(out.summary.rejected, 0);
    // the torsor sizes come from H³ groups the oracle verifies
    let oracle = brute_force_cohomology(&z2, 3, ORACLE_CAP).unwrap();
    assert_eq!(oracle, vec![2]);
    println!("ACCEPTANCE 4 (pointed Lagrangian count): PASS in {:?}", t0.elapsed());
}

/// Criterion 5: the transgression property suite over every group of
/// order ≤ 8 and every computed H⁴ generator — cocycle preservation,
/// exactness preservation on 20 random cochains per group, vanishing at
/// the identity, linearity, and conjugation equivariance of classes.
/// Must finish inside five minutes.
#[test]
fn criterion_5_transgression_property_suite() {
    let t0 = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x7a75_657a_6574_6c61);
    let mut checked_generators = 0usize;
    for g in groups_up_to_order_8() {
        let order = g.order();
        let h4 = cohomology_group(&g, 4).unwrap();

        // basis cache per centralizer element set
        let mut bases: HashMap<Vec<usize>, CohomologyGroup> = HashMap::new();

        // cocycle preservation + identity vanishing + class bookkeeping
        let mut gen_classes: Vec<Vec<(Vec<usize>, Vec<u64>)>> = Vec::new();
        for pi in h4.generators() {
            checked_generators += 1;
            let mut per_element = Vec::new();
            for elem in 0..order {
                // transgress_cochain re-checks d(τ) = 0 and aborts on failure
                let (z, tau) = transgress_cochain(pi, elem).unwrap();
                if elem == 0 {
                    assert!(tau.is_zero(), "τ_e must vanish on normalized cocycles");
                }
                let class = class_in(&mut bases, &z, &tau);
                per_element.push((z.elements().to_vec(), class));
            }
            gen_classes.push(per_element);
        }

        // linearity of classes on the first generator pair
        if h4.generators().len() >= 2 {
            let sum = h4.generators()[0].add(&h4.generators()[1]);
            for elem in 0..order {
                let (z, tau) = transgress_cochain(&sum, elem).unwrap();
                let got = class_in(&mut bases, &z, &tau);
                let factors =
                    bases[z.elements()].invariant_factors().to_vec();
                let expected: Vec<u64> = gen_classes[0][elem]
                    .1
                    .iter()
                    .zip(&gen_classes[1][elem].1)
                    .zip(&factors)
                    .map(|((&a, &b), &m)| (a + b) % m)
                    .collect();
                assert_eq!(got, expected, "linearity at {elem}");
            }
        }

        // exactness preservation: 20 random 3-cochains per group
        for _ in 0..20 {
            let mut eta = Cochain::zero(&g, 3).unwrap();
            let width = order - 1;
            for _ in 0..(width.max(2)) {
                let tuple = [
                    rng.gen_range(1..order.max(2)),
                    rng.gen_range(1..order.max(2)),
                    rng.gen_range(1..order.max(2)),
                ];
                if order > 1 {
                    eta.set_value(&tuple, Qz::new(rng.gen_range(0..order as i64), order as i64));
                }
            }
            let d_eta = eta.apply_d().unwrap();
            for elem in 0..order {
                let (_, tau) = transgress_cochain(&d_eta, elem).unwrap();
                assert!(
                    trivialize(&tau, true).unwrap().is_some(),
                    "τ_{elem}(dη) failed to trivialize on {}",
                    g.name()
                );
            }
        }

        // conjugation equivariance of classes for every generator and pair
        for (pi, per_element) in h4.generators().iter().zip(&gen_classes) {
            for elem in 0..order {
                for x in 0..order {
                    let (elem_conj, iso) = conjugation_isomorphism(&g, x, elem);
                    let (_, tau_conj) = transgress_cochain(pi, elem_conj).unwrap();
                    let pulled =
                        etale_atlas::cohomology::pullback(&tau_conj, &iso).unwrap();
                    let z = g.centralizer(elem);
                    assert_eq!(
                        class_in(&mut bases, &z, &pulled),
                        per_element[elem].1,
                        "equivariance fails on {} at (g={elem}, x={x})",
                        g.name()
                    );
                }
            }
        }
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(300), "suite took {elapsed:?}");
    println!(
        "ACCEPTANCE 5 (transgression suite, {} groups, {checked_generators} generators): PASS in {elapsed:?}",
        groups_up_to_order_8().len()
    );
}

/// Criterion 6: the N = H slice of the étale classification reproduces
/// the Lagrangian classification record for record.
#[test]
fn criterion_6_etale_lagrangian_consistency() {
    let t0 = Instant::now();
    let mut slices = 0;
    for g in groups_up_to_order_8().into_iter().filter(|g| g.order() <= 6) {
        let twists: Vec<Cochain> = {
            let mut t = vec![Cochain::zero(&g, 3).unwrap()];
            let h3 = cohomology_group(&g, 3).unwrap();
            if let Some(gen) = h3.generators().first() {
                t.push(gen.clone());
            }
            t
        };
        for omega in &twists {
            let etale = enumerate_etale1(&g, omega).unwrap();
            let lagr = enumerate_lagrangian1(&g, omega).unwrap();
            let slice: Vec<_> = etale
                .records
                .iter()
                .filter(|r| r.n.order() == r.h.order())
                .collect();
            assert_eq!(slice.len(), lagr.records.len(), "{}", g.name());
            for (e, l) in slice.iter().zip(&lagr.records) {
                assert_eq!(e.h.elements(), l.h.elements());
                assert_eq!(e.rejected, l.rejected);
                assert_eq!(e.phi_rep, l.psi_rep);
                assert_eq!(e.phi_torsor, l.torsor);
                slices += 1;
            }
        }
    }
    assert!(slices > 20);
    println!("ACCEPTANCE 6 (étale/Lagrangian consistency, {slices} slices): PASS in {:?}", t0.elapsed());
}

/// Criterion 7: the order-8 workload — building the degree-4 and
/// degree-5 bar differentials (7⁵×7⁴ and 7⁶×7⁵, handled sparsely) and
/// running the H⁴ Smith normal form — completes within five minutes for
/// ℤ/8 and (ℤ/2)³, with D₄ as a stretch case.
#[test]
fn criterion_7_order_eight_performance() {
    let t0 = Instant::now();
    let z2 = FiniteGroup::cyclic(2);
    let e8 = FiniteGroup::direct_product(&FiniteGroup::direct_product(&z2, &z2), &z2);
    let groups = [FiniteGroup::cyclic(8), e8, FiniteGroup::dihedral(4)];
    for g in &groups {
        let d4 = coboundary_matrix(g, 4).unwrap();
        assert_eq!((d4.rows(), d4.cols()), (16807, 2401));
        assert!(d4.nnz() > 0 && d4.nnz() < 16807 * 7, "d4 must stay sparse");
        let h4 = cohomology_group(g, 4).unwrap();
        let expected: Vec<u64> = match g.name() {
            "Z8" => vec![],
            // Künneth over three ℤ/2 factors gives eight ℤ/2 summands
            "Z2xZ2xZ2" => vec![2; 8],
            "D4" => vec![2, 2],
            other => panic!("unexpected group {other}"),
        };
        assert_eq!(h4.invariant_factors(), expected.as_slice(), "{}", g.name());
        let d5 = coboundary_matrix(g, 5).unwrap();
        assert_eq!((d5.rows(), d5.cols()), (117649, 16807));
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(300), "workload took {elapsed:?}");
    println!("ACCEPTANCE 7 (order-8 performance): PASS in {elapsed:?}");
}

/// Criterion 8: randomized invariant suites with fixed seeds — SNF
/// unimodularity and divisibility chains with ranks cross-checked by
/// fraction-free elimination, solve_qz soundness and small-instance
/// completeness, and the group-theoretic invariants over the order ≤ 8
/// corpus.
#[test]
fn criterion_8_randomized_invariant_suites() {
    let t0 = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x6c61_7474_6963_6531);

    // --- SNF invariants on random sparse matrices ---
    for trial in 0..40 {
        let rows = rng.gen_range(1..=24);
        let cols = rng.gen_range(1..=24);
        let m = random_sparse(&mut rng, rows, cols, 0.3);
        let snf = smith_normal_form(&m);
        let u = snf.u_matrix();
        let v = snf.v_matrix();
        assert_eq!(u.mul(&m).mul(&v), snf.s_matrix(), "U M V = S at trial {trial}");
        for w in snf.diag().windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain at trial {trial}");
        }
        assert_eq!(bareiss_abs_det(u.to_dense()), BigInt::one(), "det U = ±1");
        assert_eq!(bareiss_abs_det(v.to_dense()), BigInt::one(), "det V = ±1");
        assert_eq!(snf.rank(), bareiss_rank(m.to_dense()), "rank oracle");
    }

    // one large sparse instance: rank by fraction-free elimination,
    // unimodularity spot-checked by residue arithmetic
    {
        let m = random_sparse(&mut rng, 200, 200, 0.02);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.rank(), bareiss_rank(m.to_dense()), "200x200 rank");
        for w in snf.diag().windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "chain on 200x200");
        }
        let p = 1_000_000_007u64;
        let du = det_mod_p(&snf.u_matrix().to_dense(), p);
        let dv = det_mod_p(&snf.v_matrix().to_dense(), p);
        assert!(du == 1 || du == p - 1, "det U mod p");
        assert!(dv == 1 || dv == p - 1, "det V mod p");
    }

    // --- solve_qz soundness on constructed solvable systems ---
    for _ in 0..100 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let m = random_sparse(&mut rng, rows, cols, 0.5);
        let x: Vec<Qz> = (0..cols)
            .map(|_| Qz::new(rng.gen_range(0..12), rng.gen_range(1..12)))
            .collect();
        let target = m.mul_qz(&x);
        let solved = solve_qz(&m, &target).unwrap().expect("constructed solvable");
        assert_eq!(m.mul_qz(&solved), target, "soundness");
    }

    // --- solve_qz completeness on exhaustively checkable instances ---
    let mut completeness_checked = 0;
    for _ in 0..60 {
        let rows = rng.gen_range(1..=3);
        let cols = rng.gen_range(1..=3);
        let m = random_sparse(&mut rng, rows, cols, 0.8);
        let den = rng.gen_range(1..=4i64);
        let target: Vec<Qz> =
            (0..rows).map(|_| Qz::new(rng.gen_range(0..4), den)).collect();
        // any solution can be taken with denominator dividing den(t)·Δ,
        // where Δ is a nonzero maximal-rank minor (Cramer on a
        // nonsingular rank×rank submatrix)
        let (rank, minor) = bareiss_rank_minor(m.to_dense());
        let minor: u64 = if rank == 0 { 1 } else { minor.to_u64().unwrap() };
        let level = minor * den as u64;
        let total = (level as u128).pow(cols as u32);
        if total > 2_000_000 {
            continue;
        }
        completeness_checked += 1;
        let verdict = solve_qz(&m, &target).unwrap();
        let mut found = false;
        let mut digits = vec![0u64; cols];
        'outer: loop {
            let x: Vec<Qz> =
                digits.iter().map(|&d| Qz::new(d as i64, level as i64)).collect();
            if m.mul_qz(&x) == target {
                found = true;
                break;
            }
            for d in digits.iter_mut() {
                *d += 1;
                if *d < level {
                    continue 'outer;
                }
                *d = 0;
            }
            break;
        }
        assert_eq!(verdict.is_some(), found, "completeness on {m:?} -> {target:?}");
    }
    assert!(completeness_checked >= 30);

    // --- group invariants over the corpus ---
    for g in groups_up_to_order_8() {
        let classes = g.conjugacy_classes();
        let total: usize = classes.iter().map(|c| c.len()).sum();
        assert_eq!(total, g.order());
        for class in &classes {
            assert_eq!(g.order() % class.len(), 0, "class size divides order");
            for &a in class {
                assert_eq!(
                    g.centralizer(a).order() * class.len(),
                    g.order(),
                    "orbit-stabilizer in {}",
                    g.name()
                );
            }
        }
        for sub in all_subgroups(&g).unwrap() {
            assert_eq!(g.order() % sub.order(), 0, "Lagrange in {}", g.name());
            // Latin square of the re-indexed table
            let h = sub.as_group();
            let mut seen = vec![false; h.order()];
            for a in 0..h.order() {
                seen.iter_mut().for_each(|s| *s = false);
                for b in 0..h.order() {
                    assert!(!std::mem::replace(&mut seen[h.mul(a, b)], true));
                }
            }
        }
    }

    // SNF cokernel toy complex: Z --2--> Z --0--> 0 has H = Z/2
    let d = IntMatrix::from_rows(vec![vec![2]]);
    let factors = etale_atlas::zlinalg::cokernel_invariants(&d, 1).unwrap();
    assert_eq!(factors, vec![BigInt::from(2)]);

    println!(
        "ACCEPTANCE 8 (randomized invariants, {completeness_checked} completeness instances): PASS in {:?}",
        t0.elapsed()
    );
}

/// Class coordinates of a degree-3 cocycle on a centralizer, with the
/// `H³(Z(g))` basis cached by element set.
fn class_in(
    bases: &mut HashMap<Vec<usize>, CohomologyGroup>,
    z: &etale_atlas::group::Subgroup,
    c: &Cochain,
) -> Vec<u64> {
    let basis = bases
        .entry(z.elements().to_vec())
        .or_insert_with(|| cohomology_group(z.as_group(), 3).unwrap());
    basis.class_of(c).unwrap()
}

fn random_sparse(rng: &mut StdRng, rows: usize, cols: usize, density: f64) -> IntMatrix {
    let mut triplets = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if rng.gen_bool(density) {
                let v = rng.gen_range(-3..=3i64);
                triplets.push((r, c, BigInt::from(v)));
            }
        }
    }
    IntMatrix::from_triplets(rows, cols, triplets)
}

/// The full-tracking SNF options are exercised above; the rank-only path
/// must agree with them.
#[test]
fn rank_only_snf_agrees_with_tracked() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..20 {
        let m = random_sparse(&mut rng, 12, 9, 0.4);
        let full = smith_normal_form(&m);
        let lean = smith_normal_form_with(
            &m,
            SnfOptions { track_row_ops: false, track_col_ops: false },
        );
        assert_eq!(full.rank(), lean.rank());
        assert_eq!(full.diag(), lean.diag());
    }
}
