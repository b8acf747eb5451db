//! Shared test oracles, deliberately independent of the library's
//! Smith-normal-form machinery: fraction-free Gaussian elimination for
//! ranks and determinants, and an exhaustive-enumeration cohomology
//! oracle for small groups.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use etale_atlas::group::FiniteGroup;

/// Fraction-free (Bareiss) elimination with full pivoting.
/// Returns the rank and the absolute value of a nonzero rank×rank minor
/// (the final pivot), which for square full-rank input is |det|.
pub fn bareiss_rank_minor(mut m: Vec<Vec<BigInt>>) -> (usize, BigInt) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for step in 0.. {
        // find any nonzero pivot in the remaining block
        let mut pivot = None;
        'search: for i in r..rows {
            for j in r..cols {
                if !m[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            return (r, prev.abs());
        };
        m.swap(r, pi);
        for row in &mut m {
            row.swap(r, pj);
        }
        let p = m[r][r].clone();
        for i in (r + 1)..rows {
            for j in (r + 1)..cols {
                let num = &m[i][j] * &p - &m[i][r] * &m[r][j];
                m[i][j] = num / &prev;
            }
            m[i][r] = BigInt::zero();
        }
        prev = p;
        r += 1;
        if r == rows.min(cols) {
            return (r, prev.abs());
        }
        let _ = step;
    }
    unreachable!()
}

pub fn bareiss_rank(m: Vec<Vec<BigInt>>) -> usize {
    bareiss_rank_minor(m).0
}

/// |det| of a square matrix (0 when singular).
pub fn bareiss_abs_det(m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let (rank, minor) = bareiss_rank_minor(m);
    if rank < n {
        BigInt::zero()
    } else {
        minor
    }
}

/// Determinant modulo a prime, by Gaussian elimination over F_p.
/// Spot-checks unimodularity where the exact determinant is too big.
pub fn det_mod_p(m: &[Vec<BigInt>], p: u64) -> u64 {
    let n = m.len();
    let pb = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    let r = v % &pb;
                    let r = if r.is_negative() { r + &pb } else { r };
                    u64::try_from(r).unwrap()
                })
                .collect()
        })
        .collect();
    let mut det: u128 = 1;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&r| a[r][c] != 0) else { return 0 };
        if pr != c {
            a.swap(pr, c);
            det = det * (p as u128 - 1) % p as u128;
        }
        let inv = mod_inverse(a[c][c], p);
        det = det * a[c][c] as u128 % p as u128;
        for r in (c + 1)..n {
            if a[r][c] == 0 {
                continue;
            }
            let factor = a[r][c] as u128 * inv as u128 % p as u128;
            for k in c..n {
                let sub = factor * a[c][k] as u128 % p as u128;
                a[r][k] = ((a[r][k] as u128 + p as u128 - sub) % p as u128) as u64;
            }
        }
    }
    det as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime: a^(p-2)
    let mut base = a as u128 % p as u128;
    let mut exp = p - 2;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        exp >>= 1;
    }
    acc as u64
}

/// The test corpus: every group of order at most 8.
pub fn groups_up_to_order_8() -> Vec<Arc<FiniteGroup>> {
    let z2 = FiniteGroup::cyclic(2);
    let z4 = FiniteGroup::cyclic(4);
    let mut out: Vec<Arc<FiniteGroup>> = (1..=8).map(FiniteGroup::cyclic).collect();
    out.push(FiniteGroup::direct_product(&z2, &z2));
    out.push(FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap());
    out.push(FiniteGroup::direct_product(&z4, &z2));
    out.push(FiniteGroup::direct_product(&FiniteGroup::direct_product(&z2, &z2), &z2));
    out.push(FiniteGroup::dihedral(4));
    out.push(FiniteGroup::quaternion8());
    out
}

/// Exhaustive-enumeration cohomology oracle over ℚ/ℤ.
///
/// Every class of `Hⁿ(G; ℚ/ℤ)` is represented by a cocycle with
/// denominator dividing m = |G| (the group is m-torsion), and a
/// denominator-m cocycle is a coboundary over ℚ/ℤ exactly when it is the
/// coboundary of a cochain with denominator dividing m² (the solve path
/// only ever divides by invariant factors, which are cohomology orders
/// dividing m). So the quotient
///
///   {denominator-m n-cocycles} / {d(denominator-m² (n−1)-cochains)}
///
/// computed by sheer enumeration equals `Hⁿ(G; ℚ/ℤ)`. Differentials are
/// evaluated from the bar formula directly; nothing here touches the
/// library's matrix or SNF code.
///
/// Returns the invariant factors (ascending), or `None` when either
/// enumeration would exceed `cap` candidates.
pub fn brute_force_cohomology(
    g: &Arc<FiniteGroup>,
    degree: usize,
    cap: u64,
) -> Option<Vec<u64>> {
    let order = g.order();
    let m = order as u64;
    let m2 = m * m;
    let width = order - 1;
    let dim_n = width.checked_pow(degree as u32)?;
    let dim_prev = width.checked_pow(degree as u32 - 1)?;

    if pow_exceeds(m, dim_n, cap) || pow_exceeds(m2, dim_prev, cap) {
        return None;
    }

    // cocycles with denominator m, stored as numerators over m²
    let mut kernel: Vec<Vec<u64>> = Vec::new();
    let mut cand = vec![0u64; dim_n];
    loop {
        let values: Vec<u64> = cand.iter().map(|&v| v * m).collect();
        if differential_is_zero(g, degree, &values, m2) {
            kernel.push(values);
        }
        if !increment(&mut cand, m) {
            break;
        }
    }

    // coboundaries of denominator-m² cochains
    let mut image: HashSet<Vec<u64>> = HashSet::new();
    let mut cand = vec![0u64; dim_prev];
    loop {
        image.insert(differential(g, degree - 1, &cand, m2));
        if !increment(&mut cand, m2) {
            break;
        }
    }

    let in_image = |v: &[u64]| image.contains(v);
    let trivial_count = kernel.iter().filter(|k| in_image(k)).count() as u64;
    assert!(trivial_count > 0, "the zero cocycle is always a coboundary");
    let quotient_order = kernel.len() as u64 / trivial_count;

    // count d-torsion in the quotient for each divisor d of m
    let mut torsion_counts = Vec::new();
    for d in 1..=m {
        if m % d != 0 {
            continue;
        }
        let count = kernel
            .iter()
            .filter(|k| {
                let scaled: Vec<u64> = k.iter().map(|&x| x * d % m2).collect();
                in_image(&scaled)
            })
            .count() as u64
            / trivial_count;
        torsion_counts.push((d, count));
    }

    // the unique abelian group with this torsion profile
    Some(match_abelian_group(quotient_order, &torsion_counts))
}

fn pow_exceeds(base: u64, exp: usize, cap: u64) -> bool {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        match acc.checked_mul(base) {
            Some(v) if v <= cap => acc = v,
            _ => return true,
        }
    }
    false
}

fn increment(digits: &mut [u64], radix: u64) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// Value of the normalized bar differential on one tuple, over a common
/// denominator; identity-containing arguments contribute zero.
fn differential(g: &Arc<FiniteGroup>, degree: usize, values: &[u64], den: u64) -> Vec<u64> {
    let order = g.order();
    let width = order - 1;
    let out_dim = width.pow(degree as u32 + 1);
    let mut out = vec![0u64; out_dim];
    let lookup = |tuple: &[usize]| -> u64 {
        if tuple.iter().any(|&x| x == 0) {
            return 0;
        }
        let mut idx = 0usize;
        for &x in tuple {
            idx = idx * width + (x - 1);
        }
        values[idx]
    };
    let mut tuple = vec![0usize; degree + 1];
    let mut arg = vec![0usize; degree];
    for (row, slot) in out.iter_mut().enumerate() {
        let mut idx = row;
        for t in tuple.iter_mut().rev() {
            *t = idx % width + 1;
            idx /= width;
        }
        let mut acc: i128 = lookup(&tuple[1..]) as i128;
        for k in 0..degree {
            arg[..k].copy_from_slice(&tuple[..k]);
            arg[k] = g.mul(tuple[k], tuple[k + 1]);
            arg[k + 1..].copy_from_slice(&tuple[k + 2..]);
            let term = lookup(&arg) as i128;
            if (k + 1) % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        let last = lookup(&tuple[..degree]) as i128;
        if (degree + 1) % 2 == 1 {
            acc -= last;
        } else {
            acc += last;
        }
        *slot = acc.rem_euclid(den as i128) as u64;
    }
    out
}

fn differential_is_zero(g: &Arc<FiniteGroup>, degree: usize, values: &[u64], den: u64) -> bool {
    differential(g, degree, values, den).iter().all(|&v| v == 0)
}

/// Finds the invariant factors of the abelian group with the given order
/// and d-torsion counts (#(elements killed by d) = ∏ gcd(d, qᵢ)).
fn match_abelian_group(order: u64, torsion: &[(u64, u64)]) -> Vec<u64> {
    let mut chains = Vec::new();
    divisor_chains(order, order, &mut Vec::new(), &mut chains);
    for chain in chains {
        let ok = torsion.iter().all(|&(d, count)| {
            chain.iter().map(|&q| num_integer::gcd(d, q)).product::<u64>() == count
        });
        if ok {
            return chain;
        }
    }
    panic!("no abelian group matches order {order} with torsion profile {torsion:?}");
}

fn divisor_chains(n: u64, max: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if n == 1 {
        let mut chain = acc.clone();
        chain.reverse();
        out.push(chain);
        return;
    }
    for q in 2..=max.min(n) {
        if n % q != 0 {
            continue;
        }
        if acc.last().is_some_and(|&prev| prev % q != 0) {
            continue;
        }
        acc.push(q);
        divisor_chains(n / q, q, acc, out);
        acc.pop();
    }
}
