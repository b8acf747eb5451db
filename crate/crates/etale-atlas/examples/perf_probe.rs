//! Timing probe for the heavy bar-complex computations at |G| = 8.

use std::sync::Arc;
use std::time::Instant;

use etale_atlas::cohomology::{coboundary_matrix, cohomology_group};
use etale_atlas::group::FiniteGroup;

fn probe(g: &Arc<FiniteGroup>) {
    let t0 = Instant::now();
    let d4 = coboundary_matrix(g, 4).unwrap();
    println!(
        "{}: d4 is {}x{} with {} nonzeros, built in {:?}",
        g.name(),
        d4.rows(),
        d4.cols(),
        d4.nnz(),
        t0.elapsed()
    );
    let t1 = Instant::now();
    let h4 = cohomology_group(g, 4).unwrap();
    println!("{}: H^4 = {:?} in {:?}", g.name(), h4.invariant_factors(), t1.elapsed());
    let t2 = Instant::now();
    let d5 = coboundary_matrix(g, 5).unwrap();
    println!(
        "{}: d5 is {}x{} with {} nonzeros, built in {:?}",
        g.name(),
        d5.rows(),
        d5.cols(),
        d5.nnz(),
        t2.elapsed()
    );
}

fn main() {
    let z2 = FiniteGroup::cyclic(2);
    let z4 = FiniteGroup::cyclic(4);
    probe(&FiniteGroup::cyclic(8));
    probe(&FiniteGroup::direct_product(&FiniteGroup::direct_product(&z2, &z2), &z2));
    probe(&FiniteGroup::direct_product(&z4, &z2));
    probe(&FiniteGroup::dihedral(4));
    probe(&FiniteGroup::quaternion8());
}
