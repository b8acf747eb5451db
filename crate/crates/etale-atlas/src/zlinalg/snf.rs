use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use super::qz::Qz;

/// Which transform logs to record during reduction. Skipping a log saves
/// memory on large inputs where the transform is not needed.
#[derive(Clone, Copy, Debug)]
pub struct SnfOptions {
    pub track_row_ops: bool,
    pub track_col_ops: bool,
}

impl Default for SnfOptions {
    fn default() -> Self {
        SnfOptions { track_row_ops: true, track_col_ops: true }
    }
}

/// An elementary row or column operation, in the order it was applied.
#[derive(Clone, Debug)]
pub enum ElemOp {
    Swap(u32, u32),
    Neg(u32),
    /// line `dst` += `coef` · line `src`
    Add { dst: u32, src: u32, coef: BigInt },
}

/// Smith normal form `U · M · V = S` with `S` diagonal and positive
/// invariant factors forming a divisibility chain.
///
/// `U` and `V` are kept as elementary-operation logs rather than dense
/// matrices; they can be applied to vectors in time proportional to the
/// log length, or materialized for small inputs.
pub struct SnfResult {
    rows: usize,
    cols: usize,
    rank: usize,
    diag: Vec<BigInt>,
    row_ops: Option<Vec<ElemOp>>,
    col_ops: Option<Vec<ElemOp>>,
}

impl SnfResult {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The nonzero diagonal of `S`: positive, each dividing the next.
    pub fn diag(&self) -> &[BigInt] {
        &self.diag
    }

    pub fn s_matrix(&self) -> IntMatrix {
        IntMatrix::from_triplets(
            self.rows,
            self.cols,
            self.diag.iter().enumerate().map(|(i, v)| (i, i, v.clone())),
        )
    }

    /// `U · t` for an integer vector of length `rows`.
    pub fn apply_u_int(&self, t: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(t.len(), self.rows);
        let ops = self.row_ops.as_ref().expect("row transform was not tracked");
        let mut w = t.to_vec();
        for op in ops {
            apply_row_op_vec_int(op, &mut w);
        }
        w
    }

    /// `U · t` for a ℚ/ℤ vector of length `rows`.
    pub fn apply_u_qz(&self, t: &[Qz]) -> Vec<Qz> {
        assert_eq!(t.len(), self.rows);
        let ops = self.row_ops.as_ref().expect("row transform was not tracked");
        let mut w = t.to_vec();
        for op in ops {
            apply_row_op_vec_qz(op, &mut w);
        }
        w
    }

    /// `V · y` for an integer vector of length `cols`.
    pub fn apply_v_int(&self, y: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(y.len(), self.cols);
        let ops = self.col_ops.as_ref().expect("column transform was not tracked");
        let mut w = y.to_vec();
        for op in ops.iter().rev() {
            apply_col_op_vec_int(op, &mut w);
        }
        w
    }

    /// `V · y` for a ℚ/ℤ vector of length `cols`.
    pub fn apply_v_qz(&self, y: &[Qz]) -> Vec<Qz> {
        assert_eq!(y.len(), self.cols);
        let ops = self.col_ops.as_ref().expect("column transform was not tracked");
        let mut w = y.to_vec();
        for op in ops.iter().rev() {
            apply_col_op_vec_qz(op, &mut w);
        }
        w
    }

    /// `V⁻¹ · x` for a ℚ/ℤ vector of length `cols`.
    pub fn apply_v_inv_qz(&self, x: &[Qz]) -> Vec<Qz> {
        assert_eq!(x.len(), self.cols);
        let ops = self.col_ops.as_ref().expect("column transform was not tracked");
        let mut w = x.to_vec();
        for op in ops {
            apply_col_op_vec_qz(&op.inverse(), &mut w);
        }
        w
    }

    /// Materializes `U` (rows × rows). Intended for small matrices.
    pub fn u_matrix(&self) -> IntMatrix {
        let n = self.rows;
        let mut triplets = Vec::new();
        for j in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[j] = BigInt::from(1);
            let col = self.apply_u_int(&e);
            for (i, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    triplets.push((i, j, v));
                }
            }
        }
        IntMatrix::from_triplets(n, n, triplets)
    }

    /// Materializes `V` (cols × cols). Intended for small matrices.
    pub fn v_matrix(&self) -> IntMatrix {
        let n = self.cols;
        let mut triplets = Vec::new();
        for j in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[j] = BigInt::from(1);
            let col = self.apply_v_int(&e);
            for (i, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    triplets.push((i, j, v));
                }
            }
        }
        IntMatrix::from_triplets(n, n, triplets)
    }
}

impl ElemOp {
    fn inverse(&self) -> ElemOp {
        match self {
            ElemOp::Swap(a, b) => ElemOp::Swap(*a, *b),
            ElemOp::Neg(a) => ElemOp::Neg(*a),
            ElemOp::Add { dst, src, coef } => {
                ElemOp::Add { dst: *dst, src: *src, coef: -coef.clone() }
            }
        }
    }
}

fn apply_row_op_vec_int(op: &ElemOp, w: &mut [BigInt]) {
    match op {
        ElemOp::Swap(a, b) => w.swap(*a as usize, *b as usize),
        ElemOp::Neg(a) => {
            let a = *a as usize;
            w[a] = -std::mem::take(&mut w[a]);
        }
        ElemOp::Add { dst, src, coef } => {
            let add = coef * &w[*src as usize];
            w[*dst as usize] += add;
        }
    }
}

fn apply_row_op_vec_qz(op: &ElemOp, w: &mut [Qz]) {
    match op {
        ElemOp::Swap(a, b) => w.swap(*a as usize, *b as usize),
        ElemOp::Neg(a) => {
            let a = *a as usize;
            w[a] = w[a].neg();
        }
        ElemOp::Add { dst, src, coef } => {
            let add = w[*src as usize].scale_big(coef);
            w[*dst as usize] = w[*dst as usize].add(&add);
        }
    }
}

// A column operation `col_dst += coef · col_src` is right-multiplication by
// `I + coef·E(src,dst)`, whose action on a coordinate vector is
// `y_src += coef · y_dst`.
fn apply_col_op_vec_int(op: &ElemOp, w: &mut [BigInt]) {
    match op {
        ElemOp::Swap(a, b) => w.swap(*a as usize, *b as usize),
        ElemOp::Neg(a) => {
            let a = *a as usize;
            w[a] = -std::mem::take(&mut w[a]);
        }
        ElemOp::Add { dst, src, coef } => {
            let add = coef * &w[*dst as usize];
            w[*src as usize] += add;
        }
    }
}

fn apply_col_op_vec_qz(op: &ElemOp, w: &mut [Qz]) {
    match op {
        ElemOp::Swap(a, b) => w.swap(*a as usize, *b as usize),
        ElemOp::Neg(a) => {
            let a = *a as usize;
            w[a] = w[a].neg();
        }
        ElemOp::Add { dst, src, coef } => {
            let add = w[*dst as usize].scale_big(coef);
            w[*src as usize] = w[*src as usize].add(&add);
        }
    }
}

/// Quotient minimizing the remainder: `|v - q·p| <= |p|/2`.
fn rounded_div(v: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = v.div_rem(p);
    if r.abs() * 2 > p.abs() {
        if r.sign() == p.sign() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

struct Work {
    rows: Vec<BTreeMap<u32, BigInt>>,
    col_rows: Vec<BTreeSet<u32>>,
    /// (count, col) for columns at or beyond the current diagonal position
    /// that still hold entries; drives pivot selection.
    sel: BTreeSet<(u32, u32)>,
    front: u32,
    row_ops: Option<Vec<ElemOp>>,
    col_ops: Option<Vec<ElemOp>>,
}

impl Work {
    fn new(m: &IntMatrix, opts: SnfOptions) -> Work {
        let mut rows: Vec<BTreeMap<u32, BigInt>> = vec![BTreeMap::new(); m.rows()];
        let mut col_rows: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); m.cols()];
        for (r, c, v) in m.triplets() {
            rows[r].insert(c as u32, v.clone());
            col_rows[c].insert(r as u32);
        }
        let sel = col_rows
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_empty())
            .map(|(c, s)| (s.len() as u32, c as u32))
            .collect();
        Work {
            rows,
            col_rows,
            sel,
            front: 0,
            row_ops: opts.track_row_ops.then(Vec::new),
            col_ops: opts.track_col_ops.then(Vec::new),
        }
    }

    fn sel_remove(&mut self, c: u32) {
        if c >= self.front {
            let n = self.col_rows[c as usize].len() as u32;
            if n > 0 {
                self.sel.remove(&(n, c));
            }
        }
    }

    fn sel_insert(&mut self, c: u32) {
        if c >= self.front {
            let n = self.col_rows[c as usize].len() as u32;
            if n > 0 {
                self.sel.insert((n, c));
            }
        }
    }

    fn insert_entry(&mut self, r: u32, c: u32, v: BigInt) {
        debug_assert!(!v.is_zero());
        self.sel_remove(c);
        self.rows[r as usize].insert(c, v);
        self.col_rows[c as usize].insert(r);
        self.sel_insert(c);
    }

    fn remove_entry(&mut self, r: u32, c: u32) {
        self.sel_remove(c);
        self.rows[r as usize].remove(&c);
        self.col_rows[c as usize].remove(&r);
        self.sel_insert(c);
    }

    /// row `dst` += `coef` · row `src`
    fn row_add(&mut self, dst: u32, src: u32, coef: &BigInt) {
        if coef.is_zero() {
            return;
        }
        let src_row = std::mem::take(&mut self.rows[src as usize]);
        for (&c, v) in &src_row {
            let delta = coef * v;
            match self.rows[dst as usize].get(&c).cloned() {
                Some(old) => {
                    let new = old + delta;
                    if new.is_zero() {
                        self.remove_entry(dst, c);
                    } else {
                        self.rows[dst as usize].insert(c, new);
                    }
                }
                None => self.insert_entry(dst, c, delta),
            }
        }
        self.rows[src as usize] = src_row;
        if let Some(log) = &mut self.row_ops {
            log.push(ElemOp::Add { dst, src, coef: coef.clone() });
        }
    }

    /// col `dst` += `coef` · col `src`
    fn col_add(&mut self, dst: u32, src: u32, coef: &BigInt) {
        if coef.is_zero() {
            return;
        }
        let src_rows: Vec<u32> = self.col_rows[src as usize].iter().copied().collect();
        for r in src_rows {
            let v = self.rows[r as usize][&src].clone();
            let delta = coef * v;
            match self.rows[r as usize].get(&dst).cloned() {
                Some(old) => {
                    let new = old + delta;
                    if new.is_zero() {
                        self.remove_entry(r, dst);
                    } else {
                        self.rows[r as usize].insert(dst, new);
                    }
                }
                None => self.insert_entry(r, dst, delta),
            }
        }
        if let Some(log) = &mut self.col_ops {
            log.push(ElemOp::Add { dst, src, coef: coef.clone() });
        }
    }

    fn swap_rows(&mut self, a: u32, b: u32) {
        if a != b {
            let ra = std::mem::take(&mut self.rows[a as usize]);
            let rb = std::mem::take(&mut self.rows[b as usize]);
            for &c in ra.keys() {
                self.col_rows[c as usize].remove(&a);
            }
            for &c in rb.keys() {
                self.col_rows[c as usize].remove(&b);
            }
            for &c in rb.keys() {
                self.col_rows[c as usize].insert(a);
            }
            for &c in ra.keys() {
                self.col_rows[c as usize].insert(b);
            }
            self.rows[a as usize] = rb;
            self.rows[b as usize] = ra;
            if let Some(log) = &mut self.row_ops {
                log.push(ElemOp::Swap(a, b));
            }
        }
    }

    fn swap_cols(&mut self, a: u32, b: u32) {
        if a != b {
            self.sel_remove(a);
            self.sel_remove(b);
            let touched: BTreeSet<u32> = self.col_rows[a as usize]
                .union(&self.col_rows[b as usize])
                .copied()
                .collect();
            for r in touched {
                let row = &mut self.rows[r as usize];
                let va = row.remove(&a);
                let vb = row.remove(&b);
                if let Some(v) = vb {
                    row.insert(a, v);
                }
                if let Some(v) = va {
                    row.insert(b, v);
                }
            }
            self.col_rows.swap(a as usize, b as usize);
            self.sel_insert(a);
            self.sel_insert(b);
            if let Some(log) = &mut self.col_ops {
                log.push(ElemOp::Swap(a, b));
            }
        }
    }

    fn pivot_value(&self, d: u32) -> BigInt {
        self.rows[d as usize][&d].clone()
    }
}

/// Smith normal form with both transform logs recorded.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    smith_normal_form_with(m, SnfOptions::default())
}

/// Smith normal form with configurable transform tracking.
pub fn smith_normal_form_with(m: &IntMatrix, opts: SnfOptions) -> SnfResult {
    let mut w = Work::new(m, opts);
    let limit = m.rows().min(m.cols()) as u32;
    let mut diag: Vec<BigInt> = Vec::new();

    while w.front < limit {
        // pivot column: fewest entries; pivot row within it: smallest
        // absolute value, then sparsest row, then least index
        let Some(&(_, pc)) = w.sel.iter().next() else { break };
        let pr = w.col_rows[pc as usize]
            .iter()
            .copied()
            .min_by_key(|&r| {
                let v = &w.rows[r as usize][&pc];
                (v.abs(), w.rows[r as usize].len(), r)
            })
            .expect("selected column is nonempty");

        let d = w.front;
        w.swap_rows(pr, d);
        w.swap_cols(pc, d);
        // column d leaves the selection structure for good
        w.sel_remove(d);
        w.front += 1;
        eliminate_at(&mut w, d);
        diag.push(w.pivot_value(d));
    }

    // sign normalization
    for (i, v) in diag.iter_mut().enumerate() {
        if v.sign() == num_bigint::Sign::Minus {
            *v = -std::mem::take(v);
            if let Some(log) = &mut w.row_ops {
                log.push(ElemOp::Neg(i as u32));
            }
        }
    }

    // enforce the divisibility chain with 2x2 diagonal fixes
    let rank = diag.len();
    for i in 0..rank {
        for j in (i + 1)..rank {
            if (&diag[j] % &diag[i]).is_zero() {
                continue;
            }
            let (a, b) = (diag[i].clone(), diag[j].clone());
            let (g, l) = fix_pair(&mut w, i as u32, j as u32, &a, &b);
            diag[i] = g;
            diag[j] = l;
        }
    }

    SnfResult {
        rows: m.rows(),
        cols: m.cols(),
        rank,
        diag,
        row_ops: w.row_ops,
        col_ops: w.col_ops,
    }
}

/// Clears row and column `d` down to the single pivot entry at `(d,d)`,
/// alternating Euclidean row and column steps.
fn eliminate_at(w: &mut Work, d: u32) {
    loop {
        // clear the pivot column with row operations
        'col: loop {
            let others: Vec<u32> =
                w.col_rows[d as usize].iter().copied().filter(|&r| r != d).collect();
            if others.is_empty() {
                break;
            }
            let pivot = w.pivot_value(d);
            for r in others {
                let v = w.rows[r as usize][&d].clone();
                let q = rounded_div(&v, &pivot);
                w.row_add(r, d, &-q);
                if w.rows[r as usize].contains_key(&d) {
                    // remainder is strictly smaller; promote it to the pivot
                    w.swap_rows(r, d);
                    continue 'col;
                }
            }
        }
        // clear the pivot row with column operations; the pivot column is a
        // singleton now, so these touch row d only
        let mut dirty_column = false;
        'row: loop {
            let others: Vec<u32> =
                w.rows[d as usize].keys().copied().filter(|&c| c != d).collect();
            if others.is_empty() {
                break;
            }
            let pivot = w.pivot_value(d);
            for c in others {
                let v = w.rows[d as usize][&c].clone();
                let q = rounded_div(&v, &pivot);
                w.col_add(c, d, &-q);
                if w.rows[d as usize].contains_key(&c) {
                    w.swap_cols(c, d);
                    // the incoming column may hold entries in other rows
                    dirty_column = !w.col_rows[d as usize].iter().all(|&r| r == d);
                    if dirty_column {
                        break 'row;
                    }
                    continue 'row;
                }
            }
        }
        if !dirty_column {
            return;
        }
    }
}

/// Replaces diagonal entries `(a, b)` at positions `(i, j)` by
/// `(gcd(a,b), lcm-scaled complement)`, logging the transforms. Rows and
/// columns `i`, `j` must hold only their diagonal entries.
fn fix_pair(w: &mut Work, i: u32, j: u32, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    // block state: [[x_ii, x_ij], [x_ji, x_jj]]
    let mut x_ii = a.clone();
    let mut x_ij = BigInt::zero();
    let mut x_ji = b.clone();
    let mut x_jj = b.clone();
    // col_i += col_j brings b into position (j, i)
    if let Some(log) = &mut w.col_ops {
        log.push(ElemOp::Add { dst: i, src: j, coef: BigInt::from(1) });
    }

    // Euclid on the first column of the block via row operations
    while !x_ji.is_zero() {
        let q = rounded_div(&x_ii, &x_ji);
        if !q.is_zero() {
            x_ii -= &q * &x_ji;
            x_ij -= &q * &x_jj;
            if let Some(log) = &mut w.row_ops {
                log.push(ElemOp::Add { dst: i, src: j, coef: -q });
            }
        }
        std::mem::swap(&mut x_ii, &mut x_ji);
        std::mem::swap(&mut x_ij, &mut x_jj);
        if let Some(log) = &mut w.row_ops {
            log.push(ElemOp::Swap(i, j));
        }
    }

    // clear (i, j); x_ii divides x_ij because both are combinations of a, b
    let q = &x_ij / &x_ii;
    if !q.is_zero() {
        x_ij -= &q * &x_ii;
        if let Some(log) = &mut w.col_ops {
            log.push(ElemOp::Add { dst: j, src: i, coef: -q });
        }
    }
    debug_assert!(x_ij.is_zero());

    if x_ii.sign() == num_bigint::Sign::Minus {
        x_ii = -x_ii;
        if let Some(log) = &mut w.row_ops {
            log.push(ElemOp::Neg(i));
        }
    }
    if x_jj.sign() == num_bigint::Sign::Minus {
        x_jj = -x_jj;
        if let Some(log) = &mut w.row_ops {
            log.push(ElemOp::Neg(j));
        }
    }
    debug_assert_eq!(&x_ii * &x_jj, a.abs() * b.abs());
    (x_ii, x_jj)
}
