use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::qz::Qz;

/// Density above which triplet storage switches to dense rows.
const DENSE_THRESHOLD: f64 = 0.25;

/// An exact integer matrix. Small dense matrices are stored by rows;
/// large sparse ones as sorted (row, col, value) triplets.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    store: Store,
}

#[derive(Clone, PartialEq, Eq)]
enum Store {
    /// Sorted row-major, no duplicates, no zeros.
    Sparse(Vec<(u32, u32, BigInt)>),
    Dense(Vec<Vec<BigInt>>),
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, store: Store::Sparse(Vec::new()) }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let trip = (0..n as u32).map(|i| (i, i, BigInt::one())).collect();
        IntMatrix { rows: n, cols: n, store: Store::Sparse(trip) }
    }

    /// Builds from triplets, summing duplicates and dropping zeros.
    /// Storage is chosen by the resulting density.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, BigInt)>,
    ) -> IntMatrix {
        let mut merged: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet index out of range");
            if v.is_zero() {
                continue;
            }
            let slot = merged.entry((r as u32, c as u32)).or_insert_with(BigInt::zero);
            *slot += v;
            if slot.is_zero() {
                merged.remove(&(r as u32, c as u32));
            }
        }
        let nnz = merged.len();
        let size = rows.saturating_mul(cols);
        if size > 0 && (nnz as f64) / (size as f64) > DENSE_THRESHOLD {
            let mut data = vec![vec![BigInt::zero(); cols]; rows];
            for ((r, c), v) in merged {
                data[r as usize][c as usize] = v;
            }
            IntMatrix { rows, cols, store: Store::Dense(data) }
        } else {
            let trip = merged.into_iter().map(|((r, c), v)| (r, c, v)).collect();
            IntMatrix { rows, cols, store: Store::Sparse(trip) }
        }
    }

    pub fn from_rows(data: Vec<Vec<i64>>) -> IntMatrix {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix::from_triplets(
            rows,
            cols,
            data.iter().enumerate().flat_map(|(i, row)| {
                row.iter().enumerate().map(move |(j, &v)| (i, j, BigInt::from(v)))
            }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        match &self.store {
            Store::Sparse(t) => t.len(),
            Store::Dense(d) => d.iter().flatten().filter(|v| !v.is_zero()).count(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        assert!(r < self.rows && c < self.cols, "index out of range");
        match &self.store {
            Store::Sparse(t) => t
                .binary_search_by_key(&(r as u32, c as u32), |&(tr, tc, _)| (tr, tc))
                .map(|i| t[i].2.clone())
                .unwrap_or_else(|_| BigInt::zero()),
            Store::Dense(d) => d[r][c].clone(),
        }
    }

    /// Iterates nonzero entries in row-major order.
    pub fn triplets(&self) -> Box<dyn Iterator<Item = (usize, usize, &BigInt)> + '_> {
        match &self.store {
            Store::Sparse(t) => {
                Box::new(t.iter().map(|(r, c, v)| (*r as usize, *c as usize, v)))
            }
            Store::Dense(d) => Box::new(d.iter().enumerate().flat_map(|(r, row)| {
                row.iter().enumerate().filter_map(move |(c, v)| {
                    if v.is_zero() {
                        None
                    } else {
                        Some((r, c, v))
                    }
                })
            })),
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_triplets(
            self.cols,
            self.rows,
            self.triplets().map(|(r, c, v)| (c, r, v.clone())),
        )
    }

    /// Exact matrix product (intended for tests and small verifications).
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        // index other's rows for sparse traversal
        let mut rows_of_other: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); other.rows];
        for (r, c, v) in other.triplets() {
            rows_of_other[r].push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (r, k, v) in self.triplets() {
            for &(c, w) in &rows_of_other[k] {
                let slot = acc.entry((r, c)).or_insert_with(BigInt::zero);
                *slot += v * w;
            }
        }
        IntMatrix::from_triplets(self.rows, other.cols, acc.into_iter().map(|((r, c), v)| (r, c, v)))
    }

    /// Applies the matrix to a ℚ/ℤ vector: `(M x) mod 1`.
    pub fn mul_qz(&self, x: &[Qz]) -> Vec<Qz> {
        assert_eq!(x.len(), self.cols, "dimension mismatch in matrix-vector product");
        let mut out = vec![Qz::ZERO; self.rows];
        for (r, c, v) in self.triplets() {
            out[r] = out[r].add(&x[c].scale_big(v));
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut data = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, c, v) in self.triplets() {
            data[r][c] = v.clone();
        }
        data
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} ({} nonzero)", self.rows, self.cols, self.nnz())?;
        if self.rows <= 16 && self.cols <= 16 {
            for row in self.to_dense() {
                writeln!(f, "  {:?}", row)?;
            }
        }
        Ok(())
    }
}
