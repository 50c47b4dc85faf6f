//! Sparse exact Gaussian elimination: ranks, kernels and particular solutions.

use std::collections::BTreeMap;

use crate::arith::Field;

/// Sparse row: strictly increasing columns, nonzero values.
pub type SparseRow<F> = Vec<(usize, F)>;

/// `x + a·y` for sparse rows.
pub fn axpy<F: Field>(x: &[(usize, F)], a: &F, y: &[(usize, F)]) -> SparseRow<F> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        match (x.get(i), y.get(j)) {
            (Some((cx, vx)), Some((cy, vy))) if cx == cy => {
                let v = vx.add(&a.mul(vy));
                if !v.is_zero() {
                    out.push((*cx, v));
                }
                i += 1;
                j += 1;
            }
            (Some((cx, vx)), Some((cy, _))) if cx < cy => {
                out.push((*cx, vx.clone()));
                i += 1;
            }
            (Some((cx, vx)), None) => {
                out.push((*cx, vx.clone()));
                i += 1;
            }
            (_, Some((cy, vy))) => {
                let v = a.mul(vy);
                if !v.is_zero() {
                    out.push((*cy, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Builds a sparse row from unsorted, possibly repeated entries.
pub fn collect_row<F: Field>(entries: impl IntoIterator<Item = (usize, F)>) -> SparseRow<F> {
    let mut acc: BTreeMap<usize, F> = BTreeMap::new();
    for (c, v) in entries {
        let slot = acc.entry(c).or_insert_with(F::zero);
        *slot = slot.add(&v);
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Row echelon form built incrementally. Each stored row has its pivot as
/// smallest column, normalised to one, and contains no earlier pivot column.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivots: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots.
    pub fn reduce(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        let mut pos = 0;
        while pos < row.len() {
            let (c, a) = &row[pos];
            match self.pivots.get(c) {
                Some(p) => row = axpy(&row, &a.neg(), p),
                None => pos += 1,
            }
        }
        row
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow<F>) -> bool {
        let row = self.reduce(row);
        let Some((c, lead)) = row.first() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero pivot");
        let c = *c;
        let row: SparseRow<F> = row.into_iter().map(|(k, v)| (k, v.mul(&inv))).collect();
        self.pivots.insert(c, row);
        true
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    /// Solves for the pivot variables given values of the free ones
    /// (free values are read from `x`, pivot slots are overwritten).
    pub fn back_substitute(&self, x: &mut [F]) {
        for (p, row) in self.pivots.iter().rev() {
            let mut v = F::zero();
            for (c, a) in row.iter().skip(1) {
                if !x[*c].is_zero() {
                    v = v.sub(&a.mul(&x[*c]));
                }
            }
            x[*p] = v;
        }
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        (0..self.ncols)
            .filter(|c| !self.is_pivot(*c))
            .map(|f| {
                let mut x = vec![F::zero(); self.ncols];
                x[f] = F::one();
                self.back_substitute(&mut x);
                x
            })
            .collect()
    }

    /// Kernel element with the given values on the free columns, in column order.
    pub fn kernel_element(&self, mut free_values: impl FnMut() -> F) -> Vec<F> {
        let mut x = vec![F::zero(); self.ncols];
        for (c, slot) in x.iter_mut().enumerate() {
            if !self.is_pivot(c) {
                *slot = free_values();
            }
        }
        self.back_substitute(&mut x);
        x
    }

    pub fn kernel_dim(&self) -> usize {
        self.ncols - self.rank()
    }
}

/// Solves `A x = b` for sparse equations `(row, rhs)`; `None` if inconsistent.
/// Free variables are set to zero.
pub fn solve<F: Field>(ncols: usize, equations: Vec<(SparseRow<F>, F)>) -> Option<Vec<F>> {
    // the constant lives in an extra last column with value −b and x = 1
    let mut ech = Echelon::new(ncols + 1);
    for (mut row, b) in equations {
        if !b.is_zero() {
            row.push((ncols, b.neg()));
        }
        ech.insert(row);
    }
    if ech.is_pivot(ncols) {
        return None;
    }
    let mut x = vec![F::zero(); ncols + 1];
    x[ncols] = F::one();
    ech.back_substitute(&mut x);
    x.pop();
    Some(x)
}

/// Rank of a sparse matrix given by rows.
pub fn rank<F: Field>(ncols: usize, rows: impl IntoIterator<Item = SparseRow<F>>) -> usize {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}
