//! Dense exact linear algebra over the rationals.
//!
//! Everything downstream reduces to row reduction: ranks, kernels, subspace
//! membership and intersection, inverses, and simultaneous integer
//! eigenspace decompositions of commuting operators (the workhorse of the
//! weight-space machinery).  Matrices are dense `Vec<Rat>` in row-major
//! order; the dimensions in play stay in the low hundreds, where dense
//! exact arithmetic is perfectly adequate and much easier to audit.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::CoreError;
use crate::scalars::{rat_int, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatQ {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl MatQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatQ {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatQ::zeros(n, n);
        for i in 0..n {
            m.set(i, i, rat_int(1));
        }
        m
    }

    /// Build from explicit rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|row| row.len() == c),
            "ragged rows passed to MatQ::from_rows"
        );
        MatQ {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = MatQ::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_slice(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> MatQ {
        MatQ::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &MatQ) -> MatQ {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = MatQ::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let cur = out.at(i, j).clone();
                        out.set(i, j, cur + a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row_slice(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "trace of non-square matrix");
        (0..self.rows).map(|i| self.at(i, i).clone()).sum()
    }

    pub fn scale(&self, c: &Rat) -> MatQ {
        MatQ::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    pub fn add(&self, other: &MatQ) -> MatQ {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        MatQ::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + other.at(i, j))
    }

    pub fn sub(&self, other: &MatQ) -> MatQ {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        MatQ::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - other.at(i, j))
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (MatQ, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, row * m.cols + j);
                }
            }
            let inv = rat_int(1) / m.at(row, col).clone();
            for j in col..m.cols {
                let v = m.at(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in col..m.cols {
                    let v = m.at(r, j) - &factor * m.at(row, j);
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column, in
    /// ascending free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<usize> = pivots.clone();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = rat_int(1);
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -r.at(prow, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse via Gauss-Jordan on the augmented matrix, if it exists.
    pub fn invert(&self) -> Option<MatQ> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = MatQ::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, rat_int(1));
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(MatQ::from_fn(n, n, |i, j| r.at(i, n + j).clone()))
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

pub fn add_scaled(target: &mut [Rat], src: &[Rat], c: &Rat) {
    assert_eq!(target.len(), src.len());
    if c.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(src) {
        if !s.is_zero() {
            *t += s * c;
        }
    }
}

/// A subspace of ℚ^ambient stored as reduced-echelon basis rows, so
/// membership tests and coordinate extraction are immediate and equality
/// of subspaces is literal equality of representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn empty(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let vectors = (0..ambient)
            .map(|i| {
                let mut v = vec![Rat::zero(); ambient];
                v[i] = rat_int(1);
                v
            })
            .collect();
        SubspaceBasis {
            ambient,
            vectors,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors(ambient: usize, vecs: &[Vec<Rat>]) -> Result<Self, CoreError> {
        for v in vecs {
            if v.len() != ambient {
                return Err(CoreError::Dim(format!(
                    "subspace vector length {} in ambient {ambient}",
                    v.len()
                )));
            }
        }
        if vecs.is_empty() {
            return Ok(SubspaceBasis::empty(ambient));
        }
        let (r, pivots) = MatQ::from_rows(vecs.to_vec()).rref();
        let vectors = (0..pivots.len()).map(|i| r.row_slice(i).to_vec()).collect();
        Ok(SubspaceBasis {
            ambient,
            vectors,
            pivots,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.vectors
    }

    /// Residual of `v` after eliminating against the echelon rows; zero iff
    /// `v` lies in the subspace.
    fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut w = v.to_vec();
        for (row, &p) in self.vectors.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if !c.is_zero() {
                add_scaled(&mut w, row, &(-c));
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        v.len() == self.ambient && is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    /// Because the basis is reduced echelon, the coordinate along row `k`
    /// is just `v[pivot_k]`.
    pub fn coords_of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if v.len() != self.ambient || !is_zero_vec(&self.reduce(v)) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Intersection via the kernel of the stacked coefficient matrix: a
    /// vector in both row spans is A^T s with (s, t) in the kernel of
    /// [A^T | -B^T].
    pub fn intersect(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, CoreError> {
        if self.ambient != other.ambient {
            return Err(CoreError::Dim(format!(
                "intersecting subspaces of ambients {} and {}",
                self.ambient, other.ambient
            )));
        }
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(SubspaceBasis::empty(self.ambient));
        }
        let a = self.dim();
        let stacked = MatQ::from_fn(self.ambient, a + other.dim(), |i, j| {
            if j < a {
                self.vectors[j][i].clone()
            } else {
                -other.vectors[j - a][i].clone()
            }
        });
        let mut out = Vec::new();
        for y in stacked.kernel_basis() {
            let mut x = vec![Rat::zero(); self.ambient];
            for (s, row) in y[..a].iter().zip(&self.vectors) {
                add_scaled(&mut x, row, s);
            }
            if !is_zero_vec(&x) {
                out.push(x);
            }
        }
        SubspaceBasis::from_vectors(self.ambient, &out)
    }

    /// Sum of the two subspaces.
    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, CoreError> {
        if self.ambient != other.ambient {
            return Err(CoreError::Dim(format!(
                "summing subspaces of ambients {} and {}",
                self.ambient, other.ambient
            )));
        }
        let mut all = self.vectors.clone();
        all.extend(other.vectors.iter().cloned());
        SubspaceBasis::from_vectors(self.ambient, &all)
    }
}

/// Matrix of `op` restricted to the invariant subspace `w`:
/// column k holds the `w`-coordinates of `op · w_k`.
fn restrict(op: &MatQ, w: &SubspaceBasis) -> Result<MatQ, CoreError> {
    let k = w.dim();
    let mut r = MatQ::zeros(k, k);
    for (col, wv) in w.basis().iter().enumerate() {
        let img = op.mul_vec(wv);
        let coords = w.coords_of(&img).ok_or_else(|| {
            CoreError::NonDiagonalizable(
                "operator does not preserve the refinement subspace".into(),
            )
        })?;
        for (row, c) in coords.into_iter().enumerate() {
            r.set(row, col, c);
        }
    }
    Ok(r)
}

/// Integer eigenvalues of `op` restricted to `w`, with ambient-space
/// eigenbasis per eigenvalue.  Errors unless the eigenspaces exhaust `w`.
fn integer_eigenspaces_in(
    op: &MatQ,
    w: &SubspaceBasis,
) -> Result<Vec<(i64, SubspaceBasis)>, CoreError> {
    let k = w.dim();
    if k == 0 {
        return Ok(Vec::new());
    }
    let r = restrict(op, w)?;
    // Gershgorin: every real eigenvalue is bounded by the largest absolute
    // row sum, so scanning integers in that window is exhaustive.
    let bound_rat: Rat = (0..k)
        .map(|i| -> Rat { r.row_slice(i).iter().map(Signed::abs).sum() })
        .max()
        .unwrap_or_else(Rat::zero);
    let bound: i64 = bound_rat
        .ceil()
        .to_integer()
        .to_i64()
        .ok_or_else(|| CoreError::NonDiagonalizable("eigenvalue bound overflow".into()))?;
    let mut found = 0usize;
    let mut out = Vec::new();
    for lam in -bound..=bound {
        if found == k {
            break;
        }
        let shifted = r.sub(&MatQ::identity(k).scale(&rat_int(lam)));
        let ker = shifted.kernel_basis();
        if ker.is_empty() {
            continue;
        }
        found += ker.len();
        let ambient_vecs: Vec<Vec<Rat>> = ker
            .iter()
            .map(|y| {
                let mut x = vec![Rat::zero(); w.ambient()];
                for (c, row) in y.iter().zip(w.basis()) {
                    add_scaled(&mut x, row, c);
                }
                x
            })
            .collect();
        out.push((lam, SubspaceBasis::from_vectors(w.ambient(), &ambient_vecs)?));
    }
    if found != k {
        return Err(CoreError::NonDiagonalizable(format!(
            "integer eigenspaces span {found} of {k} dimensions"
        )));
    }
    Ok(out)
}

/// Common eigenspace decomposition of a family of commuting operators with
/// integer spectra: returns (eigenvalue tuple, eigenspace) pairs sorted by
/// tuple, jointly spanning the ambient space.
pub fn simultaneous_eigenspaces(
    ops: &[MatQ],
    ambient: usize,
) -> Result<Vec<(Vec<i64>, SubspaceBasis)>, CoreError> {
    for op in ops {
        if op.rows() != ambient || op.cols() != ambient {
            return Err(CoreError::Dim(format!(
                "operator is {}x{}, ambient is {ambient}",
                op.rows(),
                op.cols()
            )));
        }
    }
    let mut parts = vec![(Vec::new(), SubspaceBasis::full(ambient))];
    for op in ops {
        let mut next = Vec::new();
        for (tuple, space) in parts {
            for (lam, sub) in integer_eigenspaces_in(op, &space)? {
                let mut t = tuple.clone();
                t.push(lam);
                next.push((t, sub));
            }
        }
        parts = next;
    }
    parts.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(parts)
}

/// Convenience: ceiling of |numerator/denominator| as BigInt, used by
/// callers that need crude magnitude bounds.
pub fn abs_ceil(r: &Rat) -> BigInt {
    r.abs().ceil().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> MatQ {
        MatQ::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_of_rank_two_example() {
        let (r, pivots) = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]).rref();
        assert_eq!(pivots, vec![0, 1], "two pivot columns expected");
        assert_eq!(r, m(&[&[1, 0, -1], &[0, 1, 2], &[0, 0, 0]]));
    }

    #[test]
    fn kernel_of_echelon_example() {
        let ker = m(&[&[1, 0, -1], &[0, 1, 2]]).kernel_basis();
        assert_eq!(ker, vec![vec![rat_int(1), rat_int(-2), rat_int(1)]]);
    }

    #[test]
    fn invert_two_by_two() {
        let inv = m(&[&[2, 1], &[1, 1]]).invert().expect("invertible");
        assert_eq!(inv, m(&[&[1, -1], &[-1, 2]]));
        assert!(m(&[&[1, 2], &[2, 4]]).invert().is_none(), "rank 1 has no inverse");
    }

    #[test]
    fn subspace_membership_and_coords() {
        let w = SubspaceBasis::from_vectors(
            3,
            &[
                vec![rat_int(1), rat_int(1), rat_int(0)],
                vec![rat_int(0), rat_int(1), rat_int(1)],
            ],
        )
        .unwrap();
        assert_eq!(w.dim(), 2);
        let v = vec![rat_int(2), rat_int(3), rat_int(1)];
        assert!(w.contains(&v));
        let coords = w.coords_of(&v).unwrap();
        let mut rebuilt = vec![Rat::zero(); 3];
        for (c, row) in coords.iter().zip(w.basis()) {
            add_scaled(&mut rebuilt, row, c);
        }
        assert_eq!(rebuilt, v, "coords must reconstruct the vector");
        assert!(!w.contains(&[rat_int(1), rat_int(0), rat_int(0)]));
    }

    #[test]
    fn plane_intersection_is_the_common_line() {
        let w1 = SubspaceBasis::from_vectors(
            3,
            &[
                vec![rat_int(1), rat_int(0), rat_int(0)],
                vec![rat_int(0), rat_int(1), rat_int(0)],
            ],
        )
        .unwrap();
        let w2 = SubspaceBasis::from_vectors(
            3,
            &[
                vec![rat_int(0), rat_int(1), rat_int(0)],
                vec![rat_int(0), rat_int(0), rat_int(1)],
            ],
        )
        .unwrap();
        let meet = w1.intersect(&w2).unwrap();
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains(&[rat_int(0), rat_int(1), rat_int(0)]));
    }

    #[test]
    fn simultaneous_eigenspaces_of_two_diagonals() {
        let op1 = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let op2 = m(&[&[3, 0, 0], &[0, 4, 0], &[0, 0, 4]]);
        let parts = simultaneous_eigenspaces(&[op1, op2], 3).unwrap();
        let tuples: Vec<Vec<i64>> = parts.iter().map(|(t, _)| t.clone()).collect();
        assert_eq!(tuples, vec![vec![1, 3], vec![1, 4], vec![2, 4]]);
        assert!(parts.iter().all(|(_, s)| s.dim() == 1));
    }

    #[test]
    fn non_semisimple_operator_is_rejected() {
        // Jordan block: only a 1-dim eigenspace for eigenvalue 0.
        let jordan = m(&[&[0, 1], &[0, 0]]);
        let err = simultaneous_eigenspaces(&[jordan], 2).unwrap_err();
        assert!(matches!(err, CoreError::NonDiagonalizable(_)));
    }

    #[test]
    fn fractional_entries_row_reduce_exactly() {
        let a = MatQ::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 4), rat(1, 6)],
        ]);
        assert_eq!(a.rank(), 1, "second row is half the first");
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(seed in prop::collection::vec(-5i64..=5, 12)) {
            let a = MatQ::from_rows(seed.chunks(4).map(|c| c.iter().map(|&x| rat_int(x)).collect()).collect());
            let (r, p) = a.rref();
            let (r2, p2) = r.rref();
            prop_assert_eq!(r, r2);
            prop_assert_eq!(p, p2);
        }

        #[test]
        fn kernel_vectors_are_killed(seed in prop::collection::vec(-4i64..=4, 12)) {
            let a = MatQ::from_rows(seed.chunks(6).map(|c| c.iter().map(|&x| rat_int(x)).collect()).collect());
            for v in a.kernel_basis() {
                prop_assert!(is_zero_vec(&a.mul_vec(&v)));
            }
            prop_assert_eq!(a.rank() + a.kernel_basis().len(), 6);
        }

        #[test]
        fn inverse_multiplies_to_identity(seed in prop::collection::vec(-5i64..=5, 9)) {
            let a = MatQ::from_rows(seed.chunks(3).map(|c| c.iter().map(|&x| rat_int(x)).collect()).collect());
            if let Some(inv) = a.invert() {
                prop_assert_eq!(a.mul(&inv), MatQ::identity(3));
                prop_assert_eq!(inv.mul(&a), MatQ::identity(3));
            }
        }
    }
}
