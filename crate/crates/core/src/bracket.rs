//! Sparse structure constants over a fixed ordered basis.
//!
//! A [`SparseBracket`] stores, per ordered basis pair (i, j), the coordinate
//! vector of [b_i, b_j].  Assembly fills *both* orientations independently so
//! that antisymmetry is a checkable property rather than a storage artifact;
//! imports that only carry the upper triangle get the lower one mirrored in.
//! Coordinate vectors here are sparse: sorted `(index, coefficient)` pairs
//! with no zero coefficients.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::CoreError;
use crate::scalars::Rat;

pub type SparseVec = Vec<(usize, Rat)>;

/// Sorted-merge of sparse coordinate vectors, dropping cancellations.
pub fn sv_add(a: &[(usize, Rat)], b: &[(usize, Rat)]) -> SparseVec {
    let mut acc: BTreeMap<usize, Rat> = a.iter().cloned().collect();
    for (k, c) in b {
        let slot = acc.entry(*k).or_insert_with(Rat::zero);
        *slot += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn sv_scale(a: &[(usize, Rat)], c: &Rat) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(k, v)| (*k, v * c)).collect()
}

pub fn sv_neg(a: &[(usize, Rat)]) -> SparseVec {
    a.iter().map(|(k, v)| (*k, -v.clone())).collect()
}

pub fn sv_unit(k: usize) -> SparseVec {
    vec![(k, Rat::from_integer(1.into()))]
}

pub fn sv_to_dense(a: &[(usize, Rat)], dim: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); dim];
    for (k, c) in a {
        out[*k] = c.clone();
    }
    out
}

pub fn sv_from_dense(a: &[Rat]) -> SparseVec {
    a.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseBracket {
    dim: usize,
    table: BTreeMap<(usize, usize), SparseVec>,
}

impl SparseBracket {
    pub fn new(dim: usize) -> Self {
        SparseBracket { dim, table: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Record [b_i, b_j]; the value is normalized and dropped when zero.
    pub fn set(&mut self, i: usize, j: usize, value: SparseVec) {
        assert!(i < self.dim && j < self.dim, "basis index in range");
        let norm: SparseVec = {
            let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
            for (k, c) in value {
                assert!(k < self.dim, "output index in range");
                *acc.entry(k).or_insert_with(Rat::zero) += c;
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        };
        if norm.is_empty() {
            self.table.remove(&(i, j));
        } else {
            self.table.insert((i, j), norm);
        }
    }

    /// [b_i, b_j] as stored; empty when the pair was never set (or zero).
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        self.table.get(&(i, j)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Bilinear extension to sparse coordinate vectors.
    pub fn apply(&self, x: &[(usize, Rat)], y: &[(usize, Rat)]) -> SparseVec {
        let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = a * b;
                for (k, c) in self.basis_bracket(*i, *j) {
                    *acc.entry(*k).or_insert_with(Rat::zero) += c * &ab;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Fill every absent (j, i) with the negation of a present (i, j).
    pub fn mirror_missing(&mut self) {
        let keys: Vec<(usize, usize)> = self.table.keys().cloned().collect();
        for (i, j) in keys {
            if i != j && !self.table.contains_key(&(j, i)) {
                let neg = sv_neg(&self.table[&(i, j)]);
                self.table.insert((j, i), neg);
            }
        }
    }

    /// Upper-triangle triples (i < j) in lexicographic order, for export.
    pub fn triples_upper(&self) -> Vec<(usize, usize, usize, Rat)> {
        let mut out = Vec::new();
        for ((i, j), v) in &self.table {
            if i < j {
                for (k, c) in v {
                    out.push((*i, *j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// Rebuild from upper-triangle triples; the lower triangle is mirrored.
    pub fn from_triples(
        dim: usize,
        triples: impl IntoIterator<Item = (usize, usize, usize, Rat)>,
    ) -> Result<Self, CoreError> {
        let mut acc: BTreeMap<(usize, usize), BTreeMap<usize, Rat>> = BTreeMap::new();
        for (i, j, k, c) in triples {
            if i >= j {
                return Err(CoreError::Schema(format!(
                    "structure triple ({i},{j},{k}) is not upper-triangular"
                )));
            }
            if j >= dim || k >= dim {
                return Err(CoreError::Schema(format!(
                    "structure triple ({i},{j},{k}) exceeds dimension {dim}"
                )));
            }
            *acc.entry((i, j)).or_default().entry(k).or_insert_with(Rat::zero) += c;
        }
        let mut table = SparseBracket::new(dim);
        for ((i, j), v) in acc {
            table.set(i, j, v.into_iter().collect());
        }
        table.mirror_missing();
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, rat_int};

    #[test]
    fn apply_is_bilinear_over_the_stored_table() {
        let mut br = SparseBracket::new(3);
        br.set(0, 1, vec![(2, rat_int(1))]);
        br.set(1, 0, vec![(2, rat_int(-1))]);
        let x = vec![(0, rat_int(2)), (1, rat_int(3))];
        let y = vec![(0, rat_int(1)), (1, rat_int(1))];
        // [2e0+3e1, e0+e1] = 2[e0,e1] + 3[e1,e0] = (2-3)e2.
        assert_eq!(br.apply(&x, &y), vec![(2, rat_int(-1))], "bilinearity with signs");
    }

    #[test]
    fn set_normalizes_and_drops_zero_values() {
        let mut br = SparseBracket::new(2);
        br.set(0, 1, vec![(0, rat(1, 2)), (0, rat(-1, 2)), (1, rat_int(0))]);
        assert!(br.basis_bracket(0, 1).is_empty(), "cancelling entries vanish");
    }

    #[test]
    fn round_trip_through_upper_triples_mirrors_the_rest() {
        let mut br = SparseBracket::new(4);
        br.set(0, 3, vec![(1, rat(5, 7))]);
        br.set(3, 0, vec![(1, rat(-5, 7))]);
        br.set(1, 2, vec![(0, rat_int(2)), (3, rat_int(-1))]);
        br.set(2, 1, vec![(0, rat_int(-2)), (3, rat_int(1))]);
        let back = SparseBracket::from_triples(4, br.triples_upper()).unwrap();
        assert_eq!(back, br, "export keeps i<j, import restores antisymmetry");
    }

    #[test]
    fn lower_triangular_triples_are_rejected() {
        let got = SparseBracket::from_triples(3, vec![(2, 1, 0, rat_int(1))]);
        assert!(matches!(got, Err(CoreError::Schema(_))), "i >= j must fail");
    }
}
