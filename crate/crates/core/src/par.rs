//! Thin switches between rayon-backed and sequential sweeps.
//!
//! The verification sweeps (Jacobi triples, law checks, tensor grids) are
//! embarrassingly parallel.  With the default `parallel` feature they run
//! on rayon's pool (sized by `RAYON_NUM_THREADS`); without it the same
//! helpers degrade to plain iteration, which keeps the sequential path
//! compiled and benchmarkable.  Both paths are deterministic: results keep
//! input order, and "first failure" means minimal index, not first finished.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over indices, preserving index order in the output.
#[cfg(feature = "parallel")]
pub fn par_map<T: Send, F: Fn(usize) -> T + Sync + Send>(n: usize, f: F) -> Vec<T> {
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, F: Fn(usize) -> T>(n: usize, f: F) -> Vec<T> {
    (0..n).map(f).collect()
}

/// Smallest index whose probe returns Some, with that payload.
#[cfg(feature = "parallel")]
pub fn find_first_failure<T: Send, F: Fn(usize) -> Option<T> + Sync + Send>(
    n: usize,
    f: F,
) -> Option<(usize, T)> {
    (0..n)
        .into_par_iter()
        .filter_map(|i| f(i).map(|t| (i, t)))
        .min_by_key(|(i, _)| *i)
}

#[cfg(not(feature = "parallel"))]
pub fn find_first_failure<T, F: Fn(usize) -> Option<T>>(n: usize, f: F) -> Option<(usize, T)> {
    (0..n).find_map(|i| f(i).map(|t| (i, t)))
}

/// Count of indices where the predicate fails, plus the minimal failing
/// payload; used by sweeps that report totals.
pub fn sweep_failures<T, F>(n: usize, f: F) -> (usize, Option<(usize, T)>)
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    let hits = par_map(n, |i| f(i).is_some() as usize);
    let count: usize = hits.iter().sum();
    let first = if count > 0 { find_first_failure(n, f) } else { None };
    (count, first)
}

/// Map over indices sequentially regardless of features; the benchmark
/// baseline against `par_map`.
pub fn seq_map<T, F: Fn(usize) -> T>(n: usize, f: F) -> Vec<T> {
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn par_map_preserves_order() {
        let got = par_map(100, |i| i * i);
        let want: Vec<usize> = (0..100).map(|i| i * i).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn first_failure_is_minimal_index() {
        let got = find_first_failure(1000, |i| if i % 7 == 3 { Some(i) } else { None });
        assert_eq!(got, Some((3, 3)), "index 3 is the first with residue 3 mod 7");
    }

    #[test]
    fn sweep_counts_all_failures() {
        let (count, first) = sweep_failures(50, |i| if i % 10 == 9 { Some(()) } else { None });
        assert_eq!(count, 5);
        assert_eq!(first.map(|(i, _)| i), Some(9));
    }
}
