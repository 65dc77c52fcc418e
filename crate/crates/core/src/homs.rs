//! Explicit bases of the module homomorphism spaces Hom_𝔤(X⊗Y, Z).
//!
//! Every nonzero hom space between tensor products of the eight module
//! types (non-trivial factors) is 1-dimensional, except 𝔤⊗𝔤 → 𝔤 which is
//! 2-dimensional (commutator and traceless anticommutator).  The catalog
//! below lists one concrete matrix formula per dimension, and the checks
//! verify equivariance on every (Chevalley generator, basis pair)
//! combination, plus the dimension count against the multiplicity
//! computation and the independence of the two adjoint-valued maps.

use crate::linalg::MatQ;
use crate::par::sweep_failures;
use crate::report::{CheckReport, FailureWitness};
use crate::scalars::rat;
use crate::slmodules::{bracket_m, circ, MatrixModule, ModuleLabel, SlAlgebra};
use crate::tensor::multiplicity;

/// One basis map of Hom_𝔤(X⊗Y, Z), as a formula on model matrices.
pub struct HomEntry {
    pub id: &'static str,
    pub x: ModuleLabel,
    pub y: ModuleLabel,
    pub z: ModuleLabel,
    pub map: fn(&MatQ, &MatQ, usize) -> MatQ,
}

fn traceless(m: MatQ, n: usize) -> MatQ {
    let k = m.rows();
    let t = m.trace();
    m.sub(&MatQ::identity(k).scale(&(t * rat(1, (n + 1) as i64))))
}

fn scalar(v: crate::scalars::Rat) -> MatQ {
    MatQ::from_rows(vec![vec![v]])
}

fn trace_of_product(a: &MatQ, b: &MatQ) -> crate::scalars::Rat {
    a.mul(b).trace()
}

/// The full catalog: 29 maps spanning all nonzero hom spaces, each pair of
/// source factors listed in one order only.
pub fn catalog() -> Vec<HomEntry> {
    use ModuleLabel::*;
    vec![
        HomEntry { id: "g_g_to_g_bracket", x: Adjoint, y: Adjoint, z: Adjoint,
            map: |x, y, _| bracket_m(x, y) },
        HomEntry { id: "g_g_to_g_circ", x: Adjoint, y: Adjoint, z: Adjoint,
            map: |x, y, n| circ(x, y, n) },
        HomEntry { id: "v_vp_to_g", x: Nat, y: NatDual, z: Adjoint,
            map: |u, vp, n| traceless(u.mul(&vp.transpose()), n) },
        HomEntry { id: "s_lp_to_g", x: Sym, y: ExtDual, z: Adjoint,
            map: |s, lp, _| s.mul(lp) },
        HomEntry { id: "sp_l_to_g", x: SymDual, y: Ext, z: Adjoint,
            map: |sp, l, _| l.mul(sp) },
        HomEntry { id: "l_lp_to_g", x: Ext, y: ExtDual, z: Adjoint,
            map: |l, lp, n| traceless(l.mul(lp), n) },
        HomEntry { id: "s_sp_to_g", x: Sym, y: SymDual, z: Adjoint,
            map: |s, sp, n| traceless(s.mul(sp), n) },
        HomEntry { id: "g_v_to_v", x: Adjoint, y: Nat, z: Nat,
            map: |x, v, _| x.mul(v) },
        HomEntry { id: "l_vp_to_v", x: Ext, y: NatDual, z: Nat,
            map: |l, vp, _| l.mul(vp) },
        HomEntry { id: "s_vp_to_v", x: Sym, y: NatDual, z: Nat,
            map: |s, vp, _| s.mul(vp) },
        HomEntry { id: "g_vp_to_vp", x: Adjoint, y: NatDual, z: NatDual,
            map: |x, vp, _| x.transpose().mul(vp) },
        HomEntry { id: "sp_v_to_vp", x: SymDual, y: Nat, z: NatDual,
            map: |sp, v, _| sp.mul(v) },
        HomEntry { id: "lp_v_to_vp", x: ExtDual, y: Nat, z: NatDual,
            map: |lp, v, _| lp.mul(v) },
        HomEntry { id: "g_s_to_s", x: Adjoint, y: Sym, z: Sym,
            map: |x, s, _| x.mul(s).add(&s.mul(&x.transpose())) },
        HomEntry { id: "v_v_to_s", x: Nat, y: Nat, z: Sym,
            map: |u, v, _| u.mul(&v.transpose()).add(&v.mul(&u.transpose())) },
        HomEntry { id: "g_l_to_s", x: Adjoint, y: Ext, z: Sym,
            map: |x, l, _| x.mul(l).sub(&l.mul(&x.transpose())) },
        HomEntry { id: "sp_g_to_sp", x: SymDual, y: Adjoint, z: SymDual,
            map: |sp, x, _| sp.mul(x).add(&x.transpose().mul(sp)) },
        HomEntry { id: "vp_vp_to_sp", x: NatDual, y: NatDual, z: SymDual,
            map: |up, vp, _| up.mul(&vp.transpose()).add(&vp.mul(&up.transpose())) },
        HomEntry { id: "lp_g_to_sp", x: ExtDual, y: Adjoint, z: SymDual,
            map: |lp, x, _| lp.mul(x).sub(&x.transpose().mul(lp)) },
        HomEntry { id: "g_l_to_l", x: Adjoint, y: Ext, z: Ext,
            map: |x, l, _| x.mul(l).add(&l.mul(&x.transpose())) },
        HomEntry { id: "g_s_to_l", x: Adjoint, y: Sym, z: Ext,
            map: |x, s, _| x.mul(s).sub(&s.mul(&x.transpose())) },
        HomEntry { id: "v_v_to_l", x: Nat, y: Nat, z: Ext,
            map: |u, v, _| u.mul(&v.transpose()).sub(&v.mul(&u.transpose())) },
        HomEntry { id: "lp_g_to_lp", x: ExtDual, y: Adjoint, z: ExtDual,
            map: |lp, x, _| lp.mul(x).add(&x.transpose().mul(lp)) },
        HomEntry { id: "sp_g_to_lp", x: SymDual, y: Adjoint, z: ExtDual,
            map: |sp, x, _| sp.mul(x).sub(&x.transpose().mul(sp)) },
        HomEntry { id: "vp_vp_to_lp", x: NatDual, y: NatDual, z: ExtDual,
            map: |up, vp, _| up.mul(&vp.transpose()).sub(&vp.mul(&up.transpose())) },
        HomEntry { id: "g_g_to_t", x: Adjoint, y: Adjoint, z: Trivial,
            map: |x, y, n| scalar(trace_of_product(x, y) * rat(1, (n + 1) as i64)) },
        HomEntry { id: "vp_v_to_t", x: NatDual, y: Nat, z: Trivial,
            map: |vp, u, n| scalar(trace_of_product(u, &vp.transpose()) * rat(1, (n + 1) as i64)) },
        HomEntry { id: "s_sp_to_t", x: Sym, y: SymDual, z: Trivial,
            map: |s, sp, n| scalar(trace_of_product(s, sp) * rat(1, (n + 1) as i64)) },
        HomEntry { id: "l_lp_to_t", x: Ext, y: ExtDual, z: Trivial,
            map: |l, lp, n| scalar(trace_of_product(l, lp) * rat(1, (n + 1) as i64)) },
    ]
}

/// Literal variants that the catalog corrects: each is either non-
/// equivariant or claims a target the formula does not transform as.
/// Kept for negative controls.
pub fn literal_variants() -> Vec<HomEntry> {
    use ModuleLabel::*;
    vec![
        HomEntry { id: "literal_g_vp_to_vp", x: Adjoint, y: NatDual, z: NatDual,
            map: |x, vp, _| x.mul(vp) },
        HomEntry { id: "literal_lp_vp_to_vp", x: ExtDual, y: NatDual, z: NatDual,
            map: |lp, vp, _| lp.mul(vp) },
        HomEntry { id: "literal_lp_g_to_l", x: ExtDual, y: Adjoint, z: Ext,
            map: |lp, x, _| lp.mul(x).add(&x.transpose().mul(lp)) },
    ]
}

/// Sweep equivariance of one map: for every Chevalley generator g ∈
/// {e_k, f_k} and every basis pair, φ(g.u, v) + φ(u, g.v) = g.φ(u, v).
pub fn equivariance_check(entry: &HomEntry, n: usize) -> CheckReport {
    let sl = SlAlgebra::new(n);
    let xm = MatrixModule::new(entry.x, n);
    let ym = MatrixModule::new(entry.y, n);
    let zm = MatrixModule::new(entry.z, n);
    let gens: Vec<(String, MatQ)> = (1..=n)
        .flat_map(|k| [(format!("e{k}"), sl.e(k)), (format!("f{k}"), sl.f(k))])
        .collect();
    let xb: Vec<MatQ> = (0..xm.dim()).map(|i| xm.model_basis(i)).collect();
    let yb: Vec<MatQ> = (0..ym.dim()).map(|j| ym.model_basis(j)).collect();
    let total = gens.len() * xb.len() * yb.len();
    let (failures, first) = sweep_failures(total, |idx| {
        let g = idx / (xb.len() * yb.len());
        let rest = idx % (xb.len() * yb.len());
        let (i, j) = (rest / yb.len(), rest % yb.len());
        let gm = &gens[g].1;
        let lhs = (entry.map)(&xm.act_model(gm, &xb[i]), &yb[j], n)
            .add(&(entry.map)(&xb[i], &ym.act_model(gm, &yb[j]), n));
        let rhs = zm.act_model(gm, &(entry.map)(&xb[i], &yb[j], n));
        if lhs == rhs {
            None
        } else {
            Some(FailureWitness {
                witness: format!("{} on ({}, x{i}, y{j})", entry.id, gens[g].0),
                lhs: format!("{:?}", lhs.at(0, 0)),
                rhs: format!("{:?}", rhs.at(0, 0)),
            })
        }
    });
    CheckReport::from_sweep(
        format!("hom_equivariance_{}", entry.id),
        total,
        failures,
        first.map(|(_, w)| w),
    )
}

/// The number of catalog maps for each (X, Y, Z) triple equals the
/// multiplicity of Z in X⊗Y.
pub fn dimension_count_check(n: usize) -> CheckReport {
    let mut counts: std::collections::BTreeMap<(ModuleLabel, ModuleLabel, ModuleLabel), usize> =
        std::collections::BTreeMap::new();
    for e in catalog() {
        *counts.entry((e.x, e.y, e.z)).or_insert(0) += 1;
    }
    let mut checked = 0;
    for (&(x, y, z), &listed) in &counts {
        checked += 1;
        let m = multiplicity(x, y, z, n);
        if m != listed {
            return CheckReport::fail(
                format!("hom_dimension_counts_n{n}"),
                checked,
                1,
                FailureWitness {
                    witness: format!("{}⊗{} → {}", x.short_name(), y.short_name(), z.short_name()),
                    lhs: format!("listed {listed}"),
                    rhs: format!("multiplicity {m}"),
                },
            );
        }
    }
    CheckReport::pass(format!("hom_dimension_counts_n{n}"), checked)
}

/// The commutator and the traceless anticommutator span a 2-dimensional
/// space: stack their values on a few basis pairs and demand rank 2.
pub fn independence_check(n: usize) -> CheckReport {
    let cat = catalog();
    let bracket = &cat[0];
    let circ_map = &cat[1];
    let gm = MatrixModule::new(ModuleLabel::Adjoint, n);
    // Probe off-diagonal basis vectors (the first two are E12 and E21);
    // Cartan pairs alone would make every bracket vanish.
    let probe = [n, 2 * n];
    let mut rows = vec![Vec::new(), Vec::new()];
    for i in probe {
        for j in probe {
            let (a, b) = (gm.model_basis(i), gm.model_basis(j));
            for (slot, entry) in [(0, bracket), (1, circ_map)] {
                let val = (entry.map)(&a, &b, n);
                for r in 0..val.rows() {
                    for c in 0..val.cols() {
                        rows[slot].push(val.at(r, c).clone());
                    }
                }
            }
        }
    }
    let rank = MatQ::from_rows(rows).rank();
    if rank == 2 {
        CheckReport::pass(format!("hom_independence_g_g_n{n}"), probe.len().pow(2))
    } else {
        CheckReport::fail(
            format!("hom_independence_g_g_n{n}"),
            probe.len().pow(2),
            1,
            FailureWitness {
                witness: "bracket vs circ".into(),
                lhs: format!("rank {rank}"),
                rhs: "rank 2".into(),
            },
        )
    }
}

/// The complete hom verification: per-map equivariance, dimension counts,
/// independence of the two adjoint-valued maps.
pub fn verify_hom_basis(n: usize) -> Vec<CheckReport> {
    let mut reports: Vec<CheckReport> =
        catalog().iter().map(|e| equivariance_check(e, n)).collect();
    reports.push(dimension_count_check(n));
    reports.push(independence_check(n));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat_int;
    use num_traits::Zero;

    #[test]
    fn every_catalog_map_is_equivariant_at_rank_four() {
        for entry in catalog() {
            let r = equivariance_check(&entry, 4);
            assert!(r.is_pass(), "{}: {:?}", entry.id, r.first_failure);
        }
    }

    #[test]
    fn every_catalog_map_is_equivariant_at_rank_six() {
        for entry in catalog() {
            let r = equivariance_check(&entry, 6);
            assert!(r.is_pass(), "{}: {:?}", entry.id, r.first_failure);
        }
    }

    #[test]
    fn literal_variants_fail_equivariance() {
        for entry in literal_variants() {
            let r = equivariance_check(&entry, 4);
            assert!(
                !r.is_pass(),
                "{} should not be equivariant as printed",
                entry.id
            );
        }
    }

    #[test]
    fn catalog_counts_match_multiplicities() {
        for n in [4, 6] {
            let r = dimension_count_check(n);
            assert!(r.is_pass(), "n={n}: {:?}", r.first_failure);
        }
    }

    #[test]
    fn catalog_covers_every_nonzero_hom_space() {
        // At n = 6 every (X, Y, Z) with nonzero multiplicity and
        // non-trivial factors must appear in the catalog in some order.
        use crate::slmodules::ALL_LABELS;
        let cat = catalog();
        for x in ALL_LABELS {
            for y in ALL_LABELS {
                if x == ModuleLabel::Trivial || y == ModuleLabel::Trivial {
                    continue;
                }
                for z in ALL_LABELS {
                    let m = multiplicity(x, y, z, 6);
                    if m == 0 {
                        continue;
                    }
                    let listed = cat
                        .iter()
                        .filter(|e| {
                            (e.x == x && e.y == y && e.z == z)
                                || (e.x == y && e.y == x && e.z == z)
                        })
                        .count();
                    assert_eq!(
                        listed,
                        m,
                        "{}⊗{} → {} has multiplicity {m}",
                        x.short_name(),
                        y.short_name(),
                        z.short_name()
                    );
                }
            }
        }
    }

    #[test]
    fn bracket_and_circ_are_independent() {
        for n in [4, 6] {
            assert!(independence_check(n).is_pass());
        }
    }

    #[test]
    fn trace_pairing_matches_the_trace_form() {
        // v_vp_to_g composed with the trace recovers the V×V′ pairing.
        let cat = catalog();
        let entry = cat.iter().find(|e| e.id == "v_vp_to_g").unwrap();
        let u = MatQ::from_fn(5, 1, |i, _| rat_int((i == 0) as i64));
        let vp = MatQ::from_fn(5, 1, |i, _| rat_int((i == 0) as i64));
        let out = (entry.map)(&u, &vp, 4);
        assert!(out.trace().is_zero(), "projected to traceless matrices");
        assert_eq!(out.at(0, 0), &rat(4, 5), "E11 - I/5 top entry");
    }

    #[test]
    fn full_verification_passes_at_rank_four() {
        for r in verify_hom_basis(4) {
            assert!(r.is_pass(), "{}: {:?}", r.check, r.first_failure);
        }
    }
}
