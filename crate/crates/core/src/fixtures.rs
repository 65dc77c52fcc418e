//! Concrete classical Lie algebras presented by structure constants,
//! together with a designated Chevalley copy of sl(n+1).
//!
//! The three matrix families use split forms whose Gram/symplectic matrix
//! is off-diagonal-identity, so the natural sl(n+1) sits inside as
//! {diag(X, −Xᵗ)} and the designated Cartan is genuinely diagonal — ad
//! weights then come out of a simultaneous-eigenspace computation with
//! integer eigenvalues.
//!
//! * `Sp`       — sp_{2(n+1)}: blocks [[A, B], [C, −Aᵗ]], B, C symmetric
//! * `SoEven`   — so_{2(n+1)}: same blocks, B, C skew
//! * `SoOdd`    — so_{2(n+1)+1}: one extra column/row pair (two natural
//!   module copies on top of the even case)
//! * `CurrentDual` — sl(n+1) ⊗ ℚ[ε]/(ε²), no form at all
//!
//! Presentations carry the bracket as sparse structure constants plus the
//! images of e_k, f_k, h_k; `validate` re-checks the Jacobi identity and
//! the full Serre-presentation relations, so imported files do not get to
//! lie about being Lie.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bracket::{sv_add, sv_neg, sv_scale, sv_unit, SparseBracket, SparseVec};
use crate::error::CoreError;
use crate::linalg::MatQ;
use crate::par;
use crate::report::{CheckReport, FailureWitness};
use crate::scalars::{format_rat, parse_rat, rat_int, Rat};
use crate::slmodules::SlAlgebra;

pub const PRESENTATION_SCHEMA: &str = "liepres/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    Sp,
    SoEven,
    SoOdd,
    CurrentDual,
}

pub const ALL_FIXTURES: [FixtureKind; 4] =
    [FixtureKind::Sp, FixtureKind::SoEven, FixtureKind::SoOdd, FixtureKind::CurrentDual];

impl FixtureKind {
    pub fn name(self) -> &'static str {
        match self {
            FixtureKind::Sp => "sp",
            FixtureKind::SoEven => "so-even",
            FixtureKind::SoOdd => "so-odd",
            FixtureKind::CurrentDual => "current-dual",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CoreError> {
        ALL_FIXTURES
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| CoreError::Parse(format!("unknown fixture kind {s:?}")))
    }

    /// Dimension of the fixture at rank n.
    pub fn dim(self, n: usize) -> usize {
        let m = n + 1;
        match self {
            FixtureKind::Sp => m * (2 * m + 1),
            FixtureKind::SoEven => m * (2 * m - 1),
            FixtureKind::SoOdd => m * (2 * m + 1),
            FixtureKind::CurrentDual => 2 * (m * m - 1),
        }
    }
}

/// A Lie algebra given by structure constants over an unlabelled basis,
/// with the images of the Chevalley generators of the designated sl(n+1).
#[derive(Clone, Debug)]
pub struct LiePresentation {
    dim: usize,
    bracket: SparseBracket,
    gen_e: Vec<SparseVec>,
    gen_f: Vec<SparseVec>,
    gen_h: Vec<SparseVec>,
}

impl LiePresentation {
    pub fn new(
        dim: usize,
        bracket: SparseBracket,
        gen_e: Vec<SparseVec>,
        gen_f: Vec<SparseVec>,
        gen_h: Vec<SparseVec>,
    ) -> Result<Self, CoreError> {
        if bracket.dim() != dim {
            return Err(CoreError::Dim(format!(
                "structure table is over dimension {}, presentation says {dim}",
                bracket.dim()
            )));
        }
        let n = gen_e.len();
        if n == 0 || gen_f.len() != n || gen_h.len() != n {
            return Err(CoreError::Schema(format!(
                "generator lists must be three equal nonempty families, got e:{} f:{} h:{}",
                gen_e.len(),
                gen_f.len(),
                gen_h.len()
            )));
        }
        crate::check_rank(n)?;
        for v in gen_e.iter().chain(&gen_f).chain(&gen_h) {
            if v.iter().any(|(k, _)| *k >= dim) {
                return Err(CoreError::Schema(format!(
                    "generator coordinate index exceeds dimension {dim}"
                )));
            }
        }
        Ok(LiePresentation { dim, bracket, gen_e, gen_f, gen_h })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Rank of the designated sl(n+1).
    pub fn n(&self) -> usize {
        self.gen_e.len()
    }

    pub fn bracket(&self) -> &SparseBracket {
        &self.bracket
    }

    pub fn gen_e(&self, k: usize) -> &SparseVec {
        &self.gen_e[k]
    }

    pub fn gen_f(&self, k: usize) -> &SparseVec {
        &self.gen_f[k]
    }

    pub fn gen_h(&self, k: usize) -> &SparseVec {
        &self.gen_h[k]
    }

    /// The matrix of ad(v) on the presentation basis.
    pub fn ad_matrix(&self, v: &SparseVec) -> MatQ {
        let mut m = MatQ::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (i, c) in self.bracket.apply(v, &sv_unit(j)) {
                m.set(i, j, c);
            }
        }
        m
    }

    /// Jacobi identity plus the Serre presentation of the generators.
    pub fn validate(&self) -> Vec<CheckReport> {
        vec![self.check_jacobi(), self.check_serre()]
    }

    fn check_jacobi(&self) -> CheckReport {
        let dim = self.dim;
        let mut triples = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                for k in j + 1..dim {
                    triples.push((i, j, k));
                }
            }
        }
        let (failures, first) = par::sweep_failures(triples.len(), |idx| {
            let (i, j, k) = triples[idx];
            let t1 = self.bracket.apply(&sv_unit(i), self.bracket.basis_bracket(j, k));
            let t2 = self.bracket.apply(self.bracket.basis_bracket(i, j), &sv_unit(k));
            let t3 = self.bracket.apply(&sv_unit(j), self.bracket.basis_bracket(i, k));
            let r = sv_add(&sv_add(&t1, &sv_neg(&t2)), &sv_neg(&t3));
            if r.is_empty() {
                None
            } else {
                Some(FailureWitness {
                    witness: format!("basis triple ({i}, {j}, {k})"),
                    lhs: format!("jacobiator with {} terms", r.len()),
                    rhs: "0".into(),
                })
            }
        });
        CheckReport::from_sweep("presentation_jacobi", triples.len(), failures, first.map(|(_, w)| w))
    }

    fn check_serre(&self) -> CheckReport {
        let n = self.n();
        let cartan = |i: usize, j: usize| -> i64 {
            if i == j {
                2
            } else if i.abs_diff(j) == 1 {
                -1
            } else {
                0
            }
        };
        let mut checked = 0;
        let mut failures = 0;
        let mut first: Option<FailureWitness> = None;
        let mut note = |ok: bool, witness: &dyn Fn() -> FailureWitness| {
            checked += 1;
            if !ok {
                failures += 1;
                if first.is_none() {
                    first = Some(witness());
                }
            }
        };
        let is = |got: &SparseVec, want: &SparseVec| sv_add(got, &sv_neg(want)).is_empty();
        let zero: SparseVec = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let a = cartan(i, j);
                let hh = self.bracket.apply(&self.gen_h[i], &self.gen_h[j]);
                note(is(&hh, &zero), &|| FailureWitness {
                    witness: format!("[h_{}, h_{}]", i + 1, j + 1),
                    lhs: format!("{hh:?}"),
                    rhs: "0".into(),
                });
                let ef = self.bracket.apply(&self.gen_e[i], &self.gen_f[j]);
                let want_ef = if i == j { self.gen_h[i].clone() } else { zero.clone() };
                note(is(&ef, &want_ef), &|| FailureWitness {
                    witness: format!("[e_{}, f_{}]", i + 1, j + 1),
                    lhs: format!("{ef:?}"),
                    rhs: if i == j { format!("h_{}", i + 1) } else { "0".into() },
                });
                let he = self.bracket.apply(&self.gen_h[i], &self.gen_e[j]);
                note(is(&he, &sv_scale(&self.gen_e[j], &rat_int(a))), &|| FailureWitness {
                    witness: format!("[h_{}, e_{}]", i + 1, j + 1),
                    lhs: format!("{he:?}"),
                    rhs: format!("{a}·e_{}", j + 1),
                });
                let hf = self.bracket.apply(&self.gen_h[i], &self.gen_f[j]);
                note(is(&hf, &sv_scale(&self.gen_f[j], &rat_int(-a))), &|| FailureWitness {
                    witness: format!("[h_{}, f_{}]", i + 1, j + 1),
                    lhs: format!("{hf:?}"),
                    rhs: format!("{}·f_{}", -a, j + 1),
                });
                if i != j {
                    // (ad e_i)^{1-a_ij} e_j = 0, and the f-side twin.
                    let mut ee = self.bracket.apply(&self.gen_e[i], &self.gen_e[j]);
                    let mut ff = self.bracket.apply(&self.gen_f[i], &self.gen_f[j]);
                    if a == -1 {
                        ee = self.bracket.apply(&self.gen_e[i], &ee);
                        ff = self.bracket.apply(&self.gen_f[i], &ff);
                    }
                    note(is(&ee, &zero), &|| FailureWitness {
                        witness: format!("(ad e_{})^{} e_{}", i + 1, 1 - a, j + 1),
                        lhs: format!("{ee:?}"),
                        rhs: "0".into(),
                    });
                    note(is(&ff, &zero), &|| FailureWitness {
                        witness: format!("(ad f_{})^{} f_{}", i + 1, 1 - a, j + 1),
                        lhs: format!("{ff:?}"),
                        rhs: "0".into(),
                    });
                }
            }
        }
        CheckReport::from_sweep("presentation_serre", checked, failures, first)
    }

    pub fn to_json(&self) -> String {
        let gens = |v: &[SparseVec]| -> Vec<Vec<(usize, String)>> {
            v.iter()
                .map(|sv| sv.iter().map(|(k, c)| (*k, format_rat(c))).collect())
                .collect()
        };
        let file = PresentationFile {
            schema: PRESENTATION_SCHEMA.into(),
            dim: self.dim,
            structure: self
                .bracket
                .triples_upper()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, format_rat(&c)))
                .collect(),
            generators: GeneratorImages {
                e: gens(&self.gen_e),
                f: gens(&self.gen_f),
                h: gens(&self.gen_h),
            },
        };
        let mut s = serde_json::to_string_pretty(&file).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, CoreError> {
        let file: PresentationFile = serde_json::from_str(s)?;
        if file.schema != PRESENTATION_SCHEMA {
            return Err(CoreError::Schema(format!(
                "expected schema {PRESENTATION_SCHEMA:?}, got {:?}",
                file.schema
            )));
        }
        let mut triples = Vec::with_capacity(file.structure.len());
        for (i, j, k, c) in &file.structure {
            triples.push((*i, *j, *k, parse_rat(c)?));
        }
        let bracket = SparseBracket::from_triples(file.dim, triples)?;
        let parse_gens = |v: &[Vec<(usize, String)>]| -> Result<Vec<SparseVec>, CoreError> {
            v.iter()
                .map(|sv| {
                    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
                    for (k, c) in sv {
                        *acc.entry(*k).or_insert_with(Rat::zero) += parse_rat(c)?;
                    }
                    Ok(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
                })
                .collect()
        };
        LiePresentation::new(
            file.dim,
            bracket,
            parse_gens(&file.generators.e)?,
            parse_gens(&file.generators.f)?,
            parse_gens(&file.generators.h)?,
        )
    }
}

#[derive(Serialize, Deserialize)]
struct PresentationFile {
    schema: String,
    dim: usize,
    structure: Vec<(usize, usize, usize, String)>,
    generators: GeneratorImages,
}

#[derive(Serialize, Deserialize)]
struct GeneratorImages {
    e: Vec<Vec<(usize, String)>>,
    f: Vec<Vec<(usize, String)>>,
    h: Vec<Vec<(usize, String)>>,
}

/// Sparse square matrix as an entry list; the matrix fixtures only ever
/// touch a handful of entries per basis element.
type Ent = Vec<((usize, usize), Rat)>;

fn ent(entries: &[(usize, usize, i64)]) -> Ent {
    entries.iter().map(|&(i, j, c)| ((i, j), rat_int(c))).collect()
}

fn ent_mul(a: &Ent, b: &Ent) -> Ent {
    let mut acc: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
    for ((i, j), c) in a {
        for ((j2, k), d) in b {
            if j == j2 {
                *acc.entry((*i, *k)).or_insert_with(Rat::zero) += c * d;
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn ent_comm(a: &Ent, b: &Ent) -> Ent {
    let mut acc: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
    for ((i, j), c) in ent_mul(a, b) {
        *acc.entry((i, j)).or_insert_with(Rat::zero) += c;
    }
    for ((i, j), c) in ent_mul(b, a) {
        *acc.entry((i, j)).or_insert_with(Rat::zero) -= c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// A matrix Lie algebra with a chosen basis in which every element is read
/// off by one designated leading entry (coefficient 1 there, and no other
/// basis element leads at that position).
struct MatrixLie {
    basis: Vec<Ent>,
    lead: BTreeMap<(usize, usize), usize>,
}

impl MatrixLie {
    fn new(basis: Vec<(Ent, (usize, usize))>) -> Self {
        let mut lead = BTreeMap::new();
        let mut mats = Vec::with_capacity(basis.len());
        for (idx, (m, at)) in basis.into_iter().enumerate() {
            assert!(
                m.iter().any(|(p, c)| *p == at && *c == rat_int(1)),
                "leading entry must be present with coefficient 1"
            );
            let prev = lead.insert(at, idx);
            assert!(prev.is_none(), "leading entries must be distinct");
            mats.push(m);
        }
        MatrixLie { basis: mats, lead }
    }

    fn coords(&self, x: &Ent) -> SparseVec {
        let mut out: BTreeMap<usize, Rat> = BTreeMap::new();
        for (p, c) in x {
            if let Some(idx) = self.lead.get(p) {
                *out.entry(*idx).or_insert_with(Rat::zero) += c;
            }
        }
        // Reading leading entries only is complete: verify by rebuilding.
        let mut rebuilt: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
        for (idx, c) in &out {
            for (p, b) in &self.basis[*idx] {
                *rebuilt.entry(*p).or_insert_with(Rat::zero) += b * c;
            }
        }
        rebuilt.retain(|_, c| !c.is_zero());
        let given: BTreeMap<(usize, usize), Rat> =
            x.iter().filter(|(_, c)| !c.is_zero()).map(|(p, c)| (*p, c.clone())).collect();
        assert_eq!(rebuilt, given, "element must lie in the span of the fixture basis");
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    fn present(&self, n: usize, emb: impl Fn(Ent) -> Ent) -> Result<LiePresentation, CoreError> {
        let dim = self.basis.len();
        let pairs: Vec<(usize, usize)> =
            (0..dim).flat_map(|i| (i + 1..dim).map(move |j| (i, j))).collect();
        let coords = par::par_map(pairs.len(), |idx| {
            let (i, j) = pairs[idx];
            self.coords(&ent_comm(&self.basis[i], &self.basis[j]))
        });
        let mut triples = Vec::new();
        for (&(i, j), sv) in pairs.iter().zip(&coords) {
            for (k, c) in sv {
                triples.push((i, j, *k, c.clone()));
            }
        }
        let bracket = SparseBracket::from_triples(dim, triples)?;
        let unit = |i: usize, j: usize| ent(&[(i - 1, j - 1, 1)]);
        let mut gen_e = Vec::new();
        let mut gen_f = Vec::new();
        let mut gen_h = Vec::new();
        for k in 1..=n {
            gen_e.push(self.coords(&emb(unit(k, k + 1))));
            gen_f.push(self.coords(&emb(unit(k + 1, k))));
            let mut h = unit(k, k);
            h.push(((k, k), rat_int(-1)));
            gen_h.push(self.coords(&emb(h)));
        }
        LiePresentation::new(dim, bracket, gen_e, gen_f, gen_h)
    }
}

/// Transpose an m×m entry list and negate: A ↦ −Aᵗ.
fn neg_transpose(a: &Ent) -> Ent {
    a.iter().map(|((i, j), c)| ((*j, *i), -c.clone())).collect()
}

/// diag(A, −Aᵗ) with blocks of size m, entries shifted into the big space.
fn diag_embed(a: Ent, m: usize) -> Ent {
    let mut out = a.clone();
    for ((i, j), c) in neg_transpose(&a) {
        out.push(((i + m, j + m), c));
    }
    out
}

fn sp_fixture(n: usize) -> Result<LiePresentation, CoreError> {
    let m = n + 1;
    let mut basis = Vec::new();
    // gl block: diag(E_ij, −E_ji), leading entry (i, j).
    for i in 0..m {
        for j in 0..m {
            let e = vec![((i, j), rat_int(1)), ((m + j, m + i), rat_int(-1))];
            basis.push((e, (i, j)));
        }
    }
    // Symmetric upper-right block, leading entry (i, m+j) for i ≤ j.
    for i in 0..m {
        for j in i..m {
            let e = if i == j {
                vec![((i, m + i), rat_int(1))]
            } else {
                vec![((i, m + j), rat_int(1)), ((j, m + i), rat_int(1))]
            };
            basis.push((e, (i, m + j)));
        }
    }
    // Symmetric lower-left block.
    for i in 0..m {
        for j in i..m {
            let e = if i == j {
                vec![((m + i, i), rat_int(1))]
            } else {
                vec![((m + i, j), rat_int(1)), ((m + j, i), rat_int(1))]
            };
            basis.push((e, (m + i, j)));
        }
    }
    MatrixLie::new(basis).present(n, |a| diag_embed(a, m))
}

fn so_even_fixture(n: usize) -> Result<LiePresentation, CoreError> {
    let m = n + 1;
    let mut basis = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let e = vec![((i, j), rat_int(1)), ((m + j, m + i), rat_int(-1))];
            basis.push((e, (i, j)));
        }
    }
    // Skew blocks: β_ij = E_ij − E_ji inside the off-diagonal blocks, i < j.
    for i in 0..m {
        for j in i + 1..m {
            let e = vec![((i, m + j), rat_int(1)), ((j, m + i), rat_int(-1))];
            basis.push((e, (i, m + j)));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            let e = vec![((m + i, j), rat_int(1)), ((m + j, i), rat_int(-1))];
            basis.push((e, (m + i, j)));
        }
    }
    MatrixLie::new(basis).present(n, |a| diag_embed(a, m))
}

fn so_odd_fixture(n: usize) -> Result<LiePresentation, CoreError> {
    let m = n + 1;
    let last = 2 * m;
    let mut basis = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let e = vec![((i, j), rat_int(1)), ((m + j, m + i), rat_int(-1))];
            basis.push((e, (i, j)));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            let e = vec![((i, m + j), rat_int(1)), ((j, m + i), rat_int(-1))];
            basis.push((e, (i, m + j)));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            let e = vec![((m + i, j), rat_int(1)), ((m + j, i), rat_int(-1))];
            basis.push((e, (m + i, j)));
        }
    }
    // Natural-module columns: u in the top slot, its pairing twin below.
    for i in 0..m {
        let e = vec![((i, last), rat_int(1)), ((last, m + i), rat_int(-1))];
        basis.push((e, (i, last)));
    }
    for i in 0..m {
        let e = vec![((m + i, last), rat_int(1)), ((last, i), rat_int(-1))];
        basis.push((e, (m + i, last)));
    }
    MatrixLie::new(basis).present(n, |a| diag_embed(a, m))
}

fn current_dual_fixture(n: usize) -> Result<LiePresentation, CoreError> {
    let sl = SlAlgebra::new(n);
    let g = sl.dim();
    let dim = 2 * g;
    let mut triples = Vec::new();
    for a in 0..g {
        for b in a + 1..g {
            let coords = sl
                .coords_of_matrix(&crate::slmodules::bracket_m(&sl.basis()[a], &sl.basis()[b]))
                .expect("commutators of sl are traceless");
            for (k, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                // [g_a⊗1, g_b⊗1], [g_a⊗1, g_b⊗ε], [g_b⊗1, g_a⊗ε];
                // ε² kills the ε-ε pairs and mirroring fills the rest.
                triples.push((a, b, k, c.clone()));
                triples.push((a, g + b, g + k, c.clone()));
                triples.push((b, g + a, g + k, -c.clone()));
            }
        }
    }
    let bracket = SparseBracket::from_triples(dim, triples)?;
    let image = |x: &MatQ| -> SparseVec {
        sl.coords_of_matrix(x)
            .expect("generators are traceless")
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    };
    let gen_e = (1..=n).map(|k| image(&sl.e(k))).collect();
    let gen_f = (1..=n).map(|k| image(&sl.f(k))).collect();
    let gen_h = (1..=n).map(|k| image(&sl.h(k))).collect();
    LiePresentation::new(dim, bracket, gen_e, gen_f, gen_h)
}

/// Build one of the four classical fixtures at rank n (n ≥ 4).
pub fn fixture(kind: FixtureKind, n: usize) -> Result<LiePresentation, CoreError> {
    crate::check_rank(n)?;
    if n < 4 {
        return Err(CoreError::Rank(format!(
            "fixtures require rank n >= 4 (branching collapses below), got {n}"
        )));
    }
    match kind {
        FixtureKind::Sp => sp_fixture(n),
        FixtureKind::SoEven => so_even_fixture(n),
        FixtureKind::SoOdd => so_odd_fixture(n),
        FixtureKind::CurrentDual => current_dual_fixture(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_dimensions_match_the_classical_formulas() {
        for (kind, want) in
            [(FixtureKind::Sp, 55), (FixtureKind::SoEven, 45), (FixtureKind::SoOdd, 55), (FixtureKind::CurrentDual, 48)]
        {
            let lie = fixture(kind, 4).unwrap();
            assert_eq!(lie.dim(), want, "{} at rank 4", kind.name());
            assert_eq!(lie.dim(), kind.dim(4), "closed form agrees");
            assert_eq!(lie.n(), 4);
        }
    }

    #[test]
    fn every_fixture_validates_jacobi_and_serre() {
        for kind in ALL_FIXTURES {
            let lie = fixture(kind, 4).unwrap();
            for r in lie.validate() {
                assert!(r.is_pass(), "{} {}: {:?}", kind.name(), r.check, r.first_failure);
            }
        }
    }

    #[test]
    fn sp_spot_brackets_match_hand_computed_matrix_products() {
        let lie = fixture(FixtureKind::Sp, 4).unwrap();
        let m = 5;
        // Basis layout: gl (i,j) row-major at i*m+j, then the two symmetric
        // triangles (i ≤ j) at offsets 25 and 40.
        let gl = |i: usize, j: usize| i * m + j;
        let tri = |i: usize, j: usize| (0..i).map(|r| m - r).sum::<usize>() + (j - i);
        let s_up = |i: usize, j: usize| m * m + tri(i, j);
        let s_lo = |i: usize, j: usize| m * m + 15 + tri(i, j);

        // [diag(E_12, −E_21), diag(E_21, −E_12)] = diag(E_11 − E_22, ·).
        let v = lie.bracket().basis_bracket(gl(0, 1), gl(1, 0));
        assert_eq!(
            v,
            &[(gl(0, 0), rat_int(1)), (gl(1, 1), rat_int(-1))],
            "gl block keeps the matrix commutator"
        );

        // [[0,B],[0,0]] against [[0,0],[C,0]] gives diag(BC, −CB): with
        // B = C = E_11 that is diag(E_11, −E_11).
        let v = lie.bracket().basis_bracket(s_up(0, 0), s_lo(0, 0));
        assert_eq!(v, &[(gl(0, 0), rat_int(1))], "rank-one pairing lands in gl");

        // [diag(E_11, −E_11), σ_12] doubles nothing: E_11(E_12+E_21)
        // + (E_12+E_21)E_11 = E_12 + E_21.
        let v = lie.bracket().basis_bracket(gl(0, 0), s_up(0, 1));
        assert_eq!(v, &[(s_up(0, 1), rat_int(1))], "diagonal acts with weight one");

        // σ_11 and σ_12 sit in one symmetric block: they commute.
        let v = lie.bracket().basis_bracket(s_up(0, 0), s_up(0, 1));
        assert!(v.is_empty(), "the symmetric block is abelian");
    }

    #[test]
    fn so_odd_natural_columns_transform_as_the_natural_module() {
        let lie = fixture(FixtureKind::SoOdd, 4).unwrap();
        let m = 5;
        let gl = |i: usize, j: usize| i * m + j;
        let u_col = |i: usize| m * m + 10 + 10 + i;
        let v_col = |i: usize| m * m + 10 + 10 + m + i;
        // [diag(E_12, −E_21), u_2] = u_1 (left multiplication by E_12).
        let v = lie.bracket().basis_bracket(gl(0, 1), u_col(1));
        assert_eq!(v, &[(u_col(0), rat_int(1))], "u transforms by left action");
        // [diag(E_12, −E_21), v_1] = −v_2 (dual action).
        let v = lie.bracket().basis_bracket(gl(0, 1), v_col(0));
        assert_eq!(v, &[(v_col(1), rat_int(-1))], "v transforms by minus transpose");
        // [u_1, v_1] = −E_11 + E_66 in the big space, i.e. −diag(E_11, −E_11).
        let v = lie.bracket().basis_bracket(u_col(0), v_col(0));
        assert_eq!(v, &[(gl(0, 0), rat_int(-1))], "u against v pairs into gl");
    }

    #[test]
    fn current_dual_squares_epsilon_to_zero() {
        let lie = fixture(FixtureKind::CurrentDual, 4).unwrap();
        let g = 24;
        for a in 0..g {
            for b in 0..g {
                assert!(
                    lie.bracket().basis_bracket(g + a, g + b).is_empty(),
                    "ε² = 0 must kill ({a},{b})"
                );
            }
        }
        // Generators live in the ε⁰ copy.
        for k in 0..4 {
            assert!(lie.gen_e(k).iter().all(|(i, _)| *i < g), "e_{k} in the unit copy");
            assert!(lie.gen_h(k).iter().all(|(i, _)| *i < g), "h_{k} in the unit copy");
        }
    }

    #[test]
    fn presentation_json_round_trips_byte_stably() {
        let lie = fixture(FixtureKind::SoEven, 4).unwrap();
        let s = lie.to_json();
        let back = LiePresentation::from_json(&s).unwrap();
        assert_eq!(back.to_json(), s, "second serialization is identical");
        assert_eq!(back.dim(), lie.dim());
        assert_eq!(back.bracket(), lie.bracket());
        for k in 0..4 {
            assert_eq!(back.gen_e(k), lie.gen_e(k));
            assert_eq!(back.gen_f(k), lie.gen_f(k));
            assert_eq!(back.gen_h(k), lie.gen_h(k));
        }
    }

    #[test]
    fn a_perturbed_structure_constant_is_caught_by_validation() {
        let lie = fixture(FixtureKind::Sp, 4).unwrap();
        let mut file: serde_json::Value = serde_json::from_str(&lie.to_json()).unwrap();
        let triple = file["structure"][0].as_array_mut().unwrap();
        triple[3] = serde_json::Value::String("7/2".into());
        let tampered = LiePresentation::from_json(&serde_json::to_string(&file).unwrap()).unwrap();
        let reports = tampered.validate();
        assert!(
            reports.iter().any(|r| !r.is_pass()),
            "a bent constant must fail Jacobi or Serre"
        );
        let bad = reports.iter().find(|r| !r.is_pass()).unwrap();
        assert!(bad.first_failure.is_some(), "failure carries a witness");
    }

    #[test]
    fn fixtures_reject_out_of_window_ranks() {
        assert!(matches!(fixture(FixtureKind::Sp, 3), Err(CoreError::Rank(_))));
        assert!(matches!(fixture(FixtureKind::CurrentDual, 9), Err(CoreError::Rank(_))));
    }
}
