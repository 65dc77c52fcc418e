//! Assembly of the graded Lie algebra from coordinate data.
//!
//! The algebra is  L = 𝔤⊗A ⊕ V⊗B ⊕ V′⊗B′ ⊕ S⊗C ⊕ S′⊗C′ ⊕ Λ⊗E ⊕ Λ′⊗E′ ⊕ D
//! over 𝔤 = sl(n+1).  Brackets are assembled block pair by block pair from
//! the stored product tensors: every 𝔞-side pair goes through one routing
//! rule (the trace/∘ variant on the six distinguished tag pairs, the ⋄
//! variant elsewhere), the B-rows through the one-sided module actions, and
//! the V×V′ pair splits a rank-one matrix into its traceless symmetric,
//! skew, and scalar parts.  The 𝔤⊗A block keeps the *unsplit* basis
//! g_i ⊗ â_j; internally g_i decomposes into its symmetric half (paired
//! with A⁻ coordinates) and skew half (paired with A⁺), and outputs are
//! re-encoded through M_j = M⁻_j + M⁺_j.
//!
//! Assembly evaluates both orientations of every pair independently where
//! the formulas allow it, so `check_anticommutativity` really tests the
//! symmetry properties of the data instead of a storage convention.
//! `check_jacobi` sweeps basis triples (all of them, or a seeded sample
//! plus every triple meeting the 𝔤⊗1 copy), and `check_grading` verifies
//! the weight axioms: ad(h)-eigenvectors with weights in Â_n, weight
//! additivity of the bracket, the zero-weight space inside Σ[L_w, L_{−w}],
//! and L generated as an ideal by the 𝔤 copy.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::bracket::{
    sv_add, sv_from_dense, sv_to_dense, sv_unit, SparseBracket, SparseVec,
};
use crate::coordalg::{ComponentTag, CoordAlgebraData, ProductKind};
use crate::error::CoreError;
use crate::linalg::{MatQ, SubspaceBasis};
use crate::par;
use crate::report::{CheckReport, FailureWitness};
use crate::scalars::{format_rat, parse_rat, rat, rat_int, Rat};
use crate::slmodules::{
    bracket_m, circ, diamond, in_ahat, trace_form, MatrixModule, ModuleLabel, SlAlgebra, Weight,
};

pub const GRADED_SCHEMA: &str = "gradedlie/1";

/// The eight blocks of the decomposition, in storage order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieTag {
    GA,
    VB,
    VpBp,
    SC,
    SpCp,
    LE,
    LpEp,
    D,
}

pub const ALL_LIE_TAGS: [LieTag; 8] = [
    LieTag::GA,
    LieTag::VB,
    LieTag::VpBp,
    LieTag::SC,
    LieTag::SpCp,
    LieTag::LE,
    LieTag::LpEp,
    LieTag::D,
];

impl LieTag {
    pub fn name(self) -> &'static str {
        match self {
            LieTag::GA => "gA",
            LieTag::VB => "VB",
            LieTag::VpBp => "V'B'",
            LieTag::SC => "SC",
            LieTag::SpCp => "S'C'",
            LieTag::LE => "LE",
            LieTag::LpEp => "L'E'",
            LieTag::D => "D",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CoreError> {
        ALL_LIE_TAGS
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| CoreError::Parse(format!("unknown block tag {s:?}")))
    }

    /// The sl(n+1)-module carried by the block; `None` for D.
    pub fn module_label(self) -> Option<ModuleLabel> {
        match self {
            LieTag::GA => Some(ModuleLabel::Adjoint),
            LieTag::VB => Some(ModuleLabel::Nat),
            LieTag::VpBp => Some(ModuleLabel::NatDual),
            LieTag::SC => Some(ModuleLabel::Sym),
            LieTag::SpCp => Some(ModuleLabel::SymDual),
            LieTag::LE => Some(ModuleLabel::Ext),
            LieTag::LpEp => Some(ModuleLabel::ExtDual),
            LieTag::D => None,
        }
    }

    /// The coordinate component indexing the block.  GA spans the A⁺/A⁻
    /// pair (equal dimensions), so it has no single tag; D indexes itself.
    pub fn coord_tag(self) -> Option<ComponentTag> {
        match self {
            LieTag::GA | LieTag::D => None,
            LieTag::VB => Some(ComponentTag::B),
            LieTag::VpBp => Some(ComponentTag::Bprime),
            LieTag::SC => Some(ComponentTag::C),
            LieTag::SpCp => Some(ComponentTag::Cprime),
            LieTag::LE => Some(ComponentTag::E),
            LieTag::LpEp => Some(ComponentTag::Eprime),
        }
    }

    fn module_dim(self, n: usize) -> usize {
        match self.module_label() {
            Some(l) => l.dim(n),
            None => 1,
        }
    }

    fn coord_dim(self, data: &CoordAlgebraData) -> usize {
        match self {
            LieTag::GA => data.dim(ComponentTag::Aplus),
            LieTag::D => data.dim(ComponentTag::D),
            t => data.dim(t.coord_tag().expect("module block")),
        }
    }
}

#[derive(Clone, Debug)]
struct BlockMeta {
    tag: LieTag,
    module_dim: usize,
    coord_dim: usize,
    offset: usize,
}

/// A finite-dimensional Lie algebra with the block-indexed basis, exact
/// sparse structure constants, and the images of the Cartan generators.
#[derive(Clone, Debug)]
pub struct GradedLie {
    n: usize,
    blocks: Vec<BlockMeta>,
    basis: Vec<(LieTag, usize, usize)>,
    weights: Vec<Weight>,
    bracket: SparseBracket,
    cartan: Vec<SparseVec>,
    /// Images of the full ordered sl(n+1) basis under x ↦ x⊗1; present on
    /// assembled algebras, absent after JSON import.
    unit_embedding: Option<Vec<SparseVec>>,
}

impl GradedLie {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(LieTag, usize, usize)] {
        &self.basis
    }

    pub fn weight(&self, idx: usize) -> &Weight {
        &self.weights[idx]
    }

    pub fn bracket(&self) -> &SparseBracket {
        &self.bracket
    }

    pub fn cartan_images(&self) -> &[SparseVec] {
        &self.cartan
    }

    pub fn unit_embedding(&self) -> Option<&[SparseVec]> {
        self.unit_embedding.as_deref()
    }

    /// (module_dim, coord_dim) of a block; (_, 0) when the block is empty.
    pub fn block_dims(&self, tag: LieTag) -> (usize, usize) {
        let b = self.block(tag);
        (b.module_dim, b.coord_dim)
    }

    fn block(&self, tag: LieTag) -> &BlockMeta {
        self.blocks.iter().find(|b| b.tag == tag).expect("all eight blocks present")
    }

    /// Basis position of (tag, module index, coordinate index).
    pub fn index_of(&self, tag: LieTag, m: usize, c: usize) -> usize {
        let b = self.block(tag);
        assert!(m < b.module_dim && c < b.coord_dim, "block index in range");
        b.offset + m * b.coord_dim + c
    }

    pub fn describe_basis(&self, idx: usize) -> String {
        let (t, m, c) = self.basis[idx];
        format!("{}[{m},{c}]", t.name())
    }

    pub fn describe_vec(&self, v: &[(usize, Rat)]) -> String {
        if v.is_empty() {
            return "0".into();
        }
        v.iter()
            .map(|(k, c)| format!("{}·{}", format_rat(c), self.describe_basis(*k)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// [x, [y, z]] − [[x, y], z] − [y, [x, z]] on basis indices.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> SparseVec {
        let t1 = self.bracket.apply(&sv_unit(i), self.bracket.basis_bracket(j, k));
        let t2 = self.bracket.apply(self.bracket.basis_bracket(i, j), &sv_unit(k));
        let t3 = self.bracket.apply(&sv_unit(j), self.bracket.basis_bracket(i, k));
        let mut out = t1;
        for (idx, c) in t2.into_iter().chain(t3) {
            out = sv_add(&out, &[(idx, -c)]);
        }
        out
    }

    pub fn to_json(&self) -> String {
        let file = GradedFile {
            schema: GRADED_SCHEMA.into(),
            n: self.n,
            basis: self
                .basis
                .iter()
                .map(|(t, m, c)| (t.name().to_string(), *m, *c))
                .collect(),
            structure: self
                .bracket
                .triples_upper()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, format_rat(&c)))
                .collect(),
            cartan: self
                .cartan
                .iter()
                .map(|v| v.iter().map(|(k, c)| (*k, format_rat(c))).collect())
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, CoreError> {
        let file: GradedFile = serde_json::from_str(s)?;
        if file.schema != GRADED_SCHEMA {
            return Err(CoreError::Schema(format!(
                "expected schema {GRADED_SCHEMA:?}, got {:?}",
                file.schema
            )));
        }
        let n = file.n;
        crate::check_rank(n)?;
        let mut parsed = Vec::with_capacity(file.basis.len());
        let mut counts: BTreeMap<LieTag, usize> = ALL_LIE_TAGS.iter().map(|t| (*t, 0)).collect();
        for (name, m, c) in &file.basis {
            let tag = LieTag::parse(name)?;
            *counts.get_mut(&tag).unwrap() += 1;
            parsed.push((tag, *m, *c));
        }
        let mut blocks = Vec::new();
        let mut offset = 0;
        for tag in ALL_LIE_TAGS {
            let module_dim = tag.module_dim(n);
            let count = counts[&tag];
            if count % module_dim != 0 {
                return Err(CoreError::Schema(format!(
                    "{} basis count {count} is not a multiple of the module dimension {module_dim}",
                    tag.name()
                )));
            }
            blocks.push(BlockMeta { tag, module_dim, coord_dim: count / module_dim, offset });
            offset += count;
        }
        let expected = enumerate_basis(&blocks);
        if parsed != expected {
            return Err(CoreError::Schema(
                "basis list is not in canonical block/module/coordinate order".into(),
            ));
        }
        let dim = parsed.len();
        let weights = basis_weights(n, &blocks, &parsed);
        let mut triples = Vec::with_capacity(file.structure.len());
        for (i, j, k, c) in &file.structure {
            triples.push((*i, *j, *k, parse_rat(c)?));
        }
        let bracket = SparseBracket::from_triples(dim, triples)?;
        if file.cartan.len() != n {
            return Err(CoreError::Schema(format!(
                "cartan must list {n} images, got {}",
                file.cartan.len()
            )));
        }
        let mut cartan = Vec::with_capacity(n);
        for img in &file.cartan {
            let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
            for (idx, c) in img {
                if *idx >= dim {
                    return Err(CoreError::Schema(format!(
                        "cartan index {idx} exceeds dimension {dim}"
                    )));
                }
                *acc.entry(*idx).or_insert_with(Rat::zero) += parse_rat(c)?;
            }
            cartan.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        }
        Ok(GradedLie {
            n,
            blocks,
            basis: parsed,
            weights,
            bracket,
            cartan,
            unit_embedding: None,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct GradedFile {
    schema: String,
    n: usize,
    basis: Vec<(String, usize, usize)>,
    structure: Vec<(usize, usize, usize, String)>,
    cartan: Vec<Vec<(usize, String)>>,
}

fn enumerate_basis(blocks: &[BlockMeta]) -> Vec<(LieTag, usize, usize)> {
    let mut out = Vec::new();
    for b in blocks {
        for m in 0..b.module_dim {
            for c in 0..b.coord_dim {
                out.push((b.tag, m, c));
            }
        }
    }
    out
}

fn basis_weights(
    n: usize,
    blocks: &[BlockMeta],
    basis: &[(LieTag, usize, usize)],
) -> Vec<Weight> {
    let modules: BTreeMap<LieTag, MatrixModule> = blocks
        .iter()
        .filter_map(|b| b.tag.module_label().map(|l| (b.tag, MatrixModule::new(l, n))))
        .collect();
    basis
        .iter()
        .map(|(t, m, _)| match modules.get(t) {
            Some(module) => module.basis_weight(*m),
            None => Weight::zero(n),
        })
        .collect()
}

/// The six tag pairs whose 𝔞-products use the traceless ∘ carrier and may
/// feed the D-valued form; every other pair uses the plain ⋄ carrier and
/// has no scalar term.
pub(crate) fn trace_routed(t1: ComponentTag, t2: ComponentTag) -> bool {
    use ComponentTag::*;
    matches!(
        (t1, t2),
        (Aplus, Aplus) | (Aminus, Aminus) | (C, Cprime) | (Cprime, C) | (E, Eprime) | (Eprime, E)
    )
}

fn unitv(len: usize, idx: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); len];
    v[idx] = rat_int(1);
    v
}

fn column_coords(m: &MatQ) -> Vec<Rat> {
    (0..m.rows()).map(|i| m.at(i, 0).clone()).collect()
}

enum BlockKind {
    ASide,
    Nat,
    NatDual,
    Der,
}

fn kind(tag: LieTag) -> BlockKind {
    match tag {
        LieTag::GA | LieTag::SC | LieTag::SpCp | LieTag::LE | LieTag::LpEp => BlockKind::ASide,
        LieTag::VB => BlockKind::Nat,
        LieTag::VpBp => BlockKind::NatDual,
        LieTag::D => BlockKind::Der,
    }
}

struct Assembler<'a> {
    data: &'a CoordAlgebraData,
    n: usize,
    sl: SlAlgebra,
    blocks: Vec<BlockMeta>,
    basis: Vec<(LieTag, usize, usize)>,
    /// Per adjoint basis index: the nonzero halves (A⁻ with the symmetric
    /// part, A⁺ with the skew part).
    ga_parts: Vec<Vec<(ComponentTag, MatQ)>>,
    /// Model basis matrices (or columns) for the non-GA module blocks.
    carriers: BTreeMap<LieTag, Vec<MatQ>>,
    modules: BTreeMap<LieTag, MatrixModule>,
    ident: MatQ,
}

type Acc = BTreeMap<usize, Rat>;

impl<'a> Assembler<'a> {
    fn new(data: &'a CoordAlgebraData) -> Self {
        let n = data.n();
        let sl = SlAlgebra::new(n);
        let mut blocks = Vec::new();
        let mut offset = 0;
        for tag in ALL_LIE_TAGS {
            let module_dim = tag.module_dim(n);
            let coord_dim = tag.coord_dim(data);
            blocks.push(BlockMeta { tag, module_dim, coord_dim, offset });
            offset += module_dim * coord_dim;
        }
        let basis = enumerate_basis(&blocks);
        let half = rat(1, 2);
        let mut ga_parts = Vec::with_capacity(sl.dim());
        for g in sl.basis() {
            let gt = g.transpose();
            let sym = g.add(&gt).scale(&half);
            let skew = g.sub(&gt).scale(&half);
            let mut parts = Vec::new();
            if !sym.is_zero() {
                parts.push((ComponentTag::Aminus, sym));
            }
            if !skew.is_zero() {
                parts.push((ComponentTag::Aplus, skew));
            }
            ga_parts.push(parts);
        }
        let mut carriers = BTreeMap::new();
        let mut modules = BTreeMap::new();
        for tag in ALL_LIE_TAGS {
            if let Some(label) = tag.module_label() {
                let module = MatrixModule::new(label, n);
                if tag != LieTag::GA {
                    carriers.insert(tag, (0..module.dim()).map(|i| module.model_basis(i)).collect());
                }
                modules.insert(tag, module);
            }
        }
        let ident = MatQ::identity(n + 1);
        Assembler { data, n, sl, blocks, basis, ga_parts, carriers, modules, ident }
    }

    fn block(&self, tag: LieTag) -> &BlockMeta {
        self.blocks.iter().find(|b| b.tag == tag).expect("block present")
    }

    /// Split a basis element of an 𝔞-side block into tagged matrix parts.
    fn parts_of(&self, tag: LieTag, m: usize) -> Vec<(ComponentTag, &MatQ)> {
        match tag {
            LieTag::GA => self.ga_parts[m].iter().map(|(t, z)| (*t, z)).collect(),
            LieTag::D => panic!("D has no carrier"),
            t => {
                let ct = t.coord_tag().expect("module block");
                vec![(ct, &self.carriers[&t][m])]
            }
        }
    }

    fn coord_unit(&self, tag: ComponentTag, idx: usize) -> Vec<Rat> {
        unitv(self.data.dim(tag), idx)
    }

    fn add_component(&self, acc: &mut Acc, tag: ComponentTag, carrier: &MatQ, coeff: &[Rat]) {
        if coeff.iter().all(Zero::is_zero) {
            return;
        }
        use ComponentTag::*;
        let (lt, coords) = match tag {
            Aplus | Aminus => (
                LieTag::GA,
                self.sl
                    .coords_of_matrix(carrier)
                    .expect("assembled 𝔤-carriers are traceless"),
            ),
            B => (LieTag::VB, column_coords(carrier)),
            Bprime => (LieTag::VpBp, column_coords(carrier)),
            C => (
                LieTag::SC,
                self.modules[&LieTag::SC].coords_of_model(carrier).expect("symmetric carrier"),
            ),
            Cprime => (
                LieTag::SpCp,
                self.modules[&LieTag::SpCp].coords_of_model(carrier).expect("symmetric carrier"),
            ),
            E => (
                LieTag::LE,
                self.modules[&LieTag::LE].coords_of_model(carrier).expect("skew carrier"),
            ),
            Eprime => (
                LieTag::LpEp,
                self.modules[&LieTag::LpEp].coords_of_model(carrier).expect("skew carrier"),
            ),
            D => unreachable!("D-valued output goes through add_d"),
        };
        let b = self.block(lt);
        for (mi, mc) in coords.iter().enumerate() {
            if mc.is_zero() {
                continue;
            }
            for (cj, cc) in coeff.iter().enumerate() {
                if cc.is_zero() {
                    continue;
                }
                *acc.entry(b.offset + mi * b.coord_dim + cj).or_insert_with(Rat::zero) += mc * cc;
            }
        }
    }

    fn add_d(&self, acc: &mut Acc, coeff: &[Rat]) {
        let b = self.block(LieTag::D);
        for (k, c) in coeff.iter().enumerate() {
            if !c.is_zero() {
                *acc.entry(b.offset + k).or_insert_with(Rat::zero) += c;
            }
        }
    }

    /// Bracket of two 𝔞-side basis elements through the product tensors:
    /// bracket coefficients ride the ∘/⋄ carrier, circ coefficients the
    /// commutator carrier, and the six trace-routed pairs add the D-form.
    fn aa(&self, acc: &mut Acc, l: (LieTag, usize, usize), r: (LieTag, usize, usize)) {
        let half = rat(1, 2);
        for (t1, z1) in self.parts_of(l.0, l.1) {
            let e1 = self.coord_unit(t1, l.2);
            for (t2, z2) in self.parts_of(r.0, r.1) {
                let e2 = self.coord_unit(t2, r.2);
                let traced = trace_routed(t1, t2);
                if let Some((ot, t)) = self.data.tensor(t1, t2, ProductKind::Bracket) {
                    let w: Vec<Rat> = t.apply(&e1, &e2).into_iter().map(|c| c * &half).collect();
                    let carrier =
                        if traced { circ(z1, z2, self.n) } else { diamond(z1, z2) };
                    self.add_component(acc, ot, &carrier, &w);
                }
                if let Some((ot, t)) = self.data.tensor(t1, t2, ProductKind::Circ) {
                    let w: Vec<Rat> = t.apply(&e1, &e2).into_iter().map(|c| c * &half).collect();
                    self.add_component(acc, ot, &bracket_m(z1, z2), &w);
                }
                if let Some((_, t)) = self.data.tensor(t1, t2, ProductKind::Form) {
                    let scalar = trace_form(z1, z2, self.n);
                    if !scalar.is_zero() {
                        let w: Vec<Rat> =
                            t.apply(&e1, &e2).into_iter().map(|c| c * &scalar).collect();
                        self.add_d(acc, &w);
                    }
                }
            }
        }
    }

    /// [z⊗α, u⊗b] = zu ⊗ αb for 𝔞-side left and V⊗B right; αb is the
    /// stored left action (A± keep the block, C′/E′ send it to V′⊗B′).
    fn a_vb(&self, acc: &mut Acc, l: (LieTag, usize, usize), r: (usize, usize)) {
        let u = &self.carriers[&LieTag::VB][r.0];
        let eb = self.coord_unit(ComponentTag::B, r.1);
        for (t1, z1) in self.parts_of(l.0, l.1) {
            if let Some((ot, t)) = self.data.tensor(t1, ComponentTag::B, ProductKind::Action) {
                let w = t.apply(&self.coord_unit(t1, l.2), &eb);
                self.add_component(acc, ot, &z1.mul(u), &w);
            }
        }
    }

    /// [u′⊗b′, z⊗α] = zᵗu′ ⊗ b′α; the transpose carries the sign that
    /// distinguishes the symmetric and skew 𝔞-carriers.
    fn vpbp_a(&self, acc: &mut Acc, l: (usize, usize), r: (LieTag, usize, usize)) {
        let up = &self.carriers[&LieTag::VpBp][l.0];
        let ebp = self.coord_unit(ComponentTag::Bprime, l.1);
        for (t2, z2) in self.parts_of(r.0, r.1) {
            if let Some((ot, t)) = self.data.tensor(ComponentTag::Bprime, t2, ProductKind::Action)
            {
                let w = t.apply(&ebp, &self.coord_unit(t2, r.2));
                self.add_component(acc, ot, &z2.transpose().mul(up), &w);
            }
        }
    }

    /// V×V (or V′×V′): symmetric carrier with the bracket coefficients,
    /// skew carrier with the circ coefficients, both halved.
    fn vb_same(&self, acc: &mut Acc, tag: LieTag, l: (usize, usize), r: (usize, usize)) {
        let ct = tag.coord_tag().expect("B-side block");
        let half = rat(1, 2);
        let u = &self.carriers[&tag][l.0];
        let v = &self.carriers[&tag][r.0];
        let uvt = u.mul(&v.transpose());
        let vut = v.mul(&u.transpose());
        let e1 = self.coord_unit(ct, l.1);
        let e2 = self.coord_unit(ct, r.1);
        if let Some((ot, t)) = self.data.tensor(ct, ct, ProductKind::Bracket) {
            let w: Vec<Rat> = t.apply(&e1, &e2).into_iter().map(|c| c * &half).collect();
            self.add_component(acc, ot, &uvt.add(&vut), &w);
        }
        if let Some((ot, t)) = self.data.tensor(ct, ct, ProductKind::Circ) {
            let w: Vec<Rat> = t.apply(&e1, &e2).into_iter().map(|c| c * &half).collect();
            self.add_component(acc, ot, &uvt.sub(&vut), &w);
        }
    }

    /// V×V′: the traceless part of uv′ᵗ splits into a symmetric half
    /// (bracket coefficients), a skew half (circ coefficients), and the
    /// trace scalar rides the D-form.
    fn vb_vpbp(&self, acc: &mut Acc, l: (usize, usize), r: (usize, usize)) {
        use ComponentTag::{Bprime, B};
        let half = rat(1, 2);
        let u = &self.carriers[&LieTag::VB][l.0];
        let vp = &self.carriers[&LieTag::VpBp][r.0];
        let m = u.mul(&vp.transpose());
        let scalar = m.trace() / rat_int((self.n + 1) as i64);
        let m0 = m.sub(&self.ident.scale(&scalar));
        let m0t = m0.transpose();
        let sym = m0.add(&m0t).scale(&half);
        let skew = m0.sub(&m0t).scale(&half);
        let e1 = self.coord_unit(B, l.1);
        let e2 = self.coord_unit(Bprime, r.1);
        if let Some((ot, t)) = self.data.tensor(B, Bprime, ProductKind::Bracket) {
            self.add_component(acc, ot, &sym, &t.apply(&e1, &e2));
        }
        if let Some((ot, t)) = self.data.tensor(B, Bprime, ProductKind::Circ) {
            self.add_component(acc, ot, &skew, &t.apply(&e1, &e2));
        }
        if let Some((_, t)) = self.data.tensor(B, Bprime, ProductKind::Form) {
            if !scalar.is_zero() {
                let w: Vec<Rat> =
                    t.apply(&e1, &e2).into_iter().map(|c| c * &scalar).collect();
                self.add_d(acc, &w);
            }
        }
    }

    /// [d, w⊗β] acts on the coordinate factor componentwise.
    fn d_x(&self, acc: &mut Acc, d_idx: usize, r: (LieTag, usize, usize)) {
        let ed = self.coord_unit(ComponentTag::D, d_idx);
        match kind(r.0) {
            BlockKind::Der => unreachable!("handled by dd"),
            BlockKind::ASide => {
                for (ct, carrier) in self.parts_of(r.0, r.1) {
                    if let Some((ot, t)) = self.data.tensor(ComponentTag::D, ct, ProductKind::Action)
                    {
                        let w = t.apply(&ed, &self.coord_unit(ct, r.2));
                        self.add_component(acc, ot, carrier, &w);
                    }
                }
            }
            BlockKind::Nat | BlockKind::NatDual => {
                let ct = r.0.coord_tag().expect("B-side block");
                if let Some((ot, t)) = self.data.tensor(ComponentTag::D, ct, ProductKind::Action) {
                    let w = t.apply(&ed, &self.coord_unit(ct, r.2));
                    self.add_component(acc, ot, &self.carriers[&r.0][r.1], &w);
                }
            }
        }
    }

    fn dd(&self, acc: &mut Acc, l: usize, r: usize) {
        let w = self
            .data
            .d_bracket()
            .apply(&self.coord_unit(ComponentTag::D, l), &self.coord_unit(ComponentTag::D, r));
        self.add_d(acc, &w);
    }

    /// Bracket of two basis elements, dispatched on the block pair.  The
    /// orientations the multiplication table states directly are evaluated
    /// as written; the reverse ones are their negatives by definition.
    fn eval_pair(&self, p: usize, q: usize) -> Acc {
        let bp = self.basis[p];
        let bq = self.basis[q];
        let mut acc = Acc::new();
        let mut flip = false;
        match (kind(bp.0), kind(bq.0)) {
            (BlockKind::ASide, BlockKind::ASide) => self.aa(&mut acc, bp, bq),
            (BlockKind::ASide, BlockKind::Nat) => self.a_vb(&mut acc, bp, (bq.1, bq.2)),
            (BlockKind::Nat, BlockKind::ASide) => {
                self.a_vb(&mut acc, bq, (bp.1, bp.2));
                flip = true;
            }
            (BlockKind::NatDual, BlockKind::ASide) => self.vpbp_a(&mut acc, (bp.1, bp.2), bq),
            (BlockKind::ASide, BlockKind::NatDual) => {
                self.vpbp_a(&mut acc, (bq.1, bq.2), bp);
                flip = true;
            }
            (BlockKind::Nat, BlockKind::Nat) => {
                self.vb_same(&mut acc, LieTag::VB, (bp.1, bp.2), (bq.1, bq.2))
            }
            (BlockKind::NatDual, BlockKind::NatDual) => {
                self.vb_same(&mut acc, LieTag::VpBp, (bp.1, bp.2), (bq.1, bq.2))
            }
            (BlockKind::Nat, BlockKind::NatDual) => {
                self.vb_vpbp(&mut acc, (bp.1, bp.2), (bq.1, bq.2))
            }
            (BlockKind::NatDual, BlockKind::Nat) => {
                self.vb_vpbp(&mut acc, (bq.1, bq.2), (bp.1, bp.2));
                flip = true;
            }
            (BlockKind::Der, BlockKind::Der) => self.dd(&mut acc, bp.2, bq.2),
            (BlockKind::Der, _) => self.d_x(&mut acc, bp.2, bq),
            (_, BlockKind::Der) => {
                self.d_x(&mut acc, bq.2, bp);
                flip = true;
            }
        }
        if flip {
            for v in acc.values_mut() {
                *v = -v.clone();
            }
        }
        acc
    }
}

/// Build the Lie algebra from validated coordinate data.  Requires n ≥ 4
/// and equal A⁺/A⁻ dimensions (the two halves index the same unsplit A).
pub fn assemble(data: &CoordAlgebraData) -> Result<GradedLie, CoreError> {
    let n = data.n();
    if n < 4 {
        return Err(CoreError::Rank(format!("assembly requires rank n >= 4, got {n}")));
    }
    let a_dim = data.dim(ComponentTag::Aplus);
    if data.dim(ComponentTag::Aminus) != a_dim {
        return Err(CoreError::Dim(format!(
            "inconsistent dims: |A+| = {a_dim} but |A-| = {}",
            data.dim(ComponentTag::Aminus)
        )));
    }
    let asm = Assembler::new(data);
    let dim = asm.basis.len();
    let values = par::par_map(dim * dim, |idx| asm.eval_pair(idx / dim, idx % dim));
    let mut table = SparseBracket::new(dim);
    for (idx, acc) in values.into_iter().enumerate() {
        let v: SparseVec = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if !v.is_empty() {
            table.set(idx / dim, idx % dim, v);
        }
    }
    let weights = basis_weights(n, &asm.blocks, &asm.basis);
    let ga_offset = asm.block(LieTag::GA).offset;
    let embedding: Vec<SparseVec> = (0..asm.sl.dim())
        .map(|gi| {
            data.unit()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (ga_offset + gi * a_dim + j, c.clone()))
                .collect()
        })
        .collect();
    let cartan = embedding[..n].to_vec();
    Ok(GradedLie {
        n,
        blocks: asm.blocks,
        basis: asm.basis,
        weights,
        bracket: table,
        cartan,
        unit_embedding: Some(embedding),
    })
}

/// Verify [x, y] = −[y, x] on all basis pairs (both orientations were
/// assembled independently wherever the table gives both).
pub fn check_anticommutativity(lie: &GradedLie) -> CheckReport {
    let dim = lie.dim();
    let mut pairs = Vec::with_capacity(dim * (dim + 1) / 2);
    for i in 0..dim {
        for j in i..dim {
            pairs.push((i, j));
        }
    }
    let (failures, first) = par::sweep_failures(pairs.len(), |idx| {
        let (i, j) = pairs[idx];
        let s = sv_add(lie.bracket.basis_bracket(i, j), lie.bracket.basis_bracket(j, i));
        if s.is_empty() {
            None
        } else {
            Some(FailureWitness {
                witness: format!(
                    "[{}, {}] + [{}, {}]",
                    lie.describe_basis(i),
                    lie.describe_basis(j),
                    lie.describe_basis(j),
                    lie.describe_basis(i)
                ),
                lhs: lie.describe_vec(&s),
                rhs: "0".into(),
            })
        }
    });
    CheckReport::from_sweep("anticommutativity", pairs.len(), failures, first.map(|(_, w)| w))
}

#[derive(Clone, Copy, Debug)]
pub enum JacobiMode {
    /// Every basis triple i < j < k.
    Full,
    /// A seeded random sample of the given size, plus the complete sweep
    /// of triples meeting the 𝔤⊗1 copy (which touch every formula family).
    Sampled { count: usize, seed: u64 },
}

pub fn check_jacobi(lie: &GradedLie, mode: JacobiMode) -> CheckReport {
    let dim = lie.dim();
    let triples: Vec<(usize, usize, usize)> = match mode {
        JacobiMode::Full => {
            let mut v = Vec::new();
            for i in 0..dim {
                for j in i + 1..dim {
                    for k in j + 1..dim {
                        v.push((i, j, k));
                    }
                }
            }
            v
        }
        JacobiMode::Sampled { count, seed } => {
            let designated: BTreeSet<usize> = lie
                .unit_embedding
                .as_deref()
                .unwrap_or(&lie.cartan)
                .iter()
                .flat_map(|v| v.iter().map(|(k, _)| *k))
                .collect();
            let mut set: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
            for &d in &designated {
                for j in 0..dim {
                    for k in j..dim {
                        let mut t = [d, j, k];
                        t.sort_unstable();
                        if t[0] < t[1] && t[1] < t[2] {
                            set.insert((t[0], t[1], t[2]));
                        }
                    }
                }
            }
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let mut added = 0;
            let mut attempts = 0;
            while added < count && attempts < 20 * count + 1000 {
                attempts += 1;
                let mut t =
                    [rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim)];
                t.sort_unstable();
                if t[0] < t[1] && t[1] < t[2] && set.insert((t[0], t[1], t[2])) {
                    added += 1;
                }
            }
            set.into_iter().collect()
        }
    };
    let (failures, first) = par::sweep_failures(triples.len(), |idx| {
        let (i, j, k) = triples[idx];
        let r = lie.jacobiator(i, j, k);
        if r.is_empty() {
            None
        } else {
            Some(FailureWitness {
                witness: format!(
                    "({}, {}, {})",
                    lie.describe_basis(i),
                    lie.describe_basis(j),
                    lie.describe_basis(k)
                ),
                lhs: lie.describe_vec(&r),
                rhs: "0".into(),
            })
        }
    });
    CheckReport::from_sweep("jacobi", triples.len(), failures, first.map(|(_, w)| w))
}

struct Tally {
    checked: usize,
    failures: usize,
    first: Option<FailureWitness>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, failures: 0, first: None }
    }

    fn note(&mut self, ok: bool, witness: impl FnOnce() -> FailureWitness) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(witness());
            }
        }
    }
}

/// The grading axioms: every basis vector an ad(h)-eigenvector with its
/// module weight, all weights inside Â_n, weight additivity of the
/// bracket, the zero-weight space inside Σ_{w≠0} [L_w, L_{−w}], and L
/// generated as an ideal by the 𝔤 copy (equivalently by its Cartan).
pub fn check_grading(lie: &GradedLie) -> CheckReport {
    let n = lie.n();
    let dim = lie.dim();
    let mut tally = Tally::new();

    for k in 0..n {
        let hk = &lie.cartan[k];
        for i in 0..dim {
            let got = lie.bracket.apply(hk, &sv_unit(i));
            let lam = lie.weights[i].0[k];
            let want: SparseVec = if lam == 0 { Vec::new() } else { vec![(i, rat_int(lam))] };
            tally.note(got == want, || FailureWitness {
                witness: format!("ad(h_{}) on {}", k + 1, lie.describe_basis(i)),
                lhs: lie.describe_vec(&got),
                rhs: lie.describe_vec(&want),
            });
        }
    }

    for i in 0..dim {
        tally.note(in_ahat(&lie.weights[i], n), || FailureWitness {
            witness: format!("weight of {}", lie.describe_basis(i)),
            lhs: format!("{:?}", lie.weights[i].0),
            rhs: "a weight of Â_n".into(),
        });
    }

    for i in 0..dim {
        for j in i..dim {
            let sum = lie.weights[i].add(&lie.weights[j]);
            let ok = lie
                .bracket
                .basis_bracket(i, j)
                .iter()
                .all(|(k, _)| lie.weights[*k] == sum);
            tally.note(ok, || FailureWitness {
                witness: format!(
                    "[{}, {}] leaves the weight-{:?} space",
                    lie.describe_basis(i),
                    lie.describe_basis(j),
                    sum.0
                ),
                lhs: lie.describe_vec(lie.bracket.basis_bracket(i, j)),
                rhs: "a vector of the summed weight".into(),
            });
        }
    }

    let mut gens: Vec<Vec<Rat>> = Vec::new();
    for i in 0..dim {
        if lie.weights[i].is_zero() {
            continue;
        }
        let opposite = lie.weights[i].neg();
        for j in i + 1..dim {
            if lie.weights[j] == opposite {
                let v = lie.bracket.basis_bracket(i, j);
                if !v.is_empty() {
                    gens.push(sv_to_dense(v, dim));
                }
            }
        }
    }
    let opp_span = SubspaceBasis::from_vectors(dim, &gens).expect("vectors sized to the algebra");
    for i in 0..dim {
        if lie.weights[i].is_zero() {
            tally.note(opp_span.contains(&sv_to_dense(&sv_unit(i), dim)), || FailureWitness {
                witness: format!("zero-weight vector {}", lie.describe_basis(i)),
                lhs: "outside".into(),
                rhs: "the span of [L_w, L_(-w)] over w != 0".into(),
            });
        }
    }

    let mut closure: Vec<Vec<Rat>> = lie.cartan.iter().map(|v| sv_to_dense(v, dim)).collect();
    let mut space =
        SubspaceBasis::from_vectors(dim, &closure).expect("vectors sized to the algebra");
    loop {
        let mut new_vecs = Vec::new();
        for v in space.basis() {
            let sv = sv_from_dense(v);
            for j in 0..dim {
                let w = lie.bracket.apply(&sv, &sv_unit(j));
                if !w.is_empty() {
                    let dw = sv_to_dense(&w, dim);
                    if !space.contains(&dw) {
                        new_vecs.push(dw);
                    }
                }
            }
        }
        if new_vecs.is_empty() {
            break;
        }
        closure.extend(new_vecs);
        space = SubspaceBasis::from_vectors(dim, &closure).expect("vectors sized to the algebra");
    }
    tally.note(space.dim() == dim, || FailureWitness {
        witness: "ideal generated by the Cartan images".into(),
        lhs: format!("dim {}", space.dim()),
        rhs: format!("dim {dim}"),
    });

    CheckReport::from_sweep("grading_axioms", tally.checked, tally.failures, tally.first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coordalg::{split_a, AssocAlgebra, ProductEntry, Tensor};
    use crate::coordalg::ComponentTag::*;

    fn field_algebra() -> AssocAlgebra {
        AssocAlgebra {
            dim: 1,
            d_dim: 0,
            unit: vec![rat_int(1)],
            mult: Tensor::from_entries(1, 1, 1, vec![(0, 0, 0, rat_int(1))]).unwrap(),
            form: Tensor::zero(1, 1, 0),
        }
    }

    fn dual_numbers() -> AssocAlgebra {
        AssocAlgebra {
            dim: 2,
            d_dim: 0,
            unit: vec![rat_int(1), rat_int(0)],
            mult: Tensor::from_entries(
                2,
                2,
                2,
                vec![(0, 0, 0, rat_int(1)), (0, 1, 1, rat_int(1)), (1, 0, 1, rat_int(1))],
            )
            .unwrap(),
            form: Tensor::zero(2, 2, 0),
        }
    }

    fn dims_map(entries: &[(ComponentTag, usize)]) -> BTreeMap<ComponentTag, usize> {
        let mut dims: BTreeMap<ComponentTag, usize> =
            crate::coordalg::ALL_TAGS.iter().map(|t| (*t, 0)).collect();
        for (t, d) in entries {
            dims.insert(*t, *d);
        }
        dims
    }

    fn one_cell(
        l: ComponentTag,
        r: ComponentTag,
        out: ComponentTag,
        kind: ProductKind,
        value: i64,
    ) -> ProductEntry {
        ProductEntry {
            left: l,
            right: r,
            out,
            kind,
            tensor: Tensor::from_entries(1, 1, 1, vec![(0, 0, 0, rat_int(value))]).unwrap(),
        }
    }

    /// Coordinate data of the rank-4 symplectic algebra sp_10 seen as
    /// sl_5 ⊕ S ⊕ S′ ⊕ D with one-dimensional coordinate spaces.
    fn symplectic_data() -> CoordAlgebraData {
        use ProductKind::*;
        let entries = vec![
            one_cell(Aplus, Aplus, Aplus, Circ, 2),
            one_cell(Aminus, Aminus, Aplus, Circ, 2),
            one_cell(Aplus, Aminus, Aminus, Circ, 2),
            one_cell(Aplus, C, C, Circ, 2),
            one_cell(Aminus, C, C, Bracket, 2),
            one_cell(Aplus, Cprime, Cprime, Circ, 2),
            one_cell(Aminus, Cprime, Cprime, Bracket, -2),
            one_cell(C, Cprime, Aplus, Circ, 1),
            one_cell(C, Cprime, Aminus, Bracket, 1),
            one_cell(C, Cprime, D, Form, 1),
            one_cell(D, C, C, Action, 2),
            one_cell(D, Cprime, Cprime, Action, -2),
        ];
        CoordAlgebraData::new(
            4,
            dims_map(&[(Aplus, 1), (Aminus, 1), (C, 1), (Cprime, 1), (D, 1)]),
            vec![rat_int(1)],
            entries,
            Tensor::zero(1, 1, 1),
        )
        .unwrap()
    }

    /// Rank-4 orthogonal algebra so_10 = sl_5 ⊕ Λ ⊕ Λ′ ⊕ D.
    fn orthogonal_data() -> CoordAlgebraData {
        use ProductKind::*;
        let entries = vec![
            one_cell(Aplus, Aplus, Aplus, Circ, 2),
            one_cell(Aminus, Aminus, Aplus, Circ, 2),
            one_cell(Aplus, Aminus, Aminus, Circ, 2),
            one_cell(Aplus, E, E, Circ, 2),
            one_cell(Aminus, E, E, Bracket, 2),
            one_cell(Aplus, Eprime, Eprime, Circ, 2),
            one_cell(Aminus, Eprime, Eprime, Bracket, -2),
            one_cell(E, Eprime, Aplus, Circ, 1),
            one_cell(E, Eprime, Aminus, Bracket, 1),
            one_cell(E, Eprime, D, Form, 1),
            one_cell(D, E, E, Action, 2),
            one_cell(D, Eprime, Eprime, Action, -2),
        ];
        CoordAlgebraData::new(
            4,
            dims_map(&[(Aplus, 1), (Aminus, 1), (E, 1), (Eprime, 1), (D, 1)]),
            vec![rat_int(1)],
            entries,
            Tensor::zero(1, 1, 1),
        )
        .unwrap()
    }

    fn assert_all_checks_pass(lie: &GradedLie) {
        let anti = check_anticommutativity(lie);
        assert!(anti.is_pass(), "anticommutativity: {:?}", anti.first_failure);
        let jac = check_jacobi(lie, JacobiMode::Full);
        assert!(jac.is_pass(), "jacobi: {:?}", jac.first_failure);
        let grading = check_grading(lie);
        assert!(grading.is_pass(), "grading: {:?}", grading.first_failure);
    }

    #[test]
    fn split_field_assembles_to_sl5_exactly() {
        let data = split_a(&field_algebra(), 4).unwrap();
        let lie = assemble(&data).unwrap();
        assert_eq!(lie.dim(), 24, "sl_5 alone");
        let sl = SlAlgebra::new(4);
        for i in 0..24 {
            for j in 0..24 {
                let got = lie.bracket().basis_bracket(i, j).to_vec();
                let want: SparseVec = sl
                    .coords_of_matrix(&bracket_m(&sl.basis()[i], &sl.basis()[j]))
                    .unwrap()
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                assert_eq!(got, want, "[g_{i}, g_{j}] must match the matrix commutator");
            }
        }
        assert_all_checks_pass(&lie);
    }

    #[test]
    fn dual_numbers_assemble_to_the_current_algebra() {
        let data = split_a(&dual_numbers(), 4).unwrap();
        let lie = assemble(&data).unwrap();
        assert_eq!(lie.dim(), 48, "sl_5 ⊗ (1, ε)");
        let sl = SlAlgebra::new(4);
        // Independent oracle: [g_a ⊗ ε^p, g_b ⊗ ε^q] = [g_a, g_b] ⊗ ε^{p+q}.
        for a in 0..24 {
            for p in 0..2 {
                for b in 0..24 {
                    for q in 0..2 {
                        let got = lie
                            .bracket()
                            .basis_bracket(lie.index_of(LieTag::GA, a, p), lie.index_of(LieTag::GA, b, q))
                            .to_vec();
                        let want: SparseVec = if p + q >= 2 {
                            Vec::new()
                        } else {
                            sl.coords_of_matrix(&bracket_m(&sl.basis()[a], &sl.basis()[b]))
                                .unwrap()
                                .into_iter()
                                .enumerate()
                                .filter(|(_, c)| !c.is_zero())
                                .map(|(g, c)| (lie.index_of(LieTag::GA, g, p + q), c))
                                .collect()
                        };
                        assert_eq!(got, want, "current-algebra bracket at ({a},{p}),({b},{q})");
                    }
                }
            }
        }
        assert_all_checks_pass(&lie);
    }

    #[test]
    fn symplectic_data_assembles_to_a_graded_lie_algebra() {
        let data = symplectic_data();
        for r in data.validate() {
            assert!(r.is_pass(), "{}: {:?}", r.check, r.first_failure);
        }
        let lie = assemble(&data).unwrap();
        assert_eq!(lie.dim(), 55, "24 + 15 + 15 + 1");
        assert_all_checks_pass(&lie);

        // The unit copy of sl_5 is a subalgebra with the right constants.
        let emb = lie.unit_embedding().unwrap();
        let sl = SlAlgebra::new(4);
        for i in 0..24 {
            for j in 0..24 {
                let got = lie.bracket().apply(&emb[i], &emb[j]);
                let mut want: SparseVec = Vec::new();
                for (g, c) in sl
                    .coords_of_matrix(&bracket_m(&sl.basis()[i], &sl.basis()[j]))
                    .unwrap()
                    .into_iter()
                    .enumerate()
                {
                    if !c.is_zero() {
                        want = sv_add(&want, &crate::bracket::sv_scale(&emb[g], &c));
                    }
                }
                assert_eq!(got, want, "embedded copy closes with sl constants at ({i},{j})");
            }
        }

        // [s⊗c, s′⊗c′] with s = s′ = E_11 has D-part (s|s′)⟨c,c′⟩ = 1/5.
        let p = lie.index_of(LieTag::SC, 0, 0);
        let q = lie.index_of(LieTag::SpCp, 0, 0);
        let d_idx = lie.index_of(LieTag::D, 0, 0);
        let v = lie.bracket().basis_bracket(p, q);
        let d_coeff = v.iter().find(|(k, _)| *k == d_idx).map(|(_, c)| c.clone());
        assert_eq!(d_coeff, Some(rat(1, 5)), "trace scalar rides into D");
    }

    #[test]
    fn orthogonal_data_assembles_to_a_graded_lie_algebra() {
        let data = orthogonal_data();
        for r in data.validate() {
            assert!(r.is_pass(), "{}: {:?}", r.check, r.first_failure);
        }
        let lie = assemble(&data).unwrap();
        assert_eq!(lie.dim(), 45, "24 + 10 + 10 + 1");
        assert_all_checks_pass(&lie);

        // [λ⊗e, λ′⊗e′] with λ = λ′ = E_12 − E_21: D-part (λ|λ′) = −2/5.
        let p = lie.index_of(LieTag::LE, 0, 0);
        let q = lie.index_of(LieTag::LpEp, 0, 0);
        let d_idx = lie.index_of(LieTag::D, 0, 0);
        let v = lie.bracket().basis_bracket(p, q);
        let d_coeff = v.iter().find(|(k, _)| *k == d_idx).map(|(_, c)| c.clone());
        assert_eq!(d_coeff, Some(rat(-2, 5)), "skew carriers have negative trace pairing");
    }

    #[test]
    fn perturbed_product_breaks_jacobi_with_a_named_triple() {
        use ProductKind::*;
        let entries = vec![
            one_cell(Aplus, Aplus, Aplus, Circ, 2),
            one_cell(Aminus, Aminus, Aplus, Circ, 2),
            one_cell(Aplus, Aminus, Aminus, Circ, 2),
            one_cell(Aplus, C, C, Circ, 2),
            one_cell(Aminus, C, C, Bracket, 2),
            one_cell(Aplus, Cprime, Cprime, Circ, 2),
            one_cell(Aminus, Cprime, Cprime, Bracket, -2),
            // circ perturbed from 1 to 3: still symmetric, no longer Jacobi.
            one_cell(C, Cprime, Aplus, Circ, 3),
            one_cell(C, Cprime, Aminus, Bracket, 1),
            one_cell(C, Cprime, D, Form, 1),
            one_cell(D, C, C, Action, 2),
            one_cell(D, Cprime, Cprime, Action, -2),
        ];
        let data = CoordAlgebraData::new(
            4,
            dims_map(&[(Aplus, 1), (Aminus, 1), (C, 1), (Cprime, 1), (D, 1)]),
            vec![rat_int(1)],
            entries,
            Tensor::zero(1, 1, 1),
        )
        .unwrap();
        let lie = assemble(&data).unwrap();
        let anti = check_anticommutativity(&lie);
        assert!(anti.is_pass(), "perturbation keeps the mirror symmetry");
        let jac = check_jacobi(&lie, JacobiMode::Full);
        assert!(!jac.is_pass(), "perturbed circ cell must violate Jacobi");
        let w = jac.first_failure.unwrap();
        assert!(w.witness.contains("["), "witness names a basis triple: {}", w.witness);
    }

    #[test]
    fn low_rank_and_mismatched_a_dims_are_rejected() {
        let low = split_a(&field_algebra(), 3).unwrap();
        assert!(matches!(assemble(&low), Err(CoreError::Rank(_))), "n=3 has no assembly");

        let data = CoordAlgebraData::new(
            4,
            dims_map(&[(Aplus, 1), (Aminus, 2)]),
            vec![rat_int(1)],
            Vec::new(),
            Tensor::zero(0, 0, 0),
        )
        .unwrap();
        assert!(
            matches!(assemble(&data), Err(CoreError::Dim(_))),
            "unequal A+/A- dimensions cannot index one unsplit A"
        );
    }

    #[test]
    fn abelian_complement_without_forms_fails_the_grading() {
        // sl_5 ⊕ ℚd with d acting trivially: d is not generated by 𝔤.
        let raw = field_algebra();
        let with_d = AssocAlgebra {
            dim: 1,
            d_dim: 1,
            unit: vec![rat_int(1)],
            mult: raw.mult.clone(),
            form: Tensor::zero(1, 1, 1),
        };
        let data = split_a(&with_d, 4).unwrap();
        let lie = assemble(&data).unwrap();
        assert!(check_anticommutativity(&lie).is_pass());
        assert!(check_jacobi(&lie, JacobiMode::Full).is_pass());
        let g = check_grading(&lie);
        assert!(!g.is_pass(), "a dead D summand is not reachable from 𝔤");
        let w = g.first_failure.unwrap();
        assert!(
            w.witness.contains("D[0,0]") || w.witness.contains("Cartan"),
            "witness points at the stranded direction: {}",
            w.witness
        );
    }

    #[test]
    fn sampled_jacobi_is_deterministic_and_covers_the_unit_copy() {
        let data = split_a(&dual_numbers(), 4).unwrap();
        let lie = assemble(&data).unwrap();
        let mode = JacobiMode::Sampled { count: 100, seed: 7 };
        let a = check_jacobi(&lie, mode);
        let b = check_jacobi(&lie, mode);
        assert_eq!(a, b, "same seed, same sweep");
        assert!(a.is_pass());
        // 48 basis elements, 24 designated: at least the designated triples.
        assert!(a.checked > 1000, "designated sweep dominates: {}", a.checked);
    }

    #[test]
    fn graded_lie_json_round_trips_byte_stably() {
        let lie = assemble(&symplectic_data()).unwrap();
        let s = lie.to_json();
        let back = GradedLie::from_json(&s).unwrap();
        assert_eq!(back.to_json(), s, "second serialization is identical");
        assert_eq!(back.dim(), lie.dim());
        assert_eq!(back.bracket(), lie.bracket(), "structure constants survive");
        for i in 0..lie.dim() {
            assert_eq!(back.weight(i), lie.weight(i), "weights recomputed identically");
        }
        assert!(back.unit_embedding().is_none(), "imports carry no embedding");
        assert!(check_grading(&back).is_pass(), "imported algebra still checks out");
    }

    #[test]
    fn canonical_basis_order_is_enforced_on_import() {
        let lie = assemble(&symplectic_data()).unwrap();
        let mut file: serde_json::Value = serde_json::from_str(&lie.to_json()).unwrap();
        let basis = file["basis"].as_array_mut().unwrap();
        basis.swap(0, 1);
        let got = GradedLie::from_json(&serde_json::to_string(&file).unwrap());
        assert!(matches!(got, Err(CoreError::Schema(_))), "shuffled basis must be rejected");
    }
}
