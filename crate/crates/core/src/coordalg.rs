//! The coordinate algebra: spaces A⁺, A⁻, B, B′, C, C′, E, E′, D with all
//! bilinear products, stored as explicit structure-constant tensors.
//!
//! 𝔞 = A⁺⊕A⁻⊕C⊕E⊕C′⊕E′ carries a symmetric product ∘ and a skew product
//! [,] per cell; the associative multiplication is αβ = [α,β]/2 + (α∘β)/2.
//! 𝔟 = 𝔞⊕B⊕B′ extends it: B×B lands in C⊕E, B×B′ in A⁺⊕A⁻, and the mixed
//! products are defined through the involution γ (bα := γ(α)b,
//! αb′ := b′γ(α)).  D pairs with 𝔟 through the forms ⟨·,·⟩ and acts on
//! every component.
//!
//! Data files carry each product cell once, in a canonical argument
//! order; the transposed cells are filled at load time by (β∘α) = (α∘β),
//! [β,α] = −[α,β], ⟨x′,x⟩ = −⟨x,x′⟩.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::report::{CheckReport, FailureWitness};
use crate::scalars::{format_rat, parse_rat, rat, rat_int, Rat};

pub const COORD_SCHEMA: &str = "coordalg/1";

/// The nine component spaces of the coordinate side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComponentTag {
    Aplus,
    Aminus,
    B,
    Bprime,
    C,
    Cprime,
    E,
    Eprime,
    D,
}

pub const ALL_TAGS: [ComponentTag; 9] = [
    ComponentTag::Aplus,
    ComponentTag::Aminus,
    ComponentTag::B,
    ComponentTag::Bprime,
    ComponentTag::C,
    ComponentTag::Cprime,
    ComponentTag::E,
    ComponentTag::Eprime,
    ComponentTag::D,
];

/// The six 𝔞-components, in the order used for sweeps.
pub const A_TAGS: [ComponentTag; 6] = [
    ComponentTag::Aplus,
    ComponentTag::Aminus,
    ComponentTag::C,
    ComponentTag::Cprime,
    ComponentTag::E,
    ComponentTag::Eprime,
];

/// The eight 𝔟-components (everything except D).
pub const B_ALGEBRA_TAGS: [ComponentTag; 8] = [
    ComponentTag::Aplus,
    ComponentTag::Aminus,
    ComponentTag::B,
    ComponentTag::Bprime,
    ComponentTag::C,
    ComponentTag::Cprime,
    ComponentTag::E,
    ComponentTag::Eprime,
];

impl ComponentTag {
    pub fn name(self) -> &'static str {
        match self {
            ComponentTag::Aplus => "A+",
            ComponentTag::Aminus => "A-",
            ComponentTag::B => "B",
            ComponentTag::Bprime => "B'",
            ComponentTag::C => "C",
            ComponentTag::Cprime => "C'",
            ComponentTag::E => "E",
            ComponentTag::Eprime => "E'",
            ComponentTag::D => "D",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CoreError> {
        ALL_TAGS
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| CoreError::Schema(format!("unknown component tag {s:?}")))
    }

    pub fn in_a(self) -> bool {
        matches!(
            self,
            ComponentTag::Aplus
                | ComponentTag::Aminus
                | ComponentTag::C
                | ComponentTag::Cprime
                | ComponentTag::E
                | ComponentTag::Eprime
        )
    }

    /// Sign of γ on this component (±1); γ is defined on 𝔞 only.
    pub fn gamma_sign(self) -> Option<i64> {
        match self {
            ComponentTag::Aplus | ComponentTag::E | ComponentTag::Eprime => Some(1),
            ComponentTag::Aminus | ComponentTag::C | ComponentTag::Cprime => Some(-1),
            _ => None,
        }
    }

    /// Sign of η: γ on 𝔞, identity on B and B′.
    pub fn eta_sign(self) -> Option<i64> {
        match self {
            ComponentTag::B | ComponentTag::Bprime => Some(1),
            t => t.gamma_sign(),
        }
    }
}

/// Which of the four product families a tensor belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ProductKind {
    Circ,
    Bracket,
    Form,
    Action,
}

impl ProductKind {
    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Circ => "circ",
            ProductKind::Bracket => "bracket",
            ProductKind::Form => "form",
            ProductKind::Action => "action",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CoreError> {
        match s {
            "circ" => Ok(ProductKind::Circ),
            "bracket" => Ok(ProductKind::Bracket),
            "form" => Ok(ProductKind::Form),
            "action" => Ok(ProductKind::Action),
            _ => Err(CoreError::Schema(format!("unknown product kind {s:?}"))),
        }
    }
}

/// Sparse bilinear map X×Y → Z: entries (i, j, k, c) meaning
/// (x_i, y_j) contributes c·z_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    pub left: usize,
    pub right: usize,
    pub out: usize,
    pub entries: Vec<(usize, usize, usize, Rat)>,
}

impl Tensor {
    pub fn zero(left: usize, right: usize, out: usize) -> Self {
        Tensor { left, right, out, entries: Vec::new() }
    }

    pub fn from_entries(
        left: usize,
        right: usize,
        out: usize,
        entries: Vec<(usize, usize, usize, Rat)>,
    ) -> Result<Self, CoreError> {
        for &(i, j, k, _) in &entries {
            if i >= left || j >= right || k >= out {
                return Err(CoreError::Schema(format!(
                    "tensor entry ({i},{j},{k}) out of range for shape {left}x{right}->{out}"
                )));
            }
        }
        Ok(Tensor { left, right, out, entries })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|(_, _, _, c)| c.is_zero())
    }

    pub fn apply(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        debug_assert_eq!(x.len(), self.left);
        debug_assert_eq!(y.len(), self.right);
        let mut out = vec![Rat::zero(); self.out];
        for (i, j, k, c) in &self.entries {
            if !x[*i].is_zero() && !y[*j].is_zero() {
                out[*k] += c * &x[*i] * &y[*j];
            }
        }
        out
    }

    /// The same map with arguments swapped, scaled by sign.
    pub fn transposed(&self, sign: i64) -> Tensor {
        Tensor {
            left: self.right,
            right: self.left,
            out: self.out,
            entries: self
                .entries
                .iter()
                .map(|(i, j, k, c)| (*j, *i, *k, c * rat_int(sign)))
                .collect(),
        }
    }

    fn dense(&self) -> BTreeMap<(usize, usize, usize), Rat> {
        let mut m = BTreeMap::new();
        for (i, j, k, c) in &self.entries {
            *m.entry((*i, *j, *k)).or_insert_with(Rat::zero) += c;
        }
        m.retain(|_, v| !v.is_zero());
        m
    }

    /// Equal as bilinear maps (entry lists may differ in order/merging).
    pub fn same_map(&self, other: &Tensor) -> bool {
        self.left == other.left
            && self.right == other.right
            && self.out == other.out
            && self.dense() == other.dense()
    }

    /// Symmetric in the two arguments (only meaningful for square cells).
    pub fn is_symmetric(&self) -> bool {
        let d = self.dense();
        d.iter().all(|(&(i, j, k), c)| {
            d.get(&(j, i, k)).map(|o| o == c).unwrap_or(false)
        })
    }

    pub fn is_skew(&self) -> bool {
        let d = self.dense();
        d.iter().all(|(&(i, j, k), c)| {
            d.get(&(j, i, k)).map(|o| *o == -c.clone()).unwrap_or(false)
        })
    }
}

/// One stored product cell.
#[derive(Clone, Debug)]
pub struct ProductEntry {
    pub left: ComponentTag,
    pub right: ComponentTag,
    pub out: ComponentTag,
    pub kind: ProductKind,
    pub tensor: Tensor,
}

/// The canonical cell catalog: every product slot a data file may carry,
/// with its mandated output component.  Transposed cells are not in the
/// catalog — they are derived.
pub fn canonical_cells() -> Vec<(ComponentTag, ComponentTag, ProductKind, ComponentTag)> {
    use ComponentTag::*;
    use ProductKind::*;
    let mut cells = Vec::new();
    // ∘/[,] cells of the 𝔞-table, plus the three B-family cells.
    let pairs: [(ComponentTag, ComponentTag, ComponentTag, ComponentTag); 18] = [
        (Aplus, Aplus, Aplus, Aminus),
        (Aplus, Aminus, Aminus, Aplus),
        (Aminus, Aminus, Aplus, Aminus),
        (Aplus, C, C, E),
        (Aplus, E, E, C),
        (Aplus, Cprime, Cprime, Eprime),
        (Aplus, Eprime, Eprime, Cprime),
        (Aminus, C, E, C),
        (Aminus, E, C, E),
        (Aminus, Cprime, Eprime, Cprime),
        (Aminus, Eprime, Cprime, Eprime),
        (C, Cprime, Aplus, Aminus),
        (C, Eprime, Aminus, Aplus),
        (E, Cprime, Aminus, Aplus),
        (E, Eprime, Aplus, Aminus),
        (B, B, E, C),
        (Bprime, Bprime, Eprime, Cprime),
        (B, Bprime, Aplus, Aminus),
    ];
    for (l, r, circ_out, bracket_out) in pairs {
        cells.push((l, r, Circ, circ_out));
        cells.push((l, r, Bracket, bracket_out));
    }
    // One-sided module actions: 𝔞 on B from the left, B′ by 𝔞 from the
    // right; the other two orders are defined through γ, not stored.
    for (l, r, out) in [
        (Aplus, B, B),
        (Aminus, B, B),
        (Cprime, B, Bprime),
        (Eprime, B, Bprime),
        (Bprime, Aplus, Bprime),
        (Bprime, Aminus, Bprime),
        (Bprime, C, B),
        (Bprime, E, B),
    ] {
        cells.push((l, r, Action, out));
    }
    // D acting on each component.
    for x in B_ALGEBRA_TAGS {
        cells.push((D, x, Action, x));
    }
    // The D-valued forms.
    for (l, r) in [(Aplus, Aplus), (Aminus, Aminus), (B, Bprime), (C, Cprime), (E, Eprime)] {
        cells.push((l, r, Form, D));
    }
    cells
}

/// An element spread over homogeneous components; absent parts are zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GeneralElement {
    parts: BTreeMap<ComponentTag, Vec<Rat>>,
}

impl GeneralElement {
    pub fn zero() -> Self {
        GeneralElement::default()
    }

    pub fn from_part(tag: ComponentTag, coords: Vec<Rat>) -> Self {
        let mut e = GeneralElement::zero();
        e.add_part(tag, coords);
        e
    }

    pub fn add_part(&mut self, tag: ComponentTag, coords: Vec<Rat>) {
        assert!(tag != ComponentTag::D, "D is not part of 𝔟-elements");
        if coords.iter().all(|c| c.is_zero()) {
            return;
        }
        match self.parts.get_mut(&tag) {
            Some(existing) => {
                assert_eq!(existing.len(), coords.len(), "component dim mismatch");
                for (a, b) in existing.iter_mut().zip(&coords) {
                    *a += b;
                }
                if existing.iter().all(|c| c.is_zero()) {
                    self.parts.remove(&tag);
                }
            }
            None => {
                self.parts.insert(tag, coords);
            }
        }
    }

    pub fn part(&self, tag: ComponentTag) -> Option<&[Rat]> {
        self.parts.get(&tag).map(|v| v.as_slice())
    }

    pub fn parts(&self) -> impl Iterator<Item = (ComponentTag, &[Rat])> {
        self.parts.iter().map(|(t, v)| (*t, v.as_slice()))
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn supported_on(&self, allowed: &[ComponentTag]) -> bool {
        self.parts.keys().all(|t| allowed.contains(t))
    }

    pub fn add(&self, other: &GeneralElement) -> GeneralElement {
        let mut out = self.clone();
        for (t, v) in other.parts() {
            out.add_part(t, v.to_vec());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> GeneralElement {
        if c.is_zero() {
            return GeneralElement::zero();
        }
        GeneralElement {
            parts: self
                .parts
                .iter()
                .map(|(t, v)| (*t, v.iter().map(|x| x * c).collect()))
                .collect(),
        }
    }

    pub fn describe(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.parts()
            .map(|(t, v)| {
                let coords: Vec<String> = v.iter().map(format_rat).collect();
                format!("{}[{}]", t.name(), coords.join(","))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// An element of a single component, used in witnesses and sweeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousElement {
    pub tag: ComponentTag,
    pub coords: Vec<Rat>,
}

impl HomogeneousElement {
    pub fn basis(tag: ComponentTag, idx: usize, dim: usize) -> Self {
        let mut coords = vec![Rat::zero(); dim];
        coords[idx] = rat_int(1);
        HomogeneousElement { tag, coords }
    }

    pub fn general(&self) -> GeneralElement {
        GeneralElement::from_part(self.tag, self.coords.clone())
    }
}

/// The full coordinate data: dimensions, unit, products, D-bracket.
/// Products are stored resolved (canonical cells plus derived transposes).
#[derive(Clone, Debug)]
pub struct CoordAlgebraData {
    n: usize,
    dims: BTreeMap<ComponentTag, usize>,
    unit: Vec<Rat>,
    products: BTreeMap<(ComponentTag, ComponentTag, ProductKind), (ComponentTag, Tensor)>,
    d_bracket: Tensor,
}

impl CoordAlgebraData {
    pub fn new(
        n: usize,
        dims: BTreeMap<ComponentTag, usize>,
        unit: Vec<Rat>,
        entries: Vec<ProductEntry>,
        d_bracket: Tensor,
    ) -> Result<Self, CoreError> {
        crate::check_rank(n)?;
        for tag in ALL_TAGS {
            if !dims.contains_key(&tag) {
                return Err(CoreError::Schema(format!("dims missing component {}", tag.name())));
            }
        }
        let dim = |t: ComponentTag| dims[&t];
        if unit.len() != dim(ComponentTag::Aplus) {
            return Err(CoreError::Schema(format!(
                "unit length {} does not match dim A+ = {}",
                unit.len(),
                dim(ComponentTag::Aplus)
            )));
        }
        let catalog = canonical_cells();
        let mut products: BTreeMap<_, (ComponentTag, Tensor)> = BTreeMap::new();
        for e in entries {
            let slot = catalog
                .iter()
                .find(|(l, r, k, _)| (*l, *r, *k) == (e.left, e.right, e.kind));
            let out = match slot {
                Some((_, _, _, out)) => *out,
                None => {
                    return Err(CoreError::Schema(format!(
                        "cell {} x {} ({}) is not a canonical product slot",
                        e.left.name(),
                        e.right.name(),
                        e.kind.name()
                    )))
                }
            };
            if e.out != out {
                return Err(CoreError::Schema(format!(
                    "cell {} x {} ({}) must land in {}, file says {}",
                    e.left.name(),
                    e.right.name(),
                    e.kind.name(),
                    out.name(),
                    e.out.name()
                )));
            }
            let shape_ok = e.tensor.left == dim(e.left)
                && e.tensor.right == dim(e.right)
                && e.tensor.out == dim(e.out);
            if !shape_ok {
                return Err(CoreError::Schema(format!(
                    "tensor shape for {} x {} ({}) disagrees with dims",
                    e.left.name(),
                    e.right.name(),
                    e.kind.name()
                )));
            }
            let key = (e.left, e.right, e.kind);
            if products.insert(key, (out, e.tensor)).is_some() {
                return Err(CoreError::Schema(format!(
                    "duplicate product cell {} x {} ({})",
                    e.left.name(),
                    e.right.name(),
                    e.kind.name()
                )));
            }
        }
        // Fill missing canonical slots with zero tensors, then derive the
        // transposed cells: ∘ symmetric, [,] and ⟨,⟩ skew.
        for (l, r, k, out) in &catalog {
            products
                .entry((*l, *r, *k))
                .or_insert_with(|| (*out, Tensor::zero(dim(*l), dim(*r), dim(*out))));
        }
        let mut mirrored = Vec::new();
        for ((l, r, k), (out, t)) in &products {
            if l == r || *k == ProductKind::Action {
                continue;
            }
            let sign = match k {
                ProductKind::Circ => 1,
                ProductKind::Bracket | ProductKind::Form => -1,
                ProductKind::Action => unreachable!(),
            };
            mirrored.push(((*r, *l, *k), (*out, t.transposed(sign))));
        }
        for (key, val) in mirrored {
            products.insert(key, val);
        }
        if d_bracket.left != dim(ComponentTag::D)
            || d_bracket.right != dim(ComponentTag::D)
            || d_bracket.out != dim(ComponentTag::D)
        {
            return Err(CoreError::Schema("d_bracket shape disagrees with dim D".into()));
        }
        Ok(CoordAlgebraData { n, dims, unit, products, d_bracket })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self, tag: ComponentTag) -> usize {
        self.dims[&tag]
    }

    pub fn unit(&self) -> &[Rat] {
        &self.unit
    }

    pub fn unit_element(&self) -> GeneralElement {
        GeneralElement::from_part(ComponentTag::Aplus, self.unit.clone())
    }

    pub fn d_bracket(&self) -> &Tensor {
        &self.d_bracket
    }

    /// Resolved tensor lookup (includes derived transposed cells).
    pub fn tensor(
        &self,
        left: ComponentTag,
        right: ComponentTag,
        kind: ProductKind,
    ) -> Option<(ComponentTag, &Tensor)> {
        self.products.get(&(left, right, kind)).map(|(o, t)| (*o, t))
    }

    fn circ_bracket_pair(
        &self,
        lt: ComponentTag,
        lc: &[Rat],
        rt: ComponentTag,
        rc: &[Rat],
        out: &mut GeneralElement,
    ) {
        let half = rat(1, 2);
        if let Some((ot, t)) = self.tensor(lt, rt, ProductKind::Bracket) {
            let v: Vec<Rat> = t.apply(lc, rc).into_iter().map(|c| c * &half).collect();
            out.add_part(ot, v);
        }
        if let Some((ot, t)) = self.tensor(lt, rt, ProductKind::Circ) {
            let v: Vec<Rat> = t.apply(lc, rc).into_iter().map(|c| c * &half).collect();
            out.add_part(ot, v);
        }
    }

    fn action(&self, lt: ComponentTag, lc: &[Rat], rt: ComponentTag, rc: &[Rat], out: &mut GeneralElement) {
        if let Some((ot, t)) = self.tensor(lt, rt, ProductKind::Action) {
            out.add_part(ot, t.apply(lc, rc));
        }
    }

    /// The 𝔟-algebra product, extending 𝔞's αβ = [α,β]/2 + (α∘β)/2 by the
    /// B-family rules (the mixed orders go through γ).
    pub fn b_mult(&self, x: &GeneralElement, y: &GeneralElement) -> GeneralElement {
        use ComponentTag::*;
        let mut out = GeneralElement::zero();
        for (lt, lc) in x.parts() {
            for (rt, rc) in y.parts() {
                match (lt.in_a(), rt.in_a()) {
                    (true, true) => self.circ_bracket_pair(lt, lc, rt, rc, &mut out),
                    (false, false) => self.circ_bracket_pair(lt, lc, rt, rc, &mut out),
                    (true, false) => {
                        if rt == B {
                            // αb, a stored left action.
                            self.action(lt, lc, rt, rc, &mut out);
                        } else {
                            // αb′ := b′γ(α).
                            let sign = lt.gamma_sign().expect("𝔞 tag");
                            let scaled: Vec<Rat> =
                                lc.iter().map(|c| c * rat_int(sign)).collect();
                            self.action(rt, rc, lt, &scaled, &mut out);
                        }
                    }
                    (false, true) => {
                        if lt == Bprime {
                            // b′α, a stored right action.
                            self.action(lt, lc, rt, rc, &mut out);
                        } else {
                            // bα := γ(α)b.
                            let sign = rt.gamma_sign().expect("𝔞 tag");
                            let scaled: Vec<Rat> =
                                rc.iter().map(|c| c * rat_int(sign)).collect();
                            self.action(rt, &scaled, lt, lc, &mut out);
                        }
                    }
                }
            }
        }
        out
    }

    /// The associative product of 𝔞; errors on B/B′ support.
    pub fn a_mult(
        &self,
        x: &GeneralElement,
        y: &GeneralElement,
    ) -> Result<GeneralElement, CoreError> {
        for e in [x, y] {
            if !e.supported_on(&A_TAGS) {
                return Err(CoreError::Structure(
                    "a_mult arguments must be supported on 𝔞".into(),
                ));
            }
        }
        Ok(self.b_mult(x, y))
    }

    /// The D-valued form ⟨x, y⟩ summed over component pairs.
    pub fn form(&self, x: &GeneralElement, y: &GeneralElement) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim(ComponentTag::D)];
        for (lt, lc) in x.parts() {
            for (rt, rc) in y.parts() {
                if let Some((_, t)) = self.tensor(lt, rt, ProductKind::Form) {
                    for (slot, v) in out.iter_mut().zip(t.apply(lc, rc)) {
                        *slot += v;
                    }
                }
            }
        }
        out
    }

    /// D acting componentwise on a 𝔟-element.
    pub fn d_act(&self, d: &[Rat], x: &GeneralElement) -> GeneralElement {
        let mut out = GeneralElement::zero();
        for (t, c) in x.parts() {
            self.action(ComponentTag::D, d, t, c, &mut out);
        }
        out
    }

    pub fn d_bracket_apply(&self, d1: &[Rat], d2: &[Rat]) -> Vec<Rat> {
        self.d_bracket.apply(d1, d2)
    }

    /// Shape and symmetry invariants plus the unit law; failures are
    /// reports, not errors.
    pub fn validate(&self) -> Vec<CheckReport> {
        let mut reports = Vec::new();
        let mut sym_failures = 0;
        let mut first = None;
        let mut checked = 0;
        for ((l, r, k), (_, t)) in &self.products {
            if l != r {
                continue;
            }
            checked += 1;
            let ok = match k {
                ProductKind::Circ => t.is_symmetric(),
                ProductKind::Bracket | ProductKind::Form => t.is_skew(),
                ProductKind::Action => true,
            };
            if !ok {
                sym_failures += 1;
                if first.is_none() {
                    first = Some(FailureWitness {
                        witness: format!("cell {} x {} ({})", l.name(), r.name(), k.name()),
                        lhs: "tensor".into(),
                        rhs: match k {
                            ProductKind::Circ => "symmetric in its arguments".into(),
                            _ => "skew in its arguments".into(),
                        },
                    });
                }
            }
        }
        reports.push(CheckReport::from_sweep(
            "coord_symmetry",
            checked,
            sym_failures,
            first,
        ));
        reports.push(self.unit_check());
        reports
    }

    /// 1⁺ b = b 1⁺ = b over every component basis vector.
    pub fn unit_check(&self) -> CheckReport {
        let unit = self.unit_element();
        let mut checked = 0;
        for tag in B_ALGEBRA_TAGS {
            for idx in 0..self.dim(tag) {
                checked += 1;
                let v = HomogeneousElement::basis(tag, idx, self.dim(tag)).general();
                for (side, prod) in [
                    ("1⁺·x", self.b_mult(&unit, &v)),
                    ("x·1⁺", self.b_mult(&v, &unit)),
                ] {
                    if prod != v {
                        return CheckReport::fail(
                            "coord_unit",
                            checked,
                            1,
                            FailureWitness {
                                witness: format!("{side} on {}[{idx}]", tag.name()),
                                lhs: prod.describe(),
                                rhs: v.describe(),
                            },
                        );
                    }
                }
            }
        }
        CheckReport::pass("coord_unit", checked)
    }

    /// γ: the sign involution on 𝔞.
    pub fn gamma(&self, x: &GeneralElement) -> Result<GeneralElement, CoreError> {
        if !x.supported_on(&A_TAGS) {
            return Err(CoreError::Structure("γ is defined on 𝔞 only".into()));
        }
        let mut out = GeneralElement::zero();
        for (t, c) in x.parts() {
            let sign = t.gamma_sign().expect("𝔞 tag");
            out.add_part(t, c.iter().map(|v| v * rat_int(sign)).collect());
        }
        Ok(out)
    }

    /// η: γ on 𝔞-parts, identity on B and B′.
    pub fn eta(&self, x: &GeneralElement) -> GeneralElement {
        let mut out = GeneralElement::zero();
        for (t, c) in x.parts() {
            let sign = t.eta_sign().expect("𝔟 tag");
            out.add_part(t, c.iter().map(|v| v * rat_int(sign)).collect());
        }
        out
    }

    /// The hermitian form χ(β₁, β₂) = β₁β₂ on B⊕B′.
    pub fn chi(
        &self,
        x: &GeneralElement,
        y: &GeneralElement,
    ) -> Result<GeneralElement, CoreError> {
        let bb = [ComponentTag::B, ComponentTag::Bprime];
        if !x.supported_on(&bb) || !y.supported_on(&bb) {
            return Err(CoreError::Structure(
                "χ arguments must be supported on B⊕B'".into(),
            ));
        }
        Ok(self.b_mult(x, y))
    }

    /// JSON serialization: canonical cells only (derived transposes are
    /// reconstructed at load), zero tensors omitted, deterministic order.
    pub fn to_json(&self) -> String {
        let file = CoordFile {
            schema: COORD_SCHEMA.to_string(),
            n: self.n,
            dims: self
                .dims
                .iter()
                .map(|(t, d)| (t.name().to_string(), *d))
                .collect(),
            unit: self.unit.iter().map(format_rat).collect(),
            products: canonical_cells()
                .into_iter()
                .filter_map(|(l, r, k, _)| {
                    let (out, t) = self.products.get(&(l, r, k))?;
                    if t.is_zero() {
                        return None;
                    }
                    Some(ProductFile {
                        left: l.name().into(),
                        right: r.name().into(),
                        out: out.name().into(),
                        kind: k.name().into(),
                        tensor: t
                            .entries
                            .iter()
                            .map(|(i, j, k2, c)| (*i, *j, *k2, format_rat(c)))
                            .collect(),
                    })
                })
                .collect(),
            d_bracket: self
                .d_bracket
                .entries
                .iter()
                .map(|(i, j, k, c)| (*i, *j, *k, format_rat(c)))
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("coord data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, CoreError> {
        let file: CoordFile = serde_json::from_str(s)?;
        if file.schema != COORD_SCHEMA {
            return Err(CoreError::Schema(format!(
                "expected schema {COORD_SCHEMA:?}, found {:?}",
                file.schema
            )));
        }
        let mut dims = BTreeMap::new();
        for (name, d) in &file.dims {
            dims.insert(ComponentTag::parse(name)?, *d);
        }
        let unit = file.unit.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>, _>>()?;
        let dim_of = |t: ComponentTag, dims: &BTreeMap<ComponentTag, usize>| -> Result<usize, CoreError> {
            dims.get(&t)
                .copied()
                .ok_or_else(|| CoreError::Schema(format!("dims missing component {}", t.name())))
        };
        let mut entries = Vec::new();
        for p in &file.products {
            let left = ComponentTag::parse(&p.left)?;
            let right = ComponentTag::parse(&p.right)?;
            let out = ComponentTag::parse(&p.out)?;
            let kind = ProductKind::parse(&p.kind)?;
            let raw = p
                .tensor
                .iter()
                .map(|(i, j, k, c)| Ok((*i, *j, *k, parse_rat(c)?)))
                .collect::<Result<Vec<_>, CoreError>>()?;
            let tensor = Tensor::from_entries(
                dim_of(left, &dims)?,
                dim_of(right, &dims)?,
                dim_of(out, &dims)?,
                raw,
            )?;
            entries.push(ProductEntry { left, right, out, kind, tensor });
        }
        let d = dim_of(ComponentTag::D, &dims)?;
        let d_bracket = Tensor::from_entries(
            d,
            d,
            d,
            file.d_bracket
                .iter()
                .map(|(i, j, k, c)| Ok((*i, *j, *k, parse_rat(c)?)))
                .collect::<Result<Vec<_>, CoreError>>()?,
        )?;
        CoordAlgebraData::new(file.n, dims, unit, entries, d_bracket)
    }
}

#[derive(Serialize, Deserialize)]
struct CoordFile {
    schema: String,
    n: usize,
    dims: BTreeMap<String, usize>,
    unit: Vec<String>,
    products: Vec<ProductFile>,
    d_bracket: Vec<(usize, usize, usize, String)>,
}

#[derive(Serialize, Deserialize)]
struct ProductFile {
    left: String,
    right: String,
    out: String,
    kind: String,
    tensor: Vec<(usize, usize, usize, String)>,
}

/// A raw associative algebra with involution-free data: the input of the
/// A⁺/A⁻ doubling.
#[derive(Clone, Debug)]
pub struct AssocAlgebra {
    pub dim: usize,
    pub d_dim: usize,
    pub unit: Vec<Rat>,
    /// Structure constants of the associative product a_i a_j = Σ m_ijk a_k.
    pub mult: Tensor,
    /// The D-valued skew form ⟨a_i, a_j⟩.
    pub form: Tensor,
}

impl AssocAlgebra {
    pub fn apply(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        self.mult.apply(x, y)
    }
}

/// Double A into the A⁺/A⁻ data: both copies carry the symmetrized and
/// antisymmetrized products, routed per the 2×2 block of the 𝔞-table
/// (a⁺b⁺ and a⁻b⁻ have A⁺-part (a∘b)/2 and A⁻-part [a,b]/2; mixed pairs
/// swap the targets).  The D-form restricts to both copies; the mixed
/// form ⟨A⁺, A⁻⟩ is zero.
pub fn split_a(raw: &AssocAlgebra, n: usize) -> Result<CoordAlgebraData, CoreError> {
    use ComponentTag::*;
    let d = raw.dim;
    let mut circ = Vec::new();
    let mut bracket = Vec::new();
    let mut m = BTreeMap::new();
    for (i, j, k, c) in &raw.mult.entries {
        *m.entry((*i, *j, *k)).or_insert_with(Rat::zero) += c;
    }
    for (&(i, j, k), c) in &m {
        let swapped = m.get(&(j, i, k)).cloned().unwrap_or_else(Rat::zero);
        // Emit each unordered pair once through the (i,j) slot.
        circ.push((i, j, k, c + &swapped));
        bracket.push((i, j, k, c - &swapped));
        if i != j && !m.contains_key(&(j, i, k)) {
            circ.push((j, i, k, c + &swapped));
            bracket.push((j, i, k, (c - &swapped) * rat_int(-1)));
        }
    }
    let circ = Tensor::from_entries(d, d, d, circ)?;
    let bracket = Tensor::from_entries(d, d, d, bracket)?;
    let mut dims = BTreeMap::new();
    for tag in ALL_TAGS {
        dims.insert(tag, 0);
    }
    dims.insert(Aplus, d);
    dims.insert(Aminus, d);
    dims.insert(D, raw.d_dim);
    let f = |l, r, k, out, t: &Tensor| ProductEntry {
        left: l,
        right: r,
        out,
        kind: k,
        tensor: t.clone(),
    };
    let entries = vec![
        f(Aplus, Aplus, ProductKind::Circ, Aplus, &circ),
        f(Aplus, Aplus, ProductKind::Bracket, Aminus, &bracket),
        f(Aplus, Aminus, ProductKind::Circ, Aminus, &circ),
        f(Aplus, Aminus, ProductKind::Bracket, Aplus, &bracket),
        f(Aminus, Aminus, ProductKind::Circ, Aplus, &circ),
        f(Aminus, Aminus, ProductKind::Bracket, Aminus, &bracket),
        f(Aplus, Aplus, ProductKind::Form, D, &raw.form),
        f(Aminus, Aminus, ProductKind::Form, D, &raw.form),
    ];
    CoordAlgebraData::new(
        n,
        dims,
        raw.unit.clone(),
        entries,
        Tensor::zero(raw.d_dim, raw.d_dim, raw.d_dim),
    )
}
