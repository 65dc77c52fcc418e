//! Exact sweeps verifying the algebraic laws of the coordinate structure:
//! associativity of 𝔞, the antiautomorphisms γ and η, the unit, the
//! 𝔞-bimodule laws on B⊕B′, the hermitian form χ, the ⟨·,·⟩ derivation
//! rule, and D acting by derivations.
//!
//! Every law is multilinear, so sweeping basis tuples in lexicographic
//! order is complete; the first failing tuple is reported as a witness.
//! A sweep with nothing to iterate (zero-dimensional components) reports
//! a vacuous pass with checked = 0.

use crate::coordalg::{
    ComponentTag, CoordAlgebraData, GeneralElement, HomogeneousElement, ProductKind, A_TAGS,
    B_ALGEBRA_TAGS,
};
use crate::linalg::SubspaceBasis;
use crate::report::{CheckReport, FailureWitness};
use crate::scalars::{format_rat, rat_int, Rat};
use num_traits::Zero;

/// The closed list of verified laws.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LawId {
    AssocA,
    GammaInvolution,
    EtaInvolution,
    Unit,
    BimoduleAssoc,
    HermitianI,
    HermitianII,
    HermitianIII,
    DerivationRuleBB,
    DerivationRuleOther,
    DDerivations,
    DIdealDecomp,
    DSpan,
    AtildeIso,
}

pub const ALL_LAWS: [LawId; 14] = [
    LawId::AssocA,
    LawId::GammaInvolution,
    LawId::EtaInvolution,
    LawId::Unit,
    LawId::BimoduleAssoc,
    LawId::HermitianI,
    LawId::HermitianII,
    LawId::HermitianIII,
    LawId::DerivationRuleBB,
    LawId::DerivationRuleOther,
    LawId::DDerivations,
    LawId::DIdealDecomp,
    LawId::DSpan,
    LawId::AtildeIso,
];

impl LawId {
    pub fn name(self) -> &'static str {
        match self {
            LawId::AssocA => "assoc_a",
            LawId::GammaInvolution => "gamma_involution",
            LawId::EtaInvolution => "eta_involution",
            LawId::Unit => "unit",
            LawId::BimoduleAssoc => "bimodule_assoc",
            LawId::HermitianI => "hermitian_i",
            LawId::HermitianII => "hermitian_ii",
            LawId::HermitianIII => "hermitian_iii",
            LawId::DerivationRuleBB => "derivation_rule_bb",
            LawId::DerivationRuleOther => "derivation_rule_other",
            LawId::DDerivations => "d_derivations",
            LawId::DIdealDecomp => "d_ideal_decomp",
            LawId::DSpan => "d_span",
            LawId::AtildeIso => "atilde_iso",
        }
    }
}

/// The ordered tag pairs on which ⟨·,·⟩ can be nonzero.
const FORM_PAIRS: [(ComponentTag, ComponentTag); 8] = [
    (ComponentTag::Aplus, ComponentTag::Aplus),
    (ComponentTag::Aminus, ComponentTag::Aminus),
    (ComponentTag::B, ComponentTag::Bprime),
    (ComponentTag::Bprime, ComponentTag::B),
    (ComponentTag::C, ComponentTag::Cprime),
    (ComponentTag::Cprime, ComponentTag::C),
    (ComponentTag::E, ComponentTag::Eprime),
    (ComponentTag::Eprime, ComponentTag::E),
];

/// The five canonical form families (unordered representatives).
const FORM_FAMILIES: [(ComponentTag, ComponentTag); 5] = [
    (ComponentTag::Aplus, ComponentTag::Aplus),
    (ComponentTag::Aminus, ComponentTag::Aminus),
    (ComponentTag::B, ComponentTag::Bprime),
    (ComponentTag::C, ComponentTag::Cprime),
    (ComponentTag::E, ComponentTag::Eprime),
];

fn basis_of(data: &CoordAlgebraData, tags: &[ComponentTag]) -> Vec<HomogeneousElement> {
    let mut out = Vec::new();
    for &tag in tags {
        for idx in 0..data.dim(tag) {
            out.push(HomogeneousElement::basis(tag, idx, data.dim(tag)));
        }
    }
    out
}

fn a_basis(data: &CoordAlgebraData) -> Vec<HomogeneousElement> {
    basis_of(data, &A_TAGS)
}

fn b_basis(data: &CoordAlgebraData) -> Vec<HomogeneousElement> {
    basis_of(data, &B_ALGEBRA_TAGS)
}

fn bb_basis(data: &CoordAlgebraData) -> Vec<HomogeneousElement> {
    basis_of(data, &[ComponentTag::B, ComponentTag::Bprime])
}

fn describe(h: &HomogeneousElement) -> String {
    let hot = h
        .coords
        .iter()
        .position(|c| !c.is_zero())
        .map(|i| i.to_string())
        .unwrap_or_else(|| "?".into());
    format!("{}[{}]", h.tag.name(), hot)
}

struct Sweep {
    name: &'static str,
    checked: usize,
    failures: usize,
    first: Option<FailureWitness>,
}

impl Sweep {
    fn new(name: &'static str) -> Self {
        Sweep { name, checked: 0, failures: 0, first: None }
    }

    fn compare(&mut self, witness: impl FnOnce() -> String, lhs: &GeneralElement, rhs: &GeneralElement) {
        self.checked += 1;
        if lhs != rhs {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(FailureWitness {
                    witness: witness(),
                    lhs: lhs.describe(),
                    rhs: rhs.describe(),
                });
            }
        }
    }

    fn compare_vec(&mut self, witness: impl FnOnce() -> String, lhs: &[Rat], rhs: &[Rat]) {
        self.checked += 1;
        if lhs != rhs {
            self.failures += 1;
            if self.first.is_none() {
                let fmt = |v: &[Rat]| {
                    let parts: Vec<String> = v.iter().map(format_rat).collect();
                    format!("[{}]", parts.join(","))
                };
                self.first = Some(FailureWitness {
                    witness: witness(),
                    lhs: fmt(lhs),
                    rhs: fmt(rhs),
                });
            }
        }
    }

    fn assert_with(&mut self, ok: bool, witness: impl FnOnce() -> FailureWitness) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(witness());
            }
        }
    }

    fn report(self) -> CheckReport {
        CheckReport::from_sweep(self.name, self.checked, self.failures, self.first)
    }
}

/// (α₁α₂)α₃ = α₁(α₂α₃) over all homogeneous basis triples of 𝔞.
pub fn check_assoc_a(data: &CoordAlgebraData) -> CheckReport {
    let basis = a_basis(data);
    let mut sweep = Sweep::new(LawId::AssocA.name());
    for x in &basis {
        let xg = x.general();
        for y in &basis {
            let yg = y.general();
            let xy = data.b_mult(&xg, &yg);
            for z in &basis {
                let zg = z.general();
                let lhs = data.b_mult(&xy, &zg);
                let rhs = data.b_mult(&xg, &data.b_mult(&yg, &zg));
                sweep.compare(
                    || format!("({}, {}, {})", describe(x), describe(y), describe(z)),
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    sweep.report()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    Gamma,
    Eta,
}

/// γ (on 𝔞) or η (on 𝔟): order two and antihomomorphism over basis pairs.
pub fn check_antiautomorphism(data: &CoordAlgebraData, which: Involution) -> CheckReport {
    let (law, basis) = match which {
        Involution::Gamma => (LawId::GammaInvolution, a_basis(data)),
        Involution::Eta => (LawId::EtaInvolution, b_basis(data)),
    };
    let apply = |e: &GeneralElement| -> GeneralElement {
        match which {
            Involution::Gamma => data.gamma(e).expect("𝔞 support"),
            Involution::Eta => data.eta(e),
        }
    };
    let mut sweep = Sweep::new(law.name());
    for x in &basis {
        let xg = x.general();
        sweep.compare(|| format!("{} (order two)", describe(x)), &apply(&apply(&xg)), &xg);
        for y in &basis {
            let yg = y.general();
            let lhs = apply(&data.b_mult(&xg, &yg));
            let rhs = data.b_mult(&apply(&yg), &apply(&xg));
            sweep.compare(|| format!("({}, {})", describe(x), describe(y)), &lhs, &rhs);
        }
    }
    sweep.report()
}

/// 1⁺x = x1⁺ = x over every component basis vector.
pub fn check_unit(data: &CoordAlgebraData) -> CheckReport {
    let unit = data.unit_element();
    let mut sweep = Sweep::new(LawId::Unit.name());
    for v in b_basis(data) {
        let vg = v.general();
        sweep.compare(|| format!("1⁺ · {}", describe(&v)), &data.b_mult(&unit, &vg), &vg);
        sweep.compare(|| format!("{} · 1⁺", describe(&v)), &data.b_mult(&vg, &unit), &vg);
    }
    sweep.report()
}

/// The 𝔞-bimodule laws on B⊕B′ plus closure: 𝒜·B ⊆ B, B′·𝒜 ⊆ B′, and
/// 𝒜·𝒜 ⊆ 𝒜.  Only the two one-sided placements are laws: the opposite
/// actions are defined through η, so the middle placement (αv)β = α(vβ)
/// would force the commutators of 𝔞 to kill B⊕B′ and is not asserted.
pub fn check_bimodule(data: &CoordAlgebraData) -> CheckReport {
    let a = a_basis(data);
    let bb = bb_basis(data);
    let mut sweep = Sweep::new(LawId::BimoduleAssoc.name());
    for x in &a {
        let xg = x.general();
        for y in &a {
            let yg = y.general();
            let xy = data.b_mult(&xg, &yg);
            for v in &bb {
                let vg = v.general();
                let name = || format!("({}, {}, {})", describe(x), describe(y), describe(v));
                sweep.compare(name, &data.b_mult(&xy, &vg), &data.b_mult(&xg, &data.b_mult(&yg, &vg)));
                let name = || format!("({}, {}, {})", describe(v), describe(x), describe(y));
                sweep.compare(name, &data.b_mult(&vg, &xy), &data.b_mult(&data.b_mult(&vg, &xg), &yg));
            }
        }
    }
    // Closure sweeps: products may not leak outside the expected spaces.
    let script_a = [ComponentTag::Aplus, ComponentTag::Aminus];
    let a_only = basis_of(data, &script_a);
    for x in &a_only {
        let xg = x.general();
        for y in &a_only {
            let prod = data.b_mult(&xg, &y.general());
            sweep.assert_with(prod.supported_on(&script_a), || FailureWitness {
                witness: format!("𝒜-closure ({}, {})", describe(x), describe(y)),
                lhs: prod.describe(),
                rhs: "supported on A⁺⊕A⁻".into(),
            });
        }
        for v in &bb {
            let left = data.b_mult(&xg, &v.general());
            let right = data.b_mult(&v.general(), &xg);
            for prod in [&left, &right] {
                sweep.assert_with(prod.supported_on(&[v.tag]), || FailureWitness {
                    witness: format!("𝒜-module closure ({}, {})", describe(x), describe(v)),
                    lhs: prod.describe(),
                    rhs: format!("supported on {}", v.tag.name()),
                });
            }
        }
    }
    sweep.report()
}

/// The three hermitian-form laws for χ(β₁,β₂) = β₁β₂ on B⊕B′.
pub fn check_hermitian(data: &CoordAlgebraData) -> Vec<CheckReport> {
    let a = a_basis(data);
    let bb = bb_basis(data);
    let mut one = Sweep::new(LawId::HermitianI.name());
    let mut two = Sweep::new(LawId::HermitianII.name());
    let mut three = Sweep::new(LawId::HermitianIII.name());
    for b1 in &bb {
        let b1g = b1.general();
        for b2 in &bb {
            let b2g = b2.general();
            let chi = data.chi(&b1g, &b2g).expect("B⊕B' support");
            two.compare(
                || format!("({}, {})", describe(b1), describe(b2)),
                &data.eta(&chi),
                &data.chi(&b2g, &b1g).expect("B⊕B' support"),
            );
            for alpha in &a {
                let ag = alpha.general();
                let name = || format!("({}, {}, {})", describe(alpha), describe(b1), describe(b2));
                one.compare(
                    name,
                    &data.chi(&data.b_mult(&ag, &b1g), &b2g).expect("B⊕B' support"),
                    &data.b_mult(&ag, &chi),
                );
                let name = || format!("({}, {}, {})", describe(b1), describe(alpha), describe(b2));
                three.compare(
                    name,
                    &data.chi(&b1g, &data.b_mult(&ag, &b2g)).expect("B⊕B' support"),
                    &data.b_mult(&chi, &data.eta(&ag)),
                );
            }
        }
    }
    vec![one.report(), two.report(), three.report()]
}

fn form_of_pair(data: &CoordAlgebraData, x: &HomogeneousElement, y: &HomogeneousElement) -> Vec<Rat> {
    data.form(&x.general(), &y.general())
}

/// ⟨α₁,α₂⟩ applied (as a D-action) to α₃, compared against the case-split
/// right side: the (n+1)-corrected product expression when all three lie
/// in B⊕B′, the plain module action when α₃ ∈ B⊕B′ with α₁,α₂ ∈ 𝔞, and
/// the 𝔞-commutator with [α₁,α₂]_{A⁻} otherwise.
pub fn check_derivation_rule(data: &CoordAlgebraData) -> Vec<CheckReport> {
    let mut bb_case = Sweep::new(LawId::DerivationRuleBB.name());
    let mut other = Sweep::new(LawId::DerivationRuleOther.name());
    let n1 = rat_int(data.n() as i64 + 1);
    for (t1, t2) in FORM_PAIRS {
        let pair_in_b = !t1.in_a();
        let bracket = data.tensor(t1, t2, ProductKind::Bracket);
        for i in 0..data.dim(t1) {
            let a1 = HomogeneousElement::basis(t1, i, data.dim(t1));
            for j in 0..data.dim(t2) {
                let a2 = HomogeneousElement::basis(t2, j, data.dim(t2));
                let d = form_of_pair(data, &a1, &a2);
                // [α₁,α₂]_{A⁻} as an element of 𝔞.
                let aminus = match bracket {
                    Some((out, t)) => {
                        debug_assert_eq!(out, ComponentTag::Aminus);
                        GeneralElement::from_part(out, t.apply(&a1.coords, &a2.coords))
                    }
                    None => GeneralElement::zero(),
                };
                for t3 in B_ALGEBRA_TAGS {
                    for k in 0..data.dim(t3) {
                        let a3 = HomogeneousElement::basis(t3, k, data.dim(t3));
                        let a3g = a3.general();
                        let lhs = data.d_act(&d, &a3g);
                        let name = || {
                            format!("({}, {}, {})", describe(&a1), describe(&a2), describe(&a3))
                        };
                        if pair_in_b && !t3.in_a() {
                            // all three in B⊕B′: the (n+1)-corrected rule
                            // ⟨α₁,α₂⟩α₃ = [α₁,α₂]_{A⁻}α₃ + (n+1)((α₃α₂)α₁ − (α₃α₁)α₂).
                            let a3a2 = data.b_mult(&a3g, &a2.general());
                            let a3a1 = data.b_mult(&a3g, &a1.general());
                            let corr = data
                                .b_mult(&a3a2, &a1.general())
                                .add(&data.b_mult(&a3a1, &a2.general()).scale(&rat_int(-1)));
                            let rhs = data.b_mult(&aminus, &a3g).add(&corr.scale(&n1));
                            bb_case.compare(name, &lhs, &rhs);
                        } else if !pair_in_b && !t3.in_a() {
                            // α₁,α₂ ∈ 𝔞, α₃ ∈ B⊕B′: plain one-sided action.
                            let rhs = data.b_mult(&aminus, &a3g);
                            other.compare(name, &lhs, &rhs);
                        } else {
                            // α₃ ∈ 𝔞: commutator with the A⁻ element.
                            let rhs = data
                                .b_mult(&aminus, &a3g)
                                .add(&data.b_mult(&a3g, &aminus).scale(&rat_int(-1)));
                            other.compare(name, &lhs, &rhs);
                        }
                    }
                }
            }
        }
    }
    vec![bb_case.report(), other.report()]
}

/// D is a Lie algebra of derivations: Leibniz over every product of the
/// component table and over the forms, [d,⟨α,β⟩] = ⟨dα,β⟩ + ⟨α,dβ⟩.
pub fn check_d_derivations(data: &CoordAlgebraData) -> CheckReport {
    let d_dim = data.dim(ComponentTag::D);
    let mut sweep = Sweep::new(LawId::DDerivations.name());
    let basis = b_basis(data);
    for di in 0..d_dim {
        let mut d = vec![Rat::zero(); d_dim];
        d[di] = rat_int(1);
        for x in &basis {
            let xg = x.general();
            let dx = data.d_act(&d, &xg);
            for y in &basis {
                let yg = y.general();
                let dy = data.d_act(&d, &yg);
                let name = || format!("(d[{di}], {}, {})", describe(x), describe(y));
                // Product Leibniz.
                let lhs = data.d_act(&d, &data.b_mult(&xg, &yg));
                let rhs = data.b_mult(&dx, &yg).add(&data.b_mult(&xg, &dy));
                sweep.compare(name, &lhs, &rhs);
                // Form Leibniz.
                let name = || format!("form (d[{di}], {}, {})", describe(x), describe(y));
                let lhs = data.d_bracket_apply(&d, &data.form(&xg, &yg));
                let mut rhs = data.form(&dx, &yg);
                for (slot, v) in rhs.iter_mut().zip(data.form(&xg, &dy)) {
                    *slot += v;
                }
                sweep.compare_vec(name, &lhs, &rhs);
            }
        }
    }
    sweep.report()
}

fn family_span(data: &CoordAlgebraData, t1: ComponentTag, t2: ComponentTag) -> Vec<Vec<Rat>> {
    let mut vecs = Vec::new();
    for i in 0..data.dim(t1) {
        let x = HomogeneousElement::basis(t1, i, data.dim(t1));
        for j in 0..data.dim(t2) {
            let y = HomogeneousElement::basis(t2, j, data.dim(t2));
            let v = form_of_pair(data, &x, &y);
            if !v.iter().all(|c| c.is_zero()) {
                vecs.push(v);
            }
        }
    }
    vecs
}

/// Each form image ⟨X,X′⟩ is an ideal of D.
pub fn check_d_ideal_decomp(data: &CoordAlgebraData) -> CheckReport {
    let d_dim = data.dim(ComponentTag::D);
    let mut sweep = Sweep::new(LawId::DIdealDecomp.name());
    for (t1, t2) in FORM_FAMILIES {
        let vecs = family_span(data, t1, t2);
        if vecs.is_empty() {
            continue;
        }
        let span = SubspaceBasis::from_vectors(d_dim, &vecs).expect("span construction");
        for di in 0..d_dim {
            let mut d = vec![Rat::zero(); d_dim];
            d[di] = rat_int(1);
            for v in span.basis() {
                let dv = data.d_bracket_apply(&d, v);
                sweep.assert_with(span.contains(&dv), || FailureWitness {
                    witness: format!("[d[{di}], ⟨{},{}⟩-span]", t1.name(), t2.name()),
                    lhs: "bracket leaves the span".into(),
                    rhs: format!("ideal ⟨{},{}⟩", t1.name(), t2.name()),
                });
            }
        }
    }
    sweep.report()
}

/// D = ⟨𝔟,𝔟⟩: the five form images jointly span D.
pub fn check_d_span(data: &CoordAlgebraData) -> CheckReport {
    let d_dim = data.dim(ComponentTag::D);
    if d_dim == 0 {
        return CheckReport::pass(LawId::DSpan.name(), 0);
    }
    let mut vecs = Vec::new();
    for (t1, t2) in FORM_FAMILIES {
        vecs.extend(family_span(data, t1, t2));
    }
    let count = vecs.len();
    let span_dim = if vecs.is_empty() {
        0
    } else {
        SubspaceBasis::from_vectors(d_dim, &vecs).expect("span construction").dim()
    };
    if span_dim == d_dim {
        CheckReport::pass(LawId::DSpan.name(), count.max(1))
    } else {
        CheckReport::fail(
            LawId::DSpan.name(),
            count.max(1),
            1,
            FailureWitness {
                witness: "⟨𝔟,𝔟⟩".into(),
                lhs: format!("span dimension {span_dim}"),
                rhs: format!("dim D = {d_dim}"),
            },
        )
    }
}

/// 𝒜 = A⁻⊕A⁺ is the double of one associative algebra A: the three stored
/// cells of the A-block share a single ∘ and a single [,] tensor, and the
/// recovered product m = ([,] + ∘)/2 is associative and unital.  This is
/// the structure-constant form of 𝒜 ≅ A⊕A^op with the swap involution.
pub fn check_atilde_iso(data: &CoordAlgebraData) -> CheckReport {
    use ComponentTag::{Aminus, Aplus};
    let mut sweep = Sweep::new(LawId::AtildeIso.name());
    let da = data.dim(Aplus);
    if da != data.dim(Aminus) {
        return CheckReport::fail(
            LawId::AtildeIso.name(),
            1,
            1,
            FailureWitness {
                witness: "dims".into(),
                lhs: format!("dim A+ = {da}"),
                rhs: format!("dim A- = {}", data.dim(Aminus)),
            },
        );
    }
    if da == 0 {
        return CheckReport::pass(LawId::AtildeIso.name(), 0);
    }
    let cells = [(Aplus, Aplus), (Aplus, Aminus), (Aminus, Aminus)];
    let circ0 = data.tensor(Aplus, Aplus, ProductKind::Circ).unwrap().1;
    let bracket0 = data.tensor(Aplus, Aplus, ProductKind::Bracket).unwrap().1;
    for (l, r) in cells {
        for (kind, reference) in [(ProductKind::Circ, circ0), (ProductKind::Bracket, bracket0)] {
            let t = data.tensor(l, r, kind).unwrap().1;
            sweep.assert_with(
                t.same_map(reference),
                || FailureWitness {
                    witness: format!("cell {} x {} ({})", l.name(), r.name(), kind.name()),
                    lhs: "tensor".into(),
                    rhs: "the shared A-block tensor".into(),
                },
            );
        }
    }
    // Recovered associative product on A: m(a,b) = ([a,b] + a∘b)/2.
    let m = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        let br = bracket0.apply(x, y);
        let ci = circ0.apply(x, y);
        br.iter()
            .zip(&ci)
            .map(|(b, c)| (b + c) * crate::scalars::rat(1, 2))
            .collect()
    };
    let basis: Vec<Vec<Rat>> = (0..da)
        .map(|i| {
            let mut v = vec![Rat::zero(); da];
            v[i] = rat_int(1);
            v
        })
        .collect();
    for (i, x) in basis.iter().enumerate() {
        let ux = m(data.unit(), x);
        sweep.assert_with(&ux == x, || FailureWitness {
            witness: format!("1·a_{i}"),
            lhs: format!("{ux:?}"),
            rhs: "a_i".into(),
        });
        let xu = m(x, data.unit());
        sweep.assert_with(&xu == x, || FailureWitness {
            witness: format!("a_{i}·1"),
            lhs: format!("{xu:?}"),
            rhs: "a_i".into(),
        });
        for y in &basis {
            for (k, z) in basis.iter().enumerate() {
                let lhs = m(&m(x, y), z);
                let rhs = m(x, &m(y, z));
                sweep.assert_with(lhs == rhs, || FailureWitness {
                    witness: format!("recovered assoc (a_{i}, ·, a_{k})"),
                    lhs: format!("{lhs:?}"),
                    rhs: format!("{rhs:?}"),
                });
            }
        }
    }
    sweep.report()
}

/// Dispatch one law.
pub fn check_law(data: &CoordAlgebraData, law: LawId) -> CheckReport {
    match law {
        LawId::AssocA => check_assoc_a(data),
        LawId::GammaInvolution => check_antiautomorphism(data, Involution::Gamma),
        LawId::EtaInvolution => check_antiautomorphism(data, Involution::Eta),
        LawId::Unit => check_unit(data),
        LawId::BimoduleAssoc => check_bimodule(data),
        LawId::HermitianI => check_hermitian(data).remove(0),
        LawId::HermitianII => check_hermitian(data).remove(1),
        LawId::HermitianIII => check_hermitian(data).remove(2),
        LawId::DerivationRuleBB => check_derivation_rule(data).remove(0),
        LawId::DerivationRuleOther => check_derivation_rule(data).remove(1),
        LawId::DDerivations => check_d_derivations(data),
        LawId::DIdealDecomp => check_d_ideal_decomp(data),
        LawId::DSpan => check_d_span(data),
        LawId::AtildeIso => check_atilde_iso(data),
    }
}

/// Run every law once, in declaration order.
pub fn full_suite(data: &CoordAlgebraData) -> Vec<CheckReport> {
    let mut out = Vec::new();
    out.push(check_assoc_a(data));
    out.push(check_antiautomorphism(data, Involution::Gamma));
    out.push(check_antiautomorphism(data, Involution::Eta));
    out.push(check_unit(data));
    out.push(check_bimodule(data));
    out.extend(check_hermitian(data));
    out.extend(check_derivation_rule(data));
    out.push(check_d_derivations(data));
    out.push(check_d_ideal_decomp(data));
    out.push(check_d_span(data));
    out.push(check_atilde_iso(data));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coordalg::{split_a, AssocAlgebra, ProductEntry, Tensor};
    use crate::scalars::rat;
    use std::collections::BTreeMap;

    fn mat2_algebra() -> AssocAlgebra {
        // 2×2 matrices, basis E11, E12, E21, E22 (row-major).
        let e = |i: usize, j: usize| i * 2 + j;
        let mut entries = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        if j == k {
                            entries.push((e(i, j), e(k, l), e(i, l), rat_int(1)));
                        }
                    }
                }
            }
        }
        AssocAlgebra {
            dim: 4,
            d_dim: 0,
            unit: vec![rat_int(1), rat_int(0), rat_int(0), rat_int(1)],
            mult: Tensor::from_entries(4, 4, 4, entries).unwrap(),
            form: Tensor::zero(4, 4, 0),
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
                vec![
                    (0, 0, 0, rat_int(1)),
                    (0, 1, 1, rat_int(1)),
                    (1, 0, 1, rat_int(1)),
                ],
            )
            .unwrap(),
            form: Tensor::zero(2, 2, 0),
        }
    }

    #[test]
    fn matrix_algebra_double_passes_every_a_law() {
        let data = split_a(&mat2_algebra(), 6).unwrap();
        for law in [LawId::AssocA, LawId::GammaInvolution, LawId::EtaInvolution, LawId::Unit, LawId::AtildeIso] {
            let r = check_law(&data, law);
            assert!(r.is_pass(), "{}: {:?}", r.check, r.first_failure);
            assert!(r.checked > 0, "{} must not be vacuous here", r.check);
        }
    }

    #[test]
    fn b_laws_are_vacuous_without_b_components() {
        let data = split_a(&dual_numbers(), 4).unwrap();
        for law in [
            LawId::BimoduleAssoc,
            LawId::HermitianI,
            LawId::HermitianII,
            LawId::HermitianIII,
            LawId::DerivationRuleBB,
            LawId::DDerivations,
            LawId::DSpan,
        ] {
            let r = check_law(&data, law);
            assert!(r.is_pass(), "{}: {:?}", r.check, r.first_failure);
        }
        let bb = check_law(&data, LawId::DerivationRuleBB);
        assert_eq!(bb.checked, 0, "no B components, nothing to sweep");
    }

    #[test]
    fn corrupted_product_fails_associativity_with_a_named_triple() {
        let mut raw = mat2_algebra();
        // Perturb one structure constant: E11·E12 picks up a spurious E21.
        raw.mult.entries.push((0, 1, 2, rat(1, 3)));
        let data = split_a(&raw, 6).unwrap();
        let r = check_assoc_a(&data);
        assert!(!r.is_pass(), "corruption must be detected");
        let w = r.first_failure.unwrap();
        assert!(w.witness.contains("A"), "witness names tags: {}", w.witness);
    }

    #[test]
    fn full_suite_runs_all_fourteen_laws() {
        let data = split_a(&dual_numbers(), 4).unwrap();
        let reports = full_suite(&data);
        assert_eq!(reports.len(), ALL_LAWS.len());
        for (r, law) in reports.iter().zip(ALL_LAWS) {
            assert_eq!(r.check, law.name(), "declaration order matches");
            assert!(r.is_pass(), "{}: {:?}", r.check, r.first_failure);
        }
    }

    #[test]
    fn atilde_iso_detects_diverging_block_tensors() {
        // Build data where circ(A⁺,A⁺) disagrees with circ(A⁻,A⁻).
        let mut dims = BTreeMap::new();
        for tag in crate::coordalg::ALL_TAGS {
            dims.insert(tag, 0);
        }
        dims.insert(ComponentTag::Aplus, 1);
        dims.insert(ComponentTag::Aminus, 1);
        let t2 = Tensor::from_entries(1, 1, 1, vec![(0, 0, 0, rat_int(2))]).unwrap();
        let t4 = Tensor::from_entries(1, 1, 1, vec![(0, 0, 0, rat_int(4))]).unwrap();
        let data = crate::coordalg::CoordAlgebraData::new(
            4,
            dims,
            vec![rat_int(1)],
            vec![
                ProductEntry {
                    left: ComponentTag::Aplus,
                    right: ComponentTag::Aplus,
                    out: ComponentTag::Aplus,
                    kind: ProductKind::Circ,
                    tensor: t2.clone(),
                },
                ProductEntry {
                    left: ComponentTag::Aplus,
                    right: ComponentTag::Aminus,
                    out: ComponentTag::Aminus,
                    kind: ProductKind::Circ,
                    tensor: t2,
                },
                ProductEntry {
                    left: ComponentTag::Aminus,
                    right: ComponentTag::Aminus,
                    out: ComponentTag::Aplus,
                    kind: ProductKind::Circ,
                    tensor: t4,
                },
            ],
            Tensor::zero(0, 0, 0),
        )
        .unwrap();
        let r = check_atilde_iso(&data);
        assert!(!r.is_pass(), "diverging cells are not a single A: {r:?}");
        assert!(r
            .first_failure
            .unwrap()
            .witness
            .contains("A- x A-"));
    }

    #[test]
    fn hermitian_laws_hold_on_a_handmade_bimodule() {
        // 𝔞 = ℚ⊕ℚ^op (split field), B = B′ = ℚ with 1⁻ acting as +1 and
        // the pairing bb′ = 1⁺/2 + 1⁻/2.  Hermitian and bimodule laws
        // hold; this data is not Lie-derived so derivation rules are not
        // asserted here.
        let mut dims = BTreeMap::new();
        for tag in crate::coordalg::ALL_TAGS {
            dims.insert(tag, 0);
        }
        for tag in [ComponentTag::Aplus, ComponentTag::Aminus, ComponentTag::B, ComponentTag::Bprime] {
            dims.insert(tag, 1);
        }
        let two = || Tensor::from_entries(1, 1, 1, vec![(0, 0, 0, rat_int(2))]).unwrap();
        let one = || Tensor::from_entries(1, 1, 1, vec![(0, 0, 0, rat_int(1))]).unwrap();
        let entries = vec![
            ProductEntry { left: ComponentTag::Aplus, right: ComponentTag::Aplus, out: ComponentTag::Aplus, kind: ProductKind::Circ, tensor: two() },
            ProductEntry { left: ComponentTag::Aplus, right: ComponentTag::Aminus, out: ComponentTag::Aminus, kind: ProductKind::Circ, tensor: two() },
            ProductEntry { left: ComponentTag::Aminus, right: ComponentTag::Aminus, out: ComponentTag::Aplus, kind: ProductKind::Circ, tensor: two() },
            // Unit actions on B and B′, and the 1⁻-action with κ = τ = 1.
            ProductEntry { left: ComponentTag::Aplus, right: ComponentTag::B, out: ComponentTag::B, kind: ProductKind::Action, tensor: one() },
            ProductEntry { left: ComponentTag::Aminus, right: ComponentTag::B, out: ComponentTag::B, kind: ProductKind::Action, tensor: one() },
            ProductEntry { left: ComponentTag::Bprime, right: ComponentTag::Aplus, out: ComponentTag::Bprime, kind: ProductKind::Action, tensor: one() },
            ProductEntry { left: ComponentTag::Bprime, right: ComponentTag::Aminus, out: ComponentTag::Bprime, kind: ProductKind::Action, tensor: one() },
            // bb′ = 1⁻/2 + 1⁺/2.
            ProductEntry { left: ComponentTag::B, right: ComponentTag::Bprime, out: ComponentTag::Aplus, kind: ProductKind::Circ, tensor: one() },
            ProductEntry { left: ComponentTag::B, right: ComponentTag::Bprime, out: ComponentTag::Aminus, kind: ProductKind::Bracket, tensor: one() },
        ];
        let data = crate::coordalg::CoordAlgebraData::new(
            4,
            dims,
            vec![rat_int(1)],
            entries,
            Tensor::zero(0, 0, 0),
        )
        .unwrap();
        for r in data.validate() {
            assert!(r.is_pass(), "{}: {:?}", r.check, r.first_failure);
        }
        for law in [
            LawId::AssocA,
            LawId::Unit,
            LawId::BimoduleAssoc,
            LawId::HermitianI,
            LawId::HermitianII,
            LawId::HermitianIII,
            LawId::EtaInvolution,
        ] {
            let r = check_law(&data, law);
            assert!(r.is_pass(), "{}: {:?}", r.check, r.first_failure);
            assert!(r.checked > 0, "{} swept something", r.check);
        }
    }
}
