//! The crystal structure on h-strict partitions (signature rule), together
//! with the elementary crystals `B_i`, `T_λ`, their tensor products, and a
//! checker for the crystal axioms (C1)–(C5).

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::cartan::{self, CartanType, Residue, Weight};
use crate::partition::{content, is_h_strict, residue, Node, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Which of the four removable/addable cases produced a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    R1,
    R2,
    A1,
    A2,
}

impl Rule {
    pub fn sign(self) -> Sign {
        match self {
            Rule::R1 | Rule::R2 => Sign::Minus,
            Rule::A1 | Rule::A2 => Sign::Plus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignedNode {
    pub node: Node,
    pub sign: Sign,
    pub rule: Rule,
}

impl SignedNode {
    fn new(row: usize, col: usize, rule: Rule) -> Self {
        SignedNode {
            node: Node::new(row, col),
            sign: rule.sign(),
            rule,
        }
    }
}

/// Signed nodes in rim order (bottom left to top right).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Signature(pub Vec<SignedNode>);

impl Signature {
    pub fn signs(&self) -> Vec<Sign> {
        self.0.iter().map(|s| s.sign).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, sign: Sign) -> usize {
        self.0.iter().filter(|s| s.sign == sign).count()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", s.sign)?;
        }
        Ok(())
    }
}

fn strict_shape(p: Option<Partition>, ct: CartanType) -> Option<Partition> {
    p.filter(|p| is_h_strict(p, ct))
}

/// The `i`-removable nodes (rules R1, R2). An R2 sign sits on the left node.
pub fn removable_nodes(lam: &Partition, ct: CartanType, i: Residue) -> Vec<SignedNode> {
    let mut out = Vec::new();
    for (idx, &len) in lam.parts().iter().enumerate() {
        let row = idx + 1;
        let shorter = strict_shape(lam.shrink_row(row, 1), ct);
        if residue(len, ct) == i && shorter.is_some() {
            out.push(SignedNode::new(row, len, Rule::R1));
        }
        if len >= 2
            && residue(len - 1, ct) == i
            && residue(len, ct) == i
            && shorter.is_some()
            && strict_shape(lam.shrink_row(row, 2), ct).is_some()
        {
            out.push(SignedNode::new(row, len - 1, Rule::R2));
        }
    }
    out
}

/// The `i`-addable nodes (rules A1, A2). An A2 sign sits on the right node.
pub fn addable_nodes(lam: &Partition, ct: CartanType, i: Residue) -> Vec<SignedNode> {
    let mut out = Vec::new();
    for row in 1..=lam.len() + 1 {
        let len = lam.row(row);
        let longer = strict_shape(lam.grow_row(row, 1), ct);
        if residue(len + 1, ct) == i && longer.is_some() {
            out.push(SignedNode::new(row, len + 1, Rule::A1));
        }
        if residue(len + 1, ct) == i
            && residue(len + 2, ct) == i
            && longer.is_some()
            && strict_shape(lam.grow_row(row, 2), ct).is_some()
        {
            out.push(SignedNode::new(row, len + 2, Rule::A2));
        }
    }
    out
}

/// The `i`-signature, sorted by row descending then column ascending.
pub fn signature(lam: &Partition, ct: CartanType, i: Residue) -> Signature {
    let mut all = removable_nodes(lam, ct, i);
    all.extend(addable_nodes(lam, ct, i));
    all.sort_by(|a, b| {
        b.node
            .row
            .cmp(&a.node.row)
            .then(a.node.col.cmp(&b.node.col))
    });
    Signature(all)
}

/// Cancels adjacent `+ −` pairs until the signature reads `−…−+…+`.
pub fn reduce_signature(sig: &Signature) -> Signature {
    let mut stack: Vec<SignedNode> = Vec::with_capacity(sig.len());
    for &s in &sig.0 {
        if s.sign == Sign::Minus && stack.last().is_some_and(|t| t.sign == Sign::Plus) {
            stack.pop();
        } else {
            stack.push(s);
        }
    }
    Signature(stack)
}

fn reduced(lam: &Partition, ct: CartanType, i: Residue) -> Signature {
    reduce_signature(&signature(lam, ct, i))
}

/// Number of `i`-normal nodes.
pub fn eps(lam: &Partition, ct: CartanType, i: Residue) -> usize {
    reduced(lam, ct, i).count(Sign::Minus)
}

/// Number of `i`-conormal nodes.
pub fn phi(lam: &Partition, ct: CartanType, i: Residue) -> usize {
    reduced(lam, ct, i).count(Sign::Plus)
}

/// The `i`-good node (rightmost normal node), if any.
pub fn good_node(lam: &Partition, ct: CartanType, i: Residue) -> Option<SignedNode> {
    reduced(lam, ct, i)
        .0
        .into_iter()
        .rfind(|s| s.sign == Sign::Minus)
}

/// The `i`-cogood node (leftmost conormal node), if any.
pub fn cogood_node(lam: &Partition, ct: CartanType, i: Residue) -> Option<SignedNode> {
    reduced(lam, ct, i)
        .0
        .into_iter()
        .find(|s| s.sign == Sign::Plus)
}

/// Removes the `i`-good node. For an R2 node the row loses its last box,
/// which is the same shape as removing the node itself up to relabelling
/// the two equal-residue columns.
pub fn e_tilde(lam: &Partition, ct: CartanType, i: Residue) -> Option<Partition> {
    let good = good_node(lam, ct, i)?;
    lam.shrink_row(good.node.row, 1)
}

/// Adds the `i`-cogood node (row grows by one box).
pub fn f_tilde(lam: &Partition, ct: CartanType, i: Residue) -> Option<Partition> {
    let cogood = cogood_node(lam, ct, i)?;
    lam.grow_row(cogood.node.row, 1)
}

/// `wt(λ) = Λ₀ − Σ γ_i α_i`.
pub fn weight(lam: &Partition, ct: CartanType) -> Weight {
    Weight::from_content(&content(lam, ct))
}

/// Values of `ε_i`, `φ_i`: an integer, or `None` for `−∞`.
pub type Stat = Option<i64>;

/// An element of one of the crystals modelled here.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    /// A vertex of the partition crystal `𝒫_h`.
    Partition(Partition),
    /// `b_i(n)` in the elementary crystal `B_i`.
    Bi {
        i: Residue,
        n: i64,
    },
    /// The single element `t_λ` of `T_λ`.
    T(Weight),
    Tensor(Box<Element>, Box<Element>),
}

impl Element {
    pub fn tensor(a: Element, b: Element) -> Element {
        Element::Tensor(Box::new(a), Box::new(b))
    }

    pub fn eps(&self, ct: CartanType, i: Residue) -> Stat {
        match self {
            Element::Partition(lam) => Some(eps(lam, ct, i) as i64),
            Element::Bi { i: j, n } => (*j == i).then_some(-n),
            Element::T(_) => None,
            Element::Tensor(b1, b2) => {
                let shifted = b2.eps(ct, i).map(|e| e - b1.wt(ct).pairing(i, ct));
                b1.eps(ct, i).max(shifted)
            }
        }
    }

    pub fn phi(&self, ct: CartanType, i: Residue) -> Stat {
        match self {
            Element::Partition(lam) => Some(phi(lam, ct, i) as i64),
            Element::Bi { i: j, n } => (*j == i).then_some(*n),
            Element::T(_) => None,
            Element::Tensor(b1, b2) => {
                let shifted = b1.phi(ct, i).map(|p| p + b2.wt(ct).pairing(i, ct));
                shifted.max(b2.phi(ct, i))
            }
        }
    }

    pub fn e_tilde(&self, ct: CartanType, i: Residue) -> Option<Element> {
        match self {
            Element::Partition(lam) => e_tilde(lam, ct, i).map(Element::Partition),
            Element::Bi { i: j, n } => (*j == i).then(|| Element::Bi { i, n: n + 1 }),
            Element::T(_) => None,
            Element::Tensor(b1, b2) => {
                // `None` is −∞, which compares below every integer.
                if b1.phi(ct, i) >= b2.eps(ct, i) {
                    b1.e_tilde(ct, i)
                        .map(|x| Element::Tensor(Box::new(x), b2.clone()))
                } else {
                    b2.e_tilde(ct, i)
                        .map(|x| Element::Tensor(b1.clone(), Box::new(x)))
                }
            }
        }
    }

    pub fn f_tilde(&self, ct: CartanType, i: Residue) -> Option<Element> {
        match self {
            Element::Partition(lam) => f_tilde(lam, ct, i).map(Element::Partition),
            Element::Bi { i: j, n } => (*j == i).then(|| Element::Bi { i, n: n - 1 }),
            Element::T(_) => None,
            Element::Tensor(b1, b2) => {
                if b1.phi(ct, i) > b2.eps(ct, i) {
                    b1.f_tilde(ct, i)
                        .map(|x| Element::Tensor(Box::new(x), b2.clone()))
                } else {
                    b2.f_tilde(ct, i)
                        .map(|x| Element::Tensor(b1.clone(), Box::new(x)))
                }
            }
        }
    }

    pub fn wt(&self, ct: CartanType) -> Weight {
        match self {
            Element::Partition(lam) => weight(lam, ct),
            Element::Bi { i, n } => Weight::root(*i, *n),
            Element::T(w) => w.clone(),
            Element::Tensor(b1, b2) => &b1.wt(ct) + &b2.wt(ct),
        }
    }

    /// Largest residue whose operators can act non-trivially on `self`;
    /// only needed to bound the residue range when `h = ∞`.
    fn residue_bound(&self) -> Residue {
        match self {
            Element::Partition(lam) => lam.row(1) + 2,
            Element::Bi { i, .. } => *i,
            Element::T(w) => w.alpha.keys().next_back().copied().unwrap_or(0),
            Element::Tensor(a, b) => a.residue_bound().max(b.residue_bound()) + 1,
        }
    }
}

impl From<Partition> for Element {
    fn from(lam: Partition) -> Self {
        Element::Partition(lam)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Partition(lam) => write!(f, "{lam}"),
            Element::Bi { i, n } => write!(f, "b_{i}({n})"),
            Element::T(w) => write!(f, "t[{w}]"),
            Element::Tensor(a, b) => write!(f, "{a} ⊗ {b}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    C1,
    C2,
    C3,
    C4,
    C5,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub element: String,
    pub residue: Residue,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub elements: usize,
    pub checks: usize,
    /// `ẽ_i`/`f̃_i` images that fall outside the supplied set. They are still
    /// checked, since the operators are computable on any element.
    pub images_outside: usize,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks (C1)–(C5) on every element of `elements` and every residue.
pub fn verify_axioms(elements: &[Element], ct: CartanType) -> AxiomReport {
    let members: HashSet<&Element> = elements.iter().collect();
    let bound = elements
        .iter()
        .map(Element::residue_bound)
        .max()
        .unwrap_or(0)
        + 1;
    let mut report = AxiomReport {
        elements: elements.len(),
        ..Default::default()
    };
    for b in elements {
        let wt = b.wt(ct);
        for i in ct.residues(bound) {
            report.checks += 1;
            let mut fail = |axiom, detail: String| {
                report.violations.push(AxiomViolation {
                    axiom,
                    element: b.to_string(),
                    residue: i,
                    detail,
                })
            };
            let (e, p) = (b.eps(ct, i), b.phi(ct, i));
            let pairing = wt.pairing(i, ct);
            if let (Some(ev), Some(pv)) = (e, p) {
                if pv != ev + pairing {
                    fail(Axiom::C1, format!("phi={pv} eps={ev} <h,wt>={pairing}"));
                }
            } else if e.is_some() != p.is_some() {
                fail(Axiom::C1, format!("phi={p:?} eps={e:?}"));
            }
            let up = b.e_tilde(ct, i);
            let down = b.f_tilde(ct, i);
            if p.is_none() && (up.is_some() || down.is_some()) {
                fail(Axiom::C5, "operator acts although phi = -inf".into());
            }
            if let Some(x) = &up {
                if !members.contains(x) {
                    report.images_outside += 1;
                }
                let ok = x.eps(ct, i) == e.map(|v| v - 1)
                    && x.phi(ct, i) == p.map(|v| v + 1)
                    && x.wt(ct) == &wt + &Weight::root(i, 1);
                if !ok {
                    fail(Axiom::C2, format!("e_tilde image {x}"));
                }
                if x.f_tilde(ct, i).as_ref() != Some(b) {
                    fail(Axiom::C4, format!("f_tilde(e_tilde b) != b via {x}"));
                }
            }
            if let Some(x) = &down {
                if !members.contains(x) {
                    report.images_outside += 1;
                }
                let ok = x.eps(ct, i) == e.map(|v| v + 1)
                    && x.phi(ct, i) == p.map(|v| v - 1)
                    && x.wt(ct) == &wt + &Weight::root(i, -1);
                if !ok {
                    fail(Axiom::C3, format!("f_tilde image {x}"));
                }
                if x.e_tilde(ct, i).as_ref() != Some(b) {
                    fail(Axiom::C4, format!("e_tilde(f_tilde b) != b via {x}"));
                }
            }
        }
    }
    report
}

/// `⟨h_i, wt(λ)⟩` computed from the Cartan data, for callers comparing
/// against `φ_i − ε_i`.
pub fn weight_pairing(lam: &Partition, ct: CartanType, i: Residue) -> i64 {
    cartan::pairing_unchecked(i, &content(lam, ct), ct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_h_strict, enumerate_restricted, is_restricted};

    fn h(h: usize) -> CartanType {
        CartanType::finite_h(h).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn e1() -> Partition {
        p(&[16, 11, 10, 10, 9, 5, 1])
    }

    fn nodes(sig: &[SignedNode]) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = sig.iter().map(|s| (s.node.row, s.node.col)).collect();
        v.sort();
        v
    }

    #[test]
    fn e1_nodes() {
        let ct = h(5);
        assert_eq!(
            nodes(&removable_nodes(&e1(), ct, 0)),
            vec![(1, 15), (1, 16), (2, 11), (6, 5), (7, 1)]
        );
        assert_eq!(nodes(&addable_nodes(&e1(), ct, 0)), vec![(5, 10), (6, 6)]);
    }

    #[test]
    fn e1_signature() {
        use Sign::*;
        let ct = h(5);
        let sig = signature(&e1(), ct, 0);
        assert_eq!(
            sig.signs(),
            vec![Minus, Minus, Plus, Plus, Minus, Minus, Minus]
        );
        assert_eq!(reduce_signature(&sig).signs(), vec![Minus, Minus, Minus]);
        assert_eq!(sig.to_string(), "-,-,+,+,-,-,-");
        assert_eq!((eps(&e1(), ct, 0), phi(&e1(), ct, 0)), (3, 0));
        let r2 = sig.0.iter().find(|s| s.rule == Rule::R2).unwrap();
        assert_eq!(r2.node, Node::new(1, 15));
    }

    #[test]
    fn empty_partition() {
        let ct = h(5);
        let empty = Partition::empty();
        assert!(removable_nodes(&empty, ct, 0).is_empty());
        assert_eq!(nodes(&addable_nodes(&empty, ct, 0)), vec![(1, 1)]);
        assert_eq!(signature(&empty, ct, 0).signs(), vec![Sign::Plus]);
        for i in 0..=2 {
            assert_eq!(eps(&empty, ct, i), 0);
            assert_eq!(phi(&empty, ct, i), usize::from(i == 0));
        }
    }

    #[test]
    fn addable_on_two() {
        let ct = h(3);
        let adds = addable_nodes(&p(&[2]), ct, 0);
        let mut got: Vec<_> = adds
            .iter()
            .map(|s| (s.node.row, s.node.col, s.rule))
            .collect();
        got.sort_by_key(|t| (t.0, t.1));
        assert_eq!(
            got,
            vec![(1, 3, Rule::A1), (1, 4, Rule::A2), (2, 1, Rule::A1)]
        );
        assert_eq!((eps(&p(&[2]), ct, 0), phi(&p(&[2]), ct, 0)), (0, 3));
        assert_eq!((eps(&p(&[2]), ct, 1), phi(&p(&[2]), ct, 1)), (1, 0));
    }

    #[test]
    fn signature_of_321() {
        use Sign::*;
        let sig = signature(&p(&[3, 2, 1]), h(3), 0);
        assert_eq!(sig.signs(), vec![Minus, Plus, Plus]);
        let at: Vec<_> = sig.0.iter().map(|s| s.node).collect();
        assert_eq!(at, vec![Node::new(3, 1), Node::new(2, 3), Node::new(1, 4)]);
        assert_eq!(reduce_signature(&sig).signs(), vec![Minus, Plus, Plus]);
        assert!(reduce_signature(&Signature::default()).is_empty());
    }

    #[test]
    fn operators_match_h3_figure() {
        let ct = h(3);
        assert_eq!(f_tilde(&Partition::empty(), ct, 0), Some(p(&[1])));
        assert_eq!(f_tilde(&p(&[1]), ct, 1), Some(p(&[2])));
        assert_eq!(f_tilde(&p(&[2]), ct, 0), Some(p(&[2, 1])));
        assert_eq!(f_tilde(&p(&[2, 1]), ct, 0), Some(p(&[3, 1])));
        assert_eq!(f_tilde(&p(&[1]), ct, 0), None);
        assert_eq!(e_tilde(&e1(), h(5), 0), Some(p(&[15, 11, 10, 10, 9, 5, 1])));
    }

    #[test]
    fn weights() {
        let ct = h(3);
        assert_eq!(weight(&Partition::empty(), ct), Weight::lambda0());
        let w = weight(&p(&[2]), ct);
        assert_eq!(w.content().unwrap(), [(0, 1), (1, 1)].into_iter().collect());
        let up = f_tilde(&p(&[2]), ct, 0).unwrap();
        assert_eq!(weight(&up, ct), &w + &Weight::root(0, -1));
    }

    #[test]
    fn tensor_rules() {
        let ct = h(3);
        let b = Element::Partition(p(&[2, 1]));
        let t = Element::T(Weight::root(1, 3));
        let bt = Element::tensor(b.clone(), t.clone());
        for i in 0..=1 {
            assert_eq!(bt.eps(ct, i), b.eps(ct, i));
            assert_eq!(
                bt.e_tilde(ct, i),
                b.e_tilde(ct, i).map(|x| Element::tensor(x, t.clone()))
            );
        }
        let empty_b0 = Element::tensor(Partition::empty().into(), Element::Bi { i: 0, n: 0 });
        assert_eq!(
            empty_b0.f_tilde(ct, 0),
            Some(Element::tensor(p(&[1]).into(), Element::Bi { i: 0, n: 0 }))
        );
        // T is inert
        assert_eq!(t.eps(ct, 0), None);
        assert_eq!(t.f_tilde(ct, 0), None);
    }

    #[test]
    fn axioms_on_tensor_with_b1() {
        let ct = h(3);
        let mut elems = Vec::new();
        for n in 0..=6 {
            for lam in enumerate_restricted(n, ct) {
                for k in -3..=3 {
                    elems.push(Element::tensor(
                        lam.clone().into(),
                        Element::Bi { i: 1, n: k },
                    ));
                }
            }
        }
        let report = verify_axioms(&elems, ct);
        assert!(report.is_ok(), "{:?}", report.violations);
        assert!(report.images_outside > 0);
    }

    #[test]
    fn axioms_small_cases() {
        let ct = h(3);
        let elems: Vec<Element> = (0..=10)
            .flat_map(|n| enumerate_restricted(n, ct))
            .map(Element::from)
            .collect();
        assert!(verify_axioms(&elems, ct).is_ok());
        assert!(verify_axioms(&[Partition::empty().into()], ct).is_ok());
        let elems: Vec<Element> = (0..=8)
            .flat_map(|n| enumerate_h_strict(n, h(5)))
            .map(Element::from)
            .collect();
        assert!(verify_axioms(&elems, h(5)).is_ok());
    }

    fn ct_list() -> Vec<CartanType> {
        vec![h(3), h(5), h(7), CartanType::INFINITE]
    }

    #[test]
    fn operator_laws_exhaustive() {
        for ct in ct_list() {
            for n in 0..=12 {
                for lam in enumerate_h_strict(n, ct) {
                    let restricted = is_restricted(&lam, ct);
                    for i in ct.residues(n + 2) {
                        let sig = signature(&lam, ct, i);
                        let red = reduce_signature(&sig);
                        let (e, f) = (red.count(Sign::Minus), red.count(Sign::Plus));
                        // reduced form is -…-+…+
                        assert!(red.0[..e].iter().all(|s| s.sign == Sign::Minus));
                        assert_eq!((sig.len() - e - f) % 2, 0);
                        if ct.is_infinite() && n <= 10 {
                            assert!(red.len() <= 2, "{lam} i={i}");
                        }
                        // C1 against the Cartan pairing
                        assert_eq!(f as i64 - e as i64, weight_pairing(&lam, ct, i));
                        for s in &sig.0 {
                            if matches!(s.rule, Rule::R2 | Rule::A2) {
                                assert_eq!(i, 0);
                            }
                        }
                        if let Some(up) = f_tilde(&lam, ct, i) {
                            assert_eq!(e_tilde(&up, ct, i).as_ref(), Some(&lam));
                            let mut c = content(&up, ct);
                            assert!(c.remove_one(i));
                            assert_eq!(c, content(&lam, ct));
                            if restricted {
                                assert!(is_restricted(&up, ct), "{lam} -> {up}");
                            }
                        }
                        if let Some(down) = e_tilde(&lam, ct, i) {
                            assert_eq!(f_tilde(&down, ct, i).as_ref(), Some(&lam));
                            if restricted {
                                assert!(is_restricted(&down, ct));
                            }
                        }
                        if n <= 10 {
                            let mut m = 0;
                            let mut cur = lam.clone();
                            while let Some(x) = e_tilde(&cur, ct, i) {
                                cur = x;
                                m += 1;
                            }
                            assert_eq!(m, e);
                            let mut m = 0;
                            let mut cur = lam.clone();
                            while let Some(x) = f_tilde(&cur, ct, i) {
                                cur = x;
                                m += 1;
                            }
                            assert_eq!(m, f);
                        }
                    }
                }
            }
        }
    }
}
