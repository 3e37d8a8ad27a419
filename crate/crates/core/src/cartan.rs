//! Cartan data for `A_{2ℓ}^{(2)}` (finite odd `h = 2ℓ+1`) and `B_∞` (`h = ∞`).
//!
//! Nothing is stored as a matrix: entries are computed from index formulas,
//! so the infinite rank case costs the same as the finite one.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A residue, i.e. an element of the index set `I = {0, …, ℓ}`.
pub type Residue = usize;

/// The root datum, identified by `ℓ` (`None` means `ℓ = ∞`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    ell: Option<usize>,
}

impl CartanType {
    /// `B_∞`, i.e. `h = ∞`.
    pub const INFINITE: CartanType = CartanType { ell: None };

    pub fn finite(ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidH("ell = 0".into()));
        }
        Ok(CartanType { ell: Some(ell) })
    }

    /// Builds the type from `h = 2ℓ + 1`.
    pub fn finite_h(h: usize) -> Result<Self> {
        if h < 3 || h.is_multiple_of(2) {
            return Err(Error::InvalidH(h.to_string()));
        }
        Self::finite((h - 1) / 2)
    }

    pub fn ell(self) -> Option<usize> {
        self.ell
    }

    pub fn h(self) -> Option<usize> {
        self.ell.map(|l| 2 * l + 1)
    }

    pub fn is_infinite(self) -> bool {
        self.ell.is_none()
    }

    pub fn contains(self, i: Residue) -> bool {
        self.ell.is_none_or(|l| i <= l)
    }

    pub fn check(self, i: Residue) -> Result<()> {
        if self.contains(i) {
            Ok(())
        } else {
            Err(Error::InvalidResidue {
                residue: i,
                cartan: self.to_string(),
            })
        }
    }

    /// The residues worth looking at. For finite `ℓ` this is all of `I`;
    /// for `ℓ = ∞` it is `0..=bound`, the caller choosing a bound past which
    /// nothing happens (e.g. the largest column that can be touched).
    pub fn residues(self, bound: Residue) -> std::ops::RangeInclusive<Residue> {
        match self.ell {
            Some(l) => 0..=l,
            None => 0..=bound,
        }
    }

    /// `h` as the string accepted by [`FromStr`].
    pub fn h_label(self) -> String {
        match self.h() {
            Some(h) => h.to_string(),
            None => "inf".to_string(),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ell {
            Some(l) => write!(f, "A_{}^(2) (h={})", 2 * l, 2 * l + 1),
            None => write!(f, "B_inf (h=inf)"),
        }
    }
}

/// Parses `h`: an odd integer `≥ 3`, or `inf`.
impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(CartanType::INFINITE);
        }
        let h: usize = s.parse().map_err(|_| Error::InvalidH(s.to_string()))?;
        Self::finite_h(h)
    }
}

/// `⟨h_i, α_j⟩` without range checks.
pub(crate) fn entry(i: Residue, j: Residue, ct: CartanType) -> i64 {
    if i == j {
        return 2;
    }
    if i.abs_diff(j) > 1 {
        return 0;
    }
    match ct.ell {
        Some(1) => {
            if i == 0 {
                -4
            } else {
                -1
            }
        }
        Some(l) => {
            if (i == 0 && j == 1) || (i + 1 == l && j == l) {
                -2
            } else {
                -1
            }
        }
        None => {
            if i == 0 && j == 1 {
                -2
            } else {
                -1
            }
        }
    }
}

/// The Cartan matrix entry `⟨h_i, α_j⟩`.
pub fn cartan_entry(i: Residue, j: Residue, ct: CartanType) -> Result<i64> {
    ct.check(i)?;
    ct.check(j)?;
    Ok(entry(i, j, ct))
}

/// Finitely supported residue counts `γ = (γ_i)`. Zero counts are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ContentVector(BTreeMap<Residue, usize>);

impl ContentVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: Residue) -> usize {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn add_count(&mut self, i: Residue, count: usize) {
        if count > 0 {
            *self.0.entry(i).or_insert(0) += count;
        }
    }

    /// Removes one node of residue `i`; returns `false` if there is none.
    pub fn remove_one(&mut self, i: Residue) -> bool {
        match self.0.get_mut(&i) {
            Some(c) if *c > 1 => {
                *c -= 1;
                true
            }
            Some(_) => {
                self.0.remove(&i);
                true
            }
            None => false,
        }
    }

    /// `Σ γ_i`.
    pub fn degree(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Residue, usize)> + '_ {
        self.0.iter().map(|(&i, &c)| (i, c))
    }

    pub fn max_residue(&self) -> Option<Residue> {
        self.0.keys().next_back().copied()
    }
}

impl FromIterator<(Residue, usize)> for ContentVector {
    fn from_iter<T: IntoIterator<Item = (Residue, usize)>>(iter: T) -> Self {
        let mut c = ContentVector::new();
        for (i, n) in iter {
            c.add_count(i, n);
        }
        c
    }
}

impl Add for &ContentVector {
    type Output = ContentVector;

    fn add(self, rhs: &ContentVector) -> ContentVector {
        let mut out = self.clone();
        for (i, n) in rhs.iter() {
            out.add_count(i, n);
        }
        out
    }
}

impl fmt::Display for ContentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, n)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}:{n}")?;
        }
        write!(f, "}}")
    }
}

/// `⟨h_i, Λ₀ − Σ_j γ_j α_j⟩ = δ_{i,0} − Σ_j γ_j ⟨h_i, α_j⟩`.
pub fn pairing_hi(i: Residue, gamma: &ContentVector, ct: CartanType) -> Result<i64> {
    ct.check(i)?;
    for (j, _) in gamma.iter() {
        ct.check(j)?;
    }
    Ok(pairing_unchecked(i, gamma, ct))
}

pub(crate) fn pairing_unchecked(i: Residue, gamma: &ContentVector, ct: CartanType) -> i64 {
    let linear: i64 = gamma.iter().map(|(j, n)| n as i64 * entry(i, j, ct)).sum();
    i64::from(i == 0) - linear
}

/// Coefficients of the canonical central element `c = h_0 + Σ_{i≥1} 2h_i`.
pub fn c_coefficients(ct: CartanType) -> Result<BTreeMap<Residue, i64>> {
    let ell = ct.ell.ok_or_else(|| {
        Error::Unsupported("the central element only exists in a completion for h = inf".into())
    })?;
    Ok((0..=ell).map(|i| (i, if i == 0 { 1 } else { 2 })).collect())
}

/// An element `m·Λ₀ + Σ_i k_i α_i` of the weight lattice.
///
/// `δ` is not modelled; every weight arising here lives in the span of
/// `Λ₀` and the simple roots.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight {
    pub lambda0: i64,
    pub alpha: BTreeMap<Residue, i64>,
}

impl Weight {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn lambda0() -> Self {
        Weight {
            lambda0: 1,
            alpha: BTreeMap::new(),
        }
    }

    /// `k·α_i`.
    pub fn root(i: Residue, k: i64) -> Self {
        let mut w = Weight::zero();
        w.add_root(i, k);
        w
    }

    /// `Λ₀ − Σ γ_i α_i`, the weight of a partition with content `γ`.
    pub fn from_content(gamma: &ContentVector) -> Self {
        let mut w = Weight::lambda0();
        for (i, n) in gamma.iter() {
            w.add_root(i, -(n as i64));
        }
        w
    }

    pub fn add_root(&mut self, i: Residue, k: i64) {
        let e = self.alpha.entry(i).or_insert(0);
        *e += k;
        if *e == 0 {
            self.alpha.remove(&i);
        }
    }

    pub fn alpha_coefficient(&self, i: Residue) -> i64 {
        self.alpha.get(&i).copied().unwrap_or(0)
    }

    /// `⟨h_i, self⟩`.
    pub fn pairing(&self, i: Residue, ct: CartanType) -> i64 {
        let roots: i64 = self.alpha.iter().map(|(&j, &k)| k * entry(i, j, ct)).sum();
        if i == 0 {
            self.lambda0 + roots
        } else {
            roots
        }
    }

    /// Recovers `γ` when the weight has the form `Λ₀ − Σ γ_i α_i` with `γ ≥ 0`.
    pub fn content(&self) -> Option<ContentVector> {
        if self.lambda0 != 1 || self.alpha.values().any(|&k| k > 0) {
            return None;
        }
        Some(
            self.alpha
                .iter()
                .map(|(&i, &k)| (i, (-k) as usize))
                .collect(),
        )
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        out.lambda0 += rhs.lambda0;
        for (&i, &k) in &rhs.alpha {
            out.add_root(i, k);
        }
        out
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight {
            lambda0: -self.lambda0,
            alpha: self.alpha.iter().map(|(&i, &k)| (i, -k)).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if self.lambda0 != 0 {
            write!(f, "{}Λ0", coeff_prefix(self.lambda0))?;
            first = false;
        }
        for (&i, &k) in &self.alpha {
            if first {
                write!(f, "{}α{i}", coeff_prefix(k))?;
            } else if k < 0 {
                write!(f, " - {}α{i}", coeff_prefix(-k))?;
            } else {
                write!(f, " + {}α{i}", coeff_prefix(k))?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn coeff_prefix(k: i64) -> String {
    match k {
        1 => String::new(),
        -1 => "-".into(),
        k => k.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(ell: usize) -> CartanType {
        CartanType::finite(ell).unwrap()
    }

    #[test]
    fn displayed_matrices() {
        assert_eq!(cartan_entry(0, 1, ct(2)).unwrap(), -2);
        assert_eq!(cartan_entry(1, 0, ct(2)).unwrap(), -1);
        assert_eq!(cartan_entry(1, 2, ct(2)).unwrap(), -2);
        assert_eq!(cartan_entry(2, 1, ct(2)).unwrap(), -1);
        assert_eq!(cartan_entry(0, 1, ct(1)).unwrap(), -4);
        assert_eq!(cartan_entry(1, 0, ct(1)).unwrap(), -1);
        assert_eq!(cartan_entry(1, 2, ct(4)).unwrap(), -1);
        assert_eq!(cartan_entry(3, 4, ct(4)).unwrap(), -2);
        assert_eq!(cartan_entry(0, 2, ct(4)).unwrap(), 0);
        for i in 0..5 {
            assert_eq!(cartan_entry(i, i, ct(4)).unwrap(), 2);
        }
        let inf = CartanType::INFINITE;
        assert_eq!(cartan_entry(0, 1, inf).unwrap(), -2);
        assert_eq!(cartan_entry(1, 0, inf).unwrap(), -1);
        assert_eq!(cartan_entry(40, 41, inf).unwrap(), -1);
        assert_eq!(cartan_entry(41, 40, inf).unwrap(), -1);
    }

    #[test]
    fn out_of_range_residue() {
        assert!(matches!(
            cartan_entry(0, 3, ct(2)),
            Err(Error::InvalidResidue { residue: 3, .. })
        ));
        assert!(pairing_hi(5, &ContentVector::new(), ct(1)).is_err());
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing_hi(0, &ContentVector::new(), ct(1)).unwrap(), 1);
        let g: ContentVector = [(0, 1), (1, 1)].into_iter().collect();
        assert_eq!(pairing_hi(0, &g, ct(1)).unwrap(), 3);
        let g: ContentVector = [(0, 1)].into_iter().collect();
        assert_eq!(pairing_hi(1, &g, ct(2)).unwrap(), 1);
    }

    #[test]
    fn central_element() {
        assert_eq!(
            c_coefficients(ct(1)).unwrap(),
            BTreeMap::from([(0, 1), (1, 2)])
        );
        assert_eq!(
            c_coefficients(ct(2)).unwrap(),
            BTreeMap::from([(0, 1), (1, 2), (2, 2)])
        );
        assert!(matches!(
            c_coefficients(CartanType::INFINITE),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn matrix_shape_and_central_element_annihilate_roots() {
        for ell in 1..=6 {
            let t = ct(ell);
            let c = c_coefficients(t).unwrap();
            for j in 0..=ell {
                let s: i64 = (0..=ell)
                    .map(|i| c[&i] * cartan_entry(i, j, t).unwrap())
                    .sum();
                assert_eq!(s, 0, "ell={ell} j={j}");
                for i in 0..=ell {
                    let a = cartan_entry(i, j, t).unwrap();
                    let b = cartan_entry(j, i, t).unwrap();
                    assert_eq!(a == 2, i == j);
                    assert!([0, 1, 2, 4].contains(&(a * b)) || i == j);
                }
            }
        }
    }

    #[test]
    fn parse_h() {
        assert_eq!("5".parse::<CartanType>().unwrap(), ct(2));
        assert_eq!("inf".parse::<CartanType>().unwrap(), CartanType::INFINITE);
        assert!("4".parse::<CartanType>().is_err());
        assert!("1".parse::<CartanType>().is_err());
        assert!("x".parse::<CartanType>().is_err());
    }

    #[test]
    fn weight_roundtrip() {
        let g: ContentVector = [(0, 3), (2, 1)].into_iter().collect();
        let w = Weight::from_content(&g);
        assert_eq!(w.content().unwrap(), g);
        assert_eq!(w.pairing(0, ct(2)), pairing_hi(0, &g, ct(2)).unwrap());
        assert_eq!(w.to_string(), "Λ0 - 3α0 - α2");
        assert_eq!((&w + &-&w), Weight::zero());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn raw_content() -> impl Strategy<Value = Vec<(usize, usize)>> {
            proptest::collection::vec((0usize..16, 0usize..6), 0..6)
        }

        fn fold(raw: &[(usize, usize)], ell: usize) -> ContentVector {
            raw.iter().map(|&(i, n)| (i % (ell + 1), n)).collect()
        }

        proptest! {
            #[test]
            fn pairing_is_affine_in_content(ell in 1usize..6, a in raw_content(), b in raw_content()) {
                let t = ct(ell);
                let (a, b) = (fold(&a, ell), fold(&b, ell));
                let sum = &a + &b;
                for i in 0..=ell {
                    let lhs = pairing_hi(i, &sum, t).unwrap() + i64::from(i == 0);
                    let rhs = pairing_hi(i, &a, t).unwrap() + pairing_hi(i, &b, t).unwrap();
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
