//! Blocks by content, Kac block sizes, module types and projectivity.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::cartan::{CartanType, ContentVector};
use crate::error::{Error, Result};
use crate::partition::{
    a_of, b_of, bar_core_and_weight, content, enumerate_restricted, is_h_strict, is_restricted,
    Partition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ModuleType {
    M,
    Q,
}

impl ModuleType {
    fn from_parity(x: usize) -> Self {
        if x.is_multiple_of(2) {
            ModuleType::M
        } else {
            ModuleType::Q
        }
    }
}

impl fmt::Display for ModuleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleType::M => "M",
            ModuleType::Q => "Q",
        })
    }
}

/// A block, identified by its content. The bar core and weight ride along
/// for display; comparisons only look at the content.
#[derive(Clone, Debug, Serialize)]
pub struct BlockId {
    pub content: ContentVector,
    pub core: Partition,
    pub weight: usize,
}

impl PartialEq for BlockId {
    fn eq(&self, other: &Self) -> bool {
        self.content == other.content
    }
}

impl Eq for BlockId {}

impl Hash for BlockId {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.content.hash(state);
    }
}

impl PartialOrd for BlockId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BlockId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.content.cmp(&other.content)
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (core {}, weight {})",
            self.content, self.core, self.weight
        )
    }
}

fn require_restricted(lam: &Partition, ct: CartanType) -> Result<()> {
    if is_h_strict(lam, ct) && is_restricted(lam, ct) {
        Ok(())
    } else {
        Err(Error::InvalidPartition {
            parts: lam.parts().to_vec(),
            reason: format!("not a restricted h-strict partition for h={}", ct.h_label()),
        })
    }
}

pub fn block_of(lam: &Partition, ct: CartanType) -> BlockId {
    let (core, weight) = bar_core_and_weight(lam, ct);
    BlockId {
        content: content(lam, ct),
        core,
        weight,
    }
}

/// Coefficient of `q^n` in `∏_{k≥1} (1 − q^k)^{−ℓ}`.
pub fn par_ell(n: usize, ell: usize) -> Result<u64> {
    let mut coeffs = vec![0u64; n + 1];
    coeffs[0] = 1;
    for _ in 0..ell {
        for k in 1..=n {
            for m in k..=n {
                coeffs[m] = coeffs[m]
                    .checked_add(coeffs[m - k])
                    .ok_or_else(|| Error::Overflow(format!("Par_{ell}({n})")))?;
            }
        }
    }
    Ok(coeffs[n])
}

/// Number of restricted h-strict partitions of `|λ|` sharing `λ`'s content.
pub fn block_size(lam: &Partition, ct: CartanType) -> Result<usize> {
    require_restricted(lam, ct)?;
    let gamma = content(lam, ct);
    Ok(enumerate_restricted(lam.size(), ct)
        .iter()
        .filter(|mu| content(mu, ct) == gamma)
        .count())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KacMismatch {
    pub partition: Partition,
    pub block_size: usize,
    pub weight: usize,
    pub expected: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct KacReport {
    pub n: usize,
    pub partitions: usize,
    pub blocks: usize,
    pub mismatches: Vec<KacMismatch>,
}

impl KacReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares every block size in degree `n` with `Par_ℓ` of the bar weight.
pub fn kac_check(n: usize, ct: CartanType) -> Result<KacReport> {
    let ell = ct
        .ell()
        .ok_or_else(|| Error::Unsupported("block sizes need a finite h".into()))?;
    let layer = enumerate_restricted(n, ct);
    let mut sizes: BTreeMap<ContentVector, usize> = BTreeMap::new();
    for lam in &layer {
        *sizes.entry(content(lam, ct)).or_default() += 1;
    }
    let mut mismatches = Vec::new();
    for lam in &layer {
        let size = sizes[&content(lam, ct)];
        let (_, weight) = bar_core_and_weight(lam, ct);
        let expected = par_ell(weight, ell)?;
        if size as u64 != expected {
            mismatches.push(KacMismatch {
                partition: lam.clone(),
                block_size: size,
                weight,
                expected,
            });
        }
    }
    Ok(KacReport {
        n,
        partitions: layer.len(),
        blocks: sizes.len(),
        mismatches,
    })
}

pub fn type_w(lam: &Partition, ct: CartanType) -> ModuleType {
    ModuleType::from_parity(b_of(lam, ct))
}

pub fn type_s(lam: &Partition, ct: CartanType) -> ModuleType {
    ModuleType::from_parity(a_of(lam, ct))
}

/// The W-type read off a block: parity of `γ_0`.
pub fn type_from_content(gamma: &ContentVector) -> ModuleType {
    ModuleType::from_parity(gamma.get(0))
}

pub fn is_projective_w(lam: &Partition, ct: CartanType) -> Result<bool> {
    require_restricted(lam, ct)?;
    Ok(bar_core_and_weight(lam, ct).1 == 0)
}

/// Same partition-level criterion as [`is_projective_w`], with `h` read as `p`.
pub fn is_projective_s(lam: &Partition, ct: CartanType) -> Result<bool> {
    is_projective_w(lam, ct)
}

/// Irreducible ungraded `S(n)`-modules: `D(λ)` once for `a(λ)` even, twice
/// (`D(λ,±)`) for `a(λ)` odd.
pub fn count_ungraded_s(n: usize, ct: CartanType) -> usize {
    enumerate_restricted(n, ct)
        .iter()
        .map(|lam| {
            if a_of(lam, ct).is_multiple_of(2) {
                1
            } else {
                2
            }
        })
        .sum()
}

/// Irreducible `A(n)`-modules: two for `a(λ)` even, one for `a(λ)` odd.
pub fn count_irreducible_a(n: usize, ct: CartanType) -> usize {
    enumerate_restricted(n, ct)
        .iter()
        .map(|lam| {
            if a_of(lam, ct).is_multiple_of(2) {
                2
            } else {
                1
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{bar_core, enumerate_h_strict};
    use proptest::prelude::*;

    fn h(h: usize) -> CartanType {
        CartanType::finite_h(h).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Multisets of `ell`-coloured positive integers summing to `n`, listed
    /// directly as non-increasing sequences of (part, colour) pairs.
    fn coloured_partitions(n: usize, ell: usize) -> u64 {
        fn go(rest: usize, max: (usize, usize), ell: usize) -> u64 {
            if rest == 0 {
                return 1;
            }
            let mut total = 0;
            for part in (1..=rest.min(max.0)).rev() {
                for colour in 0..ell {
                    if (part, colour) <= max {
                        total += go(rest - part, (part, colour), ell);
                    }
                }
            }
            total
        }
        go(n, (n, ell), ell)
    }

    #[test]
    fn par_ell_values() {
        assert_eq!(par_ell(2, 1).unwrap(), 2);
        assert_eq!(par_ell(0, 3).unwrap(), 1);
        assert_eq!(par_ell(2, 2).unwrap(), 5);
        for ell in 1..=3 {
            for n in 0..=10 {
                assert_eq!(
                    par_ell(n, ell).unwrap(),
                    coloured_partitions(n, ell),
                    "{n} {ell}"
                );
            }
        }
        assert!(matches!(par_ell(2000, 50), Err(Error::Overflow(_))));
    }

    #[test]
    fn small_blocks() {
        let ct = h(3);
        assert_ne!(block_of(&p(&[4, 1]), ct), block_of(&p(&[3, 2]), ct));
        assert!(block_of(&Partition::empty(), ct).content.is_empty());
        assert_eq!(block_size(&p(&[4, 1]), ct).unwrap(), 1);
        assert_eq!(block_size(&p(&[3, 2]), ct).unwrap(), 1);
        assert!(block_size(&p(&[2, 2]), ct).is_err());
        assert!(is_projective_w(&p(&[4, 1]), ct).unwrap());
        assert!(!is_projective_w(&p(&[3, 2]), ct).unwrap());
        assert!(is_projective_w(&Partition::empty(), ct).unwrap());
    }

    #[test]
    fn types() {
        let ct = h(3);
        assert_eq!(type_w(&Partition::empty(), ct), ModuleType::M);
        assert_eq!(type_s(&Partition::empty(), ct), ModuleType::M);
        assert_eq!(type_w(&p(&[2, 1]), ct), ModuleType::M);
        assert_eq!(type_s(&p(&[2, 1]), ct), ModuleType::Q);
        for hh in [3, 5, 7] {
            let ct = h(hh);
            for n in 0..=12 {
                for lam in enumerate_restricted(n, ct) {
                    assert_eq!(type_w(&lam, ct), type_from_content(&content(&lam, ct)));
                }
            }
        }
    }

    #[test]
    fn kac_identity() {
        for hh in [3, 5, 7] {
            for n in 0..=12 {
                let report = kac_check(n, h(hh)).unwrap();
                assert!(report.is_ok(), "h={hh} n={n}: {:?}", report.mismatches);
            }
        }
        assert!(kac_check(3, CartanType::INFINITE).is_err());
    }

    #[test]
    fn block_sizes_partition_each_layer() {
        for hh in [3, 5] {
            let ct = h(hh);
            for n in 0..=10 {
                let layer = enumerate_restricted(n, ct);
                let mut blocks: BTreeMap<BlockId, usize> = BTreeMap::new();
                for lam in &layer {
                    blocks.insert(block_of(lam, ct), block_size(lam, ct).unwrap());
                    if is_projective_w(lam, ct).unwrap() {
                        assert_eq!(block_size(lam, ct).unwrap(), 1);
                    }
                }
                assert_eq!(blocks.values().sum::<usize>(), layer.len());
            }
        }
    }

    #[test]
    fn infinite_blocks_are_singletons() {
        let ct = CartanType::INFINITE;
        for n in 0..=12 {
            for lam in enumerate_restricted(n, ct) {
                assert_eq!(block_size(&lam, ct).unwrap(), 1);
            }
        }
    }

    #[test]
    fn content_determines_core() {
        for hh in [3, 5] {
            let ct = h(hh);
            for n in 0..=14 {
                let layer = enumerate_h_strict(n, ct);
                for (x, lam) in layer.iter().enumerate() {
                    for mu in &layer[x..] {
                        let same_content = content(lam, ct) == content(mu, ct);
                        let same_core = bar_core(lam, ct) == bar_core(mu, ct);
                        assert_eq!(same_content, same_core, "h={hh} {lam} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn spin_counts() {
        let ct = h(3);
        assert_eq!(count_ungraded_s(0, ct), 1);
        assert_eq!(count_irreducible_a(0, ct), 2);
        // (2) has one part prime to 3, so a = 1.
        assert_eq!(count_ungraded_s(2, ct), 2);
        assert_eq!(count_irreducible_a(2, ct), 1);
        assert_eq!(count_ungraded_s(3, ct), 2);
        assert_eq!(count_irreducible_a(3, ct), 1);
    }

    proptest! {
        #[test]
        fn par_ell_is_monotone_in_ell(n in 0usize..30, ell in 1usize..6) {
            prop_assert!(par_ell(n, ell).unwrap() <= par_ell(n, ell + 1).unwrap());
        }
    }
}
