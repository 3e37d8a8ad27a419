//! Restriction/induction reports for `W(n)` and `S(n)`, Jantzen–Seitz
//! predicates and basic spin data.

use serde::Serialize;

use crate::blocks::{type_w, ModuleType};
use crate::cartan::{CartanType, Residue};
use crate::crystal::{e_tilde, eps, f_tilde, phi};
use crate::error::{Error, Result};
use crate::partition::{a_of, b_of, is_h_strict, is_restricted, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Algebra {
    W,
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    #[serde(rename = "res")]
    Restrict,
    #[serde(rename = "ind")]
    Induce,
}

/// The summand attached to one residue `i`. Only residues with a nonzero
/// `ε_i` (restriction) or `φ_i` (induction) get a piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub i: Residue,
    pub outer_mult: u8,
    pub socle: Option<Partition>,
    pub socle_mult: usize,
    pub irreducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchReport {
    pub algebra: Algebra,
    pub direction: Direction,
    pub source: Partition,
    pub pieces: Vec<Piece>,
    pub completely_reducible: bool,
}

impl BranchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
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

/// Outer multiplicity of the `i`-summand. `two_at_zero` says whether the
/// `i = 0` summand also appears twice.
fn outer(i: Residue, two_at_zero: bool, all_one: bool) -> u8 {
    if all_one {
        1
    } else if i == 0 && !two_at_zero {
        1
    } else {
        2
    }
}

fn report(
    lam: &Partition,
    ct: CartanType,
    algebra: Algebra,
    direction: Direction,
) -> Result<BranchReport> {
    require_restricted(lam, ct)?;
    let (two_at_zero, all_one) = match algebra {
        Algebra::W => (b_of(lam, ct) % 2 == 1, false),
        Algebra::S => (false, a_of(lam, ct).is_multiple_of(2)),
    };
    let mut pieces = Vec::new();
    for i in ct.residues(lam.size() + 1) {
        let (stat, target) = match direction {
            Direction::Restrict => (eps(lam, ct, i), e_tilde(lam, ct, i)),
            Direction::Induce => (phi(lam, ct, i), f_tilde(lam, ct, i)),
        };
        if stat == 0 {
            continue;
        }
        pieces.push(Piece {
            i,
            outer_mult: outer(i, two_at_zero, all_one),
            socle: target,
            socle_mult: stat,
            irreducible: stat == 1,
        });
    }
    let completely_reducible = pieces.iter().all(|p| p.socle_mult <= 1);
    Ok(BranchReport {
        algebra,
        direction,
        source: lam.clone(),
        pieces,
        completely_reducible,
    })
}

pub fn restrict_w(lam: &Partition, ct: CartanType) -> Result<BranchReport> {
    report(lam, ct, Algebra::W, Direction::Restrict)
}

pub fn induce_w(lam: &Partition, ct: CartanType) -> Result<BranchReport> {
    report(lam, ct, Algebra::W, Direction::Induce)
}

pub fn restrict_s(lam: &Partition, ct: CartanType) -> Result<BranchReport> {
    report(lam, ct, Algebra::S, Direction::Restrict)
}

pub fn induce_s(lam: &Partition, ct: CartanType) -> Result<BranchReport> {
    report(lam, ct, Algebra::S, Direction::Induce)
}

fn eps_data(lam: &Partition, ct: CartanType) -> (usize, usize) {
    let total = ct.residues(lam.size()).map(|i| eps(lam, ct, i)).sum();
    (eps(lam, ct, 0), total)
}

/// Whether the restriction of `D(λ)` to `S(n−1)` is irreducible.
pub fn jantzen_seitz_s(lam: &Partition, ct: CartanType) -> Result<bool> {
    require_restricted(lam, ct)?;
    let (e0, total) = eps_data(lam, ct);
    Ok(if a_of(lam, ct).is_multiple_of(2) {
        e0 == 1 && total == 1
    } else {
        total == 1
    })
}

/// The `A(n)` version: the two parity cases of [`jantzen_seitz_s`] swap.
pub fn jantzen_seitz_a(lam: &Partition, ct: CartanType) -> Result<bool> {
    require_restricted(lam, ct)?;
    let (e0, total) = eps_data(lam, ct);
    Ok(if a_of(lam, ct).is_multiple_of(2) {
        total == 1
    } else {
        e0 == 1 && total == 1
    })
}

/// The label `ω_n` of the basic spin module.
pub fn omega(n: usize, ct: CartanType) -> Result<Partition> {
    let h = ct
        .h()
        .ok_or_else(|| Error::Unsupported("ω_n needs a finite h".into()))?;
    if n == 0 {
        return Err(Error::Unsupported("ω_n is defined for n ≥ 1".into()));
    }
    let (a, b) = (n / h, n % h);
    let mut parts = vec![h; a];
    if b != 0 {
        parts.push(b);
    } else {
        parts.pop();
        parts.extend([h - 1, 1]);
    }
    Partition::new(parts)
}

/// Dimensions of the basic spin module over `W(n)` and over `S(n)`.
pub fn basic_spin_dims(n: usize, ct: CartanType) -> Result<(u128, u128)> {
    let h = ct
        .h()
        .ok_or_else(|| Error::Unsupported("basic spin dimensions need a finite h".into()))?;
    if n == 0 {
        return Err(Error::Unsupported(
            "basic spin module is defined for n ≥ 1".into(),
        ));
    }
    let (w_exp, s_exp) = if n.is_multiple_of(h) {
        (n - 1, (n - 1) / 2)
    } else {
        (n, n / 2)
    };
    let pow = |e: usize| {
        1u128
            .checked_shl(e as u32)
            .filter(|_| e < 128)
            .ok_or_else(|| Error::Overflow(format!("2^{e}")))
    };
    Ok((pow(w_exp)?, pow(s_exp)?))
}

/// Type of the basic spin `W(n)`-module, for display alongside its label.
pub fn basic_spin_type(n: usize, ct: CartanType) -> Result<ModuleType> {
    Ok(type_w(&omega(n, ct)?, ct))
}
