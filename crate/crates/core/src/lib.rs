//! Restricted h-strict partitions as a model of the highest-weight crystal
//! `B(Λ₀)` for the twisted affine type `A_{2ℓ}^{(2)}` (odd `h = 2ℓ+1 ≥ 3`)
//! and for `B_∞` (`h = ∞`).
//!
//! The crate is organised bottom-up:
//!
//! * [`cartan`]: Cartan pairings, contents and weights.
//! * [`partition`]: h-strict partitions, residues, h-bars and bar cores.
//! * [`crystal`]: signatures, `ε_i`, `φ_i`, `ẽ_i`, `f̃_i`, elementary crystals,
//!   tensor products and an axiom checker.
//! * [`graph`]: the crystal graph of `B(Λ₀)` with DOT/JSON export.
//! * [`blocks`]: block classification, Kac block sizes, M/Q types.
//! * [`branching`]: restriction/induction reports, Jantzen–Seitz predicates,
//!   basic spin data.
//! * [`characters`]: formal characters on residue words and the tabulated
//!   characters of small irreducibles.
//! * [`cli`]: the `hstrict` command-line front end.
//!
//! ```
//! use hstrict_crystal::{CartanType, Partition, crystal};
//!
//! let ct = CartanType::finite_h(5).unwrap();
//! let lam = Partition::new(vec![16, 11, 10, 10, 9, 5, 1]).unwrap();
//! assert_eq!(crystal::eps(&lam, ct, 0), 3);
//! assert_eq!(crystal::phi(&lam, ct, 0), 0);
//! ```

pub mod blocks;
pub mod branching;
pub mod cartan;
pub mod characters;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod graph;
pub mod partition;

pub use cartan::{CartanType, ContentVector, Residue, Weight};
pub use error::{Error, Result};
pub use partition::{Node, Partition};
