//! wasm-bindgen entry points for the browser demo in `www/`.
//!
//! Every function returns a JSON string, or an error message that the page
//! shows as-is.

use hstrict_crystal::branching::{restrict_s, restrict_w};
use hstrict_crystal::crystal::{e_tilde, f_tilde};
use hstrict_crystal::graph::{
    export_json, generate, partition_to_canonical_path, path_to_partition,
};
use hstrict_crystal::partition::{is_h_strict, is_restricted};
use hstrict_crystal::{cli, CartanType, Partition, Residue};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Larger graphs take too long to lay out in the page anyway.
pub const MAX_DEGREE: usize = 40;

fn cartan(h: &str) -> Result<CartanType, String> {
    h.parse().map_err(|e: hstrict_crystal::Error| e.to_string())
}

fn restricted(h: &str, partition: &str) -> Result<(CartanType, Partition), String> {
    let ct = cartan(h)?;
    let lam: Partition = partition
        .parse()
        .map_err(|e: hstrict_crystal::Error| e.to_string())?;
    if !is_h_strict(&lam, ct) {
        return Err(format!("{lam} is not {}-strict", ct.h_label()));
    }
    if !is_restricted(&lam, ct) {
        return Err(format!("{lam} is not restricted for h={}", ct.h_label()));
    }
    Ok((ct, lam))
}

fn residue(ct: CartanType, i: u32) -> Result<Residue, String> {
    let i = i as Residue;
    match ct.ell() {
        Some(ell) if i > ell => Err(format!("residue {i} is out of range 0..={ell}")),
        _ => Ok(i),
    }
}

/// The crystal graph up to degree `max_n`.
#[wasm_bindgen]
pub fn crystal_graph(h: &str, max_n: usize) -> Result<String, String> {
    let ct = cartan(h)?;
    if max_n > MAX_DEGREE {
        return Err(format!("degree bound is capped at {MAX_DEGREE}"));
    }
    Ok(export_json(&generate(ct, max_n)))
}

/// Statistics for one vertex, with a canonical label and both restrictions.
#[wasm_bindgen]
pub fn partition_report(h: &str, partition: &str) -> Result<String, String> {
    let (ct, lam) = restricted(h, partition)?;
    let mut report = cli::stats(&lam, ct);
    let label = partition_to_canonical_path(&lam, ct).map_err(|e| e.to_string())?;
    let res_w = restrict_w(&lam, ct).map_err(|e| e.to_string())?;
    let res_s = restrict_s(&lam, ct).map_err(|e| e.to_string())?;
    report["label"] = json!(label);
    report["restrict_W"] = serde_json::to_value(&res_w).expect("json");
    report["restrict_S"] = serde_json::to_value(&res_s).expect("json");
    Ok(report.to_string())
}

/// Applies `f̃_i` (or `ẽ_i` when `raise` is false). The result is `null` when
/// the operator vanishes.
#[wasm_bindgen]
pub fn crystal_step(h: &str, partition: &str, i: u32, raise: bool) -> Result<String, String> {
    let (ct, lam) = restricted(h, partition)?;
    let i = residue(ct, i)?;
    let next = if raise {
        f_tilde(&lam, ct, i)
    } else {
        e_tilde(&lam, ct, i)
    };
    Ok(json!(next).to_string())
}

/// The vertex reached from `∅` along a residue word such as `0 1 0 0`.
#[wasm_bindgen]
pub fn follow_label(h: &str, word: &str) -> Result<String, String> {
    let ct = cartan(h)?;
    let mut label = Vec::new();
    for tok in word
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        let i: u32 = tok.parse().map_err(|_| format!("bad residue {tok:?}"))?;
        label.push(residue(ct, i)?);
    }
    let value: Value = json!(path_to_partition(&label, ct));
    Ok(value.to_string())
}
