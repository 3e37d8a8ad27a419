//! Tables of low-degree irreducible characters, and their cross-check
//! against the crystal on restricted h-strict partitions.
//!
//! The bundled table (`data/appendix.txt`) is written with letter patterns
//! such as `L(ii'j) = …` plus side conditions on the letters; loading it for
//! a given rank instantiates every admissible assignment.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{eps_from_character, survives_lambda0, Character, ResidueWord};
use crate::blocks::{type_from_content, type_w};
use crate::cartan::{CartanType, Residue};
use crate::crystal::eps;
use crate::error::{Error, Result};
use crate::graph::path_to_partition;
use crate::partition::{enumerate_restricted, Partition};

const BUNDLED: &str = include_str!("../../data/appendix.txt");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixEntry {
    /// Path label: the module is `f̃_{i_n} ⋯ f̃_{i_1}` applied to the trivial one.
    pub label: ResidueWord,
    pub character: Character,
    /// Line of the table the entry was instantiated from.
    pub line: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Appendix {
    pub ell: usize,
    pub entries: Vec<AppendixEntry>,
    /// Duplicate labels with different characters, and entries whose words
    /// do not all have the label's content.
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Letter {
    Var { base: char, shift: usize },
    Digit(usize),
}

#[derive(Clone, Debug)]
struct Term {
    coefficient: i64,
    word: Vec<Letter>,
    permute: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Atom {
    Int(i64),
    Ell,
    Var(char),
}

#[derive(Clone, Copy, Debug)]
struct Expr {
    atom: Atom,
    offset: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Lt,
    Le,
    Eq,
    Ne,
    Ge,
    Gt,
}

#[derive(Clone, Debug)]
struct Chain {
    exprs: Vec<Expr>,
    ops: Vec<Op>,
}

#[derive(Clone, Debug)]
struct Template {
    line: usize,
    label: Vec<Letter>,
    terms: Vec<Term>,
    /// Conjunction of disjunctions.
    condition: Vec<Vec<Chain>>,
}

struct Section {
    degree: usize,
    ell: Option<usize>,
    templates: Vec<Template>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_word(s: &str, line: usize) -> Result<Vec<Letter>> {
    let mut letters = Vec::new();
    let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
    while let Some(c) = chars.next() {
        match c {
            'i' | 'j' | 'k' | 'l' => {
                let mut shift = 0;
                while chars.peek() == Some(&'\'') {
                    chars.next();
                    shift += 1;
                }
                letters.push(Letter::Var { base: c, shift });
            }
            '0'..='9' => letters.push(Letter::Digit(c as usize - '0' as usize)),
            _ => return Err(parse_err(line, format!("unexpected `{c}` in word `{s}`"))),
        }
    }
    if letters.is_empty() {
        return Err(parse_err(line, "empty word"));
    }
    Ok(letters)
}

fn parse_term(s: &str, line: usize) -> Result<Term> {
    let s = s.trim();
    if let Some((coef, rest)) = s.split_once('*') {
        let inner = rest
            .trim()
            .strip_prefix("perm(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| parse_err(line, format!("expected perm(...) in `{s}`")))?;
        return Ok(Term {
            coefficient: parse_int(coef, line)?,
            word: parse_word(inner, line)?,
            permute: true,
        });
    }
    let (coefficient, word) = match s.split_once('.') {
        Some((coef, word)) => (parse_int(coef, line)?, word),
        None => (1, s),
    };
    Ok(Term {
        coefficient,
        word: parse_word(word, line)?,
        permute: false,
    })
}

fn parse_int(s: &str, line: usize) -> Result<i64> {
    s.trim()
        .parse()
        .map_err(|_| parse_err(line, format!("expected an integer, got `{}`", s.trim())))
}

fn parse_expr(s: &str, line: usize) -> Result<Expr> {
    let s = s.trim();
    let (head, offset) = match s.find(['+', '-']) {
        Some(pos) if pos > 0 => {
            let k = parse_int(&s[pos + 1..], line)?;
            (s[..pos].trim(), if &s[pos..=pos] == "-" { -k } else { k })
        }
        _ => (s, 0),
    };
    let atom = match head {
        "ell" => Atom::Ell,
        "i" | "j" | "k" | "l" => Atom::Var(head.chars().next().unwrap()),
        _ => Atom::Int(parse_int(head, line)?),
    };
    Ok(Expr { atom, offset })
}

fn parse_chain(s: &str, line: usize) -> Result<Chain> {
    let mut exprs = Vec::new();
    let mut ops = Vec::new();
    let mut rest = s.trim();
    loop {
        let next = [
            ("<=", Op::Le),
            (">=", Op::Ge),
            ("!=", Op::Ne),
            ("<", Op::Lt),
            (">", Op::Gt),
            ("=", Op::Eq),
        ]
        .iter()
        .filter_map(|&(tok, op)| rest.find(tok).map(|pos| (pos, tok, op)))
        .min_by_key(|&(pos, tok, _)| (pos, std::cmp::Reverse(tok.len())));
        match next {
            Some((pos, tok, op)) => {
                exprs.push(parse_expr(&rest[..pos], line)?);
                ops.push(op);
                rest = &rest[pos + tok.len()..];
            }
            None => {
                exprs.push(parse_expr(rest, line)?);
                break;
            }
        }
    }
    if ops.is_empty() {
        return Err(parse_err(
            line,
            format!("condition `{}` has no comparison", s.trim()),
        ));
    }
    Ok(Chain { exprs, ops })
}

fn parse_entry(body: &str, line: usize) -> Result<Template> {
    let (lhs, rhs) = body
        .split_once('=')
        .ok_or_else(|| parse_err(line, "expected `L(label) = terms`"))?;
    let label = lhs
        .trim()
        .strip_prefix("L(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| parse_err(line, format!("expected L(...), got `{}`", lhs.trim())))?;
    let label = parse_word(label, line)?;
    let (terms, condition) = match rhs.split_once(';') {
        Some((t, c)) => (t, Some(c)),
        None => (rhs, None),
    };
    let terms = terms
        .split('+')
        .map(|t| parse_term(t, line))
        .collect::<Result<Vec<_>>>()?;
    let condition: Vec<Vec<Chain>> = match condition {
        Some(c) => c
            .split(',')
            .map(|conj| conj.split('|').map(|d| parse_chain(d, line)).collect())
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    let bases = |w: &[Letter]| -> BTreeSet<char> {
        w.iter()
            .filter_map(|l| match l {
                Letter::Var { base, .. } => Some(*base),
                Letter::Digit(_) => None,
            })
            .collect()
    };
    let label_bases = bases(&label);
    for t in &terms {
        if t.word.len() != label.len() {
            return Err(parse_err(line, "word length differs from label length"));
        }
        if !bases(&t.word).is_subset(&label_bases) {
            return Err(parse_err(line, "word uses a letter absent from the label"));
        }
    }
    for chain in condition.iter().flatten() {
        for e in &chain.exprs {
            if let Atom::Var(v) = e.atom {
                if !label_bases.contains(&v) {
                    return Err(parse_err(
                        line,
                        format!("condition uses unknown letter `{v}`"),
                    ));
                }
            }
        }
    }
    Ok(Template {
        line,
        label,
        terms,
        condition,
    })
}

fn parse_header(s: &str, line: usize) -> Result<Section> {
    let mut degree = None;
    let mut ell = None;
    for field in s.split(',') {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| parse_err(line, format!("bad section field `{}`", field.trim())))?;
        let value = parse_int(value, line)?;
        let value = usize::try_from(value).map_err(|_| parse_err(line, "negative value"))?;
        match key.trim() {
            "n" => degree = Some(value),
            "ell" => ell = Some(value),
            other => return Err(parse_err(line, format!("unknown section key `{other}`"))),
        }
    }
    Ok(Section {
        degree: degree.ok_or_else(|| parse_err(line, "section without n"))?,
        ell,
        templates: Vec::new(),
    })
}

fn parse_sections(text: &str) -> Result<Vec<Section>> {
    let mut sections: Vec<Section> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.split('#').next().unwrap().trim();
        if s.is_empty() {
            continue;
        }
        if let Some(header) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            sections.push(parse_header(header, line)?);
            continue;
        }
        let section = sections
            .last_mut()
            .ok_or_else(|| parse_err(line, "entry before any [n=...] section"))?;
        let template = parse_entry(s, line)?;
        if template.label.len() != section.degree {
            return Err(parse_err(
                line,
                format!("label length is not n={}", section.degree),
            ));
        }
        section.templates.push(template);
    }
    Ok(sections)
}

fn eval(e: &Expr, ell: i64, env: &BTreeMap<char, i64>) -> i64 {
    let base = match e.atom {
        Atom::Int(k) => k,
        Atom::Ell => ell,
        Atom::Var(v) => env[&v],
    };
    base + e.offset
}

fn holds(chain: &Chain, ell: i64, env: &BTreeMap<char, i64>) -> bool {
    chain.ops.iter().enumerate().all(|(n, op)| {
        let (x, y) = (
            eval(&chain.exprs[n], ell, env),
            eval(&chain.exprs[n + 1], ell, env),
        );
        match op {
            Op::Lt => x < y,
            Op::Le => x <= y,
            Op::Eq => x == y,
            Op::Ne => x != y,
            Op::Ge => x >= y,
            Op::Gt => x > y,
        }
    })
}

fn letter_value(l: Letter, env: &BTreeMap<char, i64>) -> i64 {
    match l {
        Letter::Var { base, shift } => env[&base] + shift as i64,
        Letter::Digit(d) => d as i64,
    }
}

/// Letters of different bases must be distinct non-neighbours, and every
/// letter must lie in `0..=ell`.
fn admissible(letters: &BTreeSet<(char, usize)>, ell: i64, env: &BTreeMap<char, i64>) -> bool {
    let values: Vec<(char, i64)> = letters
        .iter()
        .map(|&(b, s)| (b, letter_value(Letter::Var { base: b, shift: s }, env)))
        .collect();
    if values.iter().any(|&(_, v)| v > ell) {
        return false;
    }
    values.iter().enumerate().all(|(n, &(b1, v1))| {
        values[n + 1..]
            .iter()
            .all(|&(b2, v2)| b1 == b2 || (v1 - v2).abs() > 1)
    })
}

fn distinct_permutations(word: &[Residue]) -> Vec<Vec<Residue>> {
    let mut cur = word.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation until exhausted
    loop {
        let Some(pivot) = (0..cur.len().saturating_sub(1))
            .rev()
            .find(|&p| cur[p] < cur[p + 1])
        else {
            return out;
        };
        let succ = (pivot + 1..cur.len())
            .rev()
            .find(|&s| cur[s] > cur[pivot])
            .unwrap();
        cur.swap(pivot, succ);
        cur[pivot + 1..].reverse();
        out.push(cur.clone());
    }
}

fn instantiate(t: &Template, ell: usize, env: &BTreeMap<char, i64>) -> Result<AppendixEntry> {
    let word = |w: &[Letter]| -> Vec<Residue> {
        w.iter().map(|&l| letter_value(l, env) as Residue).collect()
    };
    let label = ResidueWord(word(&t.label));
    if label.letters().iter().any(|&r| r > ell) {
        return Err(parse_err(t.line, format!("letter outside 0..={ell}")));
    }
    let mut character = Character::zero(label.len());
    for term in &t.terms {
        let w = word(&term.word);
        if w.iter().any(|&r| r > ell) {
            return Err(parse_err(t.line, format!("letter outside 0..={ell}")));
        }
        let words = if term.permute {
            distinct_permutations(&w)
        } else {
            vec![w]
        };
        for w in words {
            character.add_term(ResidueWord(w), term.coefficient)?;
        }
    }
    Ok(AppendixEntry {
        label,
        character,
        line: t.line,
    })
}

/// Parses a table and instantiates it for the rank of `ct`.
pub fn parse_appendix(text: &str, ct: CartanType) -> Result<Appendix> {
    let ell = ct
        .ell()
        .ok_or_else(|| Error::Unsupported("character tables need a finite rank".into()))?;
    let mut entries: Vec<AppendixEntry> = Vec::new();
    let mut by_label: BTreeMap<ResidueWord, usize> = BTreeMap::new();
    let mut notes = Vec::new();
    for section in parse_sections(text)? {
        if section.ell.is_some_and(|l| l != ell) {
            continue;
        }
        for t in &section.templates {
            let letters: BTreeSet<(char, usize)> = std::iter::once(&t.label)
                .chain(t.terms.iter().map(|term| &term.word))
                .flatten()
                .filter_map(|l| match *l {
                    Letter::Var { base, shift } => Some((base, shift)),
                    Letter::Digit(_) => None,
                })
                .collect();
            let vars: Vec<char> = letters
                .iter()
                .map(|&(b, _)| b)
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let mut env: BTreeMap<char, i64> = vars.iter().map(|&v| (v, 0)).collect();
            loop {
                let ok = admissible(&letters, ell as i64, &env)
                    && t.condition
                        .iter()
                        .all(|any| any.iter().any(|c| holds(c, ell as i64, &env)));
                if ok {
                    let entry = instantiate(t, ell, &env)?;
                    let content = entry.label.content();
                    if entry.character.words().any(|w| w.content() != content) {
                        notes.push(format!(
                            "line {}: L({}) has words of a different content: {}",
                            t.line, entry.label, entry.character
                        ));
                    }
                    match by_label.get(&entry.label) {
                        Some(&k) if entries[k].character != entry.character => notes.push(format!(
                            "line {}: L({}) conflicts with line {}; keeping the first",
                            t.line, entry.label, entries[k].line
                        )),
                        Some(_) => {}
                        None => {
                            by_label.insert(entry.label.clone(), entries.len());
                            entries.push(entry);
                        }
                    }
                }
                // odometer over assignments in 0..=ell
                let Some(v) = vars.iter().find(|v| env[v] < ell as i64) else {
                    break;
                };
                for w in vars.iter().take_while(|w| *w != v) {
                    env.insert(*w, 0);
                }
                *env.get_mut(v).unwrap() += 1;
            }
        }
    }
    Ok(Appendix {
        ell,
        entries,
        notes,
    })
}

/// The bundled table instantiated for the rank of `ct`.
pub fn load_appendix(ct: CartanType) -> Result<Appendix> {
    parse_appendix(BUNDLED, ct)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSummary {
    pub degree: usize,
    pub labels: usize,
    /// Distinct characters, i.e. distinct modules.
    pub modules: usize,
    pub survivors: usize,
    /// Number of restricted h-strict partitions of this degree.
    pub expected: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    pub ell: usize,
    pub degrees: Vec<DegreeSummary>,
    pub survivors: Vec<(ResidueWord, Partition)>,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl CrossCheckReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every module whose character survives the `Λ₀` filter: its labels
/// are paths from `∅`, all to the same partition; `ε_i` read off the
/// character equals the crystal `ε_i` there; the label content has the
/// partition's type. Per degree, survivors are counted against the number
/// of restricted h-strict partitions.
pub fn cross_check(appendix: &Appendix, ct: CartanType) -> CrossCheckReport {
    let mut failures = Vec::new();
    let mut survivors = Vec::new();
    let mut modules: BTreeMap<usize, BTreeMap<Vec<(ResidueWord, i64)>, Vec<&AppendixEntry>>> =
        BTreeMap::new();
    for e in &appendix.entries {
        let key = e.character.terms().map(|(w, c)| (w.clone(), c)).collect();
        modules
            .entry(e.label.len())
            .or_default()
            .entry(key)
            .or_default()
            .push(e);
    }
    let mut degrees = Vec::new();
    for (&degree, by_character) in &modules {
        let mut surviving = 0;
        let mut images = BTreeSet::new();
        for labels in by_character.values() {
            let character = &labels[0].character;
            if !survives_lambda0(character).unwrap_or(false) {
                continue;
            }
            surviving += 1;
            let targets: Vec<Option<Partition>> = labels
                .iter()
                .map(|e| path_to_partition(e.label.letters(), ct))
                .collect();
            let Some(lam) = targets[0].clone() else {
                failures.push(format!(
                    "line {}: path L({}) leaves the crystal",
                    labels[0].line, labels[0].label
                ));
                continue;
            };
            for (e, t) in labels.iter().zip(&targets).skip(1) {
                if t.as_ref() != Some(&lam) {
                    failures.push(format!(
                        "line {}: labels L({}) and L({}) of one module reach different partitions",
                        e.line, labels[0].label, e.label
                    ));
                }
            }
            for i in ct.residues(degree) {
                let from_character = eps_from_character(character, i).unwrap_or(0);
                let from_crystal = eps(&lam, ct, i);
                if from_character != from_crystal {
                    failures.push(format!(
                        "line {}: L({}) ε_{i} is {from_character} from the character, \
                         {from_crystal} at {lam}",
                        labels[0].line, labels[0].label
                    ));
                }
            }
            if type_from_content(&labels[0].label.content()) != type_w(&lam, ct) {
                failures.push(format!(
                    "line {}: L({}) type differs from that of {lam}",
                    labels[0].line, labels[0].label
                ));
            }
            if !images.insert(lam.clone()) {
                failures.push(format!("two surviving modules reach {lam}"));
            }
            survivors.push((labels[0].label.clone(), lam));
        }
        let expected = enumerate_restricted(degree, ct).len();
        if surviving != expected {
            failures.push(format!(
                "degree {degree}: {surviving} surviving modules, {expected} restricted partitions"
            ));
        }
        degrees.push(DegreeSummary {
            degree,
            labels: by_character.values().map(Vec::len).sum(),
            modules: by_character.len(),
            survivors: surviving,
            expected,
        });
    }
    CrossCheckReport {
        ell: appendix.ell,
        degrees,
        survivors,
        failures,
        notes: appendix.notes.clone(),
    }
}
