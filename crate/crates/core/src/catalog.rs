//! Homotopy data for structure groups: `pi_n(K)` tables, Samelson pairings on
//! generators, and the odd-sphere rational model.
//!
//! Catalogs are JSON files; see `data/catalog.json` for the shipped one. A file
//! is validated as a whole and rejected on the first violation.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::Deserialize;
use thiserror::Error;

use crate::fgab::{AlgebraError, FgAbGroup, GroupElement};

/// Environment variable naming a catalog file to use instead of the built-in one.
pub const CATALOG_ENV: &str = "GHG_CATALOG";

/// Contents of the shipped `data/catalog.json`.
pub const BUILTIN_CATALOG: &str = include_str!("../data/catalog.json");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("cannot read catalog {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("malformed catalog: {0}")]
    Parse(String),
    #[error("invalid catalog entry {entry}, field {field}: {message}")]
    Validation {
        entry: String,
        field: String,
        message: String,
    },
    #[error("unknown group {0}")]
    UnknownGroup(String),
    #[error("table depth exceeded: {group} has pi_n catalogued only up to n = {depth}, needed n = {degree}")]
    TableDepthExceeded { group: String, degree: u32, depth: u32 },
    #[error("pairing of degrees ({n}, {m}) cannot take arguments from {left} and {right}")]
    DegreeMismatch {
        n: u32,
        m: u32,
        left: String,
        right: String,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    name: String,
    connected: bool,
    #[serde(default)]
    abelian: bool,
    rational_exponents: Vec<i64>,
    pi: Vec<RawPiRow>,
    #[serde(default)]
    samelson: Vec<RawPairing>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPiRow {
    degree: u32,
    rank: usize,
    factors: Vec<i64>,
    source: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPairing {
    n: u32,
    m: u32,
    values: Vec<Vec<Vec<i64>>>,
}

/// One row of a `pi_n(K)` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiEntry {
    pub group: FgAbGroup,
    pub source: String,
}

/// Samelson pairing `pi_n(K) x pi_m(K) -> pi_{n+m}(K)` on canonical generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    degrees: (u32, u32),
    left: FgAbGroup,
    right: FgAbGroup,
    target: FgAbGroup,
    /// `values[i][j]` pairs generator `i` of the left group with generator `j` of the right.
    values: Vec<Vec<GroupElement>>,
}

impl PairingMatrix {
    pub fn zero(degrees: (u32, u32), left: FgAbGroup, right: FgAbGroup, target: FgAbGroup) -> Self {
        let values = vec![vec![target.zero(); right.ngens()]; left.ngens()];
        PairingMatrix {
            degrees,
            left,
            right,
            target,
            values,
        }
    }

    pub fn degrees(&self) -> (u32, u32) {
        self.degrees
    }

    pub fn left(&self) -> &FgAbGroup {
        &self.left
    }

    pub fn right(&self) -> &FgAbGroup {
        &self.right
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn value(&self, i: usize, j: usize) -> &GroupElement {
        &self.values[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(GroupElement::is_zero)
    }
}

/// Bilinear extension of the generator values.
pub fn samelson_apply(
    pairing: &PairingMatrix,
    a: &GroupElement,
    b: &GroupElement,
) -> Result<GroupElement, CatalogError> {
    if a.group() != &pairing.left || b.group() != &pairing.right {
        return Err(CatalogError::DegreeMismatch {
            n: pairing.degrees.0,
            m: pairing.degrees.1,
            left: a.group().to_string(),
            right: b.group().to_string(),
        });
    }
    let mut acc = pairing.target.zero();
    for (x, row) in a.coords().iter().zip(&pairing.values) {
        for (y, v) in b.coords().iter().zip(row) {
            acc = acc.add(&v.scale(&(x * y))).expect("values live in the target group");
        }
    }
    Ok(acc)
}

/// Catalogued data for one structure group.
#[derive(Clone, Debug)]
pub struct GroupCatalogEntry {
    name: String,
    abelian: bool,
    rational_exponents: Vec<u32>,
    pi_table: Vec<PiEntry>,
    samelson_table: BTreeMap<(u32, u32), PairingMatrix>,
}

impl GroupCatalogEntry {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    /// Every catalogued group is connected; loading rejects anything else.
    pub fn is_connected(&self) -> bool {
        true
    }

    pub fn rational_exponents(&self) -> &[u32] {
        &self.rational_exponents
    }

    /// Largest `n` with `pi_n(K)` catalogued.
    pub fn depth(&self) -> u32 {
        self.pi_table.len() as u32 - 1
    }

    pub fn pi_entry(&self, n: u32) -> Result<&PiEntry, CatalogError> {
        self.pi_table
            .get(n as usize)
            .ok_or_else(|| CatalogError::TableDepthExceeded {
                group: self.name.clone(),
                degree: n,
                depth: self.depth(),
            })
    }

    pub fn lookup_pi(&self, n: u32) -> Result<FgAbGroup, CatalogError> {
        self.pi_entry(n).map(|e| e.group.clone())
    }

    /// Stored pairing, a zero pairing when it is forced, or `None` when unknown.
    pub fn lookup_samelson(&self, n: u32, m: u32) -> Result<Option<PairingMatrix>, CatalogError> {
        let left = self.lookup_pi(n)?;
        let right = self.lookup_pi(m)?;
        let target = self.lookup_pi(n + m)?;
        if let Some(p) = self.samelson_table.get(&(n, m)) {
            return Ok(Some(p.clone()));
        }
        if self.abelian || left.is_trivial() || right.is_trivial() || target.is_trivial() {
            return Ok(Some(PairingMatrix::zero((n, m), left, right, target)));
        }
        Ok(None)
    }

    /// Pairings stored in the file, keyed by degrees.
    pub fn stored_pairings(&self) -> impl Iterator<Item = &PairingMatrix> {
        self.samelson_table.values()
    }

    /// `dim pi_n(K) (x) Q`: how often `n` occurs among the exponents.
    pub fn rational_pi(&self, n: u32) -> usize {
        self.rational_exponents.iter().filter(|&&e| e == n).count()
    }
}

/// A validated, immutable set of catalog entries.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<GroupCatalogEntry>,
}

impl Catalog {
    pub fn builtin() -> Self {
        Self::from_json_str(BUILTIN_CATALOG).expect("shipped catalog is valid")
    }

    pub fn load(path: &Path) -> Result<Self, CatalogError> {
        let text = fs::read_to_string(path).map_err(|e| CatalogError::Io {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        Self::from_json_str(&text)
    }

    /// An explicit path wins, then `GHG_CATALOG`, then the built-in catalog.
    pub fn resolve(explicit: Option<&Path>) -> Result<Self, CatalogError> {
        if let Some(path) = explicit {
            return Self::load(path);
        }
        match std::env::var_os(CATALOG_ENV) {
            Some(path) if !path.is_empty() => Self::load(Path::new(&path)),
            _ => Ok(Self::builtin()),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self, CatalogError> {
        let raw: Vec<RawEntry> = serde_json::from_str(text).map_err(|e| CatalogError::Parse(e.to_string()))?;
        let mut entries: Vec<GroupCatalogEntry> = Vec::with_capacity(raw.len());
        for r in raw {
            if entries.iter().any(|e| e.name == r.name) {
                return Err(invalid(&r.name, "name", "duplicate entry"));
            }
            entries.push(validate_entry(r)?);
        }
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[GroupCatalogEntry] {
        &self.entries
    }

    pub fn entry(&self, name: &str) -> Result<&GroupCatalogEntry, CatalogError> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| CatalogError::UnknownGroup(name.to_string()))
    }
}

pub fn load_catalog(path: &Path) -> Result<Catalog, CatalogError> {
    Catalog::load(path)
}

fn invalid(entry: &str, field: impl Into<String>, message: impl Into<String>) -> CatalogError {
    CatalogError::Validation {
        entry: entry.to_string(),
        field: field.into(),
        message: message.into(),
    }
}

fn validate_entry(raw: RawEntry) -> Result<GroupCatalogEntry, CatalogError> {
    let name = raw.name;
    if name.trim().is_empty() {
        return Err(invalid("<unnamed>", "name", "empty name"));
    }
    if !raw.connected {
        return Err(invalid(&name, "connected", "only connected structure groups are supported"));
    }

    let mut rational_exponents = Vec::with_capacity(raw.rational_exponents.len());
    for &e in &raw.rational_exponents {
        if e < 1 || e % 2 == 0 {
            return Err(invalid(&name, "rational_exponents", format!("{e} is not an odd positive integer")));
        }
        rational_exponents.push(e as u32);
    }

    let mut rows = raw.pi;
    rows.sort_by_key(|r| r.degree);
    let mut pi_table = Vec::with_capacity(rows.len());
    for (expected, row) in rows.into_iter().enumerate() {
        let field = format!("pi[degree {}]", row.degree);
        if row.degree as usize != expected {
            return Err(invalid(
                &name,
                field,
                format!("degrees must run 0, 1, 2, ... without gaps or repeats; expected {expected}"),
            ));
        }
        let group = FgAbGroup::new(row.rank, row.factors.into_iter().map(BigInt::from).collect()).map_err(|e| invalid(&name, &field, e.to_string()))?;
        if row.degree == 0 && !group.is_trivial() {
            return Err(invalid(&name, field, "pi_0 of a connected group is trivial"));
        }
        pi_table.push(PiEntry {
            group,
            source: row.source,
        });
    }
    if pi_table.is_empty() {
        return Err(invalid(&name, "pi", "table is empty"));
    }

    let mut entry = GroupCatalogEntry {
        name,
        abelian: raw.abelian,
        rational_exponents,
        pi_table,
        samelson_table: BTreeMap::new(),
    };

    for n in 0..=entry.depth() {
        let rank = entry.pi_table[n as usize].group.rank();
        let expected = entry.rational_pi(n);
        if rank != expected {
            return Err(invalid(
                &entry.name,
                format!("pi[degree {n}]"),
                format!("free rank {rank} disagrees with the rational model ({expected})"),
            ));
        }
    }

    for p in raw.samelson {
        let pairing = validate_pairing(&entry, p)?;
        if entry.samelson_table.insert(pairing.degrees, pairing).is_some() {
            return Err(invalid(&entry.name, "samelson", "duplicate degrees"));
        }
    }
    Ok(entry)
}

fn validate_pairing(entry: &GroupCatalogEntry, raw: RawPairing) -> Result<PairingMatrix, CatalogError> {
    let field = format!("samelson[{}, {}]", raw.n, raw.m);
    let err = |message: String| invalid(&entry.name, &field, message);
    if raw.n == 0 || raw.m == 0 {
        return Err(err("degrees must be positive".into()));
    }
    let lookup = |d: u32| entry.lookup_pi(d).map_err(|e| err(e.to_string()));
    let left = lookup(raw.n)?;
    let right = lookup(raw.m)?;
    let target = lookup(raw.n + raw.m)?;

    if raw.values.len() != left.ngens() {
        return Err(err(format!("expected {} rows, found {}", left.ngens(), raw.values.len())));
    }
    let mut values = Vec::with_capacity(raw.values.len());
    for (i, row) in raw.values.into_iter().enumerate() {
        if row.len() != right.ngens() {
            return Err(err(format!("row {i}: expected {} values, found {}", right.ngens(), row.len())));
        }
        let mut out = Vec::with_capacity(row.len());
        for (j, coords) in row.into_iter().enumerate() {
            let v = target
                .element(coords.into_iter().map(BigInt::from).collect())
                .map_err(|e: AlgebraError| err(format!("value ({i}, {j}): {e}")))?;
            if !v.is_torsion() {
                return Err(err(format!("value ({i}, {j}) has infinite order; Samelson values must be torsion")));
            }
            for d in [left.generator_order(i), right.generator_order(j)] {
                if d != BigInt::from(0) && !v.scale(&d).is_zero() {
                    return Err(err(format!(
                        "value ({i}, {j}) is not killed by generator order {d}; pairing is not well defined"
                    )));
                }
            }
            out.push(v);
        }
        values.push(out);
    }
    Ok(PairingMatrix {
        degrees: (raw.n, raw.m),
        left,
        right,
        target,
        values,
    })
}
