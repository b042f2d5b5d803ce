//! Homotopy groups of gauge groups of principal `K`-bundles.
//!
//! Over `S^m` with characteristic class `b` in `pi_{m-1}(K)` the evaluation
//! fibration gives
//!
//! ```text
//! pi_{n+1}(K) --d_{n+1}--> pi_{n+m}(K) -> pi_n(Gau P) -> pi_n(K) --d_n--> pi_{n+m-1}(K)
//! ```
//!
//! with `d_n(a) = -<a, b>`. Over a genus-`g` surface with class `b` in `pi_1(K)`
//! the targets become `pi_n(K)^{2g} + pi_{n+1}(K)` and `d_n(a) = (0, -<a, b>)`.
//! Rationally all Samelson products vanish, so the sequences split.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::catalog::{samelson_apply, Catalog, CatalogError, GroupCatalogEntry};
use crate::exactseq::{middle_group_with_bound, SequenceError, SequenceResult, DEFAULT_TORSION_BOUND};
use crate::fgab::{
    block_sum, direct_sum_all, tensor_q, AlgebraError, FgAbGroup, GroupElement, Homomorphism, IntMatrix,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaugeError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("Samelson pairing pi_{n} x pi_{m} -> pi_{} of {group} is not catalogued (needed for {stage})", n + m)]
    PairingUnavailable {
        group: String,
        n: u32,
        m: u32,
        stage: String,
    },
    #[error("degree n = {0} is not supported; the sequence is only a group-level statement for n >= 1")]
    InvalidDegree(u32),
    #[error("invalid base {0}")]
    InvalidBase(String),
    #[error("bundle class {found} does not lie in {expected}")]
    ClassMismatch { expected: String, found: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

/// Base manifold of the bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// `S^m`, `m >= 1`.
    Sphere(u32),
    /// Closed orientable surface of genus `g`.
    Surface(u32),
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Sphere(m) => write!(f, "sphere:{m}"),
            Base::Surface(g) => write!(f, "surface:{g}"),
        }
    }
}

impl FromStr for Base {
    type Err = GaugeError;

    /// Parses `sphere:<m>` or `surface:<g>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GaugeError::InvalidBase(format!("{s:?}: expected sphere:<m> or surface:<g>"));
        let (kind, value) = s.split_once(':').ok_or_else(bad)?;
        let value: u32 = value.trim().parse().map_err(|_| bad())?;
        match kind.trim() {
            "sphere" if value >= 1 => Ok(Base::Sphere(value)),
            "sphere" => Err(GaugeError::InvalidBase("sphere dimension must be at least 1".into())),
            "surface" => Ok(Base::Surface(value)),
            _ => Err(bad()),
        }
    }
}

/// The homotopy group classifying bundles over `base`: `pi_{m-1}(K)` or `pi_1(K)`.
pub fn class_group(entry: &GroupCatalogEntry, base: Base) -> Result<FgAbGroup, GaugeError> {
    match base {
        Base::Sphere(0) => Err(GaugeError::InvalidBase("sphere dimension must be at least 1".into())),
        Base::Sphere(m) => Ok(entry.lookup_pi(m - 1)?),
        Base::Surface(_) => Ok(entry.lookup_pi(1)?),
    }
}

/// A principal bundle given by its base and characteristic class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleSpec {
    base: Base,
    class: GroupElement,
}

impl BundleSpec {
    pub fn new(entry: &GroupCatalogEntry, base: Base, class: GroupElement) -> Result<Self, GaugeError> {
        let expected = class_group(entry, base)?;
        if class.group() != &expected {
            return Err(GaugeError::ClassMismatch {
                expected: expected.to_string(),
                found: class.to_string(),
            });
        }
        Ok(BundleSpec { base, class })
    }

    pub fn from_coords(entry: &GroupCatalogEntry, base: Base, coords: &[BigInt]) -> Result<Self, GaugeError> {
        let group = class_group(entry, base)?;
        let class = group.element(coords.to_vec())?;
        Ok(BundleSpec { base, class })
    }

    /// The trivial bundle.
    pub fn trivial(entry: &GroupCatalogEntry, base: Base) -> Result<Self, GaugeError> {
        let class = class_group(entry, base)?.zero();
        Ok(BundleSpec { base, class })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn class(&self) -> &GroupElement {
        &self.class
    }

    /// Same base, class negated.
    pub fn negated(&self) -> BundleSpec {
        BundleSpec {
            base: self.base,
            class: self.class.neg(),
        }
    }
}

fn require_positive(n: u32) -> Result<(), GaugeError> {
    if n == 0 {
        Err(GaugeError::InvalidDegree(0))
    } else {
        Ok(())
    }
}

/// Columns `-<gen_i, b>` for the generators of `pi_n(K)`, or `None` when the
/// pairing is forced to vanish.
fn negated_pairing(
    entry: &GroupCatalogEntry,
    n: u32,
    b: &GroupElement,
    b_degree: u32,
    stage: String,
) -> Result<Option<Vec<GroupElement>>, GaugeError> {
    let source = entry.lookup_pi(n)?;
    let target = entry.lookup_pi(n + b_degree)?;
    if source.is_trivial() || target.is_trivial() || b.group().is_trivial() || b.is_zero() || entry.is_abelian() {
        return Ok(None);
    }
    let pairing = entry
        .lookup_samelson(n, b_degree)?
        .ok_or_else(|| GaugeError::PairingUnavailable {
            group: entry.name().to_string(),
            n,
            m: b_degree,
            stage,
        })?;
    let columns = (0..source.ngens())
        .map(|i| samelson_apply(&pairing, &source.generator(i), b).map(|v| v.neg()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Some(columns))
}

/// `d_n : pi_n(K) -> pi_{n+m-1}(K)`, `a -> -<a, b>`, for a bundle over `S^m`.
pub fn connecting_hom_sphere(
    entry: &GroupCatalogEntry,
    m: u32,
    b: &GroupElement,
    n: u32,
) -> Result<Homomorphism, GaugeError> {
    require_positive(n)?;
    let class = class_group(entry, Base::Sphere(m))?;
    if b.group() != &class {
        return Err(GaugeError::ClassMismatch {
            expected: class.to_string(),
            found: b.to_string(),
        });
    }
    let domain = entry.lookup_pi(n)?;
    let codomain = entry.lookup_pi(n + m - 1)?;
    let stage = format!("the connecting map on pi_{n} over S^{m}");
    match negated_pairing(entry, n, b, m - 1, stage)? {
        None => Ok(Homomorphism::zero(domain, codomain)),
        Some(columns) => {
            let mut matrix = IntMatrix::zeros(codomain.ngens(), domain.ngens());
            for (j, v) in columns.iter().enumerate() {
                for (i, x) in v.coords().iter().enumerate() {
                    matrix[(i, j)] = x.clone();
                }
            }
            Ok(Homomorphism::new(domain, codomain, matrix)?)
        }
    }
}

/// `d_n : pi_n(K) -> pi_n(K)^{2g} + pi_{n+1}(K)`, `a -> (0, -<a, b>)`, over a
/// genus-`g` surface.
///
/// The codomain is returned in canonical form; the block layout is converted
/// through the canonicalizing coordinate change.
pub fn connecting_hom_surface(
    entry: &GroupCatalogEntry,
    genus: u32,
    b: &GroupElement,
    n: u32,
) -> Result<Homomorphism, GaugeError> {
    require_positive(n)?;
    let class = class_group(entry, Base::Surface(genus))?;
    if b.group() != &class {
        return Err(GaugeError::ClassMismatch {
            expected: class.to_string(),
            found: b.to_string(),
        });
    }
    let domain = entry.lookup_pi(n)?;
    let loops = entry.lookup_pi(n)?;
    let top = entry.lookup_pi(n + 1)?;
    let mut blocks: Vec<&FgAbGroup> = vec![&loops; 2 * genus as usize];
    blocks.push(&top);
    let layout = block_sum(blocks).canonicalize_with_coordinates();
    let codomain = layout.group.clone();

    let stage = format!("the connecting map on pi_{n} over the genus-{genus} surface");
    let Some(columns) = negated_pairing(entry, n, b, 1, stage)? else {
        return Ok(Homomorphism::zero(domain, codomain));
    };
    let offset = 2 * genus as usize * loops.ngens();
    let width = offset + top.ngens();
    let mut block = IntMatrix::zeros(width, domain.ngens());
    for (j, v) in columns.iter().enumerate() {
        for (i, x) in v.coords().iter().enumerate() {
            block[(offset + i, j)] = x.clone();
        }
    }
    let matrix = &layout.to_canonical * &block;
    Ok(Homomorphism::new(domain, codomain, matrix)?.normalized())
}

/// `pi_n(Gau P)` from the exact sequence, with the default torsion bound.
pub fn gauge_homotopy(entry: &GroupCatalogEntry, bundle: &BundleSpec, n: u32) -> Result<SequenceResult, GaugeError> {
    gauge_homotopy_with_bound(entry, bundle, n, DEFAULT_TORSION_BOUND)
}

pub fn gauge_homotopy_with_bound(
    entry: &GroupCatalogEntry,
    bundle: &BundleSpec,
    n: u32,
    torsion_bound: u64,
) -> Result<SequenceResult, GaugeError> {
    require_positive(n)?;
    let b = &bundle.class;
    match bundle.base {
        Base::Sphere(m) => {
            let left = connecting_hom_sphere(entry, m, b, n + 1)?;
            let right = connecting_hom_sphere(entry, m, b, n)?;
            Ok(middle_group_with_bound(&left, &right, torsion_bound)?)
        }
        Base::Surface(g) => {
            let left = connecting_hom_surface(entry, g, b, n + 1)?;
            let right = connecting_hom_surface(entry, g, b, n)?;
            let result = middle_group_with_bound(&left, &right, torsion_bound)?;
            if g == 0 {
                // With no loops the surface sequence is the one over S^2.
                let l2 = connecting_hom_sphere(entry, 2, b, n + 1)?;
                let r2 = connecting_hom_sphere(entry, 2, b, n)?;
                let sphere = middle_group_with_bound(&l2, &r2, torsion_bound)?;
                if sphere != result {
                    return Err(GaugeError::Inconsistent(format!(
                        "genus-0 surface gives {:?} but S^2 gives {:?}",
                        result, sphere
                    )));
                }
            }
            Ok(result)
        }
    }
}

/// `dim pi_n(Gau P) (x) Q` from the split rational sequence.
///
/// Over `S^m` this is `pi_{n+m}^Q + pi_n^Q`; over a genus-`g` surface it is
/// `pi_{n+2}^Q + (pi_{n+1}^Q)^{2g} + pi_n^Q`. The bundle class plays no role.
pub fn rational_dimension(entry: &GroupCatalogEntry, base: Base, n: u32) -> Result<usize, GaugeError> {
    require_positive(n)?;
    let q = |k: u32| entry.rational_pi(k);
    match base {
        Base::Sphere(0) => Err(GaugeError::InvalidBase("sphere dimension must be at least 1".into())),
        Base::Sphere(m) => Ok(q(n + m) + q(n)),
        Base::Surface(g) => Ok(q(n + 2) + 2 * g as usize * q(n + 1) + q(n)),
    }
}

pub fn gauge_homotopy_rational(entry: &GroupCatalogEntry, bundle: &BundleSpec, n: u32) -> Result<usize, GaugeError> {
    rational_dimension(entry, bundle.base, n)
}

/// Second route to [`rational_dimension`]: run the exact-sequence engine on
/// rationalized groups with both connecting maps set to zero.
///
/// `pi_k(K) (x) Q` is read from the catalogued table where it exists and from
/// the odd-sphere model beyond it.
pub fn rational_dimension_via_sequence(entry: &GroupCatalogEntry, base: Base, n: u32) -> Result<usize, GaugeError> {
    require_positive(n)?;
    let rational = |k: u32| -> FgAbGroup {
        match entry.lookup_pi(k) {
            Ok(g) => FgAbGroup::free(tensor_q(&g)),
            Err(_) => FgAbGroup::free(entry.rational_pi(k)),
        }
    };
    let (left, right) = match base {
        Base::Sphere(0) => return Err(GaugeError::InvalidBase("sphere dimension must be at least 1".into())),
        Base::Sphere(m) => (
            Homomorphism::zero(rational(n + 1), rational(n + m)),
            Homomorphism::zero(rational(n), rational(n + m - 1)),
        ),
        Base::Surface(g) => {
            let target = |k: u32| {
                let loops = rational(k);
                let mut parts = vec![loops; 2 * g as usize];
                parts.push(rational(k + 1));
                direct_sum_all(&parts)
            };
            (
                Homomorphism::zero(rational(n + 1), target(n + 1)),
                Homomorphism::zero(rational(n), target(n)),
            )
        }
    };
    let result = middle_group_with_bound(&left, &right, DEFAULT_TORSION_BOUND)?;
    let group = result
        .resolved()
        .ok_or_else(|| GaugeError::Inconsistent("rational sequence did not split".into()))?;
    Ok(tensor_q(group))
}

/// `pi_2(Gau P_k)` for the `SU2` bundle over `S^4` with class `k`, computed
/// through the exact sequence.
pub fn su2_s4_pi2(catalog: &Catalog, k: i64) -> Result<FgAbGroup, GaugeError> {
    let su2 = catalog.entry("SU2")?;
    let bundle = BundleSpec::from_coords(su2, Base::Sphere(4), &[BigInt::from(k)])?;
    let result = gauge_homotopy(su2, &bundle, 2)?;
    result
        .resolved()
        .cloned()
        .ok_or_else(|| GaugeError::Inconsistent(format!("pi_2 for k = {k} was not resolved: {result:?}")))
}
