//! Finitely generated abelian groups in invariant-factor form.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{snf, AlgebraError, IntMatrix};

/// `Z^rank + Z/d_1 + ... + Z/d_t` with `2 <= d_1 | d_2 | ... | d_t`.
///
/// Canonical generators are ordered free ones first, then one generator per
/// invariant factor in increasing order. Equality is isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FgAbGroup {
    rank: usize,
    factors: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        FgAbGroup {
            rank: 0,
            factors: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            rank,
            factors: Vec::new(),
        }
    }

    /// `Z/n`; `Z/1` is trivial and `Z/0` is `Z`.
    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => Self::free(1),
            1 => Self::trivial(),
            _ => FgAbGroup {
                rank: 0,
                factors: vec![BigInt::from(n)],
            },
        }
    }

    /// Validates an already-canonical description.
    pub fn new(rank: usize, factors: Vec<BigInt>) -> Result<Self, AlgebraError> {
        for (i, d) in factors.iter().enumerate() {
            if *d < BigInt::from(2) {
                return Err(AlgebraError::NonCanonical(format!(
                    "invariant factor {d} is below 2"
                )));
            }
            if let Some(next) = factors.get(i + 1) {
                if !next.is_multiple_of(d) {
                    return Err(AlgebraError::NonCanonical(format!(
                        "invariant factor {d} does not divide {next}"
                    )));
                }
            }
        }
        Ok(FgAbGroup { rank, factors })
    }

    pub fn from_u64(rank: usize, factors: &[u64]) -> Result<Self, AlgebraError> {
        Self::new(rank, factors.iter().map(|&d| BigInt::from(d)).collect())
    }

    /// Canonical form of `Z^rank + (+)_i Z/orders_i` for arbitrary orders,
    /// where order 0 means a free summand and 1 a trivial one.
    pub fn from_cyclic_orders(rank: usize, orders: &[BigInt]) -> Self {
        let g = rank + orders.len();
        let mut rows = Vec::new();
        for (i, d) in orders.iter().enumerate() {
            let mut row = vec![BigInt::zero(); g];
            row[rank + i] = d.clone();
            rows.push(row);
        }
        let relations = IntMatrix::from_big_rows(g, rows).expect("rows have width g");
        Presentation::new(g, relations)
            .expect("relation width matches")
            .canonicalize()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.factors
    }

    /// Number of canonical generators.
    pub fn ngens(&self) -> usize {
        self.rank + self.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.factors.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of the group; `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion_order())
    }

    pub fn torsion_order(&self) -> BigInt {
        self.factors.iter().product()
    }

    pub fn torsion(&self) -> FgAbGroup {
        FgAbGroup {
            rank: 0,
            factors: self.factors.clone(),
        }
    }

    /// Order of canonical generator `i`; zero marks a free generator.
    pub fn generator_order(&self, i: usize) -> BigInt {
        if i < self.rank {
            BigInt::zero()
        } else {
            self.factors[i - self.rank].clone()
        }
    }

    /// Orders of all canonical generators, zero for free ones.
    pub fn generator_orders(&self) -> Vec<BigInt> {
        (0..self.ngens()).map(|i| self.generator_order(i)).collect()
    }

    /// Diagonal relation matrix presenting this group on its canonical generators.
    pub fn relation_matrix(&self) -> IntMatrix {
        let g = self.ngens();
        let mut m = IntMatrix::zeros(self.factors.len(), g);
        for (k, d) in self.factors.iter().enumerate() {
            m[(k, self.rank + k)] = d.clone();
        }
        m
    }

    pub fn presentation(&self) -> Presentation {
        Presentation {
            generators: self.ngens(),
            relations: self.relation_matrix(),
        }
    }

    /// Reduces a coordinate vector into canonical range.
    pub fn reduce(&self, coords: &[BigInt]) -> Vec<BigInt> {
        coords
            .iter()
            .enumerate()
            .map(|(i, x)| {
                if i < self.rank {
                    x.clone()
                } else {
                    x.mod_floor(&self.factors[i - self.rank])
                }
            })
            .collect()
    }

    /// Whether a coordinate vector denotes the identity.
    pub fn is_zero_coords(&self, coords: &[BigInt]) -> bool {
        coords.iter().enumerate().all(|(i, x)| {
            if i < self.rank {
                x.is_zero()
            } else {
                x.is_multiple_of(&self.factors[i - self.rank])
            }
        })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            coords: vec![BigInt::zero(); self.ngens()],
        }
    }

    /// Canonical generator `i`.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut coords = vec![BigInt::zero(); self.ngens()];
        coords[i] = BigInt::one();
        GroupElement {
            group: self.clone(),
            coords: self.reduce(&coords),
        }
    }

    pub fn element(&self, coords: Vec<BigInt>) -> Result<GroupElement, AlgebraError> {
        if coords.len() != self.ngens() {
            return Err(AlgebraError::DimensionMismatch {
                context: "element coordinates",
                expected: self.ngens(),
                found: coords.len(),
            });
        }
        Ok(GroupElement {
            coords: self.reduce(&coords),
            group: self.clone(),
        })
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<GroupElement, AlgebraError> {
        self.element(coords.iter().map(|&x| BigInt::from(x)).collect())
    }
}

impl PartialOrd for FgAbGroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Rank first, then invariant factors lexicographically.
impl Ord for FgAbGroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

/// `0`, `Z^r`, and `Z/d` summands joined by ` + `.
impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.factors.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Z^generators` modulo the row span of `relations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: usize,
    relations: IntMatrix,
}

/// A canonical form together with the coordinate change that realizes it.
#[derive(Clone, Debug)]
pub struct CanonicalPresentation {
    pub group: FgAbGroup,
    /// Maps presentation coordinates to canonical coordinates (before reduction).
    pub to_canonical: IntMatrix,
    /// Column `i` is a presentation-coordinate lift of canonical generator `i`.
    pub from_canonical: IntMatrix,
}

impl Presentation {
    pub fn new(generators: usize, relations: IntMatrix) -> Result<Self, AlgebraError> {
        if relations.cols() != generators {
            return Err(AlgebraError::DimensionMismatch {
                context: "relation matrix width",
                expected: generators,
                found: relations.cols(),
            });
        }
        Ok(Presentation {
            generators,
            relations,
        })
    }

    pub fn free(generators: usize) -> Self {
        Presentation {
            generators,
            relations: IntMatrix::zeros(0, generators),
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn canonicalize(&self) -> FgAbGroup {
        self.canonicalize_with_coordinates().group
    }

    /// Canonical form plus the isomorphism to canonical coordinates.
    ///
    /// With `U R V = D`, the substitution `x' = V^T x` carries the row span of
    /// `R` onto that of `D`, so coordinate `k` of `x'` lives in `Z/d_k`.
    pub fn canonicalize_with_coordinates(&self) -> CanonicalPresentation {
        let s = snf(&self.relations);
        let diag = s.diagonal();
        let g = self.generators;
        let mut free = Vec::new();
        let mut torsion = Vec::new();
        let mut factors = Vec::new();
        for k in 0..g {
            let d = diag.get(k).cloned().unwrap_or_else(BigInt::zero);
            if d.is_zero() {
                free.push(k);
            } else if !d.is_one() {
                torsion.push(k);
                factors.push(d);
            }
        }
        let order: Vec<usize> = free.iter().chain(&torsion).copied().collect();
        let to_canonical = s.v.transpose().select_rows(&order);
        let from_canonical = s.v_inv.transpose().select_columns(&order);
        CanonicalPresentation {
            group: FgAbGroup {
                rank: free.len(),
                factors,
            },
            to_canonical,
            from_canonical,
        }
    }
}

/// Canonical form of `g + h`.
pub fn direct_sum(g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    direct_sum_all([g, h])
}

/// Canonical form of a finite direct sum.
pub fn direct_sum_all<'a, I: IntoIterator<Item = &'a FgAbGroup>>(groups: I) -> FgAbGroup {
    block_sum(groups).canonicalize()
}

/// Block presentation of a direct sum, generators concatenated in order.
pub fn block_sum<'a, I: IntoIterator<Item = &'a FgAbGroup>>(groups: I) -> Presentation {
    let groups: Vec<&FgAbGroup> = groups.into_iter().collect();
    let g: usize = groups.iter().map(|h| h.ngens()).sum();
    let mut rows = Vec::new();
    let mut offset = 0;
    for h in groups {
        for (k, d) in h.invariant_factors().iter().enumerate() {
            let mut row = vec![BigInt::zero(); g];
            row[offset + h.rank() + k] = d.clone();
            rows.push(row);
        }
        offset += h.ngens();
    }
    Presentation {
        generators: g,
        relations: IntMatrix::from_big_rows(g, rows).expect("rows have width g"),
    }
}

pub fn canonicalize(p: &Presentation) -> FgAbGroup {
    p.canonicalize()
}

/// `dim_Q (G (x) Q)`, i.e. the free rank.
pub fn tensor_q(g: &FgAbGroup) -> usize {
    g.rank()
}

pub fn is_isomorphic(g: &FgAbGroup, h: &FgAbGroup) -> bool {
    g == h
}

/// An element of a canonical group, torsion coordinates kept in `[0, d)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    group: FgAbGroup,
    coords: Vec<BigInt>,
}

impl GroupElement {
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement, AlgebraError> {
        self.same_group(other)?;
        let sum: Vec<BigInt> = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(GroupElement {
            coords: self.group.reduce(&sum),
            group: self.group.clone(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> GroupElement {
        let scaled: Vec<BigInt> = self.coords.iter().map(|a| a * k).collect();
        GroupElement {
            coords: self.group.reduce(&scaled),
            group: self.group.clone(),
        }
    }

    pub fn neg(&self) -> GroupElement {
        self.scale(&-BigInt::one())
    }

    /// Additive order; `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        let rank = self.group.rank();
        if self.coords[..rank].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut order = BigInt::one();
        for (x, d) in self.coords[rank..].iter().zip(self.group.invariant_factors()) {
            let o = d / x.gcd(d);
            order = order.lcm(&o);
        }
        Some(order)
    }

    pub fn is_torsion(&self) -> bool {
        self.order().is_some()
    }

    fn same_group(&self, other: &GroupElement) -> Result<(), AlgebraError> {
        if self.group != other.group {
            return Err(AlgebraError::GroupMismatch {
                left: self.group.to_string(),
                right: other.group.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({}) in {}", parts.join(", "), self.group)
    }
}
