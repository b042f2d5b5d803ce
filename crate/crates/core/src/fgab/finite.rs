//! Element-level arithmetic on small finite abelian groups.
//!
//! Elements are packed into a mixed-radix index so that subgroups can be held
//! as bitmaps. This is the brute-force layer behind the enumeration oracle and
//! the extension search.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{AlgebraError, FgAbGroup, GroupElement};

/// `Z/m_1 + ... + Z/m_k` with explicit element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelian {
    moduli: Vec<u64>,
    strides: Vec<usize>,
    size: usize,
}

impl FiniteAbelian {
    /// Moduli of 1 are allowed and contribute nothing.
    pub fn new(moduli: Vec<u64>) -> Self {
        assert!(moduli.iter().all(|&m| m >= 1), "moduli must be positive");
        let mut strides = Vec::with_capacity(moduli.len());
        let mut size = 1usize;
        for &m in &moduli {
            strides.push(size);
            size = size
                .checked_mul(m as usize)
                .expect("finite group size fits in usize");
        }
        FiniteAbelian {
            moduli,
            strides,
            size,
        }
    }

    /// The torsion-free-less group `g`, provided its order is at most `bound`.
    pub fn from_group(g: &FgAbGroup, bound: u64) -> Result<Self, AlgebraError> {
        let capacity = |order: Option<BigInt>| AlgebraError::Capacity {
            what: format!("element enumeration of {g}"),
            order: order.map(|o| o.to_string()),
            bound,
        };
        if !g.is_finite() {
            return Err(capacity(None));
        }
        let order = g.torsion_order();
        if order > BigInt::from(bound) {
            return Err(capacity(Some(order)));
        }
        let moduli = g
            .invariant_factors()
            .iter()
            .map(|d| d.to_u64().expect("factor below bound"))
            .collect();
        Ok(Self::new(moduli))
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn decode(&self, mut idx: usize) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|&m| {
                let c = idx % m as usize;
                idx /= m as usize;
                c as u64
            })
            .collect()
    }

    /// Packs coordinates, reducing each modulo its modulus.
    pub fn encode(&self, coords: &[u64]) -> usize {
        coords
            .iter()
            .zip(&self.moduli)
            .zip(&self.strides)
            .map(|((&c, &m), &s)| (c % m) as usize * s)
            .sum()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let mut out = 0;
        let (mut a, mut b) = (a, b);
        for (&m, &s) in self.moduli.iter().zip(&self.strides) {
            let m = m as usize;
            out += ((a % m + b % m) % m) * s;
            a /= m;
            b /= m;
        }
        out
    }

    pub fn scale(&self, a: usize, k: u64) -> usize {
        let mut out = 0;
        let mut a = a;
        for (&m, &s) in self.moduli.iter().zip(&self.strides) {
            let c = (a % m as usize) as u64;
            out += ((c as u128 * k as u128) % m as u128) as usize * s;
            a /= m as usize;
        }
        out
    }

    pub fn order(&self, a: usize) -> u64 {
        self.decode(a)
            .iter()
            .zip(&self.moduli)
            .fold(1u64, |acc, (&c, &m)| acc.lcm(&(m / c.gcd(&m))))
    }

    /// Membership bitmap of the subgroup generated by `gens`.
    pub fn span(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.size];
        member[0] = true;
        let mut elements = vec![0usize];
        for &g in gens {
            if member[g] {
                continue;
            }
            // Adjoin g: every coset x + k g of the current subgroup.
            let base = elements.clone();
            let mut step = g;
            while !member[step] {
                for &x in &base {
                    let y = self.add(x, step);
                    if !member[y] {
                        member[y] = true;
                        elements.push(y);
                    }
                }
                step = self.add(step, g);
            }
        }
        member
    }

    /// Count of elements of each order among `members`.
    pub fn order_profile<I: IntoIterator<Item = usize>>(&self, members: I) -> BTreeMap<u64, usize> {
        let mut profile = BTreeMap::new();
        for x in members {
            *profile.entry(self.order(x)).or_insert(0) += 1;
        }
        profile
    }

    /// Order profile of the whole group.
    pub fn full_profile(&self) -> BTreeMap<u64, usize> {
        self.order_profile(0..self.size)
    }

    /// Order profile of the quotient by the subgroup `sub` (a membership bitmap).
    ///
    /// Each coset is counted once.
    pub fn quotient_profile(&self, sub: &[bool]) -> BTreeMap<u64, usize> {
        let sub_size = sub.iter().filter(|&&b| b).count();
        let mut profile = BTreeMap::new();
        for x in 0..self.size {
            let mut k = 1u64;
            let mut y = x;
            while !sub[y] {
                y = self.add(y, x);
                k += 1;
            }
            *profile.entry(k).or_insert(0) += 1;
        }
        for count in profile.values_mut() {
            *count /= sub_size;
        }
        profile
    }
}

/// Lists every element of a finite group of order at most `bound`.
pub fn enumerate_elements(g: &FgAbGroup, bound: u64) -> Result<Vec<GroupElement>, AlgebraError> {
    let fin = FiniteAbelian::from_group(g, bound)?;
    (0..fin.size())
        .map(|i| {
            let coords = fin.decode(i).into_iter().map(BigInt::from).collect();
            g.element(coords)
        })
        .collect()
}
