//! Brute-force oracles shared by the integration and acceptance tests.
//!
//! Nothing here calls into the library's algebra beyond constructing
//! `FgAbGroup` values for comparison.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use ghg::fgab::{FgAbGroup, IntMatrix};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

pub type Profile = BTreeMap<u64, usize>;

/// Bareiss determinant.
pub fn det(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| m[(i, j)].clone()).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(i) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(i, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        sign
    } else {
        sign * &a[n - 1][n - 1]
    }
}

/// `Z/m_1 + ... + Z/m_k` with elements as coordinate vectors.
#[derive(Clone, Debug)]
pub struct Torus {
    pub moduli: Vec<u64>,
}

impl Torus {
    pub fn new(moduli: Vec<u64>) -> Self {
        Torus { moduli }
    }

    pub fn of(g: &FgAbGroup) -> Self {
        assert!(g.is_finite());
        Torus::new(g.invariant_factors().iter().map(|f| f.to_u64().unwrap()).collect())
    }

    pub fn size(&self) -> usize {
        self.moduli.iter().product::<u64>() as usize
    }

    pub fn element(&self, mut idx: usize) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|&m| {
                let c = (idx as u64) % m;
                idx /= m as usize;
                c
            })
            .collect()
    }

    pub fn index(&self, v: &[u64]) -> usize {
        v.iter()
            .zip(&self.moduli)
            .rev()
            .fold(0usize, |acc, (&c, &m)| acc * m as usize + (c % m) as usize)
    }

    pub fn add(&self, mut x: usize, mut y: usize) -> usize {
        let (mut out, mut place) = (0usize, 1usize);
        for &m in &self.moduli {
            let m = m as usize;
            out += ((x % m + y % m) % m) * place;
            place *= m;
            x /= m;
            y /= m;
        }
        out
    }

    pub fn order(&self, x: usize) -> u64 {
        let (mut y, mut k) = (x, 1);
        while y != 0 {
            y = self.add(y, x);
            k += 1;
        }
        k
    }

    /// Membership bitmap of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.size()];
        member[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.add(x, g);
                if !member[y] {
                    member[y] = true;
                    stack.push(y);
                }
            }
        }
        member
    }

    pub fn profile(&self, members: &[bool]) -> Profile {
        let mut p = Profile::new();
        for (x, &m) in members.iter().enumerate() {
            if m {
                *p.entry(self.order(x)).or_insert(0) += 1;
            }
        }
        p
    }

    pub fn full_profile(&self) -> Profile {
        self.profile(&vec![true; self.size()])
    }

    /// Number of cosets of each order in the quotient by `sub`.
    pub fn quotient_profile(&self, sub: &[bool]) -> Profile {
        let sub_size = sub.iter().filter(|&&b| b).count();
        let mut p = Profile::new();
        for x in 0..self.size() {
            let (mut y, mut k) = (x, 1);
            while !sub[y] {
                y = self.add(y, x);
                k += 1;
            }
            *p.entry(k).or_insert(0) += 1;
        }
        p.values_mut().for_each(|c| *c /= sub_size);
        p
    }
}

/// Order profile of `Z^g / <rows>` computed inside `(Z/d)^g`, where `d` is a
/// nonzero multiple of the quotient's exponent (for instance the determinant
/// of a nonsingular square block of relations).
pub fn presentation_profile(g: usize, rows: &[Vec<i64>], d: u64) -> Profile {
    let t = Torus::new(vec![d; g]);
    let gens: Vec<usize> = rows
        .iter()
        .map(|r| t.index(&r.iter().map(|&x| x.rem_euclid(d as i64) as u64).collect::<Vec<_>>()))
        .collect();
    let sub = t.closure(&gens);
    t.quotient_profile(&sub)
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every finite abelian group of the given order, as invariant factors.
pub fn groups_of_order(order: u64) -> Vec<FgAbGroup> {
    let mut acc: Vec<Vec<u64>> = vec![vec![]];
    for (p, e) in factorize(order) {
        let mut next = Vec::new();
        for factors in &acc {
            for part in partitions(e, e) {
                // largest invariant factor collects the largest part of each prime
                let len = factors.len().max(part.len());
                let mut merged = vec![1u64; len];
                for (i, f) in factors.iter().enumerate() {
                    merged[i] *= f;
                }
                for (i, &k) in part.iter().enumerate() {
                    merged[i] *= p.pow(k);
                }
                next.push(merged);
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|mut desc| {
            desc.reverse();
            FgAbGroup::from_u64(0, &desc).unwrap()
        })
        .collect()
}

/// Lookup from order profile to isomorphism type, for all orders up to `max`.
pub struct TypeTable {
    by_profile: HashMap<Vec<(u64, usize)>, FgAbGroup>,
}

impl TypeTable {
    pub fn new(max: u64) -> Self {
        let mut by_profile = HashMap::new();
        for n in 1..=max {
            for g in groups_of_order(n) {
                let key: Vec<_> = Torus::of(&g).full_profile().into_iter().collect();
                assert!(by_profile.insert(key, g).is_none(), "profiles determine the group");
            }
        }
        TypeTable { by_profile }
    }

    pub fn identify(&self, profile: &Profile) -> FgAbGroup {
        let key: Vec<_> = profile.iter().map(|(&k, &v)| (k, v)).collect();
        self.by_profile[&key].clone()
    }
}

/// `|ker|` and `|im|` of the map `Torus(dom) -> Torus(cod)` whose `j`-th
/// column is the image of generator `j`.
pub fn kernel_image_sizes(dom: &Torus, cod: &Torus, columns: &[Vec<u64>]) -> (usize, usize) {
    let mut kernel = 0;
    let mut image = vec![false; cod.size()];
    for x in 0..dom.size() {
        let coords = dom.element(x);
        let mut y = vec![0u64; cod.moduli.len()];
        for (c, col) in coords.iter().zip(columns) {
            for (i, v) in col.iter().enumerate() {
                y[i] = (y[i] + c * v) % cod.moduli[i];
            }
        }
        let idx = cod.index(&y);
        if idx == 0 {
            kernel += 1;
        }
        image[idx] = true;
    }
    (kernel, image.iter().filter(|&&b| b).count())
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Canonical display name of `Z/n` (with `Z/1` the trivial group).
pub fn cyclic_name(n: i64) -> String {
    if n == 1 {
        "0".to_string()
    } else {
        format!("Z/{n}")
    }
}
