//! The middle term of an exact fragment `A -> B -> X -> C -> D`.
//!
//! Exactness pins `X` down to an extension `0 -> coker(A -> B) -> X ->
//! ker(C -> D) -> 0`. When the extension is forced the group is returned;
//! otherwise every abelian group that fits is listed.
//!
//! Free summands of the quotient always split off, and the torsion question
//! decomposes over primes. For finite abelian `p`-groups, one of type `l` has
//! a subgroup of type `m` with quotient of type `n` exactly when the
//! Littlewood-Richardson coefficient `c^l_{m n}` is nonzero (Hall, Green,
//! Klein). A free part `Z^a` in the subgroup is handled by letting the
//! torsion of `X` map onto any `B <= Q_p` whose cokernel needs at most `a`
//! generators.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::fgab::{direct_sum, hom_decompose, AlgebraError, FgAbGroup, Homomorphism};

/// Default cap on the torsion order explored by the extension search.
pub const DEFAULT_TORSION_BOUND: u64 = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("extension search capacity exceeded: {0}")]
    Capacity(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extension {
    Resolved(FgAbGroup),
    /// Sorted by canonical form, at least two entries.
    Ambiguous(Vec<FgAbGroup>),
}

impl Extension {
    pub fn candidates(&self) -> &[FgAbGroup] {
        match self {
            Extension::Resolved(g) => std::slice::from_ref(g),
            Extension::Ambiguous(c) => c,
        }
    }

    pub fn resolved(&self) -> Option<&FgAbGroup> {
        match self {
            Extension::Resolved(g) => Some(g),
            Extension::Ambiguous(_) => None,
        }
    }
}

/// Outcome of solving for the middle group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceResult {
    /// Cokernel of the left map.
    pub sub: FgAbGroup,
    /// Kernel of the right map.
    pub quot: FgAbGroup,
    pub extension: Extension,
}

impl SequenceResult {
    pub fn is_resolved(&self) -> bool {
        self.resolved().is_some()
    }

    pub fn resolved(&self) -> Option<&FgAbGroup> {
        self.extension.resolved()
    }

    pub fn candidates(&self) -> &[FgAbGroup] {
        self.extension.candidates()
    }
}

pub fn middle_group(left: &Homomorphism, right: &Homomorphism) -> Result<SequenceResult, SequenceError> {
    middle_group_with_bound(left, right, DEFAULT_TORSION_BOUND)
}

pub fn middle_group_with_bound(
    left: &Homomorphism,
    right: &Homomorphism,
    torsion_bound: u64,
) -> Result<SequenceResult, SequenceError> {
    let sub = hom_decompose(left)?.cokernel;
    let quot = hom_decompose(right)?.kernel;
    let extension = resolve_extension(&sub, &quot, torsion_bound)?;
    Ok(SequenceResult { sub, quot, extension })
}

/// All `X` with a subgroup isomorphic to `sub` and quotient isomorphic to `quot`.
pub fn resolve_extension(sub: &FgAbGroup, quot: &FgAbGroup, torsion_bound: u64) -> Result<Extension, SequenceError> {
    if quot.is_free() {
        return Ok(Extension::Resolved(direct_sum(sub, quot)));
    }
    if sub.is_trivial() {
        return Ok(Extension::Resolved(quot.clone()));
    }
    if quot.is_trivial() {
        return Ok(Extension::Resolved(sub.clone()));
    }

    let sub_torsion = sub.torsion_order();
    let quot_torsion = quot.torsion_order();
    let total = &sub_torsion * &quot_torsion;
    let total = match total.to_u64() {
        Some(t) if t <= torsion_bound => t,
        _ => {
            return Err(SequenceError::Capacity(format!(
                "torsion order {total} of {sub} and {quot} exceeds bound {torsion_bound}"
            )))
        }
    };

    let free_rank = sub.rank();
    let mut per_prime: Vec<(u64, Vec<Vec<u32>>)> = Vec::new();
    for p in prime_factors(total) {
        let alpha = p_type(sub, p);
        let gamma = p_type(quot, p);
        let types = admissible_types(free_rank, &alpha, &gamma);
        debug_assert!(!types.is_empty(), "the split extension always qualifies");
        per_prime.push((p, types));
    }

    let mut candidates = Vec::new();
    let mut choice = vec![0usize; per_prime.len()];
    loop {
        let mut orders = Vec::new();
        for ((p, types), &k) in per_prime.iter().zip(&choice) {
            orders.extend(types[k].iter().map(|&e| BigInt::from(*p).pow(e)));
        }
        candidates.push(FgAbGroup::from_cyclic_orders(free_rank + quot.rank(), &orders));

        // Odometer over the per-prime choices.
        let mut i = 0;
        loop {
            if i == choice.len() {
                candidates.sort();
                candidates.dedup();
                return Ok(if candidates.len() == 1 {
                    Extension::Resolved(candidates.pop().expect("one candidate"))
                } else {
                    Extension::Ambiguous(candidates)
                });
            }
            choice[i] += 1;
            if choice[i] < per_prime[i].1.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            primes.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

/// Exponents of the `p`-primary cyclic summands, largest first.
fn p_type(g: &FgAbGroup, p: u64) -> Vec<u32> {
    let p = BigInt::from(p);
    let mut exps: Vec<u32> = g
        .invariant_factors()
        .iter()
        .filter_map(|d| {
            let mut d = d.clone();
            let mut e = 0;
            while (&d % &p) == BigInt::from(0) {
                d /= &p;
                e += 1;
            }
            (e > 0).then_some(e)
        })
        .collect();
    exps.sort_unstable_by(|a, b| b.cmp(a));
    exps
}

/// Partitions of `n` with parts in decreasing order.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `small_i <= big_i` for every part (missing parts count as zero).
fn fits_inside(small: &[u32], big: &[u32]) -> bool {
    small.len() <= big.len() && small.iter().zip(big).all(|(s, b)| s <= b)
}

/// Torsion types `T_p` for which `Z^a + T_p` has a subgroup `Z^a + A_p` with
/// quotient `C_p`, given as partitions `alpha` and `gamma`.
fn admissible_types(free_rank: usize, alpha: &[u32], gamma: &[u32]) -> Vec<Vec<u32>> {
    let c_size: u32 = gamma.iter().sum();
    // possible images of T_p in C_p
    let images: Vec<Vec<u32>> = if free_rank == 0 {
        vec![gamma.to_vec()]
    } else {
        (0..=c_size)
            .flat_map(partitions)
            .filter(|beta| {
                fits_inside(beta, gamma)
                    && partitions(c_size - beta.iter().sum::<u32>())
                        .iter()
                        .any(|delta| delta.len() <= free_rank && lr_nonzero(gamma, beta, delta))
            })
            .collect()
    };
    let mut out = BTreeSet::new();
    for beta in &images {
        let size = alpha.iter().sum::<u32>() + beta.iter().sum::<u32>();
        out.extend(partitions(size).into_iter().filter(|tau| lr_nonzero(tau, alpha, beta)));
    }
    out.into_iter().collect()
}

/// Whether the Littlewood-Richardson coefficient `c^lambda_{mu nu}` is
/// nonzero, by searching for one LR tableau of shape `lambda / mu` and
/// content `nu`.
fn lr_nonzero(lambda: &[u32], mu: &[u32], nu: &[u32]) -> bool {
    let total = |p: &[u32]| p.iter().sum::<u32>();
    if total(lambda) != total(mu) + total(nu) || !fits_inside(mu, lambda) || !fits_inside(nu, lambda) {
        return false;
    }
    let mu_at = |r: usize| mu.get(r).copied().unwrap_or(0) as usize;
    // skew cells in reading order: rows top to bottom, each right to left
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (mu_at(r)..len as usize).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = lambda.iter().map(|&len| vec![0; len as usize]).collect();
    let mut count = vec![0u32; nu.len() + 1];

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        count: &mut Vec<u32>,
        nu: &[u32],
        mu: &dyn Fn(usize) -> usize,
    ) -> bool {
        let Some(&(r, c)) = cells.get(k) else {
            return true;
        };
        // weakly increasing along rows, strictly down columns
        let max = grid[r].get(c + 1).copied().unwrap_or(nu.len() as u32);
        let min = if r > 0 && c >= mu(r - 1) { grid[r - 1][c] + 1 } else { 1 };
        for v in min..=max {
            let i = v as usize;
            if count[i] >= nu[i - 1] || (i > 1 && count[i] >= count[i - 1]) {
                continue;
            }
            count[i] += 1;
            grid[r][c] = v;
            if fill(k + 1, cells, grid, count, nu, mu) {
                return true;
            }
            count[i] -= 1;
        }
        grid[r][c] = 0;
        false
    }

    fill(0, &cells, &mut grid, &mut count, nu, &mu_at)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(rank: usize, f: &[u64]) -> FgAbGroup {
        FgAbGroup::from_u64(rank, f).unwrap()
    }

    fn resolve(sub: &FgAbGroup, quot: &FgAbGroup) -> Extension {
        resolve_extension(sub, quot, DEFAULT_TORSION_BOUND).unwrap()
    }

    #[test]
    fn free_quotient_splits() {
        assert_eq!(resolve(&grp(0, &[2]), &grp(1, &[])), Extension::Resolved(grp(1, &[2])));
    }

    #[test]
    fn coprime_orders_are_forced() {
        assert_eq!(resolve(&grp(0, &[3]), &grp(0, &[2])), Extension::Resolved(grp(0, &[6])));
    }

    #[test]
    fn two_by_two_is_ambiguous() {
        assert_eq!(
            resolve(&grp(0, &[2]), &grp(0, &[2])),
            Extension::Ambiguous(vec![grp(0, &[2, 2]), grp(0, &[4])])
        );
    }

    #[test]
    fn klein_by_two_excludes_cyclic_eight() {
        // Z/8 has a unique subgroup of each order, all cyclic
        let ext = resolve(&grp(0, &[2, 2]), &grp(0, &[2]));
        assert_eq!(ext, Extension::Ambiguous(vec![grp(0, &[2, 2, 2]), grp(0, &[2, 4])]));
    }

    #[test]
    fn free_sub_with_torsion_quotient() {
        // Z inside Z with index 2, or the split Z + Z/2
        let ext = resolve(&grp(1, &[]), &grp(0, &[2]));
        assert_eq!(ext, Extension::Ambiguous(vec![grp(1, &[]), grp(1, &[2])]));
    }

    #[test]
    fn trivial_ends() {
        assert_eq!(resolve(&FgAbGroup::trivial(), &grp(0, &[12])), Extension::Resolved(grp(0, &[12])));
        assert_eq!(resolve(&grp(2, &[6]), &FgAbGroup::trivial()), Extension::Resolved(grp(2, &[6])));
    }

    #[test]
    fn capacity_is_reported() {
        let err = resolve_extension(&grp(0, &[101]), &grp(0, &[101]), 10_000).unwrap_err();
        assert!(matches!(err, SequenceError::Capacity(_)));
    }

    #[test]
    fn middle_group_examples() {
        let z = FgAbGroup::free(1);
        let double = Homomorphism::from_rows(z.clone(), z.clone(), &[[2]]).unwrap();
        let id = Homomorphism::from_rows(z.clone(), z.clone(), &[[1]]).unwrap();
        let r = middle_group(&double, &id).unwrap();
        assert_eq!(r.resolved(), Some(&grp(0, &[2])));

        let t = FgAbGroup::trivial();
        let r = middle_group(
            &Homomorphism::zero(t.clone(), t.clone()),
            &Homomorphism::zero(grp(0, &[12]), t),
        )
        .unwrap();
        assert!(r.sub.is_trivial());
        assert_eq!(r.quot, grp(0, &[12]));
        assert_eq!(r.resolved(), Some(&grp(0, &[12])));

        // coker Z/2 on the left, ker Z/2 on the right
        let left = Homomorphism::from_rows(z.clone(), z.clone(), &[[2]]).unwrap();
        let right = Homomorphism::zero(grp(0, &[2]), grp(0, &[3]));
        let r = middle_group(&left, &right).unwrap();
        assert_eq!(r.candidates(), &[grp(0, &[2, 2]), grp(0, &[4])]);
    }

    #[test]
    fn littlewood_richardson_examples() {
        // s_1 * s_1 = s_2 + s_11
        assert!(lr_nonzero(&[2], &[1], &[1]));
        assert!(lr_nonzero(&[1, 1], &[1], &[1]));
        // s_21 * s_21 contains s_321 with coefficient 2 and not s_6
        assert!(lr_nonzero(&[3, 2, 1], &[2, 1], &[2, 1]));
        assert!(!lr_nonzero(&[6], &[2, 1], &[2, 1]));
        // s_2 * s_11 = s_31 + s_211
        assert!(!lr_nonzero(&[2, 2], &[2], &[1, 1]));
        assert!(!lr_nonzero(&[3], &[1, 1], &[1]));
        assert!(lr_nonzero(&[], &[], &[]));
    }

    #[test]
    fn large_two_groups_are_fast() {
        let start = std::time::Instant::now();
        let ext = resolve(&grp(0, &[2, 8]), &grp(0, &[8, 8]));
        assert_eq!(ext.candidates().len(), 9);
        let ext = resolve(&grp(0, &[4, 4]), &grp(0, &[8, 8]));
        assert_eq!(ext.candidates().len(), 6);
        assert!(start.elapsed().as_secs() < 2);
    }

    #[test]
    fn partitions_count() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }
}
