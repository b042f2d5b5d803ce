//! Seeded invariant suite behind `ghg verify`.
//!
//! Every check compares the library against something computed a different
//! way: brute-force enumeration, determinants, or closed formulas.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{samelson_apply, Catalog, GroupCatalogEntry};
use crate::exactseq::{middle_group, resolve_extension, DEFAULT_TORSION_BOUND};
use crate::fgab::{
    enumerate_elements, hom_decompose, snf, FgAbGroup, FiniteAbelian, GroupElement, Homomorphism, IntMatrix,
    Presentation,
};
use crate::gaugecalc::{
    gauge_homotopy, gauge_homotopy_rational, rational_dimension_via_sequence, su2_s4_pi2, Base, BundleSpec,
};

pub const DEFAULT_SEED: u64 = 0x6a61_7567_6531;

const KEPT_FAILURES: usize = 5;

/// Result of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failed: usize,
    /// The first few failure descriptions.
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome {
            name,
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.cases > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed()).count()
    }

    pub fn failed_count(&self) -> usize {
        self.checks.len() - self.passed_count()
    }

    pub fn all_passed(&self) -> bool {
        self.failed_count() == 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {:<22} {} cases, {} failed", c.name, c.cases, c.failed)?;
            for msg in &c.failures {
                writeln!(f, "     {msg}")?;
            }
        }
        write!(
            f,
            "{} passed, {} failed (seed {})",
            self.passed_count(),
            self.failed_count(),
            self.seed
        )
    }
}

/// Runs every check with its default case count.
pub fn run_suite(catalog: &Catalog, seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let checks = vec![
        check_snf(&mut rng, 1000),
        check_group_orders(&mut rng, 200),
        check_hom_decompose(&mut rng, 200),
        check_extensions(&mut rng, 100),
        check_sign_invariance(&mut rng, 100),
        check_gcd_table(catalog),
        check_rational(catalog),
        check_even_vanishing(catalog),
        check_catalog(catalog),
        check_integral_vs_rational(catalog),
    ];
    VerifyReport { seed, checks }
}

/// Random matrix with the given shape and entries in `-bound..=bound`.
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let entries = (0..rows * cols).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    IntMatrix::from_vec(rows, cols, entries).expect("shape matches")
}

/// Random canonical group with free rank at most `max_rank` and torsion
/// order at most `max_torsion`.
pub fn random_group<R: Rng>(rng: &mut R, max_rank: usize, max_torsion: u64) -> FgAbGroup {
    let rank = rng.gen_range(0..=max_rank);
    loop {
        let k = rng.gen_range(0..=3);
        let orders: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=16)).collect();
        if orders.iter().product::<u64>() <= max_torsion {
            let orders: Vec<BigInt> = orders.into_iter().map(BigInt::from).collect();
            return FgAbGroup::from_cyclic_orders(rank, &orders);
        }
    }
}

/// Random well-defined homomorphism between canonical groups.
pub fn random_hom<R: Rng>(rng: &mut R, domain: &FgAbGroup, codomain: &FgAbGroup) -> Homomorphism {
    let dom_orders = domain.generator_orders();
    let cod_orders = codomain.generator_orders();
    let mut matrix = IntMatrix::zeros(cod_orders.len(), dom_orders.len());
    for (j, o) in dom_orders.iter().enumerate() {
        for (i, c) in cod_orders.iter().enumerate() {
            matrix[(i, j)] = match (o.is_zero(), c.is_zero()) {
                (_, true) if !o.is_zero() => BigInt::zero(),
                (true, true) => BigInt::from(rng.gen_range(-4..=4)),
                (true, false) => BigInt::from(rng.gen_range(0..c.to_u64().unwrap_or(1))),
                (false, false) => {
                    let g = c.gcd(o);
                    let step = c / &g;
                    step * BigInt::from(rng.gen_range(0..g.to_u64().unwrap_or(1)))
                }
                _ => unreachable!(),
            };
        }
    }
    Homomorphism::new(domain.clone(), codomain.clone(), matrix).expect("constructed to be well defined")
}

/// Fraction-free Gaussian elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    assert_eq!(n, m.cols(), "determinant of a non-square matrix");
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn check_snf<R: Rng>(rng: &mut R, count: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("smith normal form");
    for _ in 0..count {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let a = random_matrix(rng, r, c, 9);
        let s = snf(&a);
        let diag = s.diagonal();
        let ok = &(&s.u * &a) * &s.v == s.d
            && s.d.is_diagonal()
            && determinant(&s.u).abs().is_one()
            && determinant(&s.v).abs().is_one()
            && &s.v * &s.v_inv == IntMatrix::identity(c)
            && diag.iter().all(|x| !x.is_negative())
            && diag.windows(2).all(|w| {
                if w[0].is_zero() {
                    w[1].is_zero()
                } else {
                    (&w[1] % &w[0]).is_zero()
                }
            });
        out.record(ok, || format!("{a:?}"));
    }
    out
}

/// Counts `Z^g / rows` by working in `(Z/d)^g`, `d` the determinant of the
/// leading square block. Returns the number of cosets of each order.
fn brute_force_quotient(g: usize, relations: &[Vec<i64>], d: u64) -> BTreeMap<u64, usize> {
    let size = (d as usize).pow(g as u32);
    let decode = |mut x: usize| -> Vec<u64> {
        (0..g)
            .map(|_| {
                let c = (x % d as usize) as u64;
                x /= d as usize;
                c
            })
            .collect()
    };
    let encode = |v: &[u64]| v.iter().rev().fold(0usize, |acc, &c| acc * d as usize + c as usize);
    let add = |x: usize, y: usize| {
        let (a, b) = (decode(x), decode(y));
        let s: Vec<u64> = a.iter().zip(&b).map(|(p, q)| (p + q) % d).collect();
        encode(&s)
    };
    let gens: Vec<usize> = relations
        .iter()
        .map(|r| {
            let v: Vec<u64> = r.iter().map(|&x| x.rem_euclid(d as i64) as u64).collect();
            encode(&v)
        })
        .collect();
    let mut member = vec![false; size];
    member[0] = true;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for &gen in &gens {
            let y = add(x, gen);
            if !member[y] {
                member[y] = true;
                stack.push(y);
            }
        }
    }
    let sub_size = member.iter().filter(|&&b| b).count();
    let mut profile = BTreeMap::new();
    for x in 0..size {
        let (mut y, mut k) = (x, 1u64);
        while !member[y] {
            y = add(y, x);
            k += 1;
        }
        *profile.entry(k).or_insert(0) += 1;
    }
    profile.values_mut().for_each(|c| *c /= sub_size);
    profile
}

pub fn check_group_orders<R: Rng>(rng: &mut R, count: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("group orders");
    while out.cases < count {
        let g = rng.gen_range(1..=3usize);
        let extra = rng.gen_range(0..=2usize);
        let rows: Vec<Vec<i64>> = (0..g + extra)
            .map(|_| (0..g).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        let square = IntMatrix::from_rows(g, &rows[..g]).expect("width g");
        let d = determinant(&square).abs().to_u64().unwrap_or(u64::MAX);
        let cap = [0, 200, 200, 34][g];
        if d == 0 || d > cap {
            continue;
        }
        let relations = IntMatrix::from_rows(g, &rows).expect("width g");
        let group = Presentation::new(g, relations.clone()).expect("width g").canonicalize();
        let expected = brute_force_quotient(g, &rows, d);
        let order: usize = expected.values().sum();
        let ok = group.is_finite()
            && group.order() == Some(BigInt::from(order))
            && order <= 200
            && FiniteAbelian::from_group(&group, 200).map(|f| f.full_profile()).ok() == Some(expected);
        out.record(ok, || format!("relations {relations:?} gave {group}"));
    }
    out
}

pub fn check_hom_decompose<R: Rng>(rng: &mut R, count: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("kernel and image");
    for _ in 0..count {
        let dom = random_group(rng, 0, 64);
        let cod = random_group(rng, 0, 64);
        let f = random_hom(rng, &dom, &cod);
        let dec = match hom_decompose(&f) {
            Ok(d) => d,
            Err(e) => {
                out.record(false, || format!("{dom} -> {cod}: {e}"));
                continue;
            }
        };
        let elements = enumerate_elements(&dom, 64).expect("small group");
        let mut kernel = 0usize;
        let mut image = HashSet::new();
        for x in &elements {
            let y = f.apply(x).expect("same group");
            if y.is_zero() {
                kernel += 1;
            }
            image.insert(y.coords().to_vec());
        }
        let big = |n: usize| Some(BigInt::from(n));
        let ok = kernel * image.len() == elements.len()
            && dec.kernel.order() == big(kernel)
            && dec.image.order() == big(image.len())
            && cod.order().zip(dec.cokernel.order()).is_some_and(|(c, k)| c == k * image.len());
        out.record(ok, || format!("{f:?}: ker {kernel}, im {}, got {dec:?}", image.len()));
    }
    out
}

pub fn check_extensions<R: Rng>(rng: &mut R, count: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("extensions");
    for _ in 0..count {
        let x = random_group(rng, 0, 64);
        let fin = FiniteAbelian::from_group(&x, 64).expect("small group");
        let k = rng.gen_range(1..=2);
        let picks: Vec<usize> = (0..k).map(|_| rng.gen_range(0..fin.size())).collect();
        let span_size = fin.span(&picks).iter().filter(|&&b| b).count();
        let mut matrix = IntMatrix::zeros(x.ngens(), k);
        for (j, &p) in picks.iter().enumerate() {
            for (i, c) in fin.decode(p).into_iter().enumerate() {
                matrix[(i, j)] = BigInt::from(c);
            }
        }
        let inclusion = Homomorphism::new(FgAbGroup::free(k), x.clone(), matrix).expect("free domain");
        let dec = hom_decompose(&inclusion).expect("valid map");
        let ok = dec.image.order() == Some(BigInt::from(span_size))
            && match resolve_extension(&dec.image, &dec.cokernel, DEFAULT_TORSION_BOUND) {
                Ok(ext) => ext.candidates().contains(&x) && ext.candidates().iter().all(|c| c.order() == x.order()),
                Err(_) => false,
            };
        out.record(ok, || format!("{x} with subgroup {} and quotient {}", dec.image, dec.cokernel));
    }
    out
}

pub fn check_sign_invariance<R: Rng>(rng: &mut R, count: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("sign invariance");
    for _ in 0..count {
        let groups: Vec<FgAbGroup> = (0..4).map(|_| random_group(rng, 1, 48)).collect();
        let left = random_hom(rng, &groups[0], &groups[1]);
        let right = random_hom(rng, &groups[2], &groups[3]);
        let base = middle_group(&left, &right);
        let ok = middle_group(&left.negated(), &right) == base && middle_group(&left, &right.negated()) == base;
        out.record(ok, || format!("{left:?} / {right:?}"));
    }
    out
}

pub fn check_gcd_table(catalog: &Catalog) -> CheckOutcome {
    let mut out = CheckOutcome::new("gcd table");
    for k in -24i64..=24 {
        let expected = FgAbGroup::cyclic(k.gcd(&12) as u64);
        let got = su2_s4_pi2(catalog, k);
        out.record(got.as_ref() == Ok(&expected), || format!("k = {k}: {got:?}"));
    }
    out
}

fn exponent_count(entry: &GroupCatalogEntry, k: u32) -> usize {
    entry.rational_exponents().iter().filter(|&&e| e == k).count()
}

fn closed_form(entry: &GroupCatalogEntry, base: Base, n: u32) -> usize {
    let q = |k| exponent_count(entry, k);
    match base {
        Base::Sphere(m) => q(n + m) + q(n),
        Base::Surface(g) => q(n + 2) + 2 * g as usize * q(n + 1) + q(n),
    }
}

fn rational_bases() -> impl Iterator<Item = Base> {
    (1..=6).map(Base::Sphere).chain((0..=3).map(Base::Surface))
}

pub fn check_rational(catalog: &Catalog) -> CheckOutcome {
    let mut out = CheckOutcome::new("rational dimensions");
    for name in ["SU2", "SU3", "U1"] {
        let Ok(entry) = catalog.entry(name) else {
            out.record(false, || format!("{name} missing from catalog"));
            continue;
        };
        for base in rational_bases() {
            let Ok(bundle) = BundleSpec::trivial(entry, base) else {
                out.record(false, || format!("{name} over {base}: no class group"));
                continue;
            };
            for n in 1..=10 {
                let expected = closed_form(entry, base, n);
                let direct = gauge_homotopy_rational(entry, &bundle, n);
                let sequence = rational_dimension_via_sequence(entry, base, n);
                out.record(direct == Ok(expected) && sequence == Ok(expected), || {
                    format!("{name} over {base}, n = {n}: expected {expected}, got {direct:?} and {sequence:?}")
                });
            }
        }
    }
    out
}

pub fn check_even_vanishing(catalog: &Catalog) -> CheckOutcome {
    let mut out = CheckOutcome::new("even vanishing");
    for name in ["SU2", "SU3"] {
        let Ok(entry) = catalog.entry(name) else {
            out.record(false, || format!("{name} missing from catalog"));
            continue;
        };
        for m in [2, 4, 6] {
            let bundle = BundleSpec::trivial(entry, Base::Sphere(m)).expect("sphere base");
            for n in [2, 4, 6, 8] {
                let got = gauge_homotopy_rational(entry, &bundle, n);
                out.record(got == Ok(0), || format!("{name} over S^{m}, n = {n}: {got:?}"));
            }
        }
    }
    out
}

/// Table ranks against exponents, and biadditivity of every stored pairing
/// over all small coordinate pairs.
pub fn check_catalog(catalog: &Catalog) -> CheckOutcome {
    let mut out = CheckOutcome::new("catalog consistency");
    for entry in catalog.entries() {
        for k in 0..=entry.depth() {
            let rank = entry.lookup_pi(k).map(|g| g.rank());
            out.record(rank == Ok(entry.rational_pi(k)), || {
                format!("{} pi_{k}: rank {rank:?} vs {} exponents", entry.name(), entry.rational_pi(k))
            });
        }
        for pairing in entry.stored_pairings() {
            let small = |g: &FgAbGroup| -> Vec<Vec<i64>> {
                let mut all = vec![vec![]];
                for _ in 0..g.ngens() {
                    all = all
                        .into_iter()
                        .flat_map(|p| {
                            (-2..=2).map(move |c| {
                                let mut q = p.clone();
                                q.push(c);
                                q
                            })
                        })
                        .collect();
                }
                all
            };
            let (left, right) = (pairing.left(), pairing.right());
            let lefts: Vec<_> = small(left).iter().map(|c| left.element_i64(c).expect("width")).collect();
            let rights: Vec<_> = small(right).iter().map(|c| right.element_i64(c).expect("width")).collect();
            let pair = |a: &GroupElement, b: &GroupElement| samelson_apply(pairing, a, b).ok();
            let plus = |x: Option<GroupElement>, y: Option<GroupElement>| x?.add(&y?).ok();
            let mut ok = true;
            for x in &lefts {
                for y in &lefts {
                    for b in &rights {
                        let sum = x.add(y).expect("same group");
                        ok &= pair(&sum, b).is_some() && pair(&sum, b) == plus(pair(x, b), pair(y, b));
                    }
                }
            }
            for a in &lefts {
                for x in &rights {
                    for y in &rights {
                        let sum = x.add(y).expect("same group");
                        ok &= pair(a, &sum).is_some() && pair(a, &sum) == plus(pair(a, x), pair(a, y));
                    }
                }
            }
            out.record(ok, || {
                let (n, m) = pairing.degrees();
                format!("{} pairing ({n}, {m}) is not biadditive", entry.name())
            });
        }
    }
    out
}

/// Every candidate for `pi_n(Gau P)` has the rank predicted rationally.
pub fn check_integral_vs_rational(catalog: &Catalog) -> CheckOutcome {
    let mut out = CheckOutcome::new("integral vs rational");
    let mut cases: Vec<(&str, Base, i64, u32)> = Vec::new();
    for k in -3..=3 {
        for n in 1..=2 {
            cases.push(("SU2", Base::Sphere(4), k, n));
        }
    }
    // larger genus exceeds the default torsion bound
    for g in 0..=2 {
        for k in -2..=2 {
            for n in 1..=if g < 2 { 3 } else { 2 } {
                cases.push(("TEST", Base::Surface(g), k, n));
            }
        }
    }
    for (name, base, k, n) in cases {
        let Ok(entry) = catalog.entry(name) else {
            continue;
        };
        let Ok(bundle) = BundleSpec::from_coords(entry, base, &[BigInt::from(k)]) else {
            out.record(false, || format!("{name} over {base}: bad class {k}"));
            continue;
        };
        let integral = gauge_homotopy(entry, &bundle, n);
        let rational = gauge_homotopy_rational(entry, &bundle, n);
        let ok = match (&integral, &rational) {
            (Ok(r), Ok(q)) => r.candidates().iter().all(|c| c.rank() == *q),
            _ => false,
        };
        out.record(ok, || format!("{name} over {base}, class {k}, n = {n}: {integral:?} vs {rational:?}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small_cases() {
        let m = IntMatrix::from_rows(3, &[[2, 0, 1], [1, 3, 2], [1, 1, 2]]).unwrap();
        assert_eq!(determinant(&m), BigInt::from(6));
        let m = IntMatrix::from_rows(2, &[[0, 1], [1, 0]]).unwrap();
        assert_eq!(determinant(&m), BigInt::from(-1));
        let m = IntMatrix::from_rows(2, &[[2, 4], [1, 2]]).unwrap();
        assert_eq!(determinant(&m), BigInt::from(0));
    }

    #[test]
    fn brute_force_quotient_of_diagonal() {
        let profile = brute_force_quotient(2, &[vec![2, 0], vec![0, 3]], 6);
        assert_eq!(profile, BTreeMap::from([(1, 1), (2, 1), (3, 2), (6, 2)]));
    }

    #[test]
    fn suite_passes_on_builtin_catalog() {
        let report = run_suite(&Catalog::builtin(), 7);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn random_homs_are_well_defined() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let a = random_group(&mut rng, 2, 64);
            let b = random_group(&mut rng, 2, 64);
            random_hom(&mut rng, &a, &b);
        }
    }
}
