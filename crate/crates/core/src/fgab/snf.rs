//! Smith normal form over the integers.
//!
//! Pivoting always picks the nonzero entry of smallest absolute value, ties
//! broken by the lowest `(row, col)`, so the transforms are reproducible.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `u * a * v == d` with `u`, `v` unimodular and `d` diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Inverse of `v`, maintained alongside it.
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `d[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

/// Computes the Smith normal form of `a`.
pub fn snf(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut v_inv = IntMatrix::identity(n);

    let mut ops = Ops {
        d: &mut d,
        u: &mut u,
        v: &mut v,
        v_inv: &mut v_inv,
    };

    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_in_block(ops.d, t) else {
            break;
        };
        ops.swap_rows(t, pi);
        ops.swap_cols(t, pj);

        loop {
            // Move the smallest entry of the pivot cross onto the diagonal.
            let (ci, cj) = smallest_in_cross(ops.d, t);
            ops.swap_rows(t, ci);
            ops.swap_cols(t, cj);

            let pivot = ops.d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if ops.d[(i, t)].is_zero() {
                    continue;
                }
                let q = &ops.d[(i, t)] / &pivot;
                ops.add_row(i, t, &-q);
                clean &= ops.d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if ops.d[(t, j)].is_zero() {
                    continue;
                }
                let q = &ops.d[(t, j)] / &pivot;
                ops.add_col(j, t, &-q);
                clean &= ops.d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // The pivot must divide everything left in the lower block.
            match first_non_multiple(ops.d, t, &pivot) {
                Some(i) => {
                    let one = BigInt::from(1);
                    ops.add_row(t, i, &one);
                }
                None => break,
            }
        }

        if ops.d[(t, t)].is_negative() {
            ops.negate_row(t);
        }
    }

    SmithForm { u, d, v, v_inv }
}

struct Ops<'a> {
    d: &'a mut IntMatrix,
    u: &'a mut IntMatrix,
    v: &'a mut IntMatrix,
    v_inv: &'a mut IntMatrix,
}

impl Ops<'_> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        self.d.add_row_multiple(dst, src, factor);
        self.u.add_row_multiple(dst, src, factor);
    }

    // col[dst] += f col[src] on the right is E = I + f e_src e_dst^T,
    // whose inverse subtracts f row[dst] from row[src].
    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt) {
        self.d.add_col_multiple(dst, src, factor);
        self.v.add_col_multiple(dst, src, factor);
        self.v_inv.add_row_multiple(src, dst, &-factor);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_row(i);
    }
}

fn smallest_in_block(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(d: &IntMatrix, t: usize) -> (usize, usize) {
    let mut cells: Vec<(usize, usize)> = (t..d.rows()).map(|i| (i, t)).collect();
    cells.extend((t + 1..d.cols()).map(|j| (t, j)));
    cells.sort_unstable();
    let mut best = (t, t);
    for (i, j) in cells {
        let x = &d[(i, j)];
        if x.is_zero() {
            continue;
        }
        let b = &d[best];
        if b.is_zero() || x.abs() < b.abs() {
            best = (i, j);
        }
    }
    best
}

fn first_non_multiple(d: &IntMatrix, t: usize, pivot: &BigInt) -> Option<usize> {
    (t + 1..d.rows()).find(|&i| (t + 1..d.cols()).any(|j| !(&d[(i, j)] % pivot).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check(a: &IntMatrix) -> SmithForm {
        let s = snf(a);
        assert_eq!(&(&s.u * a) * &s.v, s.d, "U A V != D for {a:?}");
        assert!(s.d.is_diagonal());
        assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(a.cols()));
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken: {diag:?}");
            }
        }
        assert!(diag.iter().all(|x| !x.is_negative()));
        s
    }

    #[test]
    fn coprime_diagonal_merges() {
        let s = check(&IntMatrix::diagonal(&[2, 3]));
        assert_eq!(s.d, IntMatrix::diagonal(&[1, 6]));
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
    }

    #[test]
    fn sign_is_normalized() {
        let s = check(&IntMatrix::diagonal(&[-5]));
        assert_eq!(s.d, IntMatrix::diagonal(&[5]));
        assert_eq!(s.u[(0, 0)], -BigInt::one());
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (2, 0)] {
            let s = check(&IntMatrix::zeros(r, c));
            assert_eq!(s.d.rows(), r);
            assert_eq!(s.d.cols(), c);
            assert_eq!(s.rank(), 0);
        }
    }

    #[test]
    fn rectangular_and_singular() {
        let a = IntMatrix::from_rows(3, &[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).unwrap();
        let s = check(&a);
        assert_eq!(s.diagonal(), vec![2.into(), 6.into(), 12.into()]);

        let b = IntMatrix::from_rows(2, &[[1, 2], [2, 4], [3, 6]]).unwrap();
        let s = check(&b);
        assert_eq!(s.diagonal(), vec![1.into(), 0.into()]);
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn large_entries_do_not_overflow() {
        let big = BigInt::from(i64::MAX);
        let a = IntMatrix::from_vec(
            2,
            2,
            vec![big.clone(), &big + 1, &big * &big, &big * &big + &big + 7],
        )
        .unwrap();
        check(&a);
    }
}
