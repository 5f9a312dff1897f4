//! Dense integer matrices and Smith normal form.
//!
//! Boundary matrices of link chain complexes are small but their Smith
//! normal forms must be exact: torsion shows up as nontrivial divisors and
//! a single overflow would corrupt a stratum membership decision. Entries
//! are arbitrary-precision integers throughout.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    /// Builds from machine-integer rows; all rows must share one length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: impl Into<BigInt>) {
        self.data[i * self.cols + j] = value.into();
    }

    pub fn add_to(&mut self, i: usize, j: usize, delta: i32) {
        self.data[i * self.cols + j] += delta;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

/// Smith normal form summary: the diagonal divisors `d_1 | d_2 | ... | d_r`
/// (units included, all positive) and the rank `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub rank: usize,
    pub divisors: Vec<BigInt>,
}

impl SnfResult {
    /// Divisors strictly greater than one, i.e. the torsion coefficients
    /// contributed by this boundary map.
    pub fn nontrivial_divisors(&self) -> Vec<BigInt> {
        self.divisors.iter().filter(|d| **d > BigInt::from(1)).cloned().collect()
    }
}

/// Computes the Smith normal form of `m` by Euclidean row and column
/// reduction with a minimal-magnitude pivot, then repairs the divisor
/// chain so each diagonal entry divides the next.
#[allow(clippy::needless_range_loop)] // elimination reads and writes two slots of `a` at once
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (r, c) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigInt>> =
        (0..r).map(|i| (0..c).map(|j| m.get(i, j).clone()).collect()).collect();

    let mut t = 0;
    while t < r.min(c) {
        // Smallest-magnitude nonzero entry of the trailing submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                if !a[i][j].is_zero()
                    && pivot.is_none_or(|(pi, pj)| {
                        a[i][j].magnitude() < a[pi][pj].magnitude()
                    })
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        if pj != t {
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
        }

        // Clear column t below the pivot and row t right of it. A nonzero
        // Euclidean remainder is strictly smaller than the pivot, so
        // swapping it into the pivot slot makes progress and the loop
        // terminates.
        loop {
            let mut again = false;
            for i in t + 1..r {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                if !q.is_zero() {
                    for j in t..c {
                        let sub = &q * &a[t][j];
                        a[i][j] -= sub;
                    }
                }
                if !a[i][t].is_zero() {
                    a.swap(i, t);
                    again = true;
                }
            }
            if again {
                continue;
            }
            for j in t + 1..c {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                if !q.is_zero() {
                    for i in t..r {
                        let sub = &q * &a[i][t];
                        a[i][j] -= sub;
                    }
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    again = true;
                }
            }
            if !again {
                break;
            }
        }

        // Divisor chain: fold in a row holding a non-multiple and redo
        // this diagonal slot. Each redo strictly shrinks the pivot.
        let mut advanced = true;
        'div: for i in t + 1..r {
            for j in t + 1..c {
                if !(&a[i][j] % &a[t][t]).is_zero() {
                    for jj in t..c {
                        let add = a[i][jj].clone();
                        a[t][jj] += add;
                    }
                    advanced = false;
                    break 'div;
                }
            }
        }
        if advanced {
            t += 1;
        }
    }

    let divisors: Vec<BigInt> = (0..t).map(|k| a[k][k].abs()).collect();
    SnfResult { rank: t, divisors }
}
