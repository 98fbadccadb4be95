//! Exact rational matrices: fraction-free (Bareiss) rank, determinants,
//! kernel vectors, and deterministic row selection for minor witnesses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

/// Pivot-row choice inside the fraction-free elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotRule {
    /// First row with a nonzero entry (cheapest).
    FirstNonzero,
    /// Largest |entry| in the working matrix, ties broken by lowest row index.
    MaxAbsThenLowest,
}

#[derive(Clone, Debug)]
pub struct Elimination {
    pub rank: usize,
    /// original indices of the rows used as pivots, in pivot order
    pub pivot_rows: Vec<usize>,
    pub pivot_cols: Vec<usize>,
}

impl QMatrix {
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigRational,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Clear denominators row by row to get an integer matrix with the same
    /// row space.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let lcm = self
                    .row(r)
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                self.row(r)
                    .iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect()
    }

    /// Rank and pivot bookkeeping by fraction-free elimination.
    pub fn eliminate(&self, rule: PivotRule) -> Elimination {
        let mut m = self.integer_rows();
        let rows = self.rows;
        let cols = self.cols;
        let mut row_of: Vec<usize> = (0..rows).collect();
        let mut prev = BigInt::one();
        let mut r = 0usize;
        let mut pivot_rows = Vec::new();
        let mut pivot_cols = Vec::new();
        for c in 0..cols {
            if r == rows {
                break;
            }
            let pick = match rule {
                PivotRule::FirstNonzero => (r..rows).find(|&i| !m[i][c].is_zero()),
                PivotRule::MaxAbsThenLowest => {
                    let mut best: Option<(usize, BigInt)> = None;
                    for i in r..rows {
                        if m[i][c].is_zero() {
                            continue;
                        }
                        let mag = m[i][c].abs();
                        let better = match &best {
                            None => true,
                            Some((bi, bmag)) => {
                                mag > *bmag || (mag == *bmag && row_of[i] < row_of[*bi])
                            }
                        };
                        if better {
                            best = Some((i, mag));
                        }
                    }
                    best.map(|(i, _)| i)
                }
            };
            let Some(p) = pick else { continue };
            m.swap(r, p);
            row_of.swap(r, p);
            for i in r + 1..rows {
                for j in c + 1..cols {
                    let num = &m[i][j] * &m[r][c] - &m[i][c] * &m[r][j];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "fraction-free division must be exact");
                    m[i][j] = q;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            pivot_rows.push(row_of[r]);
            pivot_cols.push(c);
            r += 1;
        }
        Elimination {
            rank: r,
            pivot_rows,
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.eliminate(PivotRule::FirstNonzero).rank
    }

    /// Exact determinant (rational Gauss with partial structure; None for
    /// non-square input).
    pub fn det(&self) -> Option<BigRational> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut m: Vec<Vec<BigRational>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut det = BigRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return Some(BigRational::zero());
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= &m[c][c];
            let inv = m[c][c].recip();
            for i in c + 1..n {
                if m[i][c].is_zero() {
                    continue;
                }
                let factor = &m[i][c] * &inv;
                for j in c..n {
                    let delta = &factor * &m[c][j];
                    m[i][j] -= delta;
                }
            }
        }
        Some(det)
    }

    /// A nonzero kernel vector when the kernel is nontrivial, via rational
    /// reduced row echelon form.
    pub fn kernel_vector(&self) -> Option<Vec<BigRational>> {
        let mut m: Vec<Vec<BigRational>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let cols = self.cols;
        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            for j in c..cols {
                m[r][j] = &m[r][j] * &inv;
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let factor = m[i][c].clone();
                    for j in c..cols {
                        let delta = &factor * &m[r][j];
                        m[i][j] -= delta;
                    }
                }
            }
            pivot_col_of_row.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        let pivot_cols: std::collections::HashSet<usize> =
            pivot_col_of_row.iter().copied().collect();
        let free = (0..cols).find(|c| !pivot_cols.contains(c))?;
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        Some(v)
    }

    /// Submatrix of the given original rows (all columns).
    pub fn select_rows(&self, rows: &[usize]) -> QMatrix {
        QMatrix::from_fn(rows.len(), self.cols, |r, c| self.at(rows[r], c).clone())
    }
}
