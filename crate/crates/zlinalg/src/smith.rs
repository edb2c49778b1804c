//! Smith normal form with unimodular transforms.

use crate::int::{abs, div_floor, Int};
use crate::matrix::IntMatrix;

/// `left * a * right = diag`, with `left`, `right` unimodular and the nonzero
/// diagonal entries positive and forming a divisibility chain.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Diagonal entries `d_1 | d_2 | ...`, length `min(rows, cols)`; zeros trail.
    pub diag: Vec<Int>,
    pub rank: usize,
    pub left: IntMatrix,
    pub left_inv: IntMatrix,
    pub right: IntMatrix,
    pub right_inv: IntMatrix,
}

impl SmithForm {
    /// Nonzero invariant factors, including units.
    pub fn invariant_factors(&self) -> &[Int] {
        &self.diag[..self.rank]
    }

    pub fn diag_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut d = IntMatrix::zeros(rows, cols);
        for (i, x) in self.diag.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }
}

struct Work {
    a: IntMatrix,
    track: bool,
    u: IntMatrix,
    ui: IntMatrix,
    v: IntMatrix,
    vi: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap_rows(i, j);
        if self.track {
            self.u.swap_rows(i, j);
            self.ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap_cols(i, j);
        if self.track {
            self.v.swap_cols(i, j);
            self.vi.swap_rows(i, j);
        }
    }

    /// row[dst] += c row[src]
    fn row_op(&mut self, dst: usize, src: usize, c: &Int) {
        self.a.add_row_multiple(dst, src, c);
        if self.track {
            self.u.add_row_multiple(dst, src, c);
            self.ui.add_col_multiple(src, dst, &-c);
        }
    }

    /// col[dst] += c col[src]
    fn col_op(&mut self, dst: usize, src: usize, c: &Int) {
        self.a.add_col_multiple(dst, src, c);
        if self.track {
            self.v.add_col_multiple(dst, src, c);
            self.vi.add_row_multiple(src, dst, &-c);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if self.track {
            self.u.negate_row(i);
            self.ui.negate_col(i);
        }
    }
}

/// Smith normal form with transforms.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    run(a, true)
}

/// Diagonal only; cheaper.
pub fn smith_diagonal(a: &IntMatrix) -> Vec<Int> {
    run(a, false).diag
}

fn run(a: &IntMatrix, track: bool) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let (tm, tn) = if track { (m, n) } else { (0, 0) };
    let mut w = Work {
        a: a.clone(),
        track,
        u: IntMatrix::identity(tm),
        ui: IntMatrix::identity(tm),
        v: IntMatrix::identity(tn),
        vi: IntMatrix::identity(tn),
    };
    let k = m.min(n);
    let mut rank = 0;
    for t in 0..k {
        // pivot: minimal absolute value, ties broken by (row, col)
        let Some((pi, pj)) = min_entry(&w.a, t, t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if !w.a[(i, t)].is_zero() {
                    let q = div_floor(&w.a[(i, t)], &w.a[(t, t)]);
                    w.row_op(i, t, &-q);
                    if !w.a[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if !w.a[(t, j)].is_zero() {
                    let q = div_floor(&w.a[(t, j)], &w.a[(t, t)]);
                    w.col_op(j, t, &-q);
                    if !w.a[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // move the smallest remaining entry of row/column t to the pivot
                let mut best = (abs(&w.a[(t, t)]), t, t);
                for i in t + 1..m {
                    let x = abs(&w.a[(i, t)]);
                    if !x.is_zero() && x < best.0 {
                        best = (x, i, t);
                    }
                }
                for j in t + 1..n {
                    let x = abs(&w.a[(t, j)]);
                    if !x.is_zero() && x < best.0 {
                        best = (x, t, j);
                    }
                }
                w.swap_rows(t, best.1);
                w.swap_cols(t, best.2);
                continue;
            }
            // divisibility of the remaining block by the pivot
            let p = w.a[(t, t)].clone();
            let mut bad = None;
            'outer: for i in t + 1..m {
                for j in t + 1..n {
                    let x = &w.a[(i, j)];
                    if !x.is_zero() && !(x % &p).is_zero() {
                        bad = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad {
                Some(i) => w.row_op(t, i, &Int::ONE),
                None => break,
            }
        }
        if crate::int::is_negative(&w.a[(t, t)]) {
            w.negate_row(t);
        }
        rank = t + 1;
    }
    let diag = (0..k).map(|i| w.a[(i, i)].clone()).collect();
    SmithForm {
        diag,
        rank,
        left: w.u,
        left_inv: w.ui,
        right: w.v,
        right_inv: w.vi,
    }
}

fn min_entry(a: &IntMatrix, r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(Int, usize, usize)> = None;
    for i in r0..a.rows() {
        for j in c0..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = abs(x);
            if best.as_ref().map_or(true, |b| ax < b.0) {
                best = Some((ax, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}
