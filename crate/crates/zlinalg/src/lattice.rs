//! Column echelon forms, kernels, integer solving and lattice coordinates.

use crate::int::{abs, div_round, is_negative, Int};
use crate::matrix::IntMatrix;

/// `a * transform = echelon`, with `transform` unimodular. The first `rank`
/// columns of `echelon` have strictly increasing pivot rows (positive pivots);
/// the remaining columns are zero.
#[derive(Clone, Debug)]
pub struct ColumnEchelon {
    pub echelon: IntMatrix,
    pub transform: IntMatrix,
    pub pivot_rows: Vec<usize>,
}

impl ColumnEchelon {
    pub fn new(a: &IntMatrix) -> Self {
        Self::build(a, true)
    }

    fn build(a: &IntMatrix, track: bool) -> Self {
        let (m, n) = (a.rows(), a.cols());
        let mut l = a.clone();
        let mut v = IntMatrix::identity(if track { n } else { 0 });
        let mut pivot_rows = Vec::new();
        let mut r = 0;
        for i in 0..m {
            if r == n {
                break;
            }
            loop {
                let mut best: Option<(Int, usize)> = None;
                for j in r..n {
                    let x = &l[(i, j)];
                    if !x.is_zero() {
                        let ax = abs(x);
                        if best.as_ref().map_or(true, |b| ax < b.0) {
                            best = Some((ax, j));
                        }
                    }
                }
                let Some((_, j)) = best else { break };
                l.swap_cols(r, j);
                if track {
                    v.swap_cols(r, j);
                }
                let mut done = true;
                for j in r + 1..n {
                    if l[(i, j)].is_zero() {
                        continue;
                    }
                    let q = div_round(&l[(i, j)], &l[(i, r)]);
                    let nq = -q;
                    l.add_col_multiple(j, r, &nq);
                    if track {
                        v.add_col_multiple(j, r, &nq);
                    }
                    if !l[(i, j)].is_zero() {
                        done = false;
                    }
                }
                if done {
                    if is_negative(&l[(i, r)]) {
                        l.negate_col(r);
                        if track {
                            v.negate_col(r);
                        }
                    }
                    pivot_rows.push(i);
                    r += 1;
                    break;
                }
            }
        }
        ColumnEchelon {
            echelon: l,
            transform: v,
            pivot_rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    /// Solves `echelon[:, ..rank] * y = b`; `None` if no integral solution.
    pub fn solve_echelon(&self, b: &[Int]) -> Option<Vec<Int>> {
        let l = &self.echelon;
        let r = self.rank();
        let mut y: Vec<Int> = Vec::with_capacity(r);
        for (k, &p) in self.pivot_rows.iter().enumerate() {
            let mut rhs = b[p].clone();
            for (j, yj) in y.iter().enumerate() {
                let c = &l[(p, j)];
                if !c.is_zero() && !yj.is_zero() {
                    rhs -= c * yj;
                }
            }
            let piv = &l[(p, k)];
            if !(&rhs % piv).is_zero() {
                return None;
            }
            y.push(rhs / piv);
        }
        // consistency on all rows
        for i in 0..l.rows() {
            let mut s = Int::ZERO;
            for (j, yj) in y.iter().enumerate() {
                let c = &l[(i, j)];
                if !c.is_zero() && !yj.is_zero() {
                    s += c * yj;
                }
            }
            if s != b[i] {
                return None;
            }
        }
        Some(y)
    }

    /// Solves `a x = b` over the integers.
    pub fn solve(&self, b: &[Int]) -> Option<Vec<Int>> {
        let y = self.solve_echelon(b)?;
        let n = self.transform.cols();
        let mut x = vec![Int::ZERO; n];
        for (k, yk) in y.iter().enumerate() {
            if yk.is_zero() {
                continue;
            }
            for (i, xi) in x.iter_mut().enumerate() {
                let t = &self.transform[(i, k)];
                if !t.is_zero() {
                    *xi += t * yk;
                }
            }
        }
        Some(x)
    }

    /// Basis (as columns) of the integer kernel of the original matrix.
    pub fn kernel(&self) -> IntMatrix {
        let n = self.transform.cols();
        self.transform.submatrix(0..n, self.rank()..n)
    }
}

/// Basis of the integer kernel `{x : a x = 0}` as columns.
pub fn kernel(a: &IntMatrix) -> IntMatrix {
    ColumnEchelon::new(a).kernel()
}

/// Some integral solution of `a x = b`, if one exists.
pub fn solve(a: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    ColumnEchelon::new(a).solve(b)
}

/// Basis (as columns) of the lattice spanned by the columns of `gens`.
pub fn lattice_basis(gens: &IntMatrix) -> IntMatrix {
    let e = ColumnEchelon::build(gens, false);
    let r = e.rank();
    e.echelon.submatrix(0..gens.rows(), 0..r)
}

/// Coordinates with respect to a lattice basis (linearly independent columns).
#[derive(Clone, Debug)]
pub struct LatticeCoords {
    basis: IntMatrix,
    ech: ColumnEchelon,
}

impl LatticeCoords {
    /// Panics if the columns are linearly dependent.
    pub fn new(basis: &IntMatrix) -> Self {
        let ech = ColumnEchelon::new(basis);
        assert_eq!(ech.rank(), basis.cols(), "lattice basis columns are dependent");
        LatticeCoords {
            basis: basis.clone(),
            ech,
        }
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    /// `c` with `basis * c = v`, or `None` if `v` is not in the lattice.
    pub fn coords(&self, v: &[Int]) -> Option<Vec<Int>> {
        self.ech.solve(v)
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        self.ech.solve_echelon(v).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int::int;

    #[test]
    fn solve_small() {
        let a = IntMatrix::from_i64_rows(&[&[1, 1], &[0, 2]]);
        assert_eq!(solve(&a, &[int(3), int(4)]), Some(vec![int(1), int(2)]));
        assert_eq!(solve(&a, &[int(3), int(3)]), None);
    }

    #[test]
    fn kernel_small() {
        let a = IntMatrix::from_i64_rows(&[&[2, 4, 6]]);
        let k = kernel(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).is_zero());
        // saturated: the kernel contains (2,-1,0) and (3,0,-1) integrally
        let c = LatticeCoords::new(&k);
        assert!(c.contains(&[int(2), int(-1), int(0)]));
        assert!(c.contains(&[int(3), int(0), int(-1)]));
    }

    #[test]
    fn basis_of_dependent_generators() {
        let g = IntMatrix::from_i64_rows(&[&[2, 4, 3], &[0, 0, 0]]);
        let b = lattice_basis(&g);
        assert_eq!(b.cols(), 1);
        assert_eq!(b[(0, 0)], int(1));
    }
}
