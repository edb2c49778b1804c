//! Modular linear systems and constrained homomorphism groups.

use crate::abgroup::{AbGroup, Presentation, PresentedAbGroup};
use crate::int::Int;
use crate::lattice::{kernel, lattice_basis, LatticeCoords};
use crate::matrix::IntMatrix;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomError {
    #[error("constraint {index} has shape {got:?}, expected {expected:?}")]
    Shape {
        index: usize,
        got: (usize, usize),
        expected: (usize, usize),
    },
}

/// One linear form `sum coef * x_var`, to be zero modulo `modulus`
/// (`modulus = 0` means exactly zero).
#[derive(Clone, Debug, Default)]
pub struct Congruence {
    pub terms: Vec<(usize, Int)>,
    pub modulus: Int,
}

/// The lattice of integer vectors satisfying a growing set of congruences.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    nvars: usize,
    basis: IntMatrix,
}

impl LinearSystem {
    pub fn new(nvars: usize) -> Self {
        LinearSystem {
            nvars,
            basis: IntMatrix::identity(nvars),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Columns form a basis of the current solution lattice.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Intersects the solution lattice with the given congruences.
    pub fn add(&mut self, eqs: &[Congruence]) {
        let d = self.dim();
        if d == 0 || eqs.is_empty() {
            return;
        }
        let mut rows: Vec<Vec<Int>> = Vec::new();
        let mut moduli: Vec<Int> = Vec::new();
        for eq in eqs {
            let mut row = vec![Int::ZERO; d];
            for (var, c) in &eq.terms {
                if c.is_zero() {
                    continue;
                }
                for (k, x) in self.basis.row(*var).iter().enumerate() {
                    if !x.is_zero() {
                        row[k] += c * x;
                    }
                }
            }
            let trivial = if eq.modulus.is_zero() {
                row.iter().all(|x| x.is_zero())
            } else {
                row.iter().all(|x| (x % &eq.modulus).is_zero())
            };
            if !trivial {
                rows.push(row);
                moduli.push(eq.modulus.clone());
            }
        }
        if rows.is_empty() {
            return;
        }
        let c = rows.len();
        let nz: Vec<usize> = (0..c).filter(|&i| !moduli[i].is_zero()).collect();
        let mut m = IntMatrix::zeros(c, d + nz.len());
        for (i, row) in rows.iter().enumerate() {
            for (k, x) in row.iter().enumerate() {
                m[(i, k)] = x.clone();
            }
        }
        for (a, &i) in nz.iter().enumerate() {
            m[(i, d + a)] = moduli[i].clone();
        }
        let k = kernel(&m);
        let t = lattice_basis(&k.submatrix(0..d, 0..k.cols()));
        self.basis = self.basis.mul(&t);
    }

    /// Solution lattice modulo the lattice spanned by `zero` (columns, which
    /// must lie in the solution lattice).
    pub fn quotient(&self, zero: &IntMatrix) -> SolutionGroup {
        SolutionGroup::new(&self.basis, zero)
    }
}

/// `L / Z` for lattices `Z <= L`, with explicit generators.
#[derive(Clone, Debug)]
pub struct SolutionGroup {
    pub group: AbGroup,
    /// Generators of `group` as vectors of the ambient lattice (columns).
    pub gens: IntMatrix,
    lattice: LatticeCoords,
    normal: Presentation,
}

impl SolutionGroup {
    pub fn new(basis: &IntMatrix, zero: &IntMatrix) -> Self {
        let lattice = LatticeCoords::new(basis);
        let mut rel = IntMatrix::zeros(basis.cols(), zero.cols());
        for j in 0..zero.cols() {
            let c = lattice.coords(&zero.col(j)).expect("zero lattice not inside solution lattice");
            rel.set_col(j, &c);
        }
        let normal = AbGroup::from_presentation(basis.cols(), &rel);
        let gens = basis.mul(&normal.section);
        SolutionGroup {
            group: normal.group.clone(),
            gens,
            lattice,
            normal,
        }
    }

    /// Coordinates of a solution vector, `None` if it is not a solution.
    pub fn coords(&self, v: &[Int]) -> Option<Vec<Int>> {
        let c = self.lattice.coords(v)?;
        Some(self.normal.project(&c))
    }
}

/// Homomorphisms between diagonal groups satisfying commutation constraints.
#[derive(Clone, Debug)]
pub struct HomGroup {
    pub source: AbGroup,
    pub target: AbGroup,
    pub group: AbGroup,
    sol: SolutionGroup,
}

impl HomGroup {
    /// Matrix (`target.ngens x source.ngens`) of the `k`-th generator.
    pub fn generator(&self, k: usize) -> IntMatrix {
        let (m, n) = (self.target.ngens(), self.source.ngens());
        let mut phi = IntMatrix::zeros(m, n);
        for i in 0..m {
            for j in 0..n {
                phi[(i, j)] = self.sol.gens[(i * n + j, k)].clone();
            }
        }
        self.target.reduced_map(&phi)
    }

    pub fn generators(&self) -> Vec<IntMatrix> {
        (0..self.group.ngens()).map(|k| self.generator(k)).collect()
    }

    /// Coordinates of a homomorphism; `None` if it violates the constraints.
    pub fn coords(&self, phi: &IntMatrix) -> Option<Vec<Int>> {
        let v: Vec<Int> = phi.entries().to_vec();
        self.sol.coords(&v)
    }

    /// `sum c_k * generator_k`, reduced.
    pub fn element(&self, c: &[Int]) -> IntMatrix {
        let v = self.sol.gens.mul_vec(c);
        let n = self.source.ngens();
        let mut phi = IntMatrix::zeros(self.target.ngens(), n);
        for i in 0..self.target.ngens() {
            for j in 0..n {
                phi[(i, j)] = v[i * n + j].clone();
            }
        }
        self.target.reduced_map(&phi)
    }
}

/// Homomorphisms `phi: a -> b` with `phi * s_a = s_b * phi` for every
/// constraint pair `(s_a, s_b)`, where `s_a` is an endomorphism of `a` and
/// `s_b` one of `b`.
pub fn hom_diagonal(a: &AbGroup, b: &AbGroup, constraints: &[(IntMatrix, IntMatrix)]) -> Result<HomGroup, HomError> {
    let (m, n) = (b.ngens(), a.ngens());
    for (idx, (sa, sb)) in constraints.iter().enumerate() {
        if (sa.rows(), sa.cols()) != (n, n) {
            return Err(HomError::Shape {
                index: idx,
                got: (sa.rows(), sa.cols()),
                expected: (n, n),
            });
        }
        if (sb.rows(), sb.cols()) != (m, m) {
            return Err(HomError::Shape {
                index: idx,
                got: (sb.rows(), sb.cols()),
                expected: (m, m),
            });
        }
    }
    let var = |i: usize, j: usize| i * n + j;
    let mut sys = LinearSystem::new(m * n);
    let mut eqs = Vec::new();
    for j in 0..n {
        let d = a.modulus(j);
        if d.is_zero() {
            continue;
        }
        for i in 0..m {
            eqs.push(Congruence {
                terms: vec![(var(i, j), d.clone())],
                modulus: b.modulus(i).clone(),
            });
        }
    }
    sys.add(&eqs);
    for (sa, sb) in constraints {
        let mut eqs = Vec::new();
        for i in 0..m {
            for j in 0..n {
                let mut terms = Vec::new();
                for k in 0..n {
                    if !sa[(k, j)].is_zero() {
                        terms.push((var(i, k), sa[(k, j)].clone()));
                    }
                }
                for k in 0..m {
                    if !sb[(i, k)].is_zero() {
                        terms.push((var(k, j), -&sb[(i, k)]));
                    }
                }
                eqs.push(Congruence {
                    terms,
                    modulus: b.modulus(i).clone(),
                });
            }
        }
        sys.add(&eqs);
    }
    let mut zero_cols = Vec::new();
    for i in 0..m {
        if b.modulus(i).is_zero() {
            continue;
        }
        for j in 0..n {
            let mut v = vec![Int::ZERO; m * n];
            v[var(i, j)] = b.modulus(i).clone();
            zero_cols.push(v);
        }
    }
    let zero = IntMatrix::from_cols(&zero_cols, m * n);
    let sol = sys.quotient(&zero);
    Ok(HomGroup {
        source: a.clone(),
        target: b.clone(),
        group: sol.group.clone(),
        sol,
    })
}

/// Constrained homomorphism group between presented groups. The returned
/// generators are matrices on the presentation generators
/// (`b.ngens x a.ngens`).
pub fn hom_group(
    a: &PresentedAbGroup,
    b: &PresentedAbGroup,
    constraints: &[(IntMatrix, IntMatrix)],
) -> Result<(AbGroup, Vec<IntMatrix>), HomError> {
    let (na, nb) = (a.normal_form(), b.normal_form());
    let mut diag_constraints = Vec::with_capacity(constraints.len());
    for (idx, (sa, sb)) in constraints.iter().enumerate() {
        if (sa.rows(), sa.cols()) != (a.ngens, a.ngens) {
            return Err(HomError::Shape {
                index: idx,
                got: (sa.rows(), sa.cols()),
                expected: (a.ngens, a.ngens),
            });
        }
        if (sb.rows(), sb.cols()) != (b.ngens, b.ngens) {
            return Err(HomError::Shape {
                index: idx,
                got: (sb.rows(), sb.cols()),
                expected: (b.ngens, b.ngens),
            });
        }
        diag_constraints.push((na.proj.mul(sa).mul(&na.section), nb.proj.mul(sb).mul(&nb.section)));
    }
    let h = hom_diagonal(&na.group, &nb.group, &diag_constraints)?;
    let gens = h.generators().iter().map(|phi| nb.section.mul(phi).mul(&na.proj)).collect();
    Ok((h.group, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int::int;

    #[test]
    fn unconstrained() {
        let z = AbGroup::free(1);
        let z2 = AbGroup::cyclic(2);
        assert_eq!(hom_diagonal(&z, &z2, &[]).unwrap().group.invariants().to_string(), "Z/2");
        assert!(hom_diagonal(&z2, &z, &[]).unwrap().group.is_trivial());
        let z4 = AbGroup::cyclic(4);
        let z6 = AbGroup::cyclic(6);
        assert_eq!(hom_diagonal(&z4, &z6, &[]).unwrap().group.invariants().to_string(), "Z/2");
    }

    #[test]
    fn commuting_with_swap() {
        let z2 = PresentedAbGroup::new(2, IntMatrix::zeros(2, 0));
        let swap = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let (g, gens) = hom_group(&z2, &z2, &[(swap.clone(), swap.clone())]).unwrap();
        assert_eq!(g.invariants().to_string(), "Z^2");
        for phi in &gens {
            assert_eq!(phi.mul(&swap), swap.mul(phi));
        }
        // identity and swap lie in the span and generate it
        let span = IntMatrix::from_cols(&gens.iter().map(|p| p.entries().to_vec()).collect::<Vec<_>>(), 4);
        let lc = LatticeCoords::new(&span);
        assert!(lc.contains(IntMatrix::identity(2).entries()));
        assert!(lc.contains(swap.entries()));
        let both = IntMatrix::from_cols(&[IntMatrix::identity(2).entries().to_vec(), swap.entries().to_vec()], 4);
        let lc2 = LatticeCoords::new(&both);
        for phi in &gens {
            assert!(lc2.contains(phi.entries()));
        }
    }

    #[test]
    fn shape_errors() {
        let z = AbGroup::free(1);
        let bad = IntMatrix::zeros(2, 2);
        assert!(hom_diagonal(&z, &z, &[(bad, IntMatrix::identity(1))]).is_err());
    }

    #[test]
    fn coordinates_roundtrip() {
        let a = AbGroup::from_moduli(vec![int(2), int(0)]);
        let b = AbGroup::from_moduli(vec![int(4), int(0)]);
        let h = hom_diagonal(&a, &b, &[]).unwrap();
        assert_eq!(h.group.invariants().to_string(), "Z + Z/2 + Z/4");
        for k in 0..h.group.ngens() {
            let c = h.coords(&h.generator(k)).unwrap();
            assert_eq!(c, h.group.generator(k));
        }
    }
}
