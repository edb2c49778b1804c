//! Finitely generated abelian groups.
//!
//! [`AbGroup`] is a group in diagonal form `Z/m_1 + ... + Z/m_k` with every
//! `m_i` either 0 (a free summand) or at least 2. Direct sums are
//! concatenations, so the moduli need not form a divisibility chain;
//! [`AbGroup::invariants`] gives the canonical isomorphism type.
//! [`PresentedAbGroup`] is a general presentation `Z^n / (relation columns)`.

use crate::int::{int, modulo, Int};
use crate::lattice::{kernel as int_kernel, lattice_basis, LatticeCoords};
use crate::matrix::IntMatrix;
use crate::smith::{smith_diagonal, smith_normal_form};
use std::fmt;

/// Canonical isomorphism invariants: free rank plus torsion coefficients
/// `t_1 | t_2 | ...`, each at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Invariants {
    pub rank: usize,
    pub torsion: Vec<Int>,
}

impl Invariants {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn free(rank: usize) -> Self {
        Invariants {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn torsion_i64(&self) -> Vec<i64> {
        self.torsion.iter().map(|t| crate::int::to_i64(t).expect("torsion coefficient overflows i64")).collect()
    }

    /// Invariants of a direct sum.
    pub fn sum(&self, other: &Invariants) -> Invariants {
        let mut moduli = self.torsion.clone();
        moduli.extend(other.torsion.iter().cloned());
        let mut inv = invariants_of_moduli(&moduli);
        inv.rank += self.rank + other.rank;
        inv
    }
}

impl fmt::Display for Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn invariants_of_moduli(moduli: &[Int]) -> Invariants {
    let tors: Vec<Int> = moduli.iter().filter(|m| !m.is_zero()).cloned().collect();
    let rank = moduli.len() - tors.len();
    let d = smith_diagonal(&IntMatrix::diagonal(&tors));
    Invariants {
        rank,
        torsion: d.into_iter().filter(|x| *x != Int::ONE).collect(),
    }
}

/// `Z/m_1 + ... + Z/m_k`, each `m_i` zero or at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbGroup {
    moduli: Vec<Int>,
}

impl AbGroup {
    /// Panics on a modulus equal to 1 or negative.
    pub fn from_moduli(moduli: Vec<Int>) -> Self {
        for m in &moduli {
            assert!(m.is_zero() || *m >= int(2), "invalid modulus {m}");
        }
        AbGroup { moduli }
    }

    pub fn trivial() -> Self {
        AbGroup { moduli: Vec::new() }
    }

    pub fn free(n: usize) -> Self {
        AbGroup {
            moduli: vec![Int::ZERO; n],
        }
    }

    pub fn cyclic(n: i64) -> Self {
        match n {
            1 => Self::trivial(),
            _ => Self::from_moduli(vec![int(n)]),
        }
    }

    pub fn direct_sum(groups: &[&AbGroup]) -> Self {
        AbGroup {
            moduli: groups.iter().flat_map(|g| g.moduli.iter().cloned()).collect(),
        }
    }

    #[inline]
    pub fn ngens(&self) -> usize {
        self.moduli.len()
    }

    pub fn moduli(&self) -> &[Int] {
        &self.moduli
    }

    pub fn modulus(&self, i: usize) -> &Int {
        &self.moduli[i]
    }

    pub fn is_trivial(&self) -> bool {
        self.moduli.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.moduli.iter().filter(|m| m.is_zero()).count()
    }

    pub fn invariants(&self) -> Invariants {
        invariants_of_moduli(&self.moduli)
    }

    /// Relation lattice generators as columns (one per torsion generator).
    pub fn relation_matrix(&self) -> IntMatrix {
        let tors: Vec<usize> = (0..self.ngens()).filter(|&i| !self.moduli[i].is_zero()).collect();
        let mut r = IntMatrix::zeros(self.ngens(), tors.len());
        for (c, &i) in tors.iter().enumerate() {
            r[(i, c)] = self.moduli[i].clone();
        }
        r
    }

    pub fn reduce(&self, v: &mut [Int]) {
        debug_assert_eq!(v.len(), self.ngens());
        for (x, m) in v.iter_mut().zip(&self.moduli) {
            if !m.is_zero() {
                *x = modulo(x, m);
            }
        }
    }

    pub fn reduced(&self, v: &[Int]) -> Vec<Int> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w
    }

    pub fn is_zero_element(&self, v: &[Int]) -> bool {
        v.iter().zip(&self.moduli).all(|(x, m)| if m.is_zero() { x.is_zero() } else { (x % m).is_zero() })
    }

    pub fn zero_element(&self) -> Vec<Int> {
        vec![Int::ZERO; self.ngens()]
    }

    pub fn generator(&self, i: usize) -> Vec<Int> {
        let mut v = self.zero_element();
        v[i] = Int::ONE;
        v
    }

    /// Reduces the rows of a map with this group as target.
    pub fn reduce_map(&self, m: &mut IntMatrix) {
        assert_eq!(m.rows(), self.ngens());
        for i in 0..m.rows() {
            let md = self.moduli[i].clone();
            if md.is_zero() {
                continue;
            }
            for x in m.row_mut(i) {
                *x = modulo(x, &md);
            }
        }
    }

    pub fn reduced_map(&self, m: &IntMatrix) -> IntMatrix {
        let mut r = m.clone();
        self.reduce_map(&mut r);
        r
    }

    /// Whether every column of `m` is zero in this group.
    pub fn map_is_zero(&self, m: &IntMatrix) -> bool {
        assert_eq!(m.rows(), self.ngens());
        (0..m.rows()).all(|i| {
            let md = &self.moduli[i];
            m.row(i).iter().all(|x| if md.is_zero() { x.is_zero() } else { (x % md).is_zero() })
        })
    }

    /// Whether `m` defines a homomorphism `src -> self`.
    pub fn map_is_well_defined(&self, src: &AbGroup, m: &IntMatrix) -> bool {
        assert_eq!((m.rows(), m.cols()), (self.ngens(), src.ngens()));
        (0..src.ngens()).all(|j| {
            let d = &src.moduli[j];
            if d.is_zero() {
                return true;
            }
            let col: Vec<Int> = m.col(j).iter().map(|x| x * d).collect();
            self.is_zero_element(&col)
        })
    }

    /// Normal form of `Z^n / im(relations)`.
    pub fn from_presentation(ngens: usize, relations: &IntMatrix) -> Presentation {
        assert_eq!(relations.rows(), ngens, "relation matrix has wrong row count");
        let s = smith_normal_form(relations);
        let mut keep = Vec::new();
        let mut moduli = Vec::new();
        for i in 0..ngens {
            let d = if i < s.rank { s.diag[i].clone() } else { Int::ZERO };
            if d != Int::ONE {
                keep.push(i);
                moduli.push(d);
            }
        }
        let mut proj = IntMatrix::zeros(keep.len(), ngens);
        for (a, &i) in keep.iter().enumerate() {
            for j in 0..ngens {
                proj[(a, j)] = s.left[(i, j)].clone();
            }
        }
        let section = s.left_inv.select_cols(&keep);
        let group = AbGroup::from_moduli(moduli);
        group.reduce_map(&mut proj);
        Presentation { group, proj, section }
    }

    /// Subgroup spanned by the columns of `gens` (elements of `self`).
    pub fn subgroup(&self, gens: &IntMatrix) -> Subgroup {
        assert_eq!(gens.rows(), self.ngens());
        let all = gens.hstack(&self.relation_matrix());
        Subgroup::from_lattice(self, &lattice_basis(&all))
    }

    /// Kernel of `f: self -> target`.
    pub fn kernel(&self, target: &AbGroup, f: &IntMatrix) -> Subgroup {
        assert_eq!((f.rows(), f.cols()), (target.ngens(), self.ngens()));
        let n = self.ngens();
        let big = f.hstack(&target.relation_matrix());
        let k = int_kernel(&big);
        let proj = k.submatrix(0..n, 0..k.cols());
        Subgroup::from_lattice(self, &lattice_basis(&proj))
    }

    /// Cokernel of `f: src -> self`.
    pub fn cokernel(&self, f: &IntMatrix) -> Presentation {
        assert_eq!(f.rows(), self.ngens());
        let rel = self.relation_matrix().hstack(f);
        AbGroup::from_presentation(self.ngens(), &rel)
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.invariants())
    }
}

/// Result of normalizing a presentation `Z^n / L`: `group` with
/// `proj: Z^n -> group` (surjective, kernel `L`) and a `section` with
/// `proj * section = id` on `group`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub group: AbGroup,
    pub proj: IntMatrix,
    pub section: IntMatrix,
}

impl Presentation {
    pub fn project(&self, v: &[Int]) -> Vec<Int> {
        let mut w = self.proj.mul_vec(v);
        self.group.reduce(&mut w);
        w
    }
}

/// A subgroup `S` of an ambient diagonal group `A`, presented as
/// `L / rel(A)` for a lattice `rel(A) <= L <= Z^n`.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: AbGroup,
    /// `A.ngens x S.ngens`, images of the generators of `S`.
    pub incl: IntMatrix,
    lattice: LatticeCoords,
    proj: IntMatrix,
}

impl Subgroup {
    fn from_lattice(ambient: &AbGroup, basis: &IntMatrix) -> Subgroup {
        let lattice = LatticeCoords::new(basis);
        let rel = ambient.relation_matrix();
        let mut rel_coords = IntMatrix::zeros(basis.cols(), rel.cols());
        for j in 0..rel.cols() {
            let c = lattice.coords(&rel.col(j)).expect("relation lattice not contained in subgroup lattice");
            rel_coords.set_col(j, &c);
        }
        let p = AbGroup::from_presentation(basis.cols(), &rel_coords);
        let mut incl = basis.mul(&p.section);
        ambient.reduce_map(&mut incl);
        Subgroup {
            group: p.group,
            incl,
            lattice,
            proj: p.proj,
        }
    }

    /// Coordinates in `group` of an ambient element, `None` if not in `S`.
    pub fn coords(&self, v: &[Int]) -> Option<Vec<Int>> {
        let c = self.lattice.coords(v)?;
        let mut y = self.proj.mul_vec(&c);
        self.group.reduce(&mut y);
        Some(y)
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        self.lattice.contains(v)
    }

    /// Coordinates of each column; panics if a column is outside `S`.
    pub fn coords_matrix(&self, m: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.group.ngens(), m.cols());
        for j in 0..m.cols() {
            let c = self.coords(&m.col(j)).expect("element not in subgroup");
            out.set_col(j, &c);
        }
        out
    }
}

/// Homology `ker(e) / im(d)` of `A --d--> B --e--> C`.
#[derive(Clone, Debug)]
pub struct Homology {
    pub group: AbGroup,
    /// Cycles in `B` representing the generators of `group`.
    pub reps: IntMatrix,
    cycles: Subgroup,
    quotient: Presentation,
}

impl Homology {
    pub fn new(b: &AbGroup, c: &AbGroup, d: &IntMatrix, e: &IntMatrix) -> Homology {
        assert_eq!(d.rows(), b.ngens());
        let cycles = b.kernel(c, e);
        let dk = cycles.coords_matrix(d);
        let quotient = cycles.group.cokernel(&dk);
        let mut reps = cycles.incl.mul(&quotient.section);
        b.reduce_map(&mut reps);
        Homology {
            group: quotient.group.clone(),
            reps,
            cycles,
            quotient,
        }
    }

    /// Homology class of a cycle, `None` if `v` is not a cycle.
    pub fn class_of(&self, v: &[Int]) -> Option<Vec<Int>> {
        let k = self.cycles.coords(v)?;
        Some(self.quotient.project(&k))
    }
}

/// A finitely presented abelian group `Z^ngens / (columns of relations)`.
#[derive(Clone, Debug)]
pub struct PresentedAbGroup {
    pub ngens: usize,
    pub relations: IntMatrix,
    normal: Presentation,
}

impl PresentedAbGroup {
    pub fn new(ngens: usize, relations: IntMatrix) -> Self {
        let normal = AbGroup::from_presentation(ngens, &relations);
        PresentedAbGroup { ngens, relations, normal }
    }

    pub fn from_ab_group(g: &AbGroup) -> Self {
        Self::new(g.ngens(), g.relation_matrix())
    }

    pub fn invariant_factors(&self) -> &[Int] {
        self.normal.group.moduli()
    }

    pub fn normal_form(&self) -> &Presentation {
        &self.normal
    }

    /// Element equality modulo the relation lattice.
    pub fn elements_equal(&self, a: &[Int], b: &[Int]) -> bool {
        let diff: Vec<Int> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.normal.group.is_zero_element(&self.normal.proj.mul_vec(&diff))
    }

    pub fn invariants(&self) -> Invariants {
        self.normal.group.invariants()
    }
}

impl PartialEq for PresentedAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.invariants() == other.invariants()
    }
}

/// `(free_rank, torsion)` of a presented group.
pub fn group_invariants(g: &PresentedAbGroup) -> (usize, Vec<Int>) {
    let inv = g.invariants();
    (inv.rank, inv.torsion)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(rank: usize, t: &[i64]) -> Invariants {
        Invariants {
            rank,
            torsion: t.iter().map(|&x| int(x)).collect(),
        }
    }

    #[test]
    fn invariants_examples() {
        let g = PresentedAbGroup::new(2, IntMatrix::from_i64_rows(&[&[2], &[0]]));
        assert_eq!(group_invariants(&g), (1, vec![int(2)]));
        let g = PresentedAbGroup::new(0, IntMatrix::zeros(0, 0));
        assert_eq!(group_invariants(&g), (0, vec![]));
        let g = PresentedAbGroup::new(3, IntMatrix::from_i64_rows(&[&[2, 0], &[0, 6], &[0, 0]]));
        assert_eq!(group_invariants(&g), (1, vec![int(2), int(6)]));
    }

    #[test]
    fn non_chain_moduli() {
        let g = AbGroup::from_moduli(vec![int(4), int(6), int(0)]);
        assert_eq!(g.invariants(), inv(1, &[2, 12]));
        assert_eq!(g.invariants().to_string(), "Z + Z/2 + Z/12");
    }

    #[test]
    fn kernel_and_cokernel() {
        // multiplication by 2 on Z/4
        let a = AbGroup::from_moduli(vec![int(4)]);
        let f = IntMatrix::from_i64_rows(&[&[2]]);
        let k = a.kernel(&a, &f);
        assert_eq!(k.group.invariants(), inv(0, &[2]));
        assert!(k.contains(&[int(2)]));
        assert!(!k.contains(&[int(1)]));
        let c = a.cokernel(&f);
        assert_eq!(c.group.invariants(), inv(0, &[2]));
        // Z --2--> Z
        let z = AbGroup::free(1);
        assert!(z.kernel(&z, &f).group.is_trivial());
        assert_eq!(z.cokernel(&f).group.invariants(), inv(0, &[2]));
    }

    #[test]
    fn homology_of_short_complex() {
        // Z --2--> Z --0--> 0 has homology Z/2
        let z = AbGroup::free(1);
        let h = Homology::new(&z, &AbGroup::trivial(), &IntMatrix::from_i64_rows(&[&[2]]), &IntMatrix::zeros(0, 1));
        assert_eq!(h.group.invariants(), inv(0, &[2]));
        assert_eq!(h.class_of(&[int(3)]), Some(vec![int(1)]));
    }

    #[test]
    fn presentation_section_roundtrip() {
        let rel = IntMatrix::from_i64_rows(&[&[2, 4], &[6, 8], &[0, 0]]);
        let p = AbGroup::from_presentation(3, &rel);
        let back = p.group.reduced_map(&p.proj.mul(&p.section));
        assert_eq!(back, IntMatrix::identity(p.group.ngens()));
        assert!(p.group.map_is_zero(&p.proj.mul(&rel)));
        assert_eq!(p.group.invariants(), inv(1, &[2, 4]));
    }
}
