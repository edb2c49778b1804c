//! Burnside rings of all subgroups, with tables of marks.

use crate::group::{FiniteGroup, SubId};
use std::sync::{Arc, OnceLock};

/// Data of `B(H)` for one subgroup `H`.
pub struct BurnsideLocal {
    /// One subgroup per `H`-conjugacy class of subgroups of `H` (the least id).
    pub basis: Vec<SubId>,
    /// `index[k]` for every subgroup `k <= H`; `usize::MAX` otherwise.
    index: Vec<usize>,
    /// `marks[i][j] = |(H/basis_j)^{basis_i}|`.
    pub marks: Vec<Vec<i64>>,
    /// `mult[i][j][k]`: coefficient of `[H/K_k]` in `[H/K_i][H/K_j]`,
    /// computed through marks.
    pub mult: Vec<Vec<Vec<i64>>>,
}

pub struct BurnsideRing {
    group: Arc<FiniteGroup>,
    local: Vec<OnceLock<BurnsideLocal>>,
}

impl BurnsideRing {
    pub fn new(group: &Arc<FiniteGroup>) -> BurnsideRing {
        BurnsideRing {
            group: group.clone(),
            local: (0..group.num_subgroups()).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn local(&self, h: SubId) -> &BurnsideLocal {
        self.local[h].get_or_init(|| build_local(&self.group, h))
    }

    pub fn rank(&self, h: SubId) -> usize {
        self.local(h).basis.len()
    }

    /// Basis index of the `H`-class of `k <= H`.
    pub fn index_of(&self, h: SubId, k: SubId) -> usize {
        let i = self.local(h).index[k];
        assert!(i != usize::MAX, "subgroup {k} is not contained in {h}");
        i
    }

    /// `|(H/L)^K|` for `K, L <= H`.
    pub fn mark(&self, h: SubId, k: SubId, l: SubId) -> i64 {
        mark(&self.group, h, k, l)
    }

    /// Marks of an element of `B(H)` at each basis subgroup.
    pub fn mark_vector(&self, h: SubId, coords: &[i64]) -> Vec<i64> {
        let m = &self.local(h).marks;
        m.iter().map(|row| row.iter().zip(coords).map(|(a, b)| a * b).sum()).collect()
    }

    /// Matrix (`rank L x rank H`) of restriction: `[H/K] -> sum [L/(L n ^xK)]`.
    pub fn res_matrix(&self, h: SubId, l: SubId) -> Vec<Vec<i64>> {
        let g = &self.group;
        assert!(g.is_subgroup(l, h));
        let bh = &self.local(h).basis;
        let mut m = vec![vec![0i64; bh.len()]; self.rank(l)];
        for (j, &k) in bh.iter().enumerate() {
            for x in g.double_cosets_in(h, l, k) {
                let s = g.intersect(l, g.conj(x, k));
                m[self.index_of(l, s)][j] += 1;
            }
        }
        m
    }

    /// Matrix (`rank H x rank L`) of induction: `[L/K] -> [H/K]`.
    pub fn ind_matrix(&self, l: SubId, h: SubId) -> Vec<Vec<i64>> {
        assert!(self.group.is_subgroup(l, h));
        let bl = &self.local(l).basis;
        let mut m = vec![vec![0i64; bl.len()]; self.rank(h)];
        for (j, &k) in bl.iter().enumerate() {
            m[self.index_of(h, k)][j] += 1;
        }
        m
    }

    /// Matrix (`rank ^gH x rank H`) of conjugation `[H/K] -> [^gH/^gK]`.
    pub fn con_matrix(&self, g: usize, h: SubId) -> Vec<Vec<i64>> {
        let grp = &self.group;
        let gh = grp.conj(g, h);
        let bh = &self.local(h).basis;
        let mut m = vec![vec![0i64; bh.len()]; self.rank(gh)];
        for (j, &k) in bh.iter().enumerate() {
            m[self.index_of(gh, grp.conj(g, k))][j] += 1;
        }
        m
    }

    pub fn mult_constants(&self, h: SubId) -> &Vec<Vec<Vec<i64>>> {
        &self.local(h).mult
    }

    /// Expresses a mark vector in the orbit basis; `None` if it is not the
    /// mark vector of a virtual `H`-set.
    pub fn from_marks(&self, h: SubId, marks: &[i64]) -> Option<Vec<i64>> {
        solve_upper(&self.local(h).marks, marks)
    }

    /// `[H/K_i][H/K_j]` by the double-coset formula
    /// `sum over x in [K_i \ H / K_j] of [H/(K_i n ^x K_j)]`.
    pub fn orbit_product(&self, h: SubId, i: usize, j: usize) -> Vec<i64> {
        let g = &self.group;
        let loc = self.local(h);
        let mut out = vec![0i64; loc.basis.len()];
        for x in g.double_cosets_in(h, loc.basis[i], loc.basis[j]) {
            let s = g.intersect(loc.basis[i], g.conj(x, loc.basis[j]));
            out[loc.index[s]] += 1;
        }
        out
    }
}

fn mark(g: &FiniteGroup, h: SubId, k: SubId, l: SubId) -> i64 {
    let count = g
        .elements(h)
        .iter()
        .filter(|&&x| g.is_subgroup(g.conj(g.inv(x), k), l))
        .count();
    (count / g.sub_order(l)) as i64
}

fn build_local(g: &FiniteGroup, h: SubId) -> BurnsideLocal {
    let nsub = g.num_subgroups();
    let mut index = vec![usize::MAX; nsub];
    let mut basis = Vec::new();
    for k in 0..nsub {
        if !g.is_subgroup(k, h) || index[k] != usize::MAX {
            continue;
        }
        let i = basis.len();
        basis.push(k);
        for &x in g.elements(h) {
            index[g.conj(x, k)] = i;
        }
    }
    let n = basis.len();
    let marks: Vec<Vec<i64>> = basis
        .iter()
        .map(|&k| basis.iter().map(|&l| mark(g, h, k, l)).collect())
        .collect();
    let mut loc = BurnsideLocal {
        basis,
        index,
        marks,
        mult: Vec::new(),
    };
    let mut mult = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let m: Vec<i64> = (0..n).map(|k| loc.marks[k][i] * loc.marks[k][j]).collect();
            mult[i][j] = solve_upper(&loc.marks, &m).expect("product of H-sets");
        }
    }
    loc.mult = mult;
    loc
}

/// Back substitution through the (upper triangular) table of marks.
fn solve_upper(marks: &[Vec<i64>], target: &[i64]) -> Option<Vec<i64>> {
    let n = marks.len();
    let mut x = vec![0i64; n];
    for i in (0..n).rev() {
        let mut r = target[i];
        for j in i + 1..n {
            r -= marks[i][j] * x[j];
        }
        let d = marks[i][i];
        if r % d != 0 {
            return None;
        }
        x[i] = r / d;
    }
    Some(x)
}
