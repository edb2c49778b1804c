//! The representation and Burnside Green functors.

use crate::chars::{BurnsideRing, RepRing};
use crate::functor::MackeyMaps;
use crate::group::{FiniteGroup, GMap, GSet, SubId};
use std::sync::Arc;
use zlinalg::{int, AbGroup, Int, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GreenKind {
    Representation,
    Burnside,
}

impl GreenKind {
    pub fn name(self) -> &'static str {
        match self {
            GreenKind::Representation => "representation",
            GreenKind::Burnside => "burnside",
        }
    }

    pub fn from_name(name: &str) -> Option<GreenKind> {
        match name {
            "representation" => Some(GreenKind::Representation),
            "burnside" => Some(GreenKind::Burnside),
            _ => None,
        }
    }
}

/// A Green functor in the subgroup picture: free values with ring structure.
pub struct GreenFunctor {
    kind: GreenKind,
    maps: MackeyMaps,
    /// `mult[h][i][j][k]`: coefficient of basis `k` in `b_i b_j` at `H`.
    mult: Vec<Arc<Vec<Vec<Vec<i64>>>>>,
    unit: Vec<usize>,
    rep: Option<RepRing>,
    bur: Option<BurnsideRing>,
}

fn to_matrix(m: &[Vec<i64>], rows: usize, cols: usize) -> IntMatrix {
    let mut out = IntMatrix::zeros(rows, cols);
    for (i, row) in m.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if x != 0 {
                out[(i, j)] = int(x);
            }
        }
    }
    out
}

impl GreenFunctor {
    /// The representation Green functor `R^G`, `H -> R(H)`.
    pub fn representation(group: &Arc<FiniteGroup>) -> Arc<GreenFunctor> {
        let ring = RepRing::new(group);
        let nsub = group.num_subgroups();
        let ranks: Vec<usize> = (0..nsub).map(|h| ring.rank(h)).collect();
        let values = ranks.iter().map(|&r| AbGroup::free(r)).collect();
        let maps = MackeyMaps::build(
            group,
            values,
            |h, l| to_matrix(&ring.res_matrix(h, l), ranks[l], ranks[h]),
            |l, h| to_matrix(&ring.ind_matrix(l, h), ranks[h], ranks[l]),
            |g, h| to_matrix(&ring.con_matrix(g, h), ranks[group.conj(g, h)], ranks[h]),
        );
        let mult = (0..nsub).map(|h| Arc::new(ring.mult_constants(h).clone())).collect();
        Arc::new(GreenFunctor {
            kind: GreenKind::Representation,
            maps,
            mult,
            unit: vec![0; nsub],
            rep: Some(ring),
            bur: None,
        })
    }

    /// The Burnside Green functor, `H -> B(H)`.
    pub fn burnside(group: &Arc<FiniteGroup>) -> Arc<GreenFunctor> {
        let ring = BurnsideRing::new(group);
        let nsub = group.num_subgroups();
        let ranks: Vec<usize> = (0..nsub).map(|h| ring.rank(h)).collect();
        let values = ranks.iter().map(|&r| AbGroup::free(r)).collect();
        let maps = MackeyMaps::build(
            group,
            values,
            |h, l| to_matrix(&ring.res_matrix(h, l), ranks[l], ranks[h]),
            |l, h| to_matrix(&ring.ind_matrix(l, h), ranks[h], ranks[l]),
            |g, h| to_matrix(&ring.con_matrix(g, h), ranks[group.conj(g, h)], ranks[h]),
        );
        let mult = (0..nsub).map(|h| Arc::new(ring.mult_constants(h).clone())).collect();
        let unit = (0..nsub).map(|h| ring.index_of(h, h)).collect();
        Arc::new(GreenFunctor {
            kind: GreenKind::Burnside,
            maps,
            mult,
            unit,
            rep: None,
            bur: Some(ring),
        })
    }

    pub fn kind(&self) -> GreenKind {
        self.kind
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.maps.group()
    }

    pub fn maps(&self) -> &MackeyMaps {
        &self.maps
    }

    pub fn rep_ring(&self) -> Option<&RepRing> {
        self.rep.as_ref()
    }

    pub fn burnside_ring(&self) -> Option<&BurnsideRing> {
        self.bur.as_ref()
    }

    pub fn rank(&self, h: SubId) -> usize {
        self.maps.value(h).ngens()
    }

    pub fn mult_constants(&self, h: SubId) -> &[Vec<Vec<i64>>] {
        &self.mult[h]
    }

    /// Basis index of the unit of the ring at `H`.
    pub fn unit_index(&self, h: SubId) -> usize {
        self.unit[h]
    }

    pub fn unit(&self, h: SubId) -> Vec<Int> {
        let mut v = vec![Int::ZERO; self.rank(h)];
        v[self.unit[h]] = Int::ONE;
        v
    }

    /// Product in the ring at `H`.
    pub fn mul_at(&self, h: SubId, a: &[Int], b: &[Int]) -> Vec<Int> {
        let m = &self.mult[h];
        let r = a.len();
        let mut out = vec![Int::ZERO; r];
        for i in 0..r {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..r {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = m[i][j][k];
                    if c != 0 {
                        *o += &ab * int(c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of multiplication by the `b`-th basis element at `H`.
    pub fn basis_action(&self, h: SubId, b: usize) -> IntMatrix {
        let m = &self.mult[h];
        let r = self.rank(h);
        let mut out = IntMatrix::zeros(r, r);
        for j in 0..r {
            for k in 0..r {
                if m[b][j][k] != 0 {
                    out[(k, j)] = int(m[b][j][k]);
                }
            }
        }
        out
    }

    // ---- G-set picture ----

    /// Rank of `R(X)` and the orbit offsets of its basis.
    pub fn evaluate(&self, x: &GSet) -> AbGroup {
        self.maps.evaluate(x)
    }

    pub fn offsets(&self, x: &GSet) -> Vec<usize> {
        self.maps.offsets(x)
    }

    /// Basis labels `(orbit, basis element at the stabilizer)` of `R(X)`.
    pub fn basis_labels(&self, x: &GSet) -> Vec<(usize, usize)> {
        x.stabilizers()
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| (0..self.rank(s)).map(move |b| (i, b)))
            .collect()
    }

    pub fn covariant(&self, f: &GMap) -> IntMatrix {
        self.maps.covariant(f)
    }

    pub fn contravariant(&self, f: &GMap) -> IntMatrix {
        self.maps.contravariant(f)
    }

    /// The unit of `R(X)`: the unit on every orbit.
    pub fn unit_at(&self, x: &GSet) -> Vec<Int> {
        x.stabilizers().iter().flat_map(|&s| self.unit(s)).collect()
    }

    /// Orbitwise product in `R(X)`.
    pub fn multiply(&self, x: &GSet, a: &[Int], b: &[Int]) -> Vec<Int> {
        let off = self.offsets(x);
        assert_eq!(a.len(), *off.last().unwrap());
        assert_eq!(b.len(), a.len());
        let mut out = Vec::with_capacity(a.len());
        for (i, &s) in x.stabilizers().iter().enumerate() {
            out.extend(self.mul_at(s, &a[off[i]..off[i + 1]], &b[off[i]..off[i + 1]]));
        }
        out
    }

    /// `M^*(g) M_*(f) = M_*(f') M^*(g')` for the pullback of `f: A -> B`
    /// and `g: C -> B`, both sides computed as matrices `R(A) -> R(C)`.
    pub fn check_pullback_axiom(&self, f: &GMap, g: &GMap) -> bool {
        pullback_sides(&self.maps, f, g).map_or(false, |(l, r)| l == r)
    }

    /// The permutation-representation morphism `B(H) -> R(H)`, `[H/K] ->
    /// ind_K^H(1)`, as a matrix per subgroup.
    pub fn burnside_to_rep(rep: &GreenFunctor, bur: &GreenFunctor, h: SubId) -> IntMatrix {
        assert_eq!(rep.kind, GreenKind::Representation);
        let b = bur.bur.as_ref().expect("Burnside functor");
        let basis = &b.local(h).basis;
        let mut out = IntMatrix::zeros(rep.rank(h), basis.len());
        for (j, &k) in basis.iter().enumerate() {
            let col = rep.maps.ind(k, h).mul_vec(&rep.unit(k));
            out.set_col(j, &col);
        }
        out
    }
}

/// Both sides of the pullback axiom for `f: A -> B`, `g: C -> B`, with
/// pullback `P` and projections `f': P -> C`, `g': P -> A`.
pub fn pullback_sides(maps: &MackeyMaps, f: &GMap, g: &GMap) -> Option<(IntMatrix, IntMatrix)> {
    if f.target != g.target {
        return None;
    }
    let (_, pa, pc) = GSet::pullback(f, g);
    let lhs = maps.contravariant(g).mul(&maps.covariant(f));
    let rhs = maps.covariant(&pc).mul(&maps.contravariant(&pa));
    let c = maps.evaluate(&g.source);
    Some((c.reduced_map(&lhs), c.reduced_map(&rhs)))
}
