//! Restriction and induction of modules along a subgroup `G' <= G`.

use super::MackeyModule;
use crate::functor::{level_map, level_orbit, MackeyMaps};
use crate::green::{GreenFunctor, GreenKind};
use crate::group::{FiniteGroup, GMap, GSet, SubId};
use std::sync::Arc;
use zlinalg::{int, Int, IntMatrix, Invariants};

/// A subgroup `G'` of `G` as a group in its own right.
pub struct SubgroupEmbedding {
    pub big: Arc<FiniteGroup>,
    pub small: Arc<FiniteGroup>,
    /// `G'` as a subgroup of `G`.
    pub subgroup: SubId,
    /// Element of `G` for each element of `G'`.
    pub elem: Vec<usize>,
    /// Subgroup of `G` for each subgroup of `G'`.
    pub sub: Vec<SubId>,
    small_of: Vec<usize>,
}

impl SubgroupEmbedding {
    pub fn new(big: &Arc<FiniteGroup>, subgroup: SubId) -> SubgroupEmbedding {
        let (small, elem) = big.subgroup_as_group(subgroup);
        let small = Arc::new(small);
        let mut small_of = vec![usize::MAX; big.order()];
        for (i, &e) in elem.iter().enumerate() {
            small_of[e] = i;
        }
        let sub = (0..small.num_subgroups())
            .map(|h| {
                let els: Vec<usize> = small.elements(h).iter().map(|&x| elem[x]).collect();
                big.id_of_elements(&els).expect("image of a subgroup")
            })
            .collect();
        SubgroupEmbedding {
            big: big.clone(),
            small,
            subgroup,
            elem,
            sub,
            small_of,
        }
    }

    /// Subgroup of `G'` with the same elements as `h <= G'` in `G`.
    pub fn small_subgroup(&self, h: SubId) -> SubId {
        let els: Vec<usize> = self.big.elements(h).iter().map(|&x| self.small_of[x]).collect();
        assert!(els.iter().all(|&x| x != usize::MAX), "subgroup not contained in G'");
        self.small.id_of_elements(&els).expect("subgroup of G'")
    }

    /// `G'`-set `Res X` with the bijection from points of `X`.
    pub fn restrict_gset(&self, x: &GSet) -> (GSet, Vec<u32>) {
        GSet::decompose(&self.small, x.len(), |g, p| x.act(self.elem[g], p))
    }

    /// `Res f: Res X -> Res Y`.
    pub fn restrict_map(&self, f: &GMap, rx: &(GSet, Vec<u32>), ry: &(GSet, Vec<u32>)) -> GMap {
        let mut inv = vec![0usize; rx.1.len()];
        for (p, &q) in rx.1.iter().enumerate() {
            inv[q as usize] = p;
        }
        let images = (0..rx.0.len()).map(|z| ry.1[f.image(inv[z])]).collect();
        GMap::new(&rx.0, &ry.0, images).expect("restricted map is equivariant")
    }

    /// Identification of the ring at `h' <= G'` (over `small`) with the ring
    /// at its image in `G` (over `big`): a matrix `R_G[h] x R_G'[h']`.
    pub fn ring_map(&self, big: &GreenFunctor, small: &GreenFunctor, h: SubId) -> IntMatrix {
        assert_eq!(big.kind(), small.kind(), "Green functors of different kinds");
        let bh = self.sub[h];
        let mut out = IntMatrix::zeros(big.rank(bh), small.rank(h));
        match big.kind() {
            GreenKind::Representation => {
                let (bt, st) = (big.rep_ring().unwrap().table(bh), small.rep_ring().unwrap().table(h));
                for i in 0..small.rank(h) {
                    let mut e = vec![0i64; small.rank(h)];
                    e[i] = 1;
                    let sv = st.values(&e);
                    let vals: Vec<_> = (0..bt.num_classes())
                        .map(|k| sv[st.class_of(self.small_of[bt.class_rep(k)])].lift(bt.conductor))
                        .collect();
                    let c = bt.decompose(&vals).expect("restricted irreducible");
                    out.set_col(i, &c.iter().map(|&x| int(x)).collect::<Vec<_>>());
                }
            }
            GreenKind::Burnside => {
                let (bb, sb) = (big.burnside_ring().unwrap(), small.burnside_ring().unwrap());
                for (i, &k) in sb.local(h).basis.iter().enumerate() {
                    out[(bb.index_of(bh, self.sub[k]), i)] = Int::ONE;
                }
            }
        }
        out
    }
}

/// Inverse of a permutation matrix.
fn permutation_inverse(m: &IntMatrix) -> IntMatrix {
    let t = m.transpose();
    assert_eq!(t.mul(m), IntMatrix::identity(m.cols()), "ring identification is not a permutation");
    t
}

/// `Res^G_{G'} N`: the values at subgroups of `G'`, with the action through
/// the ring identification.
pub fn restrict_module(n: &MackeyModule, emb: &SubgroupEmbedding, small: &Arc<GreenFunctor>) -> MackeyModule {
    let sg = &emb.small;
    let nsub = sg.num_subgroups();
    let values = (0..nsub).map(|h| n.value(emb.sub[h]).clone()).collect();
    let maps = MackeyMaps::build(
        sg,
        values,
        |h, l| n.res(emb.sub[h], emb.sub[l]).clone(),
        |l, h| n.ind(emb.sub[l], emb.sub[h]).clone(),
        |x, h| n.con(emb.elem[x], emb.sub[h]).clone(),
    );
    let act = (0..nsub)
        .map(|h| {
            let rho = emb.ring_map(n.green(), small, h);
            (0..small.rank(h)).map(|b| n.act_by(emb.sub[h], &rho.col(b))).collect()
        })
        .collect();
    MackeyModule::new(small, maps, act)
}

/// `Ind_{G'}^G M` with `Ind(M)(X) = M(Res X)`; level `H` is `M(Res G/H)`.
pub fn induce_module(m: &MackeyModule, emb: &SubgroupEmbedding, big: &Arc<GreenFunctor>) -> MackeyModule {
    let g = &emb.big;
    let nsub = g.num_subgroups();
    let levels: Vec<(GSet, Vec<u32>)> = (0..nsub).map(|h| emb.restrict_gset(&level_orbit(g, h).0)).collect();
    let values = levels.iter().map(|r| m.evaluate(&r.0)).collect();
    let res_lm = |l: SubId, h: SubId, x: usize| emb.restrict_map(&level_map(g, l, h, x), &levels[l], &levels[h]);
    let maps = MackeyMaps::build(
        g,
        values,
        |h, l| m.maps().contravariant(&res_lm(l, h, 0)),
        |l, h| m.maps().covariant(&res_lm(l, h, 0)),
        |s, h| m.maps().contravariant(&res_lm(g.conj(s, h), h, s)),
    );
    let rho_inv: Vec<IntMatrix> = (0..emb.small.num_subgroups())
        .map(|h| permutation_inverse(&emb.ring_map(big, m.green(), h)))
        .collect();
    let act = (0..nsub)
        .map(|h| {
            let (orb, _) = level_orbit(g, h);
            let to_rep = big.maps().con(g.inv(g.transporter(h)), h);
            let (rx, iso) = &levels[h];
            let mut inv = vec![0usize; iso.len()];
            for (p, &q) in iso.iter().enumerate() {
                inv[q as usize] = p;
            }
            (0..big.rank(h))
                .map(|b| {
                    let a = to_rep.col(b);
                    // restrict a in R_G(G/S_H) orbit by orbit of Res
                    let mut c = Vec::new();
                    for o in rx.orbits() {
                        let x = inv[o.offset];
                        let u = orb.point_element(x);
                        let t = orb.stabilizers()[0];
                        let ut = g.conj(u, t);
                        let v = big.maps().res(ut, emb.sub[o.stab]).mul(big.maps().con(u, t)).mul_vec(&a);
                        c.extend(rho_inv[o.stab].mul_vec(&v));
                    }
                    m.act_at(rx, &c)
                })
                .collect()
        })
        .collect();
    MackeyModule::new(big, maps, act)
}

/// Invariants of `Ind(M)[H]` from the double coset formula
/// `sum over a in [G' \ G / H] of M[G' cap ^a H]`.
pub fn induced_value_rank(m: &MackeyModule, emb: &SubgroupEmbedding, h: SubId) -> Invariants {
    let g = &emb.big;
    let mut total = Invariants::zero();
    for a in g.double_cosets(emb.subgroup, h) {
        let s = g.intersect(emb.subgroup, g.conj(a, h));
        total = total.sum(&m.value(emb.small_subgroup(s)).invariants());
    }
    total
}
