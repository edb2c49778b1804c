//! The Mackey-functor part shared by Green functors and modules: values at
//! every subgroup with restriction, induction and conjugation, and their
//! extension to finite G-sets.

use crate::group::{FiniteGroup, GMap, GSet, SubId};
use std::sync::Arc;
use zlinalg::{AbGroup, IntMatrix};

/// Values and structure maps at every subgroup.
///
/// * `res(h, l)`: `M[H] -> M[L]` for `L <= H`
/// * `ind(l, h)`: `M[L] -> M[H]` for `L <= H`
/// * `con(g, h)`: `M[H] -> M[^g H]`
#[derive(Clone)]
pub struct MackeyMaps {
    group: Arc<FiniteGroup>,
    values: Vec<AbGroup>,
    res: Vec<Option<IntMatrix>>,
    ind: Vec<Option<IntMatrix>>,
    con: Vec<IntMatrix>,
}

impl PartialEq for MackeyMaps {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
            && self.values == other.values
            && self.res == other.res
            && self.ind == other.ind
            && self.con == other.con
    }
}

/// Which stored matrix of a [`MackeyMaps`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MapKey {
    Res(SubId, SubId),
    Ind(SubId, SubId),
    Con(usize, SubId),
}

impl MackeyMaps {
    /// Builds all structure maps from closures; matrices are reduced modulo
    /// the target values.
    pub fn build(
        group: &Arc<FiniteGroup>,
        values: Vec<AbGroup>,
        mut res: impl FnMut(SubId, SubId) -> IntMatrix,
        mut ind: impl FnMut(SubId, SubId) -> IntMatrix,
        mut con: impl FnMut(usize, SubId) -> IntMatrix,
    ) -> MackeyMaps {
        let nsub = group.num_subgroups();
        assert_eq!(values.len(), nsub);
        let mut r = vec![None; nsub * nsub];
        let mut d = vec![None; nsub * nsub];
        for h in 0..nsub {
            for l in 0..nsub {
                if group.is_subgroup(l, h) {
                    let m = res(h, l);
                    check_shape(&m, &values[l], &values[h]);
                    r[h * nsub + l] = Some(values[l].reduced_map(&m));
                    let m = ind(l, h);
                    check_shape(&m, &values[h], &values[l]);
                    d[l * nsub + h] = Some(values[h].reduced_map(&m));
                }
            }
        }
        let mut c = Vec::with_capacity(group.order() * nsub);
        for g in 0..group.order() {
            for h in 0..nsub {
                let m = con(g, h);
                let t = &values[group.conj(g, h)];
                check_shape(&m, t, &values[h]);
                c.push(t.reduced_map(&m));
            }
        }
        MackeyMaps {
            group: group.clone(),
            values,
            res: r,
            ind: d,
            con: c,
        }
    }

    /// The zero functor.
    pub fn zero(group: &Arc<FiniteGroup>) -> MackeyMaps {
        let z = IntMatrix::zeros(0, 0);
        Self::build(
            group,
            vec![AbGroup::trivial(); group.num_subgroups()],
            |_, _| z.clone(),
            |_, _| z.clone(),
            |_, _| z.clone(),
        )
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn value(&self, h: SubId) -> &AbGroup {
        &self.values[h]
    }

    pub fn values(&self) -> &[AbGroup] {
        &self.values
    }

    pub fn res(&self, h: SubId, l: SubId) -> &IntMatrix {
        self.res[h * self.values.len() + l]
            .as_ref()
            .unwrap_or_else(|| panic!("restriction from {h} to non-subgroup {l}"))
    }

    pub fn ind(&self, l: SubId, h: SubId) -> &IntMatrix {
        self.ind[l * self.values.len() + h]
            .as_ref()
            .unwrap_or_else(|| panic!("induction from non-subgroup {l} to {h}"))
    }

    pub fn con(&self, g: usize, h: SubId) -> &IntMatrix {
        &self.con[g * self.values.len() + h]
    }

    /// Every stored matrix, in a fixed order.
    pub fn keys(&self) -> Vec<MapKey> {
        let nsub = self.values.len();
        let mut out = Vec::new();
        for h in 0..nsub {
            for l in 0..nsub {
                if self.res[h * nsub + l].is_some() {
                    out.push(MapKey::Res(h, l));
                }
            }
        }
        for l in 0..nsub {
            for h in 0..nsub {
                if self.ind[l * nsub + h].is_some() {
                    out.push(MapKey::Ind(l, h));
                }
            }
        }
        for g in 0..self.group.order() {
            for h in 0..nsub {
                out.push(MapKey::Con(g, h));
            }
        }
        out
    }

    pub fn matrix(&self, key: MapKey) -> &IntMatrix {
        match key {
            MapKey::Res(h, l) => self.res(h, l),
            MapKey::Ind(l, h) => self.ind(l, h),
            MapKey::Con(g, h) => self.con(g, h),
        }
    }

    /// Mutable access to a stored matrix (for deliberate corruption in tests
    /// and for loaders); no reduction is applied.
    pub fn matrix_mut(&mut self, key: MapKey) -> &mut IntMatrix {
        let nsub = self.values.len();
        match key {
            MapKey::Res(h, l) => self.res[h * nsub + l].as_mut().expect("stored restriction"),
            MapKey::Ind(l, h) => self.ind[l * nsub + h].as_mut().expect("stored induction"),
            MapKey::Con(g, h) => &mut self.con[g * nsub + h],
        }
    }

    /// Source and target subgroups of a stored matrix.
    pub fn endpoints(&self, key: MapKey) -> (SubId, SubId) {
        match key {
            MapKey::Res(h, l) => (h, l),
            MapKey::Ind(l, h) => (l, h),
            MapKey::Con(g, h) => (h, self.group.conj(g, h)),
        }
    }

    // ---- G-set picture ----

    /// `M(X) = sum over orbits of M[stabilizer]`.
    pub fn evaluate(&self, x: &GSet) -> AbGroup {
        let parts: Vec<&AbGroup> = x.stabilizers().iter().map(|&s| &self.values[s]).collect();
        AbGroup::direct_sum(&parts)
    }

    /// Start of each orbit's block in `M(X)`, plus the total.
    pub fn offsets(&self, x: &GSet) -> Vec<usize> {
        let mut out = vec![0];
        for &s in x.stabilizers() {
            out.push(out.last().unwrap() + self.values[s].ngens());
        }
        out
    }

    /// `M^*(f): M(Y) -> M(X)` for `f: X -> Y`. On an orbit with `f(eS) = gT`
    /// the block is `res^{gT}_S con_{g,T}`.
    pub fn contravariant(&self, f: &GMap) -> IntMatrix {
        let g = &self.group;
        let ox = self.offsets(&f.source);
        let oy = self.offsets(&f.target);
        let mut m = IntMatrix::zeros(*ox.last().unwrap(), *oy.last().unwrap());
        for i in 0..f.source.num_orbits() {
            let (j, x) = f.orbit_data(i);
            let s = f.source.stabilizers()[i];
            let t = f.target.stabilizers()[j];
            let xt = g.conj(x, t);
            let block = self.res(xt, s).mul(self.con(x, t));
            m.set_block(ox[i], oy[j], &block);
        }
        self.evaluate(&f.source).reduced_map(&m)
    }

    /// `M_*(f): M(X) -> M(Y)` for `f: X -> Y`. On an orbit with `f(eS) = gT`
    /// the block is `con_{g^-1, gT} ind_S^{gT}`.
    pub fn covariant(&self, f: &GMap) -> IntMatrix {
        let g = &self.group;
        let ox = self.offsets(&f.source);
        let oy = self.offsets(&f.target);
        let mut m = IntMatrix::zeros(*oy.last().unwrap(), *ox.last().unwrap());
        for i in 0..f.source.num_orbits() {
            let (j, x) = f.orbit_data(i);
            let s = f.source.stabilizers()[i];
            let t = f.target.stabilizers()[j];
            let xt = g.conj(x, t);
            let block = self.con(g.inv(x), xt).mul(self.ind(s, xt));
            let mut cur = m.submatrix(oy[j]..oy[j + 1], ox[i]..ox[i + 1]);
            cur = cur.add(&block);
            m.set_block(oy[j], ox[i], &cur);
        }
        self.evaluate(&f.target).reduced_map(&m)
    }
}

fn check_shape(m: &IntMatrix, target: &AbGroup, source: &AbGroup) {
    assert_eq!(
        (m.rows(), m.cols()),
        (target.ngens(), source.ngens()),
        "structure matrix has the wrong shape"
    );
}

/// The G-set `G/S_H` (standard orbit of the class of `H`) and its point
/// `p_H = t_H . e S_H` whose stabilizer is exactly `H`.
pub fn level_orbit(group: &Arc<FiniteGroup>, h: SubId) -> (GSet, usize) {
    let x = GSet::orbit_set(group, h);
    let p = x.act(group.transporter(h), 0);
    (x, p)
}

/// The map `G/S_L -> G/S_H`, `p_L -> g p_H`, where `L <= ^g H`.
pub fn level_map(group: &Arc<FiniteGroup>, l: SubId, h: SubId, g: usize) -> GMap {
    let (xl, _) = level_orbit(group, l);
    let (xh, ph) = level_orbit(group, h);
    let tl = group.transporter(l);
    // base of G/S_L is t_L^-1 p_L, sent to t_L^-1 g p_H
    let img = xh.act(group.mul(group.inv(tl), g), ph);
    GMap::from_base_images(&xl, &xh, &[img]).expect("level map is equivariant")
}
