//! Shifted and representable modules, span operators, and the Yoneda maps.

use super::{MackeyModule, ModuleHom};
use crate::functor::{level_map, level_orbit, MackeyMaps};
use crate::green::GreenFunctor;
use crate::group::{GMap, GSet};
use std::sync::Arc;
use zlinalg::{Int, IntMatrix};

/// `X x Y x Z` with its projections to the three factors and to the three
/// pairwise products.
pub struct TripleProduct {
    pub set: GSet,
    pub to_x: GMap,
    pub to_y: GMap,
    pub to_z: GMap,
    pub to_xy: GMap,
    pub to_yz: GMap,
    pub to_xz: GMap,
}

pub fn triple_product(x: &GSet, y: &GSet, z: &GSet) -> TripleProduct {
    let xy = x.product(y);
    let t = xy.set.product(z);
    let yz = y.product(z);
    let xz = x.product(z);
    let n = t.set.len();
    let mut ix = Vec::with_capacity(n);
    let mut iy = Vec::with_capacity(n);
    let mut iz = Vec::with_capacity(n);
    let (mut ixy, mut iyz, mut ixz) = (Vec::with_capacity(n), Vec::with_capacity(n), Vec::with_capacity(n));
    for p in 0..n {
        let a = t.left.image(p);
        let c = t.right.image(p);
        let (ax, ay) = (xy.left.image(a), xy.right.image(a));
        ix.push(ax as u32);
        iy.push(ay as u32);
        iz.push(c as u32);
        ixy.push(a as u32);
        iyz.push(yz.pair(ay, c) as u32);
        ixz.push(xz.pair(ax, c) as u32);
    }
    let mk = |target: &GSet, images: Vec<u32>| GMap {
        source: t.set.clone(),
        target: target.clone(),
        images,
    };
    TripleProduct {
        set: t.set.clone(),
        to_x: mk(x, ix),
        to_y: mk(y, iy),
        to_z: mk(z, iz),
        to_xy: mk(&xy.set, ixy),
        to_yz: mk(&yz.set, iyz),
        to_xz: mk(&xz.set, ixz),
    }
}

/// `n -> N_*(q)(c . N^*(p) n)` for a span `X <-p- T -q-> Y` and `c` in
/// `R(T)`.
pub fn span_operator(n: &MackeyModule, p: &GMap, q: &GMap, c: &[Int]) -> IntMatrix {
    assert_eq!(p.source, q.source, "span legs with different sources");
    let pull = n.maps().contravariant(p);
    let acted = n.act_at(&p.source, c).mul(&pull);
    let out = n.maps().covariant(q).mul(&acted);
    n.evaluate(&q.target).reduced_map(&out)
}

/// `f x id_X: A x X -> B x X` for `f: A -> B`.
fn times_id(f: &GMap, x: &GSet) -> GMap {
    let pa = f.source.product(x);
    let pb = f.target.product(x);
    let images = (0..pa.set.len())
        .map(|z| pb.pair(f.image(pa.left.image(z)), pa.right.image(z)) as u32)
        .collect();
    GMap {
        source: pa.set.clone(),
        target: pb.set.clone(),
        images,
    }
}

impl MackeyModule {
    /// The shifted module `N_X`, `N_X[H] = N(G/H x X)`, where level `H` uses
    /// the orbit of the class of `H` with the point `p_H` of stabilizer `H`.
    pub fn shift(&self, x: &GSet) -> MackeyModule {
        let g = self.group().clone();
        let nsub = g.num_subgroups();
        let green = self.green().clone();
        let levels: Vec<(GSet, usize)> = (0..nsub).map(|h| level_orbit(&g, h)).collect();
        let prods: Vec<_> = levels.iter().map(|(o, _)| o.product(x)).collect();
        let values = prods.iter().map(|p| self.evaluate(&p.set)).collect();
        let maps = MackeyMaps::build(
            &g,
            values,
            |h, l| self.maps().contravariant(&times_id(&level_map(&g, l, h, 0), x)),
            |l, h| self.maps().covariant(&times_id(&level_map(&g, l, h, 0), x)),
            |s, h| self.maps().contravariant(&times_id(&level_map(&g, g.conj(s, h), h, s), x)),
        );
        let act = (0..nsub)
            .map(|h| {
                let t = g.transporter(h);
                let sh = g.class_rep(h);
                let to_rep = green.maps().con(g.inv(t), h);
                let pull = green.contravariant(&prods[h].left);
                (0..green.rank(h))
                    .map(|b| {
                        let a = to_rep.col(b);
                        debug_assert_eq!(a.len(), green.rank(sh));
                        self.act_at(&prods[h].set, &pull.mul_vec(&a))
                    })
                    .collect()
            })
            .collect();
        MackeyModule::new(&green, maps, act)
    }

    /// The representable module `R_X = (R^G)_X`.
    pub fn representable(green: &Arc<GreenFunctor>, x: &GSet) -> MackeyModule {
        MackeyModule::regular(green).shift(x)
    }

    /// The element of `M_X(X)` corresponding to the identity of `X`: on
    /// orbit `i` (stabilizer `S_i`), the pushforward of the unit along
    /// `G/S_i -> G/S_i x X`, `eS_i -> (eS_i, x_i)`.
    pub fn diagonal_element(green: &Arc<GreenFunctor>, x: &GSet) -> Vec<Int> {
        let g = green.group();
        let mut out = Vec::new();
        for o in x.orbits() {
            let (orb, p) = level_orbit(g, o.stab);
            debug_assert_eq!(p, 0, "class representatives use their base point");
            let prod = orb.product(x);
            let gamma = GMap::from_base_images(&orb, &prod.set, &[prod.pair(0, o.offset)]).expect("diagonal map");
            out.extend(green.covariant(&gamma).mul_vec(&green.unit(o.stab)));
        }
        out
    }

    /// Yoneda: the module map `R_X -> M` determined by `m` in `M(X)`, at
    /// level `H`: `b -> con_{t_H}(M_*(pr_1)(b . M^*(pr_2) m))`.
    pub fn yoneda_map(&self, x: &GSet, m: &[Int]) -> ModuleHom {
        let g = self.group().clone();
        let green = self.green();
        let levels = (0..g.num_subgroups())
            .map(|h| {
                let (orb, _) = level_orbit(&g, h);
                let prod = orb.product(x);
                let pulled = self.maps().contravariant(&prod.right).mul_vec(m);
                let push = self.maps().covariant(&prod.left);
                let iota = self.con(g.transporter(h), g.class_rep(h));
                let nb = green.evaluate(&prod.set).ngens();
                let mut out = IntMatrix::zeros(self.value(h).ngens(), nb);
                for b in 0..nb {
                    let mut e = vec![Int::ZERO; nb];
                    e[b] = Int::ONE;
                    let col = iota.mul_vec(&push.mul_vec(&self.act_at(&prod.set, &e).mul_vec(&pulled)));
                    out.set_col(b, &col);
                }
                self.value(h).reduced_map(&out)
            })
            .collect();
        ModuleHom::new(levels)
    }

    /// Inverse Yoneda: `psi -> psi(X)(diagonal element)` in `M(X)`.
    pub fn yoneda_element(&self, x: &GSet, psi: &ModuleHom) -> Vec<Int> {
        let d = Self::diagonal_element(self.green(), x);
        let g = self.group();
        let mut out = Vec::new();
        let mut off = 0;
        for o in x.orbits() {
            let (orb, _) = level_orbit(g, o.stab);
            let n = self.green().evaluate(&orb.product(x).set).ngens();
            out.extend(psi.level(o.stab).mul_vec(&d[off..off + n]));
            off += n;
        }
        self.evaluate(x).reduced(&out)
    }
}

/// The module map `N_X -> N_Y` induced by `a` in `R(X x Y)`: at level `H`,
/// `n -> N_*(p_HY)(R^*(p_XY)(a) . N^*(p_HX)(n))` over `G/H x X x Y`.
pub fn shift_map(n: &MackeyModule, x: &GSet, y: &GSet, a: &[Int]) -> ModuleHom {
    let g = n.group().clone();
    let green = n.green();
    let xy = x.product(y);
    let levels = (0..g.num_subgroups())
        .map(|h| {
            let (orb, _) = level_orbit(&g, h);
            let t = triple_product(&orb, x, y);
            debug_assert_eq!(t.to_yz.target, xy.set);
            let c = green.contravariant(&t.to_yz).mul_vec(a);
            span_operator(n, &t.to_xy, &t.to_xz, &c)
        })
        .collect();
    ModuleHom::new(levels)
}
