//! The internal hom `Hom(M, N)(X) = hom(M, N_X)`.

use crate::functor::{level_map, level_orbit, MackeyMaps};
use crate::group::{GMap, GSet, SubId};
use crate::mackey::{HomSet, MackeyModule, ModuleHom};
use std::collections::HashMap;
use zlinalg::IntMatrix;

/// `id x f: O x A -> O x B`.
fn left_times(o: &GSet, f: &GMap) -> GMap {
    let pa = o.product(&f.source);
    let pb = o.product(&f.target);
    let images = (0..pa.set.len())
        .map(|z| pb.pair(pa.left.image(z), f.image(pa.right.image(z))) as u32)
        .collect();
    GMap {
        source: pa.set.clone(),
        target: pb.set.clone(),
        images,
    }
}

struct Picture<'a> {
    m: &'a MackeyModule,
    n: &'a MackeyModule,
    levels: Vec<GSet>,
    shifted: HashMap<SubId, (MackeyModule, HomSet)>,
}

impl Picture<'_> {
    fn hom_at(&self, h: SubId) -> &(MackeyModule, HomSet) {
        &self.shifted[&self.m.group().class_rep(h)]
    }

    /// Matrix of `phi -> T o phi` from `hom(M, N_src)` to `hom(M, N_dst)`,
    /// where `T` is given levelwise.
    fn transport(&self, src: SubId, dst: SubId, t: impl Fn(usize) -> IntMatrix) -> IntMatrix {
        let (_, from) = self.hom_at(src);
        let (target, to) = self.hom_at(dst);
        let ts: Vec<IntMatrix> = (0..self.levels.len()).map(&t).collect();
        let mut out = IntMatrix::zeros(to.group.ngens(), from.gens.len());
        for (j, phi) in from.gens.iter().enumerate() {
            let psi = ModuleHom::new(phi.levels().iter().zip(&ts).map(|(p, t)| t.mul(p)).collect());
            let psi = ModuleHom::new(psi.levels().iter().enumerate().map(|(h, a)| target.value(h).reduced_map(a)).collect());
            out.set_col(j, &to.coords(&psi).expect("composite lands in the hom group"));
        }
        to.group.reduced_map(&out)
    }
}

pub fn internal_hom(m: &MackeyModule, n: &MackeyModule) -> MackeyModule {
    let g = m.group().clone();
    let nsub = g.num_subgroups();
    let green = m.green().clone();
    let levels: Vec<GSet> = (0..nsub).map(|h| level_orbit(&g, h).0).collect();
    let shifted = g
        .class_reps()
        .into_iter()
        .map(|s| {
            let ns = n.shift(&GSet::orbit_set(&g, s));
            let hs = m.hom(&ns);
            (s, (ns, hs))
        })
        .collect();
    let pic = Picture { m, n, levels, shifted };
    let values = (0..nsub).map(|h| pic.hom_at(h).1.group.clone()).collect();
    let contra = |f: &GMap, src: SubId, dst: SubId| {
        pic.transport(src, dst, |j| pic.n.maps().contravariant(&left_times(&pic.levels[j], f)))
    };
    let co = |f: &GMap, src: SubId, dst: SubId| {
        pic.transport(src, dst, |j| pic.n.maps().covariant(&left_times(&pic.levels[j], f)))
    };
    let maps = MackeyMaps::build(
        &g,
        values,
        |h, l| contra(&level_map(&g, l, h, 0), h, l),
        |l, h| co(&level_map(&g, l, h, 0), l, h),
        |s, h| contra(&level_map(&g, g.conj(s, h), h, s), h, g.conj(s, h)),
    );
    let act = (0..nsub)
        .map(|h| {
            let to_rep = green.maps().con(g.inv(g.transporter(h)), h);
            let o = &pic.levels[h];
            (0..green.rank(h))
                .map(|b| {
                    let r = to_rep.col(b);
                    pic.transport(h, h, |j| {
                        let p = pic.levels[j].product(o);
                        pic.n.act_at(&p.set, &green.contravariant(&p.right).mul_vec(&r))
                    })
                })
                .collect()
        })
        .collect();
    MackeyModule::new(&green, maps, act)
}
