//! Compact description of a module by its data at class representatives.
//!
//! With `S` the representative of the class of `L` and `t = transporter(L)`,
//! the stored matrices are
//!
//! * `res[H][L] = con_{t^-1, L} res^H_L: M[H] -> M[S]` for a representative `H`
//!   and every `L <= H`,
//! * `ind[H][L] = ind^H_L con_{t, S}: M[S] -> M[H]`,
//! * `con_{n, S}` for generators `n` of the normalizer of each representative,
//! * the action at each representative.
//!
//! Rebuilding identifies `M[^t S]` with `M[S]` through `con_{t, S} = id`.

use super::MackeyModule;
use crate::functor::MackeyMaps;
use crate::green::GreenFunctor;
use crate::group::SubId;
use std::collections::{HashMap, VecDeque};
use std::sync::Arc;
use zlinalg::{AbGroup, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepData {
    /// Value at each class representative, in class order.
    pub values: Vec<AbGroup>,
    /// Per class: `(n, con_{n, S})` for normalizer generators `n`.
    pub normalizer: Vec<Vec<(usize, IntMatrix)>>,
    /// Per class of `H`: `(L, matrix)` for every `L <= H`.
    pub res: Vec<Vec<(SubId, IntMatrix)>>,
    pub ind: Vec<Vec<(SubId, IntMatrix)>>,
    /// Per class: the action of each basis element.
    pub act: Vec<Vec<IntMatrix>>,
}

impl RepData {
    pub fn from_module(m: &MackeyModule) -> RepData {
        let g = m.group();
        let reps = g.class_reps();
        let below = |h: SubId| (0..g.num_subgroups()).filter(move |&l| g.is_subgroup(l, h));
        RepData {
            values: reps.iter().map(|&s| m.value(s).clone()).collect(),
            normalizer: reps
                .iter()
                .map(|&s| {
                    g.minimal_generators(g.normalizer(s))
                        .into_iter()
                        .map(|n| (n, m.con(n, s).clone()))
                        .collect()
                })
                .collect(),
            res: reps
                .iter()
                .map(|&h| {
                    below(h)
                        .map(|l| {
                            let t = g.transporter(l);
                            (l, m.value(g.class_rep(l)).reduced_map(&m.con(g.inv(t), l).mul(m.res(h, l))))
                        })
                        .collect()
                })
                .collect(),
            ind: reps
                .iter()
                .map(|&h| {
                    below(h)
                        .map(|l| {
                            let t = g.transporter(l);
                            (l, m.value(h).reduced_map(&m.ind(l, h).mul(m.con(t, g.class_rep(l)))))
                        })
                        .collect()
                })
                .collect(),
            act: reps.iter().map(|&s| m.actions()[s].clone()).collect(),
        }
    }

    /// Rebuilds a module at every subgroup. Fails on missing or misshapen
    /// data and on inconsistent normalizer actions; the result still has to
    /// pass `check_axioms`.
    pub fn build(&self, green: &Arc<GreenFunctor>) -> Result<MackeyModule, String> {
        let g = green.group();
        let nsub = g.num_subgroups();
        let reps = g.class_reps();
        let nc = reps.len();
        if [self.values.len(), self.normalizer.len(), self.res.len(), self.ind.len(), self.act.len()] != [nc; 5] {
            return Err(format!("expected data for {nc} subgroup classes"));
        }
        let size = |c: usize| self.values[c].ngens();
        let shape = |m: &IntMatrix, r: usize, c: usize, what: &str| {
            if (m.rows(), m.cols()) == (r, c) {
                Ok(())
            } else {
                Err(format!("{what}: expected a {r} x {c} matrix, found {} x {}", m.rows(), m.cols()))
            }
        };

        // conjugation by every normalizer element, per class
        let mut norm: Vec<HashMap<usize, IntMatrix>> = Vec::with_capacity(nc);
        for (c, &s) in reps.iter().enumerate() {
            let n = size(c);
            let mut seen: HashMap<usize, IntMatrix> = HashMap::new();
            let mut queue = VecDeque::new();
            for &x in g.elements(s) {
                seen.insert(x, IntMatrix::identity(n));
                queue.push_back(x);
            }
            for (x, mx) in &self.normalizer[c] {
                shape(mx, n, n, "normalizer conjugation")?;
                if g.conj(*x, s) != s {
                    return Err(format!("{} does not normalize {}", g.elem_label(*x), g.describe_subgroup(s)));
                }
            }
            while let Some(y) = queue.pop_front() {
                let my = seen[&y].clone();
                for (x, mx) in &self.normalizer[c] {
                    let z = g.mul(*x, y);
                    let mz = self.values[c].reduced_map(&mx.mul(&my));
                    match seen.get(&z) {
                        Some(old) => {
                            if !self.values[c].map_is_zero(&old.sub(&mz)) {
                                return Err(format!(
                                    "conjugation by {} on {} is inconsistent",
                                    g.elem_label(z),
                                    g.describe_subgroup(s)
                                ));
                            }
                        }
                        None => {
                            seen.insert(z, mz);
                            queue.push_back(z);
                        }
                    }
                }
            }
            if seen.len() != g.sub_order(g.normalizer(s)) {
                return Err(format!("normalizer generators of {} do not generate", g.describe_subgroup(s)));
            }
            norm.push(seen);
        }
        let con_rep = |l: SubId, x: usize| -> &IntMatrix { &norm[g.class_of(l)][&x] };

        let lookup = |table: &Vec<(SubId, IntMatrix)>, l: SubId, kind: &str| -> Result<IntMatrix, String> {
            table
                .iter()
                .find(|(k, _)| *k == l)
                .map(|(_, m)| m.clone())
                .ok_or_else(|| format!("missing {kind} entry for {}", g.describe_subgroup(l)))
        };
        let mut res_e = vec![None; nsub * nsub];
        let mut ind_e = vec![None; nsub * nsub];
        for (c, &h) in reps.iter().enumerate() {
            for l in (0..nsub).filter(|&l| g.is_subgroup(l, h)) {
                let cl = g.class_of(l);
                let r = lookup(&self.res[c], l, "res")?;
                shape(&r, size(cl), size(c), "res")?;
                let d = lookup(&self.ind[c], l, "ind")?;
                shape(&d, size(c), size(cl), "ind")?;
                res_e[h * nsub + l] = Some(r);
                ind_e[h * nsub + l] = Some(d);
            }
        }
        for (c, a) in self.act.iter().enumerate() {
            if a.len() != green.rank(reps[c]) {
                return Err(format!("expected {} action matrices at {}", green.rank(reps[c]), g.describe_subgroup(reps[c])));
            }
            for m in a {
                shape(m, size(c), size(c), "action")?;
            }
        }

        let values = (0..nsub).map(|h| self.values[g.class_of(h)].clone()).collect();
        let t = |h: SubId| g.transporter(h);
        let maps = MackeyMaps::build(
            g,
            values,
            |h2, l2| {
                let h = g.class_rep(h2);
                let u = t(h2);
                let l = g.conj(g.inv(u), l2);
                let n = g.mul(g.mul(g.inv(t(l2)), u), t(l));
                con_rep(l, n).mul(res_e[h * nsub + l].as_ref().unwrap())
            },
            |l2, h2| {
                let h = g.class_rep(h2);
                let u = t(h2);
                let l = g.conj(g.inv(u), l2);
                let n = g.mul(g.mul(g.inv(t(l)), g.inv(u)), t(l2));
                ind_e[h * nsub + l].as_ref().unwrap().mul(con_rep(l, n))
            },
            |x, h| {
                let k = g.conj(x, h);
                let n = g.mul(g.mul(g.inv(t(k)), x), t(h));
                con_rep(h, n).clone()
            },
        );
        let act = (0..nsub)
            .map(|h| {
                let c = g.class_of(h);
                let back = green.maps().con(g.inv(t(h)), h);
                (0..green.rank(h))
                    .map(|b| {
                        let a = back.col(b);
                        let mut out = IntMatrix::zeros(size(c), size(c));
                        for (i, x) in a.iter().enumerate() {
                            if !x.is_zero() {
                                out = out.add(&self.act[c][i].scale(x));
                            }
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        Ok(MackeyModule::new(green, maps, act))
    }
}
