//! Character tables and representation rings of all subgroups.

pub mod burnside;
pub mod json;
pub mod modp;
mod table;

pub use burnside::BurnsideRing;
pub use json::{export_table, import_table, TableDocument};
pub use table::{character_table, conjugacy_classes, CharacterTable};

use crate::group::{FiniteGroup, SubId};
use std::sync::Arc;
use zlinalg::{int, CycInt};

/// An element of `R(H)`: integer coordinates over `Irr(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualCharacter {
    pub subgroup: SubId,
    pub coords: Vec<i64>,
}

/// Character tables of every subgroup of a group. Tables are computed for
/// class representatives and transported to conjugates, so conjugation maps
/// between the irreducibles of `S` and `^t S` (with `t` the transporter) are
/// identities.
pub struct RepRing {
    group: Arc<FiniteGroup>,
    tables: Vec<Arc<CharacterTable>>,
    mult: Vec<Vec<Vec<Vec<i64>>>>,
}

impl RepRing {
    pub fn new(group: &Arc<FiniteGroup>) -> RepRing {
        let nsub = group.num_subgroups();
        let mut base: Vec<Option<Arc<CharacterTable>>> = vec![None; nsub];
        for rep in group.class_reps() {
            base[rep] = Some(Arc::new(character_table(group, rep)));
        }
        let tables: Vec<Arc<CharacterTable>> = (0..nsub)
            .map(|h| {
                let rep = group.class_rep(h);
                if rep == h {
                    base[h].clone().unwrap()
                } else {
                    Arc::new(base[rep].as_ref().unwrap().transport(group, group.transporter(h)))
                }
            })
            .collect();
        let mut mult_rep: Vec<Option<Vec<Vec<Vec<i64>>>>> = vec![None; nsub];
        for rep in group.class_reps() {
            mult_rep[rep] = Some(mult_constants(&tables[rep]));
        }
        let mult = (0..nsub).map(|h| mult_rep[group.class_rep(h)].clone().unwrap()).collect();
        RepRing {
            group: group.clone(),
            tables,
            mult,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn table(&self, h: SubId) -> &CharacterTable {
        &self.tables[h]
    }

    pub fn rank(&self, h: SubId) -> usize {
        self.tables[h].num_classes()
    }

    /// `mult(h)[i][j][k]`: coefficient of `chi_k` in `chi_i chi_j`.
    pub fn mult_constants(&self, h: SubId) -> &Vec<Vec<Vec<i64>>> {
        &self.mult[h]
    }

    pub fn one(&self, h: SubId) -> VirtualCharacter {
        let mut coords = vec![0; self.rank(h)];
        coords[0] = 1;
        VirtualCharacter { subgroup: h, coords }
    }

    pub fn irreducible(&self, h: SubId, i: usize) -> VirtualCharacter {
        let mut coords = vec![0; self.rank(h)];
        coords[i] = 1;
        VirtualCharacter { subgroup: h, coords }
    }

    pub fn mult(&self, a: &VirtualCharacter, b: &VirtualCharacter) -> VirtualCharacter {
        assert_eq!(a.subgroup, b.subgroup, "characters of different subgroups");
        let m = &self.mult[a.subgroup];
        let r = a.coords.len();
        let mut out = vec![0i64; r];
        for i in 0..r {
            if a.coords[i] == 0 {
                continue;
            }
            for j in 0..r {
                if b.coords[j] == 0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += a.coords[i] * b.coords[j] * m[i][j][k];
                }
            }
        }
        VirtualCharacter {
            subgroup: a.subgroup,
            coords: out,
        }
    }

    /// Matrix (`rank L x rank H`) of restriction.
    pub fn res_matrix(&self, h: SubId, l: SubId) -> Vec<Vec<i64>> {
        assert!(self.group.is_subgroup(l, h), "restriction to a non-subgroup");
        let th = &self.tables[h];
        let tl = &self.tables[l];
        let mut m = vec![vec![0i64; th.num_classes()]; tl.num_classes()];
        for (i, chi) in th.chars.iter().enumerate() {
            let vals: Vec<CycInt> = (0..tl.num_classes()).map(|k| chi[th.class_of(tl.class_rep(k))].clone()).collect();
            let c = tl.decompose(&vals).expect("restriction is a character");
            for (row, x) in m.iter_mut().zip(c) {
                row[i] = x;
            }
        }
        m
    }

    /// Matrix (`rank H x rank L`) of induction, from the induced-character
    /// formula.
    pub fn ind_matrix(&self, l: SubId, h: SubId) -> Vec<Vec<i64>> {
        assert!(self.group.is_subgroup(l, h), "induction from a non-subgroup");
        let g = &self.group;
        let th = &self.tables[h];
        let tl = &self.tables[l];
        let lo = int(g.sub_order(l) as i64);
        let mut m = vec![vec![0i64; tl.num_classes()]; th.num_classes()];
        for (j, psi) in tl.chars.iter().enumerate() {
            let vals: Vec<CycInt> = (0..th.num_classes())
                .map(|k| {
                    let y = th.class_rep(k);
                    let mut acc = CycInt::zero(th.conductor);
                    for &x in g.elements(h) {
                        let c = g.conj_elem(g.inv(x), y);
                        if g.contains(l, c) {
                            acc = acc.add(&psi[tl.class_of(c)]);
                        }
                    }
                    acc.div_exact(&lo).expect("induced character value")
                })
                .collect();
            let c = th.decompose(&vals).expect("induced class function is a character");
            for (row, x) in m.iter_mut().zip(c) {
                row[j] = x;
            }
        }
        m
    }

    /// Matrix (`rank ^gH x rank H`) of conjugation `chi -> chi(g^-1 . g)`.
    pub fn con_matrix(&self, g: usize, h: SubId) -> Vec<Vec<i64>> {
        let grp = &self.group;
        let gh = grp.conj(g, h);
        let th = &self.tables[h];
        let tg = &self.tables[gh];
        let gi = grp.inv(g);
        let mut m = vec![vec![0i64; th.num_classes()]; tg.num_classes()];
        for (i, chi) in th.chars.iter().enumerate() {
            let vals: Vec<CycInt> = (0..tg.num_classes()).map(|k| chi[th.class_of(grp.conj_elem(gi, tg.class_rep(k)))].clone()).collect();
            let c = tg.decompose(&vals).expect("conjugate character");
            for (row, x) in m.iter_mut().zip(c) {
                row[i] = x;
            }
        }
        m
    }

    pub fn res(&self, chi: &VirtualCharacter, l: SubId) -> VirtualCharacter {
        apply(&self.res_matrix(chi.subgroup, l), chi, l)
    }

    pub fn ind(&self, chi: &VirtualCharacter, h: SubId) -> VirtualCharacter {
        apply(&self.ind_matrix(chi.subgroup, h), chi, h)
    }

    pub fn conj(&self, chi: &VirtualCharacter, g: usize) -> VirtualCharacter {
        let target = self.group.conj(g, chi.subgroup);
        apply(&self.con_matrix(g, chi.subgroup), chi, target)
    }

    /// Inner product of two virtual characters of the same subgroup.
    pub fn inner(&self, a: &VirtualCharacter, b: &VirtualCharacter) -> i64 {
        assert_eq!(a.subgroup, b.subgroup);
        a.coords.iter().zip(&b.coords).map(|(x, y)| x * y).sum()
    }

    pub fn values(&self, chi: &VirtualCharacter) -> Vec<CycInt> {
        self.tables[chi.subgroup].values(&chi.coords)
    }
}

fn apply(m: &[Vec<i64>], chi: &VirtualCharacter, target: SubId) -> VirtualCharacter {
    VirtualCharacter {
        subgroup: target,
        coords: m.iter().map(|row| row.iter().zip(&chi.coords).map(|(a, b)| a * b).sum()).collect(),
    }
}

fn mult_constants(t: &CharacterTable) -> Vec<Vec<Vec<i64>>> {
    let r = t.num_classes();
    let mut m = vec![vec![vec![0i64; r]; r]; r];
    for i in 0..r {
        for j in i..r {
            let prod: Vec<CycInt> = (0..r).map(|k| t.chars[i][k].mul(&t.chars[j][k])).collect();
            let c = t.decompose(&prod).expect("product of characters");
            m[i][j] = c.clone();
            m[j][i] = c;
        }
    }
    m
}
