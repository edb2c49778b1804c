//! Exact verification of the Mackey functor and module relations.

use super::MackeyModule;
use crate::functor::MapKey;
use crate::mackey::ModuleKey;
use std::fmt;
use zlinalg::{AbGroup, Int, IntMatrix};

/// Failed identities, each named with its subgroups and elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return write!(f, "pass");
        }
        writeln!(f, "{} failed identities:", self.failures.len())?;
        for x in &self.failures {
            writeln!(f, "  {x}")?;
        }
        Ok(())
    }
}

const MAX_FAILURES: usize = 50;

struct Checker {
    failures: Vec<String>,
}

impl Checker {
    fn eq(&mut self, target: &AbGroup, a: &IntMatrix, b: &IntMatrix, name: impl FnOnce() -> String) {
        if self.failures.len() >= MAX_FAILURES {
            return;
        }
        if !target.map_is_zero(&a.sub(b)) {
            self.failures.push(name());
        }
    }

    fn holds(&mut self, ok: bool, name: impl FnOnce() -> String) {
        if !ok && self.failures.len() < MAX_FAILURES {
            self.failures.push(name());
        }
    }
}

impl MackeyModule {
    /// Checks every relation of a Mackey module over the Green functor:
    /// well-definedness, identities, transitivity, conjugation, the Mackey
    /// formula, and the four compatibilities of the action.
    pub fn check_axioms(&self) -> AxiomReport {
        let g = self.group();
        let green = self.green();
        let nsub = g.num_subgroups();
        let mut c = Checker { failures: Vec::new() };
        let v = |h: usize| self.value(h);
        let sd = |h: usize| g.describe_subgroup(h);

        for key in self.keys() {
            let (s, t) = self.endpoints(key);
            let ok = v(t).map_is_well_defined(v(s), self.matrix(key));
            c.holds(ok, || format!("well-definedness of {}", describe_key(self, key)));
        }

        for h in 0..nsub {
            let id = IntMatrix::identity(v(h).ngens());
            c.eq(v(h), self.res(h, h), &id, || format!("res^H_H = id (H = {})", sd(h)));
            c.eq(v(h), self.ind(h, h), &id, || format!("ind^H_H = id (H = {})", sd(h)));
            for &x in g.elements(h) {
                c.eq(v(h), self.con(x, h), &id, || {
                    format!("con_h = id for h in H (H = {}, h = {})", sd(h), g.elem_label(x))
                });
            }
        }

        for h in 0..nsub {
            for l in (0..nsub).filter(|&l| g.is_subgroup(l, h)) {
                for k in (0..nsub).filter(|&k| g.is_subgroup(k, l)) {
                    c.eq(v(k), &self.res(l, k).mul(self.res(h, l)), self.res(h, k), || {
                        format!("res^L_K res^H_L = res^H_K (H = {}, L = {}, K = {})", sd(h), sd(l), sd(k))
                    });
                    c.eq(v(h), &self.ind(l, h).mul(self.ind(k, l)), self.ind(k, h), || {
                        format!("ind^H_L ind^L_K = ind^H_K (H = {}, L = {}, K = {})", sd(h), sd(l), sd(k))
                    });
                }
            }
        }

        for &s in g.generators() {
            for x in 0..g.order() {
                for h in 0..nsub {
                    let xh = g.conj(x, h);
                    let sxh = g.conj(s, xh);
                    c.eq(v(sxh), &self.con(s, xh).mul(self.con(x, h)), self.con(g.mul(s, x), h), || {
                        format!(
                            "con_s con_g = con_sg (H = {}, s = {}, g = {})",
                            sd(h),
                            g.elem_label(s),
                            g.elem_label(x)
                        )
                    });
                }
            }
            for h in 0..nsub {
                let sh = g.conj(s, h);
                for l in (0..nsub).filter(|&l| g.is_subgroup(l, h)) {
                    let sl = g.conj(s, l);
                    c.eq(v(sl), &self.con(s, l).mul(self.res(h, l)), &self.res(sh, sl).mul(self.con(s, h)), || {
                        format!("con_g res^H_L = res^gH_gL con_g (H = {}, L = {}, g = {})", sd(h), sd(l), g.elem_label(s))
                    });
                    c.eq(v(sh), &self.con(s, h).mul(self.ind(l, h)), &self.ind(sl, sh).mul(self.con(s, l)), || {
                        format!("con_g ind^H_L = ind^gH_gL con_g (H = {}, L = {}, g = {})", sd(h), sd(l), g.elem_label(s))
                    });
                }
            }
        }

        for h in 0..nsub {
            for l in (0..nsub).filter(|&l| g.is_subgroup(l, h)) {
                for k in (0..nsub).filter(|&k| g.is_subgroup(k, h)) {
                    let lhs = self.res(h, l).mul(self.ind(k, h));
                    let mut rhs = IntMatrix::zeros(v(l).ngens(), v(k).ngens());
                    for x in g.double_cosets_in(h, l, k) {
                        let s = g.intersect(l, g.conj(x, k));
                        let sx = g.conj(g.inv(x), s);
                        let term = self.ind(s, l).mul(self.con(x, sx)).mul(self.res(k, sx));
                        rhs = rhs.add(&term);
                    }
                    c.eq(v(l), &lhs, &rhs, || {
                        format!("Mackey formula res^H_L ind^H_K (H = {}, L = {}, K = {})", sd(h), sd(l), sd(k))
                    });
                }
            }
        }

        // module structure
        let rmaps = green.maps();
        for h in 0..nsub {
            let r = green.rank(h);
            let id = IntMatrix::identity(v(h).ngens());
            c.eq(v(h), &self.act_by(h, &green.unit(h)), &id, || format!("unit acts as identity (H = {})", sd(h)));
            let mc = green.mult_constants(h);
            for i in 0..r {
                for j in 0..r {
                    let prod = self.act(h, i).mul(self.act(h, j));
                    let coeffs: Vec<Int> = mc[i][j].iter().map(|&x| Int::from(x)).collect();
                    c.eq(v(h), &prod, &self.act_by(h, &coeffs), || {
                        format!("action is multiplicative (H = {}, basis {i} * basis {j})", sd(h))
                    });
                }
            }
            for l in (0..nsub).filter(|&l| g.is_subgroup(l, h)) {
                for b in 0..r {
                    let ra = rmaps.res(h, l).col(b);
                    c.eq(v(l), &self.res(h, l).mul(self.act(h, b)), &self.act_by(l, &ra).mul(self.res(h, l)), || {
                        format!("res(a m) = res(a) res(m) (H = {}, L = {}, basis {b})", sd(h), sd(l))
                    });
                    c.eq(v(h), &self.ind(l, h).mul(&self.act_by(l, &ra)), &self.act(h, b).mul(self.ind(l, h)), || {
                        format!("ind(res(a) m) = a ind(m) (H = {}, L = {}, basis {b})", sd(h), sd(l))
                    });
                }
                for b in 0..green.rank(l) {
                    let ia = rmaps.ind(l, h).col(b);
                    let lhs = self.ind(l, h).mul(self.act(l, b)).mul(self.res(h, l));
                    c.eq(v(h), &lhs, &self.act_by(h, &ia), || {
                        format!("ind(a res(m)) = ind(a) m (H = {}, L = {}, basis {b})", sd(h), sd(l))
                    });
                }
            }
        }
        for &s in g.generators() {
            for h in 0..nsub {
                let sh = g.conj(s, h);
                for b in 0..green.rank(h) {
                    let ca = rmaps.con(s, h).col(b);
                    c.eq(v(sh), &self.con(s, h).mul(self.act(h, b)), &self.act_by(sh, &ca).mul(self.con(s, h)), || {
                        format!("con_g(a m) = con_g(a) con_g(m) (H = {}, g = {}, basis {b})", sd(h), g.elem_label(s))
                    });
                }
            }
        }
        AxiomReport { failures: c.failures }
    }
}

pub(crate) fn describe_key(m: &MackeyModule, key: ModuleKey) -> String {
    let g = m.group();
    let sd = |h: usize| g.describe_subgroup(h);
    match key {
        ModuleKey::Map(MapKey::Res(h, l)) => format!("res^{{{}}}_{{{}}}", sd(h), sd(l)),
        ModuleKey::Map(MapKey::Ind(l, h)) => format!("ind^{{{}}}_{{{}}}", sd(h), sd(l)),
        ModuleKey::Map(MapKey::Con(x, h)) => format!("con_{{{}, {}}}", g.elem_label(x), sd(h)),
        ModuleKey::Act(h, b) => format!("action of basis {b} at {}", sd(h)),
    }
}
