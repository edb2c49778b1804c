//! Module homomorphisms, hom-groups, kernels, cokernels and submodules.

use super::MackeyModule;
use crate::functor::MackeyMaps;
use zlinalg::{AbGroup, Congruence, Int, IntMatrix, LinearSystem, Presentation, SolutionGroup, Subgroup};

/// A module homomorphism: one matrix `N[H] x M[H]` per subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleHom {
    levels: Vec<IntMatrix>,
}

impl ModuleHom {
    pub fn new(levels: Vec<IntMatrix>) -> ModuleHom {
        ModuleHom { levels }
    }

    pub fn zero(m: &MackeyModule, n: &MackeyModule) -> ModuleHom {
        ModuleHom::new(
            (0..m.group().num_subgroups())
                .map(|h| IntMatrix::zeros(n.value(h).ngens(), m.value(h).ngens()))
                .collect(),
        )
    }

    pub fn identity(m: &MackeyModule) -> ModuleHom {
        ModuleHom::new((0..m.group().num_subgroups()).map(|h| IntMatrix::identity(m.value(h).ngens())).collect())
    }

    pub fn level(&self, h: usize) -> &IntMatrix {
        &self.levels[h]
    }

    pub fn levels(&self) -> &[IntMatrix] {
        &self.levels
    }

    /// `self o first`, reduced in `target`.
    pub fn compose(&self, first: &ModuleHom, target: &MackeyModule) -> ModuleHom {
        ModuleHom::new(
            self.levels
                .iter()
                .zip(&first.levels)
                .enumerate()
                .map(|(h, (a, b))| target.value(h).reduced_map(&a.mul(b)))
                .collect(),
        )
    }

    pub fn add(&self, other: &ModuleHom, target: &MackeyModule) -> ModuleHom {
        ModuleHom::new(
            self.levels
                .iter()
                .zip(&other.levels)
                .enumerate()
                .map(|(h, (a, b))| target.value(h).reduced_map(&a.add(b)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Int, target: &MackeyModule) -> ModuleHom {
        ModuleHom::new(
            self.levels
                .iter()
                .enumerate()
                .map(|(h, a)| target.value(h).reduced_map(&a.scale(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self, target: &MackeyModule) -> bool {
        self.levels.iter().enumerate().all(|(h, a)| target.value(h).map_is_zero(a))
    }

    pub fn equals(&self, other: &ModuleHom, target: &MackeyModule) -> bool {
        self.levels
            .iter()
            .zip(&other.levels)
            .enumerate()
            .all(|(h, (a, b))| target.value(h).map_is_zero(&a.sub(b)))
    }

    /// The map `M(X) -> N(X)`, orbit by orbit.
    pub fn at(&self, x: &crate::group::GSet) -> IntMatrix {
        let blocks: Vec<IntMatrix> = x.stabilizers().iter().map(|&s| self.levels[s].clone()).collect();
        IntMatrix::block_diag(&blocks)
    }

    /// Whether this is a well-defined module homomorphism `m -> n`.
    pub fn is_hom(&self, m: &MackeyModule, n: &MackeyModule) -> bool {
        let g = m.group();
        let nsub = g.num_subgroups();
        if self.levels.len() != nsub {
            return false;
        }
        for h in 0..nsub {
            let a = &self.levels[h];
            if (a.rows(), a.cols()) != (n.value(h).ngens(), m.value(h).ngens()) {
                return false;
            }
            if !n.value(h).map_is_well_defined(m.value(h), a) {
                return false;
            }
        }
        let commutes = |t: usize, fm: &IntMatrix, fn_: &IntMatrix, s: usize| {
            n.value(t).map_is_zero(&self.levels[t].mul(fm).sub(&fn_.mul(&self.levels[s])))
        };
        for h in 0..nsub {
            for l in (0..nsub).filter(|&l| g.is_subgroup(l, h)) {
                if !commutes(l, m.res(h, l), n.res(h, l), h) || !commutes(h, m.ind(l, h), n.ind(l, h), l) {
                    return false;
                }
            }
            for &s in g.generators() {
                if !commutes(g.conj(s, h), m.con(s, h), n.con(s, h), h) {
                    return false;
                }
            }
            for b in 0..m.green().rank(h) {
                if !commutes(h, m.act(h, b), n.act(h, b), h) {
                    return false;
                }
            }
        }
        true
    }
}

/// The group of module homomorphisms `M -> N` with explicit generators.
pub struct HomSet {
    pub group: AbGroup,
    pub gens: Vec<ModuleHom>,
    sol: SolutionGroup,
    layout: Layout,
}

/// Unknowns: the entries of `phi[S]` at each class representative `S`.
struct Layout {
    reps: Vec<usize>,
    offset: Vec<usize>,
    shape: Vec<(usize, usize)>,
    nvars: usize,
}

impl Layout {
    fn new(m: &MackeyModule, n: &MackeyModule) -> Layout {
        let g = m.group();
        let reps = g.class_reps();
        let mut offset = vec![usize::MAX; g.num_subgroups()];
        let mut shape = vec![(0, 0); g.num_subgroups()];
        let mut nvars = 0;
        for &s in &reps {
            offset[s] = nvars;
            shape[s] = (n.value(s).ngens(), m.value(s).ngens());
            nvars += shape[s].0 * shape[s].1;
        }
        Layout {
            reps,
            offset,
            shape,
            nvars,
        }
    }

    fn var(&self, s: usize, i: usize, k: usize) -> usize {
        self.offset[s] + i * self.shape[s].1 + k
    }

    /// Levels at the representatives from a solution vector, extended to
    /// all subgroups by conjugation.
    fn to_hom(&self, v: &[Int], m: &MackeyModule, n: &MackeyModule) -> ModuleHom {
        let g = m.group();
        let levels = (0..g.num_subgroups())
            .map(|h| {
                let s = g.class_rep(h);
                let (r, c) = self.shape[s];
                let mut a = IntMatrix::zeros(r, c);
                for i in 0..r {
                    for k in 0..c {
                        a[(i, k)] = v[self.var(s, i, k)].clone();
                    }
                }
                if s != h {
                    let t = g.transporter(h);
                    a = n.con(t, s).mul(&a).mul(m.con(g.inv(t), h));
                }
                n.value(h).reduced_map(&a)
            })
            .collect();
        ModuleHom::new(levels)
    }

    fn to_vec(&self, phi: &ModuleHom) -> Vec<Int> {
        let mut v = vec![Int::ZERO; self.nvars];
        for &s in &self.reps {
            let (r, c) = self.shape[s];
            for i in 0..r {
                for k in 0..c {
                    v[self.var(s, i, k)] = phi.level(s)[(i, k)].clone();
                }
            }
        }
        v
    }
}

/// Congruences for `phi_T X = Y phi_U` with `X: M[U] -> M[T]`,
/// `Y: N[U] -> N[T]` and `T, U` class representatives.
fn commute_eqs(lay: &Layout, n_t: &AbGroup, t: usize, u: usize, x: &IntMatrix, y: &IntMatrix, out: &mut Vec<Congruence>) {
    let (rt, ct) = lay.shape[t];
    let (_, cu) = lay.shape[u];
    let ru = lay.shape[u].0;
    for i in 0..rt {
        for j in 0..cu {
            let mut terms = Vec::new();
            for k in 0..ct {
                if !x[(k, j)].is_zero() {
                    terms.push((lay.var(t, i, k), x[(k, j)].clone()));
                }
            }
            for k in 0..ru {
                if !y[(i, k)].is_zero() {
                    terms.push((lay.var(u, k, j), -&y[(i, k)]));
                }
            }
            if !terms.is_empty() {
                out.push(Congruence {
                    terms,
                    modulus: n_t.modulus(i).clone(),
                });
            }
        }
    }
}

impl HomSet {
    /// All module homomorphisms `M -> N`, solved for simultaneously at every
    /// class representative.
    pub fn compute(m: &MackeyModule, n: &MackeyModule) -> HomSet {
        let g = m.group();
        let lay = Layout::new(m, n);
        let mut sys = LinearSystem::new(lay.nvars);
        let mut eqs = Vec::new();
        for &s in &lay.reps {
            let (r, c) = lay.shape[s];
            for k in 0..c {
                let d = m.value(s).modulus(k);
                if d.is_zero() {
                    continue;
                }
                for i in 0..r {
                    eqs.push(Congruence {
                        terms: vec![(lay.var(s, i, k), d.clone())],
                        modulus: n.value(s).modulus(i).clone(),
                    });
                }
            }
        }
        sys.add(&eqs);
        // local constraints: the action and the Weyl group
        for &s in &lay.reps {
            let mut eqs = Vec::new();
            for b in 0..m.green().rank(s) {
                commute_eqs(&lay, n.value(s), s, s, m.act(s, b), n.act(s, b), &mut eqs);
            }
            for x in g.minimal_generators(g.normalizer(s)) {
                commute_eqs(&lay, n.value(s), s, s, m.con(x, s), n.con(x, s), &mut eqs);
            }
            sys.add(&eqs);
        }
        // restriction and induction between representatives
        for &h in &lay.reps {
            let mut eqs = Vec::new();
            for l in (0..g.num_subgroups()).filter(|&l| l != h && g.is_subgroup(l, h)) {
                let s = g.class_rep(l);
                let t = g.transporter(l);
                let ti = g.inv(t);
                // phi_S (con_{t^-1} res^H_L) = (con_{t^-1} res^H_L) phi_H
                let xm = m.con(ti, l).mul(m.res(h, l));
                let xn = n.con(ti, l).mul(n.res(h, l));
                commute_eqs(&lay, n.value(s), s, h, &xm, &xn, &mut eqs);
                // phi_H (ind^H_L con_t) = (ind^H_L con_t) phi_S
                let ym = m.ind(l, h).mul(m.con(t, s));
                let yn = n.ind(l, h).mul(n.con(t, s));
                commute_eqs(&lay, n.value(h), h, s, &ym, &yn, &mut eqs);
            }
            sys.add(&eqs);
        }
        // homomorphisms that vanish: entries multiple of the target moduli
        let mut zero_cols = Vec::new();
        for &s in &lay.reps {
            let (r, c) = lay.shape[s];
            for i in 0..r {
                let md = n.value(s).modulus(i);
                if md.is_zero() {
                    continue;
                }
                for k in 0..c {
                    let mut v = vec![Int::ZERO; lay.nvars];
                    v[lay.var(s, i, k)] = md.clone();
                    zero_cols.push(v);
                }
            }
        }
        let zero = IntMatrix::from_cols(&zero_cols, lay.nvars);
        let sol = sys.quotient(&zero);
        let gens = (0..sol.group.ngens()).map(|k| lay.to_hom(&sol.gens.col(k), m, n)).collect();
        HomSet {
            group: sol.group.clone(),
            gens,
            sol,
            layout: lay,
        }
    }

    /// Coordinates of a homomorphism in `group`; `None` if `phi` is not one.
    pub fn coords(&self, phi: &ModuleHom) -> Option<Vec<Int>> {
        self.sol.coords(&self.layout.to_vec(phi))
    }

    pub fn element(&self, c: &[Int], m: &MackeyModule, n: &MackeyModule) -> ModuleHom {
        let v = self.sol.gens.mul_vec(c);
        self.layout.to_hom(&v, m, n)
    }
}

impl MackeyModule {
    pub fn hom(&self, n: &MackeyModule) -> HomSet {
        HomSet::compute(self, n)
    }

    /// The submodule with the given levels (subgroups closed under all
    /// structure maps), with its inclusion.
    pub fn submodule(&self, subs: &[Subgroup]) -> (MackeyModule, ModuleHom) {
        let g = self.group();
        let values = subs.iter().map(|s| s.group.clone()).collect();
        let through = |a: &IntMatrix, src: usize, dst: usize| subs[dst].coords_matrix(&a.mul(&subs[src].incl));
        let maps = MackeyMaps::build(
            g,
            values,
            |h, l| through(self.res(h, l), h, l),
            |l, h| through(self.ind(l, h), l, h),
            |x, h| through(self.con(x, h), h, g.conj(x, h)),
        );
        let act = (0..g.num_subgroups())
            .map(|h| (0..self.green().rank(h)).map(|b| through(self.act(h, b), h, h)).collect())
            .collect();
        let sub = MackeyModule::new(self.green(), maps, act);
        let incl = ModuleHom::new(subs.iter().map(|s| s.incl.clone()).collect());
        (sub, incl)
    }

    /// The quotient by levelwise subgroups closed under all structure maps,
    /// with the projection.
    pub fn quotient(&self, subs: &[IntMatrix]) -> (MackeyModule, ModuleHom) {
        let g = self.group();
        let pres: Vec<Presentation> = (0..g.num_subgroups()).map(|h| self.value(h).cokernel(&subs[h])).collect();
        let values = pres.iter().map(|p| p.group.clone()).collect();
        let through = |a: &IntMatrix, src: usize, dst: usize| pres[dst].proj.mul(&a.mul(&pres[src].section));
        let maps = MackeyMaps::build(
            g,
            values,
            |h, l| through(self.res(h, l), h, l),
            |l, h| through(self.ind(l, h), l, h),
            |x, h| through(self.con(x, h), h, g.conj(x, h)),
        );
        let act = (0..g.num_subgroups())
            .map(|h| (0..self.green().rank(h)).map(|b| through(self.act(h, b), h, h)).collect())
            .collect();
        let q = MackeyModule::new(self.green(), maps, act);
        let proj = ModuleHom::new(
            pres.iter()
                .enumerate()
                .map(|(h, p)| q.value(h).reduced_map(&p.proj))
                .collect(),
        );
        (q, proj)
    }

    /// Submodule generated by elements `(H, m)` with `m` in `M[H]`: the
    /// levelwise closure under restriction, induction, conjugation and the
    /// action.
    pub fn submodule_generated(&self, elements: &[(usize, Vec<Int>)]) -> (MackeyModule, ModuleHom) {
        let g = self.group();
        let nsub = g.num_subgroups();
        let mut gens: Vec<Vec<Vec<Int>>> = vec![Vec::new(); nsub];
        for (h, m) in elements {
            gens[*h].push(self.value(*h).reduced(m));
        }
        let span = |h: usize, gens: &Vec<Vec<Int>>| self.value(h).subgroup(&IntMatrix::from_cols(gens, self.value(h).ngens()));
        let mut subs: Vec<Subgroup> = (0..nsub).map(|h| span(h, &gens[h])).collect();
        loop {
            let mut changed = false;
            let mut push = |dst: usize, a: &IntMatrix, src_sub: &Subgroup, subs_dst: &Subgroup, gens: &mut Vec<Vec<Vec<Int>>>| {
                let img = a.mul(&src_sub.incl);
                for j in 0..img.cols() {
                    let v = img.col(j);
                    if !subs_dst.contains(&v) && !gens[dst].iter().any(|w| *w == self.value(dst).reduced(&v)) {
                        gens[dst].push(self.value(dst).reduced(&v));
                        changed = true;
                    }
                }
            };
            for h in 0..nsub {
                for l in (0..nsub).filter(|&l| g.is_subgroup(l, h)) {
                    push(l, self.res(h, l), &subs[h], &subs[l], &mut gens);
                    push(h, self.ind(l, h), &subs[l], &subs[h], &mut gens);
                }
                for &s in g.generators() {
                    let sh = g.conj(s, h);
                    push(sh, self.con(s, h), &subs[h], &subs[sh], &mut gens);
                }
                for b in 0..self.green().rank(h) {
                    push(h, self.act(h, b), &subs[h], &subs[h], &mut gens);
                }
            }
            if !changed {
                break;
            }
            subs = (0..nsub).map(|h| span(h, &gens[h])).collect();
        }
        self.submodule(&subs)
    }

    /// Kernel of `phi: self -> n` with its inclusion.
    pub fn kernel(&self, n: &MackeyModule, phi: &ModuleHom) -> (MackeyModule, ModuleHom) {
        let subs: Vec<Subgroup> = (0..self.group().num_subgroups())
            .map(|h| self.value(h).kernel(n.value(h), phi.level(h)))
            .collect();
        self.submodule(&subs)
    }

    /// Cokernel of `phi: m -> self` with its projection.
    pub fn cokernel(&self, phi: &ModuleHom) -> (MackeyModule, ModuleHom) {
        self.quotient(phi.levels())
    }

    /// Image of `phi: m -> self` with its inclusion.
    pub fn image(&self, phi: &ModuleHom) -> (MackeyModule, ModuleHom) {
        let subs: Vec<Subgroup> = (0..self.group().num_subgroups())
            .map(|h| self.value(h).subgroup(phi.level(h)))
            .collect();
        self.submodule(&subs)
    }
}
