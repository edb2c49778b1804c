//! Ext, the box product and Tor computed from resolutions.

use super::resolve::{resolve, resolve_with, GeneratorOrder, Resolution};
use crate::green::GreenFunctor;
use crate::mackey::{induce_module, restrict_module, shift_map, span_operator, GradedModule, MackeyModule, ModuleHom, SubgroupEmbedding};
use std::sync::Arc;
use zlinalg::{AbGroup, Homology, IntMatrix, Invariants};

/// The cochain complex `N(X_0) -> N(X_1) -> ...` computing `Ext(M, N)`.
pub struct ExtComplex {
    pub cochains: Vec<AbGroup>,
    /// `delta^k: N(X_k) -> N(X_{k+1})` at index `k`.
    pub coboundaries: Vec<IntMatrix>,
}

impl ExtComplex {
    /// Precomposition with `d_{k+1}`: `n -> N_*(pr_1)(a_{k+1} . N^*(pr_2) n)`
    /// over `X_{k+1} x X_k`.
    pub fn new(res: &Resolution, n: &MackeyModule) -> ExtComplex {
        let cochains = res.objects.iter().map(|x| n.evaluate(x)).collect();
        let coboundaries = res
            .differentials
            .iter()
            .map(|d| {
                let p = d.source.product(&d.target);
                span_operator(n, &p.right, &p.left, &d.element)
            })
            .collect();
        ExtComplex { cochains, coboundaries }
    }

    /// `H^k`, or `None` past the computed range of an incomplete resolution.
    pub fn cohomology(&self, k: usize, complete: bool) -> Option<AbGroup> {
        let len = self.cochains.len();
        if k >= len {
            return if complete || len == 0 { Some(AbGroup::trivial()) } else { None };
        }
        if k + 1 >= len && !complete {
            return None;
        }
        let b = &self.cochains[k];
        let into = if k == 0 {
            IntMatrix::zeros(b.ngens(), 0)
        } else {
            self.coboundaries[k - 1].clone()
        };
        let (c, out) = if k + 1 < len {
            (self.cochains[k + 1].clone(), self.coboundaries[k].clone())
        } else {
            (AbGroup::trivial(), IntMatrix::zeros(0, b.ngens()))
        };
        Some(Homology::new(b, &c, &into, &out).group)
    }
}

/// `Ext^n(M, N)` for `n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub groups: Vec<Invariants>,
    /// Projective dimension of `M` when the resolution terminated.
    pub dimension: Option<usize>,
}

pub fn ext(m: &MackeyModule, n: &MackeyModule, n_max: usize) -> ExtTable {
    ext_from(&resolve(m, n_max + 1), n, n_max)
}

pub fn ext_with(m: &MackeyModule, n: &MackeyModule, n_max: usize, order: GeneratorOrder) -> ExtTable {
    ext_from(&resolve_with(m, n_max + 1, order), n, n_max)
}

pub fn ext_from(res: &Resolution, n: &MackeyModule, n_max: usize) -> ExtTable {
    let cx = ExtComplex::new(res, n);
    let groups = (0..=n_max)
        .map(|k| cx.cohomology(k, res.complete).expect("resolution long enough").invariants())
        .collect();
    ExtTable {
        groups,
        dimension: res.complete.then(|| res.length()),
    }
}

/// `box(P_k, N) = N_{X_k}` with the maps `N_{X_k} -> N_{X_{k-1}}` induced by
/// the differentials.
pub struct BoxComplex {
    pub chains: Vec<MackeyModule>,
    /// `D_k` at index `k - 1`.
    pub boundaries: Vec<ModuleHom>,
}

impl BoxComplex {
    pub fn new(res: &Resolution, n: &MackeyModule) -> BoxComplex {
        let chains = res.objects.iter().map(|x| n.shift(x)).collect();
        let boundaries = res
            .differentials
            .iter()
            .map(|d| shift_map(n, &d.source, &d.target, &d.element))
            .collect();
        BoxComplex { chains, boundaries }
    }

    /// `H_k` as a module, or `None` past the computed range.
    pub fn homology(&self, k: usize, complete: bool) -> Option<MackeyModule> {
        let len = self.chains.len();
        if k >= len {
            return (complete || len == 0).then(|| self.zero());
        }
        if k + 1 >= len && !complete {
            return None;
        }
        let c = &self.chains[k];
        let g = c.group();
        let nsub = g.num_subgroups();
        let into = |h: usize| {
            if k + 1 < len {
                self.boundaries[k].level(h).clone()
            } else {
                IntMatrix::zeros(c.value(h).ngens(), 0)
            }
        };
        if k == 0 {
            let subs: Vec<IntMatrix> = (0..nsub).map(into).collect();
            return Some(c.quotient(&subs).0);
        }
        let below = &self.chains[k - 1];
        let cycles: Vec<_> = (0..nsub)
            .map(|h| c.value(h).kernel(below.value(h), self.boundaries[k - 1].level(h)))
            .collect();
        let (z, _) = c.submodule(&cycles);
        let subs: Vec<IntMatrix> = (0..nsub).map(|h| cycles[h].coords_matrix(&into(h))).collect();
        Some(z.quotient(&subs).0)
    }

    fn zero(&self) -> MackeyModule {
        MackeyModule::zero(self.chains.first().map(|c| c.green()).expect("nonempty complex"))
    }
}

/// `Tor_n(M, N)` for `n <= n_max`, each as its per-class invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorTable {
    pub modules: Vec<Vec<Invariants>>,
    pub dimension: Option<usize>,
}

/// Tor modules `Tor_0, ..., Tor_{n_max}`, resolving the first argument.
pub fn tor_modules(m: &MackeyModule, n: &MackeyModule, n_max: usize, order: GeneratorOrder) -> (Vec<MackeyModule>, Option<usize>) {
    let res = resolve_with(m, n_max + 1, order);
    (tor_from(&res, n, n_max), res.complete.then(|| res.length()))
}

/// Tor modules from a resolution of the first argument through `X_{n_max + 1}`.
pub fn tor_from(res: &Resolution, n: &MackeyModule, n_max: usize) -> Vec<MackeyModule> {
    if res.objects.is_empty() {
        return vec![MackeyModule::zero(n.green()); n_max + 1];
    }
    let cx = BoxComplex::new(res, n);
    (0..=n_max)
        .map(|k| cx.homology(k, res.complete).expect("resolution long enough"))
        .collect()
}

pub fn tor(m: &MackeyModule, n: &MackeyModule, n_max: usize) -> TorTable {
    tor_with(m, n, n_max, GeneratorOrder::TopDown)
}

pub fn tor_with(m: &MackeyModule, n: &MackeyModule, n_max: usize, order: GeneratorOrder) -> TorTable {
    let (mods, dimension) = tor_modules(m, n, n_max, order);
    TorTable {
        modules: mods.iter().map(MackeyModule::class_invariants).collect(),
        dimension,
    }
}

/// `M box N` as the cokernel of `N_{X_1} -> N_{X_0}`.
pub fn box_product(m: &MackeyModule, n: &MackeyModule) -> MackeyModule {
    let res = resolve(m, 1);
    if res.objects.is_empty() {
        return MackeyModule::zero(m.green());
    }
    BoxComplex::new(&res, n).homology(0, true).expect("degree zero")
}

/// Cells `(n, l)` for `l` in `Z/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedTable<T> {
    pub cells: Vec<[T; 2]>,
    /// Largest projective dimension over the parts of the first argument,
    /// when all resolutions terminated.
    pub dimension: Option<usize>,
}

impl<T> GradedTable<T> {
    pub fn max_n(&self) -> usize {
        self.cells.len().saturating_sub(1)
    }

    pub fn complete(&self) -> bool {
        self.dimension.is_some()
    }
}

fn join_dims(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    Some(a?.max(b?))
}

/// `Ext^n(M, N)_l = sum over i + j = l (mod 2) of Ext^n(M_i, N_j)`.
pub fn graded_ext(m: &GradedModule, n: &GradedModule, n_max: usize) -> GradedTable<Invariants> {
    let parts: Vec<Vec<ExtTable>> = (0..2)
        .map(|i| {
            let res = resolve(m.part(i), n_max + 1);
            (0..2).map(|j| ext_from(&res, n.part(j), n_max)).collect()
        })
        .collect();
    let cells = (0..=n_max)
        .map(|k| {
            let cell = |l: usize| {
                (0..2).fold(Invariants::zero(), |acc, i| acc.sum(&parts[i][(l + i) % 2].groups[k]))
            };
            [cell(0), cell(1)]
        })
        .collect();
    GradedTable {
        cells,
        dimension: join_dims(parts[0][0].dimension, parts[1][0].dimension),
    }
}

/// `Tor_n(M, N)_l = sum over i + j = l (mod 2) of Tor_n(M_i, N_j)`, per class.
pub fn graded_tor(m: &GradedModule, n: &GradedModule, n_max: usize) -> GradedTable<Vec<Invariants>> {
    let parts: Vec<Vec<TorTable>> = (0..2)
        .map(|i| {
            let res = resolve(m.part(i), n_max + 1);
            let dimension = res.complete.then(|| res.length());
            (0..2)
                .map(|j| TorTable {
                    modules: tor_from(&res, n.part(j), n_max).iter().map(MackeyModule::class_invariants).collect(),
                    dimension,
                })
                .collect()
        })
        .collect();
    let nclass = m.green().group().class_reps().len();
    let cells = (0..=n_max)
        .map(|k| {
            let cell = |l: usize| {
                (0..nclass)
                    .map(|c| (0..2).fold(Invariants::zero(), |acc, i| acc.sum(&parts[i][(l + i) % 2].modules[k][c])))
                    .collect()
            };
            [cell(0), cell(1)]
        })
        .collect();
    GradedTable {
        cells,
        dimension: join_dims(parts[0][0].dimension, parts[1][0].dimension),
    }
}

/// `(M box N)_l = sum over i + j = l (mod 2) of M_i box N_j`.
pub fn graded_box(m: &GradedModule, n: &GradedModule) -> GradedModule {
    let b = |i: usize, j: usize| box_product(m.part(i), n.part(j));
    let even = b(0, 0).direct_sum(&b(1, 1));
    let odd = b(0, 1).direct_sum(&b(1, 0));
    GradedModule::new(Arc::new(even), Arc::new(odd))
}

/// Levelwise invariants of `Ind(M) box N` and `Ind(M box Res N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub induced_first: Vec<Invariants>,
    pub induced_last: Vec<Invariants>,
}

impl FrobeniusReport {
    pub fn holds(&self) -> bool {
        self.induced_first == self.induced_last
    }
}

/// `m` over the subgroup of `emb`, `n` over the whole group with Green
/// functor `big`.
pub fn frobenius_check(m: &MackeyModule, emb: &SubgroupEmbedding, n: &MackeyModule) -> FrobeniusReport {
    let big = n.green();
    let lhs = box_product(&induce_module(m, emb, big), n);
    let rhs = induce_module(&box_product(m, &restrict_module(n, emb, m.green())), emb, big);
    FrobeniusReport {
        induced_first: lhs.level_invariants(),
        induced_last: rhs.level_invariants(),
    }
}

/// Invariants of `hom(Ind M, N)`, `hom(M, Res N)`, `hom(N, Ind M)` and
/// `hom(Res N, M)`.
pub fn induction_adjunction(m: &MackeyModule, emb: &SubgroupEmbedding, n: &MackeyModule) -> [Invariants; 4] {
    let big: &Arc<GreenFunctor> = n.green();
    let ind = induce_module(m, emb, big);
    let res = restrict_module(n, emb, m.green());
    [
        ind.hom(n).group.invariants(),
        m.hom(&res).group.invariants(),
        n.hom(&ind).group.invariants(),
        res.hom(m).group.invariants(),
    ]
}
