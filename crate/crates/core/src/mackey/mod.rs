//! Mackey modules over a Green functor, in the subgroup picture.

mod axioms;
mod change;
mod construct;
mod hom;
pub mod json;
mod repdata;

pub use axioms::AxiomReport;
pub use change::{induce_module, induced_value_rank, restrict_module, SubgroupEmbedding};
pub use construct::{shift_map, span_operator, triple_product, TripleProduct};
pub use hom::{HomSet, ModuleHom};
pub use repdata::RepData;

use crate::functor::{MackeyMaps, MapKey};
use crate::green::GreenFunctor;
use crate::group::{FiniteGroup, GSet, SubId};
use std::sync::Arc;
use zlinalg::{AbGroup, Int, IntMatrix};

/// A Mackey module: a Mackey functor with an action of the Green functor at
/// every subgroup. `act[h][b]` is the action of the `b`-th basis element of
/// the ring at `H` on `M[H]`.
#[derive(Clone)]
pub struct MackeyModule {
    green: Arc<GreenFunctor>,
    maps: MackeyMaps,
    act: Vec<Vec<IntMatrix>>,
}

impl PartialEq for MackeyModule {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.green, &other.green) && self.maps == other.maps && self.act == other.act
    }
}

impl std::fmt::Debug for MackeyModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let inv: Vec<String> = self.class_invariants().iter().map(|i| i.to_string()).collect();
        write!(f, "MackeyModule[{}]({})", self.green.kind().name(), inv.join(", "))
    }
}

/// A stored matrix of a module: a structure map or an action matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleKey {
    Map(MapKey),
    Act(SubId, usize),
}

impl MackeyModule {
    pub fn new(green: &Arc<GreenFunctor>, maps: MackeyMaps, act: Vec<Vec<IntMatrix>>) -> MackeyModule {
        assert!(Arc::ptr_eq(green.group(), maps.group()), "module and Green functor over different groups");
        let act = act
            .into_iter()
            .enumerate()
            .map(|(h, v)| {
                assert_eq!(v.len(), green.rank(h), "one action matrix per basis element");
                v.iter().map(|m| maps.value(h).reduced_map(m)).collect()
            })
            .collect();
        MackeyModule {
            green: green.clone(),
            maps,
            act,
        }
    }

    /// The Green functor as a module over itself.
    pub fn regular(green: &Arc<GreenFunctor>) -> MackeyModule {
        let act = (0..green.group().num_subgroups())
            .map(|h| (0..green.rank(h)).map(|b| green.basis_action(h, b)).collect())
            .collect();
        MackeyModule::new(green, green.maps().clone(), act)
    }

    pub fn zero(green: &Arc<GreenFunctor>) -> MackeyModule {
        let act = (0..green.group().num_subgroups())
            .map(|h| vec![IntMatrix::zeros(0, 0); green.rank(h)])
            .collect();
        MackeyModule::new(green, MackeyMaps::zero(green.group()), act)
    }

    pub fn green(&self) -> &Arc<GreenFunctor> {
        &self.green
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.maps.group()
    }

    pub fn maps(&self) -> &MackeyMaps {
        &self.maps
    }

    pub fn value(&self, h: SubId) -> &AbGroup {
        self.maps.value(h)
    }

    pub fn res(&self, h: SubId, l: SubId) -> &IntMatrix {
        self.maps.res(h, l)
    }

    pub fn ind(&self, l: SubId, h: SubId) -> &IntMatrix {
        self.maps.ind(l, h)
    }

    pub fn con(&self, g: usize, h: SubId) -> &IntMatrix {
        self.maps.con(g, h)
    }

    pub fn act(&self, h: SubId, b: usize) -> &IntMatrix {
        &self.act[h][b]
    }

    pub fn actions(&self) -> &[Vec<IntMatrix>] {
        &self.act
    }

    /// Action of an arbitrary ring element at `H`.
    pub fn act_by(&self, h: SubId, a: &[Int]) -> IntMatrix {
        let n = self.value(h).ngens();
        let mut out = IntMatrix::zeros(n, n);
        for (b, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.act[h][b].scale(c));
            }
        }
        self.value(h).reduced_map(&out)
    }

    pub fn is_zero(&self) -> bool {
        self.maps.values().iter().all(|v| v.is_trivial())
    }

    /// Every stored matrix.
    pub fn keys(&self) -> Vec<ModuleKey> {
        let mut out: Vec<ModuleKey> = self.maps.keys().into_iter().map(ModuleKey::Map).collect();
        for (h, v) in self.act.iter().enumerate() {
            for b in 0..v.len() {
                out.push(ModuleKey::Act(h, b));
            }
        }
        out
    }

    pub fn matrix(&self, key: ModuleKey) -> &IntMatrix {
        match key {
            ModuleKey::Map(k) => self.maps.matrix(k),
            ModuleKey::Act(h, b) => &self.act[h][b],
        }
    }

    /// Unreduced mutable access, for loaders and corruption tests.
    pub fn matrix_mut(&mut self, key: ModuleKey) -> &mut IntMatrix {
        match key {
            ModuleKey::Map(k) => self.maps.matrix_mut(k),
            ModuleKey::Act(h, b) => &mut self.act[h][b],
        }
    }

    /// Source and target subgroup of a stored matrix.
    pub fn endpoints(&self, key: ModuleKey) -> (SubId, SubId) {
        match key {
            ModuleKey::Map(k) => self.maps.endpoints(k),
            ModuleKey::Act(h, _) => (h, h),
        }
    }

    /// Invariants of every level, indexed by subgroup.
    pub fn level_invariants(&self) -> Vec<zlinalg::Invariants> {
        self.maps.values().iter().map(|v| v.invariants()).collect()
    }

    /// Invariants at the class representatives, in class order.
    pub fn class_invariants(&self) -> Vec<zlinalg::Invariants> {
        self.group().class_reps().iter().map(|&h| self.value(h).invariants()).collect()
    }

    // ---- G-set picture ----

    pub fn evaluate(&self, x: &GSet) -> AbGroup {
        self.maps.evaluate(x)
    }

    pub fn offsets(&self, x: &GSet) -> Vec<usize> {
        self.maps.offsets(x)
    }

    /// `(M^*(f), M_*(f))`.
    pub fn evaluate_map(&self, f: &crate::group::GMap) -> (IntMatrix, IntMatrix) {
        (self.maps.contravariant(f), self.maps.covariant(f))
    }

    /// Action of `c` in `R(X)` on `M(X)`, orbit by orbit.
    pub fn act_at(&self, x: &GSet, c: &[Int]) -> IntMatrix {
        let roff = self.green.offsets(x);
        assert_eq!(c.len(), *roff.last().unwrap(), "ring element has the wrong length");
        let blocks: Vec<IntMatrix> = x
            .stabilizers()
            .iter()
            .enumerate()
            .map(|(i, &s)| self.act_by(s, &c[roff[i]..roff[i + 1]]))
            .collect();
        IntMatrix::block_diag(&blocks)
    }

    /// Levelwise direct sum.
    pub fn direct_sum(&self, other: &MackeyModule) -> MackeyModule {
        assert!(Arc::ptr_eq(&self.green, &other.green));
        let g = self.group();
        let values = (0..g.num_subgroups())
            .map(|h| AbGroup::direct_sum(&[self.value(h), other.value(h)]))
            .collect();
        let bd = |a: &IntMatrix, b: &IntMatrix| IntMatrix::block_diag(&[a.clone(), b.clone()]);
        let maps = MackeyMaps::build(
            g,
            values,
            |h, l| bd(self.res(h, l), other.res(h, l)),
            |l, h| bd(self.ind(l, h), other.ind(l, h)),
            |x, h| bd(self.con(x, h), other.con(x, h)),
        );
        let act = (0..g.num_subgroups())
            .map(|h| (0..self.green.rank(h)).map(|b| bd(self.act(h, b), other.act(h, b))).collect())
            .collect();
        MackeyModule::new(&self.green, maps, act)
    }
}

/// A `Z/2`-graded module `(M_0, M_1)`.
#[derive(Clone, Debug)]
pub struct GradedModule {
    pub parts: [Arc<MackeyModule>; 2],
}

impl GradedModule {
    pub fn new(m0: Arc<MackeyModule>, m1: Arc<MackeyModule>) -> GradedModule {
        assert!(Arc::ptr_eq(m0.green(), m1.green()), "graded parts over different Green functors");
        GradedModule { parts: [m0, m1] }
    }

    /// `M` in degree 0.
    pub fn even(m: Arc<MackeyModule>) -> GradedModule {
        let z = Arc::new(MackeyModule::zero(m.green()));
        GradedModule::new(m, z)
    }

    pub fn part(&self, i: usize) -> &Arc<MackeyModule> {
        &self.parts[i % 2]
    }

    /// `(M[1])_i = M_{i-1}`.
    pub fn shift(&self) -> GradedModule {
        GradedModule::new(self.parts[1].clone(), self.parts[0].clone())
    }

    pub fn green(&self) -> &Arc<GreenFunctor> {
        self.parts[0].green()
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let mut r = self.parts[0].check_axioms();
        let r1 = self.parts[1].check_axioms();
        r.failures.extend(r1.failures.into_iter().map(|f| format!("degree 1: {f}")));
        r
    }
}
