//! The acceptance suite: ten criteria run with exact arithmetic, each
//! reported as a pass/fail line. Shared by `specseq corpus run` and the
//! `acceptance` test target.

use crate::bouc::BoucCategory;
use crate::chars::RepRing;
use crate::corpus::{module_corpus, CorpusEntry, DEFAULT_SEED};
use crate::green::{GreenFunctor, GreenKind};
use crate::group::{Conventions, FiniteGroup, GSet};
use crate::homalg::{
    box_direct_oracle, box_product, ext, ext_from, ext_with, frobenius_check, induction_adjunction, internal_hom, resolve,
    resolve_with, tor, tor_from, tor_modules, tor_with, GeneratorOrder,
};
use crate::mackey::{induce_module, induced_value_rank, restrict_module, shift_map, GradedModule, MackeyModule, SubgroupEmbedding};
use crate::spectral::{artin_rank, brauer_surjectivity, kunneth_e2, uct_e2};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::fmt;
use std::sync::Arc;
use zlinalg::{int, Int, Invariants};

pub const PRESETS: [&str; 9] = ["Z/2", "Z/3", "Z/4", "Z/6", "Z/2xZ/2", "S3", "D4", "Q8", "A4"];
pub const CRITERIA: usize = 10;

const TITLES: [&str; CRITERIA] = [
    "character theory: orthogonality, Frobenius reciprocity, Mackey formula",
    "Brauer surjectivity and Artin rank of induction",
    "Burnside-Bouc hom ranks, unit and associativity",
    "span composition against Yoneda-transported composition",
    "Yoneda isomorphism hom(R_X, M) = M(X)",
    "axiom closure of constructors and mutation battery",
    "homological engine",
    "change of group: adjunctions, double-coset ranks, Frobenius",
    "E2 degeneration and the trivial group",
    "independence of conventions",
];

#[derive(Clone, Copy, Debug)]
pub struct AcceptanceConfig {
    /// Seed for corpora and random samples.
    pub seed: u64,
    /// Seed of the randomized conventions in criterion 10.
    pub convention_seed: u64,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        AcceptanceConfig {
            seed: DEFAULT_SEED,
            convention_seed: 0xc0ffee,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks > 0
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {verdict}: {} ({} checks", self.id, self.title, self.checks)?;
        if !self.failures.is_empty() {
            write!(f, ", {} failed", self.failures.len())?;
        }
        write!(f, ")")?;
        for x in self.failures.iter().take(5) {
            write!(f, "\n    {x}")?;
        }
        Ok(())
    }
}

const MAX_MESSAGES: usize = 20;

struct Tally {
    checks: usize,
    failures: Vec<String>,
    dropped: usize,
}

impl Tally {
    fn new() -> Tally {
        Tally {
            checks: 0,
            failures: Vec::new(),
            dropped: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            if self.failures.len() < MAX_MESSAGES {
                self.failures.push(what());
            } else {
                self.dropped += 1;
            }
        }
    }

    fn report(mut self, id: usize) -> CriterionReport {
        if self.dropped > 0 {
            self.failures.push(format!("... and {} more", self.dropped));
        }
        CriterionReport {
            id,
            title: TITLES[id - 1],
            checks: self.checks,
            failures: self.failures,
        }
    }
}

pub fn run_criterion(id: usize, config: &AcceptanceConfig) -> CriterionReport {
    let mut t = Tally::new();
    match id {
        1 => characters(&mut t),
        2 => brauer_artin(&mut t),
        3 => bouc_ranks(&mut t, config.seed),
        4 => two_path(&mut t),
        5 => yoneda(&mut t, config.seed),
        6 => closure(&mut t, config.seed),
        7 => homological(&mut t, config.seed),
        8 => change_of_group(&mut t, config.seed),
        9 => degeneration(&mut t, config.seed),
        10 => conventions(&mut t, config),
        _ => panic!("no criterion {id}"),
    }
    t.report(id)
}

pub fn run_all(config: &AcceptanceConfig) -> Vec<CriterionReport> {
    (1..=CRITERIA).map(|id| run_criterion(id, config)).collect()
}

fn group(spec: &str) -> Arc<FiniteGroup> {
    FiniteGroup::from_spec(spec).expect("preset group")
}

fn functor(kind: GreenKind, g: &Arc<FiniteGroup>) -> Arc<GreenFunctor> {
    match kind {
        GreenKind::Representation => GreenFunctor::representation(g),
        GreenKind::Burnside => GreenFunctor::burnside(g),
    }
}

fn both(g: &Arc<FiniteGroup>) -> [Arc<GreenFunctor>; 2] {
    [GreenFunctor::representation(g), GreenFunctor::burnside(g)]
}

fn orbits(g: &Arc<FiniteGroup>) -> Vec<GSet> {
    g.class_reps().iter().map(|&h| GSet::orbit_set(g, h)).collect()
}

fn label(green: &GreenFunctor) -> String {
    format!("{} {}", green.group().name(), green.kind().name())
}

/// `R / nR`.
pub fn torsion_module(green: &Arc<GreenFunctor>, n: i64) -> MackeyModule {
    let g = green.group();
    let reg = MackeyModule::regular(green);
    let pt = GSet::point(g);
    let a: Vec<Int> = green.unit(g.whole()).iter().map(|c| c * int(n)).collect();
    reg.cokernel(&shift_map(&reg, &pt, &pt, &a)).0
}

fn cyclic(n: i64) -> Invariants {
    if n == 1 {
        Invariants::zero()
    } else {
        Invariants {
            rank: 0,
            torsion: vec![int(n)],
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// ---- 1 ----

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    a.iter()
        .map(|row| (0..cols).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect())
        .collect()
}

fn characters(t: &mut Tally) {
    for spec in PRESETS {
        let g = group(spec);
        let r = RepRing::new(&g);
        let n = g.num_subgroups();
        for h in 0..n {
            let table = r.table(h);
            t.check(table.verify().is_ok(), || format!("{spec}: table of subgroup {h}: {:?}", table.verify()));
        }
        // <Ind psi, chi>_H = <psi, Res chi>_L with restriction by evaluation
        for h in 0..n {
            for l in (0..n).filter(|&l| g.is_subgroup(l, h)) {
                let (th, tl) = (r.table(h), r.table(l));
                let ind = r.ind_matrix(l, h);
                let induced: Vec<_> = (0..r.rank(l)).map(|j| th.values(&ind.iter().map(|row| row[j]).collect::<Vec<_>>())).collect();
                for i in 0..r.rank(h) {
                    let chi = r.irreducible(h, i);
                    let values = r.values(&chi);
                    let restricted: Vec<_> = (0..tl.num_classes()).map(|k| values[th.class_of(tl.class_rep(k))].clone()).collect();
                    for j in 0..r.rank(l) {
                        let psi = r.irreducible(l, j);
                        let lhs = th.inner_product(&induced[j], &values);
                        let rhs = tl.inner_product(&r.values(&psi), &restricted);
                        t.check(lhs.is_some() && lhs == rhs, || format!("{spec}: Frobenius reciprocity, L={l} H={h} chi={i} psi={j}"));
                    }
                }
            }
        }
        // res^H_L ind^H_K = sum over [L\H/K] ind con res
        for h in 0..n {
            for l in (0..n).filter(|&l| g.is_subgroup(l, h)) {
                for k in (0..n).filter(|&k| g.is_subgroup(k, h)) {
                    let lhs = matmul(&r.res_matrix(h, l), &r.ind_matrix(k, h), r.rank(k));
                    let mut rhs = vec![vec![0i64; r.rank(k)]; r.rank(l)];
                    for x in g.double_cosets_in(h, l, k) {
                        let s = g.intersect(l, g.conj(x, k));
                        let s_x = g.conj(g.inv(x), s);
                        let inner = matmul(&r.con_matrix(x, s_x), &r.res_matrix(k, s_x), r.rank(k));
                        let term = matmul(&r.ind_matrix(s, l), &inner, r.rank(k));
                        for (a, b) in rhs.iter_mut().zip(&term) {
                            for (u, v) in a.iter_mut().zip(b) {
                                *u += v;
                            }
                        }
                    }
                    t.check(lhs == rhs, || format!("{spec}: character Mackey formula L={l} K={k} H={h}"));
                }
            }
        }
    }
}

// ---- 2 ----

fn brauer_artin(t: &mut Tally) {
    for spec in PRESETS {
        let g = group(spec);
        let b = brauer_surjectivity(&g);
        t.check(b.cokernel.is_zero(), || format!("{spec}: Brauer cokernel {}", b.cokernel));
        let a = artin_rank(&g);
        t.check(a.full_rank && a.cokernel.rank == 0, || format!("{spec}: Artin rank {} of {}", a.rank, a.matrix.rows()));
    }
}

// ---- 3 ----

fn bouc_ranks(t: &mut Tally, seed: u64) {
    for spec in PRESETS {
        let g = group(spec);
        for green in both(&g) {
            let c = BoucCategory::new(&green);
            let xs = orbits(&g);
            for x in &xs {
                for y in &xs {
                    let (h, l) = (x.stabilizers()[0], y.stabilizers()[0]);
                    let expected: usize = g.double_cosets(h, l).iter().map(|&d| green.rank(g.intersect(h, g.conj(d, l)))).sum();
                    t.check(c.rank(x, y) == expected, || format!("{}: rank B({}, {})", label(&green), x.describe(), y.describe()));
                    for i in 0..c.rank(x, y) {
                        let a = c.basis_morphism(x, y, i);
                        let left = c.compose(&c.identity(y), &a).ok();
                        let right = c.compose(&a, &c.identity(x)).ok();
                        t.check(left.as_ref() == Some(&a) && right.as_ref() == Some(&a), || format!("{}: unit law at basis {i}", label(&green)));
                    }
                }
            }
        }
    }
    for spec in ["Z/2", "Z/4", "S3"] {
        let g = group(spec);
        for green in both(&g) {
            let c = BoucCategory::new(&green);
            let xs = orbits(&g);
            for x in &xs {
                for y in &xs {
                    for z in &xs {
                        for w in &xs {
                            for i in 0..c.rank(x, y) {
                                let a = c.basis_morphism(x, y, i);
                                for j in 0..c.rank(y, z) {
                                    let b = c.basis_morphism(y, z, j);
                                    let ba = c.compose(&b, &a).expect("composable");
                                    for k in 0..c.rank(z, w) {
                                        let d = c.basis_morphism(z, w, k);
                                        let left = c.compose(&d, &ba).ok();
                                        let right = c.compose(&d, &b).and_then(|db| c.compose(&db, &a)).ok();
                                        t.check(left.is_some() && left == right, || format!("{}: associativity on basis ({i},{j},{k})", label(&green)));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 3);
    for spec in ["D4", "Q8", "A4"] {
        let g = group(spec);
        for green in both(&g) {
            let c = BoucCategory::new(&green);
            let xs = orbits(&g);
            let random = |x: &GSet, y: &GSet, rng: &mut ChaCha8Rng| {
                let n = c.rank(x, y);
                c.morphism(x, y, (0..n).map(|_| int(rng.gen_range(-2..=2))).collect()).expect("element of the right size")
            };
            for trial in 0..200 {
                let pick: Vec<&GSet> = (0..4).map(|_| xs.choose(&mut rng).expect("orbits")).collect();
                let a = random(pick[0], pick[1], &mut rng);
                let b = random(pick[1], pick[2], &mut rng);
                let d = random(pick[2], pick[3], &mut rng);
                let left = c.compose(&b, &a).and_then(|ba| c.compose(&d, &ba)).ok();
                let right = c.compose(&d, &b).and_then(|db| c.compose(&db, &a)).ok();
                t.check(left.is_some() && left == right, || format!("{}: associativity, random triple {trial}", label(&green)));
            }
        }
    }
}

// ---- 4 ----

fn two_path(t: &mut Tally) {
    for spec in ["Z/2", "Z/3", "Z/4", "Z/2xZ/2", "S3", "Z/6"] {
        let g = group(spec);
        for green in both(&g) {
            let c = BoucCategory::new(&green);
            let xs = orbits(&g);
            let reps: Vec<MackeyModule> = xs.iter().map(|x| MackeyModule::representable(&green, x)).collect();
            for (xi, x) in xs.iter().enumerate() {
                for (yi, y) in xs.iter().enumerate() {
                    for i in 0..c.rank(x, y) {
                        let a = c.basis_morphism(x, y, i);
                        let phi_a = reps[yi].yoneda_map(x, &a.element);
                        t.check(c.module_map(&a).equals(&phi_a, &reps[yi]), || format!("{}: shift map of basis {i}", label(&green)));
                        for (zi, z) in xs.iter().enumerate() {
                            for j in 0..c.rank(y, z) {
                                let b = c.basis_morphism(y, z, j);
                                let composite = reps[zi].yoneda_map(y, &b.element).compose(&phi_a, &reps[zi]);
                                let via_modules = reps[zi].yoneda_element(x, &composite);
                                let via_spans = c.compose(&b, &a).map(|m| m.element).ok();
                                t.check(via_spans.as_ref() == Some(&via_modules), || {
                                    format!("{}: {} -> {} -> {} basis ({i},{j})", label(&green), xi, yi, zi)
                                });
                            }
                        }
                    }
                }
            }
        }
    }
}

// ---- 5 ----

fn yoneda(t: &mut Tally, seed: u64) {
    for spec in PRESETS {
        let g = group(spec);
        let greens: Vec<Arc<GreenFunctor>> = if g.order() <= 6 { both(&g).to_vec() } else { vec![GreenFunctor::representation(&g)] };
        for green in greens {
            let corpus = module_corpus(&green, seed);
            t.check(corpus.len() >= 10, || format!("{}: corpus of {} modules", label(&green), corpus.len()));
            for e in &corpus {
                let m = &e.module;
                for x in orbits(&g) {
                    let rx = MackeyModule::representable(&green, &x);
                    let hs = rx.hom(m);
                    let mx = m.evaluate(&x);
                    let at = || format!("{}: {} at {}", label(&green), e.name, x.describe());
                    t.check(hs.group.invariants() == mx.invariants(), || format!("{}: hom invariants", at()));
                    for k in 0..mx.ngens() {
                        let v = mx.generator(k);
                        let psi = m.yoneda_map(&x, &v);
                        t.check(psi.is_hom(&rx, m) && m.yoneda_element(&x, &psi) == mx.reduced(&v), || format!("{}: alpha(beta(e_{k}))", at()));
                    }
                    for (k, psi) in hs.gens.iter().enumerate() {
                        let back = m.yoneda_map(&x, &m.yoneda_element(&x, psi));
                        t.check(back.equals(psi, m), || format!("{}: beta(alpha(psi_{k}))", at()));
                    }
                }
            }
        }
    }
}

// ---- 6 ----

fn closure(t: &mut Tally, seed: u64) {
    let axioms = |t: &mut Tally, what: String, m: &MackeyModule| {
        let r = m.check_axioms();
        t.check(r.passed(), || format!("{what}: {r}"));
    };
    for spec in PRESETS {
        let g = group(spec);
        for green in both(&g) {
            let corpus = module_corpus(&green, seed);
            for e in &corpus {
                axioms(t, format!("{}: {}", label(&green), e.name), &e.module);
            }
            if g.order() > 6 {
                continue;
            }
            let reg = MackeyModule::regular(&green);
            let pick: Vec<&CorpusEntry> = corpus.iter().skip(1).step_by(4).collect();
            for a in &pick {
                for b in &pick {
                    let what = format!("{}: {} and {}", label(&green), a.name, b.name);
                    axioms(t, format!("{what}: box"), &box_product(&a.module, &b.module));
                    axioms(t, format!("{what}: internal hom"), &internal_hom(&a.module, &b.module));
                }
                let (mods, _) = tor_modules(&a.module, &torsion_module(&green, 2), 1, GeneratorOrder::TopDown);
                for (k, m) in mods.iter().enumerate() {
                    axioms(t, format!("{}: Tor_{k}({}, R/2R)", label(&green), a.name), m);
                }
                axioms(t, format!("{}: shift of {}", label(&green), a.name), &a.module.shift(&GSet::orbit_set(&g, g.trivial())));
            }
            for &k in &g.class_reps() {
                let emb = SubgroupEmbedding::new(&g, k);
                let small = functor(green.kind(), &emb.small);
                axioms(t, format!("{}: Res to {}", label(&green), g.describe_subgroup(k)), &restrict_module(&reg, &emb, &small));
                let q = torsion_module(&small, 2);
                axioms(t, format!("{}: Ind from {}", label(&green), g.describe_subgroup(k)), &induce_module(&q, &emb, &green));
            }
        }
    }
    // every structure matrix perturbed independently must be caught
    for spec in ["Z/2", "Z/3", "Z/4", "Z/2xZ/2", "S3"] {
        let g = group(spec);
        for green in both(&g) {
            for e in module_corpus(&green, seed).iter().filter(|e| !e.module.is_zero()).take(8) {
                let m = &e.module;
                for key in m.keys() {
                    let a = m.matrix(key);
                    if a.rows() == 0 || a.cols() == 0 {
                        continue;
                    }
                    let mut bad = m.clone();
                    bad.matrix_mut(key)[(0, 0)] += Int::ONE;
                    t.check(!bad.check_axioms().passed(), || format!("{}: {}: perturbing {key:?} went unnoticed", label(&green), e.name));
                }
            }
        }
    }
}

// ---- 7 ----

fn homological(t: &mut Tally, seed: u64) {
    for spec in ["Z/2", "Z/3", "Z/4", "Z/2xZ/2", "S3"] {
        let g = group(spec);
        for green in both(&g) {
            let name = label(&green);
            let corpus = module_corpus(&green, seed);
            for e in &corpus {
                let cert = resolve(&e.module, 2).certify();
                t.check(cert.is_exact(), || format!("{name}: resolution of {}: {cert:?}", e.name));
            }
            for a in corpus.iter().skip(1).step_by(3) {
                for s in [1u64, 2] {
                    let order = GeneratorOrder::Shuffled(seed ^ s);
                    let cert = resolve_with(&a.module, 2, order).certify();
                    t.check(cert.is_exact(), || format!("{name}: shuffled resolution of {}", a.name));
                    for b in corpus.iter().step_by(4) {
                        t.check(ext(&a.module, &b.module, 1).groups == ext_with(&a.module, &b.module, 1, order).groups, || {
                            format!("{name}: Ext({}, {}) depends on generators", a.name, b.name)
                        });
                        t.check(tor(&a.module, &b.module, 1).modules == tor_with(&a.module, &b.module, 1, order).modules, || {
                            format!("{name}: Tor({}, {}) depends on generators", a.name, b.name)
                        });
                    }
                }
            }
            for a in corpus.iter().step_by(2) {
                for b in corpus.iter().step_by(3) {
                    let e0 = ext(&a.module, &b.module, 0).groups[0].clone();
                    t.check(e0 == a.module.hom(&b.module).group.invariants(), || format!("{name}: Ext^0({}, {}) != hom", a.name, b.name));
                    let bx = box_product(&a.module, &b.module);
                    let t0 = tor(&a.module, &b.module, 0).modules[0].clone();
                    t.check(t0 == bx.class_invariants(), || format!("{name}: Tor_0({}, {}) != box", a.name, b.name));
                }
            }
            for a in corpus.iter().step_by(3) {
                for b in corpus.iter().skip(1).step_by(4) {
                    let bx = box_product(&a.module, &b.module);
                    for x in orbits(&g) {
                        let oracle = box_direct_oracle(&a.module, &b.module, &x).invariants();
                        t.check(oracle == bx.evaluate(&x).invariants(), || format!("{name}: {} box {} at {}", a.name, b.name, x.describe()));
                    }
                }
            }
            let reg = MackeyModule::regular(&green);
            let pick: Vec<&CorpusEntry> = corpus.iter().skip(2).step_by(3).collect();
            for a in &pick {
                t.check(box_product(&reg, &a.module).level_invariants() == a.module.level_invariants(), || format!("{name}: R box {}", a.name));
                t.check(box_product(&a.module, &reg).level_invariants() == a.module.level_invariants(), || format!("{name}: {} box R", a.name));
                for b in &pick {
                    let ab = box_product(&a.module, &b.module).level_invariants();
                    t.check(ab == box_product(&b.module, &a.module).level_invariants(), || format!("{name}: {} box {} not symmetric", a.name, b.name));
                }
            }
            for w in pick.windows(3).take(2) {
                let (a, b, c) = (&w[0].module, &w[1].module, &w[2].module);
                let left = box_product(&box_product(a, b), c).level_invariants();
                let right = box_product(a, &box_product(b, c)).level_invariants();
                t.check(left == right, || format!("{name}: associativity of box at {}, {}, {}", w[0].name, w[1].name, w[2].name));
            }
            let xs = orbits(&g);
            for x in &xs {
                for y in &xs {
                    let b = box_product(&MackeyModule::representable(&green, x), &MackeyModule::representable(&green, y));
                    let r = MackeyModule::representable(&green, &x.product(y).set);
                    t.check(b.level_invariants() == r.level_invariants(), || format!("{name}: R_{} box R_{}", x.describe(), y.describe()));
                }
            }
        }
    }
}

// ---- 8 ----

fn change_of_group(t: &mut Tally, seed: u64) {
    const PAIRS: usize = 50;
    for spec in PRESETS {
        let g = group(spec);
        let green = GreenFunctor::representation(&g);
        let big = module_corpus(&green, seed);
        for &k in g.class_reps().iter().filter(|&&k| k != g.whole() && g.index(k) <= 3) {
            let emb = SubgroupEmbedding::new(&g, k);
            let small = GreenFunctor::representation(&emb.small);
            let little = module_corpus(&small, seed ^ 1);
            let at = format!("{spec} > {}", g.describe_subgroup(k));
            let mut pairs: Vec<(usize, usize)> = (0..little.len()).flat_map(|i| (0..big.len()).map(move |j| (i, j))).collect();
            pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ k as u64));
            pairs.truncate(PAIRS);
            t.check(pairs.len() == PAIRS, || format!("{at}: only {} pairs", pairs.len()));
            for &(i, j) in &pairs {
                let (m, nn) = (&little[i], &big[j]);
                let [a, b, c, d] = induction_adjunction(&m.module, &emb, &nn.module);
                t.check(a == b, || format!("{at}: hom(Ind {}, {}) = {a} but hom({}, Res {}) = {b}", m.name, nn.name, m.name, nn.name));
                t.check(c == d, || format!("{at}: hom({}, Ind {}) = {c} but hom(Res {}, {}) = {d}", nn.name, m.name, nn.name, m.name));
                let r = frobenius_check(&m.module, &emb, &nn.module);
                t.check(r.holds(), || format!("{at}: Frobenius for {} and {}", m.name, nn.name));
            }
            for m in &little {
                let ind = induce_module(&m.module, &emb, &green);
                for h in 0..g.num_subgroups() {
                    t.check(ind.value(h).invariants() == induced_value_rank(&m.module, &emb, h), || {
                        format!("{at}: Ind {} at subgroup {h} against the double coset sum", m.name)
                    });
                }
            }
        }
    }
}

// ---- 9 ----

fn degeneration(t: &mut Tally, seed: u64) {
    for spec in ["Z/2", "Z/3", "Z/4", "S3", "Z/2xZ/2"] {
        let g = group(spec);
        let green = GreenFunctor::representation(&g);
        let corpus = module_corpus(&green, seed);
        let xs = orbits(&g);
        for (xi, x) in xs.iter().enumerate() {
            let rx = Arc::new(MackeyModule::representable(&green, x));
            let y = &xs[(xi + 1) % xs.len()];
            let ry = Arc::new(MackeyModule::representable(&green, y));
            let ka = GradedModule::new(rx.clone(), ry.clone());
            for w in corpus.chunks(2).take(4) {
                let kb = GradedModule::new(Arc::new(w[0].module.clone()), Arc::new(w[w.len() - 1].module.clone()));
                let at = format!("{spec}: kA = R_{} + R_{}[1], kB = {} + {}[1]", x.describe(), y.describe(), w[0].name, w[w.len() - 1].name);
                let page = uct_e2(&ka, &kb, 2);
                t.check(page.is_ok(), || format!("{at}: {:?}", page.as_ref().err()));
                if let Ok(page) = page {
                    t.check(page.concentrated_in_p0(), || format!("{at}: UCT page not concentrated in p = 0"));
                    for q in 0..2 {
                        let hom = (0..2).fold(Invariants::zero(), |acc, i| acc.sum(&ka.part(i).hom(kb.part((q + i) % 2)).group.invariants()));
                        t.check(page.cells[0][q] == hom, || format!("{at}: UCT E2^(0,{q}) = {} but hom gives {hom}", page.cells[0][q]));
                    }
                }
            }
        }
        for x in &xs {
            for y in &xs {
                let ka = GradedModule::even(Arc::new(MackeyModule::representable(&green, x)));
                let kb = GradedModule::even(Arc::new(MackeyModule::representable(&green, y)));
                let prod = MackeyModule::representable(&green, &x.product(y).set).class_invariants();
                let at = format!("{spec}: R_{} and R_{}", x.describe(), y.describe());
                match kunneth_e2(&ka, &kb, 2) {
                    Ok(page) => {
                        t.check(page.concentrated_in_p0(), || format!("{at}: Kunneth page not concentrated in p = 0"));
                        t.check(page.levels.as_ref().map(|l| &l[0][0]) == Some(&prod), || format!("{at}: Tor_0 differs from R_(XxY)"));
                    }
                    Err(e) => t.check(false, || format!("{at}: {e}")),
                }
            }
        }
    }
    let g = group("1");
    for green in both(&g) {
        let z = GradedModule::even(Arc::new(MackeyModule::regular(&green)));
        for n in 2..=6i64 {
            let zn = GradedModule::even(Arc::new(torsion_module(&green, n)));
            let page = uct_e2(&zn, &z, 3).expect("same group");
            let want = [Invariants::zero(), cyclic(n), Invariants::zero(), Invariants::zero()];
            t.check(
                (0..=3).all(|p| page.cells[p][0] == want[p] && page.cells[p][1].is_zero()),
                || format!("{}: UCT page of Z/{n} against Z", label(&green)),
            );
        }
        for (a, b) in [(2i64, 2i64), (2, 3), (4, 6), (6, 9), (5, 5)] {
            let za = GradedModule::even(Arc::new(torsion_module(&green, a)));
            let zb = GradedModule::even(Arc::new(torsion_module(&green, b)));
            let page = kunneth_e2(&za, &zb, 3).expect("same group");
            let d = cyclic(gcd(a, b));
            let want = [d.clone(), d, Invariants::zero(), Invariants::zero()];
            t.check(
                (0..=3).all(|p| page.cells[p][0] == want[p] && page.cells[p][1].is_zero()),
                || format!("{}: Kunneth page of Z/{a} and Z/{b}", label(&green)),
            );
        }
    }
}

// ---- 10 ----

fn invariants_json(v: &Invariants) -> Value {
    json!([v.rank, v.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>()])
}

fn list_json(v: &[Invariants]) -> Value {
    Value::Array(v.iter().map(invariants_json).collect())
}

/// Invariant outputs for one group, keyed by class index and corpus
/// position only.
pub fn fingerprint(g: &Arc<FiniteGroup>, seed: u64) -> Value {
    let mut out = serde_json::Map::new();
    let brauer = brauer_surjectivity(g);
    let artin = artin_rank(g);
    out.insert("brauer".into(), json!([invariants_json(&brauer.cokernel), brauer.rank]));
    out.insert("artin".into(), json!([invariants_json(&artin.cokernel), artin.rank]));
    for green in both(g) {
        let mut f = serde_json::Map::new();
        let c = BoucCategory::new(&green);
        let xs = orbits(g);
        let ranks: Vec<Vec<usize>> = xs.iter().map(|x| xs.iter().map(|y| c.rank(x, y)).collect()).collect();
        f.insert("bouc_ranks".into(), json!(ranks));
        let corpus = module_corpus(&green, seed);
        // corpus names mention subgroup generators, which depend on the conventions
        f.insert("modules".into(), Value::Array(corpus.iter().map(|e| list_json(&e.module.class_invariants())).collect()));
        let pick: Vec<(usize, &CorpusEntry)> = corpus.iter().enumerate().skip(1).step_by(3).collect();
        let mut pairs = Vec::new();
        for (i, a) in &pick {
            let res = resolve(&a.module, 2);
            for (j, b) in &pick {
                let e = ext_from(&res, &b.module, 1);
                let tr = tor_from(&res, &b.module, 1);
                pairs.push(json!({
                    "pair": [i, j],
                    "hom": invariants_json(&a.module.hom(&b.module).group.invariants()),
                    "ext": list_json(&e.groups),
                    "tor": tr.iter().map(|m| list_json(&m.class_invariants())).collect::<Vec<_>>(),
                }));
            }
        }
        f.insert("pairs".into(), Value::Array(pairs));
        let ka = GradedModule::new(Arc::new(pick[0].1.module.clone()), Arc::new(pick[1].1.module.clone()));
        let kb = GradedModule::new(Arc::new(pick[2].1.module.clone()), Arc::new(torsion_module(&green, 2)));
        for (key, page) in [("uct", uct_e2(&ka, &kb, 1)), ("kunneth", kunneth_e2(&ka, &kb, 1))] {
            let doc = page.and_then(|p| p.to_document());
            f.insert(key.into(), serde_json::to_value(doc.map_err(|e| e.to_string())).expect("serializable"));
        }
        out.insert(green.kind().name().into(), Value::Object(f));
    }
    Value::Object(out)
}

fn conventions(t: &mut Tally, config: &AcceptanceConfig) {
    for spec in ["Z/2", "Z/4", "Z/2xZ/2", "S3", "D4"] {
        let canonical = group(spec);
        let reference = serde_json::to_string(&fingerprint(&canonical, config.seed)).expect("json");
        for s in [config.convention_seed, config.convention_seed.wrapping_add(1)] {
            let shuffled = canonical.with_conventions(Conventions::seeded(s));
            let classes_moved = canonical.class_reps() != shuffled.class_reps();
            let other = serde_json::to_string(&fingerprint(&shuffled, config.seed)).expect("json");
            t.check(other == reference, || format!("{spec}: outputs differ under conventions seeded {s} (class representatives moved: {classes_moved})"));
        }
    }
}

