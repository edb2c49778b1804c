//! Projective resolutions by sums of representable modules.

use crate::bouc::{BoucCategory, BoucMorphism};
use crate::green::GreenFunctor;
use crate::group::{GMap, GSet, SubId};
use crate::mackey::{MackeyModule, ModuleHom};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::sync::Arc;
use zlinalg::{lattice_basis, Homology, Int, IntMatrix, Invariants};

/// Order in which subgroup classes are visited when choosing generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorOrder {
    /// Class representatives by decreasing order, ties by index.
    TopDown,
    /// A permutation of the class representatives drawn from the seed.
    Shuffled(u64),
}

impl GeneratorOrder {
    pub fn classes(self, green: &GreenFunctor) -> Vec<SubId> {
        let g = green.group();
        let mut reps = g.class_reps();
        reps.sort_by_key(|&h| (std::cmp::Reverse(g.sub_order(h)), h));
        if let GeneratorOrder::Shuffled(seed) = self {
            reps.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        reps
    }
}

/// Levelwise images, at the class representatives, of the Yoneda maps
/// `R_{G/H} -> M` of a set of elements, and a lattice basis of their sum
/// (with the relations of `M`) per level.
struct Span<'a> {
    m: &'a MackeyModule,
    reps: Vec<SubId>,
    images: Vec<Vec<IntMatrix>>,
    levels: Vec<IntMatrix>,
    basis: HashMap<SubId, Vec<Vec<IntMatrix>>>,
}

impl<'a> Span<'a> {
    fn new(m: &'a MackeyModule) -> Span<'a> {
        let reps = m.group().class_reps();
        let levels = reps.iter().map(|&k| m.value(k).relation_matrix()).collect();
        Span {
            m,
            reps,
            images: Vec::new(),
            levels,
            basis: HashMap::new(),
        }
    }

    /// Image of the Yoneda map of `e` in `M[H]`, combined from the images
    /// of the basis elements.
    fn image(&mut self, h: SubId, e: &[Int]) -> Vec<IntMatrix> {
        let m = self.m;
        let basis = self.basis.entry(h).or_insert_with(|| {
            let x = GSet::orbit_set(m.group(), h);
            let v = m.value(h);
            (0..v.ngens())
                .map(|j| {
                    let phi = m.yoneda_map(&x, &v.generator(j));
                    self.reps.iter().map(|&k| phi.level(k).clone()).collect()
                })
                .collect()
        });
        (0..self.reps.len())
            .map(|k| {
                let mut out = IntMatrix::zeros(basis[0][k].rows(), basis[0][k].cols());
                for (c, b) in e.iter().zip(basis.iter()) {
                    if !c.is_zero() {
                        out = out.add(&b[k].scale(c));
                    }
                }
                m.value(self.reps[k]).reduced_map(&out)
            })
            .collect()
    }

    fn push(&mut self, img: Vec<IntMatrix>) {
        for (l, x) in self.levels.iter_mut().zip(&img) {
            *l = lattice_basis(&l.hstack(x));
        }
        self.images.push(img);
    }

    /// What `M` lacks beyond a span given per level, summed over the
    /// levelwise quotients: free rank, number of torsion summands, and
    /// decimal length of the torsion coefficients.
    fn deficit(&self, level: impl Fn(usize) -> IntMatrix) -> (usize, usize, usize) {
        let mut out = (0, 0, 0);
        for (i, &h) in self.reps.iter().enumerate() {
            let q = self.m.value(h).cokernel(&level(i)).group;
            out.0 += q.free_rank();
            let torsion: Vec<_> = q.moduli().iter().filter(|d| !d.is_zero()).collect();
            out.1 += torsion.len();
            out.2 += torsion.iter().map(|d| d.to_string().len()).sum::<usize>();
        }
        out
    }
}

/// Generators `(H, m)` of `m`, `H` a class representative. Classes are
/// visited in `order`; while `M[H]` is not covered, the candidate (a basis
/// element of `M[H]` or a lift of a generator of the uncovered quotient)
/// leaving the smallest deficit is added. Redundant generators are then
/// dropped in the order they were chosen.
pub fn choose_generators(m: &MackeyModule, order: GeneratorOrder) -> Vec<(SubId, Vec<Int>)> {
    let mut gens: Vec<(SubId, Vec<Int>)> = Vec::new();
    let mut span = Span::new(m);
    for h in order.classes(m.green()) {
        let v = m.value(h);
        let i = span.reps.iter().position(|&k| k == h).expect("class representative");
        loop {
            let pres = v.cokernel(&span.levels[i]);
            if pres.group.ngens() == 0 {
                break;
            }
            let mut cands: Vec<Vec<Int>> = (0..v.ngens())
                .map(|j| v.generator(j))
                .filter(|e| !pres.group.is_zero_element(&pres.project(e)))
                .collect();
            for j in 0..pres.group.ngens() {
                let c = v.reduced(&pres.section.col(j));
                if !cands.contains(&c) {
                    cands.push(c);
                }
            }
            let mut best: Option<((usize, usize, usize), Vec<Int>, Vec<IntMatrix>)> = None;
            for c in cands {
                let img = span.image(h, &c);
                let score = span.deficit(|k| span.levels[k].hstack(&img[k]));
                if best.as_ref().map_or(true, |b| score < b.0) {
                    best = Some((score, c, img));
                }
            }
            let (_, c, img) = best.expect("some candidate is uncovered");
            gens.push((h, c));
            span.push(img);
        }
    }
    // suffix[j]: span of images j.. per level; prefix: kept images before j
    let n = gens.len();
    let rel: Vec<IntMatrix> = span.reps.iter().map(|&k| m.value(k).relation_matrix()).collect();
    let mut suffix = vec![rel.clone(); n + 1];
    for j in (0..n).rev() {
        suffix[j] = (0..rel.len()).map(|k| lattice_basis(&suffix[j + 1][k].hstack(&span.images[j][k]))).collect();
    }
    let mut prefix = rel;
    let mut keep = vec![true; n];
    for j in 0..n {
        if span.deficit(|k| prefix[k].hstack(&suffix[j + 1][k])) == (0, 0, 0) {
            keep[j] = false;
        } else {
            for k in 0..prefix.len() {
                prefix[k] = lattice_basis(&prefix[k].hstack(&span.images[j][k]));
            }
        }
    }
    let mut keep = keep.into_iter();
    gens.retain(|_| keep.next().unwrap());
    gens
}

/// The G-set `X` with one orbit `G/H` per generator.
fn generator_set(green: &GreenFunctor, gens: &[(SubId, Vec<Int>)]) -> GSet {
    let hs: Vec<SubId> = gens.iter().map(|(h, _)| *h).collect();
    GSet::from_orbits(green.group(), &hs)
}

/// The isomorphism `sum_i (G/S_i x Y) -> X x Y` for `X = sum_i G/S_i`.
pub fn orbitwise_product(x: &GSet, y: &GSet) -> GMap {
    let g = x.group();
    let xy = x.product(y);
    let parts: Vec<_> = x.stabilizers().iter().map(|&s| GSet::orbit_set(g, s).product(y)).collect();
    let stabs: Vec<SubId> = parts.iter().flat_map(|p| p.set.stabilizers().to_vec()).collect();
    let u = GSet::from_orbits(g, &stabs);
    let mut images = Vec::with_capacity(u.len());
    for (o, p) in x.orbits().zip(&parts) {
        for z in 0..p.set.len() {
            images.push(xy.pair(o.offset + p.left.image(z), p.right.image(z)) as u32);
        }
    }
    GMap::new(&u, &xy.set, images).expect("orbitwise product map")
}

/// The element of `R(X x Y)` whose module map `R_X -> R_Y` is the Yoneda
/// map of `e` in `R_Y(X)`.
pub fn span_from_element(green: &GreenFunctor, x: &GSet, y: &GSet, e: &[Int]) -> Vec<Int> {
    green.covariant(&orbitwise_product(x, y)).mul_vec(e)
}

/// A resolution `... -> R_{X_1} -> R_{X_0} -> M -> 0`.
pub struct Resolution {
    pub module: MackeyModule,
    /// `X_0, X_1, ...`.
    pub objects: Vec<GSet>,
    /// The element of `M(X_0)` defining the augmentation.
    pub augmentation: Vec<Int>,
    /// `d_k: X_k -> X_{k-1}` at index `k - 1`.
    pub differentials: Vec<BoucMorphism>,
    /// Whether the last syzygy was found to be zero.
    pub complete: bool,
    projectives: Vec<MackeyModule>,
    maps: Vec<ModuleHom>,
    epsilon: ModuleHom,
}

impl Resolution {
    /// Index of the last object; the projective dimension when `complete`.
    pub fn length(&self) -> usize {
        self.objects.len().saturating_sub(1)
    }

    /// `R_{X_k}`.
    pub fn projective(&self, k: usize) -> &MackeyModule {
        &self.projectives[k]
    }

    /// `d_k` as a module map `R_{X_k} -> R_{X_{k-1}}`, `k >= 1`.
    pub fn module_map(&self, k: usize) -> &ModuleHom {
        &self.maps[k - 1]
    }

    pub fn augmentation_map(&self) -> &ModuleHom {
        &self.epsilon
    }

    pub fn green(&self) -> &Arc<GreenFunctor> {
        self.module.green()
    }

    /// Orbit stabilizers of `X_k`, per position.
    pub fn summands(&self, k: usize) -> &[SubId] {
        self.objects[k].stabilizers()
    }

    /// Exactness at every class representative and `d o d = 0` through
    /// composition of spans.
    pub fn certify(&self) -> Certificate {
        let g = self.module.group();
        let cat = BoucCategory::new(self.green());
        let mut d_squared_zero = match self.maps.first() {
            Some(d1) => self.epsilon.compose(d1, &self.module).is_zero(&self.module),
            None => true,
        };
        for k in 2..=self.differentials.len() {
            let dd = cat
                .compose(&self.differentials[k - 2], &self.differentials[k - 1])
                .expect("consecutive differentials compose");
            d_squared_zero &= dd.element.iter().all(|c| c.is_zero());
        }
        let n = self.objects.len();
        let top = if self.complete { n } else { n.saturating_sub(1) };
        let levels = g
            .class_reps()
            .into_iter()
            .map(|h| {
                let mv = self.module.value(h);
                let surjective = n == 0 && mv.is_trivial() || n > 0 && mv.cokernel(self.epsilon.level(h)).group.is_trivial();
                let homology = (0..top)
                    .map(|k| {
                        let b = self.projectives[k].value(h);
                        let (c, out) = if k == 0 {
                            (mv, self.epsilon.level(h).clone())
                        } else {
                            (self.projectives[k - 1].value(h), self.maps[k - 1].level(h).clone())
                        };
                        let inc = if k + 1 < n {
                            self.maps[k].level(h).clone()
                        } else {
                            IntMatrix::zeros(b.ngens(), 0)
                        };
                        Homology::new(b, c, &inc, &out).group.invariants()
                    })
                    .collect();
                LevelCertificate {
                    subgroup: h,
                    surjective,
                    homology,
                }
            })
            .collect();
        Certificate { d_squared_zero, levels }
    }
}

/// Homology of the augmented complex at one class representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCertificate {
    pub subgroup: SubId,
    pub surjective: bool,
    /// Homology at `R_{X_k}[H]` for each certified `k`.
    pub homology: Vec<Invariants>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub d_squared_zero: bool,
    pub levels: Vec<LevelCertificate>,
}

impl Certificate {
    pub fn is_exact(&self) -> bool {
        self.d_squared_zero && self.levels.iter().all(|l| l.surjective && l.homology.iter().all(Invariants::is_zero))
    }
}

/// Resolve `m` through `X_0, ..., X_{n_max}` with the default order.
pub fn resolve(m: &MackeyModule, n_max: usize) -> Resolution {
    resolve_with(m, n_max, GeneratorOrder::TopDown)
}

pub fn resolve_with(m: &MackeyModule, n_max: usize, order: GeneratorOrder) -> Resolution {
    let green = m.green().clone();
    let cat = BoucCategory::new(&green);
    let mut res = Resolution {
        module: m.clone(),
        objects: Vec::new(),
        augmentation: Vec::new(),
        differentials: Vec::new(),
        complete: false,
        projectives: Vec::new(),
        maps: Vec::new(),
        epsilon: ModuleHom::zero(&MackeyModule::zero(&green), m),
    };
    if m.is_zero() {
        res.complete = true;
        return res;
    }
    let gens = choose_generators(m, order);
    let x0 = generator_set(&green, &gens);
    res.augmentation = gens.iter().flat_map(|(_, v)| v.clone()).collect();
    res.epsilon = m.yoneda_map(&x0, &res.augmentation);
    res.projectives.push(MackeyModule::representable(&green, &x0));
    res.objects.push(x0);
    loop {
        let k = res.objects.len();
        let prev = &res.projectives[k - 1];
        let (target, map) = if k == 1 {
            (m, &res.epsilon)
        } else {
            (&res.projectives[k - 2], &res.maps[k - 2])
        };
        let (syz, incl) = prev.kernel(target, map);
        if syz.is_zero() {
            res.complete = true;
            break;
        }
        if k > n_max {
            break;
        }
        let gens = choose_generators(&syz, order);
        let xk = generator_set(&green, &gens);
        let e: Vec<Int> = gens.iter().flat_map(|(h, v)| incl.level(*h).mul_vec(v)).collect();
        let a = span_from_element(&green, &xk, &res.objects[k - 1], &e);
        let d = cat.morphism(&xk, &res.objects[k - 1], a).expect("span has the right length");
        res.maps.push(cat.module_map(&d));
        res.differentials.push(d);
        res.projectives.push(MackeyModule::representable(&green, &xk));
        res.objects.push(xk);
    }
    res
}
