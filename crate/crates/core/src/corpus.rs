//! A seeded corpus of modules over a Green functor: representables, zero,
//! kernels, cokernels, images, generated submodules, torsion quotients and
//! induced modules.

use crate::green::GreenFunctor;
use crate::group::GSet;
use crate::mackey::{induce_module, shift_map, MackeyModule, SubgroupEmbedding};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;
use zlinalg::{int, Int};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// A named module of the corpus.
pub struct CorpusEntry {
    pub name: String,
    pub module: MackeyModule,
}

fn random_vec(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<Int> {
    (0..n).map(|_| int(rng.gen_range(-bound..=bound))).collect()
}

/// Random element of `R(X x Y)`, for a random representable map `R_X -> R_Y`.
pub fn random_span(green: &GreenFunctor, x: &GSet, y: &GSet, rng: &mut ChaCha8Rng) -> Vec<Int> {
    let n = green.evaluate(&x.product(y).set).ngens();
    random_vec(rng, n, 2)
}

/// At least ten modules; the list depends only on the group, the functor
/// and the seed.
pub fn module_corpus(green: &Arc<GreenFunctor>, seed: u64) -> Vec<CorpusEntry> {
    let g = green.group().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut push = |name: String, module: MackeyModule| out.push(CorpusEntry { name, module });
    let reps = g.class_reps();
    let regular = MackeyModule::regular(green);
    let free = GSet::orbit_set(&g, g.trivial());
    let pt = GSet::point(&g);

    push("zero".into(), MackeyModule::zero(green));
    push("R".into(), regular.clone());
    for &h in reps.iter().filter(|&&h| h != g.whole()) {
        let x = GSet::orbit_set(&g, h);
        push(format!("R_{}", x.describe()), MackeyModule::representable(green, &x));
    }
    let mixed = free.disjoint_union(&pt);
    push(format!("R_{}", mixed.describe()), MackeyModule::representable(green, &mixed));

    // counit R_{G/1} -> R and its kernel, cokernel and image
    let r_free = MackeyModule::representable(green, &free);
    let counit = regular.yoneda_map(&free, &green.unit_at(&free));
    push("coker(R_G/1 -> R)".into(), regular.cokernel(&counit).0);
    push("ker(R_G/1 -> R)".into(), r_free.kernel(&regular, &counit).0);
    push("im(R_G/1 -> R)".into(), regular.image(&counit).0);

    // torsion: R / 2R and R / 3R
    for n in [2, 3] {
        let a: Vec<Int> = green.unit(g.whole()).iter().map(|c| c * int(n)).collect();
        let mul = shift_map(&regular, &pt, &pt, &a);
        push(format!("R/{n}R"), regular.cokernel(&mul).0);
    }

    // a random representable map between two orbits
    let x = GSet::orbit_set(&g, reps[rng.gen_range(0..reps.len())]);
    let y = GSet::orbit_set(&g, reps[rng.gen_range(0..reps.len())]);
    let a = random_span(green, &x, &y, &mut rng);
    let rx = MackeyModule::representable(green, &x);
    let ry = MackeyModule::representable(green, &y);
    let phi = shift_map(&regular, &x, &y, &a);
    push(format!("coker(random R_{} -> R_{})", x.describe(), y.describe()), ry.cokernel(&phi).0);
    push(format!("ker(random R_{} -> R_{})", x.describe(), y.describe()), rx.kernel(&ry, &phi).0);

    // generated by a random element at the trivial subgroup
    let v = random_vec(&mut rng, regular.value(g.trivial()).ngens(), 3);
    push("<random element of R[1]>".into(), regular.submodule_generated(&[(g.trivial(), v)]).0);

    // induced from a proper subgroup
    if let Some(&k) = reps.iter().rev().find(|&&k| k != g.whole() && k != g.trivial()).or(reps.first()) {
        let emb = SubgroupEmbedding::new(&g, k);
        let small = match green.kind() {
            crate::green::GreenKind::Representation => GreenFunctor::representation(&emb.small),
            crate::green::GreenKind::Burnside => GreenFunctor::burnside(&emb.small),
        };
        let sreg = MackeyModule::regular(&small);
        push(format!("Ind from {} of R", g.describe_subgroup(k)), induce_module(&sreg, &emb, green));
        let two: Vec<Int> = small.unit(emb.small.whole()).iter().map(|c| c * int(2)).collect();
        let spt = GSet::point(&emb.small);
        let q = sreg.cokernel(&shift_map(&sreg, &spt, &spt, &two)).0;
        push(format!("Ind from {} of R/2R", g.describe_subgroup(k)), induce_module(&q, &emb, green));
    }
    out
}
