use specseq::corpus::module_corpus;
use specseq::green::{GreenFunctor, GreenKind};
use specseq::group::{FiniteGroup, GSet};
use specseq::mackey::json::{export_module, import_module};
use specseq::mackey::{
    induce_module, induced_value_rank, restrict_module, GradedModule, MackeyModule, ModuleHom, ModuleKey, SubgroupEmbedding,
};
use std::sync::Arc;
use zlinalg::{Int, Invariants};

const SMALL: &[&str] = &["Z/2", "Z/3", "Z/4", "S3", "Z/2xZ/2"];

fn greens(spec: &str) -> Vec<Arc<GreenFunctor>> {
    let g = FiniteGroup::from_spec(spec).unwrap();
    vec![GreenFunctor::representation(&g), GreenFunctor::burnside(&g)]
}

fn same_kind(kind: GreenKind, g: &Arc<FiniteGroup>) -> Arc<GreenFunctor> {
    match kind {
        GreenKind::Representation => GreenFunctor::representation(g),
        GreenKind::Burnside => GreenFunctor::burnside(g),
    }
}

fn orbits(g: &Arc<FiniteGroup>) -> Vec<GSet> {
    g.class_reps().iter().map(|&h| GSet::orbit_set(g, h)).collect()
}

#[test]
fn corpus_passes_axioms() {
    for spec in SMALL {
        for green in greens(spec) {
            let corpus = module_corpus(&green, 1);
            assert!(corpus.len() >= 10);
            for e in &corpus {
                let r = e.module.check_axioms();
                assert!(r.passed(), "{spec} {}: {r}", e.name);
            }
        }
    }
}

#[test]
fn mutation_battery_is_detected() {
    for spec in ["Z/2", "Z/4", "S3"] {
        for green in greens(spec) {
            for e in module_corpus(&green, 2).into_iter().take(6) {
                let m = &e.module;
                for key in m.keys() {
                    let a = m.matrix(key);
                    if a.rows() == 0 || a.cols() == 0 {
                        continue;
                    }
                    let mut bad = m.clone();
                    bad.matrix_mut(key)[(0, 0)] += Int::ONE;
                    assert!(!bad.check_axioms().passed(), "{spec} {}: perturbing {key:?} went unnoticed", e.name);
                }
            }
        }
    }
}

#[test]
fn negated_induction_fails_mackey_formula() {
    let g = FiniteGroup::from_spec("S3").unwrap();
    let green = GreenFunctor::representation(&g);
    let mut m = MackeyModule::regular(&green);
    let key = ModuleKey::Map(specseq::functor::MapKey::Ind(g.trivial(), g.whole()));
    let neg = m.matrix(key).neg();
    *m.matrix_mut(key) = neg;
    let r = m.check_axioms();
    assert!(r.failures.iter().any(|f| f.contains("Mackey formula")), "{r}");
}

#[test]
fn yoneda_both_directions() {
    for spec in SMALL {
        for green in greens(spec) {
            let g = green.group().clone();
            for e in module_corpus(&green, 3) {
                let m = &e.module;
                for x in orbits(&g) {
                    let rx = MackeyModule::representable(&green, &x);
                    let hs = rx.hom(m);
                    let mx = m.evaluate(&x);
                    assert_eq!(hs.group.invariants(), mx.invariants(), "{spec} {} at {}", e.name, x.describe());
                    for k in 0..mx.ngens() {
                        let gen = mx.generator(k);
                        let psi = m.yoneda_map(&x, &gen);
                        assert!(psi.is_hom(&rx, m), "{spec} {}: beta not a hom", e.name);
                        assert_eq!(m.yoneda_element(&x, &psi), mx.reduced(&gen), "{spec} {}", e.name);
                    }
                    for psi in &hs.gens {
                        let back = m.yoneda_map(&x, &m.yoneda_element(&x, psi));
                        assert!(back.equals(psi, m), "{spec} {}: beta(alpha(psi)) != psi", e.name);
                    }
                }
            }
        }
    }
}

#[test]
fn representable_ranks() {
    let g = FiniteGroup::from_spec("Z/2").unwrap();
    let green = GreenFunctor::representation(&g);
    let m = MackeyModule::representable(&green, &GSet::orbit_set(&g, g.trivial()));
    assert_eq!(m.value(g.trivial()).ngens(), 2);
    assert_eq!(m.value(g.whole()).ngens(), 1);
    let unit = MackeyModule::representable(&green, &GSet::point(&g));
    assert_eq!(unit.level_invariants(), MackeyModule::regular(&green).level_invariants());

    for spec in SMALL {
        for green in greens(spec) {
            let g = green.group().clone();
            for &h in &g.class_reps() {
                let m = MackeyModule::representable(&green, &GSet::orbit_set(&g, h));
                for l in 0..g.num_subgroups() {
                    let expected: usize = g
                        .double_cosets(l, h)
                        .iter()
                        .map(|&x| green.rank(g.intersect(l, g.conj(x, h))))
                        .sum();
                    assert_eq!(m.value(l).ngens(), expected, "{spec}");
                }
            }
        }
    }
}

#[test]
fn representable_of_union_is_sum() {
    for green in greens("S3") {
        let g = green.group().clone();
        let xs = orbits(&g);
        let u = xs[0].disjoint_union(&xs[1]);
        let a = MackeyModule::representable(&green, &u);
        let b = MackeyModule::representable(&green, &xs[0]).direct_sum(&MackeyModule::representable(&green, &xs[1]));
        assert_eq!(a.level_invariants(), b.level_invariants());
    }
}

#[test]
fn z2_counit_cokernel() {
    let g = FiniteGroup::from_spec("Z/2").unwrap();
    let green = GreenFunctor::representation(&g);
    let r = MackeyModule::regular(&green);
    let free = GSet::orbit_set(&g, g.trivial());
    let counit = r.yoneda_map(&free, &green.unit_at(&free));
    let (q, proj) = r.cokernel(&counit);
    assert!(q.check_axioms().passed());
    assert!(proj.is_hom(&r, &q));
    assert_eq!(q.value(g.trivial()).invariants(), Invariants::zero());
    assert_eq!(q.value(g.whole()).invariants(), Invariants::free(1));
}

#[test]
fn trivial_constructions() {
    for green in greens("S3") {
        let r = MackeyModule::regular(&green);
        let id = ModuleHom::identity(&r);
        assert!(r.kernel(&r, &id).0.is_zero());
        let zero = MackeyModule::zero(&green);
        let z = ModuleHom::zero(&zero, &r);
        assert_eq!(r.cokernel(&z).0.level_invariants(), r.level_invariants());
        assert!(zero.hom(&r).group.is_trivial());
        let g = green.group();
        assert_eq!(r.hom(&r).group.invariants(), r.value(g.whole()).invariants());
    }
}

#[test]
fn module_file_round_trip() {
    for spec in ["Z/2", "S3", "Z/2xZ/2"] {
        for green in greens(spec) {
            for e in module_corpus(&green, 4) {
                let gm = GradedModule::even(Arc::new(e.module.clone()));
                let doc = export_module(&gm).unwrap();
                let text = serde_json::to_string(&doc).unwrap();
                let back: specseq::mackey::json::ModuleDocument = serde_json::from_str(&text).unwrap();
                let m2 = import_module(&green, &back).unwrap();
                assert_eq!(m2.part(0).level_invariants(), e.module.level_invariants(), "{spec} {}", e.name);
                assert_eq!(export_module(&m2).unwrap(), doc, "{spec} {}", e.name);
            }
        }
    }
}

#[test]
fn module_file_rejects_broken_data() {
    let g = FiniteGroup::from_spec("S3").unwrap();
    let green = GreenFunctor::representation(&g);
    let gm = GradedModule::even(Arc::new(MackeyModule::regular(&green)));
    let doc = export_module(&gm).unwrap();
    let mut bad = doc.clone();
    let i = bad.degrees[0].maps.iter().position(|m| m.kind == "ind" && m.source != m.target).unwrap();
    bad.degrees[0].maps[i].matrix[0][0] += 1;
    let err = import_module(&green, &bad).unwrap_err();
    assert!(err.contains("axiom"), "{err}");
    let mut bad = doc.clone();
    bad.format_version = 99;
    assert!(import_module(&green, &bad).is_err());
    let mut bad = doc;
    bad.degrees[0].maps.retain(|m| m.kind != "res");
    assert!(import_module(&green, &bad).unwrap_err().contains("missing"));
}

#[test]
fn induction_and_restriction() {
    for spec in ["Z/4", "S3", "Z/2xZ/2"] {
        for green in greens(spec) {
            let g = green.group().clone();
            for &k in &g.class_reps() {
                let emb = SubgroupEmbedding::new(&g, k);
                let small = same_kind(green.kind(), &emb.small);
                let whole = SubgroupEmbedding::new(&g, g.whole());
                let same = restrict_module(&MackeyModule::regular(&green), &whole, &same_kind(green.kind(), &whole.small));
                assert_eq!(same.level_invariants(), MackeyModule::regular(&green).level_invariants());
                for e in module_corpus(&small, 5).into_iter().take(8) {
                    let ind = induce_module(&e.module, &emb, &green);
                    let r = ind.check_axioms();
                    assert!(r.passed(), "{spec} Ind from {} of {}: {r}", g.describe_subgroup(k), e.name);
                    for h in 0..g.num_subgroups() {
                        assert_eq!(ind.value(h).invariants(), induced_value_rank(&e.module, &emb, h), "{spec}");
                    }
                    for x in orbits(&g) {
                        let rx = emb.restrict_gset(&x).0;
                        assert_eq!(ind.evaluate(&x).invariants(), e.module.evaluate(&rx).invariants());
                    }
                }
                for e in module_corpus(&green, 6).into_iter().take(6) {
                    let res = restrict_module(&e.module, &emb, &small);
                    let r = res.check_axioms();
                    assert!(r.passed(), "{spec} Res to {} of {}: {r}", g.describe_subgroup(k), e.name);
                }
            }
        }
    }
}

#[test]
fn induction_of_regular_is_representable() {
    for green in greens("S3") {
        let g = green.group().clone();
        for &k in &g.class_reps() {
            let emb = SubgroupEmbedding::new(&g, k);
            let small = same_kind(green.kind(), &emb.small);
            let ind = induce_module(&MackeyModule::regular(&small), &emb, &green);
            let rep = MackeyModule::representable(&green, &GSet::orbit_set(&g, k));
            assert_eq!(ind.level_invariants(), rep.level_invariants());
        }
    }
}

#[test]
fn kernel_cokernel_image_are_exact() {
    for spec in ["Z/2", "S3"] {
        for green in greens(spec) {
            let g = green.group().clone();
            let xs = orbits(&g);
            let reg = MackeyModule::regular(&green);
            for x in &xs {
                for y in &xs {
                    let n = green.evaluate(&x.product(y).set).ngens();
                    for b in 0..n {
                        let mut a = vec![Int::ZERO; n];
                        a[b] = Int::ONE;
                        let phi = specseq::mackey::shift_map(&reg, x, y, &a);
                        let rx = MackeyModule::representable(&green, x);
                        let ry = MackeyModule::representable(&green, y);
                        assert!(phi.is_hom(&rx, &ry));
                        let (k, inc) = rx.kernel(&ry, &phi);
                        let (im, _) = ry.image(&phi);
                        let (c, p) = ry.cokernel(&phi);
                        for m in [&k, &im, &c] {
                            assert!(m.check_axioms().passed());
                        }
                        assert!(inc.is_hom(&k, &rx) && p.is_hom(&ry, &c));
                        assert!(phi.compose(&inc, &ry).is_zero(&ry));
                        assert!(p.compose(&phi, &c).is_zero(&c));
                        // rank additivity over Q at every level
                        for h in 0..g.num_subgroups() {
                            let rk = |m: &MackeyModule| m.value(h).free_rank();
                            assert_eq!(rk(&rx), rk(&k) + rk(&im));
                            assert_eq!(rk(&ry), rk(&im) + rk(&c));
                        }
                    }
                }
            }
        }
    }
}
