use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use specseq::corpus::{module_corpus, random_span};
use specseq::green::GreenFunctor;
use specseq::group::{FiniteGroup, GSet};
use specseq::homalg::{
    box_direct_oracle, box_product, ext, ext_with, frobenius_check, graded_ext, graded_tor, induction_adjunction,
    internal_hom, resolve, resolve_with, span_from_element, tor, tor_with, ExtComplex, GeneratorOrder,
};
use specseq::mackey::{shift_map, GradedModule, MackeyModule, SubgroupEmbedding};
use std::sync::Arc;
use zlinalg::{int, Int, Invariants};

fn greens(spec: &str) -> Vec<Arc<GreenFunctor>> {
    let g = FiniteGroup::from_spec(spec).unwrap();
    vec![GreenFunctor::representation(&g), GreenFunctor::burnside(&g)]
}

fn orbits(g: &Arc<FiniteGroup>) -> Vec<GSet> {
    g.class_reps().iter().map(|&h| GSet::orbit_set(g, h)).collect()
}

/// `R / nR`.
fn torsion(green: &Arc<GreenFunctor>, n: i64) -> MackeyModule {
    let g = green.group();
    let reg = MackeyModule::regular(green);
    let pt = GSet::point(g);
    let a: Vec<Int> = green.unit(g.whole()).iter().map(|c| c * int(n)).collect();
    reg.cokernel(&shift_map(&reg, &pt, &pt, &a)).0
}

fn cyclic(n: u64) -> Invariants {
    Invariants {
        rank: 0,
        torsion: vec![Int::from(n)],
    }
}

#[test]
fn spans_from_elements_realize_yoneda_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for spec in ["Z/2", "S3"] {
        for green in greens(spec) {
            let g = green.group().clone();
            let xs = orbits(&g);
            let x = xs[0].disjoint_union(&xs[xs.len() - 1]).disjoint_union(&xs[1]);
            for y in &xs {
                let ry = MackeyModule::representable(&green, y);
                let e = random_span(&green, &x, y, &mut rng);
                let e = &e[..ry.evaluate(&x).ngens()];
                let a = span_from_element(&green, &x, y, e);
                let via_span = shift_map(&MackeyModule::regular(&green), &x, y, &a);
                assert!(via_span.equals(&ry.yoneda_map(&x, e), &ry), "{spec}");
            }
        }
    }
}

#[test]
fn resolutions_are_exact() {
    for spec in ["Z/2", "Z/3", "Z/4", "S3", "Z/2xZ/2"] {
        for green in greens(spec) {
            for e in module_corpus(&green, 11) {
                let res = resolve(&e.module, 2);
                let cert = res.certify();
                assert!(cert.is_exact(), "{spec} {}: {cert:?}", e.name);
            }
        }
    }
}

#[test]
fn trivial_resolutions() {
    for green in greens("S3") {
        let g = green.group().clone();
        for x in orbits(&g) {
            let res = resolve(&MackeyModule::representable(&green, &x), 3);
            assert!(res.complete);
            assert_eq!(res.length(), 0);
        }
        let res = resolve(&MackeyModule::zero(&green), 3);
        assert!(res.complete && res.objects.is_empty());
    }
}

#[test]
fn z2_cokernel_resolves_to_length_two() {
    let g = FiniteGroup::from_spec("Z/2").unwrap();
    let green = GreenFunctor::representation(&g);
    let reg = MackeyModule::regular(&green);
    let free = GSet::orbit_set(&g, g.trivial());
    let counit = reg.yoneda_map(&free, &green.unit_at(&free));
    let q = reg.cokernel(&counit).0;
    let res = resolve(&q, 2);
    assert!(res.length() >= 1);
    assert!(res.certify().is_exact());
}

#[test]
fn coboundaries_are_precomposition() {
    for spec in ["Z/2", "S3"] {
        for green in greens(spec) {
            let corpus = module_corpus(&green, 12);
            for e in corpus.iter().take(8) {
                let res = resolve(&e.module, 2);
                for target in corpus.iter().take(5) {
                    let n = &target.module;
                    let cx = ExtComplex::new(&res, n);
                    for (k, d) in res.differentials.iter().enumerate() {
                        let c = &cx.cochains[k];
                        for j in 0..c.ngens() {
                            let v = c.generator(j);
                            let psi = n.yoneda_map(&d.target, &v);
                            let composite = psi.compose(res.module_map(k + 1), n);
                            let expected = n.yoneda_element(&d.source, &composite);
                            let got = cx.cochains[k + 1].reduced(&cx.coboundaries[k].mul_vec(&v));
                            assert_eq!(got, expected, "{spec} {} into {}", e.name, target.name);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn ext0_is_hom_and_tor0_is_box() {
    for spec in ["Z/2", "Z/3", "S3"] {
        for green in greens(spec) {
            let corpus = module_corpus(&green, 13);
            for a in corpus.iter().step_by(2) {
                for b in corpus.iter().step_by(3) {
                    let e = ext(&a.module, &b.module, 0);
                    assert_eq!(e.groups[0], a.module.hom(&b.module).group.invariants(), "{spec} {} {}", a.name, b.name);
                    let t = tor(&a.module, &b.module, 0);
                    assert_eq!(t.modules[0], box_product(&a.module, &b.module).class_invariants());
                }
            }
        }
    }
}

#[test]
fn projectives_have_no_higher_ext_or_tor() {
    for green in greens("S3") {
        let g = green.group().clone();
        let corpus = module_corpus(&green, 14);
        for x in orbits(&g) {
            let p = MackeyModule::representable(&green, &x);
            for n in corpus.iter().take(8) {
                let e = ext(&p, &n.module, 2);
                assert_eq!(e.dimension, Some(0));
                assert!(e.groups[1..].iter().all(Invariants::is_zero));
                assert_eq!(e.groups[0], n.module.evaluate(&x).invariants());
                let t = tor(&n.module, &p, 2);
                assert!(t.modules[1..].iter().flatten().all(Invariants::is_zero), "{}", n.name);
            }
        }
    }
}

#[test]
fn trivial_group_is_classical() {
    let g = FiniteGroup::from_spec("1").unwrap();
    for green in [GreenFunctor::representation(&g), GreenFunctor::burnside(&g)] {
        let z = MackeyModule::regular(&green);
        for n in [2i64, 3, 4, 6] {
            let e = ext(&torsion(&green, n), &z, 3);
            assert_eq!(e.groups[0], Invariants::zero());
            assert_eq!(e.groups[1], cyclic(n as u64));
            assert!(e.groups[2..].iter().all(Invariants::is_zero));
            assert_eq!(e.dimension, Some(1));
        }
        for (a, b) in [(2i64, 2i64), (2, 3), (4, 6), (6, 9)] {
            let t = tor(&torsion(&green, a), &torsion(&green, b), 3);
            let d = num_gcd(a as u64, b as u64);
            let expected = if d == 1 { Invariants::zero() } else { cyclic(d) };
            assert_eq!(t.modules[0], vec![expected.clone()]);
            assert_eq!(t.modules[1], vec![expected]);
            assert!(t.modules[2..].iter().flatten().all(Invariants::is_zero));
        }
    }
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

#[test]
fn resolution_independence() {
    for spec in ["Z/2", "Z/4", "S3", "Z/2xZ/2"] {
        for green in greens(spec) {
            let corpus = module_corpus(&green, 15);
            for a in corpus.iter().skip(1).step_by(2) {
                for seed in [1u64, 2] {
                    let order = GeneratorOrder::Shuffled(seed);
                    let r = resolve_with(&a.module, 2, order);
                    assert!(r.certify().is_exact());
                    for b in corpus.iter().step_by(4) {
                        assert_eq!(ext(&a.module, &b.module, 1).groups, ext_with(&a.module, &b.module, 1, order).groups, "{spec} {}", a.name);
                        assert_eq!(tor(&a.module, &b.module, 1).modules, tor_with(&a.module, &b.module, 1, order).modules, "{spec} {}", a.name);
                    }
                }
            }
        }
    }
}

#[test]
fn box_agrees_with_the_coequalizer_oracle() {
    for spec in ["Z/2", "Z/3", "S3", "Z/2xZ/2"] {
        for green in greens(spec) {
            let g = green.group().clone();
            let corpus = module_corpus(&green, 16);
            for a in corpus.iter().step_by(3) {
                for b in corpus.iter().skip(1).step_by(4) {
                    let bx = box_product(&a.module, &b.module);
                    assert!(bx.check_axioms().passed());
                    for x in orbits(&g) {
                        let oracle = box_direct_oracle(&a.module, &b.module, &x);
                        assert_eq!(oracle.invariants(), bx.evaluate(&x).invariants(), "{spec} {} box {} at {}", a.name, b.name, x.describe());
                    }
                    assert!(box_direct_oracle(&a.module, &b.module, &GSet::empty(&g)).invariants().is_zero());
                }
            }
        }
    }
}

#[test]
fn box_unit_symmetry_associativity() {
    for spec in ["Z/2", "S3"] {
        for green in greens(spec) {
            let reg = MackeyModule::regular(&green);
            let corpus = module_corpus(&green, 17);
            let pick: Vec<_> = corpus.iter().skip(2).step_by(3).collect();
            for a in &pick {
                assert_eq!(box_product(&reg, &a.module).level_invariants(), a.module.level_invariants());
                assert_eq!(box_product(&a.module, &reg).level_invariants(), a.module.level_invariants());
                for b in &pick {
                    let ab = box_product(&a.module, &b.module);
                    assert_eq!(ab.level_invariants(), box_product(&b.module, &a.module).level_invariants());
                }
            }
            let (a, b, c) = (&pick[0].module, &pick[1].module, &pick[2].module);
            let left = box_product(&box_product(a, b), c);
            let right = box_product(a, &box_product(b, c));
            assert_eq!(left.level_invariants(), right.level_invariants(), "{spec}");
        }
    }
}

#[test]
fn box_of_representables() {
    for spec in ["Z/2", "Z/4", "S3"] {
        for green in greens(spec) {
            let g = green.group().clone();
            for x in orbits(&g) {
                for y in orbits(&g) {
                    let b = box_product(&MackeyModule::representable(&green, &x), &MackeyModule::representable(&green, &y));
                    let r = MackeyModule::representable(&green, &x.product(&y).set);
                    assert_eq!(b.level_invariants(), r.level_invariants(), "{spec}");
                }
            }
        }
    }
}

#[test]
fn tor_is_symmetric() {
    for spec in ["Z/2", "S3"] {
        for green in greens(spec) {
            let corpus = module_corpus(&green, 18);
            for a in corpus.iter().skip(1).step_by(3) {
                for b in corpus.iter().skip(2).step_by(3) {
                    assert_eq!(tor(&a.module, &b.module, 2).modules, tor(&b.module, &a.module, 2).modules, "{spec} {} {}", a.name, b.name);
                }
            }
        }
    }
}

#[test]
fn internal_hom_units_and_adjunction() {
    for spec in ["Z/2", "S3"] {
        for green in greens(spec) {
            let g = green.group().clone();
            let reg = MackeyModule::regular(&green);
            let corpus = module_corpus(&green, 19);
            for n in corpus.iter().take(6) {
                let ih = internal_hom(&reg, &n.module);
                assert!(ih.check_axioms().passed(), "{spec} {}", n.name);
                assert_eq!(ih.level_invariants(), n.module.level_invariants());
                for x in orbits(&g) {
                    let rx = MackeyModule::representable(&green, &x);
                    assert_eq!(internal_hom(&rx, &n.module).level_invariants(), n.module.shift(&x).level_invariants());
                }
            }
            let pick: Vec<_> = corpus.iter().skip(3).step_by(3).collect();
            for a in &pick {
                for b in &pick {
                    for c in corpus.iter().take(4) {
                        let lhs = box_product(&a.module, &b.module).hom(&c.module).group.invariants();
                        let ih = internal_hom(&b.module, &c.module);
                        assert!(ih.check_axioms().passed());
                        let rhs = a.module.hom(&ih).group.invariants();
                        assert_eq!(lhs, rhs, "{spec} {} {} {}", a.name, b.name, c.name);
                    }
                }
            }
        }
    }
}

#[test]
fn frobenius_and_induction_adjunction() {
    for spec in ["Z/4", "S3"] {
        for green in greens(spec) {
            let g = green.group().clone();
            for &k in g.class_reps().iter().filter(|&&k| k != g.trivial()) {
                let emb = SubgroupEmbedding::new(&g, k);
                let small = match green.kind() {
                    specseq::green::GreenKind::Representation => GreenFunctor::representation(&emb.small),
                    specseq::green::GreenKind::Burnside => GreenFunctor::burnside(&emb.small),
                };
                let sc = module_corpus(&small, 20);
                let bc = module_corpus(&green, 21);
                for m in sc.iter().take(5) {
                    for n in bc.iter().take(5) {
                        let r = frobenius_check(&m.module, &emb, &n.module);
                        assert!(r.holds(), "{spec} {} {}: {r:?}", m.name, n.name);
                        let [a, b, c, d] = induction_adjunction(&m.module, &emb, &n.module);
                        assert_eq!(a, b, "{spec}");
                        assert_eq!(c, d, "{spec}");
                    }
                }
            }
        }
    }
}

#[test]
fn graded_tables_sum_parts() {
    for green in greens("Z/2") {
        let corpus = module_corpus(&green, 22);
        let m = GradedModule::new(Arc::new(corpus[1].module.clone()), Arc::new(torsion(&green, 2)));
        let n = GradedModule::new(Arc::new(torsion(&green, 2)), Arc::new(corpus[2].module.clone()));
        let e = graded_ext(&m, &n, 1);
        for k in 0..=1 {
            for l in 0..2 {
                let expected = (0..2).fold(Invariants::zero(), |acc, i| {
                    acc.sum(&ext(m.part(i), n.part((l + i) % 2), 1).groups[k])
                });
                assert_eq!(e.cells[k][l], expected);
            }
        }
        let t = graded_tor(&m, &n, 1);
        assert_eq!(t.cells.len(), 2);
        assert!(!e.cells.is_empty());
    }
}
