use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specseq::bouc::{BoucCategory, BoucMorphism};
use specseq::green::GreenFunctor;
use specseq::group::{FiniteGroup, GSet};
use specseq::mackey::MackeyModule;
use std::sync::Arc;
use zlinalg::{int, Int};

const PRESETS: &[&str] = &["Z/2", "Z/3", "Z/4", "Z/6", "Z/2xZ/2", "S3", "D4", "Q8", "A4"];

fn cats(spec: &str) -> Vec<BoucCategory> {
    let g = FiniteGroup::from_spec(spec).unwrap();
    vec![
        BoucCategory::new(&GreenFunctor::representation(&g)),
        BoucCategory::new(&GreenFunctor::burnside(&g)),
    ]
}

fn orbits(g: &Arc<FiniteGroup>) -> Vec<GSet> {
    g.class_reps().iter().map(|&h| GSet::orbit_set(g, h)).collect()
}

fn random_morphism(c: &BoucCategory, x: &GSet, y: &GSet, rng: &mut ChaCha8Rng) -> BoucMorphism {
    let n = c.rank(x, y);
    c.morphism(x, y, (0..n).map(|_| int(rng.gen_range(-2..=2))).collect()).unwrap()
}

#[test]
fn hom_ranks_match_double_coset_formula() {
    for spec in PRESETS {
        for c in cats(spec) {
            let g = c.green().group().clone();
            for x in orbits(&g) {
                for y in orbits(&g) {
                    let (h, l) = (x.stabilizers()[0], y.stabilizers()[0]);
                    let expected: usize = g
                        .double_cosets(h, l)
                        .iter()
                        .map(|&d| c.green().rank(g.intersect(h, g.conj(d, l))))
                        .sum();
                    assert_eq!(c.rank(&x, &y), expected, "{spec}");
                    let basis = c.hom_basis(&x, &y);
                    let mut dcs: Vec<usize> = basis.labels.iter().map(|l| l.double_coset).collect();
                    dcs.dedup();
                    assert_eq!(dcs.len(), g.double_cosets(h, l).len(), "{spec}");
                }
            }
        }
    }
}

#[test]
fn z2_examples() {
    let g = FiniteGroup::from_spec("Z/2").unwrap();
    let c = BoucCategory::new(&GreenFunctor::representation(&g));
    let pt = GSet::point(&g);
    let free = GSet::orbit_set(&g, g.trivial());
    assert_eq!(c.rank(&pt, &pt), 2);
    assert_eq!(c.rank(&free, &free), 2);
    assert_eq!(c.rank(&GSet::empty(&g), &free), 0);
    assert_eq!(c.identity(&pt).element, c.green().unit(g.whole()));
}

#[test]
fn identities_are_units() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for spec in PRESETS {
        for c in cats(spec) {
            let g = c.green().group().clone();
            let xs = orbits(&g);
            for x in &xs {
                for y in &xs {
                    let f = random_morphism(&c, x, y, &mut rng);
                    assert_eq!(c.compose(&c.identity(y), &f).unwrap(), f, "{spec}");
                    assert_eq!(c.compose(&f, &c.identity(x)).unwrap(), f, "{spec}");
                }
            }
            let u = xs[0].disjoint_union(&xs[xs.len() - 1]);
            let f = random_morphism(&c, &u, &xs[0], &mut rng);
            assert_eq!(c.compose(&c.identity(&xs[0]), &f).unwrap(), f);
            assert_eq!(c.compose(&f, &c.identity(&u)).unwrap(), f);
        }
    }
}

#[test]
fn composition_rejects_mismatch() {
    let c = &cats("S3")[0];
    let g = c.green().group().clone();
    let xs = orbits(&g);
    let a = c.identity(&xs[0]);
    let b = c.identity(&xs[1]);
    assert!(c.compose(&b, &a).is_err());
    assert!(c.morphism(&xs[0], &xs[1], vec![Int::ONE; 99]).is_err());
}

#[test]
fn associativity_exhaustive_small_groups() {
    for spec in ["Z/2", "Z/4", "S3"] {
        for c in cats(spec) {
            let g = c.green().group().clone();
            let xs = orbits(&g);
            for x in &xs {
                for y in &xs {
                    for z in &xs {
                        for w in &xs {
                            for i in 0..c.rank(x, y) {
                                let a = c.basis_morphism(x, y, i);
                                // b -> (b o a), then c o (b o a) versus (c o b) o a
                                let pa = c.precompose_matrix(&a, z);
                                for k in 0..c.rank(z, w) {
                                    let cc = c.basis_morphism(z, w, k);
                                    for j in 0..c.rank(y, z) {
                                        let b = c.basis_morphism(y, z, j);
                                        let left = c.compose(&cc, &c.compose(&b, &a).unwrap()).unwrap();
                                        let right = c.compose(&c.compose(&cc, &b).unwrap(), &a).unwrap();
                                        assert_eq!(left, right, "{spec}");
                                    }
                                }
                                assert_eq!(pa.cols(), c.rank(y, z));
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn associativity_random_larger_groups() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for spec in ["D4", "Q8", "A4"] {
        for c in cats(spec) {
            let g = c.green().group().clone();
            let xs = orbits(&g);
            for _ in 0..200 {
                let pick = |rng: &mut ChaCha8Rng| xs[rng.gen_range(0..xs.len())].clone();
                let (x, y, z, w) = (pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng));
                let a = random_morphism(&c, &x, &y, &mut rng);
                let b = random_morphism(&c, &y, &z, &mut rng);
                let d = random_morphism(&c, &z, &w, &mut rng);
                let left = c.compose(&d, &c.compose(&b, &a).unwrap()).unwrap();
                let right = c.compose(&c.compose(&d, &b).unwrap(), &a).unwrap();
                assert_eq!(left, right, "{spec}");
            }
        }
    }
}

#[test]
fn composition_is_bilinear() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for c in cats("S3") {
        let g = c.green().group().clone();
        let xs = orbits(&g);
        for _ in 0..30 {
            let (x, y, z) = (&xs[rng.gen_range(0..4)], &xs[rng.gen_range(0..4)], &xs[rng.gen_range(0..4)]);
            let a1 = random_morphism(&c, x, y, &mut rng);
            let a2 = random_morphism(&c, x, y, &mut rng);
            let b = random_morphism(&c, y, z, &mut rng);
            let lhs = c.compose(&b, &c.add(&a1, &a2)).unwrap();
            let rhs = c.add(&c.compose(&b, &a1).unwrap(), &c.compose(&b, &a2).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}

/// Span composition against composition of module maps between
/// representables, transported through Yoneda.
#[test]
fn two_path_composition_oracle() {
    for spec in ["Z/2", "Z/3", "Z/4", "Z/2xZ/2", "S3"] {
        for c in cats(spec) {
            let g = c.green().group().clone();
            let xs = orbits(&g);
            for x in &xs {
                for y in &xs {
                    let rx = MackeyModule::representable(c.green(), x);
                    let ry = MackeyModule::representable(c.green(), y);
                    for i in 0..c.rank(x, y) {
                        let a = c.basis_morphism(x, y, i);
                        let phi_a = ry.yoneda_map(x, &a.element);
                        assert!(phi_a.is_hom(&rx, &ry));
                        assert!(c.module_map(&a).equals(&phi_a, &ry), "{spec}: shift map and Yoneda differ");
                        for z in &xs {
                            let rz = MackeyModule::representable(c.green(), z);
                            for j in 0..c.rank(y, z) {
                                let b = c.basis_morphism(y, z, j);
                                let phi_b = rz.yoneda_map(y, &b.element);
                                let composite = phi_b.compose(&phi_a, &rz);
                                let via_modules = rz.yoneda_element(x, &composite);
                                let via_spans = c.compose(&b, &a).unwrap();
                                assert_eq!(via_modules, via_spans.element, "{spec}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn tensor_of_identities_is_identity() {
    for spec in ["Z/2", "S3", "Z/2xZ/2"] {
        for c in cats(spec) {
            let g = c.green().group().clone();
            let xs = orbits(&g);
            for x in &xs {
                for y in &xs {
                    let t = c.tensor(&c.identity(x), &c.identity(y));
                    let xy = x.product(y);
                    assert_eq!(t, c.identity(&xy.set), "{spec}");
                    let rxy = MackeyModule::representable(c.green(), &xy.set);
                    assert_eq!(c.rank(&xy.set, &xy.set), rxy.evaluate(&xy.set).ngens());
                }
            }
        }
    }
}

#[test]
fn cache_is_shared_across_threads() {
    let g = FiniteGroup::from_spec("S3").unwrap();
    let c = Arc::new(BoucCategory::new(&GreenFunctor::representation(&g)));
    let x = GSet::orbit_set(&g, g.trivial());
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let c = c.clone();
            let x = x.clone();
            std::thread::spawn(move || c.hom_basis(&x, &x))
        })
        .collect();
    let bases: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert!(bases.windows(2).all(|w| Arc::ptr_eq(&w[0], &w[1])));
}
