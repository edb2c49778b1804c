use specseq::green::{GreenFunctor, GreenKind};
use specseq::group::{FiniteGroup, GMap, GSet};
use std::sync::Arc;
use zlinalg::{Int, IntMatrix};

const PRESETS: &[&str] = &["Z/2", "Z/3", "Z/4", "Z/6", "Z/2xZ/2", "S3", "D4", "Q8", "A4"];

fn basis_vec(n: usize, i: usize) -> Vec<Int> {
    let mut v = vec![Int::ZERO; n];
    v[i] = Int::ONE;
    v
}

/// All maps between orbits `G/K -> G/H` over class representatives.
fn orbit_maps(g: &Arc<FiniteGroup>) -> Vec<GMap> {
    let reps = g.class_reps();
    let mut out = Vec::new();
    for &k in &reps {
        for &h in &reps {
            let x = GSet::orbit_set(g, k);
            let y = GSet::orbit_set(g, h);
            out.extend(x.maps_to(&y));
        }
    }
    out
}

#[test]
fn z2_examples() {
    let g = FiniteGroup::from_spec("Z/2").unwrap();
    let r = GreenFunctor::representation(&g);
    let free = GSet::orbit_set(&g, g.trivial());
    let pt = GSet::point(&g);
    assert_eq!(r.evaluate(&pt).ngens(), 2);
    assert_eq!(r.evaluate(&GSet::empty(&g)).ngens(), 0);
    assert_eq!(r.evaluate(&free.disjoint_union(&pt)).ngens(), 3);
    let f = GMap::to_point(&free);
    assert_eq!(r.covariant(&f), IntMatrix::from_i64_rows(&[&[1], &[1]]));
    assert_eq!(r.contravariant(&f), IntMatrix::from_i64_rows(&[&[1, 1]]));
    let two = free.disjoint_union(&free);
    let fold = GMap::fold(&free);
    assert_eq!(fold.source, two);
    assert_eq!(r.covariant(&fold), IntMatrix::from_i64_rows(&[&[1, 1]]));
    assert_eq!(r.contravariant(&fold), IntMatrix::from_i64_rows(&[&[1], &[1]]));
    let sign = basis_vec(2, 1);
    assert_eq!(r.multiply(&pt, &sign, &sign), basis_vec(2, 0));
    let id = GMap::identity(&two);
    assert_eq!(r.covariant(&id), IntMatrix::identity(2));
}

#[test]
fn pullback_axiom_on_orbit_maps() {
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        for functor in [GreenFunctor::representation(&g), GreenFunctor::burnside(&g)] {
            let maps = orbit_maps(&g);
            for f in &maps {
                for h in maps.iter().filter(|h| h.target == f.target) {
                    assert!(functor.check_pullback_axiom(f, h), "{spec} {:?}", functor.kind());
                }
            }
        }
    }
}

#[test]
fn s3_pullback_square_is_the_mackey_formula() {
    let g = FiniteGroup::from_spec("S3").unwrap();
    let r = GreenFunctor::representation(&g);
    let z2 = g.generate(&[g.element_from_cycles("(1,2)").unwrap()]);
    let z3 = g.generate(&[g.element_from_cycles("(1,2,3)").unwrap()]);
    let a = GMap::to_point(&GSet::orbit_set(&g, z2));
    let c = GMap::to_point(&GSet::orbit_set(&g, z3));
    assert!(r.check_pullback_axiom(&a, &c));
    // res^G_{Z3} ind_{Z2}^G: one double coset, Z2 n Z3 = 1
    let ring = r.rep_ring().unwrap();
    let lhs: Vec<Vec<i64>> = {
        let res = ring.res_matrix(g.whole(), z3);
        let ind = ring.ind_matrix(z2, g.whole());
        res.iter()
            .map(|row| (0..ind[0].len()).map(|j| row.iter().zip(&ind).map(|(x, r)| x * r[j]).sum()).collect())
            .collect()
    };
    let side = specseq::green::pullback_sides(r.maps(), &a, &c).unwrap().0;
    assert_eq!(side.to_i64_rows().unwrap(), lhs);
}

#[test]
fn projection_formula_and_ring_maps() {
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        for functor in [GreenFunctor::representation(&g), GreenFunctor::burnside(&g)] {
            for f in orbit_maps(&g) {
                let (x, y) = (&f.source, &f.target);
                let (nx, ny) = (functor.evaluate(x).ngens(), functor.evaluate(y).ngens());
                let cov = functor.covariant(&f);
                let con = functor.contravariant(&f);
                assert_eq!(con.mul_vec(&functor.unit_at(y)), functor.unit_at(x));
                for i in 0..nx {
                    for j in 0..ny {
                        let xv = basis_vec(nx, i);
                        let yv = basis_vec(ny, j);
                        let lhs = cov.mul_vec(&functor.multiply(x, &con.mul_vec(&yv), &xv));
                        let rhs = functor.multiply(y, &yv, &cov.mul_vec(&xv));
                        assert_eq!(lhs, rhs, "{spec}");
                    }
                }
                for i in 0..ny {
                    for j in 0..ny {
                        let a = basis_vec(ny, i);
                        let b = basis_vec(ny, j);
                        assert_eq!(
                            con.mul_vec(&functor.multiply(y, &a, &b)),
                            functor.multiply(x, &con.mul_vec(&a), &con.mul_vec(&b))
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn burnside_to_representation_is_a_green_morphism() {
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let r = GreenFunctor::representation(&g);
        let b = GreenFunctor::burnside(&g);
        assert_eq!(b.kind(), GreenKind::Burnside);
        let n = g.num_subgroups();
        let phi: Vec<IntMatrix> = (0..n).map(|h| GreenFunctor::burnside_to_rep(&r, &b, h)).collect();
        for h in 0..n {
            assert_eq!(phi[h].mul_vec(&b.unit(h)), r.unit(h));
            for i in 0..b.rank(h) {
                for j in 0..b.rank(h) {
                    let (ei, ej) = (basis_vec(b.rank(h), i), basis_vec(b.rank(h), j));
                    assert_eq!(
                        phi[h].mul_vec(&b.mul_at(h, &ei, &ej)),
                        r.mul_at(h, &phi[h].mul_vec(&ei), &phi[h].mul_vec(&ej))
                    );
                }
            }
            for l in 0..n {
                if g.is_subgroup(l, h) {
                    assert_eq!(phi[l].mul(b.maps().res(h, l)), r.maps().res(h, l).mul(&phi[h]));
                    assert_eq!(phi[h].mul(b.maps().ind(l, h)), r.maps().ind(l, h).mul(&phi[l]));
                }
            }
            for x in 0..g.order() {
                let xh = g.conj(x, h);
                assert_eq!(phi[xh].mul(b.maps().con(x, h)), r.maps().con(x, h).mul(&phi[h]));
            }
        }
    }
}

#[test]
fn pullback_axiom_under_random_conventions() {
    use specseq::group::Conventions;
    for (seed, spec) in PRESETS.iter().enumerate() {
        let g = FiniteGroup::from_spec(spec).unwrap().with_conventions(Conventions::seeded(seed as u64 + 17));
        let r = GreenFunctor::representation(&g);
        let maps = orbit_maps(&g);
        for f in &maps {
            for h in maps.iter().filter(|h| h.target == f.target) {
                assert!(r.check_pullback_axiom(f, h), "{spec}");
            }
        }
    }
}
