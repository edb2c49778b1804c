use specseq::group::{Conventions, FiniteGroup, GMap, GSet};
use std::collections::BTreeSet;
use std::sync::Arc;

const PRESETS: [&str; 9] = ["Z/2", "Z/3", "Z/4", "Z/6", "Z/2xZ/2", "S3", "D4", "Q8", "A4"];

fn groups() -> Vec<Arc<FiniteGroup>> {
    let mut v: Vec<_> = PRESETS.iter().map(|s| FiniteGroup::from_spec(s).unwrap()).collect();
    v.extend(PRESETS.iter().map(|s| FiniteGroup::from_spec_with(s, 64, Conventions::seeded(7)).unwrap()));
    v
}

/// All subgroups by brute force over subsets (small groups only).
fn brute_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if set.iter().all(|&a| set.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1)) {
            out.insert(set);
        }
    }
    out
}

#[test]
fn subgroup_lattice_matches_brute_force() {
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let brute = brute_subgroups(&g);
        let ours: BTreeSet<Vec<usize>> = (0..g.num_subgroups()).map(|h| g.elements(h).to_vec()).collect();
        assert_eq!(ours, brute, "{spec}");
        // every subgroup conjugate to exactly one representative
        for h in 0..g.num_subgroups() {
            let reps: Vec<usize> = g.class_reps().into_iter().filter(|&r| (0..g.order()).any(|x| g.conj(x, r) == h)).collect();
            assert_eq!(reps.len(), 1);
            assert_eq!(g.conj(g.transporter(h), g.class_rep(h)), h);
        }
        // canonical representatives are the least element sets
        for c in g.classes() {
            let least = c.members.iter().map(|&m| g.elements(m).to_vec()).min().unwrap();
            assert_eq!(g.elements(c.rep), least.as_slice());
        }
    }
}

#[test]
fn s3_subgroup_classes() {
    let g = FiniteGroup::from_spec("S3").unwrap();
    let orders: Vec<usize> = g.class_reps().iter().map(|&h| g.sub_order(h)).collect();
    assert_eq!(orders, vec![1, 2, 3, 6]);
    let z2 = FiniteGroup::from_spec("Z/2").unwrap();
    assert_eq!(z2.classes().len(), 2);
}

#[test]
fn double_coset_examples() {
    let g = FiniteGroup::from_spec("S3").unwrap();
    let t = g.class_reps()[1];
    let reps = g.double_cosets(t, t);
    assert_eq!(reps.len(), 2);
    let mut sizes: Vec<usize> = reps.iter().map(|&r| g.double_coset_size(t, r, t)).collect();
    sizes.sort();
    assert_eq!(sizes, vec![2, 4]);
    let z4 = FiniteGroup::from_spec("Z/4").unwrap();
    let h = z4.class_reps()[1];
    assert_eq!(z4.double_cosets(h, h).len(), 2);
    assert_eq!(g.double_cosets(g.whole(), g.whole()), vec![0]);
}

#[test]
fn double_cosets_partition_the_group() {
    for g in groups() {
        for h in 0..g.num_subgroups() {
            for l in 0..g.num_subgroups() {
                let reps = g.double_cosets(h, l);
                let total: usize = reps.iter().map(|&r| g.double_coset_size(h, r, l)).sum();
                assert_eq!(total, g.order());
                // representatives lie in distinct double cosets
                for (i, &a) in reps.iter().enumerate() {
                    for &b in &reps[..i] {
                        let same = g.elements(h).iter().any(|&x| g.elements(l).iter().any(|&y| g.mul(g.mul(x, a), y) == b));
                        assert!(!same);
                    }
                }
            }
        }
    }
}

#[test]
fn orbit_count_of_products_equals_double_cosets() {
    for g in groups() {
        let reps = g.class_reps();
        for &h in &reps {
            for &l in &reps {
                let x = GSet::orbit_set(&g, h);
                let y = GSet::orbit_set(&g, l);
                let p = x.product(&y);
                assert_eq!(p.set.num_orbits(), g.double_cosets(h, l).len());
                assert_eq!(p.set.len(), x.len() * y.len());
                assert!(p.left.is_equivariant() && p.right.is_equivariant());
                // orbit stabilizers are conjugate to H cap ^x L
                let mut ours: Vec<usize> = p.set.stabilizers().iter().map(|&s| g.class_of(s)).collect();
                let mut theirs: Vec<usize> = g.double_cosets(h, l).iter().map(|&r| g.class_of(g.intersect(h, g.conj(r, l)))).collect();
                ours.sort();
                theirs.sort();
                assert_eq!(ours, theirs);
            }
        }
    }
}

#[test]
fn unit_and_pullback_over_point() {
    for g in groups() {
        let x = GSet::from_orbits(&g, &g.class_reps());
        let pt = GSet::point(&g);
        let p = pt.product(&x);
        let mut a1 = p.set.stabilizers().to_vec();
        let mut a2 = x.stabilizers().to_vec();
        a1.sort();
        a2.sort();
        assert_eq!(a1, a2);
        let y = GSet::orbit_set(&g, g.trivial());
        let (pb, a, b) = GSet::pullback(&GMap::to_point(&x), &GMap::to_point(&y));
        assert_eq!(pb.len(), x.len() * y.len());
        assert!(a.is_equivariant() && b.is_equivariant());
        let prod = x.product(&y);
        let mut s1: Vec<usize> = pb.stabilizers().iter().map(|&s| g.class_of(s)).collect();
        let mut s2: Vec<usize> = prod.set.stabilizers().iter().map(|&s| g.class_of(s)).collect();
        s1.sort();
        s2.sort();
        assert_eq!(s1, s2);
    }
}

#[test]
fn maps_from_orbits_count_fixed_points() {
    for g in groups() {
        let reps = g.class_reps();
        let y = GSet::from_orbits(&g, &reps);
        for &k in &reps {
            let src = GSet::orbit_set(&g, k);
            let maps = src.maps_to(&y);
            assert_eq!(maps.len(), y.fixed_points(k).len());
            assert!(maps.iter().all(|m| m.is_equivariant()));
        }
        let pt = GSet::point(&g);
        assert_eq!(pt.maps_to(&y).len(), y.fixed_points(g.whole()).len());
    }
}

#[test]
fn restriction_example_s3() {
    // S3 acting on S3/<(123)> restricted to <(12)>: two points swapped
    let g = FiniteGroup::from_spec("S3").unwrap();
    let c3 = *g.class_reps().iter().find(|&&h| g.sub_order(h) == 3).unwrap();
    let t = *g.class_reps().iter().find(|&&h| g.sub_order(h) == 2).unwrap();
    let x = GSet::orbit_set(&g, c3);
    assert_eq!(x.len(), 2);
    let tgen = g.elements(t)[1];
    assert_eq!(x.act(tgen, 0), 1);
    assert_eq!(x.act(tgen, 1), 0);
}

#[test]
fn conventions_do_not_change_counts() {
    for spec in PRESETS {
        let a = FiniteGroup::from_spec(spec).unwrap();
        for seed in [1u64, 2, 3] {
            let b = FiniteGroup::from_spec_with(spec, 64, Conventions::seeded(seed)).unwrap();
            assert_eq!(a.num_subgroups(), b.num_subgroups());
            let ca: Vec<(usize, usize)> = a.classes().iter().map(|c| (a.sub_order(c.rep), c.members.len())).collect();
            let cb: Vec<(usize, usize)> = b.classes().iter().map(|c| (b.sub_order(c.rep), c.members.len())).collect();
            assert_eq!(ca, cb);
        }
    }
}
