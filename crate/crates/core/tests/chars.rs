use specseq::chars::{BurnsideRing, RepRing};
use specseq::group::FiniteGroup;
use zlinalg::CycInt;

const PRESETS: &[&str] = &["Z/2", "Z/3", "Z/4", "Z/6", "Z/2xZ/2", "S3", "D4", "Q8", "A4"];

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect())
        .collect()
}

fn matadd(a: &mut [Vec<i64>], b: &[Vec<i64>]) {
    for (ra, rb) in a.iter_mut().zip(b) {
        for (x, y) in ra.iter_mut().zip(rb) {
            *x += y;
        }
    }
}

fn transpose(a: &[Vec<i64>], rows_of_t: usize) -> Vec<Vec<i64>> {
    (0..rows_of_t).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

#[test]
fn z2_table() {
    let g = FiniteGroup::from_spec("Z/2").unwrap();
    let r = RepRing::new(&g);
    let t = r.table(g.whole());
    let vals: Vec<Vec<CycInt>> = t.chars.clone();
    let one = CycInt::one(2);
    assert_eq!(vals[0], vec![one.clone(), one.clone()]);
    assert_eq!(vals[1], vec![one.clone(), one.neg()]);
}

#[test]
fn degrees_of_presets() {
    let cases: &[(&str, &[i64])] = &[
        ("S3", &[1, 1, 2]),
        ("D4", &[1, 1, 1, 1, 2]),
        ("Q8", &[1, 1, 1, 1, 2]),
        ("A4", &[1, 1, 1, 3]),
        ("Z/6", &[1, 1, 1, 1, 1, 1]),
    ];
    for (spec, degs) in cases {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let r = RepRing::new(&g);
        let mut d = r.table(g.whole()).degrees();
        d.sort();
        assert_eq!(&d[..], *degs, "{spec}");
    }
}

#[test]
fn s3_two_dimensional_square() {
    let g = FiniteGroup::from_spec("S3").unwrap();
    let r = RepRing::new(&g);
    let h = g.whole();
    let t = r.table(h);
    let two = (0..3).find(|&i| t.degree(i) == 2).unwrap();
    let sign = (1..3).find(|&i| t.degree(i) == 1).unwrap();
    let sq = r.mult(&r.irreducible(h, two), &r.irreducible(h, two));
    let mut expect = vec![0; 3];
    expect[0] = 1;
    expect[sign] = 1;
    expect[two] = 1;
    assert_eq!(sq.coords, expect);
}

#[test]
fn all_tables_verify() {
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let r = RepRing::new(&g);
        for h in 0..g.num_subgroups() {
            r.table(h).verify().unwrap_or_else(|e| panic!("{spec} subgroup {h}: {e}"));
            let n: i64 = r.table(h).degrees().iter().map(|d| d * d).sum();
            assert_eq!(n as usize, g.sub_order(h));
        }
    }
}

#[test]
fn frobenius_reciprocity_and_transitivity() {
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let r = RepRing::new(&g);
        let n = g.num_subgroups();
        for h in 0..n {
            for l in 0..n {
                if !g.is_subgroup(l, h) {
                    continue;
                }
                let res = r.res_matrix(h, l);
                let ind = r.ind_matrix(l, h);
                assert_eq!(ind, transpose(&res, r.rank(h)), "{spec} {l} <= {h}");
                for k in 0..n {
                    if g.is_subgroup(k, l) {
                        assert_eq!(matmul(&r.res_matrix(l, k), &res), r.res_matrix(h, k));
                    }
                }
            }
        }
    }
}

#[test]
fn mackey_formula_for_characters() {
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let r = RepRing::new(&g);
        let n = g.num_subgroups();
        for h in 0..n {
            for l in 0..n {
                if !g.is_subgroup(l, h) {
                    continue;
                }
                for k in 0..n {
                    if !g.is_subgroup(k, h) {
                        continue;
                    }
                    let lhs = matmul(&r.res_matrix(h, l), &r.ind_matrix(k, h));
                    let mut rhs = vec![vec![0i64; r.rank(k)]; r.rank(l)];
                    for x in g.double_cosets_in(h, l, k) {
                        let xk = g.conj(x, k);
                        let s = g.intersect(l, xk);
                        let s_x = g.conj(g.inv(x), s);
                        let term = matmul(
                            &r.ind_matrix(s, l),
                            &matmul(&r.con_matrix(x, s_x), &r.res_matrix(k, s_x)),
                        );
                        matadd(&mut rhs, &term);
                    }
                    assert_eq!(lhs, rhs, "{spec}: L={l} K={k} H={h}");
                }
            }
        }
    }
}

#[test]
fn burnside_marks_are_multiplicative() {
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let b = BurnsideRing::new(&g);
        for h in g.class_reps() {
            let n = b.rank(h);
            let mc = b.mult_constants(h);
            for i in 0..n {
                for j in 0..n {
                    let mut ei = vec![0; n];
                    ei[i] = 1;
                    let mut ej = vec![0; n];
                    ej[j] = 1;
                    let prod: Vec<i64> = b.mark_vector(h, &mc[i][j]);
                    let expect: Vec<i64> =
                        b.mark_vector(h, &ei).iter().zip(b.mark_vector(h, &ej)).map(|(a, c)| a * c).collect();
                    assert_eq!(prod, expect, "{spec}");
                    assert_eq!(b.from_marks(h, &expect), Some(mc[i][j].clone()));
                }
            }
        }
    }
}

#[test]
fn burnside_restriction_matches_marks() {
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let b = BurnsideRing::new(&g);
        let n = g.num_subgroups();
        for h in 0..n {
            for l in 0..n {
                if !g.is_subgroup(l, h) {
                    continue;
                }
                let res = b.res_matrix(h, l);
                for (j, &k) in b.local(h).basis.iter().enumerate() {
                    for &s in &b.local(l).basis {
                        let col: Vec<i64> = res.iter().map(|row| row[j]).collect();
                        assert_eq!(b.mark_vector(l, &col)[b.index_of(l, s)], b.mark(h, s, k));
                    }
                }
            }
        }
    }
}

#[test]
fn brauer_and_artin_for_presets() {
    use zlinalg::{AbGroup, Int, IntMatrix};
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let r = RepRing::new(&g);
        let w = g.whole();
        let cols_of = |subs: Vec<usize>| {
            let mut cols: Vec<Vec<Int>> = Vec::new();
            for s in subs {
                let m = r.ind_matrix(s, w);
                for j in 0..r.rank(s) {
                    cols.push(m.iter().map(|row| Int::from(row[j])).collect());
                }
            }
            IntMatrix::from_cols(&cols, r.rank(w))
        };
        let brauer = cols_of(g.elementary_subgroup_classes());
        let coker = AbGroup::free(r.rank(w)).cokernel(&brauer);
        assert!(coker.group.is_trivial(), "{spec}");
        let m = cols_of(g.cyclic_subgroup_classes());
        assert_eq!(zlinalg::smith_normal_form(&m).rank, r.rank(w), "{spec}");
    }
}

#[test]
fn burnside_orbit_formula_matches_marks() {
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let b = BurnsideRing::new(&g);
        for h in 0..g.num_subgroups() {
            let n = b.rank(h);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(b.orbit_product(h, i, j), b.mult_constants(h)[i][j], "{spec}");
                }
            }
        }
    }
}

#[test]
fn burnside_z2_marks_and_free_square() {
    let g = FiniteGroup::from_spec("Z/2").unwrap();
    let b = BurnsideRing::new(&g);
    let w = g.whole();
    assert_eq!(b.local(w).basis, vec![g.trivial(), w]);
    assert_eq!(b.local(w).marks, vec![vec![2, 1], vec![0, 1]]);
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let b = BurnsideRing::new(&g);
        let w = g.whole();
        let n = b.rank(w);
        let mut free = vec![0; n];
        free[0] = g.order() as i64;
        assert_eq!(b.mult_constants(w)[0][0], free, "{spec}");
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            assert_eq!(b.mult_constants(w)[n - 1][i], e, "unit in {spec}");
        }
    }
}

fn find_sub(g: &FiniteGroup, cycles: &[&str]) -> usize {
    let gens: Vec<usize> = cycles
        .iter()
        .map(|c| g.element_from_cycles(c).unwrap())
        .collect();
    g.generate(&gens)
}

#[test]
fn s3_restriction_induction_conjugation() {
    let g = FiniteGroup::from_spec("S3").unwrap();
    let r = RepRing::new(&g);
    let w = g.whole();
    let c3 = find_sub(&g, &["(1,2,3)"]);
    let two = (0..3).find(|&i| r.table(w).degree(i) == 2).unwrap();
    let res = r.res(&r.irreducible(w, two), c3);
    assert_eq!(res.coords, vec![0, 1, 1]);
    for j in 1..3 {
        assert_eq!(r.ind(&r.irreducible(c3, j), w), r.irreducible(w, two));
    }
    let z2 = find_sub(&g, &["(1,2)"]);
    let rho = g.element_from_cycles("(1,2,3)").unwrap();
    let sign = r.irreducible(z2, 1);
    let moved = r.conj(&sign, rho);
    assert_eq!(moved.subgroup, g.conj(rho, z2));
    assert_ne!(moved.subgroup, z2);
    let vals = r.values(&moved);
    let t = r.table(moved.subgroup);
    for &x in g.elements(moved.subgroup) {
        let y = g.conj_elem(g.inv(rho), x);
        assert_eq!(vals[t.class_of(x)], r.values(&sign)[r.table(z2).class_of(y)]);
    }
    let one = r.one(g.trivial());
    let reg = r.ind(&one, w);
    assert_eq!(reg.coords, r.table(w).degrees());
}

#[test]
fn frobenius_formula_on_basis_pairs() {
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let r = RepRing::new(&g);
        let w = g.whole();
        for l in 0..g.num_subgroups() {
            for i in 0..r.rank(l) {
                for j in 0..r.rank(w) {
                    let x = r.irreducible(l, i);
                    let y = r.irreducible(w, j);
                    let lhs = r.ind(&r.mult(&r.res(&y, l), &x), w);
                    let rhs = r.mult(&y, &r.ind(&x, w));
                    assert_eq!(lhs, rhs, "{spec}");
                }
            }
        }
    }
}

#[test]
fn table_json_round_trip() {
    use specseq::chars::{export_table, import_table};
    for spec in ["S3", "Q8", "A4", "Z/4"] {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let r = RepRing::new(&g);
        let t = r.table(g.whole());
        let doc = export_table(&g, t);
        let text = serde_json::to_string(&doc).unwrap();
        let back = import_table(&g, &serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.chars, t.chars);
        let mut bad = doc.clone();
        bad.characters[0][0][0] += 1;
        assert!(import_table(&g, &bad).is_err());
    }
}
