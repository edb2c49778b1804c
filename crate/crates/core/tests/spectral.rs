use specseq::corpus::module_corpus;
use specseq::green::{GreenFunctor, GreenKind};
use specseq::group::{FiniteGroup, GSet};
use specseq::homalg::box_product;
use specseq::mackey::{shift_map, GradedModule, MackeyModule};
use specseq::spectral::{artin_rank, brauer_surjectivity, kunneth_e2, uct_e2, vanishing_check, E2Document, E2Kind, E2Page};
use std::sync::Arc;
use zlinalg::{int, Int, Invariants};

const PRESETS: [&str; 9] = ["Z/2", "Z/3", "Z/4", "Z/6", "Z/2xZ/2", "S3", "D4", "Q8", "A4"];

fn orbits(g: &Arc<FiniteGroup>) -> Vec<GSet> {
    g.class_reps().iter().map(|&h| GSet::orbit_set(g, h)).collect()
}

fn torsion(green: &Arc<GreenFunctor>, n: i64) -> MackeyModule {
    let g = green.group();
    let reg = MackeyModule::regular(green);
    let pt = GSet::point(g);
    let a: Vec<Int> = green.unit(g.whole()).iter().map(|c| c * int(n)).collect();
    reg.cokernel(&shift_map(&reg, &pt, &pt, &a)).0
}

fn even(m: MackeyModule) -> GradedModule {
    GradedModule::even(Arc::new(m))
}

fn cyclic(n: u64) -> Invariants {
    Invariants {
        rank: 0,
        torsion: vec![Int::from(n)],
    }
}

fn whole_index(g: &FiniteGroup) -> usize {
    g.class_reps().iter().position(|&h| h == g.class_rep(g.whole())).unwrap()
}

#[test]
fn uct_of_an_orbit_is_the_value_at_the_stabilizer() {
    for spec in ["Z/2", "S3"] {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let r = GreenFunctor::representation(&g);
        let kb = GradedModule::new(Arc::new(MackeyModule::regular(&r)), Arc::new(torsion(&r, 2)));
        for &h in &g.class_reps() {
            let ka = even(MackeyModule::representable(&r, &GSet::orbit_set(&g, h)));
            let page = uct_e2(&ka, &kb, 2).unwrap();
            assert!(page.concentrated_in_p0(), "{spec}");
            assert_eq!(page.cell(0, 0), &kb.part(0).value(h).invariants());
            assert_eq!(page.cell(0, 1), &kb.part(1).value(h).invariants());
            let c = page.collapse.clone().unwrap();
            assert_eq!((c.pd, c.upper, c.alternative), (0, 0, Some(1)));
            assert!(!page.truncated);
        }
    }
}

#[test]
fn odd_parts_move_to_odd_q() {
    let g = FiniteGroup::from_spec("Z/3").unwrap();
    let r = GreenFunctor::representation(&g);
    let reg = even(MackeyModule::regular(&r));
    let page = uct_e2(&reg.shift(), &reg, 1).unwrap();
    assert!(page.cell(0, 0).is_zero());
    assert_eq!(page.cell(0, 1), &Invariants::free(3));
    let page = kunneth_e2(&reg, &reg.shift(), 1).unwrap();
    assert!(page.cell(0, 0).is_zero());
    assert_eq!(page.cell(0, 1), &Invariants::free(3));
}

#[test]
fn regular_against_itself_is_the_representation_ring() {
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let r = GreenFunctor::representation(&g);
        let reg = even(MackeyModule::regular(&r));
        let rank = r.rank(g.whole());
        for page in [uct_e2(&reg, &reg, 1).unwrap(), kunneth_e2(&reg, &reg, 1).unwrap()] {
            assert!(page.concentrated_in_p0(), "{spec}");
            assert_eq!(page.cell(0, 0), &Invariants::free(rank), "{spec}");
            assert!(page.cell(0, 1).is_zero());
            assert_eq!(page.collapse.as_ref().unwrap().pd, 0);
        }
    }
}

#[test]
fn trivial_group_has_the_classical_shapes() {
    let g = FiniteGroup::from_spec("1").unwrap();
    let r = GreenFunctor::representation(&g);
    let z2 = even(torsion(&r, 2));
    let z = even(MackeyModule::regular(&r));
    let page = uct_e2(&z2, &z, 3).unwrap();
    assert!(page.cell(0, 0).is_zero() && page.cell(0, 1).is_zero());
    assert_eq!(page.cell(1, 0), &cyclic(2));
    assert!(page.cell(1, 1).is_zero());
    assert!((2..=3).all(|p| page.cell(p, 0).is_zero() && page.cell(p, 1).is_zero()));
    let c = page.collapse.clone().unwrap();
    assert_eq!((c.pd, c.upper, c.alternative), (1, 1, Some(2)));

    let page = kunneth_e2(&z2, &z2, 3).unwrap();
    assert_eq!(page.cell(0, 0), &cyclic(2));
    assert_eq!(page.cell(1, 0), &cyclic(2));
    assert!((2..=3).all(|p| page.cell(p, 0).is_zero()));
    assert!((0..=3).all(|p| page.cell(p, 1).is_zero()));
    let c = page.collapse.clone().unwrap();
    assert_eq!((c.pd, c.upper, c.alternative), (1, 1, None));
}

#[test]
fn kunneth_of_representables_is_the_product() {
    for spec in ["Z/2", "Z/4", "S3"] {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let r = GreenFunctor::representation(&g);
        let xs = orbits(&g);
        for x in &xs {
            for y in &xs {
                let ka = even(MackeyModule::representable(&r, x));
                let kb = even(MackeyModule::representable(&r, y));
                let page = kunneth_e2(&ka, &kb, 1).unwrap();
                assert!(page.concentrated_in_p0());
                let prod = MackeyModule::representable(&r, &x.product(y).set);
                let levels = page.levels.as_ref().unwrap();
                assert_eq!(levels[0][0], prod.class_invariants(), "{spec}");
                assert_eq!(page.cell(0, 0), &prod.class_invariants()[whole_index(&g)]);
            }
        }
    }
}

#[test]
fn kunneth_at_a_projective_is_the_box_product() {
    let g = FiniteGroup::from_spec("S3").unwrap();
    let r = GreenFunctor::representation(&g);
    let xs = orbits(&g);
    for entry in module_corpus(&r, 3).iter().take(4) {
        let kb = even(entry.module.clone());
        for x in &xs {
            let rx = MackeyModule::representable(&r, x);
            let page = kunneth_e2(&even(rx.clone()), &kb, 1).unwrap();
            assert!(page.concentrated_in_p0());
            let expected = box_product(&rx, &entry.module).class_invariants();
            assert_eq!(page.levels.as_ref().unwrap()[0][0], expected);
        }
    }
}

#[test]
fn pages_round_trip_through_json() {
    let g = FiniteGroup::from_spec("Z/2").unwrap();
    let r = GreenFunctor::representation(&g);
    let ka = GradedModule::new(Arc::new(torsion(&r, 2)), Arc::new(MackeyModule::regular(&r)));
    let kb = even(torsion(&r, 3));
    for page in [uct_e2(&ka, &kb, 2).unwrap(), kunneth_e2(&ka, &kb, 2).unwrap()] {
        let text = serde_json::to_string_pretty(&page.to_document().unwrap()).unwrap();
        let doc: E2Document = serde_json::from_str(&text).unwrap();
        assert_eq!(E2Page::from_document(&doc).unwrap(), page);
        let table = page.to_string();
        assert!(table.contains(page.kind.name()) && table.contains("truncated"));
    }
    let mut doc = kunneth_e2(&kb, &kb, 1).unwrap().to_document().unwrap();
    doc.format_version = 99;
    assert!(E2Page::from_document(&doc).unwrap_err().contains("format_version"));
    let mut doc = uct_e2(&kb, &kb, 1).unwrap().to_document().unwrap();
    assert_eq!(doc.kind, E2Kind::Uct);
    doc.cells[0].value.torsion = vec![4, 2];
    assert!(E2Page::from_document(&doc).unwrap_err().contains("cells[0]"));
}

#[test]
fn truncated_pages_say_so() {
    // R/2 over Z/2 has no finite projective resolution
    let g = FiniteGroup::from_spec("Z/2").unwrap();
    let r = GreenFunctor::representation(&g);
    let z2 = even(torsion(&r, 2));
    let page = uct_e2(&z2, &z2, 1).unwrap();
    if page.collapse.is_none() {
        assert!(page.truncated);
    } else {
        assert!(!page.truncated);
    }
}

#[test]
fn different_groups_are_rejected() {
    let a = GreenFunctor::representation(&FiniteGroup::from_spec("Z/2").unwrap());
    let b = GreenFunctor::representation(&FiniteGroup::from_spec("Z/3").unwrap());
    let ka = even(MackeyModule::regular(&a));
    let kb = even(MackeyModule::regular(&b));
    assert!(uct_e2(&ka, &kb, 1).is_err());
    assert!(kunneth_e2(&ka, &kb, 1).is_err());
}

#[test]
fn vanishing_reports() {
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let r = GreenFunctor::representation(&g);
        let zero = vanishing_check(&even(MackeyModule::zero(&r)));
        assert!(zero.elementary_zero && zero.module_zero && zero.rationally_zero && zero.consistent());
        let reg = vanishing_check(&even(MackeyModule::regular(&r)));
        assert!(!reg.elementary_zero && !reg.module_zero && !reg.cyclic_rationally_zero && reg.consistent());
        let tors = vanishing_check(&even(torsion(&r, 2)));
        assert!(tors.cyclic_rationally_zero && tors.rationally_zero && !tors.module_zero && tors.consistent());
    }
    let g = FiniteGroup::from_spec("S3").unwrap();
    let r = GreenFunctor::representation(&g);
    for entry in module_corpus(&r, 5) {
        let rep = vanishing_check(&even(entry.module.clone()));
        assert!(rep.consistent());
        assert_eq!(rep.module_zero, entry.module.is_zero());
    }
    let b = GreenFunctor::burnside(&g);
    assert!(!vanishing_check(&even(MackeyModule::regular(&b))).applies);
    assert_eq!(b.kind(), GreenKind::Burnside);
}

#[test]
fn vanishing_page_is_zero() {
    let g = FiniteGroup::from_spec("S3").unwrap();
    let r = GreenFunctor::representation(&g);
    let zero = even(MackeyModule::zero(&r));
    let reg = even(MackeyModule::regular(&r));
    assert!(vanishing_check(&zero).elementary_zero);
    assert!(uct_e2(&zero, &reg, 2).unwrap().is_zero());
    assert!(kunneth_e2(&zero, &reg, 2).unwrap().is_zero());
}

#[test]
fn brauer_and_artin_induction() {
    for spec in PRESETS {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let b = brauer_surjectivity(&g);
        assert!(b.cokernel.is_zero() && b.full_rank, "{spec}");
        let a = artin_rank(&g);
        assert!(a.full_rank, "{spec}");
        assert_eq!(a.rank, GreenFunctor::representation(&g).rank(g.whole()));
    }
    let a4 = FiniteGroup::from_spec("A4").unwrap();
    assert_eq!(artin_rank(&a4).rank, 4);
    // over Z/2xZ/2 every induced character has even degree sum
    let v4 = FiniteGroup::from_spec("Z/2xZ/2").unwrap();
    let a = artin_rank(&v4);
    assert!(a.full_rank && a.cokernel.rank == 0 && !a.cokernel.is_zero());
    for spec in ["Z/6", "Q8"] {
        let g = FiniteGroup::from_spec(spec).unwrap();
        assert!(brauer_surjectivity(&g).subgroups.contains(&g.class_rep(g.whole())));
    }
}
