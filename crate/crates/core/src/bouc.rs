//! The Burnside–Bouc category of a Green functor: finite G-sets with
//! morphisms `R(X x Y)`.

use crate::green::GreenFunctor;
use crate::group::{GMap, GSet, Product, SubId};
use crate::mackey::{shift_map, triple_product, MackeyModule, ModuleHom};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};
use thiserror::Error;
use zlinalg::{Int, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoucError {
    #[error("cannot compose: middle objects {0} and {1} differ")]
    Mismatch(String, String),
    #[error("morphism element has length {found}, expected {expected}")]
    Length { found: usize, expected: usize },
}

/// A morphism `X -> Y`: an element of `R(X x Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoucMorphism {
    pub source: GSet,
    pub target: GSet,
    pub element: Vec<Int>,
}

/// Label of a basis element of `R(X x Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLabel {
    /// Orbits `G/H` of `X` and `G/L` of `Y`.
    pub x_orbit: usize,
    pub y_orbit: usize,
    /// Representative of the double coset `H x L` of the product orbit.
    pub double_coset: usize,
    /// The stabilizer `H cap ^x L` (a class representative up to conjugacy).
    pub stabilizer: SubId,
    /// Basis index in the ring at the stabilizer.
    pub basis: usize,
}

pub struct HomBasis {
    pub product: Arc<Product>,
    pub labels: Vec<HomLabel>,
}

impl HomBasis {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }
}

type BasisCell = Arc<OnceLock<Arc<HomBasis>>>;

pub struct BoucCategory {
    green: Arc<GreenFunctor>,
    cache: RwLock<HashMap<(Vec<SubId>, Vec<SubId>), BasisCell>>,
}

impl BoucCategory {
    pub fn new(green: &Arc<GreenFunctor>) -> BoucCategory {
        BoucCategory {
            green: green.clone(),
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn green(&self) -> &Arc<GreenFunctor> {
        &self.green
    }

    /// Basis of `B(X, Y) = R(X x Y)`, one element per product orbit and
    /// basis element of the ring at its stabilizer.
    pub fn hom_basis(&self, x: &GSet, y: &GSet) -> Arc<HomBasis> {
        let key = (x.stabilizers().to_vec(), y.stabilizers().to_vec());
        let cell = {
            let read = self.cache.read().unwrap();
            read.get(&key).cloned()
        };
        let cell = match cell {
            Some(c) => c,
            None => self.cache.write().unwrap().entry(key).or_default().clone(),
        };
        cell.get_or_init(|| Arc::new(self.build_basis(x, y))).clone()
    }

    fn build_basis(&self, x: &GSet, y: &GSet) -> HomBasis {
        let g = x.group();
        let product = x.product(y);
        let mut labels = Vec::new();
        for o in product.set.orbits() {
            let (p, q) = (product.left.image(o.offset), product.right.image(o.offset));
            let (i, _) = x.locate(p);
            let (j, _) = y.locate(q);
            let (h, l) = (x.stabilizers()[i], y.stabilizers()[j]);
            let w = g.mul(g.inv(x.point_element(p)), y.point_element(q));
            let dc = g
                .double_cosets(h, l)
                .into_iter()
                .find(|&r| g.elements(h).iter().any(|&a| g.elements(l).iter().any(|&b| g.mul(g.mul(a, w), b) == r)))
                .expect("double coset representative");
            for b in 0..self.green.rank(o.stab) {
                labels.push(HomLabel {
                    x_orbit: i,
                    y_orbit: j,
                    double_coset: dc,
                    stabilizer: o.stab,
                    basis: b,
                });
            }
        }
        HomBasis { product, labels }
    }

    pub fn rank(&self, x: &GSet, y: &GSet) -> usize {
        self.hom_basis(x, y).rank()
    }

    pub fn morphism(&self, x: &GSet, y: &GSet, element: Vec<Int>) -> Result<BoucMorphism, BoucError> {
        let n = self.rank(x, y);
        if element.len() != n {
            return Err(BoucError::Length {
                found: element.len(),
                expected: n,
            });
        }
        Ok(BoucMorphism {
            source: x.clone(),
            target: y.clone(),
            element,
        })
    }

    pub fn basis_morphism(&self, x: &GSet, y: &GSet, i: usize) -> BoucMorphism {
        let mut e = vec![Int::ZERO; self.rank(x, y)];
        e[i] = Int::ONE;
        BoucMorphism {
            source: x.clone(),
            target: y.clone(),
            element: e,
        }
    }

    pub fn zero(&self, x: &GSet, y: &GSet) -> BoucMorphism {
        BoucMorphism {
            source: x.clone(),
            target: y.clone(),
            element: vec![Int::ZERO; self.rank(x, y)],
        }
    }

    /// Pushforward of the unit of `R(X)` along the diagonal `X -> X x X`.
    pub fn identity(&self, x: &GSet) -> BoucMorphism {
        let p = x.product(x);
        let diag = GMap::new(x, &p.set, (0..x.len()).map(|z| p.pair(z, z) as u32).collect()).expect("diagonal");
        let element = self.green.covariant(&diag).mul_vec(&self.green.unit_at(x));
        BoucMorphism {
            source: x.clone(),
            target: x.clone(),
            element,
        }
    }

    /// `b o a = R_*(p_XZ)(R^*(p_XY)(a) . R^*(p_YZ)(b))`.
    pub fn compose(&self, b: &BoucMorphism, a: &BoucMorphism) -> Result<BoucMorphism, BoucError> {
        if a.target != b.source {
            return Err(BoucError::Mismatch(a.target.describe(), b.source.describe()));
        }
        let t = triple_product(&a.source, &a.target, &b.target);
        let r = &self.green;
        let pa = r.contravariant(&t.to_xy).mul_vec(&a.element);
        let pb = r.contravariant(&t.to_yz).mul_vec(&b.element);
        let c = r.multiply(&t.set, &pa, &pb);
        Ok(BoucMorphism {
            source: a.source.clone(),
            target: b.target.clone(),
            element: r.covariant(&t.to_xz).mul_vec(&c),
        })
    }

    pub fn add(&self, a: &BoucMorphism, b: &BoucMorphism) -> BoucMorphism {
        assert!(a.source == b.source && a.target == b.target, "adding morphisms between different objects");
        BoucMorphism {
            source: a.source.clone(),
            target: a.target.clone(),
            element: a.element.iter().zip(&b.element).map(|(x, y)| x + y).collect(),
        }
    }

    /// `a x a': X x X' -> Y x Y'`, the product of the pullbacks of `a` and
    /// `a'` to `(X x X') x (Y x Y')`.
    pub fn tensor(&self, a: &BoucMorphism, a2: &BoucMorphism) -> BoucMorphism {
        let xx = a.source.product(&a2.source);
        let yy = a.target.product(&a2.target);
        let big = xx.set.product(&yy.set);
        let xy = a.source.product(&a.target);
        let xy2 = a2.source.product(&a2.target);
        let n = big.set.len();
        let mut to1 = Vec::with_capacity(n);
        let mut to2 = Vec::with_capacity(n);
        for z in 0..n {
            let (u, v) = (big.left.image(z), big.right.image(z));
            let (x1, x2) = (xx.left.image(u), xx.right.image(u));
            let (y1, y2) = (yy.left.image(v), yy.right.image(v));
            to1.push(xy.pair(x1, y1) as u32);
            to2.push(xy2.pair(x2, y2) as u32);
        }
        let f1 = GMap::new(&big.set, &xy.set, to1).expect("projection");
        let f2 = GMap::new(&big.set, &xy2.set, to2).expect("projection");
        let r = &self.green;
        let e = r.multiply(
            &big.set,
            &r.contravariant(&f1).mul_vec(&a.element),
            &r.contravariant(&f2).mul_vec(&a2.element),
        );
        BoucMorphism {
            source: xx.set.clone(),
            target: yy.set.clone(),
            element: e,
        }
    }

    /// The module map `R_X -> R_Y` of a morphism, via the action on shifted
    /// modules.
    pub fn module_map(&self, a: &BoucMorphism) -> ModuleHom {
        shift_map(&MackeyModule::regular(&self.green), &a.source, &a.target, &a.element)
    }

    /// Matrix of `b -> b o a` on the bases of `B(Y, Z)` and `B(X, Z)`.
    pub fn precompose_matrix(&self, a: &BoucMorphism, z: &GSet) -> IntMatrix {
        let n = self.rank(&a.target, z);
        let mut out = IntMatrix::zeros(self.rank(&a.source, z), n);
        for i in 0..n {
            let b = self.basis_morphism(&a.target, z, i);
            out.set_col(i, &self.compose(&b, a).expect("matching objects").element);
        }
        out
    }
}

impl fmt::Display for HomBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.product.set.group();
        for (i, l) in self.labels.iter().enumerate() {
            writeln!(
                f,
                "{i}: orbits ({}, {}), double coset {}, stabilizer {}, basis {}",
                l.x_orbit,
                l.y_orbit,
                g.elem_label(l.double_coset),
                g.describe_subgroup(l.stabilizer),
                l.basis
            )?;
        }
        Ok(())
    }
}
