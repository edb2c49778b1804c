//! Finite G-sets in orbit-decomposed form and equivariant maps.
//!
//! A [`GSet`] is a disjoint union of standard orbits `G/S`, where each `S` is
//! the class representative of its conjugacy class. Points of the orbit
//! `G/S` are numbered by the cosets of the group's [`CosetSpace`] for `S`;
//! coset 0 (`eS`) is the base point.

use super::{Choice, CosetSpace, FiniteGroup, SubId};
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct GSet {
    group: Arc<FiniteGroup>,
    stabs: Vec<SubId>,
    offsets: Vec<usize>,
    spaces: Vec<Arc<CosetSpace>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub stab: SubId,
    pub offset: usize,
    pub len: usize,
}

impl PartialEq for GSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.stabs == other.stabs
    }
}

impl Eq for GSet {}

impl fmt::Debug for GSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

impl GSet {
    /// Disjoint union of `G/H` over the given subgroups (each replaced by its
    /// class representative, which gives an isomorphic orbit).
    pub fn from_orbits(group: &Arc<FiniteGroup>, subgroups: &[SubId]) -> GSet {
        let stabs: Vec<SubId> = subgroups.iter().map(|&h| group.class_rep(h)).collect();
        let mut offsets = vec![0];
        let mut spaces = Vec::new();
        for &s in &stabs {
            let sp = group.coset_space(s);
            offsets.push(offsets.last().unwrap() + sp.len());
            spaces.push(sp);
        }
        GSet {
            group: group.clone(),
            stabs,
            offsets,
            spaces,
        }
    }

    pub fn orbit_set(group: &Arc<FiniteGroup>, h: SubId) -> GSet {
        Self::from_orbits(group, &[h])
    }

    pub fn empty(group: &Arc<FiniteGroup>) -> GSet {
        Self::from_orbits(group, &[])
    }

    /// The one-point set `G/G`.
    pub fn point(group: &Arc<FiniteGroup>) -> GSet {
        Self::from_orbits(group, &[group.whole()])
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn num_orbits(&self) -> usize {
        self.stabs.len()
    }

    pub fn stabilizers(&self) -> &[SubId] {
        &self.stabs
    }

    pub fn orbit(&self, i: usize) -> Orbit {
        Orbit {
            stab: self.stabs[i],
            offset: self.offsets[i],
            len: self.offsets[i + 1] - self.offsets[i],
        }
    }

    pub fn orbits(&self) -> impl Iterator<Item = Orbit> + '_ {
        (0..self.num_orbits()).map(|i| self.orbit(i))
    }

    pub fn coset_space(&self, i: usize) -> &CosetSpace {
        &self.spaces[i]
    }

    /// `(orbit, coset)` of a point.
    pub fn locate(&self, x: usize) -> (usize, usize) {
        let i = self.offsets.partition_point(|&o| o <= x) - 1;
        (i, x - self.offsets[i])
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        let (i, c) = self.locate(x);
        let sp = &self.spaces[i];
        self.offsets[i] + sp.coset_of[self.group.mul(g, sp.reps[c])] as usize
    }

    /// Transversal element carrying the base point of its orbit to `x`.
    pub fn point_element(&self, x: usize) -> usize {
        let (i, c) = self.locate(x);
        self.spaces[i].reps[c]
    }

    pub fn stabilizer(&self, x: usize) -> SubId {
        let (i, _) = self.locate(x);
        self.group.conj(self.point_element(x), self.stabs[i])
    }

    /// Points fixed by `K`.
    pub fn fixed_points(&self, k: SubId) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.group.is_subgroup(k, self.stabilizer(x))).collect()
    }

    pub fn disjoint_union(&self, other: &GSet) -> GSet {
        assert!(Arc::ptr_eq(&self.group, &other.group), "G-sets over different groups");
        let mut s = self.stabs.clone();
        s.extend_from_slice(&other.stabs);
        Self::from_orbits(&self.group, &s)
    }

    pub fn describe(&self) -> String {
        if self.stabs.is_empty() {
            return "0".to_string();
        }
        self.stabs
            .iter()
            .map(|&s| format!("G/{}", self.group.describe_subgroup(s)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Orbit decomposition of an arbitrary action on `0..n`; returns the
    /// standard G-set and the bijection old point -> new point.
    pub fn decompose(group: &Arc<FiniteGroup>, n: usize, act: impl Fn(usize, usize) -> usize) -> (GSet, Vec<u32>) {
        let ord = group.order();
        let mut visited = vec![false; n];
        struct Found {
            base: usize,
            stab: SubId,
            first: usize,
        }
        let mut found: Vec<Found> = Vec::new();
        for x in 0..n {
            if visited[x] {
                continue;
            }
            let mut pts = Vec::new();
            for g in 0..ord {
                let y = act(g, x);
                if !visited[y] {
                    visited[y] = true;
                    pts.push(y);
                }
            }
            let stab_x: Vec<usize> = (0..ord).filter(|&g| act(g, x) == x).collect();
            let hx = group.id_of_elements(&stab_x).expect("stabilizer is a subgroup");
            let s = group.class_rep(hx);
            pts.sort();
            // points of the orbit whose stabilizer is exactly S
            let cands: Vec<usize> = pts
                .iter()
                .copied()
                .filter(|&y| {
                    let st: Vec<usize> = group.elements(s).to_vec();
                    st.iter().all(|&g| act(g, y) == y) && {
                        let k = (0..ord).filter(|&g| act(g, y) == y).count();
                        k == st.len()
                    }
                })
                .collect();
            let pick = group.conventions().pick(Choice::BasePoint, x as u64, cands.len());
            found.push(Found {
                base: cands[pick],
                stab: s,
                first: x,
            });
        }
        let mut order: Vec<usize> = (0..found.len()).collect();
        group.conventions().shuffle(Choice::OrbitOrder, n as u64, &mut order);
        let stabs: Vec<SubId> = order.iter().map(|&i| found[i].stab).collect();
        let set = GSet::from_orbits(group, &stabs);
        let mut iso = vec![u32::MAX; n];
        for (oi, &fi) in order.iter().enumerate() {
            let f = &found[fi];
            let sp = &set.spaces[oi];
            let off = set.offsets[oi];
            for g in 0..ord {
                let y = act(g, f.base);
                if iso[y] == u32::MAX {
                    iso[y] = (off + sp.coset_of[g] as usize) as u32;
                }
            }
            let _ = f.first;
        }
        (set, iso)
    }

    /// `self x other` with projections, cached per group.
    pub fn product(&self, other: &GSet) -> Arc<Product> {
        assert!(Arc::ptr_eq(&self.group, &other.group), "G-sets over different groups");
        let key = (self.stabs.clone(), other.stabs.clone());
        if let Some(p) = self.group.product_cache.lock().unwrap().get(&key) {
            return p.clone();
        }
        let ny = other.len();
        let n = self.len() * ny;
        let (set, iso) = GSet::decompose(&self.group, n, |g, p| self.act(g, p / ny) * ny + other.act(g, p % ny));
        let mut pairs = vec![(0u32, 0u32); n];
        for p in 0..n {
            pairs[iso[p] as usize] = ((p / ny) as u32, (p % ny) as u32);
        }
        let left = GMap::from_fn_unchecked(&set, self, |z| pairs[z].0 as usize);
        let right = GMap::from_fn_unchecked(&set, other, |z| pairs[z].1 as usize);
        let prod = Arc::new(Product {
            set,
            left,
            right,
            index: iso,
            right_len: ny,
        });
        self.group.product_cache.lock().unwrap().insert(key, prod.clone());
        prod
    }

    /// Pullback of `f: X -> Z` and `g: Y -> Z`, with its two projections.
    pub fn pullback(f: &GMap, g: &GMap) -> (GSet, GMap, GMap) {
        assert_eq!(f.target, g.target, "pullback of maps with different targets");
        let (x, y) = (&f.source, &g.source);
        let pts: Vec<(usize, usize)> = (0..x.len())
            .flat_map(|a| (0..y.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| f.images[a] == g.images[b])
            .collect();
        let index: std::collections::HashMap<(usize, usize), usize> = pts.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let group = x.group.clone();
        let (set, iso) = GSet::decompose(&group, pts.len(), |h, i| {
            let (a, b) = pts[i];
            index[&(x.act(h, a), y.act(h, b))]
        });
        let mut back = vec![(0usize, 0usize); pts.len()];
        for (i, &p) in pts.iter().enumerate() {
            back[iso[i] as usize] = p;
        }
        let p1 = GMap::from_fn_unchecked(&set, x, |z| back[z].0);
        let p2 = GMap::from_fn_unchecked(&set, y, |z| back[z].1);
        (set, p1, p2)
    }

    /// All G-maps `self -> target`.
    pub fn maps_to(&self, target: &GSet) -> Vec<GMap> {
        let choices: Vec<Vec<usize>> = self.stabs.iter().map(|&s| target.fixed_points(s)).collect();
        let mut out = Vec::new();
        let mut cur = vec![0usize; choices.len()];
        if choices.iter().any(|c| c.is_empty()) {
            return out;
        }
        loop {
            let imgs: Vec<usize> = cur.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            out.push(GMap::from_base_images(self, target, &imgs).expect("fixed points give maps"));
            let mut k = 0;
            loop {
                if k == cur.len() {
                    return out;
                }
                cur[k] += 1;
                if cur[k] < choices[k].len() {
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }
}

/// A product `X x Y` in standard form with its projections.
pub struct Product {
    pub set: GSet,
    pub left: GMap,
    pub right: GMap,
    index: Vec<u32>,
    right_len: usize,
}

impl Product {
    /// The point `(x, y)`.
    pub fn pair(&self, x: usize, y: usize) -> usize {
        self.index[x * self.right_len + y] as usize
    }
}

/// An equivariant map, stored pointwise.
#[derive(Clone, PartialEq, Eq)]
pub struct GMap {
    pub source: GSet,
    pub target: GSet,
    pub images: Vec<u32>,
}

impl fmt::Debug for GMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GMap({:?} -> {:?}: {:?})", self.source, self.target, self.images)
    }
}

impl GMap {
    pub fn new(source: &GSet, target: &GSet, images: Vec<u32>) -> Result<GMap, String> {
        let m = GMap {
            source: source.clone(),
            target: target.clone(),
            images,
        };
        if m.images.len() != source.len() || m.images.iter().any(|&y| y as usize >= target.len()) {
            return Err("map has wrong length or out-of-range images".into());
        }
        if !m.is_equivariant() {
            return Err("map is not equivariant".into());
        }
        Ok(m)
    }

    fn from_fn_unchecked(source: &GSet, target: &GSet, f: impl Fn(usize) -> usize) -> GMap {
        GMap {
            source: source.clone(),
            target: target.clone(),
            images: (0..source.len()).map(|x| f(x) as u32).collect(),
        }
    }

    /// Map determined by the images of the orbit base points; the image of
    /// the base point of `G/S` must be fixed by `S`.
    pub fn from_base_images(source: &GSet, target: &GSet, base_images: &[usize]) -> Result<GMap, String> {
        if base_images.len() != source.num_orbits() {
            return Err("one image per orbit required".into());
        }
        let g = source.group();
        let mut images = vec![0u32; source.len()];
        for (i, o) in source.orbits().enumerate() {
            let y = base_images[i];
            if !g.is_subgroup(o.stab, target.stabilizer(y)) {
                return Err(format!("image of base point of orbit {i} is not fixed by its stabilizer"));
            }
            let sp = source.coset_space(i);
            for c in 0..o.len {
                images[o.offset + c] = target.act(sp.reps[c], y) as u32;
            }
        }
        Ok(GMap {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(x: &GSet) -> GMap {
        Self::from_fn_unchecked(x, x, |p| p)
    }

    /// The unique map to the point `G/G`.
    pub fn to_point(x: &GSet) -> GMap {
        Self::from_fn_unchecked(x, &GSet::point(x.group()), |_| 0)
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &GMap) -> GMap {
        assert_eq!(first.target, self.source, "composition of non-matching maps");
        Self::from_fn_unchecked(&first.source, &self.target, |x| self.images[first.images[x] as usize] as usize)
    }

    /// The codiagonal `X + X -> X`.
    pub fn fold(x: &GSet) -> GMap {
        let xx = x.disjoint_union(x);
        let n = x.len();
        Self::from_fn_unchecked(&xx, x, |p| p % n)
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// Equivariance on the group generators.
    pub fn is_equivariant(&self) -> bool {
        let g = self.source.group();
        g.generators()
            .iter()
            .all(|&s| (0..self.source.len()).all(|x| self.target.act(s, self.images[x] as usize) == self.images[self.source.act(s, x)] as usize))
    }

    /// For orbit `i` of the source: target orbit `j` and the transversal
    /// element `g` with `f(eS) = g T`, so that `S <= ^g T`.
    pub fn orbit_data(&self, i: usize) -> (usize, usize) {
        let o = self.source.orbit(i);
        let y = self.images[o.offset] as usize;
        let (j, _) = self.target.locate(y);
        (j, self.target.point_element(y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_product_of_z2() {
        let g = FiniteGroup::from_spec("Z/2").unwrap();
        let x = GSet::orbit_set(&g, g.trivial());
        let p = x.product(&x);
        assert_eq!(p.set.len(), 4);
        assert_eq!(p.set.num_orbits(), 2);
        assert!(p.set.stabilizers().iter().all(|&s| s == g.trivial()));
        assert!(p.left.is_equivariant() && p.right.is_equivariant());
    }

    #[test]
    fn maps_from_orbits() {
        let g = FiniteGroup::from_spec("Z/2").unwrap();
        let free = GSet::orbit_set(&g, g.trivial());
        assert_eq!(free.maps_to(&free).len(), 2);
        let pt = GSet::point(&g);
        assert_eq!(free.maps_to(&pt).len(), 1);
        assert_eq!(pt.maps_to(&free).len(), 0);
    }

    #[test]
    fn action_is_a_group_action() {
        let g = FiniteGroup::from_spec("S3").unwrap();
        let subs: Vec<SubId> = g.class_reps();
        let x = GSet::from_orbits(&g, &subs);
        for p in 0..x.len() {
            assert_eq!(x.act(0, p), p);
            for a in 0..g.order() {
                for b in 0..g.order() {
                    assert_eq!(x.act(g.mul(a, b), p), x.act(a, x.act(b, p)));
                }
            }
        }
    }
}
