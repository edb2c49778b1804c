//! Finite groups given by permutation generators, stored as full
//! multiplication tables, with their subgroup lattice and conjugacy data.

mod conventions;
pub mod gset;
pub mod perm;
mod presets;

pub use conventions::Conventions;
pub(crate) use conventions::Choice;
pub use gset::{GMap, GSet, Orbit, Product};

use fixedbitset::FixedBitSet;
use perm::Perm;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

pub const DEFAULT_MAX_ORDER: usize = 64;

pub type SubId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order {order} exceeds the configured bound {bound}")]
    OrderBound { order: usize, bound: usize },
    #[error("cannot parse group: {0}")]
    Parse(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
}

#[derive(Clone, Debug)]
pub struct SubgroupData {
    pub elements: Vec<usize>,
    pub bits: FixedBitSet,
    pub generators: Vec<usize>,
    pub class: usize,
    pub is_cyclic: bool,
    pub is_elementary: bool,
    pub is_normal: bool,
}

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub members: Vec<SubId>,
    pub rep: SubId,
    /// Normalizer of the representative.
    pub normalizer: SubId,
}

/// Left cosets `gS` with transversal `reps` (`reps[0]` lies in `S`).
#[derive(Clone, Debug)]
pub struct CosetSpace {
    pub subgroup: SubId,
    pub reps: Vec<usize>,
    /// Coset index of every group element.
    pub coset_of: Vec<u32>,
}

impl CosetSpace {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

pub struct FiniteGroup {
    name: String,
    degree: usize,
    perms: Vec<Perm>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    elem_order: Vec<u32>,
    exponent: u32,
    generators: Vec<usize>,
    conventions: Conventions,
    subs: Vec<SubgroupData>,
    sub_index: HashMap<FixedBitSet, SubId>,
    conj_sub: Vec<u32>,
    classes: Vec<SubgroupClass>,
    transporter: Vec<usize>,
    cosets: Vec<OnceLock<Arc<CosetSpace>>>,
    pub(crate) product_cache: Mutex<HashMap<(Vec<SubId>, Vec<SubId>), Arc<Product>>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order())
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.mul == other.mul && self.conventions == other.conventions
    }
}

impl FiniteGroup {
    /// Parses a group specification (see [`presets`]) with the default
    /// order bound and canonical conventions.
    pub fn from_spec(spec: &str) -> Result<Arc<FiniteGroup>, GroupError> {
        Self::from_spec_with(spec, DEFAULT_MAX_ORDER, Conventions::CANONICAL)
    }

    pub fn from_spec_with(spec: &str, max_order: usize, conventions: Conventions) -> Result<Arc<FiniteGroup>, GroupError> {
        let (name, degree, gens) = presets::parse(spec)?;
        Self::from_permutations(&name, degree, &gens, max_order, conventions).map(Arc::new)
    }

    /// The same group with different conventions.
    pub fn with_conventions(&self, conventions: Conventions) -> Arc<FiniteGroup> {
        let gens: Vec<Perm> = self.generators.iter().map(|&g| self.perms[g].clone()).collect();
        Arc::new(
            Self::from_permutations(&self.name, self.degree, &gens, usize::MAX, conventions)
                .expect("rebuilding a valid group"),
        )
    }

    pub fn from_permutations(
        name: &str,
        degree: usize,
        gens: &[Perm],
        max_order: usize,
        conventions: Conventions,
    ) -> Result<FiniteGroup, GroupError> {
        for g in gens {
            if g.len() != degree {
                return Err(GroupError::Parse("generator degree mismatch".into()));
            }
        }
        // closure
        let id = perm::identity(degree);
        let mut elems: Vec<Perm> = vec![id.clone()];
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        seen.insert(id, ());
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let p = perm::compose(&elems[i], g);
                if !seen.contains_key(&p) {
                    seen.insert(p.clone(), ());
                    elems.push(p);
                    if elems.len() > max_order {
                        return Err(GroupError::OrderBound {
                            order: elems.len(),
                            bound: max_order,
                        });
                    }
                }
            }
            i += 1;
        }
        elems.sort();
        let n = elems.len();
        let index: HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = index[&perm::compose(&elems[a], &elems[b])] as u32;
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == 0 {
                    inv[a] = b as u32;
                }
            }
        }
        let mut elem_order = vec![1u32; n];
        for a in 0..n {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = mul[x * n + a] as usize;
                k += 1;
            }
            elem_order[a] = k;
        }
        let exponent = elem_order.iter().fold(1u32, |acc, &o| lcm_u32(acc, o));
        let generators: Vec<usize> = gens.iter().map(|g| index[g]).filter(|&g| g != 0).collect();
        let mut g = FiniteGroup {
            name: name.to_string(),
            degree,
            perms: elems,
            mul,
            inv,
            elem_order,
            exponent,
            generators,
            conventions,
            subs: Vec::new(),
            sub_index: HashMap::new(),
            conj_sub: Vec::new(),
            classes: Vec::new(),
            transporter: Vec::new(),
            cosets: Vec::new(),
            product_cache: Mutex::new(HashMap::new()),
        };
        g.build_lattice();
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.inv.len()
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn conventions(&self) -> Conventions {
        self.conventions
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g a g^-1`
    #[inline]
    pub fn conj_elem(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn elem_order(&self, a: usize) -> u32 {
        self.elem_order[a]
    }

    pub fn perm(&self, a: usize) -> &Perm {
        &self.perms[a]
    }

    pub fn elem_label(&self, a: usize) -> String {
        perm::to_cycles(&self.perms[a])
    }

    /// Element with the given permutation, if it lies in the group.
    pub fn find_perm(&self, p: &Perm) -> Option<usize> {
        self.perms.binary_search(p).ok()
    }

    /// The element given in cycle notation, e.g. `"(1,2,3)"`.
    pub fn element_from_cycles(&self, s: &str) -> Result<usize, GroupError> {
        let cycles = perm::parse_cycles(s)?;
        if cycles.iter().flatten().any(|&x| x as usize >= self.degree()) {
            return Err(GroupError::Parse(format!("{s} moves points beyond {}", self.degree())));
        }
        let p = perm::from_cycles(self.degree(), &cycles)
            .map_err(|_| GroupError::Parse(format!("bad permutation {s:?}")))?;
        self.find_perm(&p).ok_or_else(|| GroupError::Parse(format!("{s} is not in {}", self.name())))
    }

    pub fn power(&self, a: usize, k: i64) -> usize {
        let o = self.elem_order[a] as i64;
        let k = k.rem_euclid(o);
        let mut x = 0;
        for _ in 0..k {
            x = self.mul(x, a);
        }
        x
    }

    // ---- subgroups ----

    fn closure(&self, gens: &[usize]) -> FixedBitSet {
        let n = self.order();
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert(0);
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !bits.contains(y) {
                    bits.insert(y);
                    queue.push(y);
                }
            }
            i += 1;
        }
        bits
    }

    fn build_lattice(&mut self) {
        let n = self.order();
        // cyclic extension
        let mut found: HashMap<FixedBitSet, Vec<usize>> = HashMap::new();
        let mut queue: Vec<FixedBitSet> = Vec::new();
        let triv = self.closure(&[]);
        found.insert(triv.clone(), vec![]);
        queue.push(triv);
        let mut qi = 0;
        while qi < queue.len() {
            let h = queue[qi].clone();
            let hg = found[&h].clone();
            for g in 0..n {
                if h.contains(g) {
                    continue;
                }
                let mut gens = hg.clone();
                gens.push(g);
                let k = self.closure(&gens);
                if !found.contains_key(&k) {
                    found.insert(k.clone(), gens);
                    queue.push(k);
                }
            }
            qi += 1;
        }
        let mut list: Vec<(Vec<usize>, FixedBitSet, Vec<usize>)> = found
            .into_iter()
            .map(|(bits, gens)| (bits.ones().collect::<Vec<_>>(), bits, gens))
            .collect();
        list.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
        let nsub = list.len();
        self.sub_index = list.iter().enumerate().map(|(i, (_, b, _))| (b.clone(), i)).collect();
        self.subs = list
            .into_iter()
            .map(|(elements, bits, generators)| SubgroupData {
                elements,
                bits,
                generators,
                class: 0,
                is_cyclic: false,
                is_elementary: false,
                is_normal: false,
            })
            .collect();
        // conjugation table
        let mut conj_sub = vec![0u32; n * nsub];
        for g in 0..n {
            for h in 0..nsub {
                let mut bits = FixedBitSet::with_capacity(n);
                for &x in &self.subs[h].elements {
                    bits.insert(self.conj_elem(g, x));
                }
                conj_sub[g * nsub + h] = self.sub_index[&bits] as u32;
            }
        }
        self.conj_sub = conj_sub;
        // classes
        let mut class_of = vec![usize::MAX; nsub];
        let mut classes = Vec::new();
        for h in 0..nsub {
            if class_of[h] != usize::MAX {
                continue;
            }
            let mut members: Vec<SubId> = (0..n).map(|g| self.conj_sub[g * nsub + h] as usize).collect();
            members.sort();
            members.dedup();
            let ci = classes.len();
            for &m in &members {
                class_of[m] = ci;
            }
            let pick = self.conventions.pick(Choice::ClassRep, h as u64, members.len());
            let rep = members[pick];
            classes.push(SubgroupClass {
                members,
                rep,
                normalizer: 0,
            });
        }
        for c in classes.iter_mut() {
            let norm: Vec<usize> = (0..n).filter(|&g| self.conj_sub[g * nsub + c.rep] as usize == c.rep).collect();
            c.normalizer = self.id_of_elements(&norm).expect("normalizer is a subgroup");
        }
        for h in 0..nsub {
            let s = &mut self.subs[h];
            s.class = class_of[h];
        }
        for h in 0..nsub {
            let cyc = self.subs[h].elements.iter().any(|&x| self.elem_order[x] as usize == self.subs[h].elements.len());
            let elem = self.elementary_test(&self.subs[h].elements.clone());
            let normal = classes[class_of[h]].members.len() == 1;
            let s = &mut self.subs[h];
            s.is_cyclic = cyc;
            s.is_elementary = elem;
            s.is_normal = normal;
        }
        // transporters
        let mut transporter = vec![0usize; nsub];
        for h in 0..nsub {
            let rep = classes[class_of[h]].rep;
            if rep == h {
                transporter[h] = 0;
                continue;
            }
            let cands: Vec<usize> = (0..n).filter(|&g| self.conj_sub[g * nsub + rep] as usize == h).collect();
            transporter[h] = cands[self.conventions.pick(Choice::Transporter, h as u64, cands.len())];
        }
        self.classes = classes;
        self.transporter = transporter;
        self.cosets = (0..nsub).map(|_| OnceLock::new()).collect();
    }

    /// Nilpotent with at most one non-cyclic Sylow subgroup, i.e. `P x C`.
    fn elementary_test(&self, elems: &[usize]) -> bool {
        let ord = elems.len();
        let mut noncyclic = 0;
        for p in prime_factors(ord) {
            let mut pp = 1;
            while ord % (pp * p) == 0 {
                pp *= p;
            }
            let pelems: Vec<usize> = elems.iter().copied().filter(|&x| is_power_of(self.elem_order[x] as usize, p)).collect();
            if pelems.len() != pp {
                return false;
            }
            if !pelems.iter().any(|&x| self.elem_order[x] as usize == pp) {
                noncyclic += 1;
            }
        }
        noncyclic <= 1
    }

    pub fn num_subgroups(&self) -> usize {
        self.subs.len()
    }

    pub fn subgroup(&self, h: SubId) -> &SubgroupData {
        &self.subs[h]
    }

    pub fn elements(&self, h: SubId) -> &[usize] {
        &self.subs[h].elements
    }

    pub fn sub_order(&self, h: SubId) -> usize {
        self.subs[h].elements.len()
    }

    #[inline]
    pub fn contains(&self, h: SubId, g: usize) -> bool {
        self.subs[h].bits.contains(g)
    }

    /// `a <= b`
    pub fn is_subgroup(&self, a: SubId, b: SubId) -> bool {
        self.subs[a].bits.is_subset(&self.subs[b].bits)
    }

    pub fn trivial(&self) -> SubId {
        0
    }

    pub fn whole(&self) -> SubId {
        self.subs.len() - 1
    }

    /// `^g H = g H g^-1`
    #[inline]
    pub fn conj(&self, g: usize, h: SubId) -> SubId {
        self.conj_sub[g * self.subs.len() + h] as usize
    }

    pub fn intersect(&self, a: SubId, b: SubId) -> SubId {
        let mut bits = self.subs[a].bits.clone();
        bits.intersect_with(&self.subs[b].bits);
        self.sub_index[&bits]
    }

    pub fn id_of_elements(&self, elems: &[usize]) -> Option<SubId> {
        let mut bits = FixedBitSet::with_capacity(self.order());
        for &x in elems {
            bits.insert(x);
        }
        self.sub_index.get(&bits).copied()
    }

    pub fn generate(&self, gens: &[usize]) -> SubId {
        self.sub_index[&self.closure(gens)]
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class_of(&self, h: SubId) -> usize {
        self.subs[h].class
    }

    pub fn class_rep(&self, h: SubId) -> SubId {
        self.classes[self.subs[h].class].rep
    }

    pub fn is_class_rep(&self, h: SubId) -> bool {
        self.class_rep(h) == h
    }

    pub fn class_reps(&self) -> Vec<SubId> {
        self.classes.iter().map(|c| c.rep).collect()
    }

    /// Element `t` with `^t rep(H) = H`; the identity when `H` is a
    /// representative.
    pub fn transporter(&self, h: SubId) -> usize {
        self.transporter[h]
    }

    pub fn normalizer(&self, h: SubId) -> SubId {
        let nsub = self.subs.len();
        let n: Vec<usize> = (0..self.order()).filter(|&g| self.conj_sub[g * nsub + h] as usize == h).collect();
        self.id_of_elements(&n).expect("normalizer")
    }

    /// Subgroups `L < H` maximal in `H`.
    pub fn maximal_subgroups(&self, h: SubId) -> Vec<SubId> {
        let below: Vec<SubId> = (0..self.subs.len()).filter(|&l| l != h && self.is_subgroup(l, h)).collect();
        below
            .iter()
            .copied()
            .filter(|&l| !below.iter().any(|&m| m != l && self.is_subgroup(l, m)))
            .collect()
    }

    pub fn cyclic_subgroup_classes(&self) -> Vec<SubId> {
        self.class_reps().into_iter().filter(|&h| self.subs[h].is_cyclic).collect()
    }

    pub fn elementary_subgroup_classes(&self) -> Vec<SubId> {
        self.class_reps().into_iter().filter(|&h| self.subs[h].is_elementary).collect()
    }

    /// Short description such as `<(1,2)>` (order 2).
    pub fn describe_subgroup(&self, h: SubId) -> String {
        if h == self.trivial() {
            return "1".to_string();
        }
        if h == self.whole() {
            return "G".to_string();
        }
        let gens: Vec<String> = self.minimal_generators(h).iter().map(|&g| self.elem_label(g)).collect();
        format!("<{}>", gens.join(", "))
    }

    /// Greedy generating set: least elements that enlarge the span.
    pub fn minimal_generators(&self, h: SubId) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.closure(&[]);
        for &x in self.elements(h).iter().rev() {
            if span.contains(x) {
                continue;
            }
            gens.push(x);
            span = self.closure(&gens);
            if span.count_ones(..) == self.sub_order(h) {
                break;
            }
        }
        gens
    }

    // ---- cosets ----

    pub fn coset_space(&self, s: SubId) -> Arc<CosetSpace> {
        self.cosets[s]
            .get_or_init(|| {
                let n = self.order();
                let mut coset_of = vec![u32::MAX; n];
                let mut cosets: Vec<Vec<usize>> = Vec::new();
                for g in 0..n {
                    if coset_of[g] != u32::MAX {
                        continue;
                    }
                    let mut c: Vec<usize> = self.elements(s).iter().map(|&x| self.mul(g, x)).collect();
                    c.sort();
                    for &x in &c {
                        coset_of[x] = cosets.len() as u32;
                    }
                    cosets.push(c);
                }
                // first coset is S itself; the others may be reordered
                let mut order: Vec<usize> = (1..cosets.len()).collect();
                self.conventions.shuffle(Choice::Transversal, s as u64, &mut order);
                order.insert(0, 0);
                let mut reps = Vec::with_capacity(cosets.len());
                let mut new_index = vec![0u32; cosets.len()];
                for (ni, &ci) in order.iter().enumerate() {
                    new_index[ci] = ni as u32;
                    let c = &cosets[ci];
                    let pick = if ci == 0 {
                        0
                    } else {
                        self.conventions.pick(Choice::Transversal, ((s as u64) << 20) ^ c[0] as u64, c.len())
                    };
                    reps.push(c[pick]);
                }
                for x in coset_of.iter_mut() {
                    *x = new_index[*x as usize];
                }
                Arc::new(CosetSpace {
                    subgroup: s,
                    reps,
                    coset_of,
                })
            })
            .clone()
    }

    pub fn index(&self, s: SubId) -> usize {
        self.order() / self.sub_order(s)
    }

    /// Representatives of `H \ G / L`, one per double coset, ordered by the
    /// least element of each double coset.
    pub fn double_cosets(&self, h: SubId, l: SubId) -> Vec<usize> {
        self.double_cosets_in(self.whole(), h, l)
    }

    /// Representatives of `H \ K / L` for `H, L <= K`.
    pub fn double_cosets_in(&self, k: SubId, h: SubId, l: SubId) -> Vec<usize> {
        let n = self.order();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut reps = Vec::new();
        for &g in self.elements(k) {
            if seen.contains(g) {
                continue;
            }
            let mut dc = Vec::new();
            for &a in self.elements(h) {
                let ag = self.mul(a, g);
                for &b in self.elements(l) {
                    let x = self.mul(ag, b);
                    if !seen.contains(x) {
                        seen.insert(x);
                        dc.push(x);
                    }
                }
            }
            dc.sort();
            let pick = self.conventions.pick(Choice::DoubleCoset, ((h * 4096 + l) as u64) << 16 ^ dc[0] as u64, dc.len());
            reps.push(dc[pick]);
        }
        reps
    }

    /// Size of the double coset `H g L`.
    pub fn double_coset_size(&self, h: SubId, g: usize, l: SubId) -> usize {
        let mut bits = FixedBitSet::with_capacity(self.order());
        for &a in self.elements(h) {
            let ag = self.mul(a, g);
            for &b in self.elements(l) {
                bits.insert(self.mul(ag, b));
            }
        }
        bits.count_ones(..)
    }

    /// The subgroup as an abstract group in its own right, with the
    /// embedding of its elements.
    pub fn subgroup_as_group(&self, h: SubId) -> (FiniteGroup, Vec<usize>) {
        let gens: Vec<Perm> = self.minimal_generators(h).iter().map(|&g| self.perms[g].clone()).collect();
        let name = format!("{} in {}", self.describe_subgroup(h), self.name);
        let sub = FiniteGroup::from_permutations(&name, self.degree, &gens, usize::MAX, self.conventions).expect("subgroup");
        let emb = (0..sub.order()).map(|i| self.find_perm(&sub.perms[i]).expect("element of subgroup")).collect();
        (sub, emb)
    }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_power_of(mut x: usize, p: usize) -> bool {
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_exponents() {
        for (spec, order, exp) in [
            ("Z/2", 2, 2),
            ("Z/6", 6, 6),
            ("S3", 6, 6),
            ("D4", 8, 4),
            ("Q8", 8, 4),
            ("A4", 12, 6),
            ("Z/2xZ/2", 4, 2),
            ("1", 1, 1),
        ] {
            let g = FiniteGroup::from_spec(spec).unwrap();
            assert_eq!(g.order(), order, "{spec}");
            assert_eq!(g.exponent(), exp, "{spec}");
        }
    }

    #[test]
    fn subgroup_class_counts() {
        for (spec, n) in [("Z/2", 2), ("Z/4", 3), ("S3", 4), ("D4", 8), ("Q8", 6), ("A4", 5), ("Z/2xZ/2", 5), ("S4", 11)] {
            let g = FiniteGroup::from_spec(spec).unwrap();
            assert_eq!(g.classes().len(), n, "{spec}");
        }
    }

    #[test]
    fn order_bound() {
        let e = FiniteGroup::from_spec_with("S4", 10, Conventions::CANONICAL).unwrap_err();
        assert!(matches!(e, GroupError::OrderBound { .. }));
    }

    #[test]
    fn elementary_flags() {
        let s3 = FiniteGroup::from_spec("S3").unwrap();
        let el: Vec<usize> = s3.elementary_subgroup_classes().iter().map(|&h| s3.sub_order(h)).collect();
        assert_eq!(el, vec![1, 2, 3]);
        let q8 = FiniteGroup::from_spec("Q8").unwrap();
        assert!(q8.subgroup(q8.whole()).is_elementary);
        let a4 = FiniteGroup::from_spec("A4").unwrap();
        assert!(!a4.subgroup(a4.whole()).is_elementary);
        let z6 = FiniteGroup::from_spec("Z/6").unwrap();
        assert!(z6.subgroup(z6.whole()).is_elementary);
    }
}
